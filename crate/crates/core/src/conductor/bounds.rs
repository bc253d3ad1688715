use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Radical;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, poly::prime_divisors, Rational};

/// Inputs to the root-conductor bounds for a character of `G` over a normal
/// subgroup `H` of prime index `q` with fixed field `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInputs {
    /// `|disc(k/Q)|`.
    pub disc: BigUint,
    /// `[k : Q]`, prime.
    pub q: u64,
    /// `theta(1)`.
    pub theta_degree: u64,
    /// Norm down to `Q` of the conductor of `theta`.
    pub norm_f_theta: BigUint,
    /// Per-degree cap on that norm.
    pub t: Rational,
}

impl BoundInputs {
    pub fn new(disc: BigUint, q: u64, theta_degree: u64, norm_f_theta: BigUint, t: Rational) -> Result<BoundInputs> {
        if disc.is_zero() {
            return Err(Error::InvalidInput("disc must be positive".into()));
        }
        if prime_divisors(q) != [q] {
            return Err(Error::InvalidInput(format!("q = {q} is not prime")));
        }
        if theta_degree == 0 {
            return Err(Error::InvalidInput("theta degree must be positive".into()));
        }
        if norm_f_theta.is_zero() {
            return Err(Error::InvalidInput("norm of the conductor must be positive".into()));
        }
        if !t.is_positive() {
            return Err(Error::InvalidInput("T must be positive".into()));
        }
        Ok(BoundInputs { disc, q, theta_degree, norm_f_theta, t })
    }

    fn disc(&self) -> Radical {
        Radical::from_integer(&self.disc)
    }

    fn norm(&self) -> Radical {
        Radical::from_integer(&self.norm_f_theta)
    }
}

fn recip(n: u64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n))
}

/// Bounds for a character restricting irreducibly to `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedBound {
    /// `disc * N(f_theta)^(1/theta(1))`: what the argument establishes.
    pub certified: Radical,
    /// `disc^(1/q) * N(f_theta)^(1/theta(1))`: the sharper published form,
    /// reported but not certified.
    pub stated: Radical,
}

pub fn bound_restricted_case(b: &BoundInputs) -> RestrictedBound {
    let tail = b.norm().pow(&recip(b.theta_degree));
    RestrictedBound { certified: b.disc().mul(&tail), stated: b.disc().pow(&recip(b.q)).mul(&tail) }
}

/// `disc^(1/q) * N(f_theta)^(1/(q theta(1)))`, the exact root conductor of
/// `Ind theta`.
pub fn bound_induced_case(b: &BoundInputs) -> Radical {
    b.disc().pow(&recip(b.q)).mul(&b.norm().pow(&recip(b.q * b.theta_degree)))
}

/// `disc^theta(1) * N(f_theta)`, the conductor norm of `Ind theta`.
pub fn induced_conductor_norm(theta_degree: u64, norm_f_theta: &BigUint, disc: &BigUint) -> BigUint {
    disc.pow(theta_degree as u32) * norm_f_theta
}

/// `C = disc * T`.
pub fn global_constant(disc: &BigUint, t: &Rational) -> Rational {
    Rational::from_integer(BigInt::from(disc.clone())) * t
}

/// A bundled set of bound inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDataset {
    pub name: String,
    pub disc: String,
    pub q: u64,
    #[serde(default = "one_u64")]
    pub theta_degree: u64,
    /// Defaults to the cap `T^theta(1)`.
    #[serde(default)]
    pub norm_f_theta: Option<String>,
    pub t: String,
    #[serde(default)]
    pub ramified_primes: Vec<u64>,
    #[serde(default)]
    pub note: Option<String>,
}

fn one_u64() -> u64 {
    1
}

impl BoundDataset {
    pub fn inputs(&self) -> Result<BoundInputs> {
        let disc: BigUint =
            self.disc.parse().map_err(|_| Error::Parse(format!("disc {:?} is not a nonnegative integer", self.disc)))?;
        let t = parse_rational(&self.t)?;
        let norm = match &self.norm_f_theta {
            Some(s) => s.parse().map_err(|_| Error::Parse(format!("norm_f_theta {s:?} is not an integer")))?,
            None => {
                let cap = num_traits::pow(t.clone(), self.theta_degree as usize);
                if !cap.is_integer() || !cap.is_positive() {
                    return Err(Error::InvalidInput("T^theta(1) is not a positive integer".into()));
                }
                cap.to_integer().to_biguint().expect("positive")
            }
        };
        BoundInputs::new(disc, self.q, self.theta_degree, norm, t)
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{self, lcm, prime_divisors, reduce};
use super::Rational;

/// An exact element of a cyclotomic field.
///
/// The element is stored over its minimal conductor `e`, in the power basis
/// `1, z, ..., z^(phi(e)-1)` of `Q(z)` with `z = exp(2 pi i / e)`, reduced
/// modulo the `e`-th cyclotomic polynomial. Because the representation is
/// unique, equality is plain coefficient comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::normalized(n, poly::monomial(n, k))
    }

    /// `sum_k c_k zeta_n^k` for arbitrary integer exponents.
    pub fn from_powers<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut dense = vec![Rational::zero(); n as usize];
        for (k, c) in terms {
            dense[k.rem_euclid(n as i64) as usize] += c;
        }
        Self::normalized(n, reduce(n, dense))
    }

    /// Builds from power-basis coordinates in `Q(zeta_n)` (`phi(n)` entries),
    /// descending to the minimal conductor.
    pub fn from_basis(n: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), poly::totient(n), "wrong basis length for conductor {n}");
        Self::normalized(n, coeffs)
    }

    fn normalized(mut n: u32, mut coeffs: Vec<Rational>) -> Self {
        'outer: loop {
            if n == 1 || coeffs[1..].iter().all(Zero::is_zero) {
                let c0 = coeffs.swap_remove(0);
                return Cyclotomic { conductor: 1, coeffs: vec![c0] };
            }
            for p in prime_divisors(n as u64) {
                let m = n / p as u32;
                if let Some(smaller) = poly::descent(n, m).apply(&coeffs) {
                    n = m;
                    coeffs = smaller;
                    continue 'outer;
                }
            }
            return Cyclotomic { conductor: n, coeffs };
        }
    }

    /// The minimal `e` such that this element lies in `Q(zeta_e)`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Coordinates in the power basis of `Q(zeta_n)`; `n` must be a multiple
    /// of the conductor.
    pub fn lift(&self, n: u32) -> Vec<Rational> {
        assert!(n % self.conductor == 0, "cannot lift conductor {} to {n}", self.conductor);
        if n == self.conductor {
            return self.coeffs.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        reduce(n, dense)
    }

    /// The Galois automorphism `zeta -> zeta^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        debug_assert_eq!(poly::gcd(k.rem_euclid(n as i64) as u64, n as u64), 1);
        let mut dense = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(i as i64 * k).rem_euclid(n as i64) as usize] += c;
        }
        Cyclotomic { conductor: n, coeffs: reduce(n, dense) }
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(&[Rational], &[Rational], u32) -> Vec<Rational>) -> Self {
        let n = lcm(self.conductor, other.conductor);
        let a = if n == self.conductor { None } else { Some(self.lift(n)) };
        let b = if n == other.conductor { None } else { Some(other.lift(n)) };
        let out = f(
            a.as_deref().unwrap_or(&self.coeffs),
            b.as_deref().unwrap_or(&other.coeffs),
            n,
        );
        Self::normalized(n, out)
    }

    /// Total order used for canonical sorting: coordinates over the common
    /// conductor `n` compared lexicographically. Both conductors must divide `n`.
    pub fn cmp_lifted(&self, other: &Self, n: u32) -> Ordering {
        self.lift(n).cmp(&other.lift(n))
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        self.combine(rhs, |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, |a, b, _| a.iter().zip(b).map(|(x, y)| x - y).collect())
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        self.combine(rhs, |a, b, n| {
            let mut prod = vec![Rational::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        prod[i + j] += x * y;
                    }
                }
            }
            reduce(n, prod)
        })
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Cyclotomic {
    fn add_assign(&mut self, rhs: Cyclotomic) {
        *self = &*self + &rhs;
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

/// Renders as a polynomial in `z<e>`, e.g. `-1 - z3` or `1/2*z8 + z8^3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let monomial = match k {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, k),
            };
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&monomial)?;
            } else {
                write!(f, "{abs}*{monomial}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

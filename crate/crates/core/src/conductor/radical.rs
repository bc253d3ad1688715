use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Rational;

const TRIAL_LIMIT: u64 = 1_000_000;

/// Splits `n` into prime powers by trial division; a cofactor without small
/// prime factors is kept as a single base.
pub fn factor(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    let mut n = n.clone();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut k = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            k += 1;
        }
        if k > 0 {
            out.insert(bd, k);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigUint::one() {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// A positive real of the form `prod b_i^(e_i)` with integer bases `b_i > 1`
/// and nonzero rational exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Radical {
    factors: BTreeMap<BigUint, Rational>,
}

impl Radical {
    pub fn one() -> Radical {
        Radical::default()
    }

    pub fn from_integer(n: &BigUint) -> Radical {
        assert!(!n.is_zero(), "radicals are positive");
        let factors = factor(n)
            .into_iter()
            .map(|(p, k)| (p, Rational::from_integer(BigInt::from(k))))
            .collect();
        Radical { factors }
    }

    pub fn from_rational(q: &Rational) -> Radical {
        assert!(q.is_positive(), "radicals are positive");
        let num = q.numer().magnitude().clone();
        let den = q.denom().magnitude().clone();
        Radical::from_integer(&num).mul(&Radical::from_integer(&den).pow(&Rational::from_integer((-1).into())))
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, Rational> {
        &self.factors
    }

    pub fn mul(&self, other: &Radical) -> Radical {
        let mut factors = self.factors.clone();
        for (b, e) in &other.factors {
            let entry = factors.entry(b.clone()).or_insert_with(Rational::zero);
            *entry += e;
            if entry.is_zero() {
                factors.remove(b);
            }
        }
        Radical { factors }
    }

    pub fn pow(&self, e: &Rational) -> Radical {
        if e.is_zero() {
            return Radical::one();
        }
        Radical { factors: self.factors.iter().map(|(b, x)| (b.clone(), x * e)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The exact value when it is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        let mut v = Rational::one();
        for (b, e) in &self.factors {
            if !e.is_integer() {
                return None;
            }
            let k = e.to_integer().to_i64()?;
            let p = Rational::from_integer(BigInt::from(b.pow(k.unsigned_abs() as u32)));
            v = if k >= 0 { v * p } else { v / p };
        }
        Some(v)
    }

    /// `(base, n, d)` with the value equal to `base^(n/d)`, `gcd(n, d) = 1`,
    /// and `base` a positive rational that is not a perfect power of the
    /// combined exponents.
    pub fn as_single_power(&self) -> (Rational, BigInt, BigInt) {
        if self.factors.is_empty() {
            return (Rational::one(), BigInt::one(), BigInt::one());
        }
        let den = self.factors.values().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let scaled: Vec<BigInt> = self.factors.values().map(|e| (e * Rational::from_integer(den.clone())).to_integer()).collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut base = Rational::one();
        for ((b, _), c) in self.factors.iter().zip(&scaled) {
            let k = (c / &g).to_i64().expect("small exponent");
            let p = Rational::from_integer(BigInt::from(b.pow(k.unsigned_abs() as u32)));
            base = if k >= 0 { base * p } else { base / p };
        }
        let r = Rational::new(g, den);
        (base, r.numer().clone(), r.denom().clone())
    }

    /// Decimal approximation to `digits` significant digits, rounded
    /// half-to-even, computed exactly from integer roots.
    pub fn decimal(&self, digits: usize) -> String {
        assert!(digits >= 1);
        let (base, n, d) = self.as_single_power();
        let d = d.to_u32().expect("root degree fits in u32");
        // value = (u / v)^(1/d)
        let (u, v) = {
            let k = n.magnitude().to_u32().expect("exponent fits in u32");
            let (a, b) = (base.numer().magnitude().pow(k), base.denom().magnitude().pow(k));
            if n.is_negative() {
                (b, a)
            } else {
                (a, b)
            }
        };
        let ten = BigUint::from(10u32);
        // floor(value * 10^k)
        let scaled_floor = |k: i64| -> BigUint {
            let shift = ten.pow((k.unsigned_abs() as u32) * d);
            let x = if k >= 0 { &u * shift / &v } else { &u / (&v * shift) };
            x.nth_root(d)
        };
        let estimate = (u.bits() as f64 - v.bits() as f64) * std::f64::consts::LOG10_2 / f64::from(d);
        let mut k = digits as i64 - 1 - estimate.floor() as i64;
        let lower = ten.pow(digits as u32 - 1);
        let upper = ten.pow(digits as u32);
        let mut m = scaled_floor(k);
        loop {
            if m < lower {
                k += 1;
            } else if m >= upper {
                k -= 1;
            } else {
                break;
            }
            m = scaled_floor(k);
        }
        // compare value * 10^k with m + 1/2, i.e. u (2 * 10^k)^d against v (2m + 1)^d
        let two_m1 = &m * 2u32 + 1u32;
        let (lhs, rhs) = if k >= 0 {
            (&u * (ten.pow(k as u32) * 2u32).pow(d), &v * two_m1.pow(d))
        } else {
            (&u * BigUint::from(2u32).pow(d), &v * (two_m1 * ten.pow((-k) as u32)).pow(d))
        };
        let round_up = match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => m.is_odd(),
        };
        if round_up {
            m += 1u32;
            if m == upper {
                m = lower.clone();
                k -= 1;
            }
        }
        place_point(&m.to_string(), k)
    }
}

fn place_point(digits: &str, k: i64) -> String {
    if k <= 0 {
        let mut s = digits.to_string();
        s.extend(std::iter::repeat_n('0', (-k) as usize));
        s
    } else {
        let k = k as usize;
        if digits.len() > k {
            let (a, b) = digits.split_at(digits.len() - k);
            format!("{a}.{b}")
        } else {
            format!("0.{}{digits}", "0".repeat(k - digits.len()))
        }
    }
}

impl fmt::Display for Radical {
    /// Integers print plainly; everything else as `base^(n/d)` when that is
    /// compact, otherwise as a product of prime powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let (base, n, d) = self.as_single_power();
        if base.is_integer() && base.numer().bits() <= 64 {
            return write!(f, "{base}^({n}/{d})");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(b, e)| if e.is_one() { b.to_string() } else if e.is_integer() { format!("{b}^{e}") } else { format!("{b}^({e})") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radical({self})")
    }
}

/// Prime factorization of a positive integer in the form `2^15 * 11^4 * 23`.
pub fn factorization_string(n: &BigUint) -> String {
    if n.is_one() {
        return "1".into();
    }
    factor(n)
        .into_iter()
        .map(|(p, k)| if k == 1 { p.to_string() } else { format!("{p}^{k}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: u64) -> Radical {
        Radical::from_integer(&BigUint::from(n))
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn factoring() {
        let f = factor(&BigUint::from(11_034_394_624u64));
        let f: Vec<(u64, u32)> = f.into_iter().map(|(p, k)| (p.to_u64().unwrap(), k)).collect();
        assert_eq!(f, vec![(2, 15), (11, 4), (23, 1)]);
        assert_eq!(factorization_string(&BigUint::from(11_034_394_624u64)), "2^15 * 11^4 * 23");
        // large prime cofactor survives
        let big = BigUint::from(1_000_000_007u64) * BigUint::from(1_000_000_009u64);
        assert_eq!(factor(&big).len(), 1);
    }

    #[test]
    fn powers_and_display() {
        let r = int(14641).pow(&q(1, 5));
        assert_eq!(r.to_string(), "11^(4/5)");
        assert_eq!(r.as_single_power(), (q(11, 1), 4.into(), 5.into()));
        let r = int(2).mul(&int(2).pow(&q(1, 2)));
        assert_eq!(r.to_string(), "2^(3/2)");
        assert_eq!(int(23).to_string(), "23");
        assert_eq!(int(23).pow(&q(1, 2)).to_string(), "23^(1/2)");
        assert_eq!(Radical::one().to_string(), "1");
        assert_eq!(int(4).pow(&q(1, 2)), int(2));
        assert_eq!(Radical::from_rational(&q(3, 4)).to_string(), "3/4");
        let stated = int(14641).pow(&q(1, 5)).mul(&int(753_664));
        assert_eq!(stated.to_string(), "2^15 * 11^(4/5) * 23");
    }

    #[test]
    fn decimals() {
        // 11^(4/5) = 6.8094831275223...
        assert_eq!(int(14641).pow(&q(1, 5)).decimal(12), "6.80948312752");
        assert_eq!(int(2).pow(&q(1, 2)).decimal(12), "1.41421356237");
        assert_eq!(int(4).decimal(12), "4.00000000000");
        assert_eq!(int(11_034_394_624).decimal(12), "11034394624.0");
        assert_eq!(int(11_034_394_624).decimal(3), "11000000000");
        assert_eq!(Radical::from_rational(&q(1, 8)).decimal(2), "0.12");
        assert_eq!(Radical::from_rational(&q(3, 8)).decimal(2), "0.38");
        assert_eq!(Radical::from_rational(&q(1, 3)).decimal(4), "0.3333");
        assert_eq!(Radical::from_rational(&q(9999, 1)).decimal(2), "10000");
    }

    #[test]
    fn decimals_match_floats() {
        for (n, a, b) in [(2u64, 1i64, 3i64), (23, 1, 2), (753_664, 1, 7), (5, -1, 2), (17, 5, 3)] {
            let r = int(n).pow(&q(a, b));
            let x: f64 = r.decimal(12).parse().unwrap();
            let y = (n as f64).powf(a as f64 / b as f64);
            assert!((x - y).abs() / y < 1e-11, "{n}^({a}/{b}): {x} vs {y}");
        }
    }
}

//! Cyclotomic polynomials and the linear maps between nested cyclotomic fields.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::Rational;

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut phi = n as u64;
    for p in prime_divisors(n as u64) {
        phi = phi / p * (p - 1);
    }
    phi as usize
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d(x)` by exact division.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    let out = Arc::new(num);
    poly_cache().write().unwrap().insert(n, out.clone());
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &di) in den.iter().enumerate() {
                rem[k + i] -= c * di;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Reduces a polynomial in `zeta_n` (coefficient `i` belongs to `zeta_n^i`, any
/// length) to the power basis of length `phi(n)`.
pub fn reduce(n: u32, dense: Vec<Rational>) -> Vec<Rational> {
    let n_us = n as usize;
    let mut folded = if dense.len() > n_us {
        let mut f = vec![Rational::zero(); n_us];
        for (i, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                f[i % n_us] += c;
            }
        }
        f
    } else {
        dense
    };
    let poly = cyclotomic_poly(n);
    let deg = poly.len() - 1;
    for k in (deg..folded.len()).rev() {
        if folded[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut folded[k]);
        for (i, &pi) in poly[..deg].iter().enumerate() {
            if pi != 0 {
                folded[k - deg + i] -= &c * Rational::from_integer(pi.into());
            }
        }
    }
    folded.resize(deg, Rational::zero());
    folded
}

/// Power-basis coordinates of `zeta_n^k`.
pub fn monomial(n: u32, k: i64) -> Vec<Rational> {
    let e = k.rem_euclid(n as i64) as usize;
    let mut dense = vec![Rational::zero(); e + 1];
    dense[e] = Rational::one();
    reduce(n, dense)
}

/// Linear data for testing membership of an element of `Q(zeta_n)` in the
/// subfield `Q(zeta_m)` and rewriting it in the smaller power basis.
pub struct Descent {
    pivots: Vec<usize>,
    inverse: Vec<Vec<Rational>>,
    embed: Vec<Vec<Rational>>,
}

impl Descent {
    fn build(n: u32, m: u32) -> Descent {
        let step = (n / m) as i64;
        let small = totient(m);
        // embed[j] = coordinates of zeta_m^j = zeta_n^(j * n/m)
        let embed: Vec<Vec<Rational>> = (0..small as i64).map(|j| monomial(n, j * step)).collect();
        let big = totient(n);

        // Greedily pick rows of the (big x small) embedding matrix until rank is full.
        let mut pivots = Vec::with_capacity(small);
        let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
        for row in 0..big {
            let mut v: Vec<Rational> = embed.iter().map(|col| col[row].clone()).collect();
            for (lead, basis) in &echelon {
                if !v[*lead].is_zero() {
                    let f = &v[*lead] / &basis[*lead];
                    for (x, b) in v.iter_mut().zip(basis) {
                        *x -= &f * b;
                    }
                }
            }
            if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
                echelon.push((lead, v));
                pivots.push(row);
                if pivots.len() == small {
                    break;
                }
            }
        }
        assert_eq!(pivots.len(), small, "embedding of Q(zeta_{m}) into Q(zeta_{n}) lost rank");

        let square: Vec<Vec<Rational>> = pivots
            .iter()
            .map(|&r| embed.iter().map(|col| col[r].clone()).collect())
            .collect();
        let inverse = invert(square);
        Descent { pivots, inverse, embed }
    }

    /// Coordinates in `Q(zeta_m)` if `x` lies there.
    pub fn apply(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        let picked: Vec<&Rational> = self.pivots.iter().map(|&r| &x[r]).collect();
        let d: Vec<Rational> = self
            .inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&picked)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * *b)
            })
            .collect();
        for (row, target) in x.iter().enumerate() {
            let mut acc = Rational::zero();
            for (col, dj) in self.embed.iter().zip(&d) {
                if !col[row].is_zero() && !dj.is_zero() {
                    acc += &col[row] * dj;
                }
            }
            if &acc != target {
                return None;
            }
        }
        Some(d)
    }
}

fn descent_cache() -> &'static RwLock<HashMap<(u32, u32), Arc<Descent>>> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn descent(n: u32, m: u32) -> Arc<Descent> {
    if let Some(d) = descent_cache().read().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let d = Arc::new(Descent::build(n, m));
    descent_cache().write().unwrap().insert((n, m), d.clone());
    d
}

/// Gauss-Jordan inverse of a nonsingular rational matrix.
fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (s, t) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= s;
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Phi_15 = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1
        assert_eq!(*cyclotomic_poly(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..=60 {
            assert_eq!(cyclotomic_poly(n).len() - 1, totient(n), "n = {n}");
        }
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(11), 10);
        assert_eq!(totient(24), 8);
        assert_eq!(totient(36), 12);
    }
}

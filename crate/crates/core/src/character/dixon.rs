//! Dixon–Schneider: irreducible characters from class-sum structure constants.
//!
//! The central characters `w_chi(C_j) = |C_j| chi(g_j) / chi(1)` are the common
//! eigenvectors of the class multiplication matrices. Over `F_p` with
//! `p = 1 (mod exponent)` and `p > 2 sqrt|G|` the class algebra is split
//! semisimple, so repeated eigenspace splitting isolates every central
//! character. Degrees follow from the first orthogonality relation, and each
//! value is lifted to `Q(zeta_e)` by recovering the eigenvalue multiplicities
//! of `rho(g)` from the reduced values on the powers of `g`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalar::{poly::prime_divisors, Cyclotomic, Rational};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// Smallest prime `p` with `p = 1 (mod exponent)` and `p > 2 sqrt(order)`.
pub fn choose_prime(order: u64, exponent: u64) -> u64 {
    let mut p = 1 + exponent;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

fn primitive_root(p: u64) -> u64 {
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&r| qs.iter().all(|&q| pow_mod(r, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

type Matrix = Vec<Vec<u64>>;

/// Row-reduces in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let s = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ v : a v = 0 }`.
fn nullspace(mut a: Matrix, p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Splits invariant subspaces until every one is a line; returns the
/// spanning vector of each line.
fn common_eigenvectors(mats: &[Matrix], k: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let full: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut work = vec![(full, 0usize)];
    let mut lines = Vec::new();
    while let Some((basis, start)) = work.pop() {
        if basis.len() == 1 {
            lines.push(basis.into_iter().next().unwrap());
            continue;
        }
        let d = basis.len();
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| b.iter().position(|&x| x != 0).expect("basis vectors are nonzero"))
            .collect();
        let mut split = None;
        for (j, m) in mats.iter().enumerate().skip(start) {
            // restricted action in the basis coordinates
            let mut a = vec![vec![0u64; d]; d];
            for (i, b) in basis.iter().enumerate() {
                for (r, &pc) in pivots.iter().enumerate() {
                    let w = m[pc].iter().zip(b).fold(0u64, |acc, (&x, &y)| (acc + x * y) % p);
                    a[r][i] = w;
                }
            }
            let mut spaces = Vec::new();
            let mut total = 0;
            for lambda in 0..p {
                let mut shifted = a.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + p - lambda) % p;
                }
                let ns = nullspace(shifted, p);
                if !ns.is_empty() {
                    total += ns.len();
                    spaces.push(ns);
                }
                if total == d {
                    break;
                }
            }
            if total != d {
                return Err(Error::InternalContradiction(format!(
                    "class matrix {j} is not diagonalisable mod {p}"
                )));
            }
            if spaces.len() > 1 {
                split = Some((spaces, j + 1));
                break;
            }
        }
        let Some((spaces, next)) = split else {
            return Err(Error::InternalContradiction(format!(
                "could not split a {d}-dimensional eigenspace mod {p}"
            )));
        };
        for coords in spaces {
            let mut vecs: Vec<Vec<u64>> = coords
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; k];
                    for (ci, b) in c.iter().zip(&basis) {
                        if *ci != 0 {
                            for (x, &y) in v.iter_mut().zip(b) {
                                *x = (*x + ci * y) % p;
                            }
                        }
                    }
                    v
                })
                .collect();
            rref(&mut vecs, p);
            work.push((vecs, next));
        }
    }
    Ok(lines)
}

/// Values of every irreducible character, one row per character, one entry
/// per conjugacy class (unsorted).
pub(crate) fn irreducible_values(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let part = g.classes();
    let k = part.len();
    let order = g.order() as u64;
    let exponent = g.exponent() as u64;
    let p = choose_prime(order, exponent);
    let sizes: Vec<u64> = part.sizes().into_iter().map(|s| s as u64).collect();

    // mats[j][c][l] = #{ x in C_j : x^-1 z_l in C_c }
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for l in 0..k {
        let z = part.representative(l);
        for x in g.elements() {
            let y = g.mul(g.inv(x), z);
            mats[part.class_of[x]][part.class_of[y]][l] += 1;
        }
    }
    for m in mats.iter_mut() {
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x %= p;
            }
        }
    }

    let lines = common_eigenvectors(&mats[1..], k, p)?;
    if lines.len() != k {
        return Err(Error::InternalContradiction(format!(
            "found {} central characters for {k} classes",
            lines.len()
        )));
    }

    let inverse_class: Vec<usize> = (0..k).map(|j| part.class_of[g.inv(part.representative(j))]).collect();
    let root = primitive_root(p);
    let zeta_e = pow_mod(root, (p - 1) / exponent, p);
    let max_degree = (order as f64).sqrt().floor() as u64 + 1;

    let mut rows = Vec::with_capacity(k);
    for line in lines {
        if line[0] == 0 {
            return Err(Error::InternalContradiction("central character vanishes at 1".into()));
        }
        let s = inv_mod(line[0], p);
        let omega: Vec<u64> = line.iter().map(|x| x * s % p).collect();

        let norm = (0..k).fold(0u64, |acc, j| {
            (acc + omega[j] * omega[inverse_class[j]] % p * inv_mod(sizes[j] % p, p)) % p
        });
        if norm == 0 {
            return Err(Error::InternalContradiction("degenerate central character".into()));
        }
        let target = order % p * inv_mod(norm, p) % p;
        let degree = (1..=max_degree)
            .find(|&d| d * d <= order && d * d % p == target)
            .ok_or_else(|| Error::InternalContradiction("no admissible character degree".into()))?;

        let reduced: Vec<u64> = (0..k)
            .map(|j| omega[j] * (degree % p) % p * inv_mod(sizes[j] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(k);
        for j in 0..k {
            let rep = part.representative(j);
            let o = g.element_order(rep) as u64;
            let zeta_o = pow_mod(zeta_e, exponent / o, p);
            let mut power_class = Vec::with_capacity(o as usize);
            let mut x = g.identity();
            for _ in 0..o {
                power_class.push(part.class_of[x]);
                x = g.mul(x, rep);
            }
            let inv_o = inv_mod(o % p, p);
            let mut terms = Vec::new();
            let mut total = 0u64;
            for e in 0..o {
                let step = pow_mod(zeta_o, (o - e) % o, p);
                let mut acc = 0u64;
                let mut w = 1u64;
                for &c in &power_class {
                    acc = (acc + reduced[c] * w) % p;
                    w = w * step % p;
                }
                let mult = acc * inv_o % p;
                if mult > degree {
                    return Err(Error::InternalContradiction(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                total += mult;
                if mult != 0 {
                    terms.push((e as i64, Rational::from_integer(mult.into())));
                }
            }
            if total != degree {
                return Err(Error::InternalContradiction("eigenvalue multiplicities do not sum to the degree".into()));
            }
            values.push(Cyclotomic::from_powers(o as u32, terms));
        }
        rows.push(values);
    }
    Ok(rows)
}

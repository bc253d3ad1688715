use super::{is_normal, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// `A x B` with `(a, b)` stored at index `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > cap {
        return Err(Error::TooLarge { cap });
    }
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            mul.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    let inv = (0..n).map(|x| (a.inv(x / nb) * nb + b.inv(x % nb)) as u32).collect();
    let identity = a.identity() * nb + b.identity();
    let labels = (0..n).map(|x| format!("[{}, {}]", a.label(x / nb), b.label(x % nb))).collect();
    Ok(FiniteGroup::from_parts(n, mul, inv, identity, Some(labels)))
}

/// The copy `A x {1}` inside `direct_product(a, b)`.
pub fn left_factor(product: &FiniteGroup, a: &FiniteGroup, b: &FiniteGroup) -> Subgroup {
    let nb = b.order();
    Subgroup::new(product, a.elements().map(|x| x * nb + b.identity())).expect("factor is a subgroup")
}

/// The copy `{1} x B` inside `direct_product(a, b)`.
pub fn right_factor(product: &FiniteGroup, a: &FiniteGroup, b: &FiniteGroup) -> Subgroup {
    let nb = b.order();
    Subgroup::new(product, b.elements().map(|y| a.identity() * nb + y)).expect("factor is a subgroup")
}

/// `G / N` with cosets ordered by their least element, plus the projection.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
    if !n.parent().same(g) {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut projection = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &h in n.elements() {
            projection[g.mul(x, h)] = c;
        }
    }
    let m = reps.len();
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            mul.push(projection[g.mul(a, b)] as u32);
        }
    }
    let inv = reps.iter().map(|&a| projection[g.inv(a)] as u32).collect();
    let identity = projection[g.identity()];
    let labels = reps.iter().map(|&a| format!("{}N", g.label(a))).collect();
    Ok((FiniteGroup::from_parts(m, mul, inv, identity, Some(labels)), projection))
}

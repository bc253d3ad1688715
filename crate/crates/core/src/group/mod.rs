//! Finite groups given by full multiplication tables.
//!
//! Elements are indices `0..order`. All constructions (permutation closure,
//! direct products, quotients, subgroups) produce the same table-backed type,
//! so every later computation can enumerate elements and look products up in
//! constant time.

mod classes;
pub mod io;
mod perm;
mod product;
mod subgroup;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use classes::ConjugacyPartition;
pub use perm::{build_from_permutations, Permutation};
pub use product::{direct_product, left_factor, quotient, right_factor};
pub use subgroup::{is_normal, normal_subgroups, Subgroup};

use crate::error::{Error, Result};

/// Default cap on group orders produced by closures and products.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// A finite group with identity and inverse tables.
///
/// Cheap to clone: the table lives behind an `Arc`. Two handles denote the
/// same group exactly when they share that allocation.
#[derive(Clone)]
pub struct FiniteGroup(Arc<Inner>);

struct Inner {
    name: Option<String>,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    labels: Option<Vec<String>>,
    classes: OnceLock<ConjugacyPartition>,
    orders: OnceLock<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a square multiplication table and builds the group.
    pub fn from_table(table: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::NotAGroup(format!("entry {x} in row {i} is out of range")));
                }
                mul.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;

        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {x} has no right inverse")))?;
            if at(y, x) != identity {
                return Err(Error::NotAGroup(format!("inverse of {x} is not two-sided")));
            }
            inv[x] = y as u32;
        }

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        // A group table is a Latin square; this is implied by the axioms above.
        debug_assert!(is_latin(n, &mul));

        Ok(Self::from_parts(n, mul, inv, identity, None))
    }

    /// Internal constructor for tables that are groups by construction.
    pub(crate) fn from_parts(
        order: usize,
        mul: Vec<u32>,
        inv: Vec<u32>,
        identity: usize,
        labels: Option<Vec<String>>,
    ) -> FiniteGroup {
        debug_assert_eq!(mul.len(), order * order);
        FiniteGroup(Arc::new(Inner {
            name: None,
            order,
            mul,
            inv,
            identity,
            labels,
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        }))
    }

    /// A copy of this group carrying a display name.
    pub fn named(self, name: impl Into<String>) -> FiniteGroup {
        let inner = Inner {
            name: Some(name.into()),
            order: self.0.order,
            mul: self.0.mul.clone(),
            inv: self.0.inv.clone(),
            identity: self.0.identity,
            labels: self.0.labels.clone(),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        FiniteGroup(Arc::new(inner))
    }

    pub fn with_labels(self, labels: Vec<String>) -> FiniteGroup {
        assert_eq!(labels.len(), self.order());
        let inner = Inner {
            name: self.0.name.clone(),
            order: self.0.order,
            mul: self.0.mul.clone(),
            inv: self.0.inv.clone(),
            identity: self.0.identity,
            labels: Some(labels),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        FiniteGroup(Arc::new(inner))
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.0.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    /// The full table as rows of element indices.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.elements().map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Whether both handles refer to the same group object.
    pub fn same(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders()[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.0.orders.get_or_init(|| {
            self.elements()
                .map(|g| {
                    let mut k = 1;
                    let mut x = g;
                    while x != self.identity() {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders().iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Conjugacy classes in canonical order (computed once).
    pub fn classes(&self) -> &ConjugacyPartition {
        self.0.classes.get_or_init(|| ConjugacyPartition::compute(self))
    }
}

/// Canonical conjugacy partition of `g`.
pub fn conjugacy_classes(g: &FiniteGroup) -> &ConjugacyPartition {
    g.classes()
}

fn is_latin(n: usize, mul: &[u32]) -> bool {
    (0..n).all(|i| {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for j in 0..n {
            row[mul[i * n + j] as usize] = true;
            col[mul[j * n + i] as usize] = true;
        }
        row.iter().chain(&col).all(|&b| b)
    })
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name())
            .field("order", &self.order())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> FiniteGroup {
        build_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn trivial_and_c2_tables() {
        let g = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        let c2 = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.inv(1), 1);
        assert!(c2.is_abelian());
    }

    #[test]
    fn identity_need_not_be_zero() {
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.classes().classes[0], vec![1]);
    }

    #[test]
    fn s3_table_round_trips_through_validation() {
        let g = s3();
        let rebuilt = FiniteGroup::from_table(&g.table()).unwrap();
        assert_eq!(rebuilt.order(), 6);
        assert!(!rebuilt.is_abelian());
        assert_eq!(rebuilt.identity(), 0);
    }

    #[test]
    fn rejects_non_groups() {
        // not associative: a Latin square with identity 0 that is not a group
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&bad), Err(Error::NotAGroup(_))));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 0], vec![0, 0]]),
            Err(Error::NotAGroup(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]]),
            Err(Error::NotAGroup(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]]),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn exponents_and_orders() {
        let g = s3();
        assert_eq!(g.exponent(), 6);
        let mut orders = g.element_orders().to_vec();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }
}

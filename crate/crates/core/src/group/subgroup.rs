use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// A subgroup given by its explicit element set.
///
/// The subgroup is also materialised as a group in its own right (`group()`),
/// whose element `i` is the `i`-th smallest member in the parent. Class
/// functions on the subgroup live on that group.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Arc<Vec<usize>>,
    position: Arc<Vec<u32>>,
    group: FiniteGroup,
}

impl Subgroup {
    pub fn new(parent: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Subgroup> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        let elements: Vec<usize> = set.into_iter().collect();
        if let Some(&bad) = elements.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        let mut position = vec![ABSENT; parent.order()];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i as u32;
        }
        if position[parent.identity()] == ABSENT {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &elements {
            if position[parent.inv(a)] == ABSENT {
                return Err(Error::NotASubgroup(format!("not closed under inverses at {a}")));
            }
            for &b in &elements {
                if position[parent.mul(a, b)] == ABSENT {
                    return Err(Error::NotASubgroup(format!("not closed: {a} * {b}")));
                }
            }
        }
        Ok(Self::from_checked(parent, elements, position))
    }

    fn from_checked(parent: &FiniteGroup, elements: Vec<usize>, position: Vec<u32>) -> Subgroup {
        let m = elements.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &elements {
            for &b in &elements {
                mul.push(position[parent.mul(a, b)]);
            }
        }
        let inv = elements.iter().map(|&a| position[parent.inv(a)]).collect();
        let identity = position[parent.identity()] as usize;
        let labels = elements.iter().map(|&a| parent.label(a)).collect();
        let group = FiniteGroup::from_parts(m, mul, inv, identity, Some(labels));
        Subgroup {
            parent: parent.clone(),
            elements: Arc::new(elements),
            position: Arc::new(position),
            group,
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
        if let Some(&bad) = gens.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::NotASubgroup(format!("generator {bad} out of range")));
        }
        let mut inside = vec![false; parent.order()];
        let mut members = vec![parent.identity()];
        inside[parent.identity()] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &s in gens {
                let y = parent.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        let mut position = vec![ABSENT; parent.order()];
        for (i, &x) in members.iter().enumerate() {
            position[x] = i as u32;
        }
        Ok(Self::from_checked(parent, members, position))
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        let all: Vec<usize> = parent.elements().collect();
        let position = (0..parent.order() as u32).collect();
        Self::from_checked(parent, all, position)
    }

    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        let mut position = vec![ABSENT; parent.order()];
        position[parent.identity()] = 0;
        Self::from_checked(parent, vec![parent.identity()], position)
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// The subgroup as a standalone group.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Sorted parent indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.position[g] != ABSENT
    }

    /// Index inside `group()` of the parent element `g`.
    pub fn position(&self, g: usize) -> Option<usize> {
        let p = self.position[g];
        (p != ABSENT).then_some(p as usize)
    }

    /// Parent element for an index of `group()`.
    pub fn embed(&self, i: usize) -> usize {
        self.elements[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `g S g^-1`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let elems: Vec<usize> = self.elements.iter().map(|&x| self.parent.conjugate(g, x)).collect();
        Subgroup::new(&self.parent, elems).expect("conjugate of a subgroup is a subgroup")
    }

    /// Reinterprets `self` (contained in `over`) as a subgroup of `over.group()`.
    pub fn inside(&self, over: &Subgroup) -> Result<Subgroup> {
        let idx = self
            .elements
            .iter()
            .map(|&x| over.position(x).ok_or_else(|| Error::NotASubgroup(format!("{x} not in overgroup"))))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::new(over.group(), idx)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same(&other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent)
            .field("elements", &self.elements)
            .finish()
    }
}

/// True iff `g S g^-1 = S` for every `g`.
pub fn is_normal(g: &FiniteGroup, s: &Subgroup) -> bool {
    debug_assert!(s.parent().same(g));
    g.elements().all(|x| s.elements().iter().all(|&h| s.contains(g.conjugate(x, h))))
}

/// Every normal subgroup, ordered by size then by element list.
///
/// Normal subgroups are exactly the joins of normal closures of conjugacy
/// classes, so the lattice is explored from the trivial subgroup by adjoining
/// one class at a time.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let classes = g.classes();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Vec<usize>> = vec![vec![g.identity()]];
    found.insert(queue[0].clone());
    while let Some(current) = queue.pop() {
        let mut inside = vec![false; g.order()];
        for &x in &current {
            inside[x] = true;
        }
        for class in &classes.classes {
            if inside[class[0]] {
                continue;
            }
            let gens: Vec<usize> = current.iter().chain(class.iter()).copied().collect();
            let joined = Subgroup::generated(g, &gens).expect("indices in range");
            let elems = joined.elements().to_vec();
            if found.insert(elems.clone()) {
                queue.push(elems);
            }
        }
    }
    let mut subs: Vec<Vec<usize>> = found.into_iter().collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subs.into_iter()
        .map(|e| Subgroup::new(g, e).expect("closure is a subgroup"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_from_permutations, DEFAULT_ORDER_CAP};

    fn s3() -> FiniteGroup {
        build_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn a3_is_normal_transposition_is_not() {
        let g = s3();
        // element 2 is the 3-cycle (0 1 2), element 1 the transposition (0 1)
        let a3 = Subgroup::generated(&g, &[2]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(is_normal(&g, &a3));
        let t = Subgroup::generated(&g, &[1]).unwrap();
        assert_eq!(t.order(), 2);
        assert!(!is_normal(&g, &t));
        // brute-force witness: conjugating by (0 1 2) moves (0 1) out of <(0 1)>
        assert!(!t.contains(g.conjugate(2, 1)));
    }

    #[test]
    fn abelian_subgroups_are_normal() {
        let c6 = build_from_permutations(6, &[vec![1, 2, 3, 4, 5, 0]], DEFAULT_ORDER_CAP).unwrap();
        for x in c6.elements() {
            assert!(is_normal(&c6, &Subgroup::generated(&c6, &[x]).unwrap()));
        }
    }

    #[test]
    fn normal_subgroups_of_s3_and_s4() {
        let ns: Vec<usize> = normal_subgroups(&s3()).iter().map(Subgroup::order).collect();
        assert_eq!(ns, vec![1, 3, 6]);
        let s4 = build_from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], DEFAULT_ORDER_CAP).unwrap();
        let ns: Vec<usize> = normal_subgroups(&s4).iter().map(Subgroup::order).collect();
        assert_eq!(ns, vec![1, 4, 12, 24]);
    }

    #[test]
    fn rejects_non_subgroups() {
        let g = s3();
        assert!(Subgroup::new(&g, [0, 1, 2]).is_err());
        assert!(Subgroup::new(&g, [1]).is_err());
        assert!(Subgroup::new(&g, [0, 99]).is_err());
    }

    #[test]
    fn subgroup_group_is_consistent() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[2]).unwrap();
        let h = a3.group();
        for i in h.elements() {
            for j in h.elements() {
                assert_eq!(a3.embed(h.mul(i, j)), g.mul(a3.embed(i), a3.embed(j)));
            }
        }
        assert_eq!(a3.index(), 2);
    }
}

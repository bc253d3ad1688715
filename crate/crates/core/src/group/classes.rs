use super::FiniteGroup;

/// Conjugacy classes in canonical order: the identity class first, then by
/// class size ascending, ties broken by the smallest member index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    /// Sorted member lists.
    pub classes: Vec<Vec<usize>>,
    /// Element index to class index.
    pub class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub(crate) fn compute(g: &FiniteGroup) -> ConjugacyPartition {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = g.elements().map(|h| g.conjugate(h, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        let e = g.identity();
        classes.sort_by_key(|c| (c[0] != e, c.len(), c[0]));
        let mut class_of = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for &y in c {
                class_of[y] = i;
            }
        }
        ConjugacyPartition { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Smallest element index in class `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.classes[i][0]
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{build_from_permutations, DEFAULT_ORDER_CAP};

    #[test]
    fn s3_classes_sizes_1_2_3() {
        let g = build_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap();
        let p = g.classes();
        assert_eq!(p.sizes(), vec![1, 2, 3]);
        assert_eq!(p.classes[0], vec![g.identity()]);
        // brute-force: x, y conjugate iff some h has h x h^-1 = y
        for x in g.elements() {
            for y in g.elements() {
                let conj = g.elements().any(|h| g.mul(g.mul(h, x), g.inv(h)) == y);
                assert_eq!(conj, p.class_of[x] == p.class_of[y]);
            }
        }
    }

    #[test]
    fn abelian_and_trivial() {
        let c5 = build_from_permutations(5, &[vec![1, 2, 3, 4, 0]], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(c5.classes().len(), 5);
        assert!(c5.classes().sizes().iter().all(|&s| s == 1));
        let t = build_from_permutations(1, &[], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(t.classes().len(), 1);
    }
}

use proptest::prelude::*;

use rootcond_core::character::{induce, inner_product, restrict};
use rootcond_core::clifford::{construct_large_degree, CaseKind, InertiaKind, NormalChain, NormalPair};
use rootcond_core::group::{build_from_permutations, direct_product, normal_subgroups, FiniteGroup, Subgroup};
use rootcond_core::scalar::Cyclotomic;
use rootcond_core::Error;

const CAP: usize = 1000;

fn perm_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 1..=2)))
        .prop_map(|(n, gens)| build_from_permutations(n, &gens, CAP).unwrap())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_index_pairs(g: &FiniteGroup) -> Vec<NormalPair> {
    normal_subgroups(g).into_iter().filter(|h| is_prime(h.index())).map(|h| NormalPair::new(&h).unwrap()).collect()
}

fn s3() -> FiniteGroup {
    build_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], CAP).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn prime_index_dichotomy(g in perm_group()) {
        for pair in prime_index_pairs(&g) {
            let p = pair.index();
            for theta in pair.sub_table().rows() {
                let theta = theta.class_function();
                let inertia = pair.inertia_group(theta).unwrap();
                let orbit = pair.orbit(theta).unwrap();
                prop_assert_eq!(orbit.len() * inertia.order(), g.order());
                match pair.inertia_dichotomy(theta).unwrap() {
                    InertiaKind::WholeGroup => {
                        prop_assert_eq!(inertia.order(), g.order());
                        let ext = pair.find_extension(theta).unwrap();
                        prop_assert_eq!(ext.all.len(), p);
                        prop_assert!(ext.character.is_irreducible());
                        prop_assert_eq!(&restrict(ext.character.class_function(), pair.subgroup()).unwrap(), theta);
                    }
                    InertiaKind::Subgroup => {
                        prop_assert_eq!(&inertia, pair.subgroup());
                        prop_assert_eq!(orbit.len(), p);
                        prop_assert!(matches!(pair.find_extension(theta), Err(Error::NotInvariant)));
                        let ind = induce(theta, pair.subgroup()).unwrap();
                        prop_assert_eq!(inner_product(&ind, &ind).unwrap(), Cyclotomic::one());
                    }
                }
            }
        }
    }

    #[test]
    fn classification_is_exclusive(g in perm_group()) {
        for pair in prime_index_pairs(&g) {
            let p = pair.index();
            for chi in pair.table().rows() {
                let c = pair.classify(chi.class_function()).unwrap();
                prop_assert_eq!(c.e, 1);
                let theta_degree = pair.sub_table().rows()[c.theta_index].degree();
                prop_assert_eq!(chi.degree(), c.e * c.t as u64 * theta_degree);
                match c.kind {
                    CaseKind::Restricted => {
                        prop_assert!(c.restricted_holds && !c.induced_holds);
                        prop_assert_eq!(c.t, 1);
                    }
                    CaseKind::Induced => {
                        prop_assert!(c.induced_holds && !c.restricted_holds);
                        prop_assert_eq!(c.t, p);
                    }
                }
                let d = pair.decomposition(chi.class_function()).unwrap();
                prop_assert!(d.restriction_matches);
                prop_assert_eq!(d.t() * d.inertia_order, g.order());
            }
        }
    }

    #[test]
    fn gallagher_count(g in perm_group()) {
        // each invariant theta has exactly [G:H] extensions, each non-invariant
        // orbit induces to one character
        for pair in prime_index_pairs(&g) {
            let p = pair.index();
            let invariant = pair.sub_table().rows().iter()
                .filter(|t| pair.inertia_dichotomy(t.class_function()).unwrap() == InertiaKind::WholeGroup)
                .count();
            let moved = pair.sub_table().len() - invariant;
            prop_assert_eq!(moved % p, 0);
            prop_assert_eq!(pair.table().len(), invariant * p + moved / p);
        }
    }
}

#[test]
fn promotion_never_shrinks() {
    let g = direct_product(&s3(), &s3(), CAP).unwrap();
    for pair in prime_index_pairs(&g) {
        for theta in pair.sub_table().rows() {
            let up = pair.promote_degree(theta.class_function()).unwrap();
            assert!(up.is_irreducible());
            assert!(up.degree() >= theta.degree());
            let res = restrict(up.class_function(), pair.subgroup()).unwrap();
            assert!(!inner_product(&res, theta.class_function()).unwrap().is_zero());
        }
    }
}

#[test]
fn chains_double_the_degree() {
    let s3 = s3();
    let mut g = s3.clone();
    for n in 1..=3u32 {
        if n > 1 {
            g = direct_product(&g, &s3, CAP).unwrap();
        }
        let m = 6usize.pow(n);
        let subgroups: Vec<Subgroup> = (0..=n)
            .map(|k| Subgroup::new(&g, (0..m).filter(|x| x % 6usize.pow(n - k) == 0)).unwrap())
            .collect();
        let chain = NormalChain::new(&g, subgroups).unwrap();
        let built = construct_large_degree(&chain).unwrap();
        assert!(built.character.is_irreducible());
        assert_eq!(built.degree(), 1 << n);
        for w in built.steps.windows(2) {
            assert!(w[1].degree >= 2 * w[0].degree);
        }
    }
}

#[test]
fn abelian_factors_are_rejected() {
    let g = s3();
    let a3 = Subgroup::new(&g, g.elements().filter(|&x| g.element_order(x) != 2)).unwrap();
    let chain = NormalChain::new(&g, vec![Subgroup::trivial(&g), a3, Subgroup::whole(&g)]);
    assert!(chain.is_err());
}

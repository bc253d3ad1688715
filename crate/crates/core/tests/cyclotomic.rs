use num_traits::ToPrimitive;
use proptest::prelude::*;

use rootcond_core::scalar::{Cyclotomic, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn element() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]), prop::collection::vec((0i64..24, small_rational()), 0..4))
        .prop_map(|(n, terms)| Cyclotomic::from_powers(n, terms))
}

/// Numerical value through the complex embedding `zeta_n -> exp(2 pi i / n)`.
fn eval(x: &Cyclotomic) -> (f64, f64) {
    let n = x.conductor() as f64;
    x.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
        let c = c.to_f64().unwrap();
        let a = std::f64::consts::TAU * k as f64 / n;
        (re + c * a.cos(), im + c * a.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
}

proptest! {
    #[test]
    fn ring_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn matches_complex_evaluation(a in element(), b in element()) {
        let (x, y) = (eval(&a), eval(&b));
        prop_assert!(close(eval(&(&a + &b)), (x.0 + y.0, x.1 + y.1)));
        prop_assert!(close(eval(&(&a * &b)), (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
        prop_assert!(close(eval(&a.conj()), (x.0, -x.1)));
    }

    #[test]
    fn norm_of_conjugate_pair_is_real_and_nonnegative(a in element()) {
        let n = &a * &a.conj();
        prop_assert_eq!(n.conj(), n.clone());
        let (re, im) = eval(&n);
        prop_assert!(re > -1e-9 && im.abs() < 1e-9);
        prop_assert_eq!(n.is_zero(), a.is_zero());
    }

    #[test]
    fn galois_action_is_a_ring_map(a in element(), b in element(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23])) {
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
    }

    #[test]
    fn representation_is_canonical(a in element(), m in prop::sample::select(vec![1u32, 2, 3])) {
        let n = a.conductor() * m * 2;
        let lifted = Cyclotomic::from_basis(n, a.lift(n));
        prop_assert_eq!(lifted.conductor(), a.conductor());
        prop_assert_eq!(lifted, a);
    }
}

#[test]
fn quadratic_subfields() {
    // Gauss sums: zeta_8 + zeta_8^7 = sqrt 2, and (zeta_3 - zeta_3^2)^2 = -3
    let s2 = &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, 7);
    assert_eq!(&s2 * &s2, Cyclotomic::from_int(2));
    let d = &Cyclotomic::root_of_unity(3, 1) - &Cyclotomic::root_of_unity(3, 2);
    assert_eq!(&d * &d, Cyclotomic::from_int(-3));
    let i = Cyclotomic::root_of_unity(4, 1);
    assert_eq!(&i * &i, Cyclotomic::from_int(-1));
    assert_eq!(i.conj(), -&i);
}

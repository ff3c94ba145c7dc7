//! Property-based tests of the exact arithmetic layer: polynomial ring
//! axioms, exact division, substitution, and the rational-function field.

use pfq::poly::{rat_int, SparsePoly};
use pfq::ratfn::RationalFn;
use proptest::prelude::*;
use std::collections::BTreeMap;

const VARS: [&str; 3] = ["x1", "x2", "x3"];

fn arb_poly() -> impl Strategy<Value = SparsePoly> {
    // Up to 4 terms, exponents 0..=3, coefficients -5..=5.
    prop::collection::vec(
        (prop::collection::vec(0i64..=3, 3), -5i64..=5),
        0..=4,
    )
    .prop_map(|terms| {
        let mut acc = SparsePoly::zero();
        for (exps, c) in terms {
            let mut mono = SparsePoly::int(c);
            for (v, e) in VARS.iter().zip(&exps) {
                for _ in 0..*e {
                    mono = mono.mul(&SparsePoly::var(v));
                }
            }
            acc = acc.add(&mono);
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributive(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn add_inverse(a in arb_poly()) {
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn exact_divide_recovers_factor(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        prop_assert_eq!(SparsePoly::exact_divide(&prod, &b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_hom(a in arb_poly(), b in arb_poly()) {
        let mut bind = BTreeMap::new();
        bind.insert("x1".to_string(), SparsePoly::var("x2").add(&SparsePoly::one()));
        let (sa, sb) = (a.substitute(&bind), b.substitute(&bind));
        prop_assert_eq!(a.mul(&b).substitute(&bind), sa.mul(&sb));
        prop_assert_eq!(a.add(&b).substitute(&bind), sa.add(&sb));
    }

    #[test]
    fn ratfn_field_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RationalFn::new(a.clone(), b.clone());
        let y = RationalFn::new(c.clone(), b.clone());
        // Same-denominator addition.
        prop_assert_eq!(x.add(&y), RationalFn::new(a.add(&c), b.clone()));
        // Multiplicative inverse.
        if !a.is_zero() {
            prop_assert_eq!(x.mul(&x.inv()), RationalFn::one());
        }
        // Subtraction inverts addition.
        prop_assert_eq!(x.add(&y).sub(&y), x);
    }

    #[test]
    fn scale_matches_constant_mul(a in arb_poly(), k in -9i64..=9) {
        prop_assert_eq!(a.scale(&rat_int(k)), a.mul(&SparsePoly::int(k)));
    }
}

#[test]
fn laurent_substitution_and_coeff() {
    // (x + 1/x)^2 = x^2 + 2 + x^-2.
    let u = SparsePoly::var("x").add(&SparsePoly::var_pow("x", -1));
    let sq = u.mul(&u);
    assert_eq!(sq.coeff_of("x", 2), SparsePoly::one());
    assert_eq!(sq.coeff_of("x", 0), SparsePoly::int(2));
    assert_eq!(sq.coeff_of("x", -2), SparsePoly::one());
    // Substituting x -> 1/x fixes it.
    let mut bind = BTreeMap::new();
    bind.insert("x".to_string(), SparsePoly::var_pow("x", -1));
    assert_eq!(sq.substitute(&bind), sq);
}

//! Integration tests of the symmetric-function layer through the public API:
//! hand-checkable values, symmetry, and small cross-checks between modules.

use pfq::bcd::{bcd_q, RootType};
use pfq::partition::{enumerate_strict, StrictPartition};
use pfq::pfunc::{hl_tminus1, nimmo_p, schur_form_p, x_vars};
use pfq::poly::SparsePoly;
use pfq::seq::{dual_solve, pairing, AdmissibleSeq, FactorialParams};
use pfq::skew::skew_p;
use std::collections::BTreeMap;

fn seqs() -> Vec<AdmissibleSeq> {
    vec![
        AdmissibleSeq::monomial(),
        AdmissibleSeq::factorial(FactorialParams::Symbolic),
        AdmissibleSeq::type_b(),
        AdmissibleSeq::type_c(),
        AdmissibleSeq::type_d(),
    ]
}

#[test]
fn one_variable_one_row_is_f() {
    // P^F_(r)(x1) = f_r(x1) for every admissible sequence.
    for seq in seqs() {
        for r in 1..=4u32 {
            let lam = StrictPartition::of(&[r]);
            let mut bind = BTreeMap::new();
            bind.insert(pfq::seq::U.to_string(), SparsePoly::var("x1"));
            assert_eq!(
                nimmo_p(&seq, &lam, 1),
                seq.f(r as usize).substitute(&bind),
                "{} r={r}",
                seq.name()
            );
        }
    }
}

#[test]
fn monomial_small_values() {
    let mono = AdmissibleSeq::monomial();
    let (x1, x2) = (SparsePoly::var("x1"), SparsePoly::var("x2"));
    // P_(1)(x1,x2) = x1 + x2.
    assert_eq!(nimmo_p(&mono, &StrictPartition::of(&[1]), 2), x1.add(&x2));
    // P_(2,1)(x1,x2) = x1 x2 (x1 + x2).
    assert_eq!(
        nimmo_p(&mono, &StrictPartition::of(&[2, 1]), 2),
        x1.mul(&x2).mul(&x1.add(&x2))
    );
    // P_(2)(x1,x2) = q_2 / 2 = x1^2 + 2 x1 x2 + x2^2.
    assert_eq!(
        nimmo_p(&mono, &StrictPartition::of(&[2]), 2),
        x1.add(&x2).pow(2)
    );
}

#[test]
fn output_is_symmetric() {
    for seq in seqs() {
        let p = nimmo_p(&seq, &StrictPartition::of(&[3, 1]), 3);
        assert!(p.is_symmetric_in(&x_vars(3)), "{}", seq.name());
    }
}

#[test]
fn too_long_partition_vanishes() {
    for seq in seqs() {
        assert!(nimmo_p(&seq, &StrictPartition::of(&[2, 1]), 1).is_zero());
        assert!(hl_tminus1(&seq, &StrictPartition::of(&[3, 2, 1]), 2).unwrap().is_zero());
        assert!(schur_form_p(&seq, &StrictPartition::of(&[2, 1]), 1).is_zero());
    }
}

#[test]
fn monomial_dual_is_doubled_power() {
    // For f_d = u^d the dual is fhat_0 = 1, fhat_d = 2 v^d (d >= 1).
    let dual = dual_solve(&AdmissibleSeq::monomial(), 5);
    for d in 0..=5usize {
        let expected = SparsePoly::var_pow(pfq::seq::V, d as i64)
            .scale(&pfq::poly::rat_int(if d == 0 { 1 } else { 2 }));
        assert_eq!(dual.fhat(d).to_poly(), expected);
    }
    // And the pairing certifies biorthogonality.
    let mono = AdmissibleSeq::monomial();
    for d in 0..=5usize {
        for e in 0..=5usize {
            let got = pairing(&mono.f(d), dual.fhat(e)).unwrap();
            if d == e {
                assert_eq!(got, SparsePoly::one());
            } else {
                assert!(got.is_zero());
            }
        }
    }
}

#[test]
fn skew_degenerate_cases() {
    let fac = AdmissibleSeq::factorial(FactorialParams::Symbolic);
    let lam = StrictPartition::of(&[3, 1]);
    // P_{lambda/lambda} = 1 and mu not contained in lambda gives 0.
    assert_eq!(skew_p(&fac, &lam, &lam, 1, 2), SparsePoly::one());
    assert!(skew_p(&fac, &lam, &StrictPartition::of(&[4]), 1, 2).is_zero());
}

#[test]
fn bcd_empty_partition_is_one() {
    for root in RootType::all() {
        let q = bcd_q(root, &StrictPartition::empty(), 2);
        assert_eq!(q.value_u, SparsePoly::one());
        assert_eq!(q.value_laurent, SparsePoly::one());
    }
}

#[test]
fn bcd_laurent_palindrome() {
    for root in RootType::all() {
        let q = bcd_q(root, &StrictPartition::of(&[2, 1]), 2);
        let mut bind = BTreeMap::new();
        bind.insert("x1".to_string(), SparsePoly::var_pow("x1", -1));
        assert_eq!(q.value_laurent.substitute(&bind), q.value_laurent, "{}", root.name());
    }
}

#[test]
fn enumerate_strict_is_strict_and_complete() {
    let all = enumerate_strict(6, 6);
    // Strict partitions of weight <= 6 (including the empty one): 1 + 1 + 1
    // + 2 + 2 + 3 + 4 = 14.
    assert_eq!(all.len(), 14);
    for lam in &all {
        let parts = lam.parts();
        assert!(parts.windows(2).all(|w| w[0] > w[1]));
        assert!(lam.weight() <= 6);
    }
}

//! Integration tests of the Pfaffian toolkit through the public API.

use pfq::pfaffian::{cauchy_binet_pf, laplace_pfaffian, sylvester_check, Matrix, SkewMatrix};
use pfq::poly::{rat_int, Rational, SparsePoly};
use pfq::ratfn::RationalFn;
use proptest::prelude::*;

fn arb_skew(dim: usize) -> impl Strategy<Value = SkewMatrix<Rational>> {
    prop::collection::vec(-9i64..=9, dim * dim).prop_map(move |entries| {
        SkewMatrix::from_fn(dim, move |i, j| rat_int(entries[i * dim + j]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pf_squared_is_det(x in arb_skew(6)) {
        let pf = x.pfaffian();
        prop_assert_eq!(pf.clone() * pf, x.to_matrix().det());
    }

    #[test]
    fn expansion_matches_memoized(x in arb_skew(6), k in 1usize..=6) {
        prop_assert_eq!(x.pfaffian_expand_along(k), x.pfaffian());
    }

    #[test]
    fn odd_dimension_pfaffian_notion(x in arb_skew(5)) {
        // Odd-dimensional skew matrices are singular.
        prop_assert!(x.to_matrix().det().eq(&rat_int(0)));
    }

    #[test]
    fn laplace_random(z in arb_skew(4), w in prop::collection::vec(-4i64..=4, 4 * 2)) {
        let wm = Matrix::from_fn(4, 2, |i, j| rat_int(w[i * 2 + j]));
        prop_assert_eq!(
            laplace_pfaffian(&z, &wm).unwrap(),
            SkewMatrix::bordered(&z, &wm).pfaffian()
        );
    }

    #[test]
    fn cauchy_binet_random(
        a in arb_skew(2),
        b in arb_skew(2),
        s in prop::collection::vec(-3i64..=3, 2 * 3),
        t in prop::collection::vec(-3i64..=3, 2 * 3),
        variant in 1u8..=2,
    ) {
        let sm = Matrix::from_fn(2, 3, |i, j| rat_int(s[i * 3 + j]));
        let tm = Matrix::from_fn(2, 3, |i, j| rat_int(t[i * 3 + j]));
        let (left, right) = cauchy_binet_pf(&a, &b, &sm, &tm, variant).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn symbolic_pfaffian_definition_small() {
    let x = SkewMatrix::from_fn(4, |i, j| SparsePoly::var(&format!("m{}_{}", i + 1, j + 1)));
    assert_eq!(x.pfaffian(), x.pfaffian_def().unwrap());
    // Pf of a 4x4 is m12 m34 - m13 m24 + m14 m23.
    let m = |i: usize, j: usize| SparsePoly::var(&format!("m{i}_{j}"));
    let expected = m(1, 2).mul(&m(3, 4)).sub(&m(1, 3).mul(&m(2, 4))).add(&m(1, 4).mul(&m(2, 3)));
    assert_eq!(x.pfaffian(), expected);
}

#[test]
fn sylvester_symbolic_2_2() {
    let x = SkewMatrix::from_fn(4, |i, j| {
        RationalFn::from_poly(SparsePoly::var(&format!("m{}_{}", i + 1, j + 1)))
    });
    assert!(sylvester_check(&x, 2, 2).unwrap());
}

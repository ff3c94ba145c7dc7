//! Skew coefficients R_{r/k}, skew P-functions by bordered Pfaffians,
//! branching, and the factorial closed forms (single-variable determinant
//! route, closed-form R values, elementary-symmetric relations).

use crate::partition::{enumerate_strict, StrictPartition};
use crate::pfaffian::{Matrix, SkewMatrix};
use crate::pfunc::{nimmo_p, nimmo_p_vars, one_row_vars, two_row_vars, x_vars, y_vars};
use crate::poly::SparsePoly;
use crate::seq::{to_f_basis, AdmissibleSeq, FactorialParams};
use std::collections::BTreeMap;

/// All coefficients R_{r/0}, ..., R_{r/r} at once: expand P_(r)(x, y) in
/// the f-basis of the extra variable y. The k-th entry is R_{r/k}(x).
pub fn r_coeffs(seq: &AdmissibleSeq, r: u32, n: usize) -> Vec<SparsePoly> {
    if r == 0 {
        return vec![SparsePoly::one()];
    }
    let mut vars = x_vars(n);
    let y = "y".to_string();
    vars.push(y.clone());
    let p = nimmo_p_vars(seq, &StrictPartition::of(&[r]), &vars);
    let mut coeffs = to_f_basis(&p, &y, seq);
    // P_(r)(x, y) has y-degree at most r.
    coeffs.resize(r as usize + 1, SparsePoly::zero());
    coeffs
}

pub fn r_coeff(seq: &AdmissibleSeq, r: u32, k: u32, n: usize) -> SparsePoly {
    r_coeffs(seq, r, n)
        .get(k as usize)
        .cloned()
        .unwrap_or_else(SparsePoly::zero)
}

fn pad_parity(parts: &StrictPartition, p: usize) -> Vec<u32> {
    if parts.len() % 2 == p % 2 {
        parts.parts().to_vec()
    } else {
        parts.pad_zero()
    }
}

/// The skew P-function P_{lambda/mu, p}(x): Pfaffian of the block matrix of
/// two-row values S over the R-matrix M, with lambda and mu each padded by a
/// zero part to match the parity of p. Only the parity of p matters.
pub fn skew_p(
    seq: &AdmissibleSeq,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    p: usize,
    n: usize,
) -> SparsePoly {
    let vars = x_vars(n);
    let alpha = pad_parity(lambda, p);
    let beta = pad_parity(mu, p);
    let (r, s) = (alpha.len(), beta.len());
    // Cache R rows per alpha part.
    let r_rows: BTreeMap<u32, Vec<SparsePoly>> = alpha
        .iter()
        .map(|&a| (a, r_coeffs(seq, a, n)))
        .collect();
    let r_val = |a: u32, k: u32| -> SparsePoly {
        r_rows[&a]
            .get(k as usize)
            .cloned()
            .unwrap_or_else(SparsePoly::zero)
    };
    let m = SkewMatrix::from_fn(r + s, |i, j| {
        if j < r {
            two_row_vars(seq, alpha[i], alpha[j], &vars)
        } else if i < r {
            // M_{alpha/beta} has (i, j) entry R_{alpha_i / beta_{s+1-j}}:
            // the beta columns run in reversed order.
            let jj = j - r; // 0-based column, so beta index s-1-jj.
            r_val(alpha[i], beta[s - 1 - jj])
        } else {
            SparsePoly::zero()
        }
    });
    m.pfaffian()
}

/// Branching: P_lambda(x_1..x_n, y_1..y_p) = sum_mu P_{lambda/mu, p}(x)
/// P_mu(y) over strict mu contained in lambda.
pub fn branching_check(seq: &AdmissibleSeq, lambda: &StrictPartition, n: usize, p: usize) -> bool {
    let xv = x_vars(n);
    let yv = y_vars(p);
    let mut all = xv.clone();
    all.extend(yv.iter().cloned());
    let lhs = nimmo_p_vars(seq, lambda, &all);
    let mut rhs = SparsePoly::zero();
    for mu in enumerate_strict(lambda.weight(), lambda.len()) {
        if !lambda.contains(&mu) {
            continue;
        }
        let coeff = skew_p(seq, lambda, &mu, p, n);
        if coeff.is_zero() {
            continue;
        }
        rhs = rhs.add(&coeff.mul(&nimmo_p_vars(seq, &mu, &yv)));
    }
    lhs == rhs
}

/// Single-variable determinant route: P_{lambda/mu, p}(x) vanishes unless
/// lambda contains mu and l(mu) is l(lambda) or l(lambda) - 1, and equals
/// det(R_{lambda_i / mu_j}(x)) with mu zero-padded to length l(lambda) —
/// except that when l(mu) = l(lambda) - 1 and p has the opposite parity to
/// l(lambda), the padded zero column holds P_(lambda_i)(x) instead of
/// R_{lambda_i / 0}(x). The two column choices agree exactly when the
/// sequence is constant-term-free, which is why only the parity of p can
/// matter there.
pub fn skew_single_var(
    seq: &AdmissibleSeq,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    p: usize,
) -> SparsePoly {
    let l = lambda.len();
    let m = mu.len();
    if !lambda.contains(mu) || m + 1 < l || m > l {
        return SparsePoly::zero();
    }
    if l == 0 {
        return SparsePoly::one();
    }
    let vars = x_vars(1);
    let one_row_column = m + 1 == l && p % 2 != l % 2;
    let rows: Vec<Vec<SparsePoly>> = (1..=l)
        .map(|i| r_coeffs(seq, lambda.part(i), 1))
        .collect();
    Matrix::from_fn(l, l, |i, j| {
        let k = mu.part(j + 1) as usize;
        if k == 0 && j + 1 == l && one_row_column {
            one_row_vars(seq, lambda.part(i + 1), &vars)
        } else {
            rows[i].get(k).cloned().unwrap_or_else(SparsePoly::zero)
        }
    })
    .det()
}

/// Elementary symmetric polynomial e_p of a slice of polynomials
/// (e_p = 0 for p < 0 handled by the i64 argument).
pub fn elem_sym(xs: &[SparsePoly], p: i64) -> SparsePoly {
    if p < 0 {
        return SparsePoly::zero();
    }
    let p = p as usize;
    if p > xs.len() {
        return SparsePoly::zero();
    }
    // Newton's triangle: iteratively extend e-vector by one variable.
    let mut e = vec![SparsePoly::one()];
    for x in xs {
        let mut next = Vec::with_capacity(e.len() + 1);
        next.push(SparsePoly::one());
        for k in 1..=e.len() {
            let mut t = if k < e.len() { e[k].clone() } else { SparsePoly::zero() };
            t = t.add(&e[k - 1].mul(x));
            next.push(t);
        }
        e = next;
    }
    e.get(p).cloned().unwrap_or_else(SparsePoly::zero)
}

/// The two elementary-symmetric relations behind the factorial closed forms:
/// (1) for k, l >= 1:
///     sum_{m=1}^{r-1} e_{m-k}(x_1..x_m) e_{r-m-l}(x_{m+2}..x_r)
///       = e_{r-k-l}(x_1..x_r),
/// (2) for l >= 1:
///     2 sum_{m=1}^{r-1} e_m(x_1..x_m) e_{r-m-l}(x_{m+2}..x_r)
///       + e_{r-l}(-x_1, x_2..x_r) = e_{r-l}(x_1..x_r).
pub fn rel_e_check(r: usize) -> bool {
    let xs: Vec<SparsePoly> = (1..=r).map(|i| SparsePoly::var(&format!("x{i}"))).collect();
    let full = &xs[..];
    for l in 1..=r as i64 {
        for k in 1..=r as i64 {
            let mut lhs = SparsePoly::zero();
            for m in 1..r {
                lhs = lhs.add(
                    &elem_sym(&xs[..m], m as i64 - k)
                        .mul(&elem_sym(&xs[m + 1..], r as i64 - m as i64 - l)),
                );
            }
            if lhs != elem_sym(full, r as i64 - k - l) {
                return false;
            }
        }
        let mut lhs = SparsePoly::zero();
        for m in 1..r {
            lhs = lhs.add(
                &elem_sym(&xs[..m], m as i64)
                    .mul(&elem_sym(&xs[m + 1..], r as i64 - m as i64 - l)),
            );
        }
        let mut flipped = xs.clone();
        flipped[0] = xs[0].neg();
        let lhs2 = lhs.scale(&crate::poly::rat_int(2)).add(&elem_sym(&flipped, r as i64 - l));
        if lhs2 != elem_sym(full, r as i64 - l) {
            return false;
        }
    }
    true
}

/// Closed form of R_{r/k}(x|a) for the symbolic factorial sequence:
/// P_(r)(x | -a_0, a_1..a_{r-1}) for k = 0;
/// 2 P_(r-k)(x | 0, a_{k+1}..a_{r-1}) for 1 <= k <= r-1; 1 for k = r.
/// Realized by substituting parameters into the symbolic P-functions.
/// The factor 2 in the middle range matches the classical one-row
/// expansion P_(r)(x, y) = P_(r)(x) + 2 sum_h P_(r-h)(x) y^h + y^r.
pub fn fac_r_closed_form(r: u32, k: u32, n: usize) -> SparsePoly {
    let fac = AdmissibleSeq::factorial(FactorialParams::Symbolic);
    if k > r {
        return SparsePoly::zero();
    }
    if k == r {
        return SparsePoly::one();
    }
    if k == 0 {
        let p = nimmo_p(&fac, &StrictPartition::of(&[r]), n);
        let mut b = BTreeMap::new();
        b.insert("a0".to_string(), SparsePoly::var("a0").neg());
        return p.substitute(&b);
    }
    let p = nimmo_p(&fac, &StrictPartition::of(&[r - k]), n);
    let mut b = BTreeMap::new();
    b.insert("a0".to_string(), SparsePoly::zero());
    for i in 1..(r - k) as usize {
        b.insert(format!("a{i}"), SparsePoly::var(&format!("a{}", i + k as usize)));
    }
    p.substitute(&b).scale(&crate::poly::rat_int(2))
}

/// Verify the factorial closed form of R_{r/k} against the generic
/// f-basis expansion, symbolically in the parameters.
pub fn fac_r_closed_check(r: u32, n: usize) -> bool {
    let fac = AdmissibleSeq::factorial(FactorialParams::Symbolic);
    let coeffs = r_coeffs(&fac, r, n);
    (0..=r).all(|k| coeffs[k as usize] == fac_r_closed_form(r, k, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn mono() -> AdmissibleSeq {
        AdmissibleSeq::monomial()
    }

    #[test]
    fn r_basics() {
        assert_eq!(r_coeff(&mono(), 0, 0, 2), SparsePoly::one());
        // Constant-term-free: R_{r/0} = P_(r).
        for r in 1..=3 {
            assert_eq!(
                r_coeff(&mono(), r, 0, 2),
                nimmo_p(&mono(), &StrictPartition::of(&[r]), 2)
            );
        }
        // R_{r/k} = 0 for k > r is structural (vector has length r+1).
        assert_eq!(r_coeffs(&mono(), 2, 2).len(), 3);
    }

    #[test]
    fn reversed_column_order_locked() {
        // lambda = (2,1), mu = (1), p = 1, n = 1: the classical skew value
        // is x^2 (one strip of size 2 from (2,1)/(1) in one variable).
        let lam = StrictPartition::of(&[2, 1]);
        let mu = StrictPartition::of(&[1]);
        let got = skew_p(&mono(), &lam, &mu, 1, 1);
        assert_eq!(got, SparsePoly::var("x1").pow(2));
    }

    #[test]
    fn skew_vanishing_and_identity() {
        let lam = StrictPartition::of(&[3, 1]);
        // Not contained: (2,2) is not strict; use mu = (3,2) instead.
        let mu = StrictPartition::of(&[3, 2]);
        assert!(skew_p(&mono(), &lam, &mu, 0, 2).is_zero());
        // mu = empty, matching parity: P_{lambda/empty} = P_lambda.
        assert_eq!(
            skew_p(&mono(), &lam, &StrictPartition::empty(), 0, 2),
            nimmo_p(&mono(), &lam, 2)
        );
    }

    #[test]
    fn p_independence_when_ctf() {
        let lam = StrictPartition::of(&[2, 1]);
        let mu = StrictPartition::of(&[1]);
        assert_eq!(
            skew_p(&mono(), &lam, &mu, 0, 2),
            skew_p(&mono(), &lam, &mu, 1, 2)
        );
    }

    #[test]
    fn branching_small() {
        assert!(branching_check(&mono(), &StrictPartition::of(&[2, 1]), 2, 1));
        let fac = AdmissibleSeq::factorial(FactorialParams::Symbolic);
        assert!(branching_check(&fac, &StrictPartition::of(&[2, 1]), 1, 2));
        assert!(branching_check(&AdmissibleSeq::type_b(), &StrictPartition::of(&[2]), 2, 1));
    }

    #[test]
    fn single_var_route_matches_pfaffian() {
        let lam = StrictPartition::of(&[2, 1]);
        let mu = StrictPartition::of(&[1]);
        let fac = AdmissibleSeq::factorial(FactorialParams::Symbolic);
        for p in [0usize, 1] {
            assert_eq!(
                skew_single_var(&fac, &lam, &mu, p),
                skew_p(&fac, &lam, &mu, p, 1)
            );
        }
        // Equal lengths: p-independent even with a constant term present.
        let lam2 = StrictPartition::of(&[3, 2]);
        for p in [0usize, 1] {
            assert_eq!(
                skew_single_var(&fac, &lam2, &mu, p),
                skew_p(&fac, &lam2, &mu, p, 1)
            );
        }
        // Length gap >= 2 vanishes in one variable.
        assert!(
            skew_single_var(&mono(), &StrictPartition::of(&[3, 2, 1]), &StrictPartition::of(&[1]), 0)
                .is_zero()
        );
    }

    #[test]
    fn elem_sym_sanity() {
        let xs: Vec<SparsePoly> = vec![SparsePoly::var("x1"), SparsePoly::var("x2")];
        assert_eq!(elem_sym(&xs, 0), SparsePoly::one());
        assert_eq!(elem_sym(&xs, 1), xs[0].add(&xs[1]));
        assert_eq!(elem_sym(&xs, 2), xs[0].mul(&xs[1]));
        assert!(elem_sym(&xs, 3).is_zero());
        assert!(elem_sym(&xs, -1).is_zero());
    }

    #[test]
    fn rel_e_small() {
        assert!(rel_e_check(3));
        assert!(rel_e_check(4));
    }

    #[test]
    fn fac_closed_forms_single_var() {
        // Corollary form in one variable: R_{r/0} = (x + a0) prod (x - a_i).
        let x = SparsePoly::var("x1");
        let want0 = x
            .add(&SparsePoly::var("a0"))
            .mul(&x.sub(&SparsePoly::var("a1")))
            .mul(&x.sub(&SparsePoly::var("a2")));
        assert_eq!(fac_r_closed_form(3, 0, 1), want0);
        // R_{r/k} = 2x prod_{i=k+1}^{r-1}(x - a_i).
        assert_eq!(
            fac_r_closed_form(3, 1, 1),
            x.mul(&x.sub(&SparsePoly::var("a2"))).scale(&rat_int(2))
        );
        assert_eq!(fac_r_closed_form(3, 3, 1), SparsePoly::one());
        assert!(fac_r_closed_check(3, 1));
        assert!(fac_r_closed_check(3, 2));
    }

    #[test]
    fn skew_with_padded_inner() {
        // l - m parity mismatch exercises the mu^0 padding and the reversed
        // column order at the same time.
        let lam = StrictPartition::of(&[2, 1]);
        let got = skew_p(&mono(), &lam, &StrictPartition::empty(), 1, 2);
        // P_{(2,1)/empty, odd p}: branching with one y variable at y = 0
        // forces this to be P_(2,1)(x) as well (monomial is ctf).
        assert_eq!(got, nimmo_p(&mono(), &lam, 2));
        let _ = rat_int(0);
    }
}

//! Modified Pieri coefficients: the b-table of one-row expansion
//! coefficients, the determinant route for their generating function, a
//! direct linear-algebra oracle, the factorial border-strip closed form,
//! and the Morris rule recovered at vanishing parameters.

use crate::partition::{enumerate_strict, strip_decompose, StrictPartition, StripDecomposition};
use crate::pfaffian::Matrix;
use crate::pfunc::{nimmo_p_vars, one_row_vars, x_vars};
use crate::poly::{rat_int, Rational, SparsePoly};
use crate::seq::{to_f_basis, AdmissibleSeq, SeqError, U};
use std::collections::BTreeMap;

/// The generating-function variable for Pieri coefficients.
pub const Z: &str = "z";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PieriError {
    /// The residual's leading monomial is not of the form x^lambda for a
    /// strict lambda: the input is outside the span of the P-basis at this
    /// number of variables.
    #[error("polynomial is not in the span of the P-basis (n too small?)")]
    SingularBasis,
}

/// Table of the coefficients b^s_r(z) defined by
/// f_r(u) (1+uz)/(1-uz) = sum_s b^s_r(z) f_s(u),
/// each entry truncated at z-order `order`. Rows are indexed by r, and
/// row r holds b^s_r for s = 0..=r+order (entries beyond are zero to the
/// working order, since b^s_r has z-order at least s-r).
pub struct BTable {
    order: usize,
    rows: Vec<Vec<SparsePoly>>,
}

pub fn b_table(seq: &AdmissibleSeq, rmax: u32, order: usize) -> BTable {
    let u = SparsePoly::var(U);
    // (1+uz)/(1-uz) = 1 + 2 sum_{k>=1} u^k z^k, truncated in z.
    let mut kernel = SparsePoly::one();
    for k in 1..=order {
        kernel = kernel.add(
            &u.pow(k as u32)
                .mul(&SparsePoly::var_pow(Z, k as i64))
                .scale(&rat_int(2)),
        );
    }
    let rows = (0..=rmax)
        .map(|r| {
            let series = seq.f(r as usize).mul(&kernel);
            to_f_basis(&series, U, seq)
        })
        .collect();
    BTable { order, rows }
}

impl BTable {
    pub fn order(&self) -> usize {
        self.order
    }

    /// b^s_r(z) truncated at the table's z-order.
    pub fn entry(&self, s: u32, r: u32) -> SparsePoly {
        self.rows
            .get(r as usize)
            .and_then(|row| row.get(s as usize))
            .cloned()
            .unwrap_or_else(SparsePoly::zero)
    }
}

/// Closed form of b^s_r(z) for a factorial sequence:
/// (1+a_r z)/(1-a_r z) if s=r, 2z^{s-r}/prod_{j=r}^s (1-a_j z) if s>r,
/// and 0 for s<r; truncated at z-order `order`.
pub fn b_closed_factorial(
    seq: &AdmissibleSeq,
    s: u32,
    r: u32,
    order: usize,
) -> Result<SparsePoly, SeqError> {
    if s < r {
        return Ok(SparsePoly::zero());
    }
    if s == r {
        let a = seq.a_param(r as usize)?;
        let num = SparsePoly::one().add(&a.mul(&SparsePoly::var(Z)));
        return Ok(num.mul(&geom(&a, order)).truncate(order, &[Z.to_string()]));
    }
    let mut acc = SparsePoly::var_pow(Z, (s - r) as i64).scale(&rat_int(2));
    for j in r..=s {
        let a = seq.a_param(j as usize)?;
        acc = acc.mul(&geom(&a, order)).truncate(order, &[Z.to_string()]);
    }
    Ok(acc)
}

/// 1/(1 - a z) = sum_{k<=order} a^k z^k.
fn geom(a: &SparsePoly, order: usize) -> SparsePoly {
    let mut acc = SparsePoly::one();
    for k in 1..=order {
        acc = acc.add(&a.pow(k as u32).mul(&SparsePoly::var_pow(Z, k as i64)));
    }
    acc
}

/// Generating function c^lambda_mu(z) of the modified Pieri coefficients,
/// by the determinant route. `parity` is the parity of the number n of
/// variables (only the parity of n + l(mu) enters). Truncated at z-order
/// `order`.
pub fn pieri_det(
    seq: &AdmissibleSeq,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    parity: usize,
    order: usize,
) -> SparsePoly {
    let (l, m) = (lambda.len(), mu.len());
    let even = (parity + m) % 2 == 0;
    let (alpha, beta) = if even && l == m {
        (lambda.parts().to_vec(), mu.parts().to_vec())
    } else if even && l + 1 == m {
        (lambda.pad_zero(), mu.parts().to_vec())
    } else if even && l == m + 1 {
        (lambda.parts().to_vec(), mu.pad_zero())
    } else if !even && l == m {
        (lambda.pad_zero(), mu.pad_zero())
    } else if !even && l == m + 1 {
        (lambda.parts().to_vec(), mu.pad_zero())
    } else {
        return SparsePoly::zero();
    };
    let rmax = beta.iter().copied().max().unwrap_or(0);
    let table = b_table(seq, rmax, order);
    let r = alpha.len();
    Matrix::from_fn(r, r, |i, j| table.entry(alpha[i], beta[j]))
        .det()
        .truncate(order, &[Z.to_string()])
}

/// Expand a symmetric polynomial in the basis {P^F_lambda} over n variables
/// by greedy graded-lex peeling: the leading x-monomial of any element of
/// the span is x^lambda for the largest lambda present, with coefficient
/// equal to the product of the leading coefficients of f_{lambda_i}.
/// Coefficients may involve further parameters (e.g. symbolic a).
pub fn expand_in_p_basis(
    seq: &AdmissibleSeq,
    p: &SparsePoly,
    n: usize,
) -> Result<BTreeMap<StrictPartition, SparsePoly>, PieriError> {
    let xv = x_vars(n);
    let mut rem = p.clone();
    let mut out: BTreeMap<StrictPartition, SparsePoly> = BTreeMap::new();
    while !rem.is_zero() {
        let positions: Vec<Option<usize>> = xv
            .iter()
            .map(|v| rem.vars().iter().position(|w| w == v))
            .collect();
        // Graded-lex-largest monomial in the x-variables.
        let key = rem
            .terms()
            .map(|(mono, _)| {
                let exps: Vec<i64> = positions
                    .iter()
                    .map(|pos| pos.map_or(0, |i| mono.0[i]))
                    .collect();
                let total: i64 = exps.iter().sum();
                (total, exps)
            })
            .max()
            .expect("nonzero polynomial has a leading term");
        let exps = key.1;
        let parts: Vec<u32> = exps
            .iter()
            .take_while(|&&e| e > 0)
            .map(|&e| e as u32)
            .collect();
        if exps.iter().skip(parts.len()).any(|&e| e != 0) {
            return Err(PieriError::SingularBasis);
        }
        let lambda = StrictPartition::new(parts).map_err(|_| PieriError::SingularBasis)?;
        // Coefficient of x^lambda in rem, as a polynomial in the parameters.
        let mut c = rem.clone();
        for (v, &e) in xv.iter().zip(exps.iter()) {
            c = c.coeff_of(v, e);
        }
        let lc: Rational = lambda
            .parts()
            .iter()
            .map(|&d| seq.leading_coeff(d as usize))
            .product();
        let c = c.scale(&(Rational::from_integer(1.into()) / lc));
        rem = rem.sub(&c.mul(&nimmo_p_vars(seq, &lambda, &xv)));
        let slot = out.entry(lambda).or_insert_with(SparsePoly::zero);
        *slot = slot.add(&c);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Direct oracle for the Pieri expansion: compute P^F_mu(x) q_r(x) with
/// q_r the classical one-row Schur Q-function and expand it back in the
/// P^F-basis. Needs n large enough to see every lambda in the expansion
/// (n >= l(mu) + r suffices).
pub fn pieri_direct(
    seq: &AdmissibleSeq,
    mu: &StrictPartition,
    r: u32,
    n: usize,
) -> Result<BTreeMap<StrictPartition, SparsePoly>, PieriError> {
    let xv = x_vars(n);
    let mono = AdmissibleSeq::monomial();
    let q_r = if r == 0 {
        SparsePoly::one()
    } else {
        one_row_vars(&mono, r, &xv).scale(&rat_int(2))
    };
    let lhs = nimmo_p_vars(seq, mu, &xv).mul(&q_r);
    expand_in_p_basis(seq, &lhs, n)
}

/// Border-strip closed form of c^lambda_mu(z|a) for a factorial sequence:
/// zero when S(lambda/mu) has a 2x2 block, otherwise a product of
/// (1+a_{mu_k}z)/(1-a_{mu_k}z) over the fixed rows K and
/// 2 z^{lambda_{m(i)}-mu_{M(i)}} / prod_{j=mu_{M(i)}}^{lambda_{m(i)}} (1-a_j z)
/// over the border strips. Truncated at z-order `order`.
pub fn fac_pieri_product(
    seq: &AdmissibleSeq,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    parity: usize,
    order: usize,
) -> Result<SparsePoly, SeqError> {
    let zs = [Z.to_string()];
    let decomp = match strip_decompose(lambda, mu) {
        Ok(d) => d,
        Err(_) => return Ok(SparsePoly::zero()),
    };
    let StripDecomposition::Strips { strips, fixed } = decomp else {
        return Ok(SparsePoly::zero());
    };
    let even = (parity + mu.len()) % 2 == 0;
    // K = {k <= l(mu) : lambda_k = mu_k} when n + l(mu) is even; the odd
    // case also admits k = l(mu)+1, where lambda_k = mu_k = 0 exactly when
    // l(lambda) = l(mu), contributing a factor in a_0.
    let mut ks: Vec<u32> = fixed.iter().map(|&k| mu.part(k)).collect();
    if !even && lambda.len() == mu.len() {
        ks.push(0);
    }
    let mut acc = SparsePoly::one();
    for mk in ks {
        let a = seq.a_param(mk as usize)?;
        let f = SparsePoly::one()
            .add(&a.mul(&SparsePoly::var(Z)))
            .mul(&geom(&a, order));
        acc = acc.mul(&f).truncate(order, &zs);
    }
    for (mi, bigm) in strips {
        let top = lambda.part(mi);
        let bot = mu.part(bigm);
        let mut f = SparsePoly::var_pow(Z, (top - bot) as i64).scale(&rat_int(2));
        for j in bot..=top {
            let a = seq.a_param(j as usize)?;
            f = f.mul(&geom(&a, order)).truncate(order, &zs);
        }
        acc = acc.mul(&f).truncate(order, &zs);
    }
    Ok(acc)
}

/// Morris's Pieri rule for classical Schur P-functions:
/// P_mu q_r = sum over strict lambda with |lambda| - |mu| = r whose skew
/// shifted diagram is 2x2-block-free, with coefficient 2^{#components}.
pub fn morris_rule(mu: &StrictPartition, r: u32) -> BTreeMap<StrictPartition, u64> {
    let w = mu.weight() + r;
    let mut out = BTreeMap::new();
    for lambda in enumerate_strict(w, w as usize) {
        if lambda.weight() != w || !lambda.contains(mu) {
            continue;
        }
        if let Ok(StripDecomposition::Strips { strips, .. }) = strip_decompose(&lambda, mu) {
            out.insert(lambda, 1u64 << strips.len());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::FactorialParams;

    fn mono() -> AdmissibleSeq {
        AdmissibleSeq::monomial()
    }

    fn fac() -> AdmissibleSeq {
        AdmissibleSeq::factorial(FactorialParams::Symbolic)
    }

    #[test]
    fn b_table_monomial() {
        let t = b_table(&mono(), 3, 4);
        for r in 0..=3u32 {
            for s in 0..=7u32 {
                let want = if s == r {
                    SparsePoly::one()
                } else if s > r && (s - r) as usize <= 4 {
                    SparsePoly::var_pow(Z, (s - r) as i64).scale(&rat_int(2))
                } else {
                    SparsePoly::zero()
                };
                assert_eq!(t.entry(s, r), want, "b^{s}_{r}");
            }
        }
    }

    #[test]
    fn b_table_factorial_closed_form() {
        let f = fac();
        let t = b_table(&f, 4, 4);
        for r in 0..=4u32 {
            for s in 0..=8u32 {
                assert_eq!(
                    t.entry(s, r),
                    b_closed_factorial(&f, s, r, 4).unwrap(),
                    "b^{s}_{r}"
                );
            }
        }
    }

    #[test]
    fn direct_matches_morris_for_monomial() {
        for (mu, r, n) in [
            (StrictPartition::of(&[1]), 1, 3),
            (StrictPartition::of(&[2, 1]), 2, 5),
            (StrictPartition::of(&[2]), 0, 2),
        ] {
            let got = pieri_direct(&mono(), &mu, r, n).unwrap();
            let want: BTreeMap<StrictPartition, SparsePoly> = morris_rule(&mu, r)
                .into_iter()
                .map(|(l, c)| (l, SparsePoly::int(c as i64)))
                .collect();
            assert_eq!(got, want, "mu={mu} r={r}");
        }
    }

    #[test]
    fn det_matches_direct() {
        // Both parities, monomial and symbolic factorial.
        for seq in [mono(), fac()] {
            for (mu, r) in [
                (StrictPartition::of(&[1]), 1u32),
                (StrictPartition::of(&[2]), 2),
                (StrictPartition::of(&[2, 1]), 1),
            ] {
                for n in [3usize, 4] {
                    let direct = pieri_direct(&seq, &mu, r, n).unwrap();
                    let mut seen = direct.clone();
                    for lambda in enumerate_strict(mu.weight() + r, n) {
                        let series = pieri_det(&seq, &lambda, &mu, n % 2, r as usize + 1);
                        let got = series.coeff_of(Z, r as i64);
                        let want = seen.remove(&lambda).unwrap_or_else(SparsePoly::zero);
                        assert_eq!(got, want, "{} {lambda}/{mu} r={r} n={n}", seq.name());
                    }
                    assert!(seen.is_empty());
                }
            }
        }
    }

    #[test]
    fn fac_product_matches_det() {
        let f = fac();
        for (lam, mu) in [
            (StrictPartition::of(&[1]), StrictPartition::of(&[1])),
            (StrictPartition::of(&[2]), StrictPartition::of(&[1])),
            (StrictPartition::of(&[2, 1]), StrictPartition::of(&[1])),
            (StrictPartition::of(&[3, 1]), StrictPartition::of(&[2, 1])),
            (StrictPartition::of(&[3, 2]), StrictPartition::of(&[3, 2])),
        ] {
            for parity in [0usize, 1] {
                assert_eq!(
                    fac_pieri_product(&f, &lam, &mu, parity, 4).unwrap(),
                    pieri_det(&f, &lam, &mu, parity, 4),
                    "{lam}/{mu} parity={parity}"
                );
            }
        }
        // A 2x2 block forces zero.
        assert!(fac_pieri_product(
            &f,
            &StrictPartition::of(&[3, 2]),
            &StrictPartition::of(&[1]),
            0,
            4
        )
        .unwrap()
        .is_zero());
    }

    #[test]
    fn morris_matches_factorial_at_zero() {
        let f = AdmissibleSeq::factorial(FactorialParams::Values(vec![
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
        ]));
        let mu = StrictPartition::of(&[2, 1]);
        let r = 2u32;
        let want = morris_rule(&mu, r);
        for (lam, c) in &want {
            for parity in [0usize, 1] {
                let series = fac_pieri_product(&f, lam, &mu, parity, r as usize).unwrap();
                assert_eq!(
                    series.coeff_of(Z, r as i64),
                    SparsePoly::int(*c as i64),
                    "{lam} parity={parity}"
                );
            }
        }
    }
}

//! Admissible polynomial sequences (monomial, factorial, types B/C/D),
//! the half-weighted bilinear pairing, and the dual-sequence solver.
//!
//! A sequence {f_d} is admissible when f_0 = 1 and deg f_d = d. The dual
//! {fhat_d} is the unique sequence of power series with ord fhat_d = d and
//! sum_k f_k(u) fhat_k(v) = (1+uv)/(1-uv).

use crate::poly::{rat_int, Rational, SparsePoly};
use crate::series::TruncSeries;
use num::{One, Zero};
use std::str::FromStr;

/// The distinguished polynomial variable of every sequence.
pub const U: &str = "u";
/// The distinguished series variable of every dual sequence.
pub const V: &str = "v";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeqError {
    #[error("sequence is not admissible: {0}")]
    NotAdmissible(String),
    #[error("factorial parameter a_{0} not provided")]
    MissingParameter(usize),
    #[error("series order too low: need {needed}, have {have}")]
    OrderTooLow { needed: usize, have: usize },
    #[error("unknown sequence spec '{0}'")]
    BadSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorialParams {
    /// Every a_i is the symbolic variable a{i}.
    Symbolic,
    /// The first k parameters are symbolic, the rest are zero.
    SymbolicPrefix(usize),
    /// Explicit rational values; degrees beyond the list are an error.
    Values(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeqKind {
    Monomial,
    Factorial(FactorialParams),
    TypeB,
    TypeC,
    TypeD,
    Custom(Vec<SparsePoly>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleSeq {
    kind: SeqKind,
    /// A stable name used in reports and cache keys.
    name: String,
}

/// x^k + x^{-k} as a polynomial in u = x + x^{-1}: the Chebyshev-style
/// recurrence p_0 = 2, p_1 = u, p_k = u p_{k-1} - p_{k-2}.
fn cheb_p(k: usize) -> SparsePoly {
    let u = SparsePoly::var(U);
    let (mut a, mut b) = (SparsePoly::int(2), u.clone());
    match k {
        0 => return a,
        1 => return b,
        _ => {}
    }
    for _ in 2..=k {
        let next = u.mul(&b).sub(&a);
        a = b;
        b = next;
    }
    b
}

/// (x^k - x^{-k})/(x - x^{-1}) in u: s_1 = 1, s_2 = u, s_k = u s_{k-1} - s_{k-2}.
fn cheb_s(k: usize) -> SparsePoly {
    assert!(k >= 1);
    let u = SparsePoly::var(U);
    let (mut a, mut b) = (SparsePoly::one(), u.clone());
    match k {
        1 => return a,
        2 => return b,
        _ => {}
    }
    for _ in 3..=k {
        let next = u.mul(&b).sub(&a);
        a = b;
        b = next;
    }
    b
}

impl AdmissibleSeq {
    pub fn monomial() -> Self {
        AdmissibleSeq {
            kind: SeqKind::Monomial,
            name: "monomial".into(),
        }
    }

    pub fn factorial(params: FactorialParams) -> Self {
        let name = match &params {
            FactorialParams::Symbolic => "factorial:symbolic".to_string(),
            FactorialParams::SymbolicPrefix(k) => format!("factorial:symbolic:{k}"),
            FactorialParams::Values(v) => format!(
                "factorial:{}",
                v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
            ),
        };
        AdmissibleSeq {
            kind: SeqKind::Factorial(params),
            name,
        }
    }

    pub fn type_b() -> Self {
        AdmissibleSeq {
            kind: SeqKind::TypeB,
            name: "typeB".into(),
        }
    }

    pub fn type_c() -> Self {
        AdmissibleSeq {
            kind: SeqKind::TypeC,
            name: "typeC".into(),
        }
    }

    pub fn type_d() -> Self {
        AdmissibleSeq {
            kind: SeqKind::TypeD,
            name: "typeD".into(),
        }
    }

    /// Custom sequence; admissibility (f_0 = 1, deg f_d = d, rational
    /// leading coefficients) is checked on construction.
    pub fn custom(polys: Vec<SparsePoly>) -> Result<Self, SeqError> {
        let seq = AdmissibleSeq {
            kind: SeqKind::Custom(polys),
            name: "custom".into(),
        };
        let SeqKind::Custom(ps) = &seq.kind else { unreachable!() };
        for (d, p) in ps.iter().enumerate() {
            if p.degree_in(U) != d as i64 || p.vars().iter().any(|v| v != U) {
                return Err(SeqError::NotAdmissible(format!(
                    "f_{d} must be a degree-{d} polynomial in {U}"
                )));
            }
            if d == 0 && *p != SparsePoly::one() {
                return Err(SeqError::NotAdmissible("f_0 must be 1".into()));
            }
            if p.coeff_of(U, d as i64).as_constant().filter(|c| !c.is_zero()).is_none() {
                return Err(SeqError::NotAdmissible(format!(
                    "f_{d} must have a nonzero rational leading coefficient"
                )));
            }
        }
        Ok(seq)
    }

    /// Parse a CLI spec string: "monomial", "factorial:a0,a1,...",
    /// "factorial:symbolic", "factorial:symbolic:<k>", "typeB", "typeC", "typeD".
    pub fn parse(spec: &str) -> Result<Self, SeqError> {
        match spec {
            "monomial" => return Ok(Self::monomial()),
            "typeB" => return Ok(Self::type_b()),
            "typeC" => return Ok(Self::type_c()),
            "typeD" => return Ok(Self::type_d()),
            _ => {}
        }
        if let Some(rest) = spec.strip_prefix("factorial:") {
            if rest == "symbolic" {
                return Ok(Self::factorial(FactorialParams::Symbolic));
            }
            if let Some(k) = rest.strip_prefix("symbolic:") {
                let k: usize = k.parse().map_err(|_| SeqError::BadSpec(spec.into()))?;
                return Ok(Self::factorial(FactorialParams::SymbolicPrefix(k)));
            }
            let mut values = vec![];
            for tok in rest.split(',') {
                let q = parse_rational(tok).ok_or_else(|| SeqError::BadSpec(spec.into()))?;
                values.push(q);
            }
            return Ok(Self::factorial(FactorialParams::Values(values)));
        }
        Err(SeqError::BadSpec(spec.into()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &SeqKind {
        &self.kind
    }

    pub fn is_factorial(&self) -> bool {
        matches!(self.kind, SeqKind::Factorial(_))
    }

    /// The factorial parameter a_i as a polynomial (variable, value, or 0).
    pub fn a_param(&self, i: usize) -> Result<SparsePoly, SeqError> {
        match &self.kind {
            SeqKind::Factorial(FactorialParams::Symbolic) => {
                Ok(SparsePoly::var(&format!("a{i}")))
            }
            SeqKind::Factorial(FactorialParams::SymbolicPrefix(k)) => Ok(if i < *k {
                SparsePoly::var(&format!("a{i}"))
            } else {
                SparsePoly::zero()
            }),
            SeqKind::Factorial(FactorialParams::Values(v)) => v
                .get(i)
                .map(|q| SparsePoly::constant(q.clone()))
                .ok_or(SeqError::MissingParameter(i)),
            _ => panic!("a_param on a non-factorial sequence"),
        }
    }

    /// f_d as a polynomial in `u` (factorial parameters may appear as
    /// additional variables a0, a1, ...).
    pub fn f(&self, d: usize) -> SparsePoly {
        if d == 0 {
            return SparsePoly::one();
        }
        let u = SparsePoly::var(U);
        match &self.kind {
            SeqKind::Monomial => u.pow(d as u32),
            SeqKind::Factorial(_) => {
                let mut acc = SparsePoly::one();
                for i in 0..d {
                    let ai = self.a_param(i).expect("factorial parameters exhausted");
                    acc = acc.mul(&u.sub(&ai));
                }
                acc
            }
            // f^B_d = s_d * (u + 2), using
            // (x^{1/2}+x^{-1/2})/(x^{1/2}-x^{-1/2}) * (x - x^{-1}) = u + 2.
            SeqKind::TypeB => cheb_s(d).mul(&u.add(&SparsePoly::int(2))),
            // f^C_d = s_d * u, from (x+x^{-1})/(x-x^{-1}) * (x^d - x^{-d}).
            SeqKind::TypeC => cheb_s(d).mul(&u),
            // f^D_d = x^d + x^{-d}.
            SeqKind::TypeD => cheb_p(d),
            SeqKind::Custom(ps) => ps.get(d).expect("custom sequence too short").clone(),
        }
    }

    /// Leading (degree-d) coefficient of f_d; rational by admissibility.
    pub fn leading_coeff(&self, d: usize) -> Rational {
        self.f(d)
            .coeff_of(U, d as i64)
            .as_constant()
            .expect("admissible sequences have rational leading coefficients")
    }

    /// True when f_d(0) = 0 for all d >= 1, the hypothesis behind
    /// stability and p-independence.
    pub fn constant_term_free(&self) -> bool {
        match &self.kind {
            SeqKind::Monomial => true,
            SeqKind::TypeC => true, // f^C_d = s_d(u) * u
            SeqKind::TypeB | SeqKind::TypeD => false,
            SeqKind::Factorial(FactorialParams::Symbolic) => false,
            SeqKind::Factorial(FactorialParams::SymbolicPrefix(k)) => *k == 0,
            SeqKind::Factorial(FactorialParams::Values(v)) => {
                v.first().map(|a0| a0.is_zero()).unwrap_or(true)
            }
            SeqKind::Custom(ps) => ps
                .iter()
                .skip(1)
                .all(|p| p.coeff_of(U, 0).is_zero()),
        }
    }

    /// Verify admissibility up to degree `bound` (used by tests and the CLI).
    pub fn validate(&self, bound: usize) -> Result<(), SeqError> {
        for d in 0..=bound {
            let f = self.f(d);
            if d == 0 {
                if f != SparsePoly::one() {
                    return Err(SeqError::NotAdmissible("f_0 != 1".into()));
                }
                continue;
            }
            if f.degree_in(U) != d as i64 {
                return Err(SeqError::NotAdmissible(format!("deg f_{d} != {d}")));
            }
            if f.coeff_of(U, d as i64)
                .as_constant()
                .filter(|c| !c.is_zero())
                .is_none()
            {
                return Err(SeqError::NotAdmissible(format!(
                    "leading coefficient of f_{d} is not a nonzero rational"
                )));
            }
        }
        Ok(())
    }
}

pub fn parse_rational(tok: &str) -> Option<Rational> {
    let tok = tok.trim();
    if let Some((n, d)) = tok.split_once('/') {
        let n = num::BigInt::from_str(n.trim()).ok()?;
        let d = num::BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n = num::BigInt::from_str(tok).ok()?;
        Some(Rational::from(n))
    }
}

/// The bilinear pairing <u^i, v^j> = 1 (i=j=0), 1/2 (i=j>0), 0 otherwise,
/// extended to a polynomial in u against a truncated series in v.
/// Coefficients may involve extra variables (factorial parameters).
pub fn pairing(f: &SparsePoly, g: &TruncSeries) -> Result<SparsePoly, SeqError> {
    let deg = f.degree_in(U).max(0) as usize;
    if g.order() < deg {
        return Err(SeqError::OrderTooLow {
            needed: deg,
            have: g.order(),
        });
    }
    let mut acc = f.coeff_of(U, 0).mul(&g.coeff(0));
    let half = crate::poly::rat(1, 2);
    for i in 1..=deg {
        let a = f.coeff_of(U, i as i64);
        if a.is_zero() {
            continue;
        }
        acc = acc.add(&a.mul(&g.coeff(i)).scale(&half));
    }
    Ok(acc)
}

/// The dual sequence {fhat_d} up to order N.
#[derive(Debug, Clone)]
pub struct DualSeq {
    fhats: Vec<TruncSeries>,
}

impl DualSeq {
    pub fn order(&self) -> usize {
        self.fhats.len() - 1
    }

    pub fn fhat(&self, d: usize) -> &TruncSeries {
        &self.fhats[d]
    }
}

/// Solve for the dual sequence up to order N via the triangular system
/// A * B'^T = I: reading off the u^i coefficient of (1+uv)/(1-uv) gives
/// sum_k a_{k,i} fhat_k(v) = (2 - delta_{i,0}) v^i, which is solved from
/// i = N downwards (a_{k,i} = 0 for i > k and a_{i,i} is a nonzero
/// rational, so the system is triangular).
pub fn dual_solve(seq: &AdmissibleSeq, n: usize) -> DualSeq {
    let fs: Vec<SparsePoly> = (0..=n).map(|d| seq.f(d)).collect();
    let mut fhats: Vec<Option<TruncSeries>> = vec![None; n + 1];
    for i in (0..=n).rev() {
        let rhs_coeff = if i == 0 { rat_int(1) } else { rat_int(2) };
        let mut rhs = TruncSeries::monomial(V, n, i, SparsePoly::constant(rhs_coeff));
        for k in i + 1..=n {
            let a_ki = fs[k].coeff_of(U, i as i64);
            if a_ki.is_zero() {
                continue;
            }
            rhs = rhs.sub(&fhats[k].as_ref().unwrap().scale_poly(&a_ki));
        }
        let a_ii = fs[i]
            .coeff_of(U, i as i64)
            .as_constant()
            .expect("leading coefficients are rational");
        fhats[i] = Some(rhs.scale(&(Rational::one() / a_ii)));
    }
    DualSeq {
        fhats: fhats.into_iter().map(Option::unwrap).collect(),
    }
}

/// Closed-form factorial dual (for cross-checking dual_solve):
/// fhat_0 = (1+a_0 v)/(1-a_0 v), fhat_d = 2 v^d / prod_{i=0}^d (1 - a_i v).
pub fn factorial_dual_closed_form(
    seq: &AdmissibleSeq,
    d: usize,
    order: usize,
) -> Result<TruncSeries, SeqError> {
    assert!(seq.is_factorial());
    let v = SparsePoly::var(V);
    let lin = |i: usize| -> Result<TruncSeries, SeqError> {
        let ai = seq.a_param(i)?;
        Ok(TruncSeries::from_poly(
            &SparsePoly::one().sub(&ai.mul(&v)),
            V,
            order,
        ))
    };
    if d == 0 {
        let a0 = seq.a_param(0)?;
        let num = TruncSeries::from_poly(&SparsePoly::one().add(&a0.mul(&v)), V, order);
        return Ok(num.mul(&lin(0)?.invert().unwrap()));
    }
    let mut acc = TruncSeries::monomial(V, order, d, SparsePoly::int(2));
    for i in 0..=d {
        acc = acc.mul(&lin(i)?.invert().unwrap());
    }
    Ok(acc)
}

/// Expand a polynomial in `var` in the basis {f_k(var)}: returns c with
/// p = sum_k c_k f_k(var), by back-substitution from the top degree.
/// Coefficients of p may involve other variables; c_k are free of `var`.
pub fn to_f_basis(p: &SparsePoly, var: &str, seq: &AdmissibleSeq) -> Vec<SparsePoly> {
    let mut rem = p.clone();
    let deg = rem.degree_in(var).max(0) as usize;
    let mut coeffs = vec![SparsePoly::zero(); deg + 1];
    let mut sub = std::collections::BTreeMap::new();
    sub.insert(U.to_string(), SparsePoly::var(var));
    for d in (0..=deg).rev() {
        let lead = rem.coeff_of(var, d as i64);
        if lead.is_zero() {
            continue;
        }
        let c = lead.scale(&(Rational::one() / seq.leading_coeff(d)));
        let f_d = if var == U { seq.f(d) } else { seq.f(d).substitute(&sub) };
        rem = rem.sub(&c.mul(&f_d));
        coeffs[d] = c;
    }
    assert!(rem.is_zero(), "to_f_basis: expansion did not terminate");
    coeffs
}

/// Inverse of `to_f_basis`.
pub fn from_f_basis(coeffs: &[SparsePoly], var: &str, seq: &AdmissibleSeq) -> SparsePoly {
    let mut sub = std::collections::BTreeMap::new();
    sub.insert(U.to_string(), SparsePoly::var(var));
    let mut acc = SparsePoly::zero();
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let f_d = if var == U { seq.f(d) } else { seq.f(d).substitute(&sub) };
        acc = acc.add(&c.mul(&f_d));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn printed_bcd_tables() {
        // Type B: f_1 = u+2, f_2 = u^2+2u, f_3 = u^3+2u^2-u-2.
        let u = SparsePoly::var(U);
        let b = AdmissibleSeq::type_b();
        assert_eq!(b.f(1), u.add(&SparsePoly::int(2)));
        assert_eq!(b.f(2), u.pow(2).add(&u.scale(&rat_int(2))));
        assert_eq!(
            b.f(3),
            u.pow(3)
                .add(&u.pow(2).scale(&rat_int(2)))
                .sub(&u)
                .sub(&SparsePoly::int(2))
        );
        // Type C: f_1 = u, f_2 = u^2, f_3 = u^3 - u.
        let c = AdmissibleSeq::type_c();
        assert_eq!(c.f(1), u);
        assert_eq!(c.f(2), u.pow(2));
        assert_eq!(c.f(3), u.pow(3).sub(&u));
        // Type D: f_1 = u, f_2 = u^2 - 2, f_3 = u^3 - 3u.
        let d = AdmissibleSeq::type_d();
        assert_eq!(d.f(1), u);
        assert_eq!(d.f(2), u.pow(2).sub(&SparsePoly::int(2)));
        assert_eq!(d.f(3), u.pow(3).sub(&u.scale(&rat_int(3))));
    }

    #[test]
    fn factorial_with_zero_params_is_monomial() {
        let f = AdmissibleSeq::factorial(FactorialParams::Values(vec![
            rat_int(0),
            rat_int(0),
            rat_int(0),
        ]));
        for d in 0..=3 {
            assert_eq!(f.f(d), AdmissibleSeq::monomial().f(d));
        }
    }

    #[test]
    fn pairing_table() {
        let one = TruncSeries::one(V, 3);
        assert_eq!(pairing(&SparsePoly::one(), &one).unwrap(), SparsePoly::one());
        let two_v = TruncSeries::monomial(V, 3, 1, SparsePoly::int(2));
        assert_eq!(
            pairing(&SparsePoly::var(U), &two_v).unwrap(),
            SparsePoly::one()
        );
        let v_sq = TruncSeries::monomial(V, 3, 2, SparsePoly::one());
        assert_eq!(
            pairing(&SparsePoly::var(U), &v_sq).unwrap(),
            SparsePoly::zero()
        );
    }

    #[test]
    fn monomial_dual() {
        let dual = dual_solve(&AdmissibleSeq::monomial(), 4);
        assert_eq!(*dual.fhat(0), TruncSeries::one(V, 4));
        for d in 1..=4 {
            assert_eq!(
                *dual.fhat(d),
                TruncSeries::monomial(V, 4, d, SparsePoly::int(2))
            );
        }
    }

    #[test]
    fn biorthogonality_symbolic_factorial() {
        let seq = AdmissibleSeq::factorial(FactorialParams::Symbolic);
        let n = 4;
        let dual = dual_solve(&seq, n);
        for k in 0..=n {
            for l in 0..=n {
                let got = pairing(&seq.f(k), dual.fhat(l)).unwrap();
                let want = if k == l { SparsePoly::one() } else { SparsePoly::zero() };
                assert_eq!(got, want, "<f_{k}, fhat_{l}>");
            }
        }
        // And the closed form matches the solver.
        for d in 0..=n {
            assert_eq!(
                factorial_dual_closed_form(&seq, d, n).unwrap(),
                *dual.fhat(d),
                "fhat_{d}"
            );
        }
    }

    #[test]
    fn f_basis_roundtrip() {
        // u^2 against factorial(a0=0, a1=1): u^2 = (u|a)^2 + (u|a)^1.
        let seq = AdmissibleSeq::factorial(FactorialParams::Values(vec![rat_int(0), rat_int(1)]));
        let p = SparsePoly::var(U).pow(2);
        let c = to_f_basis(&p, U, &seq);
        assert_eq!(c, vec![SparsePoly::zero(), SparsePoly::one(), SparsePoly::one()]);
        assert_eq!(from_f_basis(&c, U, &seq), p);
        // constant c -> (c, 0, ...)
        let k = SparsePoly::constant(rat(3, 2));
        assert_eq!(to_f_basis(&k, U, &AdmissibleSeq::monomial()), vec![k.clone()]);
    }

    #[test]
    fn spec_string_roundtrip() {
        assert_eq!(AdmissibleSeq::parse("monomial").unwrap(), AdmissibleSeq::monomial());
        assert_eq!(AdmissibleSeq::parse("typeB").unwrap(), AdmissibleSeq::type_b());
        let f = AdmissibleSeq::parse("factorial:1,1/2").unwrap();
        assert_eq!(f.a_param(1).unwrap(), SparsePoly::constant(rat(1, 2)));
        assert!(AdmissibleSeq::parse("bogus").is_err());
        assert!(AdmissibleSeq::parse("factorial:symbolic:2").is_ok());
    }

    #[test]
    fn admissibility_validation() {
        for seq in [
            AdmissibleSeq::monomial(),
            AdmissibleSeq::type_b(),
            AdmissibleSeq::type_c(),
            AdmissibleSeq::type_d(),
            AdmissibleSeq::factorial(FactorialParams::Symbolic),
        ] {
            seq.validate(6).unwrap();
        }
        let bad = AdmissibleSeq::custom(vec![SparsePoly::int(2)]);
        assert!(bad.is_err());
    }
}

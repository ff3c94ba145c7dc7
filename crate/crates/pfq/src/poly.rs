//! Sparse multivariate polynomials over exact rationals, with optional
//! Laurent (negative) exponents.
//!
//! Terms are keyed by exponent vectors under *graded lexicographic* order,
//! which fixes a canonical serialization: deterministic output, diffable
//! fixtures. Variables are kept in a global name order (alphabetic prefix,
//! then numeric suffix), so `x2` sorts before `x10` and `a0` before `x1`.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub type Rational = BigRational;

/// Convenience: exact rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience: exact rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division has no exact quotient")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("constant term is not an invertible rational")]
    NonUnitConstantTerm,
    #[error("series order too low: need at least {needed}, have {have}")]
    OrderTooLow { needed: usize, have: usize },
    #[error("negative exponent in non-Laurent polynomial")]
    NegativeExponent,
}

/// Sort key for variable names: split a trailing decimal suffix so that
/// `x2 < x10`. Ties broken by the raw name.
fn var_key(name: &str) -> (String, u64, String) {
    let split = name
        .rfind(|c: char| !c.is_ascii_digit())
        .map(|i| i + 1)
        .unwrap_or(0);
    let (head, digits) = name.split_at(split);
    let num = if digits.is_empty() {
        0
    } else {
        digits.parse::<u64>().unwrap_or(u64::MAX)
    };
    (head.to_string(), num, name.to_string())
}

fn var_cmp(a: &str, b: &str) -> Ordering {
    var_key(a).cmp(&var_key(b))
}

/// Exponent vector under graded-lex order: compare total degree first,
/// then lexicographically. This is a group order on Z^n, so leading (and
/// trailing) terms are multiplicative — the fact both division routines
/// below rely on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<i64>);

impl Mono {
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone)]
pub struct SparsePoly {
    vars: Vec<String>,
    laurent: bool,
    terms: BTreeMap<Mono, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            vars: vec![],
            laurent: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![]), c);
        }
        SparsePoly {
            vars: vec![],
            laurent: false,
            terms,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    /// x^e, Laurent-enabled automatically when e < 0.
    pub fn var_pow(name: &str, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![e]), Rational::one());
        SparsePoly {
            vars: vec![name.to_string()],
            laurent: e < 0,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    /// The polynomial as a constant, if it involves no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.0.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Re-express over a superset of variables (sorted by `var_cmp`).
    pub fn with_vars(&self, vars: &[String]) -> SparsePoly {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("with_vars: target variable list must be a superset")
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0i64; vars.len()];
            for (k, &src) in m.0.iter().zip(map.iter()) {
                e[src] = *k;
            }
            terms.insert(Mono(e), c.clone());
        }
        SparsePoly {
            vars: vars.to_vec(),
            laurent: self.laurent,
            terms,
        }
    }

    fn merged_vars(a: &SparsePoly, b: &SparsePoly) -> Vec<String> {
        let mut vars = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort_by(|x, y| var_cmp(x, y));
        vars
    }

    /// Align two polynomials over the union of their variables.
    pub fn align(a: &SparsePoly, b: &SparsePoly) -> (SparsePoly, SparsePoly) {
        let vars = Self::merged_vars(a, b);
        (a.with_vars(&vars), b.with_vars(&vars))
    }

    fn insert_term(terms: &mut BTreeMap<Mono, Rational>, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let (mut a, b) = Self::align(self, other);
        a.laurent = a.laurent || b.laurent;
        for (m, c) in b.terms {
            Self::insert_term(&mut a.terms, m, c);
        }
        a
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparsePoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly {
                vars: self.vars.clone(),
                laurent: self.laurent,
                terms: BTreeMap::new(),
            };
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.mul_impl(other, None)
    }

    /// Multiply, dropping product terms whose total degree over the
    /// variables selected by `mask` (indices into the merged variable list)
    /// exceeds `cap`. Used for truncated multivariate series.
    fn mul_impl(&self, other: &SparsePoly, cap: Option<(i64, &[bool])>) -> SparsePoly {
        let (a, b) = Self::align(self, other);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e: Vec<i64> = ma.0.iter().zip(mb.0.iter()).map(|(x, y)| x + y).collect();
                if let Some((lim, mask)) = cap {
                    let d: i64 = e
                        .iter()
                        .zip(mask.iter())
                        .filter(|(_, &m)| m)
                        .map(|(x, _)| *x)
                        .sum();
                    if d > lim {
                        continue;
                    }
                }
                Self::insert_term(&mut terms, Mono(e), ca * cb);
            }
        }
        SparsePoly {
            laurent: a.laurent || b.laurent,
            vars: a.vars,
            terms,
        }
    }

    fn cap_mask(vars: &[String], cap_vars: &[String]) -> Vec<bool> {
        vars.iter().map(|v| cap_vars.contains(v)).collect()
    }

    pub fn mul_capped(&self, other: &SparsePoly, cap: usize, cap_vars: &[String]) -> SparsePoly {
        let vars = Self::merged_vars(self, other);
        let mask = Self::cap_mask(&vars, cap_vars);
        self.with_vars(&vars)
            .mul_impl(&other.with_vars(&vars), Some((cap as i64, &mask)))
    }

    /// Drop terms of total degree > cap over `cap_vars`.
    pub fn truncate(&self, cap: usize, cap_vars: &[String]) -> SparsePoly {
        let mask = Self::cap_mask(&self.vars, cap_vars);
        let mut out = self.clone();
        out.terms.retain(|m, _| {
            let d: i64 = m
                .0
                .iter()
                .zip(mask.iter())
                .filter(|(_, &k)| k)
                .map(|(e, _)| *e)
                .sum();
            d <= cap as i64
        });
        out
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division (top-down, by graded-lex leading terms). Errors with
    /// `NotDivisible` when no exact quotient exists — callers rely on
    /// algebraic divisibility guarantees, so that always signals a bug.
    pub fn exact_divide(num: &SparsePoly, den: &SparsePoly) -> Result<SparsePoly, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(SparsePoly::zero());
        }
        let (mut r, d) = Self::align(num, den);
        let laurent = r.laurent || d.laurent;
        let (dm, dc) = d.terms.iter().next_back().unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        // Any exact quotient has trailing term MT(num) - MT(den); once the
        // working leading term drops below that, divisibility has failed.
        let floor = {
            let (nm, _) = r.terms.iter().next().unwrap();
            let (dn, _) = d.terms.iter().next().unwrap();
            Mono(nm.0.iter().zip(dn.0.iter()).map(|(a, b)| a - b).collect())
        };
        let mut q = BTreeMap::new();
        while let Some((rm, rc)) = r.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let t = Mono(rm.0.iter().zip(dm.0.iter()).map(|(a, b)| a - b).collect());
            if (!laurent && t.0.iter().any(|&e| e < 0)) || t < floor {
                return Err(ArithError::NotDivisible);
            }
            let tc = &rc / &dc;
            // r -= t * d
            for (m, c) in &d.terms {
                let e = Mono(m.0.iter().zip(t.0.iter()).map(|(a, b)| a + b).collect());
                Self::insert_term(&mut r.terms, e, -(c * &tc));
            }
            Self::insert_term(&mut q, t, tc);
        }
        Ok(SparsePoly {
            vars: d.vars,
            laurent,
            terms: q,
        })
    }

    /// Total degree of a monomial over the masked variables.
    fn masked_degree(m: &Mono, mask: &[bool]) -> i64 {
        m.0.iter()
            .zip(mask.iter())
            .filter(|(_, &k)| k)
            .map(|(e, _)| *e)
            .sum()
    }

    /// Divide a series known exactly up to degree `cap + deg(den)` over
    /// `cap_vars` by a divisor *homogeneous* in `cap_vars` (and free of the
    /// remaining variables). Returns the quotient up to degree `cap`.
    ///
    /// Because the divisor is homogeneous, the division decomposes layer by
    /// layer: each `cap_vars`-homogeneous slice of the numerator is exactly
    /// divisible on its own.
    pub fn divide_capped(
        num: &SparsePoly,
        den: &SparsePoly,
        cap: usize,
        cap_vars: &[String],
    ) -> Result<SparsePoly, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let den_mask = Self::cap_mask(den.vars(), cap_vars);
        let mut deg = None;
        for (m, _) in den.terms() {
            let d = Self::masked_degree(m, &den_mask);
            if *deg.get_or_insert(d) != d {
                panic!("divide_capped: divisor must be homogeneous in the capped variables");
            }
        }
        let g = deg.expect("divide_capped: zero divisor");
        let mask = Self::cap_mask(num.vars(), cap_vars);
        // Slice the numerator into homogeneous layers over cap_vars.
        let mut layers: BTreeMap<i64, SparsePoly> = BTreeMap::new();
        for (m, c) in num.terms() {
            let d = Self::masked_degree(m, &mask);
            let layer = layers.entry(d).or_insert_with(|| SparsePoly {
                vars: num.vars.clone(),
                laurent: num.laurent,
                terms: BTreeMap::new(),
            });
            layer.terms.insert(m.clone(), c.clone());
        }
        let mut out = SparsePoly::zero();
        for (d, slice) in layers {
            if d - g > cap as i64 {
                continue; // beyond the trusted window
            }
            let q = Self::exact_divide(&slice, den)?;
            out = out.add(&q);
        }
        Ok(out)
    }

    /// Substitute variables by polynomials; unbound variables are retained.
    pub fn substitute(&self, bindings: &BTreeMap<String, SparsePoly>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut term = SparsePoly::constant(c.clone());
            for (v, &e) in self.vars.iter().zip(m.0.iter()) {
                if e == 0 {
                    continue;
                }
                let factor = match bindings.get(v) {
                    Some(p) => {
                        if e < 0 {
                            // Negative powers only substitute by monomials
                            // (the Laurent x -> x^{-1} style maps we need).
                            let inv = p
                                .as_monomial_inverse()
                                .expect("substitute: negative power of a non-monomial binding");
                            inv.pow_laurent(-e)
                        } else {
                            p.pow(e as u32)
                        }
                    }
                    None => SparsePoly::var_pow(v, e),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// If this polynomial is a single term c*x^e, return its inverse
    /// monomial (1/c)*x^{-e}.
    fn as_monomial_inverse(&self) -> Option<SparsePoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(
            Mono(m.0.iter().map(|e| -e).collect()),
            Rational::one() / c.clone(),
        );
        Some(SparsePoly {
            vars: self.vars.clone(),
            laurent: true,
            terms,
        })
    }

    fn pow_laurent(&self, e: i64) -> SparsePoly {
        assert!(e >= 0);
        let mut acc = SparsePoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at rational points (all variables must be bound).
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Rational {
        let bindings: BTreeMap<String, SparsePoly> = point
            .iter()
            .map(|(k, v)| (k.clone(), SparsePoly::constant(v.clone())))
            .collect();
        self.substitute(&bindings)
            .as_constant()
            .expect("eval: unbound variable")
    }

    pub fn degree_in(&self, var: &str) -> i64 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: &str, k: i64) -> SparsePoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return if k == 0 { self.clone() } else { SparsePoly::zero() };
        };
        let vars: Vec<String> = self
            .vars
            .iter()
            .filter(|v| v.as_str() != var)
            .cloned()
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut e = m.0.clone();
                e.remove(i);
                terms.insert(Mono(e), c.clone());
            }
        }
        SparsePoly {
            vars,
            laurent: self.laurent,
            terms,
        }
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading_term(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    /// True if invariant under every adjacent transposition of `vars`.
    pub fn is_symmetric_in(&self, vars: &[String]) -> bool {
        for w in vars.windows(2) {
            let mut b = BTreeMap::new();
            b.insert(w[0].clone(), SparsePoly::var(&w[1]));
            b.insert(w[1].clone(), SparsePoly::var(&w[0]));
            if self.substitute(&b) != *self {
                return false;
            }
        }
        true
    }

    /// Canonical JSON form: {"vars": [...], "terms": [[[e,...], "p/q"], ...]}
    /// with terms sorted descending in graded-lex order (leading term first).
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                serde_json::json!([m.0, format!("{}/{}", c.numer(), c.denom())])
            })
            .collect();
        serde_json::json!({ "vars": self.vars, "terms": terms })
    }

    /// Like `to_json`, but first aligned over a caller-chosen variable list
    /// (the CLI reports polynomials over the variables the user asked for).
    pub fn to_json_over(&self, vars: &[String]) -> serde_json::Value {
        let mut all = vars.to_vec();
        for v in &self.vars {
            if !all.contains(v) {
                all.push(v.clone());
            }
        }
        all.sort_by(|x, y| var_cmp(x, y));
        self.with_vars(&all).to_json()
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = SparsePoly::align(self, other);
        a.terms == b.terms
    }
}

impl Eq for SparsePoly {}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = vec![];
            for (v, &e) in self.vars.iter().zip(m.0.iter()) {
                if e == 1 {
                    factors.push(v.clone());
                } else if e != 0 {
                    factors.push(format!("{}^{}", v, e));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Product of a list of polynomials (empty product = 1).
pub fn product<'a>(iter: impl IntoIterator<Item = &'a SparsePoly>) -> SparsePoly {
    iter.into_iter()
        .fold(SparsePoly::one(), |acc, p| acc.mul(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> SparsePoly {
        SparsePoly::var(&format!("x{i}"))
    }

    #[test]
    fn difference_of_squares() {
        let p = x(1).add(&x(2)).mul(&x(1).sub(&x(2)));
        assert_eq!(p, x(1).pow(2).sub(&x(2).pow(2)));
    }

    #[test]
    fn exact_divide_roundtrip() {
        let num = x(1).pow(2).sub(&x(2).pow(2));
        let den = x(1).sub(&x(2));
        let q = SparsePoly::exact_divide(&num, &den).unwrap();
        assert_eq!(q, x(1).add(&x(2)));
        assert_eq!(
            SparsePoly::exact_divide(&SparsePoly::zero(), &den).unwrap(),
            SparsePoly::zero()
        );
        // x1^2*x2 + x1*x2^2 over x1+x2
        let n2 = x(1).pow(2).mul(&x(2)).add(&x(1).mul(&x(2).pow(2)));
        assert_eq!(
            SparsePoly::exact_divide(&n2, &x(1).add(&x(2))).unwrap(),
            x(1).mul(&x(2))
        );
    }

    #[test]
    fn not_divisible_detected() {
        let num = x(1).pow(2).add(&x(2));
        let den = x(1).sub(&x(2));
        assert_eq!(
            SparsePoly::exact_divide(&num, &den),
            Err(ArithError::NotDivisible)
        );
    }

    #[test]
    fn laurent_division_by_monomial_unit() {
        // (1 - x^-1)*x = x - 1, so (x-1)/(1-x^-1) = x.
        let xm1 = SparsePoly::var_pow("x", -1);
        let den = SparsePoly::one().sub(&xm1);
        let num = SparsePoly::var("x").sub(&SparsePoly::one());
        let q = SparsePoly::exact_divide(&num, &den).unwrap();
        assert_eq!(q, SparsePoly::var("x"));
    }

    #[test]
    fn substitution() {
        let u = SparsePoly::var("u");
        let mut b = BTreeMap::new();
        b.insert("u".to_string(), x(1).add(&x(2)));
        let got = u.pow(2).substitute(&b);
        let want = x(1)
            .pow(2)
            .add(&x(1).mul(&x(2)).scale(&rat_int(2)))
            .add(&x(2).pow(2));
        assert_eq!(got, want);
    }

    #[test]
    fn capped_multiplication() {
        let zv = vec!["z".to_string()];
        let z = SparsePoly::var("z");
        let a = SparsePoly::one().add(&z);
        let b = a.mul_capped(&a, 1, &zv);
        assert_eq!(b, SparsePoly::one().add(&z.scale(&rat_int(2))));
    }

    #[test]
    fn divide_capped_matches_series() {
        // num = (x1^2 - x2^2) * (1 + x1 + x1^2), trusted to degree 2+2.
        let den = x(1).pow(2).sub(&x(2).pow(2));
        let series = SparsePoly::one().add(&x(1)).add(&x(1).pow(2));
        let xv = vec!["x1".to_string(), "x2".to_string()];
        let num = den.mul(&series).truncate(4, &xv);
        let q = SparsePoly::divide_capped(&num, &den, 2, &xv).unwrap();
        assert_eq!(q, series);
    }

    #[test]
    fn var_order_is_natural() {
        assert_eq!(var_cmp("x2", "x10"), Ordering::Less);
        assert_eq!(var_cmp("a0", "x1"), Ordering::Less);
        assert_eq!(var_cmp("w", "z"), Ordering::Less);
    }
}

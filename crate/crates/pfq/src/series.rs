//! One-variable truncated power series with polynomial coefficients.
//! Used for dual sequences in v, Pieri generating series in z, and the
//! `series_invert` factors 1/(1 - a_j z).

use crate::poly::{ArithError, Rational, SparsePoly};
use num::{One, Zero};
use std::fmt;

#[derive(Debug, Clone)]
pub struct TruncSeries {
    pub var: String,
    /// coeffs[i] is the coefficient of var^i; length = order + 1.
    pub coeffs: Vec<SparsePoly>,
}

impl TruncSeries {
    pub fn zero(var: &str, order: usize) -> Self {
        TruncSeries {
            var: var.to_string(),
            coeffs: vec![SparsePoly::zero(); order + 1],
        }
    }

    pub fn one(var: &str, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = SparsePoly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> SparsePoly {
        self.coeffs.get(k).cloned().unwrap_or_else(SparsePoly::zero)
    }

    /// Lowest index with a nonzero coefficient, if any.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Truncate a polynomial in `var` (coefficients may involve other
    /// variables) to a series of the given order.
    pub fn from_poly(p: &SparsePoly, var: &str, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        for k in 0..=order {
            s.coeffs[k] = p.coeff_of(var, k as i64);
        }
        s
    }

    pub fn monomial(var: &str, order: usize, k: usize, c: SparsePoly) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    fn common_order(&self, other: &TruncSeries) -> usize {
        assert_eq!(self.var, other.var, "TruncSeries: variable mismatch");
        self.order().min(other.order())
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.common_order(other);
        TruncSeries {
            var: self.var.clone(),
            coeffs: (0..=n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.common_order(other);
        let mut coeffs = vec![SparsePoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        TruncSeries {
            var: self.var.clone(),
            coeffs,
        }
    }

    pub fn scale_poly(&self, p: &SparsePoly) -> TruncSeries {
        TruncSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TruncSeries {
        TruncSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplicative inverse up to the series order. The constant term must
    /// be an invertible rational (no variables).
    pub fn invert(&self) -> Result<TruncSeries, ArithError> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(ArithError::NonUnitConstantTerm)?;
        let n = self.order();
        let inv0 = Rational::one() / c0.clone();
        let mut coeffs = vec![SparsePoly::zero(); n + 1];
        coeffs[0] = SparsePoly::constant(inv0.clone());
        for k in 1..=n {
            let mut acc = SparsePoly::zero();
            for i in 1..=k {
                if self.coeffs[i].is_zero() || coeffs[k - i].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[i].mul(&coeffs[k - i]));
            }
            coeffs[k] = acc.neg().scale(&inv0);
        }
        Ok(TruncSeries {
            var: self.var.clone(),
            coeffs,
        })
    }

    /// Collapse back to a polynomial Σ c_k var^k.
    pub fn to_poly(&self) -> SparsePoly {
        let v = SparsePoly::var(&self.var);
        let mut acc = SparsePoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&v.pow(k as u32)));
            }
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": self.var,
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for TruncSeries {
    /// Equality up to the common order.
    fn eq(&self, other: &Self) -> bool {
        if self.var != other.var {
            return false;
        }
        let n = self.order().min(other.order());
        (0..=n).all(|k| self.coeffs[k] == other.coeffs[k])
    }
}

impl Eq for TruncSeries {}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.to_poly(), self.var, self.order() + 1)
    }
}

//! A minimal commutative-ring interface so Pfaffians and determinants can be
//! taken over rationals, polynomials, rational functions, or degree-capped
//! polynomials with one implementation.

use crate::poly::{Rational, SparsePoly};
use crate::ratfn::RationalFn;
use num::{One, Zero};
use std::sync::Arc;

pub trait Ring: Clone + PartialEq + Send + Sync {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn r_add(&self, other: &Self) -> Self;
    fn r_sub(&self, other: &Self) -> Self;
    fn r_mul(&self, other: &Self) -> Self;
    fn r_neg(&self) -> Self;
    fn r_is_zero(&self) -> bool;
}

impl Ring for Rational {
    fn r_zero() -> Self {
        Rational::zero()
    }
    fn r_one() -> Self {
        Rational::one()
    }
    fn r_add(&self, other: &Self) -> Self {
        self + other
    }
    fn r_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn r_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn r_neg(&self) -> Self {
        -self.clone()
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for SparsePoly {
    fn r_zero() -> Self {
        SparsePoly::zero()
    }
    fn r_one() -> Self {
        SparsePoly::one()
    }
    fn r_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn r_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn r_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for RationalFn {
    fn r_zero() -> Self {
        RationalFn::zero()
    }
    fn r_one() -> Self {
        RationalFn::one()
    }
    fn r_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn r_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn r_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Truncation policy: drop terms of total degree > cap over the listed
/// variables after every multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapSpec {
    pub cap: usize,
    pub vars: Vec<String>,
}

/// A sparse polynomial that carries its truncation policy, so the generic
/// Pfaffian machinery stays inside a degree-capped quotient ring.
#[derive(Debug, Clone)]
pub struct CappedPoly {
    pub poly: SparsePoly,
    pub cap: Option<Arc<CapSpec>>,
}

impl CappedPoly {
    pub fn new(poly: SparsePoly, cap: Arc<CapSpec>) -> Self {
        let poly = poly.truncate(cap.cap, &cap.vars);
        CappedPoly {
            poly,
            cap: Some(cap),
        }
    }

    fn merged_cap(&self, other: &Self) -> Option<Arc<CapSpec>> {
        match (&self.cap, &other.cap) {
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "CappedPoly: mixing incompatible caps");
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        }
    }
}

impl PartialEq for CappedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl Ring for CappedPoly {
    fn r_zero() -> Self {
        CappedPoly {
            poly: SparsePoly::zero(),
            cap: None,
        }
    }
    fn r_one() -> Self {
        CappedPoly {
            poly: SparsePoly::one(),
            cap: None,
        }
    }
    fn r_add(&self, other: &Self) -> Self {
        CappedPoly {
            poly: self.poly.add(&other.poly),
            cap: self.merged_cap(other),
        }
    }
    fn r_sub(&self, other: &Self) -> Self {
        CappedPoly {
            poly: self.poly.sub(&other.poly),
            cap: self.merged_cap(other),
        }
    }
    fn r_mul(&self, other: &Self) -> Self {
        let cap = self.merged_cap(other);
        let poly = match &cap {
            Some(c) => self.poly.mul_capped(&other.poly, c.cap, &c.vars),
            None => self.poly.mul(&other.poly),
        };
        CappedPoly { poly, cap }
    }
    fn r_neg(&self) -> Self {
        CappedPoly {
            poly: self.poly.neg(),
            cap: self.cap.clone(),
        }
    }
    fn r_is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

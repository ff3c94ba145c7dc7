//! Fractions of sparse polynomials. No automatic gcd reduction — equality
//! is by cross-multiplication, and reduction happens only at Pfaffian-result
//! boundaries via denominator clearing plus `exact_divide`.

use crate::poly::{ArithError, SparsePoly};

#[derive(Debug, Clone)]
pub struct RationalFn {
    pub num: SparsePoly,
    pub den: SparsePoly,
}

impl RationalFn {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Self {
        assert!(!den.is_zero(), "RationalFn: zero denominator");
        RationalFn { num, den }
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RationalFn {
            num: p,
            den: SparsePoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(SparsePoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(SparsePoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RationalFn) -> RationalFn {
        assert!(!other.is_zero(), "RationalFn: division by zero");
        RationalFn::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> RationalFn {
        assert!(!self.is_zero(), "RationalFn: inverse of zero");
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// Certify the fraction is actually polynomial and return the quotient.
    pub fn to_poly(&self) -> Result<SparsePoly, ArithError> {
        SparsePoly::exact_divide(&self.num, &self.den)
    }
}

impl PartialEq for RationalFn {
    /// a/b = c/d  iff  ad = cb.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFn {}

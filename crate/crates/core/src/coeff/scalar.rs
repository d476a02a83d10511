use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient ring for Laurent polynomials and everything built on them.
///
/// Coefficients are central (they commute with every generator), and `conj`
/// is the involution used by `star`.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn conj(&self) -> Self;
    fn from_integer(n: &BigInt) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self>;
    /// True for real coefficients with a negative value. Used only for
    /// rendering signs.
    fn is_negative(&self) -> bool;
    fn to_c64(&self) -> Complex64;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }
}

/// Scalars that contain the imaginary unit.
pub trait ComplexScalar: Scalar {
    fn i() -> Self;
}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Scalar for f64 {
    fn conj(&self) -> Self {
        *self
    }
    fn from_integer(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
    fn recip(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

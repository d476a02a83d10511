//! Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials in
//! `q`, and truncated power series in `ε = 1 − q`.

mod eps;
mod gauss;
mod laurent;
mod scalar;

pub use eps::EpsSeries;
pub use gauss::GaussRational;
pub use laurent::LaurentPoly;
pub use scalar::{ComplexScalar, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("cannot evaluate at q = 0: negative powers of q are undefined there")]
    ZeroQ,
    #[error("exponent overflow while multiplying powers of q")]
    ExponentOverflow,
}

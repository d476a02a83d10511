//! Exact normal ordering for braided copies of SU_q(2), probability
//! operators built from q-spinors, and numeric evaluation of the resulting
//! uncertainty bounds for spin measurements and relative rotations.
//!
//! The symbolic side is generic over a [`coeff::Scalar`] coefficient ring;
//! [`GaussRational`] is the exact default. The numeric side is generic over
//! `num_traits::Float`. Aliases below fix the usual choices.

pub mod coeff;
pub mod geom;
pub mod ncalg;
pub mod spinops;
pub mod suq2;

pub use coeff::GaussRational;

pub type Laurent = coeff::LaurentPoly<GaussRational>;
pub type Series = coeff::EpsSeries<GaussRational>;
pub type Poly = ncalg::NcPoly<GaussRational>;
pub type System = suq2::RelationSystem<GaussRational>;
pub type Spinor = spinops::QSpinor<GaussRational>;
pub type Direction = geom::DirectionVector<f64>;
pub type Rotation = geom::RotationMatrix<f64>;

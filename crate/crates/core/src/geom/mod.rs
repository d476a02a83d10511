//! Direction operators, leading-order uncertainty bounds, the rotation
//! E-tensor and the no-sharp-rotation checks.

mod bounds;
mod direction;
mod etensor;
mod protocol;
mod rotation;
mod sweep;
mod symbolic;

pub use bounds::{bound_probabilities, bound_rotation_elements, BoundReport};
pub use direction::{angles_to_direction, direction_components, DirectionVector};
pub use etensor::{e_tensor, e_tensor_pre, identity_combinations, levi_civita, max_abs_e, ETensor};
pub use protocol::{classical_protocol, ProbabilityTable};
pub use rotation::{random_rotation, RotationMatrix};
pub use sweep::{no_sharp_rotation_check, sample_rotation, sample_seed, sweep, NoSharpReport, SweepRow, NO_SHARP_FLOOR};
pub use symbolic::{row_equality_derivation, RowEqualityReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("angle {name} = {value} outside [{lo}, {hi}]")]
    AngleOutOfRange { name: &'static str, value: f64, lo: f64, hi: f64 },
    #[error("direction vector has norm {0}, expected 1")]
    NonUnit(f64),
    #[error("not a rotation: orthogonality error {orth:e}, determinant {det}")]
    NotRotation { orth: f64, det: f64 },
    #[error("q = {0} outside (0, 1]")]
    InvalidQ(String),
    #[error("axis index {0} outside 0..3")]
    BadAxis(usize),
    #[error("sample count must be at least 1")]
    NoSamples,
}

pub(crate) fn tol<T: num_traits::Float>(f64_tol: f64) -> T {
    let t = T::from(f64_tol).unwrap_or_else(T::epsilon);
    t.max(T::epsilon() * T::from(64.0).unwrap_or_else(T::one))
}

use num_traits::Float;
use serde::Serialize;

use super::rotation::RotationMatrix;
use super::GeomError;

/// `p_{ij}`: probability that a device along axis `j` of one frame finds
/// spin up for a state prepared along axis `i` of the other.
#[derive(Clone, Copy, PartialEq, Debug, Serialize)]
pub struct ProbabilityTable<T> {
    pub p: [[T; 3]; 3],
}

impl<T: Float> ProbabilityTable<T> {
    /// `R_{ij} = 2 p_{ij} − 1`, rejected unless the result is in SO(3).
    pub fn to_rotation(&self) -> Result<RotationMatrix<T>, GeomError> {
        let two = T::one() + T::one();
        RotationMatrix::new(self.p.map(|row| row.map(|v| two * v - T::one())))
    }
}

/// `p_{ij} = (1 + R_{ij}) / 2`.
pub fn classical_protocol<T: Float>(r: &RotationMatrix<T>) -> ProbabilityTable<T> {
    let two = T::one() + T::one();
    ProbabilityTable { p: r.rows().map(|row| row.map(|v| (T::one() + v) / two)) }
}

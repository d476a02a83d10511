use num_traits::Float;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::direction::DirectionVector;
use super::{tol, GeomError};

/// Element of SO(3), rows first: `m[row][col]`.
#[derive(Clone, Copy, PartialEq, Debug, Serialize)]
pub struct RotationMatrix<T> {
    m: [[T; 3]; 3],
}

impl<T: Float> RotationMatrix<T> {
    /// Checks orthogonality and `det = +1` to 1e-10 (or a few ulps for
    /// narrower types).
    pub fn new(m: [[T; 3]; 3]) -> Result<Self, GeomError> {
        let r = Self { m };
        let orth = r.orthogonality_error();
        let det = r.det();
        let t = tol::<T>(1e-10);
        if orth > t || (det - T::one()).abs() > t {
            return Err(GeomError::NotRotation {
                orth: orth.to_f64().unwrap_or(f64::NAN),
                det: det.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(r)
    }

    pub fn identity() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self { m: [[o, z, z], [z, o, z], [z, z, o]] }
    }

    /// Rotation of the unit quaternion `(w, x, y, z)`; the input is
    /// normalized first.
    pub fn from_quaternion(q: [T; 4]) -> Self {
        let n = q.iter().fold(T::zero(), |a, v| a + *v * *v).sqrt();
        let [w, x, y, z] = q.map(|v| v / n);
        let two = T::one() + T::one();
        let o = T::one();
        Self {
            m: [
                [o - two * (y * y + z * z), two * (x * y - w * z), two * (x * z + w * y)],
                [two * (x * y + w * z), o - two * (x * x + z * z), two * (y * z - w * x)],
                [two * (x * z - w * y), two * (y * z + w * x), o - two * (x * x + y * y)],
            ],
        }
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.m[row][col]
    }

    pub fn rows(&self) -> &[[T; 3]; 3] {
        &self.m
    }

    /// `n_i^a = R_{ai}`: the rotated image of axis `i`.
    pub fn column(&self, i: usize) -> DirectionVector<T> {
        DirectionVector::new(self.m[0][i], self.m[1][i], self.m[2][i])
    }

    pub fn det(&self) -> T {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Largest entry of `|RᵀR − 1|`.
    pub fn orthogonality_error(&self) -> T {
        let mut worst = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                let s = (0..3).fold(T::zero(), |a, k| a + self.m[k][i] * self.m[k][j]);
                let d = if i == j { s - T::one() } else { s };
                worst = worst.max(d.abs());
            }
        }
        worst
    }

    pub fn cast<U: Float>(&self) -> RotationMatrix<U> {
        RotationMatrix { m: self.m.map(|r| r.map(|v| U::from(v).unwrap_or_else(U::nan))) }
    }
}

/// Uniform rotation: four standard normals as a quaternion.
pub fn random_rotation<T: Float, R: Rng + ?Sized>(rng: &mut R) -> RotationMatrix<T> {
    let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    RotationMatrix::from_quaternion(q).cast()
}

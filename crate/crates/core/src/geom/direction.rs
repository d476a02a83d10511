use std::ops::{Add, Mul, Sub};

use num_traits::Float;
use serde::Serialize;

use crate::coeff::{ComplexScalar, LaurentPoly};
use crate::ncalg::{CopyId, Generator, NcPoly};

use super::{tol, GeomError};

/// Direction operator components `(α γ* + γ α*, i(α γ* − γ α*), 1 − 2 γ γ*)`
/// of a copy. With `α = cos(θ/2)`, `γ = sin(θ/2) e^{iω}` they evaluate to
/// `(sin θ cos ω, sin θ sin ω, cos θ)`.
pub fn direction_components<C: ComplexScalar>(copy: CopyId) -> [NcPoly<C>; 3] {
    let x = NcPoly::gen(Generator::alpha(copy));
    let y = NcPoly::gen(Generator::gamma(copy));
    let xys = &x * &y.star();
    let yxs = &y * &x.star();
    let i = LaurentPoly::constant(C::i());
    let two = LaurentPoly::constant(C::from_i64(2));
    [
        &xys + &yxs,
        (&xys - &yxs).scale(&i),
        &NcPoly::one() - &(&y * &y.star()).scale(&two),
    ]
}

#[derive(Clone, Copy, PartialEq, Debug, Serialize)]
pub struct DirectionVector<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Float> DirectionVector<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    /// Cartesian unit vector along axis 0, 1 or 2.
    pub fn axis(k: usize) -> Result<Self, GeomError> {
        let (o, z) = (T::one(), T::zero());
        match k {
            0 => Ok(Self::new(o, z, z)),
            1 => Ok(Self::new(z, o, z)),
            2 => Ok(Self::new(z, z, o)),
            _ => Err(GeomError::BadAxis(k)),
        }
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn check_unit(&self) -> Result<(), GeomError> {
        let n = self.norm();
        if (n - T::one()).abs() > tol(1e-10) {
            return Err(GeomError::NonUnit(n.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(())
    }
}

impl<T: Float> Add for DirectionVector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Float> Sub for DirectionVector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Float> Mul<T> for DirectionVector<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

/// `(sin θ cos ω, sin θ sin ω, cos θ)` for `θ ∈ [0, π]`, `ω ∈ [0, 2π]`.
pub fn angles_to_direction<T: Float>(theta: T, omega: T) -> Result<DirectionVector<T>, GeomError> {
    let pi = T::from(std::f64::consts::PI).unwrap_or_else(T::zero);
    let two = T::one() + T::one();
    let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
    if !(theta >= T::zero() && theta <= pi) {
        return Err(GeomError::AngleOutOfRange { name: "theta", value: f(theta), lo: 0.0, hi: f(pi) });
    }
    if !(omega >= T::zero() && omega <= two * pi) {
        return Err(GeomError::AngleOutOfRange { name: "omega", value: f(omega), lo: 0.0, hi: f(two * pi) });
    }
    let (st, ct) = theta.sin_cos();
    let (so, co) = omega.sin_cos();
    Ok(DirectionVector::new(st * co, st * so, ct))
}

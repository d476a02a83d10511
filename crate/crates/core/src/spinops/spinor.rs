use serde::Serialize;

use crate::coeff::Scalar;
use crate::ncalg::{CopyId, Generator, NcPoly};
use crate::suq2::EpsilonTensor;

use super::SpinError;

/// Index position of a spinor: `Ket` is `u^α`, `Bra` is `ū_α`, `KetBar`
/// is `w̄^α` (the down state), `BraBar` its lowered partner.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Variance {
    Ket,
    Bra,
    KetBar,
    BraBar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QSpinor<C> {
    pub components: [NcPoly<C>; 2],
    pub copy: CopyId,
    pub variance: Variance,
}

impl<C: Scalar> QSpinor<C> {
    /// `(α, γ)` of a copy.
    pub fn ket(copy: CopyId) -> Self {
        Self {
            components: [NcPoly::gen(Generator::alpha(copy)), NcPoly::gen(Generator::gamma(copy))],
            copy,
            variance: Variance::Ket,
        }
    }

    /// `(α*, γ*)` of a copy.
    pub fn bra(copy: CopyId) -> Self {
        Self::ket(copy).dagger()
    }

    /// Stars every component and flips ket/bra.
    pub fn dagger(&self) -> Self {
        let variance = match self.variance {
            Variance::Ket => Variance::Bra,
            Variance::Bra => Variance::Ket,
            Variance::KetBar => Variance::BraBar,
            Variance::BraBar => Variance::KetBar,
        };
        Self {
            components: [self.components[0].star(), self.components[1].star()],
            copy: self.copy,
            variance,
        }
    }
}

/// `w̄^α = w̄_β ε^{βα}` for a bra `w̄_α`.
pub fn bar_spinor<C: Scalar>(s: &QSpinor<C>, eps: &EpsilonTensor<C>) -> Result<QSpinor<C>, SpinError> {
    if s.variance != Variance::Bra {
        return Err(SpinError::VarianceMismatch { expected: Variance::Bra, got: s.variance });
    }
    Ok(QSpinor { components: eps.raise(&s.components), copy: s.copy, variance: Variance::KetBar })
}

/// Inverse of [`bar_spinor`]: `w̄_α = w̄^β ε_{βα}`.
pub fn lower_spinor<C: Scalar>(s: &QSpinor<C>, eps: &EpsilonTensor<C>) -> Result<QSpinor<C>, SpinError> {
    if s.variance != Variance::KetBar {
        return Err(SpinError::VarianceMismatch { expected: Variance::KetBar, got: s.variance });
    }
    Ok(QSpinor { components: eps.lower(&s.components), copy: s.copy, variance: Variance::Bra })
}

use crate::coeff::{LaurentPoly, Scalar};
use crate::ncalg::NcPoly;

/// q-deformed Levi-Civita symbols; index 0 is the α slot, 1 the γ slot.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonTensor<C> {
    pub upper: [[LaurentPoly<C>; 2]; 2],
    pub lower: [[LaurentPoly<C>; 2]; 2],
}

impl<C: Scalar> EpsilonTensor<C> {
    pub fn new() -> Self {
        let z = LaurentPoly::zero;
        let one = LaurentPoly::one;
        Self {
            upper: [[z(), one()], [-LaurentPoly::q_pow(1), z()]],
            lower: [[z(), -LaurentPoly::q_pow(-1)], [one(), z()]],
        }
    }

    /// `v^α = v_β ε^{βα}`.
    pub fn raise(&self, v: &[NcPoly<C>; 2]) -> [NcPoly<C>; 2] {
        std::array::from_fn(|a| {
            (0..2).fold(NcPoly::zero(), |acc, b| &acc + &v[b].scale(&self.upper[b][a]))
        })
    }

    /// `v_α = v^β ε_{βα}`.
    pub fn lower(&self, v: &[NcPoly<C>; 2]) -> [NcPoly<C>; 2] {
        std::array::from_fn(|a| {
            (0..2).fold(NcPoly::zero(), |acc, b| &acc + &v[b].scale(&self.lower[b][a]))
        })
    }
}

impl<C: Scalar> Default for EpsilonTensor<C> {
    fn default() -> Self {
        Self::new()
    }
}

/// `R^{αβ}_{γδ} = q δ^α_γ δ^β_δ + ε^{αβ} ε_{γδ}`, stored as `entries[α][β][γ][δ]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<C> {
    pub entries: [[[[LaurentPoly<C>; 2]; 2]; 2]; 2],
}

impl<C: Scalar> RMatrix<C> {
    pub fn new(eps: &EpsilonTensor<C>) -> Self {
        let entries = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                std::array::from_fn(|c| {
                    std::array::from_fn(|d| {
                        let mut e = &eps.upper[a][b] * &eps.lower[c][d];
                        if a == c && b == d {
                            e += &LaurentPoly::q_pow(1);
                        }
                        e
                    })
                })
            })
        });
        Self { entries }
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &LaurentPoly<C> {
        &self.entries[a][b][c][d]
    }
}

impl<C: Scalar> Default for RMatrix<C> {
    fn default() -> Self {
        Self::new(&EpsilonTensor::new())
    }
}

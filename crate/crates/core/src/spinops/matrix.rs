use crate::coeff::{LaurentPoly, Scalar};
use crate::ncalg::NcPoly;
use crate::suq2::{EpsilonTensor, RelationSystem};

use super::prob::Outcome;
use super::spinor::{bar_spinor, QSpinor};
use super::SpinError;

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<C> {
    pub entries: [[NcPoly<C>; 2]; 2],
}

impl<C: Scalar> OperatorMatrix<C> {
    pub fn identity() -> Self {
        Self {
            entries: [[NcPoly::one(), NcPoly::zero()], [NcPoly::zero(), NcPoly::one()]],
        }
    }

    /// Outer product `ket^α bra_β`.
    pub fn outer(ket: &[NcPoly<C>; 2], bra: &[NcPoly<C>; 2]) -> Self {
        Self { entries: std::array::from_fn(|a| std::array::from_fn(|b| &ket[a] * &bra[b])) }
    }

    pub fn map<F: Fn(&NcPoly<C>) -> NcPoly<C>>(&self, f: F) -> Self {
        Self { entries: std::array::from_fn(|a| std::array::from_fn(|b| f(&self.entries[a][b]))) }
    }

    pub fn zip<F: Fn(&NcPoly<C>, &NcPoly<C>) -> NcPoly<C>>(&self, o: &Self, f: F) -> Self {
        Self {
            entries: std::array::from_fn(|a| {
                std::array::from_fn(|b| f(&self.entries[a][b], &o.entries[a][b]))
            }),
        }
    }

    pub fn normalize(&self, sys: &RelationSystem<C>) -> Result<Self, SpinError> {
        let mut out = self.clone();
        for a in 0..2 {
            for b in 0..2 {
                out.entries[a][b] = sys.normalize(&self.entries[a][b])?;
            }
        }
        Ok(out)
    }

    /// Hermitian adjoint: transpose and star each entry.
    pub fn dagger(&self) -> Self {
        Self { entries: std::array::from_fn(|a| std::array::from_fn(|b| self.entries[b][a].star())) }
    }

    /// Matrix product, entries multiplied in order and not rewritten.
    pub fn matmul(&self, o: &Self) -> Self {
        Self {
            entries: std::array::from_fn(|a| {
                std::array::from_fn(|b| &(&self.entries[a][0] * &o.entries[0][b]) + &(&self.entries[a][1] * &o.entries[1][b]))
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_empty())
    }
}

/// `Π↑ = w^α w̄_β` or `Π↓ = w̄^α (w̄^β)*` for Stern-Gerlach copy `i`,
/// entries not rewritten. Products of projectors must start from these.
pub fn projector_expr<C: Scalar>(
    i: usize,
    outcome: Outcome,
    sys: &RelationSystem<C>,
) -> Result<OperatorMatrix<C>, SpinError> {
    let copy = sys.sg_copy(i)?;
    let w = QSpinor::<C>::ket(copy);
    let m = match outcome {
        Outcome::Up => OperatorMatrix::outer(&w.components, &w.dagger().components),
        Outcome::Down => {
            let down = bar_spinor(&w.dagger(), &EpsilonTensor::new())?;
            OperatorMatrix::outer(&down.components, &down.dagger().components)
        }
    };
    Ok(m)
}

pub fn projector<C: Scalar>(
    i: usize,
    outcome: Outcome,
    sys: &RelationSystem<C>,
) -> Result<OperatorMatrix<C>, SpinError> {
    projector_expr(i, outcome, sys)?.normalize(sys)
}

/// `σ^q = q Π↑ − q⁻¹ Π↓`, entries not rewritten.
pub fn pauli_expr<C: Scalar>(i: usize, sys: &RelationSystem<C>) -> Result<OperatorMatrix<C>, SpinError> {
    let up = projector_expr(i, Outcome::Up, sys)?;
    let down = projector_expr(i, Outcome::Down, sys)?;
    let q = LaurentPoly::q_pow(1);
    let qi = LaurentPoly::q_pow(-1);
    Ok(up.zip(&down, |u, d| &u.scale(&q) - &d.scale(&qi)))
}

pub fn pauli<C: Scalar>(i: usize, sys: &RelationSystem<C>) -> Result<OperatorMatrix<C>, SpinError> {
    pauli_expr(i, sys)?.normalize(sys)
}

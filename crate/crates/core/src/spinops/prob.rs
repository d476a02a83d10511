use serde::Serialize;

use crate::coeff::Scalar;
use crate::ncalg::NcPoly;
use crate::suq2::RelationSystem;

use super::spinor::QSpinor;
use super::SpinError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Outcome {
    Up,
    Down,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityOperator<C> {
    /// Defining product, before any rewriting.
    pub raw: NcPoly<C>,
    /// Normal-form representative of `raw`.
    pub value: NcPoly<C>,
    pub apparatus: usize,
    pub outcome: Outcome,
}

/// `(ū_α w^α)(w̄_β u^β)` for ket spinors `u` and `w`, not normalized.
pub fn prob_up_from<C: Scalar>(u: &QSpinor<C>, w: &QSpinor<C>) -> NcPoly<C> {
    let ub = u.dagger();
    let wb = w.dagger();
    let left = &(&ub.components[0] * &w.components[0]) + &(&ub.components[1] * &w.components[1]);
    let right = &(&wb.components[0] * &u.components[0]) + &(&wb.components[1] * &u.components[1]);
    &left * &right
}

/// Probability of `outcome` for apparatus `i` (spin copy `i` measured by
/// Stern-Gerlach copy `i`). The down value is the complement of up.
pub fn prob_op<C: Scalar>(
    i: usize,
    outcome: Outcome,
    sys: &RelationSystem<C>,
) -> Result<ProbabilityOperator<C>, SpinError> {
    let u = QSpinor::ket(sys.spin_copy(i)?);
    let w = QSpinor::ket(sys.sg_copy(i)?);
    let up = prob_up_from(&u, &w);
    let raw = match outcome {
        Outcome::Up => up,
        Outcome::Down => &NcPoly::one() - &up,
    };
    let value = sys.normalize(&raw)?;
    Ok(ProbabilityOperator { raw, value, apparatus: i, outcome })
}

/// `[a, b]` built from the defining products. Normalization is linear but
/// not multiplicative, so multiplying normal forms would give a different
/// (and wrong) class.
pub fn commutator<C: Scalar>(
    a: &ProbabilityOperator<C>,
    b: &ProbabilityOperator<C>,
    sys: &RelationSystem<C>,
) -> Result<NcPoly<C>, SpinError> {
    let ab = &a.raw * &b.raw;
    let ba = &b.raw * &a.raw;
    Ok(sys.normalize(&(&ab - &ba))?)
}

use num_rational::BigRational;
use serde::Serialize;

use crate::coeff::{ComplexScalar, LaurentPoly, Scalar};
use crate::geom::direction_components;
use crate::ncalg::{abelianize, NcPoly};
use crate::suq2::{braid_pair, rotate_spinor, EpsilonTensor, RelationSystem};

use super::golden::parse_golden;
use super::matrix::{pauli_expr, projector_expr, OperatorMatrix};
use super::prob::{commutator, prob_op, prob_up_from, Outcome};
use super::spinor::{bar_spinor, QSpinor};
use super::SpinError;

/// Lowest ε order with a nonzero abelianized coefficient, within `horizon`.
fn first_eps_order<C: Scalar>(p: &NcPoly<C>, horizon: usize) -> Option<usize> {
    abelianize(p)
        .expand_eps(horizon)
        .values()
        .filter_map(|s| s.first_nonzero())
        .min()
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstOrderReport {
    pub check: &'static str,
    pub i: usize,
    pub j: usize,
    pub eps0_zero: bool,
    pub eps1_zero: bool,
    /// `None` when nothing survives up to `horizon`.
    pub first_nonzero_order: Option<usize>,
    pub horizon: usize,
    pub residual_terms: usize,
    /// Abelianized monomials of the commutator carrying an ε¹ term.
    pub commutator_eps1_terms: usize,
}

impl FirstOrderReport {
    pub fn pass(&self) -> bool {
        self.eps0_zero && self.eps1_zero
    }
}

type Vec3<C> = [NcPoly<C>; 3];

fn add3<C: Scalar>(a: &Vec3<C>, b: &Vec3<C>) -> Vec3<C> {
    std::array::from_fn(|k| &a[k] + &b[k])
}

fn cross<C: Scalar>(a: &Vec3<C>, b: &Vec3<C>) -> Vec3<C> {
    std::array::from_fn(|k| {
        let (u, v) = ((k + 1) % 3, (k + 2) % 3);
        &(&a[u] * &b[v]) - &(&a[v] * &b[u])
    })
}

fn dot<C: Scalar>(a: &Vec3<C>, b: &Vec3<C>) -> NcPoly<C> {
    (0..3).fold(NcPoly::zero(), |acc, k| &acc + &(&a[k] * &b[k]))
}

/// `(i/2)(1 − q) {(m_i + m_j)·(n_i × n_j) − (n_i + n_j)·(m_i × m_j)}` with
/// the factors multiplied in the order written.
pub fn first_order_rhs<C: ComplexScalar>(
    i: usize,
    j: usize,
    sys: &RelationSystem<C>,
) -> Result<NcPoly<C>, SpinError> {
    let n_i = direction_components(sys.spin_copy(i)?);
    let n_j = direction_components(sys.spin_copy(j)?);
    let m_i = direction_components(sys.sg_copy(i)?);
    let m_j = direction_components(sys.sg_copy(j)?);
    let bracket = &dot(&add3(&m_i, &m_j), &cross(&n_i, &n_j)) - &dot(&add3(&n_i, &n_j), &cross(&m_i, &m_j));
    let half = C::from_rational(&BigRational::new(1.into(), 2.into()));
    let pref = LaurentPoly::from_terms([(0, C::i() * half.clone()), (1, -(C::i() * half))]);
    Ok(bracket.scale(&pref))
}

/// Compares the commutator with the first-order formula after
/// abelianizing and expanding in ε up to `horizon`.
pub fn verify_first_order<C: ComplexScalar>(
    i: usize,
    j: usize,
    sys: &RelationSystem<C>,
    horizon: usize,
) -> Result<FirstOrderReport, SpinError> {
    if i == j {
        return Err(SpinError::SameApparatus);
    }
    let com = commutator(&prob_op(i, Outcome::Up, sys)?, &prob_op(j, Outcome::Up, sys)?, sys)?;
    let rhs = sys.normalize(&first_order_rhs(i, j, sys)?)?;
    let diff = sys.normalize(&(&com - &rhs))?;
    let series = abelianize(&diff).expand_eps(horizon.max(1));
    let at = |k: usize| series.values().all(|s| s.coeff(k).is_zero());
    let com_eps1 = abelianize(&com)
        .expand_eps(1)
        .values()
        .filter(|s| !s.coeff(1).is_zero())
        .count();
    Ok(FirstOrderReport {
        check: "first-order",
        i,
        j,
        eps0_zero: at(0),
        eps1_zero: at(1),
        first_nonzero_order: series.values().filter_map(|s| s.first_nonzero()).min(),
        horizon: horizon.max(1),
        residual_terms: series.len(),
        commutator_eps1_terms: com_eps1,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AllOrdersReport {
    pub check: &'static str,
    pub i: usize,
    pub j: usize,
    pub transcribed_terms: usize,
    pub residual_terms: usize,
    pub first_nonzero_order: Option<usize>,
    pub horizon: usize,
    /// Normalized residual, verbatim, for comparison by hand.
    pub residual: String,
}

impl AllOrdersReport {
    pub fn pass(&self) -> bool {
        self.residual_terms == 0
    }
}

/// `normalize([P_i(↑), P_j(↑)] − transcription)`. A nonzero residual is
/// reported as is; the transcription is never adjusted.
pub fn verify_all_orders<C: Scalar>(
    i: usize,
    j: usize,
    transcription: &str,
    sys: &RelationSystem<C>,
    horizon: usize,
) -> Result<AllOrdersReport, SpinError> {
    if i == j {
        return Err(SpinError::SameApparatus);
    }
    let golden = parse_golden(transcription, i, j, sys)?;
    let com = commutator(&prob_op(i, Outcome::Up, sys)?, &prob_op(j, Outcome::Up, sys)?, sys)?;
    let residual = sys.normalize(&(&com - &golden.value()))?;
    Ok(AllOrdersReport {
        check: "all-orders",
        i,
        j,
        transcribed_terms: golden.terms,
        residual_terms: residual.len(),
        first_nonzero_order: first_eps_order(&residual, horizon),
        horizon,
        residual: sys.render(&residual),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CovarianceReport {
    pub check: &'static str,
    pub apparatus: usize,
    pub native_residual_terms: Vec<usize>,
    pub rotated_residual_terms: Vec<usize>,
    pub probability_difference_terms: usize,
}

impl CovarianceReport {
    pub fn pass(&self) -> bool {
        self.native_residual_terms.iter().chain(&self.rotated_residual_terms).all(|&n| n == 0)
            && self.probability_difference_terms == 0
    }
}

/// Braid residuals for native and rotated spinor pairs of apparatus `i`,
/// plus the change of `P_i(↑)` under the rotation.
pub fn verify_covariance<C: Scalar>(i: usize, sys: &RelationSystem<C>) -> Result<CovarianceReport, SpinError> {
    let u = QSpinor::ket(sys.spin_copy(i)?);
    let w = QSpinor::ket(sys.sg_copy(i)?);
    let ur = rotate_spinor(&u, sys)?;
    let wr = rotate_spinor(&w, sys)?;
    let count = |v: Vec<NcPoly<C>>| v.iter().map(|p| p.len()).collect::<Vec<_>>();
    let native = count(braid_pair(&u, &w, sys)?);
    let rotated = count(braid_pair(&ur, &wr, sys)?);
    let diff = &prob_up_from(&ur, &wr) - &prob_up_from(&u, &w);
    Ok(CovarianceReport {
        check: "covariance",
        apparatus: i,
        native_residual_terms: native,
        rotated_residual_terms: rotated,
        probability_difference_terms: sys.normalize(&diff)?.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub check: &'static str,
    pub apparatus: usize,
    pub hermiticity_terms: usize,
    pub completeness_terms: usize,
    pub projector_completeness_terms: usize,
    pub pauli_hermiticity_terms: usize,
}

impl PropertyReport {
    pub fn pass(&self) -> bool {
        self.hermiticity_terms == 0
            && self.completeness_terms == 0
            && self.projector_completeness_terms == 0
            && self.pauli_hermiticity_terms == 0
    }
}

/// Hermiticity and completeness residuals for apparatus `i`.
pub fn verify_properties<C: Scalar>(i: usize, sys: &RelationSystem<C>) -> Result<PropertyReport, SpinError> {
    let up = prob_op(i, Outcome::Up, sys)?;
    // Checked on the defining product: normal forms are not star-closed.
    let herm = sys.normalize(&(&up.raw.star() - &up.raw))?;
    // The complement defines P(↓); completeness is checked against the
    // independent outer-product form built from the down spinor.
    let u = QSpinor::ket(sys.spin_copy(i)?);
    let w = QSpinor::<C>::ket(sys.sg_copy(i)?);
    let down_spinor = bar_spinor(&w.dagger(), &EpsilonTensor::new())?;
    let down = prob_up_from(&u, &down_spinor);
    let complete = sys.normalize(&(&(&up.raw + &down) - &NcPoly::one()))?;
    let pu = projector_expr(i, Outcome::Up, sys)?;
    let pd = projector_expr(i, Outcome::Down, sys)?;
    let id = OperatorMatrix::identity();
    let proj = pu.zip(&pd, |a, b| a + b).zip(&id, |a, b| a - b).normalize(sys)?;
    let sigma = pauli_expr(i, sys)?;
    let sigma_h = sigma.dagger().zip(&sigma, |a, b| a - b).normalize(sys)?;
    let terms = |m: &OperatorMatrix<C>| m.entries.iter().flatten().map(|p| p.len()).sum();
    Ok(PropertyReport {
        check: "properties",
        apparatus: i,
        hermiticity_terms: herm.len(),
        completeness_terms: complete.len(),
        projector_completeness_terms: terms(&proj),
        pauli_hermiticity_terms: terms(&sigma_h),
    })
}

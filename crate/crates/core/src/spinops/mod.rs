//! q-spinors, projectors, the deformed Pauli matrix, probability operators
//! and their commutators.

mod classical;
mod golden;
mod matrix;
mod prob;
mod spinor;
mod verify;

pub use classical::{classical_eval, Assignment};
pub use golden::{parse_golden, GoldenExpression, ALL_ORDERS_COMMUTATOR};
pub use matrix::{pauli, pauli_expr, projector, projector_expr, OperatorMatrix};
pub use prob::{commutator, prob_op, prob_up_from, Outcome, ProbabilityOperator};
pub use spinor::{bar_spinor, lower_spinor, QSpinor, Variance};
pub use verify::{
    first_order_rhs, verify_all_orders, verify_covariance, verify_first_order, verify_properties, AllOrdersReport,
    CovarianceReport, FirstOrderReport, PropertyReport,
};

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::ncalg::NcError;
use crate::suq2::SystemError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinError {
    #[error(transparent)]
    Rewrite(#[from] NcError),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("expected a {expected:?} spinor, got {got:?}")]
    VarianceMismatch { expected: Variance, got: Variance },
    #[error("no value assigned to generator {0}")]
    IncompleteAssignment(String),
    #[error("line {line}: {msg}")]
    Golden { line: usize, msg: String },
    #[error("apparatus indices must differ")]
    SameApparatus,
}

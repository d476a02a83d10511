//! Relation systems for braided SU_q(2) copies: intra-copy relations, the
//! R-matrix and epsilon tensors, cross-copy braiding and the spectator
//! rotation copy.

mod braid;
mod confluence;
mod orient;
mod system;
mod tensors;

pub use braid::{braid_pair, braid_relations, rotate_spinor, self_braid_rules};
pub use confluence::{check_confluence, random_word, ConfluenceReport};
pub use orient::orient;
pub use system::{make_system, CopyInfo, CopyKind, RelationSystem};
pub use tensors::{EpsilonTensor, RMatrix};

use thiserror::Error;

use crate::ncalg::NcError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error(transparent)]
    Rewrite(#[from] NcError),
    #[error("relations leave {0} without a unit pivot; cannot orient them into rules")]
    Unsolvable(String),
    #[error("relations force a linear dependency between canonical words: {0} = 0")]
    Overdetermined(String),
    #[error("the relation system has no rotation copy")]
    MissingRotation,
    #[error("no {kind} copy with index {index}")]
    UnknownCopy { kind: &'static str, index: usize },
    #[error("too many copies for the generator index space")]
    TooManyCopies,
}

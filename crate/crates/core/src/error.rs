use thiserror::Error;

use crate::scalar::Idem;

/// Errors raised across the crate.
///
/// Witness points are carried as formatted backend values so the error type
/// stays independent of the scalar backend.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("value lies on the null cone (zero divisor)")]
    NullCone,
    #[error("empty set has no D-supremum or D-infimum")]
    EmptySet,
    #[error("bound must be strictly positive in both components")]
    NonPositiveBound,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("component functional {0} is identically zero")]
    ConstantComponent(Idem),
    #[error("rectangles do not cover the bounding box; uncovered point ({0}, {1})")]
    NotACover(String, String),
    #[error("input point set is empty")]
    EmptyInput,
    #[error("set is not D-absorbing: 0 is not interior in component {0}")]
    NotAbsorbing(Idem),
    #[error("point is not a member of the {0} set")]
    Membership(String),
    #[error("functional is not dominated by the gauge on the subspace (component {0})")]
    Domination(Idem),
    #[error("basis vectors are linearly dependent in component {0}")]
    DegenerateBasis(Idem),
    #[error("sets meet in component {component}; witness {witness:?}")]
    NotDisjoint {
        component: Idem,
        witness: Vec<String>,
    },
    #[error("first set must be open with nonempty interior in each component")]
    NotOpen,
    #[error("hyperplane level has a zero component (zero divisor)")]
    ZeroDivisorLevel,
    #[error("functional vanishes identically in component {0}")]
    DegenerateFunctional(Idem),
    #[error("base point lies in the span of the direction vectors in component {0}")]
    DegenerateVariety(Idem),
    #[error("map family is empty")]
    EmptyFamily,
    #[error("map is not surjective in component {0}")]
    NotSurjective(Idem),
    #[error("map is not bijective in component {0}")]
    NotBijective(Idem),
    #[error("submodule is not the graph of a map in component {0}")]
    NotAGraph(Idem),
    #[error("unsupported representation: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

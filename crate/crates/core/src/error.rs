use thiserror::Error;

/// Errors across the whole pipeline, from word parsing to the norm-ball
/// constructions. CLI exit-code policy: parse/usage problems are exit 2,
/// mathematical failures exit 1; see the `thurston-fox-cli` crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown character {ch:?} at byte {pos}")]
    UnknownCharacter { ch: char, pos: usize },

    #[error("malformed exponent at byte {pos}: caret must be followed by an optional '-' and digits")]
    MalformedExponent { pos: usize },

    #[error("zero exponent at byte {pos}")]
    ZeroExponent { pos: usize },

    #[error("relator reduces to the empty word")]
    EmptyRelator,

    #[error("operation requires a presentation with first Betti number 1")]
    NotRankOne,

    #[error("operation requires a presentation with first Betti number 2")]
    NotRankTwo,

    #[error("convex hull of an empty point set")]
    EmptyInput,

    #[error("polytope of the zero element")]
    ZeroElement,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u8, right: u8 },

    #[error("Minkowski difference markings are inconsistent: vertex {vertex} of the difference meets both marked and unmarked vertices of the minuend")]
    InconsistentMarkings { vertex: String },

    #[error("Minkowski difference {lhs} - {rhs} does not exist")]
    DifferenceDoesNotExist { lhs: String, rhs: String },

    #[error("Fox construction cross-check failed: M(r_y) - M(x-1) and M(r_x) - M(y-1) are not translates")]
    FoxCrossCheckFailed,

    #[error("walk marking inconsistent: square at {square} touches both marked and unmarked hull vertices")]
    WalkMarkingInconsistent { square: String },

    #[error("walk produced no unit square inside its hull")]
    EmptyWalkPolytope,

    #[error("walk and Fox constructions disagree on the marked polytope")]
    PipelineDisagreement,

    #[error("seminorm is identically zero: the dual ball is the whole covector space")]
    DegenerateEverywhere,
}

pub type Result<T> = std::result::Result<T, Error>;

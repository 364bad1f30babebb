//! Marked polytopes of two-generator one-relator presentations.
//!
//! Given a cyclically reduced presentation ⟨x, y | r⟩, this crate computes
//! its marked polytope two independent ways — from the lattice walk traced
//! by the relator, and as a Minkowski difference of Fox-derivative Newton
//! polytopes — cross-checks the two, and queries the result: thickness
//! gives the Thurston norm of the associated 3-manifold, and covectors
//! pairing maximally with a marked vertex are exactly the fibered classes.
//!
//! Modules follow the pipeline:
//!
//! - [`fgword`]: words in F(x, y), parsing and Fox derivatives;
//! - [`groupring`]: exact arithmetic in ℤ[F], components, monomial tests;
//! - [`abelian`]: exponent sums, ψ onto H₁/torsion, Laurent images,
//!   Nielsen conversion to simple form;
//! - [`polytope`] and [`ball`]: exact marked polytopes, Minkowski sum and
//!   difference, thickness, dual norm balls;
//! - [`norm`]: the two constructions, agreement check, norm and fibered
//!   queries;
//! - [`equiv`] and [`symmetry`]: the bounded-search checker for the
//!   component-duality identity at opposite vertices;
//! - [`report`]: canonical JSON schemas for the CLI;
//! - [`random`]: seeded generators behind the self-test corpora.

pub mod abelian;
pub mod ball;
pub mod catalog;
pub mod equiv;
pub mod error;
pub mod fgword;
pub mod groupring;
pub mod norm;
pub mod polytope;
pub mod random;
pub mod report;
pub mod symmetry;

pub use abelian::{AbelianizationMap, LatticePoint, LaurentElt, NielsenMove, Presentation, Rank};
pub use ball::{BallFacet, BallShape, NormBall};
pub use equiv::{equiv_monomial_translate, validate_certificate, Certificate, EquivVerdict};
pub use error::{Error, Result};
pub use fgword::{Gen, Letter, Word};
pub use groupring::RingElt;
pub use norm::{
    compute, fibered, polytope_via_fox, polytope_via_walk, thurston_norm, unit_ball,
    FiberedVerdict, Method, NormData, Provenance, UnitBall, WalkTrace,
};
pub use polytope::{
    marked_polytope_of, newton_polytope, newton_polytope_marked, Covector, MarkedPolytope, QPoint,
};
pub use symmetry::{check_conjecture, opposite_pairs, ConjectureReport, OppositePairing};

//! Relators of well-known presentations, handy for examples and tests.

/// Relator of a (2,1)-presentation of the exterior of Dunfield's
/// 2-component link; 42 letters, both exponent sums zero.
pub const DUNFIELD: &str = "x^2yx^-1yx^2yx^-1y^-3x^-1yx^2yx^-1yxy^-1x^-2y^-1xy^-1x^-2y^-1xy^3xy^-1x^-2y^-1xy^-1x^-1y";

/// Trefoil-knot group relator xyx·(yxy)⁻¹.
pub const TREFOIL: &str = "xyxy^-1x^-1y^-1";

/// Commutator relator; presents ℤ², the torus-bundle base case.
pub const COMMUTATOR: &str = "xyx^-1y^-1";

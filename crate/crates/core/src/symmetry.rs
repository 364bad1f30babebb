//! Desk-scale checker for the duality symmetry of Fox-derivative
//! components at opposite vertices: pairs vertices of P(r_x) and P(r_y)
//! through antipodal normal cones and tests, with bounded rewriting, the
//! identity (r_y)^v ≡ ±involution((r_x)^w).

use serde::{Deserialize, Serialize};

use crate::abelian::{laurent_image, Presentation};
use crate::equiv::{equiv_monomial_translate, EquivVerdict};
use crate::error::{Error, Result};
use crate::fgword::Gen;
use crate::groupring::RingElt;
use crate::polytope::{MarkedPolytope, QPoint};

/// The vertices of a partner polytope opposite to one vertex `v`:
/// some covector strictly maximizes at `v` and strictly minimizes at each
/// listed `w`. Generically there is exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppositeEntry {
    pub v: QPoint,
    pub opposites: Vec<QPoint>,
}

/// Opposite-vertex pairing between two polytopes, one entry per vertex of
/// the first polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppositePairing {
    pub entries: Vec<OppositeEntry>,
}

impl OppositePairing {
    /// True when every vertex has exactly one opposite.
    pub fn all_unique(&self) -> bool {
        self.entries.iter().all(|e| e.opposites.len() == 1)
    }

    pub fn unique_pairs(&self) -> Vec<(QPoint, QPoint)> {
        self.entries
            .iter()
            .filter(|e| e.opposites.len() == 1)
            .map(|e| (e.v, e.opposites[0]))
            .collect()
    }
}

/// Constraints c with {φ : c·φ > 0} cutting out the open cone of covectors
/// that strictly maximize at vertex `i`. Empty for a point polytope (every
/// covector qualifies vacuously).
fn max_cone_constraints(p: &MarkedPolytope, i: usize) -> Vec<(i64, i64)> {
    let vs = p.vertices();
    let n = vs.len();
    let diff = |a: &QPoint, b: &QPoint| {
        let q = a.sub(b);
        let QPoint::Two(x, y) = q else { unreachable!() };
        (x, y)
    };
    match n {
        1 => Vec::new(),
        2 => vec![diff(&vs[i], &vs[1 - i])],
        _ => vec![
            diff(&vs[i], &vs[(i + n - 1) % n]),
            diff(&vs[i], &vs[(i + 1) % n]),
        ],
    }
}

/// Whether the system {c·d > 0 for all c} admits a solution. Candidate
/// directions are the constraint vectors themselves and sums of boundary
/// directions of pairs of constraints; for open sectors in the plane this
/// candidate set is exhaustive.
fn strict_cone_nonempty(constraints: &[(i64, i64)]) -> bool {
    if constraints.is_empty() {
        return true;
    }
    let mut candidates: Vec<(i64, i64)> = constraints.to_vec();
    let mut boundary = Vec::with_capacity(2 * constraints.len());
    for &(cx, cy) in constraints {
        boundary.push((-cy, cx));
        boundary.push((cy, -cx));
    }
    for i in 0..boundary.len() {
        for j in i + 1..boundary.len() {
            let d = (boundary[i].0 + boundary[j].0, boundary[i].1 + boundary[j].1);
            if d != (0, 0) {
                candidates.push(d);
            }
        }
    }
    candidates
        .iter()
        .any(|&(dx, dy)| constraints.iter().all(|&(cx, cy)| cx * dx + cy * dy > 0))
}

/// Pairs each vertex v of `p` with the vertices w of `q` such that some
/// covector strictly maximizes at v over `p` and strictly minimizes at w
/// over `q`; computed exactly by intersecting the normal cone of v with
/// the antipodal normal cone of w.
pub fn opposite_pairs_between(p: &MarkedPolytope, q: &MarkedPolytope) -> OppositePairing {
    let entries = (0..p.num_vertices())
        .map(|i| {
            let cone_v = max_cone_constraints(p, i);
            let opposites = (0..q.num_vertices())
                .filter(|&j| {
                    // Strict minimization at w is strict maximization of −φ,
                    // so negate w's constraints.
                    let mut combined = cone_v.clone();
                    combined.extend(
                        max_cone_constraints(q, j).iter().map(|&(x, y)| (-x, -y)),
                    );
                    strict_cone_nonempty(&combined)
                })
                .map(|j| q.vertices()[j])
                .collect();
            OppositeEntry { v: p.vertices()[i], opposites }
        })
        .collect();
    OppositePairing { entries }
}

fn newton_of_derivative(p: &Presentation, gen: Gen) -> Result<MarkedPolytope> {
    let psi = p.psi();
    let f = p.relator().fox_derivative(gen);
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let image = laurent_image(&f, &psi);
    crate::polytope::newton_polytope(&image)
}

/// Opposite-vertex pairing from P(r_x) to P(r_y).
pub fn opposite_pairs(p: &Presentation) -> Result<OppositePairing> {
    if p.betti() != 2 {
        return Err(Error::NotRankTwo);
    }
    let px = newton_of_derivative(p, Gen::X)?;
    let py = newton_of_derivative(p, Gen::Y)?;
    Ok(opposite_pairs_between(&px, &py))
}

/// Which reading of the identity a check exercised: the conjectured
/// cross-polytope pairing (r_y)^v against ±(r_x)^w-bar, or the worked
/// within-P(r_x) chain (r_x)^v against −(r_x)^w-bar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairVariant {
    Conjecture,
    WithinRx,
}

impl PairVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            PairVariant::Conjecture => "conjecture",
            PairVariant::WithinRx => "within-rx",
        }
    }
}

/// Outcome of one pair/sign combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub variant: PairVariant,
    pub v: QPoint,
    pub w: QPoint,
    pub sign: i8,
    pub verdict: EquivVerdict,
    pub note: Option<String>,
}

/// Full output of the checker: both pairings and the per-pair verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub cross_pairing: OppositePairing,
    pub within_pairing: OppositePairing,
    pub checks: Vec<PairCheck>,
}

impl ConjectureReport {
    pub fn verified_count(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict.is_verified()).count()
    }
}

/// Runs the symmetry checker on a b₁ = 2 presentation.
///
/// `boundary_components` fixes the sign (−1)^{b₀−1}; when absent both
/// signs are tried and reported. Each opposite pair (v, w) is tested with
/// the cross reading and, independently, the within-P(r_x) reading; every
/// `Verified` verdict carries a certificate already replayed by ring
/// arithmetic.
pub fn check_conjecture(
    p: &Presentation,
    boundary_components: Option<u8>,
    depth: usize,
) -> Result<ConjectureReport> {
    if p.betti() != 2 {
        return Err(Error::NotRankTwo);
    }
    let psi = p.psi();
    let r = p.relator();
    let rx = r.fox_derivative(Gen::X);
    let ry = r.fox_derivative(Gen::Y);
    let px = newton_of_derivative(p, Gen::X)?;
    let py = newton_of_derivative(p, Gen::Y)?;

    let cross_pairing = opposite_pairs_between(&px, &py);
    let within_pairing = opposite_pairs_between(&px, &px);

    let signs: Vec<i8> = match boundary_components {
        Some(1) => vec![1],
        Some(_) => vec![-1],
        None => vec![1, -1],
    };

    let lattice_of = |pt: &QPoint| {
        let QPoint::Two(dx, dy) = *pt else { unreachable!() };
        debug_assert!(dx % 2 == 0 && dy % 2 == 0);
        crate::abelian::LatticePoint::rank2(dx / 2, dy / 2)
    };

    let mut checks = Vec::new();
    let mut run_pair = |variant: PairVariant, v: &QPoint, w: &QPoint, lhs: &RingElt, rhs_src: &RingElt| {
        let lhs_comp = lhs.component(&lattice_of(v), &psi);
        let rhs_comp = rhs_src.component(&lattice_of(w), &psi);
        for &sign in &signs {
            if lhs_comp.is_zero() || rhs_comp.is_zero() {
                checks.push(PairCheck {
                    variant,
                    v: *v,
                    w: *w,
                    sign,
                    verdict: EquivVerdict::Unresolved,
                    note: Some("a component is zero".into()),
                });
                continue;
            }
            let target = rhs_comp.involution().scale(sign as i64);
            let verdict = equiv_monomial_translate(&lhs_comp, &target, depth, r);
            checks.push(PairCheck {
                variant,
                v: *v,
                w: *w,
                sign,
                verdict,
                note: None,
            });
        }
    };

    for entry in &cross_pairing.entries {
        for w in &entry.opposites {
            run_pair(PairVariant::Conjecture, &entry.v, w, &ry, &rx);
        }
    }
    for entry in &within_pairing.entries {
        for w in &entry.opposites {
            run_pair(PairVariant::WithinRx, &entry.v, w, &rx, &rx);
        }
    }

    Ok(ConjectureReport { cross_pairing, within_pairing, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::Rank;
    use crate::catalog;
    use crate::fgword::Word;

    fn p2(x: i64, y: i64) -> QPoint {
        QPoint::Two(2 * x, 2 * y)
    }

    fn hull(points: &[(i64, i64)]) -> MarkedPolytope {
        let pts: Vec<QPoint> = points.iter().map(|&(x, y)| p2(x, y)).collect();
        MarkedPolytope::hull(Rank::Two, &pts).unwrap()
    }

    #[test]
    fn square_pairs_with_antipodes() {
        let sq = hull(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let pairing = opposite_pairs_between(&sq, &sq);
        assert!(pairing.all_unique());
        for (v, w) in pairing.unique_pairs() {
            assert_eq!(v.add(&w), p2(1, 1));
        }
    }

    #[test]
    fn parallel_segments_pair_endpoint_to_opposite_endpoint() {
        let a = hull(&[(0, 0), (2, 2)]);
        let b = hull(&[(1, 1), (3, 3)]);
        let pairing = opposite_pairs_between(&a, &b);
        assert!(pairing.all_unique());
        let pairs = pairing.unique_pairs();
        assert!(pairs.contains(&(p2(0, 0), p2(3, 3))));
        assert!(pairs.contains(&(p2(2, 2), p2(1, 1))));
    }

    #[test]
    fn point_pairs_with_everything() {
        let pt = hull(&[(5, 5)]);
        let tri = hull(&[(0, 0), (2, 0), (0, 2)]);
        let pairing = opposite_pairs_between(&pt, &tri);
        assert_eq!(pairing.entries.len(), 1);
        assert_eq!(pairing.entries[0].opposites.len(), 3);
    }

    #[test]
    fn pairing_transposes() {
        let a = hull(&[(0, 0), (3, 1), (2, 4), (-1, 2)]);
        let b = hull(&[(0, 0), (2, 0), (1, 3)]);
        let ab = opposite_pairs_between(&a, &b);
        let ba = opposite_pairs_between(&b, &a);
        for entry in &ab.entries {
            for w in &entry.opposites {
                let back = ba.entries.iter().find(|e| e.v == *w).unwrap();
                assert!(back.opposites.contains(&entry.v));
            }
        }
    }

    #[test]
    fn dunfield_within_pairs_are_antipodal() {
        let p = Presentation::new(Word::parse(catalog::DUNFIELD).unwrap()).unwrap();
        let px = newton_of_derivative(&p, Gen::X).unwrap();
        // P(r_x) is the parallelogram (0,1),(2,3),(2,1),(0,-1).
        assert_eq!(px.num_vertices(), 4);
        let pairing = opposite_pairs_between(&px, &px);
        assert!(pairing.all_unique());
        let pairs = pairing.unique_pairs();
        assert!(pairs.contains(&(p2(0, 1), p2(2, 1))));
        assert!(pairs.contains(&(p2(2, 3), p2(0, -1))));
    }

    #[test]
    fn checker_requires_rank_two() {
        let p = Presentation::new(Word::parse(catalog::TREFOIL).unwrap()).unwrap();
        assert!(matches!(check_conjecture(&p, Some(2), 0), Err(Error::NotRankTwo)));
    }

    #[test]
    fn depth_zero_mismatch_is_unresolved() {
        let p = Presentation::new(Word::parse(catalog::DUNFIELD).unwrap()).unwrap();
        let report = check_conjecture(&p, Some(2), 0).unwrap();
        assert!(!report.checks.is_empty());
        for check in &report.checks {
            if let EquivVerdict::Verified(cert) = &check.verdict {
                assert!(cert.rewrites.is_empty());
            }
        }
    }
}

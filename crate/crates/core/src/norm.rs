//! The two constructions of the marked polytope of a presentation — the
//! lattice walk and the Fox-calculus Minkowski difference — their agreement
//! check, Thurston-norm evaluation and fibered-class detection.

use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::abelian::{NielsenMove, Presentation, Rank};
use crate::ball::{dual_ball, NormBall};
use crate::error::{Error, Result};
use crate::fgword::{Gen, Word};
use crate::groupring::RingElt;
use crate::polytope::{marked_polytope_of, Covector, MarkedPolytope, QPoint};

/// The lattice path traced by reading the relator: starting at the origin,
/// x steps +(1,0), x⁻¹ steps −(1,0), y steps +(0,1), y⁻¹ steps −(0,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTrace {
    pub points: Vec<(i64, i64)>,
}

impl WalkTrace {
    pub fn new(r: &Word) -> WalkTrace {
        let mut points = Vec::with_capacity(r.len() + 1);
        let mut pos = (0i64, 0i64);
        points.push(pos);
        for l in r.letters() {
            match l.gen {
                Gen::X => pos.0 += l.sign as i64,
                Gen::Y => pos.1 += l.sign as i64,
            }
            points.push(pos);
        }
        WalkTrace { points }
    }

    /// The walk closes up iff both exponent sums vanish.
    pub fn is_closed(&self) -> bool {
        self.points.first() == self.points.last()
    }
}

/// How a marked polytope in a [`NormData`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Walk,
    Fox,
    BothAgree,
    /// b₁ = 1 input that was first converted to a simple presentation.
    FoxViaNielsen,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Walk => "walk",
            Provenance::Fox => "fox",
            Provenance::BothAgree => "both-agree",
            Provenance::FoxViaNielsen => "fox-via-nielsen",
        }
    }
}

/// Which construction(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Walk,
    Fox,
    #[default]
    Both,
}

/// A computed marked polytope together with everything needed to answer
/// norm and fiberedness queries against it.
#[derive(Debug, Clone)]
pub struct NormData {
    pub presentation: Presentation,
    pub betti: u8,
    pub polytope: MarkedPolytope,
    pub provenance: Provenance,
    /// The Nielsen trace and resulting simple presentation, for b₁ = 1
    /// inputs that needed conversion.
    pub nielsen: Option<(Presentation, Vec<NielsenMove>)>,
}

/// The walk construction, defined for b₁ = 2 only: hull the trace, mark
/// the hull vertices the walk passes through exactly once, then take the
/// midpoints of unit squares inside the hull that touch a hull vertex.
pub fn polytope_via_walk(p: &Presentation) -> Result<MarkedPolytope> {
    if p.betti() != 2 {
        return Err(Error::NotRankTwo);
    }
    let trace = WalkTrace::new(p.relator());
    debug_assert!(trace.is_closed());

    // Cyclic visit counts: start and end of the trace are the same visit.
    let mut multiplicity: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &pt in &trace.points[..trace.points.len() - 1] {
        *multiplicity.entry(pt).or_insert(0) += 1;
    }

    let hull_pts: Vec<QPoint> = multiplicity
        .keys()
        .map(|&(x, y)| QPoint::Two(2 * x, 2 * y))
        .collect();
    let hull = MarkedPolytope::hull(Rank::Two, &hull_pts)?;
    let vertex_marked: BTreeMap<QPoint, bool> = hull
        .vertices()
        .iter()
        .map(|&v| {
            let QPoint::Two(dx, dy) = v else { unreachable!() };
            (v, multiplicity[&(dx / 2, dy / 2)] == 1)
        })
        .collect();

    let xs: Vec<i64> = trace.points.iter().map(|p| p.0).collect();
    let ys: Vec<i64> = trace.points.iter().map(|p| p.1).collect();
    let (min_x, max_x) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (min_y, max_y) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());

    let mut midpoints: Vec<(QPoint, bool)> = Vec::new();
    for a in min_x..max_x {
        for b in min_y..max_y {
            let corners = [
                QPoint::Two(2 * a, 2 * b),
                QPoint::Two(2 * (a + 1), 2 * b),
                QPoint::Two(2 * (a + 1), 2 * (b + 1)),
                QPoint::Two(2 * a, 2 * (b + 1)),
            ];
            if !corners.iter().all(|c| hull.contains(c)) {
                continue;
            }
            let incident: Vec<bool> = corners
                .iter()
                .filter_map(|c| vertex_marked.get(c).copied())
                .collect();
            if incident.is_empty() {
                continue;
            }
            let all = incident.iter().all(|&m| m);
            let any = incident.iter().any(|&m| m);
            if any != all {
                return Err(Error::WalkMarkingInconsistent {
                    square: format!("[{a},{}]x[{b},{}]", a + 1, b + 1),
                });
            }
            midpoints.push((QPoint::Two(2 * a + 1, 2 * b + 1), all));
        }
    }
    if midpoints.is_empty() {
        return Err(Error::EmptyWalkPolytope);
    }
    MarkedPolytope::hull_with_marks(Rank::Two, &midpoints)
}

fn generator_minus_one(gen: Gen) -> RingElt {
    RingElt::from_terms(vec![(1, Word::single(gen, 1)), (-1, Word::empty())])
}

/// The Fox-calculus construction. For b₁ = 2 both differences
/// M(r_y) − M(x−1) and M(r_x) − M(y−1) are computed and cross-checked; for
/// b₁ = 1 the presentation is first converted to simple form when needed
/// and the difference is taken in the rank-1 lattice.
pub fn polytope_via_fox(p: &Presentation) -> Result<NormData> {
    let betti = p.betti();
    if betti == 2 {
        let psi = p.psi();
        let r = p.relator();
        let m_ry = marked_polytope_of(&r.fox_derivative(Gen::Y), &psi)?;
        let m_rx = marked_polytope_of(&r.fox_derivative(Gen::X), &psi)?;
        let m_x1 = marked_polytope_of(&generator_minus_one(Gen::X), &psi)?;
        let m_y1 = marked_polytope_of(&generator_minus_one(Gen::Y), &psi)?;
        let d1 = m_ry.minkowski_diff(&m_x1)?.ok_or(Error::DifferenceDoesNotExist {
            lhs: "M(r_y)".into(),
            rhs: "M(x-1)".into(),
        })?;
        let d2 = m_rx.minkowski_diff(&m_y1)?.ok_or(Error::DifferenceDoesNotExist {
            lhs: "M(r_x)".into(),
            rhs: "M(y-1)".into(),
        })?;
        if !d1.translation_equiv(&d2) {
            return Err(Error::FoxCrossCheckFailed);
        }
        return Ok(NormData {
            presentation: p.clone(),
            betti,
            polytope: d1,
            provenance: Provenance::Fox,
            nielsen: None,
        });
    }
    let (simple, moves) = if p.is_simple() {
        (p.clone(), Vec::new())
    } else {
        p.to_simple()?
    };
    let psi = simple.psi();
    let m_ry = marked_polytope_of(&simple.relator().fox_derivative(Gen::Y), &psi)?;
    let m_x1 = marked_polytope_of(&generator_minus_one(Gen::X), &psi)?;
    let d = m_ry.minkowski_diff(&m_x1)?.ok_or(Error::DifferenceDoesNotExist {
        lhs: "M(r_y)".into(),
        rhs: "M(x-1)".into(),
    })?;
    let converted = !moves.is_empty();
    Ok(NormData {
        presentation: p.clone(),
        betti,
        polytope: d,
        provenance: if converted { Provenance::FoxViaNielsen } else { Provenance::Fox },
        nielsen: if converted { Some((simple, moves)) } else { None },
    })
}

/// Runs the requested construction(s). With [`Method::Both`] on a b₁ = 2
/// presentation the walk and Fox polytopes are compared up to translation
/// (markings included) and the walk polytope is returned.
pub fn compute(p: &Presentation, method: Method) -> Result<NormData> {
    match (method, p.betti()) {
        (Method::Walk, _) => {
            let polytope = polytope_via_walk(p)?;
            Ok(NormData {
                presentation: p.clone(),
                betti: 2,
                polytope,
                provenance: Provenance::Walk,
                nielsen: None,
            })
        }
        (Method::Fox, _) | (Method::Both, 1) => polytope_via_fox(p),
        (Method::Both, _) => {
            let walk = polytope_via_walk(p)?;
            let fox = polytope_via_fox(p)?;
            if !walk.translation_equiv(&fox.polytope) {
                return Err(Error::PipelineDisagreement);
            }
            Ok(NormData {
                polytope: walk,
                provenance: Provenance::BothAgree,
                ..fox
            })
        }
    }
}

fn check_covector_rank(betti: u8, phi: &Covector) -> Result<()> {
    if phi.rank().as_u8() != betti {
        return Err(Error::RankMismatch { left: phi.rank().as_u8(), right: betti });
    }
    Ok(())
}

impl NormData {
    /// Thurston norm of φ: the thickness of the marked polytope in the
    /// φ-direction. Integral for integral φ.
    pub fn norm(&self, phi: &Covector) -> Result<Rational64> {
        check_covector_rank(self.betti, phi)?;
        Ok(self.polytope.thickness(phi))
    }

    /// Fiberedness of φ by the marked-vertex criterion.
    pub fn fibered(&self, phi: &Covector) -> Result<FiberedVerdict> {
        check_covector_rank(self.betti, phi)?;
        if phi.is_zero() {
            return Ok(FiberedVerdict::IndeterminateTie);
        }
        Ok(match self.polytope.pairs_maximally(phi) {
            None => FiberedVerdict::IndeterminateTie,
            Some((i, v)) => {
                if self.polytope.is_marked(i) {
                    FiberedVerdict::Fibered { vertex: v }
                } else {
                    FiberedVerdict::NotFibered { vertex: v }
                }
            }
        })
    }

    /// The unit ball of the norm, with each top face carrying the vertex
    /// it pairs with; the open cone over a face whose vertex is marked is
    /// exactly the set of fibered covectors.
    pub fn unit_ball(&self) -> Result<UnitBall> {
        if self.polytope.is_point() {
            return Ok(UnitBall::Everything { fibered_everywhere: self.polytope.is_marked(0) });
        }
        Ok(UnitBall::Ball(dual_ball(&self.polytope)?))
    }
}

/// Verdict of the fibered-class criterion. A tie (φ on a cone wall, or
/// φ = 0) is genuinely undetermined by the strict-pairing criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberedVerdict {
    Fibered { vertex: QPoint },
    NotFibered { vertex: QPoint },
    IndeterminateTie,
}

impl FiberedVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            FiberedVerdict::Fibered { .. } => "fibered",
            FiberedVerdict::NotFibered { .. } => "not-fibered",
            FiberedVerdict::IndeterminateTie => "indeterminate-tie",
        }
    }
}

/// Unit ball of the norm; the norm of a point polytope is identically zero
/// and its "ball" is the whole covector space.
#[derive(Debug, Clone, PartialEq)]
pub enum UnitBall {
    Everything { fibered_everywhere: bool },
    Ball(NormBall),
}

/// Thurston norm through the Fox pipeline.
pub fn thurston_norm(p: &Presentation, phi: &Covector) -> Result<Rational64> {
    polytope_via_fox(p)?.norm(phi)
}

/// Fibered verdict through the Fox pipeline.
pub fn fibered(p: &Presentation, phi: &Covector) -> Result<FiberedVerdict> {
    polytope_via_fox(p)?.fibered(phi)
}

/// Unit ball through the Fox pipeline.
pub fn unit_ball(p: &Presentation) -> Result<UnitBall> {
    polytope_via_fox(p)?.unit_ball()
}

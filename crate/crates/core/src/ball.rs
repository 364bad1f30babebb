//! The unit ball {φ : th_P(φ) ≤ 1} of the thickness seminorm of a marked
//! polytope, as an exact dual polyhedron with facets tagged by the source
//! vertices they pair with.

use num_rational::Rational64;

use crate::abelian::Rank;
use crate::error::{Error, Result};
use crate::polytope::{Covector, MarkedPolytope, QPoint};

/// A rational vector in the covector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatVec {
    One(Rational64),
    Two(Rational64, Rational64),
}

impl RatVec {
    pub fn coords(&self) -> Vec<Rational64> {
        match *self {
            RatVec::One(a) => vec![a],
            RatVec::Two(a, b) => vec![a, b],
        }
    }

    fn pair(&self, phi: &Covector) -> Rational64 {
        match (self, phi) {
            (RatVec::One(a), Covector::One(x)) => *a * Rational64::from_integer(*x),
            (RatVec::Two(a, b), Covector::Two(x, y)) => {
                *a * Rational64::from_integer(*x) + *b * Rational64::from_integer(*y)
            }
            _ => panic!("rank mismatch"),
        }
    }
}

/// One top-dimensional face of the ball: the covectors φ with ⟨k, φ⟩ = 1
/// for a vertex k of P + (−P). Such φ pair maximally with a single vertex
/// of P, recorded here together with its mark.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallFacet {
    /// The vertex k of P + (−P) defining the constraint ⟨k, φ⟩ ≤ 1.
    pub constraint: RatVec,
    /// The vertex of P that covectors in this face's relative interior
    /// pair maximally with.
    pub pairs_with: QPoint,
    /// Whether that vertex is marked in P.
    pub marked: bool,
}

/// Shape of the unit ball. A point polytope has thickness identically zero
/// and is reported as [`Error::DegenerateEverywhere`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallShape {
    /// Rank 1: the interval [−1/t, 1/t].
    Interval,
    /// Rank 2, P a segment: an unbounded strip between two parallel lines.
    Strip,
    /// Rank 2, P full-dimensional: a bounded polygon.
    Polygon,
}

/// The unit ball of th_P with tagged facets. For the polygon shape,
/// `vertices[i]` is the corner shared by `facets[i]` and `facets[i+1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormBall {
    pub rank: Rank,
    pub shape: BallShape,
    pub facets: Vec<BallFacet>,
    pub vertices: Vec<RatVec>,
}

impl NormBall {
    /// The seminorm recovered from the ball's facet data:
    /// th_P(φ) = max over facets of ⟨k, φ⟩.
    pub fn norm_of(&self, phi: &Covector) -> Rational64 {
        self.facets
            .iter()
            .map(|f| f.constraint.pair(phi))
            .max()
            .unwrap_or_else(|| Rational64::from_integer(0))
    }

    /// The facet whose cone strictly contains φ, i.e. whose constraint
    /// vector uniquely maximizes ⟨k, φ⟩; `None` when φ lies on a cone wall.
    pub fn facet_pairing(&self, phi: &Covector) -> Option<&BallFacet> {
        let vals: Vec<Rational64> =
            self.facets.iter().map(|f| f.constraint.pair(phi)).collect();
        let max = vals.iter().max()?;
        let mut winners = vals.iter().enumerate().filter(|(_, v)| *v == max);
        let (i, _) = winners.next()?;
        if winners.next().is_some() {
            return None;
        }
        Some(&self.facets[i])
    }
}

fn half(doubled: i64) -> Rational64 {
    Rational64::new(doubled, 2)
}

/// Finds the unique vertex pair (v, w) of P with v − w = k and returns v
/// with its mark.
fn decompose(p: &MarkedPolytope, k: &QPoint) -> (QPoint, bool) {
    for (i, v) in p.vertices().iter().enumerate() {
        for w in p.vertices() {
            if v.sub(w) == *k {
                return (*v, p.is_marked(i));
            }
        }
    }
    panic!("vertex of P + (−P) does not decompose");
}

/// The unit ball {φ : th_P(φ) ≤ 1} of the thickness seminorm, the dual of
/// the origin-centered symmetrization doubled. Errors with
/// `DegenerateEverywhere` when P is a point, in which case the ball is the
/// whole covector space.
pub fn dual_ball(p: &MarkedPolytope) -> Result<NormBall> {
    if p.is_point() {
        return Err(Error::DegenerateEverywhere);
    }
    match p.rank() {
        Rank::One => {
            let (QPoint::One(lo), QPoint::One(hi)) =
                (p.vertices()[0], *p.vertices().last().unwrap())
            else {
                unreachable!()
            };
            let t = half(hi - lo);
            let radius = t.recip();
            let facets = vec![
                BallFacet {
                    constraint: RatVec::One(-t),
                    pairs_with: QPoint::One(lo),
                    marked: p.is_marked(0),
                },
                BallFacet {
                    constraint: RatVec::One(t),
                    pairs_with: QPoint::One(hi),
                    marked: p.is_marked(p.num_vertices() - 1),
                },
            ];
            Ok(NormBall {
                rank: Rank::One,
                shape: BallShape::Interval,
                facets,
                vertices: vec![RatVec::One(-radius), RatVec::One(radius)],
            })
        }
        Rank::Two => {
            let k = p.unmarked().minkowski_sum(&p.unmarked().negate())?;
            let kv = k.vertices();
            let facets: Vec<BallFacet> = kv
                .iter()
                .map(|kvert| {
                    let (v, marked) = decompose(p, kvert);
                    let QPoint::Two(a, b) = *kvert else { unreachable!() };
                    BallFacet {
                        constraint: RatVec::Two(half(a), half(b)),
                        pairs_with: v,
                        marked,
                    }
                })
                .collect();
            if kv.len() == 2 {
                return Ok(NormBall {
                    rank: Rank::Two,
                    shape: BallShape::Strip,
                    facets,
                    vertices: Vec::new(),
                });
            }
            // Ball corners: ⟨k_i, φ⟩ = ⟨k_{i+1}, φ⟩ = 1, i.e. in doubled
            // coordinates a·φ_x + b·φ_y = 2 for consecutive vertices of K.
            let m = kv.len();
            let mut vertices = Vec::with_capacity(m);
            for i in 0..m {
                let QPoint::Two(a1, b1) = kv[i] else { unreachable!() };
                let QPoint::Two(a2, b2) = kv[(i + 1) % m] else { unreachable!() };
                let det = a1 * b2 - a2 * b1;
                assert!(det != 0, "consecutive ball constraints are independent");
                vertices.push(RatVec::Two(
                    Rational64::new(2 * (b2 - b1), det),
                    Rational64::new(2 * (a1 - a2), det),
                ));
            }
            Ok(NormBall {
                rank: Rank::Two,
                shape: BallShape::Polygon,
                facets,
                vertices,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::MarkedPolytope;

    fn p2(x: i64, y: i64) -> QPoint {
        QPoint::Two(2 * x, 2 * y)
    }

    #[test]
    fn segment_gives_strip() {
        let seg =
            MarkedPolytope::hull(Rank::Two, &[p2(-1, 0), p2(1, 0)]).unwrap();
        let ball = dual_ball(&seg).unwrap();
        assert_eq!(ball.shape, BallShape::Strip);
        assert_eq!(ball.facets.len(), 2);
        // |φ_1| ≤ 1/2 along the segment direction, free in φ_2.
        assert_eq!(ball.norm_of(&Covector::Two(1, 0)), 2.into());
        assert_eq!(ball.norm_of(&Covector::Two(0, 1)), 0.into());
    }

    #[test]
    fn square_ball_is_diamond() {
        let square = MarkedPolytope::hull(
            Rank::Two,
            &[p2(-1, -1), p2(1, -1), p2(1, 1), p2(-1, 1)],
        )
        .unwrap();
        let ball = dual_ball(&square).unwrap();
        assert_eq!(ball.shape, BallShape::Polygon);
        // th(φ) = 2|φ_1| + 2|φ_2|, so the ball has corners (±1/2, 0), (0, ±1/2).
        let mut corners: Vec<Vec<Rational64>> =
            ball.vertices.iter().map(|v| v.coords()).collect();
        corners.sort();
        let h = Rational64::new(1, 2);
        let z = Rational64::from_integer(0);
        let mut expected = vec![
            vec![h, z],
            vec![-h, z],
            vec![z, h],
            vec![z, -h],
        ];
        expected.sort();
        assert_eq!(corners, expected);
    }

    #[test]
    fn point_is_degenerate() {
        let point = MarkedPolytope::hull(Rank::Two, &[p2(3, 4)]).unwrap();
        assert_eq!(dual_ball(&point), Err(Error::DegenerateEverywhere));
    }

    #[test]
    fn ball_support_recovers_thickness() {
        let p = MarkedPolytope::hull(
            Rank::Two,
            &[p2(0, 1), p2(2, 3), p2(2, 1), p2(0, -1)],
        )
        .unwrap();
        let ball = dual_ball(&p).unwrap();
        for phi in [
            Covector::Two(1, 0),
            Covector::Two(0, 1),
            Covector::Two(3, -2),
            Covector::Two(-5, 7),
        ] {
            assert_eq!(ball.norm_of(&phi), p.thickness(&phi));
        }
    }

    #[test]
    fn facet_pairing_matches_vertex_pairing() {
        let p = MarkedPolytope::hull(
            Rank::Two,
            &[p2(0, 0), p2(3, 1), p2(2, 4)],
        )
        .unwrap();
        let ball = dual_ball(&p).unwrap();
        for x in -5..=5i64 {
            for y in -5..=5i64 {
                let phi = Covector::Two(x, y);
                if phi.is_zero() {
                    continue;
                }
                if let Some(facet) = ball.facet_pairing(&phi) {
                    let (_, v) = p.pairs_maximally(&phi).expect("untied over P");
                    assert_eq!(facet.pairs_with, v);
                }
            }
        }
    }

    #[test]
    fn interval_ball() {
        let seg =
            MarkedPolytope::hull(Rank::One, &[QPoint::One(0), QPoint::One(4)]).unwrap();
        let ball = dual_ball(&seg).unwrap();
        assert_eq!(ball.shape, BallShape::Interval);
        assert_eq!(
            ball.vertices,
            vec![
                RatVec::One(Rational64::new(-1, 2)),
                RatVec::One(Rational64::new(1, 2))
            ]
        );
        assert_eq!(ball.norm_of(&Covector::One(1)), 2.into());
    }
}

//! Exact marked lattice polytopes in rank 1 and 2: convex hulls, marked
//! Minkowski sum and difference, the thickness seminorm, symmetrization
//! and translation equivalence.
//!
//! All coordinates are half-integers stored doubled as `i64`, so the walk
//! construction's unit-square midpoints and the integral Newton polytopes
//! share one exact representation.

use num_rational::Rational64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::{laurent_image, AbelianizationMap, LatticePoint, LaurentElt, Rank};
use crate::error::{Error, Result};
use crate::groupring::RingElt;

/// A point with half-integer coordinates, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QPoint {
    One(i64),
    Two(i64, i64),
}

impl QPoint {
    pub fn rank(&self) -> Rank {
        match self {
            QPoint::One(_) => Rank::One,
            QPoint::Two(..) => Rank::Two,
        }
    }

    /// Embeds a lattice point (doubling the stored coordinates).
    pub fn from_lattice(p: &LatticePoint) -> QPoint {
        match *p {
            LatticePoint::One(t) => QPoint::One(2 * t),
            LatticePoint::Two(a, b) => QPoint::Two(2 * a, 2 * b),
        }
    }

    pub fn add(&self, other: &QPoint) -> QPoint {
        match (self, other) {
            (QPoint::One(a), QPoint::One(b)) => QPoint::One(a + b),
            (QPoint::Two(a, b), QPoint::Two(c, d)) => QPoint::Two(a + c, b + d),
            _ => panic!("point rank mismatch"),
        }
    }

    pub fn sub(&self, other: &QPoint) -> QPoint {
        match (self, other) {
            (QPoint::One(a), QPoint::One(b)) => QPoint::One(a - b),
            (QPoint::Two(a, b), QPoint::Two(c, d)) => QPoint::Two(a - c, b - d),
            _ => panic!("point rank mismatch"),
        }
    }

    pub fn negate(&self) -> QPoint {
        match *self {
            QPoint::One(a) => QPoint::One(-a),
            QPoint::Two(a, b) => QPoint::Two(-a, -b),
        }
    }

    pub fn scale(&self, k: i64) -> QPoint {
        match *self {
            QPoint::One(a) => QPoint::One(k * a),
            QPoint::Two(a, b) => QPoint::Two(k * a, k * b),
        }
    }

    /// Exact rational coordinates.
    pub fn coords(&self) -> Vec<Rational64> {
        match *self {
            QPoint::One(a) => vec![Rational64::new(a, 2)],
            QPoint::Two(a, b) => vec![Rational64::new(a, 2), Rational64::new(b, 2)],
        }
    }
}

impl std::fmt::Display for QPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt1 = |v: i64| {
            if v % 2 == 0 {
                format!("{}", v / 2)
            } else {
                format!("{v}/2")
            }
        };
        match *self {
            QPoint::One(a) => write!(f, "{}", fmt1(a)),
            QPoint::Two(a, b) => write!(f, "({}, {})", fmt1(a), fmt1(b)),
        }
    }
}

/// An integral linear functional on the ambient space of a polytope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Covector {
    One(i64),
    Two(i64, i64),
}

impl Covector {
    pub fn rank(&self) -> Rank {
        match self {
            Covector::One(_) => Rank::One,
            Covector::Two(..) => Rank::Two,
        }
    }

    pub fn is_zero(&self) -> bool {
        match *self {
            Covector::One(a) => a == 0,
            Covector::Two(a, b) => a == 0 && b == 0,
        }
    }

    pub fn negate(&self) -> Covector {
        match *self {
            Covector::One(a) => Covector::One(-a),
            Covector::Two(a, b) => Covector::Two(-a, -b),
        }
    }

    pub fn scale(&self, k: i64) -> Covector {
        match *self {
            Covector::One(a) => Covector::One(k * a),
            Covector::Two(a, b) => Covector::Two(k * a, k * b),
        }
    }

    pub fn add(&self, other: &Covector) -> Covector {
        match (self, other) {
            (Covector::One(a), Covector::One(b)) => Covector::One(a + b),
            (Covector::Two(a, b), Covector::Two(c, d)) => Covector::Two(a + c, b + d),
            _ => panic!("covector rank mismatch"),
        }
    }

    /// Pairing against doubled coordinates; the true value is half this.
    pub fn pair_doubled(&self, p: &QPoint) -> i64 {
        match (self, p) {
            (Covector::One(a), QPoint::One(x)) => a * x,
            (Covector::Two(a, b), QPoint::Two(x, y)) => a * x + b * y,
            _ => panic!("covector/point rank mismatch"),
        }
    }
}

/// A convex polytope of dimension ≤ 2 with a marked vertex subset.
///
/// The vertex list is the minimal spanning set in canonical order: rank 1
/// ascending, rank 2 counterclockwise starting at the lexicographically
/// minimal vertex. `marked` runs parallel to `vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPolytope {
    rank: Rank,
    vertices: Vec<QPoint>,
    marked: Vec<bool>,
}

fn cross(o: &QPoint, a: &QPoint, b: &QPoint) -> i64 {
    match (o, a, b) {
        (QPoint::Two(ox, oy), QPoint::Two(ax, ay), QPoint::Two(bx, by)) => {
            (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
        }
        _ => panic!("cross product requires rank-2 points"),
    }
}

/// Monotone-chain hull keeping only strict corners. Requires a sorted,
/// deduplicated input; returns vertices counterclockwise starting at the
/// lexicographic minimum.
fn chain_hull<P: Copy + Ord>(pts: &[P], orient: impl Fn(&P, &P, &P) -> i64) -> Vec<P> {
    if pts.len() <= 1 {
        return pts.to_vec();
    }
    let mut build = |iter: &mut dyn Iterator<Item = &P>| {
        let mut chain: Vec<P> = Vec::new();
        for &p in iter {
            while chain.len() >= 2
                && orient(&chain[chain.len() - 2], &chain[chain.len() - 1], &p) <= 0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    };
    let mut lower = build(&mut pts.iter());
    let mut upper = build(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

impl MarkedPolytope {
    /// Convex hull of a non-empty point set; the result is unmarked.
    pub fn hull(rank: Rank, points: &[QPoint]) -> Result<MarkedPolytope> {
        let marked: Vec<(QPoint, bool)> = points.iter().map(|&p| (p, false)).collect();
        MarkedPolytope::hull_with_marks(rank, &marked)
    }

    /// Convex hull where each input point carries a mark; marks survive on
    /// the points that end up as vertices. A point listed twice must carry
    /// one mark value.
    pub fn hull_with_marks(rank: Rank, points: &[(QPoint, bool)]) -> Result<MarkedPolytope> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut mark_of = std::collections::BTreeMap::new();
        for (p, m) in points {
            assert_eq!(p.rank(), rank, "point rank mismatch");
            let prev = mark_of.insert(*p, *m);
            assert!(prev.is_none() || prev == Some(*m), "conflicting marks on {p}");
        }
        let pts: Vec<QPoint> = mark_of.keys().copied().collect();
        let vertices = match rank {
            Rank::One => {
                let lo = *pts.first().unwrap();
                let hi = *pts.last().unwrap();
                if lo == hi {
                    vec![lo]
                } else {
                    vec![lo, hi]
                }
            }
            Rank::Two => chain_hull(&pts, cross),
        };
        let marked = vertices.iter().map(|v| mark_of[v]).collect();
        Ok(MarkedPolytope { rank, vertices, marked })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    pub fn marks(&self) -> &[bool] {
        &self.marked
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_marked(&self, i: usize) -> bool {
        self.marked[i]
    }

    pub fn vertex_index(&self, p: &QPoint) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    pub fn marked_vertices(&self) -> Vec<QPoint> {
        self.vertices
            .iter()
            .zip(&self.marked)
            .filter(|(_, &m)| m)
            .map(|(v, _)| *v)
            .collect()
    }

    fn check_rank(&self, other: &MarkedPolytope) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank.as_u8(),
                right: other.rank.as_u8(),
            });
        }
        Ok(())
    }

    pub fn translate(&self, offset: &QPoint) -> MarkedPolytope {
        assert_eq!(offset.rank(), self.rank);
        MarkedPolytope {
            rank: self.rank,
            vertices: self.vertices.iter().map(|v| v.add(offset)).collect(),
            marked: self.marked.clone(),
        }
    }

    /// The reflection −P; marks follow their vertices.
    pub fn negate(&self) -> MarkedPolytope {
        let pts: Vec<(QPoint, bool)> = self
            .vertices
            .iter()
            .zip(&self.marked)
            .map(|(v, &m)| (v.negate(), m))
            .collect();
        MarkedPolytope::hull_with_marks(self.rank, &pts).expect("nonempty")
    }

    /// Dilation by a positive integer factor.
    pub fn scale(&self, k: i64) -> MarkedPolytope {
        assert!(k > 0);
        MarkedPolytope {
            rank: self.rank,
            vertices: self.vertices.iter().map(|v| v.scale(k)).collect(),
            marked: self.marked.clone(),
        }
    }

    /// Support value max ⟨φ, v⟩ over vertices, in doubled units.
    pub fn support_doubled(&self, phi: &Covector) -> i64 {
        self.vertices
            .iter()
            .map(|v| phi.pair_doubled(v))
            .max()
            .expect("polytope is never empty")
    }

    /// Closed containment test for a half-integer point.
    pub fn contains(&self, p: &QPoint) -> bool {
        assert_eq!(p.rank(), self.rank);
        match self.rank {
            Rank::One => {
                let (QPoint::One(lo), QPoint::One(hi), QPoint::One(t)) =
                    (self.vertices[0], *self.vertices.last().unwrap(), *p)
                else {
                    unreachable!()
                };
                lo <= t && t <= hi
            }
            Rank::Two => match self.vertices.len() {
                1 => self.vertices[0] == *p,
                2 => {
                    let (a, b) = (self.vertices[0], self.vertices[1]);
                    cross(&a, &b, p) == 0 && {
                        let (QPoint::Two(ax, ay), QPoint::Two(bx, by), QPoint::Two(px, py)) =
                            (a, b, *p)
                        else {
                            unreachable!()
                        };
                        let dot = (px - ax) * (bx - ax) + (py - ay) * (by - ay);
                        let len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
                        0 <= dot && dot <= len2
                    }
                }
                n => (0..n).all(|i| {
                    cross(&self.vertices[i], &self.vertices[(i + 1) % n], p) >= 0
                }),
            },
        }
    }

    /// Marked Minkowski sum: a vertex of the sum is marked precisely when
    /// its (unique) decomposition is a sum of marked vertices.
    pub fn minkowski_sum(&self, other: &MarkedPolytope) -> Result<MarkedPolytope> {
        self.check_rank(other)?;
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for v in &self.vertices {
            for w in &other.vertices {
                pts.push(v.add(w));
            }
        }
        let hull = MarkedPolytope::hull(self.rank, &pts)?;
        let marked = hull
            .vertices
            .iter()
            .map(|u| {
                let mut decompositions = self
                    .vertices
                    .iter()
                    .zip(&self.marked)
                    .flat_map(|(v, &mv)| {
                        other
                            .vertices
                            .iter()
                            .zip(&other.marked)
                            .filter(move |(w, _)| v.add(w) == *u)
                            .map(move |(_, &mw)| mv && mw)
                    });
                let first = decompositions.next().expect("sum vertex decomposes");
                debug_assert!(
                    decompositions.next().is_none(),
                    "sum vertex decomposition is unique"
                );
                first
            })
            .collect();
        Ok(MarkedPolytope { marked, ..hull })
    }

    /// Exact Minkowski difference `self − other` with the marking
    /// reconstruction rule. Returns `Ok(None)` when no polytope P satisfies
    /// P + other = self; `InconsistentMarkings` when the underlying
    /// polytope exists but the markings cannot arise from a marked sum.
    pub fn minkowski_diff(&self, other: &MarkedPolytope) -> Result<Option<MarkedPolytope>> {
        self.check_rank(other)?;
        let bare = match self.rank {
            Rank::One => {
                let (QPoint::One(rlo), QPoint::One(rhi)) =
                    (self.vertices[0], *self.vertices.last().unwrap())
                else {
                    unreachable!()
                };
                let (QPoint::One(qlo), QPoint::One(qhi)) =
                    (other.vertices[0], *other.vertices.last().unwrap())
                else {
                    unreachable!()
                };
                let (lo, hi) = (rlo - qlo, rhi - qhi);
                if lo > hi {
                    return Ok(None);
                }
                let pts = if lo == hi {
                    vec![QPoint::One(lo)]
                } else {
                    vec![QPoint::One(lo), QPoint::One(hi)]
                };
                MarkedPolytope::hull(Rank::One, &pts)?
            }
            Rank::Two => match self.erode(other) {
                Some(p) => p,
                None => return Ok(None),
            },
        };
        // The difference is only declared to exist when re-summing
        // reproduces the minuend exactly.
        let resum = bare.minkowski_sum(&other.unmarked())?;
        if resum.vertices != self.vertices {
            return Ok(None);
        }
        // Markings: a vertex u of the difference is marked iff every vertex
        // u + w of `self` (w a vertex of `other`) is marked; a mix of
        // marked and unmarked incidences cannot come from a marked sum.
        let mut marked = Vec::with_capacity(bare.vertices.len());
        for u in &bare.vertices {
            let mut saw_marked = false;
            let mut saw_unmarked = false;
            for w in &other.vertices {
                if let Some(i) = self.vertex_index(&u.add(w)) {
                    if self.marked[i] {
                        saw_marked = true;
                    } else {
                        saw_unmarked = true;
                    }
                }
            }
            if saw_marked && saw_unmarked {
                return Err(Error::InconsistentMarkings { vertex: u.to_string() });
            }
            marked.push(saw_marked);
        }
        let diff = MarkedPolytope { marked, ..bare };
        // Re-verify the full marked sum; a mismatch means the input
        // markings do not arise from any marked-sum instance.
        let marked_resum = diff.minkowski_sum(other)?;
        if marked_resum != *self {
            let off = marked_resum
                .vertices
                .iter()
                .zip(&marked_resum.marked)
                .zip(&self.marked)
                .find(|((_, a), b)| a != b)
                .map(|((v, _), _)| v.to_string())
                .unwrap_or_default();
            return Err(Error::InconsistentMarkings { vertex: off });
        }
        Ok(Some(diff))
    }

    /// Support-function erosion {p : p + other ⊆ self} for rank 2.
    fn erode(&self, other: &MarkedPolytope) -> Option<MarkedPolytope> {
        // Constraint directions: outward edge normals of `self`, or spanning
        // sets for the degenerate shapes.
        let dirs: Vec<(i64, i64)> = match self.vertices.len() {
            1 => vec![(1, 0), (-1, 0), (0, 1), (0, -1)],
            2 => {
                let QPoint::Two(dx, dy) = self.vertices[1].sub(&self.vertices[0]) else {
                    unreachable!()
                };
                vec![(dx, dy), (-dx, -dy), (dy, -dx), (-dy, dx)]
            }
            n => (0..n)
                .map(|i| {
                    let QPoint::Two(ex, ey) =
                        self.vertices[(i + 1) % n].sub(&self.vertices[i])
                    else {
                        unreachable!()
                    };
                    (ey, -ex)
                })
                .collect(),
        };
        let constraints: Vec<((i64, i64), i64)> = dirs
            .into_iter()
            .map(|(a, b)| {
                let phi = Covector::Two(a, b);
                ((a, b), self.support_doubled(&phi) - other.support_doubled(&phi))
            })
            .collect();
        // Candidate vertices: pairwise intersections of constraint
        // boundaries that satisfy every constraint.
        let mut candidates: Vec<(Rational64, Rational64)> = Vec::new();
        for i in 0..constraints.len() {
            for j in i + 1..constraints.len() {
                let ((a1, b1), c1) = constraints[i];
                let ((a2, b2), c2) = constraints[j];
                let det = a1 * b2 - a2 * b1;
                if det == 0 {
                    continue;
                }
                let x = Rational64::new(c1 * b2 - c2 * b1, det);
                let y = Rational64::new(a1 * c2 - a2 * c1, det);
                let feasible = constraints.iter().all(|&((a, b), c)| {
                    x * Rational64::from_integer(a) + y * Rational64::from_integer(b)
                        <= Rational64::from_integer(c)
                });
                if feasible {
                    candidates.push((x, y));
                }
            }
        }
        if candidates.is_empty() {
            return None;
        }
        candidates.sort();
        candidates.dedup();
        let hull = chain_hull(&candidates, |o, a, b| {
            let v = (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
            match v.cmp(&Rational64::from_integer(0)) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            }
        });
        // Coordinates live in the doubled lattice, so every true vertex of
        // a representable difference is integral here; anything else cannot
        // satisfy P + Q = R.
        let mut vertices = Vec::with_capacity(hull.len());
        for (x, y) in hull {
            if !x.is_integer() || !y.is_integer() {
                return None;
            }
            vertices.push(QPoint::Two(x.to_integer(), y.to_integer()));
        }
        MarkedPolytope::hull(Rank::Two, &vertices).ok()
    }

    /// Copy with all marks cleared.
    pub fn unmarked(&self) -> MarkedPolytope {
        MarkedPolytope {
            rank: self.rank,
            vertices: self.vertices.clone(),
            marked: vec![false; self.vertices.len()],
        }
    }

    /// Thickness max φ(c) − φ(d): the seminorm value of φ against this
    /// polytope.
    pub fn thickness(&self, phi: &Covector) -> Rational64 {
        assert_eq!(phi.rank(), self.rank, "covector rank mismatch");
        let vals: Vec<i64> = self.vertices.iter().map(|v| phi.pair_doubled(v)).collect();
        let max = *vals.iter().max().unwrap();
        let min = *vals.iter().min().unwrap();
        Rational64::new(max - min, 2)
    }

    /// The symmetrization ½(P + (−P)), centered at the origin; the output
    /// is unmarked. Requires the polytope to sit in a translate of the
    /// integer lattice, which holds for every pipeline-produced polytope.
    pub fn symmetrize(&self) -> MarkedPolytope {
        let sum = self
            .unmarked()
            .minkowski_sum(&self.unmarked().negate())
            .expect("same rank");
        let vertices: Vec<QPoint> = sum
            .vertices
            .iter()
            .map(|v| match *v {
                QPoint::One(a) => {
                    assert!(a % 2 == 0, "symmetrize needs a lattice-translate polytope");
                    QPoint::One(a / 2)
                }
                QPoint::Two(a, b) => {
                    assert!(
                        a % 2 == 0 && b % 2 == 0,
                        "symmetrize needs a lattice-translate polytope"
                    );
                    QPoint::Two(a / 2, b / 2)
                }
            })
            .collect();
        MarkedPolytope::hull(self.rank, &vertices).expect("nonempty")
    }

    /// True iff `other` is a translate of `self` with corresponding marks.
    pub fn translation_equiv(&self, other: &MarkedPolytope) -> bool {
        if self.rank != other.rank || self.vertices.len() != other.vertices.len() {
            return false;
        }
        let t = other.vertices[0].sub(&self.vertices[0]);
        self.vertices
            .iter()
            .zip(&other.vertices)
            .all(|(a, b)| a.add(&t) == *b)
            && self.marked == other.marked
    }

    /// The unique φ-maximal vertex, or `None` when φ ties two or more
    /// vertices.
    pub fn pairs_maximally(&self, phi: &Covector) -> Option<(usize, QPoint)> {
        let vals: Vec<i64> = self.vertices.iter().map(|v| phi.pair_doubled(v)).collect();
        let max = *vals.iter().max().unwrap();
        let mut winners = vals.iter().enumerate().filter(|(_, &v)| v == max);
        let (i, _) = winners.next().unwrap();
        if winners.next().is_some() {
            return None;
        }
        Some((i, self.vertices[i]))
    }
}

/// Newton polytope of a nonzero Laurent element; unmarked.
pub fn newton_polytope(f: &LaurentElt) -> Result<MarkedPolytope> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let pts: Vec<QPoint> = f.support().iter().map(QPoint::from_lattice).collect();
    MarkedPolytope::hull(f.rank(), &pts)
}

/// Newton polytope of a nonzero Laurent element with the commutative
/// marking rule: a vertex is marked iff its coefficient is ±1.
pub fn newton_polytope_marked(f: &LaurentElt) -> Result<MarkedPolytope> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let pts: Vec<(QPoint, bool)> = f
        .terms()
        .map(|(p, c)| (QPoint::from_lattice(p), c == 1 || c == -1))
        .collect();
    MarkedPolytope::hull_with_marks(f.rank(), &pts)
}

/// The marked polytope M(f) of a group-ring element: the hull of the
/// ψ-image support, a vertex v marked precisely when the v-component of f
/// is a monomial in the group ring.
///
/// The monomial test runs on free-group components. For Fox derivatives of
/// cyclically reduced relators the summands stay pairwise distinct in the
/// quotient group ring, so free-word monomiality agrees with monomiality
/// over the presented group; this is the correctness assumption the
/// pipeline rests on.
pub fn marked_polytope_of(f: &RingElt, psi: &AbelianizationMap) -> Result<MarkedPolytope> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let image = laurent_image(f, psi);
    let pts: Vec<(QPoint, bool)> = image
        .support()
        .iter()
        .map(|v| {
            (
                QPoint::from_lattice(v),
                f.component(v, psi).is_monomial(),
            )
        })
        .collect();
    MarkedPolytope::hull_with_marks(psi.rank(), &pts)
}

// JSON encoding: {"rank":1|2,"vertices":[...],"marked":[indices]} with
// coordinates as exact [num,den] pairs, den ∈ {1,2}.

fn coord_json(doubled: i64) -> [i64; 2] {
    if doubled % 2 == 0 {
        [doubled / 2, 1]
    } else {
        [doubled, 2]
    }
}

fn coord_from_json(pair: [i64; 2]) -> std::result::Result<i64, String> {
    match pair[1] {
        1 => Ok(2 * pair[0]),
        2 => Ok(pair[0]),
        d => Err(format!("coordinate denominator must be 1 or 2, got {d}")),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VertexJson {
    One([i64; 2]),
    Two([[i64; 2]; 2]),
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    rank: u8,
    vertices: Vec<VertexJson>,
    marked: Vec<usize>,
}

impl Serialize for MarkedPolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| match *v {
                QPoint::One(a) => VertexJson::One(coord_json(a)),
                QPoint::Two(a, b) => VertexJson::Two([coord_json(a), coord_json(b)]),
            })
            .collect();
        let marked = self
            .marked
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect();
        PolytopeJson { rank: self.rank.as_u8(), vertices, marked }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MarkedPolytope {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<MarkedPolytope, D::Error> {
        let raw = PolytopeJson::deserialize(deserializer)?;
        let rank = match raw.rank {
            1 => Rank::One,
            2 => Rank::Two,
            r => return Err(D::Error::custom(format!("rank must be 1 or 2, got {r}"))),
        };
        let mut vertices = Vec::with_capacity(raw.vertices.len());
        for v in raw.vertices {
            let p = match (rank, v) {
                (Rank::One, VertexJson::One(c)) => {
                    QPoint::One(coord_from_json(c).map_err(D::Error::custom)?)
                }
                (Rank::Two, VertexJson::Two([c, d])) => QPoint::Two(
                    coord_from_json(c).map_err(D::Error::custom)?,
                    coord_from_json(d).map_err(D::Error::custom)?,
                ),
                _ => return Err(D::Error::custom("vertex arity does not match rank")),
            };
            vertices.push(p);
        }
        let mut marks = vec![false; vertices.len()];
        for i in raw.marked {
            if i >= marks.len() {
                return Err(D::Error::custom("marked index out of range"));
            }
            marks[i] = true;
        }
        let pts: Vec<(QPoint, bool)> = vertices.iter().copied().zip(marks).collect();
        let poly = MarkedPolytope::hull_with_marks(rank, &pts).map_err(D::Error::custom)?;
        if poly.num_vertices() != pts.len() {
            return Err(D::Error::custom("vertex list is not in convex position"));
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(x: i64, y: i64) -> QPoint {
        QPoint::Two(2 * x, 2 * y)
    }

    fn poly(points: &[(i64, i64)], marked: &[usize]) -> MarkedPolytope {
        let pts: Vec<(QPoint, bool)> = points
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| (p2(x, y), marked.contains(&i)))
            .collect();
        MarkedPolytope::hull_with_marks(Rank::Two, &pts).unwrap()
    }

    #[test]
    fn hull_examples() {
        let point = MarkedPolytope::hull(Rank::Two, &[p2(0, 0)]).unwrap();
        assert!(point.is_point());

        let seg = MarkedPolytope::hull(Rank::Two, &[p2(0, 0), p2(1, 0), p2(2, 0)]).unwrap();
        assert_eq!(seg.vertices(), &[p2(0, 0), p2(2, 0)]);

        assert_eq!(MarkedPolytope::hull(Rank::Two, &[]), Err(Error::EmptyInput));

        let square =
            MarkedPolytope::hull(Rank::Two, &[p2(0, 0), p2(1, 0), p2(1, 1), p2(0, 1)]).unwrap();
        assert_eq!(square.num_vertices(), 4);
        assert_eq!(square.vertices()[0], p2(0, 0));

        // Idempotent on its own output.
        let again = MarkedPolytope::hull(Rank::Two, square.vertices()).unwrap();
        assert_eq!(again.vertices(), square.vertices());
    }

    #[test]
    fn hull_interior_points_absorbed() {
        let hull = MarkedPolytope::hull(
            Rank::Two,
            &[p2(0, 0), p2(4, 0), p2(0, 4), p2(1, 1), p2(2, 1)],
        )
        .unwrap();
        assert_eq!(hull.num_vertices(), 3);
    }

    #[test]
    fn sum_with_point_is_identity_with_translation() {
        let p = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)], &[0, 2]);
        let origin = MarkedPolytope::hull_with_marks(Rank::Two, &[(p2(0, 0), true)]).unwrap();
        let sum = p.minkowski_sum(&origin).unwrap();
        assert_eq!(sum, p);
    }

    #[test]
    fn unit_segments_sum_to_marked_square() {
        let h = MarkedPolytope::hull_with_marks(
            Rank::Two,
            &[(p2(0, 0), true), (p2(1, 0), true)],
        )
        .unwrap();
        let v = MarkedPolytope::hull_with_marks(
            Rank::Two,
            &[(p2(0, 0), true), (p2(0, 1), true)],
        )
        .unwrap();
        let square = h.minkowski_sum(&v).unwrap();
        assert_eq!(square.num_vertices(), 4);
        assert!(square.marks().iter().all(|&m| m));
    }

    #[test]
    fn diff_square_minus_segment() {
        let square = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)], &[]);
        let seg = poly(&[(0, 0), (0, 1)], &[]);
        let diff = square.minkowski_diff(&seg).unwrap().unwrap();
        assert_eq!(
            diff.vertices(),
            &[p2(0, 0), p2(2, 0), p2(2, 1), p2(0, 1)]
        );
        let resum = diff.minkowski_sum(&seg).unwrap();
        assert_eq!(resum.vertices(), square.vertices());
    }

    #[test]
    fn diff_point_cases() {
        let origin = MarkedPolytope::hull(Rank::Two, &[p2(0, 0)]).unwrap();
        let diff = origin.minkowski_diff(&origin).unwrap().unwrap();
        assert!(diff.is_point());

        // Subtracting a wider polytope fails.
        let seg = poly(&[(0, 0), (3, 0)], &[]);
        let small = poly(&[(0, 0), (1, 0)], &[]);
        assert_eq!(small.minkowski_diff(&seg).unwrap(), None);
    }

    #[test]
    fn diff_marking_rule() {
        // R = [0,2]×[0,1] with marks matching P = [0,2] segment marked at 0,
        // Q = [0,1] vertical segment fully marked.
        let p = MarkedPolytope::hull_with_marks(
            Rank::Two,
            &[(p2(0, 0), true), (p2(2, 0), false)],
        )
        .unwrap();
        let q = MarkedPolytope::hull_with_marks(
            Rank::Two,
            &[(p2(0, 0), true), (p2(0, 1), true)],
        )
        .unwrap();
        let r = p.minkowski_sum(&q).unwrap();
        let back = r.minkowski_diff(&q).unwrap().unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn diff_detects_inconsistent_markings() {
        // A square marked at one corner only cannot be segment + segment.
        let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)], &[0]);
        let seg = MarkedPolytope::hull_with_marks(
            Rank::Two,
            &[(p2(0, 0), true), (p2(0, 1), true)],
        )
        .unwrap();
        assert!(matches!(
            square.minkowski_diff(&seg),
            Err(Error::InconsistentMarkings { .. })
        ));
    }

    #[test]
    fn thickness_examples() {
        let point = MarkedPolytope::hull(Rank::Two, &[p2(3, -1)]).unwrap();
        assert_eq!(point.thickness(&Covector::Two(5, 7)), 0.into());

        let quad = poly(&[(0, 1), (2, 3), (2, 1), (0, -1)], &[]);
        assert_eq!(quad.thickness(&Covector::Two(1, 0)), 2.into());
        assert_eq!(quad.thickness(&Covector::Two(0, 1)), 4.into());
    }

    #[test]
    fn thickness_additive_over_sum() {
        let a = poly(&[(0, 0), (2, 1), (1, 3)], &[]);
        let b = poly(&[(0, 0), (1, 0), (0, 2)], &[]);
        let sum = a.minkowski_sum(&b).unwrap();
        for phi in [Covector::Two(1, 0), Covector::Two(-2, 3), Covector::Two(5, 5)] {
            assert_eq!(
                sum.thickness(&phi),
                a.thickness(&phi) + b.thickness(&phi)
            );
        }
    }

    #[test]
    fn symmetrize_examples() {
        let seg = poly(&[(0, 0), (2, 0)], &[]);
        let sym = seg.symmetrize();
        assert_eq!(sym.vertices(), &[p2(-1, 0), p2(1, 0)]);

        let square = poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)], &[]);
        let sym = square.symmetrize();
        assert!(square.unmarked().translation_equiv(&sym));

        for phi in [Covector::Two(1, 0), Covector::Two(2, -3)] {
            assert_eq!(square.thickness(&phi), sym.thickness(&phi));
        }
    }

    #[test]
    fn translation_equiv_examples() {
        let p = poly(&[(0, 0), (2, 0), (2, 2)], &[1]);
        let q = p.translate(&p2(3, -2));
        assert!(p.translation_equiv(&q));

        let differently_marked = poly(&[(0, 0), (2, 0), (2, 2)], &[0]);
        assert!(!p.translation_equiv(&differently_marked));
    }

    #[test]
    fn pairs_maximally_examples() {
        let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)], &[]);
        assert_eq!(
            square.pairs_maximally(&Covector::Two(1, 1)).map(|(_, v)| v),
            Some(p2(1, 1))
        );
        assert_eq!(square.pairs_maximally(&Covector::Two(1, 0)), None);
    }

    #[test]
    fn k_fold_sum_is_scaling() {
        let p = poly(&[(0, 0), (2, 1), (1, 3), (-1, 1)], &[0, 2]);
        let mut sum = p.clone();
        for k in 2..=4 {
            sum = sum.minkowski_sum(&p).unwrap();
            assert_eq!(sum.vertices(), p.scale(k).vertices());
        }
    }

    #[test]
    fn json_round_trip() {
        let p = poly(&[(0, -1), (2, 1), (2, 2), (0, 0)], &[1, 3]);
        let text = serde_json::to_string(&p).unwrap();
        let back: MarkedPolytope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);

        // Half-integer coordinates serialize with denominator 2.
        let mid = MarkedPolytope::hull_with_marks(
            Rank::Two,
            &[(QPoint::Two(1, 1), true), (QPoint::Two(3, 1), false)],
        )
        .unwrap();
        let text = serde_json::to_string(&mid).unwrap();
        assert!(text.contains("[1,2]"));
        let back: MarkedPolytope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, mid);
    }

    #[test]
    fn rank_mismatch_detected() {
        let a = MarkedPolytope::hull(Rank::One, &[QPoint::One(0), QPoint::One(2)]).unwrap();
        let b = MarkedPolytope::hull(Rank::Two, &[p2(0, 0)]).unwrap();
        assert!(matches!(
            a.minkowski_sum(&b),
            Err(Error::RankMismatch { left: 1, right: 2 })
        ));
    }
}

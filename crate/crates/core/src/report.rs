//! JSON report schemas emitted by the command-line tool. Serialization is
//! canonical: fixed key order, canonical vertex order, exact rationals as
//! [numerator, denominator] pairs, so emitted JSON round-trips
//! byte-identically.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::abelian::Presentation;
use crate::ball::{BallShape, NormBall, RatVec};
use crate::equiv::{Certificate, EquivVerdict};
use crate::norm::{FiberedVerdict, NormData, UnitBall};
use crate::polytope::{Covector, MarkedPolytope, QPoint};
use crate::symmetry::{ConjectureReport, PairVariant};

fn rational_json(r: Rational64) -> [i64; 2] {
    [*r.numer(), *r.denom()]
}

fn qpoint_json(p: &QPoint) -> Vec<[i64; 2]> {
    p.coords().into_iter().map(rational_json).collect()
}

fn ratvec_json(v: &RatVec) -> Vec<[i64; 2]> {
    v.coords().into_iter().map(rational_json).collect()
}

fn covector_vec(phi: &Covector) -> Vec<i64> {
    match *phi {
        Covector::One(a) => vec![a],
        Covector::Two(a, b) => vec![a, b],
    }
}

/// One norm/fibered query against a computed polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryReport {
    pub phi: Vec<i64>,
    pub norm: [i64; 2],
    pub fibered: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Vec<[i64; 2]>>,
}

/// Full norm report: presentation echo, Betti number, construction
/// provenance, the marked polytope, and per-query results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormReport {
    pub relator: String,
    pub betti: u8,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple_relator: Option<String>,
    pub polytope: MarkedPolytope,
    pub queries: Vec<QueryReport>,
}

impl NormReport {
    pub fn new(data: &NormData, queries: &[Covector]) -> crate::error::Result<NormReport> {
        let mut out = Vec::with_capacity(queries.len());
        for phi in queries {
            let norm = data.norm(phi)?;
            let verdict = data.fibered(phi)?;
            let vertex = match verdict {
                FiberedVerdict::Fibered { vertex } | FiberedVerdict::NotFibered { vertex } => {
                    Some(qpoint_json(&vertex))
                }
                FiberedVerdict::IndeterminateTie => None,
            };
            out.push(QueryReport {
                phi: covector_vec(phi),
                norm: rational_json(norm),
                fibered: verdict.as_str().to_string(),
                vertex,
            });
        }
        Ok(NormReport {
            relator: data.presentation.relator().to_string(),
            betti: data.betti,
            provenance: data.provenance.as_str().to_string(),
            simple_relator: data
                .nielsen
                .as_ref()
                .map(|(simple, _)| simple.relator().to_string()),
            polytope: data.polytope.clone(),
            queries: out,
        })
    }
}

/// One facet of the unit ball with its fibered flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallFacetReport {
    pub constraint: Vec<[i64; 2]>,
    pub pairs_with: Vec<[i64; 2]>,
    pub fibered: bool,
}

/// Unit-ball report. `shape` is one of full-space, interval, strip,
/// polygon; a full-space ball (norm identically zero) carries only the
/// `fibered_everywhere` flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallReport {
    pub relator: String,
    pub betti: u8,
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibered_everywhere: Option<bool>,
    pub facets: Vec<BallFacetReport>,
    pub vertices: Vec<Vec<[i64; 2]>>,
}

impl BallReport {
    pub fn new(presentation: &Presentation, betti: u8, ball: &UnitBall) -> BallReport {
        match ball {
            UnitBall::Everything { fibered_everywhere } => BallReport {
                relator: presentation.relator().to_string(),
                betti,
                shape: "full-space".to_string(),
                fibered_everywhere: Some(*fibered_everywhere),
                facets: Vec::new(),
                vertices: Vec::new(),
            },
            UnitBall::Ball(ball) => BallReport {
                relator: presentation.relator().to_string(),
                betti,
                shape: shape_str(ball).to_string(),
                fibered_everywhere: None,
                facets: ball
                    .facets
                    .iter()
                    .map(|f| BallFacetReport {
                        constraint: ratvec_json(&f.constraint),
                        pairs_with: qpoint_json(&f.pairs_with),
                        fibered: f.marked,
                    })
                    .collect(),
                vertices: ball.vertices.iter().map(ratvec_json).collect(),
            },
        }
    }
}

fn shape_str(ball: &NormBall) -> &'static str {
    match ball.shape {
        BallShape::Interval => "interval",
        BallShape::Strip => "strip",
        BallShape::Polygon => "polygon",
    }
}

/// One opposite-pair check in the symmetry report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheckReport {
    pub variant: String,
    pub v: Vec<[i64; 2]>,
    pub w: Vec<[i64; 2]>,
    pub sign_tried: i8,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Symmetry-checker report: the two pairings' uniqueness and the per-pair
/// verdicts with certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub relator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_components: Option<u8>,
    pub depth: usize,
    pub cross_pairing_unique: bool,
    pub within_pairing_unique: bool,
    pub checks: Vec<PairCheckReport>,
}

impl SymmetryReport {
    pub fn new(
        presentation: &Presentation,
        boundary_components: Option<u8>,
        depth: usize,
        report: &ConjectureReport,
    ) -> SymmetryReport {
        SymmetryReport {
            relator: presentation.relator().to_string(),
            boundary_components,
            depth,
            cross_pairing_unique: report.cross_pairing.all_unique(),
            within_pairing_unique: report.within_pairing.all_unique(),
            checks: report
                .checks
                .iter()
                .map(|c| {
                    let (verdict, certificate) = match &c.verdict {
                        EquivVerdict::Verified(cert) => ("verified", Some(cert.clone())),
                        EquivVerdict::Unresolved => ("unresolved", None),
                    };
                    PairCheckReport {
                        variant: match c.variant {
                            PairVariant::Conjecture => "conjecture".to_string(),
                            PairVariant::WithinRx => "within-rx".to_string(),
                        },
                        v: qpoint_json(&c.v),
                        w: qpoint_json(&c.w),
                        sign_tried: c.sign,
                        verdict: verdict.to_string(),
                        certificate,
                        note: c.note.clone(),
                    }
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::fgword::Word;
    use crate::norm::{compute, Method};

    #[test]
    fn norm_report_round_trips_byte_identically() {
        let p = Presentation::new(Word::parse(catalog::DUNFIELD).unwrap()).unwrap();
        let data = compute(&p, Method::Both).unwrap();
        let report =
            NormReport::new(&data, &[Covector::Two(1, 0), Covector::Two(0, 1)]).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: NormReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn ball_report_round_trips() {
        let p = Presentation::new(Word::parse(catalog::DUNFIELD).unwrap()).unwrap();
        let data = compute(&p, Method::Fox).unwrap();
        let ball = data.unit_ball().unwrap();
        let report = BallReport::new(&p, data.betti, &ball);
        let text = serde_json::to_string(&report).unwrap();
        let back: BallReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

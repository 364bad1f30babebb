//! Bounded search for translate equivalence p = g·q·h in the group ring of
//! a one-relator group, with replayable certificates.
//!
//! Equality in ℤ[π] is undecidable territory, so the search is sound but
//! incomplete: `Verified` ships a certificate that is re-checked by direct
//! ring arithmetic before being returned, `Unresolved` never claims a
//! negative. Each rewriting step replaces a subword of one term by the
//! equal word read off a cyclic permutation of r^{±1}.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::fgword::{Letter, Word};
use crate::groupring::RingElt;

/// Which side of the candidate identity a rewrite acted on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One relator substitution: in the term `before`, the subword at
/// `[at, at+len)` equals the first `len` letters of the cyclic permutation
/// of r (or r⁻¹ when `inverted`) rotated left by `rotation`, and is
/// replaced by the inverse of the permutation's remainder, giving `after`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rewrite {
    pub side: Side,
    pub before: Word,
    pub at: usize,
    pub len: usize,
    pub rotation: usize,
    pub inverted: bool,
    pub after: Word,
}

/// A replayable proof of p = g·q·h: apply the rewrites to the stated
/// sides, then check the translate identity by direct multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub left: Word,
    pub right: Word,
    pub rewrites: Vec<Rewrite>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivVerdict {
    Verified(Certificate),
    Unresolved,
}

impl EquivVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, EquivVerdict::Verified(_))
    }
}

/// Shortest matches worth branching on; single-letter overlaps with the
/// relator are everywhere and blow the search up without helping.
const MIN_MATCH: usize = 3;

/// Hard cap on explored states, keeping the bounded search bounded in
/// space as well as depth.
const MAX_STATES: usize = 100_000;

fn subword(w: &Word, from: usize, to: usize) -> Word {
    Word::from_letters(w.letters()[from..to].to_vec())
}

fn common_prefix_len(a: &[Letter], b: &[Letter]) -> usize {
    a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count()
}

/// All cyclic permutations of r and r⁻¹ with their provenance.
fn relator_rotations(r: &Word) -> Vec<(Word, usize, bool)> {
    let mut out = Vec::with_capacity(2 * r.len());
    for (k, rho) in r.cyclic_permutations().into_iter().enumerate() {
        out.push((rho, k, false));
    }
    for (k, rho) in r.invert().cyclic_permutations().into_iter().enumerate() {
        out.push((rho, k, true));
    }
    out
}

/// Replaces the maximal match of `rho` at a position of one term. Returns
/// the rewritten element and the rewrite record.
fn apply_rotation_at(
    elt: &RingElt,
    word: &Word,
    at: usize,
    rho: &(Word, usize, bool),
    side: Side,
) -> Option<(RingElt, Rewrite)> {
    let (ref perm, rotation, inverted) = *rho;
    let len = common_prefix_len(&word.letters()[at..], perm.letters());
    if len < MIN_MATCH {
        return None;
    }
    let replacement = subword(perm, len, perm.len()).invert();
    let after = subword(word, 0, at)
        .concat(&replacement)
        .concat(&subword(word, at + len, word.len()))
        .free_reduce();
    if after == *word {
        return None;
    }
    let coeff = elt.coeff(word);
    let mut terms: Vec<(i64, Word)> = elt
        .terms()
        .filter(|(w, _)| *w != word)
        .map(|(w, c)| (c, w.clone()))
        .collect();
    terms.push((coeff, after.clone()));
    let rewritten = RingElt::from_terms(terms);
    let rewrite = Rewrite {
        side,
        before: word.clone(),
        at,
        len,
        rotation,
        inverted,
        after,
    };
    Some((rewritten, rewrite))
}

fn successor_states(
    p: &RingElt,
    q: &RingElt,
    rotations: &[(Word, usize, bool)],
) -> Vec<(RingElt, RingElt, Rewrite)> {
    let mut out = Vec::new();
    for (side, elt) in [(Side::Left, p), (Side::Right, q)] {
        let words: Vec<Word> = elt.terms().map(|(w, _)| w.clone()).collect();
        for word in &words {
            for rho in rotations {
                for at in 0..word.len() {
                    if let Some((rewritten, rewrite)) =
                        apply_rotation_at(elt, word, at, rho, side)
                    {
                        match side {
                            Side::Left => out.push((rewritten, q.clone(), rewrite)),
                            Side::Right => out.push((p.clone(), rewritten, rewrite)),
                        }
                    }
                }
            }
        }
    }
    out
}

/// Conjugacy solutions g with g·c·g⁻¹ = d in the free group, one candidate
/// per matching rotation of the cyclically reduced cores.
fn conjugators(c: &Word, d: &Word) -> Vec<Word> {
    let (c_core, c_conj) = c.cyclic_reduce();
    let (d_core, d_conj) = d.cyclic_reduce();
    if c_core.len() != d_core.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if c_core.is_empty() {
        out.push(d_conj.reduced_concat(&c_conj.invert()));
        return out;
    }
    for k in 0..c_core.len() {
        if c_core.rotate_left(k) == d_core {
            // d = (d_conj · prefix_k⁻¹ · c_conj⁻¹) c (…)⁻¹
            let prefix = subword(&c_core, 0, k);
            out.push(
                d_conj
                    .reduced_concat(&prefix.invert())
                    .reduced_concat(&c_conj.invert()),
            );
        }
    }
    out
}

/// Exact translate test: some g, h with p = g·q·h in ℤ[F].
fn translate_match(p: &RingElt, q: &RingElt) -> Option<(Word, Word)> {
    if p.num_terms() != q.num_terms() || p.is_zero() {
        return None;
    }
    let p_terms: Vec<(&Word, i64)> = p.terms().collect();
    let q_terms: Vec<(&Word, i64)> = q.terms().collect();
    let (u0, a0) = p_terms[0];
    if p_terms.len() == 1 {
        let (v0, b0) = q_terms[0];
        if a0 != b0 {
            return None;
        }
        // g = 1, h = v⁻¹u is one of the many witnesses.
        return Some((Word::empty(), v0.invert().reduced_concat(u0)));
    }
    let (u1, a1) = p_terms[1];
    for &(v0, b0) in &q_terms {
        if b0 != a0 {
            continue;
        }
        for &(v1, b1) in &q_terms {
            if b1 != a1 || v1 == v0 {
                continue;
            }
            let c = v1.reduced_concat(&v0.invert());
            let d = u1.reduced_concat(&u0.invert());
            for g in conjugators(&c, &d) {
                let h = v0.invert().reduced_concat(&g.invert()).reduced_concat(u0);
                if q.translate(&g, &h) == *p {
                    return Some((g, h));
                }
            }
        }
    }
    None
}

/// Searches for words g, h and at most `depth` relator substitutions such
/// that p = g·q·h. The relator must be cyclically reduced. A `Verified`
/// verdict has already been re-validated by [`validate_certificate`].
pub fn equiv_monomial_translate(
    p: &RingElt,
    q: &RingElt,
    depth: usize,
    r: &Word,
) -> EquivVerdict {
    debug_assert!(r.is_cyclically_reduced());
    if p.is_zero() || q.is_zero() {
        return EquivVerdict::Unresolved;
    }
    let rotations = relator_rotations(r);
    let mut queue: VecDeque<(RingElt, RingElt, Vec<Rewrite>)> = VecDeque::new();
    let mut seen: HashSet<(RingElt, RingElt)> = HashSet::new();
    queue.push_back((p.clone(), q.clone(), Vec::new()));
    seen.insert((p.clone(), q.clone()));
    let mut explored = 0usize;
    while let Some((pe, qe, rewrites)) = queue.pop_front() {
        explored += 1;
        if let Some((g, h)) = translate_match(&pe, &qe) {
            let cert = Certificate { left: g, right: h, rewrites };
            if validate_certificate(p, q, r, &cert) {
                return EquivVerdict::Verified(cert);
            }
            // A match the replay rejects would be a bug; fall through and
            // keep searching rather than report it.
            debug_assert!(false, "translate match failed replay");
        }
        if rewrites.len() >= depth || explored > MAX_STATES {
            continue;
        }
        for (np, nq, rw) in successor_states(&pe, &qe, &rotations) {
            let key = (np.clone(), nq.clone());
            if seen.insert(key) {
                let mut trail = rewrites.clone();
                trail.push(rw);
                queue.push_back((np, nq, trail));
            }
        }
    }
    EquivVerdict::Unresolved
}

/// Replays a certificate from scratch: checks that every rewrite is
/// justified by a cyclic permutation of r^{±1} and recomputes it, then
/// checks p = g·q·h by direct multiplication.
pub fn validate_certificate(p: &RingElt, q: &RingElt, r: &Word, cert: &Certificate) -> bool {
    let mut pe = p.clone();
    let mut qe = q.clone();
    for rw in &cert.rewrites {
        let base = if rw.inverted { r.invert() } else { r.clone() };
        if rw.rotation >= base.len().max(1) {
            return false;
        }
        let perm = base.rotate_left(rw.rotation);
        if rw.at + rw.len > rw.before.len() || rw.len > perm.len() {
            return false;
        }
        if rw.before.letters()[rw.at..rw.at + rw.len] != perm.letters()[..rw.len] {
            return false;
        }
        let replacement = subword(&perm, rw.len, perm.len()).invert();
        let after = subword(&rw.before, 0, rw.at)
            .concat(&replacement)
            .concat(&subword(&rw.before, rw.at + rw.len, rw.before.len()))
            .free_reduce();
        if after != rw.after {
            return false;
        }
        let target = match rw.side {
            Side::Left => &mut pe,
            Side::Right => &mut qe,
        };
        let coeff = target.coeff(&rw.before);
        if coeff == 0 {
            return false;
        }
        *target = target.add(&RingElt::from_terms(vec![
            (-coeff, rw.before.clone()),
            (coeff, rw.after.clone()),
        ]));
    }
    qe.translate(&cert.left, &cert.right) == pe
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::fgword::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn elt(terms: &[(i64, &str)]) -> RingElt {
        RingElt::from_terms(terms.iter().map(|&(c, s)| (c, w(s))).collect())
    }

    #[test]
    fn exact_translate_found_at_depth_zero() {
        let r = w(catalog::DUNFIELD);
        let q = elt(&[(1, "xy"), (-1, "yX"), (2, "x^2")]);
        let p = q.translate(&w("x"), &w("Y"));
        let verdict = equiv_monomial_translate(&p, &q, 0, &r);
        let EquivVerdict::Verified(cert) = verdict else {
            panic!("expected Verified");
        };
        assert!(cert.rewrites.is_empty());
        assert!(validate_certificate(&p, &q, &r, &cert));
        assert_eq!(q.translate(&cert.left, &cert.right), p);
    }

    #[test]
    fn monomial_translate() {
        let r = w(catalog::DUNFIELD);
        let p = elt(&[(-1, "x^2y")]);
        let q = elt(&[(-1, "yx")]);
        let verdict = equiv_monomial_translate(&p, &q, 0, &r);
        let EquivVerdict::Verified(cert) = verdict else {
            panic!("expected Verified");
        };
        assert!(validate_certificate(&p, &q, &r, &cert));
        // Opposite coefficient signs cannot be translated.
        assert_eq!(
            equiv_monomial_translate(&p, &p.negate(), 0, &r),
            EquivVerdict::Unresolved
        );
    }

    #[test]
    fn mismatched_supports_unresolved() {
        let r = w(catalog::DUNFIELD);
        let p = elt(&[(1, ""), (1, "x")]);
        let q = elt(&[(1, ""), (1, "y")]);
        for depth in [0, 1, 2] {
            assert_eq!(
                equiv_monomial_translate(&p, &q, depth, &r),
                EquivVerdict::Unresolved
            );
        }
        let q3 = elt(&[(1, ""), (1, "y"), (1, "xy")]);
        assert_eq!(
            equiv_monomial_translate(&p, &q3, 0, &r),
            EquivVerdict::Unresolved
        );
    }

    #[test]
    fn relator_substitution_is_found_and_replays() {
        // With r = x y x⁻¹ y⁻² (cyclically reduced), the permutation
        // starting after x reads y x⁻¹ y⁻² x⁻¹ … so xyx ≡ xxy... pick a
        // simple planted instance instead: take q a two-term element and
        // plant p = g·q'·h where q' rewrites one term by a cyclic
        // permutation of r.
        let r = w("xyXy^-2");
        // rotation 1 of r is y x⁻¹ y⁻² x; its inverse relation gives
        // y·x⁻¹·y⁻¹ = … ; just rewrite the word "yXy^-2x" (= rotation 1) to
        // the empty word inside a term.
        let term = w("x").concat(&r.rotate_left(1)).concat(&w("Y")).free_reduce();
        let q = RingElt::from_terms(vec![(1, term), (3, w("xYx"))]);
        let q_rewritten = RingElt::from_terms(vec![(1, w("xY"))]).add(&elt(&[(3, "xYx")]));
        let p = q_rewritten.translate(&w("yy"), &w("X"));
        let verdict = equiv_monomial_translate(&p, &q, 1, &r);
        let EquivVerdict::Verified(cert) = verdict else {
            panic!("expected Verified with one rewrite");
        };
        assert!(cert.rewrites.len() <= 1);
        assert!(validate_certificate(&p, &q, &r, &cert));
    }

    #[test]
    fn zero_inputs_unresolved() {
        let r = w("xyXY");
        assert_eq!(
            equiv_monomial_translate(&RingElt::zero(), &RingElt::one(), 2, &r),
            EquivVerdict::Unresolved
        );
    }

    #[test]
    fn tampered_certificate_rejected() {
        let r = w(catalog::DUNFIELD);
        let q = elt(&[(1, "xy"), (-1, "yX")]);
        let p = q.translate(&w("x"), &w("Y"));
        let EquivVerdict::Verified(mut cert) = equiv_monomial_translate(&p, &q, 0, &r) else {
            panic!("expected Verified");
        };
        cert.left = cert.left.reduced_concat(&w("x"));
        assert!(!validate_certificate(&p, &q, &r, &cert));
    }
}

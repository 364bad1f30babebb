//! Seeded generators for random words, relators, ring elements and
//! polytopes. Backing both the property-test corpora and the CLI
//! self-test, so runs are reproducible from a single seed.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abelian::{LatticePoint, LaurentElt, Rank};
use crate::fgword::{Gen, Letter, Word};
use crate::groupring::RingElt;
use crate::polytope::{Covector, MarkedPolytope, QPoint};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_letter(rng: &mut impl Rng) -> Letter {
    let gen = if rng.gen::<bool>() { Gen::X } else { Gen::Y };
    let sign = if rng.gen::<bool>() { 1 } else { -1 };
    Letter::new(gen, sign)
}

/// A uniformly random reduced word of exactly the given length (letters
/// never cancel their predecessor).
pub fn random_reduced_word(rng: &mut impl Rng, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng);
        if letters.last().is_some_and(|prev| prev.is_inverse_of(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

/// A random cyclically reduced word with both exponent sums zero and
/// length between 4 and `max_len`: a balanced letter multiset shuffled
/// until it is cyclically reduced.
pub fn random_zero_sum_relator(rng: &mut impl Rng, max_len: usize) -> Word {
    assert!(max_len >= 4);
    loop {
        let budget = max_len / 2;
        let kx = rng.gen_range(1..budget.max(2));
        let ky = rng.gen_range(1..=(budget - kx).max(1));
        let mut letters = Vec::with_capacity(2 * (kx + ky));
        for _ in 0..kx {
            letters.push(Letter::new(Gen::X, 1));
            letters.push(Letter::new(Gen::X, -1));
        }
        for _ in 0..ky {
            letters.push(Letter::new(Gen::Y, 1));
            letters.push(Letter::new(Gen::Y, -1));
        }
        for _ in 0..40 {
            letters.shuffle(rng);
            let w = Word::from_letters(letters.clone());
            if w.is_cyclically_reduced() {
                return w;
            }
        }
    }
}

/// A random non-empty cyclically reduced word with nonzero exponent sums,
/// i.e. a b₁ = 1 relator.
pub fn random_rank1_relator(rng: &mut impl Rng, max_len: usize) -> Word {
    loop {
        let len = rng.gen_range(1..=max_len);
        let (core, _) = random_reduced_word(rng, len).cyclic_reduce();
        if !core.is_empty() && (core.exponent_sum(Gen::X), core.exponent_sum(Gen::Y)) != (0, 0)
        {
            return core;
        }
    }
}

/// A random group-ring element with the given number of (attempted)
/// terms.
pub fn random_ring_elt(rng: &mut impl Rng, terms: usize, max_word_len: usize) -> RingElt {
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_word_len);
        let coeff = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        out.push((coeff, random_reduced_word(rng, len)));
    }
    RingElt::from_terms(out)
}

/// A random nonzero Laurent element supported in a small box.
pub fn random_laurent(rng: &mut impl Rng, rank: Rank, terms: usize, span: i64) -> LaurentElt {
    loop {
        let mut out = Vec::with_capacity(terms);
        for _ in 0..terms {
            let coeff = loop {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            let p = match rank {
                Rank::One => LatticePoint::rank1(rng.gen_range(-span..=span)),
                Rank::Two => LatticePoint::rank2(
                    rng.gen_range(-span..=span),
                    rng.gen_range(-span..=span),
                ),
            };
            out.push((coeff, p));
        }
        let elt = LaurentElt::from_terms(rank, out);
        if !elt.is_zero() {
            return elt;
        }
    }
}

/// A random marked lattice polytope (integer vertices, random marks).
pub fn random_lattice_polytope(
    rng: &mut impl Rng,
    rank: Rank,
    points: usize,
    span: i64,
    fully_marked: bool,
) -> MarkedPolytope {
    let pts: Vec<(QPoint, bool)> = (0..points.max(1))
        .map(|_| {
            let p = match rank {
                Rank::One => QPoint::One(2 * rng.gen_range(-span..=span)),
                Rank::Two => QPoint::Two(
                    2 * rng.gen_range(-span..=span),
                    2 * rng.gen_range(-span..=span),
                ),
            };
            (p, fully_marked || rng.gen::<bool>())
        })
        .collect();
    MarkedPolytope::hull_with_marks(rank, &pts).expect("nonempty input")
}

/// A random nonzero integral covector with entries in [−span, span].
pub fn random_covector(rng: &mut impl Rng, rank: Rank, span: i64) -> Covector {
    loop {
        let phi = match rank {
            Rank::One => Covector::One(rng.gen_range(-span..=span)),
            Rank::Two => {
                Covector::Two(rng.gen_range(-span..=span), rng.gen_range(-span..=span))
            }
        };
        if !phi.is_zero() {
            return phi;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_per_seed() {
        let mut a = rng_from_seed(7);
        let mut b = rng_from_seed(7);
        for _ in 0..20 {
            assert_eq!(random_reduced_word(&mut a, 30), random_reduced_word(&mut b, 30));
        }
    }

    #[test]
    fn zero_sum_relators_are_balanced() {
        let mut rng = rng_from_seed(1);
        for _ in 0..50 {
            let w = random_zero_sum_relator(&mut rng, 40);
            assert!(w.is_cyclically_reduced());
            assert!(w.len() >= 4 && w.len() <= 40);
            assert_eq!(w.exponent_sum(Gen::X), 0);
            assert_eq!(w.exponent_sum(Gen::Y), 0);
        }
    }

    #[test]
    fn reduced_words_are_reduced() {
        let mut rng = rng_from_seed(2);
        for len in [0, 1, 5, 60] {
            let w = random_reduced_word(&mut rng, len);
            assert_eq!(w.len(), len);
            assert!(w.is_reduced());
        }
    }
}

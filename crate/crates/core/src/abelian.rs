//! Abelianization data of a (2,1)-presentation: exponent sums, first Betti
//! number, the map ψ onto H₁/torsion, Laurent images of group-ring
//! elements, and Nielsen conversion of b₁ = 1 presentations to simple form.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgword::{Gen, Letter, Word};
use crate::groupring::RingElt;

/// Ambient rank of lattice points, polytopes and covectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rank {
    One,
    Two,
}

impl Rank {
    pub fn as_u8(self) -> u8 {
        match self {
            Rank::One => 1,
            Rank::Two => 2,
        }
    }
}

/// A point of ℤ or ℤ², depending on the rank of H₁/torsion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticePoint {
    One(i64),
    Two(i64, i64),
}

impl LatticePoint {
    pub fn rank1(t: i64) -> LatticePoint {
        LatticePoint::One(t)
    }

    pub fn rank2(x: i64, y: i64) -> LatticePoint {
        LatticePoint::Two(x, y)
    }

    pub fn rank(&self) -> Rank {
        match self {
            LatticePoint::One(_) => Rank::One,
            LatticePoint::Two(..) => Rank::Two,
        }
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        match (self, other) {
            (LatticePoint::One(a), LatticePoint::One(b)) => LatticePoint::One(a + b),
            (LatticePoint::Two(a, b), LatticePoint::Two(c, d)) => LatticePoint::Two(a + c, b + d),
            _ => panic!("lattice point rank mismatch"),
        }
    }
}

/// The canonical map ψ: F → H₁(π;ℤ)/torsion in coordinates. Rank 2 sends
/// x ↦ (1,0), y ↦ (0,1); rank 1 with relator exponent sums (a,b) and
/// g = gcd(a,b) sends x ↦ b/g and y ↦ −a/g, the surjection onto ℤ killing
/// (a,b).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbelianizationMap {
    Rank1 { x: i64, y: i64 },
    Rank2,
}

impl AbelianizationMap {
    pub fn rank(&self) -> Rank {
        match self {
            AbelianizationMap::Rank1 { .. } => Rank::One,
            AbelianizationMap::Rank2 => Rank::Two,
        }
    }

    pub fn image_of_gen(&self, gen: Gen) -> LatticePoint {
        match (self, gen) {
            (AbelianizationMap::Rank2, Gen::X) => LatticePoint::Two(1, 0),
            (AbelianizationMap::Rank2, Gen::Y) => LatticePoint::Two(0, 1),
            (AbelianizationMap::Rank1 { x, .. }, Gen::X) => LatticePoint::One(*x),
            (AbelianizationMap::Rank1 { y, .. }, Gen::Y) => LatticePoint::One(*y),
        }
    }

    pub fn image_of_word(&self, w: &Word) -> LatticePoint {
        let (m, n) = exponent_sums(w);
        match self {
            AbelianizationMap::Rank2 => LatticePoint::Two(m, n),
            AbelianizationMap::Rank1 { x, y } => LatticePoint::One(x * m + y * n),
        }
    }
}

/// Signed letter counts `(a, b)` of x and y in a word.
pub fn exponent_sums(w: &Word) -> (i64, i64) {
    (w.exponent_sum(Gen::X), w.exponent_sum(Gen::Y))
}

/// The presentation ⟨x, y | r⟩ with a non-empty cyclically reduced relator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relator: Word,
}

impl Presentation {
    /// Cyclically reduces the given word and keeps the core as the relator.
    /// A word that reduces to the identity is rejected.
    pub fn new(relator: Word) -> Result<Presentation> {
        let (core, _conjugator) = relator.cyclic_reduce();
        if core.is_empty() {
            return Err(Error::EmptyRelator);
        }
        Ok(Presentation { relator: core })
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    pub fn exponent_sums(&self) -> (i64, i64) {
        exponent_sums(&self.relator)
    }

    /// First Betti number of the presented group: 2 iff both exponent sums
    /// vanish, else 1.
    pub fn betti(&self) -> u8 {
        if self.exponent_sums() == (0, 0) {
            2
        } else {
            1
        }
    }

    pub fn psi(&self) -> AbelianizationMap {
        let (a, b) = self.exponent_sums();
        if (a, b) == (0, 0) {
            return AbelianizationMap::Rank2;
        }
        let g = a.gcd(&b);
        AbelianizationMap::Rank1 { x: b / g, y: -a / g }
    }

    /// Simple means b₁ = 1 with x generating H₁/torsion and y trivial
    /// there: a = 0 and b ≠ 0. Returns false for b₁ = 2.
    pub fn is_simple(&self) -> bool {
        let (a, b) = self.exponent_sums();
        a == 0 && b != 0
    }

    /// Converts a b₁ = 1 presentation to a simple one by elementary Nielsen
    /// automorphisms chosen by the subtractive Euclidean algorithm on the
    /// exponent sums, landing on (0, b > 0). Returns the new presentation
    /// and the automorphism trace.
    pub fn to_simple(&self) -> Result<(Presentation, Vec<NielsenMove>)> {
        if self.betti() != 1 {
            return Err(Error::NotRankOne);
        }
        let mut moves = Vec::new();
        let (mut a, mut b) = self.exponent_sums();
        let mut word = self.relator.clone();
        let mut push = |mv: NielsenMove, word: &mut Word, a: &mut i64, b: &mut i64| {
            *word = mv.apply_to_word(word);
            let (na, nb) = mv.apply_to_sums(*a, *b);
            *a = na;
            *b = nb;
            moves.push(mv);
        };
        while a != 0 {
            if b == 0 {
                push(NielsenMove::Swap, &mut word, &mut a, &mut b);
            } else if a.abs() >= b.abs() {
                let sign = if (a > 0) == (b > 0) { -1 } else { 1 };
                push(NielsenMove::MultiplyYByX { sign }, &mut word, &mut a, &mut b);
            } else {
                let sign = if (a > 0) == (b > 0) { -1 } else { 1 };
                push(NielsenMove::MultiplyXByY { sign }, &mut word, &mut a, &mut b);
            }
        }
        if b < 0 {
            push(NielsenMove::InvertY, &mut word, &mut a, &mut b);
        }
        debug_assert_eq!((a, exponent_sums(&word).0), (0, 0));
        let simple = Presentation::new(word)?;
        debug_assert!(simple.is_simple());
        Ok((simple, moves))
    }
}

/// An elementary Nielsen automorphism of F(x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NielsenMove {
    /// x ↦ x·y^sign
    MultiplyXByY { sign: i8 },
    /// y ↦ y·x^sign
    MultiplyYByX { sign: i8 },
    /// x ↔ y
    Swap,
    /// x ↦ x⁻¹
    InvertX,
    /// y ↦ y⁻¹
    InvertY,
}

impl NielsenMove {
    /// Image of a single letter under the automorphism.
    fn letter_image(&self, l: Letter) -> Vec<Letter> {
        match (*self, l.gen) {
            (NielsenMove::MultiplyXByY { sign }, Gen::X) => {
                if l.sign == 1 {
                    vec![Letter::new(Gen::X, 1), Letter::new(Gen::Y, sign)]
                } else {
                    vec![Letter::new(Gen::Y, -sign), Letter::new(Gen::X, -1)]
                }
            }
            (NielsenMove::MultiplyYByX { sign }, Gen::Y) => {
                if l.sign == 1 {
                    vec![Letter::new(Gen::Y, 1), Letter::new(Gen::X, sign)]
                } else {
                    vec![Letter::new(Gen::X, -sign), Letter::new(Gen::Y, -1)]
                }
            }
            (NielsenMove::Swap, g) => vec![Letter::new(g.other(), l.sign)],
            (NielsenMove::InvertX, Gen::X) | (NielsenMove::InvertY, Gen::Y) => {
                vec![l.inverse()]
            }
            _ => vec![l],
        }
    }

    /// Applies the automorphism to a word and freely reduces.
    pub fn apply_to_word(&self, w: &Word) -> Word {
        let letters = w
            .letters()
            .iter()
            .flat_map(|&l| self.letter_image(l))
            .collect();
        Word::from_letters(letters).free_reduce()
    }

    /// Action on exponent sums; the 2×2 unimodular matrix of the move.
    pub fn apply_to_sums(&self, a: i64, b: i64) -> (i64, i64) {
        match *self {
            NielsenMove::MultiplyXByY { sign } => (a, b + sign as i64 * a),
            NielsenMove::MultiplyYByX { sign } => (a + sign as i64 * b, b),
            NielsenMove::Swap => (b, a),
            NielsenMove::InvertX => (-a, b),
            NielsenMove::InvertY => (a, -b),
        }
    }
}

/// Applies a move sequence left to right.
pub fn apply_moves(w: &Word, moves: &[NielsenMove]) -> Word {
    moves.iter().fold(w.clone(), |acc, mv| mv.apply_to_word(&acc))
}

/// A finite integer combination of lattice points: the abelianized image of
/// a group-ring element, living in the commutative Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentElt {
    rank: Rank,
    terms: BTreeMap<LatticePoint, i64>,
}

impl LaurentElt {
    pub fn zero(rank: Rank) -> LaurentElt {
        LaurentElt { rank, terms: BTreeMap::new() }
    }

    pub fn from_terms(rank: Rank, terms: Vec<(i64, LatticePoint)>) -> LaurentElt {
        let mut map = BTreeMap::new();
        for (c, p) in terms {
            assert_eq!(p.rank(), rank, "lattice point rank mismatch");
            *map.entry(p).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        LaurentElt { rank, terms: map }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn coeff(&self, p: &LatticePoint) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn add(&self, other: &LaurentElt) -> LaurentElt {
        assert_eq!(self.rank, other.rank, "laurent rank mismatch");
        let mut terms = self.terms.clone();
        for (p, &c) in &other.terms {
            *terms.entry(*p).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        LaurentElt { rank: self.rank, terms }
    }

    pub fn negate(&self) -> LaurentElt {
        LaurentElt {
            rank: self.rank,
            terms: self.terms.iter().map(|(p, &c)| (*p, -c)).collect(),
        }
    }

    /// Convolution product.
    pub fn multiply(&self, other: &LaurentElt) -> LaurentElt {
        assert_eq!(self.rank, other.rank, "laurent rank mismatch");
        let mut terms: BTreeMap<LatticePoint, i64> = BTreeMap::new();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                *terms.entry(p.add(q)).or_insert(0) += a * b;
            }
        }
        terms.retain(|_, c| *c != 0);
        LaurentElt { rank: self.rank, terms }
    }
}

/// Pushes a group-ring element through ψ, summing coefficients of words
/// with the same image. The total coefficient sum is preserved.
pub fn laurent_image(f: &RingElt, psi: &AbelianizationMap) -> LaurentElt {
    LaurentElt::from_terms(
        psi.rank(),
        f.terms().map(|(w, c)| (c, psi.image_of_word(w))).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn pres(s: &str) -> Presentation {
        Presentation::new(w(s)).unwrap()
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(exponent_sums(&w("xyXY")), (0, 0));
        assert_eq!(exponent_sums(&w("x^2y^-3")), (2, -3));
        assert_eq!(exponent_sums(&w(catalog::DUNFIELD)), (0, 0));
    }

    #[test]
    fn betti_examples() {
        assert_eq!(pres(catalog::DUNFIELD).betti(), 2);
        assert_eq!(pres(catalog::TREFOIL).betti(), 1);
        assert_eq!(pres("x^2y^-3").betti(), 1);
    }

    #[test]
    fn empty_relator_rejected() {
        assert_eq!(Presentation::new(w("xX")), Err(Error::EmptyRelator));
        assert_eq!(Presentation::new(Word::empty()), Err(Error::EmptyRelator));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(pres(catalog::DUNFIELD).psi(), AbelianizationMap::Rank2);

        // (a,b) = (0,5)
        let p = pres("y^5");
        assert_eq!(p.psi(), AbelianizationMap::Rank1 { x: 1, y: 0 });

        // (a,b) = (2,-3): psi(x) = -3, psi(y) = -2, and psi(r) = 0.
        let p = pres("x^2y^-3");
        let psi = p.psi();
        assert_eq!(psi, AbelianizationMap::Rank1 { x: -3, y: -2 });
        assert_eq!(psi.image_of_word(p.relator()), LatticePoint::One(0));
    }

    #[test]
    fn psi_kills_relator_and_is_coprime() {
        for s in ["x^2y^-3", "xyxYXY", "x^4y^2", "y^5", catalog::DUNFIELD] {
            let p = pres(s);
            let psi = p.psi();
            match psi {
                AbelianizationMap::Rank1 { x, y } => {
                    assert_eq!(x.gcd(&y), 1);
                }
                AbelianizationMap::Rank2 => {}
            }
            match psi.image_of_word(p.relator()) {
                LatticePoint::One(t) => assert_eq!(t, 0),
                LatticePoint::Two(a, b) => assert_eq!((a, b), (0, 0)),
            }
        }
    }

    #[test]
    fn laurent_image_examples() {
        let psi = AbelianizationMap::Rank2;
        let f = RingElt::from_terms(vec![(1, w("x")), (-1, Word::empty())]);
        let img = laurent_image(&f, &psi);
        assert_eq!(img.coeff(&LatticePoint::rank2(1, 0)), 1);
        assert_eq!(img.coeff(&LatticePoint::rank2(0, 0)), -1);

        // x and yxy⁻¹ abelianize identically.
        let f = RingElt::from_terms(vec![(1, w("x")), (1, w("yxY"))]);
        let img = laurent_image(&f, &psi);
        assert_eq!(img.coeff(&LatticePoint::rank2(1, 0)), 2);
        assert_eq!(img.coefficient_sum(), 2);
    }

    #[test]
    fn laurent_image_is_multiplicative() {
        let psi = AbelianizationMap::Rank2;
        let f = RingElt::from_terms(vec![(2, w("xy")), (-1, w("Y")), (3, Word::empty())]);
        let g = RingElt::from_terms(vec![(1, w("yx")), (5, w("XX"))]);
        assert_eq!(
            laurent_image(&f.multiply(&g), &psi),
            laurent_image(&f, &psi).multiply(&laurent_image(&g, &psi))
        );
    }

    #[test]
    fn simplicity_examples() {
        assert!(pres("y^3").is_simple());
        assert!(!pres("x^2y^-3").is_simple());
        assert!(!pres(catalog::DUNFIELD).is_simple());
    }

    #[test]
    fn to_simple_identity_on_simple_input() {
        for s in ["y^5", "xyXYy"] {
            let p = pres(s);
            assert!(p.is_simple());
            let (q, moves) = p.to_simple().unwrap();
            assert!(moves.is_empty());
            assert_eq!(q, p);
        }
    }

    #[test]
    fn to_simple_trefoil() {
        let p = pres(catalog::TREFOIL);
        let (q, moves) = p.to_simple().unwrap();
        assert!(q.is_simple());
        assert!(!moves.is_empty());
        // Trace replay: moves applied to the old relator, then cyclically
        // reduced, give the new relator.
        let replay = apply_moves(p.relator(), &moves);
        let (core, _) = replay.cyclic_reduce();
        assert_eq!(&core, q.relator());
        // Exponent sums transform by the product of the move matrices.
        let (mut a, mut b) = p.exponent_sums();
        for mv in &moves {
            let (na, nb) = mv.apply_to_sums(a, b);
            a = na;
            b = nb;
        }
        assert_eq!((a, b), q.exponent_sums());
    }

    #[test]
    fn to_simple_rejects_rank_two() {
        assert_eq!(pres(catalog::DUNFIELD).to_simple().unwrap_err(), Error::NotRankOne);
    }

    #[test]
    fn to_simple_euclid_paths() {
        for s in ["xyxYXY", "x^3y^2", "x^2y^-3", "xy", "x^5Y", "x^7y^11xY"] {
            let p = pres(s);
            if p.betti() != 1 {
                continue;
            }
            let (q, moves) = p.to_simple().unwrap();
            assert!(q.is_simple());
            let (a, b) = q.exponent_sums();
            assert_eq!(a, 0);
            assert!(b > 0);
            let replay = apply_moves(p.relator(), &moves);
            assert_eq!(&replay.cyclic_reduce().0, q.relator());
        }
    }
}

//! Words in the free group F = F(x, y): parsing, free and cyclic reduction,
//! and Fox derivatives.
//!
//! Text grammar (bit-exact): `word := term+; term := letter exponent?;
//! letter := 'x'|'y'|'X'|'Y'; exponent := '^' '-'? digit+` with a nonzero
//! exponent. `X` means x⁻¹ and `Y` means y⁻¹; whitespace is ignored.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groupring::RingElt;

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::X => Gen::Y,
            Gen::Y => Gen::X,
        }
    }

    fn ch(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
        }
    }
}

/// A single signed letter x^{±1} or y^{±1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: Gen, sign: i8) -> Letter {
        debug_assert!(sign == 1 || sign == -1);
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: -self.sign }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign == -other.sign
    }

    /// Fixed total order x < x⁻¹ < y < y⁻¹, used for canonical (shortlex)
    /// word comparison.
    fn index(self) -> u8 {
        match (self.gen, self.sign) {
            (Gen::X, 1) => 0,
            (Gen::X, _) => 1,
            (Gen::Y, 1) => 2,
            (Gen::Y, _) => 3,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Letter) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Letter) -> Ordering {
        self.index().cmp(&other.index())
    }
}

/// A word in F(x, y), stored as a letter sequence. Construction does not
/// reduce; see [`Word::free_reduce`] and [`Word::cyclic_reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Words compare in shortlex order: by length first, then letter by letter.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn single(gen: Gen, sign: i8) -> Word {
        Word { letters: vec![Letter::new(gen, sign)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].is_inverse_of(w[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(&a), Some(&b)) => self.len() == 1 || !a.is_inverse_of(b),
                _ => true,
            }
    }

    /// Signed count of letters of the given generator.
    pub fn exponent_sum(&self, gen: Gen) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.sign as i64)
            .sum()
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation without free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The unique reduced word equal to this one in F. Idempotent and
    /// length-non-increasing.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { letters: stack }
    }

    /// Reduced product of two words.
    pub fn reduced_concat(&self, other: &Word) -> Word {
        self.concat(other).free_reduce()
    }

    /// Splits `self` as conjugator · core · conjugator⁻¹ with a cyclically
    /// reduced core. Returns `(core, conjugator)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let reduced = self.free_reduce();
        let mut letters = reduced.letters;
        let mut conjugator = Vec::new();
        while letters.len() >= 2 && letters[0].is_inverse_of(*letters.last().unwrap()) {
            conjugator.push(letters[0]);
            letters.pop();
            letters.remove(0);
        }
        (Word { letters }, Word { letters: conjugator })
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return Word::empty();
        }
        let k = k % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// All `len()` rotations of the word, in rotation order.
    pub fn cyclic_permutations(&self) -> Vec<Word> {
        (0..self.len()).map(|k| self.rotate_left(k)).collect()
    }

    /// Raw Fox-derivative summands of the reduced form of `w`, one per
    /// occurrence of `gen`^{±1}, without merging: a letter g at position i
    /// contributes +prefix, a letter g⁻¹ contributes −(prefix·g⁻¹).
    pub fn fox_summands(&self, gen: Gen) -> Vec<(i64, Word)> {
        let w = self.free_reduce();
        let mut out = Vec::new();
        for (i, &l) in w.letters.iter().enumerate() {
            if l.gen != gen {
                continue;
            }
            if l.sign == 1 {
                out.push((1, Word { letters: w.letters[..i].to_vec() }));
            } else {
                out.push((-1, Word { letters: w.letters[..=i].to_vec() }));
            }
        }
        out
    }

    /// Fox derivative ∂w/∂gen as a merged group-ring element.
    pub fn fox_derivative(&self, gen: Gen) -> RingElt {
        RingElt::from_terms(self.fox_summands(gen))
    }

    /// Parses the text grammar. No reduction is performed: `"xX"` parses to
    /// a length-2 word. Empty (or all-whitespace) text parses to the empty
    /// word so the parser stays reusable for conjugators and meridians.
    pub fn parse(text: &str) -> Result<Word> {
        // Guards the CLI against pathological exponents; relators of
        // interest are tiny.
        const MAX_EXPONENT: i64 = 1 << 20;
        let mut letters = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some((pos, ch)) = chars.next() {
            if ch.is_whitespace() {
                continue;
            }
            let (gen, sign) = match ch {
                'x' => (Gen::X, 1),
                'y' => (Gen::Y, 1),
                'X' => (Gen::X, -1),
                'Y' => (Gen::Y, -1),
                _ => return Err(Error::UnknownCharacter { ch, pos }),
            };
            let mut exponent: i64 = 1;
            if let Some(&(caret_pos, '^')) = chars.peek() {
                chars.next();
                let mut neg = false;
                if let Some(&(_, '-')) = chars.peek() {
                    chars.next();
                    neg = true;
                }
                let mut digits = 0u32;
                let mut value: i64 = 0;
                while let Some(&(_, d)) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        chars.next();
                        digits += 1;
                        value = value.saturating_mul(10).saturating_add(v as i64);
                    } else {
                        break;
                    }
                }
                if digits == 0 || value > MAX_EXPONENT {
                    return Err(Error::MalformedExponent { pos: caret_pos });
                }
                if value == 0 {
                    return Err(Error::ZeroExponent { pos: caret_pos });
                }
                exponent = if neg { -value } else { value };
            }
            let letter = Letter::new(gen, sign * exponent.signum() as i8);
            for _ in 0..exponent.unsigned_abs() {
                letters.push(letter);
            }
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    /// Compact caret form, e.g. `x^2yx^-1`. Round-trips through
    /// [`Word::parse`]. The empty word prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let exp = run as i64 * l.sign as i64;
            if exp == 1 {
                write!(f, "{}", l.gen.ch())?;
            } else {
                write!(f, "{}^{}", l.gen.ch(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_transliterates_without_reducing() {
        let word = w("x^2yX");
        assert_eq!(word.len(), 4);
        assert_eq!(word.to_string(), "x^2yx^-1");

        let xx = w("xX");
        assert_eq!(xx.len(), 2);
        assert!(!xx.is_reduced());
    }

    #[test]
    fn parse_dunfield_relator_has_42_letters() {
        let r = w(catalog::DUNFIELD);
        assert_eq!(r.len(), 42);
        assert!(r.is_cyclically_reduced());
        assert_eq!(r.free_reduce(), r);
        let (core, conj) = r.cyclic_reduce();
        assert_eq!(core, r);
        assert!(conj.is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Word::parse("xz"),
            Err(Error::UnknownCharacter { ch: 'z', pos: 1 })
        ));
        assert!(matches!(Word::parse("x^"), Err(Error::MalformedExponent { .. })));
        assert!(matches!(Word::parse("x^-"), Err(Error::MalformedExponent { .. })));
        assert!(matches!(Word::parse("x^0"), Err(Error::ZeroExponent { .. })));
        assert!(matches!(Word::parse("x^-0"), Err(Error::ZeroExponent { .. })));
        assert_eq!(Word::parse("  x \t y ").unwrap(), w("xy"));
    }

    #[test]
    fn negative_exponents_invert() {
        assert_eq!(w("x^-3"), w("XXX"));
        assert_eq!(w("X^-2"), w("xx"));
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("xX").free_reduce().is_empty());
        assert_eq!(w("xyYx").free_reduce(), w("xx"));
        let r = w("xyXYyxYX");
        let red = r.free_reduce();
        assert_eq!(red, red.free_reduce());
        assert!(red.len() <= r.len());
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, conj) = w("xyX").cyclic_reduce();
        assert_eq!(core, w("y"));
        assert_eq!(conj, w("x"));
        // w = conj · core · conj⁻¹
        assert_eq!(conj.concat(&core).concat(&conj.invert()).free_reduce(), w("xyX"));

        let (core, conj) = Word::empty().cyclic_reduce();
        assert!(core.is_empty() && conj.is_empty());
    }

    #[test]
    fn invert_concat_rotations() {
        assert_eq!(w("xy").invert(), w("YX"));
        assert!(w("x").concat(&w("X")).free_reduce().is_empty());
        assert_eq!(w("xyx").cyclic_permutations().len(), 3);
        assert_eq!(w("xyx").rotate_left(1), w("yxx"));
    }

    #[test]
    fn fox_derivative_defining_rules() {
        assert_eq!(w("x").fox_derivative(Gen::X), RingElt::one());
        assert!(w("y").fox_derivative(Gen::X).is_zero());
        assert!(Word::empty().fox_derivative(Gen::X).is_zero());
        // ∂(x⁻¹)/∂x = −x⁻¹
        assert_eq!(
            w("X").fox_derivative(Gen::X),
            RingElt::from_terms(vec![(-1, w("X"))])
        );
        // ∂(xyx⁻¹y⁻¹)/∂x = 1 − xyx⁻¹
        assert_eq!(
            w("xyXY").fox_derivative(Gen::X),
            RingElt::from_terms(vec![(1, Word::empty()), (-1, w("xyX"))])
        );
        // ∂(x²)/∂x = 1 + x
        assert_eq!(
            w("x^2").fox_derivative(Gen::X),
            RingElt::from_terms(vec![(1, Word::empty()), (1, w("x"))])
        );
    }

    #[test]
    fn fox_summands_of_reduced_words_are_distinct() {
        let r = w(catalog::DUNFIELD);
        for gen in [Gen::X, Gen::Y] {
            let summands = r.fox_summands(gen);
            for i in 0..summands.len() {
                for j in i + 1..summands.len() {
                    assert_ne!(summands[i].1, summands[j].1);
                }
            }
        }
    }

    #[test]
    fn shortlex_order() {
        assert!(Word::empty() < w("x"));
        assert!(w("y") < w("xx"));
        assert!(w("x") < w("X"));
        assert!(w("xy") < w("xY"));
    }

    #[test]
    fn display_round_trip() {
        for s in ["", "x", "x^2yx^-1y^3", "XYxy", "x^-1"] {
            let word = w(s);
            assert_eq!(Word::parse(&word.to_string()).unwrap(), word);
        }
    }
}

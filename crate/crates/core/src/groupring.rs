//! Exact arithmetic in the integral group ring ℤ[F] of the free group:
//! sums, products, the inversion involution, v-components under an
//! abelianization map, and the monomial test.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::{AbelianizationMap, LatticePoint};
use crate::fgword::Word;

/// A finite integer combination of reduced words. No zero coefficients are
/// stored and all key words are freely reduced; equality is term-set
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElt {
    terms: BTreeMap<Word, i64>,
}

impl RingElt {
    pub fn zero() -> RingElt {
        RingElt::default()
    }

    pub fn one() -> RingElt {
        RingElt::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> RingElt {
        RingElt::from_terms(vec![(1, w)])
    }

    /// Builds an element from raw summands, reducing every word and merging
    /// coefficients of identical words.
    pub fn from_terms(terms: Vec<(i64, Word)>) -> RingElt {
        let mut map = BTreeMap::new();
        for (coeff, word) in terms {
            if coeff == 0 {
                continue;
            }
            *map.entry(word.free_reduce()).or_insert(0) += coeff;
        }
        let mut elt = RingElt { terms: map };
        elt.prune();
        elt
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in shortlex word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &RingElt) -> RingElt {
        let mut terms = self.terms.clone();
        for (w, &c) in &other.terms {
            *terms.entry(w.clone()).or_insert(0) += c;
        }
        let mut out = RingElt { terms };
        out.prune();
        out
    }

    pub fn negate(&self) -> RingElt {
        RingElt {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &RingElt) -> RingElt {
        self.add(&other.negate())
    }

    pub fn scale(&self, k: i64) -> RingElt {
        if k == 0 {
            return RingElt::zero();
        }
        RingElt {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), k * c)).collect(),
        }
    }

    /// Ring product; each product word is reduced and coefficients of
    /// identical words merged.
    pub fn multiply(&self, other: &RingElt) -> RingElt {
        let mut terms: BTreeMap<Word, i64> = BTreeMap::new();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let w = u.reduced_concat(v);
                *terms.entry(w).or_insert(0) += a * b;
            }
        }
        let mut out = RingElt { terms };
        out.prune();
        out
    }

    /// Left/right translate g·f·h for single words g, h.
    pub fn translate(&self, left: &Word, right: &Word) -> RingElt {
        RingElt::from_terms(
            self.terms()
                .map(|(w, c)| (c, left.reduced_concat(w).reduced_concat(right)))
                .collect(),
        )
    }

    /// The involution induced by g ↦ g⁻¹; coefficients are preserved.
    pub fn involution(&self) -> RingElt {
        RingElt {
            terms: self.terms.iter().map(|(w, &c)| (w.invert(), c)).collect(),
        }
    }

    /// True iff the element is ±g for a single group element g.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|&c| c == 1 || c == -1)
    }

    /// The v-component: the sub-sum of terms whose image under ψ equals v.
    pub fn component(&self, v: &LatticePoint, psi: &AbelianizationMap) -> RingElt {
        RingElt {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| psi.image_of_word(w) == *v)
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }
}

impl Add for &RingElt {
    type Output = RingElt;
    fn add(self, rhs: &RingElt) -> RingElt {
        RingElt::add(self, rhs)
    }
}

impl Sub for &RingElt {
    type Output = RingElt;
    fn sub(self, rhs: &RingElt) -> RingElt {
        RingElt::sub(self, rhs)
    }
}

impl Mul for &RingElt {
    type Output = RingElt;
    fn mul(self, rhs: &RingElt) -> RingElt {
        self.multiply(rhs)
    }
}

impl Neg for &RingElt {
    type Output = RingElt;
    fn neg(self) -> RingElt {
        self.negate()
    }
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}{w}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for RingElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> =
            self.terms().map(|(w, c)| (c, w.to_string())).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<RingElt, D::Error> {
        let pairs = Vec::<(i64, String)>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (c, s) in pairs {
            let w = Word::parse(&s).map_err(serde::de::Error::custom)?;
            terms.push((c, w));
        }
        Ok(RingElt::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::Presentation;
    use crate::catalog;
    use crate::fgword::Gen;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn elt(terms: &[(i64, &str)]) -> RingElt {
        RingElt::from_terms(terms.iter().map(|&(c, s)| (c, w(s))).collect())
    }

    #[test]
    fn ring_arithmetic() {
        // (x − 1)(x + 1) = x² − 1
        let xm1 = elt(&[(1, "x"), (-1, "")]);
        let xp1 = elt(&[(1, "x"), (1, "")]);
        assert_eq!(&xm1 * &xp1, elt(&[(1, "x^2"), (-1, "")]));

        let f = elt(&[(2, "xy"), (-1, "Y")]);
        assert!((&f + &f.negate()).is_zero());

        // (1 − xyx⁻¹)·x = x − xy
        let a = elt(&[(1, ""), (-1, "xyX")]);
        assert_eq!(&a * &RingElt::from_word(w("x")), elt(&[(1, "x"), (-1, "xy")]));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(elt(&[(1, "x"), (-1, "")]).involution(), elt(&[(1, "X"), (-1, "")]));
        assert_eq!(elt(&[(2, "xy")]).involution(), elt(&[(2, "YX")]));
        let f = elt(&[(3, "xYx"), (-2, "y"), (1, "")]);
        assert_eq!(f.involution().involution(), f);
    }

    #[test]
    fn monomial_test() {
        assert!(elt(&[(-1, "xy")]).is_monomial());
        assert!(!elt(&[(2, "x")]).is_monomial());
        assert!(!elt(&[(1, "x"), (1, "y")]).is_monomial());
        assert!(!RingElt::zero().is_monomial());
    }

    #[test]
    fn components_partition() {
        let p = Presentation::new(w(catalog::DUNFIELD)).unwrap();
        let psi = p.psi();
        let rx = p.relator().fox_derivative(Gen::X);
        let mut total = RingElt::zero();
        let mut points: Vec<LatticePoint> =
            rx.terms().map(|(word, _)| psi.image_of_word(word)).collect();
        points.sort();
        points.dedup();
        for v in &points {
            let comp = rx.component(v, &psi);
            assert!(comp.terms().all(|(word, _)| psi.image_of_word(word) == *v));
            total = &total + &comp;
        }
        assert_eq!(total, rx);
    }

    #[test]
    fn dunfield_vertex_components() {
        let p = Presentation::new(w(catalog::DUNFIELD)).unwrap();
        let psi = p.psi();
        let rx = p.relator().fox_derivative(Gen::X);

        // (r_x)^{v1} is the single word below with coefficient +1.
        let v1 = rx.component(&LatticePoint::rank2(0, 1), &psi);
        assert_eq!(
            v1,
            elt(&[(1, "x^2yX yx^2yX y^-3 X yx^2yX yxYx^-2Y xYx^-2Y xy^3xYx^-2")])
        );
        assert!(v1.is_monomial());

        // (r_x)^{w1} is a monomial as well.
        let w1 = rx.component(&LatticePoint::rank2(2, 1), &psi);
        assert_eq!(w1, elt(&[(1, "x^2yXyx^2yXy^-3Xyx")]));
        assert!(w1.is_monomial());

        // (r_x)^{v2} = x²yx⁻¹yx²yx⁻¹·(−1 + y⁻³x⁻¹yx²yx⁻¹y): two terms.
        let v2 = rx.component(&LatticePoint::rank2(2, 3), &psi);
        let prefix = RingElt::from_word(w("x^2yXyx^2yX"));
        let inner = elt(&[(-1, ""), (1, "y^-3Xyx^2yXy")]);
        assert_eq!(v2, &prefix * &inner);
        assert_eq!(v2.num_terms(), 2);
        assert!(!v2.is_monomial());

        // (r_x)^{w2} has two terms.
        let w2 = rx.component(&LatticePoint::rank2(0, -1), &psi);
        assert_eq!(w2.num_terms(), 2);
        assert!(!w2.is_monomial());
    }
}

//! Representation-independent reference semantics for the catalog monoids.
//!
//! Each supported monoid gets a canonical element type and an exact
//! multiplication law, independent of any matrix representation. These models
//! serve as the oracle when checking that a representation is injective.
//!
//! | monoid | element | canonical word |
//! |---|---|---|
//! | `N`, `C(k,l)` | `Exponent(m)` | `a^m` |
//! | `B` | `Pair(i, j)` | `b^i a^j` |
//! | `M1` | `Pair(m, n)` | `a^m b^n` |
//! | `M6(k)` | `Pair(α, β)` | `b^α a^β` |
//! | `M9(k)` | `Pair(α, β)` | `a^β b^α` |
//! | `M5` | `Triple(α, β, γ)` | `(ba)^α a^β b^γ` |
//! | `M8` | `Triple(α, β, γ)` | `b^γ a^β (ab)^α` |
//! | `M2`, `M3`, `K` | `Twisted(m, n)` | see below |
//!
//! `M2`, `M3` and `K` live in `Z ⋊ Z` with product
//! `(m1, n1)(m2, n2) = (m1 + (-1)^n1 m2, n1 + n2)`. Generator images are
//! `a = (1, 0), b = (0, 1)` for `M3`; `a = (-1, 1), b = (0, 1)` for `M2`
//! (the image of `a ↦ ba, b ↦ b` inside `M3`); and `a = (0, 1), b = (1, -1)`
//! for `K`.
//!
//! # The product table of `M3`
//!
//! On normal forms `b^α a^β` and `b^α a^β b` (`β >= 1`) the twisted law gives
//!
//! ```text
//! b^α1 a^β1 · b^α2 a^β2 = b^(α1+α2)   a^(β1+β2)       if α2 is even
//!                       = b^(α1+α2)   a^(β2-β1)       if α2 is odd, β2 >= β1
//!                       = b^(α1+α2-1) a^(β1-β2) b     if α2 is odd, β1 > β2
//! ```
//!
//! The version of this table usually quoted writes `a^(β1-β2)` in the second
//! row and `a^(β2-β1)` without the trailing `b` in the third, which produces
//! negative exponents and the wrong element. [`m3_form_product`] implements
//! the table above; it is checked against the twisted law and the matrix
//! representation in the tests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::MonoidId;
use crate::rewriting::{RewriteSystem, Rule};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelElement {
    Exponent(u64),
    Pair(u64, u64),
    Twisted(i64, i64),
    Triple(u64, u64, u64),
}

impl ModelElement {
    pub fn fields(&self) -> Vec<i64> {
        match *self {
            ModelElement::Exponent(m) => vec![m as i64],
            ModelElement::Pair(x, y) => vec![x as i64, y as i64],
            ModelElement::Twisted(m, n) => vec![m, n],
            ModelElement::Triple(x, y, z) => vec![x as i64, y as i64, z as i64],
        }
    }
}

impl fmt::Display for ModelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: Vec<String> = self.fields().iter().map(i64::to_string).collect();
        write!(f, "({})", fields.join(","))
    }
}

/// JSON form: `{"monoid":"M5","elem":[1,2,1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedElement {
    pub monoid: MonoidId,
    pub elem: Vec<i64>,
}

/// The reference model of one monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Model {
    id: MonoidId,
}

fn parity_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn twisted_mul((m1, n1): (i64, i64), (m2, n2): (i64, i64)) -> (i64, i64) {
    (m1 + parity_sign(n1) * m2, n1 + n2)
}

fn bicyclic_mul((i1, j1): (u64, u64), (i2, j2): (u64, u64)) -> (u64, u64) {
    let t = j1.min(i2);
    (i1 + i2 - t, j1 + j2 - t)
}

fn m6_mul(k: u64, (a1, b1): (u64, u64), (a2, b2): (u64, u64)) -> (u64, u64) {
    if a2 != 0 {
        (a1 + b1 * (k - 1) + a2, b2)
    } else {
        (a1, b1 + b2)
    }
}

fn m5_mul((a1, b1, g1): (u64, u64, u64), (a2, b2, g2): (u64, u64, u64)) -> (u64, u64, u64) {
    if a2 != 0 {
        (a1 + g1 + a2, b2, g2)
    } else if b2 != 0 && g1 != 0 {
        (a1 + g1, b2 - 1, g2)
    } else if b2 != 0 {
        (a1, b1 + b2, g2)
    } else {
        (a1, b1, g1 + g2)
    }
}

fn monogenic_reduce(k: u64, l: u64, m: u64) -> u64 {
    if m < k {
        m
    } else {
        l + (m - l) % (k - l)
    }
}

/// A normal form `b^b a^a` (optionally followed by one `b`) of `M3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct M3Form {
    pub b: u64,
    pub a: u64,
    pub trailing_b: bool,
}

impl M3Form {
    pub fn word(self) -> Word {
        let mut w = Word::power_of(b'b', self.b as usize).concat(&Word::power_of(b'a', self.a as usize));
        if self.trailing_b {
            w = w.concat(&Word::power_of(b'b', 1));
        }
        w
    }
}

/// Product of `b^b1 a^a1` and `b^b2 a^a2` in `M3`, as a normal form.
pub fn m3_form_product(b1: u64, a1: u64, b2: u64, a2: u64) -> M3Form {
    if b2.is_multiple_of(2) {
        M3Form {
            b: b1 + b2,
            a: a1 + a2,
            trailing_b: false,
        }
    } else if a2 >= a1 {
        M3Form {
            b: b1 + b2,
            a: a2 - a1,
            trailing_b: false,
        }
    } else {
        M3Form {
            b: b1 + b2 - 1,
            a: a1 - a2,
            trailing_b: true,
        }
    }
}

impl Model {
    /// Fails with [`Error::UnsupportedModel`] for `M4` and `M7`.
    pub fn new(id: MonoidId) -> Result<Self> {
        let id = id.validate()?;
        match id {
            MonoidId::M4 | MonoidId::M7 => Err(Error::UnsupportedModel(id)),
            _ => Ok(Model { id }),
        }
    }

    pub fn id(&self) -> MonoidId {
        self.id
    }

    fn wrong(&self, x: &ModelElement) -> Error {
        Error::WrongElement {
            monoid: self.id,
            element: x.to_string(),
        }
    }

    pub fn one(&self) -> ModelElement {
        match self.id {
            MonoidId::FreeMonogenic | MonoidId::Monogenic { .. } => ModelElement::Exponent(0),
            MonoidId::M2 | MonoidId::M3 | MonoidId::Klein => ModelElement::Twisted(0, 0),
            MonoidId::M5 | MonoidId::M8 => ModelElement::Triple(0, 0, 0),
            _ => ModelElement::Pair(0, 0),
        }
    }

    pub fn generator(&self, letter: u8) -> Result<ModelElement> {
        use ModelElement::*;
        let g = match (self.id, letter) {
            (MonoidId::FreeMonogenic, b'a') => Exponent(1),
            (MonoidId::Monogenic { k, l }, b'a') => Exponent(monogenic_reduce(k.into(), l.into(), 1)),
            (MonoidId::Bicyclic | MonoidId::M6(_) | MonoidId::M9(_), b'a') => Pair(0, 1),
            (MonoidId::Bicyclic | MonoidId::M6(_) | MonoidId::M9(_), b'b') => Pair(1, 0),
            (MonoidId::M1, b'a') => Pair(1, 0),
            (MonoidId::M1, b'b') => Pair(0, 1),
            (MonoidId::M3, b'a') => Twisted(1, 0),
            (MonoidId::M3, b'b') => Twisted(0, 1),
            (MonoidId::M2, b'a') => Twisted(-1, 1),
            (MonoidId::M2, b'b') => Twisted(0, 1),
            (MonoidId::Klein, b'a') => Twisted(0, 1),
            (MonoidId::Klein, b'b') => Twisted(1, -1),
            (MonoidId::M5 | MonoidId::M8, b'a') => Triple(0, 1, 0),
            (MonoidId::M5 | MonoidId::M8, b'b') => Triple(0, 0, 1),
            _ => {
                return Err(Error::UnknownLetter {
                    letter: letter as char,
                    alphabet: String::from_utf8_lossy(self.id.alphabet()).into_owned(),
                })
            }
        };
        Ok(g)
    }

    pub fn mul(&self, x: &ModelElement, y: &ModelElement) -> Result<ModelElement> {
        use ModelElement::*;
        let r = match (self.id, *x, *y) {
            (MonoidId::FreeMonogenic, Exponent(m1), Exponent(m2)) => Exponent(m1 + m2),
            (MonoidId::Monogenic { k, l }, Exponent(m1), Exponent(m2)) if m1 < k.into() && m2 < k.into() => {
                Exponent(monogenic_reduce(k.into(), l.into(), m1 + m2))
            }
            (MonoidId::Bicyclic, Pair(i1, j1), Pair(i2, j2)) => {
                let (i, j) = bicyclic_mul((i1, j1), (i2, j2));
                Pair(i, j)
            }
            (MonoidId::M1, Pair(m1, n1), Pair(m2, n2)) => Pair(m1 + m2, n1 + n2),
            (MonoidId::M6(k), Pair(a1, b1), Pair(a2, b2)) => {
                let (a, b) = m6_mul(k.into(), (a1, b1), (a2, b2));
                Pair(a, b)
            }
            (MonoidId::M9(k), Pair(a1, b1), Pair(a2, b2)) => {
                let (a, b) = m6_mul(k.into(), (a2, b2), (a1, b1));
                Pair(a, b)
            }
            (MonoidId::M2 | MonoidId::M3 | MonoidId::Klein, Twisted(m1, n1), Twisted(m2, n2)) => {
                let (m, n) = twisted_mul((m1, n1), (m2, n2));
                Twisted(m, n)
            }
            (MonoidId::M5, Triple(a1, b1, g1), Triple(a2, b2, g2)) => {
                let (a, b, g) = m5_mul((a1, b1, g1), (a2, b2, g2));
                Triple(a, b, g)
            }
            (MonoidId::M8, Triple(a1, b1, g1), Triple(a2, b2, g2)) => {
                let (a, b, g) = m5_mul((a2, b2, g2), (a1, b1, g1));
                Triple(a, b, g)
            }
            (_, x, y) => {
                let bad = if self.kind_matches(&x) { y } else { x };
                return Err(self.wrong(&bad));
            }
        };
        Ok(r)
    }

    fn kind_matches(&self, x: &ModelElement) -> bool {
        std::mem::discriminant(x) == std::mem::discriminant(&self.one())
    }

    /// Image of a word: the product of its generators' images.
    pub fn from_word(&self, w: &Word) -> Result<ModelElement> {
        w.letters()
            .iter()
            .try_fold(self.one(), |acc, &c| self.mul(&acc, &self.generator(c)?))
    }

    /// The canonical word of `x`; `model.from_word(&model.canonical_word(x)?) == x`.
    pub fn canonical_word(&self, x: &ModelElement) -> Result<Word> {
        use ModelElement::*;
        let pw = |c: u8, n: u64| Word::power_of(c, n as usize);
        let no_word = || Error::NoCanonicalWord {
            monoid: self.id,
            element: x.to_string(),
        };
        let w = match (self.id, *x) {
            (MonoidId::FreeMonogenic, Exponent(m)) => pw(b'a', m),
            (MonoidId::Monogenic { k, .. }, Exponent(m)) if m < k.into() => pw(b'a', m),
            (MonoidId::Bicyclic | MonoidId::M6(_), Pair(i, j)) => pw(b'b', i).concat(&pw(b'a', j)),
            (MonoidId::M9(_), Pair(i, j)) => pw(b'a', j).concat(&pw(b'b', i)),
            (MonoidId::M1, Pair(m, n)) => pw(b'a', m).concat(&pw(b'b', n)),
            (MonoidId::M5, Triple(a, b, g)) => Word::parse("ba")?
                .pow(a as usize)
                .concat(&pw(b'a', b))
                .concat(&pw(b'b', g)),
            (MonoidId::M8, Triple(a, b, g)) => pw(b'b', g)
                .concat(&pw(b'a', b))
                .concat(&Word::parse("ab")?.pow(a as usize)),
            (MonoidId::M3, Twisted(m, n)) => m3_canonical(m, n).ok_or_else(no_word)?.word(),
            (MonoidId::M2, Twisted(m, n)) => m2_canonical(m, n).ok_or_else(no_word)?,
            (MonoidId::Klein, Twisted(m, n)) => klein_canonical(m, n),
            (_, x) => return Err(self.wrong(&x)),
        };
        Ok(w)
    }

    /// Canonical elements with every exponent field at most `bound` (all
    /// elements for finite monogenic monoids; `|m|, |n| <= bound` for the
    /// Klein group), sorted by canonical word in length-lexicographic order.
    pub fn pool(&self, bound: u64) -> Vec<ModelElement> {
        use ModelElement::*;
        let r = 0..=bound;
        let mut out: Vec<ModelElement> = match self.id {
            MonoidId::FreeMonogenic => r.map(Exponent).collect(),
            MonoidId::Monogenic { k, .. } => (0..u64::from(k)).map(Exponent).collect(),
            MonoidId::Bicyclic | MonoidId::M1 | MonoidId::M6(_) | MonoidId::M9(_) => {
                r.clone().flat_map(|x| r.clone().map(move |y| Pair(x, y))).collect()
            }
            MonoidId::M5 | MonoidId::M8 => r
                .clone()
                .flat_map(|x| r.clone().flat_map(move |y| (0..=bound).map(move |z| Triple(x, y, z))))
                .collect(),
            MonoidId::M3 => {
                let mut v = Vec::new();
                for b in 0..=bound {
                    for a in 0..=bound {
                        for trailing_b in [false, true] {
                            if trailing_b && a == 0 {
                                continue;
                            }
                            let f = M3Form { b, a, trailing_b };
                            v.push(self.from_word(&f.word()).expect("normal forms are words over {a,b}"));
                        }
                    }
                }
                v
            }
            MonoidId::M2 => {
                let mut v = Vec::new();
                for p in 0..=bound {
                    for q in 0..=bound {
                        for tail in [0, 1] {
                            let w = m2_form_word(p, q, tail == 1);
                            v.push(self.from_word(&w).expect("normal forms are words over {a,b}"));
                        }
                    }
                }
                v
            }
            MonoidId::Klein => {
                let b = bound as i64;
                (-b..=b).flat_map(|m| (-b..=b).map(move |n| Twisted(m, n))).collect()
            }
            MonoidId::M4 | MonoidId::M7 => unreachable!("no model is constructed for M4/M7"),
        };
        let mut keyed: Vec<(Word, ModelElement)> = out
            .drain(..)
            .map(|e| (self.canonical_word(&e).expect("pool elements have canonical words"), e))
            .collect();
        keyed.sort_by(|x, y| x.0.shortlex_key().cmp(&y.0.shortlex_key()));
        keyed.dedup_by(|x, y| x.1 == y.1);
        keyed.into_iter().map(|(_, e)| e).collect()
    }

    pub fn tag(&self, x: &ModelElement) -> TaggedElement {
        TaggedElement {
            monoid: self.id,
            elem: x.fields(),
        }
    }

    /// Parses `{"monoid":..,"elem":[..]}` back into an element of this model.
    pub fn untag(&self, t: &TaggedElement) -> Result<ModelElement> {
        if t.monoid != self.id {
            return Err(Error::InvalidArgument(format!(
                "element of {} given to {}",
                t.monoid, self.id
            )));
        }
        let nat = |v: i64| u64::try_from(v).map_err(|_| Error::InvalidArgument(format!("negative exponent {v}")));
        let x = match (self.one(), t.elem.as_slice()) {
            (ModelElement::Exponent(_), [m]) => ModelElement::Exponent(nat(*m)?),
            (ModelElement::Pair(..), [x, y]) => ModelElement::Pair(nat(*x)?, nat(*y)?),
            (ModelElement::Twisted(..), [m, n]) => ModelElement::Twisted(*m, *n),
            (ModelElement::Triple(..), [x, y, z]) => ModelElement::Triple(nat(*x)?, nat(*y)?, nat(*z)?),
            _ => return Err(Error::InvalidArgument(format!("wrong arity for {}", self.id))),
        };
        // reject exponents outside a finite monogenic monoid and twisted
        // elements outside the image
        self.canonical_word(&x)?;
        Ok(x)
    }

    /// A complete rewriting system whose irreducible words are exactly the
    /// canonical words, where one is hard-coded.
    pub fn rewriting_system(&self) -> Option<RewriteSystem> {
        let w = |s: &str| Word::parse(s).expect("static rule");
        let rules = match self.id {
            MonoidId::FreeMonogenic => vec![],
            MonoidId::Monogenic { k, l } => {
                vec![Rule::new(
                    Word::power_of(b'a', k as usize),
                    Word::power_of(b'a', l as usize),
                )]
            }
            MonoidId::Bicyclic => vec![Rule::new(w("ab"), Word::empty())],
            MonoidId::M1 => vec![Rule::new(w("ba"), w("ab"))],
            MonoidId::M2 => vec![Rule::new(w("bb"), w("aa")), Rule::new(w("baa"), w("aab"))],
            MonoidId::M6(k) => vec![Rule::new(w("ab"), Word::power_of(b'b', k as usize))],
            MonoidId::M9(k) => vec![Rule::new(w("ba"), Word::power_of(b'b', k as usize))],
            _ => return None,
        };
        Some(RewriteSystem::new(rules))
    }
}

/// Normal form of the twisted element `(m, n)` of `M3`, if it is an image.
fn m3_canonical(m: i64, n: i64) -> Option<M3Form> {
    if n < 0 {
        return None;
    }
    let signed = parity_sign(n) * m;
    if signed >= 0 {
        Some(M3Form {
            b: n as u64,
            a: signed as u64,
            trailing_b: false,
        })
    } else if n >= 1 {
        Some(M3Form {
            b: (n - 1) as u64,
            a: (-signed) as u64,
            trailing_b: true,
        })
    } else {
        None
    }
}

fn m2_form_word(p: u64, q: u64, tail: bool) -> Word {
    let mut w = Word::power_of(b'a', p as usize).concat(&Word::parse("ba").expect("static").pow(q as usize));
    if tail {
        w = w.concat(&Word::power_of(b'b', 1));
    }
    w
}

/// `M2` normal forms are `a^p (ba)^q` and `a^p (ba)^q b`; the second twisted
/// coordinate is the word length.
fn m2_canonical(m: i64, n: i64) -> Option<Word> {
    if n < 0 {
        return None;
    }
    let (q, p_parity) = if m >= 0 { (m, 0) } else { (-1 - m, 1) };
    let rest = n - 2 * q;
    if rest < 0 {
        return None;
    }
    // p + tail = rest with p ≡ p_parity (mod 2)
    let tail = (rest - p_parity).rem_euclid(2);
    let p = rest - tail;
    if p < p_parity {
        return None;
    }
    Some(m2_form_word(p as u64, q as u64, tail == 1))
}

/// The group element `(m, n)` of `K` as `b^i (ab)^j a^k` with the least
/// admissible `i`.
fn klein_canonical(m: i64, n: i64) -> Word {
    // b^i (ab)^j a^k ↦ (i mod 2 - (-1)^i j, k - i)
    let (i, j) = if m <= 0 {
        let mut i = 0;
        while n + i < 0 {
            i += 2;
        }
        (i, -m)
    } else {
        let mut i = 1;
        while n + i < 0 {
            i += 2;
        }
        (i, m - 1)
    };
    let k = n + i;
    Word::power_of(b'b', i as usize)
        .concat(&Word::parse("ab").expect("static").pow(j as usize))
        .concat(&Word::power_of(b'a', k as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::enumerate_words;
    use ModelElement::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn model(id: MonoidId) -> Model {
        Model::new(id).unwrap()
    }

    #[test]
    fn identities() {
        assert_eq!(model(MonoidId::Bicyclic).one(), Pair(0, 0));
        assert_eq!(model(MonoidId::M5).one(), Triple(0, 0, 0));
        assert_eq!(Model::new(MonoidId::M4), Err(Error::UnsupportedModel(MonoidId::M4)));
        assert_eq!(Model::new(MonoidId::M7), Err(Error::UnsupportedModel(MonoidId::M7)));
    }

    #[test]
    fn m6_law() {
        let m = model(MonoidId::M6(2));
        assert_eq!(m.mul(&Pair(1, 1), &Pair(1, 0)).unwrap(), Pair(3, 0));
        assert_eq!(m.from_word(&w("ba")).unwrap(), Pair(1, 1));
        assert_eq!(m.from_word(&w("bab")).unwrap(), Pair(3, 0));
    }

    #[test]
    fn m5_law() {
        let m = model(MonoidId::M5);
        assert_eq!(m.mul(&Triple(0, 0, 2), &Triple(0, 1, 0)).unwrap(), Triple(2, 0, 0));
        assert_eq!(m.canonical_word(&Triple(1, 2, 1)).unwrap(), w("baaab"));
    }

    #[test]
    fn klein_generators() {
        let m = model(MonoidId::Klein);
        assert_eq!(m.from_word(&w("ab")).unwrap(), Twisted(-1, 0));
        assert_eq!(m.from_word(&w("ba")).unwrap(), Twisted(1, 0));
        assert_eq!(m.from_word(&w("abba")).unwrap(), Twisted(0, 0));
        // the generators reach (1,0) and (0,1), so the map onto Z ⋊ Z is onto
        assert_eq!(m.from_word(&w("ba")).unwrap(), Twisted(1, 0));
        assert_eq!(m.from_word(&w("a")).unwrap(), Twisted(0, 1));
    }

    #[test]
    fn folds() {
        assert_eq!(model(MonoidId::Bicyclic).from_word(&w("abba")).unwrap(), Pair(1, 1));
        let m3 = model(MonoidId::M3);
        assert_eq!(m3.from_word(&w("aba")).unwrap(), Twisted(0, 1));
        assert_eq!(m3.from_word(&w("aba")).unwrap(), m3.from_word(&w("b")).unwrap());
        let c = model(MonoidId::Monogenic { k: 5, l: 2 });
        assert_eq!(c.from_word(&w("aaaaaa")).unwrap(), Exponent(3));
    }

    #[test]
    fn canonical_words() {
        assert_eq!(
            model(MonoidId::Bicyclic).canonical_word(&Pair(2, 3)).unwrap(),
            w("bbaaa")
        );
        let m3 = model(MonoidId::M3);
        let abb = m3.from_word(&w("abb")).unwrap();
        assert_eq!(abb, Twisted(1, 2));
        assert_eq!(m3.canonical_word(&abb).unwrap(), w("bba"));
        assert!(matches!(
            m3.canonical_word(&Twisted(-1, 0)),
            Err(Error::NoCanonicalWord { .. })
        ));
        assert!(matches!(
            model(MonoidId::M2).canonical_word(&Twisted(3, 1)),
            Err(Error::NoCanonicalWord { .. })
        ));
        assert_eq!(model(MonoidId::M9(2)).canonical_word(&Pair(2, 1)).unwrap(), w("abb"));
        assert_eq!(model(MonoidId::M8).canonical_word(&Triple(1, 1, 1)).unwrap(), w("baab"));
    }

    #[test]
    fn wrong_kind_rejected() {
        let m = model(MonoidId::M5);
        assert!(matches!(
            m.mul(&Pair(0, 0), &Triple(0, 0, 0)),
            Err(Error::WrongElement { .. })
        ));
        let c = model(MonoidId::Monogenic { k: 3, l: 1 });
        assert!(c.mul(&Exponent(5), &Exponent(0)).is_err());
        assert!(c.generator(b'b').is_err());
    }

    #[test]
    fn round_trip_on_all_short_words() {
        for id in supported() {
            let m = model(id);
            for word in enumerate_words(id.alphabet(), 7) {
                let x = m.from_word(&word).unwrap();
                let c = m.canonical_word(&x).unwrap();
                assert_eq!(m.from_word(&c).unwrap(), x, "{id}: {word} -> {c}");
            }
        }
    }

    #[test]
    fn relation_soundness() {
        for id in supported() {
            let m = model(id);
            let (u, v) = id.relation();
            assert_eq!(m.from_word(&u).unwrap(), m.from_word(&v).unwrap(), "{id}");
        }
    }

    #[test]
    fn canonical_words_agree_with_rewriting() {
        for id in supported() {
            let m = model(id);
            let Some(sys) = m.rewriting_system() else { continue };
            for word in enumerate_words(id.alphabet(), 8) {
                let nf = sys.normal_form(&word, 10_000).unwrap();
                let canon = m.canonical_word(&m.from_word(&word).unwrap()).unwrap();
                assert_eq!(nf, canon, "{id}: {word}");
            }
        }
    }

    #[test]
    fn m3_table_matches_twisted_law() {
        let m3 = model(MonoidId::M3);
        for b1 in 0..6 {
            for a1 in 0..6 {
                for b2 in 0..6 {
                    for a2 in 0..6 {
                        let x = M3Form {
                            b: b1,
                            a: a1,
                            trailing_b: false,
                        }
                        .word();
                        let y = M3Form {
                            b: b2,
                            a: a2,
                            trailing_b: false,
                        }
                        .word();
                        let prod = m3.from_word(&x.concat(&y)).unwrap();
                        let table = m3_form_product(b1, a1, b2, a2);
                        assert_eq!(m3.canonical_word(&prod).unwrap(), table.word());
                    }
                }
            }
        }
    }

    #[test]
    fn pools() {
        assert_eq!(model(MonoidId::M5).pool(3).len(), 64);
        assert_eq!(model(MonoidId::Bicyclic).pool(3).len(), 16);
        assert_eq!(model(MonoidId::Monogenic { k: 5, l: 2 }).pool(3).len(), 5);
        assert_eq!(model(MonoidId::Klein).pool(4).len(), 81);
        let m2 = model(MonoidId::M2);
        let pool = m2.pool(2);
        assert_eq!(m2.canonical_word(&pool[0]).unwrap(), Word::empty());
        assert_eq!(m2.canonical_word(&pool[1]).unwrap(), w("a"));
        assert_eq!(m2.canonical_word(&pool[2]).unwrap(), w("b"));
    }

    #[test]
    fn tagging() {
        let m = model(MonoidId::M5);
        let t = m.tag(&Triple(1, 2, 1));
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"monoid":"M5","elem":[1,2,1]}"#);
        assert_eq!(m.untag(&t).unwrap(), Triple(1, 2, 1));
        let m3 = model(MonoidId::M3);
        let bad = TaggedElement {
            monoid: MonoidId::M3,
            elem: vec![-1, 0],
        };
        assert!(m3.untag(&bad).is_err());
    }

    fn supported() -> Vec<MonoidId> {
        vec![
            MonoidId::FreeMonogenic,
            MonoidId::Monogenic { k: 5, l: 2 },
            MonoidId::Monogenic { k: 3, l: 0 },
            MonoidId::Monogenic { k: 1, l: 0 },
            MonoidId::Bicyclic,
            MonoidId::Klein,
            MonoidId::M1,
            MonoidId::M2,
            MonoidId::M3,
            MonoidId::M5,
            MonoidId::M6(1),
            MonoidId::M6(3),
            MonoidId::M8,
            MonoidId::M9(1),
            MonoidId::M9(3),
        ]
    }
}

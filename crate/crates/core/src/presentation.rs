//! One-relation monoid presentations `⟨A | u = v⟩`.
//!
//! Text form: `gens "|" word "=" word`, e.g. `a,b|aba=ba` or `a,b|ab=1`.
//! Generators are comma-separated single letters; `1` is the empty word.
//! Exponents are not part of the grammar.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    alphabet: Vec<u8>,
    lhs: Word,
    rhs: Word,
}

impl Presentation {
    pub fn new(alphabet: Vec<u8>, lhs: Word, rhs: Word) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::Parse("a presentation needs at least one generator".into()));
        }
        for (i, c) in alphabet.iter().enumerate() {
            if !c.is_ascii_alphabetic() {
                return Err(Error::Parse(format!("generator '{}' is not a letter", *c as char)));
            }
            if alphabet[..i].contains(c) {
                return Err(Error::Parse(format!("generator '{}' listed twice", *c as char)));
            }
        }
        lhs.check_alphabet(&alphabet)?;
        rhs.check_alphabet(&alphabet)?;
        Ok(Presentation { alphabet, lhs, rhs })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (gens, relation) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected \"gens|u=v\", got \"{text}\"")))?;
        let mut sides = relation.split('=');
        let (lhs, rhs) = match (sides.next(), sides.next(), sides.next()) {
            (Some(l), Some(r), None) => (l, r),
            (_, _, Some(_)) => return Err(Error::MultipleRelations),
            _ => return Err(Error::Parse(format!("relation \"{relation}\" has no '='"))),
        };
        if rhs.contains(',') || lhs.contains(',') {
            return Err(Error::MultipleRelations);
        }
        let mut alphabet = Vec::new();
        for g in gens.split(',') {
            let g = g.trim();
            let mut chars = g.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_alphabetic() => alphabet.push(c as u8),
                _ => return Err(Error::Parse(format!("bad generator \"{g}\""))),
            }
        }
        Presentation::new(alphabet, Word::parse(lhs)?, Word::parse(rhs)?)
    }

    pub fn alphabet(&self) -> &[u8] {
        &self.alphabet
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    /// Both sides of the relation read backwards; presents the reversed
    /// (anti-isomorphic) monoid.
    pub fn reversed(&self) -> Presentation {
        Presentation {
            alphabet: self.alphabet.clone(),
            lhs: self.lhs.reversed(),
            rhs: self.rhs.reversed(),
        }
    }

    /// Relation sides exchanged.
    pub fn flipped(&self) -> Presentation {
        Presentation {
            alphabet: self.alphabet.clone(),
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    pub fn is_special(&self) -> bool {
        self.lhs.is_empty() != self.rhs.is_empty()
    }

    pub fn is_trivial_relation(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.alphabet.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *c as char)?;
        }
        write!(f, "|{}={}", self.lhs, self.rhs)
    }
}

impl std::str::FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Presentation::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bicyclic() {
        let p = Presentation::parse("a,b|ab=1").unwrap();
        assert_eq!(p.alphabet(), b"ab");
        assert_eq!(p.lhs().to_string(), "ab");
        assert!(p.rhs().is_empty());
        assert!(p.is_special());
        assert_eq!(p.to_string(), "a,b|ab=1");
    }

    #[test]
    fn trivial_and_whitespace() {
        let p = Presentation::parse(" a | a = a ").unwrap();
        assert!(p.is_trivial_relation());
        let p = Presentation::parse("a, b|aba=ba").unwrap();
        assert_eq!(p.to_string(), "a,b|aba=ba");
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            Presentation::parse("a,b|abc=1"),
            Err(Error::UnknownLetter { letter: 'c', .. })
        ));
        assert_eq!(Presentation::parse("a,b|ab=1=ba"), Err(Error::MultipleRelations));
        assert_eq!(Presentation::parse("a,b|ab=1,ba=1"), Err(Error::MultipleRelations));
        assert!(matches!(Presentation::parse("a,b|ab"), Err(Error::Parse(_))));
        assert!(matches!(Presentation::parse("ab=1"), Err(Error::Parse(_))));
        assert!(matches!(Presentation::parse("ab,c|a=c"), Err(Error::Parse(_))));
        assert!(matches!(Presentation::parse("a,a|a=1"), Err(Error::Parse(_))));
        assert!(matches!(Presentation::parse("a,b|a2=b"), Err(Error::Parse(_))));
    }

    #[test]
    fn reversal() {
        let m5 = Presentation::parse("a,b|aba=ba").unwrap();
        assert_eq!(m5.reversed().to_string(), "a,b|aba=ab");
        assert_eq!(m5.reversed().reversed(), m5);
        let m6 = Presentation::parse("a,b|ab=bbb").unwrap();
        assert_eq!(m6.reversed().to_string(), "a,b|ba=bbb");
    }
}

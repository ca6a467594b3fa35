//! Semigroup identities `w ≍ w'` and the named families used in the checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

/// Deepest level accepted by [`uv_words`]; `U_8` already has 390625 letters.
pub const MAX_UV_LEVEL: u32 = 8;

/// An identity over single-letter variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityTerm {
    lhs: Word,
    rhs: Word,
}

impl IdentityTerm {
    pub fn new(lhs: Word, rhs: Word) -> Result<Self> {
        if lhs.is_empty() || rhs.is_empty() {
            return Err(Error::Parse("both sides of an identity must be non-empty".into()));
        }
        Ok(IdentityTerm { lhs, rhs })
    }

    /// Parses `"xyyx.xy.xyyx = xyyx.yx.xyyx"`. Dots and whitespace are ignored;
    /// `≍` is accepted in place of `=`.
    pub fn parse(text: &str) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| *c != '.' && !c.is_whitespace()).collect();
        let cleaned = cleaned.replace('≍', "=");
        let mut sides = cleaned.split('=');
        let (l, r) = match (sides.next(), sides.next(), sides.next()) {
            (Some(l), Some(r), None) => (l, r),
            _ => return Err(Error::Parse(format!("expected exactly one '=' in identity \"{text}\""))),
        };
        let side = |s: &str| -> Result<Word> {
            if s.is_empty() || s == "1" {
                return Err(Error::Parse(format!("empty side in identity \"{text}\"")));
            }
            Word::parse(s)
        };
        IdentityTerm::new(side(l)?, side(r)?)
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    /// Variables in order of first occurrence, left side first.
    pub fn variables(&self) -> Vec<u8> {
        let mut vars = Vec::new();
        for &c in self.lhs.letters().iter().chain(self.rhs.letters()) {
            if !vars.contains(&c) {
                vars.push(c);
            }
        }
        vars
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn substitute(&self, mut image: impl FnMut(u8) -> Word) -> (Word, Word) {
        (self.lhs.substitute(&mut image), self.rhs.substitute(&mut image))
    }
}

impl fmt::Display for IdentityTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for IdentityTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityTerm::parse(s)
    }
}

fn term(l: &str, r: &str) -> IdentityTerm {
    IdentityTerm::parse(&format!("{l}={r}")).expect("catalog identities are well formed")
}

/// Shneerson's identity for monoid number `i` of the non-special list.
pub fn shneerson(i: u32) -> Result<IdentityTerm> {
    let id = match i {
        1 => term("xy", "yx"),
        2 | 3 => term("xxyy", "yyxx"),
        4 => term("xyx.xyx.yx.yx", "yx.yx.xyx.xyx"),
        5 | 6 => term("xyxyx", "yxxyx"),
        7 => term("xyx.xyx.xy.xy", "xy.xy.xyx.xyx"),
        8 | 9 => term("xyxyx", "xyxxy"),
        _ => return Err(Error::UnknownIdentity(format!("shneerson({i})"))),
    };
    Ok(id)
}

/// `(U_i, V_i)` over `{p, q}`: `U_0 = p`, `V_0 = q`, `U_1 = pqppq`,
/// `V_1 = pqqpq`, and `U_i = U_1(U_{i-1}, V_{i-1})`, likewise for `V_i`.
pub fn uv_words(i: u32) -> Result<(Word, Word)> {
    if i > MAX_UV_LEVEL {
        return Err(Error::WordTooLong(5u128.pow(i.min(50))));
    }
    let u1 = Word::parse("pqppq").expect("static");
    let v1 = Word::parse("pqqpq").expect("static");
    let mut u = Word::parse("p").expect("static");
    let mut v = Word::parse("q").expect("static");
    for _ in 0..i {
        let image = |c: u8| if c == b'p' { u.clone() } else { v.clone() };
        let next_u = u1.substitute(image);
        let next_v = v1.substitute(image);
        u = next_u;
        v = next_v;
    }
    Ok((u, v))
}

/// `U_{n-1}(xy, yx) ≍ V_{n-1}(xy, yx)`, satisfied by `UT_n`.
pub fn cain_identity(n: u32) -> Result<IdentityTerm> {
    if n == 0 {
        return Err(Error::InvalidArgument("cain identity needs n >= 1".into()));
    }
    let (u, v) = uv_words(n - 1)?;
    let (xy, yx) = (Word::parse("xy")?, Word::parse("yx")?);
    let image = |c: u8| if c == b'p' { xy.clone() } else { yx.clone() };
    IdentityTerm::new(u.substitute(image), v.substitute(image))
}

/// Looks up a named identity. Accepted names: `adian`, `commutativity`,
/// `square_comm`, `shneerson(i)` (also `shneerson:i`, `shneersoni`) and
/// `cain(n)` (also `cain:n`).
pub fn identity_catalog(name: &str) -> Result<IdentityTerm> {
    let lower = name.trim().to_ascii_lowercase();
    let unknown = || Error::UnknownIdentity(name.to_string());
    match lower.as_str() {
        "adian" => return Ok(term("xyyx.xy.xyyx", "xyyx.yx.xyyx")),
        "commutativity" | "comm" => return Ok(term("xy", "yx")),
        "square_comm" | "square-comm" => return Ok(term("xxyy", "yyxx")),
        _ => {}
    }
    let (head, param) = split_param(&lower).ok_or_else(unknown)?;
    let param: u32 = param.parse().map_err(|_| unknown())?;
    match head {
        "shneerson" => shneerson(param).map_err(|_| unknown()),
        "cain" => cain_identity(param),
        _ => Err(unknown()),
    }
}

fn split_param(s: &str) -> Option<(&str, &str)> {
    if let Some((h, rest)) = s.split_once('(') {
        return Some((h, rest.strip_suffix(')')?));
    }
    if let Some(pair) = s.split_once(':') {
        return Some(pair);
    }
    let digits = s.find(|c: char| c.is_ascii_digit())?;
    Some((&s[..digits], &s[digits..]))
}

/// Every catalog name with a fixed parameter range, in a stable order.
pub fn catalog_names() -> Vec<String> {
    let mut names = vec!["adian".to_string(), "commutativity".into(), "square_comm".into()];
    names.extend((1..=9).map(|i| format!("shneerson({i})")));
    names.extend((1..=4).map(|n| format!("cain({n})")));
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn adian() {
        let id = identity_catalog("adian").unwrap();
        assert_eq!(id.lhs(), &w("xyyxxyxyyx"));
        assert_eq!(id.rhs(), &w("xyyxyxxyyx"));
        assert_eq!(id.variables(), b"xy");
    }

    #[test]
    fn shneerson_names() {
        let five = identity_catalog("shneerson(5)").unwrap();
        assert_eq!(five, term("xyxyx", "yxxyx"));
        assert_eq!(identity_catalog("shneerson:5").unwrap(), five);
        assert_eq!(identity_catalog("Shneerson5").unwrap(), five);
        assert_eq!(
            identity_catalog("shneerson(4)").unwrap(),
            term("xyxxyxyxyx", "yxyxxyxxyx")
        );
        assert!(identity_catalog("shneerson(10)").is_err());
        assert!(identity_catalog("shneerson").is_err());
        assert!(identity_catalog("nonsense").is_err());
    }

    #[test]
    fn uv_levels() {
        assert_eq!(uv_words(0).unwrap(), (w("p"), w("q")));
        assert_eq!(uv_words(1).unwrap(), (w("pqppq"), w("pqqpq")));
        let (u2, v2) = uv_words(2).unwrap();
        assert_eq!(u2.len(), 25);
        assert_eq!(v2.len(), 25);
        assert_eq!(&u2.letters()[..10], b"pqppqpqqpq");
        assert!(uv_words(MAX_UV_LEVEL + 1).is_err());
    }

    #[test]
    fn cain_family() {
        assert_eq!(cain_identity(1).unwrap(), term("xy", "yx"));
        assert_eq!(cain_identity(2).unwrap(), identity_catalog("adian").unwrap());
        let three = cain_identity(3).unwrap();
        assert_eq!((three.lhs().len(), three.rhs().len()), (50, 50));
        assert_eq!(identity_catalog("cain:3").unwrap(), three);
        assert!(cain_identity(0).is_err());
    }

    #[test]
    fn parsing() {
        let id = IdentityTerm::parse("xyyx.xy.xyyx = xyyx.yx.xyyx").unwrap();
        assert_eq!(id, identity_catalog("adian").unwrap());
        assert_eq!(IdentityTerm::parse("xy ≍ yx").unwrap(), term("xy", "yx"));
        assert!(IdentityTerm::parse("xy").is_err());
        assert!(IdentityTerm::parse("xy=").is_err());
        assert!(IdentityTerm::parse("x=y=z").is_err());
        assert_eq!(id.to_string(), "xyyxxyxyyx = xyyxyxxyyx");
    }

    #[test]
    fn all_catalog_names_resolve() {
        for name in catalog_names() {
            assert!(!identity_catalog(&name).unwrap().is_trivial(), "{name}");
        }
    }
}

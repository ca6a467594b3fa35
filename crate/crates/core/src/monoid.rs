//! The one-relation monoids that satisfy a non-trivial identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::Word;

/// One row family of the classification.
///
/// `Monogenic { k, l }` is `⟨a | a^k = a^l⟩` with `0 <= l < k`; it is aperiodic
/// when `k = l + 1`. `M6(k)` is `⟨a,b | ab = b^k⟩` and `M9(k)` is
/// `⟨a,b | ba = b^k⟩`, both with `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidId {
    FreeMonogenic,
    Monogenic { k: u32, l: u32 },
    Bicyclic,
    Klein,
    M1,
    M2,
    M3,
    M4,
    M5,
    M6(u32),
    M7,
    M8,
    M9(u32),
}

impl MonoidId {
    pub fn validate(self) -> Result<Self> {
        match self {
            MonoidId::Monogenic { k, l } if l >= k => {
                Err(Error::InvalidParameters(format!("monogenic a^{k} = a^{l} needs l < k")))
            }
            MonoidId::M6(0) | MonoidId::M9(0) => Err(Error::InvalidParameters("k must be at least 1".into())),
            id => Ok(id),
        }
    }

    pub fn is_aperiodic_monogenic(self) -> bool {
        matches!(self, MonoidId::Monogenic { k, l } if k == l + 1)
    }

    pub fn alphabet(self) -> &'static [u8] {
        match self {
            MonoidId::FreeMonogenic | MonoidId::Monogenic { .. } => b"a",
            _ => b"ab",
        }
    }

    /// The defining relation as `(u, v)` over `alphabet()`.
    pub fn relation(self) -> (Word, Word) {
        let w = |s: &str| Word::parse(s).expect("static relation words");
        let b = |k: u32| Word::power_of(b'b', k as usize);
        match self {
            MonoidId::FreeMonogenic => (Word::empty(), Word::empty()),
            MonoidId::Monogenic { k, l } => (Word::power_of(b'a', k as usize), Word::power_of(b'a', l as usize)),
            MonoidId::Bicyclic => (w("ab"), Word::empty()),
            MonoidId::Klein => (w("abba"), Word::empty()),
            MonoidId::M1 => (w("ab"), w("ba")),
            MonoidId::M2 => (w("aa"), w("bb")),
            MonoidId::M3 => (w("aba"), w("b")),
            MonoidId::M4 => (w("abaa"), w("ba")),
            MonoidId::M5 => (w("aba"), w("ba")),
            MonoidId::M6(k) => (w("ab"), b(k)),
            MonoidId::M7 => (w("aaba"), w("ab")),
            MonoidId::M8 => (w("aba"), w("ab")),
            MonoidId::M9(k) => (w("ba"), b(k)),
        }
    }

    pub fn presentation(self) -> Presentation {
        let (u, v) = self.relation();
        Presentation::new(self.alphabet().to_vec(), u, v).expect("catalog relations are well formed")
    }

    /// The monoid presented by the reversed relation, up to renaming.
    pub fn reversed(self) -> MonoidId {
        match self {
            MonoidId::M4 => MonoidId::M7,
            MonoidId::M7 => MonoidId::M4,
            MonoidId::M5 => MonoidId::M8,
            MonoidId::M8 => MonoidId::M5,
            MonoidId::M6(k) => MonoidId::M9(k),
            MonoidId::M9(k) => MonoidId::M6(k),
            id => id,
        }
    }

    /// Short machine name, e.g. `m6(3)`, `monogenic(5,2)`.
    pub fn slug(self) -> String {
        match self {
            MonoidId::FreeMonogenic => "free".into(),
            MonoidId::Monogenic { k, l } => format!("monogenic({k},{l})"),
            MonoidId::Bicyclic => "bicyclic".into(),
            MonoidId::Klein => "klein".into(),
            MonoidId::M6(k) => format!("m6({k})"),
            MonoidId::M9(k) => format!("m9({k})"),
            other => format!("{other:?}").to_lowercase(),
        }
    }

    /// Parses a monoid name. Parameters may be given inline (`m6(3)`,
    /// `monogenic(5,2)`) or through `k` / `l`.
    pub fn parse_with(name: &str, k: Option<u32>, l: Option<u32>) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        let (head, inline) = match lower.split_once('(') {
            Some((h, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parameters in \"{name}\"")))?;
                let params = inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad parameter \"{p}\"")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                (h.to_string(), Some(params))
            }
            None => (lower.clone(), None),
        };
        let param = |idx: usize, flag: Option<u32>, what: &str| -> Result<u32> {
            inline
                .as_ref()
                .and_then(|p| p.get(idx).copied())
                .or(flag)
                .ok_or_else(|| Error::InvalidParameters(format!("{name} needs parameter {what}")))
        };
        let id = match head.as_str() {
            "free" | "n" | "nat" | "free_monogenic" => MonoidId::FreeMonogenic,
            "monogenic" | "c" | "cyclic" => MonoidId::Monogenic {
                k: param(0, k, "k")?,
                l: param(1, l, "l")?,
            },
            "aperiodic" => {
                let l = param(0, l, "l")?;
                MonoidId::Monogenic { k: l + 1, l }
            }
            "bicyclic" | "b" => MonoidId::Bicyclic,
            "klein" | "k" => MonoidId::Klein,
            "m1" => MonoidId::M1,
            "m2" => MonoidId::M2,
            "m3" => MonoidId::M3,
            "m4" => MonoidId::M4,
            "m5" => MonoidId::M5,
            "m6" | "m6k" => MonoidId::M6(param(0, k, "k")?),
            "m7" => MonoidId::M7,
            "m8" => MonoidId::M8,
            "m9" | "m9k" => MonoidId::M9(param(0, k, "k")?),
            _ => return Err(Error::Parse(format!("unknown monoid \"{name}\""))),
        };
        id.validate()
    }
}

impl fmt::Display for MonoidId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidId::FreeMonogenic => f.write_str("N"),
            MonoidId::Monogenic { k, l } => write!(f, "C({k},{l})"),
            MonoidId::Bicyclic => f.write_str("B"),
            MonoidId::Klein => f.write_str("K"),
            MonoidId::M6(k) => write!(f, "M6({k})"),
            MonoidId::M9(k) => write!(f, "M9({k})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for MonoidId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonoidId::parse_with(s, None, None)
    }
}

impl Serialize for MonoidId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MonoidId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        let normalized = match s.as_str() {
            "N" => "free".to_string(),
            "B" => "bicyclic".to_string(),
            "K" => "klein".to_string(),
            other if other.starts_with("C(") => format!("monogenic{}", &other[1..]),
            other => other.to_string(),
        };
        MonoidId::from_str(&normalized).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in [
            MonoidId::FreeMonogenic,
            MonoidId::Monogenic { k: 5, l: 2 },
            MonoidId::Bicyclic,
            MonoidId::Klein,
            MonoidId::M1,
            MonoidId::M4,
            MonoidId::M6(3),
            MonoidId::M9(1),
        ] {
            assert_eq!(id.slug().parse::<MonoidId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(serde_json::from_str::<MonoidId>(&json).unwrap(), id);
        }
    }

    #[test]
    fn parameter_flags() {
        assert_eq!(MonoidId::parse_with("m6k", Some(2), None).unwrap(), MonoidId::M6(2));
        assert_eq!(MonoidId::parse_with("M9", Some(4), None).unwrap(), MonoidId::M9(4));
        assert_eq!(
            MonoidId::parse_with("monogenic", Some(5), Some(2)).unwrap(),
            MonoidId::Monogenic { k: 5, l: 2 }
        );
        assert_eq!(
            MonoidId::parse_with("aperiodic", None, Some(3)).unwrap(),
            MonoidId::Monogenic { k: 4, l: 3 }
        );
        assert!(MonoidId::parse_with("m6", None, None).is_err());
        assert!(MonoidId::parse_with("m6(0)", None, None).is_err());
        assert!(MonoidId::parse_with("monogenic(2,2)", None, None).is_err());
        assert!(MonoidId::parse_with("m10", None, None).is_err());
    }

    #[test]
    fn reversal_pairs() {
        assert_eq!(MonoidId::M5.reversed(), MonoidId::M8);
        assert_eq!(MonoidId::M6(3).reversed(), MonoidId::M9(3));
        assert_eq!(MonoidId::M4.reversed().reversed(), MonoidId::M4);
        assert_eq!(MonoidId::M5.presentation().reversed(), MonoidId::M8.presentation());
        assert_eq!(
            MonoidId::M6(2).presentation().reversed(),
            MonoidId::M9(2).presentation()
        );
        assert_eq!(MonoidId::M4.presentation().reversed(), MonoidId::M7.presentation());
    }

    #[test]
    fn relations() {
        assert_eq!(MonoidId::M6(3).presentation().to_string(), "a,b|ab=bbb");
        assert_eq!(MonoidId::Monogenic { k: 3, l: 0 }.presentation().to_string(), "a|aaa=1");
        assert_eq!(MonoidId::Klein.presentation().to_string(), "a,b|abba=1");
    }
}

//! Explicit tropical matrix representations of the catalog monoids.
//!
//! The `M5` pair uses `B[1][1] = -1`. With the commonly printed value `+1`
//! the relation `ABA = BA` still holds but the map is not injective (`babb`
//! and `bbab` collide); with `-1` the first row of `(BA)^α A^β B^γ` is
//! `(-α-γ, -α-γ+1, -α+β+1, -α+β+γ+1)` as expected. The `M8` pair is its
//! anti-transpose, so there the corrected entry is `B[4][4] = -1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::monoid::MonoidId;
use crate::scalar::Trop;
use crate::word::Word;
use crate::TropMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    /// Upper triangular matrices, `UT_n`.
    #[serde(rename = "UT")]
    UpperTriangular,
    /// All matrices, `MT_n`.
    #[serde(rename = "MT")]
    Full,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::UpperTriangular => "UT",
            Target::Full => "MT",
        })
    }
}

/// Generator images for one monoid.
///
/// When `unital` is false the representation is a semigroup embedding only:
/// the monoid identity maps to an idempotent other than `I_n`, so the empty
/// word is left out of embedding checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRepresentation", into = "RawRepresentation")]
pub struct Representation {
    monoid: MonoidId,
    target: Target,
    unital: bool,
    images: Vec<(u8, TropMatrix)>,
}

#[derive(Serialize, Deserialize)]
struct RawRepresentation {
    monoid: MonoidId,
    target: Target,
    n: usize,
    #[serde(default = "default_unital")]
    unital: bool,
    images: BTreeMap<String, TropMatrix>,
}

fn default_unital() -> bool {
    true
}

impl TryFrom<RawRepresentation> for Representation {
    type Error = Error;

    fn try_from(raw: RawRepresentation) -> Result<Self> {
        let mut images = Vec::new();
        for (name, m) in raw.images {
            let mut chars = name.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_alphabetic() => c as u8,
                _ => return Err(Error::Parse(format!("image key \"{name}\" is not a single letter"))),
            };
            images.push((letter, m));
        }
        let rep = Representation::new(raw.monoid, raw.target, raw.unital, images)?;
        if rep.dim() != raw.n {
            return Err(Error::DimensionMismatch {
                left: raw.n,
                right: rep.dim(),
            });
        }
        Ok(rep)
    }
}

impl From<Representation> for RawRepresentation {
    fn from(r: Representation) -> Self {
        RawRepresentation {
            monoid: r.monoid,
            target: r.target,
            n: r.dim(),
            unital: r.unital,
            images: r
                .images
                .into_iter()
                .map(|(c, m)| ((c as char).to_string(), m))
                .collect(),
        }
    }
}

/// Marks `-inf` in literal matrices.
const X: i64 = i64::MIN;

fn lit(rows: &[&[i64]]) -> TropMatrix {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| if v == X { Trop::NegInf } else { Trop::Finite(v) })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("literal matrices are square")
}

/// The `n × n` matrix of a map `f` on `{0, .., n-1}`: `0` at `(i, f(i))`,
/// `-inf` elsewhere. `matrix(f) ⊗ matrix(g)` is the matrix of `i ↦ g(f(i))`.
pub fn transformation_matrix(f: &[usize]) -> Result<TropMatrix> {
    let n = f.len();
    if n == 0 {
        return Err(Error::MalformedMatrix("transformation on an empty set".into()));
    }
    if let Some(&bad) = f.iter().find(|&&j| j >= n) {
        return Err(Error::InvalidArgument(format!(
            "transformation value {bad} outside 0..{n}"
        )));
    }
    Matrix::from_fn(n, |i, j| if f[i] == j { Trop::one() } else { Trop::NegInf })
}

/// `ℓ × ℓ` matrix with `1` strictly above the diagonal and `-inf` elsewhere.
fn nilpotent_ones(l: usize) -> TropMatrix {
    Matrix::from_fn(l, |i, j| if j > i { Trop::Finite(1) } else { Trop::NegInf }).expect("small entries")
}

impl Representation {
    pub fn new(monoid: MonoidId, target: Target, unital: bool, images: Vec<(u8, TropMatrix)>) -> Result<Self> {
        let first = images
            .first()
            .ok_or_else(|| Error::InvalidArgument("representation without images".into()))?;
        let n = first.1.dim();
        for (c, m) in &images {
            if m.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: m.dim(),
                });
            }
            if target == Target::UpperTriangular && !m.is_upper_triangular() {
                return Err(Error::InvalidArgument(format!(
                    "image of '{}' is not upper triangular",
                    *c as char
                )));
            }
        }
        Ok(Representation {
            monoid,
            target,
            unital,
            images,
        })
    }

    /// The representation used for `id`. `M4` and `M7` have none.
    pub fn for_monoid(id: MonoidId) -> Result<Self> {
        use Target::*;
        let id = id.validate()?;
        let two = |a: TropMatrix, b: TropMatrix| vec![(b'a', a), (b'b', b)];
        let (target, unital, images) = match id {
            MonoidId::FreeMonogenic => (UpperTriangular, true, vec![(b'a', lit(&[&[1]]))]),
            MonoidId::Monogenic { k, l } if k == l + 1 => {
                let a = if l == 0 {
                    Matrix::identity(1)
                } else {
                    nilpotent_ones(l as usize)
                };
                (UpperTriangular, true, vec![(b'a', a)])
            }
            MonoidId::Monogenic { k, l } => {
                // i ↦ i + 1, last point back to l: the orbit of 0 has tail l and cycle k - l
                let k = k as usize;
                let f: Vec<usize> = (0..k).map(|i| if i + 1 < k { i + 1 } else { l as usize }).collect();
                (Full, true, vec![(b'a', transformation_matrix(&f)?)])
            }
            MonoidId::Bicyclic => (
                UpperTriangular,
                false,
                two(lit(&[&[0, 1], &[X, 1]]), lit(&[&[0, 0], &[X, -1]])),
            ),
            MonoidId::M1 => (
                UpperTriangular,
                true,
                two(lit(&[&[1, X], &[X, 0]]), lit(&[&[0, X], &[X, 1]])),
            ),
            MonoidId::M6(1) => (
                UpperTriangular,
                true,
                two(lit(&[&[0, X], &[X, 1]]), lit(&[&[1, 1], &[X, X]])),
            ),
            MonoidId::M6(k) => {
                let k = i64::from(k);
                (
                    UpperTriangular,
                    false,
                    two(lit(&[&[k - 1, X], &[X, 0]]), lit(&[&[1, 1], &[X, X]])),
                )
            }
            MonoidId::M9(1) => (
                UpperTriangular,
                true,
                two(lit(&[&[1, X], &[X, 0]]), lit(&[&[X, 1], &[X, 1]])),
            ),
            MonoidId::M9(k) => {
                let k = i64::from(k);
                (
                    UpperTriangular,
                    false,
                    two(lit(&[&[0, X], &[X, k - 1]]), lit(&[&[X, 1], &[X, 1]])),
                )
            }
            MonoidId::M5 => (
                UpperTriangular,
                true,
                two(
                    lit(&[&[0, 1, X, 0], &[X, 1, 0, -1], &[X, X, X, X], &[X, X, X, X]]),
                    lit(&[&[-1, 0, 0, -1], &[X, X, X, 0], &[X, X, 0, X], &[X, X, X, 1]]),
                ),
            ),
            MonoidId::M8 => (
                UpperTriangular,
                true,
                two(
                    lit(&[&[X, X, -1, 0], &[X, X, 0, X], &[X, X, 1, 1], &[X, X, X, 0]]),
                    lit(&[&[1, X, 0, -1], &[X, 0, X, 0], &[X, X, X, 0], &[X, X, X, -1]]),
                ),
            ),
            MonoidId::M3 => (Full, true, two(lit(&[&[1, X], &[X, -1]]), lit(&[&[X, 1], &[0, X]]))),
            MonoidId::M2 => (Full, true, two(lit(&[&[X, 0], &[1, X]]), lit(&[&[X, 1], &[0, X]]))),
            MonoidId::Klein => (Full, true, two(lit(&[&[X, -1], &[0, X]]), lit(&[&[X, 1], &[0, X]]))),
            MonoidId::M4 | MonoidId::M7 => return Err(Error::UnsupportedRepresentation(id)),
        };
        Representation::new(id, target, unital, images)
    }

    pub fn monoid(&self) -> MonoidId {
        self.monoid
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn dim(&self) -> usize {
        self.images[0].1.dim()
    }

    pub fn alphabet(&self) -> Vec<u8> {
        self.images.iter().map(|(c, _)| *c).collect()
    }

    pub fn image(&self, letter: u8) -> Result<&TropMatrix> {
        self.images
            .iter()
            .find(|(c, _)| *c == letter)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::UnknownLetter {
                letter: letter as char,
                alphabet: String::from_utf8_lossy(&self.alphabet()).into_owned(),
            })
    }

    pub fn images(&self) -> impl Iterator<Item = (u8, &TropMatrix)> {
        self.images.iter().map(|(c, m)| (*c, m))
    }

    /// Product of the generator images along `w`; the empty word gives `I_n`.
    pub fn evaluate_word(&self, w: &Word) -> Result<TropMatrix> {
        w.letters()
            .iter()
            .try_fold(Matrix::identity(self.dim()), |acc, &c| acc.mul(self.image(c)?))
    }

    /// Whether both sides of the defining relation evaluate to the same
    /// matrix. Evaluation errors count as failure.
    ///
    /// For a non-unital representation of a special relation `u = 1` the
    /// image of `u` must instead be a two-sided identity for every generator
    /// image, so that sending `1` to it extends to a homomorphism.
    pub fn verify_relation(&self) -> bool {
        let (u, v) = self.monoid.relation();
        let (x, y) = match (self.evaluate_word(&u), self.evaluate_word(&v)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return false,
        };
        if self.unital || (!u.is_empty() && !v.is_empty()) {
            return x == y;
        }
        let e = if u.is_empty() { y } else { x };
        self.images
            .iter()
            .all(|(_, g)| matches!((e.mul(g), g.mul(&e)), (Ok(l), Ok(r)) if l == *g && r == *g))
    }

    /// The reversed monoid's representation by anti-transposing every image.
    pub fn anti_transposed(&self) -> Representation {
        Representation {
            monoid: self.monoid.reversed(),
            target: self.target,
            unital: self.unital,
            images: self.images.iter().map(|(c, m)| (*c, m.anti_transpose())).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

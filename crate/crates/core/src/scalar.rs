//! Elements of the integral tropical semiring.
//!
//! A [`Trop<S>`] is either `-inf` or a finite value of the integer type `S`.
//! Tropical addition is `max` and tropical multiplication is ordinary `+`;
//! `-inf` is neutral for the former and absorbing for the latter.
//!
//! Finite values are confined to `[-S::guard(), S::guard()]`. Every operation
//! that could leave that window returns [`Error::Overflow`] instead of wrapping.

use std::fmt;
use std::hash::Hash;

use num_traits::{PrimInt, Signed};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer types usable as finite tropical values.
pub trait Scalar:
    PrimInt + Signed + Hash + fmt::Debug + fmt::Display + Send + Sync + Serialize + DeserializeOwned + 'static
{
    /// Largest magnitude a finite entry may take.
    fn guard() -> Self;
}

impl Scalar for i32 {
    fn guard() -> Self {
        1 << 28
    }
}

impl Scalar for i64 {
    fn guard() -> Self {
        1 << 60
    }
}

impl Scalar for i128 {
    fn guard() -> Self {
        1 << 60
    }
}

/// An element of `Z ∪ {-inf}` over the scalar type `S`.
///
/// The derived ordering puts `NegInf` below every finite value, which is
/// exactly the order used by tropical addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trop<S> {
    NegInf,
    Finite(S),
}

impl<S: Scalar> Trop<S> {
    /// Finite element, checked against the guard.
    pub fn new(value: S) -> Result<Self> {
        if value.abs() > S::guard() {
            Err(Error::Overflow)
        } else {
            Ok(Trop::Finite(value))
        }
    }

    /// The multiplicative unit, `0`.
    pub fn one() -> Self {
        Trop::Finite(S::zero())
    }

    /// The additive unit, `-inf`.
    pub fn zero() -> Self {
        Trop::NegInf
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, Trop::NegInf)
    }

    pub fn finite(self) -> Option<S> {
        match self {
            Trop::NegInf => None,
            Trop::Finite(v) => Some(v),
        }
    }

    /// Tropical sum (`max`). Never fails.
    pub fn add(self, other: Self) -> Self {
        self.max(other)
    }

    /// Tropical product (`+`), with `-inf` absorbing.
    pub fn mul(self, other: Self) -> Result<Self> {
        match (self, other) {
            (Trop::Finite(x), Trop::Finite(y)) => {
                let sum = x.checked_add(&y).ok_or(Error::Overflow)?;
                Trop::new(sum)
            }
            _ => Ok(Trop::NegInf),
        }
    }
}

/// Sum and product of two tropical scalars at once.
pub fn scalar_ops<S: Scalar>(x: Trop<S>, y: Trop<S>) -> Result<(Trop<S>, Trop<S>)> {
    Ok((x.add(y), x.mul(y)?))
}

impl<S: fmt::Display> fmt::Display for Trop<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trop::NegInf => f.write_str("-inf"),
            Trop::Finite(v) => write!(f, "{v}"),
        }
    }
}

const NEG_INF_TOKEN: &str = "-inf";

impl<S: Scalar> Serialize for Trop<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        match self {
            Trop::NegInf => serializer.serialize_str(NEG_INF_TOKEN),
            Trop::Finite(v) => v.serialize(serializer),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry<S> {
    Int(S),
    Token(String),
}

impl<'de, S: Scalar> Deserialize<'de> for Trop<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match RawEntry::<S>::deserialize(deserializer)? {
            RawEntry::Int(v) => Trop::new(v).map_err(D::Error::custom),
            RawEntry::Token(t) if t == NEG_INF_TOKEN => Ok(Trop::NegInf),
            RawEntry::Token(t) => Err(D::Error::custom(format!(
                "expected an integer or \"{NEG_INF_TOKEN}\", found \"{t}\""
            ))),
        }
    }
}

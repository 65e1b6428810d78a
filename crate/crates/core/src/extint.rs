use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// An integer extended by `+inf` and `-inf`.
///
/// `+inf` is the depth of the zero module; `-inf` its dimension and
/// projective dimension (and the dimension of `R/(1)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedInt {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

pub use ExtendedInt::{Finite, NegInfinity, PosInfinity};

impl ExtendedInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    /// Unwraps a finite value; panics on an infinity.
    pub fn expect_finite(self, what: &str) -> i64 {
        self.finite().unwrap_or_else(|| panic!("{what} is infinite"))
    }
}

impl From<i64> for ExtendedInt {
    fn from(v: i64) -> Self {
        Finite(v)
    }
}

impl PartialOrd for ExtendedInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedInt {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(x: &ExtendedInt) -> (i8, i64) {
            match *x {
                NegInfinity => (0, 0),
                Finite(v) => (1, v),
                PosInfinity => (2, 0),
            }
        }
        rank(self).cmp(&rank(other))
    }
}

impl Add<i64> for ExtendedInt {
    type Output = ExtendedInt;
    fn add(self, rhs: i64) -> ExtendedInt {
        match self {
            Finite(v) => Finite(v + rhs),
            inf => inf,
        }
    }
}

impl Sub<i64> for ExtendedInt {
    type Output = ExtendedInt;
    fn sub(self, rhs: i64) -> ExtendedInt {
        self + (-rhs)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInfinity => write!(f, "-inf"),
            Finite(v) => write!(f, "{v}"),
            PosInfinity => write!(f, "+inf"),
        }
    }
}

// JSON cannot carry infinities, so they travel as the strings "+inf"/"-inf".
impl Serialize for ExtendedInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => s.serialize_i64(*v),
            NegInfinity => s.serialize_str("-inf"),
            PosInfinity => s.serialize_str("+inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = ExtendedInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or \"+inf\"/\"-inf\"")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<ExtendedInt, E> {
                Ok(Finite(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<ExtendedInt, E> {
                i64::try_from(v).map(Finite).map_err(E::custom)
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<ExtendedInt, E> {
                match v {
                    "+inf" => Ok(PosInfinity),
                    "-inf" => Ok(NegInfinity),
                    _ => Err(E::custom(format!("unexpected string {v:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

//! Exact rational scalars.
//!
//! [`Rat`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; zero is always `0/1`. On the wire a rational is the
//! string `"p/q"`, and parsing also accepts a bare integer `"p"`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn ints<const N: usize>(values: [i64; N]) -> [Rat; N] {
    values.map(int)
}

/// Canonical `p/q` text, denominator always present.
pub fn to_pq(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact rational cube root, if one exists.
pub fn cube_root(r: &Rat) -> Option<Rat> {
    let n = int_cube_root(r.numer())?;
    let d = int_cube_root(r.denom())?;
    Some(Rat::new(n, d))
}

fn int_cube_root(n: &BigInt) -> Option<BigInt> {
    let root = n.abs().cbrt();
    let root = if n.is_negative() { -root } else { root };
    (&root * &root * &root == *n).then_some(root)
}

/// Serde adapter: a rational written as a `"p/q"` string. Deserialization also
/// accepts JSON integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatText(pub Rat);

impl From<Rat> for RatText {
    fn from(r: Rat) -> Self {
        RatText(r)
    }
}

impl From<&Rat> for RatText {
    fn from(r: &Rat) -> Self {
        RatText(r.clone())
    }
}

impl Serialize for RatText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatText;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatText, E> {
                parse(v).map(RatText).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatText, E> {
                Ok(RatText(int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatText, E> {
                Ok(RatText(Rat::from_integer(BigInt::from(v))))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn to_text_vec(v: &[Rat]) -> Vec<RatText> {
    v.iter().map(RatText::from).collect()
}

pub fn from_text_vec(v: Vec<RatText>) -> Vec<Rat> {
    v.into_iter().map(|r| r.0).collect()
}

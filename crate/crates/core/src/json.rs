//! Serde helpers for exact numbers and the input formats shared by the
//! command-line tool.
//!
//! Rationals are written as JSON integers when integral and as `"p/q"`
//! strings otherwise; both forms are accepted on input.

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::Weight;

/// Parse `"p/q"` or `"p"` as a rational.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parse a weight written as a JSON integer array, e.g. `[1,0,-2]`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    serde_json::from_str::<Vec<i64>>(s.trim())
        .map(Weight::from)
        .map_err(|e| Error::Parse(format!("weight {s:?}: {e}")))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Str(String),
}

impl RawRational {
    fn resolve<E: serde::de::Error>(self) -> std::result::Result<Rational64, E> {
        match self {
            RawRational::Int(i) => Ok(Rational64::from_integer(i)),
            RawRational::Str(s) => parse_rational(&s).map_err(E::custom),
        }
    }
}

fn write_rational<S: Serializer>(q: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if q.is_integer() {
        s.serialize_i64(*q.numer())
    } else {
        s.serialize_str(&q.to_string())
    }
}

/// `#[serde(with = "liecalc::json::rational")]`
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
        write_rational(q, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational64, D::Error> {
        RawRational::deserialize(d)?.resolve()
    }
}

/// Like [`rational`], but always writes a `"p/q"` string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational64, D::Error> {
        RawRational::deserialize(d)?.resolve()
    }
}

/// `#[serde(with = "liecalc::json::rational_vec")]`
pub mod rational_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational64], s: S) -> std::result::Result<S::Ok, S::Error> {
        struct One<'a>(&'a Rational64);
        impl serde::Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                write_rational(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&One(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational64>, D::Error> {
        Vec::<RawRational>::deserialize(d)?.into_iter().map(RawRational::resolve).collect()
    }
}

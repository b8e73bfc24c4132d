//! Exact integers in JSON.
//!
//! Values within ±2⁵³ are written as JSON numbers; anything larger is
//! written as a decimal string. Both forms are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

const SAFE: i64 = 1 << 53;

/// Wrapper that (de)serializes a `BigInt` under the exact-integer rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if (-SAFE..=SAFE).contains(&v) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<BigInt, E> {
        Err(E::custom(format!(
            "{v} is not an exact integer; write large integers as strings"
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.trim()
            .parse::<BigInt>()
            .map_err(|_| E::custom(format!("invalid integer string {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor).map(JsonInt)
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    JsonInt(v.clone()).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    JsonInt::deserialize(d).map(|j| j.0)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<JsonInt> = v.iter().cloned().map(JsonInt).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let wrapped = Vec::<JsonInt>::deserialize(d)?;
        Ok(wrapped.into_iter().map(|j| j.0).collect())
    }
}

pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Vec<JsonInt>> = v
            .iter()
            .map(|r| r.iter().cloned().map(JsonInt).collect())
            .collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let wrapped = Vec::<Vec<JsonInt>>::deserialize(d)?;
        Ok(wrapped
            .into_iter()
            .map(|r| r.into_iter().map(|j| j.0).collect())
            .collect())
    }
}

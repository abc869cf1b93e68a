//! Serialisation of arbitrary-precision integers: a JSON number when the
//! value fits in 64 bits, otherwise its decimal string.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::Serializer;

pub fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

pub fn serialize_biguint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

/// Newtype that serialises through [`serialize_bigint`].
pub struct JsonInt<'a>(pub &'a BigInt);

impl serde::Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

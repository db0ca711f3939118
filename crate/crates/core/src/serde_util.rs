use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serializer;

/// Writes a big integer as a JSON number when it fits in `u64`, otherwise as
/// a decimal string.
pub fn biguint<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match n.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

//! Helpers shared by the JSON reports.

use num_bigint::BigInt;
use serde::Serializer;

/// Report schema tag written into every top-level JSON report.
pub const SCHEMA: &str = "symcalc-report/1";

/// Big integers are written as JSON numbers when they fit in `i64`, as strings otherwise.
pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Big(x))?;
    }
    seq.end()
}

struct Big<'a>(&'a BigInt);

impl serde::Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        bigint(self.0, s)
    }
}

//! Fixed-precision float output shared by the grid and report writers.
//!
//! Every float is written with 17 significant digits (`{:.16e}`), which
//! round-trips any `f64` exactly. JSON has no representation for
//! non-finite numbers; they are written as `null` and read back as NaN.

use serde::{Deserialize, Deserializer, Serializer};
use serde_json::value::RawValue;

/// `v` with 17 significant digits, or `inf`/`-inf`/`nan`.
pub fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Serde adapter for `f64` fields: `#[serde(with = "ronkin_core::serial::f17")]`.
pub mod f17 {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if !v.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{v:.16e}")).map_err(serde::ser::Error::custom)?;
        serde::Serialize::serialize(&raw, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// Serde adapter for `Option<f64>`; non-finite values are written as `null`.
pub mod f17_opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => f17::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Option::<f64>::deserialize(d)
    }
}

/// Serde adapter for fixed-size `f64` arrays.
pub mod f17_array {
    use super::*;
    use serde::ser::SerializeSeq;

    struct Wrap(f64);

    impl serde::Serialize for Wrap {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            f17::serialize(&self.0, s)
        }
    }

    pub fn serialize<S: Serializer, const N: usize>(v: &[f64; N], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(N))?;
        for x in v {
            seq.serialize_element(&Wrap(*x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(d: D) -> Result<[f64; N], D::Error> {
        let v = Vec::<Option<f64>>::deserialize(d)?;
        let n = v.len();
        let arr: Vec<f64> = v.into_iter().map(|x| x.unwrap_or(f64::NAN)).collect();
        arr.try_into()
            .map_err(|_| serde::de::Error::invalid_length(n, &"a fixed-length float array"))
    }
}

/// Serde adapter for `Vec<f64>`.
pub mod f17_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            let raw = if x.is_finite() {
                Some(RawValue::from_string(format!("{x:.16e}")).map_err(serde::ser::Error::custom)?)
            } else {
                None
            };
            seq.serialize_element(&raw)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        Ok(Vec::<Option<f64>>::deserialize(d)?
            .into_iter()
            .map(|x| x.unwrap_or(f64::NAN))
            .collect())
    }
}

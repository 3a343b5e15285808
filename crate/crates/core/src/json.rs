//! Value encodings shared by the input file formats.
//!
//! Complex numbers may be written as a JSON number, a string holding an exact
//! rational `"p/q"` or a decimal, or an object `{"re": .., "im": ..}` whose
//! parts use the same real encodings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repcat::ColorLabel;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RealSpec {
    Number(f64),
    Text(String),
}

impl RealSpec {
    pub fn value(&self) -> Result<f64> {
        match self {
            RealSpec::Number(x) => Ok(*x),
            RealSpec::Text(s) => parse_real(s),
        }
    }
}

impl From<f64> for RealSpec {
    fn from(x: f64) -> Self {
        RealSpec::Text(format_real(x))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexSpec {
    Real(RealSpec),
    Pair { re: RealSpec, im: RealSpec },
}

impl ComplexSpec {
    pub fn value(&self) -> Result<Complex64> {
        match self {
            ComplexSpec::Real(x) => Ok(Complex64::new(x.value()?, 0.0)),
            ComplexSpec::Pair { re, im } => Ok(Complex64::new(re.value()?, im.value()?)),
        }
    }
}

impl From<Complex64> for ComplexSpec {
    fn from(z: Complex64) -> Self {
        if z.im == 0.0 {
            ComplexSpec::Real(z.re.into())
        } else {
            ComplexSpec::Pair {
                re: z.re.into(),
                im: z.im.into(),
            }
        }
    }
}

/// Parse `"p/q"`, an integer, or a decimal literal. Rationals are reduced
/// exactly before the single rounding to `f64`.
pub fn parse_real(s: &str) -> Result<f64> {
    let t = s.trim();
    if t.contains('/') {
        let q = BigRational::from_str(t).map_err(|e| Error::Schema(format!("bad rational {t:?}: {e}")))?;
        return q
            .to_f64()
            .ok_or_else(|| Error::Schema(format!("rational {t:?} out of range")));
    }
    if let Ok(n) = BigInt::from_str(t) {
        return n.to_f64().ok_or_else(|| Error::Schema(format!("integer {t:?} out of range")));
    }
    t.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Schema(format!("cannot parse {t:?} as a real number")))
}

/// Shortest decimal that parses back to the same `f64`.
pub fn format_real(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ColorSpec {
    #[serde(rename = "V")]
    V(ComplexSpec),
    #[serde(rename = "sigma")]
    Sigma(i64),
    #[serde(rename = "epsilon")]
    Epsilon,
    #[serde(rename = "S")]
    S(u32),
}

impl ColorSpec {
    pub fn color(&self) -> Result<ColorLabel> {
        Ok(match self {
            ColorSpec::V(a) => ColorLabel::Valpha(a.value()?),
            ColorSpec::Sigma(k) => ColorLabel::Sigma(*k),
            ColorSpec::Epsilon => ColorLabel::Epsilon,
            ColorSpec::S(j) => ColorLabel::Simple(*j),
        })
    }
}

impl From<&ColorLabel> for ColorSpec {
    fn from(c: &ColorLabel) -> Self {
        match c {
            ColorLabel::Valpha(a) => ColorSpec::V((*a).into()),
            ColorLabel::Sigma(k) => ColorSpec::Sigma(*k),
            ColorLabel::Epsilon => ColorSpec::Epsilon,
            ColorLabel::Simple(j) => ColorSpec::S(*j),
        }
    }
}

/// Deserialize with the failing field path and position in the message.
pub fn from_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Schema(format!("at `{path}`: {inner}"))
    })
}

/// Serialize a complex value as `{"re", "im"}` numbers.
pub fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(parse_real("1/3").unwrap(), 1.0 / 3.0);
        assert_eq!(parse_real("-7/2").unwrap(), -3.5);
        assert_eq!(parse_real("0.25").unwrap(), 0.25);
        assert_eq!(parse_real("12").unwrap(), 12.0);
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("abc").is_err());
    }

    #[test]
    fn complex_encodings() {
        let a: ComplexSpec = serde_json::from_str("\"2/5\"").unwrap();
        assert_eq!(a.value().unwrap(), Complex64::new(0.4, 0.0));
        let b: ComplexSpec = serde_json::from_str(r#"{"re": "1/2", "im": -0.125}"#).unwrap();
        assert_eq!(b.value().unwrap(), Complex64::new(0.5, -0.125));
        let c: ComplexSpec = serde_json::from_str("0.75").unwrap();
        assert_eq!(c.value().unwrap(), Complex64::new(0.75, 0.0));
    }

    #[test]
    fn real_round_trip_is_exact() {
        for x in [0.1, 1.0 / 3.0, -2.5e-17, 123456.789] {
            assert_eq!(parse_real(&format_real(x)).unwrap(), x);
        }
    }

    #[test]
    fn colors() {
        let c: ColorSpec = serde_json::from_str(r#"{"V": "1/4"}"#).unwrap();
        assert_eq!(c.color().unwrap(), ColorLabel::Valpha(Complex64::new(0.25, 0.0)));
        let e: ColorSpec = serde_json::from_str("\"epsilon\"").unwrap();
        assert_eq!(e.color().unwrap(), ColorLabel::Epsilon);
    }
}

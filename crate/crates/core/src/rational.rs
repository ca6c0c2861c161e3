//   Copyright 2026 The tugames Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! Arbitrary-precision rationals and their string encoding.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p"` or `"p/q"` (decimal integers, optional sign on `p`).
pub fn parse(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let well_formed = !trimmed.is_empty()
        && trimmed.split('/').count() <= 2
        && trimmed.split('/').enumerate().all(|(i, part)| {
            let digits = if i == 0 {
                part.strip_prefix(['-', '+']).unwrap_or(part)
            } else {
                part
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        });
    if !well_formed {
        return Err(Error::BadRational(text.to_string()));
    }
    let trimmed = trimmed.strip_prefix('+').unwrap_or(trimmed);
    match trimmed.split_once('/') {
        Some((_, d)) if BigInt::from_str(d).map(|d| d.is_zero()).unwrap_or(true) => {
            Err(Error::BadRational(text.to_string()))
        }
        _ => Rational::from_str(trimmed).map_err(|_| Error::BadRational(text.to_string())),
    }
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(value: &Rational) -> String {
    value.to_string()
}

/// Parses a comma separated list of rationals such as `"1/2,0,-3"`.
pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse).collect()
}

/// Lossy conversion for plotting only.
pub fn to_f64(value: &Rational) -> f64 {
    let numer: f64 = value.numer().to_string().parse().unwrap_or(f64::NAN);
    let denom: f64 = value.denom().to_string().parse().unwrap_or(f64::NAN);
    numer / denom
}

/// Scales a vector by a positive rational so that it becomes a primitive
/// integer vector (coprime integer entries). Zero vectors are left alone.
pub fn make_primitive(values: &mut [Rational]) {
    let mut lcm = BigInt::one();
    for v in values.iter() {
        lcm = lcm.lcm(v.denom());
    }
    let mut gcd = BigInt::zero();
    for v in values.iter() {
        let scaled = (v * Rational::from_integer(lcm.clone())).to_integer();
        gcd = gcd.gcd(&scaled);
    }
    if gcd.is_zero() {
        return;
    }
    let factor = Rational::new(lcm, gcd.abs());
    for v in values.iter_mut() {
        *v = &*v * &factor;
    }
}

pub(crate) mod serde_vec {
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&super::format(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| super::parse(t).map_err(de::Error::custom))
            .collect()
    }
}

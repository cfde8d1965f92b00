//! JSON forms of polynomials, series and sequences.
//!
//! A polynomial is `{"terms": [{"coeff": "p/q", "monomial": {"w2": 1, "x": 1}}]}`
//! with terms in canonical order; a series adds an `"order"` field and lists
//! its coefficients.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operator::PolySequence;
use crate::poly::{Monomial, MultiPoly, Rational, VarId};
use crate::series::TruncatedSeries;

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    monomial: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: m.factors().iter().map(|(v, e)| (v.name(), *e)).collect(),
            })
            .collect();
        PolyJson { terms }
    }
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = Error;

    fn try_from(json: PolyJson) -> Result<Self> {
        let mut out = MultiPoly::zero();
        for term in json.terms {
            let coeff: Rational =
                term.coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", term.coeff)))?;
            let pairs =
                term.monomial.iter().map(|(name, &e)| Ok((name.parse::<VarId>()?, e))).collect::<Result<Vec<_>>>()?;
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        MultiPoly::try_from(PolyJson::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson { order: self.order(), coeffs: self.coeffs().to_vec() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = SeriesJson::deserialize(deserializer)?;
        if json.coeffs.len() > json.order + 1 {
            return Err(serde::de::Error::custom("more coefficients than the order allows"));
        }
        Ok(TruncatedSeries::new(json.coeffs, json.order))
    }
}

impl Serialize for PolySequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolySequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        PolySequence::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

pub fn poly_to_json(p: &MultiPoly) -> String {
    serde_json::to_string(p).expect("polynomials always serialize")
}

pub fn poly_from_json(text: &str) -> Result<MultiPoly> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn series_to_json(s: &TruncatedSeries) -> String {
    serde_json::to_string(s).expect("series always serialize")
}

pub fn series_from_json(text: &str) -> Result<TruncatedSeries> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

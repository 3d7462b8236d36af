//! Canonical JSON form of a [`MultiPoly`]:
//! `{"arity": n, "terms": [[[e0, e1, ...], "num/den"], ...]}` with terms in
//! canonical display order.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    arity: usize,
    terms: Vec<(Vec<u32>, String)>,
}

/// Parses `"num/den"` or `"num"` with an optional leading minus sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str, allow_sign: bool, offset: usize| -> Result<BigInt> {
        let body = if allow_sign {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(offset, "expected decimal digits"));
        }
        let v: BigInt = body.parse().map_err(|_| err(offset, "bad integer"))?;
        Ok(if body.len() != t.len() { -v } else { v })
    };
    let num = digits(num_str, true, 0)?;
    let den = match den_str {
        Some(d) => digits(d, false, num_str.len() + 1)?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(err(num_str.len() + 1, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl MultiPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = PolyJson {
            arity: self.arity(),
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|(e, c)| (e.to_vec(), format_rational(c)))
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    /// Decodes the canonical JSON form. Term order is not enforced, but
    /// duplicate exponent vectors, zero coefficients and exponent vectors of
    /// the wrong length are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PolyJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if doc.arity == 0 {
            return Err(Error::Json("arity must be at least 1".into()));
        }
        let mut seen = HashSet::new();
        let mut terms = Vec::with_capacity(doc.terms.len());
        for (e, c) in doc.terms {
            if e.len() != doc.arity {
                return Err(Error::Json(format!(
                    "exponent vector of length {} for arity {}",
                    e.len(),
                    doc.arity
                )));
            }
            let c = parse_rational(&c).map_err(|e| Error::Json(e.to_string()))?;
            if c.is_zero() {
                return Err(Error::Json("zero coefficient stored".into()));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::Json(format!("duplicate exponent vector {e:?}")));
            }
            terms.push((e, c));
        }
        MultiPoly::from_terms(doc.arity, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_forms() {
        assert_eq!(
            parse_rational("3").unwrap(),
            Rational::from_integer(3.into())
        );
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            Rational::new((-3).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("--1").is_err());
        assert!(parse_rational("+1").is_err());
    }

    #[test]
    fn canonical_json_layout() {
        let x = MultiPoly::var(3, 0);
        let y = MultiPoly::var(3, 1);
        let p = &(&x * &y) + &y.scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(
            p.to_json(),
            r#"{"arity":3,"terms":[[[1,1,0],"1/1"],[[0,1,0],"1/2"]]}"#
        );
        assert_eq!(MultiPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_documents() {
        for bad in [
            r#"{"arity":0,"terms":[]}"#,
            r#"{"arity":2,"terms":[[[1],"1"]]}"#,
            r#"{"arity":1,"terms":[[[1],"0"]]}"#,
            r#"{"arity":1,"terms":[[[1],"1"],[[1],"2"]]}"#,
            r#"{"arity":1,"terms":[[[1],"x"]]}"#,
            r#"{"arity":1,"terms":[],"extra":1}"#,
            r#"[1,2]"#,
        ] {
            assert!(MultiPoly::from_json(bad).is_err(), "{bad}");
        }
    }
}

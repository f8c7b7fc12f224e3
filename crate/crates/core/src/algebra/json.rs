//! Canonical JSON term lists.
//!
//! A polynomial is an array of `{"t", "u2", "v2", "c"}` records, `t` present
//! only for series, sorted by `(t, u2, v2)`, coefficients as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::{CoeffPoly, Monomial};
use super::series::{TSeries, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    pub u2: i32,
    pub v2: i32,
    pub c: String,
}

pub fn poly_to_records(p: &CoeffPoly) -> Vec<TermRecord> {
    p.terms()
        .iter()
        .map(|(m, c)| TermRecord {
            t: None,
            u2: m.u2,
            v2: m.v2,
            c: c.to_string(),
        })
        .collect()
}

/// Terms of a series with only finitely many nonzero known coefficients.
pub fn series_to_records(s: &TSeries) -> Vec<TermRecord> {
    let mut out = Vec::new();
    for (k, c) in s.iter() {
        for (m, a) in c.terms() {
            out.push(TermRecord {
                t: Some(k),
                u2: m.u2,
                v2: m.v2,
                c: a.to_string(),
            });
        }
    }
    out
}

fn parse_coeff(r: &TermRecord) -> Result<(Monomial, BigInt)> {
    let c = BigInt::from_str(&r.c)
        .map_err(|e| Error::InvalidArgument(format!("bad coefficient {:?}: {e}", r.c)))?;
    Ok((Monomial::try_doubled(r.u2, r.v2)?, c))
}

pub fn poly_from_records(records: &[TermRecord]) -> Result<CoeffPoly> {
    let mut terms = Vec::with_capacity(records.len());
    for r in records {
        if r.t.is_some() {
            return Err(Error::InvalidArgument(
                "unexpected t exponent in polynomial".into(),
            ));
        }
        terms.push(parse_coeff(r)?);
    }
    Ok(CoeffPoly::from_terms(terms))
}

/// Rebuilds a series from records; `order` is the exactness bound to attach.
pub fn series_from_records(var: Var, records: &[TermRecord], order: i64) -> Result<TSeries> {
    let mut by_exp: Vec<(i64, CoeffPoly)> = Vec::new();
    for r in records {
        let k =
            r.t.ok_or_else(|| Error::InvalidArgument("series term without t exponent".into()))?;
        let (m, c) = parse_coeff(r)?;
        by_exp.push((k, CoeffPoly::term(m, c)));
    }
    Ok(TSeries::from_sparse(var, by_exp, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::series::EXACT;

    #[test]
    fn roundtrip_big_coefficients() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let p = CoeffPoly::from_terms([
            (Monomial::doubled(1, 1), big.clone()),
            (Monomial::doubled(-2, 0), -big),
        ]);
        let json = serde_json::to_string(&poly_to_records(&p)).unwrap();
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(poly_from_records(&back).unwrap(), p);
        assert!(json.starts_with(r#"[{"u2":-2,"v2":0,"c":"-1234"#));
    }

    #[test]
    fn series_records_sorted() {
        let s = TSeries::polynomial(
            Var::T,
            [(2, CoeffPoly::one()), (0, CoeffPoly::curve_class(1))],
        );
        let recs = series_to_records(&s);
        let keys: Vec<_> = recs.iter().map(|r| (r.t, r.u2, r.v2)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(series_from_records(Var::T, &recs, EXACT).unwrap(), s);
    }
}

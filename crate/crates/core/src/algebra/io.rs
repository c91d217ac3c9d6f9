//! JSON polynomial document: `{"d": <int>, "coeffs": [[an, ad, bn, bd], ...]}`.
//!
//! Coefficients ascend in degree; each quadruple is the reduced `an/ad + (bn/bd)·√d` with all
//! four integers written as decimal strings.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, FieldElement, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDocument {
    pub d: i64,
    pub coeffs: Vec<[String; 4]>,
}

pub fn poly_to_document(p: &Poly) -> PolyDocument {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let (a, b) = (c.rational_part(), c.radical_part());
            [
                a.numer().to_string(),
                a.denom().to_string(),
                b.numer().to_string(),
                b.denom().to_string(),
            ]
        })
        .collect();
    PolyDocument { d: p.d(), coeffs }
}

fn parse_int(s: &str) -> Result<BigInt, AlgebraError> {
    s.parse::<BigInt>()
        .map_err(|e| AlgebraError::Format(format!("bad integer {s:?}: {e}")))
}

fn parse_rational(n: &str, m: &str) -> Result<Rational, AlgebraError> {
    let (n, m) = (parse_int(n)?, parse_int(m)?);
    if !m.is_positive() {
        return Err(AlgebraError::Format(format!(
            "denominator {m} must be positive"
        )));
    }
    Ok(Rational::new(n, m))
}

pub fn poly_from_document(doc: &PolyDocument) -> Result<Poly, AlgebraError> {
    let coeffs = doc
        .coeffs
        .iter()
        .map(|[an, ad, bn, bd]| {
            FieldElement::new(parse_rational(an, ad)?, parse_rational(bn, bd)?, doc.d)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Poly::new(coeffs, doc.d)
}

pub fn poly_to_json(p: &Poly) -> String {
    serde_json::to_string(&poly_to_document(p)).expect("serializable")
}

pub fn parse_poly_json(s: &str) -> Result<Poly, AlgebraError> {
    let doc: PolyDocument =
        serde_json::from_str(s).map_err(|e| AlgebraError::Format(e.to_string()))?;
    poly_from_document(&doc)
}

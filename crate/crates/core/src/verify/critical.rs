use serde::Serialize;

use super::VerifyError;
use crate::algebra::linalg::minimal_polynomial_mod;
use crate::algebra::{
    poly_to_document, squarefree_decomposition, squarefree_part, FieldElement, Poly, PolyDocument,
};
use crate::dessins::Passport;

/// Distinct finite critical values of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalValues {
    /// All values lie in the coefficient field; zero comes first.
    InField(Vec<FieldElement>),
    /// Two values forming a conjugate pair outside the coefficient field; `minimal_polynomial`
    /// is their monic quadratic.
    Extension { minimal_polynomial: Poly },
    /// More than two values; only their number and minimal polynomial are reported.
    Many {
        count: usize,
        minimal_polynomial: Poly,
    },
}

impl CriticalValues {
    pub fn count(&self) -> usize {
        match self {
            CriticalValues::InField(v) => v.len(),
            CriticalValues::Extension { .. } => 2,
            CriticalValues::Many { count, .. } => *count,
        }
    }

    pub fn in_field(&self) -> Option<&[FieldElement]> {
        match self {
            CriticalValues::InField(v) => Some(v),
            _ => None,
        }
    }
}

/// Monic polynomial whose roots are exactly the distinct critical values of `p`.
///
/// Minimal polynomial of `P` acting on `K[x]/(S)` with `S` the squarefree part of `P'`.
pub fn critical_value_polynomial(p: &Poly) -> Result<Poly, VerifyError> {
    if p.is_zero() || p.deg() < 1 {
        return Err(VerifyError::DegreeTooSmall(p.degree().unwrap_or(0)));
    }
    if p.deg() == 1 {
        return Ok(Poly::one(p.d()));
    }
    let s = squarefree_part(&p.derivative())?;
    Ok(minimal_polynomial_mod(p, &s)?)
}

fn value_order(a: &FieldElement, b: &FieldElement) -> std::cmp::Ordering {
    (!a.is_zero(), a.rational_part(), a.radical_part()).cmp(&(
        !b.is_zero(),
        b.rational_part(),
        b.radical_part(),
    ))
}

pub fn critical_values(p: &Poly) -> Result<CriticalValues, VerifyError> {
    let m = critical_value_polynomial(p)?;
    let d = p.d();
    let mut values = match m.deg() {
        0 => Vec::new(),
        1 => vec![-&(&m.coeff(0) / &m.coeff(1))],
        2 => {
            // monic: y² + b y + c
            let (b, c) = (m.coeff(1), m.coeff(0));
            let disc = &(&b * &b) - &(&c * &FieldElement::from_int(4, d));
            match disc.sqrt() {
                Some(root) => {
                    let half = FieldElement::from_frac(1, 2, d);
                    vec![&(&-&b + &root) * &half, &(&-&b - &root) * &half]
                }
                None => {
                    return Ok(CriticalValues::Extension {
                        minimal_polynomial: m,
                    })
                }
            }
        }
        count => {
            return Ok(CriticalValues::Many {
                count,
                minimal_polynomial: m,
            })
        }
    };
    values.sort_by(value_order);
    Ok(CriticalValues::InField(values))
}

/// Root multiplicities of `p − c`, descending.
pub fn fiber_profile(p: &Poly, c: &FieldElement) -> Result<Vec<usize>, VerifyError> {
    let shifted = p - &Poly::constant(c.clone());
    let mut out = Vec::new();
    for (f, m) in squarefree_decomposition(&shifted)? {
        out.extend(std::iter::repeat_n(m, f.deg()));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShabatReport {
    pub degree: usize,
    pub is_shabat: bool,
    /// Exactly one critical value (e.g. a pure power); accepted as Shabat but flagged.
    pub degenerate: bool,
    pub value_count: usize,
    /// Values in the coefficient field, or `None` when an extension would be needed.
    pub critical_values: Option<Vec<PolyDocument>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension_polynomial: Option<PolyDocument>,
    pub black_profile: Vec<usize>,
    pub white_profile: Vec<usize>,
    pub field_disc: i64,
}

/// Exact Shabat test: at most two distinct finite critical values.
///
/// The black profile is the fiber over the first critical value (zero when zero is one of them),
/// the white profile the fiber over the second.
pub fn is_shabat(p: &Poly) -> Result<ShabatReport, VerifyError> {
    let cv = critical_values(p)?;
    let count = cv.count();
    let d = p.d();
    let (mut black, mut white) = (Vec::new(), Vec::new());
    if let Some(vals) = cv.in_field() {
        match vals {
            [c1, c2] => {
                black = fiber_profile(p, c1)?;
                white = fiber_profile(p, c2)?;
            }
            [c] => {
                black = fiber_profile(p, c)?;
                white = vec![1; p.deg()];
            }
            _ => {}
        }
    }
    let as_doc = |v: &FieldElement| poly_to_document(&Poly::constant(v.clone()));
    Ok(ShabatReport {
        degree: p.deg(),
        is_shabat: count <= 2,
        degenerate: count == 1,
        value_count: count,
        critical_values: cv.in_field().map(|v| v.iter().map(as_doc).collect()),
        extension_polynomial: match &cv {
            CriticalValues::Extension { minimal_polynomial } => {
                Some(poly_to_document(minimal_polynomial))
            }
            _ => None,
        },
        black_profile: black,
        white_profile: white,
        field_disc: if p.is_rational() { 1 } else { d },
    })
}

/// Passport of the tree `P⁻¹([c₁, c₂])`; needs exactly two critical values in the field.
pub fn passport_from_poly(p: &Poly) -> Result<Passport, VerifyError> {
    match critical_values(p)? {
        CriticalValues::InField(v) if v.len() == 2 => Ok(Passport::new(
            fiber_profile(p, &v[0])?,
            fiber_profile(p, &v[1])?,
        )?),
        CriticalValues::InField(v) => Err(VerifyError::NeedTwoValues(v.len())),
        CriticalValues::Extension { .. } => Err(VerifyError::ValuesOutsideField),
        CriticalValues::Many { count, .. } => Err(VerifyError::NotShabat(count)),
    }
}

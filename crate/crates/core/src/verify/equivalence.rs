use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use super::VerifyError;
use crate::algebra::{poly_to_document, FieldElement, Poly, PolyDocument, Rational};

/// Evidence for `Q(x) = A·P(a·x + b) + B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    /// `a^g = t` pins down `a` up to a `g`-th root of unity.
    pub g: usize,
    pub t: FieldElement,
    /// Explicit affine data, present when some admissible `a` lies in the coefficient field.
    pub affine: Option<AffineMap>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub big_a: FieldElement,
    pub big_b: FieldElement,
    pub a: FieldElement,
    pub b: FieldElement,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDocument {
    pub g: usize,
    pub t: PolyDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine: Option<[PolyDocument; 4]>,
}

impl EquivalenceWitness {
    pub fn to_document(&self) -> WitnessDocument {
        let doc = |x: &FieldElement| poly_to_document(&Poly::constant(x.clone()));
        WitnessDocument {
            g: self.g,
            t: doc(&self.t),
            affine: self
                .affine
                .as_ref()
                .map(|m| [doc(&m.big_a), doc(&m.big_b), doc(&m.a), doc(&m.b)]),
        }
    }
}

/// Monic, centered, zero constant term: `N(P)(x) = (P(x + s) − P(s)) / lc(P)` with
/// `s = −c_{n−1} / (n·c_n)`. Returns `(N(P), s)`.
pub fn normal_form(p: &Poly) -> (Poly, FieldElement) {
    let n = p.deg();
    let d = p.d();
    let s = -&(&p.coeff(n - 1) / &(&p.lc() * &FieldElement::from_int(n as i64, d)));
    let shifted = p.shift(&s);
    let c0 = Poly::constant(shifted.coeff(0));
    let lc_inv = p.lc().inv().expect("nonzero leading coefficient");
    ((&shifted - &c0).scale(&lc_inv), s)
}

fn bezout(values: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut coeffs: Vec<i64> = Vec::with_capacity(values.len());
    for &v in values {
        if g == 0 {
            g = v;
            coeffs.push(1);
            continue;
        }
        let e = g.extended_gcd(&v);
        for c in coeffs.iter_mut() {
            *c *= e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    (g, coeffs)
}

fn integer_root(x: &BigInt, k: u32) -> Option<BigInt> {
    if x.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return integer_root(&-x, k).map(|r| -r);
    }
    let r = x.nth_root(k);
    (r.pow(k) == *x).then_some(r)
}

/// Some `k`-th root of `t` inside its field, if one is found.
fn field_root(t: &FieldElement, k: usize) -> Option<FieldElement> {
    if k == 1 {
        return Some(t.clone());
    }
    if k.is_multiple_of(2) {
        let r = t.sqrt()?;
        return field_root(&r, k / 2).or_else(|| field_root(&-&r, k / 2));
    }
    if t.is_rational() {
        let q = t.rational_part();
        let num = integer_root(q.numer(), k as u32)?;
        let den = integer_root(q.denom(), k as u32)?;
        return Some(FieldElement::rational(Rational::new(num, den), t.d()));
    }
    None
}

fn common_field(p: &Poly, q: &Poly) -> Option<(Poly, Poly)> {
    if p.d() == q.d() {
        return Some((p.clone(), q.clone()));
    }
    if p.is_rational() {
        return Some((p.retag(q.d()).ok()?, q.clone()));
    }
    if q.is_rational() {
        return Some((p.clone(), q.retag(p.d()).ok()?));
    }
    None
}

/// Decides whether `q(x) = A·p(a·x + b) + B` for some constants with `A, a ≠ 0`, with `a`
/// allowed to lie in an extension of the coefficient field.
///
/// Both polynomials are brought to normal form; then `q_k = p_k·a^(k−n)` must hold for every
/// coefficient, so `a^(n−k)` is known for each nonzero `k` and consistency of these powers
/// decides the question.
pub fn equivalent(p: &Poly, q: &Poly) -> Result<Option<EquivalenceWitness>, VerifyError> {
    if p.is_zero() || q.is_zero() || p.deg() != q.deg() {
        return Err(VerifyError::DegreeMismatch(
            p.degree().unwrap_or(0),
            q.degree().unwrap_or(0),
        ));
    }
    let n = p.deg();
    if n < 2 {
        return Err(VerifyError::DegreeTooSmall(n));
    }
    let Some((p, q)) = common_field(p, q) else {
        return Ok(None);
    };
    let d = p.d();
    let (np, sp) = normal_form(&p);
    let (nq, sq) = normal_form(&q);
    let mut exps = Vec::new();
    let mut taus = Vec::new();
    for k in 1..n {
        let (pk, qk) = (np.coeff(k), nq.coeff(k));
        match (pk.is_zero(), qk.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                exps.push((n - k) as i64);
                taus.push(&pk / &qk);
            }
            _ => return Ok(None),
        }
    }
    let (g, t) = if exps.is_empty() {
        (1usize, FieldElement::one(d))
    } else {
        let (g, lambda) = bezout(&exps);
        let mut t = FieldElement::one(d);
        for (tau, l) in taus.iter().zip(&lambda) {
            t = &t * &tau.powi(*l).expect("nonzero ratio");
        }
        for (tau, e) in taus.iter().zip(&exps) {
            if t.pow((*e / g) as u64) != *tau {
                return Ok(None);
            }
        }
        (g as usize, t)
    };
    let affine = field_root(&t, g).map(|a| {
        let big_a = &q.lc() / &(&p.lc() * &a.pow(n as u64));
        let b = &sp - &(&a * &sq);
        let big_b = &q.eval(&sq) - &(&big_a * &p.eval(&sp));
        AffineMap { big_a, big_b, a, b }
    });
    if let Some(m) = &affine {
        let inner = Poly::new(vec![m.b.clone(), m.a.clone()], d)?;
        let rebuilt = &p.compose(&inner).scale(&m.big_a) + &Poly::constant(m.big_b.clone());
        if rebuilt != q {
            return Err(VerifyError::Internal(
                "affine witness failed to reproduce the target".into(),
            ));
        }
    }
    Ok(Some(EquivalenceWitness { g, t, affine }))
}

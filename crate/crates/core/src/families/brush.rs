use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::FamilyError;
use crate::algebra::{FieldElement, Poly, Rational};
use crate::verify::critical_values;

/// `k!!`, with `0!! = (−1)!! = 1`.
pub fn double_factorial(k: i64) -> BigInt {
    let mut out = BigInt::one();
    let mut j = k;
    while j > 1 {
        out *= j;
        j -= 2;
    }
    out
}

pub(crate) fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * j)
}

/// Generalized binomial `C(m, j)` for integer `m` of either sign.
fn binomial(m: i64, j: u64) -> Rational {
    let mut num = BigInt::one();
    for i in 0..j as i64 {
        num *= m - i;
    }
    Rational::new(num, factorial(j))
}

fn rat(n: i64, m: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(m))
}

/// `P_n^(a,b)(x) = Σ_k C(n+a, n−k) C(n+b, k) ((x−1)/2)^k ((x+1)/2)^(n−k)`, valid for all integer
/// parameters.
fn jacobi_standard(n: usize, a: i64, b: i64) -> Poly {
    let minus = Poly::from_rationals(&[rat(-1, 2), rat(1, 2)], 1);
    let plus = Poly::from_rationals(&[rat(1, 2), rat(1, 2)], 1);
    let mut out = Poly::zero(1);
    for k in 0..=n {
        let c = binomial(n as i64 + a, (n - k) as u64) * binomial(n as i64 + b, k as u64);
        if c.is_zero() {
            continue;
        }
        let term = &minus.pow(k as u32) * &plus.pow((n - k) as u32);
        out = &out + &term.scale(&FieldElement::rational(c, 1));
    }
    out
}

/// Argument-order and sign conventions a Jacobi reference may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JacobiConvention {
    Standard,
    Negated,
    Swapped,
    SwappedNegated,
}

impl JacobiConvention {
    pub const ALL: [JacobiConvention; 4] = [
        JacobiConvention::Standard,
        JacobiConvention::Negated,
        JacobiConvention::Swapped,
        JacobiConvention::SwappedNegated,
    ];

    fn apply(self, n: usize, a: i64, b: i64) -> Poly {
        let (a, b) = match self {
            JacobiConvention::Swapped | JacobiConvention::SwappedNegated => (b, a),
            _ => (a, b),
        };
        let p = jacobi_standard(n, a, b);
        match self {
            JacobiConvention::Negated | JacobiConvention::SwappedNegated if n % 2 == 1 => -&p,
            _ => p,
        }
    }
}

fn rr_brush_with(conv: JacobiConvention, p: usize, q: usize) -> Poly {
    let half = Poly::from_rationals(&[rat(1, 2), rat(1, 2)], 1);
    &half.pow(p as u32 + 1) * &conv.apply(q, -(q as i64) - 1, p as i64 + 1)
}

fn values_are_unit(poly: &Poly) -> bool {
    matches!(critical_values(poly).ok().as_ref().and_then(|c| c.in_field()),
        Some([a, b]) if a.is_zero() && b.is_one())
}

/// The first convention (in `JacobiConvention::ALL` order) under which the `(p, q)`-brush
/// formula has critical values exactly `{0, 1}` for all `p, q ∈ {1, 2}`.
pub fn jacobi_convention() -> JacobiConvention {
    static CHOSEN: OnceLock<JacobiConvention> = OnceLock::new();
    *CHOSEN.get_or_init(|| {
        JacobiConvention::ALL
            .into_iter()
            .find(|&c| (1..=2).all(|p| (1..=2).all(|q| values_are_unit(&rr_brush_with(c, p, q)))))
            .expect("some Jacobi convention makes the brush formula a {0,1} Shabat polynomial")
    })
}

/// Jacobi polynomial `J_n(a, b, x)` in the calibrated convention; see [`jacobi_convention`].
/// Under it, `J_0 = 1`.
pub fn jacobi(n: usize, a: i64, b: i64) -> Result<Poly, FamilyError> {
    let p = jacobi_convention().apply(n, a, b);
    if p.is_zero() || p.deg() < n {
        return Err(FamilyError::DegreeCollapse { n, a, b });
    }
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BrushNormalization {
    /// Critical values `{0, 1}`.
    Unit01,
    /// Integral form with the constants used for F5: critical values `{0, −1}`.
    F5,
    /// Integral form over `Q(√5)` with the constants used for F6; its two critical values are the
    /// primitive fifth roots of unity with `ζ + ζ⁻¹ = −(1 + √5)/2`.
    F6,
}

/// `Σ_k (−1)^k C(p, k) x^(2p−2k+1) / (2p−2k+1) = ∫_0^x (t² − 1)^p dt`.
fn integral_odd(p: usize, beta: Option<&FieldElement>, d: i64) -> Poly {
    // with `beta`, ∫_0^x (t²/β + 1)^p dt instead
    let mut coeffs = vec![FieldElement::zero(d); 2 * p + 2];
    for k in 0..=p {
        let deg = 2 * p - 2 * k + 1;
        let mut c = FieldElement::rational(binomial(p as i64, k as u64) * rat(1, deg as i64), d);
        match beta {
            None if k % 2 == 1 => c = -c,
            None => {}
            Some(b) => c = &c * &b.powi(k as i64 - p as i64).expect("nonzero"),
        }
        coeffs[deg] = c;
    }
    Poly::new(coeffs, d).expect("nonzero")
}

/// `K = (−1)^(p+1) (2p+1)!! / (2·(2p)!!)`.
pub fn f5_constant(p: usize) -> Rational {
    let sign = if p % 2 == 1 { 1 } else { -1 };
    Rational::new(
        sign * double_factorial(2 * p as i64 + 1),
        2 * double_factorial(2 * p as i64),
    )
}

/// Lemma form of the F6 brush polynomial for `r = p + 1` and `α = ±√5`:
/// `(2p+1)!/(p!² 2^(2p+2)) Σ_k C(p,k) β^(k−p) x^(2p−2k+1)/(2p−2k+1) − (1+α)/4` with `β = 10 − 2α`.
pub(crate) fn f6_inner(p: usize, alpha: &FieldElement) -> Poly {
    let d = alpha.d();
    let beta = &FieldElement::from_int(10, d) - &(alpha * &FieldElement::from_int(2, d));
    let k = Rational::new(
        factorial(2 * p as u64 + 1),
        factorial(p as u64).pow(2) * BigInt::from(2).pow(2 * p as u32 + 2),
    );
    let c = -&(&(&FieldElement::one(d) + alpha) * &FieldElement::from_frac(1, 4, d));
    &integral_odd(p, Some(&beta), d).scale(&FieldElement::rational(k, d)) + &Poly::constant(c)
}

/// Shabat polynomial of the `(p, q)`-brush.
pub fn brush(p: usize, q: usize, norm: BrushNormalization) -> Result<Poly, FamilyError> {
    if p == 0 || q == 0 {
        return Err(FamilyError::Unsupported(format!(
            "brush needs p, q ≥ 1, got ({p}, {q})"
        )));
    }
    match norm {
        BrushNormalization::Unit01 => {
            let half = Poly::from_rationals(&[rat(1, 2), rat(1, 2)], 1);
            Ok(&half.pow(p as u32 + 1) * &jacobi(q, -(q as i64) - 1, p as i64 + 1)?)
        }
        _ if p != q => Err(FamilyError::Unsupported(format!(
            "the {norm:?} normalization needs p = q, got ({p}, {q})"
        ))),
        BrushNormalization::F5 => {
            let k = FieldElement::rational(f5_constant(p), 1);
            Ok(&integral_odd(p, None, 1).scale(&k)
                + &Poly::constant(FieldElement::from_frac(-1, 2, 1)))
        }
        BrushNormalization::F6 => Ok(f6_inner(p, &FieldElement::sqrt_d(5))),
    }
}

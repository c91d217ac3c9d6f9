//! Exact arithmetic: rationals, quadratic field elements and dense univariate polynomials.

mod field;
mod io;
pub mod linalg;
mod poly;

pub use field::{is_squarefree, rational_sqrt, squarefree_decompose, FieldElement};
pub use io::{parse_poly_json, poly_from_document, poly_to_document, poly_to_json, PolyDocument};
pub use poly::{
    conjugate_pair_quadratic, gcd, resultant, squarefree_decomposition, squarefree_part, Poly,
};

use thiserror::Error;

/// Arbitrary precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements of Q(√{0}) and Q(√{1}) cannot be combined")]
    FieldMismatch(i64, i64),
    #[error("{0} is not a squarefree integer")]
    NotSquarefree(i64),
    #[error("a rational field element (d = 1) cannot carry a radical part")]
    RationalWithRadical,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("division left a nonzero remainder")]
    InexactDivision,
    #[error("polynomial of degree {0} is too small, need at least {1}")]
    DegreeTooSmall(usize, usize),
    #[error("malformed polynomial document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    /// `p(q(x))`
    Compose,
}

pub fn arith(p: &Poly, q: &Poly, kind: ArithKind) -> Result<Poly, AlgebraError> {
    match kind {
        ArithKind::Add => p.checked_add(q),
        ArithKind::Sub => p.checked_sub(q),
        ArithKind::Mul => p.checked_mul(q),
        ArithKind::Compose => p.checked_compose(q),
    }
}

pub fn derivative(p: &Poly) -> Poly {
    p.derivative()
}

/// `R(y) = Res_x(P(x) − y, P'(x))`, a polynomial of degree `deg P − 1` whose roots are the
/// critical values of `P`, each repeated according to the multiplicity of its critical points.
///
/// Computed from the identity `Res_x(P − y, P') = lc(P')^n · (−1)^(n−1) · χ(y)` where χ is the
/// characteristic polynomial of multiplication by `P` on `K[x]/(P')`.
pub fn bivariate_resultant_in_y(p: &Poly) -> Result<Poly, AlgebraError> {
    let n = p.deg();
    if p.is_zero() || n < 2 {
        return Err(AlgebraError::DegreeTooSmall(n, 2));
    }
    let dp = p.derivative();
    let chi = linalg::Matrix::multiplication(p, &dp)?.charpoly();
    let mut factor = dp.lc().pow(n as u64);
    if (n - 1) % 2 == 1 {
        factor = -factor;
    }
    Ok(chi.scale(&factor))
}

/// Coefficient-wise `√d ↦ −√d`.
pub trait GaloisConjugate {
    fn galois_conjugate(&self) -> Self;
}

impl GaloisConjugate for FieldElement {
    fn galois_conjugate(&self) -> Self {
        self.conjugate()
    }
}

impl GaloisConjugate for Poly {
    fn galois_conjugate(&self) -> Self {
        Poly::galois_conjugate(self)
    }
}

pub fn galois_conjugate<T: GaloisConjugate>(x: &T) -> T {
    x.galois_conjugate()
}

/// Rational from a pair of machine integers.
pub fn q(n: i64, m: i64) -> Rational {
    Rational::new(n.into(), m.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivariate_resultant_of_cubic() {
        // x³ − 3x: critical points ±1, values ∓2
        let p = Poly::from_ints(&[0, -3, 0, 1], 1);
        let r = bivariate_resultant_in_y(&p).unwrap();
        assert_eq!(r.deg(), 2);
        let sf = squarefree_part(&r).unwrap();
        assert_eq!(sf, Poly::from_ints(&[-4, 0, 1], 1));
    }

    #[test]
    fn bivariate_resultant_of_square() {
        let r = bivariate_resultant_in_y(&Poly::from_ints(&[0, 0, 1], 1)).unwrap();
        assert_eq!(squarefree_part(&r).unwrap(), Poly::x(1));
        assert!(bivariate_resultant_in_y(&Poly::from_ints(&[1, 1], 1)).is_err());
    }

    #[test]
    fn arith_dispatch() {
        let a = Poly::from_ints(&[0, 0, 1], 1);
        let b = Poly::from_ints(&[1, 1], 1);
        assert_eq!(
            arith(&a, &b, ArithKind::Compose).unwrap(),
            Poly::from_ints(&[1, 2, 1], 1)
        );
        assert_eq!(
            arith(&a, &b, ArithKind::Sub).unwrap(),
            Poly::from_ints(&[-1, -1, 1], 1)
        );
        assert!(arith(&a, &Poly::x(5), ArithKind::Add).is_err());
    }
}

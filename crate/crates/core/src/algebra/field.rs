use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// Returns true when `d` has no repeated prime factor. `1` and `-1` count as squarefree.
pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let mut m = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        if m.is_multiple_of(p) {
            m /= p;
        }
        p += 1;
    }
    true
}

/// Splits a nonzero integer as `k² · d` with `d` squarefree and `k > 0`.
pub fn squarefree_decompose(value: &BigInt) -> (BigInt, i64) {
    assert!(!value.is_zero(), "squarefree part of zero");
    let negative = value.is_negative();
    let mut m = value.abs();
    let mut k = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= &p;
        }
        if e % 2 == 1 {
            core *= &p;
        }
        p += 1u32;
    }
    core *= m;
    let mut d: i64 = i64::try_from(core).expect("squarefree part exceeds i64");
    if negative {
        d = -d;
    }
    (k, d)
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let m = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&m * &m) == q.denom() {
        Some(Rational::new(n, m))
    } else {
        None
    }
}

/// An element `a + b·√d` of the quadratic field ℚ(√d).
///
/// `d` is a squarefree integer different from zero. `d = 1` stands for ℚ itself and then
/// `b` is always zero. Elements carrying different `d` are never mixed: the checked
/// operations return [`AlgebraError::FieldMismatch`] and the operator impls panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
    d: i64,
}

impl FieldElement {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self, AlgebraError> {
        if !is_squarefree(d) {
            return Err(AlgebraError::NotSquarefree(d));
        }
        if d == 1 && !b.is_zero() {
            return Err(AlgebraError::RationalWithRadical);
        }
        Ok(FieldElement { a, b, d })
    }

    pub(crate) fn new_unchecked(a: Rational, b: Rational, d: i64) -> Self {
        debug_assert!(d != 1 || b.is_zero());
        FieldElement { a, b, d }
    }

    /// The rational `q` embedded in ℚ(√d).
    pub fn rational(q: Rational, d: i64) -> Self {
        FieldElement {
            a: q,
            b: Rational::zero(),
            d,
        }
    }

    pub fn from_int(n: i64, d: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)), d)
    }

    pub fn from_frac(n: i64, m: i64, d: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(n), BigInt::from(m)), d)
    }

    /// `√d` itself.
    pub fn sqrt_d(d: i64) -> Self {
        FieldElement::new_unchecked(Rational::zero(), Rational::one(), d)
    }

    pub fn zero(d: i64) -> Self {
        Self::rational(Rational::zero(), d)
    }

    pub fn one(d: i64) -> Self {
        Self::rational(Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Re-tags a rational element into another field.
    pub fn retag(&self, d: i64) -> Result<Self, AlgebraError> {
        if !self.b.is_zero() && d != self.d {
            return Err(AlgebraError::FieldMismatch(self.d, d));
        }
        FieldElement::new(self.a.clone(), self.b.clone(), d)
    }

    /// The nontrivial automorphism `√d ↦ −√d`.
    pub fn conjugate(&self) -> Self {
        FieldElement::new_unchecked(self.a.clone(), -&self.b, self.d)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch(self.d, other.d))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.add_raw(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.sub_raw(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.mul_raw(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let inv = other.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.mul_raw(&inv))
    }

    fn add_raw(&self, o: &Self) -> Self {
        FieldElement::new_unchecked(&self.a + &o.a, &self.b + &o.b, self.d)
    }

    fn sub_raw(&self, o: &Self) -> Self {
        FieldElement::new_unchecked(&self.a - &o.a, &self.b - &o.b, self.d)
    }

    fn mul_raw(&self, o: &Self) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return FieldElement::new_unchecked(&self.a * &o.a, Rational::zero(), self.d);
        }
        if self.b.is_zero() {
            return FieldElement::new_unchecked(&self.a * &o.a, &self.a * &o.b, self.d);
        }
        if o.b.is_zero() {
            return FieldElement::new_unchecked(&self.a * &o.a, &self.b * &o.a, self.d);
        }
        let d = Rational::from_integer(BigInt::from(self.d));
        FieldElement::new_unchecked(
            &self.a * &o.a + d * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
            self.d,
        )
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(FieldElement::new_unchecked(
                self.a.recip(),
                Rational::zero(),
                self.d,
            ));
        }
        let n = self.norm();
        Some(FieldElement::new_unchecked(
            &self.a / &n,
            -&self.b / &n,
            self.d,
        ))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_raw(&base);
            }
        }
        acc
    }

    /// Integer power allowing negative exponents.
    pub fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|v| v.pow(e.unsigned_abs()))
        }
    }

    /// Square root inside ℚ(√d), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(FieldElement::rational(r, self.d));
            }
            if self.d == 1 {
                return None;
            }
            // a = d·y²
            let q = &self.a / Rational::from_integer(BigInt::from(self.d));
            return rational_sqrt(&q)
                .map(|y| FieldElement::new_unchecked(Rational::zero(), y, self.d));
        }
        // (x + y√d)² = x² + d·y² + 2xy√d
        let root_norm = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(BigInt::from(2));
        for s in [root_norm.clone(), -root_norm] {
            let x2 = (&self.a + &s) / &two;
            if let Some(x) = rational_sqrt(&x2) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let cand = FieldElement::new_unchecked(x, y, self.d);
                if &cand.mul_raw(&cand) == self {
                    return Some(cand);
                }
            }
        }
        None
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let radical = if self.b.is_one() {
            format!("√{}", self.d)
        } else if (-&self.b).is_one() {
            format!("-√{}", self.d)
        } else {
            format!("({})√{}", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{radical}")
        } else if let Some(rest) = radical.strip_prefix('-') {
            write!(f, "{} - {}", self.a, rest)
        } else {
            write!(f, "{} + {}", self.a, radical)
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $raw:ident) => {
        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &'a FieldElement) -> FieldElement {
                assert_eq!(self.d, rhs.d, "mixed quadratic fields");
                self.$raw(rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, add_raw);
binop!(Sub, sub, sub_raw);
binop!(Mul, mul, mul_raw);

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division in quadratic field")
    }
}

impl Div<FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        &self / &rhs
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new_unchecked(-&self.a, -&self.b, self.d)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

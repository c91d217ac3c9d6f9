use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, FieldElement, Rational};

/// Dense univariate polynomial over ℚ(√d), coefficients in ascending degree.
///
/// The coefficient list never ends in a zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
    d: i64,
}

impl Poly {
    pub fn new(coeffs: Vec<FieldElement>, d: i64) -> Result<Self, AlgebraError> {
        if !super::is_squarefree(d) {
            return Err(AlgebraError::NotSquarefree(d));
        }
        if let Some(c) = coeffs.iter().find(|c| c.d() != d) {
            return Err(AlgebraError::FieldMismatch(d, c.d()));
        }
        Ok(Self::from_vec(coeffs, d))
    }

    pub(crate) fn from_vec(mut coeffs: Vec<FieldElement>, d: i64) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, d }
    }

    pub fn from_rationals(coeffs: &[Rational], d: i64) -> Self {
        Self::from_vec(
            coeffs
                .iter()
                .map(|c| FieldElement::rational(c.clone(), d))
                .collect(),
            d,
        )
    }

    pub fn from_ints(coeffs: &[i64], d: i64) -> Self {
        Self::from_vec(
            coeffs
                .iter()
                .map(|&c| FieldElement::from_int(c, d))
                .collect(),
            d,
        )
    }

    pub fn zero(d: i64) -> Self {
        Poly {
            coeffs: Vec::new(),
            d,
        }
    }

    pub fn one(d: i64) -> Self {
        Self::constant(FieldElement::one(d))
    }

    pub fn x(d: i64) -> Self {
        Self::from_ints(&[0, 1], d)
    }

    pub fn constant(c: FieldElement) -> Self {
        let d = c.d();
        Self::from_vec(vec![c], d)
    }

    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let d = c.d();
        let mut v = vec![FieldElement::zero(d); k];
        v.push(c);
        Self::from_vec(v, d)
    }

    /// `x − root`.
    pub fn linear(root: &FieldElement) -> Self {
        let d = root.d();
        Self::from_vec(vec![-root, FieldElement::one(d)], d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.d))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for contexts where it cannot occur.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> FieldElement {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.d))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_rational)
    }

    /// Moves a polynomial with rational coefficients into ℚ(√d).
    pub fn retag(&self, d: i64) -> Result<Self, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.retag(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly { coeffs, d })
    }

    pub(crate) fn same_field(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch(self.d, other.d))
        }
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(self.d);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Poly::zero(self.d);
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            d: self.d,
        }
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_raw(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_vec(v, self.d)
    }

    fn mul_raw(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.d);
        }
        let mut v = vec![FieldElement::zero(self.d); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        Self::from_vec(v, self.d)
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_field(o)?;
        Ok(self.add_raw(o))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_field(o)?;
        Ok(self.add_raw(&-o))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_field(o)?;
        Ok(self.mul_raw(o))
    }

    /// `self(inner(x))`.
    pub fn checked_compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        self.same_field(inner)?;
        let mut acc = Poly::zero(self.d);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_raw(inner).add_raw(&Poly::constant(c.clone()));
        }
        Ok(acc)
    }

    pub fn compose(&self, inner: &Self) -> Self {
        self.checked_compose(inner).expect("mixed quadratic fields")
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &FieldElement::from_int(i as i64, self.d))
            .collect();
        Self::from_vec(v, self.d)
    }

    /// Euclidean division over the field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        self.same_field(divisor)?;
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let inv = divisor.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.d), self.clone()));
        }
        let mut quot = vec![FieldElement::zero(self.d); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * b);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_vec(quot, self.d), Self::from_vec(rem, self.d)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    /// The involution `√d ↦ −√d` applied coefficient-wise.
    pub fn galois_conjugate(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(FieldElement::conjugate).collect(),
            d: self.d,
        }
    }

    /// `self(c·x)`.
    pub fn scale_argument(&self, c: &FieldElement) -> Self {
        let mut pw = FieldElement::one(self.d);
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &pw);
            pw = &pw * c;
        }
        Self::from_vec(v, self.d)
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &FieldElement) -> Self {
        self.compose(&Poly::from_vec(
            vec![c.clone(), FieldElement::one(self.d)],
            self.d,
        ))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if c.is_rational() {
                format!("{c}")
            } else {
                format!("({c})")
            };
            match i {
                0 => write!(f, "{cs}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{cs}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{cs}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("mixed quadratic fields")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs).expect("mixed quadratic fields")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("mixed quadratic fields")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            d: self.d,
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Monic greatest common divisor.
pub fn gcd(p: &Poly, q: &Poly) -> Result<Poly, AlgebraError> {
    p.same_field(q)?;
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (mut a, mut b) = (p.monic(), q.monic());
    while !b.is_zero() {
        let r = a.rem(&b)?.monic();
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Yun's squarefree decomposition: `p = lc(p) · Π fᵢ^mᵢ`, factors monic, multiplicities increasing.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, usize)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let f = p.monic();
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.div_exact(&a0)?;
    let c = df.div_exact(&a0)?;
    let mut dd = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = gcd(&b, &dd)?;
        let nb = b.div_exact(&a)?;
        let nc = dd.div_exact(&a)?;
        dd = &nc - &nb.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct monic irreducible factors, i.e. `p / gcd(p, p')` made monic.
pub fn squarefree_part(p: &Poly) -> Result<Poly, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(Poly::one(p.d()));
    }
    let g = gcd(p, &p.derivative())?;
    Ok(p.div_exact(&g)?.monic())
}

/// Resultant by the subresultant polynomial remainder sequence.
///
/// Sign convention: the determinant of the Sylvester matrix with the rows of `p` first, so
/// `resultant(x − a, x − b) = a − b` and `resultant(p, q) = lc(p)^deg q · Π q(α)` over the roots α of p.
pub fn resultant(p: &Poly, q: &Poly) -> Result<FieldElement, AlgebraError> {
    p.same_field(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let d = p.d();
    let one = FieldElement::one(d);
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut sign = one.clone();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
    }
    if b.deg() == 0 {
        return Ok(&sign * &b.lc().pow(a.deg() as u64));
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let (da, db) = (a.deg(), b.deg());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let lb = b.lc();
        let r = a.rem(&b)?.scale(&lb.pow(delta as u64 + 1));
        a = b;
        if r.is_zero() {
            return Ok(FieldElement::zero(d));
        }
        let denom = &g * &h.pow(delta as u64);
        b = r.scale(&denom.inv().expect("nonzero"));
        g = a.lc();
        // h ← h^(1−δ) · g^δ
        h = &g.pow(delta as u64) * &h.powi(1 - delta as i64).expect("nonzero");
        if b.deg() == 0 {
            let da = a.deg() as i64;
            let last = &b.lc().pow(da as u64) * &h.powi(1 - da).expect("nonzero");
            return Ok(&sign * &last);
        }
    }
}

/// Applies the expansion of `(x − z)(x − conj(z))` for `z = re + im·√e` as the rational
/// quadratic `x² − 2·re·x + (re² − e·im²)`, tagged in field `d`.
pub fn conjugate_pair_quadratic(re: &Rational, im: &Rational, e: i64, d: i64) -> Poly {
    let two = Rational::from_integer(BigInt::from(2));
    let norm = re * re - Rational::from_integer(BigInt::from(e)) * im * im;
    Poly::from_rationals(&[norm, -(two * re), Rational::one()], d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c, 1)
    }

    #[test]
    fn compose_and_mul() {
        let sq = ints(&[0, 0, 1]);
        let xp1 = ints(&[1, 1]);
        assert_eq!(sq.compose(&xp1), ints(&[1, 2, 1]));
        assert_eq!(&ints(&[-1, 1]) * &ints(&[1, 1]), ints(&[-1, 0, 1]));
        assert_eq!(ints(&[0, 0, 0, 1]).derivative(), ints(&[0, 0, 3]));
        assert!(ints(&[5]).derivative().is_zero());
    }

    #[test]
    fn mismatched_fields_error() {
        let a = Poly::from_ints(&[1, 1], 5);
        let b = Poly::from_ints(&[1, 1], -3);
        assert!(matches!(
            a.checked_add(&b),
            Err(AlgebraError::FieldMismatch(5, -3))
        ));
        assert!(gcd(&a, &b).is_err());
    }

    #[test]
    fn division() {
        let p = ints(&[-1, 0, 0, 1]);
        let (q, r) = p.div_rem(&ints(&[-1, 1])).unwrap();
        assert_eq!(q, ints(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            gcd(&ints(&[-1, 0, 1]), &ints(&[-1, 1])).unwrap(),
            ints(&[-1, 1])
        );
        assert_eq!(
            gcd(&ints(&[0, 0, 1]), &ints(&[0, 0, 0, 1])).unwrap(),
            ints(&[0, 0, 1])
        );
        assert!(matches!(
            gcd(&Poly::zero(1), &Poly::zero(1)),
            Err(AlgebraError::ZeroPolynomial)
        ));
        // x³(x−1)² against its derivative gives x²(x−1)
        let p = &ints(&[0, 0, 0, 1]) * &ints(&[1, -2, 1]);
        assert_eq!(gcd(&p, &p.derivative()).unwrap(), ints(&[0, 0, -1, 1]));
    }

    #[test]
    fn yun_examples() {
        let p = &ints(&[0, 0, 0, 1]) * &ints(&[1, -2, 1]);
        assert_eq!(
            squarefree_decomposition(&p).unwrap(),
            vec![(ints(&[-1, 1]), 2), (ints(&[0, 1]), 3)]
        );
        let p = &ints(&[1, 0, 1]).pow(2) * &ints(&[-2, 1]);
        assert_eq!(
            squarefree_decomposition(&p).unwrap(),
            vec![(ints(&[-2, 1]), 1), (ints(&[1, 0, 1]), 2)]
        );
        let sf = ints(&[2, 0, 4]);
        assert_eq!(
            squarefree_decomposition(&sf).unwrap(),
            vec![(sf.monic(), 1)]
        );
        assert!(squarefree_decomposition(&Poly::zero(1)).is_err());
    }

    #[test]
    fn resultant_examples() {
        let a = FieldElement::from_int(3, 1);
        let b = FieldElement::from_int(7, 1);
        assert_eq!(
            resultant(&Poly::linear(&a), &Poly::linear(&b)).unwrap(),
            FieldElement::from_int(-4, 1)
        );
        assert!(resultant(&ints(&[-1, 0, 1]), &ints(&[-1, 1]))
            .unwrap()
            .is_zero());
        assert_eq!(
            resultant(&ints(&[1, 0, 1]), &ints(&[-2, 0, 1])).unwrap(),
            FieldElement::from_int(9, 1)
        );
        assert_eq!(
            resultant(&ints(&[1, 2, 3]), &ints(&[5])).unwrap(),
            FieldElement::from_int(25, 1)
        );
    }

    #[test]
    fn conjugate_pair_expansion() {
        // (x − 5/3 − √−2/3)(x − 5/3 + √−2/3) = x² − 10/3·x + 3
        let re = Rational::new(5.into(), 3.into());
        let im = Rational::new(1.into(), 3.into());
        let q = conjugate_pair_quadratic(&re, &im, -2, 1);
        assert_eq!(
            q,
            Poly::from_rationals(
                &[
                    Rational::from_integer(3.into()),
                    Rational::new((-10).into(), 3.into()),
                    Rational::one()
                ],
                1
            )
        );
    }
}

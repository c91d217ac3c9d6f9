//! Dense linear algebra over ℚ(√d), just enough for characteristic and minimal polynomials
//! of multiplication maps on `K[x]/(f)`.

use super::{AlgebraError, FieldElement, Poly};

/// Square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    d: i64,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(n: usize, d: i64) -> Self {
        Matrix {
            n,
            d,
            entries: vec![FieldElement::zero(d); n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.n + j] = v;
    }

    /// Matrix of `v ↦ g·v` on `K[x]/(f)` in the monomial basis `1, x, …, x^(m−1)`.
    pub fn multiplication(g: &Poly, f: &Poly) -> Result<Self, AlgebraError> {
        g.same_field(f)?;
        let m = f.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        let d = f.d();
        let mut out = Matrix::zeros(m, d);
        let mut col = g.rem(f)?;
        let x = Poly::x(d);
        for j in 0..m {
            for i in 0..m {
                out.set(i, j, col.coeff(i));
            }
            if j + 1 < m {
                col = (&col * &x).rem(f)?;
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(y·I − M)` via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        let n = self.n;
        let d = self.d;
        let mut h = self.clone();
        // 1-based accessors keep the textbook recurrences legible
        let at = |h: &Matrix, i: usize, j: usize| h.get(i - 1, j - 1).clone();
        for m in 2..n {
            let pivot = (m..=n).find(|&i| !h.get(i - 1, m - 2).is_zero());
            let Some(i) = pivot else { continue };
            if i > m {
                for j in 1..=n {
                    h.entries.swap((i - 1) * n + j - 1, (m - 1) * n + j - 1);
                }
                for j in 1..=n {
                    h.entries.swap((j - 1) * n + i - 1, (j - 1) * n + m - 1);
                }
            }
            let t_inv = at(&h, m, m - 1).inv().expect("pivot is nonzero");
            for i in m + 1..=n {
                let u = &at(&h, i, m - 1) * &t_inv;
                if u.is_zero() {
                    continue;
                }
                for j in m - 1..=n {
                    let v = &at(&h, i, j) - &(&u * &at(&h, m, j));
                    h.set(i - 1, j - 1, v);
                }
                for j in 1..=n {
                    let v = &at(&h, j, m) + &(&u * &at(&h, j, i));
                    h.set(j - 1, m - 1, v);
                }
            }
        }
        let y = Poly::x(d);
        let mut p: Vec<Poly> = vec![Poly::one(d)];
        for m in 1..=n {
            let mut pm = &(&y - &Poly::constant(at(&h, m, m))) * &p[m - 1];
            let mut t = FieldElement::one(d);
            for i in 1..m {
                t = &t * &at(&h, m - i + 1, m - i);
                let c = &t * &at(&h, m - i, m);
                pm = &pm - &p[m - i - 1].scale(&c);
            }
            p.push(pm);
        }
        p.pop().expect("nonempty")
    }
}

/// Minimal polynomial (monic) of the class of `g` in `K[x]/(f)`.
///
/// When `f` is squarefree its roots are exactly the distinct values of `g` on the roots of `f`.
/// Powers of `g` are accumulated until the first linear dependency, so the cost is driven by the
/// degree of the answer rather than by `deg f`.
pub fn minimal_polynomial_mod(g: &Poly, f: &Poly) -> Result<Poly, AlgebraError> {
    g.same_field(f)?;
    let m = f.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    let d = f.d();
    if m == 0 {
        return Ok(Poly::one(d));
    }
    let gm = g.rem(f)?;
    // echelon rows: (vector, pivot column, combination of powers producing it)
    let mut rows: Vec<(Vec<FieldElement>, usize, Vec<FieldElement>)> = Vec::new();
    let mut power = Poly::one(d);
    for k in 0..=m {
        let mut vec: Vec<FieldElement> = (0..m).map(|i| power.coeff(i)).collect();
        let mut comb = vec![FieldElement::zero(d); k + 1];
        comb[k] = FieldElement::one(d);
        for (row, pivot, rcomb) in &rows {
            let c = vec[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (v, r) in vec.iter_mut().zip(row) {
                if !r.is_zero() {
                    *v = &*v - &(&c * r);
                }
            }
            for (v, r) in comb.iter_mut().zip(rcomb) {
                if !r.is_zero() {
                    *v = &*v - &(&c * r);
                }
            }
        }
        match vec.iter().position(|v| !v.is_zero()) {
            None => return Ok(Poly::from_vec(comb, d)),
            Some(p) => {
                let inv = vec[p].inv().expect("nonzero");
                let vec = vec.iter().map(|v| v * &inv).collect();
                let comb = comb.iter().map(|v| v * &inv).collect();
                rows.push((vec, p, comb));
            }
        }
        power = (&power * &gm).rem(f)?;
    }
    unreachable!("dependency must appear within deg f + 1 powers")
}

use super::FamilyError;
use crate::algebra::{FieldElement, Poly};
use crate::verify::critical_value_polynomial;

/// Monic polynomial vanishing exactly on the vertex positions of `outer`'s dessin.
///
/// With two critical values these are the critical values. An outer polynomial with a single
/// critical value `c` is a star drawn over `[0, c]`, or over `[0, 1]` when `c = 0`.
fn outer_vertex_values(outer: &Poly) -> Result<Poly, FamilyError> {
    let d = outer.d();
    let m = critical_value_polynomial(outer)?;
    Ok(match m.deg() {
        1 if m.coeff(0).is_zero() => Poly::from_ints(&[0, -1, 1], d),
        1 => &m * &Poly::x(d),
        _ => m,
    })
}

/// `outer(inner(x))`, after checking that every critical value of `inner` is sent by `outer`
/// onto a vertex position of `outer`'s dessin.
///
/// The check is exact even when the inner critical values lie outside the coefficient field: with
/// `m_in` their minimal polynomial and `m_L` that of the vertex positions, alignment holds iff
/// `m_L(outer(y)) ≡ 0 mod m_in(y)`. A degree-one outer is accepted as is.
pub fn compose_shabat(outer: &Poly, inner: &Poly) -> Result<Poly, FamilyError> {
    if outer.is_zero() || inner.is_zero() {
        return Err(FamilyError::Unsupported(
            "cannot compose with the zero polynomial".into(),
        ));
    }
    outer.same_field(inner)?;
    if outer.deg() >= 2 && inner.deg() >= 2 {
        let targets = outer_vertex_values(outer)?;
        let m_in = critical_value_polynomial(inner)?;
        let residue = targets.compose(outer).rem(&m_in)?;
        if !residue.is_zero() {
            let detail = if m_in.deg() == 1 {
                let c = -&m_in.coeff(0);
                format!("inner critical value {c} maps to {}", outer.eval(&c))
            } else {
                format!("inner critical values have minimal polynomial {m_in}")
            };
            return Err(FamilyError::Misaligned(detail));
        }
    }
    Ok(outer.compose(inner))
}

/// Writes `p = s ∘ t` with `deg t = m`, `t` monic and `t(0) = 0`, if such a decomposition exists.
///
/// `t` must agree with the approximate `(n/m)`-th root of `p / lc(p)` in its top `m` coefficients;
/// the decomposition exists iff the `t`-adic digits of `p` are all constants.
pub fn right_factor(p: &Poly, m: usize) -> Option<(Poly, Poly)> {
    let n = p.degree()?;
    if m == 0 || n % m != 0 {
        return None;
    }
    let d = p.d();
    let k = n / m;
    let monic = p.monic();
    // coefficients of t from the top, solving monic ≡ t^k in degrees n−1 .. n−m+1
    let mut t = Poly::monomial(FieldElement::one(d), m);
    let kk = FieldElement::from_int(k as i64, d);
    for j in 1..m {
        let diff = &monic - &t.pow(k as u32);
        let c = &diff.coeff(n - j) / &kk;
        t = &t + &Poly::monomial(c, m - j);
    }
    let mut digits = Vec::with_capacity(k + 1);
    let mut rest = p.clone();
    for _ in 0..=k {
        let (q, r) = rest.div_rem(&t).ok()?;
        if !r.is_constant() {
            return None;
        }
        digits.push(r.coeff(0));
        rest = q;
    }
    if !rest.is_zero() {
        return None;
    }
    Some((Poly::new(digits, d).ok()?, t))
}

/// Degrees `1 < m < deg p` of the right composition factors of `p`.
pub fn right_factor_degrees(p: &Poly) -> Vec<usize> {
    let n = p.deg();
    (2..n)
        .filter(|m| n.is_multiple_of(*m) && right_factor(p, *m).is_some())
        .collect()
}

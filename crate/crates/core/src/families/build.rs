use num_bigint::BigInt;
use num_traits::Zero;

use super::brush::{double_factorial, f6_inner};
use super::compose::compose_shabat;
use super::{Family, FamilyError, FamilyParams, ShabatPair};
use crate::algebra::{squarefree_decompose, FieldElement, Poly, Rational};
use crate::dessins::Passport;
use crate::verify::passport_from_poly;

fn fe(n: i64, m: i64, d: i64) -> FieldElement {
    FieldElement::from_frac(n, m, d)
}

fn big_fe(n: BigInt, m: BigInt, d: i64) -> FieldElement {
    FieldElement::rational(Rational::new(n, m), d)
}

/// `x − c`
fn lin(c: &FieldElement) -> Poly {
    Poly::linear(c)
}

/// Whether `p` is a Shabat polynomial with two in-field critical values realizing `passport`.
pub(crate) fn realizes(p: &Poly, passport: &Passport) -> bool {
    passport_from_poly(p)
        .map(|pp| pp.matches(passport))
        .unwrap_or(false)
}

/// Tries readings of a formula in order and keeps the first whose polynomials all realize the
/// passport. Each reading carries the repairs it implies relative to the printed formula.
type Reading = (Vec<String>, Result<Vec<Poly>, FamilyError>);

fn first_valid(
    passport: &Passport,
    readings: Vec<Reading>,
) -> Result<(Vec<Poly>, Vec<String>), FamilyError> {
    let mut failures = Vec::new();
    for (repairs, built) in readings {
        match built {
            Ok(polys) if polys.iter().all(|p| realizes(p, passport)) => {
                return Ok((polys, repairs))
            }
            Ok(_) => failures.push(format!(
                "[{}] fails the Shabat/passport check",
                repairs.join("; ")
            )),
            Err(e) => failures.push(format!("[{}] {e}", repairs.join("; "))),
        }
    }
    Err(FamilyError::NotShabat(failures.join(" | ")))
}

fn params_check(params: &FamilyParams, family: Family) -> Result<(), FamilyError> {
    if params.family() != family {
        return Err(FamilyError::Unsupported(format!(
            "expected {family} parameters, got {}",
            params.family()
        )));
    }
    Ok(())
}

/// `x^r (x−1)^s (x−a)^t` for both signs of the radical in `a`.
pub fn build_f1(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    params_check(params, Family::F1)?;
    let (r, s, t) = (params.r() as i64, params.s() as i64, params.t() as i64);
    let (k, d) = squarefree_decompose(&BigInt::from(-r * s * t * (r + s + t)));
    let denom = BigInt::from((r + s) * (r + s));
    let radical = FieldElement::new(Rational::zero(), Rational::new(2 * k, denom.clone()), d)?;
    let poly = |numer: i64, exp_a: i64, sign: bool| {
        let rational = big_fe(BigInt::from(numer), denom.clone(), d);
        let a = if sign {
            &rational - &radical
        } else {
            &rational + &radical
        };
        let x = Poly::x(d);
        &(&x.pow(r as u32) * &lin(&FieldElement::one(d)).pow(s as u32)) * &lin(&a).pow(exp_a as u32)
    };
    let printed = r * r + r * s + r * t + s * t;
    let repaired = r * r + r * s + r * t - s * t;
    let readings = vec![
        (
            vec![],
            Ok(vec![poly(printed, r, true), poly(printed, r, false)]),
        ),
        (
            vec!["factor (x−a) carries exponent t, not r".to_string()],
            Ok(vec![poly(printed, t, true), poly(printed, t, false)]),
        ),
        (
            vec![
                "factor (x−a) carries exponent t, not r".to_string(),
                "numerator of a reads r²+rs+rt−st, not r²+rs+rt+st".to_string(),
            ],
            Ok(vec![poly(repaired, t, true), poly(repaired, t, false)]),
        ),
    ];
    let (mut polys, repairs) = first_valid(&params.passport(), readings)?;
    let p2 = polys.pop().expect("two");
    Ok(ShabatPair::new(
        params.clone(),
        polys.pop().expect("two"),
        p2,
        repairs,
    ))
}

/// Tree 1 (`T₂,₁`) with `c = 0, b = 1`; tree 2 (`T₂,₂`) with `c = 6`.
pub fn build_f2(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    params_check(params, Family::F2)?;
    let (r, s) = (params.r() as i64, params.s() as i64);
    let t21 = &Poly::from_rationals(&[q(-r, s), q(0, 1), q(1, 1)], 1).pow(r as u32)
        * &Poly::from_ints(&[1, 0, 1], 1).pow(s as u32);
    let denom = 3 * (r + s) * (r + s);
    let a = big_fe(
        BigInt::from(32 * r.pow(3) + 75 * r * r * s + 78 * r * s * s + 31 * s.pow(3)),
        BigInt::from(denom * s),
        1,
    );
    let b = big_fe(
        BigInt::from(31 * r.pow(3) + 75 * r * s * s + 78 * r * r * s + 32 * s.pow(3)),
        BigInt::from(denom * r),
        1,
    );
    let quad = |c: i64, k: &FieldElement| {
        Poly::new(
            vec![
                k.clone(),
                FieldElement::from_int(c, 1),
                FieldElement::one(1),
            ],
            1,
        )
    };
    let t22 = &quad(6, &a)?.pow(r as u32) * &quad(-6, &b)?.pow(s as u32);
    let passport = params.passport();
    for p in [&t21, &t22] {
        if !realizes(p, &passport) {
            return Err(FamilyError::NotShabat(format!(
                "{params} tree polynomial {p}"
            )));
        }
    }
    let repairs = vec![
        "constant b of the second tree read as (31r³+75rs²+78r²s+32s³)c²/(108(r+s)²r)".to_string(),
    ];
    Ok(ShabatPair::new(params.clone(), t21, t22, repairs))
}

/// `R(x²)` with `R = (−1)^r (r/s)^s (x−1)^r (x + s/r)^s`.
pub fn build_f2_composed(params: &FamilyParams) -> Result<Poly, FamilyError> {
    params_check(params, Family::F2)?;
    let (r, s) = (params.r() as i64, params.s() as i64);
    let sign = if r % 2 == 0 { 1 } else { -1 };
    let lead = FieldElement::rational(
        Rational::new(
            BigInt::from(sign) * BigInt::from(r).pow(s as u32),
            BigInt::from(s).pow(s as u32),
        ),
        1,
    );
    let big_r = (&lin(&FieldElement::one(1)).pow(r as u32) * &lin(&fe(-s, r, 1)).pow(s as u32))
        .scale(&lead);
    compose_shabat(&big_r, &Poly::from_ints(&[0, 0, 1], 1))
}

/// `D(z)` whose roots parametrize the two trees of F3.
pub fn f3_defining_polynomial(r: i64, s: i64) -> [BigInt; 3] {
    let (r, s) = (BigInt::from(r), BigInt::from(s));
    let p = |c: i64, i: u32, j: u32| BigInt::from(c) * r.pow(i) * s.pow(j);
    [
        p(651, 4, 0) + p(2460, 3, 1) + p(3210, 2, 2) + p(1772, 1, 3) + p(355, 0, 4),
        -(p(4320, 3, 0) + p(13824, 2, 1) + p(12768, 1, 2) + p(3648, 0, 3)),
        p(6912, 2, 0) + p(18432, 1, 1) + p(9216, 0, 2),
    ]
}

/// `disc D = B² − 4AC`.
pub fn f3_discriminant(r: i64, s: i64) -> BigInt {
    let [c, b, a] = f3_defining_polynomial(r, s);
    &b * &b - BigInt::from(4) * a * c
}

pub fn build_f3(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    params_check(params, Family::F3)?;
    let (r, s) = (params.r() as i64, params.s() as i64);
    let [_, bb, aa] = f3_defining_polynomial(r, s);
    let (k, d) = squarefree_decompose(&f3_discriminant(r, s));
    let two_a = BigInt::from(2) * &aa;
    let root = |sign: i64| {
        let base = big_fe(-bb.clone(), two_a.clone(), d);
        let rad = if d == 1 {
            big_fe(BigInt::from(sign) * &k, two_a.clone(), 1)
        } else {
            FieldElement::new(
                Rational::zero(),
                Rational::new(BigInt::from(sign) * &k, two_a.clone()),
                d,
            )
            .expect("squarefree tag")
        };
        &base + &rad
    };
    let int = |n: i64| FieldElement::from_int(n, d);
    // a, b, c are affine in the root z
    let affine = |z: &FieldElement, k1: i64, k0: i64, den: i64| {
        &(&(z * &int(k1)) + &int(k0)) * &fe(1, den, d)
    };
    let poly = |z: FieldElement| -> Result<Poly, FamilyError> {
        let a = affine(
            &z,
            96 * s * s + 48 * r * s - 144 * r * r,
            51 * r.pow(3) + 51 * r * r * s + r * s * s - 7 * s.pow(3),
            96 * s * (3 * r + 2 * s).pow(2),
        );
        let b = affine(
            &z,
            -24 * r - 48 * s,
            27 * r * r + 34 * r * s + 11 * s * s,
            72 * r * r + 48 * r * s,
        );
        let c = affine(&z, 3, 0, 3 * r + 2 * s);
        let cubic = Poly::new(vec![a, c, int(1), int(1)], d)?;
        let quad = Poly::new(vec![b, int(1), int(1)], d)?;
        Ok(&cubic.pow(r as u32) * &quad.pow(s as u32))
    };
    let (p1, p2) = (poly(root(1))?, poly(root(-1))?);
    let passport = params.passport();
    for p in [&p1, &p2] {
        if !realizes(p, &passport) {
            return Err(FamilyError::NotShabat(format!("{params} polynomial {p}")));
        }
    }
    Ok(ShabatPair::new(params.clone(), p1, p2, Vec::new()))
}

/// The `(r−1, s−1)`-brush `((x+1)/2)^r J_{s−1}(−s, r, x)`.
pub fn f4_brush(r: usize, s: usize) -> Result<Poly, FamilyError> {
    super::brush(r - 1, s - 1, super::BrushNormalization::Unit01)
}

/// `Q ∘ (±P)` with `Q = (3α/2) x (x+1) (2x+1+α)`, `α = ±√−3`.
pub fn build_f4(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    params_check(params, Family::F4)?;
    let brush = f4_brush(params.r() as usize, params.s() as usize)?.retag(-3)?;
    let outer = |alpha: &FieldElement| {
        let d = -3;
        let x = Poly::x(d);
        let last = Poly::new(
            vec![&FieldElement::one(d) + alpha, FieldElement::from_int(2, d)],
            d,
        )
        .expect("linear");
        (&(&x * &lin(&FieldElement::from_int(-1, d))) * &last).scale(&(alpha * &fe(3, 2, d)))
    };
    let alpha = FieldElement::sqrt_d(-3);
    let build = |inner: Poly| -> Result<Vec<Poly>, FamilyError> {
        Ok(vec![
            compose_shabat(&outer(&alpha), &inner)?,
            compose_shabat(&outer(&-&alpha), &inner)?,
        ])
    };
    let readings = vec![
        (vec![], build(brush.clone())),
        (
            vec![
                "inner brush negated so its critical values {0, −1} meet the roots 0, −1 of Q"
                    .to_string(),
            ],
            build(-&brush),
        ),
    ];
    let (mut polys, repairs) = first_valid(&params.passport(), readings)?;
    let p2 = polys.pop().expect("two");
    Ok(ShabatPair::new(
        params.clone(),
        polys.pop().expect("two"),
        p2,
        repairs,
    ))
}

/// `K Σ_k (−1)^k C(r−1,k) x^(2r−2k−1)/(2r−2k−1) − 1/2`, `K = (−1)^(r+1)(2r−1)!!/(2(2r−2)!!)`.
pub fn f5_inner(r: usize) -> Poly {
    let sign = if r % 2 == 1 { 1 } else { -1 };
    let k = Rational::new(
        sign * double_factorial(2 * r as i64 - 1),
        2 * double_factorial(2 * r as i64 - 2),
    );
    let brush = super::brush(r - 1, r - 1, super::BrushNormalization::F5).expect("r ≥ 2");
    // the F5 brush carries the opposite sign of K; undo its constant, flip, and reapply
    let half = Poly::constant(fe(1, 2, 1));
    let integral = &brush + &half;
    let flipped = integral.scale(&FieldElement::rational(
        k.clone() / super::brush::f5_constant(r - 1),
        1,
    ));
    &flipped - &half
}

/// Tree 1: `Q₁ ∘ P` with `Q₁ = 1 − (2x+1)⁴`; tree 2: `Q₂ ∘ (−P(ix))` with
/// `Q₂ = 4x(x−1)(x−i)(x−1−i)`, computed over `Q(i)` and then shown rational.
pub fn build_f5(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    params_check(params, Family::F5)?;
    let p = f5_inner(params.r() as usize);
    let q1 = &Poly::one(1) - &Poly::from_ints(&[1, 2], 1).pow(4);
    let tree1 = compose_shabat(&q1, &p)?;
    let i = FieldElement::sqrt_d(-1);
    let inner = -&p.retag(-1)?.scale_argument(&i);
    let one = FieldElement::one(-1);
    let q2 = (&(&(&Poly::x(-1) * &lin(&one)) * &lin(&i)) * &lin(&(&one + &i)))
        .scale(&FieldElement::from_int(4, -1));
    let tree2 = compose_shabat(&q2, &inner)?;
    if !tree2.is_rational() {
        return Err(FamilyError::NotShabat(format!(
            "{params}: Q₂ ∘ (−P(ix)) keeps a √−1 part"
        )));
    }
    let tree2 = tree2.retag(1)?;
    let passport = params.passport();
    for t in [&tree1, &tree2] {
        if !realizes(t, &passport) {
            return Err(FamilyError::NotShabat(format!("{params} polynomial {t}")));
        }
    }
    Ok(ShabatPair::new(params.clone(), tree1, tree2, Vec::new()))
}

/// `1 − P⁵` for the brush `P` over `Q(√5)`, `α = ±√5`.
pub fn build_f6(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    params_check(params, Family::F6)?;
    let r = params.r() as usize;
    let q = &Poly::one(5) - &Poly::monomial(FieldElement::one(5), 5);
    let alpha = FieldElement::sqrt_d(5);
    let t1 = compose_shabat(&q, &f6_inner(r - 1, &alpha))?;
    let t2 = compose_shabat(&q, &f6_inner(r - 1, &-&alpha))?;
    let passport = params.passport();
    for t in [&t1, &t2] {
        if !realizes(t, &passport) {
            return Err(FamilyError::NotShabat(format!("{params} polynomial {t}")));
        }
    }
    Ok(ShabatPair::new(params.clone(), t1, t2, Vec::new()))
}

fn f9_poly(alpha: &FieldElement) -> Poly {
    let d = -3;
    let f = |n: i64, m: i64| fe(n, m, d);
    let quartic = Poly::new(
        vec![
            &f(-59, 2401) - &(alpha * &f(156, 2401)),
            &f(-40, 49) + &(alpha * &f(48, 49)),
            &f(-30, 49) + &(alpha * &f(36, 49)),
            f(8, 7),
            f(1, 1),
        ],
        d,
    )
    .expect("nonzero");
    &lin(&f(1, 1)) * &quartic.pow(2)
}

fn star(c: Rational) -> Poly {
    // x (x − c)
    &Poly::x(1) * &lin(&FieldElement::rational(c, 1))
}

fn q(n: i64, m: i64) -> Rational {
    Rational::new(n.into(), m.into())
}

/// The two outputs of F10 as `(Q₁ ∘ P, Q₂ ∘ R)`, together with `(P, R)`.
pub fn f10_parts() -> Result<([Poly; 2], [Poly; 2]), FamilyError> {
    let x = Poly::x(1);
    let p = &x.pow(3) * &Poly::from_rationals(&[q(40, 9), q(5, 3), q(1, 1)], 1);
    let r = &x.pow(3) * &lin(&fe(5, 3, 1)).pow(2);
    Ok((
        [
            compose_shabat(&star(q(64, 9)), &p)?,
            compose_shabat(&star(q(4, 9)), &r)?,
        ],
        [p, r],
    ))
}

/// F11 pieces: `B = (2x+1)²`, `A = (x−1)⁴(x+1/4)`, `R`, and the two outputs.
pub struct F11Parts {
    pub a: Poly,
    pub b: Poly,
    pub r: Poly,
    pub trees: [Poly; 2],
    pub repairs: Vec<String>,
}

pub fn f11_parts() -> Result<F11Parts, FamilyError> {
    let b = Poly::from_ints(&[1, 4, 4], 1);
    let a = &lin(&fe(1, 1, 1)).pow(4) * &lin(&fe(-1, 4, 1));
    let inner = compose_shabat(&a, &b)?;
    let tree1 = compose_shabat(&star(q(1, 4)), &inner)?;
    // the conjugate pair (x − 5/3 ∓ √−2/3) expands to x² − 10x/3 + 3
    let pair = Poly::from_rationals(&[q(3, 1), q(-10, 3), q(1, 1)], 1);
    let r_with = |c: i64| &Poly::from_ints(&[c, 0, 1], 1).pow(4) * &pair;
    let passport = FamilyParams::sporadic(Family::F11)?.passport();
    let readings = vec![
        (vec![], r_with(-3)),
        (
            vec!["factor (x²−3)⁴ of R read as (x²+3)⁴".to_string()],
            r_with(3),
        ),
    ];
    let mut failures = Vec::new();
    for (repairs, r) in readings {
        match compose_shabat(&star(q(512, 3)), &r) {
            Ok(tree2) if realizes(&tree2, &passport) => {
                return Ok(F11Parts {
                    a,
                    b,
                    r,
                    trees: [tree1, tree2],
                    repairs,
                })
            }
            Ok(_) => failures.push(format!("R = {r}: composite fails the passport check")),
            Err(e) => failures.push(format!("R = {r}: {e}")),
        }
    }
    Err(FamilyError::NotShabat(failures.join(" | ")))
}

/// F12: `Q ∘ P` over `Q(√273)`. Returns the tree polynomials, `P` for the first tree, and the repairs.
pub fn f12_parts() -> Result<([Poly; 2], Poly, Vec<String>), FamilyError> {
    let d = 273;
    let w = FieldElement::sqrt_d(d);
    let f = |n: i64, m: i64| fe(n, m, d);
    let cubic = Poly::new(
        vec![
            &f(91, 15) + &(&w * &f(26, 45)),
            &f(39, 11) - &(&w * &f(2, 11)),
            f(-13, 3),
            f(1, 1),
        ],
        d,
    )?;
    let two_w_3 = &w * &f(2, 3);
    let literal = Poly::new(vec![&two_w_3 + &f(13, 1), f(0, 1), f(1, 1)], d)?;
    let middle = Poly::new(vec![f(13, 1), two_w_3.clone(), f(1, 1)], d)?;
    let c = &(&(&w - &f(21, 1)).pow(5) * &(&(&w * &f(7, 1)) - &f(111, 1))) * &f(896, 120285);
    let outer = |c: &FieldElement| &Poly::x(d) * &lin(c);
    let passport = FamilyParams::sporadic(Family::F12)?.passport();
    let mut failures = Vec::new();
    let mid_note = "first factor of P read as (x² + 2√273x/3 + 13)⁵".to_string();
    let conj_note =
        "Q for the first tree uses the conjugate constant; Q(√273) pairs with P(−√273)".to_string();
    for (quad, quad_note) in [(&literal, None), (&middle, Some(mid_note))] {
        let p = &quad.pow(5) * &cubic;
        for (qc, q_note) in [(c.clone(), None), (c.conjugate(), Some(conj_note.clone()))] {
            match compose_shabat(&outer(&qc), &p) {
                Ok(t1)
                    if realizes(&t1, &passport) && realizes(&t1.galois_conjugate(), &passport) =>
                {
                    let repairs = quad_note.iter().chain(q_note.iter()).cloned().collect();
                    let t2 = t1.galois_conjugate();
                    return Ok(([t1, t2], p, repairs));
                }
                Ok(_) => failures.push("composite fails the passport check".to_string()),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    Err(FamilyError::NotShabat(failures.join(" | ")))
}

pub fn build_sporadic(family: Family) -> Result<ShabatPair, FamilyError> {
    let params = FamilyParams::sporadic(family)?;
    let passport = params.passport();
    let (p1, p2, repairs) = match family {
        Family::F9 => {
            let alpha = FieldElement::sqrt_d(-3);
            (f9_poly(&alpha), f9_poly(&-&alpha), Vec::new())
        }
        Family::F10 => {
            let ([t1, t2], _) = f10_parts()?;
            (t1, t2, Vec::new())
        }
        Family::F11 => {
            let parts = f11_parts()?;
            let [t1, t2] = parts.trees;
            (t1, t2, parts.repairs)
        }
        Family::F12 => {
            let ([t1, t2], _, repairs) = f12_parts()?;
            (t1, t2, repairs)
        }
        Family::F7 | Family::F8 => {
            return Err(FamilyError::Unsupported(format!(
                "{family} has no closed-form constructor; enumerate its passport"
            )))
        }
        _ => {
            return Err(FamilyError::Unsupported(format!(
                "{family} is not sporadic"
            )))
        }
    };
    for p in [&p1, &p2] {
        if !realizes(p, &passport) {
            return Err(FamilyError::NotShabat(format!("{family} polynomial {p}")));
        }
    }
    Ok(ShabatPair::new(params, p1, p2, repairs))
}

/// Builds the pair for any family that has a closed form.
pub fn build(params: &FamilyParams) -> Result<ShabatPair, FamilyError> {
    match params.family() {
        Family::F1 => build_f1(params),
        Family::F2 => build_f2(params),
        Family::F3 => build_f3(params),
        Family::F4 => build_f4(params),
        Family::F5 => build_f5(params),
        Family::F6 => build_f6(params),
        f => build_sporadic(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{critical_values, equivalent};

    fn params(f: Family, v: &[u64]) -> FamilyParams {
        FamilyParams::new(f, v).unwrap()
    }

    #[test]
    fn f1_small() {
        let pair = build_f1(&params(Family::F1, &[1, 2, 3])).unwrap();
        assert_eq!(pair.field_disc, -1);
        assert!(pair.relation_holds());
        // a = ∓4i/3
        let root = pair.p1.coeff(0);
        assert!(root.is_zero());
        assert_eq!(pair.p1.deg(), 6);
        assert!(!pair.repairs.is_empty());
    }

    #[test]
    fn f2_trees_and_composition() {
        let p = params(Family::F2, &[1, 2]);
        let pair = build_f2(&p).unwrap();
        let t21 = Poly::from_rationals(&[q(-1, 2), q(0, 1), q(1, 1)], 1);
        assert_eq!(pair.p1, &t21 * &Poly::from_ints(&[1, 0, 1], 1).pow(2));
        let composed = build_f2_composed(&p).unwrap();
        assert_eq!(composed.deg(), 6);
        assert!(equivalent(&pair.p1, &composed).unwrap().is_some());
        assert!(equivalent(&pair.p2, &composed).unwrap().is_none());
    }

    #[test]
    fn f3_fields() {
        assert_eq!(
            build_f3(&params(Family::F3, &[3, 5])).unwrap().field_disc,
            627
        );
        assert_eq!(
            build_f3(&params(Family::F3, &[5, 6])).unwrap().field_disc,
            1
        );
        assert_eq!(
            build_f3(&params(Family::F3, &[1, 2])).unwrap().field_disc,
            21
        );
    }

    #[test]
    fn f5_inner_matches_lemma_constant() {
        // r = 2: K = −3/4
        assert_eq!(
            f5_inner(2),
            Poly::from_rationals(&[q(-1, 2), q(3, 4), q(0, 1), q(-1, 4)], 1)
        );
        let cv = critical_values(&f5_inner(3)).unwrap();
        assert_eq!(
            cv.in_field().unwrap(),
            &[FieldElement::zero(1), FieldElement::from_int(-1, 1)]
        );
    }

    #[test]
    fn f7_has_no_closed_form() {
        assert!(matches!(
            build_sporadic(Family::F7),
            Err(FamilyError::Unsupported(_))
        ));
    }
}

//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and exits nonzero if any
//! fails. All comparisons are exact: tolerance zero.

mod common;

use std::time::{Duration, Instant};

use dessin_forge::algebra::{FieldElement, Poly};
use dessin_forge::dessins::{count_trees, enumerate_trees, EnumerateOptions, Passport};
use dessin_forge::families::{
    brush, build, build_f2, build_f2_composed, composed_inner_degree, f11_parts, f3_discriminant,
    family_report, family_trees, poly_signature, right_factor, right_factor_degrees,
    tree_signature, BrushNormalization, Family, FamilyParams,
};
use dessin_forge::monodromy::{group_report, monodromy_group};
use dessin_forge::verify::{
    critical_value_polynomial, critical_values, equivalent, is_shabat, passport_from_poly,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

type Outcome = Result<String, Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(f: Family, v: &[u64]) -> FamilyParams {
    FamilyParams::new(f, v).expect("valid parameters")
}

fn sporadic(f: Family) -> FamilyParams {
    FamilyParams::sporadic(f).expect("sporadic family")
}

fn finish(failures: Vec<String>, summary: String, elapsed: Duration, limit: Duration) -> Outcome {
    let mut failures = failures;
    if elapsed > limit {
        failures.push(format!("took {elapsed:.1?}, limit {limit:?}"));
    }
    if failures.is_empty() {
        Ok(format!("{summary} in {elapsed:.1?}"))
    } else {
        Err(failures)
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut cases = vec![
        params(Family::F1, &[1, 2, 3]),
        params(Family::F1, &[3, 5, 6]),
        params(Family::F1, &[2, 3, 4]),
        params(Family::F2, &[1, 2]),
        params(Family::F2, &[3, 5]),
        params(Family::F3, &[3, 5]),
        params(Family::F3, &[5, 6]),
        params(Family::F4, &[4, 5]),
        params(Family::F5, &[2]),
        params(Family::F5, &[4]),
        params(Family::F6, &[2]),
        params(Family::F6, &[3]),
    ];
    cases.extend([Family::F9, Family::F10, Family::F11, Family::F12].map(sporadic));
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in &cases {
        let pair = match build(p) {
            Ok(pair) => pair,
            Err(e) => {
                failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        for (i, poly) in pair.polys().into_iter().enumerate() {
            checked += 1;
            match is_shabat(poly) {
                Ok(r) if r.is_shabat && r.value_count == 2 => {}
                Ok(r) => failures.push(format!(
                    "{p} polynomial {}: {} critical values",
                    i + 1,
                    r.value_count
                )),
                Err(e) => failures.push(format!("{p} polynomial {}: {e}", i + 1)),
            }
            match passport_from_poly(poly) {
                Ok(pp) if pp.matches(&p.passport()) => {}
                Ok(pp) => failures.push(format!(
                    "{p} polynomial {}: passport [{pp}] vs [{}]",
                    i + 1,
                    p.passport()
                )),
                Err(e) => failures.push(format!("{p} polynomial {}: {e}", i + 1)),
            }
        }
    }
    finish(
        failures,
        format!("{checked} polynomials Shabat with the family passport"),
        start.elapsed(),
        Duration::from_secs(60),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let opts = EnumerateOptions::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut expect = |p: &FamilyParams, want: usize| {
        checked += 1;
        match count_trees(&p.passport(), opts) {
            Ok(c) if c == want => {}
            Ok(c) => failures.push(format!("{p}: {c} trees, expected {want}")),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    };
    for r in 1..=12u64 {
        for s in r + 1..=12 {
            for t in s + 1..=12 {
                if r + s + t <= 12 {
                    expect(&params(Family::F1, &[r, s, t]), 2);
                }
            }
        }
    }
    for r in 1..=12u64 {
        for s in 1..=12u64 {
            if r < s && 2 * (r + s) <= 12 {
                expect(&params(Family::F2, &[r, s]), 2);
            }
            if r != s && 3 * r + 2 * s <= 12 {
                expect(&params(Family::F3, &[r, s]), 2);
            }
        }
    }
    for f in [Family::F7, Family::F8, Family::F9, Family::F10] {
        expect(&sporadic(f), 2);
    }
    let degenerate: Passport = "2,2,1;3,1,1;5".parse().expect("passport");
    let brute = common::count_by_full_conjugation(&degenerate);
    match count_trees(&degenerate, opts) {
        Ok(1) if brute == 1 => {}
        other => failures.push(format!(
            "[2,2,1;3,1,1;5]: {other:?}, brute force {brute}, expected 1"
        )),
    }
    finish(
        failures,
        format!("{checked} family passports with 2 trees, degenerate passport with 1 (brute force agrees)"),
        start.elapsed(),
        Duration::from_secs(30),
    )
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `((n/d)!/2)^d · (2d if n/d is even else d)`.
fn alternating_power_order(n: u64, d: u64) -> BigUint {
    let m = n / d;
    let top = if m.is_multiple_of(2) { 2 * d } else { d };
    (factorial(m) / 2u32).pow(d as u32) * top
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |label: &str, got: &BigUint, want: BigUint| {
        if *got != want {
            failures.push(format!("{label}: computed {got}, expected {want}"));
        }
    };
    for (f, want) in [(Family::F7, 168u64), (Family::F8, 2520)] {
        for (i, d) in family_trees(&sporadic(f))
            .expect("trees")
            .iter()
            .enumerate()
        {
            check(
                &format!("{f} tree {}", i + 1),
                &monodromy_group(d).order(),
                BigUint::from(want),
            );
        }
    }
    let f11 = family_report(&sporadic(Family::F11));
    check(
        "F11 tree 1",
        &f11.trees[0].group.order,
        BigUint::from(7_372_800u64),
    );
    check(
        "F11 tree 2",
        &f11.trees[1].group.order,
        BigUint::from(26_336_378_880_000u64),
    );
    for (p, n) in [
        (params(Family::F1, &[1, 2, 3]), 6u64),
        (params(Family::F3, &[1, 2]), 7),
    ] {
        for (i, d) in family_trees(&p).expect("trees").iter().enumerate() {
            check(
                &format!("{p} tree {}", i + 1),
                &monodromy_group(d).order(),
                alternating_power_order(n, 1),
            );
        }
    }
    let mut f10: Vec<BigUint> = family_trees(&sporadic(Family::F10))
        .expect("trees")
        .iter()
        .map(|d| monodromy_group(d).order())
        .collect();
    f10.sort();
    if f10 != [BigUint::from(7200u32), BigUint::from(14400u32)] {
        failures.push(format!("F10: orders {f10:?}, expected 7200 and 14400"));
    }
    finish(
        failures,
        "F7 168, F8 2520, F11 7372800 and 26336378880000, F1(1,2,3) 720, F3(1,2) 2520, F10 {7200, 14400}".into(),
        start.elapsed(),
        Duration::from_secs(120),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for r in 1..=6u64 {
        for s in r + 1..=6 {
            for t in s + 1..=6 {
                let p = params(Family::F1, &[r, s, t]);
                let (n, d) = (r + s + t, r.gcd(&s).gcd(&t));
                let want = alternating_power_order(n, d);
                for (i, tree) in family_trees(&p).expect("trees").iter().enumerate() {
                    checked += 1;
                    let got = monodromy_group(tree).order();
                    if got != want {
                        failures.push(format!("{p} tree {}: {got} vs formula {want}", i + 1));
                    }
                }
            }
        }
    }
    finish(
        failures,
        format!("{checked} F1 trees match the order formula"),
        start.elapsed(),
        Duration::from_secs(120),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut composed = vec![
        params(Family::F4, &[2, 3]),
        params(Family::F4, &[4, 5]),
        params(Family::F5, &[2]),
        params(Family::F5, &[3]),
        params(Family::F6, &[2]),
        params(Family::F6, &[3]),
    ];
    composed.extend([Family::F10, Family::F11, Family::F12].map(sporadic));
    let mut checked = 0;
    for p in &composed {
        let report = family_report(p);
        for entry in &report.trees {
            let Some(inner) = composed_inner_degree(p, entry.index) else {
                continue;
            };
            checked += 1;
            let poly = entry
                .polynomial
                .as_ref()
                .and_then(|doc| dessin_forge::algebra::poly_from_document(doc).ok());
            if !poly
                .as_ref()
                .is_some_and(|q| right_factor(q, inner).is_some())
            {
                failures.push(format!(
                    "{p} tree {}: no right factor of degree {inner}",
                    entry.index
                ));
            }
            let g = &entry.group;
            if g.primitive || !g.block_sizes.contains(&inner) {
                failures.push(format!(
                    "{p} tree {}: blocks {:?}, expected size {inner}",
                    entry.index, g.block_sizes
                ));
            }
        }
    }
    for v in [[1u64, 2], [2, 3], [3, 5]] {
        let p = params(Family::F2, &v);
        checked += 1;
        let outcome = build_f2_composed(&p).map(|q| {
            let tree = &family_trees(&p).expect("trees")[0];
            let g = group_report(&monodromy_group(tree));
            (right_factor(&q, 2).is_some(), g.primitive, g.block_sizes)
        });
        match outcome {
            Ok((true, false, sizes)) if sizes.contains(&2) => {}
            other => failures.push(format!("{p} composed R∘Q: {other:?}")),
        }
    }
    match f11_parts() {
        Ok(parts) => {
            checked += 1;
            let r = &parts.r;
            let sig = poly_signature(r);
            let trees = passport_from_poly(r)
                .map_err(|e| e.to_string())
                .and_then(|pp| {
                    enumerate_trees(&pp, EnumerateOptions::default()).map_err(|e| e.to_string())
                });
            match trees {
                Ok(trees) => {
                    let matching: Vec<_> =
                        trees.iter().filter(|t| tree_signature(t) == sig).collect();
                    let primitive = matching
                        .iter()
                        .all(|t| group_report(&monodromy_group(t)).primitive);
                    if r.deg() != 10
                        || !right_factor_degrees(r).is_empty()
                        || matching.is_empty()
                        || !primitive
                    {
                        failures.push(format!(
                            "F11 component R: degree {}, right factors {:?}, {} matching trees, primitive {primitive}",
                            r.deg(),
                            right_factor_degrees(r),
                            matching.len()
                        ));
                    }
                }
                Err(e) => failures.push(format!("F11 component R: {e}")),
            }
        }
        Err(e) => failures.push(format!("F11 parts: {e}")),
    }
    finish(
        failures,
        format!("{checked} composed constructions imprimitive with the inner degree as block size; F11's R primitive"),
        start.elapsed(),
        Duration::from_secs(120),
    )
}

fn integer_sqrt_exact(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let conjugate_families = vec![
        params(Family::F1, &[1, 2, 3]),
        params(Family::F1, &[2, 3, 4]),
        params(Family::F3, &[3, 5]),
        params(Family::F4, &[4, 5]),
        params(Family::F6, &[2]),
        params(Family::F6, &[3]),
        sporadic(Family::F9),
        sporadic(Family::F12),
    ];
    let fixed_families = vec![
        params(Family::F2, &[1, 2]),
        params(Family::F2, &[3, 5]),
        params(Family::F5, &[2]),
        params(Family::F5, &[4]),
        sporadic(Family::F10),
        sporadic(Family::F11),
        params(Family::F3, &[5, 6]),
    ];
    for p in &conjugate_families {
        match build(p) {
            Ok(pair)
                if pair.p1.d() != 1
                    && !pair.p1.is_rational()
                    && pair.p2 == pair.p1.galois_conjugate() => {}
            Ok(pair) => failures.push(format!(
                "{p}: not a conjugate pair over Q(√{})",
                pair.p1.d()
            )),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    for p in &fixed_families {
        match build(p) {
            Ok(pair)
                if pair
                    .polys()
                    .iter()
                    .all(|q| q.galois_conjugate() == **q && q.is_rational()) => {}
            Ok(_) => failures.push(format!("{p}: polynomials are not fixed by conjugation")),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    let disc = f3_discriminant(5, 6);
    if integer_sqrt_exact(&disc).is_none() {
        failures.push(format!(
            "F3(5,6): discriminant {disc} is not a perfect square"
        ));
    }
    if integer_sqrt_exact(&f3_discriminant(3, 5)).is_some() {
        failures.push("F3(3,5): discriminant is a perfect square".into());
    }
    finish(
        failures,
        format!(
            "{} conjugate pairs, {} rational pairs, F3(5,6) square discriminant",
            conjugate_families.len(),
            fixed_families.len()
        ),
        start.elapsed(),
        Duration::from_secs(120),
    )
}

fn double_factorial(k: u64) -> BigInt {
    (1..=k)
        .rev()
        .step_by(2)
        .fold(BigInt::one(), |acc, j| acc * j)
}

fn rat(n: BigInt, m: BigInt) -> BigRational {
    BigRational::new(n, m)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in 1..=5u64 {
        checked += 1;
        let ratio = rat(double_factorial(2 * p), double_factorial(2 * p + 1));
        let sign = if p % 2 == 1 { 1 } else { -1 };
        // F5 constants: K = (−1)^(p+1) (2p+1)!!/(2 (2p)!!), C = −1/2
        let k = rat(
            BigInt::from(sign) * double_factorial(2 * p + 1),
            BigInt::from(2) * double_factorial(2 * p),
        );
        let c = rat(BigInt::from(-1), BigInt::from(2));
        let mut want: Vec<BigRational> = [1, -1]
            .iter()
            .map(|&s| &c + &(&k * &ratio) * BigInt::from(s))
            .collect();
        want.sort();
        let got = brush(p as usize, p as usize, BrushNormalization::F5)
            .map_err(|e| e.to_string())
            .and_then(|b| {
                let cv = critical_values(&b).map_err(|e| e.to_string())?;
                let mut v: Vec<BigRational> = cv
                    .in_field()
                    .ok_or("values outside Q")?
                    .iter()
                    .map(|x| x.rational_part().clone())
                    .collect();
                v.sort();
                Ok(v)
            });
        if got.as_ref() != Ok(&want) {
            failures.push(format!("F5 brush p={p}: {got:?}, expected {want:?}"));
        }

        // F6 constants: K = (2p+1)!/(p!² 2^(2p+2)), C = −(1+α)/4, and the integrand (t²/β + 1)^p
        // with β = 10 − 2α reaches its critical values at t = ±√(−β); the values are
        // C ± K √(−β) (2p)!!/(2p+1)!!, i.e. the roots of (y − C)² + β (K (2p)!!/(2p+1)!!)².
        let kf = rat(
            factorial(2 * p + 1).into(),
            BigInt::from(factorial(p).pow(2u32)) * BigInt::from(2).pow(2 * p as u32 + 2),
        );
        let scale = &kf * &ratio;
        for alpha_sign in [1, -1] {
            checked += 1;
            let alpha = &FieldElement::sqrt_d(5) * &FieldElement::from_int(alpha_sign, 5);
            let cc = -&(&(&FieldElement::one(5) + &alpha) * &FieldElement::from_frac(1, 4, 5));
            let beta = &FieldElement::from_int(10, 5) - &(&alpha * &FieldElement::from_int(2, 5));
            let s2 = FieldElement::rational(&scale * &scale, 5);
            let expected = Poly::new(
                vec![
                    &(&cc * &cc) + &(&beta * &s2),
                    -&(&cc * &FieldElement::from_int(2, 5)),
                    FieldElement::one(5),
                ],
                5,
            )
            .expect("quadratic");
            let b = brush(p as usize, p as usize, BrushNormalization::F6).map(|b| {
                if alpha_sign == 1 {
                    b
                } else {
                    b.galois_conjugate()
                }
            });
            let got = b
                .as_ref()
                .map_err(|e| e.to_string())
                .and_then(|b| critical_value_polynomial(b).map_err(|e| e.to_string()));
            if got.as_ref() != Ok(&expected) {
                failures.push(format!(
                    "F6 brush p={p}, α={alpha}: {got:?}, expected {expected}"
                ));
            }
        }
    }
    for p in 1..=4usize {
        for q in 1..=4usize {
            checked += 1;
            let passport = Passport::new(
                std::iter::once(p + 1)
                    .chain(std::iter::repeat_n(1, q))
                    .collect(),
                std::iter::once(q + 1)
                    .chain(std::iter::repeat_n(1, p))
                    .collect(),
            )
            .expect("brush passport");
            let outcome = brush(p, q, BrushNormalization::Unit01)
                .map_err(|e| e.to_string())
                .and_then(|b| {
                    let cv = critical_values(&b).map_err(|e| e.to_string())?;
                    let unit = matches!(cv.in_field(), Some([a, b]) if a.is_zero() && b.is_one());
                    let pp = passport_from_poly(&b).map_err(|e| e.to_string())?;
                    Ok((unit, pp.matches(&passport)))
                });
            if outcome != Ok((true, true)) {
                failures.push(format!("({p},{q})-brush: {outcome:?}"));
            }
        }
    }
    finish(
        failures,
        format!(
            "{checked} brushes: F5 and F6 normalizations for p ≤ 5, {{0,1}} values for p, q ≤ 4"
        ),
        start.elapsed(),
        Duration::from_secs(120),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for v in [[1u64, 2], [2, 3], [3, 5]] {
        let p = params(Family::F2, &v);
        let outcome = build_f2(&p).and_then(|pair| {
            let composed = build_f2_composed(&p)?;
            Ok(equivalent(&pair.p1, &composed)?)
        });
        match outcome {
            Ok(Some(_)) => {}
            Ok(None) => failures.push(format!("{p}: T21 and the composition are not equivalent")),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    finish(
        failures,
        "T21 equivalent to R∘Q for (1,2), (2,3), (3,5)".into(),
        start.elapsed(),
        Duration::from_secs(60),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("family construction", criterion_1),
        ("enumeration counts", criterion_2),
        ("monodromy orders", criterion_3),
        ("F1 order sweep", criterion_4),
        ("composition and primitivity", criterion_5),
        ("Galois pairing", criterion_6),
        ("brush polynomials", criterion_7),
        ("equivalence", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(summary) => println!("criterion {} ({name}): PASS: {summary}", i + 1),
            Err(failures) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL", i + 1);
                for f in failures {
                    println!("    {f}");
                }
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

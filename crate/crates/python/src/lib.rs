//! Python bindings. Polynomials and dessins cross the boundary in their JSON file formats, so
//! every value stays exact; group orders come back as decimal strings.

use dessin_forge::algebra::{parse_poly_json, poly_to_json};
use dessin_forge::dessins::{enumerate_trees, render_svg, Dessin, EnumerateOptions, Passport};
use dessin_forge::families::{build, family_report, Family, FamilyParams};
use dessin_forge::monodromy::{group_report, monodromy_group};
use dessin_forge::verify::{equivalent, is_shabat, passport_from_poly};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Res<T> = Result<T, String>;

fn params(family: &str, values: &[u64]) -> Res<FamilyParams> {
    let f: Family = family.parse().map_err(|e| format!("{e}"))?;
    FamilyParams::new(f, values).map_err(|e| e.to_string())
}

fn dessin(json: &str) -> Res<Dessin> {
    Dessin::from_json(json).map_err(|e| e.to_string())
}

pub fn shabat_report_json(poly: &str) -> Res<String> {
    let p = parse_poly_json(poly).map_err(|e| e.to_string())?;
    let r = is_shabat(&p).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

pub fn poly_passport(poly: &str) -> Res<String> {
    let p = parse_poly_json(poly).map_err(|e| e.to_string())?;
    passport_from_poly(&p)
        .map(|pp| pp.to_string())
        .map_err(|e| e.to_string())
}

pub fn trees(passport: &str, force: bool) -> Res<Vec<String>> {
    let p: Passport = passport.parse().map_err(|e| format!("{e}"))?;
    let mut opts = EnumerateOptions::from_env();
    if force {
        opts = opts.forced();
    }
    Ok(enumerate_trees(&p, opts)
        .map_err(|e| e.to_string())?
        .iter()
        .map(Dessin::to_json)
        .collect())
}

pub fn group_json(d: &str) -> Res<String> {
    Ok(group_report(&monodromy_group(&dessin(d)?)).to_json())
}

pub fn family_polys(family: &str, values: &[u64]) -> Res<(String, String)> {
    let pair = build(&params(family, values)?).map_err(|e| e.to_string())?;
    Ok((poly_to_json(&pair.p1), poly_to_json(&pair.p2)))
}

pub fn family_report_json(family: &str, values: &[u64]) -> Res<String> {
    Ok(family_report(&params(family, values)?).to_json())
}

pub fn are_equivalent(p: &str, q: &str) -> Res<bool> {
    let p = parse_poly_json(p).map_err(|e| e.to_string())?;
    let q = parse_poly_json(q).map_err(|e| e.to_string())?;
    Ok(equivalent(&p, &q).map_err(|e| e.to_string())?.is_some())
}

fn py<T>(r: Res<T>) -> PyResult<T> {
    r.map_err(PyValueError::new_err)
}

/// ShabatReport of a polynomial file's contents, as JSON.
#[pyfunction]
fn shabat_report(poly: &str) -> PyResult<String> {
    py(shabat_report_json(poly))
}

/// Passport string such as `"2,1;2,1;3"` of a Shabat polynomial.
#[pyfunction]
fn passport(poly: &str) -> PyResult<String> {
    py(poly_passport(poly))
}

/// All plane trees with the passport, as dessin JSON documents.
#[pyfunction]
#[pyo3(signature = (passport, force = false))]
fn enumerate(passport: &str, force: bool) -> PyResult<Vec<String>> {
    py(trees(passport, force))
}

/// GroupReport of a dessin, as JSON.
#[pyfunction]
fn monodromy(dessin: &str) -> PyResult<String> {
    py(group_json(dessin))
}

/// The two polynomials of a family member, as polynomial JSON documents.
#[pyfunction]
#[pyo3(signature = (family, params = Vec::new()))]
fn build_family(family: &str, params: Vec<u64>) -> PyResult<(String, String)> {
    py(family_polys(family, &params))
}

/// Full family report, as JSON.
#[pyfunction]
#[pyo3(signature = (family, params = Vec::new()))]
fn report(family: &str, params: Vec<u64>) -> PyResult<String> {
    py(family_report_json(family, &params))
}

#[pyfunction]
fn is_equivalent(p: &str, q: &str) -> PyResult<bool> {
    py(are_equivalent(p, q))
}

#[pyfunction]
fn render(dessin: &str) -> PyResult<String> {
    py(self::dessin(dessin).map(|d| render_svg(&d)))
}

#[pymodule]
#[pyo3(name = "dessin_forge")]
fn dessin_forge_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(shabat_report, m)?)?;
    m.add_function(wrap_pyfunction!(passport, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(monodromy, m)?)?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(is_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(render, m)?)?;
    Ok(())
}

//! Pairing constructed polynomials with combinatorial trees.
//!
//! A polynomial and a tree with the same passport are told apart by two invariants that can be
//! computed on both sides: the block sizes of the monodromy group, which equal the degrees of the
//! right composition factors of the polynomial, and for subdivided trees the passport of the
//! tree obtained by removing the degree-2 white vertices.

use serde::Serialize;

use super::{right_factor, right_factor_degrees, Family, FamilyError, FamilyParams, ShabatPair};
use crate::algebra::Poly;
use crate::dessins::{enumerate_trees, lemma_generators, Dessin, EnumerateOptions, Passport};
use crate::monodromy::{block_systems, monodromy_group};
use crate::verify::passport_from_poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub block_sizes: Vec<usize>,
    /// Passport after removing degree-2 white vertices, when all white vertices have degree 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner_passport: Option<Passport>,
}

impl Signature {
    fn agrees(&self, other: &Signature) -> bool {
        self.block_sizes == other.block_sizes
            && match (&self.inner_passport, &other.inner_passport) {
                (Some(a), Some(b)) => a.matches(b),
                (None, None) => true,
                _ => false,
            }
    }
}

fn subdivided(d: &Dessin) -> Option<Dessin> {
    d.unsubdivide()
        .ok()
        .or_else(|| d.color_swapped().unsubdivide().ok())
}

pub fn tree_signature(d: &Dessin) -> Signature {
    let g = monodromy_group(d);
    let mut block_sizes: Vec<usize> = block_systems(&g)
        .map(|s| s.iter().map(|b| b[0].len()).collect())
        .unwrap_or_default();
    block_sizes.sort_unstable();
    block_sizes.dedup();
    Signature {
        block_sizes,
        inner_passport: subdivided(d).map(|t| t.passport()),
    }
}

pub fn poly_signature(p: &Poly) -> Signature {
    let n = p.deg();
    let all_twos = |v: &[usize]| v.iter().all(|&k| k == 2);
    let inner_passport = passport_from_poly(p)
        .ok()
        .filter(|pp| all_twos(pp.alpha()) || all_twos(pp.beta()))
        .and_then(|_| right_factor(p, n / 2))
        .and_then(|(_, inner)| passport_from_poly(&inner).ok());
    Signature {
        block_sizes: right_factor_degrees(p),
        inner_passport,
    }
}

/// The two trees of a family: lemma templates for F1–F6, enumeration otherwise.
///
/// Enumeration bypasses the scale guard, so the F11 and F12 passports (20 and 26 edges) are
/// enumerated here as well.
pub fn family_trees(params: &FamilyParams) -> Result<[Dessin; 2], FamilyError> {
    if !params.family().is_sporadic() {
        let t =
            |k| lemma_generators(params, k).map_err(|e| FamilyError::Unsupported(e.to_string()));
        return Ok([t(1)?, t(2)?]);
    }
    let trees = enumerate_trees(&params.passport(), EnumerateOptions::default().forced())
        .map_err(|e| FamilyError::Unsupported(e.to_string()))?;
    match <[Dessin; 2]>::try_from(trees) {
        Ok(pair) => Ok(pair),
        Err(v) => Err(FamilyError::Unsupported(format!(
            "{} has {} trees, expected 2",
            params.family(),
            v.len()
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeMatch {
    /// `trees[tree_of[i]]` is the tree of polynomial `i`.
    pub tree_of: [usize; 2],
    /// Both assignments are consistent with every invariant.
    pub ambiguous: bool,
    pub poly_signatures: [Signature; 2],
    pub tree_signatures: [Signature; 2],
}

/// Assigns each polynomial of `pair` to one of `trees`, preferring the identity assignment.
pub fn match_trees(pair: &ShabatPair, trees: &[Dessin; 2]) -> Result<TreeMatch, FamilyError> {
    let ps = [poly_signature(&pair.p1), poly_signature(&pair.p2)];
    let ts = [tree_signature(&trees[0]), tree_signature(&trees[1])];
    let straight = ps[0].agrees(&ts[0]) && ps[1].agrees(&ts[1]);
    let crossed = ps[0].agrees(&ts[1]) && ps[1].agrees(&ts[0]);
    let tree_of = match (straight, crossed) {
        (true, _) => [0, 1],
        (false, true) => [1, 0],
        _ => {
            return Err(FamilyError::NotShabat(format!(
                "{}: no pairing of polynomials and trees respects their invariants",
                pair.params
            )))
        }
    };
    Ok(TreeMatch {
        tree_of,
        ambiguous: straight && crossed,
        poly_signatures: ps,
        tree_signatures: ts,
    })
}

/// Families whose polynomials are built as explicit compositions, with the inner degree.
pub fn composed_inner_degree(params: &FamilyParams, tree: usize) -> Option<usize> {
    let p = params.p().map(|p| p as usize);
    match (params.family(), tree) {
        (Family::F2, 1) => Some(2),
        (Family::F4 | Family::F5 | Family::F6, _) => p,
        (Family::F10 | Family::F12, _) => Some(params.n() / 2),
        (Family::F11, 1) => Some(10),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build;

    #[test]
    fn f2_pairing_is_forced_by_blocks() {
        let params = FamilyParams::new(Family::F2, &[1, 3]).unwrap();
        let pair = build(&params).unwrap();
        let trees = family_trees(&params).unwrap();
        let m = match_trees(&pair, &trees).unwrap();
        assert_eq!(m.tree_of, [0, 1]);
        assert!(!m.ambiguous);
        assert_eq!(m.poly_signatures[0].block_sizes, vec![2]);
    }
}

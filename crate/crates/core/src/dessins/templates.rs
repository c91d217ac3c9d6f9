//! Explicit edge labelings for the two trees of the infinite families.

use super::{Dessin, DessinError, Permutation};
use crate::families::{Family, FamilyParams, ParamError};

/// A star of paths around one white vertex: black vertex `k` carries `sizes[k]` consecutive
/// edges and the white center joins the first edge of each block.
pub fn center_star(sizes: &[usize]) -> Result<Dessin, DessinError> {
    let n: usize = sizes.iter().sum();
    let mut blocks = Vec::new();
    let mut starts = Vec::new();
    let mut next = 1;
    for &k in sizes {
        starts.push(next);
        blocks.push((next..next + k).collect::<Vec<_>>());
        next += k;
    }
    Dessin::from_cycles(n, &blocks, &[starts])
}

fn arithmetic(from: usize, step: usize, to_inclusive: usize) -> Vec<usize> {
    (from..=to_inclusive).step_by(step).collect()
}

fn f4(r: usize, s: usize, tree: usize) -> Result<Dessin, DessinError> {
    let n = 3 * (r + s - 1);
    let mut s0: Vec<Vec<usize>> = (0..r - 1)
        .map(|k| vec![3 * k + 1, 3 * k + 2, 3 * k + 3])
        .collect();
    let s1 = if tree == 1 {
        s0.push(vec![3 * r - 2, n - 1, n]);
        s0.extend((3 * r - 1..n - 3).step_by(3).map(|j| vec![j, j + 1, j + 2]));
        vec![arithmetic(1, 3, 3 * r - 2), arithmetic(3 * r - 1, 3, n - 1)]
    } else {
        s0.push(vec![3 * r - 2, 3 * r - 1, n]);
        s0.extend((3 * r..n - 2).step_by(3).map(|j| vec![j, j + 1, j + 2]));
        vec![arithmetic(1, 3, 3 * r - 2), arithmetic(3 * r, 3, n)]
    };
    Dessin::from_cycles(n, &s0, &s1)
}

fn f5(r: usize, tree: usize) -> Result<Dessin, DessinError> {
    let p = 2 * r - 1;
    let n = 4 * p;
    let s1: Vec<Vec<usize>> = (0..p).map(|k| (4 * k + 1..=4 * k + 4).collect()).collect();
    let head = if tree == 1 { 4 * r - 1 } else { 4 * r - 2 };
    let mut second = vec![head];
    second.extend(arithmetic(4 * r + 1, 4, 8 * r - 7));
    let s0 = vec![arithmetic(1, 4, 4 * r - 3), second];
    Ok(Dessin::new(
        Permutation::from_cycles(n, &s0)?,
        Permutation::from_cycles(n, &s1)?,
    )?
    .with_standard_face())
}

fn f6(r: usize, tree: usize) -> Result<Dessin, DessinError> {
    let p = 2 * r - 1;
    let n = 5 * p;
    let s0: Vec<Vec<usize>> = (0..p).map(|k| (5 * k + 1..=5 * k + 5).collect()).collect();
    let head = if tree == 1 { 5 * r - 2 } else { 5 * r - 3 };
    let mut second = vec![head];
    second.extend(arithmetic(5 * r + 1, 5, n - 4));
    let s1 = vec![arithmetic(1, 5, 5 * r - 4), second];
    Ok(Dessin::new(
        Permutation::from_cycles(n, &s0)?,
        Permutation::from_cycles(n, &s1)?,
    )?
    .with_standard_face())
}

/// Generators `(σ0, σ1)` of tree `tree` (1 or 2) of an infinite family, labeled so that
/// `σ0σ1 = (1, …, n)`.
///
/// F1 tree 2 is the mirror image of tree 1. For F2, tree 1 is the tree with alternating branch
/// lengths around the center and tree 2 the one with equal lengths adjacent.
pub fn lemma_generators(params: &FamilyParams, tree: usize) -> Result<Dessin, DessinError> {
    if tree != 1 && tree != 2 {
        return Err(ParamError::TreeIndex(tree).into());
    }
    let v: Vec<usize> = params.values().iter().map(|&x| x as usize).collect();
    let family = params.family();
    let d = match family {
        Family::F1 => {
            let (r, s, t) = (v[0], v[1], v[2]);
            center_star(&if tree == 1 {
                vec![r, s, t]
            } else {
                vec![r, t, s]
            })
        }
        Family::F2 => {
            let (r, s) = (v[0], v[1]);
            center_star(&if tree == 1 {
                vec![r, s, r, s]
            } else {
                vec![r, r, s, s]
            })
        }
        Family::F3 => {
            let (r, s) = (v[0], v[1]);
            center_star(&if tree == 1 {
                vec![r, r, r, s, s]
            } else {
                vec![r, r, s, r, s]
            })
        }
        Family::F4 => f4(v[0], v[1], tree),
        Family::F5 => f5(v[0], tree),
        Family::F6 => f6(v[0], tree),
        _ => {
            return Err(ParamError::Invalid {
                family,
                reason: "no generator template for sporadic families".into(),
            }
            .into())
        }
    }?;
    debug_assert!(d.has_standard_face());
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(f: Family, v: &[u64]) -> FamilyParams {
        FamilyParams::new(f, v).unwrap()
    }

    #[test]
    fn f1_example_labeling() {
        let d = lemma_generators(&params(Family::F1, &[1, 2, 3]), 1).unwrap();
        assert_eq!(d.sigma0().to_string(), "(2,3)(4,5,6)");
        assert_eq!(d.sigma1().to_string(), "(1,2,4)");
        assert_eq!(d.passport().to_string(), "3,2,1;3,1^3;6");
    }

    #[test]
    fn f2_tree2_white_center() {
        let d = lemma_generators(&params(Family::F2, &[1, 2]), 2).unwrap();
        assert_eq!(d.sigma1().to_string(), "(1,2,3,5)");
        assert_eq!(d.passport().to_string(), "2,2,1,1;4,1,1;6");
    }

    #[test]
    fn templates_realize_family_passports() {
        let cases: Vec<FamilyParams> = vec![
            params(Family::F1, &[3, 5, 6]),
            params(Family::F2, &[3, 5]),
            params(Family::F3, &[3, 5]),
            params(Family::F3, &[2, 1]),
            params(Family::F4, &[2, 3]),
            params(Family::F4, &[4, 5]),
            params(Family::F4, &[2, 5]),
            params(Family::F5, &[2]),
            params(Family::F5, &[4]),
            params(Family::F6, &[2]),
            params(Family::F6, &[3]),
        ];
        for p in cases {
            let t1 = lemma_generators(&p, 1).unwrap();
            let t2 = lemma_generators(&p, 2).unwrap();
            assert!(t1.has_standard_face() && t2.has_standard_face(), "{p}");
            assert!(
                t1.passport().matches(&p.passport()),
                "{p}: {}",
                t1.passport()
            );
            assert!(
                t2.passport().matches(&p.passport()),
                "{p}: {}",
                t2.passport()
            );
            assert!(
                !t1.is_isomorphic(&t2),
                "{p}: both templates give the same tree"
            );
        }
        assert!(lemma_generators(&params(Family::F1, &[1, 2, 3]), 3).is_err());
        assert!(lemma_generators(&params(Family::F7, &[]), 1).is_err());
    }
}

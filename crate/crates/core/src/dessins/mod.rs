//! Permutations, passports and plane trees encoded as pairs of rotations.

mod dessin;
mod enumerate;
mod passport;
mod perm;
mod render;
mod templates;

pub use dessin::{Dessin, DessinDocument};
pub use enumerate::{
    count_trees, enumerate_trees, noncrossing_count, EnumerateOptions, DEFAULT_MAX_N, MAX_N_ENV,
};
pub use passport::Passport;
pub use perm::{compose_perm, cycle_type, Permutation};
pub use render::render_svg;
pub use templates::{center_star, lemma_generators};

use crate::families::ParamError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DessinError {
    #[error("permutations act on {0} and {1} points")]
    SizeMismatch(usize, usize),
    #[error("point {point} outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("not a plane tree: {0}")]
    NotATree(String),
    #[error("invalid passport: {0}")]
    InvalidPassport(String),
    #[error("passport has n = {n} above the enumeration limit {max_n}; raise the limit or force")]
    TooLarge { n: usize, max_n: usize },
    #[error("white vertices are not all of degree 2")]
    NotSubdivided,
    #[error("malformed dessin document: {0}")]
    Format(String),
    #[error(transparent)]
    Params(#[from] ParamError),
}

pub fn passport_of(d: &Dessin) -> Passport {
    d.passport()
}

/// True when the orbit of the first point under the given permutations is every point.
pub(crate) fn orbit_is_everything(gens: &[&Permutation]) -> bool {
    let n = gens.first().map_or(0, |g| g.degree());
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

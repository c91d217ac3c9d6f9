use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::dessin::from_sigma1_standard;
use super::{Dessin, DessinError, Passport};

pub const MAX_N_ENV: &str = "DESSIN_FORGE_MAX_N";
pub const DEFAULT_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub max_n: usize,
    pub force: bool,
}

impl EnumerateOptions {
    /// Limit taken from `DESSIN_FORGE_MAX_N` when set to a valid integer.
    pub fn from_env() -> Self {
        let max_n = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_N);
        EnumerateOptions {
            max_n,
            force: false,
        }
    }

    pub fn forced(self) -> Self {
        EnumerateOptions {
            force: true,
            ..self
        }
    }
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_n: DEFAULT_MAX_N,
            force: false,
        }
    }
}

/// Number of noncrossing partitions of `{1..n}` with the given block sizes (Kreweras):
/// `n! / ((n − k + 1)! · Π m_i!)` for `k` blocks with size multiplicities `m_i`.
pub fn noncrossing_count(blocks: &[usize]) -> BigUint {
    let n: usize = blocks.iter().sum();
    let k = blocks.len();
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &b in blocks {
        *mult.entry(b).or_default() += 1;
    }
    let fact = |m: usize| (1..=m).fold(BigUint::from(1u32), |acc, i| acc * i);
    let denom = mult.values().fold(fact(n + 1 - k), |acc, &m| acc * fact(m));
    fact(n) / denom
}

/// All plane trees with the given passport, one canonical representative per isomorphism class,
/// sorted by [`Dessin::key`].
///
/// With the face pinned to `(1, …, n)`, genus 0 forces the cycles of `σ1` to form a noncrossing
/// partition of the circularly ordered edges, each cycle increasing. The candidates are exactly
/// those partitions with block sizes `β`; `σ0 = σ1⁻¹ ∘ (1, …, n)` is then checked against `α`.
/// Whichever color has fewer candidate partitions is enumerated.
pub fn enumerate_trees(p: &Passport, opts: EnumerateOptions) -> Result<Vec<Dessin>, DessinError> {
    if p.n() > opts.max_n && !opts.force {
        return Err(DessinError::TooLarge {
            n: p.n(),
            max_n: opts.max_n,
        });
    }
    if !p.is_tree_shaped() {
        return Ok(Vec::new());
    }
    let swap = noncrossing_count(p.alpha()) < noncrossing_count(p.beta());
    let (alpha, beta) = if swap {
        (p.beta(), p.alpha())
    } else {
        (p.alpha(), p.beta())
    };
    let mut found = Vec::new();
    let mut search = Search::new(alpha, beta);
    search.run(&mut |d| found.push(d));
    let mut out: Vec<Dessin> = found
        .into_iter()
        .map(|d| {
            if swap {
                d.color_swapped().canonical()
            } else {
                d.canonical()
            }
        })
        .collect();
    out.sort_by_key(Dessin::key);
    out.dedup();
    Ok(out)
}

pub fn count_trees(p: &Passport, opts: EnumerateOptions) -> Result<usize, DessinError> {
    enumerate_trees(p, opts).map(|v| v.len())
}

struct Search {
    n: usize,
    target: Vec<usize>,
    counts: Vec<usize>,
    sigma1: Vec<u32>,
    segments: Vec<(usize, usize)>,
    seen: std::collections::HashSet<Vec<u32>>,
}

impl Search {
    fn new(alpha: &[usize], beta: &[usize]) -> Self {
        let n = alpha.iter().sum();
        let mut counts = vec![0; n + 1];
        for &b in beta {
            counts[b] += 1;
        }
        Search {
            n,
            target: alpha.to_vec(),
            counts,
            sigma1: vec![0; n],
            segments: vec![(0, n)],
            seen: Default::default(),
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(Dessin)) {
        self.fill(emit);
    }

    fn min_size(&self) -> usize {
        self.counts
            .iter()
            .position(|&c| c > 0)
            .unwrap_or(usize::MAX)
    }

    fn fill(&mut self, emit: &mut dyn FnMut(Dessin)) {
        let Some((a, b)) = self.segments.pop() else {
            self.accept(emit);
            return;
        };
        for k in 1..=(b - a) {
            if self.counts[k] == 0 {
                continue;
            }
            self.counts[k] -= 1;
            let mut block = vec![a];
            self.place(k, b, &mut block, emit);
            self.counts[k] += 1;
        }
        self.segments.push((a, b));
    }

    /// Chooses the remaining elements of the block whose first element is `block[0]`.
    fn place(
        &mut self,
        k: usize,
        end: usize,
        block: &mut Vec<usize>,
        emit: &mut dyn FnMut(Dessin),
    ) {
        if block.len() == k {
            let saved = self.segments.len();
            let mut gaps: Vec<(usize, usize)> =
                block.windows(2).map(|w| (w[0] + 1, w[1])).collect();
            gaps.push((block[k - 1] + 1, end));
            let min = self.min_size();
            if gaps.iter().any(|&(x, y)| y > x && y - x < min) {
                return;
            }
            self.segments
                .extend(gaps.into_iter().filter(|&(x, y)| y > x));
            for i in 0..k {
                self.sigma1[block[i]] = block[(i + 1) % k] as u32;
            }
            self.fill(emit);
            self.segments.truncate(saved);
            return;
        }
        let last = *block.last().expect("nonempty");
        let needed = k - block.len();
        for next in last + 1..=end - needed {
            block.push(next);
            self.place(k, end, block, emit);
            block.pop();
        }
    }

    fn accept(&mut self, emit: &mut dyn FnMut(Dessin)) {
        let d = from_sigma1_standard(self.sigma1.clone());
        if d.sigma0().cycle_type() != self.target {
            return;
        }
        debug_assert_eq!(
            d.sigma0().cycle_count() + d.sigma1().cycle_count(),
            self.n + 1
        );
        if self.seen.insert(d.canonical().sigma1().raw().to_vec()) {
            emit(d);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: &str) -> usize {
        count_trees(&s.parse().unwrap(), EnumerateOptions::default()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count("1;1;1"), 1);
        assert_eq!(count("2;1,1;2"), 1);
        assert_eq!(count("3,2,1;3,1^3;6"), 2);
        assert_eq!(count("2,2,1;3,1,1;5"), 1);
        assert_eq!(count("3,3,1;2,2,1^3;7"), 2);
        assert_eq!(count("3,2,2;2,2,1^3;7"), 2);
        // F4 shape with r = 1
        assert_eq!(count("2,1^4;3,3;6"), 1);
        // not tree shaped
        assert_eq!(count("2,2;2,2;4"), 0);
    }

    #[test]
    fn kreweras() {
        assert_eq!(noncrossing_count(&[1, 1, 1]), BigUint::from(1u32));
        assert_eq!(noncrossing_count(&[2, 2, 2]), BigUint::from(5u32));
        assert_eq!(noncrossing_count(&[2, 1]), BigUint::from(3u32));
    }

    #[test]
    fn scale_guard() {
        let p: Passport = "4,4,4,1^8;2^10;20".parse().unwrap();
        assert!(matches!(
            enumerate_trees(&p, EnumerateOptions::default()),
            Err(DessinError::TooLarge { .. })
        ));
    }

    #[test]
    fn output_is_canonical_and_sorted() {
        let p: Passport = "3,5,6;3,1^11;14".parse().unwrap();
        let trees = enumerate_trees(&p, EnumerateOptions::default()).unwrap();
        assert_eq!(trees.len(), 2);
        assert!(trees[0].key() < trees[1].key());
        for t in &trees {
            assert_eq!(t, &t.canonical());
            assert_eq!(t.passport(), p);
        }
    }
}

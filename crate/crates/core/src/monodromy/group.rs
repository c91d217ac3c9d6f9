use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MonodromyError;
use crate::dessins::Permutation;

/// Consecutive random elements that must sift to the identity before the randomized phase stops.
const QUIET_SIFTS: usize = 30;
const SEED: u64 = 0x5eed_1ab5;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `u[b]` maps the base point to `b`; `u_inv[b]` is its inverse.
    u: Vec<Option<Permutation>>,
    u_inv: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            u: vec![None; n],
            u_inv: vec![None; n],
            orbit: Vec::new(),
        }
    }

    fn rebuild(&mut self) {
        let n = self.u.len();
        self.u = vec![None; n];
        self.u_inv = vec![None; n];
        let id = Permutation::identity(n);
        self.u[self.base] = Some(id.clone());
        self.u_inv[self.base] = Some(id);
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for g in &self.gens {
                let c = g.apply(b);
                if self.u[c].is_none() {
                    let uc = self.u[b].as_ref().expect("orbit point").then(g);
                    self.u_inv[c] = Some(uc.inverse());
                    self.u[c] = Some(uc);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group with a verified base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Builds the stabilizer chain: a randomized Schreier–Sims phase seeded deterministically,
    /// then a Schreier-generator pass that certifies the chain.
    pub fn new(generators: Vec<Permutation>) -> Result<Self, MonodromyError> {
        let n = generators
            .first()
            .ok_or(MonodromyError::NoGenerators)?
            .degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(MonodromyError::DegreeMismatch(n, g.degree()));
        }
        let mut group = PermGroup {
            n,
            generators,
            levels: Vec::new(),
        };
        for g in group.generators.clone() {
            group.absorb(g);
        }
        group.random_phase();
        group.verify_chain();
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base + 1).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n && self.sift(g.clone(), 0).0.is_identity()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.n
    }

    /// Orbit of a 0-based point under the generators, in discovery order.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[x] = true;
        let mut out = vec![x];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let y = g.apply(out[i]);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// Strips `g` through levels `from..`; returns the residue and the level where it stopped
    /// (the chain length if it passed every level).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base);
            match &level.u_inv[b] {
                None => return (g, i),
                Some(inv) => g = g.then(inv),
            }
        }
        (g, self.levels.len())
    }

    fn absorb(&mut self, g: Permutation) -> bool {
        let (h, j) = self.sift(g, 0);
        if h.is_identity() {
            return false;
        }
        self.add_strong(h, j);
        true
    }

    /// `h` fixes the first `j` base points and is not in level `j`'s group.
    fn add_strong(&mut self, h: Permutation, j: usize) {
        if j == self.levels.len() {
            let moved = (0..self.n).find(|&x| h.apply(x) != x).expect("nonidentity");
            self.levels.push(Level::new(moved, self.n));
        }
        for level in &mut self.levels[..=j] {
            level.gens.push(h.clone());
            level.rebuild();
        }
    }

    fn random_phase(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut pool: Vec<Permutation> = self
            .generators
            .iter()
            .cycle()
            .take(10.max(self.generators.len()))
            .cloned()
            .collect();
        let mut acc = Permutation::identity(self.n);
        let step = |pool: &mut Vec<Permutation>, acc: &mut Permutation, rng: &mut ChaCha8Rng| {
            let k = pool.len();
            let i = rng.gen_range(0..k);
            let mut j = rng.gen_range(0..k - 1);
            if j >= i {
                j += 1;
            }
            let other = if rng.gen_bool(0.5) {
                pool[j].clone()
            } else {
                pool[j].inverse()
            };
            pool[i] = if rng.gen_bool(0.5) {
                pool[i].then(&other)
            } else {
                other.then(&pool[i])
            };
            *acc = acc.then(&pool[i]);
            acc.clone()
        };
        if pool.len() < 2 {
            return;
        }
        for _ in 0..50 {
            step(&mut pool, &mut acc, &mut rng);
        }
        let mut quiet = 0;
        while quiet < QUIET_SIFTS {
            let g = step(&mut pool, &mut acc, &mut rng);
            if self.absorb(g) {
                quiet = 0;
            } else {
                quiet += 1;
            }
        }
    }

    /// Checks every Schreier generator of every level, bottom up, against the levels below it;
    /// any failure extends the chain and restarts the check.
    fn verify_chain(&mut self) {
        while let Some((h, j)) = self.first_failing_schreier_generator() {
            self.add_strong(h, j);
        }
    }

    fn first_failing_schreier_generator(&self) -> Option<(Permutation, usize)> {
        for (i, level) in self.levels.iter().enumerate().rev() {
            for &b in &level.orbit {
                let ub = level.u[b].as_ref().expect("orbit point");
                for s in &level.gens {
                    let c = s.apply(b);
                    let g = ub
                        .then(s)
                        .then(level.u_inv[c].as_ref().expect("orbit closed"));
                    let (h, j) = self.sift(g, i + 1);
                    if !h.is_identity() {
                        return Some((h, j));
                    }
                }
            }
        }
        None
    }
}

/// Exact order from the stabilizer chain.
pub fn group_order(g: &PermGroup) -> BigUint {
    g.order()
}

//! Brute-force permutation oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use dessin_forge::dessins::Passport;

pub type Perm = Vec<usize>;

pub fn compose(p: &Perm, q: &Perm) -> Perm {
    // apply p, then q
    p.iter().map(|&i| q[i]).collect()
}

pub fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Perm = (0..n).collect();
    fn rec(k: usize, cur: &mut Perm, out: &mut Vec<Perm>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Every permutation with the given cycle type, built cycle by cycle from the least free point.
pub fn perms_of_type(shape: &[usize]) -> Vec<Perm> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut p = vec![usize::MAX; n];
    let mut sizes = shape.to_vec();
    sizes.sort_unstable();
    fn rec(p: &mut Perm, sizes: &mut Vec<usize>, out: &mut Vec<Perm>) {
        let Some(start) = p.iter().position(|&x| x == usize::MAX) else {
            out.push(p.clone());
            return;
        };
        let distinct: BTreeSet<usize> = sizes.iter().copied().collect();
        for k in distinct {
            let pos = sizes.iter().position(|&s| s == k).unwrap();
            sizes.remove(pos);
            let mut cycle = vec![start];
            extend(p, sizes, out, &mut cycle, k);
            sizes.insert(pos, k);
        }
    }
    fn extend(
        p: &mut Perm,
        sizes: &mut Vec<usize>,
        out: &mut Vec<Perm>,
        cycle: &mut Vec<usize>,
        k: usize,
    ) {
        if cycle.len() == k {
            for i in 0..k {
                p[cycle[i]] = cycle[(i + 1) % k];
            }
            rec(p, sizes, out);
            for &c in cycle.iter() {
                p[c] = usize::MAX;
            }
            return;
        }
        for x in 0..p.len() {
            if p[x] == usize::MAX && !cycle.contains(&x) && x > cycle[0] {
                cycle.push(x);
                extend(p, sizes, out, cycle, k);
                cycle.pop();
            }
        }
    }
    rec(&mut p, &mut sizes, &mut out);
    out
}

pub fn is_tree_shaped(p: &Passport) -> bool {
    p.alpha().len() + p.beta().len() == p.n() + 1
}

/// Orbits of pairs `(σ0, σ1)` of the given types with `σ0σ1` an `n`-cycle under simultaneous
/// conjugation by all of `S_n`. Only usable for tiny `n`.
pub fn count_by_full_conjugation(p: &Passport) -> usize {
    let n = p.n();
    let perms = all_perms(n);
    let of = |t: &[usize]| {
        perms
            .iter()
            .filter(|q| cycle_type(q) == t)
            .cloned()
            .collect::<Vec<_>>()
    };
    let (a, b) = (of(p.alpha()), of(p.beta()));
    let mut classes: HashSet<(Perm, Perm)> = HashSet::new();
    for s0 in &a {
        for s1 in &b {
            if cycle_type(&compose(s0, s1)) != vec![n] {
                continue;
            }
            let canon = perms
                .iter()
                .map(|g| {
                    let gi = inverse(g);
                    (compose(&compose(&gi, s0), g), compose(&compose(&gi, s1), g))
                })
                .min()
                .unwrap();
            classes.insert(canon);
        }
    }
    classes.len()
}

/// Same count with the face pinned to `x ↦ x + 1`: `σ0 = c σ1⁻¹` (in apply-left-first order),
/// up to conjugation by powers of `c`.
pub fn count_with_pinned_face(p: &Passport) -> usize {
    if !is_tree_shaped(p) {
        return 0;
    }
    let n = p.n();
    let c: Perm = (0..n).map(|i| (i + 1) % n).collect();
    let powers: Vec<Perm> = (0..n)
        .map(|k| (0..n).map(|i| (i + k) % n).collect())
        .collect();
    let mut classes: HashSet<Perm> = HashSet::new();
    for s1 in perms_of_type(p.beta()) {
        let s0 = compose(&c, &inverse(&s1));
        if cycle_type(&s0) != p.alpha() {
            continue;
        }
        let canon = powers
            .iter()
            .map(|g| compose(&compose(&inverse(g), &s1), g))
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

/// Group order by breadth-first closure over all elements.
pub fn closure_order(gens: &[Perm]) -> usize {
    let n = gens[0].len();
    let id: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

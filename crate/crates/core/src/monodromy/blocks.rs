use super::{MonodromyError, PermGroup};

/// A partition of `{1..n}` into blocks of imprimitivity, blocks sorted by least element.
pub type BlockSystem = Vec<Vec<usize>>;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }
}

/// Finest block system in which `0` and `i` share a block.
pub fn minimal_block_system(g: &PermGroup, i: usize) -> BlockSystem {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    uf.union(0, i);
    let mut queue = vec![(0, i)];
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (a, b) = (uf.find(s.apply(x)), uf.find(s.apply(y)));
            if uf.union(a, b) {
                queue.push((a, b));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = uf.find(x);
        blocks[r].push(x + 1);
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// Distinct nontrivial block systems obtained from the seeds `{1, i}`, ordered by block size.
/// Empty exactly when the group is primitive.
pub fn block_systems(g: &PermGroup) -> Result<Vec<BlockSystem>, MonodromyError> {
    if !g.is_transitive() {
        return Err(MonodromyError::Intransitive);
    }
    let n = g.degree();
    let mut out: Vec<BlockSystem> = Vec::new();
    for i in 1..n {
        let sys = minimal_block_system(g, i);
        if sys.len() > 1 && !out.contains(&sys) {
            out.push(sys);
        }
    }
    out.sort_by_key(|s| (s[0].len(), s.clone()));
    Ok(out)
}

pub fn is_primitive(g: &PermGroup) -> Result<bool, MonodromyError> {
    block_systems(g).map(|s| s.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessins::Permutation;

    #[test]
    fn symmetric_group_is_primitive() {
        let g = PermGroup::new(vec![
            Permutation::long_cycle(4),
            Permutation::from_cycles(4, &[vec![1, 2]]).unwrap(),
        ])
        .unwrap();
        assert!(is_primitive(&g).unwrap());
    }

    #[test]
    fn cyclic_group_blocks_follow_divisors() {
        let g = PermGroup::new(vec![Permutation::long_cycle(6)]).unwrap();
        let systems = block_systems(&g).unwrap();
        let sizes: Vec<usize> = systems.iter().map(|s| s[0].len()).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(systems[0], vec![vec![1, 4], vec![2, 5], vec![3, 6]]);
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::new(vec![Permutation::from_cycles(3, &[vec![1, 2]]).unwrap()]).unwrap();
        assert!(block_systems(&g).is_err());
    }
}

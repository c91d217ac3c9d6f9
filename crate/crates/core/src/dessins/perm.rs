use std::fmt;

use super::DessinError;

/// A bijection of `{1..n}`.
///
/// Points are stored 0-based; every public constructor and accessor that talks about image lists
/// or cycles uses the 1-based labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    /// From a 1-based image list: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, DessinError> {
        let n = images.len();
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(DessinError::PointOutOfRange { point: x, n });
            }
            out.push((x - 1) as u32);
        }
        if !is_bijection(&out) {
            return Err(DessinError::NotBijection);
        }
        Ok(Permutation { images: out })
    }

    /// From disjoint 1-based cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, DessinError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(DessinError::PointOutOfRange { point: x, n });
                }
                if seen[x - 1] {
                    return Err(DessinError::NotBijection);
                }
                seen[x - 1] = true;
                images[x - 1] = (c[(i + 1) % c.len()] - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// The cycle `(1, 2, …, n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).map(|i| (i + 1) % n as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right product: `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Relabel points through `g`: the result maps `g(x)` to `g(self(x))`.
    pub fn relabel(&self, g: &Self) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    /// Cycles as 0-based point lists, each starting at its least point, ordered by that point.
    /// Fixed points are included.
    pub fn cycles_zero_based(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.images[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Cycles in 1-based labels, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_zero_based()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles_zero_based().len()
    }

    /// Cycle lengths in descending order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles_zero_based().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    for &x in images {
        let x = x as usize;
        if x >= images.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Left-to-right product `(pq)(x) = q(p(x))`.
pub fn compose_perm(p: &Permutation, q: &Permutation) -> Result<Permutation, DessinError> {
    if p.degree() != q.degree() {
        return Err(DessinError::SizeMismatch(p.degree(), q.degree()));
    }
    Ok(p.then(q))
}

pub fn cycle_type(p: &Permutation) -> Vec<usize> {
    p.cycle_type()
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() > 1 {
                any = true;
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))?;
            }
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_to_right_product() {
        let s0 = Permutation::from_cycles(6, &[vec![2, 3], vec![4, 5, 6]]).unwrap();
        let s1 = Permutation::from_cycles(6, &[vec![1, 2, 4]]).unwrap();
        assert_eq!(compose_perm(&s0, &s1).unwrap(), Permutation::long_cycle(6));
        let t = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert!(compose_perm(&t, &t).unwrap().is_identity());
        assert!(compose_perm(&t, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&Permutation::identity(5)), vec![1; 5]);
        let p = Permutation::from_cycles(6, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(cycle_type(&p), vec![3, 2, 1]);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn relabel_is_conjugation() {
        let p = Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        let g = Permutation::from_cycles(4, &[vec![3, 4]]).unwrap();
        assert_eq!(
            p.relabel(&g),
            Permutation::from_cycles(4, &[vec![1, 2, 4]]).unwrap()
        );
        assert_eq!(p.relabel(&g), g.inverse().then(&p).then(&g));
    }
}

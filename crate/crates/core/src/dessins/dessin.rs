use serde::{Deserialize, Serialize};

use super::{DessinError, Passport, Permutation};

/// A plane tree given by the rotations `σ0` (around black vertices) and `σ1` (around white
/// vertices) of its `n` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dessin {
    sigma0: Permutation,
    sigma1: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DessinDocument {
    pub n: usize,
    pub sigma0: Vec<usize>,
    pub sigma1: Vec<usize>,
}

impl Dessin {
    /// Validates that the pair generates a transitive group and describes a genus-0 map with a
    /// single face.
    pub fn new(sigma0: Permutation, sigma1: Permutation) -> Result<Self, DessinError> {
        let n = sigma0.degree();
        if sigma1.degree() != n {
            return Err(DessinError::SizeMismatch(n, sigma1.degree()));
        }
        if n == 0 {
            return Err(DessinError::NotATree("no edges".into()));
        }
        let inf = sigma0.then(&sigma1);
        if inf.cycle_count() != 1 {
            return Err(DessinError::NotATree(format!(
                "σ0σ1 has cycle type {:?}",
                inf.cycle_type()
            )));
        }
        let vertices = sigma0.cycle_count() + sigma1.cycle_count();
        if vertices != n + 1 {
            return Err(DessinError::NotATree(format!(
                "{vertices} vertices for {n} edges"
            )));
        }
        // a single face already forces transitivity; keep the check explicit for clarity of errors
        if !super::orbit_is_everything(&[&sigma0, &sigma1]) {
            return Err(DessinError::NotATree("not connected".into()));
        }
        Ok(Dessin { sigma0, sigma1 })
    }

    pub fn from_cycles(
        n: usize,
        sigma0: &[Vec<usize>],
        sigma1: &[Vec<usize>],
    ) -> Result<Self, DessinError> {
        Dessin::new(
            Permutation::from_cycles(n, sigma0)?,
            Permutation::from_cycles(n, sigma1)?,
        )
    }

    pub fn n(&self) -> usize {
        self.sigma0.degree()
    }

    pub fn sigma0(&self) -> &Permutation {
        &self.sigma0
    }

    pub fn sigma1(&self) -> &Permutation {
        &self.sigma1
    }

    pub fn sigma_inf(&self) -> Permutation {
        self.sigma0.then(&self.sigma1)
    }

    pub fn passport(&self) -> Passport {
        Passport::new(self.sigma0.cycle_type(), self.sigma1.cycle_type())
            .expect("cycle types partition n")
    }

    /// Simultaneous relabeling of both rotations.
    pub fn relabel(&self, g: &Permutation) -> Self {
        Dessin {
            sigma0: self.sigma0.relabel(g),
            sigma1: self.sigma1.relabel(g),
        }
    }

    /// Exchange black and white, relabeled so that the product is again `(1, …, n)`.
    pub fn color_swapped(&self) -> Self {
        Dessin {
            sigma0: self.sigma1.clone(),
            sigma1: self.sigma0.clone(),
        }
        .with_standard_face()
    }

    /// Relabels edges along the face so that `σ0σ1 = (1, 2, …, n)`.
    pub fn with_standard_face(&self) -> Self {
        let inf = self.sigma_inf();
        let n = self.n();
        let mut g = vec![0u32; n];
        let mut x = 0;
        for k in 0..n {
            g[x] = k as u32;
            x = inf.apply(x);
        }
        self.relabel(&Permutation::from_zero_based(g))
    }

    pub fn has_standard_face(&self) -> bool {
        self.sigma_inf() == Permutation::long_cycle(self.n())
    }

    /// Canonical representative of the isomorphism class.
    ///
    /// With the face pinned to `(1, …, n)` the only remaining isomorphisms are the rotations
    /// `x ↦ x + k`; the representative minimizes the image list of `σ1`.
    pub fn canonical(&self) -> Self {
        let base = if self.has_standard_face() {
            self.clone()
        } else {
            self.with_standard_face()
        };
        let n = base.n();
        let s1 = base.sigma1.raw();
        let best = (0..n).map(|k| rotate_images(s1, k)).min().expect("n ≥ 1");
        from_sigma1_standard(best)
    }

    /// Sort key of a canonical dessin.
    pub fn key(&self) -> Vec<usize> {
        self.sigma1.images()
    }

    pub fn is_isomorphic(&self, other: &Dessin) -> bool {
        self.n() == other.n() && self.canonical() == other.canonical()
    }

    pub fn to_document(&self) -> DessinDocument {
        DessinDocument {
            n: self.n(),
            sigma0: self.sigma0.images(),
            sigma1: self.sigma1.images(),
        }
    }

    pub fn from_document(doc: &DessinDocument) -> Result<Self, DessinError> {
        if doc.sigma0.len() != doc.n || doc.sigma1.len() != doc.n {
            return Err(DessinError::SizeMismatch(
                doc.sigma0.len(),
                doc.sigma1.len(),
            ));
        }
        Dessin::new(
            Permutation::from_images(&doc.sigma0)?,
            Permutation::from_images(&doc.sigma1)?,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, DessinError> {
        let doc: DessinDocument =
            serde_json::from_str(s).map_err(|e| DessinError::Format(e.to_string()))?;
        Dessin::from_document(&doc)
    }

    /// Removes the degree-2 white vertices of a dessin whose `σ1` is a fixed-point-free
    /// involution, returning the bicolored plane tree underneath.
    ///
    /// The tree vertex containing edge 1 becomes black.
    pub fn unsubdivide(&self) -> Result<Dessin, DessinError> {
        let n = self.n();
        let s1 = &self.sigma1;
        if !n.is_multiple_of(2) || (0..n).any(|x| s1.apply(x) == x || s1.apply(s1.apply(x)) != x) {
            return Err(DessinError::NotSubdivided);
        }
        let verts = self.sigma0.cycles_zero_based();
        let m = n / 2;
        if m == 0 {
            return Err(DessinError::NotSubdivided);
        }
        let mut vertex_of = vec![0usize; n];
        for (v, c) in verts.iter().enumerate() {
            for &h in c {
                vertex_of[h] = v;
            }
        }
        // 2-color the tree vertices by walking edges from the vertex holding half-edge 0
        let mut color = vec![None; verts.len()];
        color[vertex_of[0]] = Some(false);
        let mut stack = vec![vertex_of[0]];
        while let Some(v) = stack.pop() {
            for &h in &verts[v] {
                let w = vertex_of[s1.apply(h)];
                if color[w].is_none() {
                    color[w] = Some(!color[v].unwrap());
                    stack.push(w);
                }
            }
        }
        // number tree edges by their black half-edge
        let mut edge_of = vec![usize::MAX; n];
        let mut next = 0;
        for h in 0..n {
            if color[vertex_of[h]] == Some(false) {
                edge_of[h] = next;
                edge_of[s1.apply(h)] = next;
                next += 1;
            }
        }
        debug_assert_eq!(next, m);
        let mut t0 = vec![0u32; m];
        let mut t1 = vec![0u32; m];
        for h in 0..n {
            let target = edge_of[self.sigma0.apply(h)] as u32;
            if color[vertex_of[h]] == Some(false) {
                t0[edge_of[h]] = target;
            } else {
                t1[edge_of[h]] = target;
            }
        }
        let d = Dessin::new(
            Permutation::from_zero_based(t0),
            Permutation::from_zero_based(t1),
        )?;
        Ok(d.with_standard_face())
    }
}

fn rotate_images(s1: &[u32], k: usize) -> Vec<u32> {
    let n = s1.len();
    // σ1'(y) = σ1(y − k) + k
    (0..n)
        .map(|y| ((s1[(y + n - k) % n] as usize + k) % n) as u32)
        .collect()
}

/// With `σ0σ1 = (1, …, n)` left to right, `σ0(x) = σ1⁻¹(x + 1)`.
pub(crate) fn from_sigma1_standard(s1: Vec<u32>) -> Dessin {
    let n = s1.len();
    let mut inv = vec![0u32; n];
    for (i, &x) in s1.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    let s0 = (0..n).map(|x| inv[(x + 1) % n]).collect();
    Dessin {
        sigma0: Permutation::from_zero_based(s0),
        sigma1: Permutation::from_zero_based(s1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f1_example() -> Dessin {
        Dessin::from_cycles(6, &[vec![2, 3], vec![4, 5, 6]], &[vec![1, 2, 4]]).unwrap()
    }

    #[test]
    fn validates_trees() {
        let d = f1_example();
        assert_eq!(d.passport().to_string(), "3,2,1;3,1^3;6");
        assert!(d.has_standard_face());
        let single = Dessin::from_cycles(1, &[], &[]).unwrap();
        assert_eq!(single.passport().to_string(), "1;1;1");
        // two disjoint edges pairs: σ0σ1 not a single cycle
        assert!(Dessin::from_cycles(2, &[], &[]).is_err());
        // a 3-cycle with both rotations equal is a genus-1 map
        assert!(Dessin::from_cycles(3, &[vec![1, 2, 3]], &[vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn canonical_is_rotation_invariant() {
        let d = f1_example();
        let c = Permutation::long_cycle(6);
        for k in 0..6 {
            let rotated = d.relabel(&c.pow(k));
            assert!(rotated.has_standard_face());
            assert_eq!(rotated.canonical(), d.canonical());
        }
        let g = Permutation::from_cycles(6, &[vec![1, 5], vec![2, 3, 6]]).unwrap();
        assert_eq!(d.relabel(&g).canonical(), d.canonical());
    }

    #[test]
    fn json_round_trip() {
        let d = f1_example();
        let text = d.to_json();
        assert_eq!(
            text,
            r#"{"n":6,"sigma0":[1,3,2,5,6,4],"sigma1":[2,4,3,1,5,6]}"#
        );
        assert_eq!(Dessin::from_json(&text).unwrap(), d);
        assert!(Dessin::from_json(r#"{"n":2,"sigma0":[1,2],"sigma1":[1,2]}"#).is_err());
    }

    #[test]
    fn unsubdivide_star() {
        // the 3-star with every edge subdivided: black center of degree 3, three black leaves
        let d = Dessin::from_cycles(6, &[vec![1, 3, 5]], &[vec![1, 2], vec![3, 4], vec![5, 6]])
            .unwrap()
            .with_standard_face();
        let t = d.unsubdivide().unwrap();
        assert!(t.passport().matches(&"3;1,1,1;3".parse().unwrap()));
        assert!(f1_example().unsubdivide().is_err());
    }
}

//! Small vertex-colored graphs with bitset adjacency rows.

use super::perm::Permutation;

/// Hard cap on the number of vertices: one adjacency row fits in a `u128`.
pub const MAX_VERTICES: usize = 128;

/// An undirected loop-free graph on at most [`MAX_VERTICES`] vertices with a
/// color on every vertex. Isomorphisms are required to preserve colors
/// exactly, so colors double as an invariant partition of the vertex set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredGraph {
    n: usize,
    adj: Vec<u128>,
    colors: Vec<u32>,
}

impl ColoredGraph {
    /// An edgeless graph with every vertex colored 0.
    ///
    /// # Panics
    /// If `n > MAX_VERTICES`.
    pub fn new(n: usize) -> Self {
        ColoredGraph::with_colors(vec![0; n])
    }

    /// An edgeless graph with the given vertex colors.
    pub fn with_colors(colors: Vec<u32>) -> Self {
        let n = colors.len();
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds cap {MAX_VERTICES}");
        ColoredGraph { n, adj: vec![0; n], colors }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// # Panics
    /// On loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert_ne!(u, v, "loops are not supported");
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// The neighborhood of `v` as a bitset.
    pub fn row(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn set_color(&mut self, v: usize, color: u32) {
        self.colors[v] = color;
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// True when every vertex pair is adjacent or every vertex pair is not,
    /// so the automorphism group is the full color-preserving symmetric group.
    pub fn has_uniform_adjacency(&self) -> bool {
        let m = self.edge_count();
        m == 0 || m == self.n * (self.n - 1) / 2
    }

    /// The image graph under `p`: vertex `v` becomes `p(v)`.
    pub fn relabeled(&self, p: &Permutation) -> ColoredGraph {
        assert_eq!(p.degree(), self.n, "degree mismatch");
        let mut colors = vec![0u32; self.n];
        for v in 0..self.n {
            colors[p.apply(v)] = self.colors[v];
        }
        let mut out = ColoredGraph::with_colors(colors);
        for v in 0..self.n {
            let mut row = self.adj[v];
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                row &= row - 1;
                if u > v {
                    out.add_edge(p.apply(v), p.apply(u));
                }
            }
        }
        out
    }

    /// Does `p` preserve both colors and adjacency?
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        self.is_isomorphism_onto(self, p)
    }

    /// Does `p` map this graph onto `other`, preserving colors and edges?
    pub fn is_isomorphism_onto(&self, other: &ColoredGraph, p: &Permutation) -> bool {
        if p.degree() != self.n || other.n != self.n {
            return false;
        }
        for v in 0..self.n {
            if other.colors[p.apply(v)] != self.colors[v] {
                return false;
            }
            let mut image_row = 0u128;
            let mut row = self.adj[v];
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                row &= row - 1;
                image_row |= 1u128 << p.apply(u);
            }
            if image_row != other.adj[p.apply(v)] {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> ColoredGraph {
        let mut g = ColoredGraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g
    }

    #[test]
    fn adjacency_bookkeeping() {
        let g = path3();
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0));
        assert!(!g.adjacent(0, 2));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
        assert!(!g.has_uniform_adjacency());
        assert!(ColoredGraph::new(4).has_uniform_adjacency());
    }

    #[test]
    fn relabeling_and_automorphisms() {
        let g = path3();
        let flip = Permutation::from_images(vec![2, 1, 0]);
        assert!(g.is_automorphism(&flip));
        assert_eq!(g.relabeled(&flip), g);
        let rot = Permutation::from_images(vec![1, 2, 0]);
        assert!(!g.is_automorphism(&rot));
        assert!(g.is_isomorphism_onto(&g.relabeled(&rot), &rot));
    }

    #[test]
    fn colors_constrain_automorphisms() {
        let mut g = path3();
        g.set_color(0, 7);
        let flip = Permutation::from_images(vec![2, 1, 0]);
        assert!(!g.is_automorphism(&flip));
    }
}

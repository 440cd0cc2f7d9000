//! Circulant graphs `Cay(Z_n, S)`, their canonical bipartite double covers,
//! and the derived graphs used by the instability condition checkers.
//!
//! The text form of a connection set is `n:s1,s2,...` with ascending,
//! distinct residues, e.g. `10:1,2,8,9`; `n:` denotes the empty set.

use crate::autoeng::ColoredGraph;
use crate::zmod::ResidueSet;
use crate::MAX_ORDER;
use num_integer::Integer;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectionSetError {
    #[error("order {0} exceeds cap {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("order must be at least 1")]
    OrderZero,
    #[error("connection set must not contain 0")]
    ContainsZero,
    #[error("residue {0} is out of range for order {1}")]
    OutOfRange(usize, usize),
    #[error("set is not symmetric: contains {0} but not {1}")]
    NotSymmetric(usize, usize),
    #[error("malformed set literal: {0}")]
    Malformed(String),
}

/// A symmetric connection set: a subset of `Z_n \ {0}` closed under negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    set: ResidueSet,
}

impl ConnectionSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, values: I) -> Result<Self, ConnectionSetError> {
        if n == 0 {
            return Err(ConnectionSetError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(ConnectionSetError::OrderTooLarge(n));
        }
        let mut set = ResidueSet::empty(n);
        for v in values {
            if v >= n {
                return Err(ConnectionSetError::OutOfRange(v, n));
            }
            set.insert(v);
        }
        ConnectionSet::from_residue_set(set)
    }

    pub fn from_residue_set(set: ResidueSet) -> Result<Self, ConnectionSetError> {
        if set.contains(0) {
            return Err(ConnectionSetError::ContainsZero);
        }
        for s in set.iter() {
            let neg = (set.modulus() - s) % set.modulus();
            if !set.contains(neg) {
                return Err(ConnectionSetError::NotSymmetric(s, neg));
            }
        }
        Ok(ConnectionSet { set })
    }

    /// Parses the `n:s1,s2,...` literal. Residues must be ascending and
    /// distinct; `n:` is the empty set.
    pub fn parse(text: &str) -> Result<Self, ConnectionSetError> {
        let malformed = || ConnectionSetError::Malformed(text.to_string());
        let (order_part, rest) = text.split_once(':').ok_or_else(malformed)?;
        let n: usize = order_part.trim().parse().map_err(|_| malformed())?;
        if n == 0 {
            return Err(ConnectionSetError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(ConnectionSetError::OrderTooLarge(n));
        }
        let mut values = Vec::new();
        let rest = rest.trim();
        if !rest.is_empty() {
            for part in rest.split(',') {
                let v: usize = part.trim().parse().map_err(|_| malformed())?;
                if v == 0 {
                    return Err(ConnectionSetError::ContainsZero);
                }
                if v >= n {
                    return Err(ConnectionSetError::OutOfRange(v, n));
                }
                if let Some(&last) = values.last() {
                    if v <= last {
                        return Err(malformed());
                    }
                }
                values.push(v);
            }
        }
        ConnectionSet::new(n, values)
    }

    pub fn order(self) -> usize {
        self.set.modulus()
    }

    pub fn members(self) -> ResidueSet {
        self.set
    }

    pub fn valency(self) -> usize {
        self.set.len()
    }

    /// The even members `S_e = S ∩ 2 Z_n`.
    pub fn even_part(self) -> ResidueSet {
        ResidueSet::from_values(self.order(), self.set.iter().filter(|s| s % 2 == 0))
    }

    /// The odd members `S_o = S \ S_e`.
    pub fn odd_part(self) -> ResidueSet {
        ResidueSet::from_values(self.order(), self.set.iter().filter(|s| s % 2 == 1))
    }

    pub fn graph(self) -> CirculantGraph {
        CirculantGraph { connection: self }
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order())?;
        let mut first = true;
        for s in self.set.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// The circulant graph `Cay(Z_n, S)` on vertices `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CirculantGraph {
    connection: ConnectionSet,
}

impl CirculantGraph {
    pub fn connection(self) -> ConnectionSet {
        self.connection
    }

    pub fn order(self) -> usize {
        self.connection.order()
    }

    pub fn adjacent(self, u: usize, v: usize) -> bool {
        let n = self.order();
        let diff = (v + n - u % n) % n;
        diff != 0 && self.connection.members().contains(diff)
    }

    /// Connectivity via `gcd(S ∪ {n}) = 1`. [`Self::is_connected_bfs`] is the
    /// independent traversal-based computation of the same predicate.
    pub fn is_connected(self) -> bool {
        let n = self.order();
        let mut g = n;
        for s in self.connection.members().iter() {
            g = g.gcd(&s);
        }
        g == 1
    }

    /// Connectivity by breadth-first search from vertex 0.
    pub fn is_connected_bfs(self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop() {
            for s in self.connection.members().iter() {
                let w = (v + s) % n;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push(w);
                }
            }
        }
        count == n
    }

    /// Bipartiteness by BFS 2-coloring of every component. For a connected
    /// graph of even order this agrees with "every member of `S` is odd".
    pub fn is_bipartite(self) -> bool {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for s in self.connection.members().iter() {
                    let w = (v + s) % n;
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Twin-freeness via the translation criterion: vertices `v` and `v + h`
    /// share their neighborhood exactly when `h + S = S`, so the graph has
    /// twins iff some nonzero `h` fixes `S` under translation.
    pub fn is_twin_free(self) -> bool {
        let n = self.order();
        let s = self.connection.members();
        (1..n).all(|h| s.translate(h) != s)
    }

    /// Twin detection by direct neighborhood comparison over all vertex
    /// pairs; the independent cross-check for [`Self::is_twin_free`].
    pub fn has_twins_by_neighborhoods(self) -> bool {
        let n = self.order();
        let neighborhood = |v: usize| -> u64 {
            let mut bits = 0u64;
            for s in self.connection.members().iter() {
                bits |= 1 << ((v + s) % n);
            }
            bits
        };
        for u in 0..n {
            for v in u + 1..n {
                if neighborhood(u) == neighborhood(v) {
                    return true;
                }
            }
        }
        false
    }

    /// The uniformly colored adjacency structure for the engine.
    pub fn to_colored(self) -> ColoredGraph {
        let n = self.order();
        let mut g = ColoredGraph::new(n);
        for v in 0..n {
            for s in self.connection.members().iter() {
                let w = (v + s) % n;
                if v < w {
                    g.add_edge(v, w);
                }
            }
        }
        g
    }

    pub fn double_cover(self) -> DoubleCover {
        DoubleCover::of(self)
    }

    /// The eigenvalues `λ_j = Σ_{s ∈ S} cos(2π j s / n)` for `j = 0..n`.
    /// Used only as a fast necessary condition when testing isomorphism:
    /// graphs with different spectra are never isomorphic.
    pub fn spectrum(self) -> Vec<f64> {
        let n = self.order();
        let tau = std::f64::consts::TAU;
        (0..n)
            .map(|j| {
                self.connection
                    .members()
                    .iter()
                    .map(|s| (tau * (j * s % n) as f64 / n as f64).cos())
                    .sum()
            })
            .collect()
    }

    /// The subgraph induced on the even vertices, halved back onto
    /// `Z_{n/2}`: `2i ~ 2j` here iff `i ~ j` in the result.
    ///
    /// # Panics
    /// If the order is odd.
    pub fn even_subgraph(self) -> CirculantGraph {
        let n = self.order();
        assert!(n % 2 == 0, "even subgraph requires even order");
        let half = n / 2;
        let set = ResidueSet::from_values(half, self.connection.even_part().iter().map(|s| s / 2));
        let connection = ConnectionSet::from_residue_set(set)
            .expect("halved even part is symmetric and avoids 0");
        CirculantGraph { connection }
    }
}

/// The canonical bipartite double cover `BX` on `Z_n x {0, 1}`.
/// Vertex `(v, layer)` has index `v + layer * n`; `(u, 0) ~ (v, 1)` iff
/// `v - u ∈ S`.
#[derive(Debug, Clone)]
pub struct DoubleCover {
    base: CirculantGraph,
    graph: ColoredGraph,
}

impl DoubleCover {
    fn of(base: CirculantGraph) -> Self {
        let n = base.order();
        let mut graph = ColoredGraph::new(2 * n);
        for u in 0..n {
            for s in base.connection.members().iter() {
                let v = (u + s) % n;
                graph.add_edge(u, v + n);
            }
        }
        DoubleCover { base, graph }
    }

    pub fn base(&self) -> CirculantGraph {
        self.base
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        2 * self.base.order()
    }

    pub fn vertex(&self, v: usize, layer: usize) -> usize {
        debug_assert!(layer < 2 && v < self.base.order());
        v + layer * self.base.order()
    }

    /// True when the cover is connected, i.e. the base is connected and
    /// nonbipartite.
    pub fn is_connected(&self) -> bool {
        self.base.is_connected() && !self.base.is_bipartite()
    }
}

/// Every symmetric connection set of order n, enumerated by subsets of the
/// negation pairs {s, n-s} (with the singleton {n/2} for even n). The empty
/// set is included; order follows the pair-mask encoding.
pub fn all_symmetric_sets(n: usize) -> Vec<ConnectionSet> {
    let pairs: Vec<Vec<usize>> = (1..=(n.saturating_sub(1)) / 2)
        .map(|s| vec![s, n - s])
        .chain(if n % 2 == 0 && n >= 2 { Some(vec![n / 2]) } else { None })
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut values = Vec::new();
        for (i, pair) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                values.extend_from_slice(pair);
            }
        }
        out.push(ConnectionSet::new(n, values).expect("pairs are symmetric"));
    }
    out
}

/// The walk-parity graph of an even-order circulant: vertices as in the
/// double cover, with `u, w` in the same layer joined exactly when the
/// number of length-2 walks between them in the cover is odd. Concretely
/// its edges are `Cay(Z_n x Z_2, 2S' x {0})` where
/// `S' = {s ∈ S : s + n/2 ∉ S}`. Every automorphism of the double cover
/// preserves it.
#[derive(Debug, Clone)]
pub struct WalkParityGraph {
    graph: ColoredGraph,
    doubled_survivors: ResidueSet,
    /// Set when `0 ∈ 2S'`, which would put a loop at every vertex. Loops are
    /// carried as this flag instead of adjacency-matrix entries.
    pub has_uniform_loops: bool,
}

impl WalkParityGraph {
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    /// The difference set `2S'` defining the within-layer edges.
    pub fn doubled_survivors(&self) -> ResidueSet {
        self.doubled_survivors
    }
}

/// Builds the walk-parity graph. See [`WalkParityGraph`].
///
/// # Panics
/// If the order is odd.
pub fn walk_parity_graph(x: CirculantGraph) -> WalkParityGraph {
    let n = x.order();
    assert!(n % 2 == 0, "walk-parity graph requires even order");
    let s = x.connection().members();
    let survivors = ResidueSet::from_values(n, s.iter().filter(|&v| !s.contains((v + n / 2) % n)));
    let doubled = survivors.scale(2);
    let has_uniform_loops = doubled.contains(0);
    let mut graph = ColoredGraph::new(2 * n);
    for layer in 0..2 {
        for u in 0..n {
            for d in doubled.iter() {
                if d == 0 {
                    continue;
                }
                let v = (u + d) % n;
                if u < v {
                    graph.add_edge(u + layer * n, v + layer * n);
                }
            }
        }
    }
    WalkParityGraph { graph, doubled_survivors: doubled, has_uniform_loops }
}

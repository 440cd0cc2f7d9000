//! Canonical labeling and automorphism groups by individualization and
//! refinement.
//!
//! The search refines an ordered partition to equitability, individualizes
//! each vertex of the first smallest non-singleton cell, and recurses. Leaves
//! are discrete partitions; two leaves with the same relabeled adjacency
//! matrix yield an automorphism, and the lexicographically smallest matrix
//! over all leaves defines the canonical labeling. Subtrees rooted at cell
//! members equivalent, under already-discovered automorphisms fixing the
//! branching prefix, to a processed member are skipped. When a leaf repeats
//! the matrix of the retained first or best leaf, the implied automorphism
//! maps the earlier leaf's branch onto the current one, so the search jumps
//! back to the deepest level the two branching sequences share.

use num_bigint::BigUint;
use num_traits::One;

use super::graph::{ColoredGraph, MAX_VERTICES};
use super::perm::Permutation;
use super::refine::Partition;
use super::schreier::group_order_from_generators;
use super::EngineError;

/// Everything the search learns about one graph.
#[derive(Clone, Debug)]
pub struct AutomorphismReport {
    /// Verified automorphisms generating the full color-preserving group.
    pub generators: Vec<Permutation>,
    /// Order of the group generated by `generators`.
    pub group_order: BigUint,
    /// Bytes equal across two graphs exactly when they are isomorphic as
    /// colored graphs: order, then the canonical color sequence, then the
    /// canonically relabeled adjacency rows.
    pub certificate: Vec<u8>,
    /// Maps each vertex to its position in the canonical labeling.
    pub canonical_map: Permutation,
}

#[derive(Clone)]
struct Leaf {
    lab: Vec<u32>,
    rows: Vec<u128>,
}

fn relabeled_rows(g: &ColoredGraph, lab: &[u32]) -> Vec<u128> {
    let n = lab.len();
    let mut pos_of = vec![0u32; n];
    for (i, &v) in lab.iter().enumerate() {
        pos_of[v as usize] = i as u32;
    }
    let mut rows = Vec::with_capacity(n);
    for &v in lab {
        let mut out = 0u128;
        let mut row = g.row(v as usize);
        while row != 0 {
            let u = row.trailing_zeros() as usize;
            row &= row - 1;
            out |= 1u128 << pos_of[u];
        }
        rows.push(out);
    }
    rows
}

fn automorphism_between(from: &[u32], to: &[u32]) -> Permutation {
    let mut images = vec![0u32; from.len()];
    for (i, &v) in from.iter().enumerate() {
        images[v as usize] = to[i];
    }
    Permutation::from_images(images)
}

fn common_prefix_len(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct Search<'a> {
    g: &'a ColoredGraph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_prefix: Vec<u32>,
    best_prefix: Vec<u32>,
    gens: Vec<Permutation>,
    prefix: Vec<u32>,
    jump_target: Option<usize>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, part: Partition) {
        let Some((start, end)) = part.first_smallest_nonsingleton() else {
            self.record_leaf(part);
            return;
        };
        let mut members = part.lab[start..=end].to_vec();
        members.sort_unstable();
        let mut processed: Vec<u32> = Vec::new();
        let mut orbit_rep: Vec<u32> = Vec::new();
        let mut orbit_gens = usize::MAX;
        for &w in &members {
            if !processed.is_empty() {
                if orbit_gens != self.gens.len() {
                    orbit_rep = self.orbits_fixing_prefix();
                    orbit_gens = self.gens.len();
                }
                let rep = orbit_rep[w as usize];
                if processed.iter().any(|&p| orbit_rep[p as usize] == rep) {
                    continue;
                }
            }
            let mut child = part.clone();
            let pos = child.individualize(w);
            child.refine(self.g, vec![pos]);
            self.prefix.push(w);
            self.descend(child);
            self.prefix.pop();
            if let Some(target) = self.jump_target {
                if target < self.prefix.len() {
                    return;
                }
                self.jump_target = None;
            }
            processed.push(w);
        }
    }

    /// Orbit representatives under the subgroup of discovered generators
    /// fixing every prefix vertex, via union-find.
    fn orbits_fixing_prefix(&self) -> Vec<u32> {
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut parent: Vec<u32> = (0..self.n as u32).collect();
        for g in &self.gens {
            if self.prefix.iter().any(|&p| g.apply(p as usize) != p as usize) {
                continue;
            }
            for v in 0..self.n {
                let a = find(&mut parent, v as u32);
                let b = find(&mut parent, g.apply(v) as u32);
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        (0..self.n as u32).map(|v| find(&mut parent, v)).collect()
    }

    fn record_leaf(&mut self, part: Partition) {
        let lab = part.lab;
        let rows = relabeled_rows(self.g, &lab);
        if self.first.is_none() {
            let leaf = Leaf { lab, rows };
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            self.first_prefix = self.prefix.clone();
            self.best_prefix = self.prefix.clone();
            return;
        }
        if rows == self.first.as_ref().unwrap().rows {
            let p = automorphism_between(&self.first.as_ref().unwrap().lab, &lab);
            self.jump_target = Some(common_prefix_len(&self.first_prefix, &self.prefix));
            self.push_generator(p);
            return;
        }
        let best = self.best.as_ref().unwrap();
        if rows < best.rows {
            self.best = Some(Leaf { lab, rows });
            self.best_prefix = self.prefix.clone();
        } else if rows == best.rows {
            let p = automorphism_between(&best.lab, &lab);
            self.jump_target = Some(common_prefix_len(&self.best_prefix, &self.prefix));
            self.push_generator(p);
        }
    }

    fn push_generator(&mut self, p: Permutation) {
        if !p.is_identity() && !self.gens.contains(&p) {
            debug_assert!(self.g.is_automorphism(&p));
            self.gens.push(p);
        }
    }
}

/// Generators, group order, certificate, and canonical labeling.
///
/// Graphs whose adjacency is uniform (edgeless or complete) short-circuit to
/// the full color-preserving symmetric group; the branch taken depends only
/// on edge count and order, both isomorphism invariants, so certificates
/// remain comparable across graphs.
pub fn analyze(g: &ColoredGraph) -> Result<AutomorphismReport, EngineError> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(EngineError::TooManyVertices(n, MAX_VERTICES));
    }
    if n == 0 {
        return Ok(AutomorphismReport {
            generators: Vec::new(),
            group_order: BigUint::one(),
            certificate: vec![0, 0],
            canonical_map: Permutation::identity(0),
        });
    }
    if g.has_uniform_adjacency() {
        return Ok(uniform_adjacency_report(g));
    }
    let mut part = Partition::initial(g);
    let seeds = part.cell_starts();
    part.refine(g, seeds);
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        first_prefix: Vec::new(),
        best_prefix: Vec::new(),
        gens: Vec::new(),
        prefix: Vec::new(),
        jump_target: None,
    };
    search.descend(part);
    let best = search.best.expect("search visits at least one leaf");
    for p in &search.gens {
        assert!(g.is_automorphism(p), "engine produced a non-automorphism");
    }
    let group_order = group_order_from_generators(n, &search.gens);
    Ok(AutomorphismReport {
        generators: search.gens,
        group_order,
        certificate: certificate_bytes(g, &best),
        canonical_map: position_map(&best.lab),
    })
}

fn position_map(lab: &[u32]) -> Permutation {
    let mut images = vec![0u32; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        images[v as usize] = i as u32;
    }
    Permutation::from_images(images)
}

fn certificate_bytes(g: &ColoredGraph, best: &Leaf) -> Vec<u8> {
    let n = best.lab.len();
    let mut out = Vec::with_capacity(2 + 4 * n + 16 * n);
    out.extend_from_slice(&(n as u16).to_le_bytes());
    for &v in &best.lab {
        out.extend_from_slice(&g.color(v as usize).to_le_bytes());
    }
    for &row in &best.rows {
        out.extend_from_slice(&row.to_le_bytes());
    }
    out
}

fn uniform_adjacency_report(g: &ColoredGraph) -> AutomorphismReport {
    let n = g.order();
    let mut lab: Vec<u32> = (0..n as u32).collect();
    lab.sort_by_key(|&v| (g.color(v as usize), v));
    let complete = g.edge_count() > 0;
    let mut generators = Vec::new();
    let mut group_order = BigUint::one();
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && g.color(lab[end + 1] as usize) == g.color(lab[start] as usize) {
            end += 1;
        }
        for i in start..end {
            let (a, b) = (lab[i] as usize, lab[i + 1] as usize);
            generators.push(Permutation::from_fn(n, |x| {
                if x == a {
                    b
                } else if x == b {
                    a
                } else {
                    x
                }
            }));
        }
        group_order *= (1..=(end - start + 1)).map(BigUint::from).product::<BigUint>();
        start = end + 1;
    }
    let all = if n == MAX_VERTICES { u128::MAX } else { (1u128 << n) - 1 };
    let rows: Vec<u128> =
        (0..n).map(|i| if complete { all & !(1u128 << i) } else { 0 }).collect();
    let best = Leaf { lab, rows };
    AutomorphismReport {
        generators,
        group_order,
        certificate: certificate_bytes(g, &best),
        canonical_map: position_map(&best.lab),
    }
}

/// A color- and edge-preserving bijection from `a` onto `b`, if one exists.
/// The witness is verified before it is returned.
pub fn is_isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> Result<Option<Permutation>, EngineError> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut ca = a.colors().to_vec();
    let mut cb = b.colors().to_vec();
    ca.sort_unstable();
    cb.sort_unstable();
    if ca != cb {
        return Ok(None);
    }
    let ra = analyze(a)?;
    let rb = analyze(b)?;
    if ra.certificate != rb.certificate {
        return Ok(None);
    }
    let iso = ra.canonical_map.then(&rb.canonical_map.inverse());
    assert!(a.is_isomorphism_onto(b, &iso), "equal certificates must yield an isomorphism");
    Ok(Some(iso))
}

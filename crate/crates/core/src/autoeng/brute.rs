//! Exhaustive automorphism counting for very small graphs, used as an
//! oracle against the search-based engine.

use num_bigint::BigUint;

use super::graph::ColoredGraph;
use super::EngineError;

pub const BRUTE_FORCE_CAP: usize = 16;

/// Counts automorphisms by backtracking over images of `0, 1, ...` with
/// bitmask candidate filtering. Exact, but exponential: capped at
/// [`BRUTE_FORCE_CAP`] vertices.
pub fn brute_force_aut_order(g: &ColoredGraph) -> Result<BigUint, EngineError> {
    let n = g.order();
    if n > BRUTE_FORCE_CAP {
        return Err(EngineError::TooManyVertices(n, BRUTE_FORCE_CAP));
    }
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let rows: Vec<u16> = (0..n).map(|v| g.row(v) as u16).collect();
    let full = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let color_mask: Vec<u16> = (0..n)
        .map(|v| {
            let mut m = 0u16;
            for u in 0..n {
                if g.color(u) == g.color(v) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();

    fn recurse(
        depth: usize,
        used: u16,
        images: &mut [u8],
        rows: &[u16],
        color_mask: &[u16],
        full: u16,
        count: &mut u64,
    ) {
        let n = rows.len();
        if depth == n {
            *count += 1;
            return;
        }
        let mut cand = color_mask[depth] & !used & full;
        for u in 0..depth {
            if rows[depth] >> u & 1 == 1 {
                cand &= rows[images[u] as usize];
            } else {
                cand &= !rows[images[u] as usize];
            }
        }
        while cand != 0 {
            let c = cand.trailing_zeros() as u8;
            cand &= cand - 1;
            images[depth] = c;
            recurse(depth + 1, used | 1 << c, images, rows, color_mask, full, count);
        }
    }

    let mut count = 0u64;
    let mut images = vec![0u8; n];
    recurse(0, 0, &mut images, &rows, &color_mask, full, &mut count);
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_small_groups() {
        // Complete graph K4: 4! = 24.
        let mut k4 = ColoredGraph::new(4);
        for u in 0..4 {
            for v in u + 1..4 {
                k4.add_edge(u, v);
            }
        }
        assert_eq!(brute_force_aut_order(&k4).unwrap(), BigUint::from(24u32));

        // The 5-cycle: dihedral of order 10.
        let mut c5 = ColoredGraph::new(5);
        for v in 0..5 {
            c5.add_edge(v, (v + 1) % 5);
        }
        assert_eq!(brute_force_aut_order(&c5).unwrap(), BigUint::from(10u32));

        // The path on 4 vertices: just the end-to-end flip.
        let mut p4 = ColoredGraph::new(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        assert_eq!(brute_force_aut_order(&p4).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn colors_restrict_the_count() {
        let mut c4 = ColoredGraph::new(4);
        for v in 0..4 {
            c4.add_edge(v, (v + 1) % 4);
        }
        assert_eq!(brute_force_aut_order(&c4).unwrap(), BigUint::from(8u32));
        c4.set_color(0, 1);
        // Fixing vertex 0 leaves only the reflection through it.
        assert_eq!(brute_force_aut_order(&c4).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn cap_is_enforced() {
        let g = ColoredGraph::new(17);
        assert_eq!(
            brute_force_aut_order(&g),
            Err(EngineError::TooManyVertices(17, BRUTE_FORCE_CAP))
        );
    }

    #[test]
    fn edgeless_graph_gives_factorial() {
        let g = ColoredGraph::new(7);
        let expected: BigUint = (1..=7u32).map(BigUint::from).product();
        assert_eq!(brute_force_aut_order(&g).unwrap(), expected);
    }
}

//! Instability driven by the even subgraph X_e (the graph the even vertices
//! induce, renamed through k <-> 2k): a pair of permutations of the even
//! vertices whose displacements stay in a subgroup H ⊆ 2Z_n, preserving
//! even adjacency crosswise, extends to an instability pair of X that fixes
//! every odd vertex.

use super::{verify_perm_pair, PermPair};
use crate::autoeng::Permutation;
use crate::circulant::{CirculantGraph, ConnectionSet};
use crate::zmod::{subgroups, units, Subgroup};
use num_integer::Integer;

/// Checks the four conditions for permutations alpha, beta of the even
/// vertices (index k stands for vertex 2k) and a subgroup H ⊆ 2Z_n:
/// (1) alpha ≠ beta; (2) even-adjacent u,v have alpha(u) adjacent to
/// beta(v); (3) s + H ⊆ S for every odd s in S; (4) both displacements
/// stay in H. On success returns the verified extension fixing the odd
/// vertices.
///
/// # Panics
/// If the order is odd or the permutations are not on the even vertices.
pub fn verify_xe_general(
    x: CirculantGraph,
    alpha: &Permutation,
    beta: &Permutation,
    h: Subgroup,
) -> Option<PermPair> {
    let n = x.order();
    assert!(n % 2 == 0, "defined for even orders");
    let half = n / 2;
    assert!(
        alpha.degree() == half && beta.degree() == half,
        "permutations must act on the even vertices"
    );
    if h.generator() % 2 != 0 || alpha == beta {
        return None;
    }
    for k in 0..half {
        if !h.contains((2 * alpha.apply(k) + n - 2 * k) % n)
            || !h.contains((2 * beta.apply(k) + n - 2 * k) % n)
        {
            return None;
        }
    }
    let all = x.connection().members();
    let members = h.members();
    for s in x.connection().odd_part().iter() {
        if !members.translate(s).is_subset_of(all) {
            return None;
        }
    }
    for i in 0..half {
        for j in 0..half {
            if x.adjacent(2 * i, 2 * j) && !x.adjacent(2 * alpha.apply(i), 2 * beta.apply(j)) {
                return None;
            }
        }
    }
    let ext_alpha =
        Permutation::from_fn(n, |v| if v % 2 == 0 { 2 * alpha.apply(v / 2) } else { v });
    let ext_beta = Permutation::from_fn(n, |v| if v % 2 == 0 { 2 * beta.apply(v / 2) } else { v });
    let pair = PermPair { alpha: ext_alpha, beta: ext_beta };
    assert!(verify_perm_pair(x, &pair), "the four conditions must extend to a working pair");
    Some(pair)
}

/// Smallest unit m with `mS_e + n/2 = S_e`, `S_o + 2(m-1)Z_n = S_o`, and
/// `S_o + n/2 = S_o`.
///
/// # Panics
/// If the order is not divisible by 4.
pub fn check_xe_c4(s: ConnectionSet) -> Option<usize> {
    let n = s.order();
    assert!(n % 4 == 0, "defined for orders divisible by 4");
    let se = s.even_part();
    let so = s.odd_part();
    units(n).iter().find(|&m| {
        se.scale(m).translate(n / 2) == se
            && so.plus_subgroup(Subgroup::generated_by(n, 2 * (m - 1) % n)) == so
            && so.translate(n / 2) == so
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XeGeneralHit {
    pub subgroup: Subgroup,
    /// Permutations of even-vertex indices (index k stands for vertex 2k).
    pub alpha: Permutation,
    pub beta: Permutation,
    /// The verified extension to all of Z_n.
    pub pair: PermPair,
}

/// Restricted search for an even-subgraph instability pair. The existential
/// in the underlying condition ranges over all permutation pairs of the
/// even vertices, which is not searchable; this scans two candidate
/// families only, multiplier/translation pairs `(k -> ak, k -> ak + t)`
/// and instability witnesses of X_e itself, validating each against every
/// subgroup H ⊆ 2Z_n that satisfies the odd-closure condition (3). An empty
/// result therefore proves nothing.
pub fn search_xe_general(x: CirculantGraph) -> Option<XeGeneralHit> {
    let n = x.order();
    assert!(n % 2 == 0, "defined for even orders");
    let half = n / 2;
    if half < 2 {
        return None;
    }
    let all = x.connection().members();
    let odd = x.connection().odd_part();
    let admissible: Vec<Subgroup> = subgroups(n)
        .into_iter()
        .filter(|h| h.generator() % 2 == 0)
        .filter(|h| odd.iter().all(|s| h.members().translate(s).is_subset_of(all)))
        .collect();
    // The trivial subgroup pins both permutations to the identity, which
    // condition (1) rejects; without a larger admissible H there is nothing
    // to search.
    if admissible.iter().all(|h| h.is_trivial()) {
        return None;
    }
    let mut candidates: Vec<(Permutation, Permutation)> = Vec::new();
    for a in units(half).iter() {
        for t in 1..half {
            candidates.push((
                Permutation::from_fn(half, |k| a * k % half),
                Permutation::from_fn(half, |k| (a * k + t) % half),
            ));
        }
    }
    if let Some(hit) = try_candidates(x, &admissible, &candidates) {
        return Some(hit);
    }
    // Recurse into X_e only when the cheap family misses. The recursion
    // terminates: the even subgraph has half the order.
    let mut harvested: Vec<(Permutation, Permutation)> = Vec::new();
    let even_report = super::stability_verdict(x.even_subgraph());
    for w in &even_report.witnesses {
        let super::report::WitnessJson::PermPair { alpha, beta } = w;
        let pair = (
            Permutation::from_images(alpha.iter().map(|&v| v as u32).collect()),
            Permutation::from_images(beta.iter().map(|&v| v as u32).collect()),
        );
        if !candidates.contains(&pair) && !harvested.contains(&pair) {
            harvested.push(pair);
        }
    }
    try_candidates(x, &admissible, &harvested)
}

fn try_candidates(
    x: CirculantGraph,
    admissible: &[Subgroup],
    candidates: &[(Permutation, Permutation)],
) -> Option<XeGeneralHit> {
    for (alpha, beta) in candidates {
        for h in admissible {
            if let Some(pair) = verify_xe_general(x, alpha, beta, *h) {
                return Some(XeGeneralHit {
                    subgroup: *h,
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    pair,
                });
            }
        }
    }
    None
}

/// The even-vertex multiplier pair realizing a hit of [`check_xe_c4`]:
/// alpha(v) = mv and beta(v) = mv + n/2 on even vertices, validated with
/// H = <2(m-1), n/2>.
pub fn xe_c4_hit_pair(s: ConnectionSet, m: usize) -> Option<XeGeneralHit> {
    let n = s.order();
    let half = n / 2;
    let alpha = Permutation::from_fn(half, |k| m * k % half);
    let beta = Permutation::from_fn(half, |k| (m * k + n / 4) % half);
    let g = (2 * (m - 1) % n).gcd(&(n / 2)).gcd(&n);
    let h = Subgroup::generated_by(n, g);
    let pair = verify_xe_general(s.graph(), &alpha, &beta, h)?;
    Some(XeGeneralHit { subgroup: h, alpha, beta, pair })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, values: &[usize]) -> ConnectionSet {
        ConnectionSet::new(n, values.iter().copied()).unwrap()
    }

    fn odds_plus(n: usize, extra: &[usize]) -> ConnectionSet {
        let mut values: Vec<usize> = (1..n).step_by(2).collect();
        values.extend_from_slice(extra);
        values.sort_unstable();
        ConnectionSet::new(n, values).unwrap()
    }

    #[test]
    fn xe_c4_on_the_order_sixteen_example() {
        assert_eq!(check_xe_c4(odds_plus(16, &[2, 14])), Some(3));
        // {1,2,6,7} on Z_8: S_o = {1,7} is not invariant under +4.
        assert_eq!(check_xe_c4(set(8, &[1, 2, 6, 7])), None);
    }

    #[test]
    fn verify_accepts_the_instantiated_example() {
        let s = odds_plus(16, &[2, 14]);
        // alpha(x)=3x, beta(x)=3x+8 on even vertices; indices k for 2k.
        let alpha = Permutation::from_fn(8, |k| 3 * k % 8);
        let beta = Permutation::from_fn(8, |k| (3 * k + 4) % 8);
        let pair = verify_xe_general(s.graph(), &alpha, &beta, Subgroup::generated_by(16, 4));
        assert!(pair.is_some());
        // alpha = beta fails condition (1).
        assert!(verify_xe_general(s.graph(), &alpha, &alpha, Subgroup::generated_by(16, 4))
            .is_none());
        // The trivial subgroup forces identities, so any mover fails (4).
        assert!(verify_xe_general(s.graph(), &alpha, &beta, Subgroup::generated_by(16, 0))
            .is_none());
    }

    #[test]
    fn search_finds_the_multiplier_pair() {
        let hit = search_xe_general(odds_plus(16, &[2, 14]).graph()).unwrap();
        assert_eq!(hit.subgroup, Subgroup::generated_by(16, 4));
        assert_eq!(hit.alpha.images(), &[0, 3, 6, 1, 4, 7, 2, 5]);
        assert_eq!(hit.beta.images(), &[4, 7, 2, 5, 0, 3, 6, 1]);
    }

    #[test]
    fn search_respects_the_admissibility_early_out() {
        // {1,2,8,9} on Z_10: odd closure fails for every even subgroup
        // larger than the trivial one (1 + {0,2,4,6,8} covers all odds,
        // not a subset of S), so the search must return empty.
        assert_eq!(search_xe_general(set(10, &[1, 2, 8, 9]).graph()), None);
    }

    #[test]
    fn xe_c4_pair_construction_verifies() {
        let s = odds_plus(16, &[2, 14]);
        let m = check_xe_c4(s).unwrap();
        let hit = xe_c4_hit_pair(s, m).unwrap();
        assert!(verify_perm_pair(s.graph(), &hit.pair));
    }
}

//! The two-subgroup instability condition generalizing types C.1-C.3.
//!
//! For nontrivial subgroups H and K of Z_n with |K| even, write K_o for the
//! odd coset K \ 2K. Either hypothesis below makes the graph unstable:
//!
//! - variant 1: `S + H ⊆ S ∪ (K_o + H)` and `H ∩ K_o = ∅`;
//! - variant 2: `(S \ K_o) + H ⊆ S ∪ K_o`, and |H| ≠ 2 or 4 divides |K|.

use super::{verify_perm_pair, PermPair};
use crate::autoeng::Permutation;
use crate::circulant::ConnectionSet;
use crate::zmod::{subgroups, ResidueSet, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HkHit {
    pub variant: u8,
    pub h: Subgroup,
    pub k: Subgroup,
}

fn odd_coset(k: Subgroup) -> ResidueSet {
    let members = k.members();
    members.difference(members.scale(2))
}

fn variant1_holds(s: ResidueSet, h: Subgroup, k_odd: ResidueSet) -> bool {
    s.plus_subgroup(h).is_subset_of(s.union(k_odd.plus_subgroup(h)))
        && h.members().intersection(k_odd).is_empty()
}

fn variant2_holds(s: ResidueSet, h: Subgroup, k: Subgroup, k_odd: ResidueSet) -> bool {
    (h.order() != 2 || k.order() % 4 == 0)
        && s.difference(k_odd).plus_subgroup(h).is_subset_of(s.union(k_odd))
}

fn scan(s: ConnectionSet, first_only: bool) -> Vec<HkHit> {
    let n = s.order();
    assert!(n % 2 == 0, "defined for even orders");
    let all = s.members();
    let mut hits = Vec::new();
    for h in subgroups(n) {
        if h.is_trivial() {
            continue;
        }
        for k in subgroups(n) {
            if k.is_trivial() || k.order() % 2 != 0 {
                continue;
            }
            let k_odd = odd_coset(k);
            if variant2_holds(all, h, k, k_odd) {
                hits.push(HkHit { variant: 2, h, k });
                if first_only {
                    return hits;
                }
            }
            if variant1_holds(all, h, k_odd) {
                hits.push(HkHit { variant: 1, h, k });
                if first_only {
                    return hits;
                }
            }
        }
    }
    hits
}

/// First hit in a fixed scan order: subgroups H then K ascending by order,
/// variant 2 tried before variant 1 for each pair.
pub fn check_general_hk(s: ConnectionSet) -> Option<HkHit> {
    scan(s, true).into_iter().next()
}

/// Every hit, in the same scan order as [`check_general_hk`].
pub fn general_hk_hits(s: ConnectionSet) -> Vec<HkHit> {
    scan(s, false)
}

/// The explicit permutation pair behind an accepted hit, with h the
/// generator of H: variant 1 translates by h on `2K + H` (alpha) and on
/// `K_o + H` (beta); variant 2 swaps the cosets `2K` and `2K + h` (alpha)
/// and `K_o` and `K_o + h` (beta). A variant-2 hit whose h lies in 2K
/// satisfies the variant-1 hypotheses, and gets the variant-1 maps.
///
/// # Panics
/// If the inputs were not accepted by the scan (the constructed pair fails
/// verification).
pub fn witness_general_hk(s: ConnectionSet, hit: &HkHit) -> PermPair {
    let n = s.order();
    let h_gen = hit.h.generator() % n;
    let k_members = hit.k.members();
    let two_k = k_members.scale(2);
    let k_odd = k_members.difference(two_k);
    let (alpha, beta) = if hit.variant == 2 && !two_k.contains(h_gen) {
        (swap_map(n, two_k, h_gen), swap_map(n, k_odd, h_gen))
    } else {
        (shift_map(n, two_k.plus_subgroup(hit.h), h_gen), shift_map(n, k_odd.plus_subgroup(hit.h), h_gen))
    };
    let pair = PermPair { alpha, beta };
    assert!(verify_perm_pair(s.graph(), &pair), "accepted hit must yield a working pair");
    pair
}

/// Adds h inside `domain`, which must be closed under adding h.
fn shift_map(n: usize, domain: ResidueSet, h: usize) -> Permutation {
    Permutation::from_fn(n, |x| if domain.contains(x) { (x + h) % n } else { x })
}

/// Swaps `block` with `block + h`, which must be disjoint from it.
fn swap_map(n: usize, block: ResidueSet, h: usize) -> Permutation {
    let shifted = block.translate(h);
    Permutation::from_fn(n, |x| {
        if block.contains(x) {
            (x + h) % n
        } else if shifted.contains(x) {
            (x + n - h) % n
        } else {
            x
        }
    })
}

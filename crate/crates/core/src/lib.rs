//! Deciding stability of circulant graphs under the canonical bipartite
//! double cover.
//!
//! A circulant graph `Cay(Z_n, S)` has vertex set `Z_n` and an edge `u ~ v`
//! whenever `v - u` lies in the symmetric connection set `S`. Its canonical
//! bipartite double cover `BX` lives on `Z_n x {0, 1}` with `(u, 0) ~ (v, 1)`
//! whenever `u ~ v`. The graph is *stable* when `Aut BX` is exactly
//! `Aut X x S_2`, i.e. when `|Aut BX| = 2 |Aut X|`, and *unstable* otherwise.
//! Disconnected, bipartite, and twin-carrying graphs are unstable for
//! uninteresting reasons; a graph is *nontrivially unstable* when it is
//! connected, nonbipartite, twin-free, and unstable.
//!
//! The crate provides:
//!
//! * exact residue arithmetic and subgroup enumeration ([`zmod`]),
//! * circulant graphs, their double covers and derived graphs ([`circulant`]),
//! * a canonical-labeling automorphism engine with exact group orders
//!   ([`autoeng`]),
//! * instability condition checkers and explicit witnesses ([`conditions`]),
//! * the complete classification for orders twice a prime ([`twoprime`]),
//! * an exhaustive census over all orders in a range ([`census`]),
//! * the acceptance checks backing `circstab verify` ([`verify`]).

pub mod autoeng;
pub mod census;
pub mod circulant;
pub mod conditions;
pub mod families;
pub mod twoprime;
pub mod verify;
pub mod zmod;

/// Largest circulant order the bit-vector set representation supports.
/// A connection set must fit in one `u64` word.
pub const MAX_ORDER: usize = 64;

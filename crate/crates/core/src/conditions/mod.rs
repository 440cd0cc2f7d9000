//! Stability verdicts and instability criteria.
//!
//! The verdict itself always comes from the group-order comparison
//! |Aut BX| vs 2·|Aut X|; the condition checkers are sufficient criteria
//! that annotate the report and provide constructive witnesses, never the
//! deciding test.

pub mod hk;
pub mod iso;
pub mod report;
pub mod wilson;
pub mod xe;

use num_bigint::BigUint;
use thiserror::Error;

use crate::autoeng::{self, Permutation};
use crate::circulant::CirculantGraph;
pub use report::{NewConditionHit, StabilityReport, TrivialityReason, Verdict, WilsonHit, WitnessJson};

/// Two permutations of Z_n witnessing instability: distinct, and for every
/// edge uv the images alpha(u), beta(v) are adjacent. Such a pair lifts to
/// an automorphism of the double cover outside the product structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermPair {
    pub alpha: Permutation,
    pub beta: Permutation,
}

impl PermPair {
    /// The lifted double-cover automorphism: alpha on layer 0, beta on
    /// layer 1 (layer-major vertex ids).
    pub fn cover_automorphism(&self) -> Permutation {
        let n = self.alpha.degree();
        Permutation::from_fn(2 * n, |v| {
            if v < n {
                self.alpha.apply(v)
            } else {
                self.beta.apply(v - n) + n
            }
        })
    }
}

/// Checks the pair conditions: alpha ≠ beta and every ordered adjacent pair
/// (u, v) keeps alpha(u) adjacent to beta(v).
///
/// # Panics
/// If either permutation's degree mismatches the graph order.
pub fn verify_perm_pair(x: CirculantGraph, pair: &PermPair) -> bool {
    let n = x.order();
    assert_eq!(pair.alpha.degree(), n, "degree mismatch");
    assert_eq!(pair.beta.degree(), n, "degree mismatch");
    if pair.alpha == pair.beta {
        return false;
    }
    let s = x.connection().members();
    for u in 0..n {
        let au = pair.alpha.apply(u);
        for step in s.iter() {
            let v = (u + step) % n;
            if !s.contains((pair.beta.apply(v) + n - au) % n) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error("the double cover is disconnected")]
    CoverDisconnected,
    #[error("not an automorphism of the double cover")]
    NotAutomorphism,
}

/// Splits a double-cover automorphism outside the product structure into an
/// instability pair. Composes with the layer swap first if needed (the
/// cover is connected, so layers are preserved or exchanged as blocks);
/// returns `None` when the automorphism respects the product structure
/// (alpha = beta after normalization).
pub fn extract_perm_pair(
    x: CirculantGraph,
    g: &Permutation,
) -> Result<Option<PermPair>, ExtractError> {
    let n = x.order();
    let cover = x.double_cover();
    if !cover.is_connected() {
        return Err(ExtractError::CoverDisconnected);
    }
    if g.degree() != 2 * n || !cover.graph().is_automorphism(g) {
        return Err(ExtractError::NotAutomorphism);
    }
    let swapped;
    let fixed = if g.apply(0) < n {
        g
    } else {
        swapped = g.then(&Permutation::from_fn(2 * n, |v| (v + n) % (2 * n)));
        &swapped
    };
    let alpha = Permutation::from_fn(n, |v| fixed.apply(v));
    let beta = Permutation::from_fn(n, |v| fixed.apply(v + n) - n);
    if alpha == beta {
        return Ok(None);
    }
    let pair = PermPair { alpha, beta };
    assert!(verify_perm_pair(x, &pair), "a split cover automorphism must verify");
    Ok(Some(pair))
}

/// The full stability report for one circulant graph.
pub fn stability_verdict(x: CirculantGraph) -> StabilityReport {
    stability_verdict_with_certificate(x).0
}

/// As [`stability_verdict`], also returning the canonical certificate of X
/// itself (used by the census for isomorphism bookkeeping).
pub fn stability_verdict_with_certificate(x: CirculantGraph) -> (StabilityReport, Vec<u8>) {
    let n = x.order();
    let s = x.connection();
    let rx = autoeng::analyze(&x.to_colored()).expect("graph order within engine cap");
    let cover = x.double_cover();
    let rbx = autoeng::analyze(cover.graph()).expect("double cover within engine cap");
    let unstable = rbx.group_order != BigUint::from(2u32) * &rx.group_order;

    let mut reasons = Vec::new();
    if unstable {
        if !x.is_connected() {
            reasons.push(TrivialityReason::Disconnected);
        }
        if x.is_bipartite() {
            reasons.push(TrivialityReason::Bipartite);
        }
        if !x.is_twin_free() {
            reasons.push(TrivialityReason::HasTwins);
        }
    }
    let verdict = if !unstable {
        Verdict::Stable
    } else if reasons.is_empty() {
        Verdict::NontriviallyUnstable
    } else {
        Verdict::TriviallyUnstable
    };

    let mut wilson_types = Vec::new();
    let mut new_conditions = Vec::new();
    let mut condition_pair: Option<PermPair> = None;
    if n >= 2 && n % 2 == 0 {
        if let Some(hit) = wilson::check_c1(s) {
            wilson_types.push(WilsonHit::C1 { h: hit.h, vacuous: hit.vacuous });
        }
        if n % 4 == 0 {
            if let Some(hit) = wilson::check_c2(s) {
                wilson_types.push(WilsonHit::C2 { h: hit.h, vacuous: hit.vacuous });
            }
        }
        if let Some(hit) = wilson::check_c3(s) {
            wilson_types.push(WilsonHit::C3 {
                subgroup: hit.subgroup.generator(),
                r: hit.r,
                d: hit.d,
            });
        }
        let c4 = wilson::check_c4(s);
        if let Some(m) = c4 {
            wilson_types.push(WilsonHit::C4 { m });
            let alpha = Permutation::from_fn(n, |v| v * m % n);
            let beta = Permutation::from_fn(n, |v| (v * m + n / 2) % n);
            condition_pair = Some(PermPair { alpha, beta });
        }
        if let Some(hit) = hk::check_general_hk(s) {
            new_conditions.push(NewConditionHit::GeneralizedHk {
                variant: hit.variant,
                h: hit.h.generator(),
                k: hit.k.generator(),
            });
            if condition_pair.is_none() {
                condition_pair = Some(hk::witness_general_hk(s, &hit));
            }
        }
        if let Some(witness) = iso::check_iso_translate(s) {
            new_conditions.push(match &witness {
                iso::IsoWitness::Multiplier(m) => {
                    NewConditionHit::IsoTranslate { multiplier: Some(*m), map: None }
                }
                iso::IsoWitness::Mapping(p) => NewConditionHit::IsoTranslate {
                    multiplier: None,
                    map: Some(p.images().iter().map(|&v| v as usize).collect()),
                },
            });
            if condition_pair.is_none() {
                condition_pair = Some(iso::iso_translate_pair(s, &witness));
            }
        }
        if n % 4 == 0 {
            if let Some(m) = xe::check_xe_c4(s) {
                new_conditions.push(NewConditionHit::XeC4 { m });
                if condition_pair.is_none() {
                    condition_pair = xe::xe_c4_hit_pair(s, m).map(|hit| hit.pair);
                }
            }
        }
        if let Some(hit) = xe::search_xe_general(x) {
            new_conditions.push(NewConditionHit::XeGeneral {
                subgroup: hit.subgroup.generator(),
                alpha: hit.alpha.images().iter().map(|&v| v as usize).collect(),
                beta: hit.beta.images().iter().map(|&v| v as usize).collect(),
            });
            if condition_pair.is_none() {
                condition_pair = Some(hit.pair);
            }
        }
    }

    let mut witnesses = Vec::new();
    if unstable {
        let pair = condition_pair.or_else(|| {
            if !cover.is_connected() {
                return None;
            }
            rbx.generators
                .iter()
                .find_map(|g| extract_perm_pair(x, g).expect("verified generator"))
        });
        if let Some(pair) = pair {
            debug_assert!(verify_perm_pair(x, &pair));
            witnesses.push(WitnessJson::PermPair {
                alpha: pair.alpha.images().iter().map(|&v| v as usize).collect(),
                beta: pair.beta.images().iter().map(|&v| v as usize).collect(),
            });
        }
    }

    let unexplained = verdict == Verdict::NontriviallyUnstable
        && wilson_types.is_empty()
        && new_conditions.is_empty();
    let report = StabilityReport {
        set: s.to_string(),
        order: n,
        verdict,
        triviality_reasons: reasons,
        aut_x: rx.group_order.to_string(),
        aut_bx: rbx.group_order.to_string(),
        wilson_types,
        new_conditions,
        witnesses,
        unexplained,
    };
    (report, rx.certificate)
}

//! Exhaustive census of circulant graphs up to isomorphism.
//!
//! For each order the survey walks every symmetric connection set (one bit
//! per negation pair), keeps the connected, nonbipartite, twin-free ones,
//! canonicalizes by multiplier orbit, classifies each survivor, and for
//! orders without the Cayley Isomorphism Property merges duplicates by
//! certificate fingerprint. The result is a pure function of the order
//! range: worker count and chunk scheduling never change the output.

pub mod cache;
pub mod compare;

use crate::circulant::ConnectionSet;
use crate::conditions::{
    stability_verdict_with_certificate, NewConditionHit, StabilityReport, Verdict, WilsonHit,
};
use crate::zmod::{units, ResidueSet};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("order {0} exceeds the supported cap")]
    OrderTooLarge(usize),
    #[error("empty order range: {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("census cache i/o failed: {0}")]
    CacheIo(String),
}

/// Which instability conditions fired on a record's canonical set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConditionFlags {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    pub general_hk: bool,
    pub iso_translate: bool,
    pub xe_c4: bool,
    pub xe_general: bool,
}

impl ConditionFlags {
    pub fn from_report(report: &StabilityReport) -> Self {
        let mut f = ConditionFlags::default();
        for hit in &report.wilson_types {
            match hit {
                WilsonHit::C1 { .. } => f.c1 = true,
                WilsonHit::C2 { .. } => f.c2 = true,
                WilsonHit::C3 { .. } => f.c3 = true,
                WilsonHit::C4 { .. } => f.c4 = true,
            }
        }
        for hit in &report.new_conditions {
            match hit {
                NewConditionHit::GeneralizedHk { .. } => f.general_hk = true,
                NewConditionHit::IsoTranslate { .. } => f.iso_translate = true,
                NewConditionHit::XeC4 { .. } => f.xe_c4 = true,
                NewConditionHit::XeGeneral { .. } => f.xe_general = true,
            }
        }
        f
    }

    pub fn has_wilson_type(self) -> bool {
        self.c1 || self.c2 || self.c3 || self.c4
    }

    pub fn xe(self) -> bool {
        self.xe_c4 || self.xe_general
    }

    pub fn any(self) -> bool {
        self.has_wilson_type() || self.general_hk || self.iso_translate || self.xe()
    }

    /// Short names of the set flags, in fixed order (the cache format).
    pub fn tokens(self) -> Vec<&'static str> {
        let all = [
            (self.c1, "c1"),
            (self.c2, "c2"),
            (self.c3, "c3"),
            (self.c4, "c4"),
            (self.general_hk, "hk"),
            (self.iso_translate, "iso"),
            (self.xe_c4, "xec4"),
            (self.xe_general, "xeg"),
        ];
        all.iter().filter(|(on, _)| *on).map(|(_, t)| *t).collect()
    }

    pub fn from_tokens<'a, I: IntoIterator<Item = &'a str>>(tokens: I) -> Option<Self> {
        let mut f = ConditionFlags::default();
        for t in tokens {
            match t {
                "c1" => f.c1 = true,
                "c2" => f.c2 = true,
                "c3" => f.c3 = true,
                "c4" => f.c4 = true,
                "hk" => f.general_hk = true,
                "iso" => f.iso_translate = true,
                "xec4" => f.xe_c4 = true,
                "xeg" => f.xe_general = true,
                _ => return None,
            }
        }
        Some(f)
    }
}

/// One isomorphism class of connected, nonbipartite, twin-free circulants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub order: usize,
    /// Least bitmask over the multiplier orbit (and, at non-CI orders,
    /// over the merged isomorphism class).
    pub set: ConnectionSet,
    /// Fingerprint of the graph's canonical certificate; isomorphic
    /// survivors of one order share it.
    pub fingerprint: [u8; 16],
    pub verdict: Verdict,
    pub flags: ConditionFlags,
}

/// 128-bit FNV-1a fingerprint of a canonical certificate. Keeping 16 bytes
/// per record instead of the whole certificate holds a multi-million-class
/// order in a few hundred megabytes; distinct certificates collide with
/// negligible probability at any reachable census size.
pub fn certificate_fingerprint(certificate: &[u8]) -> [u8; 16] {
    const OFFSET: u128 = 0x6c62272e07bb014262b821756295c58d;
    const PRIME: u128 = 0x1000000000000000000013b;
    let mut h = OFFSET;
    for &b in certificate {
        h ^= u128::from(b);
        h = h.wrapping_mul(PRIME);
    }
    h.to_be_bytes()
}

impl CensusRecord {
    pub fn set_bits(&self) -> u64 {
        self.set.members().bits()
    }

    pub fn is_nontrivially_unstable(&self) -> bool {
        self.verdict == Verdict::NontriviallyUnstable
    }

    pub fn no_wilson_type(&self) -> bool {
        self.is_nontrivially_unstable() && !self.flags.has_wilson_type()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OrderSummary {
    pub order: usize,
    /// All surviving isomorphism classes, stable ones included.
    pub classes: u64,
    pub nontrivially_unstable: u64,
    pub c1: u64,
    pub c2: u64,
    pub c3: u64,
    pub c4: u64,
    pub general_hk: u64,
    pub iso_translate: u64,
    pub xe: u64,
    pub no_wilson_type: u64,
    /// Set literals of the no-Wilson-type classes.
    pub no_wilson_sets: Vec<String>,
    /// Nontrivially unstable classes no implemented condition explains.
    pub unexplained: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusSummary {
    pub min_order: usize,
    pub max_order: usize,
    pub orders: Vec<OrderSummary>,
    pub total_nontrivially_unstable: u64,
}

impl CensusSummary {
    pub fn order(&self, n: usize) -> Option<&OrderSummary> {
        self.orders.iter().find(|o| o.order == n)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "order,nontrivially_unstable,c1,c2,c3,c4,general_hk,iso_translate,xe,no_wilson_type\n",
        );
        for o in &self.orders {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                o.order,
                o.nontrivially_unstable,
                o.c1,
                o.c2,
                o.c3,
                o.c4,
                o.general_hk,
                o.iso_translate,
                o.xe,
                o.no_wilson_type
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}

/// A finished census: the summary plus the nontrivially unstable records
/// themselves (stable classes are only counted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub summary: CensusSummary,
    pub nontrivial: Vec<CensusRecord>,
}

impl Census {
    pub fn nontrivial_at(&self, n: usize) -> impl Iterator<Item = &CensusRecord> {
        self.nontrivial.iter().filter(move |r| r.order == n)
    }
}

/// Number of mask bits for order n: one per negation pair plus the half
/// point at even orders.
fn pair_bits(n: usize) -> u32 {
    (n.saturating_sub(1) / 2 + usize::from(n % 2 == 0 && n >= 2)) as u32
}

/// Expands a pair mask into residue-set bits.
fn mask_to_bits(n: usize, mask: u64) -> u64 {
    let half_pairs = n.saturating_sub(1) / 2;
    let mut bits = 0u64;
    for i in 0..half_pairs {
        if mask >> i & 1 == 1 {
            bits |= 1 << (i + 1);
            bits |= 1 << (n - i - 1);
        }
    }
    if n % 2 == 0 && n >= 2 && mask >> half_pairs & 1 == 1 {
        bits |= 1 << (n / 2);
    }
    bits
}

fn gcd_of_bits(n: usize, bits: u64) -> usize {
    let mut g = n;
    let mut b = bits;
    while b != 0 {
        let s = b.trailing_zeros() as usize;
        g = num_integer::gcd(g, s);
        if g == 1 {
            return 1;
        }
        b &= b - 1;
    }
    g
}

fn rotate_bits(n: usize, bits: u64, h: usize) -> u64 {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    ((bits << h) | (bits >> (n - h))) & mask
}

/// Twin check on raw bits: a translation stabilizer is a subgroup, so only
/// divisor shifts need testing.
fn has_twins_bits(n: usize, bits: u64) -> bool {
    (1..n).filter(|d| n % d == 0).any(|d| rotate_bits(n, bits, d) == bits)
}

fn scale_bits(n: usize, bits: u64, m: usize) -> u64 {
    let mut out = 0u64;
    let mut b = bits;
    while b != 0 {
        let s = b.trailing_zeros() as usize;
        out |= 1 << (s * m % n);
        b &= b - 1;
    }
    out
}

/// True when `bits` is the numerically least bitmask in its multiplier
/// orbit. Exactly one member of each orbit passes.
fn is_orbit_minimum(n: usize, bits: u64, unit_list: &[usize]) -> bool {
    unit_list.iter().all(|&m| scale_bits(n, bits, m) >= bits)
}

/// Streams the canonical survivor sets for one order: connected,
/// nonbipartite, twin-free, least in multiplier orbit. Ascending bitmask.
pub fn canonical_survivor_sets(n: usize) -> Result<Vec<ConnectionSet>, CensusError> {
    if n == 0 || n > crate::MAX_ORDER {
        return Err(CensusError::OrderTooLarge(n));
    }
    let unit_list: Vec<usize> = units(n).iter().collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << pair_bits(n) {
        if let Some(bits) = surviving_bits(n, mask, &unit_list) {
            out.push(set_from_bits(n, bits));
        }
    }
    out.sort_by_key(|s| s.members().bits());
    Ok(out)
}

fn surviving_bits(n: usize, mask: u64, unit_list: &[usize]) -> Option<u64> {
    let bits = mask_to_bits(n, mask);
    if bits == 0 || gcd_of_bits(n, bits) != 1 {
        return None;
    }
    // Connected and of even order: bipartite exactly when S is all odd.
    const EVEN_BITS: u64 = 0x5555_5555_5555_5555;
    if n % 2 == 0 && bits & EVEN_BITS == 0 {
        return None;
    }
    if has_twins_bits(n, bits) || !is_orbit_minimum(n, bits, unit_list) {
        return None;
    }
    Some(bits)
}

fn set_from_bits(n: usize, bits: u64) -> ConnectionSet {
    ConnectionSet::from_residue_set(ResidueSet::from_bits(n, bits))
        .expect("survivor bits are symmetric and avoid 0")
}

fn classify(n: usize, bits: u64) -> CensusRecord {
    let set = set_from_bits(n, bits);
    let (report, certificate) = stability_verdict_with_certificate(set.graph());
    debug_assert!(report.verdict != Verdict::TriviallyUnstable);
    CensusRecord {
        order: n,
        set,
        fingerprint: certificate_fingerprint(&certificate),
        verdict: report.verdict,
        flags: ConditionFlags::from_report(&report),
    }
}

/// True when multiplier equivalence is guaranteed to coincide with graph
/// isomorphism at this order, so certificate merging can be skipped.
pub fn order_has_ci_property(n: usize) -> bool {
    crate::conditions::iso::has_ci_property(n)
}

/// Merges chunk outputs for one order: sort by canonical set and, at
/// non-CI orders, keep one record per fingerprint (the least set wins).
/// In-place sorts keep the peak footprint at the records themselves.
fn merge_order(n: usize, mut records: Vec<CensusRecord>) -> Vec<CensusRecord> {
    if order_has_ci_property(n) {
        records.sort_unstable_by_key(CensusRecord::set_bits);
        return records;
    }
    records.sort_unstable_by_key(|r| (r.fingerprint, r.set_bits()));
    records.dedup_by_key(|r| r.fingerprint);
    records.sort_unstable_by_key(CensusRecord::set_bits);
    records
}

/// All records of one order: every surviving isomorphism class, classified.
pub fn enumerate_order(n: usize) -> Result<Vec<CensusRecord>, CensusError> {
    if n == 0 || n > crate::MAX_ORDER {
        return Err(CensusError::OrderTooLarge(n));
    }
    let unit_list: Vec<usize> = units(n).iter().collect();
    let mut records = Vec::new();
    for mask in 0..1u64 << pair_bits(n) {
        if let Some(bits) = surviving_bits(n, mask, &unit_list) {
            records.push(classify(n, bits));
        }
    }
    Ok(merge_order(n, records))
}

/// One unit of parallel work: a contiguous mask range of one order.
#[derive(Debug, Clone, Copy)]
struct Chunk {
    n: usize,
    mask_start: u64,
    mask_end: u64,
}

/// Splits an order's mask space into at most `parts` contiguous chunks.
fn chunks_for_order(n: usize, parts: u64) -> Vec<Chunk> {
    let total = 1u64 << pair_bits(n);
    let size = total.div_ceil(parts).max(1);
    let mut out = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + size).min(total);
        out.push(Chunk { n, mask_start: start, mask_end: end });
        start = end;
    }
    out
}

fn survey_chunk(chunk: Chunk, unit_list: &[usize]) -> Vec<CensusRecord> {
    (chunk.mask_start..chunk.mask_end)
        .filter_map(|mask| surviving_bits(chunk.n, mask, unit_list))
        .map(|bits| classify(chunk.n, bits))
        .collect()
}

fn summarize_order(n: usize, records: &[CensusRecord]) -> OrderSummary {
    let nontrivial: Vec<&CensusRecord> =
        records.iter().filter(|r| r.is_nontrivially_unstable()).collect();
    let count = |f: fn(ConditionFlags) -> bool| nontrivial.iter().filter(|r| f(r.flags)).count() as u64;
    OrderSummary {
        order: n,
        classes: records.len() as u64,
        nontrivially_unstable: nontrivial.len() as u64,
        c1: count(|f| f.c1),
        c2: count(|f| f.c2),
        c3: count(|f| f.c3),
        c4: count(|f| f.c4),
        general_hk: count(|f| f.general_hk),
        iso_translate: count(|f| f.iso_translate),
        xe: count(ConditionFlags::xe),
        no_wilson_type: nontrivial.iter().filter(|r| r.no_wilson_type()).count() as u64,
        no_wilson_sets: nontrivial
            .iter()
            .filter(|r| r.no_wilson_type())
            .map(|r| r.set.to_string())
            .collect(),
        unexplained: nontrivial.iter().filter(|r| !r.flags.any()).count() as u64,
    }
}

/// Runs the census over an inclusive order range. `jobs = 0` uses all
/// cores. With a cache directory, finished orders are loaded instead of
/// recomputed and fresh results are stored.
///
/// The outcome is identical for every `jobs` value: chunk outputs are
/// merged by (order, canonical set), never by completion time.
pub fn run_census(
    min: usize,
    max: usize,
    jobs: usize,
    cache_dir: Option<&Path>,
) -> Result<Census, CensusError> {
    if min == 0 || min > max {
        return Err(CensusError::EmptyRange(min, max));
    }
    if max > crate::MAX_ORDER {
        return Err(CensusError::OrderTooLarge(max));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool builds");

    let mut summaries = Vec::new();
    let mut nontrivial = Vec::new();
    for n in min..=max {
        let cached = cache_dir.and_then(|dir| cache::load_order(dir, n));
        let records = match cached {
            Some(records) => records,
            None => {
                let unit_list: Vec<usize> = units(n).iter().collect();
                let chunks = chunks_for_order(n, 64);
                let per_chunk: Vec<Vec<CensusRecord>> = pool.install(|| {
                    chunks
                        .par_iter()
                        .map(|&c| survey_chunk(c, &unit_list))
                        .collect()
                });
                let records = merge_order(n, per_chunk.into_iter().flatten().collect());
                if let Some(dir) = cache_dir {
                    cache::store_order(dir, n, &records)
                        .map_err(|e| CensusError::CacheIo(e.to_string()))?;
                }
                records
            }
        };
        summaries.push(summarize_order(n, &records));
        nontrivial.extend(records.into_iter().filter(|r| r.is_nontrivially_unstable()));
    }
    let total = summaries.iter().map(|o| o.nontrivially_unstable).sum();
    Ok(Census {
        summary: CensusSummary {
            min_order: min,
            max_order: max,
            orders: summaries,
            total_nontrivially_unstable: total,
        },
        nontrivial,
    })
}

impl ConnectionSet {
    /// The canonical (least-bitmask) representative of this set's
    /// multiplier orbit.
    pub fn orbit_canonical(self) -> ConnectionSet {
        let n = self.order();
        let bits = self.members().bits();
        let least = units(n)
            .iter()
            .map(|m| scale_bits(n, bits, m))
            .min()
            .unwrap_or(bits);
        set_from_bits(n, least)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::all_symmetric_sets;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bit_filters_agree_with_graph_predicates() {
        for n in 1..=14usize {
            for s in all_symmetric_sets(n) {
                let bits = s.members().bits();
                let x = s.graph();
                assert_eq!(gcd_of_bits(n, bits) == 1, x.is_connected(), "{s}");
                assert_eq!(has_twins_bits(n, bits), !x.is_twin_free(), "{s}");
                if x.is_connected() {
                    const EVEN_BITS: u64 = 0x5555_5555_5555_5555;
                    let all_odd_nonempty = bits != 0 && bits & EVEN_BITS == 0;
                    let bipartite_quick = if n % 2 == 0 { all_odd_nonempty } else { bits == 0 };
                    assert_eq!(bipartite_quick, x.is_bipartite(), "{s}");
                }
            }
        }
    }

    #[test]
    fn survivor_streams_match_the_slow_path() {
        for n in 1..=14usize {
            let quick = canonical_survivor_sets(n).unwrap();
            let mut slow: Vec<ConnectionSet> = all_symmetric_sets(n)
                .into_iter()
                .filter(|s| {
                    let x = s.graph();
                    x.is_connected()
                        && !x.is_bipartite()
                        && x.is_twin_free()
                        && s.orbit_canonical() == *s
                })
                .collect();
            slow.sort_by_key(|s| s.members().bits());
            assert_eq!(quick, slow, "order {n}");
        }
    }

    #[test]
    fn small_orders_have_no_nontrivial_instability() {
        for n in [1, 2, 3, 4, 5, 6, 7] {
            let records = enumerate_order(n).unwrap();
            assert!(
                records.iter().all(|r| !r.is_nontrivially_unstable()),
                "order {n}"
            );
        }
    }

    #[test]
    fn order_eight_contains_the_known_class() {
        let records = enumerate_order(8).unwrap();
        let canonical = ConnectionSet::new(8, [1, 2, 6, 7]).unwrap().orbit_canonical();
        assert_eq!(canonical.members().iter().collect::<Vec<_>>(), vec![2, 3, 5, 6]);
        let hit = records.iter().find(|r| r.set == canonical).expect("class present");
        assert!(hit.is_nontrivially_unstable());
        assert!(hit.flags.c1);
        assert!(!hit.no_wilson_type());
    }

    #[test]
    fn orbit_members_canonicalize_to_the_same_record() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
        for n in [8usize, 10, 12] {
            let unit_list: Vec<usize> = units(n).iter().collect();
            for s in canonical_survivor_sets(n).unwrap() {
                for _ in 0..10 {
                    let m = *unit_list.choose(&mut rng).unwrap();
                    let member = ConnectionSet::from_residue_set(s.members().scale(m)).unwrap();
                    assert_eq!(member.orbit_canonical(), s, "order {n}");
                }
            }
        }
    }

    #[test]
    fn fingerprints_are_distinct_within_each_order() {
        for n in [8usize, 10, 12, 16, 18] {
            let records = enumerate_order(n).unwrap();
            let mut prints: Vec<[u8; 16]> = records.iter().map(|r| r.fingerprint).collect();
            prints.sort_unstable();
            let before = prints.len();
            prints.dedup();
            assert_eq!(before, prints.len(), "order {n}");
        }
    }

    #[test]
    fn fingerprint_matches_the_fnv1a_reference() {
        assert_eq!(
            certificate_fingerprint(b""),
            0x6c62272e07bb014262b821756295c58d_u128.to_be_bytes()
        );
        let one_step = (0x6c62272e07bb014262b821756295c58d_u128 ^ 0x61)
            .wrapping_mul(0x1000000000000000000013b);
        assert_eq!(certificate_fingerprint(b"a"), one_step.to_be_bytes());
        assert_ne!(certificate_fingerprint(b"ab"), certificate_fingerprint(b"ba"));
    }

    #[test]
    fn census_is_deterministic_across_worker_counts() {
        let a = run_census(1, 12, 1, None).unwrap();
        let b = run_census(1, 12, 4, None).unwrap();
        assert_eq!(a.summary, b.summary);
        assert_eq!(a.nontrivial, b.nontrivial);
        assert_eq!(a.summary.to_csv(), b.summary.to_csv());
    }

    #[test]
    fn order_ten_census_agrees_with_the_two_prime_classification() {
        let census = run_census(10, 10, 2, None).unwrap();
        let classified = canonical_survivor_sets(10)
            .unwrap()
            .into_iter()
            .filter(|&s| crate::twoprime::classify_2p(s).unwrap().is_some())
            .count() as u64;
        assert_eq!(census.summary.order(10).unwrap().nontrivially_unstable, classified);
        assert!(classified > 0);
        for r in census.nontrivial_at(10) {
            assert!(r.flags.c4, "{}", r.set);
        }
    }

    #[test]
    fn summary_exports() {
        let census = run_census(6, 8, 2, None).unwrap();
        let csv = census.summary.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "order,nontrivially_unstable,c1,c2,c3,c4,general_hk,iso_translate,xe,no_wilson_type"
        );
        assert!(csv.lines().any(|l| l.starts_with("6,0,")));
        let json = census.summary.to_json();
        let parsed: CensusSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, census.summary);
        assert_eq!(census.summary.order(6).unwrap().nontrivially_unstable, 0);
        assert!(census.summary.order(8).unwrap().nontrivially_unstable > 0);
    }

    #[test]
    fn range_validation() {
        assert!(matches!(run_census(0, 5, 1, None), Err(CensusError::EmptyRange(0, 5))));
        assert!(matches!(run_census(9, 5, 1, None), Err(CensusError::EmptyRange(9, 5))));
        assert!(matches!(run_census(1, 65, 1, None), Err(CensusError::OrderTooLarge(65))));
        assert!(matches!(enumerate_order(0), Err(CensusError::OrderTooLarge(0))));
    }
}

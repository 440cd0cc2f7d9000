//! The four classical instability types for circulant graphs of even order,
//! with the known corrections applied: C.2 carries an extra closure clause
//! and C.3 an extra subgroup clause, without which stable graphs (complete
//! graphs among them) would be flagged.

use crate::circulant::ConnectionSet;
use crate::zmod::{subgroups, units, Subgroup};
use num_integer::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C1Hit {
    pub h: usize,
    /// S_e was empty, so every candidate translation holds vacuously.
    pub vacuous: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C2Hit {
    pub h: usize,
    /// S_o was empty, so the doubled-translation clause holds vacuously.
    pub vacuous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C3Hit {
    pub subgroup: Subgroup,
    pub r: Vec<usize>,
    pub d: usize,
}

/// Smallest nonzero even h with `h + S_e = S_e`.
///
/// # Panics
/// If the order is odd.
pub fn check_c1(s: ConnectionSet) -> Option<C1Hit> {
    let n = s.order();
    assert!(n % 2 == 0, "defined for even orders");
    let se = s.even_part();
    (2..n)
        .step_by(2)
        .find(|&h| se.translate(h) == se)
        .map(|h| C1Hit { h, vacuous: se.is_empty() })
}

/// Smallest odd h with `2h + S_o = S_o` and, for every `s` in S congruent to
/// 0 or −h mod 4, `s + h` back in S.
///
/// # Panics
/// If the order is not divisible by 4.
pub fn check_c2(s: ConnectionSet) -> Option<C2Hit> {
    let n = s.order();
    assert!(n % 4 == 0, "defined for orders divisible by 4");
    let so = s.odd_part();
    let all = s.members();
    for h in (1..n).step_by(2) {
        if so.translate(2 * h % n) != so {
            continue;
        }
        let minus_h = (4 - h % 4) % 4;
        let closed = all
            .iter()
            .filter(|&v| v % 4 == 0 || v % 4 == minus_h)
            .all(|v| all.contains((v + h) % n));
        if closed {
            return Some(C2Hit { h, vacuous: so.is_empty() });
        }
    }
    None
}

/// First subgroup H, ascending by order, for which `R = {s in S : s + H not
/// a subset of S}` is nonempty and, with `d = gcd(R, n)`: n/d is even, every
/// r/d is odd, and H either escapes `dZ_n` or sits inside `2dZ_n`.
pub fn check_c3(s: ConnectionSet) -> Option<C3Hit> {
    let n = s.order();
    let all = s.members();
    for h in subgroups(n) {
        let members = h.members();
        let r: Vec<usize> =
            all.iter().filter(|&v| !members.translate(v).is_subset_of(all)).collect();
        if r.is_empty() {
            continue;
        }
        let d = r.iter().fold(n, |acc, &v| acc.gcd(&v));
        if (n / d) % 2 != 0 || r.iter().any(|&v| (v / d) % 2 == 0) {
            continue;
        }
        let g = h.generator();
        let inside_d = g % d == 0;
        let inside_2d = g % (2 * d).gcd(&n) == 0;
        if !inside_d || inside_2d {
            return Some(C3Hit { subgroup: h, r, d });
        }
    }
    None
}

/// Smallest unit m with `n/2 + mS = S`.
///
/// # Panics
/// If the order is odd.
pub fn check_c4(s: ConnectionSet) -> Option<usize> {
    let n = s.order();
    assert!(n % 2 == 0, "defined for even orders");
    let all = s.members();
    units(n).iter().find(|&m| all.scale(m).translate(n / 2) == all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, values: &[usize]) -> ConnectionSet {
        ConnectionSet::new(n, values.iter().copied()).unwrap()
    }

    #[test]
    fn c1_translation_of_the_even_part() {
        let hit = check_c1(set(8, &[1, 2, 6, 7])).unwrap();
        assert_eq!((hit.h, hit.vacuous), (4, false));
        assert_eq!(check_c1(set(10, &[1, 2, 8, 9])), None);
        // Empty even part: the smallest candidate wins vacuously.
        let hit = check_c1(set(6, &[1, 5])).unwrap();
        assert_eq!((hit.h, hit.vacuous), (2, true));
        // Order 2 has no candidate range at all.
        assert_eq!(check_c1(set(2, &[1])), None);
    }

    #[test]
    fn c2_needs_the_closure_clause() {
        // Complete graph on Z_12: clause (a) holds for every h, but the
        // closure clause fails throughout, as it must on a stable graph.
        let k12: Vec<usize> = (1..12).collect();
        assert_eq!(check_c2(set(12, &k12)), None);

        // All odds plus {2,14} on Z_16: every candidate h fails closure.
        let mut values: Vec<usize> = (1..16).step_by(2).collect();
        values.extend([2, 14]);
        values.sort_unstable();
        assert_eq!(check_c2(set(16, &values)), None);
    }

    #[test]
    fn c2_accepts_with_closure() {
        // Z_8, S={1,2,6,7}: h=1: S_o={1,7}, 2+S_o={3,1}≠S_o; h=3: 6+{1,7}
        // ={7,5}≠; no odd h translates S_o to itself except h with 2h=0 mod
        // 8, and there is none. So this classic C.1 example is not C.2.
        assert_eq!(check_c2(set(8, &[1, 2, 6, 7])), None);
        // S_o empty: clause (a) vacuous, closure decides. S={4} on Z_8:
        // s=4≡0 mod 4 needs 4+h ∈ S for s≡0; h=1: 5∉S... all h fail since
        // S={4} only. Take S={2,4,6} on Z_8 instead: candidates must map
        // {4} and s≡-h residues into S.
        let hit = check_c2(set(8, &[2, 4, 6]));
        // h=1: s≡0 mod 4: {4}: 5 ∉ S → fail. h=3: {4}: 7 ∉ S; h=5: {4}: 1 ∉ S;
        // h=7: {4}: 3 ∉ S. And s ≡ -h mod 4: h=1→s≡3: none; h=3→s≡1: none.
        assert_eq!(hit, None);
        // A genuinely vacuous accept: S_o = ∅ and no s ≡ 0 or -h mod 4 at
        // all. S = {2,6} on Z_8: s≡2 mod 4 only → both clauses empty → h=1.
        let hit = check_c2(set(8, &[2, 6])).unwrap();
        assert_eq!((hit.h, hit.vacuous), (1, true));
    }

    #[test]
    fn c3_subgroup_clause_rejects_complete_graphs() {
        // K_n for even n: H=<n/2> gives R={n/2}, d=n/2, but H ⊆ dZ_n and
        // H ⊄ 2dZ_n, so the added clause rejects; all other subgroups fail
        // too and the result is empty.
        for n in [4usize, 6, 8, 10, 12] {
            let kn: Vec<usize> = (1..n).collect();
            assert_eq!(check_c3(set(n, &kn)), None, "K_{n}");
        }
    }

    #[test]
    fn c3_accepts_a_genuine_instance() {
        // Z_12, S={1,2,10,11}, H=<4>={0,4,8}: 1+H={1,5,9} ⊄ S, 2+H={2,6,10}
        // ⊄ S, so R=S, d=gcd(1,2,10,11,12)=1, n/d=12 even, all r/d odd?
        // r=2 is even → this H fails. The checker must agree with a direct
        // evaluation; freeze whatever the scan gives.
        let result = check_c3(set(12, &[1, 2, 10, 11]));
        // Direct evaluation over all subgroups: H=<6>: R: 1+{0,6}={1,7}⊄S →
        // 1∈R; 2+{0,6}={2,8}⊄S → 2∈R; 10,11 similar → R=S, d=1, r=2 even →
        // fail. H=<4>: fail (above). H=<3>: R=S (1+{0,3,6,9} ⊄ S), d=1 →
        // fail. H=<2>,<1>: R=S, d=1 → fail. So: empty.
        assert_eq!(result, None);

        // S = {3, 9} on Z_12 (disconnected but the checker is structural):
        // H=<6>: 3+{0,6}={3,9}=S ✓ so 3 ∉ R; 9+{0,6}={9,3} ✓ → R empty.
        // H=<4>: 3+{0,4,8}={3,7,11} ⊄ S → R={3,9}, d=gcd(3,9,12)=3, n/d=4
        // even ✓, r/d={1,3} odd ✓, H ⊆ 3Z_12? gen 4: 4%3≠0 → H ⊄ dZ_n ✓ hit.
        let hit = check_c3(set(12, &[3, 9])).unwrap();
        assert_eq!(hit.subgroup.generator(), 4);
        assert_eq!(hit.r, vec![3, 9]);
        assert_eq!(hit.d, 3);
    }

    #[test]
    fn c4_multiplier_examples() {
        assert_eq!(check_c4(set(10, &[1, 2, 8, 9])), Some(3));
        assert_eq!(check_c4(set(8, &[1, 2, 6, 7])), Some(3));
        // S + n/2 = S makes m=1 qualify (a twinned set; reported anyway).
        assert_eq!(check_c4(set(8, &[2, 6])), Some(1));
        // Sets containing n/2 can never satisfy the equation: n/2 maps to 0.
        assert_eq!(check_c4(set(8, &[1, 3, 4, 5, 7])), None);
        // Complete graphs of even order are stable and must miss.
        let k6: Vec<usize> = (1..6).collect();
        assert_eq!(check_c4(set(6, &k6)), None);
    }
}

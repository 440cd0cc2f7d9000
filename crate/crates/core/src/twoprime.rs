//! Orders that are twice a prime: the complete classification of
//! nontrivial instability, and the closed-form predicate for which orders
//! admit nontrivially unstable circulant graphs at all.

use crate::circulant::ConnectionSet;
use crate::conditions::{verify_perm_pair, PermPair, TrivialityReason};
use crate::autoeng::Permutation;
use crate::zmod::{units, ResidueSet};
use thiserror::Error;

/// Trial-division primality; the order cap keeps inputs tiny.
pub fn is_prime(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwoPrimeError {
    #[error("order {0} is not twice an odd prime")]
    NotTwiceOddPrime(usize),
    #[error("order {0} is not twice a prime")]
    NotTwicePrime(usize),
    #[error("graph is trivially ruled out: {0:?}")]
    PreconditionViolated(Vec<TrivialityReason>),
}

/// A witness that a connected, twin-free, nonbipartite circulant of order
/// 2p is nontrivially unstable: a unit m with m^2 S_e = S_e, m S_e != S_e,
/// and S = S_e ∪ (p + m S_e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPrimeClassification {
    pub p: usize,
    pub m: usize,
    pub s_e: ResidueSet,
}

impl TwoPrimeClassification {
    /// The instability pair alpha(x) = mx, beta(x) = mx + p.
    pub fn witness_pair(&self) -> PermPair {
        let n = 2 * self.p;
        let m = self.m;
        PermPair {
            alpha: Permutation::from_fn(n, |v| v * m % n),
            beta: Permutation::from_fn(n, |v| (v * m + self.p) % n),
        }
    }
}

/// Classifies nontrivial instability at order 2p (p an odd prime): scans
/// units m ascending for m^2 S_e = S_e, m S_e != S_e, S = S_e ∪ (p + m S_e)
/// and returns the smallest hit. For graphs passing the preconditions this
/// is equivalent to nontrivial instability.
///
/// The same m also solves the Wilson C.4 equation m S + p = S (odd units
/// preserve parity and m p = p, so the parity split of one equation system
/// is the other); the smallest-m agreement with the C.4 scan is asserted.
pub fn classify_2p(
    s: ConnectionSet,
) -> Result<Option<TwoPrimeClassification>, TwoPrimeError> {
    let n = s.order();
    let p = n / 2;
    if n % 2 != 0 || p % 2 == 0 || !is_prime(p) {
        return Err(TwoPrimeError::NotTwiceOddPrime(n));
    }
    let x = s.graph();
    let mut reasons = Vec::new();
    if !x.is_connected() {
        reasons.push(TrivialityReason::Disconnected);
    }
    if x.is_bipartite() {
        reasons.push(TrivialityReason::Bipartite);
    }
    if !x.is_twin_free() {
        reasons.push(TrivialityReason::HasTwins);
    }
    if !reasons.is_empty() {
        return Err(TwoPrimeError::PreconditionViolated(reasons));
    }

    let all = s.members();
    let s_e = s.even_part();
    let found = units(n).iter().find(|&m| {
        let scaled = s_e.scale(m);
        scaled.scale(m) == s_e && scaled != s_e && s_e.union(scaled.translate(p)) == all
    });
    assert_eq!(
        found,
        crate::conditions::wilson::check_c4(s),
        "the classification scan and the C.4 scan must find the same smallest unit"
    );
    Ok(found.map(|m| {
        let classification = TwoPrimeClassification { p, m, s_e };
        debug_assert!(verify_perm_pair(x, &classification.witness_pair()));
        classification
    }))
}

/// Whether an order-2p graph satisfies Wilson type C.4. At these orders
/// every nontrivially unstable graph does.
pub fn has_wilson_c4_2p(s: ConnectionSet) -> Result<bool, TwoPrimeError> {
    let n = s.order();
    if n % 2 != 0 || !is_prime(n / 2) {
        return Err(TwoPrimeError::NotTwicePrime(n));
    }
    Ok(crate::conditions::wilson::check_c4(s).is_some())
}

/// True exactly when NO nontrivially unstable circulant graph of order n
/// exists: n odd, n < 8, or n = 2p with p a prime congruent to 3 mod 4.
pub fn orders_predicate(n: usize) -> bool {
    n % 2 == 1 || n < 8 || (is_prime(n / 2) && n / 2 % 4 == 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::all_symmetric_sets;
    use crate::conditions::{stability_verdict, Verdict};

    fn set(n: usize, values: &[usize]) -> ConnectionSet {
        ConnectionSet::new(n, values.iter().copied()).unwrap()
    }

    #[test]
    fn primality_basics() {
        let primes: Vec<usize> = (0..=32).filter(|&k| is_prime(k)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
    }

    #[test]
    fn classifies_the_order_ten_example() {
        let c = classify_2p(set(10, &[1, 2, 8, 9])).unwrap().unwrap();
        assert_eq!(c.p, 5);
        assert_eq!(c.m, 3);
        assert_eq!(c.s_e.iter().collect::<Vec<_>>(), vec![2, 8]);
        assert!(verify_perm_pair(set(10, &[1, 2, 8, 9]).graph(), &c.witness_pair()));
    }

    #[test]
    fn rejects_wrong_orders_and_trivial_cases() {
        assert_eq!(classify_2p(set(9, &[1, 8])), Err(TwoPrimeError::NotTwiceOddPrime(9)));
        assert_eq!(classify_2p(set(12, &[1, 11])), Err(TwoPrimeError::NotTwiceOddPrime(12)));
        // 4 = 2 * 2: excluded because p must be odd.
        assert_eq!(classify_2p(set(4, &[1, 3])), Err(TwoPrimeError::NotTwiceOddPrime(4)));
        assert_eq!(
            classify_2p(set(10, &[2, 8])),
            Err(TwoPrimeError::PreconditionViolated(vec![TrivialityReason::Disconnected]))
        );
        assert_eq!(
            classify_2p(set(6, &[1, 5])),
            Err(TwoPrimeError::PreconditionViolated(vec![TrivialityReason::Bipartite]))
        );
        // The 2-periodic set is complete bipartite with doubled vertices.
        assert_eq!(
            classify_2p(set(10, &[1, 3, 5, 7, 9])),
            Err(TwoPrimeError::PreconditionViolated(vec![
                TrivialityReason::Bipartite,
                TrivialityReason::HasTwins
            ]))
        );
    }

    #[test]
    fn complete_graphs_have_no_classification() {
        // Every unit fixes S_e outright, so the inequality clause rejects all.
        assert_eq!(classify_2p(set(10, &(1..10).collect::<Vec<_>>())).unwrap(), None);
    }

    #[test]
    fn order_fourteen_is_always_empty() {
        // p = 7 ≡ 3 mod 4: no nontrivially unstable graphs exist here, so
        // every admissible set must classify to nothing.
        for s in all_symmetric_sets(14) {
            if let Ok(c) = classify_2p(s) {
                assert_eq!(c, None, "{s}");
            }
        }
    }

    #[test]
    fn classification_matches_the_verdict_at_order_ten() {
        for s in all_symmetric_sets(10) {
            let nontrivial =
                stability_verdict(s.graph()).verdict == Verdict::NontriviallyUnstable;
            match classify_2p(s) {
                Ok(Some(c)) => {
                    assert!(nontrivial, "{s}");
                    assert!(verify_perm_pair(s.graph(), &c.witness_pair()), "{s}");
                }
                Ok(None) => assert!(!nontrivial, "{s}"),
                Err(TwoPrimeError::PreconditionViolated(_)) => assert!(!nontrivial, "{s}"),
                Err(e) => panic!("unexpected error {e:?} on {s}"),
            }
        }
    }

    #[test]
    fn wilson_c4_predicate() {
        assert_eq!(has_wilson_c4_2p(set(10, &[1, 2, 8, 9])), Ok(true));
        assert_eq!(has_wilson_c4_2p(set(10, &(1..10).collect::<Vec<_>>())), Ok(false));
        // p = 2 is allowed here, unlike in the classification.
        assert_eq!(has_wilson_c4_2p(set(4, &[1, 3])), Ok(true));
        assert_eq!(has_wilson_c4_2p(set(12, &[1, 11])), Err(TwoPrimeError::NotTwicePrime(12)));
    }

    #[test]
    fn order_existence_table() {
        let expected_true = [1, 2, 3, 4, 5, 6, 7, 9, 11, 13, 14, 15, 17, 19, 21, 22];
        for n in 1..=22 {
            assert_eq!(orders_predicate(n), expected_true.contains(&n), "n = {n}");
        }
        // 10 = 2*5 and 26 = 2*13 have p ≡ 1 mod 4: instability exists there.
        assert!(!orders_predicate(10));
        assert!(!orders_predicate(26));
        assert!(orders_predicate(46));
    }
}

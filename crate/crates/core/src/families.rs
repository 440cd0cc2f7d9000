//! Parametrized families of nontrivially unstable circulant graphs with no
//! Wilson type. Sets are generated from their parameters rather than
//! hard-coded so that construction bugs surface in the fixture tests.

use crate::autoeng::Permutation;
use crate::circulant::{ConnectionSet, ConnectionSetError};
use crate::twoprime::is_prime;
use crate::zmod::{ResidueSet, Subgroup};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("ell must be an even integer >= 4")]
    BadEll,
    #[error("p must be a prime congruent to 1 mod 4")]
    BadPrime,
    #[error("c^2 must be -1 mod p")]
    BadC,
    #[error("a must be an element of order p in Z_2p^2")]
    BadA,
    #[error("family order {0} exceeds the supported cap")]
    OrderTooLarge(usize),
}

fn build(n: usize, values: impl IntoIterator<Item = usize>) -> Result<ConnectionSet, FamilyError> {
    ConnectionSet::new(n, values).map_err(|e| match e {
        ConnectionSetError::OrderTooLarge(n) => FamilyError::OrderTooLarge(n),
        other => panic!("family construction produced a bad set: {other}"),
    })
}

/// The valency-8 family: order n = 3 * 2^ell with ell >= 4 even, connection
/// set {±3, ±6, ±n/12, n/2 ± 3}. Each member is nontrivially unstable with
/// no Wilson type.
pub fn val8_set(ell: u32) -> Result<ConnectionSet, FamilyError> {
    if ell < 4 || ell % 2 != 0 {
        return Err(FamilyError::BadEll);
    }
    let n = 3usize
        .checked_mul(1usize.checked_shl(ell).ok_or(FamilyError::OrderTooLarge(usize::MAX))?)
        .ok_or(FamilyError::OrderTooLarge(usize::MAX))?;
    if n > crate::MAX_ORDER {
        return Err(FamilyError::OrderTooLarge(n));
    }
    let h = n / 2;
    let a = n / 12;
    build(
        n,
        [3, n - 3, 6, n - 6, a, n - a, (h + 3) % n, h - 3],
    )
}

/// The map v -> mv + rho(v) * n/2 with m = n/6 - 1, where rho(v) reads the
/// mod-4 class of v (shifted to v+1 when odd). It carries the valency-8
/// graph onto its half-translate, witnessing instability.
pub fn val8_translate_isomorphism(ell: u32) -> Result<Permutation, FamilyError> {
    let s = val8_set(ell)?;
    let n = s.order();
    let m = n / 6 - 1;
    let rho = |v: usize| -> usize {
        let even = if v % 2 == 0 { v } else { v + 1 };
        even % 4 / 2
    };
    Ok(Permutation::from_fn(n, |v| (m * v + rho(v) * (n / 2)) % n))
}

/// The order-2p^2 family: p prime with p ≡ 1 mod 4, c a square root of -1
/// mod p, and a of order p in Z_n. The connection set is
/// S_e ∪ (n/2 + S_o') with S_e = (±2 + <a>) ∪ {±a} and
/// S_o' = (±2 + <a>) ∪ {±ca}. Each member is nontrivially unstable with no
/// Wilson type.
pub fn two_p_squared_set(p: usize, a: usize, c: usize) -> Result<ConnectionSet, FamilyError> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(FamilyError::BadPrime);
    }
    let n = 2 * p * p;
    if n > crate::MAX_ORDER {
        return Err(FamilyError::OrderTooLarge(n));
    }
    if c % p == 0 || (c * c + 1) % p != 0 {
        return Err(FamilyError::BadC);
    }
    // Order p in Z_n means gcd(a, n) = n / p = 2p.
    if a == 0 || a >= n || num_integer::gcd(a, n) != 2 * p {
        return Err(FamilyError::BadA);
    }
    let h = n / 2;
    let coset_pair = Subgroup::generated_by(n, a % n)
        .members()
        .translate(2)
        .union(Subgroup::generated_by(n, a % n).members().translate(n - 2));
    let s_e = coset_pair.union(ResidueSet::from_values(n, [a, n - a]));
    let s_o_prime = coset_pair.union(ResidueSet::from_values(n, [c * a % n, (n - c * a % n) % n]));
    build(n, s_e.union(s_o_prime.translate(h)).iter())
}

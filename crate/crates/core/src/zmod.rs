//! Residue arithmetic modulo `n` and bit-vector subsets of `Z_n`.
//!
//! Everything here is exact integer arithmetic. Subsets of `Z_n` are stored
//! as one `u64` word (bit `i` = residue `i`), which caps the modulus at
//! [`MAX_ORDER`](crate::MAX_ORDER). Translation of a set is a bit rotation;
//! scaling by a unit is a bit permutation.

use crate::MAX_ORDER;
use num_integer::Integer;

/// A residue class modulo a fixed `n`, kept reduced to `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: usize,
    modulus: usize,
}

impl Residue {
    /// Reduces `value` modulo `modulus`.
    ///
    /// # Panics
    /// If `modulus` is zero or exceeds [`MAX_ORDER`](crate::MAX_ORDER).
    pub fn new(value: usize, modulus: usize) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        assert!(modulus <= MAX_ORDER, "modulus {modulus} exceeds cap {MAX_ORDER}");
        Residue { value: value % modulus, modulus }
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    pub fn add(self, other: Residue) -> Residue {
        self.check(other);
        Residue::new(self.value + other.value, self.modulus)
    }

    pub fn sub(self, other: Residue) -> Residue {
        self.check(other);
        Residue::new(self.value + self.modulus - other.value, self.modulus)
    }

    pub fn mul(self, other: Residue) -> Residue {
        self.check(other);
        Residue::new(self.value * other.value, self.modulus)
    }

    pub fn neg(self) -> Residue {
        Residue::new(self.modulus - self.value, self.modulus)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// True when the residue generates the full additive group, i.e. it is
    /// invertible multiplicatively.
    pub fn is_unit(self) -> bool {
        self.value.gcd(&self.modulus) == 1
    }

    fn check(self, other: Residue) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
    }
}

/// A subset of `Z_n` as a single bit word: bit `i` set iff `i` is a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: usize,
    bits: u64,
}

impl ResidueSet {
    /// The empty subset of `Z_n`.
    ///
    /// # Panics
    /// If `modulus` is zero or exceeds [`MAX_ORDER`](crate::MAX_ORDER).
    pub fn empty(modulus: usize) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        assert!(modulus <= MAX_ORDER, "modulus {modulus} exceeds cap {MAX_ORDER}");
        ResidueSet { modulus, bits: 0 }
    }

    /// Builds a set from residue values, reducing each modulo `n`.
    pub fn from_values<I: IntoIterator<Item = usize>>(modulus: usize, values: I) -> Self {
        let mut set = ResidueSet::empty(modulus);
        for v in values {
            set.insert(v % modulus);
        }
        set
    }

    /// Rebuilds a set from a raw bit word; bits at or above the modulus must
    /// be clear.
    pub fn from_bits(modulus: usize, bits: u64) -> Self {
        let set = ResidueSet::empty(modulus);
        assert_eq!(bits & !set.word_mask(), 0, "bits outside 0..modulus");
        ResidueSet { modulus, bits }
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    fn word_mask(self) -> u64 {
        if self.modulus == 64 {
            u64::MAX
        } else {
            (1u64 << self.modulus) - 1
        }
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, value: usize) -> bool {
        debug_assert!(value < self.modulus);
        self.bits >> value & 1 == 1
    }

    pub fn insert(&mut self, value: usize) {
        assert!(value < self.modulus, "residue {value} out of range");
        self.bits |= 1 << value;
    }

    pub fn remove(&mut self, value: usize) {
        assert!(value < self.modulus, "residue {value} out of range");
        self.bits &= !(1 << value);
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.modulus).filter(move |&i| bits >> i & 1 == 1)
    }

    /// The translate `A + h` (a rotation of the bit word).
    pub fn translate(self, h: usize) -> ResidueSet {
        let n = self.modulus;
        let h = h % n;
        let bits = if h == 0 {
            self.bits
        } else {
            (self.bits << h | self.bits >> (n - h)) & self.word_mask()
        };
        ResidueSet { modulus: n, bits }
    }

    /// The dilate `m * A` (an index permutation when `m` is a unit; a
    /// many-to-one image otherwise).
    pub fn scale(self, m: usize) -> ResidueSet {
        let n = self.modulus;
        let mut bits = 0u64;
        for v in self.iter() {
            bits |= 1 << (v * m % n);
        }
        ResidueSet { modulus: n, bits }
    }

    /// The reflection `-A`.
    pub fn negated(self) -> ResidueSet {
        ResidueSet::from_values(self.modulus, self.iter().map(|v| (self.modulus - v) % self.modulus))
    }

    /// True when `A = -A`.
    pub fn is_symmetric(self) -> bool {
        self == self.negated()
    }

    pub fn union(self, other: ResidueSet) -> ResidueSet {
        self.check(other);
        ResidueSet { modulus: self.modulus, bits: self.bits | other.bits }
    }

    pub fn intersection(self, other: ResidueSet) -> ResidueSet {
        self.check(other);
        ResidueSet { modulus: self.modulus, bits: self.bits & other.bits }
    }

    pub fn difference(self, other: ResidueSet) -> ResidueSet {
        self.check(other);
        ResidueSet { modulus: self.modulus, bits: self.bits & !other.bits }
    }

    pub fn is_subset_of(self, other: ResidueSet) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    /// The sumset `A + H.members()`, i.e. the union of all translates of `A`
    /// by elements of the subgroup.
    pub fn plus_subgroup(self, h: Subgroup) -> ResidueSet {
        assert_eq!(self.modulus, h.modulus(), "modulus mismatch");
        let mut bits = 0u64;
        for t in h.members().iter() {
            bits |= self.translate(t).bits;
        }
        ResidueSet { modulus: self.modulus, bits }
    }

    fn check(self, other: ResidueSet) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
    }
}

/// A subgroup of `Z_n`. Every subgroup is `d Z_n` for a divisor `d` of `n`;
/// `d = n` gives the trivial subgroup and `d = 1` the full group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subgroup {
    modulus: usize,
    generator: usize,
}

impl Subgroup {
    /// The subgroup generated by `g`, namely `gcd(g, n) Z_n`.
    pub fn generated_by(modulus: usize, g: usize) -> Self {
        assert!(modulus >= 1 && modulus <= MAX_ORDER);
        let g = g % modulus;
        let d = if g == 0 { modulus } else { g.gcd(&modulus) };
        Subgroup { modulus, generator: d }
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    /// The canonical generator: the divisor `d` with this subgroup equal to
    /// `d Z_n` (`d = n` for the trivial subgroup).
    pub fn generator(self) -> usize {
        self.generator
    }

    pub fn order(self) -> usize {
        self.modulus / self.generator
    }

    pub fn is_trivial(self) -> bool {
        self.generator == self.modulus
    }

    pub fn contains(self, value: usize) -> bool {
        value % self.modulus % self.generator == 0
    }

    pub fn members(self) -> ResidueSet {
        ResidueSet::from_values(self.modulus, (0..self.order()).map(|k| k * self.generator))
    }

    pub fn is_subgroup_of(self, other: Subgroup) -> bool {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        self.generator % other.generator == 0
    }
}

/// The multiplicative units of `Z_n`, as a set.
pub fn units(n: usize) -> ResidueSet {
    ResidueSet::from_values(n, (0..n).filter(|&m| m.gcd(&n) == 1))
}

/// All subgroups of `Z_n`, sorted by order ascending (trivial subgroup
/// first, full group last).
pub fn subgroups(n: usize) -> Vec<Subgroup> {
    let mut divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    // Subgroup d Z_n has order n / d, so descending d is ascending order.
    divisors.sort_unstable_by(|a, b| b.cmp(a));
    divisors.into_iter().map(|d| Subgroup { modulus: n, generator: d }).collect()
}

/// The least `k >= 1` with `m^k = 1`, for a unit `m`.
///
/// # Panics
/// If `m` is not a unit of its modulus.
pub fn multiplicative_order(m: Residue) -> usize {
    assert!(m.is_unit(), "{} is not a unit modulo {}", m.value(), m.modulus());
    let one = Residue::new(1, m.modulus());
    let mut pow = m;
    let mut k = 1;
    while pow != one {
        pow = pow.mul(m);
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn units_of_small_moduli() {
        assert_eq!(units(8).iter().collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert_eq!(units(2).iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(units(10).iter().collect::<Vec<_>>(), vec![1, 3, 7, 9]);
        assert_eq!(units(1).iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn unit_count_is_multiplicative() {
        // phi(n) for n = 1..16.
        let phi = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8];
        for (i, &expected) in phi.iter().enumerate() {
            assert_eq!(units(i + 1).len(), expected, "phi({})", i + 1);
        }
    }

    #[test]
    fn subgroups_of_twelve() {
        let subs = subgroups(12);
        let orders: Vec<usize> = subs.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 12]);
        let gens: Vec<usize> = subs.iter().map(|h| h.generator()).collect();
        assert_eq!(gens, vec![12, 6, 4, 3, 2, 1]);
        assert_eq!(
            Subgroup::generated_by(12, 4).members().iter().collect::<Vec<_>>(),
            vec![0, 4, 8]
        );
    }

    #[test]
    fn subgroup_membership_and_inclusion() {
        let h = Subgroup::generated_by(12, 8); // gcd(8, 12) = 4
        assert_eq!(h.generator(), 4);
        assert!(h.contains(0) && h.contains(4) && h.contains(8));
        assert!(!h.contains(2));
        let k = Subgroup::generated_by(12, 2);
        assert!(h.is_subgroup_of(k));
        assert!(!k.is_subgroup_of(h));
        let trivial = Subgroup::generated_by(12, 0);
        assert!(trivial.is_trivial());
        assert_eq!(trivial.members().iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn translate_examples() {
        let s = ResidueSet::from_values(8, [1, 2, 6, 7]);
        let t = s.translate(4);
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![2, 3, 5, 6]);
        let s = ResidueSet::from_values(10, [1, 2, 8, 9]);
        assert_eq!(s.translate(5).iter().collect::<Vec<_>>(), vec![3, 4, 6, 7]);
    }

    #[test]
    fn scale_examples() {
        let s = ResidueSet::from_values(10, [1, 2, 8, 9]);
        assert_eq!(s.scale(3).iter().collect::<Vec<_>>(), vec![3, 4, 6, 7]);
        // Non-unit scaling collapses members.
        let s = ResidueSet::from_values(10, [1, 6]);
        assert_eq!(s.scale(5).iter().collect::<Vec<_>>(), vec![0, 5]);
    }

    #[test]
    fn multiplicative_order_examples() {
        assert_eq!(multiplicative_order(Residue::new(3, 10)), 4);
        assert_eq!(multiplicative_order(Residue::new(1, 10)), 1);
        assert_eq!(multiplicative_order(Residue::new(9, 10)), 2);
        assert_eq!(multiplicative_order(Residue::new(3, 8)), 2);
        assert_eq!(multiplicative_order(Residue::new(1, 1)), 1);
    }

    #[test]
    #[should_panic(expected = "not a unit")]
    fn multiplicative_order_rejects_non_units() {
        multiplicative_order(Residue::new(2, 10));
    }

    #[test]
    fn full_modulus_word_boundary() {
        let s = ResidueSet::from_values(64, [0, 1, 63]);
        assert_eq!(s.translate(1).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(s.negated().iter().collect::<Vec<_>>(), vec![0, 1, 63]);
        assert!(s.is_symmetric());
    }

    proptest! {
        #[test]
        fn translate_is_a_bijection(n in 1usize..=64, h in 0usize..64, bits in any::<u64>()) {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let s = ResidueSet::from_bits(n, bits & mask);
            let t = s.translate(h);
            prop_assert_eq!(t.len(), s.len());
            let back = t.translate(n - h % n);
            prop_assert_eq!(back, s);
        }

        #[test]
        fn translate_matches_elementwise(n in 1usize..=64, h in 0usize..64, bits in any::<u64>()) {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let s = ResidueSet::from_bits(n, bits & mask);
            let direct = ResidueSet::from_values(n, s.iter().map(|v| (v + h) % n));
            prop_assert_eq!(s.translate(h), direct);
        }

        #[test]
        fn unit_scaling_preserves_size_and_composes(n in 1usize..=64, bits in any::<u64>(), pick in any::<u64>()) {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let s = ResidueSet::from_bits(n, bits & mask);
            let us: Vec<usize> = units(n).iter().collect();
            let m1 = us[(pick % us.len() as u64) as usize];
            let m2 = us[(pick / 7 % us.len() as u64) as usize];
            prop_assert_eq!(s.scale(m1).len(), s.len());
            prop_assert_eq!(s.scale(m1).scale(m2), s.scale(m1 * m2 % n));
        }

        #[test]
        fn subgroup_members_are_closed(n in 1usize..=64, g in 0usize..64) {
            let h = Subgroup::generated_by(n, g);
            let members = h.members();
            prop_assert_eq!(members.len(), h.order());
            for a in members.iter() {
                for b in members.iter() {
                    prop_assert!(members.contains((a + b) % n));
                }
            }
        }
    }
}

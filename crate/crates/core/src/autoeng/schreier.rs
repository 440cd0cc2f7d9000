//! Permutation group order via the Schreier-Sims algorithm.

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Permutation;

struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`; `inverse[p]` is its
    /// inverse. Rebuilt whenever the generator lists at or below this level
    /// change.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

struct Chain {
    degree: usize,
    levels: Vec<Level>,
}

enum TestOutcome {
    Complete,
    InsertedAt(usize),
}

impl Chain {
    fn new(degree: usize) -> Chain {
        Chain { degree, levels: Vec::new() }
    }

    /// Files `g` at the deepest level whose earlier base points it fixes,
    /// extending the base when `g` fixes every current base point.
    fn insert(&mut self, g: Permutation) -> usize {
        debug_assert!(!g.is_identity());
        let mut level = 0;
        while level < self.levels.len() && g.apply(self.levels[level].base) == self.levels[level].base
        {
            level += 1;
        }
        if level == self.levels.len() {
            let base = g.min_moved_point().expect("non-identity permutation moves a point");
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal: Vec::new(),
                inverse: Vec::new(),
            });
        }
        self.levels[level].gens.push(g);
        level
    }

    /// Generators acting at `level`: all those filed at this depth or deeper
    /// fix the base points above it.
    fn gens_at(&self, level: usize) -> Vec<&Permutation> {
        self.levels[level..].iter().flat_map(|l| l.gens.iter()).collect()
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let base = self.levels[level].base;
        let gens: Vec<Permutation> = self.gens_at(level).into_iter().cloned().collect();
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        let mut inverse: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base] = Some(Permutation::identity(self.degree));
        inverse[base] = Some(Permutation::identity(self.degree));
        let mut frontier = vec![base];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = g.apply(p);
                if transversal[q].is_none() {
                    let t = transversal[p].as_ref().unwrap().then(g);
                    inverse[q] = Some(t.inverse());
                    transversal[q] = Some(t);
                    frontier.push(q);
                }
            }
        }
        self.levels[level].transversal = transversal;
        self.levels[level].inverse = inverse;
    }

    /// Sifts `g` through levels `from..`, whose orbit structures must be
    /// current. Returns the non-trivial residue, if any.
    fn sift(&self, from: usize, g: Permutation) -> Option<Permutation> {
        let mut g = g;
        for level in from..self.levels.len() {
            if g.is_identity() {
                return None;
            }
            let image = g.apply(self.levels[level].base);
            match &self.levels[level].inverse[image] {
                None => return Some(g),
                Some(back) => g = g.then(back),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    /// Checks the strong-generator condition at `level`: every Schreier
    /// generator must sift to the identity through the levels below. The
    /// levels below must already be verified (their orbits current).
    fn test_level(&mut self, level: usize) -> TestOutcome {
        self.rebuild_orbit(level);
        let points: Vec<usize> =
            (0..self.degree).filter(|&p| self.levels[level].transversal[p].is_some()).collect();
        let gen_count = self.gens_at(level).len();
        for p in points {
            for gi in 0..gen_count {
                let schreier = {
                    let t = self.levels[level].transversal[p].as_ref().unwrap();
                    let s = self.gens_at(level)[gi];
                    let moved = t.then(s);
                    let image = moved.apply(self.levels[level].base);
                    match &self.levels[level].inverse[image] {
                        None => unreachable!("orbit closed under generators"),
                        Some(back) => moved.then(back),
                    }
                };
                if let Some(residue) = self.sift(level + 1, schreier) {
                    let inserted = self.insert(residue);
                    debug_assert!(inserted > level);
                    return TestOutcome::InsertedAt(inserted);
                }
            }
        }
        TestOutcome::Complete
    }

    fn order(&mut self) -> BigUint {
        let mut order = BigUint::one();
        for level in 0..self.levels.len() {
            self.rebuild_orbit(level);
            let orbit = self.levels[level].transversal.iter().filter(|t| t.is_some()).count();
            order *= BigUint::from(orbit);
        }
        order
    }
}

/// The order of the group generated by `gens` acting on `0..degree`.
pub fn group_order_from_generators(degree: usize, gens: &[Permutation]) -> BigUint {
    let mut chain = Chain::new(degree);
    for g in gens {
        assert_eq!(g.degree(), degree, "degree mismatch");
        if !g.is_identity() {
            chain.insert(g.clone());
        }
    }
    if chain.levels.is_empty() {
        return BigUint::one();
    }
    // Verify bottom-up; an insertion at a deeper level restarts verification
    // from that level.
    let mut level = chain.levels.len() - 1;
    loop {
        match chain.test_level(level) {
            TestOutcome::Complete => {
                if level == 0 {
                    break;
                }
                level -= 1;
            }
            TestOutcome::InsertedAt(at) => level = at,
        }
    }
    chain.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: Vec<u32>) -> Permutation {
        Permutation::from_images(images)
    }

    #[test]
    fn trivial_group() {
        assert_eq!(group_order_from_generators(4, &[]), BigUint::from(1u32));
        assert_eq!(
            group_order_from_generators(4, &[Permutation::identity(4)]),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn cyclic_and_dihedral() {
        let rot = Permutation::from_fn(6, |x| (x + 1) % 6);
        assert_eq!(group_order_from_generators(6, &[rot.clone()]), BigUint::from(6u32));
        let refl = Permutation::from_fn(6, |x| (6 - x) % 6);
        assert_eq!(group_order_from_generators(6, &[rot, refl]), BigUint::from(12u32));
    }

    #[test]
    fn symmetric_and_alternating() {
        let swap = perm(vec![1, 0, 2, 3, 4]);
        let cycle = Permutation::from_fn(5, |x| (x + 1) % 5);
        assert_eq!(group_order_from_generators(5, &[swap, cycle]), BigUint::from(120u32));
        let three_cycle = perm(vec![1, 2, 0, 3, 4]);
        let five_cycle = Permutation::from_fn(5, |x| (x + 1) % 5);
        // <(0 1 2), (0 1 2 3 4)> is the alternating group on 5 points.
        assert_eq!(
            group_order_from_generators(5, &[three_cycle, five_cycle]),
            BigUint::from(60u32)
        );
    }

    #[test]
    fn direct_product_of_symmetric_groups() {
        // Adjacent transpositions inside {0,1,2} and inside {3,4}: S_3 x S_2.
        let gens = vec![
            perm(vec![1, 0, 2, 3, 4]),
            perm(vec![0, 2, 1, 3, 4]),
            perm(vec![0, 1, 2, 4, 3]),
        ];
        assert_eq!(group_order_from_generators(5, &gens), BigUint::from(12u32));
    }

    #[test]
    fn large_symmetric_group() {
        // S_20 from an adjacent transposition and a 20-cycle: 20!.
        let cycle = Permutation::from_fn(20, |x| (x + 1) % 20);
        let swap = Permutation::from_fn(20, |x| match x {
            0 => 1,
            1 => 0,
            other => other,
        });
        let expected: BigUint = (1..=20u32).map(BigUint::from).product();
        assert_eq!(group_order_from_generators(20, &[cycle, swap]), expected);
    }
}

//! Stabilizer chains for permutation groups.
//!
//! Construction is randomized Schreier–Sims (sifting product-replacement
//! samples) followed by a deterministic pass that sifts every Schreier
//! generator of every level. A built [`GroupHandle`] is therefore a verified
//! base and strong generating set: its order is exact, and membership tests
//! are decisions, not estimates.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Seed of the sampler that drives the randomized phase of construction.
const CONSTRUCTION_SEED: u64 = 0x005e_ed0f_c0be;
/// Consecutive trivial sifts that end the randomized phase.
const QUIET_SIFTS: usize = 48;

pub const PR_SLOTS: usize = 10;
pub const PR_BURN_IN: usize = 60;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Indices into `GroupHandle::strong` of the generators fixing all earlier base points.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps `base_point` to `b`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
    /// Schreier tree: generator index and parent point that first reached each orbit point.
    via: Vec<usize>,
    parent: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        let via = vec![usize::MAX; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        inverse[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverse,
            via,
            parent: vec![usize::MAX; degree],
        }
    }

    fn add_generator(&mut self, index: usize, strong: &[Permutation]) {
        self.gens.push(index);
        // Points already in the orbit may reach new points through the new generator.
        let mut frontier: Vec<usize> = Vec::new();
        let g = &strong[index];
        for k in 0..self.orbit.len() {
            let b = self.orbit[k];
            let img = g.raw()[b] as usize;
            if self.transversal[img].is_none() {
                self.insert(img, b, index, strong);
                frontier.push(img);
            }
        }
        let gens = self.gens.clone();
        while let Some(b) = frontier.pop() {
            for &gi in &gens {
                let img = strong[gi].raw()[b] as usize;
                if self.transversal[img].is_none() {
                    self.insert(img, b, gi, strong);
                    frontier.push(img);
                }
            }
        }
    }

    fn insert(&mut self, img: usize, from: usize, gen: usize, strong: &[Permutation]) {
        let u = strong[gen].compose_unchecked(self.transversal[from].as_ref().unwrap());
        self.inverse[img] = Some(u.inverse());
        self.transversal[img] = Some(u);
        self.via[img] = gen;
        self.parent[img] = from;
        self.orbit.push(img);
    }
}

/// A permutation group with a verified base and strong generating set.
#[derive(Clone, Debug)]
pub struct GroupHandle {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
    seed: u64,
}

impl GroupHandle {
    /// Builds a stabilizer chain for the group generated by `gens`.
    pub fn build(gens: &[Permutation]) -> Result<GroupHandle> {
        Self::build_capped(gens, usize::MAX)?.ok_or(Error::Degenerate("unreachable cap"))
    }

    /// As [`GroupHandle::build`], but gives up (returns `None`) once the strong
    /// generating set exceeds `cap` elements.
    pub fn build_capped(gens: &[Permutation], cap: usize) -> Result<Option<GroupHandle>> {
        Self::build_capped_seeded(gens, cap, CONSTRUCTION_SEED)
    }

    /// As [`GroupHandle::build`] with a chosen seed for the randomized phase.
    /// The verified chain, and so every answer, does not depend on it.
    pub fn build_seeded(gens: &[Permutation], seed: u64) -> Result<GroupHandle> {
        Self::build_capped_seeded(gens, usize::MAX, seed)?
            .ok_or(Error::Degenerate("unreachable cap"))
    }

    fn build_capped_seeded(
        gens: &[Permutation],
        cap: usize,
        seed: u64,
    ) -> Result<Option<GroupHandle>> {
        let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut handle = GroupHandle {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
            seed,
        };
        if handle.extend_capped(gens, cap)? {
            Ok(Some(handle))
        } else {
            Ok(None)
        }
    }

    /// Adds generators and completes the chain again. Returns `false` if the
    /// strong generating set outgrew `cap` (the handle is then unusable).
    pub fn extend_capped(&mut self, gens: &[Permutation], cap: usize) -> Result<bool> {
        for g in gens {
            if g.degree() != self.degree {
                return Err(Error::DegreeMismatch(self.degree, g.degree()));
            }
        }
        for g in gens {
            self.generators.push(g.clone());
            let (residue, level) = self.sift_from(g, 0);
            if !residue.is_identity() {
                self.add_strong(residue, level);
            }
            if self.strong.len() > cap {
                return Ok(false);
            }
        }
        if self.generators.iter().all(Permutation::is_identity) {
            return Ok(true);
        }
        self.randomized_phase(cap);
        if self.strong.len() > cap {
            return Ok(false);
        }
        Ok(self.verify(cap))
    }

    fn randomized_phase(&mut self, cap: usize) {
        let mut sampler = ProductReplacement::new(&self.generators, self.seed);
        let mut quiet = 0;
        while quiet < QUIET_SIFTS && self.strong.len() <= cap {
            let x = sampler.next_element();
            let (residue, level) = self.sift_from(&x, 0);
            if residue.is_identity() {
                quiet += 1;
            } else {
                self.add_strong(residue, level);
                quiet = 0;
            }
        }
    }

    /// Deterministic completion: every Schreier generator of every level must
    /// sift to the identity through the levels below it.
    fn verify(&mut self, cap: usize) -> bool {
        let mut i = self.levels.len();
        let mut scratch = Permutation::identity(self.degree);
        while i > 0 {
            let lvl = i - 1;
            match self.first_failing_schreier(lvl, &mut scratch) {
                None => i -= 1,
                Some((residue, level)) => {
                    self.add_strong(residue, level);
                    if self.strong.len() > cap {
                        return false;
                    }
                    // Levels below `level` are untouched; re-check from there.
                    i = self.levels.len().min(level + 1);
                }
            }
        }
        true
    }

    fn first_failing_schreier(
        &self,
        lvl: usize,
        scratch: &mut Permutation,
    ) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &b in &level.orbit {
            let u = level.transversal[b].as_ref().unwrap();
            for &gi in &level.gens {
                let s = &self.strong[gi];
                let img = s.raw()[b] as usize;
                if level.via[img] == gi && level.parent[img] == b {
                    // Schreier tree edge: the Schreier generator is trivial.
                    continue;
                }
                s.compose_into(u, scratch);
                let schreier = level.inverse[img]
                    .as_ref()
                    .unwrap()
                    .compose_unchecked(scratch);
                let (residue, reached) = self.sift_from(&schreier, lvl + 1);
                if !residue.is_identity() {
                    return Some((residue, reached));
                }
            }
        }
        None
    }

    fn add_strong(&mut self, residue: Permutation, level: usize) {
        let index = self.strong.len();
        if level == self.levels.len() {
            let moved = residue
                .raw()
                .iter()
                .enumerate()
                .find(|(i, &x)| *i as u32 != x)
                .map(|(i, _)| i)
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(moved, self.degree));
        }
        self.strong.push(residue);
        for lvl in 0..=level {
            self.levels[lvl].add_generator(index, &self.strong);
        }
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it went all the way).
    fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        let mut buf = Permutation::identity(self.degree);
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.raw()[level.base_point] as usize;
            match &level.inverse[beta] {
                None => return (h, i),
                Some(uinv) => {
                    uinv.compose_into(&h, &mut buf);
                    std::mem::swap(&mut h, &mut buf);
                }
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point + 1).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact group order: the product of basic orbit sizes.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.sift_from(p, 0).0.is_identity())
    }

    /// Product-replacement sample; the same seed always gives the same element.
    pub fn random_element(&self, seed: u64) -> Permutation {
        ProductReplacement::new(&self.generators, seed).next_element()
    }

    pub fn sampler(&self, seed: u64) -> ProductReplacement {
        ProductReplacement::new(&self.generators, seed)
    }

    /// Normal closure of `elems` in this group. `None` when the closure's
    /// strong generating set would exceed `cap`.
    pub fn normal_closure(&self, elems: &[Permutation], cap: usize) -> Result<Option<GroupHandle>> {
        let seeds: Vec<Permutation> = elems.iter().filter(|e| !e.is_identity()).cloned().collect();
        if seeds.is_empty() {
            return Ok(Some(GroupHandle::build(&[Permutation::identity(
                self.degree,
            )])?));
        }
        let Some(mut closure) = GroupHandle::build_capped(&seeds, cap)? else {
            return Ok(None);
        };
        let inverses: Vec<Permutation> = self.generators.iter().map(Permutation::inverse).collect();
        let mut checked = 0;
        while checked < closure.generators.len() {
            let h = closure.generators[checked].clone();
            checked += 1;
            for (g, ginv) in self.generators.iter().zip(&inverses) {
                let conj = ginv.compose_unchecked(&h).compose_unchecked(g);
                if !closure.contains(&conj)? && !closure.extend_capped(&[conj], cap)? {
                    return Ok(None);
                }
            }
        }
        Ok(Some(closure))
    }

    /// Derived subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self, cap: usize) -> Result<Option<GroupHandle>> {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a
                    .inverse()
                    .compose_unchecked(&b.inverse())
                    .compose_unchecked(a)
                    .compose_unchecked(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms, cap)
    }
}

/// Product-replacement sampler with an accumulator ("rattle" variant).
#[derive(Clone, Debug)]
pub struct ProductReplacement {
    slots: Vec<Permutation>,
    accumulator: Permutation,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    pub fn new(gens: &[Permutation], seed: u64) -> Self {
        let degree = gens.first().map_or(0, Permutation::degree);
        let mut slots = Vec::with_capacity(PR_SLOTS);
        if gens.is_empty() {
            slots.push(Permutation::identity(degree));
        }
        while slots.len() < PR_SLOTS {
            for g in gens {
                if slots.len() < PR_SLOTS {
                    slots.push(g.clone());
                }
            }
        }
        let mut pr = ProductReplacement {
            slots,
            accumulator: Permutation::identity(degree),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..PR_BURN_IN {
            pr.step();
        }
        pr
    }

    fn step(&mut self) {
        let n = self.slots.len();
        let i = self.rng.random_range(0..n);
        let mut j = self.rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let rhs = if self.rng.random::<bool>() {
            self.slots[j].clone()
        } else {
            self.slots[j].inverse()
        };
        let updated = if self.rng.random::<bool>() {
            self.slots[i].compose_unchecked(&rhs)
        } else {
            rhs.compose_unchecked(&self.slots[i])
        };
        self.slots[i] = updated;
        self.accumulator = self.accumulator.compose_unchecked(&self.slots[i]);
    }

    pub fn next_element(&mut self) -> Permutation {
        self.step();
        self.accumulator.clone()
    }
}

impl Iterator for ProductReplacement {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        Some(self.next_element())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn factorial(n: u32) -> BigUint {
        (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
    }

    fn symmetric(n: usize) -> GroupHandle {
        let long = format!(
            "({})",
            (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
        );
        GroupHandle::build(&[
            parse_cycles("(1 2)", n).unwrap(),
            parse_cycles(&long, n).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn small_orders() {
        let c2 = GroupHandle::build(&[parse_cycles("(1 2)", 2).unwrap()]).unwrap();
        assert_eq!(c2.order(), BigUint::from(2u32));
        let s3 = GroupHandle::build(&[
            parse_cycles("(1 2)", 3).unwrap(),
            parse_cycles("(1 2 3)", 3).unwrap(),
        ])
        .unwrap();
        assert_eq!(s3.order(), BigUint::from(6u32));
    }

    #[test]
    fn symmetric_24_order_and_membership() {
        let s24 = symmetric(24);
        assert_eq!(s24.order(), factorial(24));
        let p = parse_cycles("(3 17 9)(1 24)(5 6 7 8 10)", 24).unwrap();
        assert!(s24.contains(&p).unwrap());
        assert!(s24.contains(&Permutation::identity(24)).unwrap());
        assert_eq!(
            s24.contains(&Permutation::identity(5)),
            Err(Error::DegreeMismatch(24, 5))
        );
    }

    #[test]
    fn non_members_are_rejected() {
        // A4 on 4 points: transpositions are not members.
        let a4 = GroupHandle::build(&[
            parse_cycles("(1 2 3)", 4).unwrap(),
            parse_cycles("(2 3 4)", 4).unwrap(),
        ])
        .unwrap();
        assert_eq!(a4.order(), BigUint::from(12u32));
        assert!(!a4.contains(&parse_cycles("(1 2)", 4).unwrap()).unwrap());
        // Moving a point outside the first basic orbit.
        let g = GroupHandle::build(&[parse_cycles("(1 2)", 4).unwrap()]).unwrap();
        assert!(!g.contains(&parse_cycles("(1 3)", 4).unwrap()).unwrap());
    }

    #[test]
    fn trivial_group() {
        let g = GroupHandle::build(&[Permutation::identity(6)]).unwrap();
        assert_eq!(g.order(), BigUint::from(1u32));
        assert!(g.random_element(3).is_identity());
        assert!(g.random_element(99).is_identity());
        assert!(g.base().is_empty());
    }

    #[test]
    fn build_errors() {
        assert_eq!(GroupHandle::build(&[]).unwrap_err(), Error::NoGenerators);
        assert_eq!(
            GroupHandle::build(&[Permutation::identity(2), Permutation::identity(3)]).unwrap_err(),
            Error::DegreeMismatch(2, 3)
        );
    }

    #[test]
    fn random_element_is_deterministic_member() {
        let s24 = symmetric(24);
        let a = s24.random_element(42);
        let b = s24.random_element(42);
        assert_eq!(a, b);
        assert!(s24.contains(&a).unwrap());
    }

    #[test]
    fn sign_statistics_of_samples() {
        let s24 = symmetric(24);
        let even = s24
            .sampler(7)
            .take(10_000)
            .filter(|p| p.sign() == 1)
            .count();
        let frac = even as f64 / 10_000.0;
        assert!((0.45..=0.55).contains(&frac), "even fraction {frac}");
    }

    #[test]
    fn cyclic_group_order_matches_element_order() {
        let p = parse_cycles("(1 2 3 4 5 6)(7 8 9 10)(11 12 13 14 15)", 15).unwrap();
        let g = GroupHandle::build(std::slice::from_ref(&p)).unwrap();
        assert_eq!(g.order(), p.order());
        assert_eq!(g.order(), BigUint::from(60u32));
    }

    #[test]
    fn derived_subgroups() {
        let s24 = symmetric(24);
        let d = s24.derived_subgroup(10_000).unwrap().unwrap();
        assert_eq!(s24.order() / d.order(), BigUint::from(2u32));
        let a5 = GroupHandle::build(&[
            parse_cycles("(1 2 3 4 5)", 5).unwrap(),
            parse_cycles("(1 2 3)", 5).unwrap(),
        ])
        .unwrap();
        assert_eq!(a5.order(), BigUint::from(60u32));
        let d5 = a5.derived_subgroup(10_000).unwrap().unwrap();
        assert_eq!(d5.order(), BigUint::from(60u32));
    }

    #[test]
    fn capped_build_reports_inconclusive() {
        let long = parse_cycles(
            &format!(
                "({})",
                (1..=30)
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            30,
        )
        .unwrap();
        let gens = [parse_cycles("(1 2)", 30).unwrap(), long];
        assert!(GroupHandle::build_capped(&gens, 3).unwrap().is_none());
    }
}

//! Exact computations in the group generated by a [`GeneratorSet`].
//!
//! Two independent methods are provided: breadth-first enumeration of every
//! element, and a deterministic Schreier–Sims stabilizer chain that gives the
//! order and decides membership by sifting without listing elements.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::generators::GeneratorSet;
use crate::perm::{PermError, Permutation};
use crate::store::PermStore;

/// Default element cap for enumeration.
pub const DEFAULT_ENUM_CAP: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("the enumeration cap must be at least 1")]
    ZeroCap,
    #[error("enumeration cap exceeded after {reached} elements")]
    CapExceeded { reached: usize },
    #[error("invalid stabilizer chain data: {0}")]
    InvalidChain(&'static str),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Every element of the group, in breadth-first discovery order.
#[derive(Debug, Clone)]
pub struct Enumeration {
    store: PermStore,
}

impl Enumeration {
    pub fn order(&self) -> usize {
        self.store.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        self.store.as_slice()
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.store.contains(perm)
    }

    /// Rebuilds an enumeration from a stored element list, checking it is
    /// closed under the generators and starts with the identity.
    pub fn from_elements(
        gens: &GeneratorSet,
        elements: Vec<Permutation>,
    ) -> Result<Enumeration, GroupError> {
        let mut store = PermStore::new();
        for e in elements {
            if e.degree() != gens.degree() {
                return Err(GroupError::InvalidChain(
                    "element degree differs from generators",
                ));
            }
            if !store.insert(e).1 {
                return Err(GroupError::InvalidChain("repeated element"));
            }
        }
        if store.is_empty() || !store.get(0).is_identity() {
            return Err(GroupError::InvalidChain(
                "element list must start with the identity",
            ));
        }
        let closed = store.as_slice().iter().all(|g| {
            gens.permutations()
                .iter()
                .all(|s| store.contains(&g.compose_unchecked(s)))
        });
        if !closed {
            return Err(GroupError::InvalidChain("element list is not closed"));
        }
        Ok(Enumeration { store })
    }
}

/// Breadth-first closure of the identity under right multiplication by the
/// generators, visited in FIFO order with generators in list order.
///
/// Fails once more than `cap` distinct elements would be stored; the error
/// reports how many were stored.
pub fn enumerate(gens: &GeneratorSet, cap: usize) -> Result<Enumeration, GroupError> {
    if cap == 0 {
        return Err(GroupError::ZeroCap);
    }
    let mut store = PermStore::new();
    store.insert(Permutation::identity(gens.degree())?);
    let mut head = 0;
    while head < store.len() {
        let current = store.get(head).clone();
        head += 1;
        for s in gens.permutations() {
            let next = current.compose_unchecked(s);
            if store.contains(&next) {
                continue;
            }
            if store.len() == cap {
                return Err(GroupError::CapExceeded { reached: cap });
            }
            store.insert(next);
        }
    }
    Ok(Enumeration { store })
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// position of each point in `orbit`, or `NONE`
    slot: Vec<u32>,
    /// `reps[k]` maps `base` to `orbit[k]`
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
}

const NONE: u32 = u32::MAX;

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut slot = vec![NONE; degree];
        slot[base] = 0;
        let id = Permutation::from_raw((0..degree as u32).collect());
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            slot,
            reps: vec![id.clone()],
            reps_inv: vec![id],
        }
    }

    fn push_orbit_point(&mut self, point: usize, rep: Permutation) -> usize {
        let k = self.orbit.len();
        self.slot[point] = k as u32;
        self.orbit.push(point);
        self.reps_inv.push(rep.inverse());
        self.reps.push(rep);
        k
    }

    /// Closes the orbit of `base` under `gens` without producing Schreier
    /// generators.
    fn rebuild_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            for s in 0..self.gens.len() {
                let img = self.gens[s].apply(self.orbit[k]);
                if self.slot[img] == NONE {
                    let rep = self.gens[s].compose_unchecked(&self.reps[k]);
                    self.push_orbit_point(img, rep);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set built by deterministic Schreier–Sims.
///
/// Each new level takes as its base point the smallest point moved by the
/// element that forced the level, so bases come out in a reproducible order.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &GeneratorSet) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree: gens.degree(),
            levels: Vec::new(),
        };
        for g in gens.permutations() {
            chain.extend(0, g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// `(base point, generators)` for each level, top down.
    pub fn levels(&self) -> impl Iterator<Item = (usize, &[Permutation])> + '_ {
        self.levels.iter().map(|l| (l.base, l.gens.as_slice()))
    }

    pub fn contains(&self, perm: &Permutation) -> Result<bool, GroupError> {
        if perm.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: perm.degree(),
                right: self.degree,
            }
            .into());
        }
        Ok(self.sift(0, perm).is_identity())
    }

    /// Strips coset representatives from `perm` level by level, starting at
    /// `from`, and returns what is left.
    fn sift(&self, from: usize, perm: &Permutation) -> Permutation {
        let mut h = perm.clone();
        for level in &self.levels[from.min(self.levels.len())..] {
            let k = level.slot[h.apply(level.base)];
            if k == NONE {
                return h;
            }
            h = level.reps_inv[k as usize].compose_unchecked(&h);
        }
        h
    }

    fn extend(&mut self, depth: usize, g: Permutation) {
        if self.sift(depth, &g).is_identity() {
            return;
        }
        if depth == self.levels.len() {
            let base = g
                .first_moved_point()
                .expect("non-member is not the identity");
            self.levels.push(Level::new(base, self.degree));
        }
        let level = &mut self.levels[depth];
        level.gens.push(g);
        let new_gen = level.gens.len() - 1;
        let mut work: VecDeque<(usize, usize)> =
            (0..level.orbit.len()).map(|k| (k, new_gen)).collect();
        while let Some((k, s)) = work.pop_front() {
            let level = &mut self.levels[depth];
            let gen = &level.gens[s];
            let img = gen.apply(level.orbit[k]);
            let moved = gen.compose_unchecked(&level.reps[k]);
            match level.slot[img] {
                NONE => {
                    let new_k = level.push_orbit_point(img, moved);
                    work.extend((0..level.gens.len()).map(|t| (new_k, t)));
                }
                existing => {
                    let schreier = level.reps_inv[existing as usize].compose_unchecked(&moved);
                    if !schreier.is_identity() {
                        self.extend(depth + 1, schreier);
                    }
                }
            }
        }
    }

    /// Rebuilds a chain from stored level data and verifies it: every level's
    /// generators fix the earlier base points, every Schreier generator sifts
    /// through the levels below, and the top level generators are exactly the
    /// non-redundant members of `gens`.
    pub fn from_levels(
        gens: &GeneratorSet,
        stored: Vec<(usize, Vec<Permutation>)>,
    ) -> Result<StabilizerChain, GroupError> {
        let degree = gens.degree();
        let mut levels: Vec<Level> = Vec::with_capacity(stored.len());
        for (base, level_gens) in stored {
            if base >= degree || levels.iter().any(|l| l.base == base) {
                return Err(GroupError::InvalidChain("bad base point"));
            }
            if level_gens.is_empty() {
                return Err(GroupError::InvalidChain("empty level"));
            }
            for g in &level_gens {
                if g.degree() != degree {
                    return Err(GroupError::InvalidChain("generator degree"));
                }
                if levels.iter().any(|l| g.apply(l.base) != l.base) {
                    return Err(GroupError::InvalidChain(
                        "generator moves an earlier base point",
                    ));
                }
            }
            let mut level = Level::new(base, degree);
            level.gens = level_gens;
            level.rebuild_orbit();
            levels.push(level);
        }
        if let Some(top) = levels.first() {
            if top.gens.iter().any(|g| !gens.permutations().contains(g)) {
                return Err(GroupError::InvalidChain(
                    "top level generators are not from the set",
                ));
            }
        }
        let chain = StabilizerChain { degree, levels };
        for g in gens.permutations() {
            if !chain.sift(0, g).is_identity() {
                return Err(GroupError::InvalidChain("generator does not sift"));
            }
        }
        for (depth, level) in chain.levels.iter().enumerate() {
            for (k, rep) in level.reps.iter().enumerate() {
                for gen in &level.gens {
                    let moved = gen.compose_unchecked(rep);
                    let img = gen.apply(level.orbit[k]);
                    let schreier =
                        level.reps_inv[level.slot[img] as usize].compose_unchecked(&moved);
                    if !chain.sift(depth + 1, &schreier).is_identity() {
                        return Err(GroupError::InvalidChain("Schreier generator does not sift"));
                    }
                }
            }
        }
        Ok(chain)
    }
}

/// Exact order of the generated group, via the stabilizer chain.
pub fn order(gens: &GeneratorSet) -> BigUint {
    StabilizerChain::new(gens).order()
}

/// Membership of `target` in the generated group, by sifting.
pub fn contains(gens: &GeneratorSet, target: &Permutation) -> Result<bool, GroupError> {
    StabilizerChain::new(gens).contains(target)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupMethod {
    Enumerated,
    StabilizerChain,
}

impl GroupMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupMethod::Enumerated => "enumerated",
            GroupMethod::StabilizerChain => "stabilizer_chain",
        }
    }
}

/// A finished group computation; immutable and safe to share between threads.
#[derive(Debug, Clone)]
pub struct GroupHandle {
    chain: StabilizerChain,
    elements: Option<Enumeration>,
}

impl GroupHandle {
    /// Builds the stabilizer chain; when the order fits within `cap` the
    /// elements are enumerated as well.
    pub fn build(gens: &GeneratorSet, cap: usize) -> Result<GroupHandle, GroupError> {
        if cap == 0 {
            return Err(GroupError::ZeroCap);
        }
        let chain = StabilizerChain::new(gens);
        let elements = if chain.order() <= BigUint::from(cap) {
            Some(enumerate(gens, cap)?)
        } else {
            None
        };
        Ok(GroupHandle { chain, elements })
    }

    pub fn from_parts(chain: StabilizerChain, elements: Option<Enumeration>) -> GroupHandle {
        GroupHandle { chain, elements }
    }

    pub fn method(&self) -> GroupMethod {
        if self.elements.is_some() {
            GroupMethod::Enumerated
        } else {
            GroupMethod::StabilizerChain
        }
    }

    pub fn order(&self) -> BigUint {
        match &self.elements {
            Some(e) => BigUint::from(e.order()),
            None => self.chain.order(),
        }
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn elements(&self) -> Option<&Enumeration> {
        self.elements.as_ref()
    }

    pub fn contains(&self, target: &Permutation) -> Result<bool, GroupError> {
        match &self.elements {
            Some(e) => {
                if target.degree() != self.chain.degree() {
                    return Err(PermError::DegreeMismatch {
                        left: target.degree(),
                        right: self.chain.degree(),
                    }
                    .into());
                }
                Ok(e.contains(target))
            }
            None => self.chain.contains(target),
        }
    }
}

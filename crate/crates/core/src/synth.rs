//! Shortest-word synthesis over a generator set.
//!
//! A [`Word`] is read left to right as a circuit: the first letter acts on
//! the input first, so `[a, b, c]` evaluates to `c ∘ b ∘ a`.
//!
//! [`synthesize`] first runs the parity test, then exact membership, and only
//! then searches. The search is breadth-first from both ends at once: forward
//! from the identity by left multiplication with generators, backward from
//! the target by left multiplication with generator inverses. Among all
//! shortest words it returns the lexicographically smallest sequence of
//! generator indices.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::generators::GeneratorSet;
use crate::group::{GroupMethod, StabilizerChain, DEFAULT_ENUM_CAP};
use crate::parity::{parity_feasible, ParityError, ParityVerdict};
use crate::perm::{PermError, Permutation};
use crate::store::PermStore;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SynthError {
    #[error("unknown generator {0:?}")]
    UnknownLetter(String),
    #[error("max depth must be at least 1")]
    ZeroDepth,
    #[error("search stored {reached} elements, reaching the cap")]
    CapExceeded { reached: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl From<ParityError> for SynthError {
    fn from(e: ParityError) -> Self {
        match e {
            ParityError::Perm(p) => SynthError::Perm(p),
            other => unreachable!("parity test only fails on degree mismatch: {other}"),
        }
    }
}

/// A sequence of generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<String>,
}

impl Word {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Word {
        Word {
            letters: letters.into_iter().map(Into::into).collect(),
        }
    }

    /// Splits on whitespace.
    pub fn parse(text: &str) -> Word {
        Word::new(text.split_whitespace())
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn from_indices(gens: &GeneratorSet, indices: &[usize]) -> Word {
        Word::new(indices.iter().map(|&i| gens.names()[i].clone()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(letter)?;
        }
        Ok(())
    }
}

pub fn evaluate_word(gens: &GeneratorSet, word: &Word) -> Result<Permutation, SynthError> {
    let mut acc = Permutation::identity(gens.degree())?;
    for letter in word.letters() {
        let index = gens
            .index_of(letter)
            .ok_or_else(|| SynthError::UnknownLetter(letter.clone()))?;
        acc = gens.permutations()[index].compose_unchecked(&acc);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthesisResult {
    Synthesized(Word),
    /// The target is odd and every generator is even.
    ParityObstructed(ParityVerdict),
    /// Exhaustive methods found the target outside a group of `order` elements.
    NotInGroup {
        order: BigUint,
        method: NotInGroupMethod,
    },
    /// No word of length at most `max_depth` exists.
    DepthExceeded {
        max_depth: usize,
    },
}

/// How a `NotInGroup` outcome was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotInGroupMethod {
    /// Sifting failed in the stabilizer chain.
    Membership(GroupMethod),
    /// The search explored every element reachable from one end.
    ExhaustedSearch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthesisOptions {
    pub max_depth: usize,
    pub check_parity: bool,
    pub check_membership: bool,
    /// Upper bound on elements stored by both search frontiers together.
    pub node_cap: usize,
}

impl SynthesisOptions {
    pub fn with_max_depth(max_depth: usize) -> SynthesisOptions {
        SynthesisOptions {
            max_depth,
            ..SynthesisOptions::default()
        }
    }
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        SynthesisOptions {
            max_depth: 64,
            check_parity: true,
            check_membership: true,
            node_cap: DEFAULT_ENUM_CAP,
        }
    }
}

pub fn synthesize(
    gens: &GeneratorSet,
    target: &Permutation,
    options: &SynthesisOptions,
) -> Result<SynthesisResult, SynthError> {
    if target.degree() != gens.degree() {
        return Err(PermError::DegreeMismatch {
            left: target.degree(),
            right: gens.degree(),
        }
        .into());
    }
    if options.max_depth == 0 {
        return Err(SynthError::ZeroDepth);
    }
    if options.check_parity {
        let verdict = parity_feasible(target, gens)?;
        if verdict.obstructed {
            return Ok(SynthesisResult::ParityObstructed(verdict));
        }
    }
    if options.check_membership {
        let chain = StabilizerChain::new(gens);
        let member = chain.contains(target).expect("degrees checked above");
        if !member {
            return Ok(SynthesisResult::NotInGroup {
                order: chain.order(),
                method: NotInGroupMethod::Membership(GroupMethod::StabilizerChain),
            });
        }
    }
    Search::new(gens, target, options).run()
}

struct Side {
    store: PermStore,
    depth: Vec<u32>,
    /// start index of each completed layer in `store`
    layer_starts: Vec<usize>,
}

impl Side {
    fn new(root: Permutation) -> Side {
        let mut store = PermStore::new();
        store.insert(root);
        Side {
            store,
            depth: vec![0],
            layer_starts: vec![0],
        }
    }

    fn current_depth(&self) -> usize {
        self.layer_starts.len() - 1
    }

    fn layer(&self, d: usize) -> core::ops::Range<usize> {
        let start = self.layer_starts[d];
        let end = self
            .layer_starts
            .get(d + 1)
            .copied()
            .unwrap_or(self.store.len());
        start..end
    }

    fn depth_of(&self, p: &Permutation) -> Option<usize> {
        self.store.get_index(p).map(|i| self.depth[i] as usize)
    }
}

struct Search<'a> {
    gens: &'a GeneratorSet,
    inverses: Vec<Permutation>,
    target: &'a Permutation,
    options: &'a SynthesisOptions,
}

impl<'a> Search<'a> {
    fn new(gens: &'a GeneratorSet, target: &'a Permutation, options: &'a SynthesisOptions) -> Self {
        Search {
            gens,
            inverses: gens
                .permutations()
                .iter()
                .map(Permutation::inverse)
                .collect(),
            target,
            options,
        }
    }

    fn run(&self) -> Result<SynthesisResult, SynthError> {
        let mut forward = Side::new(Permutation::identity(self.gens.degree())?);
        let mut backward = Side::new(self.target.clone());
        if self.target.is_identity() {
            return Ok(SynthesisResult::Synthesized(Word::default()));
        }
        loop {
            let (a, b) = (forward.current_depth(), backward.current_depth());
            if a + b + 1 > self.options.max_depth {
                return Ok(SynthesisResult::DepthExceeded {
                    max_depth: self.options.max_depth,
                });
            }
            let grow_forward = forward.layer(a).len() <= backward.layer(b).len();
            let (side, other, letters) = if grow_forward {
                (&mut forward, &backward, self.gens.permutations())
            } else {
                (&mut backward, &forward, self.inverses.as_slice())
            };
            let met = self.expand(side, other, letters)?;
            if met {
                return Ok(SynthesisResult::Synthesized(
                    self.decode(&forward, &backward),
                ));
            }
            let exhausted = if grow_forward { &forward } else { &backward };
            if exhausted.layer(exhausted.current_depth()).is_empty() {
                return Ok(SynthesisResult::NotInGroup {
                    order: BigUint::from(exhausted.store.len()),
                    method: NotInGroupMethod::ExhaustedSearch,
                });
            }
        }
    }

    /// Adds one layer to `side`; reports whether it touches `other`.
    fn expand(
        &self,
        side: &mut Side,
        other: &Side,
        letters: &[Permutation],
    ) -> Result<bool, SynthError> {
        let last = side.layer(side.current_depth());
        let next_depth = side.current_depth() as u32 + 1;
        side.layer_starts.push(side.store.len());
        let mut met = false;
        for index in last {
            let node = side.store.get(index).clone();
            for letter in letters {
                let next = letter.compose_unchecked(&node);
                if side.store.contains(&next) {
                    continue;
                }
                if side.store.len() + other.store.len() >= self.options.node_cap {
                    return Err(SynthError::CapExceeded {
                        reached: side.store.len() + other.store.len(),
                    });
                }
                met |= other.store.contains(&next);
                side.store.insert(next);
                side.depth.push(next_depth);
            }
        }
        Ok(met)
    }

    /// Walks from the identity, always taking the smallest generator that
    /// stays on some shortest path to the target.
    fn decode(&self, forward: &Side, backward: &Side) -> Word {
        let a = forward.current_depth();
        let b = backward.current_depth();
        let gens = self.gens.permutations();
        // on_path[i]: forward node i lies on a shortest identity-to-target path
        let mut on_path = vec![false; forward.store.len()];
        for i in forward.layer(a) {
            on_path[i] = backward.store.contains(forward.store.get(i));
        }
        for depth in (0..a).rev() {
            for i in forward.layer(depth) {
                let node = forward.store.get(i);
                on_path[i] = gens.iter().any(|s| {
                    forward
                        .store
                        .get_index(&s.compose_unchecked(node))
                        .is_some_and(|j| forward.depth[j] as usize == depth + 1 && on_path[j])
                });
            }
        }
        let mut indices = Vec::with_capacity(a + b);
        let mut node = forward.store.get(0).clone();
        for depth in 0..a {
            let (index, next) = gens
                .iter()
                .enumerate()
                .find_map(|(k, s)| {
                    let next = s.compose_unchecked(&node);
                    let j = forward.store.get_index(&next)?;
                    (forward.depth[j] as usize == depth + 1 && on_path[j]).then_some((k, next))
                })
                .expect("a shortest path continues from every on-path node");
            indices.push(index);
            node = next;
        }
        for remaining in (0..b).rev() {
            let (index, next) = gens
                .iter()
                .enumerate()
                .find_map(|(k, s)| {
                    let next = s.compose_unchecked(&node);
                    (backward.depth_of(&next) == Some(remaining)).then_some((k, next))
                })
                .expect("backward layers lead to the target");
            indices.push(index);
            node = next;
        }
        debug_assert_eq!(&node, self.target);
        Word::from_indices(self.gens, &indices)
    }
}

impl fmt::Display for SynthesisResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthesisResult::Synthesized(w) if w.is_empty() => {
                f.write_str("synthesized: empty word")
            }
            SynthesisResult::Synthesized(w) => write!(f, "synthesized: {w}"),
            SynthesisResult::ParityObstructed(_) => f.write_str("parity obstructed"),
            SynthesisResult::NotInGroup { order, .. } => {
                write!(f, "not in the generated group of order {order}")
            }
            SynthesisResult::DepthExceeded { max_depth } => {
                write!(f, "no word of length at most {max_depth}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{cnot1, cnot2, swap_perm};

    fn cnots(d: usize) -> GeneratorSet {
        GeneratorSet::new(vec![
            ("cnot1", cnot1(d).unwrap()),
            ("cnot2", cnot2(d).unwrap()),
        ])
        .unwrap()
    }

    #[test]
    fn qubit_swap_is_three_cnots() {
        let result = synthesize(
            &cnots(2),
            &swap_perm(2).unwrap(),
            &SynthesisOptions::with_max_depth(10),
        )
        .unwrap();
        assert_eq!(
            result,
            SynthesisResult::Synthesized(Word::parse("cnot1 cnot2 cnot1"))
        );
    }

    #[test]
    fn qutrit_swap_is_parity_obstructed() {
        let result = synthesize(
            &cnots(3),
            &swap_perm(3).unwrap(),
            &SynthesisOptions::with_max_depth(20),
        )
        .unwrap();
        assert!(matches!(result, SynthesisResult::ParityObstructed(v) if v.obstructed));
    }

    #[test]
    fn identity_is_the_empty_word() {
        let result = synthesize(
            &cnots(3),
            &Permutation::identity(9).unwrap(),
            &SynthesisOptions::with_max_depth(1),
        )
        .unwrap();
        assert_eq!(result, SynthesisResult::Synthesized(Word::default()));
    }

    #[test]
    fn evaluation_order() {
        let gens = cnots(2);
        assert_eq!(
            evaluate_word(&gens, &Word::parse("cnot1 cnot2 cnot1")).unwrap(),
            swap_perm(2).unwrap()
        );
        assert!(evaluate_word(&gens, &Word::default())
            .unwrap()
            .is_identity());
        assert!(evaluate_word(&cnots(3), &Word::parse("cnot1 cnot1 cnot1"))
            .unwrap()
            .is_identity());
        // [cnot1, cnot2] is cnot2 ∘ cnot1
        assert_eq!(
            evaluate_word(&cnots(3), &Word::parse("cnot1 cnot2")).unwrap(),
            cnot2(3).unwrap().compose(&cnot1(3).unwrap()).unwrap()
        );
        assert_eq!(
            evaluate_word(&gens, &Word::parse("cnot3")),
            Err(SynthError::UnknownLetter("cnot3".into()))
        );
    }

    #[test]
    fn non_involutive_generators() {
        // cnot1(3)^-1 = cnot1^2 needs two letters
        let gens = cnots(3);
        let target = cnot1(3).unwrap().inverse();
        let result = synthesize(&gens, &target, &SynthesisOptions::with_max_depth(5)).unwrap();
        assert_eq!(
            result,
            SynthesisResult::Synthesized(Word::parse("cnot1 cnot1"))
        );
    }

    #[test]
    fn raw_search_outcomes() {
        let raw = SynthesisOptions {
            max_depth: 2,
            check_parity: false,
            check_membership: false,
            node_cap: 1000,
        };
        let gens = cnots(2);
        assert_eq!(
            synthesize(&gens, &swap_perm(2).unwrap(), &raw).unwrap(),
            SynthesisResult::DepthExceeded { max_depth: 2 }
        );
        let deep = SynthesisOptions {
            max_depth: 50,
            ..raw
        };
        let result = synthesize(&cnots(3), &swap_perm(3).unwrap(), &deep).unwrap();
        assert_eq!(
            result,
            SynthesisResult::NotInGroup {
                order: BigUint::from(24u32),
                method: NotInGroupMethod::ExhaustedSearch
            }
        );
        let tiny = SynthesisOptions {
            node_cap: 4,
            ..deep
        };
        assert!(matches!(
            synthesize(&cnots(3), &swap_perm(3).unwrap(), &tiny),
            Err(SynthError::CapExceeded { .. })
        ));
    }

    #[test]
    fn membership_certificate() {
        // even target outside the group: the parity test passes, membership fails
        let gens = GeneratorSet::new(vec![("cnot1", cnot1(3).unwrap())]).unwrap();
        let result = synthesize(&gens, &cnot2(3).unwrap(), &SynthesisOptions::default()).unwrap();
        assert_eq!(
            result,
            SynthesisResult::NotInGroup {
                order: BigUint::from(3u32),
                method: NotInGroupMethod::Membership(GroupMethod::StabilizerChain)
            }
        );
    }

    #[test]
    fn rejects_bad_input() {
        let gens = cnots(2);
        assert_eq!(
            synthesize(
                &gens,
                &Permutation::identity(4).unwrap(),
                &SynthesisOptions::with_max_depth(0)
            ),
            Err(SynthError::ZeroDepth)
        );
        assert!(matches!(
            synthesize(
                &gens,
                &Permutation::identity(9).unwrap(),
                &SynthesisOptions::default()
            ),
            Err(SynthError::Perm(PermError::DegreeMismatch { .. }))
        ));
    }
}

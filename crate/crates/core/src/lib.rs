//! Qudit CNOT, SWAP and subsystem-cycle gates as permutations of basis
//! states, with exact tools to decide whether a target gate is a product of
//! given gates and to find a shortest such product.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod cycles;
pub mod diagram;
pub mod gates;
pub mod generators;
pub mod group;
pub mod matrix;
pub mod notation;
pub mod parity;
pub mod perm;
pub mod store;
pub mod synth;

pub use cycles::CycleData;
pub use gates::{
    cnot1, cnot2, cyclic_shift, embed, swap_perm, GateError, GateId, GateSpecError, QuditSystem,
};
pub use generators::{GeneratorError, GeneratorSet};
pub use group::{enumerate, Enumeration, GroupError, GroupHandle, GroupMethod, StabilizerChain};
pub use matrix::{to_matrix, Convention, PermutationMatrix};
pub use parity::{parity_feasible, GateStats, ParityError, ParityVerdict, StatsSource};
pub use perm::{compose, PermError, Permutation, Sign};
pub use synth::{evaluate_word, synthesize, SynthError, SynthesisOptions, SynthesisResult, Word};

pub use num_bigint::BigUint;

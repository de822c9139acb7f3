mod common;

use common::*;
use qgf_core::synth::NotInGroupMethod;
use qgf_core::{
    cnot1, cnot2, enumerate, evaluate_word, swap_perm, synthesize, GeneratorSet, Permutation,
    SynthesisOptions, SynthesisResult, Word,
};

fn cnots(d: usize) -> GeneratorSet {
    GeneratorSet::new([("cnot1", cnot1(d).unwrap()), ("cnot2", cnot2(d).unwrap())]).unwrap()
}

fn raw(gens: &GeneratorSet) -> Vec<Vec<usize>> {
    gens.permutations()
        .iter()
        .map(Permutation::to_vec)
        .collect()
}

/// Lexicographically first word of minimum length, by trying every word in
/// order of length.
fn brute_lex_first(gens: &GeneratorSet, target: &Permutation, limit: usize) -> Option<Vec<usize>> {
    let raw = raw(gens);
    (0..=limit).find_map(|len| {
        words_of_length(gens.len(), len)
            .into_iter()
            .find(|w| evaluate_naive(&raw, w) == target.to_vec())
    })
}

#[test]
fn every_element_of_small_groups_round_trips() {
    for gens in [
        cnots(2),
        cnots(3),
        GeneratorSet::new([
            ("cnot1", cnot1(2).unwrap()),
            ("cnot2", cnot2(2).unwrap()),
            ("swap", swap_perm(2).unwrap()),
        ])
        .unwrap(),
    ] {
        let raw = raw(&gens);
        let e = enumerate(&gens, 1000).unwrap();
        for target in e.elements() {
            let result = synthesize(&gens, target, &SynthesisOptions::with_max_depth(30)).unwrap();
            let SynthesisResult::Synthesized(word) = result else {
                panic!("member not synthesized: {result:?}");
            };
            assert_eq!(&evaluate_word(&gens, &word).unwrap(), target);
            let shortest = brute_shortest_length(&raw, &target.to_vec(), 30).unwrap();
            assert_eq!(word.len(), shortest);
        }
    }
}

#[test]
fn ties_break_lexicographically() {
    for gens in [cnots(2), cnots(3)] {
        let e = enumerate(&gens, 1000).unwrap();
        for target in e.elements() {
            let SynthesisResult::Synthesized(word) =
                synthesize(&gens, target, &SynthesisOptions::with_max_depth(30)).unwrap()
            else {
                unreachable!()
            };
            let limit = word.len();
            if limit > 8 {
                continue;
            }
            let expected = brute_lex_first(&gens, target, limit).unwrap();
            let indices: Vec<usize> = word
                .letters()
                .iter()
                .map(|l| gens.index_of(l).unwrap())
                .collect();
            assert_eq!(indices, expected, "target {target}");
        }
    }
}

#[test]
fn no_false_negatives_at_depth() {
    let gens = cnots(3);
    let raw = raw(&gens);
    let e = enumerate(&gens, 1000).unwrap();
    for target in e.elements() {
        let shortest = brute_shortest_length(&raw, &target.to_vec(), 30).unwrap();
        let options = SynthesisOptions {
            max_depth: shortest.max(1),
            check_parity: false,
            check_membership: false,
            ..SynthesisOptions::default()
        };
        let result = synthesize(&gens, target, &options).unwrap();
        assert!(matches!(result, SynthesisResult::Synthesized(ref w) if w.len() == shortest));
        if shortest > 1 {
            let tight = SynthesisOptions {
                max_depth: shortest - 1,
                ..options
            };
            assert!(matches!(
                synthesize(&gens, target, &tight).unwrap(),
                SynthesisResult::DepthExceeded { .. }
            ));
        }
    }
}

#[test]
fn qubit_swap_needs_three() {
    let gens = cnots(2);
    let raw = raw(&gens);
    let swap = swap_perm(2).unwrap().to_vec();
    for len in 0..=2 {
        assert!(words_of_length(2, len)
            .iter()
            .all(|w| evaluate_naive(&raw, w) != swap));
    }
    let result = synthesize(
        &gens,
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
fn certificates_recheck() {
    let gens = cnots(3);
    let target = swap_perm(3).unwrap();
    let SynthesisResult::ParityObstructed(verdict) =
        synthesize(&gens, &target, &SynthesisOptions::default()).unwrap()
    else {
        panic!("expected parity obstruction");
    };
    assert!(verdict.recheck(&target, &gens));

    for d in [4, 5] {
        let gens = cnots(d);
        let result =
            synthesize(&gens, &swap_perm(d).unwrap(), &SynthesisOptions::default()).unwrap();
        if let SynthesisResult::NotInGroup { order, method } = result {
            assert_eq!(
                method,
                NotInGroupMethod::Membership(qgf_core::GroupMethod::StabilizerChain)
            );
            assert!(!qgf_core::group::contains(&gens, &swap_perm(d).unwrap()).unwrap());
            assert_eq!(order, qgf_core::group::order(&gens));
        }
    }
}

#[test]
fn deterministic_across_runs() {
    let gens = cnots(5);
    let target = evaluate_word(
        &gens,
        &Word::parse("cnot1 cnot2 cnot2 cnot1 cnot2 cnot1 cnot1"),
    )
    .unwrap();
    let first = synthesize(&gens, &target, &SynthesisOptions::default()).unwrap();
    for _ in 0..5 {
        assert_eq!(
            synthesize(&gens, &target, &SynthesisOptions::default()).unwrap(),
            first
        );
    }
    let SynthesisResult::Synthesized(word) = first else {
        panic!()
    };
    assert_eq!(evaluate_word(&gens, &word).unwrap(), target);
    assert!(word.len() <= 7);
}

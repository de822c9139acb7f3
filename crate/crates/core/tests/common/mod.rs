//! Test-only oracles. Nothing here calls into the composition, cycle or
//! group code of the crate; everything works on plain image vectors.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

/// `(sigma ∘ tau)(i) = sigma(tau(i))` on raw image tables.
pub fn naive_compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| sigma[t]).collect()
}

/// Multiply-until-closed fixpoint: keeps multiplying every known element by
/// every generator on both sides until nothing new appears.
pub fn naive_closure(gens: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let n = gens[0].len();
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
    elements.insert((0..n).collect());
    loop {
        let mut fresh = Vec::new();
        for e in &elements {
            for g in gens {
                for p in [naive_compose(e, g), naive_compose(g, e)] {
                    if !elements.contains(&p) {
                        fresh.push(p);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return elements;
        }
        elements.extend(fresh);
    }
}

/// Leibniz determinant: sum over all permutations of the sign times the
/// product of entries. Sign taken from a brute-force inversion count.
pub fn leibniz_determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut total = 0i64;
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permutations(&mut perm, n, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let product: i64 = (0..n).map(|i| m[p[i]][i]).product();
        total += sign * product;
    });
    total
}

/// Calls `visit` once for each permutation of `items[..k]` (Heap's algorithm).
pub fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permutations(&mut items, n, &mut |p| out.push(p.to_vec()));
    out
}

/// Brute-force inversion count over all pairs.
pub fn brute_inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// Shortest word length by plain breadth-first search from the identity,
/// letters applied left to right; `None` if not reachable within `limit`.
pub fn brute_shortest_length(gens: &[Vec<usize>], target: &[usize], limit: usize) -> Option<usize> {
    let n = target.len();
    let start: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((node, depth)) = queue.pop_front() {
        if node == target {
            return Some(depth);
        }
        if depth == limit {
            continue;
        }
        for g in gens {
            let next = naive_compose(g, &node);
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    None
}

/// Every word over `0..k` of length `len`, in lexicographic order.
pub fn words_of_length(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn evaluate_naive(gens: &[Vec<usize>], word: &[usize]) -> Vec<usize> {
    let n = gens[0].len();
    word.iter().fold((0..n).collect(), |acc: Vec<usize>, &s| {
        naive_compose(&gens[s], &acc)
    })
}

fn parse_matrix(text: &str) -> Vec<Vec<u8>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect()
}

/// Golden CNOT matrix, control on the upper wire.
pub fn golden_cnot1() -> Vec<Vec<u8>> {
    parse_matrix(
        "
        1 0 0 0 0 0 0 0 0
        0 1 0 0 0 0 0 0 0
        0 0 1 0 0 0 0 0 0
        0 0 0 0 1 0 0 0 0
        0 0 0 0 0 1 0 0 0
        0 0 0 1 0 0 0 0 0
        0 0 0 0 0 0 0 0 1
        0 0 0 0 0 0 1 0 0
        0 0 0 0 0 0 0 1 0
        ",
    )
}

/// Golden CNOT matrix, control on the lower wire.
pub fn golden_cnot2() -> Vec<Vec<u8>> {
    parse_matrix(
        "
        1 0 0 0 0 0 0 0 0
        0 0 0 0 0 0 0 1 0
        0 0 0 0 0 1 0 0 0
        0 0 0 1 0 0 0 0 0
        0 1 0 0 0 0 0 0 0
        0 0 0 0 0 0 0 0 1
        0 0 0 0 0 0 1 0 0
        0 0 0 0 1 0 0 0 0
        0 0 1 0 0 0 0 0 0
        ",
    )
}

/// The two-qutrit SWAP matrix.
pub fn golden_swap() -> Vec<Vec<u8>> {
    parse_matrix(
        "
        1 0 0 0 0 0 0 0 0
        0 0 0 1 0 0 0 0 0
        0 0 0 0 0 0 1 0 0
        0 1 0 0 0 0 0 0 0
        0 0 0 0 1 0 0 0 0
        0 0 0 0 0 0 0 1 0
        0 0 1 0 0 0 0 0 0
        0 0 0 0 0 1 0 0 0
        0 0 0 0 0 0 0 0 1
        ",
    )
}

pub fn to_i64(m: &[Vec<u8>]) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| r.iter().map(|&x| i64::from(x)).collect())
        .collect()
}

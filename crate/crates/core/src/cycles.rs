use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{Permutation, Sign};

/// Disjoint-cycle decomposition together with the statistics derived from it.
///
/// Cycles are canonical: each begins with its smallest point and the cycles
/// are sorted by that point. Fixed points are listed as 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleData {
    pub cycles: Vec<Vec<usize>>,
    /// Cycle lengths, ascending.
    pub cycle_type: Vec<usize>,
    pub fixed_points: usize,
    /// Sum over cycles of `length - 1`.
    pub transposition_count: u64,
    pub signature: Sign,
}

impl CycleData {
    pub fn of(sigma: &Permutation) -> CycleData {
        let n = sigma.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        // scanning starts in increasing order, so cycles come out canonical
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = sigma.apply(p);
            }
            cycles.push(cycle);
        }
        let mut cycle_type: Vec<usize> = cycles.iter().map(Vec::len).collect();
        cycle_type.sort_unstable();
        let fixed_points = cycle_type.iter().take_while(|&&l| l == 1).count();
        let transposition_count = (n - cycles.len()) as u64;
        CycleData {
            cycles,
            cycle_type,
            fixed_points,
            transposition_count,
            signature: Sign::from_parity(transposition_count % 2 == 1),
        }
    }

    pub fn degree(&self) -> usize {
        self.cycle_type.iter().sum()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle length mapped to the number of cycles of that length.
    pub fn length_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &len in &self.cycle_type {
            *counts.entry(len).or_insert(0) += 1;
        }
        counts
    }

    /// Multiplies the disjoint cycles back out.
    pub fn to_permutation(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for cycle in &self.cycles {
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Permutation::from_raw(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let sigma = Permutation::from_images(vec![3, 0, 4, 1, 2, 5]).unwrap();
        let data = sigma.cycle_decomposition();
        assert_eq!(data.cycles, vec![vec![0, 3, 1], vec![2, 4], vec![5]]);
        assert_eq!(data.cycle_type, [1, 2, 3]);
        assert_eq!(data.fixed_points, 1);
        assert_eq!(data.transposition_count, 3);
        assert_eq!(data.signature, Sign::Minus);
        assert_eq!(data.to_permutation(), sigma);
    }

    #[test]
    fn identity_is_all_fixed() {
        let data = Permutation::identity(5).unwrap().cycle_decomposition();
        assert_eq!(data.cycle_type, [1, 1, 1, 1, 1]);
        assert_eq!(data.signature, Sign::Plus);
        assert_eq!(data.length_counts().get(&1), Some(&5));
    }
}

//! An insertion-ordered set of permutations keyed by their full image table.

use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::hash_table::{Entry, HashTable};
use hashbrown::DefaultHashBuilder;

use crate::perm::Permutation;

#[derive(Clone, Default)]
pub struct PermStore {
    elements: Vec<Permutation>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl PermStore {
    pub fn new() -> PermStore {
        PermStore::default()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get_index(&self, perm: &Permutation) -> Option<usize> {
        let hash = self.hasher.hash_one(perm);
        self.table
            .find(hash, |&i| self.elements[i as usize] == *perm)
            .map(|&i| i as usize)
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.get_index(perm).is_some()
    }

    /// Inserts `perm` unless present; returns its index and whether it was new.
    pub fn insert(&mut self, perm: Permutation) -> (usize, bool) {
        let hash = self.hasher.hash_one(&perm);
        let elements = &self.elements;
        let hasher = &self.hasher;
        match self.table.entry(
            hash,
            |&i| elements[i as usize] == perm,
            |&i| hasher.hash_one(&elements[i as usize]),
        ) {
            Entry::Occupied(e) => (*e.get() as usize, false),
            Entry::Vacant(e) => {
                let index = self.elements.len();
                e.insert(index as u32);
                self.elements.push(perm);
                (index, true)
            }
        }
    }

    pub fn get(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<Permutation> {
        self.elements
    }
}

impl core::fmt::Debug for PermStore {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PermStore")
            .field("len", &self.len())
            .finish()
    }
}

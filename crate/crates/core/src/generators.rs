use alloc::string::String;
use alloc::vec::Vec;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("a generator set needs at least one generator")]
    Empty,
    #[error("generator names must be non-empty and free of whitespace: {0:?}")]
    BadName(String),
    #[error("generator name {0:?} is used twice")]
    DuplicateName(String),
    #[error("generator {name:?} has degree {got}, expected {expected}")]
    DegreeMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
}

/// Named permutations on a common point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    degree: usize,
    names: Vec<String>,
    perms: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(
        generators: impl IntoIterator<Item = (S, Permutation)>,
    ) -> Result<GeneratorSet, GeneratorError> {
        let mut names: Vec<String> = Vec::new();
        let mut perms: Vec<Permutation> = Vec::new();
        for (name, perm) in generators {
            let name = name.into();
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(GeneratorError::BadName(name));
            }
            if names.contains(&name) {
                return Err(GeneratorError::DuplicateName(name));
            }
            if let Some(first) = perms.first() {
                if first.degree() != perm.degree() {
                    return Err(GeneratorError::DegreeMismatch {
                        name,
                        expected: first.degree(),
                        got: perm.degree(),
                    });
                }
            }
            names.push(name);
            perms.push(perm);
        }
        let degree = perms.first().ok_or(GeneratorError::Empty)?.degree();
        Ok(GeneratorSet {
            degree,
            names,
            perms,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn get(&self, index: usize) -> (&str, &Permutation) {
        (&self.names[index], &self.perms[index])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Permutation)> {
        self.names.iter().map(String::as_str).zip(&self.perms)
    }
}

//! Permutations of the point set `{0, .., N-1}` stored as image tables.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::cycles::CycleData;

/// Errors raised while building or combining permutations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("a permutation needs at least one point")]
    EmptyDegree,
    #[error("degree {0} exceeds the supported point range")]
    DegreeTooLarge(usize),
    #[error("image {image} at position {position} is outside 0..{degree}")]
    ImageOutOfRange {
        position: usize,
        image: usize,
        degree: usize,
    },
    #[error("point {0} appears more than once in the image table")]
    RepeatedImage(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// Parity of a permutation, `+1` for even and `-1` for odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k` for the parity of `k`.
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Sign::Minus
    }

    /// `self` raised to a nonnegative power.
    pub fn pow(self, exponent_is_odd: bool) -> Sign {
        if exponent_is_odd {
            self
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_odd() != rhs.is_odd())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A bijection on `{0, .., N-1}`; `images[i]` is the image of `i`.
///
/// Composition follows the functional convention: `sigma.compose(&tau)` maps
/// `i` to `sigma(tau(i))`, so `tau` acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Permutation, PermError> {
        check_degree(degree)?;
        Ok(Permutation {
            images: (0..degree as u32).collect(),
        })
    }

    /// Validates an image table.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = vec![false; degree];
        for (position, &image) in images.iter().enumerate() {
            if image >= degree {
                return Err(PermError::ImageOutOfRange {
                    position,
                    image,
                    degree,
                });
            }
            if core::mem::replace(&mut seen[image], true) {
                return Err(PermError::RepeatedImage(image));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation pointwise from `f`, validating bijectivity.
    pub fn from_fn(degree: usize, f: impl FnMut(usize) -> usize) -> Result<Permutation, PermError> {
        check_degree(degree)?;
        Permutation::from_images((0..degree).map(f).collect())
    }

    /// Caller guarantees a valid bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Permutation {
        debug_assert!(
            Permutation::from_images(images.iter().map(|&x| x as usize).collect()).is_ok()
        );
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn images_raw(&self) -> &[u32] {
        &self.images
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// `self ∘ tau`: apply `tau`, then `self`.
    pub fn compose(&self, tau: &Permutation) -> Result<Permutation, PermError> {
        self.check_same_degree(tau)?;
        Ok(self.compose_unchecked(tau))
    }

    pub(crate) fn compose_unchecked(&self, tau: &Permutation) -> Permutation {
        Permutation {
            images: tau
                .images
                .iter()
                .map(|&t| self.images[t as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self` composed with itself `exponent` times.
    pub fn pow(&self, mut exponent: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation {
            images: (0..self.degree() as u32).collect(),
        };
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            exponent >>= 1;
        }
        acc
    }

    /// Number of disjoint cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
            }
        }
        count
    }

    /// `(-1)^(N - cycles)`, computed in linear time.
    pub fn signature(&self) -> Sign {
        Sign::from_parity((self.degree() - self.cycle_count()) % 2 == 1)
    }

    /// Pairs `i < j` with `sigma(i) > sigma(j)`, counted with a Fenwick tree.
    pub fn inversion_count(&self) -> u64 {
        let n = self.degree();
        let mut tree = vec![0u32; n + 1];
        let mut inversions = 0u64;
        for (seen_so_far, &x) in self.images.iter().enumerate() {
            // entries already inserted that are <= x
            let mut at_most = 0u64;
            let mut k = x as usize + 1;
            while k > 0 {
                at_most += u64::from(tree[k]);
                k &= k - 1;
            }
            inversions += seen_so_far as u64 - at_most;
            let mut k = x as usize + 1;
            while k <= n {
                tree[k] += 1;
                k += k & k.wrapping_neg();
            }
        }
        inversions
    }

    pub fn cycle_decomposition(&self) -> CycleData {
        CycleData::of(self)
    }

    pub(crate) fn check_same_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

fn check_degree(degree: usize) -> Result<(), PermError> {
    if degree == 0 {
        return Err(PermError::EmptyDegree);
    }
    if degree > u32::MAX as usize {
        return Err(PermError::DegreeTooLarge(degree));
    }
    Ok(())
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}

/// Free-function form of [`Permutation::compose`].
pub fn compose(sigma: &Permutation, tau: &Permutation) -> Result<Permutation, PermError> {
    sigma.compose(tau)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn identity_tables() {
        assert_eq!(Permutation::identity(4).unwrap().to_vec(), [0, 1, 2, 3]);
        assert_eq!(Permutation::identity(1).unwrap().to_vec(), [0]);
        assert_eq!(Permutation::identity(9).unwrap().signature(), Sign::Plus);
        assert_eq!(Permutation::identity(0), Err(PermError::EmptyDegree));
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_images(vec![0, 3, 1]),
            Err(PermError::ImageOutOfRange {
                position: 1,
                image: 3,
                degree: 3
            })
        );
        assert_eq!(
            Permutation::from_images(vec![1, 1, 0]),
            Err(PermError::RepeatedImage(1))
        );
        assert_eq!(
            Permutation::from_images(vec![]),
            Err(PermError::EmptyDegree)
        );
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let sigma = perm(&[1, 2, 0]);
        let tau = perm(&[0, 2, 1]);
        // sigma(tau(0)) = sigma(0) = 1, sigma(tau(1)) = sigma(2) = 0, sigma(tau(2)) = sigma(1) = 2
        assert_eq!(sigma.compose(&tau).unwrap().to_vec(), [1, 0, 2]);
        assert_eq!(tau.compose(&sigma).unwrap().to_vec(), [2, 1, 0]);
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3).unwrap();
        let b = Permutation::identity(4).unwrap();
        assert_eq!(
            a.compose(&b),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn reversal_inversions() {
        assert_eq!(perm(&[2, 1, 0]).inversion_count(), 3);
        assert_eq!(Permutation::identity(9).unwrap().inversion_count(), 0);
        assert_eq!(perm(&[4, 3, 2, 1, 0]).inversion_count(), 10);
    }

    #[test]
    fn pow_matches_repeated_compose() {
        let p = perm(&[1, 2, 3, 4, 0, 6, 5]);
        let mut acc = Permutation::identity(7).unwrap();
        for k in 0..12 {
            assert_eq!(p.pow(k), acc);
            acc = p.compose(&acc).unwrap();
        }
    }

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Plus, Sign::Minus);
        assert_eq!(alloc::format!("{}", Sign::Minus), "-1");
        assert_eq!(Sign::from_i64(-1), Some(Sign::Minus));
        assert_eq!(Sign::from_i64(0), None);
    }
}

//! Permutations in one-line notation, 0-based.

use crate::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A permutation of {0, ..., d-1} stored as its image sequence.
///
/// Composition convention: `(sigma.compose(&tau))(i) = sigma(tau(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &img in &images {
            if img as usize >= d || seen[img as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{d}"
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d as u32).collect() }
    }

    pub fn d(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.d(), other.d());
        Permutation { images: (0..self.d()).map(|i| self.images[other.apply(i)]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.d()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// +1 for even, -1 for odd.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.d()];
        let mut sign = 1;
        for start in 0..self.d() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Uniformly random permutation by Fisher-Yates; deterministic per seed.
    pub fn random<R: Rng>(d: usize, rng: &mut R) -> Permutation {
        let mut images: Vec<u32> = (0..d as u32).collect();
        for i in (1..d).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;
    use std::collections::HashMap;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn composition_convention() {
        // sigma = (0 1), tau = (1 2) on 3 points
        let sigma = Permutation::new(vec![1, 0, 2]).unwrap();
        let tau = Permutation::new(vec![0, 2, 1]).unwrap();
        let st = sigma.compose(&tau);
        // (sigma.tau)(1) = sigma(tau(1)) = sigma(2) = 2
        assert_eq!(st.apply(1), 2);
        assert_eq!(st.images(), &[1, 2, 0]);
    }

    #[test]
    fn inverse_and_sign() {
        let p = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
        assert_eq!(p.inverse().compose(&p), Permutation::identity(4));
        // 4-cycle: odd
        assert_eq!(p.sign(), -1);
        assert_eq!(Permutation::identity(5).sign(), 1);
        assert_eq!(Permutation::new(vec![1, 0]).unwrap().sign(), -1);
    }

    #[test]
    fn random_is_deterministic_per_seed_and_trivial_at_d1() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        assert_eq!(Permutation::random(1, &mut rng), Permutation::identity(1));
        let a = Permutation::random(20, &mut ChaCha12Rng::seed_from_u64(99));
        let b = Permutation::random(20, &mut ChaCha12Rng::seed_from_u64(99));
        assert_eq!(a, b);
        let c = Permutation::random(20, &mut ChaCha12Rng::seed_from_u64(100));
        assert_ne!(a, c);
    }

    #[test]
    fn empirical_uniformity_over_s3() {
        // 6000 draws; each of the 6 permutations lands within 1000 +- 5 sigma,
        // sigma = sqrt(6000 * (1/6)(5/6)) ~ 28.9
        let mut rng = ChaCha12Rng::seed_from_u64(2024);
        let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
        for _ in 0..6000 {
            let p = Permutation::random(3, &mut rng);
            *counts.entry(p.images().to_vec()).or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        for (perm, c) in counts {
            assert!(
                (c as i64 - 1000).abs() <= 145,
                "class {perm:?} count {c} outside 1000 +- 145"
            );
        }
    }
}

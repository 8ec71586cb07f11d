//! Irreducible S_d characters by the Murnaghan-Nakayama rule, and Kronecker
//! coefficients as centralizer-weighted character sums.

use super::partition::{centralizer_order, partitions_of, Partition, PartitionTriple};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

/// Memoized character evaluations, shared across threads.
///
/// Keys pair a partition with the not-yet-consumed suffix of the class
/// partition; the recursion removes the largest class part first, which is
/// what makes suffixes collide across classes and keeps the table small.
pub struct CharacterTable {
    cache: Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>,
}

impl Default for CharacterTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable { cache: Mutex::new(HashMap::new()) }
    }

    /// Character of the irreducible indexed by `lambda` on the class `mu`.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.d() != mu.d() {
            return Err(Error::UnequalSums(lambda.d(), mu.d()));
        }
        Ok(self.mn(lambda.parts(), mu.parts()))
    }

    fn mn(&self, lambda: &[u32], mu: &[u32]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.cache.lock().unwrap().get(&key) {
            return v;
        }
        let ell = mu[0];
        let rest = &mu[1..];
        let mut total = 0i64;
        for (stripped, sign) in remove_border_strips(lambda, ell) {
            total += sign as i64 * self.mn(&stripped, rest);
        }
        self.cache.lock().unwrap().insert(key, total);
        total
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

/// All ways to remove a border strip of length `ell`, via beta-numbers:
/// first-column hook lengths are the distinct values lambda_j + (k-1-j), and
/// a strip removal replaces one beta b by b - ell when b - ell is free. The
/// sign is (-1)^(number of betas strictly between b - ell and b).
fn remove_border_strips(lambda: &[u32], ell: u32) -> Vec<(Vec<u32>, i32)> {
    let k = lambda.len();
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(j, &p)| p + (k - 1 - j) as u32).collect();
    let mut out = Vec::new();
    for (j, &b) in beta.iter().enumerate() {
        if b < ell {
            continue;
        }
        let target = b - ell;
        if beta.contains(&target) {
            continue;
        }
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[j] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (k - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sign = if leg % 2 == 0 { 1 } else { -1 };
        out.push((parts, sign));
    }
    out
}

static GLOBAL_TABLE: once_cell::sync::Lazy<CharacterTable> =
    once_cell::sync::Lazy::new(CharacterTable::new);

/// Character value chi_lambda(mu), using the shared memo table.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    GLOBAL_TABLE.character(lambda, mu)
}

/// Kronecker coefficient of a partition triple:
/// k(lambda) = sum over classes mu of the product of the three characters
/// divided by the centralizer order. Always a nonnegative integer.
pub fn kronecker(lambda: &PartitionTriple) -> Result<u64> {
    let d = lambda.d();
    let fact: u128 = (1..=d as u128).product();
    let mut numerator = BigInt::zero();
    for mu in partitions_of(d) {
        let class_size = fact / centralizer_order(&mu);
        let c0 = mn_character(lambda.leg(0), &mu)?;
        if c0 == 0 {
            continue;
        }
        let c1 = mn_character(lambda.leg(1), &mu)?;
        if c1 == 0 {
            continue;
        }
        let c2 = mn_character(lambda.leg(2), &mu)?;
        if c2 == 0 {
            continue;
        }
        let term = BigInt::from(c0) * BigInt::from(c1) * BigInt::from(c2) * BigInt::from(class_size);
        numerator += term;
    }
    let fact = BigInt::from(fact);
    let (q, r) = numerator.div_rem(&fact);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::InvalidData(format!(
            "character sum is not a nonnegative multiple of d!: {q} rem {r}"
        )));
    }
    q.to_u64()
        .ok_or_else(|| Error::InvalidData("Kronecker coefficient exceeds u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn triple(a: &[u32], b: &[u32], c: &[u32]) -> PartitionTriple {
        PartitionTriple::new(p(a), p(b), p(c)).unwrap()
    }

    #[test]
    fn trivial_and_sign_characters() {
        for d in 1..=6usize {
            let triv = p(&[d as u32]);
            let sgn = p(&vec![1; d]);
            for mu in partitions_of(d) {
                assert_eq!(mn_character(&triv, &mu).unwrap(), 1);
                let expect = if (d - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&sgn, &mu).unwrap(), expect, "sign at {mu:?}");
            }
        }
    }

    #[test]
    fn standard_representation_dimension() {
        // hook length oracle: 3!/3 = 2
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn identity_class_gives_hook_dimension_up_to_d8() {
        for d in 1..=8usize {
            let id_class = p(&vec![1; d]);
            for lam in partitions_of(d) {
                assert_eq!(
                    mn_character(&lam, &id_class).unwrap(),
                    lam.hook_dimension() as i64,
                    "dimension mismatch at {lam:?}"
                );
            }
        }
    }

    #[test]
    fn character_orthogonality_up_to_d8() {
        for d in 1..=8usize {
            let classes = partitions_of(d);
            let lams = partitions_of(d);
            let fact: i128 = (1..=d as i128).product();
            for a in &lams {
                for b in &lams {
                    let mut acc: i128 = 0;
                    for mu in &classes {
                        let z = centralizer_order(mu) as i128;
                        let ca = mn_character(a, mu).unwrap() as i128;
                        let cb = mn_character(b, mu).unwrap() as i128;
                        acc += ca * cb * (fact / z);
                    }
                    let expect = if a == b { fact } else { 0 };
                    assert_eq!(acc, expect, "orthogonality of {a:?}, {b:?}");
                }
            }
        }
    }

    #[test]
    fn kronecker_with_trivial_leg_is_character_orthogonality() {
        for d in 1..=6usize {
            let triv = p(&[d as u32]);
            for a in partitions_of(d) {
                for b in partitions_of(d) {
                    let k = kronecker(
                        &PartitionTriple::new(a.clone(), b.clone(), triv.clone()).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(k, u64::from(a == b), "delta at ({a:?}, {b:?})");
                }
            }
        }
    }

    #[test]
    fn kronecker_symmetric_under_leg_permutations() {
        let legs = [p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])];
        let base = kronecker(&triple(&[3, 1], &[2, 2], &[2, 1, 1])).unwrap();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for perm in perms {
            let t = PartitionTriple::new(
                legs[perm[0]].clone(),
                legs[perm[1]].clone(),
                legs[perm[2]].clone(),
            )
            .unwrap();
            assert_eq!(kronecker(&t).unwrap(), base);
        }
    }

    #[test]
    fn kronecker_reproduces_the_multiplicities_four_and_thirty_one() {
        assert_eq!(kronecker(&triple(&[5, 5, 5, 5], &[5, 5, 5, 5], &[5, 5, 5, 5])).unwrap(), 4);
        assert_eq!(kronecker(&triple(&[5, 5, 5, 4], &[5, 5, 5, 4], &[5, 5, 5, 4])).unwrap(), 31);
    }
}

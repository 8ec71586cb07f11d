//! Integer partitions and conjugacy-class bookkeeping for S_d.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A partition: nonincreasing positive parts. The empty partition is the
/// partition of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nonincreasing")));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} contains a zero part")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn d(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition: column counts of the Young diagram.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: Vec::new() };
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Product of hook lengths of the Young diagram.
    fn hook_product(&self) -> u128 {
        let t = self.transpose();
        let mut prod: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = t.parts[j] as usize - i - 1;
                prod *= (arm + leg + 1) as u128;
            }
        }
        prod
    }

    /// Dimension of the irreducible S_d representation, by the hook length
    /// formula.
    pub fn hook_dimension(&self) -> u64 {
        let d = self.d();
        let fact: u128 = (1..=d as u128).product();
        (fact / self.hook_product()) as u64
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Three partitions of a common d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[Partition; 3]", into = "[Partition; 3]")]
pub struct PartitionTriple {
    parts: [Partition; 3],
}

impl PartitionTriple {
    pub fn new(a: Partition, b: Partition, c: Partition) -> Result<Self> {
        if a.d() != b.d() || a.d() != c.d() {
            return Err(Error::UnequalSums(a.d(), b.d().max(c.d())));
        }
        Ok(PartitionTriple { parts: [a, b, c] })
    }

    pub fn d(&self) -> usize {
        self.parts[0].d()
    }

    pub fn leg(&self, i: usize) -> &Partition {
        &self.parts[i]
    }

    pub fn legs(&self) -> &[Partition; 3] {
        &self.parts
    }

    /// Largest number of parts across the three legs.
    pub fn max_parts(&self) -> usize {
        self.parts.iter().map(|p| p.len()).max().unwrap_or(0)
    }
}

impl TryFrom<[Partition; 3]> for PartitionTriple {
    type Error = Error;
    fn try_from(p: [Partition; 3]) -> Result<Self> {
        let [a, b, c] = p;
        PartitionTriple::new(a, b, c)
    }
}

impl From<PartitionTriple> for [Partition; 3] {
    fn from(t: PartitionTriple) -> [Partition; 3] {
        t.parts
    }
}

/// All partitions of d, in descending lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(d, d, &mut current, &mut out);
    out
}

/// Order of the centralizer of the conjugacy class mu: prod_s s^{m_s} m_s!.
pub fn centralizer_order(mu: &Partition) -> u128 {
    let mut z: u128 = 1;
    let mut i = 0;
    let parts = mu.parts();
    while i < parts.len() {
        let s = parts[i];
        let mut mult = 0u128;
        while i < parts.len() && parts[i] == s {
            mult += 1;
            i += 1;
        }
        for k in 1..=mult {
            z *= s as u128 * k;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[5, 5, 5, 5]).transpose(), p(&[4, 4, 4, 4, 4]));
        assert_eq!(p(&[5, 5, 5, 4]).transpose(), p(&[4, 4, 4, 4, 3]));
        assert_eq!(p(&[7]).transpose(), p(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn transpose_is_an_involution() {
        for d in 0..=9 {
            for lam in partitions_of(d) {
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn construction_rejects_bad_parts() {
        assert!(Partition::new(vec![3, 4]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn partition_counts_match_euler() {
        // p(0)..p(10) = 1,1,2,3,5,7,11,15,22,30,42
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (d, &e) in expect.iter().enumerate() {
            assert_eq!(partitions_of(d).len(), e, "p({d})");
        }
        assert_eq!(partitions_of(20).len(), 627);
    }

    #[test]
    fn centralizer_orders_sum_to_group_order() {
        // sum over classes of d!/z_mu = d!
        for d in 1..=10usize {
            let fact: u128 = (1..=d as u128).product();
            let total: u128 = partitions_of(d).iter().map(|mu| fact / centralizer_order(mu)).sum();
            assert_eq!(total, fact, "class equation at d={d}");
        }
    }

    #[test]
    fn hook_dimension_small_cases() {
        assert_eq!(p(&[3]).hook_dimension(), 1);
        assert_eq!(p(&[1, 1, 1]).hook_dimension(), 1);
        assert_eq!(p(&[2, 1]).hook_dimension(), 2);
        assert_eq!(p(&[3, 2]).hook_dimension(), 5);
        assert_eq!(p(&[5, 5, 5, 5]).hook_dimension(), 1_662_804);
        assert_eq!(p(&[5, 5, 5, 4]).hook_dimension(), 1_662_804);
    }

    #[test]
    fn triple_requires_equal_sums() {
        assert!(PartitionTriple::new(p(&[2, 1]), p(&[3]), p(&[1, 1, 1])).is_ok());
        assert!(PartitionTriple::new(p(&[2]), p(&[3]), p(&[3])).is_err());
    }

    #[test]
    fn partition_serde_round_trip() {
        let lam = p(&[5, 5, 5, 4]);
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[5,5,5,4]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lam);
        let bad: std::result::Result<Partition, _> = serde_json::from_str("[1,2]");
        assert!(bad.is_err());
    }
}

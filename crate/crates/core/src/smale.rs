//! Spin rational homology 5-spheres as connected sums of Smale manifolds
//! `M_{p^s}`, each contributing `Z_{p^s} ⊕ Z_{p^s}` to `H₂`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::primes::factorize;

/// A prime power `p^s` with `s ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// `M_{k₁} # ⋯ # M_{k_s}` with every `k_i` a prime power. The empty sum is
/// `S⁵`. Summands are kept with primes ascending and, for each prime,
/// exponents descending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SmaleManifold {
    summands: Vec<PrimePower>,
}

impl SmaleManifold {
    pub fn sphere() -> Self {
        Self::default()
    }

    pub fn from_summands(mut summands: Vec<PrimePower>) -> Self {
        summands.sort_by(|a, b| a.prime.cmp(&b.prime).then(b.exponent.cmp(&a.exponent)));
        Self { summands }
    }

    pub fn summands(&self) -> &[PrimePower] {
        &self.summands
    }

    /// The prime powers `k_i` of the summands.
    pub fn orders(&self) -> Vec<u64> {
        self.summands.iter().map(PrimePower::value).collect()
    }

    /// Elementary divisors of `H₂`: each summand order twice.
    pub fn elementary_divisors(&self) -> Vec<u64> {
        self.orders().into_iter().flat_map(|k| [k, k]).collect()
    }

    /// `|H₂| = ∏ k_i²`.
    pub fn h2_order(&self) -> BigUint {
        self.orders()
            .into_iter()
            .fold(BigUint::one(), |acc, k| acc * BigUint::from(k) * BigUint::from(k))
    }

    /// Barden's invariant; zero since every Smale manifold is spin.
    pub fn i_invariant(&self) -> u32 {
        0
    }
}

impl fmt::Display for SmaleManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "S^5");
        }
        let names: Vec<String> = self.orders().iter().map(|k| format!("M_{k}")).collect();
        write!(f, "{}", names.join(" # "))
    }
}

impl Serialize for SmaleManifold {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SmaleManifold", 5)?;
        s.serialize_field("name", &self.to_string())?;
        s.serialize_field("summands", &self.orders())?;
        s.serialize_field("elementary_divisors", &self.elementary_divisors())?;
        s.serialize_field("h2_order", &self.h2_order().to_string())?;
        s.serialize_field("i", &self.i_invariant())?;
        s.end()
    }
}

/// Partitions of `n` with parts descending, in descending lexicographic
/// order: `3 → [3], [2, 1], [1, 1, 1]`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every Smale manifold with `|H₂| = k²`: one for each choice of a
/// partition of every prime exponent of `k`.
///
/// Candidates come out with the smallest prime's partition varying slowest,
/// each prime's partitions in descending lexicographic order.
pub fn smale_decompositions(k: u64) -> Vec<SmaleManifold> {
    assert!(k >= 1, "k must be positive");
    let mut candidates: Vec<Vec<PrimePower>> = vec![Vec::new()];
    for (prime, e) in factorize(k) {
        let mut next = Vec::new();
        for head in &candidates {
            for part in partitions(e) {
                let mut c = head.clone();
                c.extend(part.into_iter().map(|exponent| PrimePower { prime, exponent }));
                next.push(c);
            }
        }
        candidates = next;
    }
    candidates.into_iter().map(SmaleManifold::from_summands).collect()
}

/// True iff `k` determines its Smale manifold, i.e. `k` is squarefree.
pub fn is_unique_realization(k: u64) -> bool {
    smale_decompositions(k).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(v: &[SmaleManifold]) -> Vec<Vec<u64>> {
        v.iter().map(SmaleManifold::orders).collect()
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn decompositions() {
        assert_eq!(orders(&smale_decompositions(8)), vec![vec![8], vec![4, 2], vec![2, 2, 2]]);
        assert_eq!(orders(&smale_decompositions(6)), vec![vec![2, 3]]);
        assert_eq!(smale_decompositions(1), vec![SmaleManifold::sphere()]);
        assert_eq!(orders(&smale_decompositions(12)), vec![vec![4, 3], vec![2, 2, 3]]);
    }

    #[test]
    fn manifold_data() {
        let m = &smale_decompositions(6)[0];
        assert_eq!(m.elementary_divisors(), vec![2, 2, 3, 3]);
        assert_eq!(m.h2_order(), BigUint::from(36u32));
        assert_eq!(m.to_string(), "M_2 # M_3");
        assert_eq!(m.i_invariant(), 0);
        assert_eq!(SmaleManifold::sphere().to_string(), "S^5");
        assert_eq!(SmaleManifold::sphere().h2_order(), BigUint::one());
    }

    #[test]
    fn uniqueness() {
        assert!(is_unique_realization(30));
        assert!(!is_unique_realization(4));
        assert!(is_unique_realization(97));
    }
}

//! Weight vectors with a degree, and the curve data they determine.

use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weights `(w_1, …, w_n)` and degree `d` of a weighted homogeneous
/// polynomial.
///
/// Weights keep the order they were given in. Equality and hashing use the
/// sorted weights, since every invariant is symmetric in them.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawWeightSystem")]
pub struct WeightSystem {
    weights: Vec<u64>,
    degree: u64,
}

#[derive(Deserialize)]
struct RawWeightSystem {
    weights: Vec<u64>,
    degree: u64,
}

impl TryFrom<RawWeightSystem> for WeightSystem {
    type Error = Error;

    fn try_from(raw: RawWeightSystem) -> Result<Self> {
        WeightSystem::new(raw.weights, raw.degree)
    }
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidWeights(format!(
                "need at least 2 weights, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights("weights must be positive".into()));
        }
        if degree == 0 {
            return Err(Error::InvalidWeights("degree must be positive".into()));
        }
        Ok(Self { weights, degree })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    fn sorted(&self) -> Vec<u64> {
        let mut w = self.weights.clone();
        w.sort_unstable();
        w
    }

    /// `d / w_i = u_i / v_i` in lowest terms, one pair per weight.
    pub fn reduced_ratios(&self) -> Vec<(u64, u64)> {
        self.weights
            .iter()
            .map(|&w| {
                let g = self.degree.gcd(&w);
                (self.degree / g, w / g)
            })
            .collect()
    }

    /// The Fano index `Σ w_i`.
    pub fn fano_index(&self) -> u64 {
        self.weights.iter().sum()
    }

    fn require_arity(&self, n: usize) -> Result<()> {
        if self.arity() != n {
            return Err(Error::WrongArity {
                expected: n,
                found: self.arity(),
            });
        }
        Ok(())
    }

    /// Necessary condition for positive genus: `w_1 + w_2 + w_3 ≤ d`.
    pub fn positive_genus_bound_check(&self) -> Result<bool> {
        self.require_arity(3)?;
        Ok(self.fano_index() <= self.degree)
    }

    /// Genus of the curve cut out in `P(w_1, w_2, w_3)`, by the
    /// Orlik–Wagreich formula
    ///
    /// ```text
    /// g = ½ ( d²/(w₁w₂w₃) − d Σ_{i<j} gcd(wᵢ,wⱼ)/(wᵢwⱼ) + Σᵢ gcd(d,wᵢ)/wᵢ − 1 )
    /// ```
    ///
    /// A factor common to all three weights is divided out of the weights
    /// and the degree first; the formula is only valid for reduced weights.
    /// If that factor does not divide `d` there is no curve at all.
    ///
    /// The formula must come out a non-negative integer. This is the only
    /// smoothness filter applied and it is a proxy: it does not certify
    /// that a quasi-smooth polynomial with these weights exists.
    pub fn genus(&self) -> Result<u64> {
        self.require_arity(3)?;
        let common = self.weights.iter().fold(0u64, |g, w| g.gcd(w));
        if self.degree % common != 0 {
            return Err(Error::NotSmoothCurve(format!(
                "common weight factor {common} does not divide degree {}",
                self.degree
            )));
        }
        let w: Vec<u64> = self.weights.iter().map(|x| x / common).collect();
        let d = self.degree / common;

        let big = |n: u64| BigInt::from(n);
        let r = |n: BigInt, m: BigInt| BigRational::new(n, m);
        let mut total = r(big(d) * big(d), big(w[0]) * big(w[1]) * big(w[2]));
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            total -= r(big(d) * big(w[i].gcd(&w[j])), big(w[i]) * big(w[j]));
        }
        for &wi in &w {
            total += r(big(d.gcd(&wi)), big(wi));
        }
        total -= r(big(1), big(1));
        let g = total / r(big(2), big(1));

        if !g.is_integer() {
            return Err(Error::NotSmoothCurve(format!("genus formula gives {g}")));
        }
        if g.is_negative() {
            return Err(Error::NotSmoothCurve(format!("genus formula gives {g}")));
        }
        Ok(g.to_integer().to_u64().expect("genus exceeds u64"))
    }
}

impl PartialEq for WeightSystem {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.sorted() == other.sorted()
    }
}

impl Eq for WeightSystem {}

impl Hash for WeightSystem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.sorted().hash(state);
    }
}

impl std::fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", w.join(","), self.degree)
    }
}

/// A three-variable weight system together with the genus of its curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedCurve {
    system: WeightSystem,
    genus: u64,
}

impl WeightedCurve {
    pub fn new(system: WeightSystem) -> Result<Self> {
        let genus = system.genus()?;
        Ok(Self { system, genus })
    }

    pub fn system(&self) -> &WeightSystem {
        &self.system
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(w: &[u64], d: u64) -> WeightSystem {
        WeightSystem::new(w.to_vec(), d).unwrap()
    }

    #[test]
    fn rejects_bad_systems() {
        assert!(WeightSystem::new(vec![1], 3).is_err());
        assert!(WeightSystem::new(vec![1, 0, 2], 3).is_err());
        assert!(WeightSystem::new(vec![1, 1, 1], 0).is_err());
    }

    #[test]
    fn ratios() {
        assert_eq!(ws(&[15, 10, 6], 30).reduced_ratios(), vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!(ws(&[1, 2, 3], 7).reduced_ratios(), vec![(7, 1), (7, 2), (7, 3)]);
        assert_eq!(ws(&[1, 1, 1], 3).reduced_ratios(), vec![(3, 1); 3]);
        assert_eq!(ws(&[4, 6], 12).reduced_ratios(), vec![(3, 1), (2, 1)]);
    }

    #[test]
    fn genus_values() {
        assert_eq!(ws(&[1, 1, 1], 3).genus(), Ok(1));
        assert_eq!(ws(&[1, 2, 3], 7).genus(), Ok(1));
        assert_eq!(ws(&[1, 1, 1], 4).genus(), Ok(3));
        assert_eq!(ws(&[1, 1, 2], 4).genus(), Ok(1));
        // weights in any order
        assert_eq!(ws(&[3, 1, 2], 7).genus(), Ok(1));
    }

    #[test]
    fn genus_of_unreduced_weights_matches_reduced() {
        assert_eq!(ws(&[2, 2, 2], 6).genus(), Ok(1));
        assert_eq!(ws(&[3, 3, 3], 27).genus(), ws(&[1, 1, 1], 9).genus());
        assert!(matches!(ws(&[2, 2, 2], 7).genus(), Err(Error::NotSmoothCurve(_))));
    }

    #[test]
    fn genus_errors() {
        assert_eq!(
            ws(&[1, 1, 1, 1], 4).genus(),
            Err(Error::WrongArity { expected: 3, found: 4 })
        );
        // (1,1,2; 3): 9/2 - 3(1 + 1/2 + 1/2) + (1 + 1 + 1/2) - 1 = 0
        assert_eq!(ws(&[1, 1, 2], 3).genus(), Ok(0));
        // (1,2,2; 3): (9/4 - 9/2 + 2 - 1)/2 = -5/8
        assert!(matches!(ws(&[1, 2, 2], 3).genus(), Err(Error::NotSmoothCurve(_))));
    }

    #[test]
    fn fano_index_and_bound() {
        assert_eq!(ws(&[1, 1, 1], 3).fano_index(), 3);
        assert_eq!(ws(&[1, 2, 3], 7).fano_index(), 6);
        assert_eq!(ws(&[3, 2, 2, 2], 6).fano_index(), 9);
        assert_eq!(ws(&[1, 1, 1], 3).positive_genus_bound_check(), Ok(true));
        assert_eq!(ws(&[1, 1, 1], 2).positive_genus_bound_check(), Ok(false));
        assert_eq!(ws(&[1, 2, 3], 7).positive_genus_bound_check(), Ok(true));
    }

    #[test]
    fn equality_ignores_order() {
        assert_eq!(ws(&[1, 2, 3], 7), ws(&[3, 2, 1], 7));
        assert_ne!(ws(&[1, 2, 3], 7), ws(&[1, 2, 3], 8));
        assert_eq!(ws(&[3, 1, 2], 7).weights(), &[3, 1, 2]);
    }

    #[test]
    fn json_round_trip_validates() {
        let s = serde_json::to_string(&ws(&[1, 2, 3], 7)).unwrap();
        assert_eq!(s, r#"{"weights":[1,2,3],"degree":7}"#);
        let back: WeightSystem = serde_json::from_str(&s).unwrap();
        assert_eq!(back.weights(), &[1, 2, 3]);
        assert!(serde_json::from_str::<WeightSystem>(r#"{"weights":[1],"degree":7}"#).is_err());
    }

    #[test]
    fn curve_records_genus() {
        let c = WeightedCurve::new(ws(&[1, 1, 1], 4)).unwrap();
        assert_eq!(c.genus(), 3);
        assert!(WeightedCurve::new(ws(&[1, 2, 2], 3)).is_err());
    }
}

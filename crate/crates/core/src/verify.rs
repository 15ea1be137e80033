//! Cross-validation over a grid of weight systems: the genus formula
//! against the divisor, the two cover paths against each other, and the
//! characteristic polynomial against the brute-force oracle.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::cover::{build_cover_with, cover_divisor, cover_weights, CoverOptions};
use crate::divisor::OrlikDivisor;
use crate::error::Error;
use crate::milnor_orlik::{
    betti_from_divisor, char_poly_from_divisor, milnor_orlik_product, LinkOptions,
};
use crate::oracle::oracle_expand;
use crate::weights::WeightSystem;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub max_degree: u64,
    pub max_k: u64,
    /// Largest polynomial degree sent through the oracle; `None` expands
    /// every base link.
    pub oracle_degree_limit: Option<u64>,
    /// Largest cover polynomial degree sent through the oracle.
    pub cover_oracle_degree_limit: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_degree: 40,
            max_k: 12,
            oracle_degree_limit: None,
            cover_oracle_degree_limit: 2_000,
        }
    }
}

/// Outcome of one property over the grid.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Cases outside the property's hypotheses (e.g. weights with no
    /// isolated singularity).
    pub excluded: u64,
    /// Up to five failing cases, for diagnostics.
    pub failures: Vec<String>,
}

impl PropertyTally {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(case());
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub grid_size: usize,
    pub properties: Vec<PropertyTally>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }
}

/// All `w₁ ≤ w₂ ≤ w₃ ≤ d ≤ max_degree` whose genus formula is a
/// non-negative integer, ordered by degree then weights.
pub fn regression_grid(max_degree: u64) -> Vec<WeightSystem> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for w1 in 1..=d {
            for w2 in w1..=d {
                for w3 in w2..=d {
                    let ws = WeightSystem::new(vec![w1, w2, w3], d).expect("positive entries");
                    if ws.genus().is_ok() {
                        out.push(ws);
                    }
                }
            }
        }
    }
    out
}

fn degree_of(div: &OrlikDivisor) -> Option<u64> {
    let d = div.degree();
    if d.is_integer() && !d.is_negative() {
        d.to_integer().to_u64()
    } else {
        None
    }
}

/// Runs every grid property and tallies the results.
pub fn verify(config: &VerifyConfig) -> VerifyReport {
    let grid = regression_grid(config.max_degree);
    let mut duality = PropertyTally::new("genus_betti_duality");
    let mut two_path = PropertyTally::new("cover_two_path_identity");
    let mut order_law = PropertyTally::new("cover_order_law");
    let mut oracle = PropertyTally::new("oracle_agreement");
    let mut cover_oracle = PropertyTally::new("cover_oracle_agreement");

    let cover_opts = CoverOptions {
        link: LinkOptions {
            char_poly_degree_limit: Some(0),
        },
        ..CoverOptions::default()
    };

    for ws in &grid {
        let product = milnor_orlik_product(ws);
        let integral = product.is_integral();
        let genus = ws.genus().expect("grid systems have a genus");

        if integral {
            let b1 = betti_from_divisor(&product);
            duality.record(b1 == Ok(2 * genus), || format!("{ws}: genus {genus}, b1 {b1:?}"));
        } else {
            duality.excluded += 1;
        }

        if integral {
            let within = match (config.oracle_degree_limit, degree_of(&product)) {
                (None, _) => true,
                (Some(limit), Some(d)) => d <= limit,
                (Some(_), None) => false,
            };
            if within {
                let ok = oracle_matches(&product);
                oracle.record(ok, || format!("{ws}"));
            } else {
                oracle.excluded += 1;
            }
        } else {
            oracle.excluded += 1;
        }

        for k in 2..=config.max_k {
            if ws.degree().gcd(&k) != 1 {
                continue;
            }
            let cover = cover_weights(ws, k).expect("coprime by construction");
            let direct = milnor_orlik_product(&cover);
            let factor = &OrlikDivisor::generator(k) - &OrlikDivisor::one();
            let via_base = &factor * &product;
            two_path.record(direct == via_base, || format!("{ws}, k = {k}"));

            if !integral {
                order_law.excluded += 1;
                cover_oracle.excluded += 1;
                continue;
            }
            let expected = num_traits::pow(BigUint::from(k), 2 * genus as usize);
            match build_cover_with(ws, k, &cover_opts) {
                Ok(c) => order_law.record(c.b2() == 0 && *c.h2_order() == expected, || {
                    format!("{ws}, k = {k}: |H2| {}", c.h2_order())
                }),
                Err(e) => order_law.record(false, || format!("{ws}, k = {k}: {e}")),
            }

            let div = cover_divisor(&product, k).expect("integral base");
            match degree_of(&div) {
                Some(d) if d <= config.cover_oracle_degree_limit => {
                    cover_oracle.record(oracle_matches(&div), || format!("{ws}, k = {k}"))
                }
                _ => cover_oracle.excluded += 1,
            }
        }
    }

    VerifyReport {
        config: config.clone(),
        grid_size: grid.len(),
        properties: vec![duality, two_path, order_law, oracle, cover_oracle],
    }
}

/// Both polynomial routes agree exactly, or both reject the divisor as
/// non-polynomial; and the reduced value at 1 matches the oracle polynomial.
pub fn oracle_matches(div: &OrlikDivisor) -> bool {
    match (char_poly_from_divisor(div), oracle_expand(div)) {
        (Ok(main), Ok(naive)) => {
            if main != naive {
                return false;
            }
            let Ok(at_one) = div.evaluate_at_one_reduced() else {
                return false;
            };
            match naive.deflate_at_one(at_one.multiplicity()) {
                Ok(reduced) => {
                    reduced.value_at_one() == at_one.reduced_value().to_integer()
                        && at_one.reduced_value().is_integer()
                }
                Err(_) => false,
            }
        }
        (Err(Error::NotAPolynomial { .. }), Err(Error::NotAPolynomial { .. })) => true,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let cfg = VerifyConfig {
            max_degree: 12,
            max_k: 6,
            ..VerifyConfig::default()
        };
        let report = verify(&cfg);
        assert!(report.all_passed(), "{report:#?}");
        assert!(report.grid_size > 0);
        for p in &report.properties {
            assert!(p.passed > 0, "{}", p.name);
        }
    }

    #[test]
    fn degree_three_grid_contains_cubic() {
        let grid = regression_grid(3);
        assert!(grid.contains(&WeightSystem::new(vec![1, 1, 1], 3).unwrap()));
        let report = verify(&VerifyConfig {
            max_degree: 3,
            ..VerifyConfig::default()
        });
        assert!(report.all_passed());
    }

    #[test]
    fn empty_grid_is_vacuous() {
        let report = verify(&VerifyConfig {
            max_degree: 0,
            ..VerifyConfig::default()
        });
        assert_eq!(report.grid_size, 0);
        assert!(report.all_passed());
    }
}

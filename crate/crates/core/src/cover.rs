//! k-fold branched covers `f = z₀^k + f₃(z₁, z₂, z₃)` of a three-variable
//! link, and their invariants computed along two independent paths.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::divisor::{AtOne, OrlikDivisor};
use crate::error::{Error, Result};
use crate::milnor_orlik::{
    link_invariants_with, milnor_orlik_divisor, LinkInvariants, LinkOptions,
};
use crate::weights::WeightSystem;

/// Cover degree `kd` above which the direct four-variable path is skipped
/// by default.
pub const DEFAULT_DIRECT_DEGREE_LIMIT: u64 = 10_000;

fn check_cover_input(base: &WeightSystem, k: u64) -> Result<()> {
    if base.arity() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            found: base.arity(),
        });
    }
    if k < 2 {
        return Err(Error::CoverRange(k));
    }
    Ok(())
}

/// Weights `(d, k w₁, k w₂, k w₃)` and degree `k d` of the cover.
///
/// Requires a three-variable base, `k ≥ 2` and `gcd(d, k) = 1`.
pub fn cover_weights(base: &WeightSystem, k: u64) -> Result<WeightSystem> {
    check_cover_input(base, k)?;
    let d = base.degree();
    let g = d.gcd(&k);
    if g != 1 {
        return Err(Error::NotCoprime { degree: d, k, gcd: g });
    }
    unchecked_cover_weights(base, k)
}

fn unchecked_cover_weights(base: &WeightSystem, k: u64) -> Result<WeightSystem> {
    let d = base.degree();
    let overflow = || Error::InvalidWeights(format!("cover of {base} with k = {k} overflows"));
    let mut weights = Vec::with_capacity(4);
    weights.push(d);
    for w in base.weights() {
        weights.push(w.checked_mul(k).ok_or_else(overflow)?);
    }
    WeightSystem::new(weights, d.checked_mul(k).ok_or_else(overflow)?)
}

/// `(Λ_k - 1) · base_div`, the divisor of the cover's characteristic
/// polynomial obtained from the base divisor alone.
pub fn cover_divisor(base_div: &OrlikDivisor, k: u64) -> Result<OrlikDivisor> {
    if k < 2 {
        return Err(Error::CoverRange(k));
    }
    base_div.integer_terms()?;
    let factor = &OrlikDivisor::generator(k) - &OrlikDivisor::one();
    Ok(&factor * base_div)
}

/// Controls the redundancy of [`build_cover_with`].
#[derive(Clone, Debug)]
pub struct CoverOptions {
    /// Also compute the divisor directly from the four-variable weights and
    /// require it to match.
    pub direct_path: bool,
    /// Skip the direct path when the cover degree `kd` exceeds this.
    pub direct_degree_limit: u64,
    pub link: LinkOptions,
}

impl Default for CoverOptions {
    fn default() -> Self {
        Self {
            direct_path: true,
            direct_degree_limit: DEFAULT_DIRECT_DEGREE_LIMIT,
            link: LinkOptions::default(),
        }
    }
}

/// The branched cover of a base link together with verified invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverLink {
    base: LinkInvariants,
    k: u64,
    invariants: LinkInvariants,
    direct_path_checked: bool,
    h2_order: BigUint,
}

impl CoverLink {
    pub fn base(&self) -> &LinkInvariants {
        &self.base
    }

    pub fn base_system(&self) -> &WeightSystem {
        self.base.system()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn cover_system(&self) -> &WeightSystem {
        self.invariants.system()
    }

    pub fn invariants(&self) -> &LinkInvariants {
        &self.invariants
    }

    /// Whether the four-variable divisor was computed and compared.
    pub fn direct_path_checked(&self) -> bool {
        self.direct_path_checked
    }

    /// `|H₂|` of the cover, equal to `k^{2g}`.
    pub fn h2_order(&self) -> &BigUint {
        &self.h2_order
    }

    pub fn b2(&self) -> u64 {
        self.invariants.multiplicity_of_unity()
    }
}

#[derive(Serialize)]
struct CoverReport<'a> {
    k: u64,
    base: &'a LinkInvariants,
    cover: &'a LinkInvariants,
    /// `null` when the direct path was skipped.
    paths_agree: Option<bool>,
    h2_order: String,
    expected_h2_order: String,
}

impl Serialize for CoverLink {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let genus = self.base.genus().expect("base is three-variable");
        CoverReport {
            k: self.k,
            base: &self.base,
            cover: &self.invariants,
            paths_agree: self.direct_path_checked.then_some(true),
            h2_order: self.h2_order.to_string(),
            expected_h2_order: expected_order(self.k, genus).to_string(),
        }
        .serialize(serializer)
    }
}

fn expected_order(k: u64, genus: u64) -> BigUint {
    num_traits::pow(BigUint::from(k), 2 * genus as usize)
}

/// Builds the cover with the default options.
pub fn build_cover(base: &WeightSystem, k: u64) -> Result<CoverLink> {
    build_cover_with(base, k, &CoverOptions::default())
}

/// Builds the k-fold cover of `base` and verifies it is a rational homology
/// sphere with `|H₂| = k^{2g}`.
///
/// The cover divisor is always obtained as `(Λ_k - 1) · div(base)`. Unless
/// disabled, it is also computed from the four-variable weights and the two
/// must be equal. Any disagreement, a nonzero `b₂`, or a torsion order other
/// than `k^{2g}` is a [`Error::TheoremViolation`].
pub fn build_cover_with(base: &WeightSystem, k: u64, options: &CoverOptions) -> Result<CoverLink> {
    let cover_system = cover_weights(base, k)?;
    let genus = base.genus()?;
    let base_inv = link_invariants_with(base, &options.link)?;
    let via_base = cover_divisor(base_inv.divisor(), k)?;

    let direct_path_checked = options.direct_path && cover_system.degree() <= options.direct_degree_limit;
    if direct_path_checked {
        let direct = milnor_orlik_divisor(&cover_system)?;
        if direct != via_base {
            return Err(Error::TheoremViolation(format!(
                "direct divisor {direct} differs from (Λ{k} - 1)·base = {via_base}"
            )));
        }
    }

    let invariants = LinkInvariants::from_divisor(cover_system, via_base, &options.link)?;
    if invariants.multiplicity_of_unity() != 0 {
        return Err(Error::TheoremViolation(format!(
            "cover has b2 = {}",
            invariants.multiplicity_of_unity()
        )));
    }
    let h2_order = invariants
        .delta_at_one()
        .cloned()
        .ok_or_else(|| Error::TheoremViolation("cover has no torsion order".into()))?;
    let expected = expected_order(k, genus);
    if h2_order != expected {
        return Err(Error::TheoremViolation(format!(
            "|H2| = {h2_order}, expected {k}^{} = {expected}",
            2 * genus
        )));
    }

    Ok(CoverLink {
        base: base_inv,
        k,
        invariants,
        direct_path_checked,
        h2_order,
    })
}

/// Invariants of `z₀^k + f₃` reported without any assertion. Unlike
/// [`build_cover`] this accepts `gcd(d, k) > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverDiagnostic {
    pub k: u64,
    pub coprime: bool,
    pub cover: WeightSystem,
    pub divisor: OrlikDivisor,
    /// Multiplicity of `t = 1`; `null` when the divisor has a pole there.
    pub b2: Option<u64>,
    /// `Δ(1)` when `b2` is zero.
    pub delta_at_one: Option<String>,
}

pub fn cover_diagnostic(base: &WeightSystem, k: u64) -> Result<CoverDiagnostic> {
    check_cover_input(base, k)?;
    let cover = unchecked_cover_weights(base, k)?;
    let base_div = milnor_orlik_divisor(base)?;
    let divisor = cover_divisor(&base_div, k)?;
    let (b2, delta_at_one) = match divisor.evaluate_at_one_reduced() {
        Ok(AtOne::Value(v)) => (Some(0), Some(v.to_string())),
        Ok(AtOne::Zero { multiplicity, .. }) => (Some(multiplicity), None),
        Err(Error::PoleAtOne { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(CoverDiagnostic {
        k,
        coprime: base.degree().gcd(&k) == 1,
        cover,
        divisor,
        b2,
        delta_at_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor_orlik::milnor_orlik_divisor;
    use num_rational::BigRational;

    fn ws(w: &[u64], d: u64) -> WeightSystem {
        WeightSystem::new(w.to_vec(), d).unwrap()
    }

    fn int_div(terms: &[(i64, i64)]) -> OrlikDivisor {
        OrlikDivisor::from_terms(
            terms
                .iter()
                .map(|&(j, c)| (j, BigRational::from_integer(c.into()))),
        )
        .unwrap()
    }

    #[test]
    fn weights_of_covers() {
        let c = cover_weights(&ws(&[1, 1, 1], 3), 2).unwrap();
        assert_eq!(c.weights(), &[3, 2, 2, 2]);
        assert_eq!(c.degree(), 6);
        let c = cover_weights(&ws(&[1, 2, 3], 7), 2).unwrap();
        assert_eq!(c.weights(), &[7, 2, 4, 6]);
        assert_eq!(c.degree(), 14);
        assert_eq!(
            cover_weights(&ws(&[1, 1, 1], 3), 3),
            Err(Error::NotCoprime { degree: 3, k: 3, gcd: 3 })
        );
        assert_eq!(cover_weights(&ws(&[1, 1, 1], 3), 1), Err(Error::CoverRange(1)));
        assert!(matches!(
            cover_weights(&ws(&[1, 1], 3), 2),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn divisors_of_covers() {
        assert_eq!(
            cover_divisor(&int_div(&[(3, 3), (1, -1)]), 2).unwrap(),
            int_div(&[(6, 3), (3, -3), (2, -1), (1, 1)])
        );
        assert_eq!(
            cover_divisor(&int_div(&[(7, 3), (1, -1)]), 2).unwrap(),
            int_div(&[(14, 3), (7, -3), (2, -1), (1, 1)])
        );
        assert!(cover_divisor(&OrlikDivisor::zero(), 5).unwrap().is_zero());
        assert_eq!(cover_divisor(&OrlikDivisor::one(), 1), Err(Error::CoverRange(1)));
    }

    #[test]
    fn direct_path_matches_for_cubic() {
        let base = ws(&[1, 1, 1], 3);
        let direct = milnor_orlik_divisor(&cover_weights(&base, 2).unwrap()).unwrap();
        let via = cover_divisor(&milnor_orlik_divisor(&base).unwrap(), 2).unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn build_examples() {
        let c = build_cover(&ws(&[1, 1, 1], 3), 2).unwrap();
        assert_eq!(c.h2_order(), &BigUint::from(4u32));
        assert_eq!(c.b2(), 0);
        assert!(c.direct_path_checked());

        let c = build_cover(&ws(&[1, 2, 3], 7), 5).unwrap();
        assert_eq!(c.h2_order(), &BigUint::from(25u32));

        let c = build_cover(&ws(&[1, 1, 1], 4), 3).unwrap();
        assert_eq!(c.base().genus(), Some(3));
        assert_eq!(c.h2_order(), &BigUint::from(729u32));
        assert_eq!(c.b2(), 0);
    }

    #[test]
    fn direct_path_can_be_skipped() {
        let opts = CoverOptions { direct_path: false, ..CoverOptions::default() };
        let c = build_cover_with(&ws(&[1, 1, 1], 3), 2, &opts).unwrap();
        assert!(!c.direct_path_checked());
        assert_eq!(c.h2_order(), &BigUint::from(4u32));

        // large k: divisor path only, degree bound exceeded
        let c = build_cover(&ws(&[1, 1, 1], 3), 1_000_000).unwrap();
        assert!(!c.direct_path_checked());
        assert!(c.invariants().char_poly().is_none());
        assert_eq!(c.h2_order(), &BigUint::from(1_000_000_000_000u64));
    }

    #[test]
    fn diagnostic_mode_reports_non_coprime() {
        let d = cover_diagnostic(&ws(&[1, 1, 1], 3), 3).unwrap();
        assert!(!d.coprime);
        // (Λ3 - 1)(3Λ3 - 1) = 9Λ3 - 3Λ3 - Λ3 + 1 = 5Λ3 + 1: b2 = 6
        assert_eq!(d.divisor, int_div(&[(3, 5), (1, 1)]));
        assert_eq!(d.b2, Some(6));
        assert_eq!(d.delta_at_one, None);

        let d = cover_diagnostic(&ws(&[1, 1, 1], 3), 2).unwrap();
        assert!(d.coprime);
        assert_eq!(d.b2, Some(0));
        assert_eq!(d.delta_at_one.as_deref(), Some("4"));
    }

    #[test]
    fn cover_report_fields() {
        let c = build_cover(&ws(&[1, 1, 1], 3), 2).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["paths_agree"], true);
        assert_eq!(v["h2_order"], "4");
        assert_eq!(v["cover"]["weights"], serde_json::json!([3, 2, 2, 2]));
        assert_eq!(v["base"]["genus"], 1);
    }
}

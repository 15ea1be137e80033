//! Realizing every torsion order `k²` by a cover of a genus-one link from the
//! prime family `f_p = z₁^p + z₂² z₃ + z₃² z₁`.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cover::{build_cover_with, CoverLink, CoverOptions};
use crate::error::{Error, Result};
use crate::primes::{family_primes, is_prime};
use crate::smale::{smale_decompositions, SmaleManifold};
use crate::weights::WeightSystem;

/// A member of the family with weights `(1, (p+1)/4, (p-1)/2)` and degree
/// `p`, for a prime `p = 4l - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    p: u64,
    l: u64,
    system: WeightSystem,
    genus: u64,
}

impl FamilyMember {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn system(&self) -> &WeightSystem {
        &self.system
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }
}

impl Serialize for FamilyMember {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FamilyMember", 5)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("l", &self.l)?;
        s.serialize_field("weights", self.system.weights())?;
        s.serialize_field("degree", &self.system.degree())?;
        s.serialize_field("genus", &self.genus)?;
        s.end()
    }
}

pub fn family_member(p: u64) -> Result<FamilyMember> {
    if !is_prime(p) {
        return Err(Error::FamilyDomain {
            p,
            reason: "not prime".into(),
        });
    }
    if p % 4 != 3 {
        return Err(Error::FamilyDomain {
            p,
            reason: "not congruent to 3 mod 4, so (p+1)/4 is not an integer".into(),
        });
    }
    let l = (p + 1) / 4;
    let (a, b) = (l, (p - 1) / 2);
    if a.gcd(&b) != 1 {
        return Err(Error::CrossCheck(format!("gcd({a}, {b}) != 1 for p = {p}")));
    }
    let system = WeightSystem::new(vec![1, a, b], p)?;
    let genus = system.genus()?;
    if genus != 1 {
        return Err(Error::CrossCheck(format!("family member p = {p} has genus {genus}")));
    }
    Ok(FamilyMember { p, l, system, genus })
}

/// What the order `k²` says about the manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Determination {
    /// `k` is squarefree; the order fixes the manifold.
    Unique(SmaleManifold),
    /// Several Smale manifolds share this order; the construction does not
    /// tell them apart.
    Undetermined(Vec<SmaleManifold>),
}

/// Evidence that the cover of a family member realizes `|H₂| = k²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationCertificate {
    k: u64,
    family: FamilyMember,
    cover: CoverLink,
    h2_order: BigUint,
    manifold: Determination,
}

impl RealizationCertificate {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn chosen_p(&self) -> u64 {
        self.family.p
    }

    pub fn family(&self) -> &FamilyMember {
        &self.family
    }

    pub fn cover(&self) -> &CoverLink {
        &self.cover
    }

    pub fn h2_order(&self) -> &BigUint {
        &self.h2_order
    }

    pub fn manifold(&self) -> &Determination {
        &self.manifold
    }

    pub fn candidates(&self) -> &[SmaleManifold] {
        match &self.manifold {
            Determination::Unique(m) => std::slice::from_ref(m),
            Determination::Undetermined(v) => v,
        }
    }

    pub fn group_undetermined(&self) -> bool {
        matches!(self.manifold, Determination::Undetermined(_))
    }
}

impl Serialize for RealizationCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let unique = match &self.manifold {
            Determination::Unique(m) => Some(m),
            Determination::Undetermined(_) => None,
        };
        let mut s = serializer.serialize_struct("RealizationCertificate", 9)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("chosen_p", &self.family.p)?;
        s.serialize_field("family", &self.family)?;
        s.serialize_field("cover", &self.cover)?;
        s.serialize_field("h2_order", &self.h2_order.to_string())?;
        s.serialize_field("b2", &self.cover.b2())?;
        s.serialize_field("group_undetermined", &self.group_undetermined())?;
        s.serialize_field("manifold", &unique)?;
        s.serialize_field("candidates", self.candidates())?;
        s.end()
    }
}

/// Realizes `|H₂| = k²` using the smallest family prime coprime to `k`.
pub fn realize(k: u64) -> Result<RealizationCertificate> {
    realize_with(k, None, &CoverOptions::default())
}

/// As [`realize`], optionally forcing the family prime.
pub fn realize_with(
    k: u64,
    prime: Option<u64>,
    options: &CoverOptions,
) -> Result<RealizationCertificate> {
    if k < 2 {
        return Err(Error::CoverRange(k));
    }
    let p = match prime {
        Some(p) => p,
        None => family_primes()
            .find(|p| p.gcd(&k) == 1)
            .expect("family primes are unbounded"),
    };
    let family = family_member(p)?;
    let cover = build_cover_with(family.system(), k, options)?;
    let h2_order = cover.h2_order().clone();
    let k_sq = BigUint::from(k) * BigUint::from(k);
    if h2_order != k_sq || cover.b2() != 0 {
        return Err(Error::TheoremViolation(format!(
            "k = {k}, p = {p}: |H2| = {h2_order}, b2 = {}",
            cover.b2()
        )));
    }
    let mut candidates = smale_decompositions(k);
    let manifold = if candidates.len() == 1 {
        Determination::Unique(candidates.remove(0))
    } else {
        Determination::Undetermined(candidates)
    };
    Ok(RealizationCertificate {
        k,
        family,
        cover,
        h2_order,
        manifold,
    })
}

/// Three-variable systems `w₁ ≤ w₂ ≤ w₃ ≤ d ≤ max_degree` whose genus
/// formula gives exactly `target_genus`, ordered by degree then weights.
///
/// For positive target genus, systems with `w₁ + w₂ + w₃ > d` are skipped
/// without evaluating the formula.
pub fn search_weight_systems(target_genus: u64, max_degree: u64) -> Vec<WeightSystem> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for w1 in 1..=d {
            for w2 in w1..=d {
                for w3 in w2..=d {
                    if target_genus > 0 && w1 + w2 + w3 > d {
                        break;
                    }
                    let ws = WeightSystem::new(vec![w1, w2, w3], d).expect("positive entries");
                    if ws.genus() == Ok(target_genus) {
                        out.push(ws);
                    }
                }
            }
        }
    }
    out
}

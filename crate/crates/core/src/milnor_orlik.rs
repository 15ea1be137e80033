//! Link invariants of weighted homogeneous singularities from the
//! Milnor–Orlik divisor of the monodromy characteristic polynomial.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::divisor::{AtOne, OrlikDivisor};
use crate::error::{Error, Result};
use crate::poly::CharPolynomial;
use crate::weights::WeightSystem;

/// Degree above which [`link_invariants`] leaves the characteristic
/// polynomial out of the report.
pub const DEFAULT_CHAR_POLY_DEGREE_LIMIT: u64 = 20_000;

/// The factor `Λ_u / v - 1` contributed by one variable.
pub fn linear_factor(u: u64, v: u64) -> OrlikDivisor {
    assert!(u >= 1 && v >= 1);
    let lam = OrlikDivisor::term(u, BigRational::new(BigInt::one(), BigInt::from(v)));
    &lam - &OrlikDivisor::one()
}

/// `∏ (Λ_{u_i} / v_i - 1)` with no integrality check. Intermediate and
/// final coefficients may be fractional.
pub fn milnor_orlik_product(ws: &WeightSystem) -> OrlikDivisor {
    ws.reduced_ratios()
        .into_iter()
        .fold(OrlikDivisor::one(), |acc, (u, v)| &acc * &linear_factor(u, v))
}

/// The divisor of the characteristic polynomial of the link of `ws`.
///
/// For weights of an isolated singularity the product is integral. A
/// fractional result means the weights admit no such polynomial and is
/// reported as [`Error::NonIntegral`].
pub fn milnor_orlik_divisor(ws: &WeightSystem) -> Result<OrlikDivisor> {
    let div = milnor_orlik_product(ws);
    if !div.is_integral() {
        return Err(Error::NonIntegral(format!(
            "divisor of {ws} is {div}; the weights define no isolated singularity"
        )));
    }
    Ok(div)
}

/// Number of `(t - 1)` factors of `Δ`: `b₁` for a three-variable link,
/// `b₂` for a four-variable one.
pub fn betti_from_divisor(div: &OrlikDivisor) -> Result<u64> {
    let sum = div.coefficient_sum();
    if !sum.is_integer() {
        return Err(Error::NonIntegral(format!("coefficient sum {sum}")));
    }
    if sum.is_negative() {
        return Err(Error::MalformedDivisor(sum.to_string()));
    }
    Ok(sum.to_integer().to_u64().expect("multiplicity exceeds u64"))
}

/// Fails unless `∏ (t^j - 1)^{c_j}` is a polynomial, i.e. every cyclotomic
/// exponent is non-negative.
pub fn check_polynomial(div: &OrlikDivisor) -> Result<()> {
    div.integer_terms()?;
    if let Some((e, n)) = div
        .cyclotomic_exponents()
        .into_iter()
        .find(|(_, n)| n.is_negative())
    {
        return Err(Error::NotAPolynomial {
            index: e,
            exponent: n.to_string(),
        });
    }
    Ok(())
}

/// `(t^j - 1)^c` as sparse terms, from the binomial theorem.
fn binomial_power(j: usize, c: u64) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(c as usize + 1);
    let mut binom = BigInt::one();
    for i in 0..=c {
        let sign_negative = (c - i) % 2 == 1;
        let coeff = if sign_negative { -binom.clone() } else { binom.clone() };
        out.push((i as usize * j, coeff));
        binom = binom * BigInt::from(c - i) / BigInt::from(i + 1);
    }
    out
}

fn product_of_powers<'a, I>(factors: I) -> CharPolynomial
where
    I: Iterator<Item = (u64, &'a BigInt)>,
{
    factors.fold(CharPolynomial::one(), |acc, (j, c)| {
        let j = usize::try_from(j).expect("index exceeds usize");
        let c = c.abs().to_u64().expect("exponent exceeds u64");
        acc.mul_sparse(&binomial_power(j, c))
    })
}

/// `Δ(t) = ∏ (t^j - 1)^{c_j}` for the full stored divisor (the `Λ₁`
/// coefficient supplies any `(t - 1)^{-1}`).
///
/// Polynomiality is decided up front from the cyclotomic exponents. The
/// numerator and denominator are then expanded from binomial powers and
/// divided exactly; a nonzero remainder at that point is an internal error.
pub fn char_poly_from_divisor(div: &OrlikDivisor) -> Result<CharPolynomial> {
    check_polynomial(div)?;
    let terms = div.integer_terms()?;
    let numerator = product_of_powers(
        terms
            .iter()
            .filter(|(_, c)| c.is_positive())
            .map(|(j, c)| (*j, c)),
    );
    let denominator = product_of_powers(
        terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(j, c)| (*j, c)),
    );
    numerator.div_exact(&denominator)
}

/// Controls optional expensive parts of [`LinkInvariants`].
#[derive(Clone, Debug)]
pub struct LinkOptions {
    /// Expand `Δ(t)` only when its degree is at most this; `None` means no
    /// limit.
    pub char_poly_degree_limit: Option<u64>,
}

impl Default for LinkOptions {
    fn default() -> Self {
        Self {
            char_poly_degree_limit: Some(DEFAULT_CHAR_POLY_DEGREE_LIMIT),
        }
    }
}

/// Betti number, characteristic polynomial and torsion order of a link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkInvariants {
    system: WeightSystem,
    divisor: OrlikDivisor,
    multiplicity_of_unity: u64,
    char_poly: Option<CharPolynomial>,
    delta_at_one: Option<BigUint>,
    genus: Option<u64>,
}

impl LinkInvariants {
    /// Assembles the invariants of `system` from an already computed
    /// divisor, cross-checking every redundant quantity.
    pub fn from_divisor(
        system: WeightSystem,
        divisor: OrlikDivisor,
        options: &LinkOptions,
    ) -> Result<Self> {
        divisor.integer_terms()?;
        let multiplicity = betti_from_divisor(&divisor)?;
        check_polynomial(&divisor)?;

        let at_one = divisor.evaluate_at_one_reduced()?;
        if at_one.multiplicity() != multiplicity {
            return Err(Error::CrossCheck(format!(
                "evaluation reports multiplicity {} but coefficient sum is {multiplicity}",
                at_one.multiplicity()
            )));
        }
        let delta_at_one = match &at_one {
            AtOne::Value(v) => {
                if !v.is_integer() || !v.is_positive() {
                    return Err(Error::CrossCheck(format!(
                        "Δ(1) = {v} is not a positive integer"
                    )));
                }
                Some(v.to_integer().to_biguint().expect("checked positive"))
            }
            AtOne::Zero { .. } => None,
        };

        let degree = divisor.degree().to_integer();
        let within_limit = match options.char_poly_degree_limit {
            None => true,
            Some(limit) => degree <= BigInt::from(limit),
        };
        let char_poly = if within_limit {
            let poly = char_poly_from_divisor(&divisor)?;
            let poly_degree = poly.degree().map(BigInt::from).unwrap_or_default();
            if poly_degree != degree {
                return Err(Error::CrossCheck(format!(
                    "Δ has degree {poly_degree}, divisor predicts {degree}"
                )));
            }
            let value = poly.value_at_one();
            let expected = delta_at_one.clone().map(BigInt::from).unwrap_or_else(BigInt::zero);
            if value != expected {
                return Err(Error::CrossCheck(format!(
                    "Δ(1) = {value} but divisor evaluation gives {expected}"
                )));
            }
            Some(poly)
        } else {
            None
        };

        let genus = if system.arity() == 3 {
            let g = system.genus()?;
            if 2 * g != multiplicity {
                return Err(Error::CrossCheck(format!(
                    "genus {g} of {system} disagrees with b1 = {multiplicity}"
                )));
            }
            Some(g)
        } else {
            None
        };

        Ok(Self {
            system,
            divisor,
            multiplicity_of_unity: multiplicity,
            char_poly,
            delta_at_one,
            genus,
        })
    }

    pub fn system(&self) -> &WeightSystem {
        &self.system
    }

    pub fn divisor(&self) -> &OrlikDivisor {
        &self.divisor
    }

    /// `b₁` for three variables, `b₂` for four.
    pub fn multiplicity_of_unity(&self) -> u64 {
        self.multiplicity_of_unity
    }

    pub fn char_poly(&self) -> Option<&CharPolynomial> {
        self.char_poly.as_ref()
    }

    /// `|H₂|` for a rational homology sphere link; absent otherwise.
    pub fn delta_at_one(&self) -> Option<&BigUint> {
        self.delta_at_one.as_ref()
    }

    pub fn genus(&self) -> Option<u64> {
        self.genus
    }

    /// Name of the Betti number the multiplicity counts.
    pub fn betti_label(&self) -> String {
        match self.system.arity() {
            3 => "b1".into(),
            4 => "b2".into(),
            _ => "multiplicity".into(),
        }
    }
}

#[derive(Serialize)]
struct LinkReport<'a> {
    weights: &'a [u64],
    degree: u64,
    divisor: &'a OrlikDivisor,
    betti: u64,
    betti_label: String,
    genus: Option<u64>,
    delta_poly: Option<&'a CharPolynomial>,
    delta_at_one: Option<String>,
}

impl Serialize for LinkInvariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LinkReport {
            weights: self.system.weights(),
            degree: self.system.degree(),
            divisor: &self.divisor,
            betti: self.multiplicity_of_unity,
            betti_label: self.betti_label(),
            genus: self.genus,
            delta_poly: self.char_poly.as_ref(),
            delta_at_one: self.delta_at_one.as_ref().map(|v| v.to_string()),
        }
        .serialize(serializer)
    }
}

/// Every invariant of the link of `ws`, with the default options.
pub fn link_invariants(ws: &WeightSystem) -> Result<LinkInvariants> {
    link_invariants_with(ws, &LinkOptions::default())
}

pub fn link_invariants_with(ws: &WeightSystem, options: &LinkOptions) -> Result<LinkInvariants> {
    let divisor = milnor_orlik_divisor(ws)?;
    LinkInvariants::from_divisor(ws.clone(), divisor, options)
}

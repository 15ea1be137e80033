//! Brute-force verification paths that share nothing with the divisor
//! algebra beyond the input representation.
//!
//! [`UnityRootMultiset`] checks the group-ring relations from first
//! principles by listing roots of unity as angle fractions. [`oracle_expand`]
//! multiplies and divides `t^j - 1` factors one at a time.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

use crate::divisor::OrlikDivisor;
use crate::error::{Error, Result};
use crate::poly::CharPolynomial;

/// A multiset of roots of unity `exp(2πi x)`, stored by their reduced angle
/// fraction `x ∈ [0, 1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnityRootMultiset {
    roots: BTreeMap<Ratio<u64>, u64>,
}

impl UnityRootMultiset {
    /// The roots of `t^j - 1`: the fractions `m/j` for `0 ≤ m < j`.
    pub fn of_binomial(j: u64) -> Self {
        assert!(j >= 1);
        let mut roots = BTreeMap::new();
        for m in 0..j {
            *roots.entry(Ratio::new(m, j)).or_insert(0) += 1;
        }
        Self { roots }
    }

    /// Total multiplicity (the degree of the polynomial with these roots).
    pub fn total(&self) -> u64 {
        self.roots.values().sum()
    }

    /// Multiplicity of the root with angle fraction `x` (taken mod 1).
    pub fn multiplicity(&self, x: Ratio<u64>) -> u64 {
        let x = x - Ratio::from_integer(x.to_integer());
        self.roots.get(&x).copied().unwrap_or(0)
    }

    /// `self` repeated `n` times.
    pub fn repeated(&self, n: u64) -> Self {
        Self {
            roots: self
                .roots
                .iter()
                .filter(|_| n > 0)
                .map(|(x, m)| (*x, m * n))
                .collect(),
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut roots = self.roots.clone();
        for (x, m) in &other.roots {
            *roots.entry(*x).or_insert(0) += m;
        }
        Self { roots }
    }

    /// The group-ring product: `{x + y mod 1}` over all pairs, with
    /// multiplicities multiplied.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut roots = BTreeMap::new();
        for (x, mx) in &self.roots {
            for (y, my) in &other.roots {
                let s = x + y;
                let s = if s >= Ratio::from_integer(1) {
                    s - Ratio::from_integer(1)
                } else {
                    s
                };
                *roots.entry(s).or_insert(0) += mx * my;
            }
        }
        Self { roots }
    }

    /// The root multiset of `∏ (t^j - 1)^{c_j}` for a divisor with
    /// non-negative integer coefficients.
    pub fn from_effective_divisor(div: &OrlikDivisor) -> Result<Self> {
        let mut out = Self::default();
        for (j, c) in div.integer_terms()? {
            if c.is_negative() {
                return Err(Error::NotAPolynomial {
                    index: j,
                    exponent: c.to_string(),
                });
            }
            let c = c.to_u64().expect("multiplicity exceeds u64");
            out = out.union(&Self::of_binomial(j).repeated(c));
        }
        Ok(out)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Ratio<u64>, u64)> + '_ {
        self.roots.iter().map(|(x, m)| (*x, *m))
    }

    /// Order of the root of unity `x`, i.e. the reduced denominator.
    pub fn order_of(x: Ratio<u64>) -> u64 {
        *x.reduced().denom()
    }
}

/// Expands `∏ (t^j - 1)^{c_j}` by multiplying every positive factor into a
/// running dense polynomial one binomial at a time, then dividing out every
/// negative factor one binomial at a time with a zero-remainder check.
///
/// Makes no use of the `gcd`/`lcm` product relation.
pub fn oracle_expand(div: &OrlikDivisor) -> Result<CharPolynomial> {
    let terms = div.integer_terms()?;
    let mut poly = CharPolynomial::one();
    for (j, c) in terms.iter().filter(|(_, c)| c.is_positive()) {
        let j = to_usize(*j);
        for _ in 0..c.to_u64().expect("exponent exceeds u64") {
            poly.mul_cyclic_binomial(j);
        }
    }
    for (j, c) in terms.iter().filter(|(_, c)| c.is_negative()) {
        let ju = to_usize(*j);
        for _ in 0..(-c).to_u64().expect("exponent exceeds u64") {
            poly.div_cyclic_binomial(ju).map_err(|_| Error::NotAPolynomial {
                index: *j,
                exponent: c.to_string(),
            })?;
        }
    }
    Ok(poly)
}

fn to_usize(j: u64) -> usize {
    usize::try_from(j).expect("index exceeds usize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn int_div(terms: &[(i64, i64)]) -> OrlikDivisor {
        OrlikDivisor::from_terms(
            terms
                .iter()
                .map(|&(j, c)| (j, BigRational::from_integer(c.into()))),
        )
        .unwrap()
    }

    #[test]
    fn binomial_roots() {
        let r = UnityRootMultiset::of_binomial(4);
        assert_eq!(r.total(), 4);
        assert_eq!(r.multiplicity(Ratio::new(1, 2)), 1);
        assert_eq!(r.multiplicity(Ratio::new(1, 3)), 0);
        assert_eq!(UnityRootMultiset::order_of(Ratio::new(2, 4)), 2);
    }

    #[test]
    fn convolution_matches_relation_small() {
        // Λ2 Λ3 = Λ6, Λ2 Λ4 = 2 Λ4
        let a = UnityRootMultiset::of_binomial(2);
        assert_eq!(a.convolve(&UnityRootMultiset::of_binomial(3)), UnityRootMultiset::of_binomial(6));
        assert_eq!(
            a.convolve(&UnityRootMultiset::of_binomial(4)),
            UnityRootMultiset::of_binomial(4).repeated(2)
        );
    }

    #[test]
    fn expand_small_cases() {
        assert_eq!(oracle_expand(&OrlikDivisor::one()).unwrap(), CharPolynomial::from_i64s(&[-1, 1]));
        // (t^2-1)(t^3-1)/(t-1) = (t+1)(t^3-1) = t^4 + t^3 - t - 1
        assert_eq!(
            oracle_expand(&int_div(&[(2, 1), (3, 1), (1, -1)])).unwrap(),
            CharPolynomial::from_i64s(&[-1, -1, 0, 1, 1])
        );
        // (t^3-1)^3/(t-1) has degree 8 and value 0 at 1
        let p = oracle_expand(&int_div(&[(3, 3), (1, -1)])).unwrap();
        assert_eq!(p.degree(), Some(8));
        assert_eq!(p.deflate_at_one(2).unwrap().value_at_one(), 27.into());
    }

    #[test]
    fn expand_rejects_non_polynomials() {
        assert!(matches!(
            oracle_expand(&int_div(&[(2, -1)])),
            Err(Error::NotAPolynomial { .. })
        ));
        assert!(matches!(
            oracle_expand(&int_div(&[(6, 1), (4, -1)])),
            Err(Error::NotAPolynomial { .. })
        ));
        assert!(matches!(
            oracle_expand(&OrlikDivisor::term(3, BigRational::new(1.into(), 2.into()))),
            Err(Error::NonIntegral(_))
        ));
    }
}

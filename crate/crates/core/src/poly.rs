//! Dense integer polynomials in one variable, with the handful of exact
//! operations the characteristic-polynomial routes need.

use std::fmt;
use std::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial, constant term first. The leading coefficient is
/// nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharPolynomial {
    coeffs: Vec<BigInt>,
}

impl CharPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor for small coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `t^j - 1`.
    pub fn cyclic_binomial(j: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[j] += 1;
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies in place by `t^j - 1`.
    pub fn mul_cyclic_binomial(&mut self, j: usize) {
        assert!(j >= 1);
        if self.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + j, BigInt::zero());
        // new[i] = old[i - j] - old[i]; walk downwards so old[i - j] is intact.
        for i in (0..n + j).rev() {
            let old = mem::take(&mut self.coeffs[i]);
            let mut v = -old;
            if i >= j {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                v += &lo[i - j];
                hi[0] = v;
            } else {
                self.coeffs[i] = v;
            }
        }
        self.trim();
    }

    /// Divides in place by `t^j - 1`, failing unless the remainder is zero.
    pub fn div_cyclic_binomial(&mut self, j: usize) -> Result<()> {
        assert!(j >= 1);
        let Some(n) = self.degree() else {
            return Ok(());
        };
        if n < j {
            return Err(Error::InexactDivision(format!(
                "degree {n} polynomial is not divisible by t^{j} - 1"
            )));
        }
        let m = n - j;
        // p_i = q_{i-j} - q_i, so q_i = q_{i-j} - p_i, built in place.
        for i in 0..=m {
            let p = mem::take(&mut self.coeffs[i]);
            let mut q = -p;
            if i >= j {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                q += &lo[i - j];
                hi[0] = q;
            } else {
                self.coeffs[i] = q;
            }
        }
        // The top j coefficients must reproduce q_{i-j}.
        for i in m + 1..=n {
            let consistent = if i >= j {
                self.coeffs[i] == self.coeffs[i - j]
            } else {
                self.coeffs[i].is_zero()
            };
            if !consistent {
                return Err(Error::InexactDivision(format!(
                    "nonzero remainder dividing by t^{j} - 1"
                )));
            }
        }
        self.coeffs.truncate(m + 1);
        self.trim();
        Ok(())
    }

    /// Exact quotient `self / divisor`. The divisor must be nonzero with a
    /// unit leading coefficient; any nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &CharPolynomial) -> Result<CharPolynomial> {
        let dn = divisor
            .degree()
            .ok_or_else(|| Error::InexactDivision("division by the zero polynomial".into()))?;
        let lead = &divisor.coeffs[dn];
        if !lead.abs().is_one() {
            return Err(Error::InexactDivision(format!(
                "divisor leading coefficient {lead} is not a unit"
            )));
        }
        let Some(n) = self.degree() else {
            return Ok(CharPolynomial::zero());
        };
        if n < dn {
            return Err(Error::InexactDivision(format!(
                "degree {n} dividend below divisor degree {dn}"
            )));
        }
        let lower: Vec<(usize, &BigInt)> = divisor.coeffs[..dn]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let negate = lead.is_negative();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dn + 1];
        for k in (0..=n - dn).rev() {
            let mut q = mem::take(&mut rem[k + dn]);
            if q.is_zero() {
                continue;
            }
            if negate {
                q = -q;
            }
            for &(i, c) in &lower {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem[..dn].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder".into()));
        }
        Ok(CharPolynomial::from_coeffs(quot))
    }

    /// Removes `m` factors of `(t - 1)` by synthetic division.
    pub fn deflate_at_one(&self, m: u64) -> Result<CharPolynomial> {
        let mut coeffs = self.coeffs.clone();
        let mut start = 0;
        for _ in 0..m {
            if start == coeffs.len() {
                break;
            }
            // Suffix sums: coeffs[i] becomes the quotient coefficient of
            // t^(i - 1), and the lowest entry the remainder.
            for i in (start..coeffs.len() - 1).rev() {
                let (lo, hi) = coeffs.split_at_mut(i + 1);
                lo[i] += &hi[0];
            }
            if !coeffs[start].is_zero() {
                return Err(Error::InexactDivision(
                    "polynomial does not vanish at t = 1".into(),
                ));
            }
            start += 1;
        }
        coeffs.drain(..start);
        Ok(CharPolynomial::from_coeffs(coeffs))
    }

    /// Multiplies by a polynomial given as sparse `(power, coefficient)`
    /// terms, skipping zero coefficients on both sides.
    pub fn mul_sparse(&self, terms: &[(usize, BigInt)]) -> CharPolynomial {
        let Some(n) = self.degree() else {
            return CharPolynomial::zero();
        };
        let top = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); n + top + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (e, b) in terms {
                out[i + e] += a * b;
            }
        }
        CharPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &CharPolynomial) -> CharPolynomial {
        let terms: Vec<(usize, BigInt)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        self.mul_sparse(&terms)
    }

    /// Content (gcd of the coefficients); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl Serialize for CharPolynomial {
    /// Coefficients as base-10 strings, constant term first.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

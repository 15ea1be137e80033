//! Sparse arithmetic in the span of the elements `Λ_j` of the rational group
//! ring of `C*`.
//!
//! `Λ_j` is the divisor (root multiset) of `t^j - 1`. Products reduce with
//! `Λ_a Λ_b = gcd(a, b) Λ_lcm(a, b)`, so the span is closed under
//! multiplication and `Λ_1` is the ring identity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite rational combination `Σ c_j Λ_j` kept in canonical sparse form.
///
/// Every stored index is at least 1 and no stored coefficient is zero, so
/// the empty map is the unique zero and derived equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrlikDivisor {
    terms: BTreeMap<u64, BigRational>,
}

/// Value at `t = 1` of `∏ (t^j - 1)^{c_j}` after the `(t - 1)` factors are
/// cancelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtOne {
    /// The product has no zero or pole at 1; this is its value there.
    Value(BigRational),
    /// The product vanishes at 1 to the given order. `reduced_value` is the
    /// value of the product divided by `(t - 1)^multiplicity`.
    Zero {
        multiplicity: u64,
        reduced_value: BigRational,
    },
}

impl AtOne {
    /// The value after removing every `(t - 1)` factor, whichever variant.
    pub fn reduced_value(&self) -> &BigRational {
        match self {
            AtOne::Value(v) => v,
            AtOne::Zero { reduced_value, .. } => reduced_value,
        }
    }

    pub fn multiplicity(&self) -> u64 {
        match self {
            AtOne::Value(_) => 0,
            AtOne::Zero { multiplicity, .. } => *multiplicity,
        }
    }
}

impl OrlikDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The ring identity `Λ_1`.
    pub fn one() -> Self {
        Self::generator(1)
    }

    /// `Λ_j` with coefficient 1. Rejects `j < 1`.
    pub fn lambda(j: i64) -> Result<Self> {
        if j < 1 {
            return Err(Error::InvalidIndex(j));
        }
        Ok(Self::generator(j as u64))
    }

    /// `Λ_j` for an index already known to be positive.
    ///
    /// Panics if `j == 0`.
    pub fn generator(j: u64) -> Self {
        assert!(j >= 1, "divisor index must be positive");
        Self::term(j, BigRational::one())
    }

    /// `c Λ_j`, or zero when `c` is zero. Panics if `j == 0`.
    pub fn term(j: u64, c: BigRational) -> Self {
        assert!(j >= 1, "divisor index must be positive");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(j, c);
        }
        Self { terms }
    }

    /// Builds a divisor from arbitrary `(index, coefficient)` pairs,
    /// summing repeated indices and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut map: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (j, c) in terms {
            if j < 1 {
                return Err(Error::InvalidIndex(j));
            }
            *map.entry(j as u64).or_insert_with(BigRational::zero) += c;
        }
        Ok(Self::canonical(map))
    }

    fn canonical(mut terms: BTreeMap<u64, BigRational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `Λ_j` (zero when absent).
    pub fn coefficient(&self, j: u64) -> BigRational {
        self.terms.get(&j).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> + '_ {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(j, c)| (*j, c * q)).collect(),
        }
    }

    /// `Σ c_j`: the multiplicity of the root `t = 1` in `∏ (t^j - 1)^{c_j}`.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// `Σ j c_j`, the degree of `∏ (t^j - 1)^{c_j}`.
    pub fn degree(&self) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (j, c)| acc + c * BigInt::from(*j))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The coefficients as integers, or a [`Error::NonIntegral`] naming the
    /// first offending term.
    pub fn integer_terms(&self) -> Result<Vec<(u64, BigInt)>> {
        self.terms
            .iter()
            .map(|(j, c)| {
                if c.is_integer() {
                    Ok((*j, c.to_integer()))
                } else {
                    Err(Error::NonIntegral(format!("coefficient {c} at index {j}")))
                }
            })
            .collect()
    }

    /// Evaluates `∏ (t^j - 1)^{c_j}` at `t = 1` after cancelling `(t - 1)`
    /// factors, i.e. returns `∏ j^{c_j}` tagged with the order of vanishing.
    pub fn evaluate_at_one_reduced(&self) -> Result<AtOne> {
        let terms = self.integer_terms()?;
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let mut sum = BigInt::zero();
        for (j, c) in &terms {
            sum += c;
            let e = c
                .abs()
                .to_usize()
                .expect("coefficient exponent exceeds addressable range");
            let power = num_traits::pow(BigUint::from(*j), e);
            if c.is_positive() {
                num *= power;
            } else {
                den *= power;
            }
        }
        let value = BigRational::new(BigInt::from(num), BigInt::from(den));
        if sum.is_zero() {
            Ok(AtOne::Value(value))
        } else if sum.is_positive() {
            Ok(AtOne::Zero {
                multiplicity: sum.to_u64().expect("multiplicity exceeds u64"),
                reduced_value: value,
            })
        } else {
            Err(Error::PoleAtOne {
                order: (-sum).to_u64().expect("pole order exceeds u64"),
            })
        }
    }

    /// Exponents `n_e = Σ_{e | j} c_j` of the cyclotomic polynomials `Φ_e`
    /// in `∏ (t^j - 1)^{c_j} = ∏ Φ_e^{n_e}`, for every `e` dividing some
    /// support index. Zero exponents are omitted.
    pub fn cyclotomic_exponents(&self) -> BTreeMap<u64, BigRational> {
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (j, c) in &self.terms {
            for e in divisors(*j) {
                *out.entry(e).or_insert_with(BigRational::zero) += c;
            }
        }
        out.retain(|_, n| !n.is_zero());
        out
    }
}

/// All positive divisors of `n`, ascending.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn lcm_checked(a: u64, b: u64) -> u64 {
    (a / a.gcd(&b))
        .checked_mul(b)
        .expect("divisor index overflowed u64")
}

impl Add for &OrlikDivisor {
    type Output = OrlikDivisor;

    fn add(self, rhs: &OrlikDivisor) -> OrlikDivisor {
        let mut terms = self.terms.clone();
        for (j, c) in &rhs.terms {
            *terms.entry(*j).or_insert_with(BigRational::zero) += c;
        }
        OrlikDivisor::canonical(terms)
    }
}

impl Neg for &OrlikDivisor {
    type Output = OrlikDivisor;

    fn neg(self) -> OrlikDivisor {
        OrlikDivisor {
            terms: self.terms.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }
}

impl Sub for &OrlikDivisor {
    type Output = OrlikDivisor;

    fn sub(self, rhs: &OrlikDivisor) -> OrlikDivisor {
        self + &(-rhs)
    }
}

impl Mul for &OrlikDivisor {
    type Output = OrlikDivisor;

    fn mul(self, rhs: &OrlikDivisor) -> OrlikDivisor {
        let mut terms: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let g = a.gcd(b);
                let l = lcm_checked(*a, *b);
                let c = ca * cb * BigInt::from(g);
                *terms.entry(l).or_insert_with(BigRational::zero) += c;
            }
        }
        OrlikDivisor::canonical(terms)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for OrlikDivisor {
            type Output = OrlikDivisor;
            fn $m(self, rhs: OrlikDivisor) -> OrlikDivisor {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for OrlikDivisor {
    type Output = OrlikDivisor;
    fn neg(self) -> OrlikDivisor {
        -&self
    }
}

impl fmt::Display for OrlikDivisor {
    /// Descending index order, e.g. `3Λ6 - 3Λ3 - Λ2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (j, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*j, mag.is_one()) {
                (1, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "Λ{j}")?,
                (_, false) if mag.is_integer() => write!(f, "{mag}Λ{j}")?,
                (_, false) => write!(f, "({mag})Λ{j}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    j: i64,
    num: String,
    den: String,
}

impl Serialize for OrlikDivisor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .terms
            .iter()
            .map(|(j, c)| WireTerm {
                j: *j as i64,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrlikDivisor {
    /// Accepts only the canonical encoding: strictly ascending indices,
    /// positive reduced denominators, nonzero numerators.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireTerm>::deserialize(deserializer)?;
        decode_terms(wire).map_err(D::Error::custom)
    }
}

fn decode_terms(wire: Vec<WireTerm>) -> Result<OrlikDivisor> {
    let mut terms = BTreeMap::new();
    let mut last = 0i64;
    for t in wire {
        if t.j < 1 {
            return Err(Error::InvalidIndex(t.j));
        }
        if t.j <= last {
            return Err(Error::InvalidEncoding(format!(
                "index {} is out of ascending order",
                t.j
            )));
        }
        last = t.j;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| Error::InvalidEncoding(format!("not a base-10 integer: {s:?}")))
        };
        let num = parse(&t.num)?;
        let den = parse(&t.den)?;
        if !den.is_positive() {
            return Err(Error::InvalidEncoding(format!("denominator {den} at index {}", t.j)));
        }
        if num.is_zero() {
            return Err(Error::InvalidEncoding(format!("zero coefficient at index {}", t.j)));
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::InvalidEncoding(format!("{num}/{den} is not reduced")));
        }
        terms.insert(t.j as u64, BigRational::new_raw(num, den));
    }
    Ok(OrlikDivisor { terms })
}

//! Pairs `(t, p)` with `p` prime and `p | q(t)`, for primes increasing
//! without bound.
//!
//! Any nonconstant integer polynomial has infinitely many prime divisors
//! among its values, so the scan below always terminates; the ceiling on
//! `t` only bounds runaway inputs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Default upper bound on `t` for [`prime_parameter_sequence`].
pub const DEFAULT_SEARCH_CEILING: u64 = 1_000_000;

const TRIAL_DIVISION_BOUND: u32 = 1000;

/// Integer coefficients, constant term first. Nonconstant with positive
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidPolynomial("polynomial must be nonconstant".into()));
        }
        if coeffs.last().unwrap().sign() != Sign::Plus {
            return Err(Error::InvalidPolynomial("leading coefficient must be positive".into()));
        }
        Ok(IntegerPolynomial { coeffs })
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, t: u64) -> BigInt {
        let x = BigInt::from(t);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// `q(t) mod p`, in `0..p`.
    fn eval_mod(&self, t: u64, p: u64) -> u64 {
        let (t, p) = (t as u128 % p as u128, p as u128);
        let mut acc = 0u128;
        for c in self.coeffs.iter().rev() {
            let c = c.mod_floor(&BigInt::from(p)).to_u128().expect("reduced below p");
            acc = (acc * t + c) % p;
        }
        acc as u64
    }

    /// `q(t)` when it is positive.
    fn positive_value(&self, t: u64) -> Option<BigUint> {
        let v = self.eval(t);
        (v.sign() == Sign::Plus).then(|| v.magnitude().clone())
    }
}

impl FromStr for IntegerPolynomial {
    type Err = Error;

    /// Comma-separated coefficients, constant term first: `"1,0,1"` is `x^2 + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.magnitude();
            let unit = *mag == BigUint::from(1u32);
            match deg {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                d if unit => write!(f, "x^{d}")?,
                d => write!(f, "{mag}*x^{d}")?,
            }
        }
        Ok(())
    }
}

/// `p` prime dividing `q(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ParameterPair {
    pub t: u64,
    pub p: u64,
}

impl fmt::Display for ParameterPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.p)
    }
}

/// Distinct prime factors of `value`, ascending: trial division first, then
/// the `num-prime` factorizer on the cofactor.
pub fn prime_factors(value: &BigUint) -> Result<Vec<BigUint>> {
    let mut rest = value.clone();
    let mut out = Vec::new();
    for d in num_prime::nt_funcs::primes(TRIAL_DIVISION_BOUND as u64) {
        let d = BigUint::from(d);
        if &d * &d > rest {
            break;
        }
        if (&rest % &d).is_zero() {
            while (&rest % &d).is_zero() {
                rest /= &d;
            }
            out.push(d);
        }
    }
    if rest > BigUint::from(1u32) {
        if let Some(small) = rest.to_u128() {
            out.extend(num_prime::nt_funcs::factorize128(small).into_keys().map(BigUint::from));
        } else {
            let (found, unfactored) = num_prime::nt_funcs::factors(rest.clone(), None);
            if unfactored.is_some() {
                return Err(Error::InvalidArgument(format!("could not factor {rest}")));
            }
            out.extend(found.into_keys());
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn to_prime_u64(p: &BigUint) -> Result<u64> {
    p.to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("prime {p} exceeds 64 bits")))
}

/// Scans `t = 1, 2, ...`, accepting at each `t` the smallest prime factor of
/// `q(t)` above the last accepted prime (initially `p_min`). Each accepted
/// prime is reported with the least `t` for which `p | q(t)` and `q(t) > 0`.
/// Nonpositive values of `q` are skipped.
pub fn prime_parameter_sequence(
    q: &IntegerPolynomial,
    count: usize,
    p_min: u64,
    ceiling: u64,
) -> Result<Vec<ParameterPair>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(count);
    let mut last = p_min;
    for t in 1..=ceiling {
        let Some(value) = q.positive_value(t) else {
            continue;
        };
        let next = prime_factors(&value)?
            .into_iter()
            .find(|f| *f > BigUint::from(last));
        let Some(p) = next else {
            continue;
        };
        let p = to_prime_u64(&p)?;
        let t_min = (1..=t)
            .find(|&s| q.eval_mod(s, p) == 0 && q.positive_value(s).is_some())
            .expect("t itself qualifies");
        out.push(ParameterPair { t: t_min, p });
        last = p;
        if out.len() == count {
            return Ok(out);
        }
    }
    Err(Error::SearchExhausted { ceiling })
}

/// All primes dividing some positive `q(t)` with `1 <= t <= bound`.
pub fn divisor_prime_census(q: &IntegerPolynomial, bound: u64, exec: Execution) -> Result<BTreeSet<u64>> {
    if bound == 0 {
        return Err(Error::InvalidArgument("census bound must be at least 1".into()));
    }
    let ts: Vec<u64> = (1..=bound).collect();
    let per_t = exec.map(&ts, |&t| match q.positive_value(t) {
        Some(v) => prime_factors(&v),
        None => Ok(Vec::new()),
    });
    let mut out = BTreeSet::new();
    for factors in per_t {
        for f in factors? {
            out.insert(to_prime_u64(&f)?);
        }
    }
    Ok(out)
}

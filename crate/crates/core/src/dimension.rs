//! Specht-module dimensions from the hook length formula, and their
//! polynomial dependence on `n` for the family `(n - |μ|, μ)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{hook_lengths, Partition};
use crate::polynomial::RationalPolynomial;

/// `n! / prod(hooks)`, the number of standard tableaux of shape `lambda`.
pub fn specht_dimension(lambda: &Partition) -> Result<BigUint> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let factorial: BigUint = (1..=lambda.size() as u64).map(BigUint::from).product();
    let hooks: BigUint = hook_lengths(lambda).values().map(|&h| BigUint::from(h)).product();
    debug_assert!((&factorial % &hooks) == BigUint::ZERO);
    Ok(factorial / hooks)
}

/// The family `n ↦ (n - |tail|, tail)`, defined once the first row is at
/// least as long as the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaddedShape {
    tail: Partition,
}

impl PaddedShape {
    pub fn new(tail: Partition) -> Self {
        PaddedShape { tail }
    }

    pub fn tail(&self) -> &Partition {
        &self.tail
    }

    /// `k = |μ|`.
    pub fn weight(&self) -> usize {
        self.tail.size()
    }

    /// Least `n` for which `(n - |μ|, μ)` is a partition.
    pub fn threshold(&self) -> usize {
        if self.tail.is_empty() {
            0
        } else {
            self.tail.size() + self.tail.first_part()
        }
    }

    /// `(n - |μ|, μ)`, or `None` below the threshold.
    pub fn at(&self, n: usize) -> Option<Partition> {
        if n < self.threshold() {
            return None;
        }
        Some(Partition::with_first_row(n - self.weight(), &self.tail))
    }
}

impl From<Partition> for PaddedShape {
    fn from(tail: Partition) -> Self {
        PaddedShape::new(tail)
    }
}

impl fmt::Display for PaddedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tail.is_empty() {
            return write!(f, "(n)");
        }
        let tail = self.tail.to_string();
        write!(f, "(n-{},{})", self.weight(), &tail[1..tail.len() - 1])
    }
}

const EXTRA_CHECKS: usize = 3;

/// Polynomial `P` with `P(n) = dim S^(n-|μ|, μ)` for every `n` at or above
/// the threshold. Built by exact interpolation at `|μ| + 1` points and
/// checked at three more.
pub fn specht_dimension_polynomial(shape: &PaddedShape) -> RationalPolynomial {
    let start = shape.threshold().max(1);
    let sample = |n: usize| -> (BigRational, BigRational) {
        let lambda = shape.at(n).expect("n is above the threshold");
        let dim = specht_dimension(&lambda).expect("nonempty");
        (
            BigRational::from_integer(BigInt::from(n)),
            BigRational::from_integer(dim.into()),
        )
    };
    let k = shape.weight();
    let points: Vec<_> = (start..=start + k).map(sample).collect();
    let poly = RationalPolynomial::interpolate(&points);
    for n in start + k + 1..=start + k + EXTRA_CHECKS {
        let (x, y) = sample(n);
        assert_eq!(poly.eval(&x), y, "dimension of {shape} is not polynomial at n = {n}");
    }
    debug_assert!(poly.degree() == Some(k) || (k == 0 && poly.coeffs()[0].is_one()));
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_formula_examples() {
        assert_eq!(specht_dimension(&p(&[2, 1])).unwrap(), 2u32.into());
        assert_eq!(specht_dimension(&p(&[5, 2])).unwrap(), 14u32.into());
        assert_eq!(specht_dimension(&p(&[7])).unwrap(), 1u32.into());
        assert_eq!(specht_dimension(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn padded_shape_threshold() {
        assert_eq!(PaddedShape::new(Partition::empty()).threshold(), 0);
        assert_eq!(PaddedShape::new(p(&[2])).threshold(), 4);
        assert_eq!(PaddedShape::new(p(&[2, 1])).threshold(), 5);
        assert_eq!(PaddedShape::new(p(&[2])).at(3), None);
        assert_eq!(PaddedShape::new(p(&[2])).at(7), Some(p(&[5, 2])));
    }

    #[test]
    fn polynomial_examples() {
        let poly = |tail: &[usize]| specht_dimension_polynomial(&PaddedShape::new(p(tail))).to_string();
        assert_eq!(poly(&[]), "1");
        assert_eq!(poly(&[1]), "n - 1");
        assert_eq!(poly(&[2]), "1/2*n^2 - 3/2*n");
        // (n-1)(n-2)/2
        assert_eq!(poly(&[1, 1]), "1/2*n^2 - 3/2*n + 1");
    }

    #[test]
    fn polynomial_matches_hook_formula_on_window() {
        for k in 0..=4 {
            for tail in partitions_of(k) {
                let shape = PaddedShape::new(tail);
                let poly = specht_dimension_polynomial(&shape);
                for n in shape.threshold().max(1)..=shape.threshold() + 10 {
                    let dim = specht_dimension(&shape.at(n).unwrap()).unwrap();
                    assert_eq!(poly.eval_integer(n as i64), Some(BigInt::from(dim)), "{shape} at {n}");
                }
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 1..=8u32 {
            let total: BigUint = partitions_of(n as usize)
                .iter()
                .map(|l| specht_dimension(l).unwrap().pow(2))
                .sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn conjugate_has_same_dimension() {
        for n in 1..=9 {
            for l in partitions_of(n) {
                assert_eq!(specht_dimension(&l), specht_dimension(&l.conjugate()));
            }
        }
    }
}

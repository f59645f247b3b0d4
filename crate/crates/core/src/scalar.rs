//! Numeric backends for set-function values.

use core::fmt::Debug;
use core::ops::{AddAssign, SubAssign};

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Exact,
    Float64,
}

/// A value type a [`SetFunction`](crate::SetFunction) can hold.
///
/// Only two implementations exist, one per [`ScalarMode`]. Keeping the mode
/// in the type makes mixing exact and floating values in one table
/// unrepresentable.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Signed
    + FromPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    const MODE: ScalarMode;

    fn from_integer(v: i64) -> Self {
        Self::from_i64(v).expect("every i64 is representable")
    }

    /// Converts a tolerance constant into this backend. Exact conversion for
    /// rationals (every finite double is dyadic).
    fn from_tolerance(v: f64) -> Self;

    /// In-place subset-sum sweep over a table of length `2^n`: adds (zeta)
    /// or subtracts (Möbius) each lower half into its upper half, one
    /// coordinate at a time.
    fn subset_sweep(values: &mut [Self], subtract: bool) {
        sweep(values, subtract);
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

fn sweep<T>(values: &mut [T], subtract: bool)
where
    T: for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T>,
{
    let mut bit = 1;
    while bit < values.len() {
        for block in values.chunks_exact_mut(bit * 2) {
            let (lo, hi) = block.split_at_mut(bit);
            for (l, h) in lo.iter().zip(hi) {
                if subtract {
                    *h -= l;
                } else {
                    *h += l;
                }
            }
        }
        bit <<= 1;
    }
}

impl Scalar for Rational {
    const MODE: ScalarMode = ScalarMode::Exact;

    /// Sweeps integer numerators over a common denominator, so only the
    /// final values pay for a gcd.
    fn subset_sweep(values: &mut [Self], subtract: bool) {
        let denom = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let mut numers: Vec<BigInt> = values.iter().map(|v| v.numer() * (&denom / v.denom())).collect();
        sweep(&mut numers, subtract);
        for (v, p) in values.iter_mut().zip(numers) {
            *v = Rational::new(p, denom.clone());
        }
    }

    fn from_tolerance(v: f64) -> Self {
        Rational::from_float(v).unwrap_or_else(Rational::zero)
    }
}

impl Scalar for f64 {
    const MODE: ScalarMode = ScalarMode::Float64;

    fn from_tolerance(v: f64) -> Self {
        v
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Zero-test threshold: `max(absolute, relative * scale)`.
///
/// `scale` is the largest magnitude among the values the residual was
/// computed from. [`Tolerance::EXACT`] makes the test a plain `== 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute: f64,
}

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance { relative: 0.0, absolute: 0.0 };
    pub const FLOAT: Tolerance = Tolerance { relative: 1e-9, absolute: 1e-12 };

    /// The default for a backend: exact zero for rationals, `FLOAT` otherwise.
    pub fn for_mode(mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Exact => Self::EXACT,
            ScalarMode::Float64 => Self::FLOAT,
        }
    }

    pub fn threshold<T: Scalar>(&self, scale: &T) -> T {
        let abs = T::from_tolerance(self.absolute);
        let rel = T::from_tolerance(self.relative) * scale.abs();
        abs.max_of(rel)
    }

    pub fn is_negligible<T: Scalar>(&self, value: &T, scale: &T) -> bool {
        value.abs() <= self.threshold(scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_tolerance_is_equality() {
        let tol = Tolerance::EXACT;
        let scale = integer(1_000_000);
        assert!(tol.is_negligible(&Rational::zero(), &scale));
        assert!(!tol.is_negligible(&rational(1, 1_000_000_000), &scale));
    }

    #[test]
    fn float_tolerance_has_absolute_floor() {
        let tol = Tolerance::FLOAT;
        assert!(tol.is_negligible(&5e-13, &0.0));
        assert!(!tol.is_negligible(&5e-12, &0.0));
        assert!(tol.is_negligible(&5e-7, &1000.0));
        assert!(!tol.is_negligible(&5e-6, &1000.0));
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rational(6, -4);
        assert_eq!(r, rational(-3, 2));
        assert!(r.denom() > &BigInt::zero());
    }
}

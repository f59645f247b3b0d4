//! Subset masks, dense set functions and the zeta/Möbius transform pair.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{Scalar, Tolerance};
use crate::{Error, Result};

/// Default cap on the ground-set size (2^20 values per table).
pub const MAX_N: usize = 20;

/// Largest `n` any cap override may request; masks are `u32`.
pub const ABSOLUTE_MAX_N: usize = 30;

/// A subset `S ⊆ [n]`: bit `i` is set iff element `i + 1` belongs to `S`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> Self {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    /// Builds a mask from 1-based element labels.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::MaskOutOfRange { mask: e as u32, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn fits(self, n: usize) -> bool {
        (self.0 as u64) < (1u64 << n)
    }

    pub fn check(self, n: usize) -> Result<Self> {
        if self.fits(n) {
            Ok(self)
        } else {
            Err(Error::MaskOutOfRange { mask: self.0, n })
        }
    }

    /// Membership of the 0-based coordinate `i`.
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    /// 0-based coordinates in increasing order.
    pub fn coordinates(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// 1-based element labels in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        self.coordinates().map(|i| i + 1)
    }

    /// All subsets of `self`, in decreasing mask order, ending with `∅`.
    pub fn submasks(self) -> Submasks {
        Submasks { full: self.0, next: Some(self.0) }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, e) in self.elements().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub struct Submasks {
    full: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == 0 { None } else { Some((cur - 1) & self.full) };
        Some(SubsetMask(cur))
    }
}

/// Masks of popcount `size` below `2^n`, in increasing order (Gosper's hack).
pub fn masks_of_size(n: usize, size: usize) -> impl Iterator<Item = SubsetMask> {
    let limit = 1u64 << n;
    let mut next = if size > n { None } else { Some((1u64 << size) - 1) };
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let lowest = cur & cur.wrapping_neg();
            let ripple = cur + lowest;
            let candidate = (((ripple ^ cur) >> 2) / lowest) | ripple;
            (candidate < limit).then_some(candidate)
        };
        Some(SubsetMask(cur as u32))
    })
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// The 0/1 vector of `mask` in `R^n`.
pub fn indicator_vector<T: Scalar>(mask: SubsetMask, n: usize) -> Result<Vec<T>> {
    mask.check(n)?;
    Ok((0..n)
        .map(|i| if mask.contains(i) { T::one() } else { T::zero() })
        .collect())
}

fn check_ground_size(n: usize, cap: usize) -> Result<()> {
    let max = cap.min(ABSOLUTE_MAX_N);
    if n == 0 || n > max {
        Err(Error::GroundSizeOutOfRange { n, max })
    } else {
        Ok(())
    }
}

/// A set function `F : 2^[n] -> T`, stored densely by mask.
#[derive(Debug, Clone, PartialEq)]
pub struct SetFunction<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> SetFunction<T> {
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        Self::with_cap(n, values, MAX_N)
    }

    /// Like [`SetFunction::new`] with a caller-chosen cap on `n`.
    pub fn with_cap(n: usize, values: Vec<T>, cap: usize) -> Result<Self> {
        check_ground_size(n, cap)?;
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: values.len() });
        }
        Ok(SetFunction { n, values })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        check_ground_size(n, MAX_N)?;
        Ok(SetFunction { n, values: vec![T::zero(); 1 << n] })
    }

    pub fn from_fn(n: usize, f: impl FnMut(SubsetMask) -> T) -> Result<Self> {
        check_ground_size(n, MAX_N)?;
        let values = (0..1u32 << n).map(SubsetMask).map(f).collect();
        Ok(SetFunction { n, values })
    }

    /// The function `x ↦ a·x + b` restricted to indicator vectors.
    pub fn affine(coefficients: &[T], offset: T) -> Result<Self> {
        Self::from_fn(coefficients.len(), |s| {
            let mut v = offset.clone();
            for i in s.coordinates() {
                v += &coefficients[i];
            }
            v
        })
    }

    /// `δ_T`: one on `T`, zero elsewhere.
    pub fn delta(n: usize, at: SubsetMask) -> Result<Self> {
        at.check(n)?;
        Self::from_fn(n, |s| if s == at { T::one() } else { T::zero() })
    }

    /// `φ_T(S) = [T ⊆ S]`, the zeta image of the unit spectrum at `T`.
    pub fn up_indicator(n: usize, at: SubsetMask) -> Result<Self> {
        at.check(n)?;
        Self::from_fn(n, |s| if at.is_subset_of(s) { T::one() } else { T::zero() })
    }

    /// For tables derived from an already validated one.
    pub(crate) fn from_raw(n: usize, values: Vec<T>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        SetFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn get(&self, mask: SubsetMask) -> &T {
        &self.values[mask.index()]
    }

    pub fn set(&mut self, mask: SubsetMask, value: T) {
        self.values[mask.index()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &T)> {
        self.values.iter().enumerate().map(|(i, v)| (SubsetMask(i as u32), v))
    }

    /// Largest `|F(S)|`; the reference scale for float tolerances.
    pub fn max_abs(&self) -> T {
        max_abs(&self.values)
    }
}

fn max_abs<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc.max_of(v.abs()))
}

/// Per-cardinality aggregate of a Möbius spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderNorm<T> {
    pub order: usize,
    pub max_abs: T,
    pub sum_abs: T,
}

/// The Möbius transform `F̂` of a set function.
#[derive(Debug, Clone, PartialEq)]
pub struct MoebiusSpectrum<T> {
    n: usize,
    values: Vec<T>,
    order_norms: Vec<OrderNorm<T>>,
    scale: T,
}

impl<T: Scalar> MoebiusSpectrum<T> {
    /// Wraps raw coefficients `F̂(S)`.
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        Self::with_cap(n, values, MAX_N)
    }

    pub fn with_cap(n: usize, values: Vec<T>, cap: usize) -> Result<Self> {
        let as_function = SetFunction::with_cap(n, values, cap)?;
        Ok(Self::from_raw(n, as_function.values))
    }

    pub(crate) fn from_raw(n: usize, values: Vec<T>) -> Self {
        let scale = max_abs(&zeta_in_place(values.clone()));
        Self::assemble(n, values, scale)
    }

    /// Spectrum with a single unit coefficient at `at`.
    pub fn unit(n: usize, at: SubsetMask) -> Result<Self> {
        let delta = SetFunction::<T>::delta(n, at)?;
        Self::new(n, delta.values)
    }

    fn assemble(n: usize, values: Vec<T>, scale: T) -> Self {
        let mut order_norms: Vec<OrderNorm<T>> = (0..=n)
            .map(|order| OrderNorm { order, max_abs: T::zero(), sum_abs: T::zero() })
            .collect();
        for (i, v) in values.iter().enumerate() {
            let norm = &mut order_norms[(i as u32).count_ones() as usize];
            let a = v.abs();
            norm.sum_abs += &a;
            if a > norm.max_abs {
                norm.max_abs = a;
            }
        }
        MoebiusSpectrum { n, values, order_norms, scale }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, mask: SubsetMask) -> &T {
        &self.values[mask.index()]
    }

    pub fn order_norms(&self) -> &[OrderNorm<T>] {
        &self.order_norms
    }

    /// Largest `|F(S)|` of the function this spectrum describes.
    pub fn scale(&self) -> &T {
        &self.scale
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &T)> {
        self.values.iter().enumerate().map(|(i, v)| (SubsetMask(i as u32), v))
    }
}

fn moebius_in_place<T: Scalar>(mut values: Vec<T>) -> Vec<T> {
    T::subset_sweep(&mut values, true);
    values
}

fn zeta_in_place<T: Scalar>(mut values: Vec<T>) -> Vec<T> {
    T::subset_sweep(&mut values, false);
    values
}

/// `F̂(S) = Σ_{T⊆S} (−1)^{|S|−|T|} F(T)`, by one differencing sweep per
/// coordinate (`O(n·2^n)`).
pub fn moebius_transform<T: Scalar>(f: &SetFunction<T>) -> MoebiusSpectrum<T> {
    let scale = f.max_abs();
    MoebiusSpectrum::assemble(f.n, moebius_in_place(f.values.clone()), scale)
}

/// `F(S) = Σ_{T⊆S} F̂(T)`; inverse of [`moebius_transform`].
pub fn zeta_transform<T: Scalar>(spectrum: &MoebiusSpectrum<T>) -> SetFunction<T> {
    SetFunction { n: spectrum.n, values: zeta_in_place(spectrum.values.clone()) }
}

/// Per-order spectrum mass and the largest order carrying non-negligible
/// mass (`None` for the zero function).
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionSpectrum<T> {
    pub orders: Vec<OrderNorm<T>>,
    pub max_order: Option<usize>,
}

pub fn interaction_spectrum<T: Scalar>(
    spectrum: &MoebiusSpectrum<T>,
    tol: &Tolerance,
) -> InteractionSpectrum<T> {
    let max_order = spectrum
        .order_norms
        .iter()
        .rev()
        .find(|norm| !tol.is_negligible(&norm.max_abs, &spectrum.scale))
        .map(|norm| norm.order);
    InteractionSpectrum { orders: spectrum.order_norms.clone(), max_order }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwiseOp {
    Add,
    Sub,
    Scale,
    Max,
}

/// Right-hand side of a pointwise operation.
#[derive(Debug, Clone, Copy)]
pub enum Operand<'a, T> {
    Function(&'a SetFunction<T>),
    Scalar(&'a T),
}

pub fn pointwise<T: Scalar>(
    op: PointwiseOp,
    left: &SetFunction<T>,
    right: Operand<'_, T>,
) -> Result<SetFunction<T>> {
    let apply = |a: &T, b: &T| -> T {
        match op {
            PointwiseOp::Add => a.clone() + b.clone(),
            PointwiseOp::Sub => a.clone() - b.clone(),
            PointwiseOp::Scale => a.clone() * b.clone(),
            PointwiseOp::Max => a.clone().max_of(b.clone()),
        }
    };
    let values = match right {
        Operand::Function(other) => {
            if op == PointwiseOp::Scale {
                return Err(Error::ScalarOperandRequired);
            }
            if other.n != left.n {
                return Err(Error::DimensionMismatch { left: left.n, right: other.n });
            }
            left.values.iter().zip(&other.values).map(|(a, b)| apply(a, b)).collect()
        }
        Operand::Scalar(c) => left.values.iter().map(|a| apply(a, c)).collect(),
    };
    Ok(SetFunction { n: left.n, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, Rational};
    use num_traits::Zero;

    fn worked_example() -> SetFunction<Rational> {
        let v = [0, 1, 2, 5, 3, 6, 7, 12];
        SetFunction::new(3, v.iter().map(|&x| integer(x)).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| integer(x)).collect()
    }

    #[test]
    fn indicator_vectors() {
        let e: Vec<Rational> = indicator_vector(SubsetMask::EMPTY, 3).unwrap();
        assert_eq!(e, ints(&[0, 0, 0]));
        let s = SubsetMask::from_elements(3, &[1, 3]).unwrap();
        assert_eq!(indicator_vector::<Rational>(s, 3).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(indicator_vector::<Rational>(SubsetMask::full(4), 4).unwrap(), ints(&[1, 1, 1, 1]));
        assert!(matches!(
            indicator_vector::<Rational>(SubsetMask(8), 3),
            Err(Error::MaskOutOfRange { mask: 8, n: 3 })
        ));
    }

    #[test]
    fn constant_function_spectrum() {
        let f = SetFunction::from_fn(4, |_| integer(7)).unwrap();
        let spec = moebius_transform(&f);
        assert_eq!(spec.get(SubsetMask::EMPTY), &integer(7));
        assert!(spec.values()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn worked_example_spectrum() {
        // Masks 0..8: ∅, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}.
        let spec = moebius_transform(&worked_example());
        assert_eq!(spec.values(), ints(&[0, 1, 2, 2, 3, 2, 2, 0]).as_slice());
        let inter = interaction_spectrum(&spec, &Tolerance::EXACT);
        assert_eq!(inter.max_order, Some(2));
        assert!(inter.orders[3].sum_abs.is_zero());
        assert_eq!(inter.orders[2].sum_abs, integer(6));
    }

    #[test]
    fn zero_spectrum_gives_zero_function() {
        let spec = MoebiusSpectrum::<Rational>::new(3, vec![Rational::zero(); 8]).unwrap();
        assert!(zeta_transform(&spec).values().iter().all(Zero::is_zero));
        assert_eq!(interaction_spectrum(&spec, &Tolerance::EXACT).max_order, None);
    }

    #[test]
    fn delta_on_full_set_has_top_order_mass() {
        let f = SetFunction::<Rational>::delta(4, SubsetMask::full(4)).unwrap();
        let spec = moebius_transform(&f);
        assert_eq!(spec.get(SubsetMask::full(4)), &integer(1));
        assert_eq!(interaction_spectrum(&spec, &Tolerance::EXACT).max_order, Some(4));
    }

    #[test]
    fn pointwise_ops() {
        let f = worked_example();
        let zero = Rational::zero();
        assert_eq!(pointwise(PointwiseOp::Add, &f, Operand::Scalar(&zero)).unwrap(), f);
        assert_eq!(pointwise(PointwiseOp::Max, &f, Operand::Function(&f)).unwrap(), f);
        let two = integer(2);
        let doubled = pointwise(PointwiseOp::Scale, &f, Operand::Scalar(&two)).unwrap();
        assert_eq!(doubled.get(SubsetMask(7)), &integer(24));
        let g = SetFunction::<Rational>::zeros(2).unwrap();
        assert!(matches!(
            pointwise(PointwiseOp::Add, &f, Operand::Function(&g)),
            Err(Error::DimensionMismatch { left: 3, right: 2 })
        ));
        assert_eq!(
            pointwise(PointwiseOp::Scale, &f, Operand::Function(&f)),
            Err(Error::ScalarOperandRequired)
        );
    }

    #[test]
    fn constructor_rejects_bad_shapes() {
        assert!(matches!(
            SetFunction::<f64>::new(3, vec![0.0; 7]),
            Err(Error::LengthMismatch { expected: 8, actual: 7 })
        ));
        assert!(matches!(
            SetFunction::<f64>::new(0, vec![0.0]),
            Err(Error::GroundSizeOutOfRange { .. })
        ));
        assert!(SetFunction::<f64>::zeros(21).is_err());
        assert!(SetFunction::<f64>::with_cap(21, vec![0.0; 1 << 21], 22).is_ok());
    }

    #[test]
    fn gosper_enumeration_is_sorted_and_complete() {
        for n in 0..=8 {
            for size in 0..=n + 1 {
                let got: Vec<u32> = masks_of_size(n, size).map(SubsetMask::bits).collect();
                let want: Vec<u32> = (0..1u32 << n).filter(|m| m.count_ones() as usize == size).collect();
                assert_eq!(got, want, "n={n} size={size}");
                assert_eq!(got.len() as u64, binomial(n, size));
            }
        }
    }

    #[test]
    fn submask_iteration() {
        let s = SubsetMask(0b1011);
        let subs: Vec<u32> = s.submasks().map(SubsetMask::bits).collect();
        assert_eq!(subs, [11, 10, 9, 8, 3, 2, 1, 0]);
        assert_eq!(SubsetMask::EMPTY.submasks().count(), 1);
    }

    #[test]
    fn mask_display_is_one_based() {
        assert_eq!(alloc::format!("{}", SubsetMask(0b101)), "{1,3}");
        assert_eq!(alloc::format!("{}", SubsetMask::EMPTY), "{}");
    }
}

//! Coordinates of `F_M` in the basis `{φ_T : T ∈ I(M)}`, where
//! `φ_T(S) = [T ⊆ S]`, plus projection and extension from low-order data.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::lattice::{moebius_transform, zeta_transform, MoebiusSpectrum, SetFunction, SubsetMask};
use crate::matroid::{Matroid, UniformMatroid};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Coefficients `c_T`, keyed by every independent set of the matroid.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisCoefficients<T> {
    matroid: Matroid,
    coeffs: BTreeMap<SubsetMask, T>,
}

impl<T: Scalar> BasisCoefficients<T> {
    /// Missing independent keys become zero; a dependent key is an error.
    pub fn new(matroid: Matroid, mut coeffs: BTreeMap<SubsetMask, T>) -> Result<Self> {
        let n = matroid.n();
        for &s in coeffs.keys() {
            s.check(n)?;
            if !matroid.is_independent(s) {
                return Err(Error::DependentCoefficient(s.bits()));
            }
        }
        for s in matroid.independent_sets() {
            coeffs.entry(s).or_insert_with(T::zero);
        }
        Ok(BasisCoefficients { matroid, coeffs })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn coeffs(&self) -> &BTreeMap<SubsetMask, T> {
        &self.coeffs
    }

    pub fn get(&self, s: SubsetMask) -> Option<&T> {
        self.coeffs.get(&s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<T> {
    pub coeffs: BasisCoefficients<T>,
    /// Dependent masks with a nonzero Möbius coefficient.
    pub residual: Vec<(SubsetMask, T)>,
}

pub fn decompose<T: Scalar>(f: &SetFunction<T>, m: &Matroid) -> Result<Decomposition<T>> {
    if f.n() != m.n() {
        return Err(Error::DimensionMismatch { left: f.n(), right: m.n() });
    }
    let spectrum = moebius_transform(f);
    let mut coeffs = BTreeMap::new();
    let mut residual = Vec::new();
    for (s, v) in spectrum.iter() {
        if m.is_independent(s) {
            coeffs.insert(s, v.clone());
        } else if !v.is_zero() {
            residual.push((s, v.clone()));
        }
    }
    Ok(Decomposition { coeffs: BasisCoefficients { matroid: m.clone(), coeffs }, residual })
}

/// `F(S) = Σ_{T ⊆ S, T ∈ I(M)} c_T`.
pub fn reconstruct<T: Scalar>(c: &BasisCoefficients<T>) -> Result<SetFunction<T>> {
    let n = c.matroid.n();
    let mut values = alloc::vec![T::zero(); 1 << n];
    for (s, v) in &c.coeffs {
        values[s.index()] = v.clone();
    }
    Ok(zeta_transform(&MoebiusSpectrum::from_raw(n, values)))
}

/// Drops the Möbius coefficients on dependent sets.
pub fn project<T: Scalar>(f: &SetFunction<T>, m: &Matroid) -> Result<SetFunction<T>> {
    if f.n() != m.n() {
        return Err(Error::DimensionMismatch { left: f.n(), right: m.n() });
    }
    let truncated: Vec<T> = moebius_transform(f)
        .iter()
        .map(|(s, v)| if m.is_independent(s) { v.clone() } else { T::zero() })
        .collect();
    Ok(zeta_transform(&MoebiusSpectrum::from_raw(f.n(), truncated)))
}

/// Values of a set function on every subset of size at most `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LowOrderTable<T> {
    n: usize,
    k: usize,
    values: BTreeMap<SubsetMask, T>,
}

impl<T: Scalar> LowOrderTable<T> {
    /// Rejects masks out of range or larger than `k`, and any missing mask.
    pub fn new(n: usize, k: usize, values: BTreeMap<SubsetMask, T>) -> Result<Self> {
        UniformMatroid::new(n, k)?;
        for &s in values.keys() {
            s.check(n)?;
            if s.len() > k {
                return Err(Error::MaskTooLarge { mask: s.bits(), k });
            }
        }
        let table = LowOrderTable { n, k, values };
        if let Some(missing) = table.first_missing() {
            return Err(Error::IncompleteTable(missing.bits()));
        }
        Ok(table)
    }

    fn first_missing(&self) -> Option<SubsetMask> {
        (0..1u64 << self.n)
            .map(|s| SubsetMask(s as u32))
            .find(|s| s.len() <= self.k && !self.values.contains_key(s))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &BTreeMap<SubsetMask, T> {
        &self.values
    }
}

/// The unique member of the Möbius-support space of `M_{n,k}` that agrees
/// with the table on every subset of size at most `k`.
///
/// `F̂(T)` for `|T| ≤ k` only reads values on subsets of `T`, so it is
/// available from the table alone; higher coefficients are set to zero.
pub fn extend_from_low_order<T: Scalar>(
    table: &LowOrderTable<T>,
    m: &UniformMatroid,
) -> Result<SetFunction<T>> {
    if table.n != m.n() {
        return Err(Error::DimensionMismatch { left: table.n, right: m.n() });
    }
    let k = m.k();
    if table.k < k {
        let missing = crate::lattice::masks_of_size(m.n(), table.k + 1).next();
        return Err(Error::IncompleteTable(missing.map_or(0, SubsetMask::bits)));
    }
    let filled = SetFunction::from_raw(
        table.n,
        (0..1u32 << table.n)
            .map(SubsetMask)
            .map(|s| if s.len() <= k { table.values[&s].clone() } else { T::zero() })
            .collect(),
    );
    let truncated: Vec<T> = moebius_transform(&filled)
        .iter()
        .map(|(s, v)| if s.len() <= k { v.clone() } else { T::zero() })
        .collect();
    Ok(zeta_transform(&MoebiusSpectrum::from_raw(table.n, truncated)))
}

/// A triple `{i, j, l}` whose second-order difference does not vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleViolation<T> {
    pub triple: SubsetMask,
    /// `F(ijl) − F(ij) − F(il) − F(jl) + F(i) + F(j) + F(l) − F(∅)`.
    pub residual: T,
}

/// Every triple whose defining relation fails; empty for `n < 3`.
pub fn triple_relation_check<T: Scalar>(f: &SetFunction<T>) -> Vec<TripleViolation<T>> {
    crate::lattice::masks_of_size(f.n(), 3)
        .filter_map(|triple| {
            let mut residual = T::zero();
            for s in triple.submasks() {
                if s.len() % 2 == 1 {
                    residual += f.get(s);
                } else {
                    residual -= f.get(s);
                }
            }
            (!residual.is_zero()).then_some(TripleViolation { triple, residual })
        })
        .collect()
}

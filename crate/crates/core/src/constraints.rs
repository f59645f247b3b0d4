//! Circuit functionals and the constraint map `T : R^{2^n} -> R^{|C|}`.
//!
//! Two spaces are in play and they are not the same once `n > k + 1`:
//!
//! * the *circuit-only* kernel `ker T = {F : α_C(F) = 0 for every circuit C}`;
//! * the *Möbius-support* space `{F : F̂(S) = 0 for every dependent S}`.
//!
//! The second is contained in the first. Their gap is reported by
//! [`kernel_dimension`] as `discrepancy`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::lattice::{moebius_transform, SetFunction, SubsetMask};
use crate::linalg::{SparseEchelon, SparseRow};
use crate::matroid::Matroid;
use crate::scalar::{Scalar, Tolerance};
use crate::{Error, Result};

/// Largest ground set for which [`kernel_dimension`] runs exact elimination.
pub const EXACT_RANK_MAX_N: usize = 14;

/// `α_C(F) = Σ_{S⊆C} (−1)^{|C|−|S|} F(S)`, summed directly over the
/// `2^{|C|}` subsets of `C`.
pub fn alpha<T: Scalar>(circuit: SubsetMask, f: &SetFunction<T>) -> Result<T> {
    circuit.check(f.n())?;
    let top = circuit.len();
    let mut acc = T::zero();
    for s in circuit.submasks() {
        if (top - s.len()).is_multiple_of(2) {
            acc += f.get(s);
        } else {
            acc -= f.get(s);
        }
    }
    Ok(acc)
}

/// One row of `T`: the signed subsets of a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRow {
    pub circuit: SubsetMask,
    /// `(S, (−1)^{|C|−|S|})` for `S ⊆ C`, in decreasing mask order.
    pub entries: Vec<(SubsetMask, i8)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintMatrix {
    n: usize,
    rows: Vec<ConstraintRow>,
}

pub fn build_constraint_matrix(m: &Matroid) -> ConstraintMatrix {
    let rows = m
        .circuits()
        .map(|c| {
            let top = c.len();
            let entries = c
                .submasks()
                .map(|s| (s, if (top - s.len()).is_multiple_of(2) { 1 } else { -1 }))
                .collect();
            ConstraintRow { circuit: c, entries }
        })
        .collect();
    ConstraintMatrix { n: m.n(), rows }
}

impl ConstraintMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[ConstraintRow] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        1 << self.n
    }

    /// `T·vec(F)`, one entry per circuit.
    pub fn apply<T: Scalar>(&self, f: &SetFunction<T>) -> Result<Vec<T>> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: f.n() });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for &(s, sign) in &row.entries {
                    if sign > 0 {
                        acc += f.get(s);
                    } else {
                        acc -= f.get(s);
                    }
                }
                acc
            })
            .collect())
    }

    /// Dense integer form, rows × `2^n`.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = alloc::vec![0i64; self.column_count()];
                for &(s, sign) in &row.entries {
                    dense[s.index()] = sign as i64;
                }
                dense
            })
            .collect()
    }

    /// Exact rank over `Q` by sparse fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut echelon = SparseEchelon::new();
        for row in &self.rows {
            let sparse: SparseRow =
                row.entries.iter().map(|&(s, sign)| (s.bits(), BigInt::from(sign))).collect();
            echelon.insert(sparse);
        }
        echelon.rank()
    }
}

/// Dimension count for a matroid's constraint system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub n: usize,
    /// Rank of a uniform matroid; `None` for explicit circuit families.
    pub k: Option<usize>,
    pub circuit_count: u64,
    pub rank_t: u64,
    /// `2^n − rank_t`: dimension of the circuit-only kernel.
    pub kernel_dim: u64,
    /// `|I(M)|`: dimension of the Möbius-support space.
    pub independent_count: u64,
    pub discrepancy: u64,
}

pub fn kernel_dimension(m: &Matroid) -> Result<DimensionReport> {
    let n = m.n();
    if n > EXACT_RANK_MAX_N {
        return Err(Error::SizeCapExceeded { n, max: EXACT_RANK_MAX_N });
    }
    let matrix = build_constraint_matrix(m);
    let rank_t = matrix.rank() as u64;
    let kernel_dim = (1u64 << n) - rank_t;
    let independent_count = m.count_independent();
    Ok(DimensionReport {
        n,
        k: match m {
            Matroid::Uniform(u) => Some(u.k()),
            Matroid::Circuits(_) => None,
        },
        circuit_count: matrix.row_count() as u64,
        rank_t,
        kernel_dim,
        independent_count,
        discrepancy: kernel_dim
            .checked_sub(independent_count)
            .expect("Möbius-support space lies inside the circuit kernel"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipModel {
    /// `α_C(F) = 0` for every circuit `C`.
    CircuitOnly,
    /// `F̂(S) = 0` for every dependent `S`.
    MoebiusSupport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict<T> {
    pub member: bool,
    /// `(mask, residual)` for every constraint above tolerance, by mask.
    pub violations: Vec<(SubsetMask, T)>,
}

pub fn membership<T: Scalar>(
    f: &SetFunction<T>,
    m: &Matroid,
    model: MembershipModel,
    tol: &Tolerance,
) -> Result<Verdict<T>> {
    if f.n() != m.n() {
        return Err(Error::DimensionMismatch { left: f.n(), right: m.n() });
    }
    let spectrum = moebius_transform(f);
    let scale = spectrum.scale();
    let mut violations: Vec<(SubsetMask, T)> = match model {
        MembershipModel::CircuitOnly => m
            .circuits()
            .map(|c| (c, spectrum.get(c).clone()))
            .filter(|(_, r)| !tol.is_negligible(r, scale))
            .collect(),
        MembershipModel::MoebiusSupport => spectrum
            .iter()
            .filter(|&(s, r)| !m.is_independent(s) && !tol.is_negligible(r, scale))
            .map(|(s, r)| (s, r.clone()))
            .collect(),
    };
    violations.sort_by_key(|(s, _)| *s);
    Ok(Verdict { member: violations.is_empty(), violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::MoebiusSpectrum;
    use crate::lattice::zeta_transform;
    use crate::scalar::{integer, Rational};
    use alloc::vec;
    use num_traits::Zero;

    fn worked_example() -> SetFunction<Rational> {
        let v = [0, 1, 2, 5, 3, 6, 7, 12];
        SetFunction::new(3, v.iter().map(|&x| integer(x)).collect()).unwrap()
    }

    #[test]
    fn alpha_on_worked_example() {
        let f = worked_example();
        assert!(alpha(SubsetMask(7), &f).unwrap().is_zero());
        assert_eq!(alpha(SubsetMask::EMPTY, &f).unwrap(), integer(0));
        assert_eq!(alpha(SubsetMask(3), &f).unwrap(), integer(2));
        assert!(alpha(SubsetMask(8), &f).is_err());
    }

    #[test]
    fn matrix_for_single_triangle() {
        let t = build_constraint_matrix(&Matroid::uniform(3, 2).unwrap());
        assert_eq!(t.to_dense(), vec![vec![-1, 1, 1, -1, 1, -1, -1, 1]]);
        assert_eq!(t.rank(), 1);
    }

    #[test]
    fn matrix_shapes() {
        let free = build_constraint_matrix(&Matroid::uniform(4, 4).unwrap());
        assert_eq!(free.row_count(), 0);
        assert_eq!(free.rank(), 0);
        let t = build_constraint_matrix(&Matroid::uniform(4, 2).unwrap());
        assert_eq!(t.row_count(), 4);
        assert_eq!(t.column_count(), 16);
        assert!(t.rows().iter().all(|r| r.entries.len() == 8));
        assert_eq!(t.rank(), 4);
    }

    #[test]
    fn dimension_reports() {
        let r = kernel_dimension(&Matroid::uniform(3, 2).unwrap()).unwrap();
        assert_eq!((r.rank_t, r.kernel_dim, r.independent_count, r.discrepancy), (1, 7, 7, 0));
        let r = kernel_dimension(&Matroid::uniform(4, 2).unwrap()).unwrap();
        assert_eq!((r.rank_t, r.kernel_dim, r.independent_count, r.discrepancy), (4, 12, 11, 1));
        let r = kernel_dimension(&Matroid::uniform(4, 3).unwrap()).unwrap();
        assert_eq!((r.rank_t, r.kernel_dim, r.independent_count, r.discrepancy), (1, 15, 15, 0));
        assert!(matches!(
            kernel_dimension(&Matroid::uniform(15, 3).unwrap()),
            Err(Error::SizeCapExceeded { n: 15, max: 14 })
        ));
    }

    #[test]
    fn worked_example_is_member_under_both_models() {
        let m = Matroid::uniform(3, 2).unwrap();
        for model in [MembershipModel::CircuitOnly, MembershipModel::MoebiusSupport] {
            let v = membership(&worked_example(), &m, model, &Tolerance::EXACT).unwrap();
            assert!(v.member);
        }
    }

    #[test]
    fn perturbed_example_violates_triangle() {
        let mut f = worked_example();
        f.set(SubsetMask(7), integer(13));
        let m = Matroid::uniform(3, 2).unwrap();
        let v = membership(&f, &m, MembershipModel::CircuitOnly, &Tolerance::EXACT).unwrap();
        assert_eq!(v.violations, vec![(SubsetMask(7), integer(1))]);
    }

    #[test]
    fn top_unit_spectrum_separates_models() {
        let m = Matroid::uniform(4, 2).unwrap();
        let f = zeta_transform(&MoebiusSpectrum::<Rational>::unit(4, SubsetMask(15)).unwrap());
        let circuit_only =
            membership(&f, &m, MembershipModel::CircuitOnly, &Tolerance::EXACT).unwrap();
        assert!(circuit_only.member);
        let support =
            membership(&f, &m, MembershipModel::MoebiusSupport, &Tolerance::EXACT).unwrap();
        assert!(!support.member);
        assert_eq!(support.violations, vec![(SubsetMask(15), integer(1))]);
    }

    #[test]
    fn membership_requires_matching_n() {
        let m = Matroid::uniform(4, 2).unwrap();
        assert!(membership(&worked_example(), &m, MembershipModel::CircuitOnly, &Tolerance::EXACT)
            .is_err());
    }
}

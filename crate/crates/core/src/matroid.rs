//! Uniform and circuit-defined matroids on `[n]`.
//!
//! Independence is always decided by circuits: a set is dependent iff it
//! contains a circuit. Circuits iterate in increasing mask order so the rows
//! of a constraint matrix come out in a fixed order.

use alloc::vec::Vec;

use crate::lattice::{binomial, masks_of_size, SubsetMask, ABSOLUTE_MAX_N};
use crate::{Error, Result};

/// `M_{n,k}`: independent sets are the subsets of size at most `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    k: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > ABSOLUTE_MAX_N {
            return Err(Error::GroundSizeOutOfRange { n, max: ABSOLUTE_MAX_N });
        }
        if k > n {
            return Err(Error::RankOutOfRange { k, n });
        }
        Ok(UniformMatroid { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// A matroid given by an explicit circuit family.
///
/// The family is deduplicated and sorted. [`CircuitMatroid::new`] insists
/// on an antichain; [`CircuitMatroid::unchecked`] keeps whatever it is given
/// (minus empty sets) so that [`validate_circuit_axioms`] can diagnose it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitMatroid {
    n: usize,
    circuits: Vec<SubsetMask>,
}

impl CircuitMatroid {
    pub fn new(n: usize, circuits: Vec<SubsetMask>) -> Result<Self> {
        let m = Self::unchecked(n, circuits)?;
        if let Some((small, big)) = antichain_violation(&m.circuits) {
            return Err(Error::NotAntichain(small.bits(), big.bits()));
        }
        Ok(m)
    }

    pub fn unchecked(n: usize, mut circuits: Vec<SubsetMask>) -> Result<Self> {
        if n == 0 || n > ABSOLUTE_MAX_N {
            return Err(Error::GroundSizeOutOfRange { n, max: ABSOLUTE_MAX_N });
        }
        for c in &circuits {
            c.check(n)?;
            if c.is_empty() {
                return Err(Error::EmptyCircuit);
            }
        }
        circuits.sort_unstable();
        circuits.dedup();
        Ok(CircuitMatroid { n, circuits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circuits(&self) -> &[SubsetMask] {
        &self.circuits
    }
}

fn antichain_violation(circuits: &[SubsetMask]) -> Option<(SubsetMask, SubsetMask)> {
    circuits.iter().enumerate().find_map(|(i, &a)| {
        circuits
            .iter()
            .enumerate()
            .find(|&(j, &b)| i != j && a.is_subset_of(b))
            .map(|(_, &b)| (a, b))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matroid {
    Uniform(UniformMatroid),
    Circuits(CircuitMatroid),
}

impl From<UniformMatroid> for Matroid {
    fn from(m: UniformMatroid) -> Self {
        Matroid::Uniform(m)
    }
}

impl From<CircuitMatroid> for Matroid {
    fn from(m: CircuitMatroid) -> Self {
        Matroid::Circuits(m)
    }
}

impl Matroid {
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        UniformMatroid::new(n, k).map(Matroid::Uniform)
    }

    pub fn n(&self) -> usize {
        match self {
            Matroid::Uniform(m) => m.n,
            Matroid::Circuits(m) => m.n,
        }
    }

    pub fn is_independent(&self, s: SubsetMask) -> bool {
        match self {
            Matroid::Uniform(m) => s.len() <= m.k,
            Matroid::Circuits(m) => !m.circuits.iter().any(|c| c.is_subset_of(s)),
        }
    }

    pub fn circuits(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let (uniform, listed) = match self {
            Matroid::Uniform(m) => (Some(masks_of_size(m.n, m.k + 1)), None),
            Matroid::Circuits(m) => (None, Some(m.circuits.iter().copied())),
        };
        uniform.into_iter().flatten().chain(listed.into_iter().flatten())
    }

    pub fn circuit_count(&self) -> u64 {
        match self {
            Matroid::Uniform(m) => binomial(m.n, m.k + 1),
            Matroid::Circuits(m) => m.circuits.len() as u64,
        }
    }

    /// Size of a maximal independent subset of `s`, grown greedily in
    /// increasing element order. For a family satisfying circuit
    /// elimination every maximal independent subset has this size.
    pub fn rank(&self, s: SubsetMask) -> usize {
        match self {
            Matroid::Uniform(m) => s.len().min(m.k),
            Matroid::Circuits(_) => {
                let mut basis = SubsetMask::EMPTY;
                for i in s.coordinates() {
                    let grown = basis.with(i);
                    if self.is_independent(grown) {
                        basis = grown;
                    }
                }
                basis.len()
            }
        }
    }

    /// `|I(M)|`. Closed form for uniform matroids, exhaustive otherwise.
    pub fn count_independent(&self) -> u64 {
        match self {
            Matroid::Uniform(m) => (0..=m.k).map(|i| binomial(m.n, i)).sum(),
            Matroid::Circuits(m) => {
                (0..1u64 << m.n).filter(|&s| self.is_independent(SubsetMask(s as u32))).count() as u64
            }
        }
    }

    pub fn independent_sets(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..1u64 << self.n())
            .map(|s| SubsetMask(s as u32))
            .filter(move |&s| self.is_independent(s))
    }
}

/// Outcome of checking the circuit axioms on a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub antichain: bool,
    pub elimination: bool,
    /// `(smaller, larger)` with `smaller ⊊ larger`, both listed as circuits.
    pub antichain_witness: Option<(SubsetMask, SubsetMask)>,
    /// `(c1, c2, e)` (`e` 1-based) with no circuit inside `(c1 ∪ c2) ∖ {e}`.
    pub elimination_witness: Option<(SubsetMask, SubsetMask, usize)>,
}

/// Largest `n` for which [`validate_circuit_axioms`] runs.
pub const AXIOM_CHECK_MAX_N: usize = 12;

pub fn validate_circuit_axioms(m: &CircuitMatroid) -> Result<AxiomReport> {
    if m.n > AXIOM_CHECK_MAX_N {
        return Err(Error::SizeCapExceeded { n: m.n, max: AXIOM_CHECK_MAX_N });
    }
    let antichain_witness = antichain_violation(&m.circuits);
    let mut elimination_witness = None;
    'outer: for (i, &c1) in m.circuits.iter().enumerate() {
        for &c2 in &m.circuits[i + 1..] {
            let union = SubsetMask(c1.bits() | c2.bits());
            let common = SubsetMask(c1.bits() & c2.bits());
            for e in common.coordinates() {
                let target = union.without(e);
                if !m.circuits.iter().any(|c| c.is_subset_of(target)) {
                    elimination_witness = Some((c1, c2, e + 1));
                    break 'outer;
                }
            }
        }
    }
    Ok(AxiomReport {
        antichain: antichain_witness.is_none(),
        elimination: elimination_witness.is_none(),
        antichain_witness,
        elimination_witness,
    })
}

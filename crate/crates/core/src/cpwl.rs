//! Continuous piecewise-linear extension of a set function over the braid
//! fan, whose maximal cones are `x_{w(1)} ≥ x_{w(2)} ≥ … ≥ x_{w(n)}`.
//!
//! On the cone of `w` the extension is the affine map interpolating `F` at
//! the chain `∅ ⊂ S_1 ⊂ … ⊂ S_n`, `S_i = {w(1), …, w(i)}`.

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};
use once_cell::race::OnceBox;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{SetFunction, SubsetMask};
use crate::linalg::solve_rational;
use crate::scalar::{rational, Rational, Scalar, Tolerance};
use crate::{Error, Result};

/// Largest `n` for which all `n!` cones are materialized and cached.
pub const FULL_REALIZATION_MAX_N: usize = 8;

/// The cone `{x : x_{order[0]} ≥ x_{order[1]} ≥ …}`; `order` holds 0-based
/// coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidCone {
    order: Vec<usize>,
}

impl BraidCone {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || core::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation);
            }
        }
        Ok(BraidCone { order })
    }

    pub fn identity(n: usize) -> Self {
        BraidCone { order: (0..n).collect() }
    }

    /// The cone containing `x`, ties broken by smallest coordinate first.
    pub fn containing<T: Scalar>(x: &[T]) -> Self {
        let mut order: Vec<usize> = (0..x.len()).collect();
        order.sort_by(|&a, &b| x[b].partial_cmp(&x[a]).unwrap_or(core::cmp::Ordering::Equal));
        BraidCone { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// Whether `x` lies in the closed cone.
    pub fn contains<T: Scalar>(&self, x: &[T]) -> bool {
        x.len() == self.dim() && self.order.windows(2).all(|w| x[w[0]] >= x[w[1]])
    }

    /// The cone sharing the facet `x_{order[i]} = x_{order[i+1]}`.
    pub fn neighbor(&self, i: usize) -> Self {
        let mut order = self.order.clone();
        order.swap(i, i + 1);
        BraidCone { order }
    }

    /// Chain masks `S_0 = ∅, S_1, …, S_n`.
    pub fn chain(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        core::iter::once(SubsetMask::EMPTY).chain(self.order.iter().scan(
            SubsetMask::EMPTY,
            |acc, &i| {
                *acc = acc.with(i);
                Some(*acc)
            },
        ))
    }

    /// Position of this permutation in lexicographic order (Lehmer code).
    fn rank(&self) -> usize {
        let n = self.order.len();
        let mut rank = 0;
        let mut used = 0u32;
        for (pos, &i) in self.order.iter().enumerate() {
            let smaller_unused = (0..i).filter(|&j| used >> j & 1 == 0).count();
            rank = rank * (n - pos) + smaller_unused;
            used |= 1 << i;
        }
        rank
    }

    /// All `n!` cones in lexicographic order of their permutations.
    pub fn all(n: usize) -> impl Iterator<Item = BraidCone> {
        let mut next = Some((0..n).collect::<Vec<usize>>());
        core::iter::from_fn(move || {
            let cur = next.take()?;
            let mut p = cur.clone();
            if let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) {
                let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("successor exists");
                p.swap(i, j);
                p[i + 1..].reverse();
                next = Some(p);
            }
            Some(BraidCone { order: cur })
        })
    }
}

impl fmt::Debug for BraidCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, i) in self.order.iter().enumerate() {
            if pos > 0 {
                f.write_str(" >= ")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

/// The affine map `x ↦ gradient·x + offset` used on one cone.
#[derive(Debug, Clone, PartialEq)]
pub struct PerConeAffine<T> {
    pub cone: BraidCone,
    pub gradient: Vec<T>,
    pub offset: T,
}

impl<T: Scalar> PerConeAffine<T> {
    /// `gradient[w(i)] = F(S_i) − F(S_{i−1})`, `offset = F(∅)`.
    pub fn interpolate(f: &SetFunction<T>, cone: &BraidCone) -> Self {
        let mut gradient = vec![T::zero(); f.n()];
        let mut prev = SubsetMask::EMPTY;
        for &i in &cone.order {
            let next = prev.with(i);
            gradient[i] = f.get(next).clone() - f.get(prev).clone();
            prev = next;
        }
        PerConeAffine { cone: cone.clone(), gradient, offset: f.get(SubsetMask::EMPTY).clone() }
    }

    pub fn evaluate(&self, x: &[T]) -> T {
        let mut acc = self.offset.clone();
        for (g, xi) in self.gradient.iter().zip(x) {
            acc += &(g.clone() * xi.clone());
        }
        acc
    }
}

/// Anything that can be evaluated on `R^n`.
pub trait Evaluable<T> {
    fn dim(&self) -> usize;
    fn evaluate(&self, x: &[T]) -> Result<T>;
}

fn check_dim(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: expected, right: actual })
    }
}

/// `F(∅) + Σ_i x_{w(i)}·(F(S_i) − F(S_{i−1}))` on the cone containing `x`.
pub fn lovasz_eval<T: Scalar>(f: &SetFunction<T>, x: &[T]) -> Result<T> {
    check_dim(f.n(), x.len())?;
    let cone = BraidCone::containing(x);
    let mut acc = f.get(SubsetMask::EMPTY).clone();
    let mut prev = SubsetMask::EMPTY;
    for &i in &cone.order {
        let next = prev.with(i);
        let step = f.get(next).clone() - f.get(prev).clone();
        acc += &(step * x[i].clone());
        prev = next;
    }
    Ok(acc)
}

/// The braid-fan extension of `F`, with lazily built per-cone pieces.
///
/// For `n ≤ FULL_REALIZATION_MAX_N` every piece is cached once built;
/// concurrent callers may race to build the same piece, and the first one
/// stored wins (the pieces are equal). Larger `n` builds pieces on demand.
pub struct CompatiblePL<T> {
    function: SetFunction<T>,
    cache: Option<Vec<OnceBox<PerConeAffine<T>>>>,
}

impl<T: Scalar> CompatiblePL<T> {
    pub fn new(function: SetFunction<T>) -> Self {
        let n = function.n();
        let cache = (n <= FULL_REALIZATION_MAX_N)
            .then(|| (0..factorial(n)).map(|_| OnceBox::new()).collect());
        CompatiblePL { function, cache }
    }

    pub fn function(&self) -> &SetFunction<T> {
        &self.function
    }

    pub fn piece(&self, cone: &BraidCone) -> Result<Cow<'_, PerConeAffine<T>>> {
        check_dim(self.function.n(), cone.dim())?;
        Ok(match &self.cache {
            Some(slots) => Cow::Borrowed(slots[cone.rank()].get_or_init(|| {
                Box::new(PerConeAffine::interpolate(&self.function, cone))
            })),
            None => Cow::Owned(PerConeAffine::interpolate(&self.function, cone)),
        })
    }
}

impl<T: Scalar> Evaluable<T> for CompatiblePL<T> {
    fn dim(&self) -> usize {
        self.function.n()
    }

    fn evaluate(&self, x: &[T]) -> Result<T> {
        check_dim(self.dim(), x.len())?;
        Ok(self.piece(&BraidCone::containing(x))?.evaluate(x))
    }
}

impl<T: fmt::Debug> fmt::Debug for CompatiblePL<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CompatiblePL").field("function", &self.function).finish_non_exhaustive()
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A facet where the two adjacent affine pieces disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetFailure {
    pub cone: BraidCone,
    /// The facet `x_{order[position]} = x_{order[position + 1]}`.
    pub position: usize,
}

/// Result of the symbolic continuity check across braid facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityCertificate {
    pub cones_checked: usize,
    pub facets_checked: usize,
    /// Whether every cone of the fan was covered.
    pub exhaustive: bool,
    pub failures: Vec<FacetFailure>,
}

impl ContinuityCertificate {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Two affine maps agree on the hyperplane `x_a = x_b` iff their offsets
/// agree, their gradients agree off `{a, b}`, and `g_a + g_b` agree.
fn agree_on_facet<T: Scalar>(p: &PerConeAffine<T>, q: &PerConeAffine<T>, a: usize, b: usize) -> bool {
    p.offset == q.offset
        && (0..p.gradient.len())
            .filter(|&j| j != a && j != b)
            .all(|j| p.gradient[j] == q.gradient[j])
        && p.gradient[a].clone() + p.gradient[b].clone()
            == q.gradient[a].clone() + q.gradient[b].clone()
}

/// Checks every facet of the given cones; each shared facet is counted
/// once, from the side where the swapped pair is in increasing order.
pub fn certify_cones<T: Scalar>(
    pl: &CompatiblePL<T>,
    cones: impl IntoIterator<Item = BraidCone>,
) -> Result<ContinuityCertificate> {
    let mut cert = ContinuityCertificate {
        cones_checked: 0,
        facets_checked: 0,
        exhaustive: false,
        failures: Vec::new(),
    };
    for cone in cones {
        let piece = pl.piece(&cone)?;
        cert.cones_checked += 1;
        for i in 0..cone.dim().saturating_sub(1) {
            let (a, b) = (cone.order[i], cone.order[i + 1]);
            if a > b {
                continue;
            }
            let neighbor = pl.piece(&cone.neighbor(i))?;
            cert.facets_checked += 1;
            if !agree_on_facet(&piece, &neighbor, a, b) {
                cert.failures.push(FacetFailure { cone: cone.clone(), position: i });
            }
        }
    }
    Ok(cert)
}

/// Builds the extension and certifies continuity over all `n!` cones when
/// `n ≤ FULL_REALIZATION_MAX_N`; larger inputs are returned uncertified
/// (use [`certify_cones`] on chosen cones).
pub fn realize_braid<T: Scalar>(f: SetFunction<T>) -> Result<(CompatiblePL<T>, ContinuityCertificate)> {
    let n = f.n();
    let pl = CompatiblePL::new(f);
    let cert = if n <= FULL_REALIZATION_MAX_N {
        let mut cert = certify_cones(&pl, BraidCone::all(n))?;
        cert.exhaustive = true;
        cert
    } else {
        certify_cones(&pl, core::iter::empty())?
    };
    Ok((pl, cert))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComposeOp<T> {
    Max,
    /// `x ↦ scale·f(x) + shift`.
    Affine { scale: T, shift: T },
}

/// Pointwise composition of evaluable functions. Not claimed to be affine
/// on braid cones.
pub struct Composed<'a, T> {
    op: ComposeOp<T>,
    first: &'a dyn Evaluable<T>,
    second: Option<&'a dyn Evaluable<T>>,
}

pub fn compose_pl<'a, T: Scalar>(
    op: ComposeOp<T>,
    first: &'a dyn Evaluable<T>,
    second: Option<&'a dyn Evaluable<T>>,
) -> Result<Composed<'a, T>> {
    match (&op, second) {
        (ComposeOp::Max, Some(g)) => check_dim(first.dim(), g.dim())?,
        (ComposeOp::Affine { .. }, None) => {}
        _ => return Err(Error::OperandCount),
    }
    Ok(Composed { op, first, second })
}

impl<T: Scalar> Evaluable<T> for Composed<'_, T> {
    fn dim(&self) -> usize {
        self.first.dim()
    }

    fn evaluate(&self, x: &[T]) -> Result<T> {
        let a = self.first.evaluate(x)?;
        match (&self.op, self.second) {
            (ComposeOp::Max, Some(g)) => Ok(a.max_of(g.evaluate(x)?)),
            (ComposeOp::Affine { scale, shift }, _) => Ok(scale.clone() * a + shift.clone()),
            (ComposeOp::Max, None) => Err(Error::OperandCount),
        }
    }
}

/// Adapts a closure into an [`Evaluable`].
pub struct FnEvaluable<F> {
    dim: usize,
    f: F,
}

impl<F> FnEvaluable<F> {
    pub fn new(dim: usize, f: F) -> Self {
        FnEvaluable { dim, f }
    }
}

impl<T, F: Fn(&[T]) -> T> Evaluable<T> for FnEvaluable<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn evaluate(&self, x: &[T]) -> Result<T> {
        check_dim(self.dim, x.len())?;
        Ok((self.f)(x))
    }
}

/// Sampling bounds for [`compatibility_probe`]; coordinates are
/// `p/q` with `1 ≤ q ≤ max_denominator` and `|p/q| ≤ spread`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_denominator: i64,
    pub spread: i64,
}

impl ProbeConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        ProbeConfig { trials, seed, max_denominator: 8, spread: 10 }
    }
}

/// Cone and sample points where `g` failed to be affine.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeWitness {
    pub trial: usize,
    pub cone: BraidCone,
    /// `n + 2` points in the open cone; the last one is the check point.
    pub points: Vec<Vec<Rational>>,
    pub values: Vec<Rational>,
    /// Value at the check point of the affine map fitted to the others.
    pub predicted: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub n: usize,
    pub seed: u64,
    pub trials_run: usize,
    pub conforming: bool,
    pub witness: Option<ProbeWitness>,
}

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    rational(rng.gen_range(lo * den..=hi * den), den)
}

/// A point with `x_{order[0]} > x_{order[1]} > …` strictly.
fn sample_in_cone(cone: &BraidCone, cfg: &ProbeConfig, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); cone.dim()];
    let mut value = random_rational(rng, -cfg.spread, cfg.spread, cfg.max_denominator);
    for &i in &cone.order {
        x[i] = value.clone();
        let den = rng.gen_range(1..=cfg.max_denominator);
        value -= &rational(rng.gen_range(1..=cfg.spread * den), den);
    }
    x
}

/// Tests whether `g` is affine on randomly chosen braid cones.
///
/// Each trial draws a cone and `n + 2` points strictly inside it, fits the
/// affine map through the first `n + 1` (redrawing until they are affinely
/// independent) and compares its prediction at the last point with `g`.
/// The first mismatch beyond `tol` stops the probe.
pub fn compatibility_probe(
    g: &dyn Evaluable<Rational>,
    cfg: &ProbeConfig,
    tol: &Tolerance,
) -> Result<ProbeReport> {
    if cfg.trials == 0 {
        return Err(Error::NoTrials);
    }
    let n = g.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for trial in 0..cfg.trials {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let cone = BraidCone { order };
        let (points, coefficients) = loop {
            let points: Vec<Vec<Rational>> =
                (0..n + 2).map(|_| sample_in_cone(&cone, cfg, &mut rng)).collect();
            let system: Vec<Vec<Rational>> = points[..=n]
                .iter()
                .map(|p| p.iter().cloned().chain(core::iter::once(Rational::from_integer(1.into()))).collect())
                .collect();
            let rhs = points[..=n].iter().map(|p| g.evaluate(p)).collect::<Result<Vec<_>>>()?;
            if let Some(c) = solve_rational(system, rhs) {
                break (points, c);
            }
        };
        let values = points.iter().map(|p| g.evaluate(p)).collect::<Result<Vec<_>>>()?;
        let check = &points[n + 1];
        let mut predicted = coefficients[n].clone();
        for (c, xi) in coefficients[..n].iter().zip(check) {
            predicted += &(c * xi);
        }
        let scale = values.iter().fold(Rational::zero(), |acc, v| acc.max_of(v.abs()));
        let residual = values[n + 1].clone() - predicted.clone();
        if !tol.is_negligible(&residual, &scale) {
            return Ok(ProbeReport {
                n,
                seed: cfg.seed,
                trials_run: trial + 1,
                conforming: false,
                witness: Some(ProbeWitness { trial, cone, points, values, predicted }),
            });
        }
    }
    Ok(ProbeReport { n, seed: cfg.seed, trials_run: cfg.trials, conforming: true, witness: None })
}

//! Feedforward ReLU networks read as set functions through `F(S) = f(1_S)`.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::lattice::{interaction_spectrum, moebius_transform, OrderNorm, SetFunction, SubsetMask};
use crate::matroid::Matroid;
use crate::scalar::{Rational, Tolerance};
use crate::{Error, Result};

/// Violating sets kept in an [`ExpressivityReport`].
pub const MAX_REPORTED_VIOLATIONS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    Relu,
    Identity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    /// `out × in`, row-major.
    pub weights: Vec<Vec<f64>>,
    pub bias: Vec<f64>,
    pub activation: Activation,
}

impl Layer {
    pub fn new(weights: Vec<Vec<f64>>, bias: Vec<f64>, activation: Activation) -> Self {
        Layer { weights, bias, activation }
    }

    fn forward(&self, x: &[f64]) -> Vec<f64> {
        self.weights
            .iter()
            .zip(&self.bias)
            .map(|(row, b)| {
                let z = row.iter().zip(x).fold(*b, |acc, (w, xi)| acc + w * xi);
                match self.activation {
                    Activation::Relu if z > 0.0 => z,
                    Activation::Relu => 0.0,
                    Activation::Identity => z,
                }
            })
            .collect()
    }
}

/// A validated network `R^n -> R`.
#[derive(Debug, Clone, PartialEq)]
pub struct MlpSpec {
    input_dim: usize,
    layers: Vec<Layer>,
}

impl MlpSpec {
    pub fn new(input_dim: usize, layers: Vec<Layer>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::InvalidNetwork("no layers"));
        }
        let mut width = input_dim;
        for layer in &layers {
            if layer.weights.is_empty() {
                return Err(Error::InvalidNetwork("layer with no outputs"));
            }
            if layer.bias.len() != layer.weights.len() {
                return Err(Error::InvalidNetwork("bias length differs from weight rows"));
            }
            if layer.weights.iter().any(|row| row.len() != width) {
                return Err(Error::InvalidNetwork("weight columns do not match previous width"));
            }
            if layer.weights.iter().flatten().chain(&layer.bias).any(|v| !v.is_finite()) {
                return Err(Error::InvalidNetwork("non-finite parameter"));
            }
            width = layer.weights.len();
        }
        if width != 1 {
            return Err(Error::InvalidNetwork("final layer must have one output"));
        }
        Ok(MlpSpec { input_dim, layers })
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// `F(S) = f(1_S)` for every `S`.
    pub fn to_set_function(&self) -> Result<SetFunction<f64>> {
        let n = self.input_dim;
        let mut x = alloc::vec![0.0; n];
        SetFunction::from_fn(n, |s| {
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = if s.contains(i) { 1.0 } else { 0.0 };
            }
            self.forward(&x)
        })
    }

    fn forward(&self, x: &[f64]) -> f64 {
        let mut act = self.layers[0].forward(x);
        for layer in &self.layers[1..] {
            act = layer.forward(&act);
        }
        act[0]
    }
}

pub fn mlp_eval(net: &MlpSpec, x: &[f64]) -> Result<f64> {
    if x.len() != net.input_dim {
        return Err(Error::DimensionMismatch { left: net.input_dim, right: x.len() });
    }
    Ok(net.forward(x))
}

/// Interaction profile of a network on `{0,1}^n` against `M_{n,k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpressivityReport {
    pub n: usize,
    pub k: usize,
    pub spectrum: Vec<OrderNorm<f64>>,
    pub max_order: Option<usize>,
    /// `|F̂(S)|` is negligible for every `|S| > k`.
    pub conforming: bool,
    /// Up to [`MAX_REPORTED_VIOLATIONS`] sets with `|S| > k`, largest
    /// `|F̂(S)|` first (ties by mask).
    pub violations: Vec<(SubsetMask, f64)>,
    /// Number of violating sets before truncation.
    pub violation_count: usize,
}

pub fn analyze_network(net: &MlpSpec, k: usize, tol: &Tolerance) -> Result<ExpressivityReport> {
    let n = net.input_dim;
    if k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    let f = net.to_set_function()?;
    let spectrum = moebius_transform(&f);
    let inter = interaction_spectrum(&spectrum, tol);
    let mut violations: Vec<(SubsetMask, f64)> = spectrum
        .iter()
        .filter(|&(s, v)| s.len() > k && !tol.is_negligible(v, spectrum.scale()))
        .map(|(s, v)| (s, *v))
        .collect();
    violations.sort_by(|a, b| b.1.abs().total_cmp(&a.1.abs()).then(a.0.cmp(&b.0)));
    let violation_count = violations.len();
    violations.truncate(MAX_REPORTED_VIOLATIONS);
    Ok(ExpressivityReport {
        n,
        k,
        spectrum: inter.orders,
        max_order: inter.max_order,
        conforming: violation_count == 0,
        violations,
        violation_count,
    })
}

/// `δ_[n]` together with its certificate `[n]`: `F̂([n]) = 1` with
/// `|[n]| = n > k`, so `δ_[n]` lies outside the space for `M_{n,k}`.
pub fn separation_witness(n: usize, k: usize) -> Result<(SetFunction<Rational>, SubsetMask)> {
    if k >= n {
        return Err(Error::NoSeparation { n, k });
    }
    Matroid::uniform(n, k)?;
    let full = SubsetMask::full(n);
    Ok((SetFunction::delta(n, full)?, full))
}

impl crate::cpwl::Evaluable<f64> for MlpSpec {
    fn dim(&self) -> usize {
        self.input_dim
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        mlp_eval(self, x)
    }
}

/// Evaluates in `f64`; the output is the exact value of the rounded double.
impl crate::cpwl::Evaluable<Rational> for MlpSpec {
    fn dim(&self) -> usize {
        self.input_dim
    }

    fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        let xs: Vec<f64> = x.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
        let y = mlp_eval(self, &xs)?;
        Rational::from_float(y).ok_or(Error::InvalidNetwork("non-finite output"))
    }
}

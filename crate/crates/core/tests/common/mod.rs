//! Test-only oracles. Everything here recomputes quantities from their
//! definitions without going through the library's fast paths.
#![allow(dead_code)]

use cpwlmat_core::scalar::{integer, rational};
use cpwlmat_core::{Rational, SetFunction, SubsetMask};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.gen_range(-50..=50), rng.gen_range(1..=6))
}

pub fn random_function(n: usize, rng: &mut ChaCha8Rng) -> SetFunction<Rational> {
    SetFunction::from_fn(n, |_| random_rational(rng)).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| integer(x)).collect()
}

pub fn worked_example() -> SetFunction<Rational> {
    SetFunction::new(3, ints(&[0, 1, 2, 5, 3, 6, 7, 12])).unwrap()
}

/// `F̂(S) = Σ_{T⊆S} (−1)^{|S|−|T|} F(T)`, by scanning all `T < 2^n`.
pub fn moebius_direct(f: &SetFunction<Rational>) -> Vec<Rational> {
    let size = 1u32 << f.n();
    (0..size)
        .map(|s| {
            let mut acc = Rational::zero();
            for t in 0..size {
                if t & !s == 0 {
                    let v = f.values()[t as usize].clone();
                    if (s.count_ones() - t.count_ones()) % 2 == 0 {
                        acc += v;
                    } else {
                        acc -= v;
                    }
                }
            }
            acc
        })
        .collect()
}

/// `F(S) = Σ_{T⊆S} c(T)`, by scanning all `T < 2^n`.
pub fn zeta_direct(n: usize, coeffs: &[Rational]) -> Vec<Rational> {
    let size = 1u32 << n;
    (0..size)
        .map(|s| {
            (0..size)
                .filter(|t| t & !s == 0)
                .fold(Rational::zero(), |acc, t| acc + coeffs[t as usize].clone())
        })
        .collect()
}

/// Rank over `Q` by textbook Gaussian elimination on rationals.
pub fn rank_gauss(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&v| integer(v)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = Rational::one() / a[rank][col].clone();
        for i in rank + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone() * inv.clone();
            for j in col..cols {
                let d = factor.clone() * a[rank][j].clone();
                a[i][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Value of the chain interpolation along a given ordering (0-based).
pub fn chain_value(f: &SetFunction<Rational>, order: &[usize], x: &[Rational]) -> Rational {
    let mut acc = f.values()[0].clone();
    let mut prev = 0usize;
    for &i in order {
        let next = prev | 1 << i;
        acc += x[i].clone() * (f.values()[next].clone() - f.values()[prev].clone());
        prev = next;
    }
    acc
}

/// All orderings of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// Triples `(i, j, l)` of 0-based coordinates inside `s`.
pub fn triples_in(s: u32) -> Vec<(usize, usize, usize)> {
    let c: Vec<usize> = (0..32).filter(|&i| s >> i & 1 == 1).collect();
    let mut out = Vec::new();
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            for d in b + 1..c.len() {
                out.push((c[a], c[b], c[d]));
            }
        }
    }
    out
}

/// One step of the triple recursion:
/// `F(S) = F(S∖l) + F(S∖j) + F(S∖i) − F(S∖ij) − F(S∖il) − F(S∖jl) + F(S∖ijl)`.
pub fn triple_step(
    value: &impl Fn(u32) -> Rational,
    s: u32,
    (i, j, l): (usize, usize, usize),
) -> Rational {
    let (bi, bj, bl) = (1u32 << i, 1u32 << j, 1u32 << l);
    value(s & !bl) + value(s & !bj) + value(s & !bi)
        - value(s & !(bi | bj))
        - value(s & !(bi | bl))
        - value(s & !(bj | bl))
        + value(s & !(bi | bj | bl))
}

/// Fills every `|S| ≥ 3` from values on `|S| ≤ 2` by the triple recursion,
/// picking for each `S` the triple at position `choice(S) % #triples`.
pub fn recursive_extension(
    n: usize,
    low: &dyn Fn(u32) -> Rational,
    choice: &mut dyn FnMut(u32) -> usize,
) -> Vec<Rational> {
    let size = 1u32 << n;
    let mut values = vec![Rational::zero(); size as usize];
    let mut order: Vec<u32> = (0..size).collect();
    order.sort_by_key(|s| s.count_ones());
    for s in order {
        values[s as usize] = if s.count_ones() <= 2 {
            low(s)
        } else {
            let triples = triples_in(s);
            let pick = triples[choice(s) % triples.len()];
            let snapshot = &values;
            triple_step(&|t| snapshot[t as usize].clone(), s, pick)
        };
    }
    values
}

pub fn mask(n: usize, elements: &[usize]) -> SubsetMask {
    SubsetMask::from_elements(n, elements).unwrap()
}

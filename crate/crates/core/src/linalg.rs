//! Exact linear algebra over `Z` and `Q`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Rank over `Q` of an integer matrix, by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact and no rationals are formed. Pivots are taken column by column, the
/// first nonzero entry at or below the current row.
pub fn rank_exact(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let cols = a.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut a {
        row.resize(cols, BigInt::zero());
    }
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

pub fn rank_exact_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> =
        rows.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
    rank_exact(&big)
}

/// A sparse integer row: `(column, value)` pairs, columns strictly decreasing.
pub type SparseRow = Vec<(u32, BigInt)>;

/// Incremental row echelon form over `Z` for sparse rows.
///
/// Each stored row is keyed by its leading (largest) column. Inserting a
/// row cancels its leading entry against a stored row with the same key
/// (`row ← p·row − q·stored`) and divides out the content, repeating until
/// the leading column is new or the row vanishes.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    pivots: alloc::collections::BTreeMap<u32, SparseRow>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|e| core::cmp::Reverse(e.0));
        loop {
            let Some((lead_col, lead)) = row.first().cloned() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead_col) else {
                normalize(&mut row);
                self.pivots.insert(lead_col, row);
                return true;
            };
            let p = &pivot[0].1;
            let g = p.gcd(&lead);
            let row_scale = p / &g;
            let pivot_scale = &lead / &g;
            row = combine(&row, &row_scale, pivot, &pivot_scale);
            normalize(&mut row);
        }
    }
}

/// `a·x − b·y` for rows sorted by decreasing column.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ord = match (x.get(i), y.get(j)) {
            (Some(u), Some(v)) => v.0.cmp(&u.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        let (col, val) = match ord {
            Ordering::Less => {
                i += 1;
                (x[i - 1].0, a * &x[i - 1].1)
            }
            Ordering::Greater => {
                j += 1;
                (y[j - 1].0, -(b * &y[j - 1].1))
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
                (x[i - 1].0, a * &x[i - 1].1 - b * &y[j - 1].1)
            }
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let content = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if content.is_zero() || content.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &content;
    }
}

/// Solves the square system `a·x = b` over `Q`; `None` if `a` is singular.
pub fn solve_rational(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for j in col..n {
                let delta = &factor * &a[col][j];
                a[i][j] -= delta;
            }
            let delta = &factor * &b[col];
            b[i] -= delta;
        }
    }
    Some(b)
}

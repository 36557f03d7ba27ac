//! Taylor coefficients of Gassner matrices at `t = 1` and alternating sums
//! over crossing changes.

use std::collections::BTreeMap;

use num::{BigRational, Zero};
use rayon::prelude::*;

use crate::algebra::series::{taylor_expand, z_names};
use crate::algebra::{RatMatrix, TruncatedSeries};
use crate::diagram::MorseWord;
use crate::error::{Error, Result};
use crate::gassner;

/// Square grid of truncated series in `z_i = 1 - t_i` with a common bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    pub n: usize,
    pub nvars: usize,
    pub bound: u32,
    pub entries: Vec<Vec<TruncatedSeries>>,
}

impl SeriesMatrix {
    pub fn zeros(n: usize, nvars: usize, bound: u32) -> Self {
        SeriesMatrix { n, nvars, bound, entries: vec![vec![TruncatedSeries::zero(nvars, bound); n]; n] }
    }

    pub fn identity(n: usize, nvars: usize, bound: u32) -> Self {
        let mut m = Self::zeros(n, nvars, bound);
        for i in 0..n {
            m.entries[i][i] = TruncatedSeries::one(nvars, bound);
        }
        m
    }

    pub fn from_matrix(m: &RatMatrix, bound: u32) -> Result<Self> {
        let n = m.rows();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let row = (0..m.cols()).map(|j| taylor_expand(&m[(i, j)], bound)).collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Ok(SeriesMatrix { n, nvars: m.nvars(), bound, entries })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&TruncatedSeries, &TruncatedSeries) -> TruncatedSeries) -> Self {
        let entries = (0..self.n).map(|i| (0..self.n).map(|j| f(&self.entries[i][j], &other.entries[i][j])).collect()).collect();
        SeriesMatrix { entries, ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.n, self.nvars, self.bound.min(other.bound));
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = TruncatedSeries::zero(self.nvars, out.bound);
                for k in 0..self.n {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|s| s.is_zero())
    }

    /// Lowest total degree with a nonzero coefficient in some entry.
    pub fn order(&self) -> Option<u32> {
        self.entries.iter().flatten().filter_map(|s| s.order()).min()
    }

    /// Whether every coefficient of total degree below `k` vanishes.
    pub fn vanishes_below(&self, k: u32) -> bool {
        self.order().is_none_or(|o| o >= k)
    }

    /// The coefficient matrix `b_I` of the multi-index `exps`.
    pub fn coefficient(&self, exps: &[i32]) -> Vec<Vec<BigRational>> {
        self.entries.iter().map(|row| row.iter().map(|s| s.coefficient(exps)).collect()).collect()
    }

    /// All nonzero coefficient matrices, keyed by multi-index.
    pub fn coefficients(&self) -> BTreeMap<Vec<i32>, Vec<Vec<BigRational>>> {
        let mut keys: Vec<Vec<i32>> = Vec::new();
        for s in self.entries.iter().flatten() {
            for (m, _) in s.as_poly().terms() {
                keys.push(m.exps().to_vec());
            }
        }
        keys.sort_by(|a, b| (a.iter().sum::<i32>(), a).cmp(&(b.iter().sum::<i32>(), b)));
        keys.dedup();
        keys.into_iter()
            .map(|k| {
                let c = self.coefficient(&k);
                (k, c)
            })
            .filter(|(_, c)| c.iter().flatten().any(|x| !x.is_zero()))
            .collect()
    }

    pub fn display(&self) -> String {
        let names = z_names(self.nvars);
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|s| s.display_with(&names)).collect();
            out.push_str(&format!("[{}]\n", cells.join(", ")));
        }
        out
    }
}

fn check_pure(w: &MorseWord) -> Result<()> {
    if !w.is_pure()? {
        return Err(Error::Diagram("expected a pure string link".into()));
    }
    Ok(())
}

/// Entrywise Taylor expansion of the Gassner matrix to total degree `bound`.
pub fn taylor_gassner(w: &MorseWord, bound: u32) -> Result<SeriesMatrix> {
    check_pure(w)?;
    let g = gassner::gassner(w)?;
    SeriesMatrix::from_matrix(&g.matrix, bound)
}

/// `sum_S (-1)^{|S|} taylor_gassner(flip_S(L), bound)` over all subsets `S`
/// of the given 1-based crossing event indices. `bound` defaults to `k + 2`.
pub fn alternating_sum(w: &MorseWord, crossings: &[usize], bound: Option<u32>) -> Result<SeriesMatrix> {
    check_pure(w)?;
    let k = crossings.len();
    let valid = w.crossing_events();
    for &i in crossings {
        if !valid.contains(&i) {
            return Err(Error::Diagram(format!("event {i} is not a crossing")));
        }
    }
    let mut sorted = crossings.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return Err(Error::Diagram("crossing indices repeat".into()));
    }
    if k >= 20 {
        return Err(Error::Shape(format!("{k} crossings give too many flips")));
    }
    let bound = bound.unwrap_or(k as u32 + 2);
    let terms: Vec<(bool, SeriesMatrix)> = (0u32..1 << k)
        .into_par_iter()
        .map(|mask| {
            let mut x = w.clone();
            for (b, &i) in crossings.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    x = x.flip_crossing(i)?;
                }
            }
            Ok((mask.count_ones() % 2 == 1, taylor_gassner(&x, bound)?))
        })
        .collect::<Result<_>>()?;
    let mut acc = SeriesMatrix::zeros(w.n(), w.ncolors(), bound);
    for (odd, t) in terms {
        acc = if odd { acc.sub(&t) } else { acc.add(&t) };
    }
    Ok(acc)
}

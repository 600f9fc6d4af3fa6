//! Linear codes given by a generator matrix, and exhaustive enumeration of
//! their codewords.
//!
//! Codewords are indexed by their coefficient vector `u` read as a base-q
//! integer with `u_1` as the least significant digit; enumeration always runs
//! in that order.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg::MatrixGF;

/// Upper bound on the number of words an exhaustive pass may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// Fails unless `needed` fits.
    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded { needed, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub fn pow_u128(base: u32, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Fixed-width bitset over coordinate positions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SupportSet {
    words: Vec<u64>,
}

impl SupportSet {
    pub fn from_values(values: &[FieldElement]) -> Self {
        let mut words = vec![0u64; values.len().div_ceil(64)];
        for (i, v) in values.iter().enumerate() {
            if !v.is_zero() {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        SupportSet { words }
    }

    #[inline]
    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codeword {
    pub coeffs: Vec<FieldElement>,
    pub values: Vec<FieldElement>,
}

impl Codeword {
    /// Sorted zero-based indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_set(&self) -> SupportSet {
        SupportSet::from_values(&self.values)
    }

    pub fn weight(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword(u={:?}, c={:?})", self.coeffs, self.values)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    /// Smallest and largest nonzero weight, if any nonzero word exists.
    pub fn nonzero_extrema(&self) -> Option<(usize, usize)> {
        let mut ws = self.counts.keys().copied().filter(|&w| w > 0);
        let lo = ws.next()?;
        let hi = ws.next_back().unwrap_or(lo);
        Some((lo, hi))
    }

    /// Two-column CSV `weight,count`, sorted by weight.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("weight,count\n");
        for (w, c) in &self.counts {
            s.push_str(&format!("{w},{c}\n"));
        }
        s
    }
}

/// A linear `[n, k]_q` code with a full-rank generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: MatrixGF,
    zero_columns: Vec<usize>,
}

impl LinearCode {
    /// Wraps a generator matrix after checking that its rows are independent.
    /// Zero columns are allowed but recorded; see [`zero_columns`](Self::zero_columns).
    pub fn from_generator(gen: MatrixGF) -> Result<Self> {
        if gen.rows() == 0 || gen.cols() == 0 {
            return Err(Error::EmptyGenerator);
        }
        let rank = gen.rank();
        if rank < gen.rows() {
            return Err(Error::RankDeficient { rank, rows: gen.rows() });
        }
        let zero_columns = gen.zero_columns();
        Ok(LinearCode { gen, zero_columns })
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.gen
    }

    pub fn field(&self) -> &FieldSpec {
        self.gen.field()
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Zero-based indices of all-zero generator columns.
    pub fn zero_columns(&self) -> &[usize] {
        &self.zero_columns
    }

    pub fn has_zero_column(&self) -> bool {
        !self.zero_columns.is_empty()
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        pow_u128(self.q(), self.k())
    }

    pub fn check_budget(&self, budget: Budget) -> Result<()> {
        budget.check(self.size())
    }

    pub fn encode(&self, coeffs: &[FieldElement]) -> Result<Codeword> {
        Ok(Codeword {
            coeffs: coeffs.to_vec(),
            values: self.gen.left_mul_vec(coeffs)?,
        })
    }

    /// Recovers the message of a value vector, or `None` if it is not a codeword.
    pub fn decode_exact(&self, values: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if values.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "word of length {} for a code of length {}",
                values.len(),
                self.n()
            )));
        }
        let rows: Vec<Vec<FieldElement>> = (0..self.k()).map(|r| self.gen.row(r).to_vec()).collect();
        crate::linalg::in_span(self.field(), values, &rows)
    }

    pub(crate) fn encoder(&self) -> Encoder {
        Encoder::new(self)
    }

    /// Every codeword, in coefficient order.
    pub fn codewords(&self, budget: Budget) -> Result<Codewords> {
        self.check_budget(budget)?;
        Ok(Codewords {
            encoder: self.encoder(),
            next: 0,
            end: self.size() as u64,
        })
    }

    /// Exact weight distribution by full enumeration.
    pub fn weight_distribution(&self, budget: Budget) -> Result<WeightDistribution> {
        self.check_budget(budget)?;
        let enc = self.encoder();
        let total = self.size() as u64;
        let counts = par_chunks(total)
            .map(|(lo, hi)| {
                let mut local = BTreeMap::new();
                let mut buf = vec![FieldElement::ZERO; self.n()];
                for idx in lo..hi {
                    enc.values_into(idx, &mut buf);
                    let w = buf.iter().filter(|v| !v.is_zero()).count();
                    *local.entry(w).or_insert(0u64) += 1;
                }
                local
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (w, c) in b {
                    *a.entry(w).or_insert(0) += c;
                }
                a
            });
        Ok(WeightDistribution {
            q: self.q(),
            n: self.n(),
            k: self.k(),
            counts,
        })
    }

    /// `(w_min, w_max)` over nonzero codewords.
    pub fn min_max_weight(&self, budget: Budget) -> Result<(usize, usize)> {
        let wd = self.weight_distribution(budget)?;
        Ok(wd.nonzero_extrema().expect("k >= 1 gives a nonzero codeword"))
    }

    /// Minimum distance.
    pub fn min_distance(&self, budget: Budget) -> Result<usize> {
        Ok(self.min_max_weight(budget)?.0)
    }

    /// The dual code, generated by the nullspace of the generator.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.n() == self.k() {
            return Err(Error::TrivialDual);
        }
        LinearCode::from_generator(self.gen.nullspace())
    }
}

/// Splits `0..total` into contiguous chunks for data-parallel passes.
pub(crate) fn par_chunks(total: u64) -> impl ParallelIterator<Item = (u64, u64)> {
    const CHUNK: u64 = 4096;
    let n = total.div_ceil(CHUNK);
    (0..n)
        .into_par_iter()
        .map(move |c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
}

/// Precomputed `a * row_i` for every coefficient `a` and row `i`.
pub(crate) struct Encoder {
    field: FieldSpec,
    q: u64,
    k: usize,
    n: usize,
    scaled: Vec<FieldElement>,
}

impl Encoder {
    fn new(code: &LinearCode) -> Self {
        let f = code.field().clone();
        let (k, n, q) = (code.k(), code.n(), code.q());
        let mut scaled = Vec::with_capacity(k * q as usize * n);
        for r in 0..k {
            let row = code.gen.row(r);
            for a in f.elements() {
                scaled.extend(row.iter().map(|&g| f.mul(a, g)));
            }
        }
        Encoder {
            field: f,
            q: q as u64,
            k,
            n,
            scaled,
        }
    }

    pub(crate) fn coeffs(&self, mut idx: u64) -> Vec<FieldElement> {
        (0..self.k)
            .map(|_| {
                let d = idx % self.q;
                idx /= self.q;
                FieldElement::from_enc(d as u32)
            })
            .collect()
    }

    pub(crate) fn values_into(&self, mut idx: u64, out: &mut [FieldElement]) {
        out.fill(FieldElement::ZERO);
        let q = self.q as usize;
        for r in 0..self.k {
            let d = (idx % self.q) as usize;
            idx /= self.q;
            if d == 0 {
                continue;
            }
            let base = (r * q + d) * self.n;
            for (o, &s) in out.iter_mut().zip(&self.scaled[base..base + self.n]) {
                *o = self.field.add(*o, s);
            }
        }
    }

    pub(crate) fn codeword(&self, idx: u64) -> Codeword {
        let mut values = vec![FieldElement::ZERO; self.n];
        self.values_into(idx, &mut values);
        Codeword {
            coeffs: self.coeffs(idx),
            values,
        }
    }

    /// Indices of the projective representatives: nonzero coefficient vectors
    /// whose first nonzero entry is 1, ascending.
    pub(crate) fn projective_indices(&self) -> Vec<u64> {
        let total = self.q.pow(self.k as u32);
        (1..total)
            .filter(|&idx| {
                let mut x = idx;
                while x % self.q == 0 {
                    x /= self.q;
                }
                x % self.q == 1
            })
            .collect()
    }
}

pub struct Codewords {
    encoder: Encoder,
    next: u64,
    end: u64,
}

impl Iterator for Codewords {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next >= self.end {
            return None;
        }
        let c = self.encoder.codeword(self.next);
        self.next += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.end - self.next) as usize;
        (rem, Some(rem))
    }
}

impl ExactSizeIterator for Codewords {}

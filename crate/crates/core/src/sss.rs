//! Massey secret sharing on a linear code.
//!
//! The dealer picks a message `u` with `u · G_s = secret`, where `G_s` is the
//! secret column, and participant `i` receives coordinate `i` of `u G`.
//! Participants are labelled by their 1-based column index. A coalition learns
//! the secret iff `G_s` lies in the span of its columns.

use std::collections::HashMap;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::minimal_codewords;
use crate::code::{pow_u128, Budget, LinearCode};
use crate::constructions::binom;
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::linalg::in_span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SssScheme {
    code: LinearCode,
    secret_col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShareVector {
    pub secret: FieldElement,
    pub seed: Option<u64>,
    /// Participant labels, ascending.
    pub participants: Vec<usize>,
    pub shares: Vec<FieldElement>,
    /// The dealer's message; only kept by [`deal_traced`] and [`shares_for`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dealer_coeffs: Option<Vec<FieldElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AccessSet {
    pub indices: Vec<usize>,
    pub minimal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AccessMethod {
    /// Minimal dual codewords that are nonzero on the secret column.
    Dual,
    /// Direct search over participant subsets of size at most `k`.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectnessVerdict {
    pub authorized: bool,
    /// Unauthorized: every observed share tuple leaves all q secrets equally
    /// likely. Authorized: every observed tuple pins down one secret.
    pub holds: bool,
    pub distinct_observations: usize,
}

impl SssScheme {
    /// Scheme with the secret on column 1.
    pub fn new(code: LinearCode) -> Result<Self> {
        Self::with_secret_column(code, 1)
    }

    /// Scheme with the secret on the given 1-based column.
    pub fn with_secret_column(code: LinearCode, column: usize) -> Result<Self> {
        if column == 0 || column > code.n() {
            return Err(Error::BadParams(format!(
                "secret column {column} outside 1..={}",
                code.n()
            )));
        }
        if let Some(&z) = code.zero_columns().first() {
            return Err(Error::ZeroColumn(z + 1));
        }
        Ok(SssScheme {
            code,
            secret_col: column - 1,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// 1-based label of the secret column.
    pub fn secret_column(&self) -> usize {
        self.secret_col + 1
    }

    pub fn participants(&self) -> Vec<usize> {
        (1..=self.code.n()).filter(|&i| i != self.secret_column()).collect()
    }

    fn column(&self, label: usize) -> Vec<FieldElement> {
        self.code.generator().column(label - 1)
    }

    fn check_subset(&self, subset: &[usize]) -> Result<()> {
        match subset
            .iter()
            .find(|&&i| i == 0 || i > self.code.n() || i == self.secret_column())
        {
            Some(&i) => Err(Error::UnknownParticipant(i)),
            None => Ok(()),
        }
    }

    /// Span-membership coefficients expressing the secret column through the
    /// subset's columns, if any.
    fn solve(&self, subset: &[usize]) -> Result<Option<Vec<FieldElement>>> {
        self.check_subset(subset)?;
        let cols: Vec<_> = subset.iter().map(|&i| self.column(i)).collect();
        in_span(self.code.field(), &self.column(self.secret_column()), &cols)
    }
}

/// Shares for an explicit dealer message `u`.
pub fn shares_for(scheme: &SssScheme, u: &[FieldElement]) -> Result<ShareVector> {
    let word = scheme.code.encode(u)?;
    let participants = scheme.participants();
    Ok(ShareVector {
        secret: word.values[scheme.secret_col],
        seed: None,
        shares: participants.iter().map(|&i| word.values[i - 1]).collect(),
        participants,
        dealer_coeffs: Some(u.to_vec()),
    })
}

/// Like [`deal`], but keeps the dealer's message in the result.
pub fn deal_traced(scheme: &SssScheme, secret: FieldElement, seed: u64) -> Result<ShareVector> {
    let f = scheme.code.field();
    if !f.contains(secret) {
        return Err(Error::ElementOutOfRange {
            enc: secret.enc(),
            q: f.q(),
        });
    }
    let g1 = scheme.column(scheme.secret_column());
    let pivot = g1
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(Error::ZeroColumn(scheme.secret_column()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u: Vec<FieldElement> = (0..scheme.code.k())
        .map(|_| FieldElement::from_enc(rng.gen_range(0..f.q())))
        .collect();
    // Solve for the pivot coordinate; the map from the free coordinates to
    // the fiber {u : u·G_1 = secret} is a bijection, so u is uniform on it.
    u[pivot] = FieldElement::ZERO;
    let rest = f.dot(&u, &g1);
    u[pivot] = f.div(f.sub(secret, rest), g1[pivot])?;
    let mut sv = shares_for(scheme, &u)?;
    debug_assert_eq!(sv.secret, secret);
    sv.seed = Some(seed);
    Ok(sv)
}

/// Seeded dealing; the same seed always gives the same shares.
pub fn deal(scheme: &SssScheme, secret: FieldElement, seed: u64) -> Result<ShareVector> {
    let mut sv = deal_traced(scheme, secret, seed)?;
    sv.dealer_coeffs = None;
    Ok(sv)
}

pub fn is_authorized(scheme: &SssScheme, subset: &[usize]) -> Result<bool> {
    Ok(scheme.solve(subset)?.is_some())
}

/// Recovers the secret from the shares held by `subset` (same order).
pub fn reconstruct(scheme: &SssScheme, subset: &[usize], shares: &[FieldElement]) -> Result<FieldElement> {
    if shares.len() != subset.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} shares for {} participants",
            shares.len(),
            subset.len()
        )));
    }
    let f = scheme.code.field();
    if let Some(s) = shares.iter().find(|s| !f.contains(**s)) {
        return Err(Error::ElementOutOfRange { enc: s.enc(), q: f.q() });
    }
    let x = scheme.solve(subset)?.ok_or(Error::Unauthorized)?;
    // The shares must be the restriction of some codeword u G.
    let g = scheme.code.generator();
    let cols: Vec<usize> = subset.iter().map(|&i| i - 1).collect();
    let restricted = g.select_columns(&cols);
    let rows: Vec<Vec<FieldElement>> = (0..restricted.rows()).map(|r| restricted.row(r).to_vec()).collect();
    if in_span(f, shares, &rows)?.is_none() {
        return Err(Error::InconsistentShares);
    }
    Ok(f.dot(&x, shares))
}

fn sort_access(mut sets: Vec<AccessSet>) -> Vec<AccessSet> {
    sets.sort_by(|a, b| {
        a.indices
            .len()
            .cmp(&b.indices.len())
            .then_with(|| a.indices.cmp(&b.indices))
    });
    sets
}

fn access_by_search(scheme: &SssScheme, budget: Budget) -> Result<Vec<AccessSet>> {
    let parts = scheme.participants();
    let max = scheme.code.k().min(parts.len());
    let needed: i128 = (0..=max).map(|j| binom(parts.len() as i64, j as i64)).sum();
    budget.check(needed as u128)?;
    let mut found = Vec::new();
    for size in 1..=max {
        let candidates: Vec<Vec<usize>> = parts.iter().copied().combinations(size).collect();
        let hits: Result<Vec<Option<Vec<usize>>>> = candidates
            .into_par_iter()
            .map(|set| {
                if !is_authorized(scheme, &set)? {
                    return Ok(None);
                }
                for drop in 0..set.len() {
                    let mut smaller = set.clone();
                    smaller.remove(drop);
                    if is_authorized(scheme, &smaller)? {
                        return Ok(None);
                    }
                }
                Ok(Some(set))
            })
            .collect();
        found.extend(hits?.into_iter().flatten());
    }
    Ok(sort_access(
        found
            .into_iter()
            .map(|indices| AccessSet { indices, minimal: true })
            .collect(),
    ))
}

fn access_by_dual(scheme: &SssScheme, budget: Budget) -> Result<Vec<AccessSet>> {
    let code = &scheme.code;
    budget.check(pow_u128(code.q(), code.n() - code.k()))?;
    let dual = match code.dual() {
        Ok(d) => d,
        // n = k: the secret column is independent of all others
        Err(Error::TrivialDual) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let sets = minimal_codewords(&dual, budget)?
        .into_iter()
        .filter(|c| !c.representative.values[scheme.secret_col].is_zero())
        .map(|c| AccessSet {
            indices: c
                .representative
                .support()
                .into_iter()
                .filter(|&i| i != scheme.secret_col)
                .map(|i| i + 1)
                .collect(),
            minimal: true,
        })
        .collect();
    Ok(sort_access(sets))
}

/// Minimal authorized participant sets, sorted by size then lexicographically.
pub fn minimal_authorized_sets(scheme: &SssScheme, method: AccessMethod, budget: Budget) -> Result<Vec<AccessSet>> {
    match method {
        AccessMethod::Search => access_by_search(scheme, budget),
        AccessMethod::Dual => access_by_dual(scheme, budget),
    }
}

/// Exhaustive check over all `q^k` dealer messages of what `subset` learns.
pub fn perfectness_check(scheme: &SssScheme, subset: &[usize], budget: Budget) -> Result<PerfectnessVerdict> {
    let authorized = is_authorized(scheme, subset)?;
    let code = &scheme.code;
    let q = code.q() as usize;
    let mut table: HashMap<Vec<FieldElement>, Vec<u64>> = HashMap::new();
    for w in code.codewords(budget)? {
        let obs: Vec<FieldElement> = subset.iter().map(|&i| w.values[i - 1]).collect();
        table.entry(obs).or_insert_with(|| vec![0; q])[w.values[scheme.secret_col].enc() as usize] += 1;
    }
    let holds = table.values().all(|counts| {
        if authorized {
            counts.iter().filter(|&&c| c > 0).count() == 1
        } else {
            counts.iter().all(|&c| c == counts[0] && c > 0)
        }
    });
    Ok(PerfectnessVerdict {
        authorized,
        holds,
        distinct_observations: table.len(),
    })
}

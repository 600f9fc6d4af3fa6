//! Enumerative oracles: covering, minimal codewords, minimality of whole
//! codes, the Ashikhmin-Barg ratio test and the full-value property.
//!
//! A nonzero codeword `c` is minimal when every nonzero `c'` with
//! `Supp(c') ⊆ Supp(c)` is a scalar multiple of `c`. Covering and
//! proportionality are invariant under nonzero scaling, so all pairwise checks
//! run over one representative per projective class (first nonzero
//! coefficient equal to 1).

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{Budget, Codeword, LinearCode, SupportSet};
use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// A pair showing that `covering` is not minimal: `Supp(covered) ⊆ Supp(covering)`
/// while the two words are not proportional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub covered: Codeword,
    pub covering: Codeword,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub is_minimal: bool,
    pub witness: Option<Witness>,
    /// Ordered representative pairs examined before the verdict.
    pub checked_pairs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbReport {
    pub w_min: usize,
    pub w_max: usize,
    pub ratio: Ratio<u64>,
    pub threshold: Ratio<u64>,
    /// `w_min / w_max > (q - 1) / q`
    pub sufficient: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullValueWitness {
    pub codeword: Codeword,
    /// Distinct values taken by the codeword, ascending.
    pub values: Vec<FieldElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullValueReport {
    pub holds: bool,
    pub witness: Option<FullValueWitness>,
}

/// A minimal codeword up to scalars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalClass {
    pub representative: Codeword,
    /// `λ * representative` for every nonzero λ, ascending by λ.
    pub multiples: Vec<Codeword>,
}

/// `Supp(c) ⊆ Supp(c2)`.
pub fn is_covered_by(c: &Codeword, c2: &Codeword) -> bool {
    c.values
        .iter()
        .zip(&c2.values)
        .all(|(a, b)| a.is_zero() || !b.is_zero())
}

/// Projective representatives with cached supports.
struct Projective {
    words: Vec<Codeword>,
    supports: Vec<SupportSet>,
    weights: Vec<usize>,
}

impl Projective {
    fn build(code: &LinearCode, budget: Budget) -> Result<Self> {
        code.check_budget(budget)?;
        let enc = code.encoder();
        let words: Vec<Codeword> = enc
            .projective_indices()
            .into_par_iter()
            .map(|i| enc.codeword(i))
            .collect();
        let supports: Vec<SupportSet> = words.iter().map(Codeword::support_set).collect();
        let weights = supports.iter().map(SupportSet::count).collect();
        Ok(Projective {
            words,
            supports,
            weights,
        })
    }

    fn len(&self) -> usize {
        self.words.len()
    }

    /// Least `j != i` whose support lies inside the support of `i`.
    fn first_inside(&self, i: usize) -> Option<usize> {
        (0..self.len())
            .find(|&j| j != i && self.weights[j] <= self.weights[i] && self.supports[j].is_subset_of(&self.supports[i]))
    }

    /// Least `j != i` whose support contains the support of `i`.
    fn first_containing(&self, i: usize) -> Option<usize> {
        (0..self.len())
            .find(|&j| j != i && self.weights[j] >= self.weights[i] && self.supports[i].is_subset_of(&self.supports[j]))
    }
}

/// Brute-force minimality verdict.
///
/// On failure the witness is the lexicographically least (covered, covering)
/// pair of representatives in enumeration order.
pub fn is_minimal_code(code: &LinearCode, budget: Budget) -> Result<MinimalityReport> {
    let proj = Projective::build(code, budget)?;
    let p = proj.len() as u64;
    let hit = (0..proj.len())
        .into_par_iter()
        .find_map_first(|i| proj.first_containing(i).map(|j| (i, j)));
    Ok(match hit {
        None => MinimalityReport {
            is_minimal: true,
            witness: None,
            checked_pairs: p * p.saturating_sub(1),
        },
        Some((i, j)) => {
            let pos = if j > i { j - 1 } else { j } as u64;
            MinimalityReport {
                is_minimal: false,
                witness: Some(Witness {
                    covered: proj.words[i].clone(),
                    covering: proj.words[j].clone(),
                }),
                checked_pairs: i as u64 * p.saturating_sub(1) + pos + 1,
            }
        }
    })
}

/// Scales a nonzero vector so its first nonzero entry is 1.
fn normalize(code: &LinearCode, v: &[FieldElement]) -> Vec<FieldElement> {
    let f = code.field();
    let lead = v.iter().copied().find(|x| !x.is_zero()).expect("nonzero vector");
    let inv = f.inv(lead).expect("nonzero");
    v.iter().map(|&x| f.mul(x, inv)).collect()
}

/// Whether the word with the given values is a minimal codeword of `code`.
pub fn is_minimal_codeword(code: &LinearCode, values: &[FieldElement], budget: Budget) -> Result<bool> {
    if code.decode_exact(values)?.is_none() {
        return Err(Error::NotInCode);
    }
    if values.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroCodeword);
    }
    let proj = Projective::build(code, budget)?;
    let target = SupportSet::from_values(values);
    let own = normalize(code, values);
    let violated = (0..proj.len())
        .into_par_iter()
        .any(|j| proj.supports[j].is_subset_of(&target) && normalize(code, &proj.words[j].values) != own);
    Ok(!violated)
}

/// All minimal codewords, grouped by scalar class, in enumeration order of
/// their representatives.
pub fn minimal_codewords(code: &LinearCode, budget: Budget) -> Result<Vec<MinimalClass>> {
    let proj = Projective::build(code, budget)?;
    let minimal: Vec<usize> = (0..proj.len())
        .into_par_iter()
        .filter(|&i| proj.first_inside(i).is_none())
        .collect();
    let f = code.field();
    Ok(minimal
        .into_iter()
        .map(|i| {
            let rep = proj.words[i].clone();
            let multiples = f
                .nonzero()
                .map(|l| Codeword {
                    coeffs: rep.coeffs.iter().map(|&x| f.mul(l, x)).collect(),
                    values: rep.values.iter().map(|&x| f.mul(l, x)).collect(),
                })
                .collect();
            MinimalClass {
                representative: rep,
                multiples,
            }
        })
        .collect())
}

/// Ashikhmin-Barg ratio test with exact integer comparison.
pub fn ab_condition(code: &LinearCode, budget: Budget) -> Result<AbReport> {
    let (w_min, w_max) = code.min_max_weight(budget)?;
    Ok(ab_from_extrema(code.q(), w_min, w_max))
}

pub fn ab_from_extrema(q: u32, w_min: usize, w_max: usize) -> AbReport {
    let q64 = q as u64;
    AbReport {
        w_min,
        w_max,
        ratio: Ratio::new(w_min as u64, w_max as u64),
        threshold: Ratio::new(q64 - 1, q64),
        sufficient: q64 * w_min as u64 > (q64 - 1) * w_max as u64,
    }
}

/// Whether every nonzero codeword takes all q field values.
pub fn has_full_value_property(code: &LinearCode, budget: Budget) -> Result<FullValueReport> {
    code.check_budget(budget)?;
    let enc = code.encoder();
    let q = code.q() as usize;
    let witness = enc.projective_indices().into_par_iter().find_map_first(|i| {
        let w = enc.codeword(i);
        let mut seen = vec![false; q];
        for v in &w.values {
            seen[v.enc() as usize] = true;
        }
        if seen.iter().all(|&s| s) {
            None
        } else {
            let values = seen
                .iter()
                .enumerate()
                .filter(|(_, &s)| s)
                .map(|(e, _)| FieldElement::from_enc(e as u32))
                .collect();
            Some(FullValueWitness { codeword: w, values })
        }
    });
    Ok(FullValueReport {
        holds: witness.is_none(),
        witness,
    })
}

//! Closed-form parameter and weight predictions for the constructions.
//!
//! Everything is computed in `i128` so that intermediate powers of `q - 1`
//! stay exact for every field this crate can build at desk scale.

use serde::{Deserialize, Serialize};

/// Binomial coefficient, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

fn ipow(b: i128, e: i64) -> i128 {
    (0..e).fold(1, |acc, _| acc * b)
}

/// Weight of a first-construction codeword whose coefficient vector has
/// weight `s`: `s + C(s,2)(q-2) + s(t-s)(q-1)`.
pub fn predicted_ws(s: usize, t: usize, q: u32) -> i128 {
    let (s, t, q) = (s as i128, t as i128, q as i128);
    s + binom(s as i64, 2) * (q - 2) + s * (t - s) * (q - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCheck {
    pub s: usize,
    pub w_s: i128,
    pub w_prev: i128,
    /// `-t + (t - s) q + 2`
    pub predicted_step: i128,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstParams {
    pub n: i128,
    pub k: i128,
    pub d: i128,
    pub w_min: i128,
    pub w_max: i128,
    /// `q >= t - 2`; outside this range the values are unverified.
    pub hypothesis_holds: bool,
    pub steps: Vec<StepCheck>,
}

pub fn predicted_first_params(t: usize, q: u32) -> FirstParams {
    let (ti, qi) = (t as i128, q as i128);
    let steps = (1..=t)
        .map(|s| {
            let w_s = predicted_ws(s, t, q);
            let w_prev = predicted_ws(s - 1, t, q);
            let predicted_step = -ti + (ti - s as i128) * qi + 2;
            StepCheck {
                s,
                w_s,
                w_prev,
                predicted_step,
                holds: w_s - w_prev == predicted_step,
            }
        })
        .collect();
    FirstParams {
        n: binom(t as i64, 2) * (qi - 1) + ti,
        k: ti,
        d: (ti - 1) * (qi - 1) + 1,
        w_min: 1 + (ti - 1) * (qi - 1),
        w_max: ti - 1 + binom(t as i64 - 1, 2) * (qi - 2) + (ti - 1) * (qi - 1),
        hypothesis_holds: qi >= ti - 2,
        steps,
    }
}

/// Correction term in the weight of a weight-s-construction codeword whose
/// coefficient vector has weight `r`:
///
/// `sum_{z=2}^{r} C(r,z) C(t-r,s-z) (q-1)^(s-z) sum_{i=1}^{z-1} (q-1)^i (-1)^(z-1+i)`
pub fn psi(r: usize, t: usize, s: usize, q: u32) -> i128 {
    let qm = q as i128 - 1;
    let (r, t, s) = (r as i64, t as i64, s as i64);
    let mut total = 0;
    for z in 2..=r {
        let outer = binom(r, z) * binom(t - r, s - z);
        if outer == 0 {
            continue;
        }
        let inner: i128 = (1..z)
            .map(|i| {
                let sign = if (z - 1 + i) % 2 == 0 { 1 } else { -1 };
                sign * ipow(qm, i)
            })
            .sum();
        total += outer * ipow(qm, s - z) * inner;
    }
    total
}

/// `(r, N - t + r - psi(r) - C(t-r, s)(q-1)^s)` for `r = 0..=t`, where
/// `N = t + C(t,s)(q-1)^s`.
pub fn predicted_dprime_weights(t: usize, s: usize, q: u32) -> Vec<(usize, i128)> {
    let qm = q as i128 - 1;
    let (ti, si) = (t as i64, s as i64);
    let n = t as i128 + binom(ti, si) * ipow(qm, si);
    (0..=t)
        .map(|r| {
            let w = n - t as i128 + r as i128 - psi(r, t, s, q) - binom(ti - r as i64, si) * ipow(qm, si);
            (r, w)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondBound {
    pub n: i128,
    pub dim: i128,
    pub d_upper: i128,
}

pub fn predicted_second_bound(t: usize, k: usize, q: u32) -> SecondBound {
    let qm = q as i128 - 1;
    let (t, k) = (t as i64, k as i64);
    SecondBound {
        n: binom(t, k) * ipow(qm, k - 1) + t as i128,
        dim: t as i128,
        d_upper: 1 + binom(t - 1, k - 1) * ipow(qm, k - 1),
    }
}

/// Weight of a codeword of the extended first construction built from `s`
/// rows. When the first row takes part, each of the `q - 2` appended columns
/// is a nonzero multiple of its coefficient.
pub fn extended_weight(s: usize, t: usize, q: u32, with_first_row: bool) -> i128 {
    predicted_ws(s, t, q) + if with_first_row { q as i128 - 2 } else { 0 }
}

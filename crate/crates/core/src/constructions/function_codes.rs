//! Codes `{(u f(x) + v·x)_{x != 0}}` defined by a function `f: GF(q)^n -> GF(q)`.
//!
//! Columns are indexed by the nonzero `x` in ascending order of the base-q
//! integer with `x_1` as the least significant digit. The generator rows are
//! the `f` row followed by the coordinate rows `x_1..x_n`; when the `f` row
//! lies in the span of the coordinate rows it is dropped, so `k` is the true
//! dimension of the image.

use crate::code::{pow_u128, Budget, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg::MatrixGF;

/// Parameters of the weight-threshold function
/// `f(x) = alphas[wt(x) - 1]` for `1 <= wt(x) <= k`, and `0` above `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionCodeSpec {
    pub n: usize,
    pub k: usize,
    pub alphas: Vec<u32>,
}

/// Digits of `idx` in base q, least significant first.
fn point(idx: u64, q: u64, n: usize) -> Vec<FieldElement> {
    let mut x = idx;
    (0..n)
        .map(|_| {
            let d = x % q;
            x /= q;
            FieldElement::from_enc(d as u32)
        })
        .collect()
}

pub fn f_value(spec: &FunctionCodeSpec, x: &[FieldElement]) -> FieldElement {
    let wt = x.iter().filter(|v| !v.is_zero()).count();
    if (1..=spec.k).contains(&wt) {
        FieldElement::from_enc(spec.alphas[wt - 1])
    } else {
        FieldElement::ZERO
    }
}

/// `sum_{j<k} prod_{l<r} x_{jr+l}`.
pub fn g_value(r: usize, k: usize, field: &FieldSpec, x: &[FieldElement]) -> FieldElement {
    (0..k).fold(FieldElement::ZERO, |acc, j| {
        let prod = x[j * r..(j + 1) * r]
            .iter()
            .fold(FieldElement::ONE, |p, &v| field.mul(p, v));
        field.add(acc, prod)
    })
}

fn function_code(
    field: &FieldSpec,
    n: usize,
    budget: Budget,
    f: impl Fn(&[FieldElement]) -> FieldElement,
) -> Result<LinearCode> {
    let q = field.q();
    let len = pow_u128(q, n) - 1;
    budget.check(len)?;
    let len = len as usize;
    let mut frow = MatrixGF::zeros(field, 1, len);
    let mut coords = MatrixGF::zeros(field, n, len);
    for idx in 1..=len as u64 {
        let x = point(idx, q as u64, n);
        let col = idx as usize - 1;
        frow.set(0, col, f(&x));
        for (i, &xi) in x.iter().enumerate() {
            coords.set(i, col, xi);
        }
    }
    let full = frow.vstack(&coords)?;
    let gen = if full.rank() == n + 1 { full } else { coords };
    LinearCode::from_generator(gen)
}

/// Code from the weight-threshold function. Requires odd q, `n > 3`,
/// `2 <= k <= n - 2` and `k` nonzero alphas.
pub fn cf_code(spec: &FunctionCodeSpec, q: u32, budget: Budget) -> Result<LinearCode> {
    let field = FieldSpec::new(q)?;
    if q.is_multiple_of(2) {
        return Err(Error::BadParams(format!("q must be odd, got {q}")));
    }
    if spec.n <= 3 {
        return Err(Error::BadParams(format!("n must exceed 3, got {}", spec.n)));
    }
    if spec.k < 2 || spec.k + 2 > spec.n {
        return Err(Error::BadParams(format!(
            "k must lie in 2..=n-2, got k={} for n={}",
            spec.k, spec.n
        )));
    }
    if spec.alphas.len() != spec.k {
        return Err(Error::BadParams(format!(
            "expected {} alphas, got {}",
            spec.k,
            spec.alphas.len()
        )));
    }
    if let Some(&a) = spec.alphas.iter().find(|&&a| a == 0 || a >= q) {
        return Err(Error::BadParams(format!(
            "alpha {a} is not a nonzero element of GF({q})"
        )));
    }
    function_code(&field, spec.n, budget, |x| f_value(spec, x))
}

/// Code from `g(x) = sum_j x_{jr+1} ... x_{jr+r}` on `n = r k` variables.
pub fn cg_code(r: usize, k: usize, q: u32, budget: Budget) -> Result<LinearCode> {
    let field = FieldSpec::new(q)?;
    if r < 2 || k < 2 {
        return Err(Error::BadParams(format!("need r, k >= 2, got r={r}, k={k}")));
    }
    function_code(&field, r * k, budget, |x| g_value(r, k, &field, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(xs: &[u32]) -> Vec<FieldElement> {
        xs.iter().map(|&x| FieldElement::from_enc(x)).collect()
    }

    #[test]
    fn f_values() {
        let spec = FunctionCodeSpec {
            n: 4,
            k: 2,
            alphas: vec![1, 2],
        };
        assert_eq!(f_value(&spec, &fe(&[1, 0, 0, 0])), FieldElement::from_enc(1));
        assert_eq!(f_value(&spec, &fe(&[0, 2, 1, 0])), FieldElement::from_enc(2));
        assert_eq!(f_value(&spec, &fe(&[1, 1, 1, 0])), FieldElement::ZERO);
    }

    #[test]
    fn g_values() {
        let field = FieldSpec::new(2).unwrap();
        assert_eq!(g_value(2, 2, &field, &fe(&[1, 1, 0, 0])), FieldElement::ONE);
        assert_eq!(g_value(2, 2, &field, &fe(&[1, 1, 1, 1])), FieldElement::ZERO);
        assert_eq!(g_value(2, 2, &field, &fe(&[1, 0, 1, 1])), FieldElement::ONE);
    }

    #[test]
    fn cg_shape() {
        let c = cg_code(2, 2, 2, Budget::DEFAULT).unwrap();
        assert_eq!((c.n(), c.k()), (15, 5));
    }

    #[test]
    fn cf_shape() {
        let spec = FunctionCodeSpec {
            n: 4,
            k: 2,
            alphas: vec![1, 2],
        };
        let c = cf_code(&spec, 3, Budget::DEFAULT).unwrap();
        assert_eq!((c.n(), c.k()), (80, 5));
    }

    #[test]
    fn cf_rejects_bad_params() {
        let ok = FunctionCodeSpec {
            n: 4,
            k: 2,
            alphas: vec![1, 2],
        };
        assert!(cf_code(&ok, 4, Budget::DEFAULT).is_err());
        let small_n = FunctionCodeSpec { n: 3, ..ok.clone() };
        assert!(cf_code(&small_n, 3, Budget::DEFAULT).is_err());
        let big_k = FunctionCodeSpec {
            k: 3,
            alphas: vec![1, 1, 1],
            ..ok.clone()
        };
        assert!(cf_code(&big_k, 3, Budget::DEFAULT).is_err());
        let zero_alpha = FunctionCodeSpec {
            alphas: vec![1, 0],
            ..ok.clone()
        };
        assert!(cf_code(&zero_alpha, 3, Budget::DEFAULT).is_err());
        assert!(matches!(
            cf_code(&ok, 3, Budget(79)),
            Err(Error::BudgetExceeded { needed: 80, .. })
        ));
    }

    #[test]
    fn affine_function_row_is_dropped() {
        // a linear function adds nothing beyond the coordinate rows
        let field = FieldSpec::new(3).unwrap();
        let c = function_code(&field, 2, Budget::DEFAULT, |x| field.add(x[0], x[1])).unwrap();
        assert_eq!((c.n(), c.k()), (8, 2));
    }
}

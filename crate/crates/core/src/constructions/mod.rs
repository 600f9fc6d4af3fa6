//! Generator matrices for the minimal-code families and the operations that
//! build new minimal codes from old ones.
//!
//! Column orders are fixed so that emitted matrices are reproducible: support
//! sets in lexicographic order, then coefficient tuples in lexicographic order
//! of their encodings. Weights and minimality do not depend on column order.

mod function_codes;
pub mod predict;

pub use function_codes::{cf_code, cg_code, f_value, g_value, FunctionCodeSpec};
pub use predict::{
    binom, extended_weight, predicted_dprime_weights, predicted_first_params, predicted_second_bound, predicted_ws,
    psi, FirstParams, SecondBound, StepCheck,
};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{has_full_value_property, is_minimal_code};
use crate::code::{Budget, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg::MatrixGF;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

/// `I_t` followed by the given columns, as a code.
fn systematic(field: &FieldSpec, t: usize, extra: &[Vec<FieldElement>]) -> Result<LinearCode> {
    let b = MatrixGF::from_columns(field, t, extra)?;
    LinearCode::from_generator(MatrixGF::identity(field, t).hstack(&b)?)
}

/// Columns `e_{S_0} + sum_j λ_j e_{S_j}` (or every nonzero pattern on `S` when
/// `unit_lead` is false) for all `|S| = size` subsets in lexicographic order.
fn support_columns(field: &FieldSpec, t: usize, size: usize, unit_lead: bool) -> Vec<Vec<FieldElement>> {
    let free = if unit_lead { size - 1 } else { size };
    let mut cols = Vec::new();
    for subset in (0..t).combinations(size) {
        let tuples: Vec<Vec<FieldElement>> = if free == 0 {
            vec![vec![]]
        } else {
            (0..free).map(|_| field.nonzero()).multi_cartesian_product().collect()
        };
        for tuple in tuples {
            let mut col = vec![FieldElement::ZERO; t];
            let mut it = tuple.into_iter();
            for (pos, &row) in subset.iter().enumerate() {
                col[row] = if unit_lead && pos == 0 {
                    FieldElement::ONE
                } else {
                    it.next().unwrap()
                };
            }
            cols.push(col);
        }
    }
    cols
}

/// `(I_t | B)` where the columns of `B` are `e_i + λ e_j`, `i < j`, λ ≠ 0.
pub fn first(t: usize, q: u32) -> Result<LinearCode> {
    if t < 2 {
        return Err(bad(format!("first construction needs t >= 2, got {t}")));
    }
    let field = FieldSpec::new(q)?;
    systematic(&field, t, &support_columns(&field, t, 2, true))
}

/// `(I_t | B̃)` where the columns of `B̃` are `e_{i_1} + sum_{j>=2} λ_j e_{i_j}`
/// over k-subsets `i_1 < ... < i_k`. Coincides with [`first`] at `k = 2`.
pub fn second(t: usize, k: usize, q: u32) -> Result<LinearCode> {
    if t < 2 || k < 2 || k + 1 > t {
        return Err(bad(format!(
            "second construction needs 2 <= k <= t-1, got t={t}, k={k}"
        )));
    }
    let field = FieldSpec::new(q)?;
    systematic(&field, t, &support_columns(&field, t, k, true))
}

/// `(I_t | B̄)` where `B̄` holds every vector of weight exactly `s` in GF(q)^t.
pub fn weight_s(s: usize, t: usize, q: u32) -> Result<LinearCode> {
    if s < 1 || s > t {
        return Err(bad(format!(
            "weight-s construction needs 1 <= s <= t, got s={s}, t={t}"
        )));
    }
    let field = FieldSpec::new(q)?;
    systematic(&field, t, &support_columns(&field, t, s, false))
}

/// [`first`] with `q - 2` extra columns `(xi^i, 0, ..., 0)^T`, `i = 1..q-2`.
///
/// For q = 2 nothing is appended and the result equals `first(t, 2)`.
pub fn extended(t: usize, q: u32) -> Result<LinearCode> {
    let base = first(t, q)?;
    let field = base.field().clone();
    let cols: Vec<Vec<FieldElement>> = field
        .powers_of_xi()
        .into_iter()
        .map(|x| {
            let mut c = vec![FieldElement::ZERO; t];
            c[0] = x;
            c
        })
        .collect();
    if cols.is_empty() {
        return Ok(base);
    }
    let extra = MatrixGF::from_columns(&field, t, &cols)?;
    LinearCode::from_generator(base.generator().hstack(&extra)?)
}

/// Block generator `(G_0 | G_1 | ... | G_s)` over `s + k` rows: `G_0` has `s`
/// zero rows above `G`, and `G_i` has the all-ones row in position `i` of
/// the top `s` rows (zeros elsewhere) above `G`.
///
/// No hypotheses on `code` are checked; see [`lift`].
pub fn lift_unchecked(code: &LinearCode, s: usize) -> Result<LinearCode> {
    if s < 1 {
        return Err(bad("lift depth s must be at least 1"));
    }
    let g = code.generator();
    let field = code.field();
    let (k, n) = (code.k(), code.n());
    let mut out = MatrixGF::zeros(field, s + k, (s + 1) * n);
    for block in 0..=s {
        let off = block * n;
        if block > 0 {
            for c in 0..n {
                out.set(block - 1, off + c, FieldElement::ONE);
            }
        }
        for r in 0..k {
            for c in 0..n {
                out.set(s + r, off + c, g.get(r, c));
            }
        }
    }
    LinearCode::from_generator(out)
}

/// [`lift_unchecked`] after verifying by enumeration that `code` is minimal and
/// that every nonzero codeword takes all q values.
pub fn lift(code: &LinearCode, s: usize, budget: Budget) -> Result<LinearCode> {
    if s < 1 {
        return Err(bad("lift depth s must be at least 1"));
    }
    if !is_minimal_code(code, budget)?.is_minimal {
        return Err(Error::PreconditionFailed("input code is not minimal".into()));
    }
    if let Some(w) = has_full_value_property(code, budget)?.witness {
        return Err(Error::PreconditionFailed(format!(
            "codeword with coefficients {:?} takes only the values {:?}",
            w.codeword.coeffs, w.values
        )));
    }
    lift_unchecked(code, s)
}

/// Code generated by the Kronecker product of the two generators.
pub fn tensor_product(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    LinearCode::from_generator(c1.generator().kronecker(c2.generator())?)
}

/// Uniformly drawn `k x n` generator of rank `k` with no zero column,
/// resampled until both hold. Deterministic in `seed`.
pub fn random_code(q: u32, k: usize, n: usize, seed: u64) -> Result<LinearCode> {
    let field = FieldSpec::new(q)?;
    if k == 0 || k > n {
        return Err(bad(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        match LinearCode::from_generator(MatrixGF::from_rows(&field, &rows)?) {
            Ok(code) if !code.has_zero_column() => return Ok(code),
            _ => continue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_minimal_code;

    fn rows(c: &LinearCode) -> Vec<Vec<u32>> {
        let g = c.generator();
        (0..g.rows())
            .map(|r| g.row(r).iter().map(|x| x.enc()).collect())
            .collect()
    }

    #[test]
    fn first_small() {
        assert_eq!(rows(&first(2, 2).unwrap()), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        let c = first(3, 3).unwrap();
        assert_eq!((c.n(), c.k()), (9, 3));
        assert_eq!(c.generator().rank(), 3);
        assert_eq!(
            c.generator().column(3),
            vec![FieldElement::ONE, FieldElement::ONE, FieldElement::ZERO]
        );
        assert_eq!(c.min_distance(Budget::DEFAULT).unwrap(), 5);
        assert!(matches!(first(1, 3), Err(Error::BadParams(_))));
        assert!(matches!(first(3, 6), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn second_matches_first_at_k2() {
        assert_eq!(second(3, 2, 3).unwrap(), first(3, 3).unwrap());
        assert_eq!(second(5, 2, 4).unwrap(), first(5, 4).unwrap());
        assert!(second(3, 3, 2).is_err());
        assert!(second(3, 1, 2).is_err());
    }

    #[test]
    fn second_shape_and_first_row_weight() {
        let c = second(4, 3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (8, 4));
        let w = c.generator().row(0).iter().filter(|x| !x.is_zero()).count();
        assert_eq!(w, 4);
    }

    #[test]
    fn weight_s_examples() {
        let c = weight_s(2, 3, 2).unwrap();
        assert_eq!(
            rows(&c),
            vec![vec![1, 0, 0, 1, 1, 0], vec![0, 1, 0, 1, 0, 1], vec![0, 0, 1, 0, 1, 1]]
        );
        assert_eq!(
            rows(&weight_s(1, 2, 2).unwrap()),
            vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
        );
        // a single support set carries (q-1)^t columns
        assert_eq!(weight_s(3, 3, 3).unwrap().n(), 3 + 8);
        assert!(weight_s(0, 3, 2).is_err());
        assert!(weight_s(4, 3, 2).is_err());
    }

    #[test]
    fn extended_examples() {
        let c = extended(3, 3).unwrap();
        assert_eq!((c.n(), c.k()), (10, 3));
        assert_eq!(
            c.generator().column(9),
            vec![FieldElement::from_enc(2), FieldElement::ZERO, FieldElement::ZERO]
        );
        assert_eq!(extended(2, 2).unwrap(), first(2, 2).unwrap());
        assert_eq!(extended(3, 4).unwrap().n(), 3 * 3 + 3 + 2);
    }

    #[test]
    fn lift_of_binary_base() {
        let f2 = FieldSpec::new(2).unwrap();
        let base = LinearCode::from_generator(MatrixGF::from_rows(&f2, &[[1, 0]]).unwrap()).unwrap();
        let d = lift(&base, 1, Budget::DEFAULT).unwrap();
        assert_eq!(rows(&d), vec![vec![0, 0, 1, 1], vec![1, 0, 1, 0]]);
        assert!(is_minimal_code(&d, Budget::DEFAULT).unwrap().is_minimal);
    }

    #[test]
    fn lift_refuses_bad_inputs() {
        let f2 = FieldSpec::new(2).unwrap();
        let full = LinearCode::from_generator(MatrixGF::identity(&f2, 2)).unwrap();
        assert!(matches!(
            lift(&full, 1, Budget::DEFAULT),
            Err(Error::PreconditionFailed(_))
        ));
        // minimal but some word misses a value
        let a33 = first(3, 3).unwrap();
        assert!(matches!(
            lift(&a33, 1, Budget::DEFAULT),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(lift_unchecked(&a33, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn tensor_identity() {
        let c = first(2, 3).unwrap();
        let one = LinearCode::from_generator(MatrixGF::identity(c.field(), 1)).unwrap();
        let t = tensor_product(&c, &one).unwrap();
        assert_eq!(t, c);
        let other = first(2, 2).unwrap();
        assert!(matches!(tensor_product(&c, &other), Err(Error::SpecMismatch(3, 2))));
    }

    #[test]
    fn random_code_is_reproducible() {
        let a = random_code(3, 3, 5, 7).unwrap();
        assert_eq!(a, random_code(3, 3, 5, 7).unwrap());
        assert_eq!((a.n(), a.k()), (5, 3));
        assert!(!a.has_zero_column());
        assert!(random_code(3, 4, 3, 0).is_err());
    }
}

use std::collections::BTreeMap;

use itertools::Itertools;
use proptest::prelude::*;

use mincodes::analysis::{is_covered_by, is_minimal_code};
use mincodes::constructions as cons;
use mincodes::linalg::in_span;
use mincodes::sss::{self, AccessMethod, SssScheme};
use mincodes::{Budget, FieldElement, FieldSpec, LinearCode, MatrixGF};

const B: Budget = Budget::DEFAULT;

fn matrix(q: u32, rows: usize, cols: usize) -> impl Strategy<Value = MatrixGF> {
    proptest::collection::vec(0..q, rows * cols).prop_map(move |v| {
        let f = FieldSpec::new(q).unwrap();
        let rows: Vec<Vec<u32>> = v.chunks(cols).map(|c| c.to_vec()).collect();
        MatrixGF::from_rows(&f, &rows).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = MatrixGF> {
    (prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]), 1usize..5, 1usize..6)
        .prop_flat_map(|(q, r, c)| matrix(q, r, c))
}

/// Full-rank codes of length at most 6 over small fields.
fn small_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 1usize..4, 0usize..4)
        .prop_flat_map(|(q, k, extra)| matrix(q, k, k + extra))
        .prop_filter_map("rank deficient", |m| LinearCode::from_generator(m).ok())
}

/// Every message, `u_1` varying fastest.
fn all_messages(f: &FieldSpec, k: usize) -> Vec<Vec<FieldElement>> {
    (0..k)
        .map(|_| f.elements())
        .multi_cartesian_product()
        .map(|mut u| {
            u.reverse();
            u
        })
        .collect()
}

/// Direct `u G` with no precomputation.
fn naive_words(code: &LinearCode) -> Vec<(Vec<FieldElement>, Vec<FieldElement>)> {
    let g = code.generator();
    let f = code.field();
    all_messages(f, code.k())
        .into_iter()
        .map(|u| {
            let v = (0..code.n())
                .map(|c| (0..code.k()).fold(FieldElement::ZERO, |acc, r| f.add(acc, f.mul(u[r], g.get(r, c)))))
                .collect();
            (u, v)
        })
        .collect()
}

fn support(v: &[FieldElement]) -> Vec<usize> {
    (0..v.len()).filter(|&i| !v[i].is_zero()).collect()
}

fn proportional(f: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> bool {
    f.nonzero().any(|l| a.iter().zip(b).all(|(&x, &y)| f.mul(l, x) == y))
}

/// Quadratic minimality oracle over all pairs of nonzero words.
fn naive_minimal(code: &LinearCode) -> bool {
    let f = code.field();
    let words: Vec<_> = naive_words(code)
        .into_iter()
        .map(|x| x.1)
        .filter(|v| !support(v).is_empty())
        .collect();
    words.iter().all(|c| {
        let sc = support(c);
        words.iter().all(|d| {
            let sd = support(d);
            !sd.iter().all(|i| sc.contains(i)) || proportional(f, c, d)
        })
    })
}

fn rank_of(f: &FieldSpec, cols: &[Vec<FieldElement>], height: usize) -> usize {
    if cols.is_empty() {
        return 0;
    }
    MatrixGF::from_columns(f, height, cols).unwrap().rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_on_large_fields(q in prop::sample::select(vec![27u32, 49, 64, 81, 125, 243, 256, 343, 512, 729]),
                                    a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = FieldSpec::new(q).unwrap();
        let (a, b, c) = (FieldElement::from_enc(a % q), FieldElement::from_enc(b % q), FieldElement::from_enc(c % q));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn encoding_is_linear(code in small_code(), seed in any::<u64>()) {
        let f = code.field().clone();
        let msgs = all_messages(&f, code.k());
        let u = &msgs[(seed as usize) % msgs.len()];
        let v = &msgs[(seed as usize / 7) % msgs.len()];
        let l = FieldElement::from_enc((seed % code.q() as u64) as u32);
        let comb: Vec<_> = u.iter().zip(v).map(|(&a, &b)| f.add(f.mul(l, a), b)).collect();
        let lhs = code.encode(&comb).unwrap().values;
        let (cu, cv) = (code.encode(u).unwrap().values, code.encode(v).unwrap().values);
        let rhs: Vec<_> = cu.iter().zip(&cv).map(|(&a, &b)| f.add(f.mul(l, a), b)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn enumeration_matches_naive_oracle(code in small_code()) {
        let mut naive: BTreeMap<usize, u64> = BTreeMap::new();
        for (_, v) in naive_words(&code) {
            *naive.entry(support(&v).len()).or_default() += 1;
        }
        let wd = code.weight_distribution(B).unwrap();
        prop_assert_eq!(wd.total(), (code.q() as u128).pow(code.k() as u32));
        prop_assert_eq!(&wd.counts, &naive);
        let words: Vec<_> = code.codewords(B).unwrap().map(|w| (w.coeffs, w.values)).collect();
        prop_assert_eq!(words, naive_words(&code));
    }

    #[test]
    fn dual_is_orthogonal_complement(code in small_code()) {
        prop_assume!(code.k() < code.n());
        let d = code.dual().unwrap();
        prop_assert_eq!(d.k() + code.k(), code.n());
        let f = code.field();
        for r in 0..code.k() {
            for s in 0..d.k() {
                prop_assert_eq!(f.dot(code.generator().row(r), d.generator().row(s)), FieldElement::ZERO);
            }
        }
    }

    #[test]
    fn minimality_matches_naive_oracle(code in small_code()) {
        let report = is_minimal_code(&code, B).unwrap();
        prop_assert_eq!(report.is_minimal, naive_minimal(&code));
        if let Some(w) = report.witness {
            let f = code.field();
            prop_assert!(is_covered_by(&w.covered, &w.covering));
            prop_assert!(!w.covered.is_zero());
            prop_assert!(!proportional(f, &w.covered.values, &w.covering.values));
            prop_assert_eq!(code.encode(&w.covered.coeffs).unwrap(), w.covered);
            prop_assert_eq!(code.encode(&w.covering.coeffs).unwrap(), w.covering);
        }
    }

    #[test]
    fn appending_columns_keeps_minimality(t in 2usize..4, q in prop::sample::select(vec![2u32, 3]),
                                           extra in proptest::collection::vec(0u32..3, 0..12)) {
        let base = cons::first(t, q).unwrap();
        let f = base.field().clone();
        let cols: Vec<Vec<FieldElement>> = extra
            .chunks(t)
            .filter(|c| c.len() == t)
            .map(|c| c.iter().map(|&x| FieldElement::from_enc(x % q)).collect())
            .collect();
        prop_assume!(!cols.is_empty());
        let a = MatrixGF::from_columns(&f, t, &cols).unwrap();
        let sup = LinearCode::from_generator(base.generator().hstack(&a).unwrap()).unwrap();
        prop_assert!(is_minimal_code(&sup, B).unwrap().is_minimal);
    }

    #[test]
    fn kronecker_rank_multiplies(a in any_matrix(), b_shape in (1usize..4, 1usize..4), seed in any::<u64>()) {
        let q = a.field().q();
        let f = a.field().clone();
        let (r, c) = b_shape;
        let vals: Vec<u32> = (0..r * c).map(|i| ((seed >> (i % 60)) as u32 ^ i as u32) % q).collect();
        let rows: Vec<Vec<u32>> = vals.chunks(c).map(|x| x.to_vec()).collect();
        let b = MatrixGF::from_rows(&f, &rows).unwrap();
        prop_assert_eq!(a.kronecker(&b).unwrap().rank(), a.rank() * b.rank());
    }

    #[test]
    fn nullspace_is_kernel(m in any_matrix()) {
        let n = m.nullspace();
        prop_assert_eq!(n.rows() + m.rank(), m.cols());
        let f = m.field();
        for i in 0..n.rows() {
            for r in 0..m.rows() {
                prop_assert_eq!(f.dot(m.row(r), n.row(i)), FieldElement::ZERO);
            }
        }
        if n.rows() > 0 {
            prop_assert_eq!(n.rank(), n.rows());
        }
    }

    #[test]
    fn in_span_solutions_reproduce_target(m in any_matrix(), pick in any::<u64>()) {
        let f = m.field().clone();
        let cols: Vec<Vec<FieldElement>> = (0..m.cols()).map(|c| m.column(c)).collect();
        let target: Vec<FieldElement> = (0..m.rows()).map(|i| FieldElement::from_enc(((pick >> (3 * i)) % f.q() as u64) as u32)).collect();
        let mut with_target = cols.clone();
        with_target.push(target.clone());
        let inside = rank_of(&f, &with_target, m.rows()) == rank_of(&f, &cols, m.rows());
        match in_span(&f, &target, &cols).unwrap() {
            Some(x) => {
                prop_assert!(inside);
                let back: Vec<_> = (0..m.rows())
                    .map(|r| (0..cols.len()).fold(FieldElement::ZERO, |acc, j| f.add(acc, f.mul(x[j], cols[j][r]))))
                    .collect();
                prop_assert_eq!(back, target);
            }
            None => prop_assert!(!inside),
        }
    }

    #[test]
    fn text_format_round_trips(m in any_matrix()) {
        prop_assert_eq!(MatrixGF::from_text(&m.to_text()).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sss_properties(q in prop::sample::select(vec![2u32, 3]), k in 2usize..4, extra in 1usize..4, seed in any::<u64>(),
                      secret_col in 1usize..4) {
        let code = cons::random_code(q, k, k + extra, seed).unwrap();
        prop_assume!(secret_col <= code.n());
        let scheme = SssScheme::with_secret_column(code.clone(), secret_col).unwrap();
        let f = code.field().clone();
        let parts = scheme.participants();
        let everyone = sss::is_authorized(&scheme, &parts).unwrap();

        for secret in f.elements() {
            let sv = sss::deal_traced(&scheme, secret, seed).unwrap();
            let u = sv.dealer_coeffs.clone().unwrap();
            let g_s = code.generator().column(secret_col - 1);
            prop_assert_eq!(f.dot(&u, &g_s), secret);
            if everyone {
                prop_assert_eq!(sss::reconstruct(&scheme, &parts, &sv.shares).unwrap(), secret);
            }

            for subset in parts.iter().copied().powerset().filter(|s| !s.is_empty()) {
                let authorized = sss::is_authorized(&scheme, &subset).unwrap();
                // upward closure
                for extra in parts.iter().filter(|p| !subset.contains(p)) {
                    let mut bigger = subset.clone();
                    bigger.push(*extra);
                    bigger.sort_unstable();
                    prop_assert!(!authorized || sss::is_authorized(&scheme, &bigger).unwrap());
                }
                if !authorized {
                    continue;
                }
                // every solution of the span system yields the same secret
                let shares: Vec<FieldElement> = subset.iter().map(|&p| sv.shares[parts.iter().position(|&x| x == p).unwrap()]).collect();
                let cols: Vec<Vec<FieldElement>> = subset.iter().map(|&p| code.generator().column(p - 1)).collect();
                for x in all_messages(&f, subset.len()) {
                    let combo: Vec<_> = (0..code.k())
                        .map(|r| (0..cols.len()).fold(FieldElement::ZERO, |acc, j| f.add(acc, f.mul(x[j], cols[j][r]))))
                        .collect();
                    if combo == g_s {
                        let rec = x.iter().zip(&shares).fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                        prop_assert_eq!(rec, secret);
                    }
                }
                prop_assert_eq!(sss::reconstruct(&scheme, &subset, &shares).unwrap(), secret);
            }
        }

        let search = sss::minimal_authorized_sets(&scheme, AccessMethod::Search, B).unwrap();
        let dual = sss::minimal_authorized_sets(&scheme, AccessMethod::Dual, B);
        if let Ok(dual) = dual {
            prop_assert_eq!(&search, &dual);
        }
        for set in &search {
            prop_assert!(sss::is_authorized(&scheme, &set.indices).unwrap());
            for i in 0..set.indices.len() {
                let mut smaller = set.indices.clone();
                smaller.remove(i);
                prop_assert!(!sss::is_authorized(&scheme, &smaller).unwrap());
            }
        }
    }
}

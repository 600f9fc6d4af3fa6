//! Minimal linear codes over small finite fields.
//!
//! The crate builds generator matrices for several families of minimal codes,
//! checks their parameters and minimality by exhaustive enumeration, and runs
//! Massey's secret sharing scheme on top of any code.
//!
//! ```
//! use mincodes::{constructions, analysis, Budget};
//!
//! let code = constructions::first(3, 3).unwrap();
//! assert_eq!((code.n(), code.k()), (9, 3));
//! assert_eq!(code.min_max_weight(Budget::DEFAULT).unwrap(), (5, 7));
//! assert!(analysis::is_minimal_code(&code, Budget::DEFAULT).unwrap().is_minimal);
//! ```

pub mod analysis;
pub mod code;
pub mod constructions;
mod error;
pub mod gf;
pub mod linalg;
pub mod sss;
pub mod sweep;

pub use code::{Budget, Codeword, LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use gf::{build_field, FieldElement, FieldSpec};
pub use linalg::MatrixGF;

//! Exact computer algebra for Witt superalgebras `W_{m,n}^+` / `W_{m,n}`,
//! super Weyl algebras, `gl(m,n)` weight modules and the tensor modules
//! built from them — together with batch verification suites that check the
//! defining identities weight space by weight space over the rationals.
//!
//! ```
//! use superwitt::weyl::AlgebraShape;
//! use superwitt::witt::{parse_witt_generator, witt_bracket};
//!
//! let shape = AlgebraShape::plus(1, 1).unwrap();
//! let x = parse_witt_generator("xi1*d/dt1", &shape).unwrap();
//! let y = parse_witt_generator("t1*d/dxi1", &shape).unwrap();
//! let b = witt_bracket(&x, &y).unwrap();
//! // both generators are odd, so the bracket is the anticommutator:
//! // [xi1 d/dt1, t1 d/dxi1] = xi1 d/dxi1 + t1 d/dt1
//! assert_eq!(b.len(), 2);
//! ```

pub mod error;
pub mod evidence;
pub mod gl;
pub mod gln;
pub mod grading;
pub mod linalg;
pub mod mlambda;
pub mod pmod;
pub mod report;
pub mod scalar;
pub mod signs;
pub mod subquotient;
pub mod suites;
pub mod tensor;
pub mod weyl;
pub mod witt;

pub use error::{Error, Result};
pub use grading::{koszul, OddSet, Parity, Weight};
pub use linalg::{kernel_basis, rref, BasisKey, GradedVector, WeightSubspace};
pub use report::{emit_report, Check, CheckStatus, Report, ReportFormat};
pub use scalar::Scalar;
pub use suites::{default_grid, parse_p_factors, run_suite, run_suite_with_signs, SuiteConfig, SuiteName};

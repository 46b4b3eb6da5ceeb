//! Exact-arithmetic toolkit for combined matrices `C(A) = A ∘ (A^{-1})^T`
//! and sign-regular matrices.
//!
//! All values are exact rationals. Minor enumeration is capped by
//! [`classify::ClassifyOptions::max_order`]; batch work runs on rayon when
//! the `parallel` feature is enabled.

pub mod classify;
pub mod combined;
pub mod exact;
pub mod gen;
pub mod matrix_file;
pub mod par;
pub mod patterns;
pub mod render;
pub mod theorems;

pub use classify::{classify, is_assr, sr_signature, Classification, ClassifyError, ClassifyOptions, Signature};
pub use combined::{combined, combined_via_inverse, CombinedResult};
pub use exact::{MatrixError, RMatrix, Rational};
pub use par::Execution;
pub use theorems::{run_all_checks, CheckConfig, CheckId, CheckReport, Status};

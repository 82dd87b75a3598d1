//! Independent brute-force checks: explicit modules with their invariant forms, a
//! character oracle for equal-rank forms, and exact inertia utilities.

pub mod equal_rank;
pub mod inertia;
pub mod module;
pub mod suite;

pub use equal_rank::{grading_cocharacter, oracle_sig_equal_rank};
pub use inertia::{inertia, kernel_signature, Inertia};
pub use module::{
    construct_irrep, invariant_form_nullity, invariant_symmetric_form, oracle_sig_split, ExplicitModule, GramForm,
    DEFAULT_MODULE_CAP,
};
pub use suite::{dominant_weights_up_to, run_suite, Case, SuiteKind, SuiteReport};

//! Signatures of invariant Hermitian forms on finite-dimensional irreducible
//! representations of real reductive groups, computed exactly over the rationals
//! from restricted roots on the maximally compact Cartan, with brute-force oracles.

pub mod error;
pub mod exec;
pub mod linalg;
pub mod oracle;
pub mod realform;
pub mod restricted;
pub mod rootdata;
pub mod signature;
pub mod weylres;

pub use error::{Error, Result};
pub use exec::Exec;
pub use realform::{builtin_group, GroupLabel, HighestWeightSpec, RealForm};
pub use restricted::{restrict, RestrictedDatum};
pub use rootdata::{PositiveSystem, RootDatum, WeylElement};
pub use signature::{compute_signature, Invariance, SignatureEngine, SignatureResult};

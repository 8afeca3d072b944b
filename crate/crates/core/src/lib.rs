//! Bruhat decomposition, Weyl groups and unipotent classes of the classical
//! groups, with exact arithmetic over `Q` and prime fields.
//!
//! The modules follow the mathematics: [`weyl`] (signed permutations, length,
//! conjugacy classes), [`bruhat`] (cells and their parametrization),
//! [`hecke`] (the Iwahori-Hecke algebra), [`phi`] (the map from Weyl group
//! classes to unipotent classes) and [`lab`] (brute-force checks over small
//! finite fields).

pub mod bruhat;
pub mod error;
pub mod hecke;
pub mod lab;
pub mod linalg;
pub mod partition;
pub mod phi;
pub mod poly;
pub mod weyl;

pub use bruhat::{BruhatFactorization, ExactFactorization, Flag};
pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use lab::{GroupKind, LabConfig, VerificationReport};
pub use linalg::{ExactMatrix, FieldDescriptor, Matrix, PrimeField, RationalField};
pub use partition::Partition;
pub use phi::{PhiRow, UnipotentClassLabel};
pub use poly::Poly;
pub use weyl::{ClassLabel, ConjugacyClass, Family, GroupSpec, WeylElement};

//! Exact computation of the spectral data attached to constant-coefficient
//! Clifford-type operators written in polar form: spectra of the induced
//! spherical operator, equivariant multiplicities under a finite group,
//! eta invariants and kernel dimensions, canonical isotropy-bundle
//! integers, stratum correction terms and equivariant Euler characteristics.
//!
//! The crate is organised around a pair of routes for every quantity:
//! a closed form (multiplicity formulas, Molien-style generating functions,
//! Hurwitz-zeta continuation) and an independent brute-force oracle
//! (exact matrices on polynomial spaces over cyclotomic rationals).
//! `verify`-style entry points cross-check the two.

pub mod action;
pub mod assembly;
pub mod chartable;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod linalg;
pub mod num;
pub mod operator;
pub mod polyspace;
pub mod rep;
pub mod report;
pub mod eta;
pub mod spectral;

pub use action::GroupAction;
pub use chartable::CharacterTable;
pub use cyclotomic::Cyc;
pub use error::Error;
pub use group::FiniteGroup;
pub use linalg::CycMat;
pub use num::Rat;
pub use operator::{CliffordSymbol, SphericalOperatorSpec};
pub use polyspace::{HarmonicSpace, PolySpace};
pub use spectral::SpectrumTable;

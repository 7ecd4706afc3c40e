//! Exact computer algebra for lexicographic Gröbner bases and triangular sets.
//!
//! The crate computes reduced plex Gröbner bases, extracts the minimal
//! triangular set they contain (the W-characteristic set), classifies it,
//! derives Ritt characteristic sets where that is possible, analyses the
//! irregularity structure otherwise, and splits polynomial systems into
//! branches whose W-characteristic sets are normal. Every derived identity is
//! returned with a certificate that re-expands exactly.

pub mod decompose;
pub mod error;
pub mod groebner;
pub mod parse;
pub mod polyring;
pub mod random;
pub mod triset;
pub mod wchar;

pub use error::{Error, Result};
pub use groebner::{ReducedGroebnerBasis, ReductionTrace};
pub use polyring::{Field, Fp, Monomial, PolyRing, Polynomial, PrimeModulus, Rational, VariableOrder};
pub use triset::{AscendingSet, TriangularSet};
pub use wchar::WCharacteristicSet;

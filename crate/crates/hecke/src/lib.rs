//! Exact computational workbench for generalized affine Hecke algebras with
//! unequal parameters over Z[q^{1/2}, q^{-1/2}].
//!
//! The crate is organized bottom-up:
//! - [`coeff`]: the coefficient ring and its specializations;
//! - [`cartan`]: root systems, Weyl actions, affine diagrams;
//! - [`weyl`]: the extended affine Weyl group, lengths, reduced words, the
//!   length-zero subgroup, and the dominant monoid;
//! - [`algebra`]: the Hecke algebra in its standard basis, star elements,
//!   Bernstein elements and central elements;
//! - [`modules`]: finite-rank right modules, characters, reflection modules,
//!   reduction mod p, supersingularity and discreteness tests;
//! - [`gln`]: the standalone valuation calculator (scaling exponents, Newton
//!   polygons, Frobenius valuation bookkeeping, weak admissibility);
//! - [`tables`]: the embedded classification tables with their evaluation
//!   engine;
//! - [`checks`]: named identity checks shared by the test suite and the CLI;
//! - [`datum`]: textual datum parsing shared by the CLI and tests.

pub mod algebra;
pub mod cartan;
pub mod checks;
pub mod coeff;
pub mod datum;
pub mod gln;
pub mod modules;
pub mod tables;
pub mod weyl;

pub use cartan::{CartanType, Family, RootSystem};
pub use coeff::{HalfLaurent, SpecTarget, SpecValue, Verdict};
pub use weyl::{ExtWeylElt, LatticeChoice, WeylData};

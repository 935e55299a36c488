//! Exact-arithmetic toolkit for cohomological vanishing bookkeeping on flag
//! varieties of types A and D, with a nilpotent-orbit partition calculus and
//! a Richardson-orbit oracle.
//!
//! The crate is organized around five layers:
//!
//! - [`rootsys`]: root systems of types `A_n` / `D_n`, weights, pairings,
//!   the dot action and the root partial order;
//! - [`charlib`]: Bott's theorem for line bundles, Euler characteristics of
//!   weight-filtered modules, the Weyl dimension formula;
//! - [`bmod`]: B-stable weight multisets (nilradicals, intersections,
//!   thresholds) and their symmetric/wedge powers;
//! - [`prover`]: certificate-producing replays of rank-one vanishing lemmas,
//!   shift-identity verification, and the main short-exact-sequence check;
//! - [`orbits`]: partition calculus for nilpotent orbits of `so(2n)` with a
//!   generic-element Jordan-type oracle for Richardson orbits.
//!
//! Everything is exact: coordinates are machine integers with small ranges,
//! multiplicities and character coefficients are big integers.

pub mod bmod;
pub mod charlib;
pub mod error;
pub mod orbits;
pub mod prover;
pub mod rootsys;

pub use bmod::{
    nilradical_weights, split_intersection, sym_power_weights, threshold_submodule,
    wedge_power_weights, WeightMultiset, DEFAULT_SIZE_CAP,
};
pub use charlib::{bott_line_bundle, euler_characteristic, BottResult, VirtualCharacter};
pub use error::{Error, Result};
pub use rootsys::{DotConjugate, Family, ParabolicMarker, RootSystem, Weight};

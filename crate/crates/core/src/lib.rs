//! Exact enumeration and verification kernels for 321-avoiding permutations.
//!
//! The crate computes the major index polynomial
//! `M_n(q,t) = Σ q^maj t^des` and the inversion polynomial
//! `I_n(q,t) = Σ q^inv t^lrm` over `Av_n(321)` by direct enumeration, and
//! provides the exact series, continued-fraction and closed-form machinery
//! needed to check the identities these polynomials satisfy.
//!
//! Everything here is `no_std` (with `alloc`). File formats, the CLI and
//! report rendering live in the `pavstat` crate.
//!
//! Module map:
//! - [`perm`]: permutations, pattern containment, statistics, rotation, inflation
//! - [`avoiders`]: lexicographic enumeration of `Av_n(321)` with incremental statistics
//! - [`poly`]: sparse bivariate / univariate polynomials over big integers
//! - [`statpoly`]: brute-force `M_n`, `I_n`, `A_{n,k}` and signed specialisations
//! - [`series`]: truncated power series in `z`
//! - [`cfrac`]: continued fractions and their even/odd contractions
//! - [`closed_forms`]: explicit formulas and generating-function identities
//! - [`bijections`]: rotation orbits, fixed points, parity, symmetric Dyck paths

#![no_std]

extern crate alloc;

pub mod avoiders;
pub mod bijections;
pub mod cfrac;
pub mod check;
pub mod closed_forms;
mod error;
pub mod perm;
pub mod poly;
pub mod ratpoly;
pub mod series;
pub mod statpoly;

pub use avoiders::{Avoiders321, StepStats, Walker};
pub use check::{Mismatch, Verification};
pub use error::Error;
pub use perm::Permutation;
pub use poly::{BivarPoly, UnivarPoly, Var};
pub use ratpoly::RatPoly;
pub use series::{Series, ZSeries};

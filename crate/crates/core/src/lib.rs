//! Landau-type univalence and schlicht radii for bounded poly-analytic and
//! reduced poly-analytic functions, with numerical certification.
//!
//! A poly-analytic function of order `m` is `F(z) = sum conj(z)^k f_k(z)`,
//! a reduced one is `F(z) = sum |z|^{2k} f_k(z)`, with analytic `f_k`.
//! [`radii`] solves the radius equations, [`extremal`] builds the functions
//! showing they are sharp and [`verify`] falsifies claims numerically.

// NaN must fail range checks, so negated comparisons are intended
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod extremal;
pub mod polyfn;
pub mod radii;
pub mod series;
pub mod verify;

pub use error::{LandauError, Result};
pub use extremal::{
    build_extremal, g2_profile, lemma1_extremal_series, sharpness_witness, ExtremalSpec, SharpnessWitness,
};
pub use polyfn::{ClosedForm, Component, PolyFn, PolyKind, WirtingerData};
pub use radii::{landau_radii, profile_value, solve_monotone_root, LandauParams, RadiusResult, RootOutcome, Variant};
pub use series::{cauchy_product, normalize_bounded, series_divide, AnalyticSeries};
pub use verify::{CheckEntry, VerificationReport, Witness};

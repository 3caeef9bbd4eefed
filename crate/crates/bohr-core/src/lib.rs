//! Sharp Bohr radii for K-quasiconformal harmonic mappings.
//!
//! A sense-preserving harmonic mapping on the unit disk decomposes as
//! `f = h + conj(g)` with `h`, `g` analytic; it is K-quasiconformal when its
//! dilatation `w = g'/h'` satisfies `|w| <= k = (K-1)/(K+1) < 1`. For such
//! mappings (with `||h|| <= 1`) the Bohr phenomenon persists: majorant-type
//! sums of the coefficients stay below 1 on a disk whose sharp radius is the
//! root of an explicit transcendental equation in `r`, parameterized by
//! integer vanishing orders `p`, `m`, `q` of the Schwarz-class data and by K.
//!
//! This crate computes those radii and certifies their sharpness:
//!
//! - [`powerseries`]: truncated power series with tail bounds, and the
//!   bounded analytic functions (Möbius self-maps, finite Blaschke products,
//!   monomials) whose coefficients feed every other module.
//! - [`radius`]: the defining functions of the radius equations, a bracketing
//!   solver, the closed-form caps that bound each radius, and the `m -> inf`
//!   limiting radii.
//! - [`functional`]: Bohr-type functionals evaluated on concrete mappings,
//!   the one-parameter extremal family that attains each bound in the
//!   `a -> 1` limit, and sharpness sweeps over that family.
//! - [`lemmas`]: Monte-Carlo oracles for the coefficient inequalities the
//!   proofs rest on (Pick-type point bounds, coefficient and derivative
//!   bounds, dilatation comparisons, a refined tail inequality).
//! - [`suites`]: prepackaged verification suites combining the above, shared
//!   by the command-line tool and the acceptance tests.
//! - [`report`]: serializable check records for machine-readable reports.

pub mod functional;
pub mod lemmas;
mod numerics;
pub mod powerseries;
pub mod radius;
pub mod report;
pub mod suites;

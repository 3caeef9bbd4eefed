//! Radius equations: defining functions, bracketing solver, caps, limits.
//!
//! Each Bohr-type bound in this toolkit holds up to a radius that is the
//! unique root in `(0, 1)` of a strictly structured defining function
//! `F(r)`: every one below satisfies `F(0) = -1` and crosses zero at most
//! once before 1. Four inequality variants and three closed-form caps share
//! the same solver surface:
//!
//! - [`Variant::Majorant`]: pure coefficient-majorant bound; defining
//!   function `2 r^p/(1-r^p) + 2k (r^m/(1-r^m) + ln(1-r^m)) - 1`, cap
//!   `3^(-1/m)`.
//! - [`Variant::ValueDeriv`]: bound on `|h(w_m)| + |h'(w_m)||w_q| + tails`;
//!   defining function
//!   `2 r^q/(1+r^m) + 2(k+r^p)(1+r^m) r^p/(1-r^p) - (1-r^m)`, capped by the
//!   root of `r^(2m) + 2 r^q - 1`.
//! - [`Variant::ValueSqDeriv`]: same with `|h(w_m)|^2`; defining function
//!   `-(1-r^(2m)-r^q)/(1+r^m)^2 + (r^p+k) r^p/(1-r^p)`, capped by the root
//!   of `r^(2m) + r^q - 1`.
//! - [`Variant::Refined`]: refined bound with quadratic correction terms;
//!   the radius solves `(2k+3) r^p = 1` in closed form.
//! - [`Variant::CapRmq`], [`Variant::CapR2mq`], [`Variant::CapThirdRoot`]:
//!   the caps themselves, exposed as first-class problems.
//!
//! Here `k = (K-1)/(K+1)` is the dilatation bound of a K-quasiconformal
//! mapping; `K = inf` means `k = 1`, the boundary regime where the harmonic
//! extension degenerates but every formula stays finite.

use crate::numerics::{h1, powu};
use std::fmt;

/// Residual tolerance at which bisection stops.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Step of the initial sign-change scan.
pub const GRID_STEP: f64 = 1e-3;
/// Open-interval ceiling: the solver never evaluates at or beyond 1.
const DOMAIN_CEILING: f64 = 1.0 - 1e-9;
/// Bisection also stops once the bracket is this narrow.
const BRACKET_WIDTH_FLOOR: f64 = 1e-14;

/// The seven radius problems this module can solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Coefficient-majorant bound (vanishing dilatation factor).
    Majorant,
    /// Value-plus-derivative bound.
    ValueDeriv,
    /// Squared-value-plus-derivative bound.
    ValueSqDeriv,
    /// Refined bound with quadratic correction terms.
    Refined,
    /// Cap for [`Variant::ValueDeriv`]: root of `r^(2m) + 2 r^q - 1`.
    CapRmq,
    /// Cap for [`Variant::ValueSqDeriv`]: root of `r^(2m) + r^q - 1`.
    CapR2mq,
    /// Cap for [`Variant::Majorant`]: root of `3 r^m - 1`, i.e. `3^(-1/m)`.
    CapThirdRoot,
}

impl Variant {
    /// Kebab-case label used in reports and on the command line.
    pub fn label(self) -> &'static str {
        match self {
            Self::Majorant => "majorant",
            Self::ValueDeriv => "value-deriv",
            Self::ValueSqDeriv => "value-sq-deriv",
            Self::Refined => "refined",
            Self::CapRmq => "cap-rmq",
            Self::CapR2mq => "cap-r2mq",
            Self::CapThirdRoot => "cap-thirdroot",
        }
    }

    /// All variants, in a stable order.
    pub fn all() -> [Variant; 7] {
        [
            Self::Majorant,
            Self::ValueDeriv,
            Self::ValueSqDeriv,
            Self::Refined,
            Self::CapRmq,
            Self::CapR2mq,
            Self::CapThirdRoot,
        ]
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Errors from parameter validation and solving.
#[derive(Debug, Clone, PartialEq)]
pub enum RadiusError {
    /// Vanishing orders must be positive integers.
    InvalidExponent { name: &'static str, value: u32 },
    /// The quasiconformality constant must satisfy `K >= 1` (or be infinite).
    InvalidDistortion { value: f64 },
    /// Defining functions are only defined on `[0, 1)`.
    PointOutsideDomain { r: f64 },
    /// The scan reached `1 - 1e-9` without a sign change.
    NoRootInUnitInterval { variant: Variant },
    /// `cap_radius` was asked for a variant that has no cap.
    NoCapForVariant { variant: Variant },
    /// Limiting radii are defined for `p = q = 1` only.
    LimitRequiresUnitExponents { p: u32, q: u32 },
    /// Limiting radii exist for the three capped variants only.
    LimitUndefinedForVariant { variant: Variant },
    /// The scan step must lie in `(0, 0.5]`.
    InvalidScanStep { step: f64 },
}

impl fmt::Display for RadiusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidExponent { name, value } => {
                write!(f, "exponent {name} = {value} must be at least 1")
            }
            Self::InvalidDistortion { value } => {
                write!(f, "quasiconformality constant K = {value} must be >= 1")
            }
            Self::PointOutsideDomain { r } => write!(f, "argument r = {r} outside [0, 1)"),
            Self::NoRootInUnitInterval { variant } => {
                write!(f, "no root in (0, 1) for variant {variant}")
            }
            Self::NoCapForVariant { variant } => {
                write!(f, "variant {variant} has no cap radius")
            }
            Self::LimitRequiresUnitExponents { p, q } => {
                write!(f, "limiting radius needs p = q = 1, got p = {p}, q = {q}")
            }
            Self::LimitUndefinedForVariant { variant } => {
                write!(f, "no limiting radius for variant {variant}")
            }
            Self::InvalidScanStep { step } => {
                write!(f, "scan step {step} outside (0, 0.5]")
            }
        }
    }
}

impl std::error::Error for RadiusError {}

/// Validated problem parameters: vanishing orders `p`, `m`, `q` and the
/// quasiconformality constant K.
///
/// Only K is stored; the dilatation bound `k = (K-1)/(K+1)` is recomputed on
/// demand so the two can never drift apart. `K = f64::INFINITY` is accepted
/// and maps to `k = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    p: u32,
    m: u32,
    q: u32,
    distortion: f64,
}

impl Params {
    pub fn new(p: u32, m: u32, q: u32, distortion: f64) -> Result<Self, RadiusError> {
        for (name, value) in [("p", p), ("m", m), ("q", q)] {
            if value == 0 {
                return Err(RadiusError::InvalidExponent { name, value });
            }
        }
        if distortion.is_nan() || distortion < 1.0 {
            return Err(RadiusError::InvalidDistortion { value: distortion });
        }
        Ok(Self {
            p,
            m,
            q,
            distortion,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The quasiconformality constant K (possibly infinite).
    pub fn distortion(&self) -> f64 {
        self.distortion
    }

    /// Dilatation bound `k = (K-1)/(K+1) in [0, 1]`, with `K = inf -> k = 1`.
    pub fn k(&self) -> f64 {
        if self.distortion.is_infinite() {
            1.0
        } else {
            (self.distortion - 1.0) / (self.distortion + 1.0)
        }
    }

    /// Whether this is the degenerate `K = inf` (`k = 1`) boundary regime.
    pub fn boundary_regime(&self) -> bool {
        self.distortion.is_infinite()
    }
}

/// A variant paired with its parameters: the unit of work for the solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusProblem {
    pub variant: Variant,
    pub params: Params,
}

impl RadiusProblem {
    pub fn new(variant: Variant, params: Params) -> Self {
        Self { variant, params }
    }

    /// Evaluates the variant's defining function at `r in [0, 1)`.
    ///
    /// Every defining function equals -1 at `r = 0` and is positive just
    /// left of 1, so its first sign change is the radius.
    pub fn defining_function(&self, r: f64) -> Result<f64, RadiusError> {
        if !(0.0..1.0).contains(&r) || r.is_nan() {
            return Err(RadiusError::PointOutsideDomain { r });
        }
        let p = self.params.p;
        let m = self.params.m;
        let q = self.params.q;
        let k = self.params.k();
        let rp = powu(r, p);
        let rm = powu(r, m);
        let rq = powu(r, q);
        Ok(match self.variant {
            Variant::Majorant => 2.0 * rp / (1.0 - rp) + 2.0 * k * h1(rm) - 1.0,
            Variant::ValueDeriv => {
                2.0 * rq / (1.0 + rm) + 2.0 * (k + rp) * (1.0 + rm) * rp / (1.0 - rp)
                    - (1.0 - rm)
            }
            Variant::ValueSqDeriv => {
                let one_plus = 1.0 + rm;
                -(1.0 - rm * rm - rq) / (one_plus * one_plus) + (rp + k) * rp / (1.0 - rp)
            }
            Variant::Refined => (2.0 * k + 3.0) * rp - 1.0,
            Variant::CapRmq => rm * rm + 2.0 * rq - 1.0,
            Variant::CapR2mq => rm * rm + rq - 1.0,
            Variant::CapThirdRoot => 3.0 * rm - 1.0,
        })
    }

    /// Solves the defining function for its first root in `(0, 1)`.
    ///
    /// A coarse scan (step [`GRID_STEP`]) brackets the first sign change,
    /// then bisection refines it until the residual drops below `tol` or the
    /// bracket narrows to [`BRACKET_WIDTH_FLOOR`]. The refined variant has a
    /// closed-form root and skips the search; its residual is still reported
    /// from an honest function evaluation.
    pub fn solve_radius(&self, tol: f64) -> Result<RootResult, RadiusError> {
        self.solve_radius_with_step(tol, GRID_STEP)
    }

    /// [`solve_radius`](Self::solve_radius) with an explicit scan step.
    ///
    /// A coarser step risks skipping a narrow first sign change; the default
    /// [`GRID_STEP`] is safe for every variant here because their defining
    /// functions cross zero only once.
    pub fn solve_radius_with_step(&self, tol: f64, step: f64) -> Result<RootResult, RadiusError> {
        if !(step > 0.0 && step <= 0.5) {
            return Err(RadiusError::InvalidScanStep { step });
        }
        if self.variant == Variant::Refined {
            let value = (1.0 / (2.0 * self.params.k() + 3.0)).powf(1.0 / self.params.p as f64);
            let residual = self.defining_function(value)?;
            let delta = 1e-9;
            return Ok(RootResult {
                value,
                bracket: ((value - delta).max(0.0), (value + delta).min(DOMAIN_CEILING)),
                residual,
                iterations: 0,
            });
        }

        // Scan for the first non-negative value; f(0) = -1 anchors the left
        // end of the bracket.
        let mut lo = 0.0;
        let mut hi = None;
        let mut i = 1u64;
        loop {
            let r = (i as f64 * step).min(DOMAIN_CEILING);
            if self.defining_function(r)? >= 0.0 {
                hi = Some(r);
                break;
            }
            lo = r;
            if r >= DOMAIN_CEILING {
                break;
            }
            i += 1;
        }
        let mut hi = hi.ok_or(RadiusError::NoRootInUnitInterval {
            variant: self.variant,
        })?;

        let mut iterations = 0u32;
        let mut mid = 0.5 * (lo + hi);
        let mut residual = self.defining_function(mid)?;
        while hi - lo > BRACKET_WIDTH_FLOOR {
            iterations += 1;
            if residual.abs() <= tol {
                break;
            }
            if residual < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            mid = 0.5 * (lo + hi);
            residual = self.defining_function(mid)?;
        }
        Ok(RootResult {
            value: mid,
            bracket: (lo, hi),
            residual,
            iterations,
        })
    }

    /// The closed-form or solvable cap that bounds this variant's radius.
    ///
    /// Only the three capped inequality variants have one; the caps
    /// themselves (and the refined variant) report an error.
    pub fn cap_radius(&self) -> Result<f64, RadiusError> {
        match self.variant {
            Variant::Majorant => Ok((1.0f64 / 3.0).powf(1.0 / self.params.m as f64)),
            Variant::ValueDeriv => RadiusProblem::new(Variant::CapRmq, self.params)
                .solve_radius(DEFAULT_TOL)
                .map(|root| root.value),
            Variant::ValueSqDeriv => RadiusProblem::new(Variant::CapR2mq, self.params)
                .solve_radius(DEFAULT_TOL)
                .map(|root| root.value),
            _ => Err(RadiusError::NoCapForVariant {
                variant: self.variant,
            }),
        }
    }
}

/// Solver output: the root plus the evidence for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    /// The computed radius, inside `(0, 1)`.
    pub value: f64,
    /// Final enclosing bracket; the defining function changes sign across it.
    pub bracket: (f64, f64),
    /// Defining-function value at `value`.
    pub residual: f64,
    /// Bisection steps taken after the initial scan.
    pub iterations: u32,
}

/// The `m -> inf` limit of the radius for `p = q = 1`.
///
/// As `m` grows the dilatation's Schwarz factor dies off and each equation
/// collapses to a linear one:
///
/// - majorant: radius -> 1/3 independent of K,
/// - value-deriv: `r (3 + 2k) = 1`, i.e. `(K+1)/(5K+1)`,
/// - value-sq-deriv: `r (2 + k) = 1`, i.e. `(K+1)/(3K+1)`.
///
/// Computed through `k` so that `K = inf` yields the exact 1/5 and 1/3.
pub fn limiting_radius(variant: Variant, params: &Params) -> Result<f64, RadiusError> {
    if params.p() != 1 || params.q() != 1 {
        return Err(RadiusError::LimitRequiresUnitExponents {
            p: params.p(),
            q: params.q(),
        });
    }
    let k = params.k();
    match variant {
        Variant::Majorant => Ok(1.0 / 3.0),
        Variant::ValueDeriv => Ok(1.0 / (3.0 + 2.0 * k)),
        Variant::ValueSqDeriv => Ok(1.0 / (2.0 + k)),
        _ => Err(RadiusError::LimitUndefinedForVariant { variant }),
    }
}

/// The sharp weight of the quadratic derivative term in the refined bound:
/// `(1 - r*^(2m))^2 / (8 r*^(2m))` with `r* = (2k+3)^(-1/p)` the refined
/// radius. For `p = m` this collapses to the rational expression
/// `8 K^2 (3K+1)^2 / ((K+1)^2 (5K+1)^2)`.
pub fn refined_constant(params: &Params) -> f64 {
    refined_constant_from_k(params.p(), params.m(), params.k())
}

/// Same weight computed straight from the dilatation bound `k`; shared with
/// the functional evaluator, which carries `k` rather than K.
pub(crate) fn refined_constant_from_k(p: u32, m: u32, k: f64) -> f64 {
    let rstar = (1.0 / (2.0 * k + 3.0)).powf(1.0 / p as f64);
    let x = powu(rstar, 2 * m);
    (1.0 - x) * (1.0 - x) / (8.0 * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(variant: Variant, p: u32, m: u32, q: u32, distortion: f64) -> RadiusProblem {
        RadiusProblem::new(variant, Params::new(p, m, q, distortion).unwrap())
    }

    #[test]
    fn every_defining_function_starts_at_minus_one() {
        for variant in Variant::all() {
            let f0 = problem(variant, 2, 3, 2, 2.0).defining_function(0.0).unwrap();
            assert_eq!(f0, -1.0, "{variant}");
        }
    }

    #[test]
    fn defining_function_rejects_points_outside_the_disk() {
        let pr = problem(Variant::Majorant, 1, 1, 1, 1.0);
        assert!(matches!(
            pr.defining_function(1.0),
            Err(RadiusError::PointOutsideDomain { .. })
        ));
        assert!(matches!(
            pr.defining_function(-0.5),
            Err(RadiusError::PointOutsideDomain { .. })
        ));
    }

    // Roots frozen from an independent high-precision computation.
    #[test]
    fn majorant_radius_matches_frozen_reference_roots() {
        let boundary = problem(Variant::Majorant, 1, 1, 1, f64::INFINITY)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((boundary.value - 0.2998235762945672).abs() < 1e-9);

        let k3 = problem(Variant::Majorant, 1, 1, 1, 3.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((k3.value - 0.3147514802927635).abs() < 1e-9);

        let wide = problem(Variant::Majorant, 2, 3, 1, 3.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((wide.value - 0.5728211887707932).abs() < 1e-9);
    }

    #[test]
    fn value_radii_match_frozen_reference_roots() {
        let vd = problem(Variant::ValueDeriv, 1, 1, 1, 1.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((vd.value - 0.2807764064044151).abs() < 1e-9);

        let vsq = problem(Variant::ValueSqDeriv, 1, 1, 1, 1.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((vsq.value - 0.3857946114899264).abs() < 1e-9);
    }

    #[test]
    fn cap_roots_match_their_closed_forms() {
        let rmq = problem(Variant::CapRmq, 1, 1, 1, 1.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((rmq.value - (2.0f64.sqrt() - 1.0)).abs() < 1e-10);

        let r2mq = problem(Variant::CapR2mq, 1, 1, 1, 1.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((r2mq.value - (5.0f64.sqrt() - 1.0) / 2.0).abs() < 1e-10);

        for m in [1u32, 2, 3, 5, 7] {
            let third = problem(Variant::CapThirdRoot, 1, m, 1, 1.0)
                .solve_radius(DEFAULT_TOL)
                .unwrap();
            assert!(
                (third.value - 3.0f64.powf(-1.0 / m as f64)).abs() < 1e-10,
                "m={m}"
            );
        }

        let deep = problem(Variant::CapRmq, 1, 3, 3, 1.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((deep.value - 0.7454321246472562).abs() < 1e-9);
        let deep2 = problem(Variant::CapR2mq, 1, 3, 3, 1.0)
            .solve_radius(DEFAULT_TOL)
            .unwrap();
        assert!((deep2.value - 0.8517996420792429).abs() < 1e-9);
    }

    #[test]
    fn refined_radius_is_the_closed_form_with_tiny_residual() {
        for (p, distortion, want) in [
            (1u32, 1.0, 1.0 / 3.0),
            (2, 1.0, (1.0f64 / 3.0).sqrt()),
            (1, f64::INFINITY, 0.2),
        ] {
            let root = problem(Variant::Refined, p, 1, 1, distortion)
                .solve_radius(DEFAULT_TOL)
                .unwrap();
            assert!((root.value - want).abs() < 1e-14, "p={p} K={distortion}");
            assert!(root.residual.abs() < 1e-12);
            assert_eq!(root.iterations, 0);
        }
    }

    #[test]
    fn solver_reports_consistent_evidence() {
        for variant in Variant::all() {
            let pr = problem(variant, 2, 2, 3, 4.0);
            let root = pr.solve_radius(DEFAULT_TOL).unwrap();
            assert!(root.value > 0.0 && root.value < 1.0, "{variant}");
            assert!(root.residual.abs() <= 1e-10, "{variant}: {}", root.residual);
            let (lo, hi) = root.bracket;
            assert!(lo <= root.value && root.value <= hi, "{variant}");
            let flo = pr.defining_function(lo).unwrap();
            let fhi = pr.defining_function(hi).unwrap();
            assert!(flo <= 0.0 && fhi >= 0.0, "{variant}: sign change lost");
        }
    }

    #[test]
    fn radius_stays_below_its_cap() {
        for variant in [Variant::ValueDeriv, Variant::ValueSqDeriv] {
            for distortion in [1.0, 2.0, 5.0, f64::INFINITY] {
                let pr = problem(variant, 2, 3, 2, distortion);
                let root = pr.solve_radius(DEFAULT_TOL).unwrap();
                let cap = pr.cap_radius().unwrap();
                assert!(
                    root.value <= cap + 1e-12,
                    "{variant} K={distortion}: {} > {cap}",
                    root.value
                );
            }
        }
        // Majorant cap applies when m >= p.
        let pr = problem(Variant::Majorant, 2, 3, 1, 5.0);
        let root = pr.solve_radius(DEFAULT_TOL).unwrap();
        assert!(root.value <= pr.cap_radius().unwrap() + 1e-12);
    }

    #[test]
    fn radius_is_non_increasing_in_the_distortion() {
        for variant in [Variant::Majorant, Variant::ValueDeriv, Variant::ValueSqDeriv] {
            let mut prev = f64::INFINITY;
            for distortion in [1.0, 2.0, 5.0, 100.0, f64::INFINITY] {
                let root = problem(variant, 2, 3, 2, distortion)
                    .solve_radius(DEFAULT_TOL)
                    .unwrap();
                assert!(
                    root.value <= prev + 1e-12,
                    "{variant}: radius grew at K={distortion}"
                );
                prev = root.value;
            }
        }
    }

    #[test]
    fn limiting_radii_are_the_collapsed_linear_roots() {
        let params = |distortion| Params::new(1, 200, 1, distortion).unwrap();
        assert_eq!(
            limiting_radius(Variant::Majorant, &params(7.0)).unwrap(),
            1.0 / 3.0
        );
        let p2 = params(2.0);
        assert!((limiting_radius(Variant::ValueDeriv, &p2).unwrap() - 3.0 / 11.0).abs() < 1e-15);
        assert!((limiting_radius(Variant::ValueSqDeriv, &p2).unwrap() - 3.0 / 7.0).abs() < 1e-15);
        let pinf = params(f64::INFINITY);
        assert!((limiting_radius(Variant::ValueDeriv, &pinf).unwrap() - 0.2).abs() < 1e-15);
        assert!(
            (limiting_radius(Variant::ValueSqDeriv, &pinf).unwrap() - 1.0 / 3.0).abs() < 1e-15
        );
    }

    #[test]
    fn solved_radius_approaches_the_limit_as_m_grows() {
        // The true gaps fall below double precision almost immediately, so
        // monotonicity is asserted only up to a bisection-noise floor.
        let noise_floor = 1e-12;
        for variant in [Variant::Majorant, Variant::ValueDeriv, Variant::ValueSqDeriv] {
            let mut prev = f64::INFINITY;
            for m in [50u32, 100, 200] {
                let params = Params::new(1, m, 1, 2.0).unwrap();
                let root = RadiusProblem::new(variant, params)
                    .solve_radius(DEFAULT_TOL)
                    .unwrap();
                let gap = (root.value - limiting_radius(variant, &params).unwrap()).abs();
                assert!(
                    gap <= prev + noise_floor,
                    "{variant} m={m}: gap {gap} above previous {prev}"
                );
                prev = gap;
            }
            assert!(prev <= 1e-6, "{variant}: final gap {prev}");
        }
    }

    #[test]
    fn limit_rejects_wrong_exponents_and_variants() {
        let params = Params::new(2, 10, 1, 1.0).unwrap();
        assert!(matches!(
            limiting_radius(Variant::Majorant, &params),
            Err(RadiusError::LimitRequiresUnitExponents { .. })
        ));
        let unit = Params::new(1, 10, 1, 1.0).unwrap();
        assert!(matches!(
            limiting_radius(Variant::Refined, &unit),
            Err(RadiusError::LimitUndefinedForVariant { .. })
        ));
    }

    #[test]
    fn cap_radius_rejects_variants_without_caps() {
        for variant in [
            Variant::Refined,
            Variant::CapRmq,
            Variant::CapR2mq,
            Variant::CapThirdRoot,
        ] {
            assert!(matches!(
                problem(variant, 1, 1, 1, 1.0).cap_radius(),
                Err(RadiusError::NoCapForVariant { .. })
            ));
        }
    }

    #[test]
    fn refined_constant_matches_the_rational_form_when_p_equals_m() {
        for distortion in [1.0, 2.0, 5.0, 100.0] {
            for p in [1u32, 2, 3] {
                let params = Params::new(p, p, 1, distortion).unwrap();
                let via_radius = refined_constant(&params);
                let k_big = distortion;
                let rational = 8.0 * k_big * k_big * (3.0 * k_big + 1.0).powi(2)
                    / ((k_big + 1.0).powi(2) * (5.0 * k_big + 1.0).powi(2));
                assert!(
                    (via_radius - rational).abs() < 1e-12,
                    "p={p} K={distortion}: {via_radius} vs {rational}"
                );
            }
        }
        // The classical conformal case: p = m = 1, K = 1 gives 8/9.
        let base = Params::new(1, 1, 1, 1.0).unwrap();
        assert!((refined_constant(&base) - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn params_validation_rejects_bad_input() {
        assert!(matches!(
            Params::new(0, 1, 1, 1.0),
            Err(RadiusError::InvalidExponent { name: "p", .. })
        ));
        assert!(matches!(
            Params::new(1, 0, 1, 1.0),
            Err(RadiusError::InvalidExponent { name: "m", .. })
        ));
        assert!(matches!(
            Params::new(1, 1, 1, 0.5),
            Err(RadiusError::InvalidDistortion { .. })
        ));
        assert!(matches!(
            Params::new(1, 1, 1, f64::NAN),
            Err(RadiusError::InvalidDistortion { .. })
        ));
        assert_eq!(Params::new(1, 1, 1, f64::INFINITY).unwrap().k(), 1.0);
        assert_eq!(Params::new(1, 1, 1, 1.0).unwrap().k(), 0.0);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // The majorant defining function is increasing on [0, 1) for all
            // parameters, which is what makes its first root unique.
            #[test]
            fn majorant_defining_function_is_increasing(
                p in 1u32..6, m in 1u32..6, kscale in 0.0..=1.0f64,
                a in 0.0..0.98f64, b in 0.0..0.98f64,
            ) {
                let distortion = if kscale >= 1.0 {
                    f64::INFINITY
                } else {
                    (1.0 + kscale) / (1.0 - kscale)
                };
                let pr = RadiusProblem::new(
                    Variant::Majorant,
                    Params::new(p, m, 1, distortion).unwrap(),
                );
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                let flo = pr.defining_function(lo).unwrap();
                let fhi = pr.defining_function(hi).unwrap();
                prop_assert!(flo <= fhi + 1e-12);
            }

            // Solving twice is deterministic, and the residual honors tol.
            #[test]
            fn solver_is_deterministic(
                p in 1u32..5, m in 1u32..5, q in 1u32..5, kscale in 0.0..0.99f64,
            ) {
                let distortion = (1.0 + kscale) / (1.0 - kscale);
                let pr = RadiusProblem::new(
                    Variant::ValueDeriv,
                    Params::new(p, m, q, distortion).unwrap(),
                );
                let first = pr.solve_radius(DEFAULT_TOL).unwrap();
                let second = pr.solve_radius(DEFAULT_TOL).unwrap();
                prop_assert_eq!(first.value.to_bits(), second.value.to_bits());
                prop_assert!(first.residual.abs() < 1e-9);
            }
        }
    }
}

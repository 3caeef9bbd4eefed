//! Bohr-type functionals, the extremal family, and sharpness sweeps.
//!
//! Each radius variant bounds a functional of a harmonic mapping
//! `f = h + conj(g)` evaluated along Schwarz-class data: the analytic part's
//! coefficients are summed against `|w_p| <= r^p`, the dilatation enters
//! through `|w_m| <= r^m`, and derivative terms are scaled by `|w_q| <= r^q`.
//! [`eval_functional`] computes the worst case of that functional over the
//! Schwarz data (every `|w_j(z)|` replaced by its sup `r^j`) for a concrete
//! mapping.
//!
//! Sharpness is witnessed by a one-parameter family built on the Möbius map
//! `h_a(z) = (a+z)/(1+az)`: for each variant there is a co-analytic partner
//! (`g' = k z h_a'` in the vanishing regime, `g = lambda k (h_a - a)`
//! otherwise) for which the functional has the closed form
//! `1 + (1-a) * slope(a, r)` (or `1 + (1-a^2) * slope` for the squared
//! variant). As `a -> 1` the slope converges to the variant's defining
//! function, so the functional crosses 1 exactly at the radius.
//! [`extremal_value`] evaluates the closed form, [`extremal_mapping`] builds
//! the same mapping as coefficients (so the two routes can be checked
//! against each other), and [`sharpness_sweep`] maximizes over a grid in
//! `a`.

use crate::numerics::{phi, powu};
use crate::powerseries::{BoundedFunction, SeriesError, TruncatedSeries};
use crate::radius::Variant;
use num_complex::Complex64;
use std::fmt;

/// How the mapping's dilatation vanishes at the origin.
///
/// The majorant variant assumes `g'/h' = k z w(z)` (dilatation vanishing at
/// 0), which forces `b_0 = b_1 = 0`; the other variants assume
/// `g'/h' = k w(z)` and only normalize `b_0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DilatationMode {
    Standard,
    Vanishing,
}

/// Errors from functional evaluation and extremal-family construction.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionalError {
    /// Underlying series manipulation failed.
    Series(SeriesError),
    /// Evaluation radius must satisfy `0 <= r < 1`.
    RadiusOutsideDisk { r: f64 },
    /// Family parameter must satisfy `0 <= a < 1`.
    ParameterOutsideDisk { a: f64 },
    /// Dilatation bound must satisfy `0 <= k <= 1`.
    DilatationBoundOutOfRange { k: f64 },
    /// The mapping's mode does not match the variant's hypothesis.
    ModeMismatch {
        variant: Variant,
        expected: DilatationMode,
    },
    /// Cap variants have no functional to evaluate.
    UnsupportedVariant { variant: Variant },
    /// A custom quadratic weight only applies to the refined variant.
    WeightNotApplicable { variant: Variant },
    /// The co-analytic part violates its mode's vanishing constraints.
    CoefficientConstraintViolated { index: usize, modulus: f64 },
    /// Schwarz functions must vanish to order at least 1.
    InvalidSchwarzDegree,
    /// A sweep needs a non-empty grid of valid parameters.
    EmptyGrid,
    /// Pointwise Schwarz bound `|w(z)| <= |z|^degree` failed at a sample.
    SchwarzBoundViolated { degree: u32, at: Complex64 },
}

impl fmt::Display for FunctionalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Series(e) => write!(f, "series error: {e}"),
            Self::RadiusOutsideDisk { r } => write!(f, "radius {r} outside [0, 1)"),
            Self::ParameterOutsideDisk { a } => {
                write!(f, "family parameter {a} outside [0, 1)")
            }
            Self::DilatationBoundOutOfRange { k } => {
                write!(f, "dilatation bound {k} outside [0, 1]")
            }
            Self::ModeMismatch { variant, expected } => {
                write!(f, "variant {variant} requires {expected:?} dilatation mode")
            }
            Self::UnsupportedVariant { variant } => {
                write!(f, "variant {variant} has no functional")
            }
            Self::WeightNotApplicable { variant } => {
                write!(f, "variant {variant} takes no quadratic weight")
            }
            Self::CoefficientConstraintViolated { index, modulus } => {
                write!(
                    f,
                    "co-analytic coefficient {index} must vanish, has modulus {modulus}"
                )
            }
            Self::InvalidSchwarzDegree => write!(f, "Schwarz degree must be at least 1"),
            Self::EmptyGrid => write!(f, "sweep grid is empty or invalid"),
            Self::SchwarzBoundViolated { degree, at } => {
                write!(f, "|w(z)| exceeds |z|^{degree} at z = {at}")
            }
        }
    }
}

impl std::error::Error for FunctionalError {}

impl From<SeriesError> for FunctionalError {
    fn from(e: SeriesError) -> Self {
        Self::Series(e)
    }
}

/// A harmonic mapping `f = h + conj(g)` carried as truncated coefficients,
/// together with its dilatation regime and bound.
///
/// Contract: the analytic part satisfies `||h|| <= 1` on the disk (callers
/// build it from a [`BoundedFunction`]); the co-analytic part's leading
/// coefficients vanish per the mode, which the constructor enforces.
#[derive(Debug, Clone)]
pub struct HarmonicMapping {
    analytic: TruncatedSeries,
    co_analytic: TruncatedSeries,
    mode: DilatationMode,
    dilatation_bound: f64,
}

impl HarmonicMapping {
    pub fn new(
        analytic: TruncatedSeries,
        co_analytic: TruncatedSeries,
        mode: DilatationMode,
        dilatation_bound: f64,
    ) -> Result<Self, FunctionalError> {
        if !(0.0..=1.0).contains(&dilatation_bound) {
            return Err(FunctionalError::DilatationBoundOutOfRange {
                k: dilatation_bound,
            });
        }
        let must_vanish: &[usize] = match mode {
            DilatationMode::Standard => &[0],
            DilatationMode::Vanishing => &[0, 1],
        };
        for &index in must_vanish {
            let modulus = co_analytic.coeff(index).norm();
            if modulus > 1e-12 {
                return Err(FunctionalError::CoefficientConstraintViolated { index, modulus });
            }
        }
        Ok(Self {
            analytic,
            co_analytic,
            mode,
            dilatation_bound,
        })
    }

    pub fn analytic(&self) -> &TruncatedSeries {
        &self.analytic
    }

    pub fn co_analytic(&self) -> &TruncatedSeries {
        &self.co_analytic
    }

    pub fn mode(&self) -> DilatationMode {
        self.mode
    }

    pub fn dilatation_bound(&self) -> f64 {
        self.dilatation_bound
    }
}

/// A Schwarz-class function `w(z) = z^degree * factor(z)` with `|factor| <= 1`:
/// vanishes to the stated order and satisfies `|w(z)| <= |z|^degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzFunction {
    degree: u32,
    factor: Option<BoundedFunction>,
}

impl SchwarzFunction {
    /// The canonical worst case `z^degree`.
    pub fn monomial(degree: u32) -> Result<Self, FunctionalError> {
        if degree == 0 {
            return Err(FunctionalError::InvalidSchwarzDegree);
        }
        Ok(Self {
            degree,
            factor: None,
        })
    }

    /// `z^degree` times a bounded factor.
    pub fn with_factor(degree: u32, factor: BoundedFunction) -> Result<Self, FunctionalError> {
        if degree == 0 {
            return Err(FunctionalError::InvalidSchwarzDegree);
        }
        Ok(Self {
            degree,
            factor: Some(factor),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let lead = z.powu(self.degree);
        match &self.factor {
            Some(f) => lead * f.eval(z),
            None => lead,
        }
    }

    /// The sharp modulus bound `r^degree` the functional evaluation uses.
    pub fn sup_modulus_at(&self, r: f64) -> f64 {
        powu(r, self.degree)
    }
}

/// The three Schwarz functions a functional consumes: the coefficient
/// argument (order `p`), the dilatation factor (order `m`), and the
/// derivative scale (order `q`).
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzTriple {
    pub omega_p: SchwarzFunction,
    pub omega_m: SchwarzFunction,
    pub omega_q: SchwarzFunction,
}

impl SchwarzTriple {
    pub fn new(omega_p: SchwarzFunction, omega_m: SchwarzFunction, omega_q: SchwarzFunction) -> Self {
        Self {
            omega_p,
            omega_m,
            omega_q,
        }
    }

    /// The monomial triple `(z^p, z^m, z^q)` — the worst case of every bound.
    pub fn monomials(p: u32, m: u32, q: u32) -> Result<Self, FunctionalError> {
        Ok(Self {
            omega_p: SchwarzFunction::monomial(p)?,
            omega_m: SchwarzFunction::monomial(m)?,
            omega_q: SchwarzFunction::monomial(q)?,
        })
    }

    /// Vanishing orders `(p, m, q)`.
    pub fn degrees(&self) -> (u32, u32, u32) {
        (
            self.omega_p.degree(),
            self.omega_m.degree(),
            self.omega_q.degree(),
        )
    }

    /// Verifies `|w(z)| <= |z|^degree` on a deterministic spiral of sample
    /// points for all three functions.
    pub fn check_pointwise(&self, samples: usize) -> Result<(), FunctionalError> {
        const GOLDEN_ANGLE: f64 = 2.399963229728653;
        for f in [&self.omega_p, &self.omega_m, &self.omega_q] {
            for j in 1..=samples {
                let t = j as f64 / samples as f64;
                let z = Complex64::from_polar(0.97 * t, GOLDEN_ANGLE * j as f64);
                if f.eval(z).norm() > z.norm().powi(f.degree() as i32) + 1e-9 {
                    return Err(FunctionalError::SchwarzBoundViolated {
                        degree: f.degree(),
                        at: z,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Majorant sum that treats a start index beyond the truncation as an empty
/// (zero) sum instead of an error; the mode constraints already zero the
/// skipped coefficients, so sums are taken from 0 where convenient.
fn majorant_sum(series: &TruncatedSeries, x: f64, start: usize) -> Result<f64, FunctionalError> {
    if start > series.order() {
        return Ok(0.0);
    }
    Ok(series.abs_sum_at(x, start)?.value)
}

/// Modulus of the truncated derivative of `series` at the real point `x`.
fn derivative_modulus_at(series: &TruncatedSeries, x: f64) -> f64 {
    if series.order() == 0 {
        return 0.0;
    }
    series
        .derivative()
        .expect("order >= 1 checked above")
        .eval(Complex64::new(x, 0.0))
        .norm()
}

/// Evaluates the variant's functional for a concrete mapping at radius `r`,
/// with every Schwarz function replaced by its sharp modulus bound `r^j`.
///
/// The refined variant's quadratic derivative term is weighted by the sharp
/// constant from [`crate::radius::refined_constant`]; use
/// [`eval_functional_weighted`] to supply a different weight.
pub fn eval_functional(
    variant: Variant,
    mapping: &HarmonicMapping,
    schwarz: &SchwarzTriple,
    r: f64,
) -> Result<f64, FunctionalError> {
    eval_impl(variant, mapping, schwarz, r, None)
}

/// [`eval_functional`] with an explicit weight on the refined variant's
/// quadratic derivative term (errors for every other variant). Passing a
/// weight above the sharp constant makes the bound fail beyond some radius —
/// that is precisely what the sharp constant is sharp against.
pub fn eval_functional_weighted(
    variant: Variant,
    mapping: &HarmonicMapping,
    schwarz: &SchwarzTriple,
    r: f64,
    weight: f64,
) -> Result<f64, FunctionalError> {
    if variant != Variant::Refined {
        return Err(FunctionalError::WeightNotApplicable { variant });
    }
    eval_impl(variant, mapping, schwarz, r, Some(weight))
}

fn eval_impl(
    variant: Variant,
    mapping: &HarmonicMapping,
    schwarz: &SchwarzTriple,
    r: f64,
    weight: Option<f64>,
) -> Result<f64, FunctionalError> {
    if !(0.0..1.0).contains(&r) || r.is_nan() {
        return Err(FunctionalError::RadiusOutsideDisk { r });
    }
    let expected_mode = match variant {
        Variant::Majorant => DilatationMode::Vanishing,
        Variant::ValueDeriv | Variant::ValueSqDeriv | Variant::Refined => DilatationMode::Standard,
        _ => return Err(FunctionalError::UnsupportedVariant { variant }),
    };
    if mapping.mode() != expected_mode {
        return Err(FunctionalError::ModeMismatch {
            variant,
            expected: expected_mode,
        });
    }

    let (p, m, q) = schwarz.degrees();
    let rp = powu(r, p);
    let rm = powu(r, m);
    let rq = powu(r, q);
    let h = mapping.analytic();
    let g = mapping.co_analytic();

    Ok(match variant {
        Variant::Majorant => {
            // sum |a_n| r^(pn)  +  sum_{n>=2} |b_n| r^(mn); b_0 = b_1 = 0 by
            // mode, so the co-analytic sum can start at 0.
            majorant_sum(h, rp, 0)? + majorant_sum(g, rm, 0)?
        }
        Variant::ValueDeriv | Variant::ValueSqDeriv => {
            // |h| and |h'| are taken at the real point r^m — the image of
            // the dilatation's Schwarz factor at its sharp modulus.
            let value = h.eval(Complex64::new(rm, 0.0)).norm();
            let value_term = if variant == Variant::ValueSqDeriv {
                value * value
            } else {
                value
            };
            value_term
                + derivative_modulus_at(h, rm) * rq
                + majorant_sum(h, rp, 2)?
                + majorant_sum(g, rp, 0)?
        }
        Variant::Refined => {
            let a0 = h.coeff(0).norm();
            let quadratic_scale = 1.0 / (1.0 + a0) + rp / (1.0 - rp);
            let mut sq = 0.0; // sum_{n>=1} |a_n|^2 r^(2pn)
            let mut wsq = 0.0; // sum_{n>=1} n |a_n|^2 r^(2mn)
            let rp2 = rp * rp;
            let rm2 = rm * rm;
            let mut pow_p = 1.0;
            let mut pow_m = 1.0;
            for (n, c) in h.coeffs().iter().enumerate().skip(1) {
                pow_p *= rp2;
                pow_m *= rm2;
                let nsq = c.norm_sqr();
                sq += nsq * pow_p;
                wsq += n as f64 * nsq * pow_m;
            }
            let mu = weight.unwrap_or_else(|| {
                crate::radius::refined_constant_from_k(p, m, mapping.dilatation_bound())
            });
            majorant_sum(h, rp, 0)?
                + majorant_sum(g, rp, 0)?
                + quadratic_scale * sq
                + mu * wsq
        }
        _ => unreachable!("cap variants rejected above"),
    })
}

/// Closed-form value of the variant's functional on the extremal family
/// member with parameter `a` at radius `r`.
///
/// The value has the form `1 + (1-a) * slope` (or `1 + (1-a^2) * slope` for
/// the squared variant), where `slope -> defining_function(r)` as `a -> 1`;
/// in particular the value tends to 1 for every `r`, from below when `r` is
/// below the radius and from above when beyond it.
pub fn extremal_value(
    variant: Variant,
    a: f64,
    params: &crate::radius::Params,
    r: f64,
) -> Result<f64, FunctionalError> {
    let mu = crate::radius::refined_constant_from_k(params.p(), params.m(), params.k());
    extremal_impl(variant, a, params, r, mu)
}

/// Refined-variant extremal value with an explicit quadratic weight.
pub fn extremal_value_weighted(
    a: f64,
    params: &crate::radius::Params,
    r: f64,
    weight: f64,
) -> Result<f64, FunctionalError> {
    extremal_impl(Variant::Refined, a, params, r, weight)
}

fn extremal_impl(
    variant: Variant,
    a: f64,
    params: &crate::radius::Params,
    r: f64,
    mu: f64,
) -> Result<f64, FunctionalError> {
    if !(0.0..1.0).contains(&a) || a.is_nan() {
        return Err(FunctionalError::ParameterOutsideDisk { a });
    }
    if !(0.0..1.0).contains(&r) || r.is_nan() {
        return Err(FunctionalError::RadiusOutsideDisk { r });
    }
    let (p, m, q) = (params.p(), params.m(), params.q());
    let k = params.k();
    let rp = powu(r, p);
    let rm = powu(r, m);
    let rq = powu(r, q);
    Ok(match variant {
        Variant::Majorant => {
            // slope = (1+a) r^p/(1-a r^p) + k (1+a) r^(2m) phi(a r^m) - 1,
            // with phi summing the (n-1)/n weights of the co-analytic tail;
            // phi's series form absorbs the removable singularity at a = 0.
            let slope = (1.0 + a) * rp / (1.0 - a * rp)
                + k * (1.0 + a) * powu(r, 2 * m) * phi(a * rm)
                - 1.0;
            1.0 + (1.0 - a) * slope
        }
        Variant::ValueDeriv => {
            let one_plus = 1.0 + a * rm;
            let slope = (1.0 + a) * rq / (one_plus * one_plus)
                + (1.0 + a) * a * rp * rp / (1.0 - a * rp)
                + (1.0 + a) * k * rp / (1.0 - a * rp)
                - (1.0 - rm) / one_plus;
            1.0 + (1.0 - a) * slope
        }
        Variant::ValueSqDeriv => {
            let one_plus = 1.0 + a * rm;
            let slope = -(1.0 - rm * rm - rq) / (one_plus * one_plus)
                + (k + a * rp) * rp / (1.0 - a * rp);
            1.0 + (1.0 - a * a) * slope
        }
        Variant::Refined => {
            let r2m = powu(r, 2 * m);
            let denom = 1.0 - a * a * r2m;
            let slope = (1.0 + k) * (1.0 + a) * rp / (1.0 - a * rp)
                + (1.0 - a * a) * rp * rp / ((1.0 - rp) * (1.0 - a * rp))
                + (1.0 - a * a) * (1.0 + a) * mu * r2m / (denom * denom)
                - 1.0;
            1.0 + (1.0 - a) * slope
        }
        _ => return Err(FunctionalError::UnsupportedVariant { variant }),
    })
}

/// Builds the extremal family member at parameter `a` as explicit
/// coefficients: `h = (a+z)/(1+az)` expanded to `order`, with the variant's
/// co-analytic partner (`g' = k z h'` for the majorant variant,
/// `g = k (h - a)` for the rest).
pub fn extremal_mapping(
    variant: Variant,
    a: f64,
    params: &crate::radius::Params,
    order: usize,
) -> Result<HarmonicMapping, FunctionalError> {
    let k = params.k();
    let h = BoundedFunction::mobius(a)
        .map_err(|_| FunctionalError::ParameterOutsideDisk { a })?
        .expand(order.max(2));
    match variant {
        Variant::Majorant => {
            let g = h
                .derivative()?
                .mul_by_z()
                .scaled(Complex64::new(k, 0.0))
                .antiderivative();
            HarmonicMapping::new(h, g, DilatationMode::Vanishing, k)
        }
        Variant::ValueDeriv | Variant::ValueSqDeriv | Variant::Refined => {
            let mut coeffs = h.coeffs().to_vec();
            coeffs[0] = Complex64::ZERO;
            let g = TruncatedSeries::new(coeffs)?.scaled(Complex64::new(k, 0.0));
            HarmonicMapping::new(h, g, DilatationMode::Standard, k)
        }
        _ => Err(FunctionalError::UnsupportedVariant { variant }),
    }
}

/// Result of maximizing the extremal value over a grid in `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepResult {
    pub max_value: f64,
    pub argmax_a: f64,
}

/// Maximizes [`extremal_value`] over `a_grid` at fixed radius.
///
/// Deterministic reduction: strictly greater values win; exact ties go to
/// the smaller `a`, independent of grid order.
pub fn sharpness_sweep(
    variant: Variant,
    params: &crate::radius::Params,
    r: f64,
    a_grid: &[f64],
) -> Result<SweepResult, FunctionalError> {
    if a_grid.is_empty() {
        return Err(FunctionalError::EmptyGrid);
    }
    let mut best: Option<SweepResult> = None;
    for &a in a_grid {
        let value = extremal_value(variant, a, params, r)?;
        let better = match best {
            None => true,
            Some(b) => value > b.max_value || (value == b.max_value && a < b.argmax_a),
        };
        if better {
            best = Some(SweepResult {
                max_value: value,
                argmax_a: a,
            });
        }
    }
    Ok(best.expect("grid is non-empty"))
}

/// The default sweep grid: 1000 uniform points on `[0, 0.999]` plus a
/// geometric refinement toward 1, where extremality is attained in the
/// limit.
pub fn default_a_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..1000).map(|i| i as f64 / 1000.0).collect();
    grid.extend_from_slice(&[0.9995, 0.9999, 0.99995, 0.99999, 0.999_999, 0.999_999_9]);
    grid
}

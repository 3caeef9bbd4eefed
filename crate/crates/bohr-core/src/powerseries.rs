//! Truncated power series and bounded analytic functions on the unit disk.
//!
//! Everything downstream consumes Taylor coefficients of functions that are
//! analytic on `|z| < 1` and bounded by 1. This module provides the two
//! representations:
//!
//! - [`TruncatedSeries`]: coefficients `c_0..c_N` of a series truncated at
//!   order `N`, optionally carrying a [`TailBound`] on the discarded mass
//!   `sum_{n>N} |c_n| x^n`, valid for `x` up to a stated radius.
//! - [`BoundedFunction`]: exact descriptions of the self-maps of the disk
//!   used throughout — Möbius maps `(a+z)/(1+az)`, finite Blaschke products,
//!   and monomials `z^d` — each of which can be evaluated in closed form or
//!   expanded into a `TruncatedSeries`.
//!
//! All arithmetic is double precision. Coefficients of the functions above
//! decay geometrically, so order-256 truncations leave tails far below the
//! 1e-8 consistency tolerances used by the verification suites.

use num_complex::Complex64;
use std::fmt;

/// Default truncation order used by the expansion and verification code.
pub const DEFAULT_ORDER: usize = 256;

/// Disk radius at which freshly built expansions attach their tail bounds.
const TAIL_ATTACH_RADIUS: f64 = 0.96;

/// Everything that can go wrong constructing or manipulating series.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesError {
    /// A series needs at least the constant coefficient.
    EmptyCoefficients,
    /// A coefficient was NaN or infinite.
    NonFiniteCoefficient { index: usize },
    /// Tail bounds must be finite, non-negative, and attached inside (0, 1).
    InvalidTailBound { bound: f64, radius: f64 },
    /// Differentiating an order-0 (constant) series is rejected.
    DerivativeOfConstant,
    /// `abs_sum_at` evaluation points must satisfy `0 <= x < 1`.
    PointOutsideDisk { x: f64 },
    /// `abs_sum_at` starting index beyond the truncation order.
    StartBeyondOrder { start: usize, order: usize },
    /// Möbius parameter must lie in `[0, 1)`.
    MobiusParameterOutOfRange { a: f64 },
    /// Blaschke zeros must lie strictly inside the unit disk.
    ZeroOutsideDisk { modulus: f64 },
    /// Blaschke rotations must be unimodular.
    RotationNotUnimodular { modulus: f64 },
    /// Monomials must have degree at least 1 to be Schwarz-class.
    ZeroDegreeMonomial,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyCoefficients => write!(f, "series needs at least one coefficient"),
            Self::NonFiniteCoefficient { index } => {
                write!(f, "coefficient {index} is not finite")
            }
            Self::InvalidTailBound { bound, radius } => {
                write!(f, "invalid tail bound {bound} at radius {radius}")
            }
            Self::DerivativeOfConstant => {
                write!(f, "cannot differentiate an order-0 series")
            }
            Self::PointOutsideDisk { x } => {
                write!(f, "evaluation point {x} outside [0, 1)")
            }
            Self::StartBeyondOrder { start, order } => {
                write!(f, "start index {start} beyond truncation order {order}")
            }
            Self::MobiusParameterOutOfRange { a } => {
                write!(f, "Möbius parameter {a} outside [0, 1)")
            }
            Self::ZeroOutsideDisk { modulus } => {
                write!(f, "Blaschke zero has modulus {modulus} >= 1")
            }
            Self::RotationNotUnimodular { modulus } => {
                write!(f, "Blaschke rotation has modulus {modulus} != 1")
            }
            Self::ZeroDegreeMonomial => write!(f, "monomial degree must be at least 1"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Bound on the truncated tail `sum_{n>N} |c_n| x^n`, valid for `x <= radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub bound: f64,
    pub radius: f64,
}

/// Result of a majorant-sum evaluation: the truncated value, plus the tail
/// bound when the series carries one valid at the evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MajorantSum {
    /// `sum_{n=start}^{N} |c_n| x^n`.
    pub value: f64,
    /// Upper bound on the discarded `sum_{n>N} |c_n| x^n`, if known.
    pub tail: Option<f64>,
}

/// Taylor coefficients `c_0..c_N` of a function analytic on the unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    tail: Option<TailBound>,
}

impl TruncatedSeries {
    /// Wraps explicit coefficients `c_0..c_N`; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(SeriesError::NonFiniteCoefficient { index });
            }
        }
        Ok(Self { coeffs, tail: None })
    }

    /// Attaches a bound on the discarded tail, valid for `x <= radius`.
    pub fn with_tail_bound(mut self, bound: f64, radius: f64) -> Result<Self, SeriesError> {
        if !(bound.is_finite() && bound >= 0.0 && radius > 0.0 && radius < 1.0) {
            return Err(SeriesError::InvalidTailBound { bound, radius });
        }
        self.tail = Some(TailBound { bound, radius });
        Ok(self)
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `c_n`, zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(Complex64::ZERO)
    }

    /// The stored coefficients `c_0..c_N`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// The attached tail bound, if any.
    pub fn tail_bound(&self) -> Option<TailBound> {
        self.tail
    }

    /// Cauchy product, truncated at the smaller of the two orders. The
    /// result carries no tail bound: the product of two truncations drops
    /// cross terms that the factor bounds do not control.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        for (i, &u) in self.coeffs.iter().take(order + 1).enumerate() {
            for (j, &v) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += u * v;
            }
        }
        Self { coeffs, tail: None }
    }

    /// Termwise derivative `sum n c_n z^(n-1)`; order drops by one.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::DerivativeOfConstant);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &c)| c * n as f64)
            .collect();
        // Differentiation multiplies tail terms by n, which the stored
        // scalar bound cannot absorb; drop it.
        Ok(Self { coeffs, tail: None })
    }

    /// Termwise antiderivative `sum c_n z^(n+1)/(n+1)` with zero constant
    /// term; order grows by one. A tail bound survives: each discarded term
    /// is divided by `n + 1 >= 1` and gains a factor `x < 1`.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::ZERO);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c / (n + 1) as f64),
        );
        Self {
            coeffs,
            tail: self.tail,
        }
    }

    /// Multiplies every coefficient by a fixed factor. The tail bound scales
    /// by `|factor|`.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
            tail: self.tail.map(|t| TailBound {
                bound: t.bound * factor.norm(),
                radius: t.radius,
            }),
        }
    }

    /// Multiplies by `z`, shifting coefficients up one index. Each tail term
    /// gains a factor `x <= radius`, so the bound scales by the radius.
    pub fn mul_by_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self {
            coeffs,
            tail: self.tail.map(|t| TailBound {
                bound: t.bound * t.radius,
                radius: t.radius,
            }),
        }
    }

    /// Horner evaluation of the truncated polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Majorant sum `sum_{n=start}^{N} |c_n| x^n` for `0 <= x < 1`.
    ///
    /// When the series carries a tail bound valid at `x` (attachment radius
    /// at least `x`), the result reports it as the uncertainty of the
    /// truncation.
    pub fn abs_sum_at(&self, x: f64, start: usize) -> Result<MajorantSum, SeriesError> {
        if !(0.0..1.0).contains(&x) {
            return Err(SeriesError::PointOutsideDisk { x });
        }
        if start > self.order() {
            return Err(SeriesError::StartBeyondOrder {
                start,
                order: self.order(),
            });
        }
        // Accumulate upward so x^n is built by repeated multiplication; the
        // moduli are non-negative, so no cancellation occurs.
        let mut value = 0.0;
        let mut pow = x.powi(start as i32);
        for &c in &self.coeffs[start..] {
            value += c.norm() * pow;
            pow *= x;
        }
        let tail = self
            .tail
            .filter(|t| t.radius >= x)
            .map(|t| t.bound);
        Ok(MajorantSum { value, tail })
    }
}

/// Exact descriptions of the bounded analytic self-maps of the disk that
/// drive the verification suites.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundedFunction {
    /// `(a + z)/(1 + a z)` with `a` real in `[0, 1)`; the extremal family's
    /// analytic part.
    Mobius { a: f64 },
    /// `rotation * prod (z - alpha)/(1 - conj(alpha) z)` over the listed
    /// zeros. An empty product is the constant `rotation`.
    Blaschke {
        zeros: Vec<Complex64>,
        rotation: Complex64,
    },
    /// `z^degree`, the canonical Schwarz-class function vanishing to the
    /// given order.
    Monomial { degree: u32 },
}

impl BoundedFunction {
    /// Möbius self-map `(a + z)/(1 + a z)`, `0 <= a < 1`.
    pub fn mobius(a: f64) -> Result<Self, SeriesError> {
        if !(0.0..1.0).contains(&a) {
            return Err(SeriesError::MobiusParameterOutOfRange { a });
        }
        Ok(Self::Mobius { a })
    }

    /// Finite Blaschke product with the given zeros and unimodular rotation.
    pub fn blaschke(zeros: Vec<Complex64>, rotation: Complex64) -> Result<Self, SeriesError> {
        for zero in &zeros {
            if zero.norm() >= 1.0 {
                return Err(SeriesError::ZeroOutsideDisk {
                    modulus: zero.norm(),
                });
            }
        }
        if (rotation.norm() - 1.0).abs() > 1e-9 {
            return Err(SeriesError::RotationNotUnimodular {
                modulus: rotation.norm(),
            });
        }
        Ok(Self::Blaschke { zeros, rotation })
    }

    /// Monomial `z^degree`, `degree >= 1`.
    pub fn monomial(degree: u32) -> Result<Self, SeriesError> {
        if degree == 0 {
            return Err(SeriesError::ZeroDegreeMonomial);
        }
        Ok(Self::Monomial { degree })
    }

    /// Closed-form evaluation; exact up to rounding, with no truncation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            Self::Mobius { a } => (a + z) / (1.0 + a * z),
            Self::Blaschke { zeros, rotation } => {
                let mut w = *rotation;
                for alpha in zeros {
                    w *= (z - alpha) / (1.0 - alpha.conj() * z);
                }
                w
            }
            Self::Monomial { degree } => z.powu(*degree),
        }
    }

    /// Taylor expansion about 0, truncated at `order`.
    ///
    /// Möbius maps and monomials attach exact tail bounds (geometric decay
    /// and zero, respectively); Blaschke products are built by iterated
    /// Cauchy products, which drop the bound.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        match self {
            Self::Mobius { a } => {
                // c_0 = a, c_n = (1 - a^2)(-a)^(n-1): the geometric series of
                // 1/(1 + a z) multiplied out against (a + z).
                let a = *a;
                let mut coeffs = Vec::with_capacity(order + 1);
                coeffs.push(Complex64::new(a, 0.0));
                let lead = 1.0 - a * a;
                let mut pow = 1.0; // (-a)^(n-1)
                for _ in 1..=order {
                    coeffs.push(Complex64::new(lead * pow, 0.0));
                    pow *= -a;
                }
                // sum_{n>N} |c_n| x^n = (1-a^2) a^N x^(N+1) / (1 - a x).
                let x = TAIL_ATTACH_RADIUS;
                let bound =
                    lead * a.powi(order as i32) * x.powi(order as i32 + 1) / (1.0 - a * x);
                TruncatedSeries::new(coeffs)
                    .expect("möbius coefficients are finite")
                    .with_tail_bound(bound, x)
                    .expect("geometric tail bound is valid")
            }
            Self::Blaschke { zeros, rotation } => {
                let mut acc = vec![Complex64::ZERO; order + 1];
                acc[0] = *rotation;
                let mut acc = TruncatedSeries::new(acc).expect("rotation is finite");
                for alpha in zeros {
                    acc = acc.mul(&factor_series(*alpha, order));
                }
                if zeros.is_empty() {
                    // A constant is stored exactly; its tail is zero.
                    acc = acc
                        .with_tail_bound(0.0, TAIL_ATTACH_RADIUS)
                        .expect("zero tail bound is valid");
                }
                acc
            }
            Self::Monomial { degree } => {
                let degree = *degree as usize;
                let mut coeffs = vec![Complex64::ZERO; order + 1];
                let bound = if degree <= order {
                    coeffs[degree] = Complex64::ONE;
                    0.0
                } else {
                    // The single term sits beyond the truncation order.
                    TAIL_ATTACH_RADIUS.powi(degree as i32)
                };
                TruncatedSeries::new(coeffs)
                    .expect("monomial coefficients are finite")
                    .with_tail_bound(bound, TAIL_ATTACH_RADIUS)
                    .expect("monomial tail bound is valid")
            }
        }
    }
}

/// Series of a single Blaschke factor `(z - alpha)/(1 - conj(alpha) z)`:
/// `c_0 = -alpha`, `c_j = conj(alpha)^(j-1) (1 - |alpha|^2)` for `j >= 1`.
fn factor_series(alpha: Complex64, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(-alpha);
    let lead = 1.0 - alpha.norm_sqr();
    let mut pow = Complex64::ONE; // conj(alpha)^(j-1)
    for _ in 1..=order {
        coeffs.push(pow * lead);
        pow *= alpha.conj();
    }
    TruncatedSeries::new(coeffs).expect("Blaschke factor coefficients are finite")
}

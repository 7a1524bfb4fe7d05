//! Numerical integration engines.
//!
//! Three double-exponential transforms cover the domain shapes that occur
//! in the catalog: tanh-sinh on finite intervals, exp-sinh on half-lines
//! and sinh-sinh on the whole real line. Principal values through one or
//! two interior simple poles are handled by folding a symmetric window
//! around each pole. An adaptive Gauss–Kronrod integrator with explicit
//! endpoint substitutions is kept as an independent cross-check.
//!
//! Integrands receive a [`Point`] instead of a bare abscissa: besides `x`
//! it carries the distances to the finite domain endpoints, generated
//! without cancellation, so that factors like `(1 − x)^{−0.95}` can be
//! evaluated accurately right next to the endpoint.

mod de;
mod nodes;
mod oracle;
mod pv;

use alloc::vec::Vec;

pub use oracle::oracle_integrate;

use nodes::NodeTables;

/// Tolerance requested from the engines by default.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Level of agreement accepted when checking engine output.
pub const ACCEPT_TOL: f64 = 1e-8;
/// Deepest refinement level; the step at level `k` is `2^{-k}`.
pub const MAX_LEVEL: usize = 12;
/// Convergence is never declared before this level.
pub const MIN_LEVEL: usize = 3;
/// Hard cap on integrand evaluations for a single integral.
pub const MAX_EVALUATIONS: usize = 1_000_000;

/// An abscissa together with its distances to the domain endpoints.
///
/// `from_lo = x − lo` and `from_hi = hi − x`, computed directly from the
/// quadrature transform rather than by subtraction. For an infinite
/// endpoint the corresponding distance is `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub from_lo: f64,
    pub from_hi: f64,
}

impl Point {
    /// A point with no finite endpoints (real-line domains, tests).
    pub fn free(x: f64) -> Self {
        Self {
            x,
            from_lo: f64::INFINITY,
            from_hi: f64::INFINITY,
        }
    }
}

/// Something that can be integrated: a pure map from a [`Point`] to a real.
pub trait Integrand {
    fn eval(&self, p: Point) -> f64;
}

impl<F: Fn(Point) -> f64 + ?Sized> Integrand for F {
    fn eval(&self, p: Point) -> f64 {
        self(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite { lo: f64, hi: f64 },
    HalfLineUp { lo: f64 },
    HalfLineDown { hi: f64 },
    RealLine,
}

impl Domain {
    pub fn lo(&self) -> f64 {
        match *self {
            Domain::Finite { lo, .. } | Domain::HalfLineUp { lo } => lo,
            Domain::HalfLineDown { .. } | Domain::RealLine => f64::NEG_INFINITY,
        }
    }

    pub fn hi(&self) -> f64 {
        match *self {
            Domain::Finite { hi, .. } | Domain::HalfLineDown { hi } => hi,
            Domain::HalfLineUp { .. } | Domain::RealLine => f64::INFINITY,
        }
    }
}

/// Shape of an integral: its domain, endpoint behaviour and interior poles.
///
/// At a finite endpoint the exponent `α` states that the integrand behaves
/// like `(x − lo)^α` (resp. `(hi − x)^α`). At an infinite endpoint it is
/// the exponent seen after compactifying with `x = lo + s/(1 − s)`: a tail
/// decaying like `|x|^{−1−δ}` has exponent `δ − 1`, and exponentially
/// decaying tails use `0`. Either way integrability means `α > −1`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralSpec {
    pub domain: Domain,
    pub lo_exponent: f64,
    pub hi_exponent: f64,
    pub poles: Vec<f64>,
}

impl IntegralSpec {
    pub fn new(domain: Domain) -> Self {
        Self {
            domain,
            lo_exponent: 0.0,
            hi_exponent: 0.0,
            poles: Vec::new(),
        }
    }

    pub fn finite(lo: f64, hi: f64) -> Self {
        Self::new(Domain::Finite { lo, hi })
    }

    pub fn half_line_up(lo: f64) -> Self {
        Self::new(Domain::HalfLineUp { lo })
    }

    pub fn half_line_down(hi: f64) -> Self {
        Self::new(Domain::HalfLineDown { hi })
    }

    pub fn real_line() -> Self {
        Self::new(Domain::RealLine)
    }

    pub fn exponents(mut self, lo: f64, hi: f64) -> Self {
        self.lo_exponent = lo;
        self.hi_exponent = hi;
        self
    }

    pub fn pole(mut self, at: f64) -> Self {
        self.poles.push(at);
        self
    }

    pub fn validate(&self) -> Result<(), QuadError> {
        match self.domain {
            Domain::Finite { lo, hi } => {
                if !(lo.is_finite() && hi.is_finite()) {
                    return Err(QuadError::InvalidSpec(
                        "finite domain with non-finite endpoint",
                    ));
                }
                if lo >= hi {
                    return Err(QuadError::InvalidSpec("finite domain requires lo < hi"));
                }
            }
            Domain::HalfLineUp { lo: e } | Domain::HalfLineDown { hi: e } => {
                if !e.is_finite() {
                    return Err(QuadError::InvalidSpec("half-line endpoint must be finite"));
                }
            }
            Domain::RealLine => {}
        }
        if !(self.lo_exponent > -1.0 && self.hi_exponent > -1.0) {
            return Err(QuadError::InvalidSpec("endpoint exponents must exceed -1"));
        }
        if self.poles.len() > 2 {
            return Err(QuadError::InvalidSpec(
                "at most two interior poles are supported",
            ));
        }
        let (lo, hi) = (self.domain.lo(), self.domain.hi());
        for (i, &s) in self.poles.iter().enumerate() {
            if !(s.is_finite() && s > lo && s < hi) {
                return Err(QuadError::InvalidSpec(
                    "poles must lie strictly inside the domain",
                ));
            }
            if self.poles[..i].contains(&s) {
                return Err(QuadError::InvalidSpec("poles must be distinct"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadStatus {
    Converged,
    /// Deepest level reached without meeting the tolerance.
    MaxLevel,
    /// Successive-level differences grew twice in a row.
    Diverging,
    /// The evaluation budget ran out.
    BudgetExhausted,
}

impl QuadStatus {
    fn severity(self) -> u8 {
        match self {
            QuadStatus::Converged => 0,
            QuadStatus::MaxLevel => 1,
            QuadStatus::BudgetExhausted => 2,
            QuadStatus::Diverging => 3,
        }
    }

    pub(crate) fn worst(self, other: Self) -> Self {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }
}

/// Output of an engine run.
///
/// When `status` is `Converged`, `error_estimate ≤ tol · max(1, |value|)`
/// for the tolerance the engine was called with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub status: QuadStatus,
}

impl QuadratureResult {
    pub fn converged(&self) -> bool {
        self.status == QuadStatus::Converged
    }

    /// Sum of independent pieces: values and error estimates add.
    pub(crate) fn combine(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            evaluations: self.evaluations + other.evaluations,
            status: self.status.worst(other.status),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum QuadError {
    #[error("invalid integral spec: {0}")]
    InvalidSpec(&'static str),
    #[error("engine does not accept this domain: {0}")]
    WrongEngine(&'static str),
    #[error("integrand returned {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },
    #[error("no principal-value window fits around the pole at {pole}")]
    PoleTooClose { pole: f64 },
    #[error("tolerance must be positive")]
    BadTolerance,
}

/// The double-exponential engines with their precomputed node tables.
///
/// Construction builds every level once; afterwards the value is
/// immutable and can be shared freely between threads.
#[derive(Debug, Clone)]
pub struct Quadrature {
    tables: NodeTables,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self::new()
    }
}

impl Quadrature {
    pub fn new() -> Self {
        Self {
            tables: NodeTables::build(MAX_LEVEL),
        }
    }

    /// Tanh-sinh on a finite interval without interior poles.
    pub fn integrate_finite<I: Integrand + ?Sized>(
        &self,
        f: &I,
        spec: &IntegralSpec,
        tol: f64,
    ) -> Result<QuadratureResult, QuadError> {
        check_tol(tol)?;
        spec.validate()?;
        if !spec.poles.is_empty() {
            return Err(QuadError::WrongEngine("interior poles need integrate_pv"));
        }
        let Domain::Finite { lo, hi } = spec.domain else {
            return Err(QuadError::WrongEngine(
                "integrate_finite needs a finite domain",
            ));
        };
        de::finite(&self.tables, f, spec.domain, lo, hi, tol)
    }

    /// Exp-sinh on `[lo, ∞)` or `(−∞, hi]`.
    pub fn integrate_half_line<I: Integrand + ?Sized>(
        &self,
        f: &I,
        spec: &IntegralSpec,
        tol: f64,
    ) -> Result<QuadratureResult, QuadError> {
        check_tol(tol)?;
        spec.validate()?;
        if !spec.poles.is_empty() {
            return Err(QuadError::WrongEngine("interior poles need integrate_pv"));
        }
        match spec.domain {
            Domain::HalfLineUp { lo } => de::half_line(&self.tables, f, spec.domain, lo, true, tol),
            Domain::HalfLineDown { hi } => {
                de::half_line(&self.tables, f, spec.domain, hi, false, tol)
            }
            _ => Err(QuadError::WrongEngine(
                "integrate_half_line needs a half-line domain",
            )),
        }
    }

    /// Sinh-sinh on the whole real line.
    pub fn integrate_real_line<I: Integrand + ?Sized>(
        &self,
        f: &I,
        tol: f64,
    ) -> Result<QuadratureResult, QuadError> {
        check_tol(tol)?;
        de::real_line(&self.tables, f, tol)
    }

    /// Cauchy principal value through the poles declared in `spec`.
    pub fn integrate_pv<I: Integrand + ?Sized>(
        &self,
        f: &I,
        spec: &IntegralSpec,
        tol: f64,
    ) -> Result<QuadratureResult, QuadError> {
        check_tol(tol)?;
        spec.validate()?;
        if spec.poles.is_empty() {
            return Err(QuadError::WrongEngine(
                "integrate_pv needs at least one pole",
            ));
        }
        pv::principal_value(&self.tables, f, spec, tol)
    }

    /// Tanh-sinh estimates at every level `0..=MAX_LEVEL`, without early
    /// stopping. Useful for studying convergence.
    pub fn finite_level_estimates<I: Integrand + ?Sized>(
        &self,
        f: &I,
        spec: &IntegralSpec,
    ) -> Result<Vec<f64>, QuadError> {
        spec.validate()?;
        let Domain::Finite { lo, hi } = spec.domain else {
            return Err(QuadError::WrongEngine(
                "level estimates need a finite domain",
            ));
        };
        let mut trace = Vec::with_capacity(MAX_LEVEL + 1);
        de::finite_traced(
            &self.tables,
            f,
            spec.domain,
            lo,
            hi,
            DEFAULT_TOL,
            MAX_LEVEL,
            Some(&mut trace),
        )?;
        Ok(trace)
    }

    /// Picks the engine that matches `spec`.
    pub fn integrate<I: Integrand + ?Sized>(
        &self,
        f: &I,
        spec: &IntegralSpec,
        tol: f64,
    ) -> Result<QuadratureResult, QuadError> {
        if !spec.poles.is_empty() {
            return self.integrate_pv(f, spec, tol);
        }
        match spec.domain {
            Domain::Finite { .. } => self.integrate_finite(f, spec, tol),
            Domain::HalfLineUp { .. } | Domain::HalfLineDown { .. } => {
                self.integrate_half_line(f, spec, tol)
            }
            Domain::RealLine => {
                spec.validate()?;
                self.integrate_real_line(f, tol)
            }
        }
    }
}

fn check_tol(tol: f64) -> Result<(), QuadError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(QuadError::BadTolerance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn spec_validation() {
        assert!(IntegralSpec::finite(0.0, 1.0).validate().is_ok());
        assert!(IntegralSpec::finite(1.0, 1.0).validate().is_err());
        assert!(IntegralSpec::finite(0.0, 1.0)
            .exponents(-1.0, 0.0)
            .validate()
            .is_err());
        assert!(IntegralSpec::half_line_up(0.0)
            .pole(0.0)
            .validate()
            .is_err());
        assert!(IntegralSpec::real_line()
            .pole(1.0)
            .pole(1.0)
            .validate()
            .is_err());
        assert!(IntegralSpec::real_line()
            .pole(1.0)
            .pole(2.0)
            .pole(3.0)
            .validate()
            .is_err());
        assert!(IntegralSpec::finite(0.0, 2.0).pole(1.0).validate().is_ok());
    }

    #[test]
    fn engine_domain_mismatch_is_reported() {
        let q = Quadrature::new();
        let f = |p: Point| p.x;
        let half = IntegralSpec::half_line_up(0.0);
        assert!(matches!(
            q.integrate_finite(&f, &half, 1e-10),
            Err(QuadError::WrongEngine(_))
        ));
        let fin = IntegralSpec::finite(0.0, 1.0);
        assert!(matches!(
            q.integrate_half_line(&f, &fin, 1e-10),
            Err(QuadError::WrongEngine(_))
        ));
        assert!(matches!(
            q.integrate_pv(&f, &fin, 1e-10),
            Err(QuadError::WrongEngine(_))
        ));
        assert_eq!(
            q.integrate_finite(&f, &fin, 0.0),
            Err(QuadError::BadTolerance)
        );
    }

    #[test]
    fn non_finite_integrand_is_an_error() {
        let q = Quadrature::new();
        let f = |p: Point| if p.x > 0.5 { f64::NAN } else { 1.0 };
        let r = q.integrate_finite(&f, &IntegralSpec::finite(0.0, 1.0), 1e-10);
        assert!(matches!(r, Err(QuadError::NonFinite { .. })));
    }

    #[test]
    fn dispatch_selects_engine() {
        let q = Quadrature::new();
        let f = |p: Point| 1.0 / (1.0 + p.x * p.x);
        let r = q.integrate(&f, &IntegralSpec::real_line(), 1e-10).unwrap();
        assert!((r.value - PI).abs() < 1e-9);
        let r = q
            .integrate(&f, &IntegralSpec::half_line_down(0.0), 1e-10)
            .unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-9);
    }
}

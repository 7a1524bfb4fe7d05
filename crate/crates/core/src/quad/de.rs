//! Level-doubling drivers for the double-exponential rules.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::nodes::{NodeTables, CENTER_WEIGHT};
use super::{
    Domain, Integrand, Point, QuadError, QuadStatus, QuadratureResult, MAX_EVALUATIONS, MIN_LEVEL,
};

/// Counts evaluations and rejects non-finite values.
pub(crate) struct Counter<'a, I: Integrand + ?Sized> {
    f: &'a I,
    pub count: usize,
}

impl<'a, I: Integrand + ?Sized> Counter<'a, I> {
    pub fn new(f: &'a I) -> Self {
        Self { f, count: 0 }
    }

    pub fn eval(&mut self, p: Point) -> Result<f64, QuadError> {
        self.count += 1;
        let y = self.f.eval(p);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadError::NonFinite { x: p.x, value: y })
        }
    }
}

/// Runs levels `0..=max` and stops at the first level that meets `tol`.
///
/// `level_sum(k)` returns the weighted sum of the nodes new at level `k`;
/// `cost(k)` is how many evaluations that takes. The estimate at level `k`
/// is `scale · 2^{-k} · Σ`. With `trace` set every level is run and each
/// estimate is recorded.
pub(crate) fn drive<S, C>(
    max_level: usize,
    scale: f64,
    tol: f64,
    mut level_sum: S,
    cost: C,
    mut trace: Option<&mut Vec<f64>>,
) -> Result<QuadratureResult, QuadError>
where
    S: FnMut(usize) -> Result<(f64, usize), QuadError>,
    C: Fn(usize) -> usize,
{
    let (s0, mut evaluations) = level_sum(0)?;
    let mut sum = s0;
    let mut estimate = scale * sum;
    if let Some(t) = trace.as_deref_mut() {
        t.push(estimate);
    }
    let mut diff = f64::INFINITY;
    let mut growths = 0;
    let mut status = QuadStatus::MaxLevel;
    for level in 1..=max_level {
        if evaluations + cost(level) > MAX_EVALUATIONS {
            status = QuadStatus::BudgetExhausted;
            break;
        }
        let (s, n) = level_sum(level)?;
        evaluations += n;
        sum += s;
        let next = scale * (0.5f64).powi(level as i32) * sum;
        let d = (next - estimate).abs();
        estimate = next;
        let prev_diff = core::mem::replace(&mut diff, d);
        if let Some(t) = trace.as_deref_mut() {
            t.push(estimate);
            continue;
        }
        let threshold = tol * estimate.abs().max(1.0);
        if level >= MIN_LEVEL && d <= threshold {
            status = QuadStatus::Converged;
            break;
        }
        if level >= 2 && d > prev_diff && d > threshold {
            growths += 1;
        } else {
            growths = 0;
        }
        if growths >= 2 && level > MIN_LEVEL {
            status = QuadStatus::Diverging;
            break;
        }
    }
    Ok(QuadratureResult {
        value: estimate,
        error_estimate: diff,
        evaluations,
        status,
    })
}

/// Builds a point inside the piece `[a, b]` of the declared domain
/// `[dom_lo, dom_hi]`, given its distances `da` from `a` and `db` from `b`.
///
/// Distances to the declared endpoints reuse `da`/`db` when the piece
/// shares that endpoint, so they stay exact right next to it.
#[inline]
pub(crate) fn piece_point(a: f64, b: f64, da: f64, db: f64, dom_lo: f64, dom_hi: f64) -> Point {
    let x = if da <= db { a + da } else { b - db };
    Point {
        x,
        from_lo: lo_distance(x, a, da, dom_lo),
        from_hi: hi_distance(x, b, db, dom_hi),
    }
}

#[inline]
fn lo_distance(x: f64, a: f64, da: f64, dom_lo: f64) -> f64 {
    if a == dom_lo {
        da
    } else if dom_lo.is_finite() {
        x - dom_lo
    } else {
        f64::INFINITY
    }
}

#[inline]
fn hi_distance(x: f64, b: f64, db: f64, dom_hi: f64) -> f64 {
    if b == dom_hi {
        db
    } else if dom_hi.is_finite() {
        dom_hi - x
    } else {
        f64::INFINITY
    }
}

/// Tanh-sinh over the piece `[a, b]` of `domain`.
pub(crate) fn finite<I: Integrand + ?Sized>(
    tables: &NodeTables,
    f: &I,
    domain: Domain,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadError> {
    finite_traced(tables, f, domain, a, b, tol, tables.max_level(), None)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn finite_traced<I: Integrand + ?Sized>(
    tables: &NodeTables,
    f: &I,
    domain: Domain,
    a: f64,
    b: f64,
    tol: f64,
    max_level: usize,
    trace: Option<&mut Vec<f64>>,
) -> Result<QuadratureResult, QuadError> {
    let (lo, hi) = (domain.lo(), domain.hi());
    let half = 0.5 * (b - a);
    let mut ev = Counter::new(f);
    let level_sum = |k: usize| -> Result<(f64, usize), QuadError> {
        let start = ev.count;
        let mut s = 0.0;
        if k == 0 {
            s += CENTER_WEIGHT * ev.eval(piece_point(a, b, half, half, lo, hi))?;
        }
        for n in &tables.finite[k] {
            let near = half * n.d;
            let far = half * (2.0 - n.d);
            let fl = ev.eval(piece_point(a, b, near, far, lo, hi))?;
            let fh = ev.eval(piece_point(a, b, far, near, lo, hi))?;
            s += n.w * (fl + fh);
        }
        Ok((s, ev.count - start))
    };
    let cost = |k: usize| 2 * tables.finite[k].len();
    drive(max_level, half, tol, level_sum, cost, trace)
}

/// Exp-sinh from the finite end `edge` towards `+∞` (`upward`) or `−∞`.
pub(crate) fn half_line<I: Integrand + ?Sized>(
    tables: &NodeTables,
    f: &I,
    domain: Domain,
    edge: f64,
    upward: bool,
    tol: f64,
) -> Result<QuadratureResult, QuadError> {
    let (lo, hi) = (domain.lo(), domain.hi());
    let mut ev = Counter::new(f);
    let level_sum = |k: usize| -> Result<(f64, usize), QuadError> {
        let start = ev.count;
        let mut s = 0.0;
        for n in &tables.half[k] {
            let p = if upward {
                let x = edge + n.e;
                Point {
                    x,
                    from_lo: lo_distance(x, edge, n.e, lo),
                    from_hi: f64::INFINITY,
                }
            } else {
                let x = edge - n.e;
                Point {
                    x,
                    from_lo: f64::INFINITY,
                    from_hi: hi_distance(x, edge, n.e, hi),
                }
            };
            if !p.x.is_finite() {
                continue;
            }
            s += n.w * ev.eval(p)?;
        }
        Ok((s, ev.count - start))
    };
    let cost = |k: usize| tables.half[k].len();
    drive(tables.max_level(), 1.0, tol, level_sum, cost, None)
}

/// Sinh-sinh over the whole real line.
pub(crate) fn real_line<I: Integrand + ?Sized>(
    tables: &NodeTables,
    f: &I,
    tol: f64,
) -> Result<QuadratureResult, QuadError> {
    let mut ev = Counter::new(f);
    let level_sum = |k: usize| -> Result<(f64, usize), QuadError> {
        let start = ev.count;
        let mut s = 0.0;
        if k == 0 {
            s += CENTER_WEIGHT * ev.eval(Point::free(0.0))?;
        }
        for n in &tables.real[k] {
            s += n.w * (ev.eval(Point::free(n.x))? + ev.eval(Point::free(-n.x))?);
        }
        Ok((s, ev.count - start))
    };
    let cost = |k: usize| 2 * tables.real[k].len();
    drive(tables.max_level(), 1.0, tol, level_sum, cost, None)
}

#[cfg(test)]
mod tests {
    use super::super::{IntegralSpec, Quadrature};
    use super::*;
    use core::f64::consts::PI;

    fn q() -> Quadrature {
        Quadrature::new()
    }

    #[test]
    fn finite_examples() {
        let q = q();
        let unit = IntegralSpec::finite(0.0, 1.0);
        let r = q.integrate_finite(&|p: Point| p.x, &unit, 1e-10).unwrap();
        assert!(r.converged() && (r.value - 0.5).abs() < 1e-14);

        let arcsine = |p: Point| 1.0 / (p.from_lo.sqrt() * p.from_hi.sqrt());
        let spec = unit.clone().exponents(-0.5, -0.5);
        let r = q.integrate_finite(&arcsine, &spec, 1e-10).unwrap();
        assert!(r.converged(), "{r:?}");
        assert!((r.value - PI).abs() < 1e-12, "{}", r.value);

        let r = q
            .integrate_finite(&|p: Point| p.x * p.from_hi * p.from_hi, &unit, 1e-10)
            .unwrap();
        assert!((r.value - 1.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn strong_endpoint_singularity() {
        // x^{-0.95} on (0, 1) integrates to 20
        let q = q();
        let spec = IntegralSpec::finite(0.0, 1.0).exponents(-0.95, 0.0);
        let r = q
            .integrate_finite(&|p: Point| p.from_lo.powf(-0.95), &spec, 1e-10)
            .unwrap();
        assert!((r.value - 20.0).abs() < 1e-8 * 20.0, "{}", r.value);
    }

    #[test]
    fn half_line_examples() {
        let q = q();
        let spec = IntegralSpec::half_line_up(0.0);
        let r = q
            .integrate_half_line(&|p: Point| 1.0 / (1.0 + p.x * p.x), &spec, 1e-10)
            .unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-12, "{}", r.value);

        let r = q
            .integrate_half_line(
                &|p: Point| 1.0 / (p.from_lo.sqrt() * (1.0 + p.x)),
                &spec.clone().exponents(-0.5, -0.5),
                1e-10,
            )
            .unwrap();
        assert!((r.value - PI).abs() < 1e-11, "{}", r.value);

        let r = q
            .integrate_half_line(&|p: Point| (1.0 + p.x).powf(-1.5), &spec, 1e-10)
            .unwrap();
        assert!((r.value - 2.0).abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn half_line_down_uses_distance_to_edge() {
        let q = q();
        let spec = IntegralSpec::half_line_down(3.0);
        let r = q
            .integrate_half_line(&|p: Point| (-p.from_hi).exp(), &spec, 1e-10)
            .unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn real_line_examples() {
        let q = q();
        let r = q
            .integrate_real_line(&|p: Point| (-p.x * p.x).exp(), 1e-10)
            .unwrap();
        assert!((r.value - PI.sqrt()).abs() < 1e-12);
        let r = q
            // e^{−x/2}/(1 + e^{−x}) written without overflow
            .integrate_real_line(&|p: Point| 0.5 / (0.5 * p.x).cosh(), 1e-10)
            .unwrap();
        assert!((r.value - PI).abs() < 1e-11, "{}", r.value);
        let r = q
            .integrate_real_line(&|p: Point| p.x / p.x.cosh().powi(2), 1e-10)
            .unwrap();
        assert!(r.value.abs() < 1e-12);
    }
}

//! Principal values through simple interior poles.
//!
//! Around each pole `s` a window `(s − w, s + w)` is integrated in folded
//! form, `∫₀^w [f(s + u) + f(s − u)] du`, where the `1/(x − s)` parts
//! cancel. The folded points are snapped so that `x − s` evaluates to
//! exactly `±u` in floating point; without that the cancellation would
//! leave an `O(ε·s/u²)` residue next to the pole. What is left of the
//! domain goes to the ordinary engines.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::de::{self, drive, Counter};
use super::nodes::{NodeTables, CENTER_WEIGHT};
use super::{IntegralSpec, Integrand, Point, QuadError, QuadratureResult};

/// Windows narrower than this (relative to the pole) are refused.
const MIN_RELATIVE_WINDOW: f64 = 1e-12;

pub(crate) fn principal_value<I: Integrand + ?Sized>(
    tables: &NodeTables,
    f: &I,
    spec: &IntegralSpec,
    tol: f64,
) -> Result<QuadratureResult, QuadError> {
    let (lo, hi) = (spec.domain.lo(), spec.domain.hi());
    let mut poles = spec.poles.clone();
    poles.sort_by(f64::total_cmp);

    let mut windows = Vec::with_capacity(poles.len());
    for (i, &s) in poles.iter().enumerate() {
        let left = if i > 0 { poles[i - 1] } else { lo };
        let right = poles.get(i + 1).copied().unwrap_or(hi);
        let gap = [s - left, right - s]
            .into_iter()
            .filter(|g| g.is_finite())
            .fold(f64::INFINITY, f64::min);
        let w = if gap.is_finite() { 0.5 * gap } else { 1.0 };
        // negated so that a NaN window is rejected too
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(w > MIN_RELATIVE_WINDOW * s.abs().max(1.0)) {
            return Err(QuadError::PoleTooClose { pole: s });
        }
        windows.push((s, w));
    }

    let mut total: Option<QuadratureResult> = None;
    let mut add = |r: QuadratureResult| {
        total = Some(match total {
            Some(t) => t.combine(r),
            None => r,
        });
    };

    for &(s, w) in &windows {
        add(folded_window(tables, f, lo, hi, s, w, tol)?);
    }

    let mut start = lo;
    for &(s, w) in windows
        .iter()
        .chain(core::iter::once(&(f64::NAN, f64::NAN)))
    {
        let end = if s.is_nan() { hi } else { s - w };
        if start < end {
            let r = match (start.is_finite(), end.is_finite()) {
                (true, true) => de::finite(tables, f, spec.domain, start, end, tol)?,
                (true, false) => de::half_line(tables, f, spec.domain, start, true, tol)?,
                (false, true) => de::half_line(tables, f, spec.domain, end, false, tol)?,
                (false, false) => unreachable!("a pole splits the real line"),
            };
            add(r);
        }
        start = s + w;
    }
    Ok(total.expect("at least one pole window"))
}

fn folded_window<I: Integrand + ?Sized>(
    tables: &NodeTables,
    f: &I,
    lo: f64,
    hi: f64,
    s: f64,
    w: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadError> {
    let half = 0.5 * w;
    let at = |x: f64| Point {
        x,
        from_lo: if lo.is_finite() {
            x - lo
        } else {
            f64::INFINITY
        },
        from_hi: if hi.is_finite() {
            hi - x
        } else {
            f64::INFINITY
        },
    };
    let mut ev = Counter::new(f);
    let mut fold = |u: f64| -> Result<f64, QuadError> {
        let up = s + u;
        let u = up - s;
        if u <= 0.0 {
            return Ok(0.0);
        }
        Ok(ev.eval(at(up))? + ev.eval(at(s - u))?)
    };
    let level_sum = |k: usize| -> Result<(f64, usize), QuadError> {
        let mut s = 0.0;
        let mut n_eval = 0;
        if k == 0 {
            s += CENTER_WEIGHT * fold(half)?;
            n_eval += 2;
        }
        for n in &tables.finite[k] {
            let near = half * n.d;
            let far = w - near;
            s += n.w * (fold(near)? + fold(far)?);
            n_eval += 4;
        }
        Ok((s, n_eval))
    };
    let cost = |k: usize| 4 * tables.finite[k].len();
    drive(tables.max_level(), half, tol, level_sum, cost, None)
}

#[cfg(test)]
mod tests {
    use super::super::{IntegralSpec, Quadrature};
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn odd_about_the_pole() {
        let q = Quadrature::new();
        let spec = IntegralSpec::finite(0.0, 2.0).pole(1.0);
        let r = q
            .integrate_pv(&|p: Point| 1.0 / (p.x - 1.0), &spec, 1e-10)
            .unwrap();
        assert!(r.value.abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn half_line_with_singular_endpoint() {
        // PV ∫₀^∞ x^{a−1}/(x − 1) dx = −π cot(πa)
        let q = Quadrature::new();
        for (a, want) in [(0.5, 0.0), (0.25, -PI)] {
            let spec = IntegralSpec::half_line_up(0.0)
                .exponents(a - 1.0, -a)
                .pole(1.0);
            let f = move |p: Point| p.from_lo.powf(a - 1.0) / (p.x - 1.0);
            let r = q.integrate_pv(&f, &spec, 1e-10).unwrap();
            assert!((r.value - want).abs() < 1e-9, "a={a}: {r:?}");
        }
    }

    #[test]
    fn real_line_pole_at_origin() {
        // PV ∫ e^{−t/2}/(1 − e^{−t}) dt = π cot(π/2) = 0; the integrand
        // is 1/(2 sinh(t/2)), which stays finite far out
        let q = Quadrature::new();
        let spec = IntegralSpec::real_line().pole(0.0);
        let f = |p: Point| 0.5 / (0.5 * p.x).sinh();
        let r = q.integrate_pv(&f, &spec, 1e-10).unwrap();
        assert!(r.value.abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn two_poles() {
        // PV ∫₀³ dx/((x−1)(x−2)) = [ln|(x−2)/(x−1)|]₀³ = −2 ln 2
        let q = Quadrature::new();
        let spec = IntegralSpec::finite(0.0, 3.0).pole(2.0).pole(1.0);
        let f = |p: Point| 1.0 / ((p.x - 1.0) * (p.x - 2.0));
        let r = q.integrate_pv(&f, &spec, 1e-10).unwrap();
        assert!((r.value + 2.0 * 2f64.ln()).abs() < 1e-11, "{r:?}");
    }

    #[test]
    fn pole_too_close_to_endpoint() {
        let q = Quadrature::new();
        let spec = IntegralSpec::finite(0.0, 1.0).pole(1e-14);
        let r = q.integrate_pv(&|p: Point| 1.0 / (p.x - 1e-14), &spec, 1e-10);
        assert!(matches!(r, Err(QuadError::PoleTooClose { .. })));
    }
}

//! Differences of two beta integrands whose scale parameter drops out.

use super::prelude::*;

/// `scale·[s^{p−1}(1+s)^{−p} − (1+s)^{p−1}s^{−p}]`.
fn cot_difference(p: f64, s: f64, scale: f64) -> f64 {
    let (ls, l1s) = (s.ln(), s.ln_1p());
    if s < 1.0 {
        let first = ((p - 1.0) * ls - p * l1s).exp();
        let second = ((p - 1.0) * l1s - p * ls).exp();
        scale * (first - second)
    } else {
        // second = first·(1 + 1/s)^{2p−1}
        let first = ((p - 1.0) * ls - p * l1s).exp();
        -scale * first * ((2.0 * p - 1.0) * s.recip().ln_1p()).exp_m1()
    }
}

fn spec(v: &[f64]) -> IntegralSpec {
    let p = v[0];
    IntegralSpec::half_line_up(0.0).exponents(-p.max(1.0 - p), 0.0)
}

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.217",
        Group::H,
        "GR 3.217: ∫₀^∞ [b^p x^{p−1}(1+bx)^{−p} − (1+bx)^{p−1} b^{1−p} x^{−p}] dx = π cot pπ",
        &[P::open("p", 0.0, 1.0), P::open_closed("b", 0.0, 3.0)],
        &[],
        |v, pt| cot_difference(v[0], v[1] * pt.x, v[1]),
        spec,
        |v| finite(PI * cot_pi(v[0])),
    )
    .tolerance(ToleranceClass::Combined),
    IdentityRecord::new(
        "3.218",
        Group::H,
        "GR 3.218: ∫₀^∞ [x^{p−1}(a+x)^{−p} − (a+x)^{p−1} x^{−p}] dx = π cot pπ",
        &[P::open("p", 0.0, 1.0), P::open_closed("a", 0.0, 3.0)],
        &[],
        |v, pt| cot_difference(v[0], pt.x / v[1], v[1].recip()),
        spec,
        |v| finite(PI * cot_pi(v[0])),
    )
    .tolerance(ToleranceClass::Combined),
];

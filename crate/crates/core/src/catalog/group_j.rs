//! Odd moments of `cosh^{−μ}`, where symmetry fixes the value.

use super::prelude::*;

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.457.3",
        Group::J,
        "GR 3.457.3: ∫_{−∞}^∞ x (a²eˣ + e^{−x})^{−μ} dx = −B(μ/2, μ/2) ln a / (2a^μ)",
        &[
            P::open_closed("a", 0.3, 3.0),
            P::open_closed("mu", 0.5, 4.0),
        ],
        &[],
        |v, pt| {
            let (a, mu) = (v[0], v[1]);
            pt.x * (-mu * logaddexp(2.0 * a.ln() + pt.x, -pt.x)).exp()
        },
        |_| IntegralSpec::real_line(),
        |v| {
            let (a, mu) = (v[0], v[1]);
            finite(-beta(mu / 2.0, mu / 2.0)? * a.ln() / (2.0 * a.powf(mu)))
        },
    ),
    IdentityRecord::new(
        "eq-11.5",
        Group::J,
        "Odd first moment: ∫_{−∞}^∞ x cosh^{−μ} x dx = 0",
        &[P::open_closed("mu", 0.5, 4.0)],
        &[],
        |v, pt| pt.x * (-v[0] * ln_cosh(pt.x)).exp(),
        |_| IntegralSpec::real_line(),
        |_| Ok(0.0),
    )
    .abs_tol(1e-9),
    IdentityRecord::new(
        "4.321.1-damped",
        Group::J,
        "GR 4.321.1, damped so that it converges: ∫_{−∞}^∞ x ln(cosh x) cosh^{−μ} x dx = 0",
        &[P::open_closed("mu", 0.5, 4.0)],
        &[],
        |v, pt| {
            let lc = ln_cosh(pt.x);
            if lc == 0.0 {
                return 0.0;
            }
            // x·lc overflows long before the damping underflows
            let magnitude = (pt.x.abs().ln() + lc.ln() - v[0] * lc).exp();
            magnitude.copysign(pt.x)
        },
        |_| IntegralSpec::real_line(),
        |_| Ok(0.0),
    )
    .abs_tol(1e-9),
];

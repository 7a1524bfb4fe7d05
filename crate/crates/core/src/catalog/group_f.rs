//! Exponential substitutions `x = e^{−ct}` that move the defining integral
//! onto a half-line or the whole real line.

use super::prelude::*;

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.312.1",
        Group::F,
        "GR 3.312.1: ∫₀^∞ e^{−at}(1−e^{−ct})^{b−1} dt = (1/c) B(a/c, b)",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open_closed("c", 0.0, 3.0),
        ],
        &[],
        |v, pt| {
            let (a, b, c) = (v[0], v[1], v[2]);
            let t = pt.from_lo;
            (-a * t + (b - 1.0) * ln_one_minus_exp(-c * t)).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[1] - 1.0, 0.0),
        |v| finite(beta(v[0] / v[2], v[1])? / v[2]),
    ),
    IdentityRecord::new(
        "3.313.2",
        Group::F,
        "GR 3.313.2: ∫_{−∞}^∞ e^{−act}(1+e^{−ct})^{−a−b} dt = (1/c) B(a, b)",
        &[
            P::open_closed("a", 0.0, 2.0),
            P::open_closed("b", 0.0, 2.0),
            P::open_closed("c", 0.0, 2.0),
        ],
        &[],
        |v, pt| {
            let (a, b, c) = (v[0], v[1], v[2]);
            (-a * c * pt.x - (a + b) * softplus(-c * pt.x)).exp()
        },
        |_| IntegralSpec::real_line(),
        |v| finite(beta(v[0], v[1])? / v[2]),
    ),
    IdentityRecord::new(
        "3.314",
        Group::F,
        "GR 3.314: ∫_{−∞}^∞ e^{−μx}(e^{b/a}+e^{−x/a})^{−ν} dx = a e^{b(μ−ν/a)} B(aμ, ν−aμ)",
        &[
            P::open_closed("a", 0.3, 2.0),
            P::closed("b", -1.0, 1.0),
            P::open_closed("mu", 0.0, 4.0),
            P::open_closed("nu", 0.0, 4.0),
        ],
        &[
            rel("aμ ≥ 0.1", &["a", "mu"], |v| v[0] * v[2] >= 0.1),
            rel(
                "ν > aμ (with ν − aμ ≥ 0.1)",
                &["a", "mu", "nu"],
                |v| v[3] - v[0] * v[2] >= 0.1,
            ),
        ],
        |v, pt| {
            let (a, b, mu, nu) = (v[0], v[1], v[2], v[3]);
            (-mu * pt.x - nu * logaddexp(b / a, -pt.x / a)).exp()
        },
        |_| IntegralSpec::real_line(),
        |v| {
            let (a, b, mu, nu) = (v[0], v[1], v[2], v[3]);
            finite(a * (b * (mu - nu / a)).exp() * beta(a * mu, nu - a * mu)?)
        },
    ),
    IdentityRecord::new(
        "3.311.3",
        Group::F,
        "GR 3.311.3: ∫_{−∞}^∞ e^{−px}(1+e^{−qx})^{−1} dx = (π/q) csc(πp/q)",
        &[P::open_closed("p", 0.0, 3.0), P::open_closed("q", 0.0, 3.0)],
        &[rel("p < q (with q − p ≥ 0.1)", &["p", "q"], |v| {
            v[1] - v[0] >= 0.1
        })],
        |v, pt| (-v[0] * pt.x - softplus(-v[1] * pt.x)).exp(),
        |_| IntegralSpec::real_line(),
        |v| finite(PI / v[1] * csc_pi(v[0] / v[1])),
    ),
    IdentityRecord::new(
        "3.311.9",
        Group::F,
        "GR 3.311.9: ∫_{−∞}^∞ e^{−μx}(b+e^{−x})^{−1} dx = π b^{μ−1} csc μπ",
        &[P::open_closed("b", 0.0, 3.0), P::open("mu", 0.0, 1.0)],
        &[],
        |v, pt| (-v[1] * pt.x - logaddexp(v[0].ln(), -pt.x)).exp(),
        |_| IntegralSpec::real_line(),
        |v| finite(PI * v[0].powf(v[1] - 1.0) * csc_pi(v[1])),
    ),
];

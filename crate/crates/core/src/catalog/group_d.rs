//! Direct evaluations: shifted half-lines and small fixed powers.

use super::prelude::*;

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.221.1",
        Group::D,
        "GR 3.221.1: ∫_a^∞ (x−a)^{p−1}(x−b)^{−1} dx = π (a−b)^{p−1} csc πp, a > b",
        &[
            P::closed("a", -2.0, 3.0),
            P::closed("b", -2.0, 3.0),
            P::open("p", 0.0, 1.0),
        ],
        &[rel("a > b (with a − b ≥ 0.2)", &["a", "b"], |v| {
            v[0] - v[1] >= 0.2
        })],
        |v, pt| {
            let (a, b, p) = (v[0], v[1], v[2]);
            ((p - 1.0) * pt.from_lo.ln() - (pt.from_lo + (a - b)).ln()).exp()
        },
        |v| IntegralSpec::half_line_up(v[0]).exponents(v[2] - 1.0, -v[2]),
        |v| {
            let (a, b, p) = (v[0], v[1], v[2]);
            finite(PI * (a - b).powf(p - 1.0) * csc_pi(p))
        },
    ),
    IdentityRecord::new(
        "3.221.2",
        Group::D,
        "GR 3.221.2: ∫_{−∞}^a (a−x)^{p−1}(x−b)^{−1} dx = −π (b−a)^{p−1} csc πp, b > a",
        &[
            P::closed("a", -2.0, 3.0),
            P::closed("b", -2.0, 3.0),
            P::open("p", 0.0, 1.0),
        ],
        &[rel("b > a (with b − a ≥ 0.2)", &["a", "b"], |v| {
            v[1] - v[0] >= 0.2
        })],
        |v, pt| {
            let (a, b, p) = (v[0], v[1], v[2]);
            // x − b = −((a − x) + (b − a))
            -((p - 1.0) * pt.from_hi.ln() - (pt.from_hi + (b - a)).ln()).exp()
        },
        |v| IntegralSpec::half_line_down(v[0]).exponents(-v[2], v[2] - 1.0),
        |v| {
            let (a, b, p) = (v[0], v[1], v[2]);
            finite(-PI * (b - a).powf(p - 1.0) * csc_pi(p))
        },
    ),
    IdentityRecord::new(
        "eq-5.3",
        Group::D,
        "Shifted half-line integral: ∫₀^∞ x^a (1+x)^{−b} dx = B(a+1, b−a−1)",
        &[
            P::open_closed("a", -0.5, 2.0),
            P::open_closed("b", 0.0, 6.0),
        ],
        &[rel(
            "b > a + 1 (with b − a − 1 ≥ 0.2)",
            &["a", "b"],
            |v| v[1] - v[0] - 1.0 >= 0.2,
        )],
        |v, pt| (v[0] * pt.x.ln() - v[1] * pt.x.ln_1p()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0], v[1] - v[0] - 2.0),
        |v| beta(v[0] + 1.0, v[1] - v[0] - 1.0),
    ),
    IdentityRecord::new(
        "3.225.1",
        Group::D,
        "GR 3.225.1: ∫₁^∞ (t−1)^{p−1} t^{−2} dt = π(1−p) / sin pπ",
        &[P::open("p", 0.0, 2.0).excluding(&[1.0])],
        &[],
        |v, pt| ((v[0] - 1.0) * pt.from_lo.ln() - 2.0 * pt.x.ln()).exp(),
        |v| IntegralSpec::half_line_up(1.0).exponents(v[0] - 1.0, 1.0 - v[0]),
        |v| finite(PI * (1.0 - v[0]) * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.225.2",
        Group::D,
        "GR 3.225.2: ∫₁^∞ (t−1)^{1−p} t^{−3} dt = πp(1−p) / (2 sin pπ)",
        &[P::open("p", 0.0, 2.0).excluding(&[1.0])],
        &[],
        |v, pt| ((1.0 - v[0]) * pt.from_lo.ln() - 3.0 * pt.x.ln()).exp(),
        |v| IntegralSpec::half_line_up(1.0).exponents(1.0 - v[0], v[0]),
        |v| finite(PI * v[0] * (1.0 - v[0]) / 2.0 * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.225.3",
        Group::D,
        "GR 3.225.3: ∫₀^∞ x^p (1+x)^{−3} dx = p(1−p)π / (2 sin pπ)",
        &[P::open("p", 0.0, 2.0).excluding(&[1.0])],
        &[],
        |v, pt| (v[0] * pt.x.ln() - 3.0 * pt.x.ln_1p()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0], 1.0 - v[0]),
        |v| finite(PI * v[0] * (1.0 - v[0]) / 2.0 * csc_pi(v[0])),
    ),
];

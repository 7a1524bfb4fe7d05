//! The defining integral on `[0, 1]` and its first special cases.

use super::prelude::*;

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.191.3",
        Group::A,
        "GR 3.191.3: Euler's integral ∫₀¹ x^{a−1}(1−x)^{b−1} dx = B(a, b)",
        &[P::open_closed("a", 0.0, 5.0), P::open_closed("b", 0.0, 5.0)],
        &[],
        |v, pt| pt.from_lo.powf(v[0] - 1.0) * pt.from_hi.powf(v[1] - 1.0),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0] - 1.0, v[1] - 1.0),
        |v| beta(v[0], v[1]),
    ),
    IdentityRecord::new(
        "3.192.1",
        Group::A,
        "GR 3.192.1: ∫₀¹ x^p (1−x)^{−p} dx = B(p+1, 1−p) = pπ / sin pπ",
        &[P::open("p", 0.0, 1.0)],
        &[],
        |v, pt| (pt.from_lo / pt.from_hi).powf(v[0]),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0], -v[0]),
        |v| finite(v[0] * PI * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.192.2",
        Group::A,
        "GR 3.192.2: ∫₀¹ x^p (1−x)^{−p−1} dx = B(p+1, −p) = −π / sin pπ",
        &[P::open("p", -1.0, 0.0)],
        &[],
        |v, pt| pt.from_lo.powf(v[0]) * pt.from_hi.powf(-v[0] - 1.0),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0], -v[0] - 1.0),
        |v| finite(-PI * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.192.3",
        Group::A,
        "GR 3.192.3: ∫₀¹ (1−x)^p x^{−p−1} dx = B(−p, p+1) = −π / sin pπ",
        &[P::open("p", -1.0, 0.0)],
        &[],
        |v, pt| pt.from_hi.powf(v[0]) * pt.from_lo.powf(-v[0] - 1.0),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(-v[0] - 1.0, v[0]),
        |v| finite(-PI * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.192.4",
        Group::A,
        "GR 3.192.4: ∫₁^∞ (x−1)^{p−1/2} x^{−1} dx = π / cos pπ",
        &[P::open("p", -0.5, 0.5)],
        &[],
        |v, pt| ((v[0] - 0.5) * pt.from_lo.ln() - pt.x.ln()).exp(),
        |v| IntegralSpec::half_line_up(1.0).exponents(v[0] - 0.5, -0.5 - v[0]),
        |v| finite(PI / cos_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.226.1",
        Group::A,
        "GR 3.226.1: ∫₀¹ xⁿ (1−x)^{−1/2} dx = Γ(n+1)√π / Γ(n+3/2)",
        &[P::int("n", 0, 6)],
        &[],
        |v, pt| pt.x.powi(v[0] as i32) / pt.from_hi.sqrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0], -0.5),
        |v| finite(gamma(v[0] + 1.0)? * PI.sqrt() / gamma(v[0] + 1.5)?),
    ),
    IdentityRecord::new(
        "3.226.2",
        Group::A,
        "GR 3.226.2: ∫₀¹ x^{n−1/2} (1−x)^{−1/2} dx = Γ(n+1/2)√π / Γ(n+1)",
        &[P::int("n", 0, 6)],
        &[],
        |v, pt| pt.from_lo.powf(v[0] - 0.5) / pt.from_hi.sqrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0] - 0.5, -0.5),
        |v| finite(gamma(v[0] + 0.5)? * PI.sqrt() / gamma(v[0] + 1.0)?),
    ),
];

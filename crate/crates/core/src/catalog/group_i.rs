//! Parameter derivatives of the reflection-type integrals.

use super::prelude::*;

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "eq-10.4",
        Group::I,
        "Derivative in a of ∫₀^∞ t^{a−1}(1+t)^{−1} dt: ∫₀^∞ t^{a−1} ln t (1+t)^{−1} dt = −π² cos πa / sin² πa",
        &[P::open("a", 0.0, 1.0)],
        &[],
        |v, pt| {
            let l = pt.x.ln();
            l * ((v[0] - 1.0) * l - pt.x.ln_1p()).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, -v[0]),
        |v| {
            let csc = csc_pi(v[0]);
            finite(-PI * PI * cos_pi(v[0]) * csc * csc)
        },
    ),
    IdentityRecord::new(
        "4.251.1",
        Group::I,
        "GR 4.251.1: ∫₀^∞ x^{a−1} ln x (x+b)^{−1} dx = π b^{a−1} csc πa (ln b − π cot πa)",
        &[P::open("a", 0.0, 1.0), P::open_closed("b", 0.0, 4.0)],
        &[],
        |v, pt| {
            let l = pt.x.ln();
            l * ((v[0] - 1.0) * l - logaddexp(l, v[1].ln())).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, -v[0]),
        |v| {
            let (a, b) = (v[0], v[1]);
            finite(PI * b.powf(a - 1.0) * csc_pi(a) * (b.ln() - PI * cot_pi(a)))
        },
    ),
];

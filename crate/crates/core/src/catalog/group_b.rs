//! Elementary changes of variable that keep the interval finite, plus the
//! reciprocal and power substitutions onto `[1, ∞)`.

use super::prelude::*;

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.191.1",
        Group::B,
        "GR 3.191.1: ∫₀^u t^{a−1}(u−t)^{b−1} dt = u^{a+b−1} B(a, b)",
        &[
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("a", 0.0, 4.0),
            P::open_closed("b", 0.0, 4.0),
        ],
        &[],
        |v, pt| pt.from_lo.powf(v[1] - 1.0) * pt.from_hi.powf(v[2] - 1.0),
        |v| IntegralSpec::finite(0.0, v[0]).exponents(v[1] - 1.0, v[2] - 1.0),
        |v| finite(v[0].powf(v[1] + v[2] - 1.0) * beta(v[1], v[2])?),
    ),
    IdentityRecord::new(
        "3.196.3",
        Group::B,
        "GR 3.196.3: ∫_u^v (t−u)^{a−1}(v−t)^{b−1} dt = (v−u)^{a+b−1} B(a, b)",
        &[
            P::closed("u", -2.0, 3.0),
            P::closed("v", -2.0, 3.0),
            P::open_closed("a", 0.0, 4.0),
            P::open_closed("b", 0.0, 4.0),
        ],
        &[rel("u < v (with v − u ≥ 0.2)", &["u", "v"], |v| {
            v[1] - v[0] >= 0.2
        })],
        |v, pt| pt.from_lo.powf(v[2] - 1.0) * pt.from_hi.powf(v[3] - 1.0),
        |v| IntegralSpec::finite(v[0], v[1]).exponents(v[2] - 1.0, v[3] - 1.0),
        |v| finite((v[1] - v[0]).powf(v[2] + v[3] - 1.0) * beta(v[2], v[3])?),
    ),
    IdentityRecord::new(
        "3.193",
        Group::B,
        "GR 3.193: ∫₀ⁿ x^{ν−1}(n−x)ⁿ dx = n^{ν+n} n! / (ν(ν+1)⋯(ν+n))",
        &[P::open_closed("nu", 0.0, 3.0), P::int("n", 1, 5)],
        &[],
        |v, pt| pt.from_lo.powf(v[0] - 1.0) * pt.from_hi.powi(v[1] as i32),
        |v| IntegralSpec::finite(0.0, v[1]).exponents(v[0] - 1.0, v[1]),
        |v| {
            let (nu, n) = (v[0], v[1] as u32);
            let rising: f64 = (0..=n).map(|k| nu + k as f64).product();
            finite(v[1].powf(nu + v[1]) * factorial(n) / rising)
        },
    ),
    IdentityRecord::new(
        "3.249.7",
        Group::B,
        "GR 3.249.7: ∫₀¹ (1−x^a)^{b−1} dx = (1/a) B(1/a, b)",
        &[P::open_closed("a", 0.0, 4.0), P::open_closed("b", 0.0, 4.0)],
        &[],
        |v, pt| ((v[1] - 1.0) * ln_one_minus_pow(pt, v[0])).exp(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(0.0, v[1] - 1.0),
        |v| finite(beta(1.0 / v[0], v[1])? / v[0]),
    ),
    IdentityRecord::new(
        "3.249.5",
        Group::B,
        "GR 3.249.5: ∫₀¹ (1−x²)^{b−1} dx = ½ B(½, b) = 2^{2b−2} B(b, b)",
        &[P::open_closed("b", 0.0, 4.0)],
        &[],
        |v, pt| (pt.from_hi * (1.0 + pt.x)).powf(v[0] - 1.0),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(0.0, v[0] - 1.0),
        |v| finite(0.5 * beta(0.5, v[0])?),
    ),
    IdentityRecord::new(
        "3.251.1",
        Group::B,
        "GR 3.251.1: ∫₀¹ x^{c−1}(1−x^a)^{b−1} dx = (1/a) B(c/a, b)",
        &[
            P::open_closed("a", 0.0, 4.0),
            P::open_closed("b", 0.0, 4.0),
            P::open_closed("c", 0.0, 4.0),
        ],
        &[],
        |v, pt| ((v[2] - 1.0) * pt.from_lo.ln() + (v[1] - 1.0) * ln_one_minus_pow(pt, v[0])).exp(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[2] - 1.0, v[1] - 1.0),
        |v| finite(beta(v[2] / v[0], v[1])? / v[0]),
    ),
    IdentityRecord::new(
        "eq-3.7",
        Group::B,
        "Scaled form of the even beta integral: ∫₀^c (c²−t²)^{b−1} dt = ½ c^{2b−1} B(½, b)",
        &[P::open_closed("c", 0.0, 3.0), P::open_closed("b", 0.0, 4.0)],
        &[],
        |v, pt| (pt.from_hi * (v[0] + pt.x)).powf(v[1] - 1.0),
        |v| IntegralSpec::finite(0.0, v[0]).exponents(0.0, v[1] - 1.0),
        |v| finite(0.5 * v[0].powf(2.0 * v[1] - 1.0) * beta(0.5, v[1])?),
    ),
    IdentityRecord::new(
        "3.249.2",
        Group::B,
        "GR 3.249.2: ∫₀^c (c²−t²)^{n−1/2} dt = π c^{2n} C(2n, n) / 2^{2n+1}",
        &[P::open_closed("c", 0.0, 3.0), P::int("n", 0, 5)],
        &[],
        |v, pt| (pt.from_hi * (v[0] + pt.x)).powf(v[1] - 0.5),
        |v| IntegralSpec::finite(0.0, v[0]).exponents(0.0, v[1] - 0.5),
        |v| {
            let n = v[1] as u32;
            finite(PI * v[0].powi(2 * n as i32) * binomial(2 * n, n) / 2f64.powi(2 * n as i32 + 1))
        },
    ),
    IdentityRecord::new(
        "eq-3.10",
        Group::B,
        "Reciprocal form of Euler's integral: ∫₁^∞ t^{−a−b}(t−1)^{b−1} dt = B(a, b)",
        &[P::open_closed("a", 0.0, 3.0), P::open_closed("b", 0.0, 3.0)],
        &[],
        |v, pt| (-(v[0] + v[1]) * pt.x.ln() + (v[1] - 1.0) * pt.from_lo.ln()).exp(),
        |v| IntegralSpec::half_line_up(1.0).exponents(v[1] - 1.0, v[0] - 1.0),
        |v| beta(v[0], v[1]),
    ),
    IdentityRecord::new(
        "3.251.3",
        Group::B,
        "GR 3.251.3: ∫₁^∞ x^{μ−1}(x^p−1)^{ν−1} dx = (1/p) B(1−ν−μ/p, ν)",
        &[
            P::open_closed("p", 0.0, 3.0),
            P::open("nu", 0.0, 1.0),
            P::closed("mu", -2.0, 2.0),
        ],
        &[rel(
            "1 − ν − μ/p > 0 (with p(1 − ν) − μ ≥ 0.05)",
            &["p", "nu", "mu"],
            |v| v[0] * (1.0 - v[1]) - v[2] >= 0.05,
        )],
        |v, pt| {
            let (p, nu, mu) = (v[0], v[1], v[2]);
            let ln_x = pt.from_lo.ln_1p();
            ((mu - 1.0) * ln_x + (nu - 1.0) * ln_expm1(p * ln_x)).exp()
        },
        |v| {
            let tail = v[0] * (1.0 - v[1]) - v[2] - 1.0;
            IntegralSpec::half_line_up(1.0).exponents(v[1] - 1.0, tail)
        },
        |v| finite(beta(1.0 - v[1] - v[2] / v[0], v[1])? / v[0]),
    ),
];

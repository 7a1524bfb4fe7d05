//! Specializations of the five-parameter master formula
//! `∫₀^∞ t^{ac−1}(v + u t^c)^{−a−b} dt = B(a, b) / (c u^a v^b)`.

use super::prelude::*;

fn ln_x(pt: Point) -> f64 {
    pt.x.ln()
}

/// `1 − x²` as `(1 − x)(1 + x)`.
fn one_minus_square(pt: Point) -> f64 {
    pt.from_hi * (1.0 + pt.x)
}

/// `(1 − x)(1 + x + x²) = 1 − x³`.
fn one_minus_cube(pt: Point) -> f64 {
    pt.from_hi * (1.0 + pt.x + pt.x * pt.x)
}

fn m_lt_n(v: &[f64]) -> bool {
    v[0] < v[1]
}

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "3.241.4",
        Group::E,
        "GR 3.241.4: ∫₀^∞ t^{ac−1}(v+ut^c)^{−a−b} dt = B(a, b) / (c u^a v^b)",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open_closed("c", 0.0, 3.0),
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("v", 0.0, 3.0),
        ],
        &[
            rel("ac ≥ 0.05", &["a", "c"], |v| v[0] * v[2] >= 0.05),
            rel("bc ≥ 0.05", &["b", "c"], |v| v[1] * v[2] >= 0.05),
        ],
        |v, pt| {
            let (a, b, c, u, w) = (v[0], v[1], v[2], v[3], v[4]);
            let l = ln_x(pt);
            ((a * c - 1.0) * l - (a + b) * logaddexp(w.ln(), u.ln() + c * l)).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] * v[2] - 1.0, v[1] * v[2] - 1.0),
        |v| {
            let (a, b, c, u, w) = (v[0], v[1], v[2], v[3], v[4]);
            finite(beta(a, b)? / (c * u.powf(a) * w.powf(b)))
        },
    ),
    IdentityRecord::new(
        "3.194.6",
        Group::E,
        "GR 3.194.6: ∫₀^∞ t^{a−1}(1+ut)^{−2} dt = (1−a)π / (u^a sin πa)",
        &[
            P::open("a", 0.0, 2.0).excluding(&[1.0]),
            P::open_closed("u", 0.0, 3.0),
        ],
        &[],
        |v, pt| ((v[0] - 1.0) * ln_x(pt) - 2.0 * (v[1] * pt.x).ln_1p()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, 1.0 - v[0]),
        |v| finite((1.0 - v[0]) * PI / v[1].powf(v[0]) * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.241.5",
        Group::E,
        "GR 3.241.5: ∫₀^∞ x^{p−1}(1+x^q)^{−2} dx = (q−p)π / (q² sin(πp/q))",
        &[P::open_closed("p", 0.0, 4.0), P::open_closed("q", 0.0, 3.0)],
        &[
            rel("p < 2q (with 2q − p ≥ 0.1)", &["p", "q"], |v| {
                2.0 * v[1] - v[0] >= 0.1
            }),
            rel("p ≠ q (with |p − q| ≥ 0.1)", &["p", "q"], |v| {
                (v[0] - v[1]).abs() >= 0.1
            }),
        ],
        |v, pt| {
            let l = ln_x(pt);
            ((v[0] - 1.0) * l - 2.0 * softplus(v[1] * l)).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, 2.0 * v[1] - v[0] - 1.0),
        |v| {
            let (p, q) = (v[0], v[1]);
            finite((q - p) / (q * q) * PI * csc_pi(p / q))
        },
    ),
    IdentityRecord::new(
        "3.194.7",
        Group::E,
        "GR 3.194.7: ∫₀^∞ t^m (v+ut)^{−n−1/2} dt = 2^{2m+2} m! n! (2n−2m−2)! v^{m−n+1/2} / ((n−m−1)! (2n)! u^{m+1})",
        &[
            P::int("m", 0, 4),
            P::int("n", 1, 5),
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("v", 0.0, 3.0),
        ],
        &[rel("m < n", &["m", "n"], m_lt_n)],
        |v, pt| {
            let (m, n, u, w) = (v[0], v[1], v[2], v[3]);
            (m * ln_x(pt) - (n + 0.5) * (w + u * pt.x).ln()).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0], v[1] - v[0] - 1.5),
        |v| {
            let (m, n) = (v[0] as u32, v[1] as u32);
            let (u, w) = (v[2], v[3]);
            let num = factorial(m) * factorial(n) * factorial(2 * n - 2 * m - 2);
            let den = factorial(n - m - 1) * factorial(2 * n);
            let powers = 2f64.powi(2 * m as i32 + 2) * w.powf(v[0] - v[1] + 0.5)
                / u.powi(m as i32 + 1);
            finite(num / den * powers)
        },
    ),
    IdentityRecord::new(
        "3.248.1",
        Group::E,
        "GR 3.248.1: ∫₀^∞ t^{p−1}(1+t^c)^{−1/2} dt = (1/c) B(p/c, 1/2 − p/c)",
        &[P::open_closed("p", 0.0, 3.0), P::open_closed("c", 0.0, 4.0)],
        &[rel("p < c/2 (with c/2 − p ≥ 0.1)", &["p", "c"], |v| {
            v[1] / 2.0 - v[0] >= 0.1
        })],
        |v, pt| {
            let l = ln_x(pt);
            ((v[0] - 1.0) * l - 0.5 * softplus(v[1] * l)).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, v[1] / 2.0 - v[0] - 1.0),
        |v| {
            let (p, c) = (v[0], v[1]);
            finite(beta(p / c, 0.5 - p / c)? / c)
        },
    ),
    IdentityRecord::new(
        "3.249.1",
        Group::E,
        "GR 3.249.1: ∫₀^∞ (v²+t²)^{−n} dt = √π Γ(n−1/2) / (2 Γ(n) v^{2n−1})",
        &[P::open_closed("n", 0.6, 5.0), P::open_closed("v", 0.0, 3.0)],
        &[],
        |v, pt| (-v[0] * logaddexp(2.0 * v[1].ln(), 2.0 * ln_x(pt))).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(0.0, 2.0 * v[0] - 2.0),
        |v| {
            let (n, w) = (v[0], v[1]);
            finite(PI.sqrt() * gamma(n - 0.5)? / (2.0 * gamma(n)? * w.powf(2.0 * n - 1.0)))
        },
    ),
    IdentityRecord::new(
        "3.249.8-general",
        Group::E,
        "GR 3.249.8, general exponent: ∫₀^∞ (1+ut²)^{−n/2} dt = √π Γ((n−1)/2) / (2√u Γ(n/2))",
        &[P::open_closed("n", 1.2, 6.0), P::open_closed("u", 0.0, 3.0)],
        &[],
        |v, pt| (-0.5 * v[0] * softplus(v[1].ln() + 2.0 * ln_x(pt))).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(0.0, v[0] - 2.0),
        |v| {
            let (n, u) = (v[0], v[1]);
            finite(PI.sqrt() / (2.0 * u.sqrt()) * gamma((n - 1.0) / 2.0)? / gamma(n / 2.0)?)
        },
    ),
    IdentityRecord::new(
        "3.251.2",
        Group::E,
        "GR 3.251.2: ∫₀^∞ t^{μ−1}(1+t²)^{ν−1} dt = ½ B(μ/2, 1−ν−μ/2)",
        &[P::open_closed("mu", 0.0, 3.0), P::open("nu", -2.0, 1.0)],
        &[rel("ν + μ/2 < 1 (with 1 − ν − μ/2 ≥ 0.1)", &["mu", "nu"], |v| {
            1.0 - v[1] - v[0] / 2.0 >= 0.1
        })],
        |v, pt| {
            let l = ln_x(pt);
            ((v[0] - 1.0) * l - (1.0 - v[1]) * softplus(2.0 * l)).exp()
        },
        |v| {
            let (mu, nu) = (v[0], v[1]);
            IntegralSpec::half_line_up(0.0).exponents(mu - 1.0, 2.0 * (1.0 - nu) - mu - 1.0)
        },
        |v| finite(0.5 * beta(v[0] / 2.0, 1.0 - v[1] - v[0] / 2.0)?),
    ),
    IdentityRecord::new(
        "3.251.4",
        Group::E,
        "GR 3.251.4: ∫₀^∞ t^{2m}(v+ut²)^{−n−1} dt = π (2m)! (2n−2m)! / (2^{2n+1} m! (n−m)! n! u^{m+1/2} v^{n−m+1/2})",
        &[
            P::int("m", 0, 4),
            P::int("n", 1, 5),
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("v", 0.0, 3.0),
        ],
        &[rel("m < n", &["m", "n"], m_lt_n)],
        |v, pt| {
            let (m, n, u, w) = (v[0], v[1], v[2], v[3]);
            let l = ln_x(pt);
            (2.0 * m * l - (n + 1.0) * logaddexp(w.ln(), u.ln() + 2.0 * l)).exp()
        },
        |v| {
            let (m, n) = (v[0], v[1]);
            IntegralSpec::half_line_up(0.0).exponents(2.0 * m, 2.0 * n - 2.0 * m)
        },
        |v| {
            let (m, n) = (v[0] as u32, v[1] as u32);
            let (u, w) = (v[2], v[3]);
            let num = PI * factorial(2 * m) * factorial(2 * n - 2 * m);
            let den = 2f64.powi(2 * n as i32 + 1)
                * factorial(m)
                * factorial(n - m)
                * factorial(n)
                * u.powf(v[0] + 0.5)
                * w.powf(v[1] - v[0] + 0.5);
            finite(num / den)
        },
    ),
    IdentityRecord::new(
        "3.251.5",
        Group::E,
        "GR 3.251.5: ∫₀^∞ t^{2m+1}(v+ut²)^{−n−1} dt = m! (n−m−1)! / (2 n! u^{m+1} v^{n−m})",
        &[
            P::int("m", 0, 4),
            P::int("n", 1, 5),
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("v", 0.0, 3.0),
        ],
        &[rel("m < n", &["m", "n"], m_lt_n)],
        |v, pt| {
            let (m, n, u, w) = (v[0], v[1], v[2], v[3]);
            let l = ln_x(pt);
            ((2.0 * m + 1.0) * l - (n + 1.0) * logaddexp(w.ln(), u.ln() + 2.0 * l)).exp()
        },
        |v| {
            let (m, n) = (v[0], v[1]);
            IntegralSpec::half_line_up(0.0).exponents(2.0 * m + 1.0, 2.0 * n - 2.0 * m - 1.0)
        },
        |v| {
            let (m, n) = (v[0] as u32, v[1] as u32);
            let (u, w) = (v[2], v[3]);
            let den = 2.0 * factorial(n) * u.powi(m as i32 + 1) * w.powi((n - m) as i32);
            finite(factorial(m) * factorial(n - m - 1) / den)
        },
    ),
    IdentityRecord::new(
        "eq-6.21",
        Group::E,
        "Power substitution on the unit interval: ∫₀¹ t^{aq−1}(1−t^q)^{b−1} dt = (1/q) B(a, b)",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open_closed("q", 0.0, 3.0),
        ],
        &[rel("aq ≥ 0.05", &["a", "q"], |v| v[0] * v[2] >= 0.05)],
        |v, pt| {
            let (a, b, q) = (v[0], v[1], v[2]);
            ((a * q - 1.0) * ln_unit(pt) + (b - 1.0) * ln_one_minus_pow(pt, q)).exp()
        },
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0] * v[2] - 1.0, v[1] - 1.0),
        |v| finite(beta(v[0], v[1])? / v[2]),
    ),
    IdentityRecord::new(
        "3.251.8",
        Group::E,
        "GR 3.251.8: ∫₀¹ t^{p+q−1}(1−t^q)^{−p/q} dt = (pπ/q²) csc(pπ/q)",
        &[P::open_closed("p", 0.0, 3.0), P::open_closed("q", 0.0, 3.0)],
        &[rel("p < q (with 1 − p/q ≥ 0.05)", &["p", "q"], |v| {
            1.0 - v[0] / v[1] >= 0.05
        })],
        |v, pt| {
            let (p, q) = (v[0], v[1]);
            ((p + q - 1.0) * ln_unit(pt) - p / q * ln_one_minus_pow(pt, q)).exp()
        },
        |v| {
            let (p, q) = (v[0], v[1]);
            IntegralSpec::finite(0.0, 1.0).exponents(p + q - 1.0, -p / q)
        },
        |v| {
            let (p, q) = (v[0], v[1]);
            finite(p * PI / (q * q) * csc_pi(p / q))
        },
    ),
    IdentityRecord::new(
        "3.251.9",
        Group::E,
        "GR 3.251.9: ∫₀¹ x^{q/p−1}(1−x^q)^{−1/p} dx = (π/q) csc(π/p)",
        &[P::open_closed("p", 1.2, 5.0), P::open_closed("q", 0.0, 3.0)],
        &[rel("q/p ≥ 0.05", &["p", "q"], |v| v[1] / v[0] >= 0.05)],
        |v, pt| {
            let (p, q) = (v[0], v[1]);
            ((q / p - 1.0) * ln_unit(pt) - ln_one_minus_pow(pt, q) / p).exp()
        },
        |v| {
            let (p, q) = (v[0], v[1]);
            IntegralSpec::finite(0.0, 1.0).exponents(q / p - 1.0, -1.0 / p)
        },
        |v| finite(PI / v[1] * csc_pi(1.0 / v[0])),
    ),
    IdentityRecord::new(
        "3.251.10",
        Group::E,
        "GR 3.251.10: ∫₀¹ x^{p−1}(1−x^q)^{−p/q} dx = (π/q) csc(pπ/q)",
        &[P::open_closed("p", 0.0, 3.0), P::open_closed("q", 0.0, 3.0)],
        &[rel("p < q (with 1 − p/q ≥ 0.05)", &["p", "q"], |v| {
            1.0 - v[0] / v[1] >= 0.05
        })],
        |v, pt| {
            let (p, q) = (v[0], v[1]);
            ((p - 1.0) * ln_unit(pt) - p / q * ln_one_minus_pow(pt, q)).exp()
        },
        |v| {
            let (p, q) = (v[0], v[1]);
            IntegralSpec::finite(0.0, 1.0).exponents(p - 1.0, -p / q)
        },
        |v| finite(PI / v[1] * csc_pi(v[0] / v[1])),
    ),
    IdentityRecord::new(
        "3.251.11",
        Group::E,
        "GR 3.251.11: ∫₀^∞ t^{r−1}(1+ut^c)^{−ν} dt = B(r/c, ν − r/c) / (c u^{r/c})",
        &[
            P::open_closed("r", 0.0, 3.0),
            P::open_closed("c", 0.0, 3.0),
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("nu", 0.0, 3.0),
        ],
        &[rel("r < cν (with cν − r ≥ 0.1)", &["r", "c", "nu"], |v| {
            v[1] * v[3] - v[0] >= 0.1
        })],
        |v, pt| {
            let (r, c, u, nu) = (v[0], v[1], v[2], v[3]);
            let l = ln_x(pt);
            ((r - 1.0) * l - nu * softplus(u.ln() + c * l)).exp()
        },
        |v| {
            let (r, c, nu) = (v[0], v[1], v[3]);
            IntegralSpec::half_line_up(0.0).exponents(r - 1.0, c * nu - r - 1.0)
        },
        |v| {
            let (r, c, u, nu) = (v[0], v[1], v[2], v[3]);
            finite(beta(r / c, nu - r / c)? / (c * u.powf(r / c)))
        },
    ),
    IdentityRecord::new(
        "eq-6.29",
        Group::E,
        "Master formula on the unit interval: ∫₀¹ t^{cq−m}(1−t^q)^{−1/q} dt = (1/q) B(c + (1−m)/q, 1 − 1/q)",
        &[
            P::open_closed("q", 1.0, 4.0),
            P::open_closed("c", 0.0, 3.0),
            P::int("m", 0, 4),
        ],
        &[rel(
            "c + (1 − m)/q > 0 (with c + (1 − m)/q ≥ 0.05)",
            &["q", "c", "m"],
            |v| v[1] + (1.0 - v[2]) / v[0] >= 0.05,
        )],
        |v, pt| {
            let (q, c, m) = (v[0], v[1], v[2]);
            ((c * q - m) * ln_unit(pt) - ln_one_minus_pow(pt, q) / q).exp()
        },
        |v| {
            let (q, c, m) = (v[0], v[1], v[2]);
            IntegralSpec::finite(0.0, 1.0).exponents(c * q - m, -1.0 / q)
        },
        |v| {
            let (q, c, m) = (v[0], v[1], v[2]);
            finite(beta(c + (1.0 - m) / q, 1.0 - 1.0 / q)? / q)
        },
    ),
    IdentityRecord::new(
        "3.248.2",
        Group::E,
        "GR 3.248.2: ∫₀¹ t^{2n+1}(1−t²)^{−1/2} dt = 2^{2n} (n!)² / (2n+1)!",
        &[P::int("n", 0, 6)],
        &[],
        |v, pt| pt.x.powi(2 * v[0] as i32 + 1) / one_minus_square(pt).sqrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(2.0 * v[0] + 1.0, -0.5),
        |v| {
            let n = v[0] as u32;
            finite(2f64.powi(2 * n as i32) * factorial(n).powi(2) / factorial(2 * n + 1))
        },
    ),
    IdentityRecord::new(
        "3.248.3",
        Group::E,
        "GR 3.248.3: ∫₀¹ t^{2n}(1−t²)^{−1/2} dt = π C(2n, n) / 2^{2n+1}",
        &[P::int("n", 0, 6)],
        &[],
        |v, pt| pt.x.powi(2 * v[0] as i32) / one_minus_square(pt).sqrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(2.0 * v[0], -0.5),
        |v| {
            let n = v[0] as u32;
            finite(PI * binomial(2 * n, n) / 2f64.powi(2 * n as i32 + 1))
        },
    ),
    IdentityRecord::new(
        "3.267.1",
        Group::E,
        "GR 3.267.1: ∫₀¹ t^{3n}(1−t³)^{−1/3} dt = 2π Γ(n+1/3) / (3√3 Γ(1/3) Γ(n+1))",
        &[P::int("n", 0, 6)],
        &[],
        |v, pt| pt.x.powi(3 * v[0] as i32) / one_minus_cube(pt).cbrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(3.0 * v[0], -1.0 / 3.0),
        |v| {
            let n = v[0];
            let third = 1.0 / 3.0;
            finite(
                2.0 * PI / (3.0 * 3f64.sqrt()) * gamma(n + third)?
                    / (gamma(third)? * gamma(n + 1.0)?),
            )
        },
    ),
    IdentityRecord::new(
        "3.267.2",
        Group::E,
        "GR 3.267.2: ∫₀¹ t^{3n−1}(1−t³)^{−1/3} dt = (n−1)! Γ(2/3) / (3 Γ(n+2/3))",
        &[P::int("n", 1, 6)],
        &[],
        |v, pt| pt.x.powi(3 * v[0] as i32 - 1) / one_minus_cube(pt).cbrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(3.0 * v[0] - 1.0, -1.0 / 3.0),
        |v| {
            let n = v[0];
            let two_thirds = 2.0 / 3.0;
            finite(factorial(n as u32 - 1) * gamma(two_thirds)? / (3.0 * gamma(n + two_thirds)?))
        },
    ),
    IdentityRecord::new(
        "3.267.3",
        Group::E,
        "GR 3.267.3: ∫₀¹ t^{3n−2}(1−t³)^{−1/3} dt = Γ(n−1/3) Γ(2/3) / (3 Γ(n+1/3))",
        &[P::int("n", 1, 6)],
        &[],
        |v, pt| pt.x.powi(3 * v[0] as i32 - 2) / one_minus_cube(pt).cbrt(),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(3.0 * v[0] - 2.0, -1.0 / 3.0),
        |v| {
            let n = v[0];
            let (third, two_thirds) = (1.0 / 3.0, 2.0 / 3.0);
            finite(gamma(n - third)? * gamma(two_thirds)? / (3.0 * gamma(n + third)?))
        },
    ),
];

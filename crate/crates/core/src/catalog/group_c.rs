//! The half-line form `∫₀^∞ t^{a−1}(1+t)^{−a−b} dt` and what follows from
//! it, including the principal values obtained for a negative shift.

use super::prelude::*;

fn ln_x(pt: Point) -> f64 {
    pt.x.ln()
}

/// `e^{−μt}/(e^{−t} + c)` for `c = −k < 0`, written around the pole
/// `t* = −ln k` as `e^{−μt}/(k·expm1(−(t − t*)))`.
fn shifted_exponential_pv(mu: f64, k: f64, t: f64) -> f64 {
    let t_star = -k.ln();
    let u = t - t_star;
    if u >= 0.0 {
        (-mu * t).exp() / (k * (-u).exp_m1())
    } else {
        -((1.0 - mu) * t - t_star).exp() / (k * u.exp_m1())
    }
}

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "eq-4.1",
        Group::C,
        "Half-line form of the beta integral: ∫₀^∞ t^{a−1}(1+t)^{−a−b} dt = B(a, b)",
        &[P::open_closed("a", 0.0, 3.0), P::open_closed("b", 0.0, 3.0)],
        &[],
        |v, pt| ((v[0] - 1.0) * ln_x(pt) - (v[0] + v[1]) * pt.x.ln_1p()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, v[1] - 1.0),
        |v| beta(v[0], v[1]),
    ),
    IdentityRecord::new(
        "3.194.3",
        Group::C,
        "GR 3.194.3: ∫₀^∞ x^{a−1}(1+cx)^{−a−b} dx = c^{−a} B(a, b)",
        &[
            P::open_closed("c", 0.0, 4.0),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
        ],
        &[],
        |v, pt| ((v[1] - 1.0) * ln_x(pt) - (v[1] + v[2]) * (v[0] * pt.x).ln_1p()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[1] - 1.0, v[2] - 1.0),
        |v| finite(v[0].powf(-v[1]) * beta(v[1], v[2])?),
    ),
    IdentityRecord::new(
        "eq-4.3",
        Group::C,
        "Euler's reflection integral: ∫₀^∞ t^{a−1}(1+t)^{−1} dt = π / sin πa",
        &[P::open("a", 0.0, 1.0)],
        &[],
        |v, pt| ((v[0] - 1.0) * ln_x(pt) - pt.x.ln_1p()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, -v[0]),
        |v| finite(PI * csc_pi(v[0])),
    ),
    IdentityRecord::new(
        "3.222.2",
        Group::C,
        "GR 3.222.2 (c > 0): ∫₀^∞ x^{a−1}(x+c)^{−1} dx = π c^{a−1} / sin πa",
        &[P::open_closed("c", 0.0, 4.0), P::open("a", 0.0, 1.0)],
        &[],
        |v, pt| ((v[1] - 1.0) * ln_x(pt) - (pt.x + v[0]).ln()).exp(),
        |v| IntegralSpec::half_line_up(0.0).exponents(v[1] - 1.0, -v[1]),
        |v| finite(PI * csc_pi(v[1]) * v[0].powf(v[1] - 1.0)),
    ),
    IdentityRecord::new(
        "eq-4.10",
        Group::C,
        "Principal value for a negative shift: PV ∫₀^∞ x^{a−1}(x+c)^{−1} dx = −π cot(πa) (−c)^{a−1}, c < 0",
        &[P::closed("c", -3.0, -0.2), P::open("a", 0.0, 1.0)],
        &[],
        |v, pt| ((v[1] - 1.0) * ln_x(pt)).exp() / (pt.x - (-v[0])),
        |v| {
            IntegralSpec::half_line_up(0.0)
                .exponents(v[1] - 1.0, -v[1])
                .pole(-v[0])
        },
        |v| finite(-PI * cot_pi(v[1]) * (-v[0]).powf(v[1] - 1.0)),
    )
    .tolerance(ToleranceClass::PrincipalValue),
    IdentityRecord::new(
        "eq-4.11",
        Group::C,
        "Exponential principal value: PV ∫ e^{−μt}(e^{−t}+c)^{−1} dt over ℝ = −π cot(μπ) (−c)^{μ−1}, c < 0",
        &[P::open("mu", 0.0, 1.0), P::closed("c", -3.0, -0.2)],
        &[],
        |v, pt| shifted_exponential_pv(v[0], -v[1], pt.x),
        |v| IntegralSpec::real_line().pole(-(-v[1]).ln()),
        |v| finite(-PI * cot_pi(v[0]) * (-v[1]).powf(v[0] - 1.0)),
    )
    .tolerance(ToleranceClass::PrincipalValue),
    IdentityRecord::new(
        "3.313.1",
        Group::C,
        "GR 3.313.1: PV ∫ e^{−μt}(1−e^{−t})^{−1} dt over ℝ = π cot μπ",
        &[P::open("mu", 0.0, 1.0)],
        &[],
        |v, pt| -shifted_exponential_pv(v[0], 1.0, pt.x),
        |_| IntegralSpec::real_line().pole(0.0),
        |v| finite(PI * cot_pi(v[0])),
    )
    .tolerance(ToleranceClass::PrincipalValue),
    IdentityRecord::new(
        "3.223.1",
        Group::C,
        "GR 3.223.1: ∫₀^∞ x^{μ−1}((x+b)(x+a))^{−1} dx = π (a^{μ−1} − b^{μ−1}) csc(πμ) / (b−a)",
        &[
            P::open("mu", 0.0, 2.0).excluding(&[1.0]),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
        ],
        &[rel("a ≠ b (with |a − b| ≥ 0.1)", &["a", "b"], |v| {
            (v[1] - v[2]).abs() >= 0.1
        })],
        |v, pt| {
            let (mu, a, b) = (v[0], v[1], v[2]);
            ((mu - 1.0) * ln_x(pt) - (pt.x + a).ln() - (pt.x + b).ln()).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, 1.0 - v[0]),
        |v| {
            let (mu, a, b) = (v[0], v[1], v[2]);
            finite(PI / (b - a) * (a.powf(mu - 1.0) - b.powf(mu - 1.0)) * csc_pi(mu))
        },
    ),
    IdentityRecord::new(
        "3.223.2",
        Group::C,
        "GR 3.223.2: PV ∫₀^∞ x^{μ−1}((b+x)(a−x))^{−1} dx = π (b^{μ−1} csc πμ + a^{μ−1} cot πμ) / (a+b)",
        &[
            P::open("mu", 0.0, 2.0).excluding(&[1.0]),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
        ],
        &[],
        |v, pt| {
            let (mu, a, b) = (v[0], v[1], v[2]);
            -((mu - 1.0) * ln_x(pt) - (pt.x + b).ln()).exp() / (pt.x - a)
        },
        |v| {
            IntegralSpec::half_line_up(0.0)
                .exponents(v[0] - 1.0, 1.0 - v[0])
                .pole(v[1])
        },
        |v| {
            let (mu, a, b) = (v[0], v[1], v[2]);
            let bracket = b.powf(mu - 1.0) * csc_pi(mu) + a.powf(mu - 1.0) * cot_pi(mu);
            finite(PI / (a + b) * bracket)
        },
    )
    .tolerance(ToleranceClass::PrincipalValue),
    IdentityRecord::new(
        "3.223.3",
        Group::C,
        "GR 3.223.3: PV ∫₀^∞ x^{μ−1}((a−x)(b−x))^{−1} dx = π cot(μπ) (a^{μ−1} − b^{μ−1}) / (b−a)",
        &[
            P::open("mu", 0.0, 2.0).excluding(&[1.0]),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
        ],
        &[rel("a ≠ b (with |a − b| ≥ 0.2)", &["a", "b"], |v| {
            (v[1] - v[2]).abs() >= 0.2
        })],
        |v, pt| {
            let (mu, a, b) = (v[0], v[1], v[2]);
            ((mu - 1.0) * ln_x(pt)).exp() / (pt.x - a) / (pt.x - b)
        },
        |v| {
            IntegralSpec::half_line_up(0.0)
                .exponents(v[0] - 1.0, 1.0 - v[0])
                .pole(v[1])
                .pole(v[2])
        },
        |v| {
            let (mu, a, b) = (v[0], v[1], v[2]);
            finite(PI * cot_pi(mu) * (a.powf(mu - 1.0) - b.powf(mu - 1.0)) / (b - a))
        },
    )
    .tolerance(ToleranceClass::PrincipalValue),
    IdentityRecord::new(
        "3.224",
        Group::C,
        "GR 3.224: ∫₀^∞ (x+b)x^{μ−1}((x+a)(x+c))^{−1} dx = π csc(μπ) [(a−b)/(a−c)·a^{μ−1} + (c−b)/(c−a)·c^{μ−1}]",
        &[
            P::open("mu", 0.0, 1.0),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open_closed("c", 0.0, 3.0),
        ],
        &[rel("a ≠ c (with |a − c| ≥ 0.1)", &["a", "c"], |v| {
            (v[1] - v[3]).abs() >= 0.1
        })],
        |v, pt| {
            let (mu, a, b, c) = (v[0], v[1], v[2], v[3]);
            let x = pt.x;
            ((mu - 1.0) * ln_x(pt) + (x + b).ln() - (x + a).ln() - (x + c).ln()).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, -v[0]),
        |v| {
            let (mu, a, b, c) = (v[0], v[1], v[2], v[3]);
            let bracket =
                (a - b) / (a - c) * a.powf(mu - 1.0) + (c - b) / (c - a) * c.powf(mu - 1.0);
            finite(PI * csc_pi(mu) * bracket)
        },
    ),
    IdentityRecord::new(
        "3.216.1",
        Group::C,
        "GR 3.216.1: ∫₀¹ (t^{a−1} + t^{b−1})(1+t)^{−a−b} dt = B(a, b)",
        &[P::open_closed("a", 0.0, 3.0), P::open_closed("b", 0.0, 3.0)],
        &[],
        |v, pt| {
            let (a, b) = (v[0], v[1]);
            let l = ln_x(pt);
            (logaddexp((a - 1.0) * l, (b - 1.0) * l) - (a + b) * pt.x.ln_1p()).exp()
        },
        |v| IntegralSpec::finite(0.0, 1.0).exponents(v[0].min(v[1]) - 1.0, 0.0),
        |v| beta(v[0], v[1]),
    ),
    IdentityRecord::new(
        "3.216.2",
        Group::C,
        "GR 3.216.2: ∫₁^∞ (t^{a−1} + t^{b−1})(1+t)^{−a−b} dt = B(a, b)",
        &[P::open_closed("a", 0.0, 3.0), P::open_closed("b", 0.0, 3.0)],
        &[],
        |v, pt| {
            let (a, b) = (v[0], v[1]);
            let l = ln_x(pt);
            (logaddexp((a - 1.0) * l, (b - 1.0) * l) - (a + b) * pt.x.ln_1p()).exp()
        },
        |v| IntegralSpec::half_line_up(1.0).exponents(0.0, v[0].min(v[1]) - 1.0),
        |v| beta(v[0], v[1]),
    ),
    IdentityRecord::new(
        "3.194.4",
        Group::C,
        "GR 3.194.4: ∫₀^∞ t^{a−1}(1+ut)^{−p−1} dt = u^{−a} B(a, p+1−a)",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("p", 0.0, 3.0),
            P::open_closed("u", 0.0, 3.0),
        ],
        &[rel("a < p + 1 (with p + 1 − a ≥ 0.1)", &["a", "p"], |v| {
            v[1] + 1.0 - v[0] >= 0.1
        })],
        |v, pt| {
            let (a, p, u) = (v[0], v[1], v[2]);
            ((a - 1.0) * ln_x(pt) - (p + 1.0) * (u * pt.x).ln_1p()).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, v[1] - v[0]),
        |v| {
            let (a, p, u) = (v[0], v[1], v[2]);
            finite(u.powf(-a) * beta(a, p + 1.0 - a)?)
        },
    ),
    IdentityRecord::new(
        "3.196.2",
        Group::C,
        "GR 3.196.2: ∫_u^∞ (t−u)^{a−1}(t+v)^{−a−b} dt = (u+v)^{−b} B(a, b)",
        &[
            P::closed("u", 0.0, 3.0),
            P::closed("v", -1.0, 3.0),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
        ],
        &[rel("u + v > 0 (with u + v ≥ 0.2)", &["u", "v"], |v| v[0] + v[1] >= 0.2)],
        |v, pt| {
            let (u, w, a, b) = (v[0], v[1], v[2], v[3]);
            ((a - 1.0) * pt.from_lo.ln() - (a + b) * (pt.from_lo + (u + w)).ln()).exp()
        },
        |v| IntegralSpec::half_line_up(v[0]).exponents(v[2] - 1.0, v[3] - 1.0),
        |v| {
            let (u, w, a, b) = (v[0], v[1], v[2], v[3]);
            finite((u + w).powf(-b) * beta(a, b)?)
        },
    ),
    IdentityRecord::new(
        "3.191.2",
        Group::C,
        "GR 3.191.2: ∫_u^∞ (t−u)^{a−1} t^{−c} dt = u^{a−c} B(a, c−a)",
        &[
            P::open_closed("u", 0.0, 3.0),
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("c", 0.0, 4.0),
        ],
        &[rel("a < c (with c − a ≥ 0.1)", &["a", "c"], |v| v[2] - v[1] >= 0.1)],
        |v, pt| ((v[1] - 1.0) * pt.from_lo.ln() - v[2] * ln_x(pt)).exp(),
        |v| IntegralSpec::half_line_up(v[0]).exponents(v[1] - 1.0, v[2] - v[1] - 1.0),
        |v| {
            let (u, a, c) = (v[0], v[1], v[2]);
            finite(u.powf(a - c) * beta(a, c - a)?)
        },
    ),
    IdentityRecord::new(
        "eq-4.19",
        Group::C,
        "Power form of the half-line integral: ∫₀^∞ x^{ac−1}(1+x^c)^{−a−b} dx = B(a, b) / c",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open_closed("c", 0.0, 3.0),
        ],
        &[
            rel("ac ≥ 0.05", &["a", "c"], |v| v[0] * v[2] >= 0.05),
            rel("bc ≥ 0.05", &["b", "c"], |v| v[1] * v[2] >= 0.05),
        ],
        |v, pt| {
            let (a, b, c) = (v[0], v[1], v[2]);
            let l = ln_x(pt);
            ((a * c - 1.0) * l - (a + b) * softplus(c * l)).exp()
        },
        |v| {
            let (a, b, c) = (v[0], v[1], v[2]);
            IntegralSpec::half_line_up(0.0).exponents(a * c - 1.0, b * c - 1.0)
        },
        |v| finite(beta(v[0], v[1])? / v[2]),
    ),
    IdentityRecord::new(
        "3.251.6",
        Group::C,
        "GR 3.251.6: ∫₀^∞ x^{μ+1}(1+x²)^{−2} dx = μπ / (4 sin(μπ/2))",
        &[P::open("mu", -2.0, 2.0).excluding(&[0.0])],
        &[],
        |v, pt| {
            let l = ln_x(pt);
            ((v[0] + 1.0) * l - 2.0 * softplus(2.0 * l)).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] + 1.0, 1.0 - v[0]),
        |v| finite(v[0] * PI / 4.0 * csc_pi(v[0] / 2.0)),
    ),
    IdentityRecord::new(
        "3.241.2",
        Group::C,
        "GR 3.241.2: ∫₀^∞ x^{p−1}(1+x^c)^{−1} dx = (π/c) csc(πp/c)",
        &[P::open_closed("p", 0.0, 3.0), P::open_closed("c", 0.0, 4.0)],
        &[rel("p < c (with c − p ≥ 0.1)", &["p", "c"], |v| v[1] - v[0] >= 0.1)],
        |v, pt| {
            let l = ln_x(pt);
            ((v[0] - 1.0) * l - softplus(v[1] * l)).exp()
        },
        |v| IntegralSpec::half_line_up(0.0).exponents(v[0] - 1.0, v[1] - v[0] - 1.0),
        |v| finite(PI / v[1] * csc_pi(v[0] / v[1])),
    ),
    IdentityRecord::new(
        "3.196.4",
        Group::C,
        "GR 3.196.4: ∫₁^∞ ((a−bx)(x−1)^ν)^{−1} dx = −(π/b) csc(νπ) (b/(b−a))^ν",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open("nu", 0.0, 1.0),
        ],
        &[rel("a < b (with b − a ≥ 0.1)", &["a", "b"], |v| v[1] - v[0] >= 0.1)],
        |v, pt| {
            let (a, b, nu) = (v[0], v[1], v[2]);
            // a − bx = −((b − a) + b(x − 1)) stays negative on the whole range
            -(-((b - a) + b * pt.from_lo).ln() - nu * pt.from_lo.ln()).exp()
        },
        |v| IntegralSpec::half_line_up(1.0).exponents(-v[2], v[2] - 1.0),
        |v| {
            let (a, b, nu) = (v[0], v[1], v[2]);
            finite(-PI / b * csc_pi(nu) * (b / (b - a)).powf(nu))
        },
    ),
    IdentityRecord::new(
        "3.196.5",
        Group::C,
        "GR 3.196.5: ∫_{−∞}^1 ((a−bx)(1−x)^ν)^{−1} dx = (π/b) csc(νπ) (b/(a−b))^ν",
        &[
            P::open_closed("a", 0.0, 3.0),
            P::open_closed("b", 0.0, 3.0),
            P::open("nu", 0.0, 1.0),
        ],
        &[rel("a > b (with a − b ≥ 0.1)", &["a", "b"], |v| v[0] - v[1] >= 0.1)],
        |v, pt| {
            let (a, b, nu) = (v[0], v[1], v[2]);
            (-((a - b) + b * pt.from_hi).ln() - nu * pt.from_hi.ln()).exp()
        },
        |v| IntegralSpec::half_line_down(1.0).exponents(v[2] - 1.0, -v[2]),
        |v| {
            let (a, b, nu) = (v[0], v[1], v[2]);
            finite(PI / b * csc_pi(nu) * (b / (a - b)).powf(nu))
        },
    ),
];

//! Logarithmic substitutions `t = −ln x` and `t = ln(x/u)`.

use super::prelude::*;

/// `ln(L/h)` with `L = −ln(1 − h)`, accurate as `h → 0`.
fn ln_log_ratio(h: f64) -> f64 {
    if h < 1e-3 {
        const C: [f64; 7] = [
            1.0 / 2.0,
            5.0 / 24.0,
            1.0 / 8.0,
            251.0 / 2880.0,
            19.0 / 288.0,
            19087.0 / 362880.0,
            751.0 / 17280.0,
        ];
        h * C.iter().rev().fold(0.0, |acc, &c| acc * h + c)
    } else {
        (-(-h).ln_1p() / h).ln()
    }
}

pub(super) static ENTRIES: &[IdentityRecord] = &[
    IdentityRecord::new(
        "4.273",
        Group::G,
        "GR 4.273: ∫_u^v (ln(x/u))^{p−1}(ln(v/x))^{q−1} dx/x = B(p, q) (ln(v/u))^{p+q−1}",
        &[
            P::open_closed("u", 0.0, 4.0),
            P::open_closed("v", 0.0, 4.0),
            P::open_closed("p", 0.0, 3.0),
            P::open_closed("q", 0.0, 3.0),
        ],
        &[rel("u < v (with v − u ≥ 0.2)", &["u", "v"], |v| {
            v[1] - v[0] >= 0.2
        })],
        |v, pt| {
            let (u, w, p, q) = (v[0], v[1], v[2], v[3]);
            let lo = (pt.from_lo / u).ln_1p();
            let hi = -(-pt.from_hi / w).ln_1p();
            ((p - 1.0) * lo.ln() + (q - 1.0) * hi.ln()).exp() / pt.x
        },
        |v| IntegralSpec::finite(v[0], v[1]).exponents(v[2] - 1.0, v[3] - 1.0),
        |v| {
            let (u, w, p, q) = (v[0], v[1], v[2], v[3]);
            finite(beta(p, q)? * (w / u).ln().powf(p + q - 1.0))
        },
    ),
    IdentityRecord::new(
        "4.275.1",
        Group::G,
        "GR 4.275.1: ∫₀¹ [(−ln x)^{q−1} − x^{p−1}(1−x)^{q−1}] dx = Γ(q) − B(p, q)",
        &[P::open_closed("p", 0.0, 3.0), P::open_closed("q", 0.0, 3.0)],
        &[],
        |v, pt| {
            let (p, q) = (v[0], v[1]);
            if pt.x <= 0.5 {
                let first = (-pt.from_lo.ln()).powf(q - 1.0);
                first - pt.from_lo.powf(p - 1.0) * pt.from_hi.powf(q - 1.0)
            } else {
                // both terms are h^{q−1}(1 + O(h)); subtract the O(h) parts
                let h = pt.from_hi;
                let a = (q - 1.0) * ln_log_ratio(h);
                let b = (p - 1.0) * (-h).ln_1p();
                h.powf(q - 1.0) * (a.exp_m1() - b.exp_m1())
            }
        },
        |v| IntegralSpec::finite(0.0, 1.0).exponents((v[0] - 1.0).min(0.0), v[1]),
        |v| finite(gamma(v[1])? - beta(v[0], v[1])?),
    ),
    IdentityRecord::new(
        "eq-8.4",
        Group::G,
        "Logarithmic form of Euler's second integral: ∫₀¹ (−ln x)^{q−1} dx = Γ(q)",
        &[P::open_closed("q", 0.0, 4.0)],
        &[],
        |v, pt| (-ln_unit(pt)).powf(v[0] - 1.0),
        |v| IntegralSpec::finite(0.0, 1.0).exponents(0.0, v[0] - 1.0),
        |v| gamma(v[0]),
    ),
];

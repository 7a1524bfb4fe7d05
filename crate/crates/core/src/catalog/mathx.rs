//! Overflow-safe building blocks for the roster integrands.

use core::f64::consts::LN_2;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::quad::Point;

/// `ln(1 + e^z)` without overflow.
pub fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

/// `ln(e^a + e^b)` without overflow.
pub fn logaddexp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}

/// `ln x` for a point of a domain `[0, 1]`, accurate at both ends.
pub fn ln_unit(p: Point) -> f64 {
    if p.x > 0.5 {
        (-p.from_hi).ln_1p()
    } else {
        p.from_lo.ln()
    }
}

/// `ln(e^z − 1)` for `z > 0`.
pub(crate) fn ln_expm1(z: f64) -> f64 {
    if z > 1.0 {
        z + (-(-z).exp()).ln_1p()
    } else {
        z.exp_m1().ln()
    }
}

/// `ln(1 − e^{z})` for `z < 0`.
pub(crate) fn ln_one_minus_exp(z: f64) -> f64 {
    if z > -LN_2 {
        (-z.exp_m1()).ln()
    } else {
        (-z.exp()).ln_1p()
    }
}

/// `ln cosh x` without overflow.
pub(crate) fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - LN_2
}

/// `ln(1 − x^q)` on `[0, 1]`.
pub(crate) fn ln_one_minus_pow(p: Point, q: f64) -> f64 {
    ln_one_minus_exp(q * ln_unit(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_survive_extremes() {
        assert_eq!(softplus(1e300), 1e300);
        assert_eq!(softplus(-1e300), 0.0);
        assert!((softplus(0.0) - LN_2).abs() < 1e-16);
        assert_eq!(logaddexp(1e300, 0.0), 1e300);
        assert!((logaddexp(0.0, 0.0) - LN_2).abs() < 1e-16);
        assert!((ln_expm1(1e-300) - (-690.7755278982137)).abs() < 1e-9);
        assert_eq!(ln_expm1(1e300), 1e300);
        assert!((ln_one_minus_exp(-1e-20) - (1e-20f64).ln()).abs() < 1e-12);
        assert!((ln_cosh(1e300) - (1e300 - LN_2)).abs() <= 1e284);
        assert!((ln_cosh(0.0)).abs() < 1e-16);
    }

    #[test]
    fn unit_interval_logs() {
        let near_one = Point {
            x: 1.0 - 1e-300,
            from_lo: 1.0,
            from_hi: 1e-300,
        };
        assert_eq!(ln_unit(near_one), -1e-300);
        let near_zero = Point {
            x: 1e-300,
            from_lo: 1e-300,
            from_hi: 1.0,
        };
        assert!((ln_unit(near_zero) + 690.7755278982137).abs() < 1e-9);
    }
}

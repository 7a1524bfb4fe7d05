use betatab_core::specfun::*;
use std::f64::consts::{LN_2, PI};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// ψ(x) by shifting to x + N with N = 1000 and two asymptotic terms;
/// the truncation error is below 1e-25 there.
fn digamma_oracle(x: f64) -> f64 {
    const N: usize = 1000;
    let shift: f64 = (0..N).map(|k| 1.0 / (x + k as f64)).sum();
    let z = x + N as f64;
    let z2 = z * z;
    z.ln() - 0.5 / z - 1.0 / (12.0 * z2) + 1.0 / (120.0 * z2 * z2)
        - 1.0 / (252.0 * z2 * z2 * z2)
        - shift
}

#[test]
fn gamma_at_integers_is_a_factorial() {
    let mut fact = 1.0f64;
    for n in 1..=20u32 {
        if n > 1 {
            fact *= (n - 1) as f64;
        }
        assert!(rel(gamma(n as f64).unwrap(), fact) <= 1e-14, "n = {n}");
    }
}

#[test]
fn gamma_at_half_integers() {
    // √π (2n)! / (4^n n!) = √π Π_{k=1}^{n} (2k − 1)/2
    let mut expected = PI.sqrt();
    for n in 0..=15u32 {
        if n > 0 {
            expected *= (2 * n - 1) as f64 / 2.0;
        }
        assert!(
            rel(gamma(n as f64 + 0.5).unwrap(), expected) <= 1e-13,
            "n = {n}"
        );
    }
}

#[test]
fn spot_values() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert!(rel(gamma(0.5).unwrap(), 1.772_453_850_905_516) < 1e-15);
    assert!(rel(gamma(3.5).unwrap(), 3.3233509704478426) < 1e-14);
    assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-15);
    assert!(log_gamma(1.0).unwrap().abs() < 1e-15);
    assert!(log_gamma(2.0).unwrap().abs() < 1e-15);
    assert!(rel(log_gamma(10.0).unwrap(), 12.801827480081469) < 1e-14);
    assert!(rel(beta(1.0, 1.0).unwrap(), 1.0) < 1e-15);
    assert!(rel(beta(2.0, 3.0).unwrap(), 1.0 / 12.0) < 1e-14);
    assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-14);
    assert!(rel(digamma(1.0).unwrap(), -EULER_GAMMA) < 1e-14);
    assert!(rel(digamma(0.5).unwrap(), -EULER_GAMMA - 2.0 * LN_2) < 1e-14);
}

#[test]
fn log_gamma_matches_summed_logs() {
    let mut acc = 0.0f64;
    for n in 2..=170u32 {
        acc += ((n - 1) as f64).ln();
        if n == 2 {
            continue;
        }
        assert!(rel(log_gamma(n as f64).unwrap(), acc) <= 1e-13, "n = {n}");
    }
}

#[test]
fn poles_and_overflow() {
    for x in [0.0, -1.0, -7.0] {
        assert!(matches!(gamma(x), Err(SpecFunError::Pole { .. })));
    }
    assert!(matches!(gamma(171.7), Err(SpecFunError::Overflow { .. })));
    assert!(log_gamma(-0.5).is_err());
    assert!(matches!(digamma(-3.0), Err(SpecFunError::Pole { .. })));
}

#[test]
fn reflection_grid() {
    for i in 1..=1000 {
        let a = i as f64 / 1001.0;
        let scale = PI / sin_pi(a);
        let r = reflection_residual(a).unwrap();
        assert!(r.abs() <= 1e-12 * scale, "a = {a}: {r}");
    }
}

#[test]
fn duplication_grid() {
    for i in 1..=500 {
        let a = 20.0 * i as f64 / 500.0;
        let r = duplication_residual(a).unwrap();
        assert!(r.abs() <= 1e-12 * gamma(a + 0.5).unwrap(), "a = {a}: {r}");
    }
}

#[test]
fn beta_is_symmetric_bitwise() {
    let grid = [-2.5, -0.3, 0.1, 0.5, 1.0, 2.75, 7.0, 33.3, 120.0];
    for &a in &grid {
        for &b in &grid {
            match (beta(a, b), beta(b, a)) {
                (Ok(x), Ok(y)) => assert_eq!(x.to_bits(), y.to_bits(), "{a} {b}"),
                (x, y) => assert_eq!(x.is_err(), y.is_err()),
            }
        }
    }
}

#[test]
fn digamma_recurrence() {
    for i in 0..=499 {
        let x = 0.1 + 0.1 * i as f64;
        let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
        assert!(d.abs() <= 1e-12, "x = {x}: {d}");
    }
}

#[test]
fn digamma_matches_shifted_asymptotics() {
    for i in 1..=200 {
        let x = 0.05 * i as f64;
        let got = digamma(x).unwrap();
        let want = digamma_oracle(x);
        assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0), "x = {x}");
    }
}

#[test]
fn trig_helpers_at_lattice_points() {
    assert_eq!(sin_pi(3.0), 0.0);
    assert_eq!(cos_pi(0.5), 0.0);
    assert_eq!(cot_pi(0.5), 0.0);
    assert!(rel(csc_pi(0.25), 2f64.sqrt()) < 1e-15);
}

#[test]
fn factorial_and_binomial_are_exact() {
    assert_eq!(factorial(0), 1.0);
    assert_eq!(factorial(12), 479001600.0);
    assert_eq!(binomial(12, 6), 924.0);
    assert_eq!(binomial(4, 0), 1.0);
}

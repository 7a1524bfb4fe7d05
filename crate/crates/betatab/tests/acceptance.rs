//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use betatab::verify::{verify_entry, RunConfig, Status};
use betatab_core::catalog::{self, IdentityRecord, ParamKind, ToleranceClass};
use betatab_core::quad::{oracle_integrate, Quadrature, DEFAULT_TOL};
use betatab_core::specfun::{gamma, sin_pi};
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn betatab(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_betatab"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn numeric(rec: &IdentityRecord, v: &[f64]) -> Result<f64, String> {
    let f = rec.integrand(v);
    let r = Quadrature::new()
        .integrate(&f, &rec.spec(v), DEFAULT_TOL)
        .map_err(|e| format!("{} {v:?}: {e}", rec.id))?;
    if !r.converged() {
        return Err(format!("{} {v:?}: {:?}", rec.id, r.status));
    }
    Ok(r.value)
}

fn full_roster() -> Check {
    let start = Instant::now();
    let (code, stdout) = betatab(&[
        "verify",
        "--samples",
        "20",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    let secs = start.elapsed().as_secs_f64();
    if code != 0 {
        return Err(format!("exit code {code}"));
    }
    let mut compared = 0;
    for line in String::from_utf8(stdout).unwrap().lines() {
        let o: Value = serde_json::from_str(line).unwrap();
        let Some(id) = o["entry_id"].as_str() else {
            continue;
        };
        let Ok(rec) = catalog::entry(id) else {
            continue;
        };
        let bound = match rec.tolerance {
            ToleranceClass::Standard => 1e-8,
            ToleranceClass::PrincipalValue => 1e-6,
            ToleranceClass::Combined => 1e-7,
        };
        let abs = o["abs_err"].as_f64().unwrap();
        let closed = o["closed"].as_f64().unwrap();
        if abs > bound * closed.abs() + 1e-12f64.max(rec.abs_tol) {
            return Err(format!("{id} #{}: abs_err {abs:e}", o["sample_index"]));
        }
        compared += 1;
    }
    if compared < 1200 {
        return Err(format!("only {compared} comparisons"));
    }
    if secs > 120.0 {
        return Err(format!("took {secs:.1} s"));
    }
    Ok(format!("{compared} comparisons in {secs:.2} s"))
}

fn spot_values() -> Check {
    let binom_4_2 = 6.0;
    let cases: [(&str, &[f64], f64); 5] = [
        ("3.248.3", &[2.0], PI / 32.0 * binom_4_2),
        ("3.248.2", &[0.0], 1.0),
        ("eq-4.3", &[0.5], PI),
        ("3.194.7", &[0.0, 1.0, 1.0, 1.0], 2.0),
        ("3.192.1", &[0.5], PI / 2.0),
    ];
    let mut worst = 0f64;
    for (id, v, want) in cases {
        let rec = catalog::entry(id).map_err(|e| e.to_string())?;
        let closed = rec.closed_form(v).map_err(|e| format!("{id}: {e}"))?;
        let num = numeric(rec, v)?;
        for (what, got) in [("closed form", closed), ("integral", num)] {
            let e = rel(got, want);
            if e > 1e-10 {
                return Err(format!("{id} {what}: {got} vs {want}"));
            }
            worst = worst.max(e);
        }
    }
    Ok(format!("worst relative error {worst:.1e}"))
}

fn specfun_grids() -> Check {
    for i in 1..=1000 {
        let a = i as f64 / 1001.0;
        let want = PI / sin_pi(a);
        let got = gamma(a).unwrap() * gamma(1.0 - a).unwrap();
        if (got - want).abs() > 1e-12 * want.abs() {
            return Err(format!("reflection at {a}"));
        }
    }
    for i in 1..=500 {
        let a = 20.0 * i as f64 / 500.0;
        let lhs = gamma(a + 0.5).unwrap();
        let rhs =
            gamma(2.0 * a).unwrap() * PI.sqrt() / (gamma(a).unwrap() * 2f64.powf(2.0 * a - 1.0));
        if rel(rhs, lhs) > 1e-12 {
            return Err(format!("duplication at {a}"));
        }
    }
    let mut fact = 1.0;
    for n in 1..=15u32 {
        if n > 1 {
            fact *= (n - 1) as f64;
        }
        if rel(gamma(n as f64).unwrap(), fact) > 1e-13 {
            return Err(format!("gamma({n})"));
        }
        // Γ(n + 1/2) = (2n − 1)!! √π / 2ⁿ
        let double_fact: f64 = (1..=n).map(|k| (2 * k - 1) as f64).product();
        let want = double_fact * PI.sqrt() / 2f64.powi(n as i32);
        if rel(gamma(n as f64 + 0.5).unwrap(), want) > 1e-13 {
            return Err(format!("gamma({n}.5)"));
        }
    }
    Ok("1000 reflection, 500 duplication, 30 integer/half-integer points".into())
}

fn principal_values() -> Check {
    let rec = catalog::entry("eq-4.10").unwrap();
    let v = rec
        .bind(&[("a", 0.25), ("c", -1.0)])
        .map_err(|e| e.to_string())?;
    let got = numeric(rec, &v)?;
    if rel(got, -PI) > 1e-6 {
        return Err(format!("eq-4.10 gave {got}"));
    }
    let rec = catalog::entry("3.313.1").unwrap();
    let zero = numeric(rec, &[0.5])?;
    if zero.abs() > 1e-8 {
        return Err(format!("3.313.1 gave {zero}"));
    }
    let rec = catalog::entry("3.223.3").unwrap();
    let cfg = RunConfig {
        rtol_override: Some(1e-6),
        ..RunConfig::default()
    };
    let outcomes = verify_entry(rec, &cfg, &Quadrature::new());
    let passed = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    if outcomes.len() != 20 || passed != 20 {
        return Err(format!("3.223.3 passed {passed}/{}", outcomes.len()));
    }
    Ok(format!(
        "eq-4.10 err {:.1e}, 3.313.1 |I| {zero:.1e}, 3.223.3 20/20",
        rel(got, -PI)
    ))
}

fn fake_parameters() -> Check {
    let mut worst_gap = 0f64;
    for id in ["3.217", "3.218"] {
        let rec = catalog::entry(id).unwrap();
        let fake = &rec.domain.params[1];
        let (lo, hi) = rec.domain.sampling_range(fake);
        let (f1, f2) = (lo + 0.2 * (hi - lo), lo + 0.8 * (hi - lo));
        for i in 0..20 {
            let p = catalog::sample_params(rec, 7, i).map_err(|e| e.to_string())?[0];
            let want = PI * (PI * p).cos() / (PI * p).sin();
            let a = numeric(rec, &[p, f1])?;
            let b = numeric(rec, &[p, f2])?;
            worst_gap = worst_gap.max((a - b).abs());
            if (a - b).abs() > 2e-7 || rel(a, want) > 1e-7 || rel(b, want) > 1e-7 {
                return Err(format!("{id} p={p}: {a} and {b} vs {want}"));
            }
        }
    }
    Ok(format!("largest gap {worst_gap:.1e}"))
}

/// A fixed interior point: every parameter at the same fraction of its
/// sampling range, trying fractions near one half until the relations
/// and exclusions are satisfied.
fn mid_point(rec: &IdentityRecord) -> Option<Vec<f64>> {
    let dom = &rec.domain;
    [0.5, 0.45, 0.55, 0.4, 0.6, 0.35, 0.65, 0.3, 0.7, 0.25, 0.75]
        .into_iter()
        .map(|t| {
            dom.params
                .iter()
                .map(|p| match p.kind {
                    ParamKind::Integer => (p.lo + t * (p.hi - p.lo)).round(),
                    ParamKind::Real => {
                        let (lo, hi) = dom.sampling_range(p);
                        lo + t * (hi - lo)
                    }
                })
                .collect::<Vec<f64>>()
        })
        .find(|v| {
            dom.contains(v)
                && dom.params.iter().zip(v).all(|(p, &x)| {
                    p.exclude
                        .iter()
                        .all(|e| (x - e).abs() > dom.exclusion_radius(p))
                })
        })
}

fn oracle_equivalence() -> Check {
    let quad = Quadrature::new();
    let mut checked = 0;
    let mut worst = 0f64;
    let mut fallbacks = 0;
    for rec in catalog::all_entries().filter(|r| !r.is_pv()) {
        let v = match mid_point(rec) {
            Some(v) => v,
            None => {
                fallbacks += 1;
                catalog::sample_params(rec, 0, 0).map_err(|e| e.to_string())?
            }
        };
        let f = rec.integrand(&v);
        let spec = rec.spec(&v);
        let de = quad
            .integrate(&f, &spec, DEFAULT_TOL)
            .map_err(|e| format!("{}: {e}", rec.id))?;
        let gk = oracle_integrate(&f, &spec).map_err(|e| format!("{} oracle: {e}", rec.id))?;
        let scaled = (de.value - gk.value).abs() / gk.value.abs().max(1.0);
        worst = worst.max(scaled);
        if scaled > 1e-8 {
            return Err(format!("{} {v:?}: {} vs {}", rec.id, de.value, gk.value));
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} entries ({fallbacks} at a sampled point), worst scaled difference {worst:.1e}"
    ))
}

fn determinism() -> Check {
    let args = |jobs: &'static str| {
        [
            "verify",
            "--samples",
            "5",
            "--seed",
            "3",
            "--format",
            "json",
            "--jobs",
            jobs,
        ]
    };
    let (c1, a) = betatab(&args("1"));
    let (c2, b) = betatab(&args("1"));
    let (c3, c) = betatab(&args("4"));
    if (c1, c2, c3) != (0, 0, 0) {
        return Err(format!("exit codes {c1} {c2} {c3}"));
    }
    if a != b || a != c {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes across three runs", a.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        ("full roster verification", full_roster),
        ("spot values", spot_values),
        ("special function grids", specfun_grids),
        ("principal values", principal_values),
        ("fake-parameter invariance", fake_parameters),
        ("oracle equivalence", oracle_equivalence),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

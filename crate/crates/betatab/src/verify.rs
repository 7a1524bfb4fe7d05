//! Samples parameters, integrates, and compares against the closed forms.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use betatab_core::catalog::{self, IdentityRecord, ParamKind};
use betatab_core::quad::{Quadrature, DEFAULT_TOL};
use betatab_core::specfun;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Floor under `|closed|` when forming the relative error.
pub const REL_ERR_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples_per_entry: u64,
    /// Replaces every entry's tolerance-class rtol when set.
    pub rtol_override: Option<f64>,
    pub atol: f64,
    /// Only these ids; `None` means the full roster.
    pub entry_filter: Option<Vec<String>>,
    pub parallelism: usize,
    /// Record wall-clock times. Off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            samples_per_entry: 20,
            rtol_override: None,
            atol: 1e-12,
            entry_filter: None,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.samples_per_entry == 0 {
            return Err("--samples must be at least 1".into());
        }
        if let Some(r) = self.rtol_override {
            if !(r > 0.0 && r.is_finite()) {
                return Err(format!("--rtol must be positive, got {r}"));
            }
        }
        if !(self.atol > 0.0 && self.atol.is_finite()) {
            return Err(format!("--atol must be positive, got {}", self.atol));
        }
        if self.parallelism == 0 {
            return Err("--jobs must be at least 1".into());
        }
        if let Some(ids) = &self.entry_filter {
            for id in ids {
                catalog::entry(id).map_err(|e| e.to_string())?;
            }
        }
        Ok(())
    }

    /// The records selected by the filter, in roster order.
    pub fn entries(&self) -> Vec<&'static IdentityRecord> {
        catalog::all_entries()
            .filter(|r| match &self.entry_filter {
                Some(ids) => ids.iter().any(|id| id == r.id),
                None => true,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    QuadNonconverged,
    SampleError,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            ParamValue::Int(n) => s.serialize_i64(n),
            ParamValue::Real(x) => s.serialize_f64(x),
        }
    }
}

/// Named parameter values that serialize as a JSON object in declaration
/// order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub Vec<(String, ParamValue)>);

impl Params {
    fn of(rec: &IdentityRecord, values: &[f64]) -> Self {
        Params(
            rec.domain
                .params
                .iter()
                .zip(values)
                .map(|(p, &x)| {
                    let v = match p.kind {
                        ParamKind::Integer => ParamValue::Int(x as i64),
                        ParamKind::Real => ParamValue::Real(x),
                    };
                    (p.name.to_string(), v)
                })
                .collect(),
        )
    }

    fn reals(pairs: &[(&str, f64)]) -> Self {
        Params(
            pairs
                .iter()
                .map(|&(n, x)| (n.to_string(), ParamValue::Real(x)))
                .collect(),
        )
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub entry_id: String,
    pub sample_index: u64,
    pub params: Params,
    pub numeric: Option<f64>,
    pub closed: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub evaluations: usize,
    pub status: Status,
    /// Milliseconds; `None` unless timings were requested.
    pub elapsed: Option<f64>,
    /// Whether the relative term dominated the acceptance threshold.
    #[serde(skip)]
    pub rel_meaningful: bool,
}

impl VerificationOutcome {
    fn new(entry_id: &str, sample_index: u64, params: Params) -> Self {
        Self {
            entry_id: entry_id.to_string(),
            sample_index,
            params,
            numeric: None,
            closed: None,
            abs_err: None,
            rel_err: None,
            evaluations: 0,
            status: Status::SampleError,
            elapsed: None,
            rel_meaningful: false,
        }
    }

    /// Fills the comparison fields; `extra_ok` lets a check impose more
    /// than the single-value rule.
    fn judge(&mut self, numeric: f64, closed: f64, atol: f64, rtol: f64, extra_ok: bool) {
        let abs_err = (numeric - closed).abs();
        self.numeric = Some(numeric);
        self.closed = Some(closed);
        self.abs_err = Some(abs_err);
        self.rel_err = Some(abs_err / closed.abs().max(REL_ERR_FLOOR));
        self.rel_meaningful = rtol * closed.abs() >= atol;
        self.status = if abs_err <= atol + rtol * closed.abs() && extra_ok {
            Status::Pass
        } else {
            Status::Fail
        };
    }
}

/// One outcome per sample of `rec`.
pub fn verify_entry(
    rec: &IdentityRecord,
    cfg: &RunConfig,
    quad: &Quadrature,
) -> Vec<VerificationOutcome> {
    (0..cfg.samples_per_entry)
        .map(|i| verify_sample(rec, cfg, quad, i))
        .collect()
}

fn verify_sample(
    rec: &IdentityRecord,
    cfg: &RunConfig,
    quad: &Quadrature,
    index: u64,
) -> VerificationOutcome {
    let start = Instant::now();
    let mut out = match catalog::sample_params(rec, cfg.seed, index) {
        Ok(values) => compare(rec, cfg, quad, index, &values),
        Err(_) => VerificationOutcome::new(rec.id, index, Params::default()),
    };
    if cfg.timings {
        out.elapsed = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    out
}

fn compare(
    rec: &IdentityRecord,
    cfg: &RunConfig,
    quad: &Quadrature,
    index: u64,
    values: &[f64],
) -> VerificationOutcome {
    let mut out = VerificationOutcome::new(rec.id, index, Params::of(rec, values));
    let Ok(closed) = rec.closed_form(values) else {
        return out;
    };
    out.closed = Some(closed);
    let f = rec.integrand(values);
    let result = match quad.integrate(&f, &rec.spec(values), DEFAULT_TOL) {
        Ok(r) => r,
        Err(_) => {
            out.status = Status::QuadNonconverged;
            return out;
        }
    };
    let atol = cfg.atol.max(rec.abs_tol);
    let rtol = cfg.rtol_override.unwrap_or(rec.tolerance.rtol());
    out.judge(result.value, closed, atol, rtol, true);
    out.evaluations = result.evaluations;
    if !result.converged() {
        out.status = Status::QuadNonconverged;
    }
    out
}

/// Every selected entry, possibly in parallel, in canonical order.
pub fn verify_all(cfg: &RunConfig) -> Vec<VerificationOutcome> {
    let quad = Quadrature::new();
    let tasks: Vec<(&IdentityRecord, u64)> = cfg
        .entries()
        .into_iter()
        .flat_map(|r| (0..cfg.samples_per_entry).map(move |i| (r, i)))
        .collect();
    let run = || -> Vec<VerificationOutcome> {
        tasks
            .par_iter()
            .map(|&(rec, i)| verify_sample(rec, cfg, &quad, i))
            .collect()
    };
    let mut out = match rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism.max(1))
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    sort_outcomes(&mut out);
    out
}

pub fn sort_outcomes(out: &mut [VerificationOutcome]) {
    out.sort_by(|a, b| {
        a.entry_id
            .cmp(&b.entry_id)
            .then(a.sample_index.cmp(&b.sample_index))
    });
}

pub const REFLECTION_POINTS: u64 = 1000;
pub const DUPLICATION_POINTS: u64 = 500;
pub const SYMMETRY_PAIRS: u64 = 1000;
/// Allowed gap between the two fake-parameter integrals.
pub const FAKE_PARAM_GAP: f64 = 2e-7;
pub const FAKE_PARAM_VALUES: (f64, f64) = (0.7, 2.3);

/// The identity suites that need no quadrature of a roster entry, plus
/// the fake-parameter invariance checks.
pub fn cross_check_consistency(cfg: &RunConfig) -> Vec<VerificationOutcome> {
    let mut out = Vec::new();

    for i in 1..=REFLECTION_POINTS {
        let a = i as f64 / (REFLECTION_POINTS + 1) as f64;
        let mut o =
            VerificationOutcome::new("consistency/reflection", i, Params::reals(&[("a", a)]));
        if let (Ok(ga), Ok(gb)) = (specfun::gamma(a), specfun::gamma(1.0 - a)) {
            o.judge(ga * gb, PI * specfun::csc_pi(a), 0.0, 1e-12, true);
        }
        out.push(o);
    }

    for i in 1..=DUPLICATION_POINTS {
        let a = 20.0 * i as f64 / DUPLICATION_POINTS as f64;
        let mut o =
            VerificationOutcome::new("consistency/duplication", i, Params::reals(&[("a", a)]));
        let lhs = specfun::gamma(a + 0.5);
        let rhs = (|| -> Result<f64, specfun::SpecFunError> {
            Ok(specfun::gamma(2.0 * a)? * PI.sqrt()
                / (specfun::gamma(a)? * 2f64.powf(2.0 * a - 1.0)))
        })();
        if let (Ok(l), Ok(r)) = (lhs, rhs) {
            o.judge(r, l, 0.0, 1e-12, true);
        }
        out.push(o);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..SYMMETRY_PAIRS {
        let a: f64 = rng.gen_range(0.01..50.0);
        let b: f64 = rng.gen_range(0.01..50.0);
        let mut o = VerificationOutcome::new(
            "consistency/beta-symmetry",
            i,
            Params::reals(&[("a", a), ("b", b)]),
        );
        if let (Ok(x), Ok(y)) = (specfun::beta(a, b), specfun::beta(b, a)) {
            o.judge(x, y, 0.0, 0.0, x.to_bits() == y.to_bits());
        }
        out.push(o);
    }

    if let Ok(rec) = catalog::entry("3.249.5") {
        for i in 0..cfg.samples_per_entry {
            let Ok(v) = catalog::sample_params(rec, cfg.seed, i) else {
                out.push(VerificationOutcome::new(
                    "consistency/3.249.5-chain",
                    i,
                    Params::default(),
                ));
                continue;
            };
            let b = v[0];
            let mut o =
                VerificationOutcome::new("consistency/3.249.5-chain", i, Params::of(rec, &v));
            let square = specfun::beta(b, b).map(|x| 2f64.powf(2.0 * b - 2.0) * x);
            if let (Ok(s), Ok(h)) = (square, rec.closed_form(&v)) {
                o.judge(s, h, 0.0, 1e-12, true);
            }
            out.push(o);
        }
    }

    let quad = Quadrature::new();
    for id in ["3.217", "3.218"] {
        let Ok(rec) = catalog::entry(id) else {
            continue;
        };
        for i in 0..cfg.samples_per_entry {
            out.push(fake_parameter_check(rec, cfg, &quad, i));
        }
    }

    if let Ok(rec) = catalog::entry("eq-10.4") {
        for i in 0..cfg.samples_per_entry {
            let Ok(v) = catalog::sample_params(rec, cfg.seed, i) else {
                out.push(VerificationOutcome::new(
                    "consistency/digamma-log",
                    i,
                    Params::default(),
                ));
                continue;
            };
            let a = v[0];
            let mut o = VerificationOutcome::new("consistency/digamma-log", i, Params::of(rec, &v));
            let via_psi = (|| -> Result<f64, specfun::SpecFunError> {
                Ok(PI * specfun::csc_pi(a) * (specfun::digamma(a)? - specfun::digamma(1.0 - a)?))
            })();
            if let (Ok(p), Ok(c)) = (via_psi, rec.closed_form(&v)) {
                o.judge(p, c, cfg.atol, 1e-12, true);
            }
            out.push(o);
        }
    }

    sort_outcomes(&mut out);
    out
}

/// Integrates a fake-parameter entry at two values of the fake parameter.
/// Passes when both match the closed form and each other.
fn fake_parameter_check(
    rec: &IdentityRecord,
    cfg: &RunConfig,
    quad: &Quadrature,
    index: u64,
) -> VerificationOutcome {
    let entry_id = format!("consistency/fake-{}", rec.id);
    let Ok(sampled) = catalog::sample_params(rec, cfg.seed, index) else {
        return VerificationOutcome::new(&entry_id, index, Params::default());
    };
    let p = sampled[0];
    let fake = rec.domain.params[1].name;
    let (f1, f2) = FAKE_PARAM_VALUES;
    let alt = format!("{fake}_alt");
    let mut o = VerificationOutcome::new(
        &entry_id,
        index,
        Params::reals(&[("p", p), (fake, f1), (&alt, f2)]),
    );
    let integrate = |fake_value: f64| {
        let v = [p, fake_value];
        let f = rec.integrand(&v);
        quad.integrate(&f, &rec.spec(&v), DEFAULT_TOL)
    };
    let (Ok(r1), Ok(r2), Ok(closed)) = (integrate(f1), integrate(f2), rec.closed_form(&[p, f1]))
    else {
        o.status = Status::QuadNonconverged;
        return o;
    };
    let rtol = cfg.rtol_override.unwrap_or(rec.tolerance.rtol());
    let second_ok = (r2.value - closed).abs() <= cfg.atol + rtol * closed.abs();
    let gap_ok = (r1.value - r2.value).abs() <= FAKE_PARAM_GAP;
    o.judge(r1.value, closed, cfg.atol, rtol, second_ok && gap_ok);
    o.evaluations = r1.evaluations + r2.evaluations;
    if !(r1.converged() && r2.converged()) {
        o.status = Status::QuadNonconverged;
    }
    o
}

/// Per-entry aggregate used by the text report.
#[derive(Debug, Clone, PartialEq)]
pub struct EntrySummary {
    pub entry_id: String,
    pub outcomes: usize,
    pub passes: usize,
    pub worst_rel_err: Option<f64>,
    pub evaluations: usize,
}

pub fn summarize_entries(outcomes: &[VerificationOutcome]) -> Vec<EntrySummary> {
    let mut by_id: BTreeMap<&str, EntrySummary> = BTreeMap::new();
    for o in outcomes {
        let s = by_id.entry(&o.entry_id).or_insert_with(|| EntrySummary {
            entry_id: o.entry_id.clone(),
            outcomes: 0,
            passes: 0,
            worst_rel_err: None,
            evaluations: 0,
        });
        s.outcomes += 1;
        s.passes += (o.status == Status::Pass) as usize;
        s.evaluations += o.evaluations;
        if let (true, Some(r)) = (o.rel_meaningful, o.rel_err) {
            s.worst_rel_err = Some(s.worst_rel_err.map_or(r, |w: f64| w.max(r)));
        }
    }
    by_id.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_serialize_in_declaration_order_with_integers() {
        let rec = catalog::entry("3.251.5").unwrap();
        let p = Params::of(rec, &[1.0, 3.0, 0.5, 2.0]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"m":1,"n":3,"u":0.5,"v":2.0}"#);
    }

    #[test]
    fn judge_applies_the_combined_rule() {
        let mut o = VerificationOutcome::new("x", 0, Params::default());
        o.judge(1.0 + 5e-9, 1.0, 1e-12, 1e-8, true);
        assert_eq!(o.status, Status::Pass);
        o.judge(1.0 + 2e-8, 1.0, 1e-12, 1e-8, true);
        assert_eq!(o.status, Status::Fail);
        o.judge(5e-10, 0.0, 1e-9, 1e-8, true);
        assert_eq!(o.status, Status::Pass);
        assert_eq!(o.rel_err, Some(5e-10 / REL_ERR_FLOOR));
        assert!(!o.rel_meaningful);
    }

    #[test]
    fn config_validation() {
        let ok = RunConfig::default();
        assert!(ok.validate().is_ok());
        let bad = [
            RunConfig {
                samples_per_entry: 0,
                ..ok.clone()
            },
            RunConfig {
                rtol_override: Some(-1.0),
                ..ok.clone()
            },
            RunConfig {
                atol: 0.0,
                ..ok.clone()
            },
            RunConfig {
                parallelism: 0,
                ..ok.clone()
            },
            RunConfig {
                entry_filter: Some(vec!["bogus".into()]),
                ..ok.clone()
            },
        ];
        for cfg in bad {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn entry_passes_with_its_samples() {
        let cfg = RunConfig {
            seed: 42,
            ..RunConfig::default()
        };
        let out = verify_entry(catalog::entry("3.191.3").unwrap(), &cfg, &Quadrature::new());
        assert_eq!(out.len(), 20);
        assert!(out.iter().all(|o| o.status == Status::Pass));
    }

    #[test]
    fn zero_valued_entry_passes_on_absolute_tolerance() {
        let cfg = RunConfig::default();
        let out = verify_entry(catalog::entry("eq-11.5").unwrap(), &cfg, &Quadrature::new());
        for o in out {
            assert_eq!(o.status, Status::Pass);
            assert!(o.numeric.unwrap().abs() <= 1e-9);
        }
    }
}

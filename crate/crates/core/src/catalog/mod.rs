//! The roster of beta-function identities.
//!
//! Each [`IdentityRecord`] pairs an integrand with the closed form it is
//! supposed to equal, the region of parameter space where the identity
//! holds, and an [`IntegralSpec`] describing where the integrand is
//! singular. Records are plain data with function pointers, so the whole
//! roster is a `static` and can be shared across threads freely.

mod group_a;
mod group_b;
mod group_c;
mod group_d;
mod group_e;
mod group_f;
mod group_g;
mod group_h;
mod group_i;
mod group_j;
mod mathx;
mod prelude;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quad::{IntegralSpec, Point};
use crate::specfun::SpecFunError;

pub use mathx::{ln_unit, logaddexp, softplus};

/// Default fraction of a range's width kept clear of open bounds and
/// excluded points when sampling.
pub const DEFAULT_MARGIN: f64 = 0.05;

/// Rejection-sampling bound for relations between parameters.
pub const MAX_SAMPLE_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Real,
    Integer,
}

/// One named parameter with its admissible range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
    /// Points removed from the range, e.g. removable singularities of
    /// the closed form.
    pub exclude: &'static [f64],
}

impl ParamSpec {
    /// Real parameter on `(lo, hi)`.
    pub const fn open(name: &'static str, lo: f64, hi: f64) -> Self {
        Self {
            name,
            kind: ParamKind::Real,
            lo,
            hi,
            lo_open: true,
            hi_open: true,
            exclude: &[],
        }
    }

    /// Real parameter on `(lo, hi]`.
    pub const fn open_closed(name: &'static str, lo: f64, hi: f64) -> Self {
        Self {
            hi_open: false,
            ..Self::open(name, lo, hi)
        }
    }

    /// Real parameter on `[lo, hi]`.
    pub const fn closed(name: &'static str, lo: f64, hi: f64) -> Self {
        Self {
            lo_open: false,
            hi_open: false,
            ..Self::open(name, lo, hi)
        }
    }

    /// Integer parameter on `lo..=hi`.
    pub const fn int(name: &'static str, lo: i64, hi: i64) -> Self {
        Self {
            kind: ParamKind::Integer,
            ..Self::closed(name, lo as f64, hi as f64)
        }
    }

    pub const fn excluding(self, exclude: &'static [f64]) -> Self {
        Self { exclude, ..self }
    }

    /// Whether `x` lies in the declared range, ignoring the margin.
    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_open {
            x > self.lo
        } else {
            x >= self.lo
        };
        let below = if self.hi_open {
            x < self.hi
        } else {
            x <= self.hi
        };
        let integral = self.kind == ParamKind::Real || x == x.trunc();
        above && below && integral && !self.exclude.contains(&x)
    }
}

/// A constraint between parameters, e.g. `n > m`.
///
/// `holds` receives the parameter values in declaration order. Strict
/// inequalities carry a small explicit slack so that sampled points stay
/// away from the boundary where the integral stops converging.
#[derive(Clone, Copy)]
pub struct Relation {
    pub text: &'static str,
    pub vars: &'static [&'static str],
    pub holds: fn(&[f64]) -> bool,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ParamDomain {
    pub params: &'static [ParamSpec],
    pub relations: &'static [Relation],
    pub margin: f64,
}

impl ParamDomain {
    pub const fn new(params: &'static [ParamSpec], relations: &'static [Relation]) -> Self {
        Self {
            params,
            relations,
            margin: DEFAULT_MARGIN,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p.name == name)
    }

    /// Whether `values` satisfies every range, exclusion and relation.
    pub fn contains(&self, values: &[f64]) -> bool {
        values.len() == self.params.len()
            && self.params.iter().zip(values).all(|(p, &x)| p.contains(x))
            && self.relations.iter().all(|r| (r.holds)(values))
    }

    /// The interval sampled for a real parameter once the margin is applied.
    pub fn sampling_range(&self, p: &ParamSpec) -> (f64, f64) {
        let pad = self.margin * (p.hi - p.lo);
        let lo = if p.lo_open { p.lo + pad } else { p.lo };
        let hi = if p.hi_open { p.hi - pad } else { p.hi };
        (lo, hi)
    }

    /// Radius kept clear around each excluded point.
    pub fn exclusion_radius(&self, p: &ParamSpec) -> f64 {
        self.margin * (p.hi - p.lo)
    }
}

/// Accuracy demanded of the numerical integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToleranceClass {
    Standard,
    PrincipalValue,
    Combined,
}

impl ToleranceClass {
    pub fn rtol(self) -> f64 {
        match self {
            ToleranceClass::Standard => 1e-8,
            ToleranceClass::PrincipalValue => 1e-6,
            ToleranceClass::Combined => 1e-7,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ToleranceClass::Standard => "standard",
            ToleranceClass::PrincipalValue => "principal_value",
            ToleranceClass::Combined => "combined",
        }
    }
}

type ClosedForm = fn(&[f64]) -> Result<f64, SpecFunError>;

/// One identity: integrand, singularity structure and closed form.
#[derive(Clone, Copy)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub group: Group,
    pub citation: &'static str,
    pub domain: ParamDomain,
    pub tolerance: ToleranceClass,
    /// Absolute tolerance floor; nonzero only for identities whose value is 0.
    pub abs_tol: f64,
    integrand: fn(&[f64], Point) -> f64,
    spec: fn(&[f64]) -> IntegralSpec,
    closed_form: ClosedForm,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("group", &self.group)
            .field("tolerance", &self.tolerance)
            .finish_non_exhaustive()
    }
}

impl IdentityRecord {
    #[allow(clippy::too_many_arguments)]
    pub(crate) const fn new(
        id: &'static str,
        group: Group,
        citation: &'static str,
        params: &'static [ParamSpec],
        relations: &'static [Relation],
        integrand: fn(&[f64], Point) -> f64,
        spec: fn(&[f64]) -> IntegralSpec,
        closed_form: ClosedForm,
    ) -> Self {
        Self {
            id,
            group,
            citation,
            domain: ParamDomain::new(params, relations),
            tolerance: ToleranceClass::Standard,
            abs_tol: 0.0,
            integrand,
            spec,
            closed_form,
        }
    }

    pub(crate) const fn tolerance(self, tolerance: ToleranceClass) -> Self {
        Self { tolerance, ..self }
    }

    pub(crate) const fn abs_tol(self, abs_tol: f64) -> Self {
        Self { abs_tol, ..self }
    }

    /// The integrand with `params` bound.
    pub fn integrand<'a>(&self, params: &'a [f64]) -> impl Fn(Point) -> f64 + Sync + 'a {
        let f = self.integrand;
        move |p| f(params, p)
    }

    pub fn spec(&self, params: &[f64]) -> IntegralSpec {
        (self.spec)(params)
    }

    pub fn closed_form(&self, params: &[f64]) -> Result<f64, SpecFunError> {
        (self.closed_form)(params)
    }

    /// Whether the integral is a principal value.
    pub fn is_pv(&self) -> bool {
        self.tolerance == ToleranceClass::PrincipalValue
    }

    /// Builds a parameter vector from `(name, value)` pairs.
    pub fn bind(&self, pairs: &[(&str, f64)]) -> Result<Vec<f64>, CatalogError> {
        let mut out = Vec::with_capacity(self.domain.params.len());
        for p in self.domain.params {
            let value = pairs
                .iter()
                .find(|(n, _)| *n == p.name)
                .map(|&(_, v)| v)
                .ok_or_else(|| CatalogError::MissingParam {
                    id: self.id.to_string(),
                    name: p.name.to_string(),
                })?;
            out.push(value);
        }
        if let Some((name, _)) = pairs
            .iter()
            .find(|(n, _)| self.domain.index_of(n).is_none())
        {
            return Err(CatalogError::UnknownParam {
                id: self.id.to_string(),
                name: name.to_string(),
            });
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown identity `{id}`{}", suggestion_text(.suggestions))]
    UnknownId {
        id: String,
        suggestions: Vec<String>,
    },
    #[error("could not sample parameters for {id} within {attempts} attempts")]
    DomainTooTight { id: String, attempts: usize },
    #[error("{id} needs a value for parameter `{name}`")]
    MissingParam { id: String, name: String },
    #[error("{id} has no parameter `{name}`")]
    UnknownParam { id: String, name: String },
}

fn suggestion_text(s: &[String]) -> String {
    if s.is_empty() {
        String::new()
    } else {
        alloc::format!("; did you mean {}?", s.join(", "))
    }
}

static GROUPS: [&[IdentityRecord]; 10] = [
    group_a::ENTRIES,
    group_b::ENTRIES,
    group_c::ENTRIES,
    group_d::ENTRIES,
    group_e::ENTRIES,
    group_f::ENTRIES,
    group_g::ENTRIES,
    group_h::ENTRIES,
    group_i::ENTRIES,
    group_j::ENTRIES,
];

/// Number of identities in the roster.
pub const ROSTER_SIZE: usize = 80;

/// The full roster, grouped A–J, in roster order within each group.
pub fn all_entries() -> impl Iterator<Item = &'static IdentityRecord> {
    GROUPS.iter().flat_map(|g| g.iter())
}

/// Looks up one identity by id.
pub fn entry(id: &str) -> Result<&'static IdentityRecord, CatalogError> {
    all_entries()
        .find(|r| r.id == id)
        .ok_or_else(|| CatalogError::UnknownId {
            id: id.to_string(),
            suggestions: near_matches(id),
        })
}

/// Ids that share a prefix of at least three characters with `id`, or
/// contain it, closest first.
fn near_matches(id: &str) -> Vec<String> {
    let common = |a: &str| {
        a.chars()
            .zip(id.chars())
            .take_while(|(x, y)| x == y)
            .count()
    };
    let mut scored: Vec<(usize, &str)> = all_entries()
        .map(|r| r.id)
        .filter_map(|cand| {
            let c = common(cand);
            if c >= 3 || (id.len() >= 3 && cand.contains(id)) {
                Some((c, cand))
            } else {
                None
            }
        })
        .collect();
    scored.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(b.1)));
    scored
        .into_iter()
        .take(5)
        .map(|(_, s)| s.to_string())
        .collect()
}

/// Deterministic parameter draw for `(record, seed, index)`.
///
/// Reals are uniform on the margin-shrunk range, integers uniform on
/// their range; the whole draw is repeated until every relation holds.
pub fn sample_params(
    rec: &IdentityRecord,
    seed: u64,
    index: u64,
) -> Result<Vec<f64>, CatalogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, rec.id, index));
    let dom = &rec.domain;
    let mut values = alloc::vec![0.0; dom.params.len()];
    for _ in 0..MAX_SAMPLE_ATTEMPTS {
        let mut ok = true;
        for (slot, p) in values.iter_mut().zip(dom.params) {
            match draw(dom, p, &mut rng) {
                Some(x) => *slot = x,
                None => ok = false,
            }
        }
        if ok && dom.relations.iter().all(|r| (r.holds)(&values)) {
            return Ok(values);
        }
    }
    Err(CatalogError::DomainTooTight {
        id: rec.id.to_string(),
        attempts: MAX_SAMPLE_ATTEMPTS,
    })
}

fn draw(dom: &ParamDomain, p: &ParamSpec, rng: &mut ChaCha8Rng) -> Option<f64> {
    match p.kind {
        ParamKind::Integer => {
            let x = rng.gen_range(p.lo as i64..=p.hi as i64) as f64;
            (!p.exclude.contains(&x)).then_some(x)
        }
        ParamKind::Real => {
            let (lo, hi) = dom.sampling_range(p);
            let x = if lo < hi { rng.gen_range(lo..=hi) } else { lo };
            let r = dom.exclusion_radius(p);
            p.exclude.iter().all(|&e| (x - e).abs() > r).then_some(x)
        }
    }
}

/// FNV-1a over the seed, the id and the index.
fn stream_seed(seed: u64, id: &str, index: u64) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    seed.to_le_bytes()
        .iter()
        .chain(id.as_bytes())
        .chain(index.to_le_bytes().iter())
        .fold(OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(PRIME))
}

/// The closed-form right-hand side at `params`.
pub fn closed_form_value(rec: &IdentityRecord, params: &[f64]) -> Result<f64, SpecFunError> {
    rec.closed_form(params)
}

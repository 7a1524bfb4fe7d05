//! Shared imports for the roster files.

pub(crate) use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
pub(crate) use num_traits::Float;

pub(crate) use super::mathx::*;
pub(crate) use super::{Group, IdentityRecord, ParamSpec as P, Relation, ToleranceClass};
pub(crate) use crate::quad::{IntegralSpec, Point};
pub(crate) use crate::specfun::{
    beta, binomial, cos_pi, cot_pi, csc_pi, factorial, gamma, Result, SpecFunError,
};

/// Rejects a non-finite closed-form value.
pub(crate) fn finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(SpecFunError::NotFinite)
    }
}

pub(crate) const fn rel(
    text: &'static str,
    vars: &'static [&'static str],
    holds: fn(&[f64]) -> bool,
) -> Relation {
    Relation { text, vars, holds }
}

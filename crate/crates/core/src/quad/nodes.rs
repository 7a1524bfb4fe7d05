//! Abscissa/weight tables for the three double-exponential transforms.
//!
//! All three share the inner map `v(t) = (π/2) sinh t`. Level 0 samples
//! `t ∈ ℤ`; level `k ≥ 1` adds the odd multiples of `2^{-k}`, so the sum
//! over levels `0..=k` is the trapezoidal rule with step `2^{-k}`.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

/// Tanh-sinh nodes are kept while `1 − tanh v ≥ 1e-300`.
const FINITE_V_MAX: f64 = 345.0;
/// Exp-sinh and sinh-sinh nodes are kept while `e^{|v|} ≤ ~1e300`.
const INFINITE_V_MAX: f64 = 690.0;

/// A symmetric tanh-sinh node pair on `(−1, 1)`.
///
/// `d = 1 − tanh v` is the distance to the nearer endpoint; the mirror
/// node sits at the same distance from the other end.
#[derive(Debug, Clone, Copy)]
pub(crate) struct FiniteNode {
    pub d: f64,
    pub w: f64,
}

/// An exp-sinh node: distance `e^{v}` from the finite end.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HalfNode {
    pub e: f64,
    pub w: f64,
}

/// A symmetric sinh-sinh node pair at `±x`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RealNode {
    pub x: f64,
    pub w: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct NodeTables {
    pub finite: Vec<Vec<FiniteNode>>,
    pub half: Vec<Vec<HalfNode>>,
    pub real: Vec<Vec<RealNode>>,
}

/// Center weight shared by tanh-sinh and sinh-sinh (`t = 0`).
pub(crate) const CENTER_WEIGHT: f64 = FRAC_PI_2;

impl NodeTables {
    pub fn build(max_level: usize) -> Self {
        let mut finite = Vec::with_capacity(max_level + 1);
        let mut half = Vec::with_capacity(max_level + 1);
        let mut real = Vec::with_capacity(max_level + 1);
        for level in 0..=max_level {
            finite.push(finite_level(level));
            half.push(half_level(level));
            real.push(real_level(level));
        }
        Self { finite, half, real }
    }

    pub fn max_level(&self) -> usize {
        self.finite.len() - 1
    }
}

/// Positive abscissae `t` that belong to `level`, until `v(t)` exceeds `v_max`.
fn level_abscissae(level: usize, v_max: f64) -> impl Iterator<Item = f64> {
    let h = (0.5f64).powi(level as i32);
    let (first, stride) = if level == 0 { (1.0, 1.0) } else { (h, 2.0 * h) };
    (0..)
        .map(move |k| first + k as f64 * stride)
        .take_while(move |&t| FRAC_PI_2 * t.sinh() <= v_max)
}

fn finite_level(level: usize) -> Vec<FiniteNode> {
    level_abscissae(level, FINITE_V_MAX)
        .map(|t| {
            let v = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * v).exp();
            let d = 2.0 * e / (1.0 + e);
            // 1/cosh²v = 4e/(1+e)², free of overflow for large v
            let w = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
            FiniteNode { d, w }
        })
        .collect()
}

fn half_level(level: usize) -> Vec<HalfNode> {
    let mut out = Vec::new();
    if level == 0 {
        out.push(HalfNode {
            e: 1.0,
            w: FRAC_PI_2,
        });
    }
    for t in level_abscissae(level, INFINITE_V_MAX) {
        let v = FRAC_PI_2 * t.sinh();
        let c = FRAC_PI_2 * t.cosh();
        out.push(HalfNode {
            e: v.exp(),
            w: c * v.exp(),
        });
        out.push(HalfNode {
            e: (-v).exp(),
            w: c * (-v).exp(),
        });
    }
    out
}

fn real_level(level: usize) -> Vec<RealNode> {
    level_abscissae(level, INFINITE_V_MAX)
        .map(|t| {
            let v = FRAC_PI_2 * t.sinh();
            RealNode {
                x: v.sinh(),
                w: FRAC_PI_2 * t.cosh() * v.cosh(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_finite_and_positive() {
        let t = NodeTables::build(6);
        for lvl in &t.finite {
            for n in lvl {
                assert!(n.d > 0.0 && n.d <= 1.0 && n.w >= 0.0 && n.w.is_finite());
            }
        }
        for lvl in &t.half {
            for n in lvl {
                assert!(n.e > 0.0 && n.e.is_finite() && n.w.is_finite());
            }
        }
        for lvl in &t.real {
            for n in lvl {
                assert!(n.x > 0.0 && n.x.is_finite() && n.w.is_finite());
            }
        }
        // step halves, so each level after the first doubles the node count
        assert!(t.finite[6].len() > 30 * t.finite[1].len());
    }

    #[test]
    fn finite_nodes_reach_deep_into_the_endpoint() {
        let t = NodeTables::build(0);
        let smallest = t.finite[0].iter().map(|n| n.d).fold(1.0, f64::min);
        assert!((1e-300..1e-200).contains(&smallest));
    }
}

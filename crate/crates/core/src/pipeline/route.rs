use std::fmt;

use super::{synthesize_kcycle_with, synthesize_mmd_with, Route, SynthOptions, SynthesisReport};
use crate::circuit::Circuit;
use crate::error::Result;
use crate::perm::{distance_metric, nop_metric, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    /// Narrow functions.
    Small,
    /// Scattered functions with many patterns.
    Scattered,
    /// Near-identity or highly regular functions.
    Regular,
}

impl Category {
    pub fn number(&self) -> u8 {
        match self {
            Category::Small => 1,
            Category::Scattered => 2,
            Category::Regular => 3,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RouterConfig {
    pub distance_threshold: f64,
    /// The pattern threshold is this factor times 2^n.
    pub nop_factor: f64,
    /// Widths below this are always category 1.
    pub small_cutoff: u32,
    /// Whether a distance exactly at the threshold counts as scattered.
    pub tie_to_scattered: bool,
}

impl Default for RouterConfig {
    fn default() -> Self {
        Self { distance_threshold: 0.5, nop_factor: 0.005, small_cutoff: 7, tie_to_scattered: false }
    }
}

impl RouterConfig {
    pub fn nop_threshold(&self, n: u32) -> f64 {
        self.nop_factor * (1u64 << n) as f64
    }
}

pub fn classify(p: &Permutation, cfg: &RouterConfig) -> Category {
    let n = p.width();
    if n < cfg.small_cutoff {
        return Category::Small;
    }
    let d = distance_metric(p).value();
    let far = d > cfg.distance_threshold || (cfg.tie_to_scattered && d == cfg.distance_threshold);
    if far && nop_metric(p) as f64 >= cfg.nop_threshold(n) {
        Category::Scattered
    } else {
        Category::Regular
    }
}

pub fn synthesize_hybrid(p: &Permutation, cfg: &RouterConfig) -> Result<(Circuit, SynthesisReport)> {
    synthesize_hybrid_with(p, cfg, &SynthOptions { small_cutoff: cfg.small_cutoff, ..Default::default() })
}

/// Routes by category: small widths take the cycle method and keep the
/// cheaper of it and the transformation stand-in, scattered functions take the
/// cycle method, and regular ones the stand-in.
pub fn synthesize_hybrid_with(
    p: &Permutation,
    cfg: &RouterConfig,
    opts: &SynthOptions,
) -> Result<(Circuit, SynthesisReport)> {
    let category = classify(p, cfg);
    let (circuit, mut report) = match category {
        Category::Small => {
            let (kc, mut kr) = synthesize_kcycle_with(p, opts)?;
            kr.method = Route::HybridKcyclePost;
            let (mc, mut mr) = synthesize_mmd_with(p, opts)?;
            if mr.verified != Some(false) && mr.cost < kr.cost {
                mr.method = Route::HybridKcyclePostMmd;
                mr.seconds += kr.seconds;
                (mc, mr)
            } else {
                kr.seconds += mr.seconds;
                (kc, kr)
            }
        }
        Category::Scattered => {
            let (c, mut r) = synthesize_kcycle_with(p, opts)?;
            r.method = Route::HybridKcycle;
            (c, r)
        }
        Category::Regular => {
            let (c, mut r) = synthesize_mmd_with(p, opts)?;
            r.method = Route::HybridMmd;
            (c, r)
        }
    };
    report.category = category;
    Ok((circuit, report))
}

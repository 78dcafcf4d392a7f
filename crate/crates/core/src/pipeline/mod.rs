//! End-to-end synthesis and routing.

mod route;
mod transform;

use std::fmt;
use std::time::{Duration, Instant};

pub use route::{classify, synthesize_hybrid, synthesize_hybrid_with, Category, RouterConfig};
pub use transform::{mmd_standin, preprocess_fix_special};

use crate::blocks::synthesize_block;
use crate::circuit::{circuit_cost, default_sim_limit, peephole_simplify, simulate, Circuit};
use crate::decompose::{decompose, decompose_small, estimate_cost, BBSchedule};
use crate::error::{Error, Result};
use crate::perm::{distance_metric, nop_metric, Distance, Parity, Permutation};

/// Which synthesizer produced a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Kcycle,
    MmdStandin,
    HybridKcycle,
    HybridKcyclePost,
    HybridKcyclePostMmd,
    HybridMmd,
}

impl Route {
    pub fn is_standin(&self) -> bool {
        matches!(self, Route::MmdStandin | Route::HybridKcyclePostMmd | Route::HybridMmd)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Kcycle => "kcycle",
            Route::MmdStandin => "mmd-standin",
            Route::HybridKcycle => "hybrid:kcycle",
            Route::HybridKcyclePost => "hybrid:kcycle+post",
            Route::HybridKcyclePostMmd => "hybrid:kcycle+post(mmd-standin)",
            Route::HybridMmd => "hybrid:mmd-standin",
        })
    }
}

/// Per-run metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisReport {
    pub method: Route,
    pub n: u32,
    pub gates: usize,
    pub cost: u64,
    /// Worst-case bound from the schedule; only set for cycle-based circuits.
    pub estimate: Option<u64>,
    pub distance: Distance,
    pub nop: usize,
    pub category: Category,
    /// `None` when verification was skipped.
    pub verified: Option<bool>,
    pub seconds: f64,
    pub notes: Vec<String>,
}

impl SynthesisReport {
    /// `key=value` lines in fixed order.
    pub fn to_kv(&self) -> String {
        let estimate = self.estimate.map_or("none".to_string(), |e| e.to_string());
        let verified = match self.verified {
            Some(true) => "true",
            Some(false) => "false",
            None => "skipped",
        };
        let mut s = format!(
            "method={}\nn={}\ngates={}\ncost={}\nestimate={}\ndistance={}\nnop={}\ncategory={}\nverified={}\nseconds={:.6}\n",
            self.method,
            self.n,
            self.gates,
            self.cost,
            estimate,
            self.distance,
            self.nop,
            self.category,
            verified,
            self.seconds
        );
        for note in &self.notes {
            s.push_str("note=");
            s.push_str(note);
            s.push('\n');
        }
        s
    }
}

/// Knobs shared by the synthesis entry points.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthOptions {
    pub verify: bool,
    pub timeout: Option<Duration>,
    /// Widths below this use the transposition-only schedule.
    pub small_cutoff: u32,
}

impl Default for SynthOptions {
    fn default() -> Self {
        Self { verify: true, timeout: None, small_cutoff: 7 }
    }
}

struct Clock {
    start: Instant,
    limit: Option<Duration>,
}

impl Clock {
    fn new(limit: Option<Duration>) -> Self {
        Self { start: Instant::now(), limit }
    }

    fn check(&self) -> Result<()> {
        match self.limit {
            Some(l) if self.start.elapsed() > l => Err(Error::Timeout(l.as_secs_f64())),
            _ => Ok(()),
        }
    }

    fn seconds(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

/// True iff `c` realizes `p` exactly.
pub fn verify(c: &Circuit, p: &Permutation) -> Result<bool> {
    if c.width() != p.width() {
        return Err(Error::WidthMismatch { left: c.width(), right: p.width() });
    }
    Ok(&simulate(c)? == p)
}

fn verdict(c: &Circuit, p: &Permutation, opts: &SynthOptions) -> Option<bool> {
    if !opts.verify || p.width() > default_sim_limit() {
        return None;
    }
    verify(c, p).ok()
}

/// The schedule used for `p`, which must already fix 0 and every 2^i.
pub fn schedule_for(p: &Permutation, small_cutoff: u32) -> Result<BBSchedule> {
    if p.width() >= small_cutoff.max(7) {
        decompose(p)
    } else {
        decompose_small(p)
    }
}

/// The cycle-based method with default options.
pub fn synthesize_kcycle(p: &Permutation) -> Result<(Circuit, SynthesisReport)> {
    synthesize_kcycle_with(p, &SynthOptions::default())
}

pub fn synthesize_kcycle_with(
    p: &Permutation,
    opts: &SynthOptions,
) -> Result<(Circuit, SynthesisReport)> {
    let clock = Clock::new(opts.timeout);
    let n = p.width();
    let (pre, rest) = preprocess_fix_special(p);
    let schedule = schedule_for(&rest, opts.small_cutoff)?;
    let mut circuit = pre.clone();
    for task in &schedule.tasks {
        clock.check()?;
        circuit.append(&synthesize_block(task.kind, &task.operands(), n)?)?;
    }
    let circuit = peephole_simplify(&circuit);
    let mut notes = Vec::new();
    if p.parity() == Parity::Odd {
        notes.push("odd permutation: leftover transposition synthesized with a full-width gate".into());
    }
    let verified = verdict(&circuit, p, opts);
    if verified.is_none() {
        notes.push("verification skipped".into());
    }
    let report = SynthesisReport {
        method: Route::Kcycle,
        n,
        gates: circuit.len(),
        cost: circuit_cost(&circuit),
        estimate: Some(circuit_cost(&pre) + estimate_cost(&schedule, n)),
        distance: distance_metric(p),
        nop: nop_metric(p),
        category: classify(p, &RouterConfig::default()),
        verified,
        seconds: clock.seconds(),
        notes,
    };
    Ok((circuit, report))
}

/// The transformation-based stand-in with a report.
pub fn synthesize_mmd_with(p: &Permutation, opts: &SynthOptions) -> Result<(Circuit, SynthesisReport)> {
    let clock = Clock::new(opts.timeout);
    let circuit = peephole_simplify(&mmd_standin(p));
    clock.check()?;
    let verified = verdict(&circuit, p, opts);
    let mut notes = vec!["mmd-standin replaces the spectral synthesizer; its costs are not those of the spectral method".to_string()];
    if verified.is_none() {
        notes.push("verification skipped".into());
    }
    let report = SynthesisReport {
        method: Route::MmdStandin,
        n: p.width(),
        gates: circuit.len(),
        cost: circuit_cost(&circuit),
        estimate: None,
        distance: distance_metric(p),
        nop: nop_metric(p),
        category: classify(p, &RouterConfig::default()),
        verified,
        seconds: clock.seconds(),
        notes,
    };
    Ok((circuit, report))
}

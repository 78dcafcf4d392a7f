use super::{Circuit, Gate};
use crate::error::{Error, Result};

/// Elementary-gate cost of a C^mNOT on `n` lines with no ancilla.
pub fn mct_cost(m: u32, n: u32) -> Result<u64> {
    if m >= n {
        return Err(Error::InvalidGate(format!("{m} controls on {n} lines")));
    }
    Ok(mct_cost_unchecked(m, n))
}

pub(crate) fn mct_cost_unchecked(m: u32, n: u32) -> u64 {
    let half = n.div_ceil(2);
    match m {
        0 | 1 => 1,
        2 => 5,
        _ if m <= half && n >= 5 => 12 * m as u64 - 22,
        _ if m <= n - 2 && n >= 7 => 24 * n as u64 - 88,
        _ => (1u64 << n) - 3,
    }
}

/// Cost model bound to a width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub width: u32,
}

impl CostModel {
    pub fn new(width: u32) -> Self {
        Self { width }
    }

    pub fn mct(&self, m: u32) -> Result<u64> {
        mct_cost(m, self.width)
    }

    pub fn circuit(&self, c: &Circuit) -> u64 {
        circuit_cost(c)
    }
}

/// Quantum cost of a circuit.
///
/// A maximal run of k ≥ 2 Toffolis with one shared control pair costs 2k+3.
/// Annotated blocks are charged their recorded cost and break runs.
pub fn circuit_cost(c: &Circuit) -> u64 {
    let n = c.width();
    let gates = c.gates();
    let mut total = 0u64;
    let mut at = 0usize;
    for b in c.blocks() {
        total += sequence_cost(&gates[at..b.start], n) + b.cost;
        at = b.start + b.len;
    }
    total + sequence_cost(&gates[at..], n)
}

/// Cost of a plain gate list with the shared-control merge rule.
pub(crate) fn sequence_cost(gates: &[Gate], n: u32) -> u64 {
    let mut total = 0u64;
    let mut i = 0usize;
    while i < gates.len() {
        let g = gates[i];
        if g.control_count() == 2 {
            let mut j = i + 1;
            while j < gates.len() && gates[j].controls_mask() == g.controls_mask() {
                j += 1;
            }
            let k = (j - i) as u64;
            total += if k >= 2 { 2 * k + 3 } else { 5 };
            i = j;
        } else {
            total += mct_cost_unchecked(g.control_count(), n);
            i += 1;
        }
    }
    total
}

/// Cost on a linear nearest-neighbour architecture, counting SWAPs at cost 3.
pub fn lnn_cost(c: &Circuit) -> Result<u64> {
    c.gates().iter().try_fold(0u64, |acc, g| {
        let extra = match g.control_count() {
            0 => 1,
            1 => {
                let ctl = g.controls_mask().trailing_zeros();
                6 * (ctl.abs_diff(g.target()) as u64 - 1) + 1
            }
            m => return Err(Error::UnsupportedForLnn { controls: m }),
        };
        Ok(acc + extra)
    })
}

/// ⌈8.5·n·2^n⌉.
pub fn worst_case_bound(n: u32) -> u64 {
    (17 * n as u64) << n >> 1
}

/// 51·n²·2^n.
pub fn lnn_worst_case_bound(n: u32) -> u64 {
    (51 * n as u64 * n as u64) << n
}

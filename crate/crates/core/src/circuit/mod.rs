//! Multiple-control Toffoli circuits.
//!
//! A [`Gate`] flips its target line when every control line is 1. Lines are
//! numbered from the least significant bit, so line `i` is bit `i` of a code
//! word. A [`Circuit`] applies its gates left to right.

mod cost;
mod peephole;
mod sim;

use std::fmt;

pub use cost::{
    circuit_cost, lnn_cost, lnn_worst_case_bound, mct_cost, worst_case_bound, CostModel,
};
pub(crate) use cost::sequence_cost;
pub use peephole::peephole_simplify;
pub use sim::{
    apply_gate, default_sim_limit, simulate, simulate_with_limit, simulate_wordwise, BitPlanes,
    DEFAULT_SIM_LIMIT, SIM_LIMIT_ENV,
};

use crate::error::{Error, Result};
use crate::perm::check_width;

/// Positive-control generalized Toffoli gate. Controls are a bit mask over lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    controls: u32,
    target: u32,
}

impl Gate {
    pub fn new(controls: &[u32], target: u32) -> Result<Self> {
        let mut mask = 0u32;
        for &c in controls {
            if c >= 32 {
                return Err(Error::InvalidGate(format!("control line {c} out of range")));
            }
            if mask & (1 << c) != 0 {
                return Err(Error::InvalidGate(format!("control line {c} listed twice")));
            }
            mask |= 1 << c;
        }
        Self::from_mask(mask, target)
    }

    pub fn from_mask(controls: u32, target: u32) -> Result<Self> {
        if target >= 32 {
            return Err(Error::InvalidGate(format!("target line {target} out of range")));
        }
        if controls & (1 << target) != 0 {
            return Err(Error::InvalidGate(format!("target line {target} is also a control")));
        }
        Ok(Self { controls, target })
    }

    pub(crate) fn mask_unchecked(controls: u32, target: u32) -> Self {
        debug_assert!(target < 32 && controls & (1 << target) == 0);
        Self { controls, target }
    }

    pub fn not(target: u32) -> Self {
        Self::mask_unchecked(0, target)
    }

    pub fn cnot(control: u32, target: u32) -> Self {
        assert_ne!(control, target);
        Self::mask_unchecked(1 << control, target)
    }

    pub fn toffoli(c1: u32, c2: u32, target: u32) -> Self {
        assert!(c1 != c2 && c1 != target && c2 != target);
        Self::mask_unchecked((1 << c1) | (1 << c2), target)
    }

    pub fn controls_mask(&self) -> u32 {
        self.controls
    }

    /// Control lines in increasing order.
    pub fn controls(&self) -> impl Iterator<Item = u32> + '_ {
        (0..32).filter(move |i| self.controls & (1 << i) != 0)
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn control_count(&self) -> u32 {
        self.controls.count_ones()
    }

    /// Highest line index the gate touches.
    pub fn max_line(&self) -> u32 {
        let top_control = 31u32.saturating_sub(self.controls.leading_zeros());
        if self.controls == 0 {
            self.target
        } else {
            self.target.max(top_control)
        }
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        if x & self.controls == self.controls {
            x ^ (1 << self.target)
        } else {
            x
        }
    }

    /// Sufficient condition for `self` and `other` to commute: neither writes a line
    /// the other reads.
    pub fn commutes_with(&self, other: &Gate) -> bool {
        self.controls & (1 << other.target) == 0 && other.controls & (1 << self.target) == 0
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.control_count() + 1)?;
        let mut first = true;
        for c in self.controls() {
            f.write_str(if first { " " } else { "," })?;
            write!(f, "x{c}")?;
            first = false;
        }
        f.write_str(if first { " " } else { "," })?;
        write!(f, "x{}", self.target)
    }
}

/// A contiguous run of gates charged a fixed cost instead of the per-gate model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CostBlock {
    pub start: usize,
    pub len: usize,
    pub cost: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    width: u32,
    gates: Vec<Gate>,
    blocks: Vec<CostBlock>,
}

impl Circuit {
    pub fn new(width: u32) -> Result<Self> {
        check_width(width)?;
        Ok(Self { width, gates: Vec::new(), blocks: Vec::new() })
    }

    pub(crate) fn empty(width: u32) -> Self {
        Self { width, gates: Vec::new(), blocks: Vec::new() }
    }

    pub fn from_gates(width: u32, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Self::new(width)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn blocks(&self) -> &[CostBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) -> Result<()> {
        if g.max_line() >= self.width {
            return Err(Error::InvalidGate(format!(
                "gate {g} uses a line outside width {}",
                self.width
            )));
        }
        self.gates.push(g);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, g: Gate) {
        debug_assert!(g.max_line() < self.width);
        self.gates.push(g);
    }

    /// Marks `gates[start..start + len]` as a block charged `cost`.
    pub fn add_block(&mut self, start: usize, len: usize, cost: u64) -> Result<()> {
        if len == 0 || start + len > self.gates.len() {
            return Err(Error::InvalidGate(format!("block {start}+{len} outside circuit")));
        }
        let overlaps = self.blocks.iter().any(|b| start < b.start + b.len && b.start < start + len);
        if overlaps {
            return Err(Error::InvalidGate(format!("block {start}+{len} overlaps another block")));
        }
        self.blocks.push(CostBlock { start, len, cost });
        self.blocks.sort_by_key(|b| b.start);
        Ok(())
    }

    /// Appends `other`, keeping its cost blocks.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.width != self.width {
            return Err(Error::WidthMismatch { left: self.width, right: other.width });
        }
        let offset = self.gates.len();
        self.gates.extend_from_slice(&other.gates);
        self.blocks.extend(other.blocks.iter().map(|b| CostBlock { start: b.start + offset, ..*b }));
        Ok(())
    }

    pub fn concat(&self, other: &Circuit) -> Result<Circuit> {
        let mut c = self.clone();
        c.append(other)?;
        Ok(c)
    }

    /// The inverse circuit. Every gate is self-inverse, so this is the reversed list.
    pub fn reversed(&self) -> Circuit {
        let total = self.gates.len();
        let gates = self.gates.iter().rev().copied().collect();
        let mut blocks: Vec<CostBlock> = self
            .blocks
            .iter()
            .map(|b| CostBlock { start: total - b.start - b.len, ..*b })
            .collect();
        blocks.sort_by_key(|b| b.start);
        Circuit { width: self.width, gates, blocks }
    }

    /// Counts gates by control count: index 0 is NOT, 1 is CNOT, 2 is Toffoli.
    pub fn gate_histogram(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.width as usize];
        for g in &self.gates {
            h[g.control_count() as usize] += 1;
        }
        h
    }
}

//! Building blocks: small groups of cycles realized as π · κ0 · π⁻¹.
//!
//! κ0 is a fixed circuit that performs the block's cycles on a handful of
//! words near `2^n − 1`. π moves the caller's words onto those positions.

mod conjugator;
mod kappa;

use std::fmt;

pub use conjugator::conjugator;
pub use kappa::{
    kappa_2_2, kappa_3, kappa_3_3, kappa_4_2, kappa_4_4, kappa_5, kappa_5_5, kappa_transposition,
};

use crate::circuit::Circuit;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuildingBlockKind {
    Pair22,
    Single3,
    Pair33,
    Pair42,
    Pair44,
    Single5,
    Pair55,
    SingleTransposition,
}

/// Linear cost bound `a·n + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostBound {
    pub a: i64,
    pub b: i64,
}

impl CostBound {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn eval(&self, n: u32) -> u64 {
        (self.a * n as i64 + self.b).max(0) as u64
    }
}

impl fmt::Display for CostBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}n-{}", self.a, -self.b)
        } else {
            write!(f, "{}n+{}", self.a, self.b)
        }
    }
}

impl BuildingBlockKind {
    pub const ALL: [BuildingBlockKind; 8] = [
        Self::Pair22,
        Self::Single3,
        Self::Pair33,
        Self::Pair42,
        Self::Pair44,
        Self::Single5,
        Self::Pair55,
        Self::SingleTransposition,
    ];

    /// The seven kinds with a κ0 circuit of linear cost.
    pub const LINEAR: [BuildingBlockKind; 7] = [
        Self::Pair22,
        Self::Single3,
        Self::Pair33,
        Self::Pair42,
        Self::Pair44,
        Self::Single5,
        Self::Pair55,
    ];

    pub fn arity(&self) -> usize {
        match self {
            Self::Pair22 => 4,
            Self::Single3 => 3,
            Self::Pair33 => 6,
            Self::Pair42 => 6,
            Self::Pair44 => 8,
            Self::Single5 => 5,
            Self::Pair55 => 10,
            Self::SingleTransposition => 2,
        }
    }

    /// Lengths of the cycles the operands are read as, in order.
    pub fn cycle_lengths(&self) -> &'static [usize] {
        match self {
            Self::Pair22 => &[2, 2],
            Self::Single3 => &[3],
            Self::Pair33 => &[3, 3],
            Self::Pair42 => &[4, 2],
            Self::Pair44 => &[4, 4],
            Self::Single5 => &[5],
            Self::Pair55 => &[5, 5],
            Self::SingleTransposition => &[2],
        }
    }

    /// Smallest width the block is built for.
    pub fn min_width(&self) -> u32 {
        match self {
            Self::Pair22 | Self::SingleTransposition => 3,
            _ => 7,
        }
    }

    /// Worst-case synthesized cost, `None` for the transposition fallback.
    pub fn cost_bound(&self) -> Option<CostBound> {
        Some(match self {
            Self::Pair22 => CostBound::new(34, -64),
            Self::Single3 => CostBound::new(32, -82),
            Self::Pair33 => CostBound::new(38, -46),
            Self::Pair42 => CostBound::new(50, -122),
            Self::Pair44 => CostBound::new(56, -126),
            Self::Single5 => CostBound::new(60, -130),
            Self::Pair55 => CostBound::new(64, -54),
            Self::SingleTransposition => return None,
        })
    }

    /// Bound at width `n`; the transposition fallback is charged 2^n−3 plus two
    /// two-word conjugators.
    pub fn bound_at(&self, n: u32) -> u64 {
        match self.cost_bound() {
            Some(b) => b.eval(n),
            None => transposition_bound(n),
        }
    }

    /// Bound divided by the number of words moved.
    pub fn cost_per_element(&self, n: u32) -> f64 {
        self.bound_at(n) as f64 / self.arity() as f64
    }

    pub fn kappa(&self, n: u32) -> Result<Circuit> {
        match self {
            Self::Pair22 => kappa_2_2(n),
            Self::Single3 => kappa_3(n),
            Self::Pair33 => kappa_3_3(n),
            Self::Pair42 => kappa_4_2(n),
            Self::Pair44 => kappa_4_4(n),
            Self::Single5 => kappa_5(n),
            Self::Pair55 => kappa_5_5(n),
            Self::SingleTransposition => kappa_transposition(n),
        }
    }

    /// Words moved by κ0, listed cycle by cycle in cycle order.
    pub fn kappa_words(&self, n: u32) -> Vec<u32> {
        let top = (1u64 << n) as u32;
        let k = n.div_ceil(2);
        let half = 1u32 << (n - 1);
        match self {
            Self::Pair22 => vec![top - 4, top - 3, top - 2, top - 1],
            Self::Single3 => vec![top - (1 << (k - 1)) - 1, top - 1, half - 1],
            Self::Pair33 => {
                let low = top - (1 << (k - 1));
                vec![low - 2, top - 2, half - 2, low - 1, top - 1, half - 1]
            }
            Self::Pair42 => vec![top - 4, top - 1, top - 3, top - 2, half - 2, half - 1],
            Self::Pair44 => {
                vec![top - 8, top - 2, top - 6, top - 4, top - 7, top - 1, top - 5, top - 3]
            }
            Self::Single5 => five_words(n, 1),
            Self::Pair55 => {
                let mut w = five_words(n, 2);
                w.extend(five_words(n, 1));
                w
            }
            Self::SingleTransposition => vec![top - 2, top - 1],
        }
    }
}

fn five_words(n: u32, offset: u32) -> Vec<u32> {
    let top = (1u64 << n) as u32;
    vec![
        (1 << (n - 2)) - offset,
        top - offset,
        top - (1 << (n - 2)) - offset,
        (1 << (n - 1)) - offset,
        top - (1 << (n - 3)) - offset,
    ]
}

fn transposition_bound(n: u32) -> u64 {
    (1u64 << n) - 3 + 2 * (5 * n as u64 + 12)
}

impl fmt::Display for BuildingBlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pair22 => "pair22",
            Self::Single3 => "single3",
            Self::Pair33 => "pair33",
            Self::Pair42 => "pair42",
            Self::Pair44 => "pair44",
            Self::Single5 => "single5",
            Self::Pair55 => "pair55",
            Self::SingleTransposition => "transposition",
        })
    }
}

/// π · κ0 · π⁻¹ for any kind. Operands are read cycle by cycle, e.g. Pair42
/// takes `(a, b, c, d)(e, f)` as `[a, b, c, d, e, f]`.
pub fn synthesize_block(kind: BuildingBlockKind, operands: &[u32], n: u32) -> Result<Circuit> {
    if operands.len() != kind.arity() {
        return Err(Error::InvalidOperand(format!(
            "{kind} takes {} operands, got {}",
            kind.arity(),
            operands.len()
        )));
    }
    if n < kind.min_width() {
        return Err(Error::Precondition(format!("{kind} needs n ≥ {}, got {n}", kind.min_width())));
    }
    crate::perm::check_width(n)?;
    conjugator::check_operands(operands, n)?;
    let kappa = kind.kappa(n)?;
    let words = kind.kappa_words(n);
    let pi = if kind == BuildingBlockKind::SingleTransposition {
        let a = conjugator::block_conjugator(operands, &words, n)?;
        let b = conjugator::block_conjugator(&[operands[1], operands[0]], &words, n)?;
        if crate::circuit::circuit_cost(&b) < crate::circuit::circuit_cost(&a) {
            b
        } else {
            a
        }
    } else {
        conjugator::block_conjugator(operands, &words, n)?
    };
    let mut c = pi.clone();
    c.append(&kappa)?;
    c.append(&pi.reversed())?;
    Ok(c)
}

/// (a, b)(c, d).
pub fn syn_2_2(a: u32, b: u32, c: u32, d: u32, n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Pair22, &[a, b, c, d], n)
}

/// (a, b, c).
pub fn syn_3(a: u32, b: u32, c: u32, n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Single3, &[a, b, c], n)
}

/// (a, b, c)(d, e, f).
pub fn syn_3_3(ops: [u32; 6], n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Pair33, &ops, n)
}

/// (a, b, c, d)(e, f).
pub fn syn_4_2(ops: [u32; 6], n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Pair42, &ops, n)
}

/// (a, b, c, d)(e, f, g, h).
pub fn syn_4_4(ops: [u32; 8], n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Pair44, &ops, n)
}

/// (a, b, c, d, e).
pub fn syn_5(ops: [u32; 5], n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Single5, &ops, n)
}

/// (a, b, c, d, e)(f, g, h, i, j).
pub fn syn_5_5(ops: [u32; 10], n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::Pair55, &ops, n)
}

/// (a, b) alone, through a C^(n−1)NOT.
pub fn syn_transposition(a: u32, b: u32, n: u32) -> Result<Circuit> {
    synthesize_block(BuildingBlockKind::SingleTransposition, &[a, b], n)
}

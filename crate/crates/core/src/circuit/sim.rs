use super::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_SIM_LIMIT: u32 = 20;
pub const SIM_LIMIT_ENV: &str = "CYCLESYNTH_SIM_LIMIT";

/// Simulation width cap, taken from `CYCLESYNTH_SIM_LIMIT` when set.
pub fn default_sim_limit() -> u32 {
    std::env::var(SIM_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIM_LIMIT)
}

#[inline]
pub fn apply_gate(g: &Gate, x: u32) -> u32 {
    g.apply(x)
}

/// Truth table as bit planes: bit `j` of word `w` in plane `b` is bit `b` of the
/// image of row `64w + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitPlanes {
    width: u32,
    planes: Vec<Vec<u64>>,
}

const LOW_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

impl BitPlanes {
    pub fn identity(width: u32) -> Self {
        let words = (1usize << width).div_ceil(64);
        let planes = (0..width)
            .map(|b| {
                (0..words)
                    .map(|w| {
                        if b < 6 {
                            LOW_PATTERNS[b as usize]
                        } else if (w >> (b - 6)) & 1 == 1 {
                            u64::MAX
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Self { width, planes }
    }

    pub fn apply(&mut self, g: &Gate) {
        let t = g.target() as usize;
        let controls: Vec<usize> = g.controls().map(|c| c as usize).collect();
        let mut target = std::mem::take(&mut self.planes[t]);
        for (w, slot) in target.iter_mut().enumerate() {
            let mut m = u64::MAX;
            for &c in &controls {
                m &= self.planes[c][w];
            }
            *slot ^= m;
        }
        self.planes[t] = target;
    }

    pub fn into_permutation(self) -> Permutation {
        let size = 1usize << self.width;
        let mut table = vec![0u32; size];
        for (b, plane) in self.planes.iter().enumerate() {
            for (w, &bits) in plane.iter().enumerate() {
                let mut rest = bits;
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    let i = w * 64 + j;
                    if i < size {
                        table[i] |= 1 << b;
                    }
                    rest &= rest - 1;
                }
            }
        }
        Permutation::from_table_unchecked(self.width, table)
    }
}

/// Exhaustive simulation under the configured width cap.
pub fn simulate(c: &Circuit) -> Result<Permutation> {
    simulate_with_limit(c, default_sim_limit())
}

pub fn simulate_with_limit(c: &Circuit, limit: u32) -> Result<Permutation> {
    if c.width() > limit {
        return Err(Error::SimulationCapacity { width: c.width(), limit });
    }
    let mut planes = BitPlanes::identity(c.width());
    for g in c.gates() {
        planes.apply(g);
    }
    Ok(planes.into_permutation())
}

/// Row-at-a-time reference simulator.
pub fn simulate_wordwise(c: &Circuit) -> Result<Permutation> {
    let limit = default_sim_limit();
    if c.width() > limit {
        return Err(Error::SimulationCapacity { width: c.width(), limit });
    }
    let table = (0..1u32 << c.width())
        .map(|x| c.gates().iter().fold(x, |y, g| apply_gate(g, y)))
        .collect();
    Ok(Permutation::from_table_unchecked(c.width(), table))
}

//! Output-side row fixing: gates are appended after the function until rows
//! read as the identity.

use crate::circuit::{Circuit, Gate};
use crate::perm::Permutation;

/// A table being driven towards the identity by gates applied to its outputs.
struct Working {
    width: u32,
    table: Vec<u32>,
    pos: Vec<u32>,
    gates: Vec<Gate>,
}

impl Working {
    fn new(p: &Permutation) -> Self {
        let table = p.table().to_vec();
        let mut pos = vec![0u32; table.len()];
        for (i, &y) in table.iter().enumerate() {
            pos[y as usize] = i as u32;
        }
        Self { width: p.width(), table, pos, gates: Vec::new() }
    }

    /// Applies `g` to every output word. Only words satisfying the controls move,
    /// so the cost is proportional to the number of such words.
    fn apply(&mut self, g: Gate) {
        let all = ((1u64 << self.width) - 1) as u32;
        let ctl = g.controls_mask();
        let bit = 1u32 << g.target();
        let free = all & !ctl & !bit;
        let mut s = free;
        loop {
            let lo = ctl | s;
            let hi = lo | bit;
            let (ra, rb) = (self.pos[lo as usize], self.pos[hi as usize]);
            self.table[ra as usize] = hi;
            self.table[rb as usize] = lo;
            self.pos[lo as usize] = rb;
            self.pos[hi as usize] = ra;
            if s == 0 {
                break;
            }
            s = (s - 1) & free;
        }
        self.gates.push(g);
    }

    fn at(&self, row: u32) -> u32 {
        self.table[row as usize]
    }
}

fn ones(x: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |i| x >> i & 1 == 1)
}

/// Gates that bring rows 0, 1, 2, 4, … of `w` to the identity, in increasing
/// row order, never disturbing a row already fixed.
fn fix_special(w: &mut Working) {
    for b in ones(w.at(0)) {
        w.apply(Gate::not(b));
    }
    for i in 0..w.width {
        let row = 1u32 << i;
        let y = w.at(row);
        if y >> i & 1 == 0 {
            let seed = match ones(y).find(|&c| c > i) {
                Some(c) => Gate::cnot(c, i),
                None => {
                    let mut low = ones(y);
                    let (a, b) = (low.next().expect("y > 0"), low.next().expect("y is not 2^j"));
                    Gate::toffoli(a, b, i)
                }
            };
            w.apply(seed);
        }
        for b in ones(w.at(row)) {
            if b != i {
                w.apply(Gate::cnot(i, b));
            }
        }
        debug_assert_eq!(w.at(row), row);
    }
}

fn circuit_of(width: u32, gates: impl IntoIterator<Item = Gate>) -> Circuit {
    let mut c = Circuit::empty(width);
    for g in gates {
        c.push_unchecked(g);
    }
    c
}

/// Splits `p` into a short circuit `C` and a residual `P'` fixing 0 and every
/// 2^i, with `C` followed by `P'` equal to `p`.
pub fn preprocess_fix_special(p: &Permutation) -> (Circuit, Permutation) {
    let n = p.width();
    let mut w = Working::new(&p.inverse());
    fix_special(&mut w);
    // The table now holds P⁻¹ then G, so its inverse is G⁻¹ then P.
    let residual = Permutation::from_table_unchecked(n, std::mem::take(&mut w.pos));
    (circuit_of(n, w.gates), residual)
}

/// Transformation-based synthesis: every row in increasing order is mapped
/// back to itself by gates applied at the outputs. Stand-in for a
/// spectral-method synthesizer.
pub fn mmd_standin(p: &Permutation) -> Circuit {
    let mut w = Working::new(p);
    for r in 0..p.size() as u32 {
        let y = w.at(r);
        if y == r {
            continue;
        }
        for b in ones(r & !y) {
            let cur = w.at(r);
            w.apply(Gate::mask_unchecked(cur, b));
        }
        for b in ones(w.at(r) & !r) {
            w.apply(Gate::mask_unchecked(r, b));
        }
        debug_assert_eq!(w.at(r), r);
    }
    circuit_of(p.width(), w.gates.into_iter().rev())
}

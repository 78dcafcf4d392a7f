use super::{circuit_cost, Circuit, CostBlock, Gate};

/// How far back a gate may commute looking for its twin.
const WINDOW: usize = 256;

/// Removes pairs of identical gates that meet after commuting past gates they
/// do not interact with. Annotated blocks are left untouched and act as barriers.
pub fn peephole_simplify(c: &Circuit) -> Circuit {
    let mut out: Vec<Gate> = Vec::with_capacity(c.len());
    let mut blocks = Vec::with_capacity(c.blocks().len());
    let mut barrier = 0usize;
    let mut pending = c.blocks().iter().peekable();
    let gates = c.gates();
    let mut i = 0usize;
    while i < gates.len() {
        if let Some(b) = pending.next_if(|b| b.start == i) {
            blocks.push(CostBlock { start: out.len(), ..*b });
            out.extend_from_slice(&gates[i..i + b.len]);
            barrier = out.len();
            i += b.len;
            continue;
        }
        let g = gates[i];
        i += 1;
        let floor = barrier.max(out.len().saturating_sub(WINDOW));
        let mut cancelled = false;
        for j in (floor..out.len()).rev() {
            if out[j] == g {
                out.remove(j);
                cancelled = true;
                break;
            }
            if !out[j].commutes_with(&g) {
                break;
            }
        }
        if !cancelled {
            out.push(g);
        }
    }
    let simplified = Circuit { width: c.width(), gates: out, blocks };
    if circuit_cost(&simplified) <= circuit_cost(c) {
        simplified
    } else {
        c.clone()
    }
}

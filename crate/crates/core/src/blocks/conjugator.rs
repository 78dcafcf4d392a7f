//! Circuits that move a short list of words onto prescribed positions.
//!
//! Words are fixed one at a time. A word `x` headed for `c` picks a pivot set
//! `P` of one-bits of `c` that no already placed word covers, makes sure `x`
//! carries `P` (seeding missing bits from its own one-bits), and then flips
//! each remaining differing bit with a gate controlled on `P`. Placed words
//! never satisfy any of these controls, so they stay put.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::circuit::{peephole_simplify, sequence_cost, Circuit, Gate};
use crate::error::{Error, Result};
use crate::perm::is_special_word;

fn ones(x: u32) -> impl Iterator<Item = u32> + Clone {
    (0..32).filter(move |i| x >> i & 1 == 1)
}

fn uncovered(mask: u32, fixed: &[u32]) -> bool {
    fixed.iter().all(|&w| w & mask != mask)
}

/// Bit masks built from `size` one-bits of `x`, in lexicographic order.
fn subsets(x: u32, size: usize) -> Vec<u32> {
    let bits: Vec<u32> = ones(x).collect();
    let mut out = Vec::new();
    match size {
        1 => out.extend(bits.iter().map(|&a| 1 << a)),
        2 => {
            for (i, &a) in bits.iter().enumerate() {
                for &b in &bits[i + 1..] {
                    out.push(1 << a | 1 << b);
                }
            }
        }
        3 => {
            for (i, &a) in bits.iter().enumerate() {
                for (j, &b) in bits.iter().enumerate().skip(i + 1) {
                    for &c in &bits[j + 1..] {
                        out.push(1 << a | 1 << b | 1 << c);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    out
}

fn plan(mut x: u32, c: u32, pivot: u32, fixed: &[u32], n: u32) -> Option<Vec<Gate>> {
    let mut gates = Vec::new();
    for q in ones(pivot) {
        if x >> q & 1 == 1 {
            continue;
        }
        let seed = subsets(x, 1)
            .into_iter()
            .chain(subsets(x, 2))
            .chain(std::iter::once(x))
            .find(|&s| uncovered(s, fixed))?;
        gates.push(Gate::mask_unchecked(seed, q));
        x |= 1 << q;
    }
    for i in 0..n {
        if pivot >> i & 1 == 0 && (x ^ c) >> i & 1 == 1 {
            gates.push(Gate::mask_unchecked(pivot, i));
        }
    }
    Some(gates)
}

/// Cheapest gate list taking `x` to `c` without moving any word in `fixed`.
fn step(x: u32, c: u32, fixed: &[u32], n: u32) -> Option<(u64, Vec<Gate>)> {
    for size in 1..=3 {
        let mut best: Option<(u64, Vec<Gate>)> = None;
        for pivot in subsets(c, size) {
            if !uncovered(pivot, fixed) {
                continue;
            }
            if let Some(gates) = plan(x, c, pivot, fixed, n) {
                let cost = sequence_cost(&gates, n);
                if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                    best = Some((cost, gates));
                }
            }
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Sequential solver; `None` when some word has no admissible plan.
fn solve(values: &[u32], targets: &[u32], n: u32) -> Option<Vec<Gate>> {
    let mut cur = values.to_vec();
    let mut gates = Vec::new();
    for (j, &c) in targets.iter().enumerate() {
        if cur[j] == c {
            continue;
        }
        let (_, plan) = step(cur[j], c, &targets[..j], n)?;
        for g in plan {
            cur.iter_mut().for_each(|v| *v = g.apply(*v));
            gates.push(g);
        }
        debug_assert_eq!(cur[j], c);
    }
    Some(gates)
}

/// Maps `targets` onto sparse words (single-one words first, then two-one
/// words), choosing for each target the cheapest free sparse word.
fn sparsify(targets: &[u32], n: u32) -> Option<(Vec<u32>, Vec<Gate>)> {
    let mut cur = targets.to_vec();
    let mut canon: Vec<u32> = Vec::with_capacity(targets.len());
    let mut gates = Vec::new();
    for j in 0..targets.len() {
        let x = cur[j];
        let mut cands: Vec<u32> = (0..n).map(|p| 1 << p).filter(|w| !canon.contains(w)).collect();
        if cands.is_empty() {
            for a in 0..n {
                for b in a + 1..n {
                    let w = 1 << a | 1 << b;
                    if !canon.contains(&w) {
                        cands.push(w);
                    }
                }
            }
        }
        let mut best: Option<(u64, Vec<Gate>, u32)> = None;
        for c in cands {
            if c == x {
                best = Some((0, Vec::new(), c));
                break;
            }
            if let Some((cost, plan)) = step(x, c, &canon, n) {
                if best.as_ref().is_none_or(|(b, _, _)| cost < *b) {
                    best = Some((cost, plan, c));
                }
            }
        }
        let (_, plan, c) = best?;
        canon.push(c);
        for g in plan {
            cur.iter_mut().for_each(|v| *v = g.apply(*v));
            gates.push(g);
        }
    }
    Some((canon, gates))
}

type SparseForm = Arc<(Vec<u32>, Vec<Gate>)>;

type SparseCache = Mutex<HashMap<(u32, Vec<u32>), Option<SparseForm>>>;

fn sparse_form(targets: &[u32], n: u32) -> Option<SparseForm> {
    static CACHE: OnceLock<SparseCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, targets.to_vec());
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&key) {
        return hit.clone();
    }
    let form = sparsify(targets, n).map(Arc::new);
    cache.lock().expect("cache poisoned").insert(key, form.clone());
    form
}

/// Routes through sparse words: `values` to the sparse form of `targets`,
/// then the inverse of the sparsifying circuit.
fn two_stage(values: &[u32], targets: &[u32], n: u32) -> Option<Vec<Gate>> {
    let form = sparse_form(targets, n)?;
    let (canon, back) = (&form.0, &form.1);
    let mut gates = solve(values, canon, n)?;
    gates.extend(back.iter().rev().copied());
    Some(gates)
}

fn circuit_of(gates: Vec<Gate>, n: u32) -> Circuit {
    let mut c = Circuit::empty(n);
    for g in gates {
        c.push_unchecked(g);
    }
    peephole_simplify(&c)
}

pub(crate) fn check_operands(values: &[u32], n: u32) -> Result<()> {
    for (i, &v) in values.iter().enumerate() {
        if v >= 1 << n {
            return Err(Error::InvalidOperand(format!("{v} does not fit in {n} bits")));
        }
        if is_special_word(v) {
            return Err(Error::InvalidOperand(format!("{v} is zero or a power of two")));
        }
        if values[..i].contains(&v) {
            return Err(Error::InvalidOperand(format!("{v} appears twice")));
        }
    }
    Ok(())
}

/// Circuit sending `values[j]` to `targets[j]` for every `j`.
///
/// Values must be distinct and neither zero nor a power of two; targets must
/// be distinct and nonzero.
pub fn conjugator(values: &[u32], targets: &[u32], n: u32) -> Result<Circuit> {
    crate::perm::check_width(n)?;
    check_operands(values, n)?;
    if values.len() != targets.len() {
        return Err(Error::InvalidOperand(format!(
            "{} values for {} targets",
            values.len(),
            targets.len()
        )));
    }
    for (i, &t) in targets.iter().enumerate() {
        if t == 0 || t >= 1 << n || targets[..i].contains(&t) {
            return Err(Error::InvalidOperand(format!("bad target {t}")));
        }
    }
    let gates = solve(values, targets, n)
        .or_else(|| two_stage(values, targets, n))
        .ok_or_else(|| Error::Unreachable(format!("{values:?} -> {targets:?}")))?;
    Ok(circuit_of(gates, n))
}

/// The cheaper of the direct and the two-stage routes. Operands are assumed
/// valid.
pub(crate) fn block_conjugator(values: &[u32], targets: &[u32], n: u32) -> Result<Circuit> {
    if values == targets {
        return Ok(Circuit::empty(n));
    }
    let staged = two_stage(values, targets, n).map(|g| circuit_of(g, n));
    let direct = solve(values, targets, n).map(|g| circuit_of(g, n));
    let pick = match (direct, staged) {
        (Some(d), Some(s)) => {
            if crate::circuit::circuit_cost(&d) <= crate::circuit::circuit_cost(&s) {
                Some(d)
            } else {
                Some(s)
            }
        }
        (d, s) => d.or(s),
    };
    pick.ok_or_else(|| Error::Unreachable(format!("{values:?} -> {targets:?}")))
}

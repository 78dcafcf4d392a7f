//! The fixed circuits that realize each building block at its canonical words.

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

fn span(lo: u32, hi: u32) -> u32 {
    debug_assert!(lo <= hi && hi < 32);
    (u32::MAX >> (31 - hi)) & (u32::MAX << lo)
}

fn require(n: u32, min: u32) -> Result<()> {
    if n < min || n > crate::perm::MAX_WIDTH {
        return Err(Error::Precondition(format!("building block needs {min} ≤ n ≤ 24, got {n}")));
    }
    Ok(())
}

fn build(n: u32, gates: &[Gate], annotated: Option<u64>) -> Circuit {
    let mut c = Circuit::empty(n);
    for &g in gates {
        c.push_unchecked(g);
    }
    if let Some(cost) = annotated {
        c.add_block(0, gates.len(), cost).expect("fresh circuit");
    }
    c
}

/// (2^n−4, 2^n−3)(2^n−2, 2^n−1).
pub fn kappa_2_2(n: u32) -> Result<Circuit> {
    require(n, 3)?;
    Ok(build(n, &[Gate::mask_unchecked(span(2, n - 1), 0)], None))
}

fn kappa_3_with(n: u32, low: u32) -> Circuit {
    let k = n.div_ceil(2);
    let a = Gate::mask_unchecked(span(k, n - 1), k - 1);
    let b = Gate::mask_unchecked(span(low, k - 1), n - 1);
    build(n, &[a, b, a, b], None)
}

/// (2^n−2^(k−1)−1, 2^n−1, 2^(n−1)−1) with k = ⌈n/2⌉.
pub fn kappa_3(n: u32) -> Result<Circuit> {
    require(n, 7)?;
    Ok(kappa_3_with(n, 0))
}

/// The κ0(3) cycle together with its copy one below, on words ending in 0.
pub fn kappa_3_3(n: u32) -> Result<Circuit> {
    require(n, 7)?;
    Ok(kappa_3_with(n, 1))
}

/// (2^n−4, 2^n−1, 2^n−3, 2^n−2)(2^(n−1)−2, 2^(n−1)−1).
pub fn kappa_4_2(n: u32) -> Result<Circuit> {
    require(n, 7)?;
    let gates = [Gate::mask_unchecked(span(2, n - 1), 1), Gate::mask_unchecked(span(1, n - 2), 0)];
    Ok(build(n, &gates, Some(36 * n as u64 - 180)))
}

/// (2^n−8, 2^n−2, 2^n−6, 2^n−4)(2^n−7, 2^n−1, 2^n−5, 2^n−3).
pub fn kappa_4_4(n: u32) -> Result<Circuit> {
    require(n, 7)?;
    let gates = [Gate::mask_unchecked(span(3, n - 1), 2), Gate::mask_unchecked(span(2, n - 1), 1)];
    Ok(build(n, &gates, Some(36 * n as u64 - 228)))
}

fn kappa_5_with(n: u32, low: u32) -> [Gate; 4] {
    let t = Gate::toffoli(n - 1, n - 2, n - 3);
    [
        t,
        Gate::mask_unchecked(span(low, n - 3), n - 1),
        t,
        Gate::mask_unchecked(span(low, n - 3), n - 2),
    ]
}

/// (2^(n−2)−1, 2^n−1, 2^n−2^(n−2)−1, 2^(n−1)−1, 2^n−2^(n−3)−1).
pub fn kappa_5(n: u32) -> Result<Circuit> {
    require(n, 7)?;
    Ok(build(n, &kappa_5_with(n, 0), None))
}

/// The κ0(5) cycle together with its copy one below.
pub fn kappa_5_5(n: u32) -> Result<Circuit> {
    require(n, 7)?;
    Ok(build(n, &kappa_5_with(n, 1), Some(36 * n as u64 - 206)))
}

/// C^(n−1)NOT swapping 2^n−2 and 2^n−1.
pub fn kappa_transposition(n: u32) -> Result<Circuit> {
    require(n, 2)?;
    Ok(build(n, &[Gate::mask_unchecked(span(1, n - 1), 0)], None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{circuit_cost, simulate};
    use crate::perm::{compose_cycles, Cycle};

    fn cycles_of(n: u32, cs: &[&[u32]]) -> crate::perm::Permutation {
        let cs: Vec<Cycle> = cs.iter().map(|c| Cycle::new(c.to_vec()).unwrap()).collect();
        compose_cycles(&cs, n).unwrap()
    }

    #[test]
    fn span_masks() {
        assert_eq!(span(0, 0), 1);
        assert_eq!(span(2, 4), 0b11100);
        assert_eq!(span(0, 31), u32::MAX);
    }

    #[test]
    fn small_width_pair() {
        let c = kappa_2_2(3).unwrap();
        assert_eq!(simulate(&c).unwrap(), cycles_of(3, &[&[4, 5], &[6, 7]]));
        assert!(kappa_2_2(2).is_err());
        assert!(kappa_3(6).is_err());
    }

    #[test]
    fn closed_form_instances() {
        assert_eq!(simulate(&kappa_3(7).unwrap()).unwrap(), cycles_of(7, &[&[119, 127, 63]]));
        assert_eq!(simulate(&kappa_3(8).unwrap()).unwrap(), cycles_of(8, &[&[247, 255, 127]]));
        assert_eq!(simulate(&kappa_5(7).unwrap()).unwrap(), cycles_of(7, &[&[31, 127, 95, 63, 111]]));
        assert_eq!(
            simulate(&kappa_4_4(7).unwrap()).unwrap(),
            cycles_of(7, &[&[120, 126, 122, 124], &[121, 127, 123, 125]])
        );
        assert_eq!(
            simulate(&kappa_5_5(8).unwrap()).unwrap(),
            cycles_of(8, &[&[62, 254, 190, 126, 222], &[63, 255, 191, 127, 223]])
        );
    }

    #[test]
    fn costs_at_seven() {
        assert_eq!(circuit_cost(&kappa_2_2(7).unwrap()), 80);
        assert_eq!(circuit_cost(&kappa_3(7).unwrap()), 80);
        assert_eq!(circuit_cost(&kappa_3_3(7).unwrap()), 56);
        assert_eq!(circuit_cost(&kappa_4_2(7).unwrap()), 72);
        assert_eq!(circuit_cost(&kappa_4_4(7).unwrap()), 24);
        assert_eq!(circuit_cost(&kappa_5(7).unwrap()), 170);
        assert_eq!(circuit_cost(&kappa_5_5(7).unwrap()), 46);
        assert_eq!(circuit_cost(&kappa_transposition(7).unwrap()), 125);
    }
}

use cyclesynth::circuit::{
    apply_gate, circuit_cost, mct_cost, peephole_simplify, simulate, simulate_wordwise,
};
use cyclesynth::{Circuit, Gate};
use proptest::prelude::*;

fn gate(n: u32) -> impl Strategy<Value = Gate> {
    (0..n, any::<u32>()).prop_map(move |(t, m)| {
        // Favour few controls so cancellations actually happen.
        let mask = m & (m >> 7) & (m >> 13) & ((1 << n) - 1) & !(1 << t);
        Gate::from_mask(mask, t).unwrap()
    })
}

fn circuit() -> impl Strategy<Value = Circuit> {
    (2u32..=8).prop_flat_map(|n| {
        prop::collection::vec(gate(n), 0..60).prop_map(move |gs| Circuit::from_gates(n, gs).unwrap())
    })
}

proptest! {
    #[test]
    fn concat_is_sequential(a in circuit(), seed in any::<u64>()) {
        let n = a.width();
        let b = Circuit::from_gates(n, (0..8).map(|i| {
            let t = ((seed >> i) as u32) % n;
            Gate::from_mask(((seed >> (3 * i)) as u32) & ((1 << n) - 1) & !(1 << t), t).unwrap()
        })).unwrap();
        let both = simulate(&a.concat(&b).unwrap()).unwrap();
        prop_assert_eq!(both, simulate(&a).unwrap().then(&simulate(&b).unwrap()).unwrap());
    }

    #[test]
    fn gates_are_self_inverse(g in gate(8), x in 0u32..256) {
        prop_assert_eq!(apply_gate(&g, apply_gate(&g, x)), x);
    }

    #[test]
    fn reversed_is_inverse(c in circuit()) {
        let fwd = simulate(&c).unwrap();
        prop_assert_eq!(simulate(&c.reversed()).unwrap(), fwd.inverse());
    }

    #[test]
    fn bit_planes_agree_with_rows(c in circuit()) {
        prop_assert_eq!(simulate(&c).unwrap(), simulate_wordwise(&c).unwrap());
    }

    #[test]
    fn peephole_preserves_function_and_never_costs_more(c in circuit()) {
        let s = peephole_simplify(&c);
        prop_assert_eq!(simulate(&s).unwrap(), simulate(&c).unwrap());
        prop_assert!(circuit_cost(&s) <= circuit_cost(&c));
    }

    #[test]
    fn cost_at_least_gate_count(c in circuit()) {
        prop_assert!(circuit_cost(&c) >= c.len() as u64);
    }
}

#[test]
fn mct_cost_is_monotone_and_positive() {
    for n in 1..=24 {
        let mut prev = 0;
        for m in 0..n {
            let c = mct_cost(m, n).unwrap();
            assert!(c >= 1 && c >= prev, "m={m} n={n}");
            prev = c;
        }
    }
}

use cyclesynth::decompose::{decompose, decompose_small, extract_5cycles, BBSchedule};
use cyclesynth::io::gen_random_perm;
use cyclesynth::perm::{disjoint_cycles, is_special_word, Cycle, Parity, Permutation};
use cyclesynth::pipeline::preprocess_fix_special;
use cyclesynth::BuildingBlockKind as K;
use proptest::prelude::*;

fn residual(n: u32, seed: u64) -> Permutation {
    preprocess_fix_special(&gen_random_perm(n, seed, None).unwrap()).1
}

fn check_schedule(s: &BBSchedule, p: &Permutation) {
    assert_eq!(&s.compose().unwrap(), p);
    for t in &s.tasks {
        let lens: Vec<usize> = t.cycles.iter().map(Cycle::len).collect();
        assert_eq!(lens, t.kind.cycle_lengths(), "{}", t.kind);
        let ops = t.operands();
        assert!(ops.iter().all(|&w| !is_special_word(w)));
        let mut sorted = ops.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ops.len(), "{} overlaps", t.kind);
    }
}

#[test]
fn exhaustive_width_three() {
    // Every permutation of the free words 3, 5, 6, 7.
    let free = [3u32, 5, 6, 7];
    let mut idx = [0usize, 1, 2, 3];
    let mut seen = 0;
    loop {
        let mut t: Vec<u32> = (0..8).collect();
        for (k, &f) in free.iter().enumerate() {
            t[f as usize] = free[idx[k]];
        }
        let p = Permutation::new(3, t).unwrap();
        check_schedule(&decompose_small(&p).unwrap(), &p);
        seen += 1;
        // Next lexicographic arrangement.
        let Some(i) = (0..3).rev().find(|&i| idx[i] < idx[i + 1]) else { break };
        let j = (i + 1..4).rev().find(|&j| idx[j] > idx[i]).unwrap();
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
    assert_eq!(seen, 24);
}

#[test]
fn random_schedules_compose_back() {
    for n in 7..=10 {
        for seed in 0..100 {
            let p = residual(n, seed);
            check_schedule(&decompose(&p).unwrap(), &p);
        }
    }
    for n in 3..=6 {
        for seed in 0..100 {
            let p = residual(n, seed);
            check_schedule(&decompose_small(&p).unwrap(), &p);
        }
    }
}

#[test]
fn leftover_transposition_iff_odd() {
    for n in 7..=9 {
        for seed in 0..100 {
            let p = residual(n, seed);
            let s = decompose(&p).unwrap();
            let singles = s.tasks.iter().filter(|t| t.kind == K::SingleTransposition).count();
            assert!(singles <= 1);
            assert_eq!(singles == 1, p.parity() == Parity::Odd, "n={n} seed={seed}");
        }
    }
}

#[test]
fn counts_match_cycle_structure() {
    for seed in 0..100 {
        let p = residual(8, seed);
        let s = decompose(&p).unwrap();
        let c = s.counts();
        let moved = 10 * c.pair55 + 5 * c.single5 + 6 * c.pair33 + 3 * c.single3 + 8 * c.pair44
            + 6 * c.pair42 + 4 * c.pair22 + 2 * c.transpositions;
        assert!(moved >= p.moved_count());
        let total = c.pair55 + c.single5 + c.pair33 + c.single3 + c.pair44 + c.pair42 + c.pair22 + c.transpositions;
        assert_eq!(s.tasks.len(), total);
        assert!(c.single3 <= 1 && c.pair42 <= 1);
    }
}

#[test]
fn schedule_order_is_fixed() {
    let rank = |k: K| match k {
        K::Pair55 | K::Single5 => 0,
        K::Pair33 | K::Single3 => 1,
        K::Pair44 => 2,
        K::Pair42 => 3,
        K::Pair22 | K::SingleTransposition => 4,
    };
    for seed in 0..50 {
        let s = decompose(&residual(9, seed)).unwrap();
        let ranks: Vec<u8> = s.tasks.iter().map(|t| rank(t.kind)).collect();
        assert!(ranks.windows(2).all(|w| w[0] <= w[1]));
    }
}

proptest! {
    #[test]
    fn extraction_rebuilds_cycle(len in 2usize..60, seed in any::<u64>()) {
        let p = gen_random_perm(7, seed, None).unwrap();
        let words: Vec<u32> = p.table().iter().copied().filter(|&w| !is_special_word(w)).take(len).collect();
        let c = Cycle::new(words).unwrap();
        let ex = extract_5cycles(&c);
        prop_assert!(ex.fives.iter().all(|f| f.len() == 5));
        let rest = ex.residual.as_ref().map_or(0, Cycle::len);
        prop_assert!(rest <= 4 && rest != 1);
        let parts: Vec<Cycle> = ex.cycles().cloned().collect();
        let composed = cyclesynth::perm::compose_cycles(&parts, 7).unwrap();
        let expected = cyclesynth::perm::compose_cycles(&[c], 7).unwrap();
        prop_assert_eq!(composed, expected);
    }

    #[test]
    fn pairs_of_fives_are_disjoint(seed in any::<u64>()) {
        let p = residual(8, seed);
        for t in decompose(&p).unwrap().tasks.iter().filter(|t| t.kind == K::Pair55) {
            prop_assert!(t.cycles[0].is_disjoint(&t.cycles[1]));
        }
        prop_assert!(disjoint_cycles(&p).iter().all(|c| c.len() >= 2));
    }
}

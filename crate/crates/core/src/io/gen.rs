use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::perm::{check_width, Parity, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rotation {
    #[default]
    Left,
    Right,
}

/// Hidden weighted bit function: each word rotated by its Hamming weight.
pub fn gen_hwb(n: u32, dir: Rotation) -> Result<Permutation> {
    check_width(n)?;
    let mask = ((1u64 << n) - 1) as u32;
    let rot = |x: u32| -> u32 {
        let w = x.count_ones() % n;
        if w == 0 {
            return x;
        }
        match dir {
            Rotation::Left => ((x << w) | (x >> (n - w))) & mask,
            Rotation::Right => ((x >> w) | (x << (n - w))) & mask,
        }
    };
    Ok(Permutation::from_table_unchecked(n, (0..=mask).map(rot).collect()))
}

/// Seeded uniform permutation. A parity request is met by swapping rows 0
/// and 1 when the shuffle lands on the other parity.
pub fn gen_random_perm(n: u32, seed: u64, parity: Option<Parity>) -> Result<Permutation> {
    check_width(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table: Vec<u32> = (0..1u32 << n).collect();
    table.shuffle(&mut rng);
    let mut p = Permutation::from_table_unchecked(n, table);
    if let Some(want) = parity {
        if p.parity() != want {
            let mut t = p.into_table();
            t.swap(0, 1);
            p = Permutation::from_table_unchecked(n, t);
        }
    }
    Ok(p)
}

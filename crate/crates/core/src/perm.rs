//! Permutation algebra over `n`-bit code words.
//!
//! A [`Permutation`] stores the full truth table `f(0), f(1), ..., f(2^n - 1)`.
//! Cycles are written `(a_1, ..., a_k)` meaning `f(a_1) = a_2, ..., f(a_k) = a_1`,
//! and lists of cycles are always applied left to right: the first listed cycle
//! acts first.

use std::fmt;

use crate::error::{Error, Result};

/// Widest permutation the crate will build.
pub const MAX_WIDTH: u32 = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    width: u32,
    table: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.table.len() <= 64 {
            write!(f, "Permutation(n={}, {:?})", self.width, self.table)
        } else {
            write!(f, "Permutation(n={}, {} rows)", self.width, self.table.len())
        }
    }
}

pub(crate) fn check_width(width: u32) -> Result<()> {
    if width == 0 || width > MAX_WIDTH {
        return Err(Error::InvalidWidth(width));
    }
    Ok(())
}

impl Permutation {
    /// Builds a permutation from its table, checking that it is a bijection.
    pub fn new(width: u32, table: Vec<u32>) -> Result<Self> {
        check_width(width)?;
        let size = 1usize << width;
        if table.len() != size {
            return Err(Error::TableLength { expected: size, got: table.len() });
        }
        let mut seen = vec![usize::MAX; size];
        for (i, &v) in table.iter().enumerate() {
            if v as usize >= size {
                return Err(Error::ValueOutOfRange { index: i, value: v, width });
            }
            if seen[v as usize] != usize::MAX {
                return Err(Error::NotReversible { value: v, first: seen[v as usize], second: i });
            }
            seen[v as usize] = i;
        }
        Ok(Self { width, table })
    }

    /// Caller guarantees the table is a bijection of the right size.
    pub(crate) fn from_table_unchecked(width: u32, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), 1usize << width);
        Self { width, table }
    }

    pub fn identity(width: u32) -> Result<Self> {
        check_width(width)?;
        Ok(Self { width, table: (0..1u32 << width).collect() })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Number of code words, `2^n`.
    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn into_table(self) -> Vec<u32> {
        self.table
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Number of rows with `f(i) != i`.
    pub fn moved_count(&self) -> usize {
        self.table.iter().enumerate().filter(|(i, &v)| *i as u32 != v).count()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.table.len()];
        for (i, &v) in self.table.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Self { width: self.width, table: inv }
    }

    /// `self` followed by `next`: `x -> next(self(x))`.
    pub fn then(&self, next: &Permutation) -> Result<Self> {
        if self.width != next.width {
            return Err(Error::WidthMismatch { left: self.width, right: next.width });
        }
        let table = self.table.iter().map(|&v| next.table[v as usize]).collect();
        Ok(Self { width: self.width, table })
    }

    /// True when `f(0) = 0` and `f(2^i) = 2^i` for every bit `i`.
    pub fn fixes_special_rows(&self) -> bool {
        self.table[0] == 0 && (0..self.width).all(|i| self.table[1usize << i] == 1 << i)
    }

    pub fn parity(&self) -> Parity {
        parity(self)
    }

    pub fn cycles(&self) -> CycleList {
        disjoint_cycles(self)
    }
}

/// Code words that are 0 or a power of two; these are handled by pre-processing
/// and may not appear as building-block operands.
#[inline]
pub fn is_special_word(x: u32) -> bool {
    x & x.wrapping_sub(1) == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_transpositions(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A single cycle of distinct code words, length at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle(Vec<u32>);

impl Cycle {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.len() < 2 {
            return Err(Error::InvalidCycle(format!("length {} < 2", elements.len())));
        }
        let mut sorted = elements.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle(format!("element {} repeated", w[0])));
        }
        Ok(Self(elements))
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.contains(&x)
    }

    pub fn min_element(&self) -> u32 {
        *self.0.iter().min().expect("cycle is never empty")
    }

    /// The same cycle rotated so that it starts at its smallest element.
    pub fn canonical(&self) -> Cycle {
        let pos = self.0.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap_or(0);
        let mut v = self.0.clone();
        v.rotate_left(pos);
        Cycle(v)
    }

    /// True if both describe the same cyclic map (equal up to rotation).
    pub fn same_cycle(&self, other: &Cycle) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    pub fn is_disjoint(&self, other: &Cycle) -> bool {
        !self.0.iter().any(|x| other.contains(*x))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Ordered cycle factors; the first cycle is applied first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleList(pub Vec<Cycle>);

impl CycleList {
    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Cycle> {
        self.0
    }
}

impl fmt::Display for CycleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Disjoint-cycle form. Fixed points are dropped, each cycle starts at its
/// minimum element, and cycles are sorted by decreasing length then by minimum.
pub fn disjoint_cycles(p: &Permutation) -> CycleList {
    let n = p.size();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || p.table[start] as usize == start {
            continue;
        }
        // starting at the smallest unseen index means the cycle is already canonical
        let mut elems = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            elems.push(x as u32);
            x = p.table[x] as usize;
        }
        out.push(Cycle(elems));
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a.0[0].cmp(&b.0[0])));
    CycleList(out)
}

/// Composes cycles left to right into a permutation of the given width.
pub fn compose_cycles(cycles: &[Cycle], width: u32) -> Result<Permutation> {
    check_width(width)?;
    let size = 1u32 << width;
    let mut table: Vec<u32> = (0..size).collect();
    let mut inv: Vec<u32> = (0..size).collect();
    for c in cycles {
        if let Some(&bad) = c.0.iter().find(|&&x| x >= size) {
            return Err(Error::ValueOutOfRange { index: 0, value: bad, width });
        }
        let pre: Vec<u32> = c.0.iter().map(|&a| inv[a as usize]).collect();
        let k = c.0.len();
        for (j, &row) in pre.iter().enumerate() {
            let next = c.0[(j + 1) % k];
            table[row as usize] = next;
            inv[next as usize] = row;
        }
    }
    Ok(Permutation::from_table_unchecked(width, table))
}

pub fn parity(p: &Permutation) -> Parity {
    let transpositions: usize = disjoint_cycles(p).iter().map(|c| c.len() - 1).sum();
    Parity::from_transpositions(transpositions)
}

/// Exact value of `sum |f(i) - i| / 2^(2n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distance {
    numerator: u64,
    denominator: u64,
}

impl Distance {
    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}", self.value())
    }
}

pub fn distance_metric(p: &Permutation) -> Distance {
    let numerator: u64 = p
        .table
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as i64 - v as i64).unsigned_abs())
        .sum();
    Distance { numerator, denominator: 1u64 << (2 * p.width - 1) }
}

/// Number of maximal index runs on which `f(i) - i` is constant.
pub fn nop_metric(p: &Permutation) -> usize {
    let diff = |i: usize| p.table[i] as i64 - i as i64;
    1 + (1..p.size()).filter(|&i| diff(i) != diff(i - 1)).count()
}

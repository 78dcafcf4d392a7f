//! Splitting a permutation into building-block tasks.

use std::fmt;

use crate::blocks::BuildingBlockKind;
use crate::error::{Error, Result};
use crate::perm::{compose_cycles, disjoint_cycles, is_special_word, Cycle, Permutation};

/// Output of [`extract_5cycles`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionResult {
    pub fives: Vec<Cycle>,
    pub residual: Option<Cycle>,
}

impl ExtractionResult {
    /// Fives followed by the residual, in application order.
    pub fn cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.fives.iter().chain(self.residual.iter())
    }
}

/// Peels 5-cycles off the front: `(a1..ak)` becomes `(a1..a5)` followed by
/// `(a6..ak, a1)`, repeated while the remainder is longer than five.
pub fn extract_5cycles(c: &Cycle) -> ExtractionResult {
    let mut fives = Vec::new();
    let mut rest = c.elements().to_vec();
    while rest.len() > 5 {
        let head = rest[0];
        fives.push(Cycle::new(rest[..5].to_vec()).expect("prefix of a cycle"));
        rest.drain(..5);
        rest.push(head);
    }
    let last = Cycle::new(rest).expect("remainder has at least two elements");
    if last.len() == 5 {
        fives.push(last);
        ExtractionResult { fives, residual: None }
    } else {
        ExtractionResult { fives, residual: Some(last) }
    }
}

/// One building-block invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Task {
    pub kind: BuildingBlockKind,
    pub cycles: Vec<Cycle>,
}

impl Task {
    fn new(kind: BuildingBlockKind, cycles: Vec<Cycle>) -> Self {
        debug_assert_eq!(
            cycles.iter().map(Cycle::len).collect::<Vec<_>>(),
            kind.cycle_lengths()
        );
        Self { kind, cycles }
    }

    pub fn operands(&self) -> Vec<u32> {
        self.cycles.iter().flat_map(|c| c.elements().iter().copied()).collect()
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.kind)?;
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScheduleCounts {
    pub pair55: usize,
    pub single5: usize,
    pub pair33: usize,
    pub single3: usize,
    pub pair44: usize,
    pub pair42: usize,
    pub pair22: usize,
    pub transpositions: usize,
}

impl ScheduleCounts {
    /// In the order (5,5), 5, (3,3), 3, (4,4), (4,2), (2,2).
    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize, usize, usize) {
        (self.pair55, self.single5, self.pair33, self.single3, self.pair44, self.pair42, self.pair22)
    }
}

/// Ordered building-block tasks; applying them left to right gives the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBSchedule {
    pub width: u32,
    pub tasks: Vec<Task>,
}

impl BBSchedule {
    pub fn counts(&self) -> ScheduleCounts {
        let mut c = ScheduleCounts::default();
        for t in &self.tasks {
            match t.kind {
                BuildingBlockKind::Pair55 => c.pair55 += 1,
                BuildingBlockKind::Single5 => c.single5 += 1,
                BuildingBlockKind::Pair33 => c.pair33 += 1,
                BuildingBlockKind::Single3 => c.single3 += 1,
                BuildingBlockKind::Pair44 => c.pair44 += 1,
                BuildingBlockKind::Pair42 => c.pair42 += 1,
                BuildingBlockKind::Pair22 => c.pair22 += 1,
                BuildingBlockKind::SingleTransposition => c.transpositions += 1,
            }
        }
        c
    }

    pub fn cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.tasks.iter().flat_map(|t| t.cycles.iter())
    }

    pub fn compose(&self) -> Result<Permutation> {
        let all: Vec<Cycle> = self.cycles().cloned().collect();
        compose_cycles(&all, self.width)
    }

    pub fn is_empty(&self) -> bool {
        self.tasks.is_empty()
    }
}

fn require_fixed_special(p: &Permutation) -> Result<()> {
    if !p.fixes_special_rows() {
        return Err(Error::Precondition("0 and every 2^i must be fixed points".into()));
    }
    Ok(())
}

fn pair_in_order(
    items: Vec<Cycle>,
    pair: BuildingBlockKind,
    single: BuildingBlockKind,
    out: &mut Vec<Task>,
) {
    let mut it = items.into_iter();
    while let Some(a) = it.next() {
        match it.next() {
            Some(b) => out.push(Task::new(pair, vec![a, b])),
            None => out.push(Task::new(single, vec![a])),
        }
    }
}

/// Schedules a permutation that fixes 0 and every 2^i, for widths with the
/// full block set.
pub fn decompose(p: &Permutation) -> Result<BBSchedule> {
    require_fixed_special(p)?;
    let mut fives_by_source: Vec<Vec<Cycle>> = Vec::new();
    let (mut threes, mut fours, mut twos) = (Vec::new(), Vec::new(), Vec::new());
    for c in disjoint_cycles(p).into_vec() {
        let small = if c.len() >= 5 {
            let ex = extract_5cycles(&c);
            fives_by_source.push(ex.fives);
            ex.residual
        } else {
            Some(c)
        };
        if let Some(s) = small {
            match s.len() {
                2 => twos.push(s),
                3 => threes.push(s),
                _ => fours.push(s),
            }
        }
    }

    let mut tasks = Vec::new();
    let mut fives: Vec<Cycle> = fives_by_source.into_iter().flatten().collect();
    while !fives.is_empty() {
        let first = fives.remove(0);
        let partner = (0..fives.len()).find(|&j| {
            first.is_disjoint(&fives[j]) && fives[..j].iter().all(|f| f.is_disjoint(&fives[j]))
        });
        match partner {
            Some(j) => {
                let second = fives.remove(j);
                tasks.push(Task::new(BuildingBlockKind::Pair55, vec![first, second]));
            }
            None => tasks.push(Task::new(BuildingBlockKind::Single5, vec![first])),
        }
    }

    let mut leftover_four = None;
    if fours.len() % 2 == 1 {
        let last = fours.pop().expect("odd count");
        if twos.is_empty() {
            let e = last.elements();
            threes.push(Cycle::new(vec![e[0], e[1], e[2]]).expect("distinct"));
            twos.push(Cycle::new(vec![e[0], e[3]]).expect("distinct"));
        } else {
            leftover_four = Some(last);
        }
    }

    pair_in_order(threes, BuildingBlockKind::Pair33, BuildingBlockKind::Single3, &mut tasks);
    let mut it = fours.into_iter();
    while let (Some(a), Some(b)) = (it.next(), it.next()) {
        tasks.push(Task::new(BuildingBlockKind::Pair44, vec![a, b]));
    }
    if let Some(four) = leftover_four {
        let two = twos.remove(0);
        tasks.push(Task::new(BuildingBlockKind::Pair42, vec![four, two]));
    }
    pair_in_order(twos, BuildingBlockKind::Pair22, BuildingBlockKind::SingleTransposition, &mut tasks);
    Ok(BBSchedule { width: p.width(), tasks })
}

/// Schedule built from transpositions only, for widths below the block set.
///
/// A cycle `(x0..xk)` is rewritten as `(x0,x1)(x(k-1),xk)` followed by
/// `(x0,x2,..,x(k-1))`. A final 3-cycle `(a,b,c)` becomes `(a,b)(d,e)` then
/// `(a,c)(d,e)`; the helper pair cancels. Final transpositions are paired.
pub fn decompose_small(p: &Permutation) -> Result<BBSchedule> {
    require_fixed_special(p)?;
    let n = p.width();
    let t2 = |a: u32, b: u32| Cycle::new(vec![a, b]).expect("distinct");
    let mut tasks = Vec::new();
    let mut leftovers = Vec::new();
    for c in disjoint_cycles(p).into_vec() {
        let mut rest = c.elements().to_vec();
        while rest.len() >= 4 {
            let k = rest.len() - 1;
            tasks.push(Task::new(
                BuildingBlockKind::Pair22,
                vec![t2(rest[0], rest[1]), t2(rest[k - 1], rest[k])],
            ));
            rest.remove(k);
            rest.remove(1);
        }
        if rest.len() == 2 {
            leftovers.push(t2(rest[0], rest[1]));
            continue;
        }
        let (a, b, cc) = (rest[0], rest[1], rest[2]);
        let helpers: Vec<u32> = (0..1u32 << n)
            .filter(|&w| !is_special_word(w) && ![a, b, cc].contains(&w))
            .take(2)
            .collect();
        if let [d, e] = helpers[..] {
            for x in [b, cc] {
                tasks.push(Task::new(BuildingBlockKind::Pair22, vec![t2(a, x), t2(d, e)]));
            }
        } else {
            for x in [b, cc] {
                tasks.push(Task::new(BuildingBlockKind::SingleTransposition, vec![t2(a, x)]));
            }
        }
    }
    pair_in_order(leftovers, BuildingBlockKind::Pair22, BuildingBlockKind::SingleTransposition, &mut tasks);
    Ok(BBSchedule { width: n, tasks })
}

/// Worst-case cost of a schedule: each task charged its kind's bound.
pub fn estimate_cost(s: &BBSchedule, n: u32) -> u64 {
    s.tasks.iter().map(|t| t.kind.bound_at(n)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(e: &[u32]) -> Cycle {
        Cycle::new(e.to_vec()).unwrap()
    }

    fn sixteen_cycle() -> Permutation {
        compose_cycles(
            &[
                cyc(&[3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21]),
                cyc(&[22, 23, 24, 25, 26, 27]),
                cyc(&[28, 29]),
                cyc(&[30, 31]),
            ],
            7,
        )
        .unwrap()
    }

    fn ten_cycle() -> Permutation {
        compose_cycles(
            &[
                cyc(&[3, 5, 6, 7, 9, 10, 11, 12, 13, 14]),
                cyc(&[15, 17, 18, 19, 20, 21]),
                cyc(&[22, 23, 24]),
                cyc(&[25, 26, 27]),
                cyc(&[28, 29, 30]),
            ],
            7,
        )
        .unwrap()
    }

    #[test]
    fn sixteen_cycle_extraction() {
        let ex = extract_5cycles(&cyc(&[3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21]));
        assert_eq!(
            ex.fives,
            vec![cyc(&[3, 5, 6, 7, 9]), cyc(&[10, 11, 12, 13, 14]), cyc(&[15, 17, 18, 19, 20])]
        );
        assert_eq!(ex.residual, Some(cyc(&[21, 3, 10, 15])));
    }

    #[test]
    fn short_extractions() {
        let ex = extract_5cycles(&cyc(&[22, 23, 24, 25, 26, 27]));
        assert_eq!(ex.fives, vec![cyc(&[22, 23, 24, 25, 26])]);
        assert!(ex.residual.unwrap().same_cycle(&cyc(&[22, 27])));
        let ex = extract_5cycles(&cyc(&[1, 2, 3, 4, 5]));
        assert_eq!(ex.fives.len(), 1);
        assert!(ex.residual.is_none());
        let ex = extract_5cycles(&cyc(&[1, 2, 3]));
        assert!(ex.fives.is_empty());
        let ex = extract_5cycles(&cyc(&(1..=9).collect::<Vec<_>>()));
        assert_eq!(ex.fives, vec![cyc(&[1, 2, 3, 4, 5]), cyc(&[6, 7, 8, 9, 1])]);
    }

    #[test]
    fn extraction_composes_back() {
        for k in 2..40u32 {
            let c = cyc(&(100..100 + k).collect::<Vec<_>>());
            let ex = extract_5cycles(&c);
            let parts: Vec<Cycle> = ex.cycles().cloned().collect();
            assert_eq!(compose_cycles(&parts, 8).unwrap(), compose_cycles(&[c], 8).unwrap(), "k={k}");
        }
    }

    #[test]
    fn sixteen_cycle_counts() {
        let s = decompose(&sixteen_cycle()).unwrap();
        assert_eq!(s.counts().as_tuple(), (2, 0, 0, 0, 0, 1, 1));
        assert_eq!(s.counts().transpositions, 0);
        assert_eq!(s.compose().unwrap(), sixteen_cycle());
        assert_eq!(estimate_cost(&s, 7), 1190);
    }

    #[test]
    fn ten_cycle_counts() {
        let s = decompose(&ten_cycle()).unwrap();
        assert_eq!(s.counts().as_tuple(), (1, 1, 1, 1, 0, 0, 1));
        assert_eq!(s.compose().unwrap(), ten_cycle());
        // Sum of the per-kind bounds for these counts.
        assert_eq!(estimate_cost(&s, 7), 228 * 7 - 376);
    }

    #[test]
    fn lone_four_cycle_is_split() {
        let p = compose_cycles(&[cyc(&[3, 5, 6, 7])], 7).unwrap();
        let s = decompose(&p).unwrap();
        let kinds: Vec<_> = s.tasks.iter().map(|t| t.kind).collect();
        assert_eq!(kinds, vec![BuildingBlockKind::Single3, BuildingBlockKind::SingleTransposition]);
        assert_eq!(s.compose().unwrap(), p);
    }

    #[test]
    fn identity_is_empty() {
        let id = Permutation::identity(7).unwrap();
        assert!(decompose(&id).unwrap().is_empty());
        assert!(decompose_small(&id).unwrap().is_empty());
        assert_eq!(estimate_cost(&decompose(&id).unwrap(), 7), 0);
    }

    #[test]
    fn rejects_unfixed_rows() {
        let p = compose_cycles(&[cyc(&[1, 3])], 7).unwrap();
        assert!(decompose(&p).is_err());
        assert!(decompose_small(&p).is_err());
    }

    #[test]
    fn small_three_cycle() {
        let p = compose_cycles(&[cyc(&[3, 5, 6])], 3).unwrap();
        let s = decompose_small(&p).unwrap();
        assert_eq!(s.compose().unwrap(), p);
        let p = compose_cycles(&[cyc(&[3, 5, 6])], 4).unwrap();
        let s = decompose_small(&p).unwrap();
        assert_eq!(s.counts().pair22, 2);
        assert_eq!(s.compose().unwrap(), p);
    }

    #[test]
    fn small_transposition() {
        let p = compose_cycles(&[cyc(&[3, 5])], 3).unwrap();
        let s = decompose_small(&p).unwrap();
        assert_eq!(s.counts().transpositions, 1);
        assert_eq!(s.tasks.len(), 1);
    }
}

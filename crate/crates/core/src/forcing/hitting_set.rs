//! Minimum hitting set over a universe of at most 128 elements.

pub(crate) type Mask = u128;

pub(crate) const MAX_UNIVERSE: usize = 128;

fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

pub(crate) fn mask_elements(mask: Mask) -> Vec<usize> {
    bits(mask).collect()
}

/// Exact minimum hitting set by branch and bound.
///
/// Branches on the unhit set with the fewest still-available elements (ties:
/// earliest set), trying its elements in increasing order and excluding each
/// tried element from later siblings. Bounds with a greedy packing of
/// pairwise disjoint unhit sets. `floor` is a known lower bound on the
/// optimum; the search stops as soon as a hitter of that size is found.
pub(crate) fn minimum_hitting_set(sets: &[Mask], floor: usize) -> Mask {
    let mut solver = Solver {
        sets,
        best: greedy(sets),
        floor,
        scratch: Vec::new(),
    };
    if solver.best.count_ones() as usize > floor {
        solver.branch(0, 0);
    }
    solver.best
}

fn greedy(sets: &[Mask]) -> Mask {
    let mut chosen: Mask = 0;
    loop {
        let unhit: Vec<Mask> = sets.iter().copied().filter(|s| s & chosen == 0).collect();
        if unhit.is_empty() {
            return chosen;
        }
        let mut counts = [0u32; MAX_UNIVERSE];
        for s in &unhit {
            for b in bits(*s) {
                counts[b] += 1;
            }
        }
        let pick = (0..MAX_UNIVERSE)
            .max_by_key(|&b| (counts[b], std::cmp::Reverse(b)))
            .unwrap();
        chosen |= 1 << pick;
    }
}

struct Solver<'a> {
    sets: &'a [Mask],
    best: Mask,
    floor: usize,
    scratch: Vec<Vec<(u32, usize, Mask)>>,
}

impl Solver<'_> {
    fn done(&self) -> bool {
        self.best.count_ones() as usize <= self.floor
    }

    fn branch(&mut self, chosen: Mask, excluded: Mask) {
        let size = chosen.count_ones() as usize;
        let best = self.best.count_ones() as usize;

        let depth = size;
        if self.scratch.len() <= depth {
            self.scratch.push(Vec::new());
        }
        let mut open = std::mem::take(&mut self.scratch[depth]);
        open.clear();
        for (idx, &s) in self.sets.iter().enumerate() {
            if s & chosen == 0 {
                let avail = s & !excluded;
                if avail == 0 {
                    self.scratch[depth] = open;
                    return;
                }
                open.push((avail.count_ones(), idx, avail));
            }
        }
        if open.is_empty() {
            if size < best {
                self.best = chosen;
            }
            self.scratch[depth] = open;
            return;
        }
        if size + 1 >= best {
            self.scratch[depth] = open;
            return;
        }
        open.sort_unstable();
        let mut used: Mask = 0;
        let mut packing = 0;
        for &(_, _, avail) in &open {
            if avail & used == 0 {
                used |= avail;
                packing += 1;
            }
        }
        if size + packing >= best {
            self.scratch[depth] = open;
            return;
        }
        let (_, _, target) = open[0];
        self.scratch[depth] = open;

        let mut excl = excluded;
        for b in bits(target) {
            self.branch(chosen | (1 << b), excl);
            if self.done() {
                return;
            }
            excl |= 1 << b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(sets: &[Mask], universe: usize) -> usize {
        (0u32..1 << universe)
            .filter(|&c| sets.iter().all(|&s| s & c as Mask != 0))
            .map(|c| c.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn small_cases_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let universe = rng.gen_range(1..=10);
            let count = rng.gen_range(1..=12);
            let sets: Vec<Mask> = (0..count)
                .map(|_| loop {
                    let s: Mask = rng.gen_range(1..(1u32 << universe)) as Mask;
                    if s != 0 {
                        break s;
                    }
                })
                .collect();
            let hit = minimum_hitting_set(&sets, 0);
            assert!(sets.iter().all(|&s| s & hit != 0));
            assert_eq!(hit.count_ones() as usize, brute(&sets, universe));
        }
    }

    #[test]
    fn cycle_of_pairs() {
        // pairs {i, i+1 mod 7}: the optimum is 4
        let sets: Vec<Mask> = (0..7).map(|i| (1 << i) | (1 << ((i + 1) % 7))).collect();
        assert_eq!(minimum_hitting_set(&sets, 0).count_ones(), 4);
        assert!(minimum_hitting_set(&[], 0) == 0);
    }
}

//! Incremental refinement.
//!
//! Each round only inspects triangles that contain an arc whose color was
//! created in the previous round. Every basis arc of such a triangle gets the
//! multiset of `(i, j)` color pairs over those triangles; arcs of one color
//! are split by that multiset, with untouched arcs forming the group of the
//! empty multiset. The largest group of a split color keeps the old id, so a
//! triangle is re-examined only after one of its nonbasis arcs has moved into
//! a class at most half as large as before, giving `O(n^3 log n)` total work.
//!
//! Grouping is done by sorting, not hashing: triangles are bucket-sorted by
//! their `(i, j)` pair, the per-arc lists are then ordered lexicographically
//! with a linear-time string sort, and finally stably bucketed by arc color.
//!
//! A round computes the same partition as one full pass of
//! [`stabil_iteration`](crate::stabil::stabil_iteration): the pairs of
//! triangles with two surviving colors are determined by the previous round's
//! fingerprint (constant on the class) minus the counted triangles.

use crate::error::{Error, Result};
use crate::fingerprint::{StableResult, StructureConstants};
use crate::matrix::{Color, ColorMatrix};
use crate::sort::{counting_sort, radix_sort, sort_strings, Strings};
use crate::stabil::representative_fingerprints;

/// Colors introduced by the previous round and the arcs they touch.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WorkSet {
    new_colors: Vec<Color>,
    touched_arcs: Vec<(usize, usize)>,
}

impl WorkSet {
    /// Every color marked new; the first round then inspects all `n^3`
    /// triangles.
    pub fn all(m: &ColorMatrix) -> Self {
        Self::build(m, (0..m.rank() as Color).collect())
    }

    pub fn from_new_colors(
        m: &ColorMatrix,
        colors: impl IntoIterator<Item = Color>,
    ) -> Result<Self> {
        let mut colors: Vec<Color> = colors.into_iter().collect();
        colors.sort_unstable();
        colors.dedup();
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= m.rank()) {
            return Err(Error::InvalidArgument(format!(
                "color {c} out of range for rank {}",
                m.rank()
            )));
        }
        Ok(Self::build(m, colors))
    }

    fn build(m: &ColorMatrix, new_colors: Vec<Color>) -> Self {
        let n = m.n();
        let mut is_new = vec![false; m.rank()];
        for &c in &new_colors {
            is_new[c as usize] = true;
        }
        let mut touched = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                if is_new[m.get(a, b) as usize] {
                    // (a, b) as first nonbasis arc touches row a, as second column b
                    touched[a * n..(a + 1) * n]
                        .iter_mut()
                        .for_each(|t| *t = true);
                    for u in 0..n {
                        touched[u * n + b] = true;
                    }
                }
            }
        }
        let touched_arcs = (0..n * n)
            .filter(|&p| touched[p])
            .map(|p| (p / n, p % n))
            .collect();
        Self {
            new_colors,
            touched_arcs,
        }
    }

    pub fn new_colors(&self) -> &[Color] {
        &self.new_colors
    }

    pub fn touched_arcs(&self) -> &[(usize, usize)] {
        &self.touched_arcs
    }

    pub fn is_empty(&self) -> bool {
        self.new_colors.is_empty()
    }
}

/// One old color that was split in a round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub color: Color,
    /// Arcs that kept `color`.
    pub kept: usize,
    /// Fresh colors and their sizes.
    pub fresh: Vec<(Color, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RoundStats {
    /// Triangles examined, `|T_M|`.
    pub triangles: usize,
    /// Distinct basis arcs of those triangles, `|R_M|`.
    pub touched_arcs: usize,
    pub splits: Vec<Split>,
}

impl RoundStats {
    pub fn new_colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.splits.iter().flat_map(|s| s.fresh.iter().map(|f| f.0))
    }
}

const NO_SLOT: u32 = u32::MAX;

/// Mutable coloring with per-color position lists, carried across rounds.
struct State {
    n: usize,
    colors: Vec<Color>,
    classes: Vec<Vec<u32>>,
    /// Index of each position in the current round's touched list.
    slot: Vec<u32>,
}

impl State {
    fn new(m: &ColorMatrix) -> Self {
        let mut classes = vec![Vec::new(); m.rank()];
        for (p, &c) in m.as_slice().iter().enumerate() {
            classes[c as usize].push(p as u32);
        }
        Self {
            n: m.n(),
            colors: m.as_slice().to_vec(),
            classes,
            slot: vec![NO_SLOT; m.n() * m.n()],
        }
    }

    fn rank(&self) -> usize {
        self.classes.len()
    }

    fn to_matrix(&self) -> ColorMatrix {
        ColorMatrix::from_parts(self.n, self.colors.clone(), self.rank())
    }

    /// Runs one round seeded by `new_colors`, returning what changed.
    fn round(&mut self, new_colors: &[Color]) -> RoundStats {
        if new_colors.is_empty() {
            return RoundStats::default();
        }
        let n = self.n;
        let r = self.rank();
        let mut is_new = vec![false; r];
        for &c in new_colors {
            is_new[c as usize] = true;
        }

        // T_M as (basis position, i, j)
        let mut triangles: Vec<(u32, Color, Color)> = Vec::new();
        for &c in new_colors {
            for &p in &self.classes[c as usize] {
                let (a, b) = (p as usize / n, p as usize % n);
                for v in 0..n {
                    triangles.push(((a * n + v) as u32, c, self.colors[b * n + v]));
                }
                for u in 0..n {
                    let first = self.colors[u * n + a];
                    if !is_new[first as usize] {
                        triangles.push(((u * n + b) as u32, first, c));
                    }
                }
            }
        }
        let triangle_count = triangles.len();

        let triangles = radix_sort(triangles, r, |t| t.2 as usize);
        let triangles = radix_sort(triangles, r, |t| t.1 as usize);

        // rank distinct (i, j) pairs in sorted order; lists S(u, v) then come
        // out sorted as well
        let mut touched: Vec<u32> = Vec::new();
        let mut lengths: Vec<usize> = Vec::new();
        let mut pair_rank: Vec<u32> = Vec::with_capacity(triangle_count);
        let mut rank = 0u32;
        for (t, &(basis, i, j)) in triangles.iter().enumerate() {
            if t > 0 {
                let prev = triangles[t - 1];
                if (prev.1, prev.2) != (i, j) {
                    rank += 1;
                }
            }
            pair_rank.push(rank);
            let slot = &mut self.slot[basis as usize];
            if *slot == NO_SLOT {
                *slot = touched.len() as u32;
                touched.push(basis);
                lengths.push(0);
            }
            lengths[*slot as usize] += 1;
        }
        let alphabet = if triangle_count == 0 {
            0
        } else {
            rank as usize + 1
        };
        let mut offsets = Vec::with_capacity(touched.len() + 1);
        offsets.push(0);
        for &len in &lengths {
            offsets.push(offsets.last().unwrap() + len);
        }
        let mut fill = offsets.clone();
        let mut symbols = vec![0u32; triangle_count];
        for (t, &(basis, _, _)) in triangles.iter().enumerate() {
            let s = self.slot[basis as usize] as usize;
            symbols[fill[s]] = pair_rank[t];
            fill[s] += 1;
        }
        drop(triangles);
        let strings = Strings {
            offsets: &offsets,
            symbols: &symbols,
        };

        let order = sort_strings(&strings, alphabet);
        let order = counting_sort(&order, r, |&s| self.colors[touched[s] as usize] as usize);

        let mut splits = Vec::new();
        let mut next = r as Color;
        // color assigned to each touched slot
        let mut assigned: Vec<Color> = vec![0; touched.len()];
        let mut run_start = 0;
        while run_start < order.len() {
            let color = self.colors[touched[order[run_start]] as usize];
            let mut run_end = run_start;
            while run_end < order.len() && self.colors[touched[order[run_end]] as usize] == color {
                run_end += 1;
            }
            let run = &order[run_start..run_end];
            let untouched = self.classes[color as usize].len() - run.len();

            // groups as (start, end) into `run`; the untouched group is (0, 0)
            let mut groups: Vec<(usize, usize)> = Vec::new();
            let mut g = 0;
            while g < run.len() {
                let mut h = g + 1;
                while h < run.len() && strings.get(run[h]) == strings.get(run[g]) {
                    h += 1;
                }
                groups.push((g, h));
                g = h;
            }
            let mut sizes: Vec<usize> = Vec::with_capacity(groups.len() + 1);
            if untouched > 0 {
                sizes.push(untouched);
            }
            sizes.extend(groups.iter().map(|&(a, b)| b - a));

            if sizes.len() > 1 {
                let keeper = (0..sizes.len())
                    .reduce(|best, i| if sizes[i] > sizes[best] { i } else { best })
                    .unwrap();
                let mut group_colors = Vec::with_capacity(sizes.len());
                let mut fresh = Vec::new();
                for (i, &size) in sizes.iter().enumerate() {
                    if i == keeper {
                        group_colors.push(color);
                    } else {
                        group_colors.push(next);
                        fresh.push((next, size));
                        next += 1;
                    }
                }
                let offset = usize::from(untouched > 0);
                let untouched_color = if untouched > 0 {
                    group_colors[0]
                } else {
                    color
                };
                for (gi, &(a, b)) in groups.iter().enumerate() {
                    for &s in &run[a..b] {
                        assigned[s] = group_colors[gi + offset];
                    }
                }
                splits.push(Split {
                    color,
                    kept: sizes[keeper],
                    fresh,
                });
                self.apply_split(color, untouched_color, &touched, &assigned, next as usize);
            }
            run_start = run_end;
        }

        for &basis in &touched {
            self.slot[basis as usize] = NO_SLOT;
        }
        RoundStats {
            triangles: triangle_count,
            touched_arcs: touched.len(),
            splits,
        }
    }

    /// Redistributes the positions of `color` after its groups got colors.
    fn apply_split(
        &mut self,
        color: Color,
        untouched_color: Color,
        touched: &[u32],
        assigned: &[Color],
        rank: usize,
    ) {
        if self.classes.len() < rank {
            self.classes.resize(rank, Vec::new());
        }
        let members = std::mem::take(&mut self.classes[color as usize]);
        for p in members {
            let slot = self.slot[p as usize];
            let c = if slot == NO_SLOT {
                untouched_color
            } else {
                debug_assert_eq!(touched[slot as usize], p);
                assigned[slot as usize]
            };
            self.colors[p as usize] = c;
            self.classes[c as usize].push(p);
        }
    }
}

/// One incremental round seeded by `w`.
pub fn stabcol_round(m: &ColorMatrix, w: &WorkSet) -> (ColorMatrix, WorkSet) {
    let (refined, next, _) = stabcol_round_traced(m, w);
    (refined, next)
}

/// [`stabcol_round`] plus the triangle count and split records.
pub fn stabcol_round_traced(m: &ColorMatrix, w: &WorkSet) -> (ColorMatrix, WorkSet, RoundStats) {
    let mut state = State::new(m);
    let stats = state.round(w.new_colors());
    let refined = state.to_matrix();
    let next = WorkSet::build(&refined, stats.new_colors().collect());
    (refined, next, stats)
}

/// Rounds until no new colors appear.
pub fn stabcol_closure(m: &ColorMatrix, with_constants: bool) -> StableResult {
    stabcol_closure_traced(m, with_constants).0
}

/// [`stabcol_closure`] plus per-round statistics.
pub fn stabcol_closure_traced(
    m: &ColorMatrix,
    with_constants: bool,
) -> (StableResult, Vec<RoundStats>) {
    let mut state = State::new(m);
    let mut new_colors: Vec<Color> = (0..m.rank() as Color).collect();
    let mut rounds = Vec::new();
    loop {
        let stats = state.round(&new_colors);
        new_colors = stats.new_colors().collect();
        rounds.push(stats);
        if new_colors.is_empty() {
            break;
        }
    }
    let stable = state.to_matrix();
    let constants = with_constants
        .then(|| StructureConstants::from_fingerprints(&representative_fingerprints(&stable)));
    (StableResult::new(stable, rounds.len(), constants), rounds)
}

//! Triangle counts attached to arcs and the structure constants read off them.

use std::collections::BTreeMap;

use crate::matrix::{Color, ColorMatrix};

/// Sorted `(i, j, p)` triples: `p` triangles over one basis arc have first
/// nonbasis arc of color `i` and second of color `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<(Color, Color, u32)>);

impl Fingerprint {
    /// Tallies `(i, j)` pairs packed as `i << 32 | j`. Sorts `packed` in place.
    pub(crate) fn from_packed(packed: &mut [u64]) -> Self {
        packed.sort_unstable();
        let mut triples: Vec<(Color, Color, u32)> = Vec::new();
        for &key in packed.iter() {
            let (i, j) = ((key >> 32) as Color, key as Color);
            match triples.last_mut() {
                Some(t) if t.0 == i && t.1 == j => t.2 += 1,
                _ => triples.push((i, j, 1)),
            }
        }
        Self(triples)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Color, Color)>) -> Self {
        let mut packed: Vec<u64> = pairs.into_iter().map(|(i, j)| pack(i, j)).collect();
        Self::from_packed(&mut packed)
    }

    pub fn triples(&self) -> &[(Color, Color, u32)] {
        &self.0
    }

    /// Total number of triangles counted.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|t| t.2 as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[inline]
pub(crate) fn pack(i: Color, j: Color) -> u64 {
    (i as u64) << 32 | j as u64
}

/// Nonzero structure constants `p[i][j][k]` of a stable coloring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    values: BTreeMap<(Color, Color, Color), u32>,
}

impl StructureConstants {
    /// `per_color[k]` is the fingerprint shared by all arcs of color `k`.
    pub fn from_fingerprints(per_color: &[Fingerprint]) -> Self {
        let mut values = BTreeMap::new();
        for (k, fp) in per_color.iter().enumerate() {
            for &(i, j, p) in fp.triples() {
                values.insert((i, j, k as Color), p);
            }
        }
        Self {
            rank: per_color.len(),
            values,
        }
    }

    pub(crate) fn from_values(rank: usize, values: BTreeMap<(Color, Color, Color), u32>) -> Self {
        Self { rank, values }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: Color, j: Color, k: Color) -> u32 {
        self.values.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j, k), p)`, ordered by `(i, j, k)`.
    pub fn iter(&self) -> impl Iterator<Item = ((Color, Color, Color), u32)> + '_ {
        self.values.iter().map(|(&key, &p)| (key, p))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of `p[i][j][k]` over all `i, j` for one `k`.
    pub fn column_sum(&self, k: Color) -> u64 {
        self.values
            .iter()
            .filter(|(key, _)| key.2 == k)
            .map(|(_, &p)| p as u64)
            .sum()
    }

    /// Constants under the color renaming `map[old] = new`.
    pub fn relabeled(&self, map: &[Color]) -> Self {
        let values = self
            .values
            .iter()
            .map(|(&(i, j, k), &p)| ((map[i as usize], map[j as usize], map[k as usize]), p))
            .collect();
        Self {
            rank: self.rank,
            values,
        }
    }
}

/// Output of a closure engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableResult {
    pub stable: ColorMatrix,
    pub rank: usize,
    pub cells: usize,
    /// Refinement passes run, counting the final pass that found nothing new.
    pub iterations: usize,
    pub constants: Option<StructureConstants>,
}

impl StableResult {
    pub(crate) fn new(
        stable: ColorMatrix,
        iterations: usize,
        constants: Option<StructureConstants>,
    ) -> Self {
        Self {
            rank: stable.rank(),
            cells: stable.diagonal_color_count(),
            stable,
            iterations,
            constants,
        }
    }
}

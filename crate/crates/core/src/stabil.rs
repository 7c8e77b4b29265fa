//! Full-pass refinement: every position is fingerprinted by its `n`
//! triangles in each iteration, and each color class is split by fingerprint.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fingerprint::{pack, Fingerprint, StableResult, StructureConstants};
use crate::matrix::{Color, ColorMatrix};

/// Below this many positions the fingerprint pass runs on one thread.
const PARALLEL_THRESHOLD: usize = 1024;

/// Triangle counts over the basis arc `(u, v)`; `u == v` is allowed.
pub fn arc_fingerprint(m: &ColorMatrix, u: usize, v: usize) -> Result<Fingerprint> {
    let n = m.n();
    for vertex in [u, v] {
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
    }
    Ok(fingerprint(m, u, v, &mut Vec::with_capacity(n)))
}

fn fingerprint(m: &ColorMatrix, u: usize, v: usize, scratch: &mut Vec<u64>) -> Fingerprint {
    scratch.clear();
    let row = m.row(u);
    scratch.extend((0..m.n()).map(|w| pack(row[w], m.get(w, v))));
    Fingerprint::from_packed(scratch)
}

fn all_fingerprints(m: &ColorMatrix) -> Vec<Fingerprint> {
    let n = m.n();
    if n * n < PARALLEL_THRESHOLD {
        let mut scratch = Vec::with_capacity(n);
        return (0..n * n)
            .map(|p| fingerprint(m, p / n, p % n, &mut scratch))
            .collect();
    }
    (0..n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let mut scratch = Vec::with_capacity(n);
            (0..n)
                .map(move |v| fingerprint(m, u, v, &mut scratch))
                .collect::<Vec<_>>()
        })
        .collect()
}

struct Refinement {
    matrix: ColorMatrix,
    changed: bool,
    /// Fingerprint of the first-scanned arc of each input color.
    representatives: Vec<Fingerprint>,
}

fn refine(m: &ColorMatrix) -> Refinement {
    let n = m.n();
    let fingerprints = all_fingerprints(m);
    let coloring = m.coloring();
    let mut colors = m.as_slice().to_vec();
    let mut next = m.rank() as Color;
    let mut representatives = Vec::with_capacity(m.rank());
    let mut groups: HashMap<&Fingerprint, Color> = HashMap::new();
    for (k, arcs) in coloring.iter() {
        groups.clear();
        let (u0, v0) = arcs[0];
        let first = &fingerprints[u0 * n + v0];
        representatives.push(first.clone());
        groups.insert(first, k);
        for &(u, v) in &arcs[1..] {
            let fp = &fingerprints[u * n + v];
            let c = *groups.entry(fp).or_insert_with(|| {
                next += 1;
                next - 1
            });
            colors[u * n + v] = c;
        }
    }
    let changed = next as usize > m.rank();
    Refinement {
        matrix: ColorMatrix::from_parts(n, colors, next as usize),
        changed,
        representatives,
    }
}

/// One pass over all arcs. Within each color the group of the first-scanned
/// arc keeps the old id; other groups get fresh ids appended after all
/// existing colors.
pub fn stabil_iteration(m: &ColorMatrix) -> (ColorMatrix, bool) {
    let r = refine(m);
    (r.matrix, r.changed)
}

/// Iterates [`stabil_iteration`] until no color splits.
pub fn stabil_closure(m: &ColorMatrix, with_constants: bool) -> StableResult {
    let mut current = m.clone();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let step = refine(&current);
        if !step.changed {
            let constants = with_constants
                .then(|| StructureConstants::from_fingerprints(&step.representatives));
            return StableResult::new(current, iterations, constants);
        }
        current = step.matrix;
    }
}

/// Fingerprints of the first arc of every color, for constants of a coloring
/// already known to be stable.
pub(crate) fn representative_fingerprints(m: &ColorMatrix) -> Vec<Fingerprint> {
    let coloring = m.coloring();
    let mut scratch = Vec::with_capacity(m.n());
    coloring
        .iter()
        .map(|(_, arcs)| fingerprint(m, arcs[0].0, arcs[0].1, &mut scratch))
        .collect()
}

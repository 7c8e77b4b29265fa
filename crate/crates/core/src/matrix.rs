//! Colored complete directed graphs in matrix form.
//!
//! A [`ColorMatrix`] holds one color id per ordered vertex pair. Entry `(u, u)`
//! is the color of vertex `u`, entry `(u, v)` with `u != v` the color of the
//! arc from `u` to `v`. Vertex colors never coincide with arc colors and ids
//! are dense in `0..rank`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Color id. Wide enough for the `n * n` colors of a discrete coloring.
pub type Color = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorMatrix {
    n: usize,
    colors: Vec<Color>,
    diagonal: Vec<bool>,
}

impl ColorMatrix {
    /// Wraps a row-major color vector, keeping the given ids.
    ///
    /// Fails unless ids are dense in `0..r` and vertex colors are disjoint
    /// from arc colors. Use [`normalize`] for arbitrary integer input.
    pub fn new(n: usize, colors: Vec<Color>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if colors.len() != n * n {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for n = {}, got {}",
                n * n,
                n,
                colors.len()
            )));
        }
        let rank = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
        // 0 = unused, 1 = diagonal, 2 = off-diagonal
        let mut seen = vec![0u8; rank];
        for u in 0..n {
            for v in 0..n {
                let c = colors[u * n + v] as usize;
                let kind = if u == v { 1 } else { 2 };
                match seen[c] {
                    0 => seen[c] = kind,
                    k if k != kind => {
                        return Err(Error::InvalidMatrix(format!(
                            "color {c} occurs both on and off the diagonal"
                        )))
                    }
                    _ => {}
                }
            }
        }
        if let Some(c) = seen.iter().position(|&k| k == 0) {
            return Err(Error::InvalidMatrix(format!(
                "color ids are not dense: {c} is unused"
            )));
        }
        let diagonal = seen.into_iter().map(|k| k == 1).collect();
        Ok(Self {
            n,
            colors,
            diagonal,
        })
    }

    pub fn from_rows<R: AsRef<[Color]>>(rows: &[R]) -> Result<Self> {
        let n = check_square(rows)?;
        let colors = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::new(n, colors)
    }

    /// Builds a matrix from ids already known to be dense and split.
    pub(crate) fn from_parts(n: usize, colors: Vec<Color>, rank: usize) -> Self {
        let mut diagonal = vec![false; rank];
        for u in 0..n {
            diagonal[colors[u * n + u] as usize] = true;
        }
        let m = Self {
            n,
            colors,
            diagonal,
        };
        debug_assert!(Self::new(m.n, m.colors.clone()).is_ok());
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct colors.
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Color {
        self.colors[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Color] {
        &self.colors[u * self.n..(u + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.colors.chunks(self.n)
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn to_rows(&self) -> Vec<Vec<Color>> {
        self.rows().map(<[Color]>::to_vec).collect()
    }

    pub fn is_diagonal_color(&self, c: Color) -> bool {
        self.diagonal[c as usize]
    }

    /// Number of vertex colors, i.e. cells of the induced vertex partition.
    pub fn diagonal_color_count(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d).count()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.rank()];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::new(self)
    }

    /// The matrix of the graph with vertex `u` renamed to `perm[u]`, that is
    /// `M * A * M^t` for the permutation matrix `M` of `perm`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let n = self.n;
        let mut colors = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                colors[perm[u] * n + perm[v]] = self.get(u, v);
            }
        }
        Ok(Self {
            n,
            colors,
            diagonal: self.diagonal.clone(),
        })
    }

    /// Applies an injective color renaming `map[old] = new`.
    pub(crate) fn recolored(&self, map: &[Color]) -> Self {
        let colors: Vec<Color> = self.colors.iter().map(|&c| map[c as usize]).collect();
        Self::from_parts(self.n, colors, self.rank())
    }
}

impl fmt::Display for ColorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for c in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Per-color arc lists of a [`ColorMatrix`]; arcs are kept in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    n: usize,
    arcs: Vec<Vec<(usize, usize)>>,
    diagonal: Vec<bool>,
}

impl Coloring {
    fn new(m: &ColorMatrix) -> Self {
        let mut arcs = vec![Vec::new(); m.rank()];
        for u in 0..m.n {
            for v in 0..m.n {
                arcs[m.get(u, v) as usize].push((u, v));
            }
        }
        Self {
            n: m.n,
            arcs,
            diagonal: m.diagonal.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self, c: Color) -> &[(usize, usize)] {
        &self.arcs[c as usize]
    }

    pub fn is_diagonal(&self, c: Color) -> bool {
        self.diagonal[c as usize]
    }

    pub fn size(&self, c: Color) -> usize {
        self.arcs[c as usize].len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Color, &[(usize, usize)])> {
        self.arcs
            .iter()
            .enumerate()
            .map(|(c, a)| (c as Color, a.as_slice()))
    }
}

/// A partition of the vertex set into ordered classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Groups vertices by label; classes are ordered by increasing label.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut order: Vec<usize> = labels.to_vec();
        order.sort_unstable();
        order.dedup();
        let index: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut classes = vec![Vec::new(); order.len()];
        for (v, l) in labels.iter().enumerate() {
            classes[index[l]].push(v);
        }
        Self { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// `labels[v]` is the index of the class containing `v`.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.classes.iter().map(Vec::len).sum();
        let mut labels = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                labels[v] = i;
            }
        }
        labels
    }

    /// True when both describe the same set partition, ignoring class order.
    pub fn same_sets(&self, other: &Self) -> bool {
        let norm = |p: &Self| {
            let mut c = p.classes.clone();
            c.iter_mut().for_each(|k| k.sort_unstable());
            c.sort();
            c
        };
        norm(self) == norm(other)
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        let labels = coarser.labels();
        self.classes
            .iter()
            .all(|class| class.iter().all(|&v| labels[v] == labels[class[0]]))
    }
}

fn check_square<R: AsRef<[T]>, T>(rows: &[R]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    for (row, r) in rows.iter().enumerate() {
        let len = r.as_ref().len();
        if len != n {
            return Err(Error::NotSquare {
                row,
                len,
                expected: n,
            });
        }
    }
    Ok(n)
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotPermutation {
            n,
            reason: format!("length {} differs from n", perm.len()),
        });
    }
    let mut hit = vec![false; n];
    for &p in perm {
        if p >= n {
            return Err(Error::NotPermutation {
                n,
                reason: format!("image {p} out of range"),
            });
        }
        if std::mem::replace(&mut hit[p], true) {
            return Err(Error::NotPermutation {
                n,
                reason: format!("image {p} repeated"),
            });
        }
    }
    Ok(())
}

/// Turns an arbitrary square integer matrix into a [`ColorMatrix`].
///
/// Positions share a color iff they share a raw value and are both on or both
/// off the diagonal. Colors are numbered by first occurrence in a row-major
/// scan.
pub fn normalize<R: AsRef<[u64]>>(raw: &[R]) -> Result<ColorMatrix> {
    let n = check_square(raw)?;
    let mut ids: HashMap<(bool, u64), Color> = HashMap::new();
    let mut colors = Vec::with_capacity(n * n);
    for (u, row) in raw.iter().enumerate() {
        for (v, &x) in row.as_ref().iter().enumerate() {
            let next = ids.len() as Color;
            colors.push(*ids.entry((u == v, x)).or_insert(next));
        }
    }
    Ok(ColorMatrix::from_parts(n, colors, ids.len()))
}

/// Old-to-new color map of [`canonical_form`].
pub fn canonical_relabeling(m: &ColorMatrix) -> Vec<Color> {
    const UNSET: Color = Color::MAX;
    let n = m.n();
    let mut map = vec![UNSET; m.rank()];
    let mut next: Color = 0;
    for u in 0..n {
        let c = m.get(u, u) as usize;
        if map[c] == UNSET {
            map[c] = next;
            next += 1;
        }
    }
    for &c in m.as_slice() {
        let c = c as usize;
        if map[c] == UNSET {
            map[c] = next;
            next += 1;
        }
    }
    map
}

/// Renumbers colors: vertex colors first, then arc colors, each group in
/// order of first occurrence in a row-major scan.
pub fn canonical_form(m: &ColorMatrix) -> ColorMatrix {
    m.recolored(&canonical_relabeling(m))
}

/// Whether `a` and `b` induce the same partition of the `n * n` positions.
pub fn same_partition(a: &ColorMatrix, b: &ColorMatrix) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.rank() != b.rank() {
        return Ok(false);
    }
    const UNSET: Color = Color::MAX;
    let mut forward = vec![UNSET; a.rank()];
    let mut backward = vec![UNSET; b.rank()];
    for (&x, &y) in a.as_slice().iter().zip(b.as_slice()) {
        let (fx, by) = (&mut forward[x as usize], &mut backward[y as usize]);
        if *fx == UNSET && *by == UNSET {
            *fx = y;
            *by = x;
        } else if *fx != y || *by != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `u -> perm[u]` preserves every vertex and arc color.
pub fn is_automorphism(perm: &[usize], m: &ColorMatrix) -> Result<bool> {
    check_permutation(perm, m.n())?;
    let n = m.n();
    Ok((0..n).all(|u| (0..n).all(|v| m.get(u, v) == m.get(perm[u], perm[v]))))
}

/// Vertex classes of equal diagonal color, in canonical color order.
pub fn cells(m: &ColorMatrix) -> VertexPartition {
    let map = canonical_relabeling(m);
    let labels: Vec<usize> = (0..m.n())
        .map(|u| map[m.get(u, u) as usize] as usize)
        .collect();
    VertexPartition::from_labels(&labels)
}

//! Reference machinery: the symbolic squaring engine and brute-force checks of
//! the coherence axioms.
//!
//! Nothing here reuses the fingerprint code of the production engines.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fingerprint::{StableResult, StructureConstants};
use crate::matrix::{Color, ColorMatrix};

/// Default vertex limit for [`check_constants_by_multiplication`].
pub const MULTIPLICATION_LIMIT: usize = 64;

/// Formal sum of noncommuting products `t_i t_j`, stored as sorted
/// `((i, j), multiplicity)` terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Expression(Vec<((Color, Color), u32)>);

impl Expression {
    pub fn coefficient(&self, i: Color, j: Color) -> u32 {
        self.0
            .binary_search_by_key(&(i, j), |t| t.0)
            .map_or(0, |at| self.0[at].1)
    }

    /// Terms ordered by `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = ((Color, Color), u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Color, Color)> for Expression {
    fn from_iter<I: IntoIterator<Item = (Color, Color)>>(pairs: I) -> Self {
        let mut pairs: Vec<(Color, Color)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        let mut terms: Vec<((Color, Color), u32)> = Vec::new();
        for ij in pairs {
            match terms.last_mut() {
                Some(last) if last.0 == ij => last.1 += 1,
                _ => terms.push((ij, 1)),
            }
        }
        Self(terms)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, &((i, j), p)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if p > 1 {
                write!(f, "{p}")?;
            }
            if i == j {
                write!(f, "t_{i}^2")?;
            } else {
                write!(f, "t_{i}t_{j}")?;
            }
        }
        Ok(())
    }
}

fn tally(m: &ColorMatrix, u: usize, v: usize) -> Expression {
    (0..m.n()).map(|w| (m.get(u, w), m.get(w, v))).collect()
}

/// Entries of `D * D` for the generic matrix `D` of `m`, row-major.
pub fn symbolic_product(m: &ColorMatrix) -> Vec<Expression> {
    let n = m.n();
    (0..n * n)
        .into_par_iter()
        .map(|p| tally(m, p / n, p % n))
        .collect()
}

/// Groups positions by `(old color, expression)` and numbers the groups by
/// first occurrence.
fn square_from(m: &ColorMatrix, expressions: &[Expression]) -> ColorMatrix {
    let mut ids: HashMap<(Color, &Expression), Color> = HashMap::new();
    let colors: Vec<Color> = m
        .as_slice()
        .iter()
        .zip(expressions)
        .map(|(&old, e)| {
            let next = ids.len() as Color;
            *ids.entry((old, e)).or_insert(next)
        })
        .collect();
    ColorMatrix::from_parts(m.n(), colors, ids.len())
}

/// One symbolic squaring step. The old color is part of the grouping key so
/// the result always refines `m`.
pub fn symbolic_square(m: &ColorMatrix) -> ColorMatrix {
    square_from(m, &symbolic_product(m))
}

/// Squares until the number of colors stops growing.
pub fn symbolic_closure(m: &ColorMatrix, with_constants: bool) -> StableResult {
    let mut current = m.clone();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let expressions = symbolic_product(&current);
        let next = square_from(&current, &expressions);
        if next.rank() == current.rank() {
            let constants = with_constants.then(|| {
                let n = current.n();
                let per_color = current.coloring();
                let mut values = BTreeMap::new();
                for (k, arcs) in per_color.iter() {
                    let (u, v) = arcs[0];
                    for ((i, j), p) in expressions[u * n + v].terms() {
                        values.insert((i, j, k), p);
                    }
                }
                StructureConstants::from_values(current.rank(), values)
            });
            return StableResult::new(current, iterations, constants);
        }
        current = next;
    }
}

/// Reads `p[i][j][k]` from one arc per color and checks every other arc.
pub fn structure_constants(stable: &ColorMatrix) -> Result<StructureConstants> {
    let n = stable.n();
    let coloring = stable.coloring();
    let mut values = BTreeMap::new();
    for (k, arcs) in coloring.iter() {
        let first = arcs[0];
        let expected = tally(stable, first.0, first.1);
        for &(u, v) in &arcs[1..] {
            if tally(stable, u, v) != expected {
                return Err(Error::NotStable {
                    color: k,
                    first,
                    second: (u, v),
                });
            }
        }
        debug_assert_eq!(expected.terms().map(|t| t.1 as usize).sum::<usize>(), n);
        for ((i, j), p) in expected.terms() {
            values.insert((i, j, k), p);
        }
    }
    Ok(StructureConstants::from_values(stable.rank(), values))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// The classes cover every position.
    Covering,
    /// Diagonal colors cover exactly the diagonal.
    Diagonal,
    /// Classes are pairwise disjoint.
    Disjoint,
    /// The transpose of a class is a class.
    Transpose,
    /// All arcs of a class have the same triangle counts.
    Constants,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Covering => "covering",
            Axiom::Diagonal => "diagonal",
            Axiom::Disjoint => "disjoint",
            Axiom::Transpose => "transpose",
            Axiom::Constants => "constants",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub color: Color,
    pub witness: (usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom {} fails for color {} at ({}, {})",
            self.axiom, self.color, self.witness.0, self.witness.1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    /// Color of the transposed class, where the transpose is a class.
    pub transpose: Vec<Option<Color>>,
    /// At most one violation per color and axiom.
    pub violations: Vec<Violation>,
}

impl CoherenceReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Pairs `(a, b)` with `a < b` whose classes are transposes of each other.
    pub fn transpose_pairs(&self) -> Vec<(Color, Color)> {
        self.transpose
            .iter()
            .enumerate()
            .filter_map(|(a, t)| t.filter(|&b| (a as Color) < b).map(|b| (a as Color, b)))
            .collect()
    }
}

/// Brute-force check of the coherence axioms on every position.
pub fn verify_coherent(m: &ColorMatrix) -> CoherenceReport {
    let n = m.n();
    let r = m.rank();
    let mut violations = Vec::new();

    let mut first: Vec<Option<(usize, usize)>> = vec![None; r];
    let mut on_diagonal = vec![false; r];
    let mut off_diagonal = vec![false; r];
    let mut count = 0usize;
    for u in 0..n {
        for v in 0..n {
            let c = m.get(u, v);
            count += 1;
            if c as usize >= r {
                violations.push(Violation {
                    axiom: Axiom::Covering,
                    color: c,
                    witness: (u, v),
                });
                continue;
            }
            first[c as usize].get_or_insert((u, v));
            if u == v {
                on_diagonal[c as usize] = true;
            } else {
                off_diagonal[c as usize] = true;
            }
        }
    }
    if count != n * n {
        violations.push(Violation {
            axiom: Axiom::Disjoint,
            color: 0,
            witness: (0, 0),
        });
    }
    for c in 0..r {
        match first[c] {
            None => violations.push(Violation {
                axiom: Axiom::Covering,
                color: c as Color,
                witness: (0, 0),
            }),
            Some(w) if on_diagonal[c] && off_diagonal[c] => violations.push(Violation {
                axiom: Axiom::Diagonal,
                color: c as Color,
                witness: w,
            }),
            Some(_) => {}
        }
    }

    let mut transpose: Vec<Option<Color>> = vec![None; r];
    let mut broken = vec![false; r];
    for u in 0..n {
        for v in 0..n {
            let (c, t) = (m.get(u, v) as usize, m.get(v, u));
            if c >= r || broken[c] {
                continue;
            }
            match transpose[c] {
                None => transpose[c] = Some(t),
                Some(prev) if prev != t => {
                    broken[c] = true;
                    violations.push(Violation {
                        axiom: Axiom::Transpose,
                        color: c as Color,
                        witness: (u, v),
                    });
                }
                Some(_) => {}
            }
        }
    }
    for c in 0..r {
        if broken[c] {
            transpose[c] = None;
        } else if let Some(t) = transpose[c] {
            // the map must be an involution, otherwise the transpose of c is
            // only part of class t
            if transpose.get(t as usize).copied().flatten() != Some(c as Color) {
                violations.push(Violation {
                    axiom: Axiom::Transpose,
                    color: c as Color,
                    witness: first[c].unwrap_or((0, 0)),
                });
                transpose[c] = None;
            }
        }
    }

    let expressions = symbolic_product(m);
    let mut reported = vec![false; r];
    for u in 0..n {
        for v in 0..n {
            let c = m.get(u, v) as usize;
            if c >= r || reported[c] {
                continue;
            }
            let (a, b) = first[c].unwrap();
            if expressions[u * n + v] != expressions[a * n + b] {
                reported[c] = true;
                violations.push(Violation {
                    axiom: Axiom::Constants,
                    color: c as Color,
                    witness: (u, v),
                });
            }
        }
    }
    violations.sort_by_key(|v| (v.axiom, v.color));
    CoherenceReport {
        transpose,
        violations,
    }
}

/// An entry where `A_i A_j` and `sum_k p[i][j][k] A_k` differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub i: Color,
    pub j: Color,
    pub position: (usize, usize),
    /// Entry of the product.
    pub product: u32,
    /// Entry predicted by the constants.
    pub predicted: u32,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A_{} A_{} at ({}, {}): product {}, constants give {}",
            self.i, self.j, self.position.0, self.position.1, self.product, self.predicted
        )
    }
}

/// [`check_constants_with_limit`] with the default vertex limit.
pub fn check_constants_by_multiplication(
    stable: &ColorMatrix,
    c: &StructureConstants,
) -> Result<Option<Mismatch>> {
    check_constants_with_limit(stable, c, MULTIPLICATION_LIMIT)
}

/// Multiplies every pair of basis matrices and compares with the constants.
/// Returns the first mismatch found, if any.
///
/// Products are taken with sparse rows: `A_i A_j` costs one step per path
/// `u -i-> w -j-> v`, so all `r^2` products together cost `n^3`.
pub fn check_constants_with_limit(
    stable: &ColorMatrix,
    c: &StructureConstants,
    limit: usize,
) -> Result<Option<Mismatch>> {
    let n = stable.n();
    let r = stable.rank();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if c.rank() != r {
        return Err(Error::InvalidArgument(format!(
            "constants have rank {}, matrix has rank {r}",
            c.rank()
        )));
    }

    // rows[i][w]: columns v with colors(w, v) = i
    let mut rows: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; r];
    for w in 0..n {
        for v in 0..n {
            rows[stable.get(w, v) as usize][w].push(v);
        }
    }
    let sizes = stable.class_sizes();
    let mut predicted: HashMap<(usize, usize), Vec<(usize, u32)>> = HashMap::new();
    for ((i, j, k), p) in c.iter() {
        predicted
            .entry((i as usize, j as usize))
            .or_default()
            .push((k as usize, p));
    }
    let mut expect = vec![0u32; r];

    let mut product = vec![0u32; n * n];
    let mut touched: Vec<usize> = Vec::new();
    let mut hits = vec![0usize; r];
    for i in 0..r {
        for j in 0..r {
            for u in 0..n {
                for &w in &rows[i][u] {
                    for &v in &rows[j][w] {
                        let p = u * n + v;
                        if product[p] == 0 {
                            touched.push(p);
                        }
                        product[p] += 1;
                    }
                }
            }
            let terms = predicted.get(&(i, j)).map_or(&[][..], Vec::as_slice);
            for &(k, p) in terms {
                expect[k] = p;
            }
            let mut found = None;
            for &p in &touched {
                let k = stable.as_slice()[p] as usize;
                hits[k] += 1;
                if found.is_none() && product[p] != expect[k] {
                    found = Some(Mismatch {
                        i: i as Color,
                        j: j as Color,
                        position: (p / n, p % n),
                        product: product[p],
                        predicted: expect[k],
                    });
                }
            }
            if found.is_none() {
                // a class with a nonzero constant must be covered entirely
                if let Some(&(k, _)) = terms.iter().find(|&&(k, _)| hits[k] < sizes[k]) {
                    let position = (0..n * n)
                        .find(|&p| stable.as_slice()[p] as usize == k && product[p] == 0)
                        .unwrap();
                    found = Some(Mismatch {
                        i: i as Color,
                        j: j as Color,
                        position: (position / n, position % n),
                        product: 0,
                        predicted: expect[k],
                    });
                }
            }
            for &p in &touched {
                hits[stable.as_slice()[p] as usize] = 0;
                product[p] = 0;
            }
            touched.clear();
            for &(k, _) in terms {
                expect[k] = 0;
            }
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

//! Benchmark families and colored molecular graphs.
//!
//! Plain graphs use three colors: 0 on the diagonal, 1 for edges, 2 for
//! non-edges (fewer when a class is empty).

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::matrix::{normalize, ColorMatrix};

/// Undirected graph on `n` vertices as a colored complete digraph.
pub fn graph_matrix(n: usize, edges: &[(usize, usize)]) -> Result<ColorMatrix> {
    let mut raw = vec![vec![2u64; n]; n];
    for (u, row) in raw.iter_mut().enumerate() {
        row[u] = 0;
    }
    for &(u, v) in edges {
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        raw[u][v] = 1;
        raw[v][u] = 1;
    }
    normalize(&raw)
}

/// Edge list of the stack of `k` hexagons joined by alternating rungs.
/// Vertex `6 * i + x` is atom `x` (a..f) of stage `i`.
pub fn benzene_stack_edges(k: usize) -> Result<Vec<(usize, usize)>> {
    if k < 1 {
        return Err(Error::InvalidArgument("benzene stack needs k >= 1".into()));
    }
    let mut edges = Vec::with_capacity(9 * k);
    for i in 0..k {
        for x in 0..6 {
            edges.push((6 * i + x, 6 * i + (x + 1) % 6));
        }
    }
    for j in 0..k - 1 {
        // a, c, e between the first and second stage, then b, d, f, ...
        let start = j % 2;
        for x in (start..6).step_by(2) {
            edges.push((6 * j + x, 6 * (j + 1) + x));
        }
    }
    Ok(edges)
}

pub fn benzene_stack(k: usize) -> Result<ColorMatrix> {
    graph_matrix(6 * k, &benzene_stack_edges(k)?)
}

/// Circulant on `2k` vertices with differences 1 and `k`.
pub fn moebius_ladder_edges(k: usize) -> Result<Vec<(usize, usize)>> {
    if k < 3 {
        return Err(Error::InvalidArgument("Moebius ladder needs k >= 3".into()));
    }
    let n = 2 * k;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    edges.extend((0..k).map(|u| (u, u + k)));
    Ok(edges)
}

pub fn moebius_ladder(k: usize) -> Result<ColorMatrix> {
    graph_matrix(2 * k, &moebius_ladder_edges(k)?)
}

/// Path `0..n-2` with leaves `n-2` and `n-1` hanging off vertex `n-3`.
pub fn dynkin_edges(n: usize) -> Result<Vec<(usize, usize)>> {
    if n < 4 {
        return Err(Error::InvalidArgument("Dynkin graph needs n >= 4".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 3).map(|u| (u, u + 1)).collect();
    edges.push((n - 3, n - 2));
    edges.push((n - 3, n - 1));
    Ok(edges)
}

pub fn dynkin(n: usize) -> Result<ColorMatrix> {
    graph_matrix(n, &dynkin_edges(n)?)
}

/// Atoms and bonds of a molecule.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MolecularSpec {
    /// Category of each atom, e.g. 0 = C, 1 = N.
    pub atoms: Vec<u32>,
    /// Undirected bonds `(u, v, kind)`.
    pub bonds: Vec<(usize, usize, u32)>,
    /// Kind used for every pair without a bond.
    pub non_bond: u32,
}

/// Atom categories go on the diagonal; bond kinds are numbered after the
/// largest atom category. Ids are then compacted keeping their order.
pub fn molecular(spec: &MolecularSpec) -> Result<ColorMatrix> {
    let n = spec.atoms.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let offset = *spec.atoms.iter().max().unwrap() as u64 + 1;
    let mut raw = vec![vec![offset + spec.non_bond as u64; n]; n];
    for (u, &atom) in spec.atoms.iter().enumerate() {
        raw[u][u] = atom as u64;
    }
    let mut seen = HashSet::new();
    for &(u, v, kind) in &spec.bonds {
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!(
                "bond from atom {u} to itself"
            )));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidArgument(format!("duplicate bond {u}-{v}")));
        }
        raw[u][v] = offset + kind as u64;
        raw[v][u] = offset + kind as u64;
    }
    let values: Vec<u64> = raw
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let compact: Vec<Vec<u32>> = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| values.binary_search(x).unwrap() as u32)
                .collect()
        })
        .collect();
    ColorMatrix::from_rows(&compact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(m: &ColorMatrix) -> Vec<usize> {
        // vertices 0 and 1 are adjacent in every family
        let n = m.n();
        let edge = m.get(0, 1);
        (0..n)
            .map(|u| (0..n).filter(|&v| v != u && m.get(u, v) == edge).count())
            .collect()
    }

    #[test]
    fn benzene_shapes() {
        assert_eq!(benzene_stack_edges(1).unwrap().len(), 6);
        assert_eq!(benzene_stack_edges(2).unwrap().len(), 15);
        assert_eq!(benzene_stack_edges(3).unwrap().len(), 24);
        let m = benzene_stack(4).unwrap();
        assert_eq!(m.n(), 24);
        assert!(degrees(&m).iter().all(|&d| d == 2 || d == 3));
        assert!(benzene_stack(0).is_err());
        // rungs alternate between a, c, e and b, d, f
        let e = benzene_stack_edges(3).unwrap();
        assert!(e.contains(&(0, 6)) && e.contains(&(7, 13)) && !e.contains(&(1, 7)));
    }

    #[test]
    fn moebius_shapes() {
        let m = moebius_ladder(5).unwrap();
        assert_eq!((m.n(), moebius_ladder_edges(5).unwrap().len()), (10, 15));
        assert!(degrees(&m).iter().all(|&d| d == 3));
        assert!(moebius_ladder(2).is_err());
        assert_eq!(moebius_ladder(3).unwrap().rank(), 3);
    }

    #[test]
    fn dynkin_shapes() {
        let m = dynkin(7).unwrap();
        let mut d = degrees(&m);
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 1, 2, 2, 2, 3]);
        assert!(dynkin(3).is_err());
        // D_4 is the star with centre 1
        let star = dynkin(4).unwrap();
        assert_eq!(degrees(&star)[1], 3);
    }

    #[test]
    fn deterministic() {
        assert_eq!(benzene_stack(3).unwrap(), benzene_stack(3).unwrap());
        assert_eq!(dynkin(9).unwrap(), dynkin(9).unwrap());
    }

    #[test]
    fn ethylene_spec() {
        let spec = MolecularSpec {
            atoms: vec![0, 0, 1, 1, 1, 1],
            bonds: vec![(0, 1, 1), (0, 2, 0), (0, 3, 0), (1, 4, 0), (1, 5, 0)],
            non_bond: 2,
        };
        let m = molecular(&spec).unwrap();
        let expected = ColorMatrix::from_rows(&[
            [0, 3, 2, 2, 4, 4],
            [3, 0, 4, 4, 2, 2],
            [2, 4, 1, 4, 4, 4],
            [2, 4, 4, 1, 4, 4],
            [4, 2, 4, 4, 1, 4],
            [4, 2, 4, 4, 4, 1],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn molecular_errors() {
        let one = MolecularSpec {
            atoms: vec![3],
            bonds: vec![],
            non_bond: 0,
        };
        assert_eq!(molecular(&one).unwrap().rank(), 1);
        let dup = MolecularSpec {
            atoms: vec![0, 0],
            bonds: vec![(0, 1, 0), (1, 0, 1)],
            non_bond: 2,
        };
        assert!(matches!(molecular(&dup), Err(Error::InvalidArgument(_))));
        assert!(molecular(&MolecularSpec::default()).is_err());
    }
}

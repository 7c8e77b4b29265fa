//! Vertex refinement by valencies: the total degree partition and the
//! preprocessing recoloring run before the main engines.

use std::collections::{BTreeMap, HashMap};

use crate::matrix::{Color, ColorMatrix, VertexPartition};

/// Numbers `keys` by the lexicographic order of their distinct values.
fn rank_keys<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).unwrap())
        .collect()
}

/// Coarsest partition refining the vertex colors in which any two vertices of
/// a class send the same number of arcs of each color into each class.
pub fn total_degree_partition(m: &ColorMatrix) -> VertexPartition {
    let n = m.n();
    let mut labels = rank_keys(&(0..n).map(|u| m.get(u, u)).collect::<Vec<_>>());
    let mut classes = labels.iter().max().map_or(0, |&l| l + 1);
    type Key = (usize, Vec<(Color, usize, usize)>);
    loop {
        let keys: Vec<Key> = (0..n)
            .map(|u| {
                let mut counts: BTreeMap<(Color, usize), usize> = BTreeMap::new();
                for v in (0..n).filter(|&v| v != u) {
                    *counts.entry((m.get(u, v), labels[v])).or_insert(0) += 1;
                }
                let list = counts.into_iter().map(|((k, c), p)| (k, c, p)).collect();
                (labels[u], list)
            })
            .collect();
        let next = rank_keys(&keys);
        let count = next.iter().max().map_or(0, |&l| l + 1);
        labels = next;
        if count == classes {
            return VertexPartition::from_labels(&labels);
        }
        classes = count;
    }
}

/// One vertex round and one arc round: vertices are split by their vertex
/// color and the number of incident arcs of each color, in both directions;
/// then every arc color is split by the classes of its two endpoints.
pub fn preprocess_recolor(m: &ColorMatrix) -> ColorMatrix {
    let n = m.n();
    type Key = (Color, Vec<(Color, usize)>, Vec<(Color, usize)>);
    let keys: Vec<Key> = (0..n)
        .map(|u| {
            let mut out: BTreeMap<Color, usize> = BTreeMap::new();
            let mut inc: BTreeMap<Color, usize> = BTreeMap::new();
            for v in (0..n).filter(|&v| v != u) {
                *out.entry(m.get(u, v)).or_insert(0) += 1;
                *inc.entry(m.get(v, u)).or_insert(0) += 1;
            }
            (
                m.get(u, u),
                out.into_iter().collect(),
                inc.into_iter().collect(),
            )
        })
        .collect();
    let class = rank_keys(&keys);

    let mut ids: HashMap<(Color, usize, usize), Color> = HashMap::new();
    let mut colors = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            // a diagonal color is already determined by the class of u
            let key = if u == v {
                (m.get(u, u), class[u], class[u])
            } else {
                (m.get(u, v), class[u], class[v])
            };
            let next = ids.len() as Color;
            colors.push(*ids.entry(key).or_insert(next));
        }
    }
    ColorMatrix::from_parts(n, colors, ids.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{cells, normalize, same_partition};
    use crate::stabil::stabil_closure;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ColorMatrix {
        let mut raw = vec![vec![2u64; n]; n];
        for (u, row) in raw.iter_mut().enumerate() {
            row[u] = 0;
        }
        for &(u, v) in edges {
            raw[u][v] = 1;
            raw[v][u] = 1;
        }
        normalize(&raw).unwrap()
    }

    fn cuneane() -> ColorMatrix {
        let raw = [
            [1u64, 2, 3, 3, 3, 3, 2, 2],
            [2, 1, 2, 2, 3, 3, 3, 3],
            [3, 2, 1, 2, 3, 3, 3, 2],
            [3, 2, 2, 1, 2, 3, 3, 3],
            [3, 3, 3, 2, 1, 2, 2, 3],
            [3, 3, 3, 3, 2, 1, 2, 2],
            [2, 3, 3, 3, 2, 2, 1, 3],
            [2, 3, 2, 3, 3, 2, 3, 1],
        ];
        normalize(&raw).unwrap()
    }

    /// Repeatedly splits classes by neighbour counts per class until nothing
    /// changes; compares sets of vertices rather than labels.
    fn naive_equitable(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
        let n = adj.len();
        let mut parts: Vec<Vec<usize>> = vec![(0..n).collect()];
        loop {
            let mut next = Vec::new();
            for part in &parts {
                let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
                for &u in part {
                    let sig: Vec<usize> = parts
                        .iter()
                        .map(|q| q.iter().filter(|&&v| adj[u][v]).count())
                        .collect();
                    match groups.iter_mut().find(|g| g.0 == sig) {
                        Some(g) => g.1.push(u),
                        None => groups.push((sig, vec![u])),
                    }
                }
                next.extend(groups.into_iter().map(|g| g.1));
            }
            if next.len() == parts.len() {
                return next;
            }
            parts = next;
        }
    }

    #[test]
    fn cuneane_is_one_class() {
        let p = total_degree_partition(&cuneane());
        assert_eq!(p.len(), 1);
        assert_eq!(p.classes()[0].len(), 8);
    }

    #[test]
    fn path_on_three_vertices() {
        let p = total_degree_partition(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!(p.classes(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn dynkin_six_matches_naive_refinement() {
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)];
        let mut adj = vec![vec![false; 6]; 6];
        for &(u, v) in &edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let expected = naive_equitable(&adj);
        assert_eq!(expected.len(), 5);
        let p = total_degree_partition(&graph(6, &edges));
        let mut got: Vec<Vec<usize>> = p.classes().to_vec();
        let mut want = expected;
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn idempotent_and_refined_by_stable_cells() {
        let m = graph(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]);
        let p = total_degree_partition(&m);
        let recolored = {
            let labels = p.labels();
            let mut raw: Vec<Vec<u64>> = m
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(|c| c as u64 + 100).collect())
                .collect();
            for (u, row) in raw.iter_mut().enumerate() {
                row[u] = labels[u] as u64;
            }
            normalize(&raw).unwrap()
        };
        assert!(total_degree_partition(&recolored).same_sets(&p));
        assert!(cells(&stabil_closure(&m, false).stable).refines(&p));
    }

    #[test]
    fn ethylene_preprocessing() {
        let a = ColorMatrix::from_rows(&[
            [0, 3, 2, 2, 4, 4],
            [3, 0, 4, 4, 2, 2],
            [2, 4, 1, 4, 4, 4],
            [2, 4, 4, 1, 4, 4],
            [4, 2, 4, 4, 1, 4],
            [4, 2, 4, 4, 4, 1],
        ])
        .unwrap();
        let b = preprocess_recolor(&a);
        // C-H bonds split by direction, non-bonds into C->H, H->C and H-H
        assert_eq!(b.rank(), 8);
        assert_ne!(b.get(2, 3), b.get(0, 4));
        assert!(!same_partition(&a, &b).unwrap());
        assert!(same_partition(
            &stabil_closure(&a, false).stable,
            &stabil_closure(&b, false).stable
        )
        .unwrap());
    }

    #[test]
    fn vertex_transitive_input_is_unchanged() {
        let edges: Vec<(usize, usize)> = (0..10)
            .flat_map(|u| [(u, (u + 1) % 10), (u, (u + 5) % 10)])
            .filter(|&(u, v)| u < v || v == (u + 1) % 10)
            .collect();
        let m = graph(10, &edges);
        assert!(same_partition(&m, &preprocess_recolor(&m)).unwrap());
    }

    #[test]
    fn stable_input_is_unchanged() {
        let stable = stabil_closure(&cuneane(), false).stable;
        assert!(same_partition(&stable, &preprocess_recolor(&stable)).unwrap());
    }
}

//! Small matrices with known closures, plus random instance generators.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use wlstab_core::{graph_matrix, normalize, ColorMatrix};

pub fn matrix<const N: usize>(rows: &[[u32; N]]) -> ColorMatrix {
    ColorMatrix::from_rows(rows).unwrap()
}

pub fn raw<const N: usize>(rows: &[[u64; N]]) -> ColorMatrix {
    normalize(rows).unwrap()
}

/// Ethylene: carbons 0, 1 and hydrogens 2..6; 2 single bond, 3 double bond,
/// 4 no bond.
pub fn ethylene() -> ColorMatrix {
    matrix(&[
        [0, 3, 2, 2, 4, 4],
        [3, 0, 4, 4, 2, 2],
        [2, 4, 1, 4, 4, 4],
        [2, 4, 4, 1, 4, 4],
        [4, 2, 4, 4, 1, 4],
        [4, 2, 4, 4, 4, 1],
    ])
}

pub fn ethylene_stable() -> ColorMatrix {
    matrix(&[
        [0, 2, 3, 3, 4, 4],
        [2, 0, 4, 4, 3, 3],
        [5, 6, 1, 7, 8, 8],
        [5, 6, 7, 1, 8, 8],
        [6, 5, 8, 8, 1, 7],
        [6, 5, 8, 8, 7, 1],
    ])
}

/// Index of the expression `x_i` at each position of the symbolic square.
pub const ETHYLENE_SQUARE: [[usize; 6]; 6] = [
    [0, 2, 3, 3, 4, 4],
    [2, 0, 4, 4, 3, 3],
    [5, 6, 1, 7, 8, 8],
    [5, 6, 7, 1, 8, 8],
    [6, 5, 8, 8, 1, 7],
    [6, 5, 8, 8, 7, 1],
];

pub const ETHYLENE_EXPRESSIONS: [&str; 9] = [
    "t_0^2 + 2t_2^2 + t_3^2 + 2t_4^2",
    "t_1^2 + t_2^2 + 4t_4^2",
    "t_0t_3 + 2t_2t_4 + t_3t_0 + 2t_4t_2",
    "t_0t_2 + t_2t_1 + t_2t_4 + t_3t_4 + 2t_4^2",
    "t_0t_4 + 2t_2t_4 + t_3t_2 + t_4t_1 + t_4^2",
    "t_1t_2 + t_2t_0 + t_4t_2 + t_4t_3 + 2t_4^2",
    "t_1t_4 + t_2t_3 + t_4t_0 + 2t_4t_2 + t_4^2",
    "t_1t_4 + t_2^2 + t_4t_1 + 3t_4^2",
    "t_1t_4 + t_2t_4 + t_4t_1 + t_4t_2 + 2t_4^2",
];

/// Cuneane skeleton: 1 on the diagonal, 2 for bonds, 3 otherwise.
pub fn cuneane() -> ColorMatrix {
    raw(&[
        [1, 2, 3, 3, 3, 3, 2, 2],
        [2, 1, 2, 2, 3, 3, 3, 3],
        [3, 2, 1, 2, 3, 3, 3, 2],
        [3, 2, 2, 1, 2, 3, 3, 3],
        [3, 3, 3, 2, 1, 2, 2, 3],
        [3, 3, 3, 3, 2, 1, 2, 2],
        [2, 3, 3, 3, 2, 2, 1, 3],
        [2, 3, 2, 3, 3, 2, 3, 1],
    ])
}

/// Cuneane after one refinement pass.
pub fn cuneane_first() -> ColorMatrix {
    raw(&[
        [1, 2, 3, 4, 4, 3, 2, 2],
        [2, 1, 5, 5, 4, 6, 4, 3],
        [3, 5, 1, 5, 4, 4, 6, 2],
        [4, 5, 5, 1, 2, 4, 4, 4],
        [4, 4, 4, 2, 1, 5, 5, 4],
        [3, 6, 4, 4, 5, 1, 5, 2],
        [2, 4, 6, 4, 5, 5, 1, 3],
        [2, 3, 2, 4, 4, 2, 3, 1],
    ])
}

/// Cuneane after the second pass, which is already stable.
pub fn cuneane_second() -> ColorMatrix {
    raw(&[
        [1, 2, 3, 4, 4, 3, 2, 5],
        [6, 7, 8, 9, 10, 11, 12, 13],
        [13, 8, 7, 9, 10, 12, 11, 6],
        [14, 15, 15, 16, 17, 18, 18, 14],
        [14, 18, 18, 17, 16, 15, 15, 14],
        [13, 11, 12, 10, 9, 7, 8, 6],
        [6, 12, 11, 10, 9, 8, 7, 13],
        [5, 3, 2, 4, 4, 2, 3, 1],
    ])
}

/// Centralizer algebra of a group acting on 5 points; rank 6.
pub fn five_point() -> ColorMatrix {
    matrix(&[
        [0, 2, 2, 4, 4],
        [2, 0, 2, 4, 4],
        [2, 2, 0, 4, 4],
        [5, 5, 5, 1, 3],
        [5, 5, 5, 3, 1],
    ])
}

/// The group of [`five_point`], as images of 0..5.
pub const FIVE_POINT_GROUP: [[usize; 5]; 6] = [
    [0, 1, 2, 3, 4],
    [1, 2, 0, 3, 4],
    [2, 0, 1, 3, 4],
    [1, 0, 2, 4, 3],
    [2, 1, 0, 4, 3],
    [0, 2, 1, 4, 3],
];

/// Star with centre 0, closed.
pub fn star_stable() -> ColorMatrix {
    matrix(&[[0, 2, 2, 2], [3, 1, 4, 4], [3, 4, 1, 4], [3, 4, 4, 1]])
}

/// Standard basis of the closed star, one 0/1 matrix per color.
pub const STAR_BASIS: [[[u8; 4]; 4]; 5] = [
    [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 1, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1], [0, 1, 1, 0]],
];

pub fn star() -> ColorMatrix {
    graph_matrix(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

pub fn kite() -> ColorMatrix {
    raw(&[[0, 1, 2, 1], [1, 0, 1, 1], [2, 1, 0, 1], [1, 1, 1, 0]])
}

pub const KITE_SWAP: [usize; 4] = [2, 3, 0, 1];

/// A nitro compound: 0, 1, 2, 3 on the diagonal for C, N, O, H; 4 single bond,
/// 5 double bond, 6 no bond.
pub fn nitro_compound() -> ColorMatrix {
    matrix(&[
        [0, 4, 6, 6, 6, 5, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6],
        [4, 0, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6],
        [6, 5, 0, 4, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6],
        [6, 6, 4, 0, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6, 6, 6],
        [6, 6, 6, 5, 0, 4, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6],
        [5, 6, 6, 6, 4, 0, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6, 6],
        [6, 6, 4, 6, 6, 6, 1, 6, 6, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6],
        [6, 6, 6, 6, 4, 6, 6, 1, 6, 6, 6, 5, 5, 6, 6, 6, 6, 6, 6],
        [4, 6, 6, 6, 6, 6, 6, 6, 1, 6, 6, 6, 6, 5, 5, 6, 6, 6, 6],
        [6, 6, 6, 6, 6, 6, 5, 6, 6, 2, 6, 6, 6, 6, 6, 6, 6, 6, 6],
        [6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 2, 6, 6, 6, 6, 6, 6, 6, 6],
        [6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 2, 6, 6, 6, 6, 6, 6, 6],
        [6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 2, 6, 6, 6, 6, 6, 6],
        [6, 6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 2, 6, 6, 6, 6, 6],
        [6, 6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 6, 2, 6, 6, 6, 6],
        [6, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 2, 6, 6, 4],
        [6, 6, 6, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 6, 6],
        [6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 6],
        [6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6, 6, 3],
    ])
}

/// Mirror symmetry of the drawn molecule.
pub const NITRO_MIRROR: [usize; 19] = [
    0, 5, 4, 3, 2, 1, 7, 6, 8, 11, 12, 9, 10, 14, 13, 15, 17, 16, 18,
];

/// Random colored digraph, undirected graph or circulant on `n` vertices.
pub fn random_instance(rng: &mut impl Rng, n: usize) -> ColorMatrix {
    match rng.gen_range(0..3) {
        0 => {
            let vertex_colors = rng.gen_range(1..=2u64);
            let arc_colors = rng.gen_range(1..=3u64);
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|u| {
                    (0..n)
                        .map(|v| {
                            if u == v {
                                rng.gen_range(0..vertex_colors)
                            } else {
                                10 + rng.gen_range(0..arc_colors)
                            }
                        })
                        .collect()
                })
                .collect();
            normalize(&rows).unwrap()
        }
        1 => {
            let p: f64 = rng.gen_range(0.1..0.6);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            graph_matrix(n, &edges).unwrap()
        }
        _ => {
            let mut diffs: Vec<usize> = (1..n.max(2)).collect();
            diffs.shuffle(rng);
            diffs.truncate(rng.gen_range(0..=diffs.len().min(3)));
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| diffs.iter().map(move |&d| (u, (u + d) % n)))
                .filter(|&(u, v)| u != v)
                .collect();
            let mut rows = vec![vec![2u64; n]; n];
            for (u, row) in rows.iter_mut().enumerate() {
                row[u] = 0;
            }
            // directed arcs, so circulants need not be symmetric
            for (u, v) in edges {
                rows[u][v] = 1;
            }
            normalize(&rows).unwrap()
        }
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

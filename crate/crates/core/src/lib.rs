//! Coherent closure of colored complete digraphs.
//!
//! A [`ColorMatrix`] colors every ordered pair of vertices; the closure
//! engines refine it until each color class has constant triangle counts.
//! [`stabil_closure`] recomputes every arc each iteration, [`stabcol_closure`]
//! only revisits triangles touching freshly split classes, and
//! [`symbolic_closure`] squares the generic matrix directly and serves as the
//! reference.

pub mod degree;
pub mod error;
pub mod fingerprint;
pub mod generators;
pub mod matrix;
pub mod oracle;
mod sort;
pub mod stabcol;
pub mod stabil;

pub use degree::{preprocess_recolor, total_degree_partition};
pub use error::{Error, Result};
pub use fingerprint::{Fingerprint, StableResult, StructureConstants};
pub use generators::{
    benzene_stack, dynkin, graph_matrix, moebius_ladder, molecular, MolecularSpec,
};
pub use matrix::{
    canonical_form, canonical_relabeling, cells, is_automorphism, normalize, same_partition, Color,
    ColorMatrix, Coloring, VertexPartition,
};
pub use oracle::{
    check_constants_by_multiplication, structure_constants, symbolic_closure, symbolic_square,
    verify_coherent, CoherenceReport,
};
pub use stabcol::{stabcol_closure, stabcol_round, WorkSet};
pub use stabil::{arc_fingerprint, stabil_closure, stabil_iteration};

/// Closure engine selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Stabil,
    Stabcol,
    Symbolic,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Stabil, Engine::Stabcol, Engine::Symbolic];

    pub fn close(self, m: &ColorMatrix, with_constants: bool) -> StableResult {
        match self {
            Engine::Stabil => stabil_closure(m, with_constants),
            Engine::Stabcol => stabcol_closure(m, with_constants),
            Engine::Symbolic => symbolic_closure(m, with_constants),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Engine::Stabil => "stabil",
            Engine::Stabcol => "stabcol",
            Engine::Symbolic => "symbolic",
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown engine {s:?}")))
    }
}

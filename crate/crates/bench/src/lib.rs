//! Instances shared by the benchmarks.

use wlstab_core::{benzene_stack, dynkin, moebius_ladder, ColorMatrix};

/// The three benchmark families with one parameter each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Benzene,
    Moebius,
    Dynkin,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Benzene => "benzene",
            Family::Moebius => "moebius",
            Family::Dynkin => "dynkin",
        }
    }

    pub fn instance(self, param: usize) -> ColorMatrix {
        match self {
            Family::Benzene => benzene_stack(param),
            Family::Moebius => moebius_ladder(param),
            Family::Dynkin => dynkin(param),
        }
        .expect("parameter in range")
    }
}

/// Parameters giving roughly `n = 12, 24, 48`.
pub fn sizes(family: Family) -> [usize; 3] {
    match family {
        Family::Benzene => [2, 4, 8],
        Family::Moebius => [6, 12, 24],
        Family::Dynkin => [12, 24, 48],
    }
}

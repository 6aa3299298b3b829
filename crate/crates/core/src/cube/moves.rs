//! Face turns as cubie permutations with orientation deltas.
//!
//! Moves use the "replaced-by" convention: after applying a move, slot `i`
//! holds the cubie that was in slot `perm[i]`, with `twist[i]` added to its
//! orientation.

use std::fmt;

use super::CubeSize;

/// Corner slots, in order: URF UFL ULB UBR DFR DLF DBL DRB.
pub const CORNERS: usize = 8;
/// Edge slots, in order: UR UF UL UB DR DF DL DB FR FL BL BR.
pub const EDGES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    U,
    R,
    F,
    D,
    L,
    B,
}

impl Face {
    pub const ALL: [Face; 6] = [Face::U, Face::R, Face::F, Face::D, Face::L, Face::B];

    fn letter(self) -> char {
        match self {
            Face::U => 'U',
            Face::R => 'R',
            Face::F => 'F',
            Face::D => 'D',
            Face::L => 'L',
            Face::B => 'B',
        }
    }

    /// Clockwise quarter turn of this face.
    fn quarter_turn(self) -> ([u8; CORNERS], [u8; CORNERS], [u8; EDGES], [u8; EDGES]) {
        const NO_TWIST: [u8; CORNERS] = [0; CORNERS];
        const NO_FLIP: [u8; EDGES] = [0; EDGES];
        match self {
            Face::U => (
                [3, 0, 1, 2, 4, 5, 6, 7],
                NO_TWIST,
                [3, 0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11],
                NO_FLIP,
            ),
            Face::R => (
                [4, 1, 2, 0, 7, 5, 6, 3],
                [2, 0, 0, 1, 1, 0, 0, 2],
                [8, 1, 2, 3, 11, 5, 6, 7, 4, 9, 10, 0],
                NO_FLIP,
            ),
            Face::F => (
                [1, 5, 2, 3, 0, 4, 6, 7],
                [1, 2, 0, 0, 2, 1, 0, 0],
                [0, 9, 2, 3, 4, 8, 6, 7, 1, 5, 10, 11],
                [0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0],
            ),
            Face::D => (
                [0, 1, 2, 3, 5, 6, 7, 4],
                NO_TWIST,
                [0, 1, 2, 3, 5, 6, 7, 4, 8, 9, 10, 11],
                NO_FLIP,
            ),
            Face::L => (
                [0, 2, 6, 3, 4, 1, 5, 7],
                [0, 1, 2, 0, 0, 2, 1, 0],
                [0, 1, 10, 3, 4, 5, 9, 7, 8, 2, 6, 11],
                NO_FLIP,
            ),
            Face::B => (
                [0, 1, 3, 7, 4, 5, 2, 6],
                [0, 0, 1, 2, 0, 0, 2, 1],
                [0, 1, 2, 11, 4, 5, 6, 10, 8, 9, 3, 7],
                [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1],
            ),
        }
    }
}

/// A single generator of a turn metric, stored as precomputed permutation
/// and orientation actions so that applying it is pure array indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    name: String,
    size: CubeSize,
    pub(crate) corner_perm: [u8; CORNERS],
    pub(crate) corner_twist: [u8; CORNERS],
    pub(crate) edge_perm: [u8; EDGES],
    pub(crate) edge_flip: [u8; EDGES],
}

impl Move {
    pub fn identity(size: CubeSize) -> Self {
        Move {
            name: String::new(),
            size,
            corner_perm: std::array::from_fn(|i| i as u8),
            corner_twist: [0; CORNERS],
            edge_perm: std::array::from_fn(|i| i as u8),
            edge_flip: [0; EDGES],
        }
    }

    /// Clockwise quarter turn of `face`.
    pub fn face(size: CubeSize, face: Face) -> Self {
        let (corner_perm, corner_twist, edge_perm, edge_flip) = face.quarter_turn();
        Move {
            name: face.letter().to_string(),
            size,
            corner_perm,
            corner_twist,
            edge_perm,
            edge_flip,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cube_size(&self) -> CubeSize {
        self.size
    }

    pub fn corner_perm(&self) -> &[u8; CORNERS] {
        &self.corner_perm
    }

    pub fn corner_twist(&self) -> &[u8; CORNERS] {
        &self.corner_twist
    }

    pub fn edge_perm(&self) -> &[u8; EDGES] {
        &self.edge_perm
    }

    pub fn edge_flip(&self) -> &[u8; EDGES] {
        &self.edge_flip
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Move) -> Move {
        debug_assert_eq!(self.size, next.size);
        let mut out = Move::identity(self.size);
        for i in 0..CORNERS {
            let src = next.corner_perm[i] as usize;
            out.corner_perm[i] = self.corner_perm[src];
            out.corner_twist[i] = (self.corner_twist[src] + next.corner_twist[i]) % 3;
        }
        for i in 0..EDGES {
            let src = next.edge_perm[i] as usize;
            out.edge_perm[i] = self.edge_perm[src];
            out.edge_flip[i] = (self.edge_flip[src] + next.edge_flip[i]) % 2;
        }
        out.name = format!("{}{}", self.name, next.name);
        out
    }

    /// The move repeated `times` times, named in Singmaster style
    /// (`R`, `R2`, `R'`).
    pub fn power(&self, times: u32) -> Move {
        let mut out = Move::identity(self.size);
        for _ in 0..times {
            out = out.then(self);
        }
        out.name = match times % 4 {
            1 => self.name.clone(),
            2 => format!("{}2", self.name),
            3 => format!("{}'", self.name),
            _ => String::new(),
        };
        out
    }

    pub fn inverse(&self) -> Move {
        let mut out = Move::identity(self.size);
        for i in 0..CORNERS {
            let dst = self.corner_perm[i] as usize;
            out.corner_perm[dst] = i as u8;
            out.corner_twist[dst] = (3 - self.corner_twist[i]) % 3;
        }
        for i in 0..EDGES {
            let dst = self.edge_perm[i] as usize;
            out.edge_perm[dst] = i as u8;
            out.edge_flip[dst] = (2 - self.edge_flip[i]) % 2;
        }
        out.name = if out.same_action(self) {
            self.name.clone()
        } else {
            match self.name.strip_suffix('\'') {
                Some(base) => base.to_string(),
                None => format!("{}'", self.name),
            }
        };
        out
    }

    pub fn is_identity(&self) -> bool {
        self.same_action(&Move::identity(self.size))
    }

    /// Smallest positive power of the move that is the identity.
    pub fn order(&self) -> u32 {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.then(self);
            n += 1;
        }
        n
    }

    /// Equal actions, ignoring the label.
    pub fn same_action(&self, other: &Move) -> bool {
        self.size == other.size
            && self.corner_perm == other.corner_perm
            && self.corner_twist == other.corner_twist
            && self.edge_perm == other.edge_perm
            && self.edge_flip == other.edge_flip
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

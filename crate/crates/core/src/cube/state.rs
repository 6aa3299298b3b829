use serde::{Deserialize, Serialize};

use super::moves::{Move, CORNERS, EDGES};
use super::CubeSize;
use crate::error::{Error, Result};

/// Corner slot held fixed on the 2×2×2 cube (UFL) to quotient out
/// whole-cube rotations. No 2×2×2 generator moves or twists it.
pub const ANCHOR_CORNER: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CornerState {
    pub permutation: [u8; CORNERS],
    pub orientation: [u8; CORNERS],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeState {
    pub permutation: [u8; EDGES],
    pub orientation: [u8; EDGES],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeState {
    pub size: CubeSize,
    pub corners: CornerState,
    /// Present only on the 3×3×3 cube.
    pub edges: Option<EdgeState>,
}

impl CornerState {
    pub const SOLVED: CornerState = CornerState {
        permutation: [0, 1, 2, 3, 4, 5, 6, 7],
        orientation: [0; CORNERS],
    };

    pub fn is_valid(&self) -> bool {
        is_bijection(&self.permutation)
            && self.orientation.iter().all(|&t| t < 3)
            && self.orientation.iter().map(|&t| t as u32).sum::<u32>() % 3 == 0
    }
}

impl EdgeState {
    pub const SOLVED: EdgeState = EdgeState {
        permutation: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        orientation: [0; EDGES],
    };

    pub fn is_valid(&self) -> bool {
        is_bijection(&self.permutation)
            && self.orientation.iter().all(|&f| f < 2)
            && self.orientation.iter().map(|&f| f as u32).sum::<u32>() % 2 == 0
    }
}

impl CubeState {
    /// The anchored corner slot, if this cube size uses one.
    pub fn anchor(&self) -> Option<usize> {
        match self.size {
            CubeSize::Two => Some(ANCHOR_CORNER),
            CubeSize::Three => None,
        }
    }

    /// Checks every structural invariant of the representation. On the
    /// 3×3×3 cube this includes equal corner and edge permutation parity,
    /// i.e. membership in the full cube group.
    pub fn is_valid(&self) -> bool {
        if !self.corners.is_valid() {
            return false;
        }
        match (self.size, &self.edges) {
            (CubeSize::Two, None) => {
                self.corners.permutation[ANCHOR_CORNER] as usize == ANCHOR_CORNER
                    && self.corners.orientation[ANCHOR_CORNER] == 0
            }
            (CubeSize::Three, Some(edges)) => {
                edges.is_valid()
                    && parity(&self.corners.permutation) == parity(&edges.permutation)
            }
            _ => false,
        }
    }

    pub fn is_solved(&self) -> bool {
        *self == solved_state(self.size)
    }
}

pub fn solved_state(size: CubeSize) -> CubeState {
    CubeState {
        size,
        corners: CornerState::SOLVED,
        edges: match size {
            CubeSize::Two => None,
            CubeSize::Three => Some(EdgeState::SOLVED),
        },
    }
}

pub fn apply_move(state: &CubeState, mv: &Move) -> Result<CubeState> {
    if mv.cube_size() != state.size {
        return Err(Error::CubeSizeMismatch {
            mv: mv.name().to_string(),
            expected: mv.cube_size(),
            found: state.size,
        });
    }
    Ok(apply_unchecked(state, mv))
}

/// Same as [`apply_move`] for callers that already know the sizes agree.
#[inline]
pub(crate) fn apply_unchecked(state: &CubeState, mv: &Move) -> CubeState {
    let mut corners = CornerState::SOLVED;
    for i in 0..CORNERS {
        let src = mv.corner_perm[i] as usize;
        corners.permutation[i] = state.corners.permutation[src];
        corners.orientation[i] = (state.corners.orientation[src] + mv.corner_twist[i]) % 3;
    }
    let edges = state.edges.as_ref().map(|e| {
        let mut out = EdgeState::SOLVED;
        for i in 0..EDGES {
            let src = mv.edge_perm[i] as usize;
            out.permutation[i] = e.permutation[src];
            out.orientation[i] = (e.orientation[src] + mv.edge_flip[i]) % 2;
        }
        out
    });
    CubeState {
        size: state.size,
        corners,
        edges,
    }
}

fn is_bijection(perm: &[u8]) -> bool {
    let mut seen = 0u32;
    for &p in perm {
        if p as usize >= perm.len() || seen & (1 << p) != 0 {
            return false;
        }
        seen |= 1 << p;
    }
    true
}

/// Permutation parity: `true` when odd.
pub(crate) fn parity(perm: &[u8]) -> bool {
    let mut odd = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                odd = !odd;
            }
        }
    }
    odd
}

//! Dense mixed-radix indices for cube states.
//!
//! An index is `permutation rank × orientation code`, where the permutation
//! rank is the lexicographic (Lehmer code) rank and the orientation code is
//! a base-3 (corners) or base-2 (edges) number over all cubies but the last,
//! whose orientation is forced by the sum constraint.
//!
//! 2×2×2: the 7 corners other than the anchor, `7! · 3⁶ = 3 674 160` slots.
//! 3×3×3: `8! · 3⁷ · 12! · 2¹¹` slots; only half of them (matching corner
//! and edge parity) are reachable.

use super::moves::Move;
use super::state::{apply_unchecked, solved_state, CornerState, CubeState, EdgeState, ANCHOR_CORNER};
use super::CubeSize;

const FREE_CORNERS: [usize; 7] = [0, 2, 3, 4, 5, 6, 7];

pub const TWO_PERM_COORDS: usize = 5040;
pub const TWO_TWIST_COORDS: usize = 729;

const CORNER_TWIST_COORDS: u128 = 2187;
const CORNER_PERM_COORDS: u128 = 40320;
const EDGE_PERM_COORDS: u128 = 479_001_600;
const EDGE_FLIP_COORDS: u128 = 2048;

/// Number of coordinate slots of the dense index space for `size`.
pub fn coordinate_space(size: CubeSize) -> u128 {
    match size {
        CubeSize::Two => (TWO_PERM_COORDS * TWO_TWIST_COORDS) as u128,
        CubeSize::Three => {
            CORNER_PERM_COORDS * CORNER_TWIST_COORDS * EDGE_PERM_COORDS * EDGE_FLIP_COORDS
        }
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic rank of a permutation of `0..perm.len()`.
pub fn lehmer_rank(perm: &[u8]) -> u64 {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_after = perm[i + 1..].iter().filter(|&&p| p < perm[i]).count() as u64;
        rank += smaller_after * factorial(n - 1 - i);
    }
    rank
}

/// Inverse of [`lehmer_rank`]; writes the permutation into `out`.
pub fn lehmer_unrank(mut rank: u64, out: &mut [u8]) {
    let n = out.len();
    let mut pool: Vec<u8> = (0..n as u8).collect();
    for (i, slot) in out.iter_mut().enumerate() {
        let f = factorial(n - 1 - i);
        let digit = (rank / f) as usize;
        rank %= f;
        *slot = pool.remove(digit);
    }
}

/// Encodes all but the last orientation value in `base`.
fn orientation_code(values: &[u8], base: u64) -> u64 {
    values[..values.len() - 1]
        .iter()
        .fold(0, |acc, &v| acc * base + v as u64)
}

fn decode_orientation(mut code: u64, base: u64, out: &mut [u8]) {
    let n = out.len();
    let mut sum = 0u64;
    for i in (0..n - 1).rev() {
        out[i] = (code % base) as u8;
        sum += code % base;
        code /= base;
    }
    out[n - 1] = ((base - sum % base) % base) as u8;
}

fn compress_corner(c: u8) -> u8 {
    debug_assert_ne!(c as usize, ANCHOR_CORNER);
    if (c as usize) < ANCHOR_CORNER {
        c
    } else {
        c - 1
    }
}

fn expand_corner(c: u8) -> u8 {
    if (c as usize) < ANCHOR_CORNER {
        c
    } else {
        c + 1
    }
}

pub(crate) fn two_perm_coord(corners: &CornerState) -> usize {
    let free: [u8; 7] = std::array::from_fn(|i| compress_corner(corners.permutation[FREE_CORNERS[i]]));
    lehmer_rank(&free) as usize
}

pub(crate) fn two_twist_coord(corners: &CornerState) -> usize {
    let free: [u8; 7] = std::array::from_fn(|i| corners.orientation[FREE_CORNERS[i]]);
    orientation_code(&free, 3) as usize
}

fn two_from_coords(perm: usize, twist: usize) -> CubeState {
    let mut free_perm = [0u8; 7];
    lehmer_unrank(perm as u64, &mut free_perm);
    let mut free_twist = [0u8; 7];
    decode_orientation(twist as u64, 3, &mut free_twist);
    let mut state = solved_state(CubeSize::Two);
    for (i, &slot) in FREE_CORNERS.iter().enumerate() {
        state.corners.permutation[slot] = expand_corner(free_perm[i]);
        state.corners.orientation[slot] = free_twist[i];
    }
    state
}

/// Dense index of `state`. The solved state ranks 0.
pub fn rank(state: &CubeState) -> u128 {
    match &state.edges {
        None => {
            let perm = two_perm_coord(&state.corners) as u128;
            let twist = two_twist_coord(&state.corners) as u128;
            perm * TWO_TWIST_COORDS as u128 + twist
        }
        Some(edges) => {
            let cp = lehmer_rank(&state.corners.permutation) as u128;
            let ct = orientation_code(&state.corners.orientation, 3) as u128;
            let ep = lehmer_rank(&edges.permutation) as u128;
            let ef = orientation_code(&edges.orientation, 2) as u128;
            ((cp * CORNER_TWIST_COORDS + ct) * EDGE_PERM_COORDS + ep) * EDGE_FLIP_COORDS + ef
        }
    }
}

/// Inverse of [`rank`]. `index` must be below [`coordinate_space`]`(size)`.
pub fn unrank(size: CubeSize, index: u128) -> CubeState {
    assert!(index < coordinate_space(size), "index {index} out of range for {size}");
    match size {
        CubeSize::Two => {
            let perm = (index / TWO_TWIST_COORDS as u128) as usize;
            let twist = (index % TWO_TWIST_COORDS as u128) as usize;
            two_from_coords(perm, twist)
        }
        CubeSize::Three => {
            let ef = (index % EDGE_FLIP_COORDS) as u64;
            let rest = index / EDGE_FLIP_COORDS;
            let ep = (rest % EDGE_PERM_COORDS) as u64;
            let rest = rest / EDGE_PERM_COORDS;
            let ct = (rest % CORNER_TWIST_COORDS) as u64;
            let cp = (rest / CORNER_TWIST_COORDS) as u64;

            let mut corners = CornerState::SOLVED;
            lehmer_unrank(cp, &mut corners.permutation);
            decode_orientation(ct, 3, &mut corners.orientation);
            let mut edges = EdgeState::SOLVED;
            lehmer_unrank(ep, &mut edges.permutation);
            decode_orientation(ef, 2, &mut edges.orientation);
            CubeState {
                size,
                corners,
                edges: Some(edges),
            }
        }
    }
}

/// Coordinate-level move tables for the 2×2×2 cube. The corner permutation
/// and the corner twists transform independently, so a neighbor index is
/// two table lookups.
#[derive(Clone, Debug)]
pub struct TwoCubeTables {
    perm: Vec<u16>,
    twist: Vec<u16>,
    moves: usize,
}

impl TwoCubeTables {
    pub fn new(moves: &[Move]) -> Self {
        let k = moves.len();
        let mut perm = vec![0u16; TWO_PERM_COORDS * k];
        let mut twist = vec![0u16; TWO_TWIST_COORDS * k];
        for p in 0..TWO_PERM_COORDS {
            let s = two_from_coords(p, 0);
            for (m, mv) in moves.iter().enumerate() {
                perm[p * k + m] = two_perm_coord(&apply_unchecked(&s, mv).corners) as u16;
            }
        }
        for t in 0..TWO_TWIST_COORDS {
            let s = two_from_coords(0, t);
            for (m, mv) in moves.iter().enumerate() {
                twist[t * k + m] = two_twist_coord(&apply_unchecked(&s, mv).corners) as u16;
            }
        }
        TwoCubeTables { perm, twist, moves: k }
    }

    pub fn slots(&self) -> usize {
        TWO_PERM_COORDS * TWO_TWIST_COORDS
    }

    /// Index reached from `index` by generator number `mv`.
    #[inline]
    pub fn neighbor(&self, index: usize, mv: usize) -> usize {
        let p = index / TWO_TWIST_COORDS;
        let t = index % TWO_TWIST_COORDS;
        self.perm[p * self.moves + mv] as usize * TWO_TWIST_COORDS
            + self.twist[t * self.moves + mv] as usize
    }

    pub fn degree(&self) -> usize {
        self.moves
    }
}

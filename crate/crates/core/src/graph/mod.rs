//! Distance arrays, branching ratios and local parameters of symmetric
//! graphs given either implicitly (a cube metric) or as adjacency lists.

mod bfs;
mod distance;
mod local;

use std::hash::Hash;

use num_bigint::BigUint;

pub use bfs::{bfs_distance_array, counts_from_table, dense_distance_table, DEFAULT_BUDGET};
pub use distance::{
    branching_ratios, verify_identities, BranchingRatios, DistanceArray, EdgePartition,
    IdentityReport,
};
pub use local::{
    ball, count_cycles_through, girth_through, local_params, shell_counts, LocalParams,
    DEFAULT_GIRTH_DEPTH,
};

use crate::cube::{apply_unchecked, rank, CubeState, Metric};
use crate::error::{Error, Result};

/// A graph that can be explored one neighborhood at a time.
pub trait NeighborGraph: Sync {
    type Vertex: Clone + Eq + Hash + Send + Sync;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    /// Stable numeric identifier, used to tag distance arrays.
    fn vertex_id(&self, v: &Self::Vertex) -> u128;
}

/// The Cayley graph of a cube metric, explored from cube states.
#[derive(Clone, Debug)]
pub struct CubeGraph {
    metric: Metric,
}

impl CubeGraph {
    pub fn new(metric: Metric) -> Self {
        CubeGraph { metric }
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn order(&self) -> BigUint {
        self.metric.group_order()
    }

    fn check_size(&self, state: &CubeState) -> Result<()> {
        if state.size != self.metric.cube_size() {
            return Err(Error::CubeSizeMismatch {
                mv: self.metric.to_string(),
                expected: self.metric.cube_size(),
                found: state.size,
            });
        }
        Ok(())
    }

    /// Exact distance array from `origin`.
    ///
    /// Metrics on the 2×2×2 cube fill a flat table over the dense index
    /// space. The 3×3×3 subgroups are sparse in their index space and use a
    /// hash set instead; they are refused up front when the group order
    /// exceeds `budget`.
    pub fn distance_array(&self, origin: &CubeState, budget: u128) -> Result<DistanceArray> {
        self.check_size(origin)?;
        match self.metric.dense_tables() {
            Some(tables) => {
                let table = dense_distance_table(&tables, rank(origin) as usize, budget)?;
                Ok(DistanceArray::new(rank(origin), counts_from_table(&table)))
            }
            None => {
                let order = self.order();
                if order > BigUint::from(budget) {
                    return Err(Error::GraphTooLarge {
                        required: u128::try_from(&order).unwrap_or(u128::MAX),
                        budget,
                    });
                }
                bfs_distance_array(self, origin, budget)
            }
        }
    }

    /// Local parameters from bounded exploration around `origin`, with the
    /// order supplied by the group-order formula.
    pub fn local_params(&self, origin: &CubeState) -> Result<LocalParams> {
        self.check_size(origin)?;
        local_params(self, origin, Some(self.order()), DEFAULT_GIRTH_DEPTH, 0)
    }
}

impl NeighborGraph for CubeGraph {
    type Vertex = CubeState;

    fn neighbors(&self, v: &CubeState) -> Vec<CubeState> {
        self.metric
            .generators()
            .iter()
            .map(|m| apply_unchecked(v, m))
            .collect()
    }

    fn vertex_id(&self, v: &CubeState) -> u128 {
        rank(v)
    }
}

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of vertices at each distance from an origin vertex. The last
/// index is the eccentricity of the origin, which is the diameter for a
/// vertex-transitive graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceArray {
    /// Rank or index of the origin vertex.
    pub origin: u128,
    pub counts: Vec<u64>,
}

impl DistanceArray {
    pub fn new(origin: u128, counts: Vec<u64>) -> Self {
        DistanceArray { origin, counts }
    }

    pub fn diameter(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn order(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Alternating sum of the shell sizes, zero for a bipartite graph.
    pub fn alternating_sum(&self) -> i128 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i128 } else { -(c as i128) })
            .sum()
    }

    /// Distance with the largest shell; the first one on ties.
    pub fn peak_index(&self) -> usize {
        let max = self.counts.iter().copied().max().unwrap_or(0);
        self.counts.iter().position(|&c| c == max).unwrap_or(0)
    }
}

/// Ratios of consecutive shell sizes, `r_i = d_i / d_{i-1}` for `i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingRatios {
    pub ratios: Vec<Ratio<u64>>,
}

impl BranchingRatios {
    pub fn is_nonincreasing(&self) -> bool {
        self.ratios.windows(2).all(|w| w[1] <= w[0])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.ratios
            .iter()
            .map(|r| *r.numer() as f64 / *r.denom() as f64)
            .collect()
    }
}

pub fn branching_ratios(da: &DistanceArray) -> BranchingRatios {
    BranchingRatios {
        ratios: da
            .counts
            .windows(2)
            .map(|w| Ratio::new(w[1], w[0]))
            .collect(),
    }
}

/// Edge counts between consecutive shells, `|EΓ_1| .. |EΓ_d|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub counts: Vec<u64>,
    /// Value the recurrence produces one step past the last shell; zero for
    /// a consistent array.
    pub overflow: i128,
}

impl EdgePartition {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn terminates_at_zero(&self) -> bool {
        self.overflow == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    /// Σ d_i equals the graph order.
    pub vertex_sum: bool,
    /// Σ |EΓ_i| equals n·k/2.
    pub edge_sum: bool,
    /// Σ (−1)^i d_i vanishes.
    pub alternating_sum: bool,
    pub edge_partition: EdgePartition,
    pub alternating_value: i128,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.vertex_sum
            && self.edge_sum
            && self.alternating_sum
            && self.edge_partition.terminates_at_zero()
    }
}

/// Checks the shell-count identities of a symmetric graph of degree `k`
/// using `|EΓ_i| + |EΓ_{i+1}| = k·|VΓ_i|` with `|EΓ_0| = 0`.
///
/// `order` is the independently known graph order; without it the vertex
/// sum is taken as the order and `vertex_sum` holds trivially.
pub fn verify_identities(
    da: &DistanceArray,
    k: u64,
    order: Option<&BigUint>,
) -> Result<IdentityReport> {
    let bad = |msg: String| Err(Error::NotRegularDistanceArray(msg));
    match da.counts.as_slice() {
        [] => return bad("empty distance array".into()),
        [first, ..] if *first != 1 => return bad(format!("d_0 = {first}, expected 1")),
        [_, second, ..] if *second != k => return bad(format!("d_1 = {second}, expected k = {k}")),
        _ => {}
    }
    if let Some(i) = da.counts.iter().position(|&c| c == 0) {
        return bad(format!("empty shell at distance {i}"));
    }

    // E_{i+1} = k·d_i − E_i
    let mut edges = Vec::with_capacity(da.diameter());
    let mut prev: i128 = 0;
    for (i, &d) in da.counts.iter().enumerate() {
        let next = k as i128 * d as i128 - prev;
        if i == da.diameter() {
            prev = next;
            break;
        }
        if next <= 0 {
            return bad(format!("edge count {next} between shells {i} and {}", i + 1));
        }
        edges.push(next as u64);
        prev = next;
    }
    let edge_partition = EdgePartition {
        counts: edges,
        overflow: prev,
    };

    let vertex_total = BigUint::from(da.order());
    let n = order.cloned().unwrap_or_else(|| vertex_total.clone());
    let edge_total = BigUint::from(edge_partition.total()) * 2u32;
    let alternating_value = da.alternating_sum();

    Ok(IdentityReport {
        vertex_sum: vertex_total == n,
        edge_sum: edge_total == n * k,
        alternating_sum: alternating_value == 0,
        edge_partition,
        alternating_value,
    })
}

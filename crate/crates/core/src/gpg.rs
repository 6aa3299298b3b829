//! Explicit graphs: generalized Petersen graphs, an edge-list loader, and
//! a census-style check of the diameter lower bound against exact BFS.

use std::collections::VecDeque;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::d_min;
use crate::error::{Error, Result};
use crate::graph::{local_params, DistanceArray, LocalParams, NeighborGraph, DEFAULT_GIRTH_DEPTH};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    adjacency: Vec<Vec<usize>>,
}

impl AdjacencyGraph {
    /// Builds a graph from undirected edges, rejecting self-loops, repeated
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange(x));
                }
            }
            if u == v {
                return Err(Error::UnsupportedGraph(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::UnsupportedGraph(format!("duplicate edge {u}-{}", w[0])));
            }
        }
        Ok(AdjacencyGraph { adjacency })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn adjacency(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == first).then_some(first)
    }

    /// BFS distances from `origin`; `None` for unreachable vertices.
    pub fn distances_from(&self, origin: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        dist[origin] = Some(0);
        let mut queue = VecDeque::from([origin]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_array(&self, origin: usize) -> Result<DistanceArray> {
        if origin >= self.order() {
            return Err(Error::VertexOutOfRange(origin));
        }
        let mut counts = Vec::new();
        for d in self.distances_from(origin).into_iter().flatten() {
            let d = d as usize;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        Ok(DistanceArray::new(origin as u128, counts))
    }

    /// Largest distance from `origin`, or `None` if some vertex is
    /// unreachable.
    pub fn eccentricity(&self, origin: usize) -> Option<u32> {
        self.distances_from(origin)
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.eccentricity(0).is_some()
    }

    /// Exact diameter from BFS out of every vertex.
    pub fn diameter(&self) -> Option<u32> {
        (0..self.order())
            .into_par_iter()
            .map(|v| self.eccentricity(v))
            .collect::<Option<Vec<_>>>()
            .map(|e| e.into_iter().max().unwrap_or(0))
    }

    /// Edge-list text in the format read by [`load_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.order());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        out
    }
}

impl NeighborGraph for AdjacencyGraph {
    type Vertex = usize;

    fn neighbors(&self, v: &usize) -> Vec<usize> {
        self.adjacency[*v].clone()
    }

    fn vertex_id(&self, v: &usize) -> u128 {
        *v as u128
    }
}

/// Generalized Petersen graph `G(m, t)`: outer cycle `u_i = i`, inner
/// vertices `v_i = m + i`, spokes `u_i v_i` and inner edges `v_i v_{i+t}`.
pub fn generate_gpg(m: usize, t: usize) -> Result<AdjacencyGraph> {
    if m < 3 || t == 0 || 2 * t >= m {
        return Err(Error::InvalidParameters(format!(
            "G({m},{t}) needs m ≥ 3 and 1 ≤ t < m/2"
        )));
    }
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((i, m + i));
        edges.push((m + i, m + (i + t) % m));
    }
    AdjacencyGraph::from_edges(2 * m, &edges)
}

/// Parses an edge list: a header line `n <count>`, then one `<u> <v>` line
/// per undirected edge. `#` starts a comment; blank lines are ignored.
pub fn load_graph(source: &str) -> Result<AdjacencyGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut lines_of_edges = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => match fields.as_slice() {
                ["n", count] => {
                    n = Some(count.parse().map_err(|_| parse_err(format!("bad vertex count {count:?}")))?);
                }
                _ => return Err(parse_err(format!("expected \"n <vertex-count>\", found {line:?}"))),
            },
            Some(count) => {
                let [u, v] = fields.as_slice() else {
                    return Err(parse_err(format!("expected \"<u> <v>\", found {line:?}")));
                };
                let parse_vertex = |s: &str| -> Result<usize> {
                    let x: usize = s.parse().map_err(|_| parse_err(format!("bad vertex {s:?}")))?;
                    if x >= count {
                        return Err(parse_err(format!("vertex {x} out of range 0..{count}")));
                    }
                    Ok(x)
                };
                let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
                if u == v {
                    return Err(parse_err(format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
                lines_of_edges.push(line_no);
            }
        }
    }
    let Some(n) = n else {
        return Err(Error::Parse {
            line: source.lines().count().max(1),
            message: "missing \"n <vertex-count>\" header".into(),
        });
    };

    // Report the line of the second occurrence of a repeated edge.
    let mut seen = std::collections::HashSet::new();
    for (&(u, v), &line) in edges.iter().zip(&lines_of_edges) {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
    }
    AdjacencyGraph::from_edges(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaMode {
    /// η counted at the origin.
    Measured,
    /// η = 1, the most conservative value.
    One,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub k: u32,
    pub g: u32,
    /// η measured at the origin.
    pub eta: u64,
    /// η used in the bound.
    pub eta_used: u64,
    pub eta_mode: EtaMode,
    pub diameter: u32,
    /// Eccentricity of the origin alone.
    pub origin_eccentricity: u32,
    /// `None` when `r_max < 1` and the order exceeds the limit of the
    /// geometric series, i.e. the formula admits no finite diameter.
    pub d_min: Option<i64>,
    pub pass: bool,
}

/// Checks `d_min ≤ diameter` for a connected regular graph of degree ≥ 3
/// and even girth, with local parameters read at `origin`.
pub fn validate_lower_bound(graph: &AdjacencyGraph, origin: usize, eta_mode: EtaMode) -> Result<LowerBoundReport> {
    if origin >= graph.order() {
        return Err(Error::VertexOutOfRange(origin));
    }
    let k = graph
        .regular_degree()
        .ok_or_else(|| Error::UnsupportedGraph("graph is not regular".into()))?;
    if k < 3 {
        return Err(Error::UnsupportedGraph(format!("degree {k} < 3")));
    }
    let diameter = graph
        .diameter()
        .ok_or_else(|| Error::UnsupportedGraph("graph is disconnected".into()))?;
    let LocalParams { k, g, eta, .. } = local_params(
        graph,
        &origin,
        Some(BigUint::from(graph.order())),
        DEFAULT_GIRTH_DEPTH,
        0,
    )
    .map_err(|e| match e {
        Error::OddGirth(g) => Error::UnsupportedGraph(format!("odd girth {g}")),
        other => other,
    })?;
    let eta_used = match eta_mode {
        EtaMode::Measured => eta,
        EtaMode::One => 1,
    };
    let d_min = match d_min(&BigUint::from(graph.order()), k, g, eta_used) {
        Ok(d) => Some(d),
        Err(Error::OrderBeyondGrowthLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(LowerBoundReport {
        n: graph.order(),
        k,
        g,
        eta,
        eta_used,
        eta_mode,
        diameter,
        origin_eccentricity: graph.eccentricity(origin).expect("connected"),
        d_min,
        pass: d_min.is_some_and(|d| d <= diameter as i64),
    })
}

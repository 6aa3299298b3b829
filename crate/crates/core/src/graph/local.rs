//! Local parameters read off a small ball around one vertex: degree,
//! girth and the number of shortest cycles through the vertex.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;

use super::bfs::bfs_distance_array;
use super::NeighborGraph;
use crate::error::{Error, Result};

/// Girth search depth: cycles up to twice this length are found.
pub const DEFAULT_GIRTH_DEPTH: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalParams {
    pub n: BigUint,
    pub k: u32,
    pub g: u32,
    /// Simple g-cycles through the origin.
    pub eta: u64,
}

/// Length of the shortest cycle through `origin`, searching cycles of
/// length at most `2 * max_depth`.
///
/// Every vertex of the BFS tree is labelled with the neighbor of the origin
/// it descends from. A cycle through the origin must cross between two
/// labels along some non-tree edge `(u, w)`, and any such edge closes a
/// cycle through the origin of length at most `d(u) + d(w) + 1`, so the
/// minimum over those edges is exact.
pub fn girth_through<G: NeighborGraph>(graph: &G, origin: &G::Vertex, max_depth: u32) -> Result<u32> {
    // vertex -> (distance, branch); the origin has no branch
    let mut label: HashMap<G::Vertex, (u32, Option<usize>)> = HashMap::new();
    label.insert(origin.clone(), (0, None));
    let mut frontier = vec![origin.clone()];
    let mut best: Option<u32> = None;

    for level in 0..max_depth {
        let mut next = Vec::new();
        for u in &frontier {
            let branch_u = if level == 0 { None } else { label[u].1 };
            for (j, w) in graph.neighbors(u).into_iter().enumerate() {
                if w == *origin {
                    continue;
                }
                match label.get(&w) {
                    None => {
                        let branch = branch_u.or(Some(j));
                        label.insert(w.clone(), (level + 1, branch));
                        next.push(w);
                    }
                    Some(&(dw, branch_w)) => {
                        if level > 0 && branch_w != branch_u {
                            let len = level + dw + 1;
                            best = Some(best.map_or(len, |b| b.min(len)));
                        }
                    }
                }
            }
        }
        if let Some(b) = best {
            if b <= 2 * level + 2 {
                return Ok(b);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    match best {
        Some(b) if b <= 2 * max_depth => Ok(b),
        _ => Err(Error::GirthNotFound(max_depth)),
    }
}

/// Vertices within `radius` of `origin`, with their distances.
pub fn ball<G: NeighborGraph>(graph: &G, origin: &G::Vertex, radius: u32) -> HashMap<G::Vertex, u32> {
    let mut dist = HashMap::new();
    dist.insert(origin.clone(), 0);
    let mut frontier = vec![origin.clone()];
    for level in 0..radius {
        let mut next = Vec::new();
        for u in &frontier {
            for w in graph.neighbors(u) {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), level + 1);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Shell sizes `d_0 ..= d_depth` of the ball of radius `depth`.
pub fn shell_counts<G: NeighborGraph>(graph: &G, origin: &G::Vertex, depth: u32) -> Vec<u64> {
    let mut counts = vec![0u64; depth as usize + 1];
    for d in ball(graph, origin, depth).into_values() {
        counts[d as usize] += 1;
    }
    counts
}

/// Number of distinct simple cycles of length `g` through `origin`.
///
/// Enumerates closed walks of length `g` from the origin that never revisit
/// a vertex, then halves the count since each cycle is walked in both
/// directions. Every vertex of such a cycle lies within `g / 2` of the
/// origin, so only that ball is explored.
pub fn count_cycles_through<G: NeighborGraph>(graph: &G, origin: &G::Vertex, g: u32) -> u64 {
    let ball = ball(graph, origin, g / 2);
    let mut path = vec![origin.clone()];
    let walks = closed_walks(graph, &ball, origin, &mut path, g);
    walks / 2
}

fn closed_walks<G: NeighborGraph>(
    graph: &G,
    ball: &HashMap<G::Vertex, u32>,
    origin: &G::Vertex,
    path: &mut Vec<G::Vertex>,
    g: u32,
) -> u64 {
    let steps = path.len() as u32;
    let current = path.last().expect("path starts at origin").clone();
    let mut total = 0;
    for w in graph.neighbors(&current) {
        if steps == g {
            if w == *origin {
                total += 1;
            }
            continue;
        }
        if contains(path, &w) {
            continue;
        }
        match ball.get(&w) {
            Some(&d) if d <= g - steps => {
                path.push(w);
                total += closed_walks(graph, ball, origin, path, g);
                path.pop();
            }
            _ => {}
        }
    }
    total
}

fn contains<V: Eq + Hash>(path: &[V], v: &V) -> bool {
    path.iter().any(|p| p == v)
}

/// Degree, girth and g-cycle count at `origin`, plus the order: taken from
/// `known_order` when given, otherwise counted by BFS within `budget`.
pub fn local_params<G: NeighborGraph>(
    graph: &G,
    origin: &G::Vertex,
    known_order: Option<BigUint>,
    max_depth: u32,
    budget: u128,
) -> Result<LocalParams> {
    let k = graph.neighbors(origin).len() as u32;
    let g = girth_through(graph, origin, max_depth)?;
    if g % 2 == 1 {
        return Err(Error::OddGirth(g));
    }
    let eta = count_cycles_through(graph, origin, g);
    let n = match known_order {
        Some(n) => n,
        None => BigUint::from(bfs_distance_array(graph, origin, budget)?.order()),
    };
    Ok(LocalParams { n, k, g, eta })
}

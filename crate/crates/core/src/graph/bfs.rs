use std::collections::HashSet;
use std::sync::atomic::{AtomicU8, Ordering};

use rayon::prelude::*;

use super::{DistanceArray, NeighborGraph};
use crate::cube::TwoCubeTables;
use crate::error::{Error, Result};

/// Default enumeration budget, in coordinate slots or visited vertices.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

const UNSEEN: u8 = u8::MAX;

/// Level-by-level frontier BFS keeping every visited vertex in a hash
/// set. Works on any graph; fails once more than `budget` vertices have
/// been discovered.
pub fn bfs_distance_array<G: NeighborGraph>(
    graph: &G,
    origin: &G::Vertex,
    budget: u128,
) -> Result<DistanceArray> {
    let mut seen: HashSet<G::Vertex> = HashSet::new();
    seen.insert(origin.clone());
    let mut frontier = vec![origin.clone()];
    let mut counts = vec![1u64];
    loop {
        let mut next = Vec::new();
        for v in &frontier {
            for w in graph.neighbors(v) {
                if !seen.contains(&w) {
                    seen.insert(w.clone());
                    next.push(w);
                }
            }
        }
        if seen.len() as u128 > budget {
            return Err(Error::GraphTooLarge {
                required: seen.len() as u128,
                budget,
            });
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len() as u64);
        frontier = next;
    }
    Ok(DistanceArray::new(graph.vertex_id(origin), counts))
}

/// Flat one-byte-per-slot distance table over a dense index space,
/// expanded by level-synchronous parallel sweeps.
///
/// Each slot is claimed by exactly one compare-and-swap, so the per-level
/// counts are independent of thread scheduling.
pub fn dense_distance_table(tables: &TwoCubeTables, origin: usize, budget: u128) -> Result<Vec<u8>> {
    let slots = tables.slots();
    if slots as u128 > budget {
        return Err(Error::GraphTooLarge {
            required: slots as u128,
            budget,
        });
    }
    if origin >= slots {
        return Err(Error::VertexOutOfRange(origin));
    }
    let dist: Vec<AtomicU8> = (0..slots).map(|_| AtomicU8::new(UNSEEN)).collect();
    dist[origin].store(0, Ordering::Relaxed);

    let mut level = 0u8;
    loop {
        if level == UNSEEN - 1 {
            return Err(Error::InvalidParameters(
                "distance exceeds the one-byte table range".into(),
            ));
        }
        let found: u64 = dist
            .par_iter()
            .enumerate()
            .with_min_len(4096)
            .filter(|(_, d)| d.load(Ordering::Relaxed) == level)
            .map(|(index, _)| {
                let mut claimed = 0;
                for m in 0..tables.degree() {
                    let nb = tables.neighbor(index, m);
                    if dist[nb]
                        .compare_exchange(UNSEEN, level + 1, Ordering::Relaxed, Ordering::Relaxed)
                        .is_ok()
                    {
                        claimed += 1;
                    }
                }
                claimed
            })
            .sum();
        if found == 0 {
            break;
        }
        level += 1;
    }
    Ok(dist.into_iter().map(AtomicU8::into_inner).collect())
}

/// Collapses a distance table into shell counts. Unreached slots are
/// ignored.
pub fn counts_from_table(table: &[u8]) -> Vec<u64> {
    let mut counts: Vec<u64> = Vec::new();
    for &d in table {
        if d == UNSEEN {
            continue;
        }
        let d = d as usize;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    counts
}

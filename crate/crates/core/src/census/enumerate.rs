//! Orientation streams and brute-force enumeration of small connected graphs.

use itertools::Itertools;

use crate::graph::{EdgeKind, MixedGraph};

use super::CensusError;

/// Largest edge count accepted by [`enumerate_orientations`].
pub const MAX_ORIENTATION_EDGES: usize = 16;
/// Largest vertex count accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_N: usize = 7;

/// All `3^m` orientations of an undirected graph, as a base-3 counter over
/// the edges in `edges()` order (edge 0 is the least significant digit):
/// digit 0 undirected, 1 the arc `u→v` for `u < v`, 2 the arc `v→u`.
#[derive(Clone, Debug)]
pub struct Orientations {
    current: MixedGraph,
    edges: Vec<(usize, usize)>,
    digits: Vec<u8>,
    next: u64,
    end: u64,
}

fn digit_kind(d: u8) -> EdgeKind {
    match d {
        0 => EdgeKind::Undirected,
        1 => EdgeKind::ArcOut,
        _ => EdgeKind::ArcIn,
    }
}

impl Orientations {
    /// The orientations with index in `start..end` (clamped to `3^m`).
    pub fn range(g: &MixedGraph, start: u64, end: u64) -> Result<Self, CensusError> {
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
        if edges.len() > MAX_ORIENTATION_EDGES {
            return Err(CensusError::TooManyEdges {
                edges: edges.len(),
                max: MAX_ORIENTATION_EDGES,
            });
        }
        let total = 3u64.pow(edges.len() as u32);
        let end = end.min(total);
        let start = start.min(end);
        let mut it = Orientations {
            current: g.underlying(),
            digits: vec![0; edges.len()],
            edges,
            next: start,
            end,
        };
        it.seek(start);
        Ok(it)
    }

    pub fn total(&self) -> u64 {
        3u64.pow(self.edges.len() as u32)
    }

    fn seek(&mut self, index: u64) {
        let mut x = index;
        for i in 0..self.edges.len() {
            self.digits[i] = (x % 3) as u8;
            x /= 3;
            let (u, v) = self.edges[i];
            self.current.set_kind(u, v, digit_kind(self.digits[i]));
        }
    }

    fn increment(&mut self) {
        for i in 0..self.edges.len() {
            let (u, v) = self.edges[i];
            self.digits[i] = (self.digits[i] + 1) % 3;
            self.current.set_kind(u, v, digit_kind(self.digits[i]));
            if self.digits[i] != 0 {
                break;
            }
        }
    }
}

impl Iterator for Orientations {
    type Item = MixedGraph;

    fn next(&mut self) -> Option<MixedGraph> {
        if self.next >= self.end {
            return None;
        }
        let out = self.current.clone();
        self.next += 1;
        if self.next < self.end {
            self.increment();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = (self.end - self.next) as usize;
        (k, Some(k))
    }
}

/// The orientation with a given counter index.
pub fn orientation_at(g: &MixedGraph, index: u64) -> Result<MixedGraph, CensusError> {
    let mut it = Orientations::range(g, index, index + 1)?;
    it.next().ok_or(CensusError::IndexOutOfRange(index))
}

pub fn enumerate_orientations(g: &MixedGraph) -> Result<Orientations, CensusError> {
    Orientations::range(g, 0, u64::MAX)
}

/// Upper-triangle adjacency bits in pair order `(0,1), (0,2), …`, first pair
/// most significant.
fn adjacency_key(g: &MixedGraph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut key = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            key = (key << 1) | g.adjacent(perm[a], perm[b]) as u64;
        }
    }
    key
}

/// Lexicographically least adjacency bitstring over all relabellings, and
/// the relabelled graph attaining it.
pub fn canonical_form(g: &MixedGraph) -> (u64, MixedGraph) {
    let n = g.n();
    let best = (0..n)
        .permutations(n)
        .map(|p| (adjacency_key(g, &p), p))
        .min()
        .expect("at least the identity");
    (best.0, g.underlying().induced(&best.1))
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical labelling, sorted by canonical key.
///
/// Every connected graph on `n ≥ 2` vertices has a vertex whose removal
/// leaves it connected, so extending each class on `n-1` vertices by a new
/// vertex with every nonempty neighbourhood reaches all classes.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<MixedGraph>, CensusError> {
    if n > MAX_ENUMERATION_N {
        return Err(CensusError::TooManyVertices { n, max: MAX_ENUMERATION_N });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![(0u64, MixedGraph::empty(1))];
    for k in 2..=n {
        let mut next: Vec<(u64, MixedGraph)> = Vec::new();
        for (_, g) in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let mut h = g.disjoint_union(&MixedGraph::empty(1));
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        h.set_kind(v, k - 1, EdgeKind::Undirected);
                    }
                }
                next.push(canonical_form(&h));
            }
        }
        next.sort_by_key(|(key, _)| *key);
        next.dedup_by_key(|(key, _)| *key);
        level = next;
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_counts() {
        assert_eq!(enumerate_orientations(&MixedGraph::complete(2)).unwrap().count(), 3);
        assert_eq!(enumerate_orientations(&MixedGraph::complete(3)).unwrap().count(), 27);
        assert_eq!(enumerate_orientations(&MixedGraph::cycle(4)).unwrap().count(), 81);
        assert!(matches!(
            enumerate_orientations(&MixedGraph::complete(7)),
            Err(CensusError::TooManyEdges { edges: 21, .. })
        ));
    }

    #[test]
    fn ranges_and_indexing_agree() {
        let g = MixedGraph::cycle(4);
        let all: Vec<MixedGraph> = enumerate_orientations(&g).unwrap().collect();
        let mut distinct = all.clone();
        distinct.sort_by_key(|h| h.encoding());
        distinct.dedup();
        assert_eq!(distinct.len(), 81);
        let mid: Vec<MixedGraph> = Orientations::range(&g, 17, 40).unwrap().collect();
        assert_eq!(mid, all[17..40].to_vec());
        assert_eq!(orientation_at(&g, 80).unwrap(), all[80]);
    }

    /// Brute force: canonical forms of every labelled graph on `n` vertices.
    fn brute_force_connected(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut keys: Vec<u64> = (0u64..1 << pairs.len())
            .filter_map(|mask| {
                let edges: Vec<(usize, usize)> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                let g = MixedGraph::undirected(n, &edges);
                g.is_connected().then(|| canonical_form(&g).0)
            })
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.len()
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        for n in 1..=5 {
            assert_eq!(brute_force_connected(n), counts[n - 1], "n={n}");
        }
        for g in enumerate_connected_graphs(5).unwrap() {
            assert!(g.is_connected() && g.is_undirected());
        }
    }
}

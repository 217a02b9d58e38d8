//! Induced-subgraph search on underlying graphs, and the small undirected
//! patterns that obstruct the golden-ratio bound.

use std::fmt;

use crate::graph::MixedGraph;

/// An embedding `map` of `pattern` into `g` as an induced subgraph
/// (`map[i]` is the image of pattern vertex `i`), comparing adjacency only.
pub fn find_induced(g: &MixedGraph, pattern: &MixedGraph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    // match high-degree pattern vertices first
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(pattern.degree(p)));
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    extend(g, pattern, &order, 0, &mut map, &mut used).then_some(map)
}

fn extend(
    g: &MixedGraph,
    pattern: &MixedGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for v in 0..g.n() {
        if used[v] || g.degree(v) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.adjacent(p, q) == g.adjacent(v, map[q]));
        if !consistent {
            continue;
        }
        map[p] = v;
        used[v] = true;
        if extend(g, pattern, order, depth + 1, map, used) {
            return true;
        }
        used[v] = false;
    }
    map[p] = usize::MAX;
    false
}

/// Connected graphs whose every orientation (subject to the local
/// constraints) has `λ_min ≤ -(1+√5)/2`. A connected graph avoiding all of
/// them as induced subgraphs has one of the admissible underlying shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenPattern {
    P4,
    K13,
    K23,
    /// `K_1∇K_{2,2}`, the wheel on five vertices
    K1JoinK22,
    K2Join3K1,
    K2JoinK2UK1,
    K2JoinK12,
    TwoK1JoinK3,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 8] = [
        ForbiddenPattern::P4,
        ForbiddenPattern::K13,
        ForbiddenPattern::K23,
        ForbiddenPattern::K1JoinK22,
        ForbiddenPattern::K2Join3K1,
        ForbiddenPattern::K2JoinK2UK1,
        ForbiddenPattern::K2JoinK12,
        ForbiddenPattern::TwoK1JoinK3,
    ];

    pub fn graph(self) -> MixedGraph {
        let k1 = MixedGraph::empty(1);
        let k2 = MixedGraph::complete(2);
        let join = |a: &MixedGraph, b: &MixedGraph| a.join(b).expect("undirected");
        match self {
            ForbiddenPattern::P4 => MixedGraph::path(4),
            ForbiddenPattern::K13 => MixedGraph::star(3),
            ForbiddenPattern::K23 => MixedGraph::complete_bipartite(2, 3),
            ForbiddenPattern::K1JoinK22 => join(&k1, &MixedGraph::cycle(4)),
            ForbiddenPattern::K2Join3K1 => join(&k2, &MixedGraph::empty(3)),
            ForbiddenPattern::K2JoinK2UK1 => join(&k2, &k2.disjoint_union(&k1)),
            ForbiddenPattern::K2JoinK12 => join(&k2, &MixedGraph::path(3)),
            ForbiddenPattern::TwoK1JoinK3 => join(&MixedGraph::empty(2), &MixedGraph::complete(3)),
        }
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenPattern::P4 => "P_4",
            ForbiddenPattern::K13 => "K_{1,3}",
            ForbiddenPattern::K23 => "K_{2,3}",
            ForbiddenPattern::K1JoinK22 => "K_1∇K_{2,2}",
            ForbiddenPattern::K2Join3K1 => "K_2∇3K_1",
            ForbiddenPattern::K2JoinK2UK1 => "K_2∇(K_2∪K_1)",
            ForbiddenPattern::K2JoinK12 => "K_2∇K_{1,2}",
            ForbiddenPattern::TwoK1JoinK3 => "2K_1∇K_3",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let m = find_induced(&MixedGraph::cycle(4), &MixedGraph::path(3)).unwrap();
        assert_eq!(m.len(), 3);
        assert!(find_induced(&MixedGraph::complete(4), &MixedGraph::star(3)).is_none());
        let g = MixedGraph::complete(2)
            .disjoint_union(&MixedGraph::empty(1))
            .join(&MixedGraph::empty(2))
            .unwrap();
        assert!(find_induced(&g, &MixedGraph::path(4)).is_none());
        let p5 = MixedGraph::cycle(5);
        let m = find_induced(&p5, &MixedGraph::path(4)).unwrap();
        assert_eq!(p5.induced(&m), MixedGraph::path(4));
    }

    #[test]
    fn pattern_sizes() {
        let sizes: Vec<(usize, usize)> = ForbiddenPattern::ALL
            .iter()
            .map(|p| (p.graph().n(), p.graph().edge_count()))
            .collect();
        assert_eq!(
            sizes,
            vec![(4, 3), (4, 3), (5, 6), (5, 8), (5, 7), (5, 8), (5, 9), (5, 9)]
        );
    }
}

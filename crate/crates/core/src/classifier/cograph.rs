//! Join decomposition through complement components, and recognition of the
//! underlying shapes that can carry a mixed graph above the golden bound.

use std::fmt;

use crate::graph::MixedGraph;

use super::induced::find_induced;

/// Connected components of the complement of the underlying graph.
pub fn complement_components(g: &MixedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let fresh: Vec<usize> = (0..n).filter(|&v| v != u && !seen[v] && !g.adjacent(u, v)).collect();
            for v in fresh {
                seen[v] = true;
                comp.push(v);
                stack.push(v);
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// `G = G[left] ∇ G[right]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinSplit {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Splits a connected graph on at least two vertices as a join. The left
/// side is the largest complement component; ties go to the one holding the
/// smaller vertex. A connected graph whose complement is connected contains
/// an induced `P_4`, which is returned as the witness.
pub fn cograph_join_split(g: &MixedGraph) -> Result<JoinSplit, Vec<usize>> {
    let mut comps = complement_components(g);
    if comps.len() < 2 {
        let p4 = find_induced(g, &MixedGraph::path(4))
            .expect("a connected graph with connected complement contains P_4");
        return Err(p4);
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let left = comps.remove(0);
    let mut right: Vec<usize> = comps.into_iter().flatten().collect();
    right.sort_unstable();
    Ok(JoinSplit { left, right })
}

/// The admissible underlying graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SporadicShape {
    /// `K_{2,2} = C_4`
    K22,
    /// `K_1∇K_{1,2}`, the diamond
    Diamond,
    /// `(K_2∪K_1)∇2K_1`
    K2UK1Join2K1,
    /// `2K_2∇2K_1`
    TwoK2Join2K1,
}

impl SporadicShape {
    pub const ALL: [SporadicShape; 4] = [
        SporadicShape::K22,
        SporadicShape::Diamond,
        SporadicShape::K2UK1Join2K1,
        SporadicShape::TwoK2Join2K1,
    ];

    /// Canonical undirected representative.
    pub fn graph(self) -> MixedGraph {
        let join = |a: MixedGraph, b: MixedGraph| a.join(&b).expect("undirected");
        let k1 = || MixedGraph::empty(1);
        let k2 = || MixedGraph::complete(2);
        match self {
            SporadicShape::K22 => MixedGraph::cycle(4),
            SporadicShape::Diamond => join(k1(), MixedGraph::path(3)),
            SporadicShape::K2UK1Join2K1 => join(k2().disjoint_union(&k1()), MixedGraph::empty(2)),
            SporadicShape::TwoK2Join2K1 => join(k2().disjoint_union(&k2()), MixedGraph::empty(2)),
        }
    }

    /// Token used in the catalog file.
    pub fn token(self) -> &'static str {
        match self {
            SporadicShape::K22 => "K22",
            SporadicShape::Diamond => "K1vK12",
            SporadicShape::K2UK1Join2K1 => "K2uK1v2K1",
            SporadicShape::TwoK2Join2K1 => "2K2v2K1",
        }
    }

    pub fn from_token(s: &str) -> Option<SporadicShape> {
        SporadicShape::ALL.into_iter().find(|x| x.token() == s)
    }
}

impl fmt::Display for SporadicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SporadicShape::K22 => "K_{2,2}",
            SporadicShape::Diamond => "K_1∇K_{1,2}",
            SporadicShape::K2UK1Join2K1 => "(K_2∪K_1)∇2K_1",
            SporadicShape::TwoK2Join2K1 => "2K_2∇2K_1",
        })
    }
}

/// Underlying shape of a connected graph, if admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnderlyingFamily {
    Sporadic(SporadicShape),
    /// `(K_s ∪ K_t)∇K_1` with `s ≥ t ≥ 0`. `t = 0` is the complete graph
    /// `K_{s+1}`; otherwise `apex` is the cut vertex and `big`, `small` are
    /// the clique sides of sizes `s` and `t`.
    CliquesAtVertex {
        s: usize,
        t: usize,
        apex: usize,
        big: Vec<usize>,
        small: Vec<usize>,
    },
}

impl fmt::Display for UnderlyingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnderlyingFamily::Sporadic(s) => write!(f, "{s}"),
            UnderlyingFamily::CliquesAtVertex { s, t: 0, .. } => write!(f, "K_{}", s + 1),
            UnderlyingFamily::CliquesAtVertex { s, t, .. } => write!(f, "(K_{s}∪K_{t})∇K_1"),
        }
    }
}

/// Coarse shape of a complement component's induced graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    K1,
    TwoK1,
    K2UK1,
    TwoK2,
    /// disjoint union of exactly two cliques, any sizes
    TwoCliques,
    Other,
}

fn is_clique(g: &MixedGraph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
}

fn part_shape(g: &MixedGraph, vs: &[usize]) -> Part {
    if vs.len() == 1 {
        return Part::K1;
    }
    let sub = g.induced(vs);
    let comps = sub.components();
    if comps.len() != 2 || !comps.iter().all(|c| is_clique(&sub, c)) {
        return Part::Other;
    }
    let mut sizes = [comps[0].len(), comps[1].len()];
    sizes.sort_unstable();
    match sizes {
        [1, 1] => Part::TwoK1,
        [1, 2] => Part::K2UK1,
        [2, 2] => Part::TwoK2,
        _ => Part::TwoCliques,
    }
}

/// Matches a connected graph against the admissible underlying shapes.
pub fn underlying_family(g: &MixedGraph) -> Option<UnderlyingFamily> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let comps = complement_components(g);
    if comps.iter().all(|c| c.len() == 1) {
        return Some(UnderlyingFamily::CliquesAtVertex {
            s: n - 1,
            t: 0,
            apex: 0,
            big: (1..n).collect(),
            small: Vec::new(),
        });
    }
    if comps.len() < 2 {
        return None;
    }
    let mut parts: Vec<(Part, &Vec<usize>)> = comps.iter().map(|c| (part_shape(g, c), c)).collect();
    parts.sort_by_key(|(p, c)| (*p as u8, c.len()));
    let shapes: Vec<Part> = parts.iter().map(|(p, _)| *p).collect();
    use Part::*;
    let sporadic = match shapes.as_slice() {
        [TwoK1, TwoK1] => Some(SporadicShape::K22),
        [K1, K1, TwoK1] => Some(SporadicShape::Diamond),
        [TwoK1, K2UK1] => Some(SporadicShape::K2UK1Join2K1),
        [TwoK1, TwoK2] => Some(SporadicShape::TwoK2Join2K1),
        _ => None,
    };
    if let Some(s) = sporadic {
        return Some(UnderlyingFamily::Sporadic(s));
    }
    match shapes.as_slice() {
        // P_3 = (K_1 ∪ K_1)∇K_1 shows up with its leaves as a 2K_1 part;
        // the other unions of two cliques likewise
        [K1, TwoK1 | K2UK1 | TwoK2 | TwoCliques] => {
            let apex = parts[0].1[0];
            let rest = parts[1].1;
            let sub = g.induced(rest);
            let mut cl: Vec<Vec<usize>> = sub
                .components()
                .into_iter()
                .map(|c| c.into_iter().map(|i| rest[i]).collect())
                .collect();
            cl.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
            let small = cl.pop().expect("two cliques");
            let big = cl.pop().expect("two cliques");
            Some(UnderlyingFamily::CliquesAtVertex {
                s: big.len(),
                t: small.len(),
                apex,
                big,
                small,
            })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> MixedGraph {
        MixedGraph::complete(3).coalescence(0, &MixedGraph::complete(3), 0)
    }

    #[test]
    fn splits() {
        let s = cograph_join_split(&MixedGraph::cycle(4)).unwrap();
        assert_eq!((s.left.len(), s.right.len()), (2, 2));
        assert_eq!(cograph_join_split(&MixedGraph::path(4)).unwrap_err().len(), 4);
        // hand computation: the centre is isolated in the complement and the
        // four outer vertices induce the complement of 2K_2, which is C_4
        let s = cograph_join_split(&bowtie()).unwrap();
        assert_eq!(s.left, vec![1, 2, 3, 4]);
        assert_eq!(s.right, vec![0]);
    }

    #[test]
    fn families() {
        for shape in SporadicShape::ALL {
            assert_eq!(
                underlying_family(&shape.graph()),
                Some(UnderlyingFamily::Sporadic(shape)),
                "{shape}"
            );
        }
        match underlying_family(&bowtie()).unwrap() {
            UnderlyingFamily::CliquesAtVertex { s, t, apex, .. } => {
                assert_eq!((s, t, apex), (2, 2, 0));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            underlying_family(&MixedGraph::complete(5)),
            Some(UnderlyingFamily::CliquesAtVertex { s: 4, t: 0, .. })
        ));
        assert!(matches!(
            underlying_family(&MixedGraph::path(3)),
            Some(UnderlyingFamily::CliquesAtVertex { s: 1, t: 1, apex: 1, .. })
        ));
        assert_eq!(underlying_family(&MixedGraph::cycle(5)), None);
        assert_eq!(underlying_family(&MixedGraph::star(3)), None);
        let pendant = MixedGraph::complete(4).coalescence(0, &MixedGraph::complete(2), 0);
        assert!(matches!(
            underlying_family(&pendant),
            Some(UnderlyingFamily::CliquesAtVertex { s: 3, t: 1, apex: 0, .. })
        ));
    }
}

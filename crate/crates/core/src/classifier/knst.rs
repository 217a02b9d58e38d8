//! Recognition of `K_n[s,t]` inside complete mixed graphs.

use thiserror::Error;

use crate::graph::{EdgeKind, MixedGraph};

use super::local::{all_triangles_in_c3, triangles, TriangleType};

/// `g.induced(source ++ sink) == K_n[s,t]` with `s = |source|`,
/// `t = |sink|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnstMembership {
    pub s: usize,
    pub t: usize,
    pub source: Vec<usize>,
    pub sink: Vec<usize>,
}

impl KnstMembership {
    /// Vertices in `K_n[s,t]` order.
    pub fn order(&self) -> Vec<usize> {
        self.source.iter().chain(&self.sink).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KnstError {
    #[error("underlying graph is not complete: {0} and {1} are not adjacent")]
    NotComplete(usize, usize),
    #[error("triangle {0:?} is {1}, which is not switching equivalent to K_3")]
    BadTriangle([usize; 3], TriangleType),
    #[error("pair ({0}, {1}) breaks the K_n[s,t] arc pattern")]
    Pattern(usize, usize),
}

/// Decides whether a mixed complete graph is some `K_n[s,t]`.
///
/// A `K_3^{2,2}` or `K_3^{2,3}` triangle pins down one vertex's side; the
/// remaining vertices are placed by their edge to it and the whole pattern
/// is then checked.
pub fn recognize_knst(g: &MixedGraph) -> Result<KnstMembership, KnstError> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                return Err(KnstError::NotComplete(u, v));
            }
        }
    }
    all_triangles_in_c3(g).map_err(|(t, ty)| KnstError::BadTriangle(t, ty))?;

    let (source, sink) = if n == 2 && g.kind(0, 1).is_arc() {
        if g.kind(0, 1) == EdgeKind::ArcOut {
            (vec![0], vec![1])
        } else {
            (vec![1], vec![0])
        }
    } else {
        match triangles(g).into_iter().find(|(_, ty)| *ty != TriangleType::K3) {
            None => ((0..n).collect(), Vec::new()),
            Some((tri, ty)) => split_from(g, tri, ty),
        }
    };
    check_pattern(g, &source, &sink)?;
    Ok(KnstMembership {
        s: source.len(),
        t: sink.len(),
        source,
        sink,
    })
}

/// Sides determined by a `K_3^{2,2}` (common head) or `K_3^{2,3}` (common
/// tail) triangle.
fn split_from(g: &MixedGraph, tri: [usize; 3], ty: TriangleType) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let count = |v: usize, k: EdgeKind| tri.iter().filter(|&&w| w != v && g.kind(v, w) == k).count();
    let mut source = Vec::new();
    let mut sink = Vec::new();
    if ty == TriangleType::K3_22 {
        let w = *tri.iter().find(|&&v| count(v, EdgeKind::ArcIn) == 2).expect("common head");
        for x in 0..n {
            if x == w || g.kind(x, w) == EdgeKind::Undirected {
                sink.push(x);
            } else if g.kind(x, w) == EdgeKind::ArcOut {
                source.push(x);
            }
        }
    } else {
        let o = *tri.iter().find(|&&v| count(v, EdgeKind::ArcOut) == 2).expect("common tail");
        for x in 0..n {
            if x == o || g.kind(o, x) == EdgeKind::Undirected {
                source.push(x);
            } else if g.kind(o, x) == EdgeKind::ArcOut {
                sink.push(x);
            }
        }
    }
    (source, sink)
}

fn check_pattern(g: &MixedGraph, source: &[usize], sink: &[usize]) -> Result<(), KnstError> {
    let n = g.n();
    let mut side = vec![None; n];
    for &x in source {
        side[x] = Some(0u8);
    }
    for &y in sink {
        side[y] = Some(1u8);
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        let anchor = source.first().or(sink.first()).copied().unwrap_or(v);
        return Err(KnstError::Pattern(anchor, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            let want = match (side[u], side[v]) {
                (Some(0), Some(1)) => EdgeKind::ArcOut,
                (Some(1), Some(0)) => EdgeKind::ArcIn,
                _ => EdgeKind::Undirected,
            };
            if g.kind(u, v) != want {
                return Err(KnstError::Pattern(u, v));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSpec;

    #[test]
    fn recovers_parameters() {
        for n in 1..=7 {
            for s in 0..=n {
                let m = recognize_knst(&MixedGraph::knst(s, n - s)).unwrap();
                // K_n[0,n] and K_n[n,0] are both the undirected K_n
                let expect = if s == 0 || s == n { (n, 0) } else { (s, n - s) };
                assert_eq!((m.s, m.t), expect, "n={n} s={s}");
                assert_eq!(
                    MixedGraph::knst(m.s, m.t),
                    MixedGraph::knst(s, n - s).induced(&m.order())
                );
            }
        }
    }

    #[test]
    fn relabelled_member() {
        // K_4[2,2] with sides {1,3} -> {0,2}
        let g = MixedGraph::build(
            4,
            &[
                (1, 3, EdgeSpec::Undirected),
                (0, 2, EdgeSpec::Undirected),
                (1, 0, EdgeSpec::Arc),
                (1, 2, EdgeSpec::Arc),
                (3, 0, EdgeSpec::Arc),
                (3, 2, EdgeSpec::Arc),
            ],
        )
        .unwrap();
        let m = recognize_knst(&g).unwrap();
        assert_eq!((m.source.clone(), m.sink.clone()), (vec![1, 3], vec![0, 2]));
    }

    #[test]
    fn rejections() {
        let cyclic = TriangleType::K3_31.representative();
        assert!(matches!(recognize_knst(&cyclic), Err(KnstError::BadTriangle(..))));
        assert!(matches!(
            recognize_knst(&MixedGraph::path(3)),
            Err(KnstError::NotComplete(0, 2))
        ));
        // triangle {0, 1, 3} carries a single arc
        let g = MixedGraph::build(
            4,
            &[
                (0, 1, EdgeSpec::Arc),
                (0, 2, EdgeSpec::Arc),
                (1, 2, EdgeSpec::Undirected),
                (0, 3, EdgeSpec::Undirected),
                (3, 1, EdgeSpec::Undirected),
                (3, 2, EdgeSpec::Arc),
            ],
        )
        .unwrap();
        assert!(recognize_knst(&g).is_err());
    }
}

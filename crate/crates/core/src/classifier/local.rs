//! Triangles and induced quadrangles: shape tags, holonomy, and the scans
//! that look for ones outside the admissible sets.

use std::fmt;

use thiserror::Error;

use crate::gaussian::Unit;
use crate::graph::{EdgeKind, EdgeSpec, MixedGraph};
use crate::switching::holonomy;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalShapeError {
    #[error("expected a 3-vertex graph with underlying K_3")]
    NotTriangle,
    #[error("expected a 4-vertex graph with underlying C_4")]
    NotQuadrangle,
}

/// The seven mixed triangles up to isomorphism.
///
/// Naming: the first superscript digit is the number of arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleType {
    /// three undirected edges
    K3,
    /// one arc, two undirected edges
    K3_1,
    /// two arcs forming a directed path, one undirected edge
    K3_21,
    /// two arcs into the same vertex, one undirected edge
    K3_22,
    /// two arcs out of the same vertex, one undirected edge
    K3_23,
    /// directed 3-cycle
    K3_31,
    /// transitive tournament
    K3_32,
}

impl TriangleType {
    pub const ALL: [TriangleType; 7] = [
        TriangleType::K3,
        TriangleType::K3_1,
        TriangleType::K3_21,
        TriangleType::K3_22,
        TriangleType::K3_23,
        TriangleType::K3_31,
        TriangleType::K3_32,
    ];

    /// Admissible above `-√3`: the triangles with holonomy 1.
    pub fn in_c3(self) -> bool {
        matches!(self, TriangleType::K3 | TriangleType::K3_22 | TriangleType::K3_23)
    }

    /// `λ_min` as a symbol: `-1`, `-2` or `-√3`.
    pub fn lambda_min_symbol(self) -> &'static str {
        match self {
            TriangleType::K3 | TriangleType::K3_22 | TriangleType::K3_23 => "−1",
            TriangleType::K3_21 => "−2",
            TriangleType::K3_1 | TriangleType::K3_31 | TriangleType::K3_32 => "−√3",
        }
    }

    pub fn lambda_min(self) -> f64 {
        match self {
            TriangleType::K3 | TriangleType::K3_22 | TriangleType::K3_23 => -1.0,
            TriangleType::K3_21 => -2.0,
            _ => -(3f64.sqrt()),
        }
    }

    /// A representative on vertices `0, 1, 2`.
    pub fn representative(self) -> MixedGraph {
        use EdgeSpec::{Arc, Undirected as U};
        let edges: [(usize, usize, EdgeSpec); 3] = match self {
            TriangleType::K3 => [(0, 1, U), (1, 2, U), (0, 2, U)],
            TriangleType::K3_1 => [(0, 1, Arc), (1, 2, U), (0, 2, U)],
            TriangleType::K3_21 => [(0, 1, Arc), (1, 2, Arc), (0, 2, U)],
            TriangleType::K3_22 => [(0, 2, Arc), (1, 2, Arc), (0, 1, U)],
            TriangleType::K3_23 => [(0, 1, Arc), (0, 2, Arc), (1, 2, U)],
            TriangleType::K3_31 => [(0, 1, Arc), (1, 2, Arc), (2, 0, Arc)],
            TriangleType::K3_32 => [(0, 1, Arc), (1, 2, Arc), (0, 2, Arc)],
        };
        MixedGraph::build(3, &edges).expect("fixed triangle")
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleType::K3 => "K_3",
            TriangleType::K3_1 => "K_3^1",
            TriangleType::K3_21 => "K_3^{2,1}",
            TriangleType::K3_22 => "K_3^{2,2}",
            TriangleType::K3_23 => "K_3^{2,3}",
            TriangleType::K3_31 => "K_3^{3,1}",
            TriangleType::K3_32 => "K_3^{3,2}",
        })
    }
}

/// Type of the triangle on `[a, b, c]` of `g`, which must be pairwise
/// adjacent.
pub fn triangle_type_at(g: &MixedGraph, t: [usize; 3]) -> Result<TriangleType, LocalShapeError> {
    let pairs = [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])];
    if pairs.iter().any(|&(u, v)| !g.adjacent(u, v)) {
        return Err(LocalShapeError::NotTriangle);
    }
    let arcs: Vec<(usize, usize)> = pairs
        .iter()
        .filter_map(|&(u, v)| match g.kind(u, v) {
            EdgeKind::ArcOut => Some((u, v)),
            EdgeKind::ArcIn => Some((v, u)),
            _ => None,
        })
        .collect();
    Ok(match arcs.as_slice() {
        [] => TriangleType::K3,
        [_] => TriangleType::K3_1,
        [(a, b), (c, d)] => {
            if b == d {
                TriangleType::K3_22
            } else if a == c {
                TriangleType::K3_23
            } else {
                TriangleType::K3_21
            }
        }
        _ => {
            // every vertex has out-degree 1 exactly on the directed cycle
            let out_degrees: Vec<usize> = t
                .iter()
                .map(|&x| arcs.iter().filter(|&&(s, _)| s == x).count())
                .collect();
            if out_degrees.iter().all(|&d| d == 1) {
                TriangleType::K3_31
            } else {
                TriangleType::K3_32
            }
        }
    })
}

/// Type of a 3-vertex mixed graph with underlying `K_3`.
pub fn triangle_type(g: &MixedGraph) -> Result<TriangleType, LocalShapeError> {
    if g.n() != 3 {
        return Err(LocalShapeError::NotTriangle);
    }
    triangle_type_at(g, [0, 1, 2])
}

/// Orientation classes of a mixed 4-cycle. The first three are the
/// holonomy `-1` shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadClass {
    /// two consecutive arcs pointing the same way round, two undirected edges
    C4_1,
    /// two opposite arcs pointing the same way round, two undirected edges
    C4_2,
    /// four arcs, three one way round and one the other
    C4_3,
    HolonomyPlusOne,
    HolonomyImaginary,
}

impl QuadClass {
    pub fn in_c4(self) -> bool {
        matches!(self, QuadClass::C4_1 | QuadClass::C4_2 | QuadClass::C4_3)
    }

    pub fn lambda_min_symbol(self) -> &'static str {
        match self {
            QuadClass::C4_1 | QuadClass::C4_2 | QuadClass::C4_3 => "−√2",
            QuadClass::HolonomyPlusOne => "−2",
            QuadClass::HolonomyImaginary => "−√(2+√2)",
        }
    }

    pub fn lambda_min(self) -> f64 {
        match self {
            QuadClass::C4_1 | QuadClass::C4_2 | QuadClass::C4_3 => -(2f64.sqrt()),
            QuadClass::HolonomyPlusOne => -2.0,
            QuadClass::HolonomyImaginary => -(2.0 + 2f64.sqrt()).sqrt(),
        }
    }
}

impl fmt::Display for QuadClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadClass::C4_1 => "C_4^1",
            QuadClass::C4_2 => "C_4^2",
            QuadClass::C4_3 => "C_4^3",
            QuadClass::HolonomyPlusOne => "quadrangle with holonomy 1",
            QuadClass::HolonomyImaginary => "quadrangle with holonomy ±i",
        })
    }
}

/// A classified induced quadrangle: its class, the cyclic vertex order used,
/// and the holonomy along that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadType {
    pub class: QuadClass,
    pub cycle: [usize; 4],
    pub holonomy: Unit,
}

/// Cyclic order of four vertices inducing a 4-cycle, starting at the
/// smallest and continuing to its smaller neighbour.
pub fn induced_cycle_order(g: &MixedGraph, q: [usize; 4]) -> Option<[usize; 4]> {
    let mut q = q;
    q.sort_unstable();
    let adj = |a: usize, b: usize| g.adjacent(a, b);
    let a = q[0];
    let nb: Vec<usize> = q[1..].iter().copied().filter(|&x| adj(a, x)).collect();
    let far: Vec<usize> = q[1..].iter().copied().filter(|&x| !adj(a, x)).collect();
    if nb.len() != 2 || far.len() != 1 {
        return None;
    }
    let (b, d, c) = (nb[0], nb[1], far[0]);
    (adj(b, c) && adj(c, d) && !adj(b, d)).then_some([a, b, c, d])
}

pub fn quad_type_at(g: &MixedGraph, q: [usize; 4]) -> Result<QuadType, LocalShapeError> {
    let cycle = induced_cycle_order(g, q).ok_or(LocalShapeError::NotQuadrangle)?;
    let h = holonomy(g, &cycle).expect("cycle edges exist");
    let class = match h {
        Unit::One => QuadClass::HolonomyPlusOne,
        Unit::I | Unit::MinusI => QuadClass::HolonomyImaginary,
        Unit::MinusOne => {
            let arcs: Vec<usize> = (0..4)
                .filter(|&i| g.kind(cycle[i], cycle[(i + 1) % 4]).is_arc())
                .collect();
            match arcs.as_slice() {
                [i, j] if (j - i) % 2 == 1 => QuadClass::C4_1,
                [_, _] => QuadClass::C4_2,
                _ => QuadClass::C4_3,
            }
        }
    };
    Ok(QuadType {
        class,
        cycle,
        holonomy: h,
    })
}

/// Class of a 4-vertex mixed graph with underlying `C_4`.
pub fn quad_class(g: &MixedGraph) -> Result<QuadType, LocalShapeError> {
    if g.n() != 4 {
        return Err(LocalShapeError::NotQuadrangle);
    }
    quad_type_at(g, [0, 1, 2, 3])
}

/// All triangles with their types, in lexicographic vertex order.
pub fn triangles(g: &MixedGraph) -> Vec<([usize; 3], TriangleType)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.adjacent(a, c) && g.adjacent(b, c) {
                    let t = [a, b, c];
                    out.push((t, triangle_type_at(g, t).expect("pairwise adjacent")));
                }
            }
        }
    }
    out
}

/// `Ok` if every triangle has holonomy 1; otherwise the first offender.
pub fn all_triangles_in_c3(g: &MixedGraph) -> Result<(), ([usize; 3], TriangleType)> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if !g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.adjacent(a, c) && g.adjacent(b, c) {
                    // fast path on holonomy; type only for the witness
                    if holonomy(g, &[a, b, c]) != Some(Unit::One) {
                        let t = [a, b, c];
                        return Err((t, triangle_type_at(g, t).expect("triangle")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// All induced 4-cycles with their classes.
pub fn induced_quadrangles(g: &MixedGraph) -> Vec<QuadType> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Ok(q) = quad_type_at(g, [a, b, c, d]) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// `Ok` if every induced quadrangle has holonomy `-1`; otherwise the first
/// offender.
pub fn all_quads_in_c4(g: &MixedGraph) -> Result<(), QuadType> {
    match induced_quadrangles(g).into_iter().find(|q| !q.class.in_c4()) {
        Some(q) => Err(q),
        None => Ok(()),
    }
}

//! Four-way switching: diagonal unit matrices `D` acting by `H ↦ D H D*`.
//!
//! Also hosts the pieces of chordal-graph machinery that the normalization
//! needs (maximum cardinality search, chordless cycle witnesses) and
//! coincident cuts with their X-switching.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::gaussian::{Gaussian, GaussianMatrix, Unit};
use crate::graph::{EdgeKind, HermitianEntry, MixedGraph};

/// Per-vertex units `d_0, …, d_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwitchDiagonal {
    units: Vec<Unit>,
}

impl SwitchDiagonal {
    pub fn identity(n: usize) -> Self {
        SwitchDiagonal {
            units: vec![Unit::One; n],
        }
    }

    pub fn new(units: Vec<Unit>) -> Self {
        SwitchDiagonal { units }
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn get(&self, v: usize) -> Unit {
        self.units[v]
    }

    /// `D*`, which undoes `D`.
    pub fn conj(&self) -> Self {
        SwitchDiagonal::new(self.units.iter().map(|u| u.conj()).collect())
    }

    /// Entrywise product, i.e. the diagonal of `self · other`.
    pub fn compose(&self, other: &SwitchDiagonal) -> Self {
        assert_eq!(self.len(), other.len());
        SwitchDiagonal::new(
            self.units
                .iter()
                .zip(&other.units)
                .map(|(&a, &b)| a * b)
                .collect(),
        )
    }

    /// Moves the diagonal along a relabelling: vertex `i` of the relabelled
    /// graph is vertex `perm[i]` here.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        SwitchDiagonal::new(perm.iter().map(|&p| self.units[p]).collect())
    }

    pub fn to_matrix(&self) -> GaussianMatrix {
        let n = self.len();
        let mut m = GaussianMatrix::zeros(n);
        for (i, u) in self.units.iter().enumerate() {
            m.set(i, i, u.to_gaussian());
        }
        m
    }
}

impl fmt::Display for SwitchDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("diag(")?;
        for (i, u) in self.units.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error("diagonal has {got} entries, graph has {n} vertices")]
    Length { got: usize, n: usize },
    #[error("switched entry at ({u}, {v}) is {value}, which is not a mixed-graph entry")]
    NotClosed { u: usize, v: usize, value: Gaussian },
    #[error("cut is not coincident")]
    NotCoincident,
    #[error("cut sides must be nonempty, disjoint and cover the vertex set")]
    BadCut,
}

/// `D H D*` on a plain Gaussian matrix; entry `(u, v)` is `d_u h_uv conj(d_v)`.
pub fn switch_matrix(h: &GaussianMatrix, d: &SwitchDiagonal) -> GaussianMatrix {
    let n = h.dim();
    assert_eq!(d.len(), n);
    let mut out = GaussianMatrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            let e = h.get(u, v);
            if !e.is_zero() {
                out.set(u, v, d.get(u).to_gaussian() * e * d.get(v).conj().to_gaussian());
            }
        }
    }
    out
}

/// Switches a mixed graph by `D`.
///
/// The result is a mixed graph only when every switched entry lands back in
/// `{0, 1, i, -i}`. Edges whose endpoints get phases differing by `-1`
/// (or `±i` on an arc in the wrong sense) yield `-1`, which no mixed graph
/// realizes; those are reported as [`SwitchError::NotClosed`].
pub fn apply_switch(g: &MixedGraph, d: &SwitchDiagonal) -> Result<MixedGraph, SwitchError> {
    let n = g.n();
    if d.len() != n {
        return Err(SwitchError::Length { got: d.len(), n });
    }
    let mut out = MixedGraph::empty(n);
    for (u, v, _) in g.edges() {
        let value = d.get(u).to_gaussian() * g.entry(u, v) * d.get(v).conj().to_gaussian();
        let entry = HermitianEntry::from_gaussian(value)
            .filter(|e| *e != HermitianEntry::Zero)
            .ok_or(SwitchError::NotClosed { u, v, value })?;
        out.set_kind(u, v, entry.kind());
    }
    Ok(out)
}

/// Product of Hermitian entries around the closed walk `cycle[0], cycle[1],
/// …, cycle[0]`. Switching-invariant. `None` if some consecutive pair is
/// not adjacent.
pub fn holonomy(g: &MixedGraph, cycle: &[usize]) -> Option<Unit> {
    let k = cycle.len();
    let mut acc = Unit::One;
    for i in 0..k {
        let e = g.entry(cycle[i], cycle[(i + 1) % k]);
        acc = acc * Unit::from_gaussian(e)?;
    }
    Some(acc)
}

/// A diagonal `D` with `apply_switch(a, D) = b`, if one exists.
///
/// Phases are forced along a BFS spanning forest from the smallest vertex of
/// each component (pinned to 1); then every edge is checked once.
pub fn switching_equivalent(a: &MixedGraph, b: &MixedGraph) -> Option<SwitchDiagonal> {
    let n = a.n();
    if b.n() != n {
        return None;
    }
    if (0..n).any(|u| (u + 1..n).any(|v| a.adjacent(u, v) != b.adjacent(u, v))) {
        return None;
    }
    let mut d: Vec<Option<Unit>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Unit::One);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = d[u].expect("queued vertices have a phase");
            for v in a.neighbors(u) {
                if d[v].is_none() {
                    // b_uv = d_u a_uv conj(d_v)  ⇒  d_v = d_u a_uv conj(b_uv)
                    let auv = Unit::from_gaussian(a.entry(u, v))?;
                    let buv = Unit::from_gaussian(b.entry(u, v))?;
                    d[v] = Some(du * auv * buv.conj());
                    queue.push_back(v);
                }
            }
        }
    }
    let diag = SwitchDiagonal::new(d.into_iter().map(|x| x.expect("all vertices reached")).collect());
    let ok = a.edges().all(|(u, v, _)| {
        diag.get(u).to_gaussian() * a.entry(u, v) * diag.get(v).conj().to_gaussian() == b.entry(u, v)
    });
    ok.then_some(diag)
}

/// Which way the crossing edges of a cut point, seen from side `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutOrientation {
    Undirected,
    /// every crossing edge is an arc `U -> W`
    Forward,
    /// every crossing edge is an arc `W -> U`
    Backward,
    Mixed,
}

/// A vertex bipartition with its crossing edges, each recorded as
/// `(u ∈ U, w ∈ W, kind(u, w))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub side_u: Vec<usize>,
    pub side_w: Vec<usize>,
    pub crossing: Vec<(usize, usize, EdgeKind)>,
}

impl Cut {
    pub fn new(g: &MixedGraph, side_u: Vec<usize>) -> Result<Cut, SwitchError> {
        let n = g.n();
        let mut in_u = vec![false; n];
        for &u in &side_u {
            if u >= n || in_u[u] {
                return Err(SwitchError::BadCut);
            }
            in_u[u] = true;
        }
        let side_w: Vec<usize> = (0..n).filter(|&v| !in_u[v]).collect();
        if side_u.is_empty() || side_w.is_empty() {
            return Err(SwitchError::BadCut);
        }
        let mut side_u = side_u;
        side_u.sort_unstable();
        let crossing = side_u
            .iter()
            .flat_map(|&u| side_w.iter().map(move |&w| (u, w)))
            .filter_map(|(u, w)| {
                let k = g.kind(u, w);
                k.is_edge().then_some((u, w, k))
            })
            .collect();
        Ok(Cut {
            side_u,
            side_w,
            crossing,
        })
    }

    pub fn orientation(&self) -> CutOrientation {
        let mut kinds = self.crossing.iter().map(|&(_, _, k)| k);
        let Some(first) = kinds.next() else {
            return CutOrientation::Undirected;
        };
        if !kinds.all(|k| k == first) {
            return CutOrientation::Mixed;
        }
        match first {
            EdgeKind::Undirected => CutOrientation::Undirected,
            EdgeKind::ArcOut => CutOrientation::Forward,
            EdgeKind::ArcIn => CutOrientation::Backward,
            EdgeKind::None => unreachable!("crossing list holds edges only"),
        }
    }

    pub fn is_coincident(&self) -> bool {
        self.orientation() != CutOrientation::Mixed
    }
}

/// Largest vertex count for which [`coincident_cuts`] enumerates all
/// `2^(n-1)` bipartitions.
pub const MAX_CUT_ENUMERATION: usize = 12;

/// All coincident edge cuts with at least one crossing edge. Vertex 0 is
/// always on side `U`, so each bipartition appears once.
pub fn coincident_cuts(g: &MixedGraph) -> Vec<Cut> {
    let n = g.n();
    assert!(
        n <= MAX_CUT_ENUMERATION,
        "cut enumeration is limited to {MAX_CUT_ENUMERATION} vertices"
    );
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        // bit k of mask puts vertex k+1 on side U
        let side_u: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&v| mask >> (v - 1) & 1 == 1))
            .collect();
        if side_u.len() == n {
            continue;
        }
        let cut = Cut::new(g, side_u).expect("bipartition is valid");
        if !cut.crossing.is_empty() && cut.is_coincident() {
            out.push(cut);
        }
    }
    out
}

/// Diagonal realizing the X-switching of a coincident cut: phase 1 on `U`
/// and the crossing entry on `W`.
pub fn x_switch_diagonal(g: &MixedGraph, cut: &Cut) -> Result<SwitchDiagonal, SwitchError> {
    let phase = match cut.orientation() {
        CutOrientation::Undirected => Unit::One,
        CutOrientation::Forward => Unit::I,
        CutOrientation::Backward => Unit::MinusI,
        CutOrientation::Mixed => return Err(SwitchError::NotCoincident),
    };
    let mut d = vec![Unit::One; g.n()];
    for &w in &cut.side_w {
        d[w] = phase;
    }
    Ok(SwitchDiagonal::new(d))
}

/// Replaces every crossing arc of a coincident cut by an undirected edge.
pub fn x_switch(g: &MixedGraph, cut: &Cut) -> Result<MixedGraph, SwitchError> {
    let d = x_switch_diagonal(g, cut)?;
    apply_switch(g, &d)
}

/// A chordless cycle of length at least four, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordlessCycle(pub Vec<usize>);

/// Maximum cardinality search on the underlying graph. The reverse of the
/// visiting order is a perfect elimination ordering exactly when the graph
/// is chordal.
fn mcs_order(g: &MixedGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("some vertex remains");
        done[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// True when every vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &MixedGraph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    })
}

/// Shortest `x`-`y` path avoiding `blocked`, by BFS.
fn shortest_path_avoiding(g: &MixedGraph, x: usize, y: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            let mut path = vec![y];
            let mut c = y;
            while c != x {
                c = prev[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if prev[w] == usize::MAX && !blocked[w] {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Some chordless cycle of length ≥ 4, if the underlying graph has one.
///
/// A vertex `v` with nonadjacent neighbours `x`, `y` lies on such a cycle iff
/// `x` and `y` are joined by a path avoiding the rest of `N[v]`; a shortest
/// such path is induced, so it closes up into a chordless cycle through `v`.
pub fn find_chordless_cycle(g: &MixedGraph) -> Option<ChordlessCycle> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in &nb {
                    blocked[w] = w != x && w != y;
                }
                if let Some(path) = shortest_path_avoiding(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(ChordlessCycle(cycle));
                }
            }
        }
    }
    None
}

/// A perfect elimination ordering of the underlying graph, or a chordless
/// cycle proving there is none.
pub fn perfect_elimination_ordering(g: &MixedGraph) -> Result<Vec<usize>, ChordlessCycle> {
    let order = mcs_order(g);
    if is_perfect_elimination_ordering(g, &order) {
        Ok(order)
    } else {
        Err(find_chordless_cycle(g).expect("a graph without a PEO has a chordless cycle"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("underlying graph is not chordal: chordless cycle {0:?}")]
    NotChordal(Vec<usize>),
    #[error("triangle {0:?} has holonomy {1}, so it is not switching equivalent to K_3")]
    BadTriangle([usize; 3], Unit),
}

/// First triangle (in lexicographic order) whose holonomy is not 1.
pub fn first_bad_triangle(g: &MixedGraph) -> Option<([usize; 3], Unit)> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if !g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.adjacent(a, c) && g.adjacent(b, c) {
                    let h = holonomy(g, &[a, b, c]).expect("triangle edges exist");
                    if h != Unit::One {
                        return Some(([a, b, c], h));
                    }
                }
            }
        }
    }
    None
}

/// A diagonal `D` with `apply_switch(g, D) = underlying(g)` for a mixed graph
/// whose underlying graph is chordal and whose triangles all have holonomy 1.
///
/// Vertices are inserted in reverse elimination order, so each new vertex
/// `x` meets the inserted part in a clique `K`, and every edge among the
/// inserted vertices has already been made undirected.
/// * Case 1, `|K| = 1`: the single edge `xy` fixes `d_x`.
/// * Case 2, `|K| ≥ 2`: `d_x` is fixed by one `y ∈ K`. For any other
///   `z ∈ K` the triangle `xyz` has holonomy 1, and its switched edges `xy`
///   and `yz` are already 1, so the switched `xz` is 1 as well.
pub fn normalize_chordal(g: &MixedGraph) -> Result<SwitchDiagonal, NormalizeError> {
    if let Some((t, h)) = first_bad_triangle(g) {
        return Err(NormalizeError::BadTriangle(t, h));
    }
    let order = perfect_elimination_ordering(g).map_err(|c| NormalizeError::NotChordal(c.0))?;
    let n = g.n();
    let mut d = vec![Unit::One; n];
    let mut inserted = vec![false; n];
    for &x in order.iter().rev() {
        let clique: Vec<usize> = g.neighbors(x).filter(|&w| inserted[w]).collect();
        if let Some(&y) = clique.first() {
            // d_x h_xy conj(d_y) = 1  ⇒  d_x = conj(h_xy) d_y
            let hxy = Unit::from_gaussian(g.entry(x, y)).expect("edge entry is a unit");
            d[x] = hxy.conj() * d[y];
            for &z in &clique[1..] {
                let hxz = Unit::from_gaussian(g.entry(x, z)).expect("edge entry is a unit");
                if d[x] * hxz * d[z].conj() != Unit::One {
                    // unreachable once every triangle has holonomy 1
                    let h = holonomy(g, &[x, y, z]).expect("clique triangle");
                    return Err(NormalizeError::BadTriangle([x, y, z], h));
                }
            }
        }
        inserted[x] = true;
    }
    Ok(SwitchDiagonal::new(d))
}

/// A relabelling `perm` and diagonal `D` with
/// `b.induced(&perm) == apply_switch(a, D)`, found by backtracking over
/// adjacency-preserving maps.
pub fn relabelled_switching(a: &MixedGraph, b: &MixedGraph) -> Option<(Vec<usize>, SwitchDiagonal)> {
    let n = a.n();
    if b.n() != n || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    relabel_step(a, b, &mut perm, &mut used)
}

fn relabel_step(
    a: &MixedGraph,
    b: &MixedGraph,
    perm: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<(Vec<usize>, SwitchDiagonal)> {
    let i = perm.len();
    if i == a.n() {
        return switching_equivalent(a, &b.induced(perm)).map(|d| (perm.clone(), d));
    }
    for v in 0..a.n() {
        if used[v] || a.degree(i) != b.degree(v) {
            continue;
        }
        if (0..i).any(|j| a.adjacent(i, j) != b.adjacent(v, perm[j])) {
            continue;
        }
        used[v] = true;
        perm.push(v);
        if let Some(found) = relabel_step(a, b, perm, used) {
            return Some(found);
        }
        perm.pop();
        used[v] = false;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSpec;

    fn arc(n: usize, edges: &[(usize, usize)]) -> MixedGraph {
        let spec: Vec<_> = edges.iter().map(|&(u, v)| (u, v, EdgeSpec::Arc)).collect();
        MixedGraph::build(n, &spec).unwrap()
    }

    #[test]
    fn switching_examples() {
        let k2 = MixedGraph::complete(2);
        let d = SwitchDiagonal::new(vec![Unit::One, Unit::I]);
        assert_eq!(apply_switch(&k2, &d).unwrap(), arc(2, &[(1, 0)]));
        assert_eq!(apply_switch(&k2, &SwitchDiagonal::identity(2)).unwrap(), k2);
        let bad = SwitchDiagonal::new(vec![Unit::One, Unit::MinusOne]);
        assert!(matches!(apply_switch(&k2, &bad), Err(SwitchError::NotClosed { .. })));
    }

    #[test]
    fn equivalence_examples() {
        let k5 = MixedGraph::complete(5);
        let knst = MixedGraph::knst(2, 3);
        let d = switching_equivalent(&knst, &k5).unwrap();
        assert_eq!(apply_switch(&knst, &d).unwrap(), k5);
        let cyc = arc(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(switching_equivalent(&cyc, &MixedGraph::complete(3)).is_none());
        assert_eq!(
            switching_equivalent(&cyc, &cyc),
            Some(SwitchDiagonal::identity(3))
        );
    }

    #[test]
    fn cuts() {
        let p = arc(3, &[(0, 1), (2, 1)]);
        let cuts = coincident_cuts(&p);
        // {0}|{1,2}: forward; {0,1}|{2}: backward; {0,2}|{1}: both forward
        assert_eq!(cuts.len(), 3);
        let knst = MixedGraph::knst(2, 2);
        let cut = Cut::new(&knst, vec![0, 1]).unwrap();
        assert_eq!(cut.orientation(), CutOrientation::Forward);
        assert_eq!(x_switch(&knst, &cut).unwrap(), MixedGraph::complete(4));
        let c4 = MixedGraph::cycle(4);
        assert!(coincident_cuts(&c4).iter().all(|c| c.orientation() == CutOrientation::Undirected));
        assert_eq!(x_switch(&c4, &Cut::new(&c4, vec![0, 1]).unwrap()).unwrap(), c4);
    }

    #[test]
    fn peo_and_witness() {
        assert!(perfect_elimination_ordering(&MixedGraph::complete(5)).is_ok());
        let w = perfect_elimination_ordering(&MixedGraph::cycle(4)).unwrap_err();
        assert_eq!(w.0.len(), 4);
        let c6 = MixedGraph::cycle(6);
        let w = perfect_elimination_ordering(&c6).unwrap_err();
        assert_eq!(w.0.len(), 6);
    }

    #[test]
    fn bowtie_has_a_peo_and_brute_force_agrees() {
        let k3 = MixedGraph::complete(3);
        let bowtie = k3.coalescence(0, &k3, 0);
        let order = perfect_elimination_ordering(&bowtie).unwrap();
        assert!(is_perfect_elimination_ordering(&bowtie, &order));
        // oracle: enumerate all 120 orderings
        let mut count = 0;
        let mut perm: Vec<usize> = (0..5).collect();
        permute(&mut perm, 0, &mut |p| {
            if is_perfect_elimination_ordering(&bowtie, p) {
                count += 1;
            }
        });
        assert!(count > 0);
        // the centre can never be eliminated first, since its neighbourhood is 2K_2
        let mut centre_first = 0;
        let mut perm: Vec<usize> = (0..5).collect();
        permute(&mut perm, 0, &mut |p| {
            if p[0] == 0 && is_perfect_elimination_ordering(&bowtie, p) {
                centre_first += 1;
            }
        });
        assert_eq!(centre_first, 0);
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn normalize_examples() {
        let knst = MixedGraph::knst(3, 2);
        let d = normalize_chordal(&knst).unwrap();
        assert_eq!(apply_switch(&knst, &d).unwrap(), MixedGraph::complete(5));
        let cyc = arc(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(normalize_chordal(&cyc), Err(NormalizeError::BadTriangle([0, 1, 2], _))));
        let tree = arc(4, &[(0, 1), (2, 1), (1, 3)]);
        let d = normalize_chordal(&tree).unwrap();
        assert_eq!(apply_switch(&tree, &d).unwrap(), tree.underlying());
        assert!(matches!(
            normalize_chordal(&MixedGraph::cycle(4)),
            Err(NormalizeError::NotChordal(_))
        ));
    }
}

//! Mixed graphs, their Hermitian adjacency matrices, and the small set of
//! constructions used throughout the crate (joins, unions, coalescences,
//! `K_n[s,t]`).
//!
//! A mixed graph stores a full `n x n` table of [`EdgeKind`]s. Every unordered
//! pair is written in both directions so that `kind(u, v)` is always the
//! reverse of `kind(v, u)`.

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::gaussian::{Gaussian, GaussianMatrix};

/// Relation of an ordered vertex pair `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum EdgeKind {
    #[default]
    None,
    Undirected,
    /// `u -> v`
    ArcOut,
    /// `v -> u`
    ArcIn,
}

impl EdgeKind {
    pub fn reverse(self) -> EdgeKind {
        match self {
            EdgeKind::ArcOut => EdgeKind::ArcIn,
            EdgeKind::ArcIn => EdgeKind::ArcOut,
            k => k,
        }
    }

    pub fn is_edge(self) -> bool {
        self != EdgeKind::None
    }

    pub fn is_arc(self) -> bool {
        matches!(self, EdgeKind::ArcOut | EdgeKind::ArcIn)
    }

    pub fn entry(self) -> HermitianEntry {
        match self {
            EdgeKind::None => HermitianEntry::Zero,
            EdgeKind::Undirected => HermitianEntry::One,
            EdgeKind::ArcOut => HermitianEntry::I,
            EdgeKind::ArcIn => HermitianEntry::MinusI,
        }
    }

    /// Compact code used by [`MixedGraph::encoding`].
    pub fn code(self) -> u8 {
        match self {
            EdgeKind::None => 0,
            EdgeKind::Undirected => 1,
            EdgeKind::ArcOut => 2,
            EdgeKind::ArcIn => 3,
        }
    }

    pub fn from_code(code: u8) -> Option<EdgeKind> {
        match code {
            0 => Some(EdgeKind::None),
            1 => Some(EdgeKind::Undirected),
            2 => Some(EdgeKind::ArcOut),
            3 => Some(EdgeKind::ArcIn),
            _ => None,
        }
    }
}

/// Edge description accepted by [`MixedGraph::build`]; arcs run from the
/// first listed vertex to the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeSpec {
    Undirected,
    Arc,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("pair ({0}, {1}) listed more than once")]
    DuplicatePair(usize, usize),
    #[error("operation requires an undirected graph")]
    NotUndirected,
    #[error("matrix entry ({0}, {1}) is not in {{0, 1, i, -i}} or breaks Hermitian symmetry")]
    BadEntry(usize, usize),
}

/// Entry of a mixed graph's Hermitian adjacency matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HermitianEntry {
    Zero,
    One,
    I,
    MinusI,
}

impl HermitianEntry {
    pub fn to_gaussian(self) -> Gaussian {
        match self {
            HermitianEntry::Zero => Gaussian::ZERO,
            HermitianEntry::One => Gaussian::ONE,
            HermitianEntry::I => Gaussian::I,
            HermitianEntry::MinusI => Gaussian::MINUS_I,
        }
    }

    pub fn from_gaussian(g: Gaussian) -> Option<Self> {
        match (g.re, g.im) {
            (0, 0) => Some(HermitianEntry::Zero),
            (1, 0) => Some(HermitianEntry::One),
            (0, 1) => Some(HermitianEntry::I),
            (0, -1) => Some(HermitianEntry::MinusI),
            _ => None,
        }
    }

    pub fn conj(self) -> Self {
        match self {
            HermitianEntry::I => HermitianEntry::MinusI,
            HermitianEntry::MinusI => HermitianEntry::I,
            e => e,
        }
    }

    pub fn kind(self) -> EdgeKind {
        match self {
            HermitianEntry::Zero => EdgeKind::None,
            HermitianEntry::One => EdgeKind::Undirected,
            HermitianEntry::I => EdgeKind::ArcOut,
            HermitianEntry::MinusI => EdgeKind::ArcIn,
        }
    }
}

/// Hermitian adjacency matrix of a mixed graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<HermitianEntry>,
}

impl HermitianMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize) -> HermitianEntry {
        self.entries[s * self.n + t]
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|s| {
            self.get(s, s) == HermitianEntry::Zero
                && (0..self.n).all(|t| self.get(s, t) == self.get(t, s).conj())
        })
    }

    pub fn to_gaussian(&self) -> GaussianMatrix {
        GaussianMatrix::from_entries(
            self.n,
            self.entries.iter().map(|e| e.to_gaussian()).collect(),
        )
    }

    pub fn principal_submatrix(&self, rows: &[usize]) -> HermitianMatrix {
        let m = rows.len();
        let mut entries = Vec::with_capacity(m * m);
        for &r in rows {
            for &c in rows {
                entries.push(self.get(r, c));
            }
        }
        HermitianMatrix { n: m, entries }
    }

    /// Reads a Gaussian matrix back as a mixed-graph matrix, if every entry is
    /// admissible.
    pub fn from_gaussian(m: &GaussianMatrix) -> Result<HermitianMatrix, GraphError> {
        let n = m.dim();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let e = HermitianEntry::from_gaussian(m.get(s, t))
                    .ok_or(GraphError::BadEntry(s, t))?;
                entries.push(e);
            }
        }
        let h = HermitianMatrix { n, entries };
        if !h.is_hermitian() {
            let bad = (0..n)
                .flat_map(|s| (0..n).map(move |t| (s, t)))
                .find(|&(s, t)| h.get(s, t) != h.get(t, s).conj())
                .unwrap_or((0, 0));
            return Err(GraphError::BadEntry(bad.0, bad.1));
        }
        Ok(h)
    }
}

/// Out-, in- and undirected neighbours of a vertex inside a subset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NeighborPartition {
    pub out: Vec<usize>,
    pub inn: Vec<usize>,
    pub undirected: Vec<usize>,
}

/// A mixed graph on vertices `0..n`.
#[derive(Clone)]
pub struct MixedGraph {
    n: usize,
    kinds: Vec<EdgeKind>,
    labels: Option<Vec<String>>,
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.kinds == other.kinds
    }
}

impl Eq for MixedGraph {}

impl Hash for MixedGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.kinds.hash(state);
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph({}; ", self.n)?;
        let mut first = true;
        for (u, v, k) in self.edges() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            match k {
                EdgeKind::Undirected => write!(f, "{u}--{v}")?,
                EdgeKind::ArcOut => write!(f, "{u}->{v}")?,
                EdgeKind::ArcIn => write!(f, "{v}->{u}")?,
                EdgeKind::None => {}
            }
        }
        f.write_str(")")
    }
}

impl MixedGraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        MixedGraph {
            n,
            kinds: vec![EdgeKind::None; n * n],
            labels: None,
        }
    }

    /// Builds a mixed graph from an edge list. Arcs are oriented `u -> v`.
    pub fn build(n: usize, edges: &[(usize, usize, EdgeSpec)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v, spec) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.kind(u, v).is_edge() {
                return Err(GraphError::DuplicatePair(u, v));
            }
            let kind = match spec {
                EdgeSpec::Undirected => EdgeKind::Undirected,
                EdgeSpec::Arc => EdgeKind::ArcOut,
            };
            g.set_kind(u, v, kind);
        }
        Ok(g)
    }

    /// Undirected graph from an edge list (panics on invalid input; meant for
    /// fixed, known-good shapes).
    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Self {
        let spec: Vec<_> = edges
            .iter()
            .map(|&(u, v)| (u, v, EdgeSpec::Undirected))
            .collect();
        Self::build(n, &spec).expect("valid undirected edge list")
    }

    pub fn from_hermitian(h: &HermitianMatrix) -> Self {
        let n = h.dim();
        let mut g = Self::empty(n);
        for s in 0..n {
            for t in 0..n {
                g.kinds[s * n + t] = h.get(s, t).kind();
            }
        }
        g
    }

    /// Rebuilds a graph from the upper-triangle codes of [`Self::encoding`].
    pub fn from_encoding(n: usize, codes: &[u8]) -> Option<Self> {
        if codes.len() != n * n.saturating_sub(1) / 2 {
            return None;
        }
        let mut g = Self::empty(n);
        let mut it = codes.iter();
        for u in 0..n {
            for v in u + 1..n {
                g.set_kind(u, v, EdgeKind::from_code(*it.next()?)?);
            }
        }
        Some(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn kind(&self, u: usize, v: usize) -> EdgeKind {
        self.kinds[u * self.n + v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.kind(u, v).is_edge()
    }

    /// Writes `kind` for `(u, v)` and its reverse for `(v, u)`.
    pub(crate) fn set_kind(&mut self, u: usize, v: usize, kind: EdgeKind) {
        debug_assert!(u != v || kind == EdgeKind::None);
        self.kinds[u * self.n + v] = kind;
        self.kinds[v * self.n + u] = kind.reverse();
    }

    /// All edges as `(u, v, kind(u, v))` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let k = self.kind(u, v);
                k.is_edge().then_some((u, v, k))
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.adjacent(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn is_undirected(&self) -> bool {
        self.kinds.iter().all(|k| !k.is_arc())
    }

    /// Upper-triangle edge codes, row by row. Two graphs on the same vertex
    /// set are equal iff their encodings are.
    pub fn encoding(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.kind(u, v).code());
            }
        }
        out
    }

    pub fn hermitian_matrix(&self) -> HermitianMatrix {
        HermitianMatrix {
            n: self.n,
            entries: self.kinds.iter().map(|k| k.entry()).collect(),
        }
    }

    /// Hermitian entry `h(u, v)` as a Gaussian integer.
    #[inline]
    pub fn entry(&self, u: usize, v: usize) -> Gaussian {
        self.kind(u, v).entry().to_gaussian()
    }

    /// Forgets all orientations.
    pub fn underlying(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            kinds: self
                .kinds
                .iter()
                .map(|k| {
                    if k.is_edge() {
                        EdgeKind::Undirected
                    } else {
                        EdgeKind::None
                    }
                })
                .collect(),
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by `subset`, with vertex `i` of the result being
    /// `subset[i]`. Passing a permutation of `0..n` relabels the graph.
    pub fn induced(&self, subset: &[usize]) -> MixedGraph {
        let m = subset.len();
        let mut kinds = Vec::with_capacity(m * m);
        for &u in subset {
            for &v in subset {
                kinds.push(self.kind(u, v));
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| subset.iter().map(|&u| l[u].clone()).collect());
        MixedGraph { n: m, kinds, labels }
    }

    /// Out/in/undirected neighbours of `u` among `within`.
    pub fn neighbor_partition(&self, u: usize, within: &[usize]) -> NeighborPartition {
        let mut p = NeighborPartition::default();
        for &w in within {
            if w == u {
                continue;
            }
            match self.kind(u, w) {
                EdgeKind::ArcOut => p.out.push(w),
                EdgeKind::ArcIn => p.inn.push(w),
                EdgeKind::Undirected => p.undirected.push(w),
                EdgeKind::None => {}
            }
        }
        p
    }

    /// Connected components (of the underlying graph), each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected; so does `K_1`.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Undirected complement.
    pub fn complement(&self) -> Result<MixedGraph, GraphError> {
        if !self.is_undirected() {
            return Err(GraphError::NotUndirected);
        }
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    g.set_kind(u, v, EdgeKind::Undirected);
                }
            }
        }
        Ok(g)
    }

    /// `self ∪ other`, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &MixedGraph) -> MixedGraph {
        let n = self.n + other.n;
        let mut g = Self::empty(n);
        for (u, v, k) in self.edges() {
            g.set_kind(u, v, k);
        }
        for (u, v, k) in other.edges() {
            g.set_kind(u + self.n, v + self.n, k);
        }
        g
    }

    /// `self ∇ other`: the disjoint union plus every edge between the two
    /// parts. Both inputs must be undirected.
    pub fn join(&self, other: &MixedGraph) -> Result<MixedGraph, GraphError> {
        if !self.is_undirected() || !other.is_undirected() {
            return Err(GraphError::NotUndirected);
        }
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_kind(u, self.n + v, EdgeKind::Undirected);
            }
        }
        Ok(g)
    }

    /// Glues `self` and `other` by identifying `u ∈ self` with `v ∈ other`.
    ///
    /// Vertices of `self` keep their indices; the remaining vertices of
    /// `other` follow in their original order.
    pub fn coalescence(&self, u: usize, other: &MixedGraph, v: usize) -> MixedGraph {
        assert!(u < self.n && v < other.n, "coalescence vertex out of range");
        let n = self.n + other.n - 1;
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + w,
                std::cmp::Ordering::Greater => self.n + w - 1,
            }
        };
        let mut g = Self::empty(n);
        for (a, b, k) in self.edges() {
            g.set_kind(a, b, k);
        }
        for (a, b, k) in other.edges() {
            g.set_kind(map(a), map(b), k);
        }
        g
    }

    /// Vertex indices that `coalescence(u, other, v)` assigns to `other`'s
    /// vertices.
    pub fn coalescence_map(&self, u: usize, other: &MixedGraph, v: usize) -> Vec<usize> {
        (0..other.n)
            .map(|w| match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + w,
                std::cmp::Ordering::Greater => self.n + w - 1,
            })
            .collect()
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_kind(u, v, EdgeKind::Undirected);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.set_kind(u - 1, u, EdgeKind::Undirected);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(n);
        g.set_kind(n - 1, 0, EdgeKind::Undirected);
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::empty(a)
            .join(&Self::empty(b))
            .expect("empty graphs are undirected")
    }

    /// `K_{1,k}` centred at vertex 0.
    pub fn star(k: usize) -> Self {
        Self::complete_bipartite(1, k)
    }

    /// `K_n[s,t]`: cliques on `0..s` and `s..s+t`, with every arc running
    /// from the first clique to the second.
    pub fn knst(s: usize, t: usize) -> Self {
        let mut g = Self::complete(s + t);
        for x in 0..s {
            for y in s..s + t {
                g.set_kind(x, y, EdgeKind::ArcOut);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_errors() {
        let k2 = MixedGraph::build(2, &[(0, 1, EdgeSpec::Undirected)]).unwrap();
        assert_eq!(k2, MixedGraph::complete(2));
        let arc = MixedGraph::build(2, &[(0, 1, EdgeSpec::Arc)]).unwrap();
        assert_eq!(arc.kind(0, 1), EdgeKind::ArcOut);
        assert_eq!(arc.kind(1, 0), EdgeKind::ArcIn);
        assert_eq!(
            MixedGraph::build(3, &[(0, 1, EdgeSpec::Arc), (1, 0, EdgeSpec::Arc)]),
            Err(GraphError::DuplicatePair(1, 0))
        );
        assert_eq!(
            MixedGraph::build(2, &[(1, 1, EdgeSpec::Arc)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            MixedGraph::build(2, &[(0, 2, EdgeSpec::Undirected)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn hermitian_entries() {
        let arc = MixedGraph::build(2, &[(0, 1, EdgeSpec::Arc)]).unwrap();
        let h = arc.hermitian_matrix();
        assert_eq!(h.get(0, 1), HermitianEntry::I);
        assert_eq!(h.get(1, 0), HermitianEntry::MinusI);
        assert_eq!(h.get(0, 0), HermitianEntry::Zero);

        // u=0, v=1, w=2 with u->w, v->w, u--v
        let k322 = MixedGraph::build(
            3,
            &[
                (0, 2, EdgeSpec::Arc),
                (1, 2, EdgeSpec::Arc),
                (0, 1, EdgeSpec::Undirected),
            ],
        )
        .unwrap();
        let h = k322.hermitian_matrix();
        assert_eq!(h.get(0, 1), HermitianEntry::One);
        assert_eq!(h.get(0, 2), HermitianEntry::I);
        assert_eq!(h.get(1, 2), HermitianEntry::I);
        assert_eq!(h.get(2, 0), HermitianEntry::MinusI);
        assert!(h.is_hermitian());
    }

    #[test]
    fn underlying_and_induced() {
        let cyc = MixedGraph::build(
            3,
            &[(0, 1, EdgeSpec::Arc), (1, 2, EdgeSpec::Arc), (2, 0, EdgeSpec::Arc)],
        )
        .unwrap();
        assert_eq!(cyc.underlying(), MixedGraph::complete(3));
        assert_eq!(cyc.underlying().underlying(), cyc.underlying());
        assert_eq!(MixedGraph::complete(4).induced(&[0, 1, 2]), MixedGraph::complete(3));
        let e = cyc.induced(&[2, 0]);
        assert_eq!(e.kind(0, 1), EdgeKind::ArcOut);
    }

    #[test]
    fn coalescence_shapes() {
        let k2 = MixedGraph::complete(2);
        assert_eq!(k2.coalescence(1, &k2, 0), MixedGraph::path(3));
        let bowtie = MixedGraph::complete(3).coalescence(0, &MixedGraph::complete(3), 0);
        assert_eq!(bowtie.n(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.degree(0), 4);
        let k2u = MixedGraph::complete(2).disjoint_union(&MixedGraph::empty(2));
        assert_eq!(
            bowtie,
            MixedGraph::empty(1)
                .join(&MixedGraph::complete(2).disjoint_union(&MixedGraph::complete(2)))
                .unwrap()
        );
        assert_eq!(k2u.n(), 4);
        let big = MixedGraph::complete(3).coalescence(2, &MixedGraph::complete(4), 1);
        assert_eq!(big.n(), 6);
        assert_eq!(big.induced(&[0, 1, 2]), MixedGraph::complete(3));
        let map = MixedGraph::complete(3).coalescence_map(2, &MixedGraph::complete(4), 1);
        assert_eq!(big.induced(&map), MixedGraph::complete(4));
    }

    #[test]
    fn knst_shapes() {
        assert_eq!(MixedGraph::knst(4, 0), MixedGraph::complete(4));
        let g = MixedGraph::knst(2, 1);
        assert_eq!(g.kind(0, 1), EdgeKind::Undirected);
        assert_eq!(g.kind(0, 2), EdgeKind::ArcOut);
        assert_eq!(g.kind(1, 2), EdgeKind::ArcOut);
        let g = MixedGraph::knst(1, 2);
        assert_eq!(g.kind(0, 1), EdgeKind::ArcOut);
        assert_eq!(g.kind(0, 2), EdgeKind::ArcOut);
        assert_eq!(g.kind(1, 2), EdgeKind::Undirected);
    }

    #[test]
    fn neighbor_sets() {
        let arc = MixedGraph::build(2, &[(0, 1, EdgeSpec::Arc)]).unwrap();
        let p = arc.neighbor_partition(0, &[1]);
        assert_eq!((p.out, p.inn, p.undirected), (vec![1], vec![], vec![]));
        let p = MixedGraph::complete(2).neighbor_partition(0, &[1]);
        assert_eq!(p.undirected, vec![1]);
        let k322 = MixedGraph::knst(2, 1);
        let p = k322.neighbor_partition(0, &[1, 2]);
        assert_eq!(p.out, vec![2]);
        assert_eq!(p.undirected, vec![1]);
    }

    #[test]
    fn joins_and_unions() {
        let c4 = MixedGraph::empty(2).join(&MixedGraph::empty(2)).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.neighbors(0).all(|v| v >= 2));
        let g = MixedGraph::complete(2)
            .disjoint_union(&MixedGraph::empty(1))
            .join(&MixedGraph::empty(2))
            .unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 7));
        assert!(!MixedGraph::empty(2).is_connected());
        let arc = MixedGraph::build(2, &[(0, 1, EdgeSpec::Arc)]).unwrap();
        assert_eq!(arc.join(&MixedGraph::empty(1)), Err(GraphError::NotUndirected));
    }

    #[test]
    fn encoding_round_trip() {
        let g = MixedGraph::knst(2, 2);
        assert_eq!(MixedGraph::from_encoding(4, &g.encoding()), Some(g));
    }
}

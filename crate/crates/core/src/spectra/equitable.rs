//! Equitable partitions and their quotient matrices.

use thiserror::Error;

use crate::gaussian::{Gaussian, GaussianMatrix};
use crate::graph::MixedGraph;

use super::charpoly::{graph_char_poly, real_char_poly};
use super::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquitableError {
    #[error("cells do not partition the vertex set: vertex {0} is missing or repeated")]
    NotAPartition(usize),
    #[error("empty cell {0}")]
    EmptyCell(usize),
    #[error(
        "vertex {vertex} sends {found} into cell {to}, but vertex {reference} of the same cell sends {expected}"
    )]
    Unbalanced {
        vertex: usize,
        reference: usize,
        to: usize,
        found: Gaussian,
        expected: Gaussian,
    },
}

/// A validated equitable partition with its quotient matrix `B`, where
/// `B[i][j]` is the common row sum of the block `H[V_i, V_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitablePartition {
    pub cells: Vec<Vec<usize>>,
    pub quotient: GaussianMatrix,
    /// `n x s` indicator matrix: row `v` has a single 1 in the column of
    /// the cell containing `v`.
    pub characteristic_matrix: Vec<Vec<u8>>,
}

impl EquitablePartition {
    /// `det(xI - B)`; real because `B` is similar to a Hermitian restriction.
    pub fn quotient_char_poly(&self) -> IntPolynomial {
        real_char_poly(&self.quotient).expect("quotient of a Hermitian matrix has a real char poly")
    }
}

/// Checks that `cells` is equitable for `H(g)` and builds the quotient.
pub fn validate_equitable(
    g: &MixedGraph,
    cells: &[Vec<usize>],
) -> Result<EquitablePartition, EquitableError> {
    let n = g.n();
    let mut cell_of = vec![usize::MAX; n];
    for (i, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(EquitableError::EmptyCell(i));
        }
        for &v in cell {
            if v >= n || cell_of[v] != usize::MAX {
                return Err(EquitableError::NotAPartition(v));
            }
            cell_of[v] = i;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(EquitableError::NotAPartition(v));
    }
    let s = cells.len();
    let row_sum = |v: usize, j: usize| {
        cells[j]
            .iter()
            .fold(Gaussian::ZERO, |acc, &w| acc + g.entry(v, w))
    };
    let mut quotient = GaussianMatrix::zeros(s);
    for (i, cell) in cells.iter().enumerate() {
        let reference = cell[0];
        for j in 0..s {
            let expected = row_sum(reference, j);
            for &v in &cell[1..] {
                let found = row_sum(v, j);
                if found != expected {
                    return Err(EquitableError::Unbalanced {
                        vertex: v,
                        reference,
                        to: j,
                        found,
                        expected,
                    });
                }
            }
            quotient.set(i, j, expected);
        }
    }
    let characteristic_matrix = (0..n)
        .map(|v| (0..s).map(|j| u8::from(cell_of[v] == j)).collect())
        .collect();
    Ok(EquitablePartition {
        cells: cells.to_vec(),
        quotient,
        characteristic_matrix,
    })
}

/// Whether the quotient's characteristic polynomial divides that of `H(g)`,
/// which is the exact form of spectral containment with multiplicity.
pub fn quotient_divides(g: &MixedGraph, p: &EquitablePartition) -> bool {
    graph_char_poly(g).div_exact(&p.quotient_char_poly()).is_some()
}

/// Cells `(V_1, {v}, V_2)` of `(K_s ∪ K_t)∇K_1` as laid out by
/// [`cliques_at_vertex`].
pub fn cliques_at_vertex_cells(s: usize, t: usize) -> Vec<Vec<usize>> {
    vec![(0..s).collect(), vec![s], (s + 1..s + 1 + t).collect()]
}

/// `(K_s ∪ K_t)∇K_1` with `K_s` on `0..s`, the apex at `s` and `K_t` after it.
pub fn cliques_at_vertex(s: usize, t: usize) -> MixedGraph {
    let n = s + t + 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let same = (u < s && v < s) || (u > s && v > s);
            if same || u == s || v == s {
                edges.push((u, v));
            }
        }
    }
    MixedGraph::undirected(n, &edges)
}

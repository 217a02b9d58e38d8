//! Exact and floating-point spectra of Hermitian adjacency matrices.

pub mod charpoly;
pub mod cubics;
pub mod equitable;
pub mod jacobi;
pub mod poly;
pub mod quadratic;
pub mod sturm;

use crate::graph::{HermitianMatrix, MixedGraph};

pub use charpoly::{char_poly, graph_char_poly};
pub use cubics::{f_cubic, pendant_cubic, phi_cubic};
pub use equitable::{validate_equitable, EquitableError, EquitablePartition};
pub use poly::{IntPolynomial, RatPolynomial};
pub use quadratic::{QuadraticNumber, Threshold};
pub use sturm::{compare_lambda_min, compare_min_root, ExactComparator};

/// Slack used when comparing floating eigenvalues.
pub const FLOAT_EPS: f64 = 1e-9;

/// Eigenvalues (descending) together with the exact characteristic
/// polynomial they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub char_poly: IntPolynomial,
}

impl SpectralSummary {
    pub fn lambda_max(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn lambda_min(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }
}

pub fn eigenvalues(h: &HermitianMatrix) -> SpectralSummary {
    let g = h.to_gaussian();
    SpectralSummary {
        n: h.dim(),
        eigenvalues: jacobi::hermitian_eigenvalues(&g),
        char_poly: char_poly(h),
    }
}

pub fn graph_spectrum(g: &MixedGraph) -> SpectralSummary {
    eigenvalues(&g.hermitian_matrix())
}

/// Cauchy interlacing between `H(g)` and its principal submatrix on
/// `subset`: `λ_i ≥ μ_i ≥ λ_{n-m+i}`, with a `1e-8` float slack.
pub fn interlacing_holds(g: &MixedGraph, subset: &[usize]) -> bool {
    let n = g.n();
    let m = subset.len();
    assert!(m >= 1 && m <= n, "subset must be nonempty");
    let lam = graph_spectrum(g).eigenvalues;
    let mu = graph_spectrum(&g.induced(subset)).eigenvalues;
    (0..m).all(|i| lam[i] + 1e-8 >= mu[i] && mu[i] + 1e-8 >= lam[n - m + i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSpec;

    #[test]
    fn complete_and_arc_triangle() {
        let s = graph_spectrum(&MixedGraph::complete(3));
        for (a, b) in s.eigenvalues.iter().zip([2.0, -1.0, -1.0]) {
            assert!((a - b).abs() < FLOAT_EPS);
        }
        // u -> v -> w with u -- w: holonomy i·i·1 = -1
        let t = MixedGraph::build(
            3,
            &[(0, 1, EdgeSpec::Arc), (1, 2, EdgeSpec::Arc), (0, 2, EdgeSpec::Undirected)],
        )
        .unwrap();
        assert!((graph_spectrum(&t).lambda_min().unwrap() + 2.0).abs() < FLOAT_EPS);
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlacing_holds(&MixedGraph::complete(3), &[0, 1]));
        assert!(interlacing_holds(&MixedGraph::cycle(4), &[0, 1, 2]));
    }
}

//! Exact characteristic polynomials by the Faddeev–LeVerrier recurrence over
//! `Z[i]`.
//!
//! With `M_1 = I` and, for `k = 1..n`,
//! `A_k = A·M_k`, `c_{n-k} = -tr(A_k)/k`, `M_{k+1} = A_k + c_{n-k}·I`,
//! every division by `k` is exact over the Gaussian integers because the
//! coefficients of `det(xI - A)` are themselves Gaussian integers.

use crate::gaussian::{Gaussian, GaussianMatrix};
use crate::graph::{HermitianMatrix, MixedGraph};

use super::poly::IntPolynomial;

/// Coefficients of `det(xI - A)`, constant term first, for any square
/// Gaussian-integer matrix.
pub fn char_poly_gaussian(a: &GaussianMatrix) -> Vec<Gaussian> {
    let n = a.dim();
    let mut coeffs = vec![Gaussian::ZERO; n + 1];
    coeffs[n] = Gaussian::ONE;
    let mut m = GaussianMatrix::identity(n);
    for k in 1..=n {
        let mut ak = a.mul_matrix(&m);
        let c = -ak
            .trace()
            .div_exact(k as i64)
            .expect("Faddeev–LeVerrier trace is divisible by k");
        coeffs[n - k] = c;
        if k < n {
            for i in 0..n {
                ak.set(i, i, ak.get(i, i) + c);
            }
            m = ak;
        }
    }
    coeffs
}

/// `det(xI - H)` for a Hermitian matrix. The coefficients are real because
/// the spectrum is.
pub fn char_poly(h: &HermitianMatrix) -> IntPolynomial {
    real_part_checked(&char_poly_gaussian(&h.to_gaussian()))
}

/// Characteristic polynomial of a mixed graph's Hermitian adjacency matrix.
pub fn graph_char_poly(g: &MixedGraph) -> IntPolynomial {
    char_poly(&g.hermitian_matrix())
}

/// Drops imaginary parts after asserting they vanish.
pub fn real_part_checked(coeffs: &[Gaussian]) -> IntPolynomial {
    IntPolynomial::new(
        coeffs
            .iter()
            .map(|c| {
                assert_eq!(c.im, 0, "characteristic polynomial is not real");
                c.re
            })
            .collect(),
    )
}

/// `det(xI - A)` with real coefficients, or `None` if some coefficient has
/// a nonzero imaginary part.
pub fn real_char_poly(a: &GaussianMatrix) -> Option<IntPolynomial> {
    let c = char_poly_gaussian(a);
    c.iter()
        .all(|g| g.im == 0)
        .then(|| IntPolynomial::new(c.iter().map(|g| g.re).collect()))
}

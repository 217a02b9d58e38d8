//! Closed-form cubics from the pendant-clique and two-clique analyses.

use super::poly::IntPolynomial;

/// `φ_n(x) = x³ + (3 - n)x² + (1 - n)x - 1`, with `φ_n(-1) = 0` and
/// `φ_n(-(1+√5)/2) = 1 - n`.
///
/// This is not the quotient polynomial of `K_{n-1}` with a pendant vertex;
/// that one is [`pendant_cubic`], which differs in the constant term.
pub fn phi_cubic(n: i64) -> IntPolynomial {
    assert!(n >= 2, "φ is defined for n >= 2");
    IntPolynomial::new(vec![-1, 1 - n, 3 - n, 1])
}

/// `x³ + (3 - n)x² + (1 - n)x + (n - 3)`: characteristic polynomial of the
/// quotient over cells `{pendant}, {attachment}, rest` of `K_{n-1}` with a
/// pendant vertex. Together with `(x + 1)^{n-3}` it gives the whole spectrum.
pub fn pendant_cubic(n: i64) -> IntPolynomial {
    assert!(n >= 3, "the pendant cubic needs n >= 3");
    IntPolynomial::new(vec![n - 3, 1 - n, 3 - n, 1])
}

/// `f_{s,t}(x) = det(xI - B)` for the quotient
/// `B = [[s-1, 1, 0], [s, 0, t], [0, 1, t-1]]` of `(K_s ∪ K_t)∇K_1`.
pub fn f_cubic(s: i64, t: i64) -> IntPolynomial {
    assert!(s >= 1 && t >= 1, "f is defined for s, t >= 1");
    IntPolynomial::new(vec![
        2 * s * t - s - t,
        s * t - 2 * t - 2 * s + 1,
        2 - t - s,
        1,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::charpoly::real_char_poly;
    use crate::gaussian::{Gaussian, GaussianMatrix};

    #[test]
    fn f_matches_quotient_determinant() {
        for s in 1..6 {
            for t in 1..6 {
                let b = GaussianMatrix::from_entries(
                    3,
                    [s - 1, 1, 0, s, 0, t, 0, 1, t - 1]
                        .iter()
                        .map(|&v| Gaussian::real(v))
                        .collect(),
                );
                assert_eq!(real_char_poly(&b).unwrap(), f_cubic(s, t));
            }
        }
        assert_eq!(f_cubic(2, 2).coeffs(), &[4, -3, -2, 1]);
        assert_eq!(f_cubic(3, 2).coeffs(), &[7, -3, -3, 1]);
    }

    #[test]
    fn pendant_cubic_times_minus_one_powers_is_the_char_poly() {
        use crate::graph::MixedGraph;
        use crate::spectra::charpoly::graph_char_poly;
        for n in 3..9usize {
            let g = MixedGraph::complete(n - 1).coalescence(0, &MixedGraph::complete(2), 0);
            let want = pendant_cubic(n as i64).mul(&IntPolynomial::new(vec![1, 1]).pow(n as u32 - 3));
            assert_eq!(graph_char_poly(&g), want);
        }
    }

    #[test]
    fn phi_vanishes_at_minus_one() {
        for n in 2..20 {
            assert_eq!(phi_cubic(n).eval_i64(-1), 0);
        }
    }
}

//! Cyclic Jacobi rotations for small dense real symmetric matrices.

use crate::gaussian::GaussianMatrix;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix given row-major, sorted descending.
pub fn symmetric_eigenvalues(n: usize, mut a: Vec<f64>) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller root of t² + 2θt - 1 = 0; signum(+0.0) is 1
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// Eigenvalues of a Hermitian Gaussian matrix, descending. The real
/// embedding doubles every eigenvalue, so after sorting the pairs are
/// collapsed by averaging.
pub fn hermitian_eigenvalues(h: &GaussianMatrix) -> Vec<f64> {
    let n = h.dim();
    let e = h.real_embedding();
    let dense: Vec<f64> = e.entries().iter().map(|g| g.re as f64).collect();
    let doubled = symmetric_eigenvalues(2 * n, dense);
    doubled
        .chunks(2)
        .map(|pair| 0.5 * (pair[0] + pair[1]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_2x2() {
        let ev = symmetric_eigenvalues(2, vec![2.0, 1.0, 1.0, 2.0]);
        assert!((ev[0] - 3.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
        let ev = symmetric_eigenvalues(3, vec![5.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0]);
        assert_eq!(ev, vec![5.0, 2.0, -1.0]);
    }

    #[test]
    fn single_arc_has_spectrum_plus_minus_one() {
        use crate::gaussian::Gaussian;
        let h = GaussianMatrix::from_entries(
            2,
            vec![Gaussian::ZERO, Gaussian::I, Gaussian::MINUS_I, Gaussian::ZERO],
        );
        let ev = hermitian_eigenvalues(&h);
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] + 1.0).abs() < 1e-14);
    }
}

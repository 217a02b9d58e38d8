use std::cmp::Ordering;

use proptest::prelude::*;
use proptest::sample::subsequence;

use hermitian_mixed::format::{parse_mg, serialize_mg};
use hermitian_mixed::gaussian::{Gaussian, Unit};
use hermitian_mixed::graph::MixedGraph;
use hermitian_mixed::spectra::charpoly::{char_poly_gaussian, real_char_poly};
use hermitian_mixed::spectra::{compare_lambda_min, graph_char_poly, graph_spectrum, IntPolynomial, Threshold};
use hermitian_mixed::switching::{
    apply_switch, coincident_cuts, holonomy, switch_matrix, switching_equivalent, x_switch, SwitchDiagonal,
};

fn graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..4, n * (n - 1) / 2)
            .prop_map(move |codes| MixedGraph::from_encoding(n, &codes).unwrap())
    })
}

fn unit() -> impl Strategy<Value = Unit> {
    prop::sample::select(Unit::ALL.to_vec())
}

fn graph_and_diagonal(max_n: usize) -> impl Strategy<Value = (MixedGraph, SwitchDiagonal)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(unit(), n).prop_map(SwitchDiagonal::new))
    })
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (MixedGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), subsequence((0..n).collect::<Vec<_>>(), 1..=n))
    })
}

/// `D g D*` when every entry stays in {0, 1, i, -i}, otherwise `g` itself.
fn closed_switch(g: &MixedGraph, d: &SwitchDiagonal) -> (MixedGraph, SwitchDiagonal) {
    match apply_switch(g, d) {
        Ok(h) => (h, d.clone()),
        Err(_) => (g.clone(), SwitchDiagonal::identity(g.n())),
    }
}

fn triangles(g: &MixedGraph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn hermitian_matrix_is_hermitian(g in graph(9)) {
        let h = g.hermitian_matrix().to_gaussian();
        prop_assert_eq!(h.conj_transpose(), h);
    }

    #[test]
    fn induced_is_principal_submatrix((g, s) in graph_and_subset(8)) {
        let sub = g.induced(&s).hermitian_matrix().to_gaussian();
        prop_assert_eq!(sub, g.hermitian_matrix().to_gaussian().principal_submatrix(&s));
    }

    #[test]
    fn underlying_commutes_with_induced((g, s) in graph_and_subset(8)) {
        prop_assert_eq!(g.induced(&s).underlying(), g.underlying().induced(&s));
    }

    #[test]
    fn text_round_trip(g in graph(9)) {
        let text = serialize_mg(&g);
        let back = parse_mg(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_mg(&back), text);
    }

    #[test]
    fn spectrum_matches_char_poly(g in graph(8)) {
        let s = graph_spectrum(&g);
        prop_assert_eq!(s.eigenvalues.len(), g.n());
        let trace: f64 = s.eigenvalues.iter().sum();
        prop_assert!(trace.abs() < 1e-9);
        prop_assert_eq!(s.char_poly.degree(), Some(g.n()));
        let dp = s.char_poly.derivative();
        for &x in &s.eigenvalues {
            let scale = 1.0 + dp.eval_f64(x).abs() + x.abs().powi(g.n() as i32);
            prop_assert!(s.char_poly.eval_f64(x).abs() / scale < 1e-9, "{} at {}", s.char_poly, x);
        }
        // det = ± constant term
        let det: f64 = s.eigenvalues.iter().product();
        let c0 = s.char_poly.coeffs()[0] as f64 * if g.n() % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((det - c0).abs() <= 1e-6 * (1.0 + c0.abs()));
    }

    #[test]
    fn real_embedding_squares_char_poly(g in graph(6)) {
        let p = graph_char_poly(&g);
        let emb = g.hermitian_matrix().to_gaussian().real_embedding();
        prop_assert_eq!(real_char_poly(&emb), Some(p.mul(&p)));
    }

    #[test]
    fn exact_comparison_agrees_with_floats(g in graph(7)) {
        let lmin = *graph_spectrum(&g).eigenvalues.last().unwrap();
        for th in Threshold::ALL {
            let c = th.value().to_f64();
            if (lmin - c).abs() > 1e-6 {
                let want = if lmin > c { Ordering::Greater } else { Ordering::Less };
                prop_assert_eq!(compare_lambda_min(&g, &th.value()), want);
            }
        }
    }

    #[test]
    fn switching_preserves_char_poly((g, d) in graph_and_diagonal(8)) {
        let switched = switch_matrix(&g.hermitian_matrix().to_gaussian(), &d);
        prop_assert!(switched.is_hermitian());
        prop_assert_eq!(real_char_poly(&switched), Some(graph_char_poly(&g)));
        if let Ok(h) = apply_switch(&g, &d) {
            prop_assert_eq!(graph_char_poly(&h), graph_char_poly(&g));
        }
    }

    #[test]
    fn triangle_holonomy_is_switching_invariant((g, d) in graph_and_diagonal(8)) {
        let switched = switch_matrix(&g.hermitian_matrix().to_gaussian(), &d);
        for [a, b, c] in triangles(&g) {
            let after = switched.get(a, b) * switched.get(b, c) * switched.get(c, a);
            prop_assert_eq!(Some(after), holonomy(&g, &[a, b, c]).map(Unit::to_gaussian));
        }
    }

    #[test]
    fn x_switching_preserves_char_poly(g in graph(7)) {
        let p = graph_char_poly(&g);
        for cut in coincident_cuts(&g) {
            let h = x_switch(&g, &cut).unwrap();
            prop_assert_eq!(graph_char_poly(&h), p.clone());
            for &(u, w, _) in &cut.crossing {
                prop_assert_eq!(h.entry(u, w), Gaussian::ONE);
            }
        }
    }

    #[test]
    fn switching_equivalence_witnesses_compose(
        (g, d1) in graph_and_diagonal(7),
        e in prop::collection::vec(unit(), 7),
    ) {
        let (h, _) = closed_switch(&g, &d1);
        let (k, _) = closed_switch(&h, &SwitchDiagonal::new(e[..g.n()].to_vec()));
        // reflexive
        let id = switching_equivalent(&g, &g).unwrap();
        prop_assert_eq!(apply_switch(&g, &id).unwrap(), g.clone());
        // symmetric
        let gh = switching_equivalent(&g, &h).unwrap();
        let hg = switching_equivalent(&h, &g).unwrap();
        prop_assert_eq!(apply_switch(&g, &gh).unwrap(), h.clone());
        prop_assert_eq!(apply_switch(&h, &hg).unwrap(), g.clone());
        // transitive: composing the two witnesses reaches k
        let hk = switching_equivalent(&h, &k).unwrap();
        let gk = hk.compose(&gh);
        prop_assert_eq!(apply_switch(&g, &gk).unwrap(), k.clone());
        prop_assert!(switching_equivalent(&g, &k).is_some());
    }

    #[test]
    fn gaussian_char_poly_of_graph_is_real(g in graph(8)) {
        let c = char_poly_gaussian(&g.hermitian_matrix().to_gaussian());
        prop_assert!(c.iter().all(|x| x.im == 0));
        let p = IntPolynomial::new(c.iter().map(|x| x.re).collect());
        prop_assert_eq!(p, graph_char_poly(&g));
    }
}

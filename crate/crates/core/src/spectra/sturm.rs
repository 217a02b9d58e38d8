//! Exact comparison of the smallest real root of an integer polynomial with a
//! quadratic irrational, via Sturm sequences over `Q`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::Signed;

use crate::graph::MixedGraph;

use super::charpoly::graph_char_poly;
use super::poly::{IntPolynomial, RatPolynomial};
use super::quadratic::QuadraticNumber;

/// Sturm chain `s_0 = p`, `s_1 = p'`, `s_{k+1} = -rem(s_{k-1}, s_k)`, each
/// member rescaled by a positive constant to keep coefficients small.
pub fn sturm_chain(p: &RatPolynomial) -> Vec<RatPolynomial> {
    let norm = |q: RatPolynomial| match q.leading() {
        Some(l) => {
            let k = l.abs().recip();
            q.scale(&k)
        }
        None => q,
    };
    let mut chain = vec![norm(p.clone())];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(norm(d));
    loop {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(norm(r.neg()));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn ord_to_sign(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Number of distinct real roots of `p` strictly below `c`, assuming
/// `p(c) != 0`.
pub fn count_roots_below(p: &RatPolynomial, c: &QuadraticNumber) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let at_neg_inf = sign_changes(chain.iter().map(|s| s.sign_at_neg_infinity()));
    let at_c = sign_changes(chain.iter().map(|s| ord_to_sign(s.eval_quadratic(c).signum())));
    at_neg_inf - at_c
}

/// Squarefree part `p / gcd(p, p')`, monic.
pub fn squarefree_part(p: &RatPolynomial) -> RatPolynomial {
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

/// Order of the smallest real root of `p` relative to `c`.
///
/// `p` must have at least one real root (characteristic polynomials of
/// Hermitian matrices have only real roots).
pub fn compare_min_root(p: &IntPolynomial, c: &QuadraticNumber) -> Ordering {
    assert!(
        p.degree().is_some_and(|d| d >= 1),
        "comparison needs a non-constant polynomial"
    );
    let q = squarefree_part(&p.to_rational());
    if q.eval_quadratic(c).is_zero() {
        // c is a root; the minimum equals c unless something lies below it
        let m = c.minimal_polynomial();
        let (rest, r) = q.div_rem(&m);
        debug_assert!(r.is_zero());
        let conjugate_below = !c.is_rational() && c.conjugate().cmp_exact(c) == Ordering::Less;
        if conjugate_below || count_roots_below(&rest, c) > 0 {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    } else if count_roots_below(&q, c) > 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Exact trichotomy of `λ_min(H(M))` against `c`.
pub fn compare_lambda_min(g: &MixedGraph, c: &QuadraticNumber) -> Ordering {
    compare_min_root(&graph_char_poly(g), c)
}

/// Memoizing comparator against a fixed threshold. Many orientations share
/// a characteristic polynomial, so census sweeps hit the cache almost always.
#[derive(Debug, Clone)]
pub struct ExactComparator {
    threshold: QuadraticNumber,
    cache: HashMap<IntPolynomial, Ordering>,
}

impl ExactComparator {
    pub fn new(threshold: QuadraticNumber) -> Self {
        ExactComparator {
            threshold,
            cache: HashMap::new(),
        }
    }

    pub fn threshold(&self) -> &QuadraticNumber {
        &self.threshold
    }

    pub fn compare_poly(&mut self, p: &IntPolynomial) -> Ordering {
        if let Some(&o) = self.cache.get(p) {
            return o;
        }
        let o = compare_min_root(p, &self.threshold);
        self.cache.insert(p.clone(), o);
        o
    }

    pub fn compare(&mut self, g: &MixedGraph) -> Ordering {
        self.compare_poly(&graph_char_poly(g))
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

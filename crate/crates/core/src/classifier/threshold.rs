//! Decision procedures for `λ_min > -(1+√5)/2` and `λ_min ≷ -√2`, with
//! certificates that can be re-checked independently of the classifier.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph::MixedGraph;
use crate::spectra::{
    compare_lambda_min, compare_min_root, f_cubic, graph_spectrum, ExactComparator, IntPolynomial,
    QuadraticNumber, Threshold,
};
use crate::switching::apply_switch;

use super::catalog::{Catalog, CatalogMatch};
use super::cograph::{underlying_family, SporadicShape, UnderlyingFamily};
use super::induced::{find_induced, ForbiddenPattern};
use super::knst::{recognize_knst, KnstError, KnstMembership};
use super::local::{
    all_quads_in_c4, all_triangles_in_c3, quad_class, quad_type_at, triangle_type_at, QuadType,
    TriangleType,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accept => "accept",
            Verdict::Reject => "reject",
        })
    }
}

/// Which of the four accepted families a graph belongs to, with the data
/// needed to rebuild it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// a relabelled switching of a scattered catalog entry
    H1 {
        shape: SporadicShape,
        matched: CatalogMatch,
    },
    /// `K_3 • K_3` or `K_3 • K_4`, blocks given in `g`'s vertex indices
    H2 {
        apex: usize,
        big: KnstMembership,
        small: KnstMembership,
    },
    /// `K_n[s,t]`
    H3(KnstMembership),
    /// `K_{n-1} • K_2`
    H4 {
        apex: usize,
        clique: KnstMembership,
        pendant: KnstMembership,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::H1 { shape, matched } => write!(f, "H1 entry={} shape={shape}", matched.entry),
            Family::H2 { big, small, .. } => {
                write!(f, "H2 K_{}•K_{}", big.s + big.t, small.s + small.t)
            }
            Family::H3(m) => write!(f, "H3 s={} t={}", m.s, m.t),
            Family::H4 { clique, .. } => write!(f, "H4 K_{}•K_2", clique.s + clique.t),
        }
    }
}

/// Why a graph was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// a triangle outside `{K_3, K_3^{2,2}, K_3^{2,3}}`
    Triangle { vertices: [usize; 3], ty: TriangleType },
    /// an induced quadrangle outside `{C_4^1, C_4^2, C_4^3}`
    Quadrangle(QuadType),
    /// an induced forbidden underlying graph; `vertices[i]` is the image of
    /// pattern vertex `i`
    Forbidden {
        pattern: ForbiddenPattern,
        vertices: Vec<usize>,
    },
    /// `(K_s ∪ K_t)∇K_1` with `t ≥ 2` outside `{(2,2), (3,2)}`; the graph is
    /// a switching of its underlying graph, whose smallest eigenvalue is the
    /// least root of `f(s,t)`
    CliqueSizes { s: usize, t: usize },
    /// sporadic underlying graph but no catalog entry matches
    NotInCatalog { shape: SporadicShape },
    /// a clique block that is not `K_n[s,t]`
    NotKnst { block: Vec<usize>, error: KnstError },
    /// no admissible family and no forbidden pattern located
    Unrecognised,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Accept(Family),
    Reject(Witness),
}

/// Structural decision plus the exact comparison of `λ_min` with
/// `-(1+√5)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub decision: Decision,
    pub exact: Ordering,
}

impl Certificate {
    pub fn verdict(&self) -> Verdict {
        match self.decision {
            Decision::Accept(_) => Verdict::Accept,
            Decision::Reject(_) => Verdict::Reject,
        }
    }

    /// The structural verdict agrees with the exact comparison.
    pub fn consistent(&self) -> bool {
        (self.verdict() == Verdict::Accept) == (self.exact == Ordering::Greater)
    }

    /// One-line human summary, e.g. `accept H3 s=4 t=3` or
    /// `reject: induced K_{1,3}, λ_min=−√3`.
    pub fn summary(&self, g: &MixedGraph) -> String {
        match &self.decision {
            Decision::Accept(fam) => format!("accept {fam}"),
            Decision::Reject(w) => format!("reject: {}", describe_witness(g, w)),
        }
    }

    /// Re-checks the certificate against `g` without trusting the classifier.
    pub fn verify(&self, g: &MixedGraph, catalog: &Catalog) -> Result<(), VerifyError> {
        let exact = compare_lambda_min(g, &Threshold::NegGolden.value());
        if exact != self.exact {
            return Err(VerifyError::ExactMismatch { claimed: self.exact, actual: exact });
        }
        match &self.decision {
            Decision::Accept(fam) => {
                if exact != Ordering::Greater {
                    return Err(VerifyError::AcceptedBelowThreshold(exact));
                }
                verify_family(g, fam, catalog)
            }
            Decision::Reject(w) => {
                if exact == Ordering::Greater {
                    return Err(VerifyError::RejectedAboveThreshold);
                }
                verify_witness(g, w, catalog)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("claimed exact comparison {claimed:?}, recomputed {actual:?}")]
    ExactMismatch { claimed: Ordering, actual: Ordering },
    #[error("accepted but λ_min is {0:?} relative to the threshold")]
    AcceptedBelowThreshold(Ordering),
    #[error("rejected but λ_min exceeds the threshold")]
    RejectedAboveThreshold,
    #[error("rebuilt family member differs from the input")]
    Rebuild,
    #[error("witness does not hold: {0}")]
    Witness(String),
}

fn verify_family(g: &MixedGraph, fam: &Family, catalog: &Catalog) -> Result<(), VerifyError> {
    let ok = match fam {
        Family::H1 { matched, .. } => {
            let entry = catalog.entry(matched.entry).ok_or(VerifyError::Rebuild)?;
            let switched = apply_switch(&entry.graph, &matched.switch).map_err(|_| VerifyError::Rebuild)?;
            matched.perm.len() == g.n() && g.induced(&matched.perm) == switched
        }
        Family::H3(m) => m.s + m.t == g.n() && g.induced(&m.order()) == MixedGraph::knst(m.s, m.t),
        Family::H2 { apex, big, small } => rebuilds_coalescence(g, *apex, big, small),
        Family::H4 { apex, clique, pendant } => rebuilds_coalescence(g, *apex, clique, pendant),
    };
    ok.then_some(()).ok_or(VerifyError::Rebuild)
}

/// `g` is the coalescence of `K_a[s,t]` and `K_b[s',t']` at `apex`.
fn rebuilds_coalescence(g: &MixedGraph, apex: usize, a: &KnstMembership, b: &KnstMembership) -> bool {
    let (oa, ob) = (a.order(), b.order());
    let (Some(ua), Some(ub)) = (oa.iter().position(|&x| x == apex), ob.iter().position(|&x| x == apex)) else {
        return false;
    };
    let glued = MixedGraph::knst(a.s, a.t).coalescence(ua, &MixedGraph::knst(b.s, b.t), ub);
    let map: Vec<usize> = oa.iter().chain(ob.iter().filter(|&&x| x != apex)).copied().collect();
    let mut seen = map.clone();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == g.n() && map.len() == g.n() && g.induced(&map) == glued
}

fn verify_witness(g: &MixedGraph, w: &Witness, catalog: &Catalog) -> Result<(), VerifyError> {
    let fail = |m: &str| Err(VerifyError::Witness(m.to_string()));
    match w {
        Witness::Triangle { vertices, ty } => match triangle_type_at(g, *vertices) {
            Ok(t) if t == *ty && !t.in_c3() => Ok(()),
            _ => fail("triangle type"),
        },
        Witness::Quadrangle(q) => match quad_type_at(g, q.cycle) {
            Ok(t) if t == *q && !t.class.in_c4() => Ok(()),
            _ => fail("quadrangle class"),
        },
        Witness::Forbidden { pattern, vertices } => {
            if g.underlying().induced(vertices) != pattern.graph() {
                return fail("pattern not induced");
            }
            if compare_lambda_min(&g.induced(vertices), &Threshold::NegGolden.value()) == Ordering::Greater {
                return fail("induced subgraph lies above the threshold");
            }
            Ok(())
        }
        Witness::CliqueSizes { s, t } => {
            let fam = underlying_family(&g.underlying());
            let shape_ok = matches!(fam, Some(UnderlyingFamily::CliquesAtVertex { s: a, t: b, .. }) if a == *s && b == *t);
            let bound = compare_min_root(&f_cubic(*s as i64, *t as i64), &Threshold::NegGolden.value());
            if shape_ok && bound != Ordering::Greater {
                Ok(())
            } else {
                fail("clique sizes")
            }
        }
        Witness::NotInCatalog { shape } => {
            let fam_ok = underlying_family(&g.underlying()) == Some(UnderlyingFamily::Sporadic(*shape));
            if fam_ok && catalog.lookup(g).is_none() {
                Ok(())
            } else {
                fail("catalog lookup")
            }
        }
        Witness::NotKnst { block, .. } => match recognize_knst(&g.induced(block)) {
            Err(_) => Ok(()),
            Ok(_) => fail("block is K_n[s,t]"),
        },
        Witness::Unrecognised => Ok(()),
    }
}

fn describe_witness(g: &MixedGraph, w: &Witness) -> String {
    match w {
        Witness::Triangle { vertices, ty } => {
            format!("induced {ty} on {vertices:?}, λ_min={}", ty.lambda_min_symbol())
        }
        Witness::Quadrangle(q) => {
            format!("induced {} on {:?}, λ_min={}", q.class, q.cycle, q.class.lambda_min_symbol())
        }
        Witness::Forbidden { pattern, vertices } => {
            format!("induced {pattern}, λ_min={}", lambda_min_label(&g.induced(vertices)))
        }
        Witness::CliqueSizes { s, t } => {
            format!("underlying (K_{s}∪K_{t})∇K_1 outside the admissible sizes")
        }
        Witness::NotInCatalog { shape } => format!("underlying {shape} but no catalog entry matches"),
        Witness::NotKnst { block, error } => format!("clique block {block:?} is not K_n[s,t]: {error}"),
        Witness::Unrecognised => "no admissible underlying family".to_string(),
    }
}

/// Exact symbol for the smallest eigenvalue when it is an integer, `-√2`,
/// `-√3` or `-(1+√5)/2`; otherwise four decimals.
pub fn lambda_min_label(g: &MixedGraph) -> String {
    let spec = graph_spectrum(g);
    let Some(lmin) = spec.lambda_min() else {
        return "none".to_string();
    };
    exact_root_label(&spec.char_poly, lmin)
}

/// Names the root of `p` near `approx` exactly when it is one of the
/// recognised closed forms.
pub fn exact_root_label(p: &IntPolynomial, approx: f64) -> String {
    let near = |c: f64| (approx - c).abs() < 1e-6;
    let k = approx.round();
    if near(k) && p.eval_i64(k as i64) == 0 {
        return minus_sign(&format!("{}", k as i64));
    }
    for th in Threshold::ALL {
        let c = th.value();
        if near(c.to_f64()) && compare_min_root(p, &c) == Ordering::Equal {
            return th.symbol().to_string();
        }
    }
    minus_sign(&format!("{approx:.4}"))
}

fn minus_sign(s: &str) -> String {
    s.replacen('-', "−", 1)
}

/// `Equal at −(1+√5)/2` style phrasing of an exact comparison.
pub fn relation_phrase(o: Ordering, th: Threshold) -> String {
    let word = match o {
        Ordering::Less => "Less",
        Ordering::Equal => "Equal",
        Ordering::Greater => "Greater",
    };
    let prep = if o == Ordering::Equal { "at" } else { "than" };
    format!("{word} {prep} {}", th.symbol())
}

fn map_back(block: &[usize], m: KnstMembership) -> KnstMembership {
    KnstMembership {
        s: m.s,
        t: m.t,
        source: m.source.iter().map(|&i| block[i]).collect(),
        sink: m.sink.iter().map(|&i| block[i]).collect(),
    }
}

fn knst_block(g: &MixedGraph, block: Vec<usize>) -> Result<KnstMembership, Witness> {
    match recognize_knst(&g.induced(&block)) {
        Ok(m) => Ok(map_back(&block, m)),
        Err(error) => Err(Witness::NotKnst { block, error }),
    }
}

/// The structural decision alone, without the exact comparison.
pub fn decide(g: &MixedGraph, catalog: &Catalog) -> Result<Decision, ClassifyError> {
    if g.n() == 0 {
        return Err(ClassifyError::Empty);
    }
    let comps = g.components().len();
    if comps != 1 {
        return Err(ClassifyError::Disconnected(comps));
    }
    Ok(match decide_connected(g, catalog) {
        Ok(f) => Decision::Accept(f),
        Err(w) => Decision::Reject(w),
    })
}

fn decide_connected(g: &MixedGraph, catalog: &Catalog) -> Result<Family, Witness> {
    all_triangles_in_c3(g).map_err(|(vertices, ty)| Witness::Triangle { vertices, ty })?;
    all_quads_in_c4(g).map_err(Witness::Quadrangle)?;
    let Some(family) = underlying_family(&g.underlying()) else {
        let u = g.underlying();
        return Err(ForbiddenPattern::ALL
            .iter()
            .find_map(|&pattern| {
                find_induced(&u, &pattern.graph()).map(|vertices| Witness::Forbidden { pattern, vertices })
            })
            .unwrap_or(Witness::Unrecognised));
    };
    match family {
        UnderlyingFamily::Sporadic(shape) => catalog
            .lookup(g)
            .map(|matched| Family::H1 { shape, matched })
            .ok_or(Witness::NotInCatalog { shape }),
        UnderlyingFamily::CliquesAtVertex { t: 0, .. } => knst_block(g, (0..g.n()).collect()).map(Family::H3),
        UnderlyingFamily::CliquesAtVertex { s, t, apex, big, small } => {
            if t >= 2 && !(t == 2 && (s == 2 || s == 3)) {
                return Err(Witness::CliqueSizes { s, t });
            }
            let with_apex = |side: &[usize]| {
                let mut b = side.to_vec();
                b.push(apex);
                b.sort_unstable();
                b
            };
            let big = knst_block(g, with_apex(&big))?;
            let small = knst_block(g, with_apex(&small))?;
            Ok(if t == 1 {
                Family::H4 { apex, clique: big, pendant: small }
            } else {
                Family::H2 { apex, big, small }
            })
        }
    }
}

/// Classifies a connected mixed graph against `-(1+√5)/2` using the pinned
/// catalog.
pub fn classify_threshold(g: &MixedGraph) -> Result<Certificate, ClassifyError> {
    let mut cmp = ExactComparator::new(Threshold::NegGolden.value());
    classify_threshold_with(g, Catalog::builtin(), &mut cmp)
}

/// As [`classify_threshold`], with an explicit catalog and a comparator whose
/// cache can be reused across many graphs.
pub fn classify_threshold_with(
    g: &MixedGraph,
    catalog: &Catalog,
    cmp: &mut ExactComparator,
) -> Result<Certificate, ClassifyError> {
    let decision = decide(g, catalog)?;
    Ok(Certificate {
        decision,
        exact: cmp.compare(g),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sqrt2Family {
    Knst(KnstMembership),
    /// a quadrangle of holonomy `-1`
    C4(QuadType),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sqrt2Certificate {
    pub strict: bool,
    pub accepted: bool,
    pub family: Option<Sqrt2Family>,
    /// `λ_min` compared with `-√2`
    pub exact: Ordering,
    pub note: Option<String>,
}

/// `λ_min > -√2` (strict) or `λ_min ≥ -√2` (non-strict, stated for `n ≥ 4`).
pub fn classify_sqrt2(g: &MixedGraph, strict: bool) -> Result<Sqrt2Certificate, ClassifyError> {
    if g.n() == 0 {
        return Err(ClassifyError::Empty);
    }
    let comps = g.components().len();
    if comps != 1 {
        return Err(ClassifyError::Disconnected(comps));
    }
    let exact = compare_lambda_min(g, &QuadraticNumber::neg_sqrt2());
    let mut family = recognize_knst(g).ok().map(Sqrt2Family::Knst);
    let mut note = None;
    if family.is_none() && !strict {
        if g.n() >= 4 {
            family = quad_class(g)
                .ok()
                .filter(|q| q.class.in_c4())
                .map(Sqrt2Family::C4);
        } else {
            note = Some(format!(
                "n = {} is below the n ≥ 4 range of the non-strict classification; λ_min is {}",
                g.n(),
                relation_phrase(exact, Threshold::NegSqrt2)
            ));
        }
    }
    Ok(Sqrt2Certificate {
        strict,
        accepted: family.is_some(),
        family,
        exact,
        note,
    })
}

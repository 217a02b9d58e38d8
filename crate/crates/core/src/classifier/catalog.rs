//! The scattered catalog: isomorphism-class representatives of the mixed
//! graphs on the four sporadic underlying graphs whose smallest eigenvalue
//! exceeds `-(1+√5)/2`.
//!
//! The file is generated by the census and pinned under `data/`. Layout,
//! one record per line, `#` starting a comment:
//!
//! ```text
//! entry <id> <shape> n=<n> class=<k> edges=<u--v|u->v,...> charpoly=<c0,c1,...> lambda-min=<float>
//! reconcile <shape> expected-pictures=<a> labelled-survivors=<b> iso-classes=<c> switching-iso-classes=<d>
//! ```
//!
//! `class` numbers the combined switching-and-isomorphism classes across the
//! whole file; `charpoly` lists coefficients constant term first.

use std::fmt::Write as _;
use std::sync::OnceLock;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{EdgeKind, EdgeSpec, MixedGraph};
use crate::spectra::{graph_char_poly, IntPolynomial};
use crate::switching::{relabelled_switching, SwitchDiagonal};

use super::cograph::SporadicShape;

const BUILTIN: &str = include_str!("../../data/scattered_catalog.txt");

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: usize,
    pub shape: SporadicShape,
    pub class: usize,
    pub graph: MixedGraph,
    pub char_poly: IntPolynomial,
    pub lambda_min: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconciliation {
    pub shape: SporadicShape,
    pub expected_pictures: usize,
    pub labelled_survivors: usize,
    pub iso_classes: usize,
    pub switching_iso_classes: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Catalog {
    pub comments: Vec<String>,
    pub entries: Vec<CatalogEntry>,
    pub reconciliations: Vec<Reconciliation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("catalog line {line}: {message}")]
pub struct CatalogError {
    pub line: usize,
    pub message: String,
}

/// `apply_switch(entry.graph, switch) == g.induced(&perm)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogMatch {
    pub entry: usize,
    pub perm: Vec<usize>,
    pub switch: SwitchDiagonal,
}

/// Edge list in catalog notation, pairs in increasing order.
pub fn edges_token(g: &MixedGraph) -> String {
    g.edges()
        .map(|(u, v, k)| match k {
            EdgeKind::ArcOut => format!("{u}->{v}"),
            EdgeKind::ArcIn => format!("{v}->{u}"),
            _ => format!("{u}--{v}"),
        })
        .join(",")
}

fn parse_edges(n: usize, s: &str) -> Result<MixedGraph, String> {
    let mut edges = Vec::new();
    for tok in s.split(',').filter(|t| !t.is_empty()) {
        let (a, b, spec) = if let Some((a, b)) = tok.split_once("->") {
            (a, b, EdgeSpec::Arc)
        } else if let Some((a, b)) = tok.split_once("--") {
            (a, b, EdgeSpec::Undirected)
        } else {
            return Err(format!("bad edge `{tok}`"));
        };
        let a = a.parse().map_err(|_| format!("bad vertex in `{tok}`"))?;
        let b = b.parse().map_err(|_| format!("bad vertex in `{tok}`"))?;
        edges.push((a, b, spec));
    }
    MixedGraph::build(n, &edges).map_err(|e| e.to_string())
}

fn fields<'a>(parts: &[&'a str]) -> Result<std::collections::HashMap<&'a str, &'a str>, String> {
    parts
        .iter()
        .map(|p| p.split_once('=').ok_or_else(|| format!("expected key=value, got `{p}`")))
        .collect()
}

fn get<'a>(f: &std::collections::HashMap<&str, &'a str>, key: &str) -> Result<&'a str, String> {
    f.get(key).copied().ok_or_else(|| format!("missing `{key}`"))
}

fn num<T: std::str::FromStr>(s: &str, key: &str) -> Result<T, String> {
    s.parse().map_err(|_| format!("bad value for `{key}`: `{s}`"))
}

impl Catalog {
    /// The pinned catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(BUILTIN).expect("pinned catalog parses"))
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut cat = Catalog::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| CatalogError { line, message };
            if let Some(c) = raw.trim_start().strip_prefix('#') {
                cat.comments.push(c.trim().to_string());
                continue;
            }
            let body = raw.trim();
            if body.is_empty() {
                continue;
            }
            let parts: Vec<&str> = body.split_whitespace().collect();
            match parts[0] {
                "entry" if parts.len() == 8 => {
                    let id = num(parts[1], "id").map_err(err)?;
                    let shape = SporadicShape::from_token(parts[2])
                        .ok_or_else(|| err(format!("unknown shape `{}`", parts[2])))?;
                    let f = fields(&parts[3..]).map_err(err)?;
                    let n = num(get(&f, "n").map_err(err)?, "n").map_err(err)?;
                    let class = num(get(&f, "class").map_err(err)?, "class").map_err(err)?;
                    let graph = parse_edges(n, get(&f, "edges").map_err(err)?).map_err(err)?;
                    let coeffs = get(&f, "charpoly")
                        .map_err(err)?
                        .split(',')
                        .map(|c| num::<i64>(c, "charpoly"))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(err)?;
                    let lambda_min = num(get(&f, "lambda-min").map_err(err)?, "lambda-min").map_err(err)?;
                    cat.entries.push(CatalogEntry {
                        id,
                        shape,
                        class,
                        graph,
                        char_poly: IntPolynomial::new(coeffs),
                        lambda_min,
                    });
                }
                "reconcile" if parts.len() == 6 => {
                    let shape = SporadicShape::from_token(parts[1])
                        .ok_or_else(|| err(format!("unknown shape `{}`", parts[1])))?;
                    let f = fields(&parts[2..]).map_err(err)?;
                    let field = |k: &str| -> Result<usize, CatalogError> {
                        num(get(&f, k).map_err(err)?, k).map_err(err)
                    };
                    cat.reconciliations.push(Reconciliation {
                        shape,
                        expected_pictures: field("expected-pictures")?,
                        labelled_survivors: field("labelled-survivors")?,
                        iso_classes: field("iso-classes")?,
                        switching_iso_classes: field("switching-iso-classes")?,
                    });
                }
                other => return Err(err(format!("unrecognised record `{other}`"))),
            }
        }
        Ok(cat)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                let _ = writeln!(out, "# {c}");
            }
        }
        for e in &self.entries {
            let _ = writeln!(
                out,
                "entry {} {} n={} class={} edges={} charpoly={} lambda-min={:.10}",
                e.id,
                e.shape.token(),
                e.graph.n(),
                e.class,
                edges_token(&e.graph),
                e.char_poly.coeffs().iter().join(","),
                e.lambda_min
            );
        }
        for r in &self.reconciliations {
            let _ = writeln!(
                out,
                "reconcile {} expected-pictures={} labelled-survivors={} iso-classes={} switching-iso-classes={}",
                r.shape.token(),
                r.expected_pictures,
                r.labelled_survivors,
                r.iso_classes,
                r.switching_iso_classes
            );
        }
        out
    }

    /// Finds an entry that `g` is a relabelled switching of.
    pub fn lookup(&self, g: &MixedGraph) -> Option<CatalogMatch> {
        let cp = graph_char_poly(g);
        self.entries
            .iter()
            .filter(|e| e.graph.n() == g.n() && e.char_poly == cp)
            .find_map(|e| {
                relabelled_switching(&e.graph, g).map(|(perm, switch)| CatalogMatch {
                    entry: e.id,
                    perm,
                    switch,
                })
            })
    }

    pub fn entry(&self, id: usize) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# demo\n\
entry 0 K22 n=4 class=0 edges=0->1,0--3,1--2,2--3 charpoly=0,0,-4,0,1 lambda-min=-1.4142135624\n\
reconcile K22 expected-pictures=3 labelled-survivors=20 iso-classes=3 switching-iso-classes=1\n";
        let cat = Catalog::parse(text).unwrap();
        assert_eq!(cat.entries.len(), 1);
        assert_eq!(cat.entries[0].graph.kind(0, 1), EdgeKind::ArcOut);
        assert_eq!(cat.to_text(), text);
        let err = Catalog::parse("entry x\n").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn builtin_entries_are_consistent() {
        let cat = Catalog::builtin();
        for e in &cat.entries {
            assert_eq!(graph_char_poly(&e.graph), e.char_poly, "entry {}", e.id);
            assert_eq!(super::super::cograph::underlying_family(&e.graph.underlying()),
                Some(super::super::cograph::UnderlyingFamily::Sporadic(e.shape)));
            let m = cat.lookup(&e.graph).unwrap();
            assert_eq!(cat.entry(m.entry).unwrap().class, e.class);
        }
    }
}

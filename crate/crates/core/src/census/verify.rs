//! Theorem-level census: every orientation of every small connected graph is
//! classified structurally and compared exactly with `-(1+√5)/2`.

use std::cmp::Ordering;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classifier::catalog::{edges_token, Catalog};
use crate::classifier::threshold::{classify_threshold_with, Decision, Family, Verdict};
use crate::classifier::underlying_family;
use crate::graph::MixedGraph;
use crate::spectra::{ExactComparator, Threshold};

use super::enumerate::{enumerate_connected_graphs, orientation_at, Orientations};
use super::CensusError;

/// Default seed for the sampled part of the census.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
/// Default number of sampled orientations outside the admissible families.
pub const DEFAULT_SAMPLES: usize = 10_000;
/// Largest `n_max` supported.
pub const MAX_VERIFY_N: usize = 6;
/// Orientation indices per work unit.
const CHUNK: u64 = 19_683;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub n_max: usize,
    /// exhaust every graph at `n = 6` instead of sampling
    pub deep: bool,
    pub jobs: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            n_max: 5,
            deep: false,
            jobs: 1,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    /// every orientation
    Exhaustive,
    /// a seeded sample of orientation indices
    Sampled,
}

/// Counts for one underlying graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub scanned: u64,
    pub accepted: u64,
    pub exact_greater: u64,
    pub exact_equal: u64,
    pub exact_less: u64,
    /// accepted counts for H1..H4
    pub families: [u64; 4],
}

impl Tally {
    pub fn merge(&mut self, o: &Tally) {
        self.scanned += o.scanned;
        self.accepted += o.accepted;
        self.exact_greater += o.exact_greater;
        self.exact_equal += o.exact_equal;
        self.exact_less += o.exact_less;
        for (a, b) in self.families.iter_mut().zip(o.families) {
            *a += b;
        }
    }

    pub fn rejected(&self) -> u64 {
        self.scanned - self.accepted
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRow {
    pub graph: MixedGraph,
    /// underlying graph is one of the admissible shapes
    pub admissible_shape: bool,
    pub coverage: Coverage,
    pub tally: Tally,
}

/// A graph on which the structural verdict and the exact comparison differ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mismatch {
    pub n: usize,
    pub encoding: Vec<u8>,
    pub accepted: bool,
    pub exact: Ordering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub config: CensusConfig,
    pub rows: Vec<GraphRow>,
    pub totals: Tally,
    pub mismatches: Vec<Mismatch>,
}

impl CensusReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn scope(&self) -> String {
        let c = &self.config;
        if c.n_max < MAX_VERIFY_N || c.deep {
            format!("n=1..{} exhaustive", c.n_max)
        } else {
            format!(
                "n=1..5 exhaustive; n=6 admissible shapes exhaustive, other graphs {} samples (seed {})",
                c.samples, c.seed
            )
        }
    }

    /// Deterministic `key: value` text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let t = &self.totals;
        let _ = writeln!(out, "census: main-theorem");
        let _ = writeln!(out, "threshold: {}", Threshold::NegGolden.symbol());
        let _ = writeln!(out, "scope: {}", self.scope());
        let _ = writeln!(out, "underlying-graphs: {}", self.rows.len());
        let _ = writeln!(out, "graphs-scanned: {}", t.scanned);
        let _ = writeln!(out, "accepted: {}", t.accepted);
        let _ = writeln!(out, "rejected: {}", t.rejected());
        for (i, f) in t.families.iter().enumerate() {
            let _ = writeln!(out, "accepted-H{}: {f}", i + 1);
        }
        let _ = writeln!(out, "exact-greater: {}", t.exact_greater);
        let _ = writeln!(out, "exact-equal: {}", t.exact_equal);
        let _ = writeln!(out, "exact-less: {}", t.exact_less);
        let _ = writeln!(out, "mismatches: {}", self.mismatches.len());
        let _ = writeln!(out, "verified: {}", self.verified());
        for m in &self.mismatches {
            let codes: String = m.encoding.iter().map(|c| char::from(b'0' + c)).collect();
            let _ = writeln!(out, "mismatch: n={} encoding={codes} accepted={} exact={:?}", m.n, m.accepted, m.exact);
        }
        for r in &self.rows {
            let _ = writeln!(out);
            let _ = writeln!(out, "graph: n={} edges={}", r.graph.n(), edges_token(&r.graph));
            let _ = writeln!(
                out,
                "coverage: {}",
                match r.coverage {
                    Coverage::Exhaustive => "exhaustive",
                    Coverage::Sampled => "sampled",
                }
            );
            let _ = writeln!(out, "admissible-shape: {}", r.admissible_shape);
            let _ = writeln!(out, "scanned: {}", r.tally.scanned);
            let _ = writeln!(out, "accepted: {}", r.tally.accepted);
            let _ = writeln!(
                out,
                "exact: greater={} equal={} less={}",
                r.tally.exact_greater, r.tally.exact_equal, r.tally.exact_less
            );
        }
        out
    }
}

#[derive(Clone, Debug)]
enum Work {
    Range { row: usize, start: u64, end: u64 },
    Indices { row: usize, indices: Vec<u64> },
}

impl Work {
    fn row(&self) -> usize {
        match self {
            Work::Range { row, .. } | Work::Indices { row, .. } => *row,
        }
    }
}

fn family_slot(f: &Family) -> usize {
    match f {
        Family::H1 { .. } => 0,
        Family::H2 { .. } => 1,
        Family::H3(_) => 2,
        Family::H4 { .. } => 3,
    }
}

fn check_one(g: &MixedGraph, catalog: &Catalog, cmp: &mut ExactComparator, tally: &mut Tally, bad: &mut Vec<Mismatch>) {
    let cert = classify_threshold_with(g, catalog, cmp).expect("census graphs are connected");
    tally.scanned += 1;
    match cert.exact {
        Ordering::Greater => tally.exact_greater += 1,
        Ordering::Equal => tally.exact_equal += 1,
        Ordering::Less => tally.exact_less += 1,
    }
    if let Decision::Accept(f) = &cert.decision {
        tally.accepted += 1;
        tally.families[family_slot(f)] += 1;
    }
    if !cert.consistent() {
        bad.push(Mismatch {
            n: g.n(),
            encoding: g.encoding(),
            accepted: cert.verdict() == Verdict::Accept,
            exact: cert.exact,
        });
    }
}

fn run_work(
    work: &Work,
    graphs: &[MixedGraph],
    catalog: &Catalog,
    cmp: &mut ExactComparator,
) -> Result<(usize, Tally, Vec<Mismatch>), CensusError> {
    let mut tally = Tally::default();
    let mut bad = Vec::new();
    match work {
        Work::Range { row, start, end } => {
            for g in Orientations::range(&graphs[*row], *start, *end)? {
                check_one(&g, catalog, cmp, &mut tally, &mut bad);
            }
        }
        Work::Indices { row, indices } => {
            for &i in indices {
                let g = orientation_at(&graphs[*row], i)?;
                check_one(&g, catalog, cmp, &mut tally, &mut bad);
            }
        }
    }
    Ok((work.row(), tally, bad))
}

fn comparator() -> ExactComparator {
    ExactComparator::new(Threshold::NegGolden.value())
}

#[cfg(feature = "parallel")]
fn execute(
    work: &[Work],
    graphs: &[MixedGraph],
    catalog: &Catalog,
    jobs: usize,
) -> Result<Vec<(usize, Tally, Vec<Mismatch>)>, CensusError> {
    use rayon::prelude::*;
    if jobs <= 1 {
        return execute_sequential(work, graphs, catalog);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CensusError::ThreadPool(e.to_string()))?;
    pool.install(|| {
        work.par_iter()
            .map_init(comparator, |cmp, w| run_work(w, graphs, catalog, cmp))
            .collect()
    })
}

#[cfg(not(feature = "parallel"))]
fn execute(
    work: &[Work],
    graphs: &[MixedGraph],
    catalog: &Catalog,
    _jobs: usize,
) -> Result<Vec<(usize, Tally, Vec<Mismatch>)>, CensusError> {
    execute_sequential(work, graphs, catalog)
}

fn execute_sequential(
    work: &[Work],
    graphs: &[MixedGraph],
    catalog: &Catalog,
) -> Result<Vec<(usize, Tally, Vec<Mismatch>)>, CensusError> {
    let mut cmp = comparator();
    work.iter().map(|w| run_work(w, graphs, catalog, &mut cmp)).collect()
}

/// Runs the census described by `config` against `catalog`.
pub fn verify_main_theorem_with(config: &CensusConfig, catalog: &Catalog) -> Result<CensusReport, CensusError> {
    if config.n_max > MAX_VERIFY_N {
        return Err(CensusError::ScopeTooLarge {
            n_max: config.n_max,
            max: MAX_VERIFY_N,
        });
    }
    let mut graphs = Vec::new();
    let mut rows = Vec::new();
    for n in 1..=config.n_max {
        for g in enumerate_connected_graphs(n)? {
            let admissible_shape = underlying_family(&g).is_some();
            let coverage = if n < MAX_VERIFY_N || config.deep || admissible_shape {
                Coverage::Exhaustive
            } else {
                Coverage::Sampled
            };
            rows.push(GraphRow {
                graph: g.clone(),
                admissible_shape,
                coverage,
                tally: Tally::default(),
            });
            graphs.push(g);
        }
    }

    let mut work = Vec::new();
    for (row, r) in rows.iter().enumerate() {
        if r.coverage == Coverage::Exhaustive {
            let total = Orientations::range(&r.graph, 0, 0)?.total();
            let mut start = 0;
            while start < total {
                let end = (start + CHUNK).min(total);
                work.push(Work::Range { row, start, end });
                start = end;
            }
        }
    }
    let sampled: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].coverage == Coverage::Sampled).collect();
    if !sampled.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut picks: Vec<Vec<u64>> = vec![Vec::new(); rows.len()];
        for _ in 0..config.samples {
            let row = sampled[rng.gen_range(0..sampled.len())];
            let total = Orientations::range(&rows[row].graph, 0, 0)?.total();
            picks[row].push(rng.gen_range(0..total));
        }
        for (row, mut indices) in picks.into_iter().enumerate() {
            indices.sort_unstable();
            for chunk in indices.chunks(CHUNK as usize) {
                work.push(Work::Indices {
                    row,
                    indices: chunk.to_vec(),
                });
            }
        }
    }

    let results = execute(&work, &graphs, catalog, config.jobs)?;
    let mut totals = Tally::default();
    let mut mismatches = Vec::new();
    for (row, tally, bad) in results {
        rows[row].tally.merge(&tally);
        totals.merge(&tally);
        mismatches.extend(bad);
    }
    mismatches.sort();
    Ok(CensusReport {
        config: config.clone(),
        rows,
        totals,
        mismatches,
    })
}

/// Runs the census against the pinned catalog.
pub fn verify_main_theorem(config: &CensusConfig) -> Result<CensusReport, CensusError> {
    verify_main_theorem_with(config, Catalog::builtin())
}

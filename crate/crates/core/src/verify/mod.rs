//! Exhaustive checking of the girth bound `p+ >= ⌈g/2⌉ - 1`, its extremal
//! families, and the supporting lemmas.
//!
//! A sweep walks every connected underlying graph up to a given order and
//! every switching class of its signings. Each signed graph becomes a
//! [`VerificationRecord`]; the [`VerificationReport`] aggregates them together
//! with independent family tables.

pub mod lemmas;
pub mod readings;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::enumerate::{enumerate_connected_codes, graph_from_code, CanonicalCode, SwitchingClasses};
use crate::families::{recognize, FamilyLabel};
use crate::graph::SignedGraph;
use crate::inertia::{exact_inertia, float_spectrum, FloatError, InertiaTriple};
use crate::sgf::write_sgf_inline;
use crate::structure::{girth, is_balanced, is_connected};

pub use lemmas::{lemma_checks, LemmaOutcome};
pub use readings::{check_equality_families, Reading};
pub use tables::{
    cycle_class_table, cycle_star_table, theta_fixtures, unicyclic_audit, CycleClassTable,
    CycleStarTable, ThetaFixture, UnicyclicAudit,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_MAX_N: usize = 7;
pub const MAX_SWEEP_ORDER: usize = 8;
pub const CYCLE_TABLE_MAX_N: usize = 32;
pub const CYCLE_STAR_MAX_GIRTH: usize = 12;
pub const CYCLE_STAR_MAX_T: usize = 3;
pub const UNICYCLIC_MAX_GIRTH: usize = 10;
pub const UNICYCLIC_MAX_STARS: usize = 3;
pub const UNICYCLIC_MAX_LEAVES: usize = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is acyclic, girth undefined")]
    Acyclic,
    #[error("bound violated: p+={} below floor {} for {}", .0.inertia.p_plus, .0.bound_floor, .0.graph)]
    BoundViolated(Box<VerificationRecord>),
    #[error("engines disagree on {graph}: exact {exact}, floating {float}")]
    EngineMismatch { graph: String, exact: InertiaTriple, float: InertiaTriple },
    #[error(transparent)]
    Float(#[from] FloatError),
    #[error("sweep order {0} outside 3..={MAX_SWEEP_ORDER}")]
    UnsupportedOrder(usize),
    #[error("jobs must be at least 1")]
    NoWorkers,
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Position of `p+` relative to the floor `⌈g/2⌉ - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Below the floor: a counterexample to the bound.
    Strict,
    Equality,
    PlusOne,
    Higher,
}

impl Status {
    pub fn from_counts(p_plus: usize, floor: usize) -> Status {
        match p_plus.checked_sub(floor) {
            None => Status::Strict,
            Some(0) => Status::Equality,
            Some(1) => Status::PlusOne,
            Some(_) => Status::Higher,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Strict => "strict",
            Status::Equality => "equality",
            Status::PlusOne => "plus-one",
            Status::Higher => "higher",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn bound_floor(girth: usize) -> usize {
    girth.div_ceil(2).saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Discrepancy {
    pub statement: &'static str,
    pub detail: String,
}

impl Discrepancy {
    pub fn new(statement: &'static str, detail: String) -> Self {
        Discrepancy { statement, detail }
    }
}

fn display<T: fmt::Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// Sweep position of a record: canonical code and switching class index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RecordKey {
    #[serde(serialize_with = "display")]
    pub code: CanonicalCode,
    pub class: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    #[serde(flatten)]
    pub key: Option<RecordKey>,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub girth: usize,
    pub balanced: bool,
    #[serde(flatten)]
    pub inertia: InertiaTriple,
    pub bound_floor: usize,
    pub status: Status,
    #[serde(serialize_with = "display")]
    pub family: FamilyLabel,
    pub discrepancies: Vec<Discrepancy>,
}

/// Which inertia engines a record is computed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engines {
    /// Exact counts, cross-checked against the floating spectrum.
    #[default]
    Both,
    ExactOnly,
    FloatOnly,
}

fn inertia_of(g: &SignedGraph, engines: Engines) -> Result<InertiaTriple, VerifyError> {
    match engines {
        Engines::ExactOnly => Ok(exact_inertia(g)),
        Engines::FloatOnly => Ok(float_spectrum(g)?.inertia()),
        Engines::Both => {
            let exact = exact_inertia(g);
            let float = float_spectrum(g)?.inertia();
            if exact != float {
                return Err(VerifyError::EngineMismatch { graph: write_sgf_inline(g), exact, float });
            }
            Ok(exact)
        }
    }
}

/// Record for a connected graph with a cycle. Never fails on a violated
/// bound; the status is [`Status::Strict`] instead.
pub fn evaluate(g: &SignedGraph, engines: Engines) -> Result<VerificationRecord, VerifyError> {
    if !is_connected(g).map_err(|_| VerifyError::Disconnected)? {
        return Err(VerifyError::Disconnected);
    }
    let girth = girth(g).ok_or(VerifyError::Acyclic)?;
    let inertia = inertia_of(g, engines)?;
    let floor = bound_floor(girth);
    Ok(VerificationRecord {
        key: None,
        graph: write_sgf_inline(g),
        n: g.n(),
        m: g.m(),
        girth,
        balanced: is_balanced(g),
        inertia,
        bound_floor: floor,
        status: Status::from_counts(inertia.p_plus, floor),
        family: recognize(g).map_err(|_| VerifyError::Disconnected)?,
        discrepancies: Vec::new(),
    })
}

/// Record for `g`, failing only when `p+` falls below the floor.
pub fn check_bound(g: &SignedGraph) -> Result<VerificationRecord, VerifyError> {
    let rec = evaluate(g, Engines::Both)?;
    if rec.status == Status::Strict {
        return Err(VerifyError::BoundViolated(Box::new(rec)));
    }
    Ok(rec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOptions {
    pub max_n: usize,
    /// Worker threads; never affects the report.
    #[serde(skip)]
    pub jobs: usize,
    pub seed: u64,
    pub lemma_checks: bool,
    pub engines: Engines,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_n: DEFAULT_MAX_N,
            jobs: 1,
            seed: DEFAULT_SEED,
            lemma_checks: false,
            engines: Engines::Both,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaTally {
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl LemmaTally {
    fn record(&mut self, outcome: &LemmaOutcome, graph: &str) {
        self.applicable += 1;
        if outcome.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.first_failure.get_or_insert_with(|| format!("{graph} ({})", outcome.detail));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatusCount {
    pub n: usize,
    pub girth: usize,
    pub status: Status,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancySummary {
    pub statement: &'static str,
    pub detail: String,
    pub count: usize,
    pub witness: String,
    #[serde(serialize_with = "display")]
    pub witness_family: FamilyLabel,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderCount {
    pub n: usize,
    pub underlying: usize,
    pub acyclic: usize,
    pub records: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// Records below the floor.
    pub bound_violations: usize,
    /// Floor records that are neither a cycle nor balanced complete multipartite.
    pub equality_structure_violations: usize,
    /// Records where `p+ = 1` and balanced complete multipartite disagree.
    pub p_plus_one_mismatches: usize,
    /// Records outside the excluded families with `p+ < ⌈g/2⌉`, per reading.
    pub improved_bound_violations_stated: usize,
    pub improved_bound_violations_corrected: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub options: SweepOptions,
    pub orders: Vec<OrderCount>,
    pub records: usize,
    pub checks: Checks,
    pub totals: Vec<StatusCount>,
    pub counterexamples: Vec<VerificationRecord>,
    pub discrepancies: Vec<DiscrepancySummary>,
    pub lemma_checks: Option<BTreeMap<&'static str, LemmaTally>>,
    pub cycle_classes: CycleClassTable,
    pub cycle_star_classes: CycleStarTable,
    pub unicyclic_parity: UnicyclicAudit,
    pub theta_fixtures: Vec<ThetaFixture>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub summary: Summary,
    pub records: Vec<VerificationRecord>,
}

impl VerificationReport {
    /// The summary object on the first line, then one record per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = serde_json::to_string(&self.summary).expect("serializable summary");
        out.push('\n');
        for rec in &self.records {
            out.push_str(&serde_json::to_string(rec).expect("serializable record"));
            out.push('\n');
        }
        out
    }

    pub fn bound_holds(&self) -> bool {
        self.summary.counterexamples.is_empty()
    }
}

struct GraphResult {
    records: Vec<VerificationRecord>,
    lemmas: Vec<(usize, LemmaOutcome)>,
    acyclic: bool,
}

fn record_rng(seed: u64, key: RecordKey) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ key.code.bits.rotate_left(17) ^ key.class.rotate_left(41));
    rng.set_stream(key.code.n as u64);
    rng
}

fn process_graph(code: CanonicalCode, opts: &SweepOptions) -> Result<GraphResult, VerifyError> {
    let base = graph_from_code(code);
    if girth(&base).is_none() {
        return Ok(GraphResult { records: Vec::new(), lemmas: Vec::new(), acyclic: true });
    }
    let classes = SwitchingClasses::new(&base).map_err(|_| VerifyError::Disconnected)?;
    let mut records = Vec::with_capacity(classes.count() as usize);
    let mut lemmas = Vec::new();
    for class in 0..classes.count() {
        let g = classes.signing(class);
        let key = RecordKey { code, class };
        let mut rec = evaluate(&g, opts.engines)?;
        rec.key = Some(key);
        let rec = check_equality_families(rec);
        if opts.lemma_checks {
            let mut rng = record_rng(opts.seed, key);
            for outcome in lemma_checks(&g, rec.inertia, &rec.family, &mut rng) {
                lemmas.push((records.len(), outcome));
            }
        } else {
            lemmas.push((records.len(), lemmas::p_plus_one_multipartite(&g, rec.inertia)));
        }
        records.push(rec);
    }
    Ok(GraphResult { records, lemmas, acyclic: false })
}

/// Every connected graph on `3..=max_n` vertices, every switching class.
pub fn sweep(opts: &SweepOptions) -> Result<VerificationReport, VerifyError> {
    if !(3..=MAX_SWEEP_ORDER).contains(&opts.max_n) {
        return Err(VerifyError::UnsupportedOrder(opts.max_n));
    }
    if opts.jobs == 0 {
        return Err(VerifyError::NoWorkers);
    }
    let mut work = Vec::new();
    for n in 3..=opts.max_n {
        work.extend(enumerate_connected_codes(n).expect("order checked above"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let results: Vec<GraphResult> =
        pool.install(|| work.par_iter().map(|&code| process_graph(code, opts)).collect::<Result<_, _>>())?;

    let mut orders: BTreeMap<usize, OrderCount> = (3..=opts.max_n)
        .map(|n| (n, OrderCount { n, ..OrderCount::default() }))
        .collect();
    let mut checks = Checks::default();
    let mut totals: BTreeMap<(usize, usize, Status), usize> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut discrepancies: BTreeMap<(&'static str, String), DiscrepancySummary> = BTreeMap::new();
    let mut tallies: BTreeMap<&'static str, LemmaTally> = BTreeMap::new();
    if opts.lemma_checks {
        for name in lemmas::ALL {
            tallies.insert(name, LemmaTally::default());
        }
    }
    let mut records = Vec::new();

    for (code, result) in work.iter().zip(results) {
        let order = orders.get_mut(&code.n).expect("order in range");
        order.underlying += 1;
        if result.acyclic {
            order.acyclic += 1;
            continue;
        }
        order.records += result.records.len();
        for (i, outcome) in &result.lemmas {
            let graph = &result.records[*i].graph;
            if outcome.name == lemmas::P_PLUS_ONE_MULTIPARTITE && !outcome.passed {
                checks.p_plus_one_mismatches += 1;
            }
            if opts.lemma_checks {
                tallies.get_mut(outcome.name).expect("known lemma").record(outcome, graph);
            }
        }
        for rec in result.records {
            *totals.entry((rec.n, rec.girth, rec.status)).or_default() += 1;
            if rec.status == Status::Strict {
                checks.bound_violations += 1;
                counterexamples.push(rec.clone());
            }
            if rec.status < Status::PlusOne {
                if !readings::excluded_from_improved_bound(&rec.family, Reading::Stated) {
                    checks.improved_bound_violations_stated += 1;
                }
                if !readings::excluded_from_improved_bound(&rec.family, Reading::Corrected) {
                    checks.improved_bound_violations_corrected += 1;
                }
            }
            for d in &rec.discrepancies {
                if d.statement == readings::statement::EQUALITY_STRUCTURE {
                    checks.equality_structure_violations += 1;
                }
                discrepancies
                    .entry((d.statement, d.detail.clone()))
                    .or_insert_with(|| DiscrepancySummary {
                        statement: d.statement,
                        detail: d.detail.clone(),
                        count: 0,
                        witness: rec.graph.clone(),
                        witness_family: rec.family.clone(),
                    })
                    .count += 1;
            }
            records.push(rec);
        }
    }

    let summary = Summary {
        options: opts.clone(),
        orders: orders.into_values().collect(),
        records: records.len(),
        checks,
        totals: totals
            .into_iter()
            .map(|((n, girth, status), count)| StatusCount { n, girth, status, count })
            .collect(),
        counterexamples,
        discrepancies: discrepancies.into_values().collect(),
        lemma_checks: opts.lemma_checks.then_some(tallies),
        cycle_classes: cycle_class_table(CYCLE_TABLE_MAX_N),
        cycle_star_classes: cycle_star_table(CYCLE_STAR_MAX_GIRTH, CYCLE_STAR_MAX_T),
        unicyclic_parity: unicyclic_audit(UNICYCLIC_MAX_GIRTH, UNICYCLIC_MAX_STARS, UNICYCLIC_MAX_LEAVES),
        theta_fixtures: theta_fixtures()?,
    };
    Ok(VerificationReport { summary, records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete_multipartite, make_cycle, make_path, make_theta, ThetaSigns};
    use crate::graph::Sign;

    #[test]
    fn status_buckets() {
        assert_eq!(Status::from_counts(2, 3), Status::Strict);
        assert_eq!(Status::from_counts(3, 3), Status::Equality);
        assert_eq!(Status::from_counts(4, 3), Status::PlusOne);
        assert_eq!(Status::from_counts(6, 3), Status::Higher);
        assert_eq!(bound_floor(8), 3);
        assert_eq!(bound_floor(3), 1);
    }

    #[test]
    fn check_bound_examples() {
        let rec = check_bound(&make_cycle(8, true).unwrap()).unwrap();
        assert_eq!((rec.inertia.p_plus, rec.status), (3, Status::Equality));
        let rec = check_bound(&make_complete_multipartite(&[2, 3]).unwrap()).unwrap();
        assert_eq!((rec.inertia.p_plus, rec.girth, rec.status), (1, 4, Status::Equality));
        let rec = check_bound(&make_cycle(4, false).unwrap()).unwrap();
        assert_eq!((rec.inertia.p_plus, rec.status), (2, Status::PlusOne));
        assert_eq!(check_bound(&make_path(4).unwrap()), Err(VerifyError::Acyclic));
        assert_eq!(check_bound(&SignedGraph::empty(2)), Err(VerifyError::Disconnected));
    }

    #[test]
    fn family_audit_examples() {
        let c5 = check_equality_families(check_bound(&make_cycle(5, true).unwrap()).unwrap());
        assert_eq!(c5.status, Status::PlusOne);
        let ids: Vec<&str> = c5.discrepancies.iter().map(|d| d.statement).collect();
        assert!(ids.contains(&readings::statement::PLUS_ONE_CYCLE_CLASSES), "{ids:?}");
        assert!(ids.contains(&readings::statement::EQUALITY_CYCLE_CLASSES));

        let k112 = make_complete_multipartite(&[1, 1, 2]).unwrap();
        let rec = check_equality_families(check_bound(&k112).unwrap());
        assert_eq!((rec.inertia.p_plus, rec.girth, rec.status), (1, 3, Status::Equality));
        assert_eq!(rec.discrepancies.len(), 1);
        assert_eq!(rec.discrepancies[0].statement, readings::statement::EQUALITY_PART_SIZES);

        let neg = ThetaSigns::new(Sign::Minus, Sign::Minus);
        let theta = check_equality_families(check_bound(&make_theta(5, 3, 5, neg).unwrap()).unwrap());
        assert_eq!(theta.status, Status::PlusOne);
        assert!(theta.discrepancies.is_empty(), "{:?}", theta.discrepancies);
    }

    #[test]
    fn record_json_fields() {
        let rec = check_bound(&make_cycle(3, false).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rec).unwrap();
        for field in ["n", "girth", "balanced", "p_plus", "n_minus", "eta", "status", "family", "discrepancies"] {
            assert!(v.get(field).is_some(), "missing {field}");
        }
        assert_eq!(v["family"], "Cycle(3,unbalanced)");
        assert_eq!(v["status"], "plus-one");
        assert!(v.get("code").is_none());
    }

    #[test]
    fn small_sweep() {
        let opts = SweepOptions { max_n: 5, lemma_checks: true, ..SweepOptions::default() };
        let report = sweep(&opts).unwrap();
        let s = &report.summary;
        assert!(report.bound_holds());
        assert_eq!(s.checks.equality_structure_violations, 0);
        assert_eq!(s.checks.p_plus_one_mismatches, 0);
        assert_eq!(s.checks.improved_bound_violations_corrected, 0);
        for (name, t) in s.lemma_checks.as_ref().unwrap() {
            assert_eq!(t.failed, 0, "{name}: {:?}", t.first_failure);
        }
        assert_eq!(s.orders.iter().map(|o| o.underlying).collect::<Vec<_>>(), vec![2, 6, 21]);
        assert!(sweep(&SweepOptions { max_n: 9, ..opts.clone() }).is_err());
        assert!(sweep(&SweepOptions { max_n: 2, ..opts }).is_err());
    }
}

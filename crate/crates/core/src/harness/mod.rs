//! Seeded verification suites that replay formulas, identities and
//! inequalities on generated instances and collect one record per check.
//!
//! Every record embeds enough of the instance (graph text and terminal set)
//! to replay it through the solver. Reports serialize deterministically; the
//! wall-clock runtime is tracked but kept out of the serialized form.

mod random;
mod suites;

pub use random::{RandomGraphSpec, Requirement};
pub use suites::{suite_construction, suite_formulas, suite_inequalities, suite_linegraph};

use crate::error::Result;
use crate::graph::{serialize_graph, Graph};
use crate::steiner::SolverOptions;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Inconclusive,
    Fail,
}

impl Outcome {
    /// The worse of two outcomes.
    pub fn and(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub label: String,
    /// Edge-list text of the graph the claim was evaluated on.
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminals: Option<Vec<usize>>,
}

impl Instance {
    pub fn new(label: impl Into<String>, g: &Graph) -> Self {
        Self {
            label: label.into(),
            graph: serialize_graph(g),
            terminals: None,
        }
    }

    pub fn with_terminals(mut self, t: &[usize]) -> Self {
        self.terminals = Some(t.to_vec());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub claim_id: String,
    pub instance: Instance,
    pub expected_relation: String,
    pub observed: String,
    pub verdict: Outcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub instances: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub records: Vec<CheckRecord>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        Self {
            suite: suite.to_string(),
            seed,
            instances: 0,
            total: 0,
            passed: 0,
            failed: 0,
            inconclusive: 0,
            records: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    fn push(
        &mut self,
        claim_id: &str,
        instance: &Instance,
        expected: &str,
        observed: String,
        verdict: Outcome,
    ) {
        self.total += 1;
        match verdict {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail => self.failed += 1,
            Outcome::Inconclusive => self.inconclusive += 1,
        }
        self.records.push(CheckRecord {
            suite: self.suite.clone(),
            claim_id: claim_id.to_string(),
            instance: instance.clone(),
            expected_relation: expected.to_string(),
            observed,
            verdict,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.verdict == Outcome::Fail)
    }

    /// `0` when every check passed, `1` on any failure, `2` when the only
    /// shortfall is inconclusive checks.
    pub fn exit_code(&self) -> i32 {
        exit_code(self.failed, self.inconclusive)
    }
}

fn exit_code(failed: usize, inconclusive: usize) -> i32 {
    if failed > 0 {
        1
    } else if inconclusive > 0 {
        2
    } else {
        0
    }
}

/// Aggregate of all suites for one seed.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn new(seed: u64, suites: Vec<SuiteReport>) -> Self {
        let sum = |f: fn(&SuiteReport) -> usize| suites.iter().map(f).sum();
        Self {
            seed,
            total: sum(|s| s.total),
            passed: sum(|s| s.passed),
            failed: sum(|s| s.failed),
            inconclusive: sum(|s| s.inconclusive),
            suites,
        }
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(self.failed, self.inconclusive)
    }

    pub fn runtime(&self) -> Duration {
        self.suites.iter().map(|s| s.runtime).sum()
    }
}

/// Scales for `run_all`.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    /// Largest complete graph order in the formula suite.
    pub max_n: usize,
    pub max_k: usize,
    /// Random graphs for the inequality suite.
    pub count: usize,
    pub inequality_spec: RandomGraphSpec,
    /// Graphs for the line-graph suite, and the smaller ones whose iterated
    /// line graph is examined.
    pub line_count: usize,
    pub line_spec: RandomGraphSpec,
    pub deep_count: usize,
    pub deep_spec: RandomGraphSpec,
    pub p_max: usize,
    pub q_max: usize,
    pub opts: SolverOptions,
}

/// Default per-search node limit for the suites: large enough that every
/// desk-scale instance is solved exactly, and reproducible unlike a clock.
pub const DEFAULT_NODE_LIMIT: u64 = 2_000_000;

impl RunConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            max_n: 7,
            max_k: 4,
            count: 200,
            inequality_spec: RandomGraphSpec {
                seed,
                vertices: (3, 7),
                edges: (2, 12),
                requirement: Requirement::Connected,
            },
            line_count: 50,
            line_spec: RandomGraphSpec {
                seed: seed.wrapping_add(1),
                vertices: (3, 7),
                edges: (3, 9),
                requirement: Requirement::TwoConnected,
            },
            deep_count: 20,
            deep_spec: RandomGraphSpec {
                seed: seed.wrapping_add(2),
                vertices: (4, 6),
                edges: (4, 7),
                requirement: Requirement::TwoConnected,
            },
            p_max: 3,
            q_max: 5,
            opts: SolverOptions::default().with_node_limit(DEFAULT_NODE_LIMIT),
        }
    }

    /// Applies a caller-supplied seed to every sampled suite.
    pub fn reseed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self.inequality_spec.seed = seed;
        self.line_spec.seed = seed.wrapping_add(1);
        self.deep_spec.seed = seed.wrapping_add(2);
        self
    }
}

pub(crate) fn timed(f: impl FnOnce() -> Result<SuiteReport>) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut r = f()?;
    r.runtime = start.elapsed();
    Ok(r)
}

/// Runs every suite at the scales in `config`.
pub fn run_all(config: &RunConfig) -> Result<RunReport> {
    let c = config;
    let suites = vec![
        timed(|| Ok(suite_formulas(c.max_n, c.max_k, &c.opts)))?,
        timed(|| suite_inequalities(&c.inequality_spec, c.count, &c.opts))?,
        timed(|| {
            suite_linegraph(
                &c.line_spec,
                c.line_count,
                &c.deep_spec,
                c.deep_count,
                &c.opts,
            )
        })?,
        timed(|| suite_construction(c.p_max, c.q_max, c.seed, &c.opts))?,
    ];
    Ok(RunReport::new(c.seed, suites))
}

/// A measured parameter: exact, or a lower bound when the search was cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Val {
    pub v: usize,
    pub exact: bool,
}

impl Val {
    pub fn exact(v: usize) -> Self {
        Self { v, exact: true }
    }

    pub fn scaled(self, f: usize) -> Self {
        Self {
            v: self.v * f,
            exact: self.exact,
        }
    }
}

impl std::fmt::Display for Val {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exact {
            write!(f, "{}", self.v)
        } else {
            write!(f, ">={}", self.v)
        }
    }
}

/// Decides `l <= r` where either side may only be known from below.
pub(crate) fn le(l: Val, r: Val) -> Outcome {
    if l.exact && l.v <= r.v {
        Outcome::Pass
    } else if r.exact && l.v > r.v {
        Outcome::Fail
    } else {
        Outcome::Inconclusive
    }
}

pub(crate) fn eq(l: Val, r: Val) -> Outcome {
    le(l, r).and(le(r, l))
}

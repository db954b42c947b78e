//! Machine checks of the structural theorems over generated instances.
//!
//! Each check enumerates its hypothesis cases on one instance and records a
//! verdict per case. Instances run in parallel; reports are merged in
//! instance order, so the first failing instance (smallest order, then
//! generation order) supplies the counterexample.

mod checks;
mod config;
mod context;
mod instances;

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::element_set::{Elem, ElementSet};
use crate::error::{Error, Result};
use crate::hyperring::FiniteHyperring;
use crate::json::HyperringDoc;

pub use checks::registry;
pub use config::SuiteConfig;
pub use instances::{generate_instances, InstanceSet, RandomStats};

use context::Ctx;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "HYPERRING_LAB_THREADS";

/// A registered check: hypothesis filter and conclusion, applied per case.
pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    /// How an ambiguous or suspect statement was read, if at all.
    pub reading: Option<&'static str>,
    run: fn(&Ctx, &mut Recorder),
}

impl CheckDef {
    pub fn spec(&'static self) -> CheckSpec {
        CheckSpec {
            def: self,
            negate: false,
        }
    }

    /// The same check with its conclusion inverted, for harness self-tests.
    pub fn negated(&'static self) -> CheckSpec {
        CheckSpec {
            def: self,
            negate: true,
        }
    }
}

#[derive(Clone, Copy)]
pub struct CheckSpec {
    def: &'static CheckDef,
    negate: bool,
}

pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheckId(id.to_string()))
}

/// The concrete data refuting one case.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CaseWitness {
    pub ideals: Vec<ElementSet>,
    pub elements: Vec<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub note: String,
}

type WitnessKey<'a> = (Vec<Vec<Elem>>, &'a [Elem], Option<usize>, Option<usize>);

impl CaseWitness {
    pub(crate) fn new(
        ideals: Vec<ElementSet>,
        elements: Vec<Elem>,
        sn: Option<(usize, usize)>,
        note: impl Into<String>,
    ) -> Self {
        CaseWitness {
            ideals,
            elements,
            s: sn.map(|p| p.0),
            n: sn.map(|p| p.1),
            note: note.into(),
        }
    }

    /// Sort key: ideals, then elements, then `(s, n)`, all lexicographic.
    fn key(&self) -> WitnessKey<'_> {
        (
            self.ideals.iter().map(|i| i.to_vec()).collect(),
            &self.elements,
            self.s,
            self.n,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub order: usize,
    pub hyperring: HyperringDoc,
    #[serde(flatten)]
    pub witness: CaseWitness,
}

/// Collects the verdicts of one check on one instance.
pub(crate) struct Recorder {
    negate: bool,
    cases: u64,
    failure: Option<CaseWitness>,
}

impl Recorder {
    fn new(negate: bool) -> Self {
        Recorder {
            negate,
            cases: 0,
            failure: None,
        }
    }

    /// Record an applicable case, keeping the least failing witness.
    pub(crate) fn case(&mut self, holds: bool, witness: impl FnOnce() -> CaseWitness) {
        self.cases += 1;
        if holds == self.negate {
            let w = witness();
            if self.failure.as_ref().is_none_or(|f| w.key() < f.key()) {
                self.failure = Some(w);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
    pub instances_examined: usize,
    /// Instances with at least one case satisfying the hypothesis.
    pub applicable: usize,
    /// Applicable instances on which every case held.
    pub passed: usize,
    /// Total hypothesis cases examined.
    pub cases: u64,
    pub vacuous: bool,
    pub counterexample: Option<Counterexample>,
    /// Summed worker time; excluded from the JSON report.
    #[serde(skip)]
    pub runtime: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub instance_count: usize,
    pub largest_order: usize,
    pub random_tables: RandomStats,
    pub checks: Vec<TheoremReport>,
    pub counterexamples: Vec<String>,
    pub vacuous: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// 0 when every check passed, 1 when some check has a counterexample.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    pub fn check(&self, id: &str) -> Option<&TheoremReport> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<10} {:>9} {:>10} {:>8} {:>12} {:>9}  verdict",
            "check", "instances", "applicable", "passed", "cases", "time_ms"
        );
        for c in &self.checks {
            let verdict = match (&c.counterexample, c.vacuous) {
                (Some(cx), _) => format!("COUNTEREXAMPLE in {}", cx.instance),
                (None, true) => "vacuous".to_string(),
                (None, false) => "pass".to_string(),
            };
            let _ = writeln!(
                out,
                "{:<10} {:>9} {:>10} {:>8} {:>12} {:>9}  {}",
                c.id,
                c.instances_examined,
                c.applicable,
                c.passed,
                c.cases,
                c.runtime.as_millis(),
                verdict
            );
        }
        let _ = writeln!(
            out,
            "{} instances (largest order {}); {} counterexample(s); {} vacuous check(s)",
            self.instance_count,
            self.largest_order,
            self.counterexamples.len(),
            self.vacuous.len()
        );
        out
    }
}

struct InstanceOutcome {
    cases: u64,
    failure: Option<CaseWitness>,
    runtime: Duration,
}

fn run_instance(
    h: &Arc<FiniteHyperring>,
    config: &SuiteConfig,
    specs: &[CheckSpec],
) -> Vec<InstanceOutcome> {
    let ctx = Ctx::new(h, config);
    specs
        .iter()
        .map(|spec| {
            let start = Instant::now();
            let mut rec = Recorder::new(spec.negate);
            (spec.def.run)(&ctx, &mut rec);
            InstanceOutcome {
                cases: rec.cases,
                failure: rec.failure,
                runtime: start.elapsed(),
            }
        })
        .collect()
}

fn thread_count() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Run the given checks over the instances generated from `config`.
pub fn run_checks(specs: &[CheckSpec], config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let set = generate_instances(config);
    run_checks_on(specs, config, &set)
}

pub fn run_checks_on(
    specs: &[CheckSpec],
    config: &SuiteConfig,
    set: &InstanceSet,
) -> Result<SuiteReport> {
    config.validate()?;
    let instances = &set.instances;
    let work = || -> Vec<Vec<InstanceOutcome>> {
        instances
            .par_iter()
            .map(|h| run_instance(h, config, specs))
            .collect()
    };
    let outcomes = match thread_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut checks = Vec::with_capacity(specs.len());
    for (k, spec) in specs.iter().enumerate() {
        let mut report = TheoremReport {
            id: spec.def.id.to_string(),
            statement: spec.def.statement.to_string(),
            reading: spec.def.reading.map(str::to_string),
            instances_examined: instances.len(),
            applicable: 0,
            passed: 0,
            cases: 0,
            vacuous: false,
            counterexample: None,
            runtime: Duration::ZERO,
        };
        for (h, per_instance) in instances.iter().zip(&outcomes) {
            let o = &per_instance[k];
            report.runtime += o.runtime;
            report.cases += o.cases;
            if o.cases > 0 {
                report.applicable += 1;
                if o.failure.is_none() {
                    report.passed += 1;
                }
            }
            let better = match (&report.counterexample, &o.failure) {
                (_, None) => false,
                (None, Some(_)) => true,
                (Some(c), Some(w)) => (h.order(), w.key()) < (c.order, c.witness.key()),
            };
            if let (true, Some(w)) = (better, &o.failure) {
                report.counterexample = Some(Counterexample {
                    instance: h.name().to_string(),
                    order: h.order(),
                    hyperring: HyperringDoc::from_ring(h),
                    witness: w.clone(),
                });
            }
        }
        report.vacuous = report.applicable == 0;
        checks.push(report);
    }
    let counterexamples = checks
        .iter()
        .filter(|c| c.counterexample.is_some())
        .map(|c| c.id.clone())
        .collect();
    let vacuous = checks
        .iter()
        .filter(|c| c.vacuous)
        .map(|c| c.id.clone())
        .collect();
    Ok(SuiteReport {
        config: config.clone(),
        instance_count: instances.len(),
        largest_order: instances.iter().map(|h| h.order()).max().unwrap_or(0),
        random_tables: set.random,
        checks,
        counterexamples,
        vacuous,
    })
}

fn selected_specs(config: &SuiteConfig) -> Result<Vec<CheckSpec>> {
    if config.checks.is_empty() {
        return Ok(registry().iter().map(CheckDef::spec).collect());
    }
    config
        .checks
        .iter()
        .map(|id| find_check(id).map(CheckDef::spec))
        .collect()
}

/// Every registered check (or the subset named in `config.checks`).
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let specs = selected_specs(config)?;
    run_checks(&specs, config)
}

/// A single check, as a report of its own.
pub fn check_theorem(id: &str, config: &SuiteConfig) -> Result<TheoremReport> {
    let def = find_check(id)?;
    let report = run_checks(&[def.spec()], config)?;
    Ok(report.checks.into_iter().next().expect("one check"))
}

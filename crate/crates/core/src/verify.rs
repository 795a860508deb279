//! Machine-checkable proposition suites.
//!
//! Every suite is a pure function of its [`SuiteConfig`]: the same seed,
//! trial count and field produce a byte-identical report. Trials use a
//! counter-based generator keyed by (seed, trial index), so they can be
//! dispatched across a worker pool and still assemble deterministically.

use crate::error::{AlgError, Result};
use crate::field::FieldContext;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Compalg,
    Jordan,
    Classical,
    Calgmod,
    Cubic27,
    All,
}

impl Suite {
    pub fn parse(text: &str) -> Result<Suite> {
        Ok(match text {
            "compalg" => Suite::Compalg,
            "jordan" => Suite::Jordan,
            "classical" => Suite::Classical,
            "calgmod" => Suite::Calgmod,
            "cubic27" => Suite::Cubic27,
            "all" => Suite::All,
            _ => return Err(AlgError::Invalid(format!("unknown suite '{text}'"))),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub field: FieldContext,
    pub trials: u64,
    pub seed: u64,
    pub long_running: bool,
}

impl SuiteConfig {
    pub fn new(field: FieldContext, trials: u64, seed: u64) -> SuiteConfig {
        SuiteConfig { field, trials, seed, long_running: false }
    }
}

/// Counter-based per-trial generator: ChaCha keyed by the seed with the
/// trial index as stream, so trial i is reproducible in isolation.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckItem {
    pub fn assert(name: &str, pass: bool, detail: String) -> CheckItem {
        CheckItem { name: name.to_string(), pass, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report { suite: suite.to_string(), items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn merge(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== suite {} ==", self.suite);
        for item in &self.items {
            let state = if item.pass { "PASS" } else { "FAIL" };
            if item.detail.is_empty() {
                let _ = writeln!(out, "{state} {}", item.name);
            } else {
                let _ = writeln!(out, "{state} {} ({})", item.name, item.detail);
            }
        }
        let _ = writeln!(
            out,
            "== {} checks, {} failed ==",
            self.items.len(),
            self.items.iter().filter(|i| !i.pass).count()
        );
        out
    }
}

/// Runs `trials` independent checks in parallel; failures are reported by
/// trial index so reruns with the same seed reproduce them exactly.
pub fn run_trials<F>(name: &str, seed: u64, trials: u64, f: F) -> CheckItem
where
    F: Fn(&mut ChaCha8Rng) -> std::result::Result<(), String> + Sync,
{
    let failures: Vec<(u64, String)> = (0..trials)
        .into_par_iter()
        .filter_map(|t| {
            let mut rng = trial_rng(seed, t);
            f(&mut rng).err().map(|e| (t, e))
        })
        .collect();
    let mut failures = failures;
    failures.sort_by_key(|(t, _)| *t);
    match failures.first() {
        None => CheckItem::assert(name, true, format!("{trials} trials")),
        Some((t, msg)) => CheckItem::assert(
            name,
            false,
            format!("{} of {} trials failed; first at trial {}: {}", failures.len(), trials, t, msg),
        ),
    }
}

mod suites;
pub use suites::*;

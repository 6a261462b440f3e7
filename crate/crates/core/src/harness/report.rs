//! One-line experiment records.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Failing samples kept per report.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub experiment: String,
    pub parameters: Vec<(String, String)>,
    pub seed: u64,
    pub trials: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(experiment: &str, seed: u64) -> Self {
        Self { experiment: experiment.to_string(), parameters: Vec::new(), seed, trials: 0, failures: 0, witnesses: Vec::new(), wall_time_ms: 0 }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.set_param(key, value);
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl fmt::Display) {
        let value = value.to_string();
        match self.parameters.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.parameters.push((key.to_string(), value)),
        }
    }

    pub fn get_param(&self, key: &str) -> Option<&str> {
        self.parameters.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Counts one trial, failing when `ok` is false.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.fail(witness());
        }
    }

    /// Counts a failure without a new trial.
    pub fn fail(&mut self, witness: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn field<'a>(tok: Option<&'a str>, key: &str) -> Result<&'a str, Error> {
    tok.and_then(|t| t.strip_prefix(key)).and_then(|t| t.strip_prefix('=')).ok_or_else(|| Error::Parse(format!("expected `{key}=`")))
}

fn number(s: &str) -> Result<u64, Error> {
    s.parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))
}

/// `experiment=.. params=k:v;k:v seed=.. trials=.. failures=.. witnesses=a,b wall_time_ms=..`
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(
            f,
            "experiment={} params={} seed={} trials={} failures={} witnesses={} wall_time_ms={}",
            self.experiment,
            params.join(";"),
            self.seed,
            self.trials,
            self.failures,
            self.witnesses.join(","),
            self.wall_time_ms
        )
    }
}

impl FromStr for Report {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut it = s.split(' ');
        let experiment = field(it.next(), "experiment")?.to_string();
        let params = field(it.next(), "params")?;
        let parameters = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(';')
                .map(|kv| kv.split_once(':').map(|(k, v)| (k.to_string(), v.to_string())).ok_or_else(|| Error::Parse(format!("bad parameter {kv:?}"))))
                .collect::<Result<_, _>>()?
        };
        let seed = number(field(it.next(), "seed")?)?;
        let trials = number(field(it.next(), "trials")?)?;
        let failures = number(field(it.next(), "failures")?)?;
        let w = field(it.next(), "witnesses")?;
        let witnesses = if w.is_empty() { Vec::new() } else { w.split(',').map(str::to_string).collect() };
        let wall_time_ms = number(field(it.next(), "wall_time_ms")?)?;
        if it.next().is_some() {
            return Err(Error::Parse("trailing report fields".into()));
        }
        Ok(Self { experiment, parameters, seed, trials, failures, witnesses, wall_time_ms })
    }
}

//! Seeded randomized property suites.
//!
//! Every case draws its inputs from its own ChaCha stream (seed, case index),
//! so a run is reproducible from the seed alone and cases can execute in
//! parallel.

pub mod gen;
mod groups;
mod laws;
mod lie_laws;
mod soundness;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rayon::prelude::*;

use crate::field::Field;
use crate::series::Series;
use gen::Rng8;

/// Outcome of one case: `Err` carries the first violated law.
pub type CaseResult = Result<(), String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    GroupAxioms,
    CompositionLaws,
    OrderLaws,
    PowerRoots,
    AzRecurrences,
    Semidirect,
    Jacobi,
    ClassicalBracket,
    DualConsistency,
    PrecisionSoundness,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::GroupAxioms,
        Suite::CompositionLaws,
        Suite::OrderLaws,
        Suite::PowerRoots,
        Suite::AzRecurrences,
        Suite::Semidirect,
        Suite::Jacobi,
        Suite::ClassicalBracket,
        Suite::DualConsistency,
        Suite::PrecisionSoundness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group-axioms",
            Suite::CompositionLaws => "composition-laws",
            Suite::OrderLaws => "order-laws",
            Suite::PowerRoots => "power-roots",
            Suite::AzRecurrences => "az-recurrences",
            Suite::Semidirect => "semidirect",
            Suite::Jacobi => "jacobi",
            Suite::ClassicalBracket => "classical-bracket",
            Suite::DualConsistency => "dual-consistency",
            Suite::PrecisionSoundness => "precision-soundness",
        }
    }

    fn case(self) -> fn(&mut Rng8, usize) -> CaseResult {
        match self {
            Suite::GroupAxioms => groups::group_axioms,
            Suite::CompositionLaws => laws::composition_laws,
            Suite::OrderLaws => laws::order_laws,
            Suite::PowerRoots => groups::power_roots,
            Suite::AzRecurrences => groups::az_recurrences,
            Suite::Semidirect => groups::semidirect,
            Suite::Jacobi => lie_laws::jacobi,
            Suite::ClassicalBracket => lie_laws::classical_operators,
            Suite::DualConsistency => lie_laws::dual_consistency,
            Suite::PrecisionSoundness => soundness::precision_soundness,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub cases: usize,
    /// number of known coefficients of each random input
    pub prec: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub cases: usize,
    pub passed: usize,
    /// (case index, first violated law), in case order
    pub failures: Vec<(usize, String)>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.passed == self.cases
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}/{}", self.passed, self.cases)?;
        for (i, msg) in self.failures.iter().take(5) {
            write!(f, "\n  case {i}: {msg}")?;
        }
        Ok(())
    }
}

pub fn case_rng(seed: u64, case: usize) -> Rng8 {
    let mut rng = Rng8::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

pub fn run(suite: Suite, config: &Config) -> Report {
    let case = suite.case();
    let prec = config.prec.max(4);
    let outcomes: Vec<(usize, CaseResult)> =
        (0..config.cases).into_par_iter().map(|i| (i, case(&mut case_rng(config.seed, i), prec))).collect();
    let failures: Vec<(usize, String)> = outcomes.into_iter().filter_map(|(i, r)| r.err().map(|e| (i, e))).collect();
    Report { suite, cases: config.cases, passed: config.cases - failures.len(), failures }
}

/// Agreement up to the common precision.
pub(crate) fn same<F: Field>(a: &Series<F>, b: &Series<F>, law: &str) -> CaseResult {
    if a.agrees_with(b) {
        Ok(())
    } else {
        Err(format!("{law}: {a} != {b}"))
    }
}

/// Agreement that is not vacuous: at least `min_known` coefficients at or
/// above the lower of the two orders are compared.
pub(crate) fn same_nonvacuous<F: Field>(a: &Series<F>, b: &Series<F>, min_known: i64, law: &str) -> CaseResult {
    same(a, b, law)?;
    let low = match (a.known_order(), b.known_order()) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => return Ok(()),
    };
    let prec = crate::series::min_prec(a.prec(), b.prec());
    match prec {
        Some(p) if p - low < min_known => Err(format!("{law}: only {} coefficients compared", p - low)),
        _ => Ok(()),
    }
}

pub(crate) fn check(cond: bool, law: impl FnOnce() -> String) -> CaseResult {
    if cond {
        Ok(())
    } else {
        Err(law())
    }
}

/// Domain errors inside a case are failures of the case.
pub(crate) fn ok<T>(r: crate::error::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: unexpected {e}"))
}

//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod oracle;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use semilaurent::field::int;
use semilaurent::verify::{self, case_rng, Config, Suite};
use semilaurent::{Order, Rational, RiordanArray, Series};

type S = Series<Rational>;

const SEED: u64 = 20240611;
const PREC: usize = 16;

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| int(n)).collect()
}

fn golden_window() -> Result<(), String> {
    // z^-3/(1-z) and z/(1-z), twelve known coefficients each
    let g = S::make(-3, ints(&[1; 12]), 9).map_err(|e| e.to_string())?;
    let f = S::make(1, ints(&[1; 12]), 13).map_err(|e| e.to_string())?;
    let r = RiordanArray::new(g, f).map_err(|e| e.to_string())?;
    let w = r.window(-5, 0, -2, 3).map_err(|e| e.to_string())?;
    let expected: Vec<Vec<Rational>> = [
        [1, 0, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 0, 1, 2, 1, 0],
        [0, 0, 1, 3, 3, 1],
    ]
    .iter()
    .map(|row| ints(row))
    .collect();
    match w.values() {
        Some(v) if v == expected => Ok(()),
        _ => Err(format!("window differs:\n{}", w.render_text())),
    }
}

fn unit_inner_counterexample() -> Result<(), String> {
    let g = S::polynomial(-1, ints(&[1, -2, 1]));
    let mut c = ints(&[1, -1]);
    c.resize(12, int(0));
    let f = S::make(0, c, 12).map_err(|e| e.to_string())?;
    let out = g.compose(&f).map_err(|e| e.to_string())?;
    let p = out.prec().unwrap_or(i64::MAX);
    if p < 10 {
        return Err(format!("precision {p} < 10: {out}"));
    }
    if out.order() != Order::Finite(2) {
        return Err(format!("order of {out} is not 2"));
    }
    for n in 2..10 {
        if out.coeff(n) != Some(int(1)) {
            return Err(format!("coefficient of z^{n} in {out} is not 1"));
        }
    }
    // ord g · ord f = 0
    Ok(())
}

fn suites(list: &[(Suite, usize)]) -> Result<(), String> {
    let mut errs = Vec::new();
    for &(suite, cases) in list {
        let report = verify::run(suite, &Config { seed: SEED, cases, prec: PREC });
        if !report.ok() {
            errs.push(format!("{suite}: {report}"));
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("\n"))
    }
}

fn oracle_cases() -> Result<(), String> {
    for case in 0..200 {
        oracle::run_case(&mut case_rng(SEED, case)).map_err(|e| format!("case {case}: {e}"))?;
    }
    Ok(())
}

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<(), String>,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "1 golden Riordan window", limit: Some(Duration::from_secs(1)), run: golden_window },
        Criterion { name: "2 composition with a unit inner series", limit: None, run: unit_inner_counterexample },
        Criterion {
            name: "3 composition laws (100 cases)",
            limit: Some(Duration::from_secs(10)),
            run: || suites(&[(Suite::CompositionLaws, 100)]),
        },
        Criterion { name: "4 order laws (100 cases)", limit: None, run: || suites(&[(Suite::OrderLaws, 100)]) },
        Criterion { name: "5 group axioms (100 cases)", limit: None, run: || suites(&[(Suite::GroupAxioms, 100)]) },
        Criterion { name: "6 powers and roots (30 cases)", limit: None, run: || suites(&[(Suite::PowerRoots, 30)]) },
        Criterion {
            name: "7 A/Z characterization (30 cases)",
            limit: None,
            run: || suites(&[(Suite::AzRecurrences, 30)]),
        },
        Criterion {
            name: "8 semidirect coordinates (50 cases)",
            limit: None,
            run: || suites(&[(Suite::Semidirect, 50)]),
        },
        Criterion {
            name: "9 Lie algebra (50/50/30 cases)",
            limit: None,
            run: || suites(&[(Suite::Jacobi, 50), (Suite::DualConsistency, 50), (Suite::ClassicalBracket, 30)]),
        },
        Criterion {
            name: "10 precision soundness (100 cases)",
            limit: None,
            run: || suites(&[(Suite::PrecisionSoundness, 100)]),
        },
        Criterion { name: "11 naive oracle (200 cases)", limit: None, run: oracle_cases },
    ];

    let total = Instant::now();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let took = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, c.limit) {
            if took > limit {
                outcome = Err(format!("took {took:?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS  {:<45} {:>8.2?}", c.name, took),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:<45} {:>8.2?}\n      {}", c.name, took, e.replace('\n', "\n      "));
            }
        }
    }
    let took = total.elapsed();
    let over = took > Duration::from_secs(60);
    println!("total {took:.2?}{}", if over { " (over the 60 s target)" } else { "" });
    if failed == 0 && !over {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria fail", criteria.len());
        ExitCode::FAILURE
    }
}

use std::io::Read;

use serde_json::{json, Value};
use thiserror::Error;

use semilaurent::json::{
    array_from_json, array_to_json, operator_from_json, operator_to_json, series_from_json, series_to_json,
    tangent_from_json, tangent_to_json, window_to_json,
};
use semilaurent::lie::{
    bracket, classical_bracket, dcompose, left_translate, tangent_mul, ClassicalOperator, TangentPair,
};
use semilaurent::riordan::{a_sequence, chi_decompose, psi_action, reconstruct, z_sequence};
use semilaurent::verify::{self, Config, Suite};
use semilaurent::{Field, MatrixWindow, Rational, RiordanArray, Series};

use crate::args::{ArrayArg, Cli, Command, Format, LieCmd, RiordanCmd, SeriesCmd, VerifyArgs};

type S = Series<Rational>;
type R = RiordanArray<Rational>;

#[derive(Debug, Error)]
pub enum CliError {
    /// A library operation refused its inputs.
    #[error("{name}: {0}", name = .0.name())]
    Domain(semilaurent::Error),
    /// Malformed input.
    #[error("{0}")]
    Usage(String),
    /// Some verification suite failed; carries the report.
    #[error("verification failed")]
    Failed(String),
}

impl From<semilaurent::Error> for CliError {
    fn from(e: semilaurent::Error) -> Self {
        CliError::Domain(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Decoding errors are usage errors; validation of decoded values (an `f`
/// of the wrong order, say) is a domain error.
fn decoded<T>(r: semilaurent::Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        semilaurent::Error::InvalidArgument(m) => CliError::Usage(m),
        e => CliError::Domain(e),
    })
}

enum Output {
    Series(S),
    Array(R),
    Tangent(TangentPair<Rational>),
    Operator(ClassicalOperator<Rational>),
    Window(MatrixWindow<Rational>),
    Other { text: String, json: Value },
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = match self {
                    Output::Series(s) => series_to_json(s),
                    Output::Array(r) => array_to_json(r),
                    Output::Tangent(t) => tangent_to_json(t),
                    Output::Operator(l) => operator_to_json(l),
                    Output::Window(w) => window_to_json(w),
                    Output::Other { json, .. } => json.clone(),
                };
                v.to_string()
            }
            Format::Text => match self {
                Output::Series(s) => s.to_string(),
                Output::Array(r) => format!("g = {}\nf = {}", r.g(), r.f()),
                Output::Tangent(t) => format!("gamma = {}\nkappa = {}", t.gamma, t.kappa),
                Output::Operator(l) => format!("chi = {}\nalpha = {}", l.chi, l.alpha),
                Output::Window(w) => w.render_text(),
                Output::Other { text, .. } => text.clone(),
            },
        }
    }
}

struct Inputs {
    prec: Option<i64>,
    stdin_used: bool,
}

impl Inputs {
    /// Inline JSON, `@path`, or `-` for stdin.
    fn raw(&mut self, arg: &str) -> Result<Value> {
        let text = if arg == "-" {
            if self.stdin_used {
                return Err(CliError::Usage("stdin can supply only one input".into()));
            }
            self.stdin_used = true;
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            buf
        } else if let Some(path) = arg.strip_prefix('@') {
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?
        } else {
            arg.to_string()
        };
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid JSON {arg:?}: {e}")))
    }

    fn series(&mut self, arg: &str) -> Result<S> {
        let v = self.raw(arg)?;
        decoded(series_from_json(&v, self.prec))
    }

    /// A series certified to have finite support: a missing "prec" means the
    /// listed coefficients are all there is.
    fn polynomial(&mut self, arg: &str) -> Result<S> {
        let mut v = self.raw(arg)?;
        let obj = v.as_object_mut().ok_or_else(|| CliError::Usage("series must be a JSON object".into()))?;
        if obj.contains_key("prec") {
            return Err(CliError::Usage("--finite-support conflicts with an explicit \"prec\"".into()));
        }
        obj.insert("finite_support".into(), Value::Bool(true));
        decoded(series_from_json(&v, None))
    }

    fn array(&mut self, arg: &str) -> Result<R> {
        let v = self.raw(arg)?;
        decoded(array_from_json(&v, self.prec))
    }

    fn array_arg(&mut self, a: &ArrayArg) -> Result<R> {
        match (&a.array, &a.g, &a.f) {
            (Some(arr), _, _) => self.array(arr),
            (None, Some(g), Some(f)) => {
                let (g, f) = (self.series(g)?, self.series(f)?);
                Ok(R::new(g, f)?)
            }
            _ => Err(CliError::Usage("give the array as --array or as --g and --f".into())),
        }
    }

    fn tangent(&mut self, arg: &str) -> Result<TangentPair<Rational>> {
        let v = self.raw(arg)?;
        decoded(tangent_from_json(&v, self.prec))
    }

    fn operator(&mut self, arg: &str) -> Result<ClassicalOperator<Rational>> {
        let v = self.raw(arg)?;
        decoded(operator_from_json(&v, self.prec))
    }
}

fn range(s: &str) -> Result<(i64, i64)> {
    let bad = || CliError::Usage(format!("expected a range lo:hi, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn scalar(s: &str) -> Result<Rational> {
    Rational::parse(s).ok_or_else(|| CliError::Usage(format!("invalid rational {s:?}")))
}

pub fn run(cli: &Cli) -> Result<String> {
    let mut inputs = Inputs { prec: cli.prec, stdin_used: false };
    let out = match &cli.command {
        Command::Series(cmd) => series(cmd, &mut inputs)?,
        Command::Riordan(cmd) => riordan(cmd, &mut inputs)?,
        Command::Lie(cmd) => lie(cmd, &mut inputs)?,
        Command::Verify(args) => return run_verify(args, cli),
    };
    Ok(out.render(cli.format))
}

fn series(cmd: &SeriesCmd, inp: &mut Inputs) -> Result<Output> {
    let s = match cmd {
        SeriesCmd::Add { a, b } => inp.series(a)?.add(&inp.series(b)?),
        SeriesCmd::Mul { a, b } => inp.series(a)?.mul(&inp.series(b)?),
        SeriesCmd::Inv { a } => inp.series(a)?.inverse()?,
        SeriesCmd::Pow { a, n } => inp.series(a)?.pow(*n)?,
        SeriesCmd::Compose { g, f, finite_support } => {
            let g = if *finite_support { inp.polynomial(g)? } else { inp.series(g)? };
            g.compose(&inp.series(f)?)?
        }
        SeriesCmd::CompInverse { f } => inp.series(f)?.comp_inverse()?,
        SeriesCmd::IterSqrt { f } => inp.series(f)?.iter_sqrt()?,
        SeriesCmd::IterRoot { f, n } => inp.series(f)?.iter_root(*n)?,
        SeriesCmd::MultRoot { a, m, root0 } => {
            let a = inp.series(a)?;
            match root0 {
                Some(r) => a.mult_root_with(*m, scalar(r)?)?,
                None => a.mult_root(*m)?,
            }
        }
        SeriesCmd::Derive { a } => inp.series(a)?.derivative(),
    };
    Ok(Output::Series(s))
}

fn riordan(cmd: &RiordanCmd, inp: &mut Inputs) -> Result<Output> {
    Ok(match cmd {
        RiordanCmd::Build(a) => {
            let r = inp.array_arg(a)?;
            let text = format!(
                "g = {}\nf = {}\nord g = {}\nin RL0: {}\nin RL11: {}",
                r.g(),
                r.f(),
                r.diag_offset(),
                r.in_rl0(),
                r.in_rl11()
            );
            let json = json!({
                "g": series_to_json(r.g()),
                "f": series_to_json(r.f()),
                "diag_offset": r.diag_offset(),
                "in_rl0": r.in_rl0(),
                "in_rl11": r.in_rl11(),
            });
            Output::Other { text, json }
        }
        RiordanCmd::Entry { array, m, n } => {
            let e = inp.array_arg(array)?.entry(*m, *n);
            Output::Other {
                text: e.as_ref().map_or("?".into(), ToString::to_string),
                json: e.map_or(Value::Null, |c| Value::String(c.to_string())),
            }
        }
        RiordanCmd::Window { array, rows, cols } => {
            let ((r0, r1), (c0, c1)) = (range(rows)?, range(cols)?);
            Output::Window(inp.array_arg(array)?.window(r0, r1, c0, c1)?)
        }
        RiordanCmd::Mul { left, right } => Output::Array(inp.array(left)?.mul(&inp.array(right)?)?),
        RiordanCmd::Inv(a) => Output::Array(inp.array_arg(a)?.inverse()?),
        RiordanCmd::Pow { array, m } => Output::Array(inp.array_arg(array)?.pow(*m)?),
        RiordanCmd::Root { array, n, root0 } => {
            let r = inp.array_arg(array)?;
            Output::Array(match root0 {
                Some(c) => r.nth_root_with(*n, scalar(c)?)?,
                None => r.nth_root(*n)?,
            })
        }
        RiordanCmd::Aseq(a) => Output::Series(a_sequence(&inp.array_arg(a)?)?),
        RiordanCmd::Zseq { array, p } => Output::Series(z_sequence(&inp.array_arg(array)?, *p)?),
        RiordanCmd::Reconstruct { a, seed, q, col, rows, cols } => {
            let a = inp.series(a)?;
            let seed: Vec<Rational> = match inp.raw(seed)? {
                Value::Array(items) => items
                    .iter()
                    .map(|v| match v {
                        Value::String(s) => scalar(s),
                        Value::Number(n) => scalar(&n.to_string()),
                        _ => Err(CliError::Usage(format!("invalid seed entry {v}"))),
                    })
                    .collect::<Result<_>>()?,
                _ => return Err(CliError::Usage("--seed must be a JSON list".into())),
            };
            Output::Window(reconstruct(&a, &seed, *q, *col, range(rows)?, range(cols)?)?)
        }
        RiordanCmd::Chi(a) => {
            let c = chi_decompose(&inp.array_arg(a)?);
            Output::Other {
                text: format!("t = {}\nshift = {}\nf = {}", c.t_part, c.shift, c.f_part),
                json: json!({
                    "t_part": series_to_json(&c.t_part),
                    "shift": c.shift,
                    "f_part": series_to_json(&c.f_part),
                }),
            }
        }
        RiordanCmd::Psi { f, g, n } => {
            let (s, k) = psi_action(&inp.series(f)?, &inp.series(g)?, *n)?;
            Output::Other { text: format!("({s}, {k})"), json: json!({ "series": series_to_json(&s), "shift": k }) }
        }
    })
}

fn lie(cmd: &LieCmd, inp: &mut Inputs) -> Result<Output> {
    Ok(match cmd {
        LieCmd::Bracket { u, v } => Output::Tangent(bracket(&inp.tangent(u)?, &inp.tangent(v)?)),
        LieCmd::Dcompose { g, h, chi, finite_support } => {
            let g = if *finite_support { inp.polynomial(g)? } else { inp.series(g)? };
            Output::Series(dcompose(&g, &inp.series(h)?, &inp.series(chi)?)?)
        }
        LieCmd::TangentMul { base1, v1, base2, v2 } => {
            let (b1, t1) = (inp.array(base1)?, inp.tangent(v1)?);
            let (b2, t2) = (inp.array(base2)?, inp.tangent(v2)?);
            let (base, t) = tangent_mul(&b1, &t1, &b2, &t2)?;
            Output::Other {
                text: format!("base g = {}\nbase f = {}\ngamma = {}\nkappa = {}", base.g(), base.f(), t.gamma, t.kappa),
                json: json!({ "base": array_to_json(&base), "tangent": tangent_to_json(&t) }),
            }
        }
        LieCmd::LeftTranslate { base, v } => Output::Tangent(left_translate(&inp.array(base)?, &inp.tangent(v)?)?),
        LieCmd::ClassicalBracket { l1, l2 } => {
            Output::Operator(classical_bracket(&inp.operator(l1)?, &inp.operator(l2)?))
        }
    })
}

fn run_verify(args: &VerifyArgs, cli: &Cli) -> Result<String> {
    let suites: Vec<Suite> = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites.iter().map(|s| s.parse().map_err(CliError::Usage)).collect::<Result<_>>()?
    };
    let prec = match cli.prec {
        Some(p) => usize::try_from(p).map_err(|_| CliError::Usage("--prec out of range".into()))?,
        None => 16,
    };
    let config = Config { seed: args.seed, cases: args.cases, prec };
    let reports: Vec<_> = suites.iter().map(|s| verify::run(*s, &config)).collect();
    let ok = reports.iter().all(|r| r.ok());
    let out = match cli.format {
        Format::Text => reports.iter().map(|r| format!("{}: {r}\n", r.suite)).collect::<String>(),
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite.name(),
                        "cases": r.cases,
                        "passed": r.passed,
                        "failures": r.failures.iter().map(|(i, m)| json!({ "case": i, "law": m })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format!("{}\n", Value::Array(v))
        }
    };
    if ok {
        Ok(out)
    } else {
        Err(CliError::Failed(out))
    }
}

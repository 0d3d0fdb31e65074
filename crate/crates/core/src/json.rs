//! JSON encodings of series, arrays, tangent pairs, operators and windows.
//!
//! A series is `{"kind", "order", "coeffs", "prec"}` with coefficients as
//! canonical strings, plus `"finite_support": true` for certified
//! polynomials. On input `kind` may be omitted and is inferred, and a missing
//! `prec` falls back to a caller-supplied default (the listed coefficients are
//! then taken as exact up to that precision).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::{ClassicalOperator, TangentPair};
use crate::riordan::{MatrixWindow, RiordanArray};
use crate::series::{Kind, Series};

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prec: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    finite_support: Option<bool>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub fn series_to_json<F: Field>(s: &Series<F>) -> Value {
    let raw = match s.kind() {
        Kind::ExactZero => SeriesJson { kind: Some("exact_zero".into()), ..Default::default() },
        Kind::ZeroToPrec => SeriesJson { kind: Some("zero_to_prec".into()), prec: s.prec(), ..Default::default() },
        Kind::Known => SeriesJson {
            kind: Some("known".into()),
            order: s.known_order(),
            coeffs: Some(s.coeffs().iter().map(ToString::to_string).collect()),
            prec: s.prec(),
            finite_support: s.is_exact().then_some(true),
        },
    };
    serde_json::to_value(raw).expect("plain struct serializes")
}

/// Decodes a series; `default_prec` applies when `prec` is absent and the
/// series is not marked `finite_support`.
pub fn series_from_json<F: Field>(v: &Value, default_prec: Option<i64>) -> Result<Series<F>> {
    let raw: SeriesJson = serde_json::from_value(v.clone()).map_err(|e| bad(format!("series: {e}")))?;
    let exact = raw.finite_support.unwrap_or(false);
    let coeffs: Vec<F> = raw
        .coeffs
        .unwrap_or_default()
        .iter()
        .map(|c| F::parse(c).ok_or_else(|| bad(format!("bad coefficient {c:?}"))))
        .collect::<Result<_>>()?;
    if exact && raw.prec.is_some() {
        return Err(bad("a finite-support series has no precision cap"));
    }
    let kind = match raw.kind.as_deref() {
        Some("known") => Kind::Known,
        Some("zero_to_prec") => Kind::ZeroToPrec,
        Some("exact_zero") => Kind::ExactZero,
        Some(k) => return Err(bad(format!("unknown series kind {k:?}"))),
        None if coeffs.iter().any(|c| !c.is_zero()) => Kind::Known,
        None if exact || (raw.prec.is_none() && default_prec.is_none()) => Kind::ExactZero,
        None => Kind::ZeroToPrec,
    };
    let missing_prec =
        || raw.prec.or(default_prec).ok_or_else(|| bad("series needs \"prec\" (or a default precision)"));
    match kind {
        Kind::ExactZero => Ok(Series::exact_zero()),
        Kind::ZeroToPrec => Ok(Series::zero_to_prec(missing_prec()?)),
        Kind::Known => {
            let order = raw.order.unwrap_or(0);
            if exact {
                let s = Series::polynomial(order, coeffs);
                return if s.is_known() { Ok(s) } else { Err(bad("known series with no nonzero coefficient")) };
            }
            let end = order + coeffs.len() as i64;
            let prec = match raw.prec {
                Some(p) if p < end => {
                    return Err(bad(format!("prec {p} is below the last listed coefficient z^{}", end - 1)))
                }
                Some(p) => p,
                None => default_prec.map_or(end, |d| d.max(end)),
            };
            let mut coeffs = coeffs;
            coeffs.resize((prec - order) as usize, F::zero());
            let s = Series::new(order, coeffs);
            if s.is_known() {
                Ok(s)
            } else {
                Err(bad("known series with no nonzero coefficient"))
            }
        }
    }
}

pub fn array_to_json<F: Field>(r: &RiordanArray<F>) -> Value {
    json!({ "g": series_to_json(r.g()), "f": series_to_json(r.f()) })
}

pub fn array_from_json<F: Field>(v: &Value, default_prec: Option<i64>) -> Result<RiordanArray<F>> {
    let (g, f) = pair(v, "g", "f", default_prec)?;
    RiordanArray::new(g, f)
}

pub fn tangent_to_json<F: Field>(t: &TangentPair<F>) -> Value {
    json!({ "gamma": series_to_json(&t.gamma), "kappa": series_to_json(&t.kappa) })
}

pub fn tangent_from_json<F: Field>(v: &Value, default_prec: Option<i64>) -> Result<TangentPair<F>> {
    let (gamma, kappa) = pair(v, "gamma", "kappa", default_prec)?;
    TangentPair::new(gamma, kappa)
}

pub fn operator_to_json<F: Field>(l: &ClassicalOperator<F>) -> Value {
    json!({ "chi": series_to_json(&l.chi), "alpha": series_to_json(&l.alpha) })
}

pub fn operator_from_json<F: Field>(v: &Value, default_prec: Option<i64>) -> Result<ClassicalOperator<F>> {
    let (chi, alpha) = pair(v, "chi", "alpha", default_prec)?;
    ClassicalOperator::new(chi, alpha)
}

fn pair<F: Field>(v: &Value, a: &str, b: &str, default_prec: Option<i64>) -> Result<(Series<F>, Series<F>)> {
    let obj = v.as_object().ok_or_else(|| bad(format!("expected an object with \"{a}\" and \"{b}\"")))?;
    if let Some(k) = obj.keys().find(|k| *k != a && *k != b) {
        return Err(bad(format!("unexpected field {k:?}")));
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| bad(format!("missing field \"{k}\"")));
    Ok((series_from_json(get(a)?, default_prec)?, series_from_json(get(b)?, default_prec)?))
}

/// `{"row_lo", "col_lo", "rows"}`; unknown entries are `null`.
pub fn window_to_json<F: Field>(w: &MatrixWindow<F>) -> Value {
    let rows: Vec<Vec<Value>> = w
        .entries
        .iter()
        .map(|r| r.iter().map(|e| e.as_ref().map_or(Value::Null, |c| Value::String(c.to_string()))).collect())
        .collect();
    json!({ "row_lo": w.row_lo, "col_lo": w.col_lo, "rows": rows })
}

/// Decodes a window. The diagonal offset is not part of the encoding and
/// must be supplied.
pub fn window_from_json<F: Field>(v: &Value, diag_offset: i64) -> Result<MatrixWindow<F>> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Raw {
        row_lo: i64,
        col_lo: i64,
        rows: Vec<Vec<Option<String>>>,
    }
    let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| bad(format!("window: {e}")))?;
    let width = raw.rows.first().map_or(0, Vec::len);
    if raw.rows.is_empty() || width == 0 || raw.rows.iter().any(|r| r.len() != width) {
        return Err(bad("window rows must be nonempty and rectangular"));
    }
    let entries = raw
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    None => Ok(None),
                    Some(c) => F::parse(c).map(Some).ok_or_else(|| bad(format!("bad entry {c:?}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixWindow {
        row_lo: raw.row_lo,
        row_hi: raw.row_lo + raw.rows.len() as i64 - 1,
        col_lo: raw.col_lo,
        col_hi: raw.col_lo + width as i64 - 1,
        diag_offset,
        entries,
    })
}

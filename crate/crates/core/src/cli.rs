//! Command implementations behind the `amds` binary. Each command returns a
//! [`Report`] that serializes to the JSON written on standard output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{all_verdicts, hamming_max, is_amds, is_mds};
use crate::classify::{
    verify_d1_d2_propositions, verify_mds_classification, verify_p_classification,
    verify_w_classification, Status,
};
use crate::code::BinaryCode;
use crate::enumerate::{enumerate_systematic_amds, SearchMode};
use crate::error::{Error, Result};
use crate::format::parse_code;
use crate::isometry::dedupe_up_to_isometry;
use crate::systematic::is_systematic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Ok,
    VerificationFailed,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    fn finish(
        command: &str,
        parameters: BTreeMap<String, Value>,
        started: Instant,
        outcome: Result<(Value, ReportStatus)>,
    ) -> Self {
        let (results, status) = match outcome {
            Ok(v) => v,
            Err(e) => (json!({ "error": e.to_string() }), ReportStatus::Error),
        };
        Report {
            command: command.to_string(),
            parameters,
            results,
            status,
            elapsed_ms: Some(started.elapsed().as_millis() as u64),
        }
    }

    /// 0 ok, 1 verification failed, 2 usage or input error.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            ReportStatus::Ok => 0,
            ReportStatus::VerificationFailed => 1,
            ReportStatus::Error => 2,
        }
    }

    /// Drops wall-clock fields so identical runs serialize identically.
    pub fn stabilize(&mut self) {
        self.elapsed_ms = None;
    }

    pub fn to_json(&self, pretty: bool) -> String {
        let out = if pretty {
            serde_json::to_string_pretty(self)
        } else {
            serde_json::to_string(self)
        };
        out.expect("report is plain data")
    }

    /// Indented plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(out, "status: {}", json!(self.status).as_str().unwrap_or("?"));
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        render_text(&mut out, "results", &self.results, 0);
        out
    }
}

fn is_scalar_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn render_text(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in map {
                render_text(out, k, x, depth + 1);
            }
        }
        Value::Array(items) if !is_scalar_list(v) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, x) in items.iter().enumerate() {
                render_text(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items
                .iter()
                .map(|x| match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{pad}{key}: [{}]", parts.join(" "));
        }
        Value::String(s) => {
            let _ = writeln!(out, "{pad}{key}: {s}");
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {other}");
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data")
}

fn status_of(s: Status) -> ReportStatus {
    match s {
        Status::Ok => ReportStatus::Ok,
        Status::VerificationFailed => ReportStatus::VerificationFailed,
    }
}

fn worst(a: ReportStatus, b: ReportStatus) -> ReportStatus {
    use ReportStatus::*;
    match (a, b) {
        (Error, _) | (_, Error) => Error,
        (VerificationFailed, _) | (_, VerificationFailed) => VerificationFailed,
        _ => Ok,
    }
}

/// Full analysis of the code stored in `path`.
pub fn cmd_analyze(path: &Path) -> Report {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("file".into(), json!(path.display().to_string()));
    let outcome = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })
        .and_then(|text| parse_code(&text))
        .and_then(|code| analyze_code(&code))
        .map(|v| (v, ReportStatus::Ok));
    Report::finish("analyze", params, started, outcome)
}

pub fn analyze_code(code: &BinaryCode) -> Result<Value> {
    let n = code.length();
    let size = code.size();
    let d = code.min_distance()?;
    let report = code.distribution_report();
    let systematic_k = if size.is_power_of_two() && size.trailing_zeros() < n as u32 {
        let k = size.trailing_zeros() as usize;
        Some(json!({ "k": k, "systematic": is_systematic(code, k)? }))
    } else {
        None
    };
    Ok(json!({
        "n": n,
        "size": size,
        "min_distance": d,
        "contains_zero": code.contains_zero(),
        "weight_distribution": report.weight,
        "distance_distribution": to_value(&report)["distance"],
        "linear": code.is_linear(),
        "mds": is_mds(code)?,
        "amds": is_amds(code)?,
        "perfect": hamming_max(n, d)? == size as u128,
        "systematic": systematic_k,
        "bounds": all_verdicts(n, d, size as u128)?,
    }))
}

pub fn cmd_enumerate(n: usize, d: usize, count_only: bool, up_to_isometry: bool) -> Report {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".into(), json!(n));
    params.insert("d".into(), json!(d));
    params.insert("count_only".into(), json!(count_only));
    params.insert("up_to_isometry".into(), json!(up_to_isometry));

    let outcome = (|| {
        let mode = if count_only && !up_to_isometry {
            SearchMode::CountOnly
        } else {
            SearchMode::Collect
        };
        let res = enumerate_systematic_amds(n, d, mode)?;
        let mut out = json!({
            "n": n,
            "d": d,
            "k": n - d,
            "count": res.count,
            "nodes_explored": res.nodes_explored,
        });
        let codes = res.codes();
        if up_to_isometry {
            let reps = dedupe_up_to_isometry(&codes)?;
            out["isometry_classes"] = json!(reps.len());
            if !count_only {
                out["representatives"] = to_value(&reps);
            }
        } else if !count_only {
            out["codes"] = to_value(&codes);
        }
        Ok((out, ReportStatus::Ok))
    })();
    Report::finish("enumerate", params, started, outcome)
}

pub fn cmd_bounds(n: usize, d: usize) -> Report {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".into(), json!(n));
    params.insert("d".into(), json!(d));
    let outcome = (|| {
        if d >= n {
            return Err(Error::InvalidParameters(format!(
                "need d < n for an AMDS size, got n = {n}, d = {d}"
            )));
        }
        let k = n - d;
        let amds_size = 1u128
            .checked_shl(k as u32)
            .filter(|_| k < 128)
            .ok_or(Error::Overflow("AMDS size"))?;
        let verdicts = all_verdicts(n, d, amds_size)?;
        let admits = verdicts.iter().all(|v| v.satisfied);
        Ok((
            json!({
                "n": n,
                "d": d,
                "amds_size": amds_size,
                "verdicts": verdicts,
                "amds_size_admissible": admits,
            }),
            ReportStatus::Ok,
        ))
    })();
    Report::finish("bounds", params, started, outcome)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyTarget {
    Mds,
    PClass,
    WClass,
    D1d2,
    All,
}

pub const DEFAULT_MDS_N_MAX: usize = 4;
pub const DEFAULT_D1D2_N_MAX: usize = 5;
pub const DEFAULT_P_CLASS_N_MAX: usize = 9;

fn run_target(target: VerifyTarget, n_max: Option<usize>) -> Result<(Value, ReportStatus)> {
    Ok(match target {
        VerifyTarget::Mds => {
            let r = verify_mds_classification(n_max.unwrap_or(DEFAULT_MDS_N_MAX))?;
            (to_value(&r), status_of(r.status))
        }
        VerifyTarget::D1d2 => {
            let r = verify_d1_d2_propositions(n_max.unwrap_or(DEFAULT_D1D2_N_MAX))?;
            (to_value(&r), status_of(r.status))
        }
        VerifyTarget::PClass => {
            let rows = verify_p_classification(n_max.unwrap_or(DEFAULT_P_CLASS_N_MAX))?;
            let status = rows
                .iter()
                .map(|r| status_of(r.status))
                .fold(ReportStatus::Ok, worst);
            (to_value(&rows), status)
        }
        VerifyTarget::WClass => {
            let rows = verify_w_classification()?;
            let status = rows
                .iter()
                .map(|r| status_of(r.status))
                .fold(ReportStatus::Ok, worst);
            (to_value(&rows), status)
        }
        VerifyTarget::All => {
            let mut out = serde_json::Map::new();
            let mut status = ReportStatus::Ok;
            for (name, t) in [
                ("mds", VerifyTarget::Mds),
                ("d1d2", VerifyTarget::D1d2),
                ("p_class", VerifyTarget::PClass),
                ("w_class", VerifyTarget::WClass),
            ] {
                let (v, s) = run_target(t, n_max)?;
                out.insert(name.into(), json!({ "status": s, "results": v }));
                status = worst(status, s);
            }
            (Value::Object(out), status)
        }
    })
}

pub fn cmd_verify(target: VerifyTarget, n_max: Option<usize>) -> Report {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    let name = match target {
        VerifyTarget::Mds => "mds",
        VerifyTarget::PClass => "p-class",
        VerifyTarget::WClass => "w-class",
        VerifyTarget::D1d2 => "d1d2",
        VerifyTarget::All => "all",
    };
    params.insert("target".into(), json!(name));
    params.insert("max_n".into(), json!(n_max));
    Report::finish("verify", params, started, run_target(target, n_max))
}

//! Text, JSON and CSV output.

use clap::ValueEnum;
use hermsig::oracle::SuiteReport;
use hermsig::restricted::FoldDiagram;
use hermsig::signature::DegreeProbe;
use hermsig::weylres::TableRow;
use hermsig::SignatureResult;
use serde::Serialize;
use serde_json::json;
use std::fmt::Write;

pub const SWEEP_SCHEMA_VERSION: &str = "v1";
pub const SWEEP_COLUMNS: [&str; 11] =
    ["index", "lambda", "status", "dim", "p", "q", "sig", "sig_sq", "p_plus_q", "indefinite_bound", "ratio_identity"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn sig(r: &SignatureResult, fmt: Format) -> String {
    match fmt {
        Format::Json => pretty(r),
        Format::Csv => csv_text(
            &["group", "lambda", "dim", "p", "q", "sig", "r", "p0", "q0", "invariance"],
            [vec![
                r.group.clone(),
                join(&r.lambda),
                r.dim.to_string(),
                r.p.to_string(),
                r.q.to_string(),
                r.sig.to_string(),
                r.r.to_string(),
                r.p0.to_string(),
                r.q0.to_string(),
                r.invariance.verdict.to_string(),
            ]],
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "group       {}", r.group);
            let _ = writeln!(s, "lambda_c    ({})", join(&r.lambda));
            let _ = writeln!(s, "dim         {}", r.dim);
            let _ = writeln!(s, "(p, q)      ({}, {})", r.p, r.q);
            let _ = writeln!(s, "Sig         {}", r.sig);
            let _ = writeln!(s, "r           {}", r.r);
            let _ = writeln!(s, "(p0, q0)    ({}, {})", r.p0, r.q0);
            let inv = &r.invariance;
            let _ = writeln!(
                s,
                "invariance  {} (component group order {}{})",
                inv.verdict,
                inv.component_group_order,
                if inv.ambiguity { ", readings disagree" } else { "" }
            );
            let _ = writeln!(s, "\n{:<14} {:>3} {:>8}  {:<16} k-weight", "w", "eps", "dim E_w", "w lambda_c");
            for c in &r.contributions {
                let word = if c.word.is_empty() {
                    "1".to_string()
                } else {
                    c.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
                };
                let eps = if c.epsilon > 0 { "+" } else { "-" };
                let _ = writeln!(s, "{:<14} {:>3} {:>8}  {:<16} {}", word, eps, c.dim_e, join(&c.weight), c.k_weight);
            }
            s
        }
    }
}

pub fn no_form(group: &str, lambda: &[i64], reason: &str, fmt: Format) -> String {
    match fmt {
        Format::Json => pretty(&json!({"group": group, "lambda": lambda, "invariance": "no_form", "reason": reason})),
        Format::Csv => csv_text(&["group", "lambda", "invariance", "reason"], [vec![
            group.to_string(),
            join(lambda),
            "no_form".into(),
            reason.to_string(),
        ]]),
        Format::Text => format!("group       {group}\nlambda      ({})\ninvariance  no_form\nreason      {reason}\n", join(lambda)),
    }
}

#[derive(Serialize)]
pub struct TableCheck {
    pub ok: bool,
    pub computed: TableRow,
    pub expected: TableRow,
}

#[derive(Serialize)]
pub struct FoldCheck {
    pub group: String,
    pub ok: bool,
    pub computed: [String; 4],
    pub expected: [String; 4],
}

impl FoldCheck {
    pub fn new(group: String, f: FoldDiagram, expected: [String; 4]) -> Self {
        let computed = [f.ambient.shape(), f.restricted.shape(), f.reduced.shape(), f.restricted_reduced.shape()];
        FoldCheck { group, ok: computed == expected, computed, expected }
    }
}

fn row_cells(r: &TableRow) -> [String; 8] {
    [
        format!("{} n={}", r.family, r.n),
        r.res.to_string(),
        r.cplx.to_string(),
        r.imag.to_string(),
        r.sing_cplx.to_string(),
        r.sing_imag.to_string(),
        format!("{}x{}", r.cplx_by_sing_imag.0, r.cplx_by_sing_imag.1),
        format!("{}x{}", r.sing_cplx_by_imag.0, r.sing_cplx_by_imag.1),
    ]
}

pub fn tables(checks: &[TableCheck], folds: &[FoldCheck], fmt: Format) -> String {
    if fmt == Format::Json {
        return pretty(&json!({"rows": checks, "folds": folds}));
    }
    let header = ["row", "R_res", "cplx", "imag", "sing_cplx", "sing_imag", "cplx|sing_imag", "sing_cplx|imag"];
    if fmt == Format::Csv {
        return csv_text(
            &[&header[..], &["ok"]].concat(),
            checks.iter().map(|c| {
                let mut v = row_cells(&c.computed).to_vec();
                v.push(c.ok.to_string());
                v
            }),
        );
    }
    let mut s = String::new();
    let line = |cells: &[String]| {
        format!(
            "{:<14} {:<7} {:<9} {:<9} {:<9} {:<9} {:<15} {:<15}",
            cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6], cells[7]
        )
    };
    let _ = writeln!(s, "{}", line(&header.map(String::from)));
    for c in checks {
        let _ = writeln!(s, "{}  {}", line(&row_cells(&c.computed)), if c.ok { "ok" } else { "MISMATCH" });
        if !c.ok {
            let _ = writeln!(s, "{}  expected", line(&row_cells(&c.expected)));
        }
    }
    let names = ["R, theta", "R_res", "R_red, theta", "R_res,red"];
    for f in folds {
        let _ = writeln!(s, "\n{}  {}", f.group, if f.ok { "ok" } else { "MISMATCH" });
        for i in 0..4 {
            let _ = write!(s, "  {:<13} {}", names[i], f.computed[i]);
            if f.computed[i] != f.expected[i] {
                let _ = write!(s, "   expected {}", f.expected[i]);
            }
            s.push('\n');
        }
    }
    s
}

/// Why a sweep row has no signature.
pub enum RowError {
    NoForm,
    Invalid(String),
    Internal(String),
}

#[derive(Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub lambda: String,
    pub status: String,
    pub dim: Option<u64>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub sig: Option<u64>,
    pub sig_sq: Option<u64>,
    pub p_plus_q: Option<u64>,
    /// Sig² ≤ p + q.
    pub indefinite_bound: Option<bool>,
    pub ratio_identity: Option<bool>,
    #[serde(skip)]
    pub internal: bool,
}

impl SweepRow {
    pub fn new(index: usize, lambda: &[i64], res: Result<SignatureResult, RowError>, ratio: Option<bool>) -> Self {
        let mut row = SweepRow {
            index,
            lambda: join(lambda),
            status: "ok".into(),
            dim: None,
            p: None,
            q: None,
            sig: None,
            sig_sq: None,
            p_plus_q: None,
            indefinite_bound: None,
            ratio_identity: ratio,
            internal: false,
        };
        match res {
            Ok(r) => {
                row.dim = Some(r.dim);
                row.p = Some(r.p);
                row.q = Some(r.q);
                row.sig = Some(r.sig);
                row.sig_sq = Some(r.sig * r.sig);
                row.p_plus_q = Some(r.p + r.q);
                row.indefinite_bound = Some(r.sig * r.sig <= r.p + r.q);
                if r.invariance.verdict != hermsig::Invariance::GInvariant {
                    row.status = r.invariance.verdict.to_string();
                }
            }
            Err(RowError::NoForm) => row.status = "no_form".into(),
            Err(RowError::Invalid(m)) => row.status = format!("invalid: {m}"),
            Err(RowError::Internal(m)) => {
                row.status = format!("internal: {m}");
                row.internal = true;
            }
        }
        row
    }

    fn cells(&self) -> Vec<String> {
        let o = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_default();
        let b = |x: Option<bool>| x.map(|v| v.to_string()).unwrap_or_default();
        vec![
            self.index.to_string(),
            self.lambda.clone(),
            self.status.clone(),
            o(self.dim),
            o(self.p),
            o(self.q),
            o(self.sig),
            o(self.sig_sq),
            o(self.p_plus_q),
            b(self.indefinite_bound),
            b(self.ratio_identity),
        ]
    }
}

pub fn sweep_schema() -> String {
    format!("schema {SWEEP_SCHEMA_VERSION}\n{}\n", SWEEP_COLUMNS.join(","))
}

pub fn sweep(group: &str, rows: &[SweepRow], probe: Option<&DegreeProbe>, fmt: Format) -> String {
    if fmt == Format::Json {
        return pretty(&json!({
            "schema": SWEEP_SCHEMA_VERSION,
            "group": group,
            "rows": rows,
            "degree_probe": probe,
        }));
    }
    let mut s = csv_text(&SWEEP_COLUMNS, rows.iter().map(SweepRow::cells));
    if let Some(p) = probe {
        let _ = writeln!(
            s,
            "# degree_probe n={} lambda0={} degree={} sigs={} vanishes={} top_nonzero={}",
            p.n,
            join(&p.lambda0),
            p.degree,
            p.sigs.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            p.vanishes,
            p.top_nonzero
        );
    }
    s
}

pub fn verify(reports: &[SuiteReport], fault: Option<usize>, fmt: Format) -> String {
    if fmt == Format::Json {
        let suites: Vec<_> = reports
            .iter()
            .map(|r| {
                json!({
                    "suite": r.kind.name(),
                    "cap": r.cap,
                    "cases": r.cases.len(),
                    "agree": r.cases.iter().filter(|c| c.agrees()).count(),
                    "passed": r.passed(),
                    "seconds": r.elapsed.as_secs_f64(),
                    "failures": r.failures().collect::<Vec<_>>(),
                })
            })
            .collect();
        return pretty(&json!({"injected_fault": fault, "suites": suites}));
    }
    let mut s = String::new();
    if let Some(pos) = fault {
        let _ = writeln!(s, "fault injected: epsilon flipped at coset position {pos}\n");
    }
    let _ = writeln!(s, "{:<28} {:>6} {:>6}  {:<6} {:>8}", "suite", "cases", "agree", "status", "time");
    for r in reports {
        let agree = r.cases.iter().filter(|c| c.agrees()).count();
        let _ = writeln!(
            s,
            "{:<28} {:>6} {:>6}  {:<6} {:>7.2}s",
            r.kind.name(),
            r.cases.len(),
            agree,
            if r.passed() { "PASS" } else { "FAIL" },
            r.elapsed.as_secs_f64()
        );
    }
    for r in reports {
        for c in r.failures().take(5) {
            let show = |x: &Result<u64, String>| match x {
                Ok(v) => v.to_string(),
                Err(e) => format!("error ({e})"),
            };
            let _ = writeln!(
                s,
                "  {} lambda=({}) dim {}: oracle {} formula {}",
                r.kind.name(),
                join(&c.lambda),
                c.dim,
                show(&c.oracle),
                show(&c.formula)
            );
        }
    }
    s
}

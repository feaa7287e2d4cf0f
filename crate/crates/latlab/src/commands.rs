use clap::ValueEnum;
use latlab_core::families::{craig_count_k2_closed, craig_count_k3_closed, craig_pair_count, verify_det, verify_formula};
use latlab_core::lattice::enumerate_norm;
use latlab_core::perfection::{base_vector_graph, perfection_report, scan_entry, summarize_scan, SCHLAFLI_BASE};
use latlab_core::{Error, FamilySpec, FiniteField, MinimalVectorSet};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::output::{self, Format, Records};
use crate::tables::{run_table, TableId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    pub jobs: usize,
    pub norm_cap: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { format: Format::Json, jobs: 1, norm_cap: latlab_core::lattice::DEFAULT_SEARCH_CAP }
    }
}

/// Text for stdout and whether every check in it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, ok: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CraigMethod {
    Formula,
    Histogram,
    Enumerate,
}

fn render(cfg: &RunConfig, json: impl FnOnce() -> Value, records: impl FnOnce() -> Records) -> CliResult<String> {
    match cfg.format {
        Format::Json => output::json_text(&json()),
        Format::Csv => records().to_csv(),
    }
}

fn parse_spec(s: &str) -> CliResult<FamilySpec> {
    Ok(s.parse()?)
}

/// Comma-separated integers; the empty string is the empty list.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> CliResult<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<T>().map_err(|_| CliError::Usage(format!("bad list entry '{t}' in '{s}'")))).collect()
}

pub fn build(cfg: &RunConfig, spec: &str) -> CliResult<Outcome> {
    let l = parse_spec(spec)?.lattice()?;
    Ok(Outcome::ok(render(cfg, || output::lattice_json(&l), || output::lattice_records(&l))?))
}

pub fn analyze(cfg: &RunConfig, spec: &str) -> CliResult<Outcome> {
    let spec = parse_spec(spec)?;
    let r = perfection_report(&spec.lattice()?, cfg.norm_cap)?;
    let text = render(cfg, || output::report_json(&spec, &r), || {
        let mut rec = Records::new(output::REPORT_FIELDS);
        rec.push(output::report_row(&spec, &r));
        rec
    })?;
    Ok(Outcome::ok(text))
}

pub fn minvec(cfg: &RunConfig, spec: &str, norm: Option<u64>) -> CliResult<Outcome> {
    let l = parse_spec(spec)?.lattice()?;
    let set: MinimalVectorSet = match norm {
        Some(0) => return Err(CliError::Usage("norm must be positive".into())),
        Some(m) => l.vectors_of_norm(m),
        None => l.minimum(cfg.norm_cap).found()?,
    };
    let labels = l.constraints().labels().to_vec();
    Ok(Outcome::ok(render(cfg, || output::vectors_json(&set), || output::vectors_records(&labels, &set))?))
}

pub fn verify(cfg: &RunConfig, spec: &str) -> CliResult<Outcome> {
    let spec = parse_spec(spec)?;
    let mut reports = Vec::new();
    for check in [verify_det, verify_formula] {
        match check(&spec) {
            Ok(r) => reports.push(r),
            Err(Error::NoClosedForm(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if reports.is_empty() {
        return Err(CliError::Usage(format!("no closed form is known for {spec}")));
    }
    let ok = reports.iter().all(|r| r.agree);
    let text = render(cfg, || Value::Array(reports.iter().map(output::formula_json).collect()), || {
        let mut rec = Records::new(output::FORMULA_FIELDS);
        for r in &reports {
            rec.push(output::formula_row(r));
        }
        rec
    })?;
    Ok(Outcome { stdout: text, ok })
}

pub fn table(cfg: &RunConfig, id: TableId) -> CliResult<Outcome> {
    let report = run_table(id, cfg.norm_cap)?;
    let text = render(cfg, || report.to_json(), || report.to_records())?;
    Ok(Outcome { stdout: text, ok: report.matches() })
}

pub fn scan_d(cfg: &RunConfig, excl: &[u64], d_max: usize) -> CliResult<Outcome> {
    if excl.contains(&0) {
        return Err(CliError::Usage("excluded weights start at 1".into()));
    }
    if d_max == 0 {
        return Err(CliError::Usage("dmax must be positive".into()));
    }
    let entries = (1..=d_max).into_par_iter().map(|d| scan_entry(d, excl)).collect::<Result<Vec<_>, _>>()?;
    let scan = summarize_scan(excl.len(), entries);
    let opt = |x: Option<String>| x.map(Value::String).unwrap_or(Value::Null);
    let text = render(
        cfg,
        || {
            let entries: Vec<Value> = scan
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "d": e.d,
                        "min": opt(e.min_norm.map(|m| m.to_string())),
                        "pd": opt(e.pd.map(|p| p.to_string())),
                        "in_p": e.in_p,
                    })
                })
                .collect();
            json!({
                "excl": excl,
                "dmax": d_max,
                "tail_bound": scan.tail_bound,
                "D": scan.value,
                "entries": entries,
            })
        },
        || {
            let mut rec = Records::new(["d", "min", "pd", "in_p"]);
            for e in &scan.entries {
                let show = |x: Option<String>| x.unwrap_or_default();
                rec.push([e.d.to_string(), show(e.min_norm.map(|m| m.to_string())), show(e.pd.map(|p| p.to_string())), e.in_p.to_string()]);
            }
            rec
        },
    )?;
    Ok(Outcome::ok(text))
}

/// Adjacency in the matrix text format followed by a JSON summary.
pub fn graph(cfg: &RunConfig, spec: &str, base: Option<Vec<i64>>) -> CliResult<Outcome> {
    let family = parse_spec(spec)?;
    let base = match base {
        Some(b) => b,
        None if family == FamilySpec::T { c: 3 } => SCHLAFLI_BASE.to_vec(),
        None => return Err(CliError::Usage("--base-vector is required for this family".into())),
    };
    let l = family.lattice()?;
    if base.len() != l.ambient_dim() {
        return Err(CliError::Usage(format!("base vector has {} entries, expected {}", base.len(), l.ambient_dim())));
    }
    let mins = l.minimum(cfg.norm_cap).found()?;
    let g = base_vector_graph(&mins, &base)?;
    let spectrum = g.spectrum()?;
    let mut roots = Map::new();
    for (r, m) in spectrum.roots.iter().rev() {
        roots.insert(r.to_string(), Value::String(m.to_string()));
    }
    let summary = json!({
        "order": g.order().to_string(),
        "srg": g.srg_parameters().map(|(v, k, l, m)| vec![v.to_string(), k.to_string(), l.to_string(), m.to_string()]),
        "spectrum": roots,
        "residual_degree": spectrum.residual_degree.to_string(),
    });
    Ok(Outcome::ok(format!("{}{}", g.adjacency, output::json_text(&summary)?)))
}

pub fn craig(cfg: &RunConfig, q: u64, k: usize, method: CraigMethod) -> CliResult<Outcome> {
    let spec = FamilySpec::Craig { q, k };
    spec.validate()?;
    let field = FiniteField::with_order(q)?;
    let pairs = match method {
        CraigMethod::Formula => match k {
            2 => craig_count_k2_closed(q)?,
            3 => craig_count_k3_closed(q)?,
            _ => return Err(CliError::Usage(format!("no closed form for k = {k}"))),
        },
        CraigMethod::Histogram => craig_pair_count(&field, k)?,
        CraigMethod::Enumerate => enumerate_norm(&spec.make()?, spec.formula_norm()).pairs().into(),
    };
    let method_name = method.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let norm = spec.formula_norm();
    let text = render(
        cfg,
        || json!({"q": q.to_string(), "k": k.to_string(), "method": method_name, "norm": norm.to_string(), "pairs": pairs.to_string()}),
        || {
            let mut rec = Records::new(["q", "k", "method", "norm", "pairs"]);
            rec.push([q.to_string(), k.to_string(), method_name.clone(), norm.to_string(), pairs.to_string()]);
            rec
        },
    )?;
    Ok(Outcome::ok(text))
}

/// Runs `f` on a thread pool of `jobs` workers.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| CliError::Construction(e.to_string()))?;
    Ok(pool.install(f))
}

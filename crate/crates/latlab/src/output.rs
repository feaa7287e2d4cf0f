use clap::ValueEnum;
use latlab_core::lattice::MinimalVectorSet;
use latlab_core::perfection::PerfectionReport;
use latlab_core::{FamilySpec, FormulaReport, IntMatrix, Lattice};
use serde_json::{json, Value};

use crate::error::CliResult;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Rows of strings with a header line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Records {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Records {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Records { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|x| x.to_string()).collect());
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::error::CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| crate::error::CliError::Output(e.to_string()))
    }
}

pub fn json_text(v: &Value) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.row_iter().map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

pub fn lattice_json(l: &Lattice) -> Value {
    let c = l.constraints();
    let rows: Vec<Value> = c
        .rows()
        .iter()
        .map(|r| {
            json!({
                "weights": r.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "modulus": r.modulus.to_string(),
            })
        })
        .collect();
    json!({
        "labels": c.labels(),
        "rows": rows,
        "basis": matrix_json(l.basis()),
        "gram": matrix_json(l.gram()),
        "det": l.determinant().to_string(),
        "rank": l.rank().to_string(),
    })
}

pub fn lattice_records(l: &Lattice) -> Records {
    let mut r = Records::new(l.constraints().labels().iter().cloned());
    for row in l.basis().row_iter() {
        r.push(row);
    }
    r
}

pub fn vectors_json(set: &MinimalVectorSet) -> Value {
    json!({
        "norm": set.norm.to_string(),
        "count": set.pairs().to_string(),
        "vectors": set.vectors.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn vectors_records(labels: &[String], set: &MinimalVectorSet) -> Records {
    let mut r = Records::new(labels.iter().cloned());
    for v in &set.vectors {
        r.push(v);
    }
    r
}

/// Family tag and the parameter part of a spec, `Ld:8:excl=2` giving
/// `("Ld", "8:excl=2")`.
pub fn family_and_params(spec: &FamilySpec) -> (String, String) {
    let s = spec.to_string();
    match s.split_once(':') {
        Some((f, p)) => (f.to_string(), p.to_string()),
        None => (s, String::new()),
    }
}

pub const REPORT_FIELDS: [&str; 8] = ["family", "params", "d", "det", "min", "mp", "sym_rank", "pd"];

pub fn report_json(spec: &FamilySpec, r: &PerfectionReport) -> Value {
    let (family, params) = family_and_params(spec);
    json!({
        "family": family,
        "params": params,
        "d": r.d,
        "det": r.det.to_string(),
        "min": r.min_norm,
        "mp": r.mp,
        "sym_rank": r.sym_rank,
        "pd": r.pd,
    })
}

pub fn report_row(spec: &FamilySpec, r: &PerfectionReport) -> Vec<String> {
    let (family, params) = family_and_params(spec);
    vec![family, params, r.d.to_string(), r.det.to_string(), r.min_norm.to_string(), r.mp.to_string(), r.sym_rank.to_string(), r.pd.to_string()]
}

pub const FORMULA_FIELDS: [&str; 5] = ["family", "quantity", "formula", "computed", "agree"];

pub fn formula_json(r: &FormulaReport) -> Value {
    json!({
        "family": r.family,
        "quantity": r.quantity,
        "formula": r.formula_value.to_string(),
        "computed": r.enumerated_value.to_string(),
        "agree": r.agree,
    })
}

pub fn formula_row(r: &FormulaReport) -> Vec<String> {
    vec![r.family.clone(), r.quantity.clone(), r.formula_value.to_string(), r.enumerated_value.to_string(), r.agree.to_string()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_when_needed() {
        let mut r = Records::new(["a", "b"]);
        r.push(["1,2", "say \"hi\""]);
        r.push(["3", "plain"]);
        assert_eq!(r.to_csv().unwrap(), "a,b\n\"1,2\",\"say \"\"hi\"\"\"\n3,plain\n");
    }

    #[test]
    fn splits_family_tag() {
        let spec: FamilySpec = "Ld:8:excl=2,10".parse().unwrap();
        assert_eq!(family_and_params(&spec), ("Ld".into(), "8:excl=2,10".into()));
    }
}

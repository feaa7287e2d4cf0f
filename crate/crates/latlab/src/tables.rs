use clap::ValueEnum;
use latlab_core::families::{craig_count_k2_closed, craig_count_k3_closed, craig_k3_constant, craig_pair_count};
use latlab_core::lattice::enumerate_norm;
use latlab_core::perfection::{d_tail_bound, perfection_report, scan_D};
use latlab_core::{FamilySpec, FiniteField};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::CliResult;
use crate::golden::{self, PerfectionRow};
use crate::output::Records;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum TableId {
    #[value(name = "L7-single")]
    L7Single,
    #[value(name = "L8-single")]
    L8Single,
    #[value(name = "L8-double")]
    L8Double,
    #[value(name = "O8")]
    O8,
    #[value(name = "O9")]
    O9,
    #[value(name = "M8")]
    M8,
    #[value(name = "M9")]
    M9,
    #[value(name = "D-scan-k1")]
    DScanK1,
    #[value(name = "craig-k2")]
    CraigK2,
    #[value(name = "craig-k3")]
    CraigK3,
}

impl TableId {
    pub const ALL: [TableId; 10] = [
        TableId::L7Single,
        TableId::L8Single,
        TableId::L8Double,
        TableId::O8,
        TableId::O9,
        TableId::M8,
        TableId::M9,
        TableId::DScanK1,
        TableId::CraigK2,
        TableId::CraigK3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::L7Single => "L7-single",
            TableId::L8Single => "L8-single",
            TableId::L8Double => "L8-double",
            TableId::O8 => "O8",
            TableId::O9 => "O9",
            TableId::M8 => "M8",
            TableId::M9 => "M9",
            TableId::DScanK1 => "D-scan-k1",
            TableId::CraigK2 => "craig-k2",
            TableId::CraigK3 => "craig-k3",
        }
    }
}

/// Named values of one row, in display order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub label: String,
    pub fields: Vec<(String, String)>,
}

impl Row {
    fn new(label: impl Into<String>) -> Self {
        Row { label: label.into(), fields: Vec::new() }
    }

    fn with(mut self, field: &str, value: impl ToString) -> Self {
        self.fields.push((field.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, field: &str) -> Option<&str> {
        self.fields.iter().find(|(f, _)| f == field).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff {
    pub row: String,
    pub field: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub id: TableId,
    pub rows: Vec<Row>,
    pub diffs: Vec<Diff>,
}

impl TableReport {
    pub fn matches(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert("label".into(), r.label.clone().into());
                for (f, v) in &r.fields {
                    m.insert(f.clone(), v.clone().into());
                }
                Value::Object(m)
            })
            .collect();
        let diffs: Vec<Value> =
            self.diffs.iter().map(|d| json!({"row": d.row, "field": d.field, "expected": d.expected, "got": d.got})).collect();
        json!({
            "table": self.id.name(),
            "status": if self.matches() { "match" } else { "mismatch" },
            "rows": rows,
            "diffs": diffs,
        })
    }

    pub fn to_records(&self) -> Records {
        let mut header = vec!["label".to_string()];
        for r in &self.rows {
            for (f, _) in &r.fields {
                if !header.contains(f) {
                    header.push(f.clone());
                }
            }
        }
        let mut out = Records::new(header.clone());
        for r in &self.rows {
            let mut line = vec![r.label.clone()];
            line.extend(header[1..].iter().map(|f| r.get(f).unwrap_or("").to_string()));
            out.push(line);
        }
        out
    }
}

/// Compares computed rows with expected rows of the same labels and fields.
pub fn diff_rows(expected: &[Row], got: &[Row]) -> Vec<Diff> {
    let mut diffs = Vec::new();
    for e in expected {
        let g = got.iter().find(|g| g.label == e.label);
        for (field, value) in &e.fields {
            let actual = g.and_then(|g| g.get(field)).unwrap_or("<missing>");
            if actual != value {
                diffs.push(Diff { row: e.label.clone(), field: field.clone(), expected: value.clone(), got: actual.to_string() });
            }
        }
    }
    diffs
}

fn perfection_expected(rows: &[PerfectionRow]) -> Vec<Row> {
    rows.iter().map(|r| Row::new(r.label).with("det", r.det).with("pd", r.pd).with("mp", r.mp)).collect()
}

/// Builds and analyses one printed family member.
pub fn perfection_row(label: &str, spec: &str, norm_cap: u64) -> CliResult<Row> {
    let spec: FamilySpec = spec.parse()?;
    let report = perfection_report(&spec.lattice()?, norm_cap)?;
    Ok(Row::new(label).with("det", report.det).with("pd", report.pd).with("mp", report.mp))
}

fn perfection_table(rows: &[PerfectionRow], norm_cap: u64) -> CliResult<(Vec<Row>, Vec<Row>)> {
    let got = rows.par_iter().map(|r| perfection_row(r.label, r.spec, norm_cap)).collect::<CliResult<Vec<_>>>()?;
    Ok((perfection_expected(rows), got))
}

fn d_scan_label(i: usize) -> String {
    if i == 10 {
        ">=10".into()
    } else {
        i.to_string()
    }
}

fn d_scan_table() -> CliResult<(Vec<Row>, Vec<Row>)> {
    let mut expected: Vec<Row> =
        golden::D_SCAN_K1.iter().enumerate().map(|(i, d)| Row::new(d_scan_label(i + 1)).with("D", d)).collect();
    expected.push(Row::new("d_1").with("D", golden::D1));
    let d_max = d_tail_bound(1);
    let values = (1..=10u64)
        .into_par_iter()
        .map(|a| Ok(scan_D(&[a], d_max)?.value.expect("scan reaches the tail bound")))
        .collect::<CliResult<Vec<usize>>>()?;
    let mut got: Vec<Row> = values.iter().enumerate().map(|(i, d)| Row::new(d_scan_label(i + 1)).with("D", d)).collect();
    got.push(Row::new("d_1").with("D", values.iter().max().unwrap()));
    Ok((expected, got))
}

fn craig_table(k: usize) -> CliResult<(Vec<Row>, Vec<Row>)> {
    let norm = 2 * (k as u64 + 1);
    let rows = golden::CRAIG_PRIMES
        .par_iter()
        .map(|&q| {
            let closed = if k == 2 { craig_count_k2_closed(q)? } else { craig_count_k3_closed(q)? };
            let field = FiniteField::with_order(q)?;
            let label = format!("q={q}");
            let mut e = Row::new(&label).with("histogram", &closed);
            let mut g = Row::new(&label).with("closed_form", &closed).with("histogram", craig_pair_count(&field, k)?);
            if q <= 11 {
                let spec = FamilySpec::Craig { q, k };
                e = e.with("enumerated", &closed);
                g = g.with("enumerated", enumerate_norm(&spec.make()?, norm).pairs());
            }
            if k == 3 {
                if let Some(&(_, c)) = golden::CRAIG_K3_CONSTANTS.iter().find(|(r, _)| q % 24 == *r) {
                    e = e.with("c_q", c);
                    g = g.with("c_q", craig_k3_constant(q)?);
                }
            }
            Ok((e, g))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(rows.into_iter().unzip())
}

/// Recomputes a table and diffs it against the embedded reference values.
pub fn run_table(id: TableId, norm_cap: u64) -> CliResult<TableReport> {
    let (expected, rows) = match id {
        TableId::L7Single => perfection_table(golden::L7_SINGLE, norm_cap)?,
        TableId::L8Single => perfection_table(golden::L8_SINGLE, norm_cap)?,
        TableId::L8Double => perfection_table(golden::L8_DOUBLE, norm_cap)?,
        TableId::O8 => perfection_table(golden::O8, norm_cap)?,
        TableId::O9 => perfection_table(golden::O9, norm_cap)?,
        TableId::M8 => perfection_table(golden::M8, norm_cap)?,
        TableId::M9 => perfection_table(golden::M9, norm_cap)?,
        TableId::DScanK1 => d_scan_table()?,
        TableId::CraigK2 => craig_table(2)?,
        TableId::CraigK3 => craig_table(3)?,
    };
    let diffs = diff_rows(&expected, &rows);
    Ok(TableReport { id, rows, diffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_reports_changed_and_missing_fields() {
        let expected = vec![Row::new("a").with("x", 1).with("y", 2), Row::new("b").with("x", 3)];
        let got = vec![Row::new("a").with("x", 1).with("y", 5)];
        let d = diff_rows(&expected, &got);
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].row.as_str(), d[0].field.as_str(), d[0].expected.as_str(), d[0].got.as_str()), ("a", "y", "2", "5"));
        assert_eq!(d[1].got, "<missing>");
    }

    #[test]
    fn table_names_round_trip() {
        for id in TableId::ALL {
            assert_eq!(TableId::from_str(id.name(), false).unwrap(), id);
        }
    }
}

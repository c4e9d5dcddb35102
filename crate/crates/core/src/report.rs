//! Serialised forms of scan results and cohomology reports.
//!
//! Scan outputs are line-oriented: one text line, one JSON object or one CSV
//! row per record, in the same order for every format. Dimensions are
//! decimal strings since they do not fit in 64 bits in general.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::bott::CohomologyResult;
use crate::bundle::CohomologyReport;
use crate::scan::{ChainFailure, ConditionTuple, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub k: usize,
    pub tuple: Vec<u32>,
    pub partition: Vec<u32>,
    pub twist: i64,
    pub degree: usize,
    pub dominant: Vec<i64>,
    pub dimension: String,
    pub multiplicity: u64,
}

impl From<&Violation> for ViolationRecord {
    fn from(v: &Violation) -> Self {
        ViolationRecord {
            k: v.tuple.k,
            tuple: v.tuple.wedges.clone(),
            partition: v.partition.parts().to_vec(),
            twist: v.twist,
            degree: v.degree,
            dominant: v.dominant.coords().to_vec(),
            dimension: v.dimension.to_string(),
            multiplicity: v.multiplicity,
        }
    }
}

#[derive(Debug, Serialize)]
struct ViolationRow {
    k: usize,
    tuple: String,
    partition: String,
    twist: i64,
    degree: usize,
    dominant: String,
    dimension: String,
    multiplicity: u64,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn paren<T: ToString>(v: &[T]) -> String {
    format!("({})", v.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

pub fn violation_line(r: &ViolationRecord) -> String {
    format!(
        "VIOLATION k={} tuple={} partition={} twist={} degree={} dominant={} dimension={} multiplicity={}",
        r.k,
        paren(&r.tuple),
        paren(&r.partition),
        r.twist,
        r.degree,
        paren(&r.dominant),
        r.dimension,
        r.multiplicity
    )
}

pub fn write_violations(format: Format, violations: &[Violation], w: &mut dyn Write) -> io::Result<()> {
    let records: Vec<ViolationRecord> = violations.iter().map(ViolationRecord::from).collect();
    match format {
        Format::Text => {
            for r in &records {
                writeln!(w, "{}", violation_line(r))?;
            }
        }
        Format::Json => {
            for r in &records {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            for r in records {
                csv.serialize(ViolationRow {
                    k: r.k,
                    tuple: join(&r.tuple),
                    partition: join(&r.partition),
                    twist: r.twist,
                    degree: r.degree,
                    dominant: join(&r.dominant),
                    dimension: r.dimension,
                    multiplicity: r.multiplicity,
                })?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFailureRecord {
    pub i: usize,
    pub j: usize,
    pub twist: i64,
    pub degree: usize,
}

pub fn write_chain_failures(format: Format, failures: &[ChainFailure], w: &mut dyn Write) -> io::Result<()> {
    let records = failures.iter().map(|f| ChainFailureRecord { i: f.i, j: f.j, twist: f.twist, degree: f.degree });
    match format {
        Format::Text => {
            for r in records {
                writeln!(w, "FAILURE LG({}) wedge={} twist={} degree={}", r.i, r.j, r.twist, r.degree)?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *w, &r)?;
                writeln!(w)?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            for r in records {
                csv.serialize(r)?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub k: usize,
    pub n: usize,
    pub i: usize,
    pub tuple: Vec<u32>,
}

pub fn write_tuples(format: Format, tuples: &[ConditionTuple], w: &mut dyn Write) -> io::Result<()> {
    let records = tuples.iter().map(|t| TupleRecord { k: t.k, n: t.n, i: t.i, tuple: t.wedges.clone() });
    match format {
        Format::Text => {
            for r in records {
                writeln!(w, "TUPLE k={} n={} i={} tuple={}", r.k, r.n, r.i, paren(&r.tuple))?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *w, &r)?;
                writeln!(w)?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            for r in records {
                csv.serialize((r.k, r.n, r.i, join(&r.tuple)))?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultRecord {
    Singular,
    NonSingular { degree: usize, dominant: Vec<i64>, dimension: String },
}

impl From<&CohomologyResult> for ResultRecord {
    fn from(r: &CohomologyResult) -> Self {
        match r {
            CohomologyResult::Singular => ResultRecord::Singular,
            CohomologyResult::NonSingular { degree, dominant, dimension } => ResultRecord::NonSingular {
                degree: *degree,
                dominant: dominant.coords().to_vec(),
                dimension: dimension.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub partition: Vec<u32>,
    pub multiplicity: u64,
    pub twist: i64,
    pub result: ResultRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub k: usize,
    pub twist: i64,
    pub summands: Vec<SummandJson>,
    /// degree (as a string key) ↦ dimension
    pub aggregate: std::collections::BTreeMap<String, String>,
}

impl From<&CohomologyReport> for ReportJson {
    fn from(r: &CohomologyReport) -> Self {
        ReportJson {
            k: r.k,
            twist: r.twist,
            summands: r
                .summands
                .iter()
                .map(|s| SummandJson {
                    partition: s.partition.parts().to_vec(),
                    multiplicity: s.multiplicity,
                    twist: s.twist,
                    result: (&s.result).into(),
                })
                .collect(),
            aggregate: r.aggregate.iter().map(|(d, n)| (d.to_string(), n.to_string())).collect(),
        }
    }
}

fn result_text(r: &CohomologyResult) -> String {
    match r {
        CohomologyResult::Singular => "singular".to_string(),
        CohomologyResult::NonSingular { degree, dominant, dimension } => {
            format!("H^{degree} = Γ^{dominant} (dimension {dimension})")
        }
    }
}

pub fn write_report_text(report: &CohomologyReport, show_singular: bool, w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "twist {}:", report.twist)?;
    let mut singular = 0;
    for s in &report.summands {
        if s.result.is_singular() && !show_singular {
            singular += 1;
            continue;
        }
        writeln!(w, "  F{} x{}: {}", s.partition, s.multiplicity, result_text(&s.result))?;
    }
    if singular > 0 {
        writeln!(w, "  ({singular} singular summands)")?;
    }
    if report.aggregate.is_empty() {
        writeln!(w, "  total: all cohomology vanishes")?;
    } else {
        for (d, n) in &report.aggregate {
            writeln!(w, "  total: H^{d} has dimension {n}")?;
        }
    }
    Ok(())
}

//! Output records and their text, JSON and CSV renderings.

use serde::Serialize;

use dompoly::DomPoly;

use crate::Format;

/// One computed polynomial.
///
/// JSON field order is fixed; `coeffs` holds decimal strings in ascending
/// powers. `family` and `n` are null for file input.
#[derive(Serialize, Debug, Clone)]
pub struct PolyRecord {
    pub n: Option<usize>,
    pub family: Option<String>,
    pub coeffs: DomPoly,
    pub gamma: Option<usize>,
    pub count_at_1: String,
    pub vertices: usize,
    pub degree: Option<usize>,
    pub method: &'static str,
}

impl PolyRecord {
    pub fn new(family: Option<String>, n: Option<usize>, vertices: usize, method: &'static str, p: DomPoly) -> Self {
        PolyRecord {
            n,
            family,
            gamma: p.lowest_index(),
            count_at_1: p.eval_at(1).to_string(),
            vertices,
            degree: p.degree(),
            method,
            coeffs: p,
        }
    }

    fn label(&self) -> String {
        match (&self.family, self.n) {
            (Some(f), Some(n)) => format!("{f}_{n}"),
            _ => "graph".to_string(),
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub const POLY_CSV_HEADER: &str = "family,n,vertices,degree,gamma,count_at_1,polynomial";

/// A single record renders as the bare polynomial in text mode and as an
/// object in JSON; several records render one line each, or a JSON array.
pub fn render_polys(records: &[PolyRecord], format: Format) -> String {
    match format {
        Format::Text if records.len() == 1 => format!("{}\n", records[0].coeffs),
        Format::Text => {
            let mut out = String::new();
            for r in records {
                out.push_str(&format!(
                    "{}  vertices={} degree={} gamma={} count={}  {}\n",
                    r.label(),
                    r.vertices,
                    opt(r.degree),
                    opt(r.gamma),
                    r.count_at_1,
                    r.coeffs
                ));
            }
            out
        }
        Format::Json if records.len() == 1 => json(&records[0]),
        Format::Json => json(&records),
        Format::Csv => {
            let mut out = format!("{POLY_CSV_HEADER}\n");
            for r in records {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.family.clone().unwrap_or_default(),
                    opt(r.n),
                    r.vertices,
                    opt(r.degree),
                    opt(r.gamma),
                    r.count_at_1,
                    r.coeffs
                ));
            }
            out
        }
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

#[derive(Serialize, Debug)]
pub struct SequenceValue {
    pub n: usize,
    pub value: String,
}

#[derive(Serialize, Debug)]
pub struct Sequence {
    pub family: String,
    pub values: Vec<SequenceValue>,
}

pub fn render_sequence(seq: &Sequence, format: Format) -> String {
    match format {
        Format::Text => {
            let parts: Vec<&str> = seq.values.iter().map(|v| v.value.as_str()).collect();
            format!("{}\n", parts.join(", "))
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for v in &seq.values {
                out.push_str(&format!("{},{}\n", v.n, v.value));
            }
            out
        }
        Format::Json => json(seq),
    }
}

/// One timing cell. Skipped cells carry the reason in `note`.
#[derive(Serialize, Debug)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub vertices: usize,
    pub method: &'static str,
    pub status: &'static str,
    pub seconds: Option<f64>,
    pub subsets: Option<String>,
    pub speedup: Option<f64>,
    pub note: String,
}

pub const BENCH_CSV_HEADER: &str = "family,n,vertices,method,status,seconds,subsets,speedup,note";

pub fn render_bench(rows: &[BenchRow], format: Format) -> String {
    let secs = |s: Option<f64>| s.map(|v| format!("{v:.6}")).unwrap_or_default();
    let speed = |s: Option<f64>| s.map(|v| format!("{v:.1}")).unwrap_or_default();
    match format {
        Format::Csv => {
            let mut out = format!("{BENCH_CSV_HEADER}\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    r.family,
                    r.n,
                    r.vertices,
                    r.method,
                    r.status,
                    secs(r.seconds),
                    r.subsets.clone().unwrap_or_default(),
                    speed(r.speedup),
                    r.note
                ));
            }
            out
        }
        Format::Json => json(rows),
        Format::Text => {
            let mut out = format!(
                "{:<6} {:>4} {:>8} {:<10} {:<8} {:>12} {:>12} {:>9}  note\n",
                "family", "n", "vertices", "method", "status", "seconds", "subsets", "speedup"
            );
            for r in rows {
                out.push_str(&format!(
                    "{:<6} {:>4} {:>8} {:<10} {:<8} {:>12} {:>12} {:>9}  {}\n",
                    r.family,
                    r.n,
                    r.vertices,
                    r.method,
                    r.status,
                    secs(r.seconds),
                    r.subsets.clone().unwrap_or_default(),
                    speed(r.speedup),
                    r.note
                ));
            }
            out
        }
    }
}

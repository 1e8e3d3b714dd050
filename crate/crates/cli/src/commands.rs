use std::fs;
use std::time::Instant;

use num_bigint::BigInt;

use dompoly::families::{build_chain, family_polynomial, o_system, q_system, t_count_sequence};
use dompoly::{
    verify_families, ChainKind, DecompositionConfig, Decomposer, DomPoly, Family, FamilySpec, Form, Graph,
    Method, Oracle, RecurrenceVariants, VerifyOptions,
};

use crate::output::{self, BenchRow, PolyRecord, Sequence, SequenceValue};
use crate::{BenchArgs, ComputeArgs, Failure, Format, MethodArg, SequenceArgs, VerifyArgs};

fn graph_polynomial(g: &Graph, method: MethodArg, oracle: &Oracle) -> dompoly::Result<DomPoly> {
    let method = match method {
        MethodArg::Oracle => Method::Oracle,
        MethodArg::Vertex => Method::Vertex,
        MethodArg::Edge => Method::Edge,
        MethodArg::Product => Method::Product,
        MethodArg::Recurrence => unreachable!("checked by caller"),
    };
    let config = DecompositionConfig {
        leaf_threshold: DecompositionConfig::default().leaf_threshold.min(oracle.cap()),
        oracle: *oracle,
        ..Default::default()
    };
    Decomposer::new(config).compute(g, method)
}

fn family_record(spec: FamilySpec, method: MethodArg, oracle: &Oracle) -> Result<PolyRecord, Failure> {
    let with_n = |e: dompoly::Error| match Failure::from(e) {
        Failure::Cap(msg) => Failure::Cap(format!("{spec}: {msg}")),
        other => other,
    };
    let p = match method {
        MethodArg::Recurrence => family_polynomial(spec).map_err(with_n)?,
        m => graph_polynomial(&build_chain(spec)?, m, oracle).map_err(with_n)?,
    };
    Ok(PolyRecord::new(
        Some(spec.family.to_string()),
        Some(spec.n),
        spec.vertex_count(),
        method.name(),
        p,
    ))
}

pub fn compute(args: &ComputeArgs) -> Result<String, Failure> {
    let oracle = Oracle::new(args.common.cap)?;
    let records = match (args.family, &args.file) {
        (Some(family), _) => {
            let method = args.method.unwrap_or(MethodArg::Recurrence);
            let range = args.n.clone().expect("clap requires --n with --family");
            let mut records = Vec::new();
            for n in range {
                records.push(family_record(FamilySpec::new(family, n)?, method, &oracle)?);
            }
            records
        }
        (None, Some(path)) => {
            let method = args.method.unwrap_or(MethodArg::Oracle);
            if method == MethodArg::Recurrence {
                return Err(Failure::Usage(
                    "--method recurrence applies only to --family inputs".into(),
                ));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let g = Graph::parse_edge_list(&text).map_err(|e| match Failure::from(e) {
                Failure::Usage(msg) => Failure::Usage(format!("{}: {msg}", path.display())),
                other => other,
            })?;
            let p = graph_polynomial(&g, method, &oracle)?;
            vec![PolyRecord::new(None, None, g.n(), method.name(), p)]
        }
        (None, None) => unreachable!("clap requires --family or --file"),
    };
    Ok(output::render_polys(&records, args.common.format))
}

pub fn verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let opts = VerifyOptions {
        max_n: args.max_n,
        chains: args.family.map(|f| vec![f.chain()]),
        oracle: Oracle::new(args.common.cap)?,
    };
    let mut report = verify_families(&opts);
    let ok = report.all_adopted_match();
    if !args.literal_paper {
        report.entries.retain(|e| e.form == Form::Adopted);
    }
    let text = match args.common.format {
        Format::Text => report.render_text(args.literal_paper),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("family,n,identity,form,match,first_mismatch,error\n");
            for e in &report.entries {
                let form = match e.form {
                    Form::Adopted => "adopted",
                    Form::Literal => "literal",
                    Form::Alternative => "alternative",
                };
                out.push_str(&format!(
                    "{},{},\"{}\",{},{},{},\"{}\"\n",
                    e.family,
                    e.n,
                    e.identity,
                    form,
                    e.matched,
                    e.first_mismatch.map(|i| i.to_string()).unwrap_or_default(),
                    e.error.clone().unwrap_or_default().replace('"', "'")
                ));
            }
            out
        }
    };
    Ok((text, ok))
}

/// `D(X_n, 1)` for every valid `n <= max_n`; T starts at `t_0 = 2`.
fn sequence_values(family: Family, max_n: usize) -> Result<Vec<(usize, BigInt)>, Failure> {
    if family == Family::T {
        return Ok(t_count_sequence(max_n).into_iter().enumerate().collect());
    }
    let first = family.min_n().max(if family.gadget().is_none() { 1 } else { 0 });
    if max_n < first {
        return Ok(Vec::new());
    }
    let state = match family.chain() {
        ChainKind::Para => q_system(max_n, RecurrenceVariants::default())?,
        ChainKind::Ortho => o_system(max_n, RecurrenceVariants::default())?,
        ChainKind::Triangular => unreachable!("only T is triangular"),
    };
    Ok((first..=max_n)
        .map(|n| (n, state.get(family, n).expect("record exists").eval_at(1)))
        .collect())
}

pub fn sequence(args: &SequenceArgs) -> Result<String, Failure> {
    let values = sequence_values(args.family, args.max_n)?
        .into_iter()
        .map(|(n, v)| SequenceValue {
            n,
            value: v.to_string(),
        })
        .collect();
    let seq = Sequence {
        family: args.family.to_string(),
        values,
    };
    Ok(output::render_sequence(&seq, args.common.format))
}

fn fastest<T>(repeat: u32, mut f: impl FnMut() -> T) -> (f64, T) {
    let mut best = f64::INFINITY;
    let mut last = None;
    for _ in 0..repeat {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed().as_secs_f64());
        last = Some(value);
    }
    (best, last.expect("repeat >= 1"))
}

pub fn bench(args: &BenchArgs) -> Result<String, Failure> {
    let oracle = Oracle::new(args.common.cap)?;
    let mut rows = Vec::new();
    for n in args.n.clone() {
        let spec = FamilySpec::new(args.family, n)?;
        let vertices = spec.vertex_count();
        let base = |method, status, seconds, note: String| BenchRow {
            family: args.family.to_string(),
            n,
            vertices,
            method,
            status,
            seconds,
            subsets: None,
            speedup: None,
            note,
        };

        let oracle_run = if vertices > oracle.cap() {
            rows.push(base(
                "oracle",
                "skipped",
                None,
                format!("{vertices} vertices exceed the oracle cap of {}", oracle.cap()),
            ));
            None
        } else {
            let g = build_chain(spec)?;
            let (secs, p) = fastest(args.repeat, || oracle.domination_polynomial(&g));
            let mut row = base("oracle", "ok", Some(secs), String::new());
            row.subsets = Some((BigInt::from(1) << vertices).to_string());
            rows.push(row);
            Some((secs, p?))
        };

        let (secs, p) = fastest(args.repeat, || family_polynomial(spec));
        let p = p?;
        let mut row = base("recurrence", "ok", Some(secs), format!("degree {}", p.degree().unwrap_or(0)));
        if let Some((oracle_secs, oracle_p)) = oracle_run {
            row.speedup = Some(oracle_secs / secs.max(1e-9));
            if oracle_p != p {
                row.status = "mismatch";
            }
        }
        rows.push(row);
    }
    Ok(output::render_bench(&rows, args.common.format))
}

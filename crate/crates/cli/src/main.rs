//! `dflag`: orbit enumeration, invariants, closure order, Hecke matrices,
//! Weyl decomposition and verification for one shape `(p, q, r)`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dflag_core::hecke::{verify_relations, weyl_decompose, Generator, HeckeModule};
use dflag_core::oracle::{certify_action, check_field_size};
use dflag_core::orbit::{enumerate_graphs, invariants, rank_matrix};
use dflag_core::poset::build_poset;
use dflag_core::{Error, Shape};

#[derive(Parser)]
#[command(
    name = "dflag",
    version,
    about = "K-orbits on K/B_K x Gr_r for K = GL_p x GL_q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all orbit graphs in enumeration order.
    Enumerate(Common),
    /// Table of a+, a-, b, c, dim and rank matrix per orbit.
    Invariants(Common),
    /// Hasse diagram of the closure order.
    Hasse(Common),
    /// Matrix of one Hecke generator on the orbit basis.
    HeckeMatrix {
        #[command(flatten)]
        common: Common,
        /// Generator such as +1 or -2; defaults to the first available.
        #[arg(long, allow_hyphen_values = true)]
        generator: Option<Generator>,
    },
    /// W_K-orbits of the basis at q = 1.
    WeylDecomp(Common),
    /// Relation checks, Weyl decomposition, grading and finite-field
    /// certification.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Field size for the oracle; repeat for several.
        #[arg(long = "field", default_values_t = [3u32])]
        fields: Vec<u32>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Text => "text",
        }
    }
}

/// Failure of a run, mapped to an exit code.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidShape { .. }
            | Error::UnsupportedField(_)
            | Error::GeneratorOutOfRange { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

impl Common {
    fn shape(&self) -> Result<Shape, Failure> {
        Ok(Shape::new(self.p, self.q, self.r)?)
    }

    /// First entry of `allowed` is the default.
    fn format(&self, command: &str, allowed: &[Format]) -> Result<Format, Failure> {
        match self.format {
            None => Ok(allowed[0]),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(Failure::Usage(format!(
                "format {} is not available for {command}; use one of {}",
                f.name(),
                allowed
                    .iter()
                    .map(|f| f.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))),
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    // round trip through Value for sorted keys
    let v: Value = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn run_enumerate(c: &Common) -> Outcome {
    let shape = c.shape()?;
    let format = c.format("enumerate", &[Format::Json, Format::Text])?;
    let graphs = enumerate_graphs(&shape);
    let out = match format {
        Format::Json => to_json(&graphs),
        _ => graphs
            .iter()
            .enumerate()
            .fold(String::new(), |mut s, (i, g)| {
                let _ = writeln!(s, "{i}\t{g}");
                s
            }),
    };
    Ok((out, true))
}

fn run_invariants(c: &Common) -> Outcome {
    let shape = c.shape()?;
    let format = c.format("invariants", &[Format::Text, Format::Json, Format::Csv])?;
    let graphs = enumerate_graphs(&shape);
    let out = match format {
        Format::Json => {
            let rows: Vec<Value> = graphs
                .iter()
                .enumerate()
                .map(|(index, g)| {
                    let inv = invariants(g);
                    json!({
                        "index": index,
                        "graph": g,
                        "a_plus": inv.a_plus,
                        "a_minus": inv.a_minus,
                        "b": inv.b,
                        "c": inv.c,
                        "dim": inv.dim,
                        "rank_matrix": rank_matrix(g).to_rows(),
                    })
                })
                .collect();
            to_json(&rows)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header = [
                "index",
                "graph",
                "a_plus",
                "a_minus",
                "b",
                "c",
                "dim",
                "rank_matrix",
            ];
            w.write_record(header)
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            for (index, g) in graphs.iter().enumerate() {
                let inv = invariants(g);
                let rec = [
                    index.to_string(),
                    g.to_string(),
                    inv.a_plus.to_string(),
                    inv.a_minus.to_string(),
                    inv.b.to_string(),
                    inv.c.to_string(),
                    inv.dim.to_string(),
                    rank_matrix(g).to_string(),
                ];
                w.write_record(&rec)
                    .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            String::from_utf8(bytes).expect("utf-8")
        }
        _ => {
            let mut s = String::from("index\tgraph\ta+\ta-\tb\tc\tdim\trank_matrix\n");
            for (index, g) in graphs.iter().enumerate() {
                let inv = invariants(g);
                let _ = writeln!(
                    s,
                    "{index}\t{g}\t{}\t{}\t{}\t{}\t{}\t{}",
                    inv.a_plus,
                    inv.a_minus,
                    inv.b,
                    inv.c,
                    inv.dim,
                    rank_matrix(g)
                );
            }
            s
        }
    };
    Ok((out, true))
}

fn run_hasse(c: &Common) -> Outcome {
    let shape = c.shape()?;
    let format = c.format("hasse", &[Format::Dot, Format::Json])?;
    let poset = build_poset(&shape)?;
    let out = match format {
        Format::Json => to_json(&poset.to_report()),
        _ => poset.to_dot(),
    };
    Ok((out, true))
}

fn run_hecke_matrix(c: &Common, generator: Option<Generator>) -> Outcome {
    let shape = c.shape()?;
    let format = c.format("hecke-matrix", &[Format::Csv, Format::Json, Format::Text])?;
    let module = HeckeModule::new(&shape);
    let Some(&first) = module.generators().first() else {
        return Err(Failure::Usage(Error::NoGenerators(shape).to_string()));
    };
    let generator = generator.unwrap_or(first);
    generator.validate(&shape)?;
    let matrix = module.operator_matrix(generator)?;
    let out = match format {
        Format::Json => {
            let entries: Vec<Vec<String>> = matrix
                .to_dense()
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect();
            to_json(&json!({
                "shape": shape,
                "generator": generator,
                "basis": module.basis(),
                "matrix": entries,
            }))
        }
        Format::Text => {
            let mut s = String::new();
            for (col, g) in module.basis().iter().enumerate() {
                let terms: Vec<String> = matrix
                    .column(col)
                    .iter()
                    .map(|(row, c)| format!("({c}) ξ{row}"))
                    .collect();
                let _ = writeln!(s, "T{generator} ξ{col} [{g}] = {}", terms.join(" + "));
            }
            s
        }
        _ => matrix.to_csv(),
    };
    Ok((out, true))
}

fn run_weyl(c: &Common) -> Outcome {
    let shape = c.shape()?;
    let format = c.format("weyl-decomp", &[Format::Json, Format::Text])?;
    let d = weyl_decompose(&shape);
    let out = match format {
        Format::Text => {
            let mut s = format!("{shape}: {} orbits in {} blocks\n", d.total, d.blocks.len());
            for b in &d.blocks {
                let _ = writeln!(
                    s,
                    "{}\tsize {} (expected {})\tstabilizer {} (expected {})\tbase {}",
                    b.triple,
                    b.orbit_size,
                    b.expected_size,
                    b.stabilizer_order,
                    b.expected_stabilizer_order,
                    b.base
                );
            }
            s
        }
        _ => to_json(&d),
    };
    Ok((out, d.passed()))
}

fn run_verify(c: &Common, fields: &[u32]) -> Outcome {
    let shape = c.shape()?;
    let format = c.format("verify", &[Format::Text, Format::Json])?;
    for &f in fields {
        check_field_size(f)?;
    }
    let relations = verify_relations(&shape);
    let weyl = weyl_decompose(&shape);
    let grading = build_poset(&shape).map(|_| ()).map_err(|e| e.to_string());
    let certification = certify_action(&shape, fields)?;

    let checks = [
        ("hecke relations", relations.all_passed()),
        ("weyl decomposition", weyl.passed()),
        ("poset grading", grading.is_ok()),
        (
            "oracle classification",
            certification
                .classifications
                .iter()
                .all(|c| c.sizes_sum_to_grassmannian()),
        ),
        ("oracle convolution", certification.mismatches == 0),
    ];
    let ok = checks.iter().all(|&(_, pass)| pass);
    let out = match format {
        Format::Json => {
            let summary: serde_json::Map<String, Value> = checks
                .iter()
                .map(|&(name, pass)| (name.replace(' ', "_"), Value::Bool(pass)))
                .collect();
            to_json(&json!({
                "shape": shape,
                "fields": fields,
                "passed": ok,
                "checks": summary,
                "relations": relations,
                "certification": certification,
            }))
        }
        _ => {
            let mut s = String::new();
            for (name, pass) in checks {
                let _ = writeln!(s, "{} {name}", if pass { "PASS" } else { "FAIL" });
            }
            if let Err(e) = &grading {
                let _ = writeln!(s, "  {e}");
            }
            let _ = writeln!(
                s,
                "{} relations, {} certified coefficients over F_{:?}, {} mismatches",
                relations.checks.len(),
                certification.entries.len(),
                fields,
                certification.mismatches
            );
            s
        }
    };
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Enumerate(c) => (c, run_enumerate(c)),
        Command::Invariants(c) => (c, run_invariants(c)),
        Command::Hasse(c) => (c, run_hasse(c)),
        Command::HeckeMatrix { common, generator } => {
            (common, run_hecke_matrix(common, *generator))
        }
        Command::WeylDecomp(c) => (c, run_weyl(c)),
        Command::Verify { common, fields } => (common, run_verify(common, fields)),
    };
    match result {
        Ok((text, ok)) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("dflag: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("dflag: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("dflag: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("dflag: {msg}");
            ExitCode::from(1)
        }
    }
}

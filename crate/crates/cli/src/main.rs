use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cospec::charpoly::{charpoly, SpectralKind};
use cospec::family::{table1_row, FamilyGenerator, FamilyReport, PatternGraph, TABLE_PATTERNS};
use cospec::fixtures;
use cospec::graph::{parse_graph6, Graph};
use cospec::walk::{is_one_walk_regular, is_strongly_regular, is_walk_regular};
use cospec::witness::{
    gram_factor, incidence_transfer_check, kind_dmatrix, laplacian_pair_witness, matrix_from_rows, similarity_witness,
    GramMethod, OrthoWitness,
};
use cospec::Error;
use nalgebra::DVector;
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cospec", version, about = "Cospectral families from edge deletions in cliques of 1-walk-regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for family generation
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Exact characteristic polynomials
    Charpoly {
        /// A, L, S or N; repeatable, all kinds when omitted
        #[arg(long, short)]
        kind: Vec<String>,
        /// graph6 files or builtin:NAME
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Walk-regularity, 1-walk-regularity and strong regularity
    Check {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Deletion family of one pattern, or the union family of two
    Family {
        #[arg(long)]
        host: String,
        /// K2, K3, K4, P3, Y1, Y2 or a graph6 word
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        pattern2: Option<String>,
        /// L or S for union families
        #[arg(long, default_value = "S")]
        kind: String,
        /// Skip the cospectrality hypotheses on the pattern pair
        #[arg(long)]
        unchecked: bool,
    },
    /// Class counts for the six table patterns; built-in hosts when no files are given
    Table1 { hosts: Vec<String> },
    /// Orthogonal witness between two graphs, or a Gram factor between two matrices
    Witness {
        #[arg(long, short)]
        kind: Option<String>,
        /// Also transfer the witness to the incidence matrices
        #[arg(long)]
        incidence: bool,
        /// Two JSON files holding matrices as arrays of rows
        #[arg(long, num_args = 2, value_names = ["B", "C"])]
        gram: Option<Vec<PathBuf>>,
        #[arg(long, default_value = "svd")]
        method: String,
        inputs: Vec<String>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::FamilyViolation(_) | Error::Numerical(_) | Error::Internal(_)) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Usage(m) => f.write_str(m),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// A report in both renderings.
struct Report {
    text: String,
    json: String,
}

fn pretty<T: Serialize + ?Sized>(x: &T) -> Outcome<String> {
    Ok(serde_json::to_string_pretty(x).map_err(|e| Error::Internal(e.to_string()))?)
}

/// Graphs named by one input: `builtin:NAME`, or a file of graph6 lines.
fn load(input: &str) -> Outcome<Vec<(String, Graph)>> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return Ok(vec![(name.to_string(), fixtures::builtin(name)?)]);
    }
    let text = fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let word = line.split('#').next().unwrap_or("").trim();
        if word.is_empty() {
            continue;
        }
        let g = parse_graph6(word.as_bytes()).map_err(|e| Failure::Usage(format!("{input}:{}: {e}", i + 1)))?;
        out.push((format!("{input}:{}", i + 1), g));
    }
    if out.is_empty() {
        return Err(Failure::Usage(format!("{input}: no graphs")));
    }
    Ok(out)
}

fn load_one(input: &str) -> Outcome<Graph> {
    let mut gs = load(input)?;
    if gs.len() != 1 {
        return Err(Failure::Usage(format!("{input}: expected one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0).1)
}

fn kinds(names: &[String]) -> Outcome<Vec<SpectralKind>> {
    if names.is_empty() {
        return Ok(SpectralKind::ALL.to_vec());
    }
    Ok(names.iter().map(|k| k.parse()).collect::<Result<_, _>>()?)
}

fn cmd_charpoly(kind: &[String], inputs: &[String]) -> Outcome<Report> {
    let kinds = kinds(kind)?;
    let mut text = String::new();
    let mut records: Vec<serde_json::Value> = Vec::new();
    for input in inputs {
        for (name, g) in load(input)? {
            for &k in &kinds {
                let p = charpoly(&g, k)?;
                text += &format!("{name} {k} {p}\n");
                records.push(json!({ "graph": name, "kind": k.symbol(), "charpoly": p }));
            }
        }
    }
    Ok(Report { text, json: pretty(&records)? })
}

fn cmd_check(inputs: &[String]) -> Outcome<Report> {
    let mut text = String::new();
    let mut records: Vec<serde_json::Value> = Vec::new();
    for input in inputs {
        for (name, g) in load(input)? {
            let wr = is_walk_regular(&g)?;
            let one = is_one_walk_regular(&g)?;
            let srg = is_strongly_regular(&g);
            text += &format!("{name}: walk-regular {}, 1-walk-regular {}", wr.walk_regular, one.pass);
            if let Some(w) = &one.witness {
                text += &format!(" (fails at {w:?})");
            }
            match srg {
                Some(p) => text += &format!(", SRG({},{},{},{})\n", p.n, p.k, p.a, p.c),
                None => text += ", not strongly regular\n",
            }
            records.push(json!({ "graph": name, "walk_regular": wr, "one_walk_regular": one, "srg": srg }));
        }
    }
    Ok(Report { text, json: pretty(&records)? })
}

fn family_text(r: &FamilyReport) -> String {
    let mut t = format!("host {}, patterns {}\n", r.host, r.patterns.join(" + "));
    t += &format!("embeddings={} classes={}", r.embeddings, r.class_count());
    if r.patterns.len() > 1 {
        let parts: Vec<String> = r.pattern_class_counts.iter().map(usize::to_string).collect();
        t += &format!(" ({})", parts.join(" + "));
    }
    t += "\n";
    for (k, ps) in &r.family_charpolys {
        t += &format!("{k}: {} polynomial(s)\n", ps.len());
    }
    for (k, ps) in r.complement_charpolys.iter().flatten() {
        t += &format!("complement {k}: {} polynomial(s)\n", ps.len());
    }
    if !r.skipped_kinds.is_empty() {
        t += &format!("skipped (isolated vertices): {}\n", r.skipped_kinds.join(", "));
    }
    for v in &r.violations {
        t += &format!("violation: {v}\n");
    }
    t
}

fn cmd_family(
    host: &str,
    pattern: &str,
    pattern2: Option<&str>,
    kind: &str,
    unchecked: bool,
    workers: usize,
) -> Outcome<Report> {
    let gen = FamilyGenerator::new(&load_one(host)?, host)?.with_workers(workers);
    let p1 = PatternGraph::parse(pattern)?;
    let report = match pattern2 {
        None => gen.generate_family(&p1)?,
        Some(p2) => gen.generate_pair_family(&p1, &PatternGraph::parse(p2)?, kind.parse()?, !unchecked)?,
    };
    Ok(Report { text: family_text(&report), json: pretty(&report)? })
}

fn cmd_table1(hosts: &[String], workers: usize) -> Outcome<Report> {
    let graphs: Vec<(String, Graph)> = if hosts.is_empty() {
        vec![("X1".into(), fixtures::x1()), ("X3".into(), fixtures::x3()), ("X14".into(), fixtures::latin5())]
    } else {
        let mut all = Vec::new();
        for h in hosts {
            all.extend(load(h)?);
        }
        all
    };
    let mut text = format!("{:<16}{}\n", "host", TABLE_PATTERNS.map(|p| format!("{p:>6}")).concat());
    let mut rows = Vec::new();
    for (name, g) in graphs {
        let row = table1_row(&FamilyGenerator::new(&g, &name)?.with_workers(workers))?;
        text += &format!("{name:<16}{}\n", row.map(|c| format!("{c:>6}")).concat());
        rows.push(json!({ "host": name, "patterns": TABLE_PATTERNS, "counts": row }));
    }
    Ok(Report { text, json: pretty(&rows)? })
}

fn read_matrix(path: &PathBuf) -> Outcome<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn witness_text(label: &str, w: &OrthoWitness) -> String {
    let mut t = format!("{label}: {}x{} orthogonal, defect {:.3e}\n", w.q.nrows(), w.q.ncols(), w.orthogonality);
    for r in &w.residuals {
        t += &format!("  {} = {:.3e} (scale {})\n", r.name, r.value, r.scale);
    }
    t
}

fn cmd_witness(
    kind: Option<&str>,
    incidence: bool,
    gram: Option<&[PathBuf]>,
    method: &str,
    inputs: &[String],
) -> Outcome<Report> {
    if let Some(paths) = gram {
        let b = matrix_from_rows(&read_matrix(&paths[0])?)?;
        let c = matrix_from_rows(&read_matrix(&paths[1])?)?;
        let method: GramMethod = method.parse()?;
        let w = gram_factor(&b, &c, method)?;
        return Ok(Report { text: witness_text("QB = C", &w), json: pretty(&w)? });
    }
    let [a, b] = inputs else {
        return Err(Failure::Usage("witness needs two graphs or --gram B.json C.json".into()));
    };
    let (g1, g2) = (load_one(a)?, load_one(b)?);
    let kind: SpectralKind = kind.unwrap_or("S").parse()?;
    if incidence {
        let (q, q0) = incidence_transfer_check(&g1, &g2, kind)?;
        let text = witness_text("vertex witness", &q) + &witness_text("incidence witness", &q0);
        return Ok(Report { text, json: pretty(&BTreeMap::from([("vertex", &q), ("incidence", &q0)]))? });
    }
    let w = match kind {
        SpectralKind::Laplacian => laplacian_pair_witness(&g1, &g2)?,
        _ => {
            let ones = DVector::from_element(g1.order(), 1.0);
            similarity_witness(&kind_dmatrix(&g1, kind), &kind_dmatrix(&g2, kind), &ones, &ones)?
        }
    };
    Ok(Report { text: witness_text(&format!("{kind} witness"), &w), json: pretty(&w)? })
}

fn run(cli: &Cli) -> Outcome<Report> {
    let workers = cli.out.workers as usize;
    match &cli.command {
        Command::Charpoly { kind, inputs } => cmd_charpoly(kind, inputs),
        Command::Check { inputs } => cmd_check(inputs),
        Command::Family { host, pattern, pattern2, kind, unchecked } => {
            cmd_family(host, pattern, pattern2.as_deref(), kind, *unchecked, workers)
        }
        Command::Table1 { hosts } => cmd_table1(hosts, workers),
        Command::Witness { kind, incidence, gram, method, inputs } => {
            cmd_witness(kind.as_deref(), *incidence, gram.as_deref(), method, inputs)
        }
    }
}

fn emit(out: &OutputArgs, report: &Report) -> std::io::Result<()> {
    let body = if out.json {
        format!("{}\n", report.json)
    } else {
        report.text.clone()
    };
    match &out.output {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match emit(&cli.out, &report) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(f) => {
            if cli.out.json {
                println!("{}", json!({ "error": f.to_string(), "exit_code": f.code() }));
            }
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

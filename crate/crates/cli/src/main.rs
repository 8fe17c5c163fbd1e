use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sperfect::chordal::random_chordal;
use sperfect::enumerate::connected_chordal_graphs;
use sperfect::harness::{
    analyze, explore_conjecture, explore_conjecture_exhaustive, reading_name, verify_main_theorem, AnalyzeOptions,
    ConjectureReport, TheoremSummary,
};
use sperfect::perfection::{is_s_perfect_brute, minimal_imperfect_properties, MinimalImperfectProperties, Witness};
use sperfect::{from_edge_list, from_graph6, to_dot, to_edge_list, to_graph6, FamilySpec, Graph, ParityFilter};

#[derive(Parser)]
#[command(name = "sperfect", version, about = "Star covers, distance-3 packings and S-perfection of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report (chordality, α_S, θ_S, suns, perfection) per input graph.
    Analyze(AnalyzeArgs),
    /// Build a graph from a named family.
    Generate(GenerateArgs),
    /// Check that brute-force perfection matches odd-sun freeness on chordal graphs.
    VerifyTheorem(VerifyArgs),
    /// Compare perfection with freedom from forbidden cycles and odd super suns.
    ExploreConjecture(ExploreArgs),
    /// Minimal S-imperfect induced subgraph and its structural profile.
    MinimalWitness(WitnessArgs),
}

#[derive(Args)]
struct Io {
    /// Input file, or `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Output file, or `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    output: String,
    /// One JSON record per line instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    /// One graph6 string per line.
    G6,
    /// A single graph as an edge list.
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    G6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Any,
    Odd,
    Even,
}

impl From<ParityArg> for ParityFilter {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Any => ParityFilter::Any,
            ParityArg::Odd => ParityFilter::Odd,
            ParityArg::Even => ParityFilter::Even,
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, value_enum, default_value = "g6")]
    format: InputFormat,
    /// Sun parities to search for.
    #[arg(long, value_enum, default_value = "any")]
    parity: ParityArg,
    /// Include wall-clock time in reports.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// path, cycle, complete, star, sun, extended-sun, super-sun,
    /// special-path or random-chordal.
    family: Option<String>,
    /// Whole family description, e.g. "family=sun k=5 inner=fan".
    #[arg(long, conflicts_with = "family")]
    spec: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Clique sizes of an extended sun, comma separated.
    #[arg(long)]
    sizes: Option<String>,
    /// Spoke sizes of a super sun, comma separated.
    #[arg(long)]
    spokes: Option<String>,
    /// Inner chords: none, fan, complete or a list such as 1-3,1-4 (0-based).
    #[arg(long)]
    inner: Option<String>,
    /// Path length of a special path.
    #[arg(long)]
    len: Option<usize>,
    /// Edge indices of a special path that get a triangle apex.
    #[arg(long)]
    triangles: Option<String>,
    #[arg(long)]
    fill: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "g6")]
    format: OutputFormat,
    #[arg(long = "out", default_value = "-")]
    output: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input file of graph6 lines; used when neither --exhaustive nor --random is given.
    #[arg(long = "in")]
    input: Option<String>,
    #[arg(long = "out", default_value = "-")]
    output: String,
    #[arg(long)]
    json: bool,
    /// All connected chordal graphs with 1..=N vertices.
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Number of random chordal graphs to add.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// Largest order of the random graphs.
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExploreArgs {
    /// Input file of graph6 lines; used unless --exhaustive is given.
    #[arg(long = "in")]
    input: Option<String>,
    #[arg(long = "out", default_value = "-")]
    output: String,
    #[arg(long)]
    json: bool,
    /// All connected graphs with 1..=N vertices.
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Skip stream graphs with more vertices than this.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, value_enum, default_value = "g6")]
    format: InputFormat,
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    Ok(if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(File::open(path).with_context(|| format!("cannot read {path}"))?))
    })
}

fn open_output(path: &str) -> Result<Box<dyn Write>> {
    Ok(if path == "-" {
        Box::new(BufWriter::new(io::stdout()))
    } else {
        Box::new(BufWriter::new(File::create(PathBuf::from(path)).with_context(|| format!("cannot write {path}"))?))
    })
}

fn read_graphs(path: &str, format: InputFormat) -> Result<Vec<Graph>> {
    let mut input = open_input(path)?;
    match format {
        InputFormat::Edges => {
            let mut text = String::new();
            input.read_to_string(&mut text).with_context(|| format!("cannot read {path}"))?;
            Ok(vec![from_edge_list(&text)?])
        }
        InputFormat::G6 => {
            let mut graphs = Vec::new();
            for (i, line) in input.lines().enumerate() {
                let line = line.with_context(|| format!("cannot read {path}"))?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                graphs.push(from_graph6(line).with_context(|| format!("line {}", i + 1))?);
            }
            Ok(graphs)
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn list(v: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = v.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<u8> {
    let graphs = read_graphs(&a.io.input, a.format)?;
    let mut out = open_output(&a.io.output)?;
    let opts = AnalyzeOptions { timing: a.timing, parity: a.parity.into() };
    for g in &graphs {
        let r = analyze(g, opts)?;
        if a.io.json {
            emit_json(&mut out, &r)?;
            continue;
        }
        writeln!(out, "{}  n={} m={}", r.graph6, r.n, r.edges)?;
        match &r.chordality.hole {
            None => writeln!(out, "  chordal: yes")?,
            Some(h) => writeln!(out, "  chordal: no, hole {:?}", h.cycle)?,
        }
        writeln!(out, "  simplicial: {}", list(r.simplicial))?;
        writeln!(out, "  alpha_S = {}  packing {}", r.alpha_s, list(r.packing.vertices))?;
        writeln!(out, "  theta_S = {}  centers {}", r.theta_s, list(r.cover.centers()))?;
        for (name, sun) in [("odd sun", &r.odd_sun), ("even sun", &r.even_sun)] {
            match sun {
                Some(s) => writeln!(out, "  {name}: {s}")?,
                None => writeln!(out, "  {name}: none")?,
            }
        }
        if let Some(v) = &r.perfection_brute {
            write!(out, "  S-perfect (brute): {}", if v.is_s_perfect { "yes" } else { "no" })?;
            match &v.witness {
                Some(w) => writeln!(out, ", witness {} on {}", w.graph6, list(w.vertices))?,
                None => writeln!(out)?,
            }
        }
        if let Some(v) = &r.perfection_theorem {
            writeln!(out, "  S-perfect (odd-sun test): {}", if v.is_s_perfect { "yes" } else { "no" })?;
        }
        if let Some(ms) = r.elapsed_ms {
            writeln!(out, "  elapsed: {ms:.3} ms")?;
        }
    }
    out.flush()?;
    Ok(0)
}

fn family_spec(a: &GenerateArgs) -> Result<FamilySpec> {
    if let Some(spec) = &a.spec {
        return Ok(spec.parse()?);
    }
    let Some(family) = &a.family else { bail!("give a family name or --spec") };
    let mut text = format!("family={}", family.replace('-', "_"));
    let mut push = |key: &str, value: Option<String>| {
        if let Some(v) = value {
            text.push_str(&format!(" {key}={v}"));
        }
    };
    push("k", a.k.map(|x| x.to_string()));
    push("n", a.n.map(|x| x.to_string()));
    push("sizes", a.sizes.clone());
    push("spokes", a.spokes.clone());
    push("inner", a.inner.clone());
    push("len", a.len.map(|x| x.to_string()));
    push("triangles", a.triangles.clone());
    push("fill", a.fill.map(|x| x.to_string()));
    push("seed", a.seed.map(|x| x.to_string()));
    Ok(text.parse()?)
}

fn cmd_generate(a: GenerateArgs) -> Result<u8> {
    let spec = family_spec(&a)?;
    let g = spec.build()?;
    let mut out = open_output(&a.output)?;
    match a.format {
        OutputFormat::G6 => writeln!(out, "{}", to_graph6(&g))?,
        OutputFormat::Edges => write!(out, "{}", to_edge_list(&g))?,
        OutputFormat::Dot => write!(out, "{}", to_dot(&g))?,
    }
    out.flush()?;
    Ok(0)
}

fn write_theorem_summary(out: &mut dyn Write, s: &TheoremSummary) -> Result<()> {
    writeln!(out, "{:>3} {:>8} {:>8} {:>10} {:>13}", "n", "graphs", "perfect", "imperfect", "disagreements")?;
    for (n, c) in &s.per_n {
        writeln!(out, "{n:>3} {:>8} {:>8} {:>10} {:>13}", c.graphs, c.perfect, c.imperfect, c.disagreements)?;
    }
    writeln!(out, "checked {} graphs, {} disagreements", s.checked, s.disagreements.len())?;
    for (g6, hole) in &s.rejected_non_chordal {
        writeln!(out, "rejected {g6}: not chordal, hole {hole:?}")?;
    }
    for g6 in &s.rejected_oversize {
        writeln!(out, "rejected {g6}: too large for the brute-force check")?;
    }
    for d in &s.disagreements {
        writeln!(out, "DISAGREEMENT {}: brute {:?}, odd-sun test {:?}", d.graph6, d.brute, d.theorem)?;
    }
    writeln!(out, "distinct minimal witnesses: {}", s.witnesses.len())?;
    for w in &s.witnesses {
        writeln!(
            out,
            "  {} n={} alpha_S={} theta_S={} seen {} times",
            w.canonical_graph6, w.n, w.alpha_s, w.theta_s, w.occurrences
        )?;
    }
    if s.certificate_failures > 0 {
        writeln!(out, "certificate failures: {}", s.certificate_failures)?;
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let mut corpus = Vec::new();
    if let Some(n) = a.exhaustive {
        for m in 1..=n {
            corpus.extend(connected_chordal_graphs(m)?);
        }
    }
    if let Some(count) = a.random {
        if a.max_n == 0 {
            bail!("--max-n must be at least 1");
        }
        for i in 0..count as u64 {
            let n = 1 + (i as usize % a.max_n);
            let fill = (i % 11) as f64 / 10.0;
            corpus.push(random_chordal(n, fill, a.seed.wrapping_add(i))?);
        }
    }
    if a.exhaustive.is_none() && a.random.is_none() {
        corpus = read_graphs(a.input.as_deref().unwrap_or("-"), InputFormat::G6)?;
    }
    let summary = verify_main_theorem(&corpus);
    let mut out = open_output(&a.output)?;
    if a.json {
        emit_json(&mut out, &summary)?;
    } else {
        write_theorem_summary(&mut out, &summary)?;
    }
    out.flush()?;
    Ok(if summary.disagreements.is_empty() && summary.certificate_failures == 0 { 0 } else { 1 })
}

fn write_conjecture_report(out: &mut dyn Write, r: &ConjectureReport) -> Result<()> {
    writeln!(out, "scanned {} connected graphs (max n = {})", r.scanned, r.max_n)?;
    writeln!(
        out,
        "skipped: {} malformed, {} disconnected, {} oversize",
        r.skipped_malformed, r.skipped_disconnected, r.skipped_oversize
    )?;
    writeln!(out, "S-perfect {}, not S-perfect {}, with forbidden cycle {}", r.perfect, r.imperfect, r.with_forbidden_cycle)?;
    writeln!(out, "cycle clauses only: agree {}, disagree {}", r.cycle_clauses.agree, r.cycle_clauses.disagree)?;
    for t in &r.readings {
        writeln!(
            out,
            "{} reading: smallest odd super sun {} vertices ({}), found in {} graphs; agree {}, disagree {}",
            reading_name(t.reading),
            t.smallest_odd_super_sun,
            if t.fits { "fits" } else { "does not fit" },
            t.graphs_with_odd_super_sun,
            t.tally.agree,
            t.tally.disagree
        )?;
    }
    for note in &r.notes {
        writeln!(out, "note: {note}")?;
    }
    for c in &r.counterexamples {
        let witness = c.witness.as_ref().map_or("-".to_string(), |w: &Witness| w.graph6.clone());
        writeln!(
            out,
            "counterexample {} n={} S-perfect={} witness={} forbidden cycle={:?} under [{}]",
            c.graph6,
            c.n,
            c.s_perfect,
            witness,
            c.forbidden_cycle,
            c.disagrees_under.join(", ")
        )?;
    }
    Ok(())
}

fn cmd_explore(a: ExploreArgs) -> Result<u8> {
    let report = match a.exhaustive {
        Some(n) => explore_conjecture_exhaustive(n)?,
        None => {
            let input = open_input(a.input.as_deref().unwrap_or("-"))?;
            let mut graphs = Vec::new();
            let mut malformed = 0;
            let mut oversize = 0;
            for line in input.lines() {
                let line = line.context("cannot read input")?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                match from_graph6(line) {
                    Ok(g) if a.max_n.is_some_and(|m| g.n() > m) => oversize += 1,
                    Ok(g) => graphs.push(g),
                    Err(_) => malformed += 1,
                }
            }
            let mut r = explore_conjecture(&graphs, malformed);
            r.skipped_oversize += oversize;
            r
        }
    };
    let mut out = open_output(&a.output)?;
    if a.json {
        emit_json(&mut out, &report)?;
    } else {
        write_conjecture_report(&mut out, &report)?;
    }
    out.flush()?;
    Ok(if report.has_disagreements() { 1 } else { 0 })
}

#[derive(Serialize)]
struct WitnessRecord {
    graph6: String,
    s_perfect: bool,
    witness: Option<Witness>,
    properties: Option<MinimalImperfectProperties>,
    failed_properties: Vec<&'static str>,
}

fn cmd_witness(a: WitnessArgs) -> Result<u8> {
    let graphs = read_graphs(&a.io.input, a.format)?;
    let mut out = open_output(&a.io.output)?;
    let mut found = false;
    for g in &graphs {
        let verdict = is_s_perfect_brute(g)?;
        let properties = match &verdict.witness {
            Some(w) => Some(minimal_imperfect_properties(&w.graph(g)?)?),
            None => None,
        };
        found |= verdict.witness.is_some();
        let rec = WitnessRecord {
            graph6: to_graph6(g),
            s_perfect: verdict.is_s_perfect,
            failed_properties: properties.as_ref().map_or(Vec::new(), |p| p.failures()),
            witness: verdict.witness,
            properties,
        };
        if a.io.json {
            emit_json(&mut out, &rec)?;
            continue;
        }
        match (&rec.witness, &rec.properties) {
            (Some(w), Some(p)) => {
                writeln!(
                    out,
                    "{}: not S-perfect; witness {} on {} (alpha_S={}, theta_S={})",
                    rec.graph6,
                    w.graph6,
                    list(w.vertices),
                    w.alpha_s,
                    w.theta_s
                )?;
                writeln!(
                    out,
                    "  block={} chordal={} gap={} hamiltonian={} nested neighborhoods={:?}",
                    p.block,
                    p.chordal,
                    p.gap(),
                    p.hamiltonian(),
                    p.nested_open
                )?;
                if !rec.failed_properties.is_empty() {
                    writeln!(out, "  failed: {}", rec.failed_properties.join(", "))?;
                }
            }
            _ => writeln!(out, "{}: S-perfect", rec.graph6)?,
        }
    }
    out.flush()?;
    Ok(if found { 1 } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Generate(a) => cmd_generate(a),
        Command::VerifyTheorem(a) => cmd_verify(a),
        Command::ExploreConjecture(a) => cmd_explore(a),
        Command::MinimalWitness(a) => cmd_witness(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

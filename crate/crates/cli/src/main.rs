//! `desargues`: build, verify, lift, count and export sectioned configurations.
//!
//! Exit status: 0 when every check passes, 1 when a verification check fails,
//! 2 on usage, input or geometry errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use desargues_core::arcs::frame_off_hyperplane;
use desargues_core::config::{incidence_report, substructure_counts, vertex_sweep, SubTable};
use desargues_core::desargues::{
    extract_perspective_pair, find_vertex, lift_to_arc, section_arc, seeded_configuration, standard_hyperplane,
    LabeledConfiguration, LiftChoice,
};
use desargues_core::enumerate::{self, EnumJob, EnumKind};
use desargues_core::field::{Field, FieldSpec};
use desargues_core::io;
use desargues_core::projlin::hyperplane_from_dual;
use desargues_core::verify::{verify_config, verify_pair, Report};
use desargues_core::Error;

#[derive(Parser)]
#[command(name = "desargues", version, about = "Exact sections of arcs and simplexes in perspective over GF(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a sectioned configuration and sweep every point as a vertex.
    Demo(DemoArgs),
    /// Section an arc file by a hyperplane, writing a configuration file.
    Section(FileArgs),
    /// Check a configuration or pair file against the theorems.
    Verify(FileArgs),
    /// Rebuild an arc from a pair file.
    Lift(LiftArgs),
    /// Count ordered arcs, frames or sectionable arcs exhaustively.
    Enumerate(EnumArgs),
    /// Write the point/line incidence matrix of a configuration.
    Export(FileArgs),
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Dimension of the configuration (or of the space, for `enumerate --kind arcs|frames`).
    #[arg(long)]
    n: usize,
    /// Characteristic.
    #[arg(long)]
    p: u32,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Monic modulus coefficients, constant term first, e.g. `1,1,1`.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field, Error> {
        let mut spec = FieldSpec::with_degree(self.p, self.k)?;
        if let Some(m) = &self.modulus {
            spec.modulus = Some(m.clone());
        }
        Field::new(spec)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary artifact here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Args)]
struct DemoArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Use a seeded random arc and hyperplane instead of the standard frame.
    #[arg(long)]
    seed: Option<u64>,
    /// Also write the arc (with its hyperplane) here.
    #[arg(long)]
    arc_out: Option<PathBuf>,
    /// Also write the pair around vertex (1,2) here.
    #[arg(long)]
    pair_out: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FileArgs {
    input: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LiftArgs {
    input: PathBuf,
    /// Pick the lifting line and points from this seed instead of coordinate order.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Arcs,
    Frames,
    Sectioned,
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum, default_value_t = Kind::Frames)]
    kind: Kind,
    /// Arc size for `--kind arcs`.
    #[arg(long)]
    size: Option<usize>,
    /// Dual coordinates of a hyperplane to avoid, e.g. `0,0,1`.
    #[arg(long, value_delimiter = ',')]
    avoid: Option<Vec<u32>>,
    /// Node budget (prefix extensions).
    #[arg(long, default_value_t = enumerate::DEFAULT_BUDGET)]
    budget: u64,
    /// Skip the sampled section check for `--kind sectioned`.
    #[arg(long)]
    count_only: bool,
    /// Include wall time (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    output: OutputArgs,
}

enum Failure {
    Usage(String),
    Geometry(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Geometry(e)
    }
}

type Run = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Demo(a) => demo(a),
        Command::Section(a) => section(a),
        Command::Verify(a) => verify(a),
        Command::Lift(a) => lift(a),
        Command::Enumerate(a) => enumerate_cmd(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Geometry(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Run {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

/// Send the primary artifact to `--out` or stdout.
fn emit(out: &OutputArgs, text: &str) -> Run {
    match &out.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn reject_csv(out: &OutputArgs) -> Run {
    if out.format == Format::Csv {
        return Err(Failure::Usage("--format csv is only available for `export`".into()));
    }
    Ok(())
}

fn field_name(f: &Field) -> String {
    if f.is_prime_field() {
        format!("{}", f.q())
    } else {
        format!("{}^{}", f.p(), f.k())
    }
}

fn demo(a: DemoArgs) -> Run {
    reject_csv(&a.output)?;
    let field = a.field.field()?;
    let n = a.field.n;
    if n < 1 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let (arc, h, config) = match a.seed {
        Some(seed) => seeded_configuration(&field, n, seed)?,
        None => {
            let h = standard_hyperplane(&field, n);
            let arc = frame_off_hyperplane(&h)?;
            let config = section_arc(&arc, &h)?;
            (arc, h, config)
        }
    };
    if let Some(path) = &a.arc_out {
        write_file(path, &io::arc_to_json(&arc, Some(&h)))?;
    }
    if let Some(path) = &a.pair_out {
        let (pair, v) = extract_perspective_pair(&config, 1, 2)?;
        write_file(path, &io::pair_to_json(&pair, Some(&v), Some(&h)))?;
    }
    let sweep = vertex_sweep(&config);
    let counts = substructure_counts(&config);
    let incidence = incidence_report(&SubTable::full(&config));
    let text = match a.output.format {
        Format::Json => pretty(&json!({
            "n": n,
            "field": field.spec(),
            "seed": a.seed,
            "points": config.len(),
            "sweep": sweep,
            "substructures": counts.iter().map(|(d, c)| json!({"dim": d, "count": c})).collect::<Vec<_>>(),
            "incidence": incidence,
        })),
        _ => {
            let id = &sweep.identity;
            let mut s = format!(
                "configuration in PG({n},{}) from a {}-arc of PG({},{})\n",
                field_name(&field),
                n + 3,
                n + 1,
                field_name(&field)
            );
            s += &format!("points: {}\n", config.len());
            s += &format!("vertices: {}/{} pass\n", sweep.passed, sweep.vertices.len());
            s += &format!("identity: {} = {}+{}+{}\n", id.total, id.simplex_points, id.vertex, id.edge_points);
            let counts_line: Vec<String> = counts.values().map(usize::to_string).collect();
            s += &format!("substructures: {}\n", counts_line.join("/"));
            s += &format!(
                "symbol incidence: {}/{} triangle lines, {} extra lines\n",
                incidence.triangle_lines,
                incidence.triangles_expected,
                incidence.extra_lines.len()
            );
            if a.output.verbose {
                for v in sweep.vertices.iter().filter(|v| !v.passed) {
                    s += &format!("  vertex {} failed: {}\n", v.label, v.error.as_deref().unwrap_or("?"));
                }
            }
            s
        }
    };
    match &a.output.out {
        Some(path) => {
            write_file(path, &io::config_to_json(&config))?;
            print!("{text}");
        }
        None => print!("{text}"),
    }
    if sweep.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn section(a: FileArgs) -> Run {
    reject_csv(&a.output)?;
    let (arc, h) = io::arc_from_json(&read(&a.input)?)?;
    let h = match h {
        Some(h) => h,
        None => {
            let mut dual = vec![0; arc.ambient() + 1];
            *dual.last_mut().expect("nonempty") = 1;
            hyperplane_from_dual(arc.field(), &dual)?
        }
    };
    let config = section_arc(&arc, &h)?;
    emit(&a.output, &io::config_to_json(&config))
}

fn render_report(report: &Report, out: &OutputArgs) -> String {
    match out.format {
        Format::Json => pretty(&serde_json::to_value(report).expect("reports serialize")),
        _ => format!("{} in PG({},{})\n{}", report.kind, report.n, report.q, report.summary()),
    }
}

fn is_pair_doc(text: &str) -> Result<bool, Failure> {
    let v: Value = serde_json::from_str(text).map_err(|e| Failure::Geometry(Error::Format(e.to_string())))?;
    Ok(v.get("a").is_some() && v.get("b").is_some())
}

fn verify(a: FileArgs) -> Run {
    reject_csv(&a.output)?;
    let text = read(&a.input)?;
    let report = if is_pair_doc(&text)? {
        let file = io::pair_from_json(&text)?;
        verify_pair(&file.pair, file.vertex.as_ref())
    } else {
        verify_config(&io::config_from_json(&text)?)
    };
    emit(&a.output, &render_report(&report, &a.output))?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn lift(a: LiftArgs) -> Run {
    reject_csv(&a.output)?;
    let file = io::pair_from_json(&read(&a.input)?)?;
    let vertex = match file.vertex {
        Some(v) => v,
        None => find_vertex(&file.pair)?,
    };
    let h = file.hyperplane.unwrap_or_else(|| standard_hyperplane(file.pair.field(), file.pair.ambient()));
    let choice = a.seed.map_or(LiftChoice::First, LiftChoice::Seeded);
    let arc = lift_to_arc(&file.pair, &vertex, &h, choice)?;
    emit(&a.output, &io::arc_to_json(&arc, Some(&h)))
}

fn enumerate_cmd(a: EnumArgs) -> Run {
    reject_csv(&a.output)?;
    let spec = a.field.field()?.spec().clone();
    let kind = match a.kind {
        Kind::Arcs => EnumKind::Arcs,
        Kind::Frames => EnumKind::Frames,
        Kind::Sectioned => EnumKind::SectionedConfigs,
    };
    if kind == EnumKind::Arcs && a.size.is_none() {
        return Err(Failure::Usage("--kind arcs needs --size".into()));
    }
    let job = EnumJob {
        n: a.field.n,
        field: spec,
        kind,
        size: a.size,
        avoid: a.avoid.clone(),
        count_only: a.count_only,
        budget: a.budget,
    };
    let report = enumerate::run(&job)?;
    let text = match a.output.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("reports serialize");
            if a.timing {
                v["wall_seconds"] = json!(report.elapsed.as_secs_f64());
            }
            pretty(&v)
        }
        _ => {
            let field = Field::new(job.field.clone())?;
            let mut s = format!("{} in PG({},{})\n", kind_name(a.kind), job.search_dim(), field_name(&field));
            s += &format!("ordered: {}\n", report.raw);
            s += &format!("unordered: {}\n", report.unordered);
            s += &format!("points: {}\n", report.points);
            s += &format!("nodes: {}\n", report.nodes);
            if let Some(g) = report.group_order {
                s += &format!("group order: {g}\n");
            }
            if let Some(c) = report.sections_checked {
                s += &format!("sampled sections: {c} ok\n");
            }
            if a.timing {
                s += &format!("wall time: {:.3} s\n", report.elapsed.as_secs_f64());
            }
            s
        }
    };
    emit(&a.output, &text)
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Arcs => "arcs",
        Kind::Frames => "frames",
        Kind::Sectioned => "sectioned",
    }
}

fn export(a: FileArgs) -> Run {
    let config: LabeledConfiguration = io::config_from_json(&read(&a.input)?)?;
    let inc = io::incidence(&config)?;
    let text = match a.output.format {
        Format::Json => inc.to_json(),
        _ => inc.to_csv(),
    };
    emit(&a.output, &text)
}

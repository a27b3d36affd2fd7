//! `gainswitch` command-line tool.

mod demo;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gainswitch::gain_graph::{GainGraph, Partition};
use gainswitch::groups::Group;
use gainswitch::quaternions;
use gainswitch::representations::{represented_adjacency, Representation};
use gainswitch::spectra::{self, GMode, Spectrum, SPECTRUM_TOL};
use gainswitch::switching::{self, CellPlan, Violation};
use gainswitch::{io, Error};
use serde_json::{json, Value};

use report::{plan_json, spectrum_json, violation_json, Report};

#[derive(Parser)]
#[command(name = "gainswitch", version, about = "Godsil-McKay switching for gain graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a partition for the GM property and print the switching plan.
    Check(PlanArgs),
    /// Write the graph obtained by switching along a GM partition.
    Switch(PlanArgs),
    /// Print the spectrum of the represented adjacency matrix.
    Spectrum(SpectrumArgs),
    /// Print the characteristic polynomial of the represented adjacency matrix.
    Charpoly(SpectrumArgs),
    /// Compare the spectra of two graphs.
    Cospectral(CospectralArgs),
    /// Search for a switching isomorphism between two graphs.
    Swiso(SwisoArgs),
    /// Replay a worked example end to end and verify its outputs.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "pi")]
    Pi,
    #[value(name = "quat")]
    Quat,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::G => "G",
            Mode::Pi => "pi",
            Mode::Quat => "quat",
        }
    }
}

#[derive(Args)]
struct PlanArgs {
    /// Graph file (JSON).
    #[arg(long)]
    graph: PathBuf,
    /// Partition file (JSON); the first cell is C0.
    #[arg(long)]
    partition: PathBuf,
    /// Which GM predicate to test; defaults to quat for quaternion gains, G otherwise.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Representation name for `--mode pi`.
    #[arg(long)]
    rep: Option<String>,
    /// Allow the central-element case in `--mode pi`.
    #[arg(long)]
    central: bool,
    /// Output graph file (required by `switch`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Representation name; defaults to `regular`, or the complex adjoint for
    /// quaternion gains.
    #[arg(long)]
    rep: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CospectralArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    graph2: PathBuf,
    /// G compares under the regular representation and every irreducible (or traces with `--hmax`).
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long)]
    rep: Option<String>,
    /// Compare μ(Tr(A^h)) for h = 1..=N instead of spectra (mode G).
    #[arg(long)]
    hmax: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SwisoArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    graph2: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DemoArgs {
    /// One of t-example, s4-example, s4-kernel-example, d8-example, quat-example.
    id: String,
    /// Write the switched graph here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

/// A failure that is not a verdict.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: files, names, flags. Exit code 2.
    Usage(String),
    /// Valid request the tool cannot answer. Exit code 3.
    Unsupported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(_) | Error::InfiniteGroup(_) | Error::Numerical(_) => Failure::Unsupported(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub type Outcome = Result<Report, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn resolve_mode(g: &GainGraph, mode: Option<Mode>, rep: Option<&str>) -> Mode {
    mode.unwrap_or(if g.group() == Group::UnitQuaternion {
        Mode::Quat
    } else if rep.is_some() {
        Mode::Pi
    } else {
        Mode::G
    })
}

fn load_rep(group: Group, name: &str) -> Result<Representation, Failure> {
    Ok(Representation::builtin(group, name)?)
}

struct Planned {
    graph: GainGraph,
    partition: Partition,
    mode: Mode,
    rep: Option<Representation>,
    verdict: Result<CellPlan, Violation>,
}

fn plan(a: &PlanArgs) -> Result<Planned, Failure> {
    let graph = io::read_graph(&a.graph)?;
    let partition = io::read_partition(&a.partition, &graph)?;
    let mode = a.mode.unwrap_or(if graph.group() == Group::UnitQuaternion {
        Mode::Quat
    } else {
        Mode::G
    });
    if mode != Mode::Pi && a.rep.is_some() {
        return Err(usage("--rep requires --mode pi"));
    }
    if mode != Mode::Pi && a.central {
        return Err(usage("--central requires --mode pi"));
    }
    let rep = match (mode, &a.rep) {
        (Mode::Pi, Some(name)) => Some(load_rep(graph.group(), name)?),
        (Mode::Pi, None) => return Err(usage("--mode pi needs --rep NAME")),
        _ => None,
    };
    let verdict = match (mode, &rep) {
        (Mode::G, _) => {
            graph.group().require_finite()?;
            switching::check_g_gm(&graph, &partition)
        }
        (Mode::Pi, Some(r)) => switching::check_pi_gm(&graph, &partition, r, a.central),
        _ => quaternions::check_quat_gm(&graph, &partition),
    };
    if let Err(Violation::Unsupported(msg)) = &verdict {
        return Err(Failure::Unsupported(msg.clone()));
    }
    Ok(Planned {
        graph,
        partition,
        mode,
        rep,
        verdict,
    })
}

fn mode_label(p: &Planned) -> String {
    match &p.rep {
        Some(r) => format!("mode {}, rep {}", p.mode.name(), r.name()),
        None => format!("mode {}", p.mode.name()),
    }
}

fn cmd_check(a: &PlanArgs) -> Outcome {
    let p = plan(a)?;
    let label = mode_label(&p);
    Ok(match &p.verdict {
        Ok(plan) => Report::new(
            true,
            format!("GM partition ({label})\n{}", plan.render(&p.graph)),
            json!({"gm": true, "mode": p.mode.name(), "rep": p.rep.as_ref().map(|r| r.name()),
                   "plan": plan_json(plan, &p.graph)}),
        ),
        Err(v) => Report::new(
            false,
            format!("not a GM partition ({label}): {v}\n"),
            json!({"gm": false, "mode": p.mode.name(), "rep": p.rep.as_ref().map(|r| r.name()),
                   "violation": violation_json(v)}),
        ),
    })
}

fn cmd_switch(a: &PlanArgs) -> Outcome {
    let out = a.out.as_ref().ok_or_else(|| usage("switch needs --out FILE"))?;
    let p = plan(a)?;
    let label = mode_label(&p);
    let plan = match &p.verdict {
        Ok(plan) => plan,
        Err(v) => {
            return Ok(Report::new(
                false,
                format!("not a GM partition ({label}): {v}\n"),
                json!({"gm": false, "mode": p.mode.name(), "violation": violation_json(v)}),
            ))
        }
    };
    let switched = match p.mode {
        Mode::Quat => quaternions::apply_quat_switch(&p.graph, &p.partition, plan)?,
        _ => switching::apply_switch(&p.graph, &p.partition, plan)?,
    };
    io::write_graph(out, &switched)?;
    Ok(Report::new(
        true,
        format!("switched graph written to {}\n{}", out.display(), plan.render(&p.graph)),
        json!({"gm": true, "mode": p.mode.name(), "out": out.display().to_string(),
               "plan": plan_json(plan, &p.graph)}),
    ))
}

/// Right spectrum for quaternion gains without `--rep`, otherwise the
/// spectrum under the named (default regular) representation.
fn spectrum_of(g: &GainGraph, rep: Option<&str>) -> Result<(String, Spectrum), Failure> {
    if g.group() == Group::UnitQuaternion && rep.is_none() {
        return Ok(("right".into(), quaternions::quaternion_adjacency(g)?.right_spectrum()?));
    }
    let r = load_rep(g.group(), rep.unwrap_or("regular"))?;
    Ok((r.name().to_string(), spectra::pi_spectrum(g, &r)?))
}

fn cmd_spectrum(a: &SpectrumArgs) -> Outcome {
    let g = io::read_graph(&a.graph)?;
    let (name, s) = spectrum_of(&g, a.rep.as_deref())?;
    Ok(Report::new(
        true,
        format!("spectrum ({name}): {s}\n"),
        json!({"representation": name, "spectrum": spectrum_json(&s)}),
    ))
}

fn cmd_charpoly(a: &SpectrumArgs) -> Outcome {
    let g = io::read_graph(&a.graph)?;
    let (name, m) = if g.group() == Group::UnitQuaternion && a.rep.is_none() {
        ("complex_adjoint".to_string(), quaternions::quaternion_adjacency(&g)?.complex_adjoint())
    } else {
        let r = load_rep(g.group(), a.rep.as_deref().unwrap_or("regular"))?;
        (r.name().to_string(), represented_adjacency(&g, &r)?)
    };
    let p = spectra::char_poly(&m)?;
    Ok(Report::new(
        true,
        format!("charpoly ({name}): {}\n", p.render()),
        json!({"representation": name, "coefficients": p.coeffs(), "polynomial": p.render()}),
    ))
}

fn cmd_cospectral(a: &CospectralArgs) -> Outcome {
    let g1 = io::read_graph(&a.graph)?;
    let g2 = io::read_graph(&a.graph2)?;
    if g1.group() != g2.group() {
        return Err(usage(format!("{} is over {}, {} over {}", a.graph.display(), g1.group(),
            a.graph2.display(), g2.group())));
    }
    let mode = resolve_mode(&g1, a.mode, a.rep.as_deref());
    if a.hmax.is_some() && mode != Mode::G {
        return Err(usage("--hmax requires --mode G"));
    }
    if mode != Mode::Pi && a.rep.is_some() {
        return Err(usage("--rep requires --mode pi"));
    }
    let verdict_text = |ok: bool| if ok { "cospectral" } else { "not cospectral" };
    if let (Mode::G, Some(h)) = (mode, a.hmax) {
        let ok = spectra::g_cospectral(&g1, &g2, GMode::Traces(Some(h)))?;
        return Ok(Report::new(
            ok,
            format!("{} (mode G, traces h = 1..={h})\n", verdict_text(ok)),
            json!({"cospectral": ok, "mode": "G", "hmax": h}),
        ));
    }
    let rep = match mode {
        Mode::G => {
            g1.group().require_finite()?;
            Some("regular")
        }
        Mode::Pi => Some(a.rep.as_deref().ok_or_else(|| usage("--mode pi needs --rep NAME"))?),
        Mode::Quat => {
            if g1.group() != Group::UnitQuaternion {
                return Err(usage("--mode quat needs quaternion gains"));
            }
            None
        }
    };
    let (name, s1) = spectrum_of(&g1, rep)?;
    let (_, s2) = spectrum_of(&g2, rep)?;
    let ok = s1.approx_eq(&s2, SPECTRUM_TOL);
    Ok(Report::new(
        ok,
        format!("{} (mode {}, {name})\nspectrum 1: {s1}\nspectrum 2: {s2}\n", verdict_text(ok), mode.name()),
        json!({"cospectral": ok, "mode": mode.name(), "representation": name,
               "spectrum1": spectrum_json(&s1), "spectrum2": spectrum_json(&s2)}),
    ))
}

fn cmd_swiso(a: &SwisoArgs) -> Outcome {
    let g1 = io::read_graph(&a.graph)?;
    let g2 = io::read_graph(&a.graph2)?;
    Ok(match g1.switching_isomorphic(&g2)? {
        None => Report::new(false, "NONE\n".into(), json!({"isomorphic": false})),
        Some(w) => {
            let mut text = String::from("switching isomorphic\n");
            let mut phi = serde_json::Map::new();
            let mut f = serde_json::Map::new();
            for v in 0..g1.order() {
                let (src, dst, gain) = (g1.label(v), g2.label(w.phi[v]), &w.f[v]);
                text.push_str(&format!("  {src} -> {dst}, f = {gain}\n"));
                phi.insert(src.to_string(), Value::from(dst));
                f.insert(src.to_string(), Value::from(gain.to_string()));
            }
            Report::new(true, text, json!({"isomorphic": true, "phi": phi, "f": f}))
        }
    })
}

fn run(cli: &Cli) -> (Outcome, bool) {
    match &cli.command {
        Command::Check(a) => (cmd_check(a), a.json),
        Command::Switch(a) => (cmd_switch(a), a.json),
        Command::Spectrum(a) => (cmd_spectrum(a), a.json),
        Command::Charpoly(a) => (cmd_charpoly(a), a.json),
        Command::Cospectral(a) => (cmd_cospectral(a), a.json),
        Command::Swiso(a) => (cmd_swiso(a), a.json),
        Command::Demo(a) => (demo::run(&a.id, a.out.as_deref()), a.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, as_json) = run(&cli);
    match outcome {
        Ok(report) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("json output"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

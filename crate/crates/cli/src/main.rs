use builder::{build, parse_sites, sites_text, BuildOptions};
use clap::{Parser, Subcommand, ValueEnum};
use diagram::parse_kirby;
use gem_core::{parse_gem_text, validate_gem, Gem};
use invariants::{report_for, WitnessOptions};
use kgem::{
    build_exit_code, dot_text, gluings_text, write_atomic, EXIT_POSTCONDITION,
    EXIT_VALIDATION,
};
use moves::{greedy_reduce_with, triad_exchange, Budget, MoveLog, ReduceOptions, TriadDirection};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use verify::{boundary_check, manifold_check_with};

#[derive(Parser)]
#[command(name = "kgem", version, about = "Gems of framed links and Kirby diagrams")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the 5-colored gem of a .kd diagram.
    Build {
        input: PathBuf,
        /// Extra pin record, e.g. `Xmark component=1 after_arc=4`. Repeatable.
        #[arg(long = "pin")]
        pins: Vec<String>,
        /// Output stem; defaults to the input path without extension.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Skip the manifold check on candidate plans.
        #[arg(long)]
        no_verify: bool,
        #[arg(long, default_value_t = 64)]
        max_plans: usize,
    },
    /// Write the triangulation encoded by a gem.
    Export {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Group vertices by gadget, given the crossing count of the diagram.
        #[arg(long)]
        crossings: Option<usize>,
    },
    /// Run the manifold check; exit 0 only if it passes.
    Verify {
        input: PathBuf,
        /// Expected boundary graph; also checks that it is the 4̂-residue.
        #[arg(long)]
        lambda: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build a diagram and print its invariants and bounds.
    Invariants {
        input: PathBuf,
        #[arg(long = "pin")]
        pins: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Greedy dipole reduction, or replay of a move log.
    Simplify {
        input: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Output stem; writes `<stem>.gem` and `<stem>.moves`.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exchange the 4-colored triad at a quadricolor site.
    Moves {
        input: PathBuf,
        /// `<file.sites>[:<component>]` or `p=<six vertex ids>`.
        #[arg(long)]
        triad: String,
        #[arg(long, value_parser = parse_direction)]
        direction: TriadDirection,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Gluings,
    Dot,
}

fn parse_direction(s: &str) -> Result<TriadDirection, String> {
    s.parse()
}

struct Fail(i32, String);

type Res = Result<(), Fail>;

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail(EXIT_VALIDATION, e.to_string())
}

fn read(p: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(p).map_err(|e| invalid(format!("{}: {e}", p.display())))
}

fn write(p: &Path, s: &str) -> Res {
    write_atomic(p, s).map_err(|e| Fail(1, format!("{}: {e}", p.display())))
}

fn with_ext(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn read_gem(p: &Path) -> Result<Gem, Fail> {
    let g = parse_gem_text(&read(p)?).map_err(invalid)?;
    let v = validate_gem(&g);
    if !v.is_valid() {
        return Err(invalid(format!("{}: not a gem: {:?}", p.display(), v.defects)));
    }
    Ok(g)
}

fn read_kd(p: &Path, pins: &[String]) -> Result<diagram::KirbyDiagram, Fail> {
    let mut text = read(p)?;
    for pin in pins {
        text.push('\n');
        text.push_str(pin);
    }
    text.push('\n');
    parse_kirby(&text).map_err(|e| {
        let msg = e.to_string();
        Fail(build_exit_code(&e.into()), msg)
    })
}

fn stem_of(input: &Path, out: Option<PathBuf>) -> PathBuf {
    out.unwrap_or_else(|| input.with_extension(""))
}

fn cmd_build(input: &Path, pins: &[String], out: Option<PathBuf>, no_verify: bool, max_plans: usize) -> Res {
    let d = read_kd(input, pins)?;
    let opts = BuildOptions {
        max_plans,
        verify: !no_verify,
        ..BuildOptions::default()
    };
    let b = build(&d, &opts).map_err(|e| Fail(build_exit_code(&e), e.to_string()))?;
    let check = manifold_check_with(&b.gamma, &ReduceOptions::default());
    let report = serde_json::json!({
        "order": b.gamma.order(),
        "lambda_order": b.lambda.gem.order(),
        "accepted": b.accepted,
        "curls": b.aug().curl_count(),
        "u": b.plan.u,
        "s_bar": b.plan.s_bar,
        "over_first": b.log.over_first,
        "rejected": b.rejected,
        "check": check,
    });
    let stem = stem_of(input, out);
    write(&with_ext(&stem, "gem"), &gem_core::to_gem_text(&b.gamma))?;
    write(&with_ext(&stem, "sites"), &sites_text(&b.sites))?;
    write(
        &with_ext(&stem, "report.json"),
        &(serde_json::to_string_pretty(&report).unwrap() + "\n"),
    )?;
    println!("{}: order {}", with_ext(&stem, "gem").display(), b.gamma.order());
    if !b.accepted || !check.passes(&[4]) {
        return Err(Fail(EXIT_POSTCONDITION, "built gem fails the manifold check".into()));
    }
    Ok(())
}

fn cmd_export(input: &Path, format: Format, out: Option<PathBuf>, crossings: Option<usize>) -> Res {
    let g = read_gem(input)?;
    let (text, ext) = match format {
        Format::Gluings => (gluings_text(&g), "gluings"),
        Format::Dot => (dot_text(&g, crossings), "dot"),
    };
    let path = out.unwrap_or_else(|| input.with_extension(ext));
    write(&path, &text)
}

fn cmd_verify(input: &Path, lambda: Option<PathBuf>, budget: usize, seed: Option<u64>) -> Res {
    let g = read_gem(input)?;
    let opts = ReduceOptions {
        budget: Budget::steps(budget),
        seed,
        ..ReduceOptions::default()
    };
    let report = manifold_check_with(&g, &opts);
    println!("{}", report.to_json());
    let allowed: &[u8] = if g.colors() == 5 { &[4] } else { &[] };
    let mut ok = report.passes(allowed);
    if let Some(lp) = lambda {
        let lam = read_gem(&lp)?;
        let b = boundary_check(&g, &lam);
        println!("boundary {}", if b { "ok" } else { "FAILED" });
        ok &= b;
    }
    if ok {
        Ok(())
    } else {
        Err(Fail(EXIT_POSTCONDITION, "manifold check failed".into()))
    }
}

fn cmd_invariants(input: &Path, pins: &[String], json: bool) -> Res {
    let d = read_kd(input, pins)?;
    let b = build(&d, &BuildOptions::default())
        .map_err(|e| Fail(build_exit_code(&e), e.to_string()))?;
    let r = report_for(&b, &WitnessOptions::default())
        .map_err(|e| Fail(EXIT_POSTCONDITION, e.to_string()))?;
    if json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.to_table());
    }
    Ok(())
}

fn cmd_simplify(input: &Path, budget: usize, seed: Option<u64>, replay: Option<PathBuf>, out: Option<PathBuf>) -> Res {
    let g = read_gem(input)?;
    let (h, log) = match replay {
        Some(p) => {
            let log = MoveLog::parse(&read(&p)?).map_err(invalid)?;
            let h = log.replay(&g).map_err(invalid)?;
            (h, log)
        }
        None => {
            let opts = ReduceOptions {
                budget: Budget::steps(budget),
                seed,
                ..ReduceOptions::default()
            };
            let (h, log, verdict) = greedy_reduce_with(&g, &opts);
            println!("verdict {verdict}");
            (h, log)
        }
    };
    let stem = out.unwrap_or_else(|| {
        let mut s = input.with_extension("").into_os_string();
        s.push(".reduced");
        PathBuf::from(s)
    });
    write(&with_ext(&stem, "gem"), &gem_core::to_gem_text(&h))?;
    write(&with_ext(&stem, "moves"), &log.to_text())?;
    println!("order {} -> {} in {} moves", g.order(), h.order(), log.len());
    Ok(())
}

fn parse_triad(spec: &str) -> Result<moves::QuadricolorSite, Fail> {
    if spec.starts_with("p=") {
        let sites = parse_sites(&format!("site component=0 {spec}\n")).map_err(invalid)?;
        return Ok(sites.into_iter().next().unwrap());
    }
    let (path, comp) = match spec.rsplit_once(':') {
        Some((p, k)) if k.chars().all(|c| c.is_ascii_digit()) && !k.is_empty() => {
            (p, Some(k.parse::<usize>().unwrap()))
        }
        _ => (spec, None),
    };
    let sites = parse_sites(&read(Path::new(path))?).map_err(invalid)?;
    let found = match comp {
        Some(k) => sites.into_iter().find(|q| q.component == k),
        None => sites.into_iter().next(),
    };
    found.ok_or_else(|| invalid(format!("no site `{spec}`")))
}

fn cmd_moves(input: &Path, triad: &str, direction: TriadDirection, out: Option<PathBuf>) -> Res {
    let g = read_gem(input)?;
    let q = parse_triad(triad)?;
    let h = triad_exchange(&g, &q, direction).map_err(invalid)?;
    let path = out.unwrap_or_else(|| {
        let mut s = input.with_extension("").into_os_string();
        s.push(format!(".{direction}.gem"));
        PathBuf::from(s)
    });
    write(&path, &gem_core::to_gem_text(&h))?;
    println!("{}: order {}", path.display(), h.order());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Build { input, pins, out, no_verify, max_plans } => {
            cmd_build(&input, &pins, out, no_verify, max_plans)
        }
        Cmd::Export { input, format, out, crossings } => cmd_export(&input, format, out, crossings),
        Cmd::Verify { input, lambda, budget, seed } => cmd_verify(&input, lambda, budget, seed),
        Cmd::Invariants { input, pins, json } => cmd_invariants(&input, &pins, json),
        Cmd::Simplify { input, budget, seed, replay, out } => {
            cmd_simplify(&input, budget, seed, replay, out)
        }
        Cmd::Moves { input, triad, direction, out } => cmd_moves(&input, &triad, direction, out),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("kgem: {msg}");
            ExitCode::from(code as u8)
        }
    }
}

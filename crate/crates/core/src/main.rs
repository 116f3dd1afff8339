use std::fs;
use std::io::Read as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use chromatica::{
    boundary_simplex, chromatic_number, corpus, corpus_entry, count_colorings_with, cross_check,
    cyclic_polytope, full_simplex, is_coloring, parse_facets, random_complex, render_facets,
    verify_coloring_algebraically, Coloring, Error, Result, SearchConfig, SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "chromatica", version, about = "Exact relaxed colorings of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summarize a complex: sizes, f-vector, missing faces, flag report
    Info {
        /// Facet file, or `-` for stdin
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute the s-chromatic number with a canonical witness coloring
    Chromatic {
        file: String,
        #[arg(long)]
        s: usize,
        /// Node budget for the search; exhaustion exits with code 3
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads; 1 forces the sequential path
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check a vertex coloring, optionally with the algebraic certificate
    Check {
        file: String,
        #[arg(long)]
        s: usize,
        /// Comma-separated color ids in the canonical vertex order
        /// (as printed by `info`), or `@path` to read them from a file
        #[arg(long)]
        coloring: String,
        /// Also verify through the Stanley-Reisner ring identity and
        /// print the factorization certificate
        #[arg(long)]
        algebraic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Count (r,s)-colorings exactly
    Count {
        file: String,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        s: usize,
        /// Count only colorings using every color
        #[arg(long)]
        surjective: bool,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a generated complex as a facet file
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Emit the s-flagification of a complex
    Flagify {
        file: String,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Emit the j-skeleton of a complex
    Skeleton {
        file: String,
        #[arg(long)]
        j: isize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Emit the join of two complexes
    Join {
        file1: String,
        file2: String,
        #[command(flatten)]
        out: OutFile,
    },
    /// Run the bundled-example validation and verifier cross-checks
    Selftest {
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Boundary of the cyclic N-polytope on M vertices (Gale evenness)
    Cyclic {
        m: usize,
        n: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Full simplex on M vertices
    Simplex {
        m: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Boundary of the simplex on M vertices
    Boundary {
        m: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// One of the bundled examples: C5, MB5, P2, T2, DISC4
    Corpus {
        name: String,
        #[command(flatten)]
        out: OutFile,
    },
    /// Seeded random complex on M vertices
    Random {
        m: usize,
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Args)]
struct OutFile {
    /// Output path; stdout when omitted
    #[arg(short, long)]
    output: Option<String>,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::MalformedInput(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::MalformedInput(format!("{path}: {e}")))
    }
}

fn load_complex(path: &str) -> Result<SimplicialComplex> {
    parse_facets(&read_input(path)?)
}

fn emit(out: &OutFile, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::MalformedInput(format!("{path}: {e}")))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Accepts arbitrary integers and renumbers them to dense 0-based ids in
/// increasing value order, so `1,1,1,2,2,3` means colors 0,0,0,1,1,2.
fn parse_coloring(arg: &str, m: usize) -> Result<Coloring> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        read_input(path)?
    } else {
        arg.to_string()
    };
    let mut raw = Vec::new();
    for tok in text.split([',', '\n', ' ']).filter(|t| !t.trim().is_empty()) {
        let v: i64 = tok
            .trim()
            .parse()
            .map_err(|_| Error::MalformedInput(format!("bad color id `{tok}`")))?;
        raw.push(v);
    }
    if raw.len() != m {
        return Err(Error::MalformedInput(format!(
            "coloring lists {} ids but the complex has {} vertices",
            raw.len(),
            m
        )));
    }
    let mut values: Vec<i64> = raw.clone();
    values.sort_unstable();
    values.dedup();
    let assignment: Vec<u32> = raw
        .iter()
        .map(|v| values.binary_search(v).unwrap() as u32)
        .collect();
    Coloring::new(assignment, values.len() as u32)
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Info { file, json } => info(&file, json),
        Cmd::Chromatic {
            file,
            s,
            budget,
            workers,
            json,
        } => chromatic(&file, s, budget, workers, json),
        Cmd::Check {
            file,
            s,
            coloring,
            algebraic,
            json,
        } => check(&file, s, &coloring, algebraic, json),
        Cmd::Count {
            file,
            colors,
            s,
            surjective,
            workers,
            json,
        } => count(&file, colors, s, surjective, workers, json),
        Cmd::Gen { what } => gen(what),
        Cmd::Flagify { file, s, out } => {
            let k = load_complex(&file)?;
            emit(&out, &render_facets(&k.flagification(s)))
        }
        Cmd::Skeleton { file, j, out } => {
            let k = load_complex(&file)?;
            emit(&out, &render_facets(&k.skeleton(j)))
        }
        Cmd::Join { file1, file2, out } => {
            let a = load_complex(&file1)?;
            let b = load_complex(&file2)?;
            emit(&out, &render_facets(&a.join(&b)))
        }
        Cmd::Selftest { trials, seed } => selftest(trials, seed),
    }
}

fn info(file: &str, json: bool) -> Result<()> {
    let k = load_complex(file)?;
    let fv = k.f_vector();
    let missing: Vec<Vec<String>> = k
        .missing_faces()
        .iter()
        .map(|s| k.facet_labels(s).iter().map(|l| l.to_string()).collect())
        .collect();
    let dim = k.dim();
    let flag_report: Vec<(usize, bool)> = (1..=(dim.max(0) as usize + 1))
        .map(|s| (s, k.is_s_flag(s)))
        .collect();
    if json {
        let payload = json!({
            "m": k.m(),
            "n": k.n(),
            "dim": dim,
            "codim": k.codim(),
            "f_vector_with_empty": fv.counts(),
            "f_vector": fv.without_empty(),
            "euler_characteristic": k.euler_characteristic(),
            "vertices": k.vertices().labels(),
            "missing_faces": missing,
            "s_flag": flag_report.iter().map(|&(s, b)| json!({"s": s, "is_flag": b})).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("vertices (m): {}", k.m());
        println!("max facet size (n): {}", k.n());
        println!("dim: {}  codim: {}", dim, k.codim());
        println!("vertex order: {}", k.vertices().labels().join(" "));
        println!("f-vector (with empty face): {:?}", fv.counts());
        println!("f-vector (faces by dimension): {:?}", fv.without_empty());
        println!("Euler characteristic: {}", k.euler_characteristic());
        println!("missing faces ({}):", missing.len());
        for mf in &missing {
            println!("  {}", mf.join(" "));
        }
        for (s, is) in flag_report {
            println!("{s}-flag: {}", if is { "yes" } else { "no" });
        }
    }
    Ok(())
}

fn chromatic(
    file: &str,
    s: usize,
    budget: Option<u64>,
    workers: Option<usize>,
    json: bool,
) -> Result<()> {
    let k = load_complex(file)?;
    let cfg = SearchConfig {
        node_budget: budget,
        workers,
        ..SearchConfig::default()
    };
    let started = Instant::now();
    let (chi, witness) = chromatic_number(&k, s, &cfg)?;
    let elapsed = started.elapsed();
    if json {
        let payload = json!({
            "s": s,
            "chi": chi,
            "witness": witness.assignment(),
            "vertices": k.vertices().labels(),
            "elapsed_ms": elapsed.as_millis() as u64,
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("{chi}");
        let rendered: Vec<String> = witness
            .assignment()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("witness: {}", rendered.join(","));
    }
    Ok(())
}

fn check(file: &str, s: usize, coloring: &str, algebraic: bool, json: bool) -> Result<()> {
    let k = load_complex(file)?;
    let f = parse_coloring(coloring, k.m())?;
    let combinatorial = is_coloring(&k, &f, s)?;
    if algebraic {
        let name = if file == "-" { "stdin" } else { file };
        let cert = verify_coloring_algebraically(&k, name, &f, s)?;
        if cert.verdict != combinatorial {
            return Err(Error::Internal(format!(
                "verifier disagreement: combinatorial={combinatorial} algebraic={}",
                cert.verdict
            )));
        }
        if json {
            println!("{}", serde_json::to_string_pretty(&cert).unwrap());
        } else {
            println!("verdict: {}", cert.verdict);
            println!("c(V)  = {}", cert.lhs);
            println!("rhs   = {}", cert.rhs);
            for factor in &cert.factors {
                println!("color {}: {}", factor.color, factor.poly);
            }
        }
    } else if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"s": s, "verdict": combinatorial})).unwrap()
        );
    } else {
        println!("verdict: {combinatorial}");
    }
    Ok(())
}

fn count(
    file: &str,
    colors: usize,
    s: usize,
    surjective: bool,
    workers: Option<usize>,
    json: bool,
) -> Result<()> {
    let k = load_complex(file)?;
    let cfg = SearchConfig {
        workers,
        ..SearchConfig::default()
    };
    let started = Instant::now();
    let n = count_colorings_with(&k, colors, s, surjective, &cfg)?;
    let elapsed = started.elapsed();
    if json {
        let payload = json!({
            "colors": colors,
            "s": s,
            "surjective": surjective,
            "count": n.to_string(),
            "elapsed_ms": elapsed.as_millis() as u64,
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("{n}");
    }
    Ok(())
}

fn gen(what: GenCmd) -> Result<()> {
    match what {
        GenCmd::Cyclic { m, n, out } => emit(&out, &render_facets(&cyclic_polytope(m, n)?)),
        GenCmd::Simplex { m, out } => {
            if m == 0 {
                return Err(Error::Parameter("simplex needs at least 1 vertex".into()));
            }
            emit(&out, &render_facets(&full_simplex(m)))
        }
        GenCmd::Boundary { m, out } => {
            if m == 0 {
                return Err(Error::Parameter("boundary needs at least 1 vertex".into()));
            }
            emit(&out, &render_facets(&boundary_simplex(m)))
        }
        GenCmd::Corpus { name, out } => match corpus_entry(&name) {
            Some(entry) => emit(&out, &render_facets(&entry.complex)),
            None => Err(Error::Parameter(format!(
                "unknown corpus entry `{name}`; available: C5, MB5, P2, T2, DISC4"
            ))),
        },
        GenCmd::Random {
            m,
            density,
            seed,
            out,
        } => {
            if m == 0 || !(density > 0.0 && density <= 1.0) {
                return Err(Error::Parameter(
                    "random needs m >= 1 and density in (0, 1]".into(),
                ));
            }
            emit(&out, &render_facets(&random_complex(m, density, seed)))
        }
    }
}

fn selftest(trials: u64, seed: u64) -> Result<()> {
    let entries = corpus(); // panics on corpus corruption
    for entry in &entries {
        for s in 1..=2usize {
            let report = cross_check(&entry.complex, s, trials, seed)?;
            println!(
                "{} s={s}: {} trials, {} colorings, {} disagreements",
                entry.name, report.trials, report.colorings_found, report.disagreements
            );
        }
    }
    println!("selftest ok");
    Ok(())
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like any filter
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::BudgetExhausted { lower, upper } = &e {
                eprintln!("bounds: {lower} <= chi <= {upper}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 semantic rejection.

mod output;
mod suite;

use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use uqcomod::duality::{act_closed_word, act_word, WordSum};
use uqcomod::linalg::Matrix;
use uqcomod::pathcoalg::{basis_b, verify_identity_31};
use uqcomod::quiverrep::{
    classify_schurian, from_quantum_plane, schurian_rep, Lambda, QuantumPlaneModule, QuiverRep, RepElement,
};
use uqcomod::uqsl2::{iterated_coproduct, UqElement};
use uqcomod::{Error, QScalar};

use output::Printer;

pub enum Failure {
    Verification(String),
    Usage(String),
    Rejected(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Rejected(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Rejected(m) => m,
        }
    }
}

/// Malformed input is a usage error; everything else the library reports is
/// a semantic rejection.
fn classify_error(e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::Json(_) | Error::ShapeMismatch(_) | Error::Precondition(_) => {
            Failure::Usage(e.to_string())
        }
        _ => Failure::Rejected(e.to_string()),
    }
}

#[derive(Parser)]
#[command(
    name = "uqcomod",
    version,
    about = "Exact computations with U_q(sl_2), its path-coalgebra image and comodules"
)]
struct Cli {
    /// Specialize printed scalars at q = r (rational r, not 0 or ±1)
    #[arg(long, global = true, value_name = "q=R")]
    eval: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the iterated coproduct of an element, e.g. "K^-1*E*F"
    ExpandCoproduct {
        element: String,
        /// Number of tensor legs (1 prints the element itself)
        #[arg(long, default_value_t = 2)]
        legs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the path-coalgebra vector b(l, n, i)
    BasisB {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check theta(K^l E'^i F^j) against its closed form over a grid
    #[command(name = "verify-31")]
    Verify31 {
        #[arg(long, allow_hyphen_values = true)]
        max_degree: i64,
        /// Inclusive range of l, written A..B
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        l: String,
    },
    /// Build a representation and print it as JSON
    BuildRep {
        #[command(subcommand)]
        kind: RepKind,
    },
    /// Classify a Schurian representation read from a JSON file
    Classify { rep_file: PathBuf },
    /// Act with a word in a, b, c, d on an element of a representation
    Act {
        word: String,
        rep_file: PathBuf,
        /// JSON element, e.g. '{"l":0,"v":[1]}'
        element: String,
        /// Use the explicit formulas instead of the coaction
        #[arg(long, conflicts_with = "check")]
        closed_form: bool,
        /// Compute both ways and fail unless they agree
        #[arg(long)]
        check: bool,
    },
    /// Run the built-in self checks
    VerifySuite,
}

#[derive(Subcommand)]
enum RepKind {
    /// M_(l, n, lambda); lambda is a scalar or "inf"
    Schurian {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// A quantum-plane module spread over [l, l + n]; X and Y as JSON matrices
    QuantumPlane {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("expected a range A..B, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn parse_matrix(s: &str) -> Result<Matrix, Failure> {
    let rows: Vec<Vec<QScalar>> = serde_json::from_str(s).map_err(|e| Failure::Usage(format!("bad matrix: {e}")))?;
    Matrix::from_rows(rows).map_err(classify_error)
}

fn read_rep(path: &FsPath) -> Result<QuiverRep, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    QuiverRep::from_json(&text).map_err(classify_error)
}

fn expand_coproduct(p: &Printer, element: &str, legs: usize, as_json: bool) -> Result<(), Failure> {
    if legs == 0 {
        return Err(Failure::Usage("--legs must be at least 1".into()));
    }
    let u: UqElement = element.parse().map_err(classify_error)?;
    let t = iterated_coproduct(&u, legs - 1);
    if as_json {
        println!("{}", p.json(&t)?);
    } else if p.is_symbolic() {
        println!("{t}");
    } else {
        let labels = t.terms().map(|(legs, c)| {
            let parts: Vec<String> = legs.iter().map(ToString::to_string).collect();
            (format!("({})", parts.join(" ⊗ ")), c)
        });
        println!("{}", p.sum(labels)?);
    }
    Ok(())
}

fn show_basis_b(p: &Printer, l: i64, n: usize, i: usize, as_json: bool) -> Result<(), Failure> {
    let b = basis_b(l, n, i).map_err(classify_error)?;
    if as_json {
        println!("{}", p.json(&b)?);
    } else if p.is_symbolic() {
        println!("{b}");
    } else {
        println!("{}", p.sum(b.terms().map(|(path, c)| (format!("<{path}>"), c)))?);
    }
    Ok(())
}

fn verify_31(max_degree: i64, range: &str) -> Result<(), Failure> {
    if max_degree < 0 {
        return Err(Failure::Usage(format!(
            "--max-degree must be non-negative, got {max_degree}"
        )));
    }
    let (lo, hi) = parse_range(range)?;
    let degree = u32::try_from(max_degree).map_err(|_| Failure::Usage("--max-degree too large".into()))?;
    let mut grid = Vec::new();
    for l in lo..=hi {
        for n in 0..=degree {
            for i in 0..=n {
                grid.push((l, i, n - i));
            }
        }
    }
    let started = Instant::now();
    let results: Vec<_> = grid
        .par_iter()
        .map(|&(l, i, j)| {
            let t = Instant::now();
            let r = verify_identity_31(l, i, j);
            (l, i, j, r, t.elapsed())
        })
        .collect();
    let mut failures = 0;
    for (l, i, j, r, elapsed) in &results {
        if r.holds() {
            println!("ok   l={l} i={i} j={j}");
        } else {
            failures += 1;
            println!("FAIL l={l} i={i} j={j} diff: {}", r.diff);
        }
        eprintln!("l={l} i={i} j={j}: {:.3}s", elapsed.as_secs_f64());
    }
    println!("{} of {} cases hold", results.len() - failures, results.len());
    eprintln!("total {:.3}s", started.elapsed().as_secs_f64());
    if failures > 0 {
        return Err(Failure::Verification(format!("{failures} cases fail")));
    }
    Ok(())
}

fn build_rep(p: &Printer, kind: &RepKind) -> Result<(), Failure> {
    let rep = match kind {
        RepKind::Schurian { l, n, lambda } => {
            let lambda: Lambda = lambda.parse().map_err(classify_error)?;
            schurian_rep(*l, *n, &lambda)
        }
        RepKind::QuantumPlane { l, n, x, y } => {
            let module = QuantumPlaneModule::new(parse_matrix(x)?, parse_matrix(y)?).map_err(classify_error)?;
            from_quantum_plane(*l, *n, &module)
        }
    };
    println!("{}", p.json(&rep)?);
    Ok(())
}

fn classify(p: &Printer, path: &FsPath) -> Result<(), Failure> {
    let rep = read_rep(path)?;
    match classify_schurian(&rep) {
        Ok(data) => {
            println!("{}", p.json(&data)?);
            Ok(())
        }
        Err(rejection) => {
            println!(
                "{}",
                json!({"rejected": rejection.reason(), "detail": rejection.to_string()})
            );
            Err(Failure::Rejected(rejection.to_string()))
        }
    }
}

fn act(p: &Printer, word: &str, rep_file: &FsPath, element: &str, closed: bool, check: bool) -> Result<(), Failure> {
    let w: WordSum = word.parse().map_err(classify_error)?;
    let rep = read_rep(rep_file)?;
    let m: RepElement = serde_json::from_str(element).map_err(|e| Failure::Usage(format!("bad element: {e}")))?;
    rep.check_element(&m).map_err(classify_error)?;
    let result = if closed {
        act_closed_word(&w, &rep, &m).map_err(classify_error)?
    } else {
        act_word(&w, &rep, &m).map_err(classify_error)?
    };
    if check {
        let other = act_closed_word(&w, &rep, &m).map_err(classify_error)?;
        if other != result {
            println!(
                "{}",
                json!({"generic": serde_json::to_value(&result).expect("serializes"),
                                   "closed_form": serde_json::to_value(&other).expect("serializes")})
            );
            return Err(Failure::Verification("generic and closed-form actions differ".into()));
        }
    }
    println!("{}", p.json(&result)?);
    Ok(())
}

fn verify_suite() -> Result<(), Failure> {
    let results = suite::run();
    let mut failed = 0;
    for (name, ok) in &results {
        println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} checks fail")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let p = Printer::new(cli.eval.as_deref())?;
    match &cli.command {
        Command::ExpandCoproduct { element, legs, json } => expand_coproduct(&p, element, *legs, *json),
        Command::BasisB { l, n, i, json } => show_basis_b(&p, *l, *n, *i, *json),
        Command::Verify31 { max_degree, l } => verify_31(*max_degree, l),
        Command::BuildRep { kind } => build_rep(&p, kind),
        Command::Classify { rep_file } => classify(&p, rep_file),
        Command::Act {
            word,
            rep_file,
            element,
            closed_form,
            check,
        } => act(&p, word, rep_file, element, *closed_form, *check),
        Command::VerifySuite => verify_suite(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

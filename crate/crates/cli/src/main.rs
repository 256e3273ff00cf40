mod dot;
mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use positroid::bridge::{decompose, sym_decompose, symmetric_graph_from_bap};
use positroid::combinatorics::{
    is_symmetric_bap, is_symmetric_dual_necklace, is_symmetric_necklace, is_symmetric_positroid,
};
use positroid::ErrorClass;
use positroid::{
    BoundedAffinePermutation, BridgeScript, DualGrassmannNecklace, GrassmannNecklace, Positroid, RationalMatrix,
};

use format::GraphFile;

#[derive(Parser)]
#[command(name = "positroid", version, about = "Plabic graphs, positroids and bridge decompositions")]
struct Args {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structural invariants of a graph file.
    Validate { input: PathBuf },
    /// List the trips of a graph as vertex paths.
    Trips { input: PathBuf },
    /// Report whether a graph is reduced.
    Reduced { input: PathBuf },
    /// Print the bounded affine permutation, both necklaces and the positroid.
    Perm {
        /// Graph or matrix file.
        input: Option<PathBuf>,
        /// A window such as `3,4,5,6` instead of a file.
        #[arg(long, conflicts_with = "input")]
        window: Option<String>,
    },
    /// Plücker vector of a weighted graph or of a matrix.
    Measure { input: PathBuf },
    /// Symmetry predicates for a graph, its weighting and its point.
    Symcheck { input: PathBuf },
    /// Bridge decomposition of a totally nonnegative matrix.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        symmetric: bool,
    },
    /// Weighted graph of a bridge script.
    Realize { input: PathBuf },
    /// DOT drawing of a graph file.
    Render { input: PathBuf },
    /// List every bounded affine permutation of type (k, n).
    EnumerateBap {
        k: usize,
        n: usize,
        #[arg(long)]
        symmetric: bool,
    },
    /// Check that the symmetry characterizations agree on every permutation
    /// of type (n/2, n), and that each symmetric one has a symmetric graph.
    VerifyEquivalence { n: usize },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] positroid::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.code(),
            CliError::Io { .. } => "io",
            CliError::Check(_) => "check-failed",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) => match e.class() {
                ErrorClass::Parse => 1,
                ErrorClass::Validation => 2,
                ErrorClass::Precondition => 3,
            },
            CliError::Io { .. } => 1,
            CliError::Check(_) => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

enum Input {
    Graph(GraphFile),
    Matrix(RationalMatrix),
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_input(path: &Path) -> Result<Input> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with("plabic") {
        Ok(Input::Graph(format::parse_graph(&text)?))
    } else {
        Ok(Input::Matrix(RationalMatrix::parse(&text)?))
    }
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    Ok(format::parse_graph(&read(path)?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn perm_report(f: &BoundedAffinePermutation, trip: Option<&[usize]>) -> String {
    let necklace = GrassmannNecklace::from_bap(f);
    let bar: Vec<String> = match trip {
        Some(t) => t.iter().map(usize::to_string).collect(),
        None => f.bar_permutation().iter().map(usize::to_string).collect(),
    };
    let positroid = Positroid::from_necklace(&necklace);
    let members: Vec<String> = positroid.members().iter().map(|s| s.to_string()).collect();
    let mut out = String::new();
    writeln!(out, "bap\t{f}").unwrap();
    writeln!(out, "trip\t{}", bar.join(",")).unwrap();
    writeln!(out, "necklace\t{necklace}").unwrap();
    writeln!(out, "dual\t{}", DualGrassmannNecklace::from_bap(f)).unwrap();
    writeln!(out, "positroid\t{}", members.join(" ")).unwrap();
    out
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Validate { input } => match read_input(&input)? {
            Input::Graph(file) => {
                let violations = file.graph.validate();
                if violations.is_empty() {
                    file.weighted()?;
                    Ok("ok\n".into())
                } else {
                    Err(positroid::Error::InvalidGraph(violations).into())
                }
            }
            Input::Matrix(m) => {
                m.plucker_vector()?;
                Ok("ok\n".into())
            }
        },
        Command::Trips { input } => {
            let g = read_graph(&input)?.graph;
            let mut out = String::new();
            for trip in g.trips()? {
                let start = trip.traversals[0].from.0;
                let path: Vec<String> = std::iter::once(start)
                    .chain(trip.traversals.iter().map(|t| t.to.0))
                    .map(|v| v.to_string())
                    .collect();
                match trip.endpoints {
                    Some((a, b)) => writeln!(out, "{a} -> {b}: {}", path.join(" ")),
                    None => writeln!(out, "cycle: {}", path.join(" ")),
                }
                .unwrap();
            }
            Ok(out)
        }
        Command::Reduced { input } => {
            let g = read_graph(&input)?.graph;
            Ok(match g.reducedness()? {
                None => "reduced\n".into(),
                Some(v) => format!("not reduced: {v}\n"),
            })
        }
        Command::Perm { input, window } => match (input, window) {
            (_, Some(w)) => Ok(perm_report(&BoundedAffinePermutation::parse(&w)?, None)),
            (Some(path), None) => match read_input(&path)? {
                Input::Graph(file) => {
                    let trip = file.graph.trip_permutation()?;
                    Ok(perm_report(&file.graph.bap()?, Some(&trip)))
                }
                Input::Matrix(m) => Ok(perm_report(&m.bap()?, None)),
            },
            (None, None) => Err(positroid::Error::Parse("perm needs a file or --window".into()).into()),
        },
        Command::Measure { input } => {
            let p = match read_input(&input)? {
                Input::Graph(file) => file.weighted()?.boundary_measurement()?,
                Input::Matrix(m) => m.plucker_vector()?,
            };
            Ok(p.to_text())
        }
        Command::Symcheck { input } => {
            let mut out = String::new();
            let point = match read_input(&input)? {
                Input::Graph(file) => {
                    let symmetric = file.graph.is_symmetric();
                    writeln!(out, "graph\t{}", yes_no(symmetric)).unwrap();
                    let w = file.weighted()?;
                    if symmetric && file.weights.is_some() {
                        writeln!(out, "weighting\t{}", yes_no(w.is_symmetric_weighting()?)).unwrap();
                    }
                    w.boundary_measurement()?
                }
                Input::Matrix(m) => m.plucker_vector()?,
            };
            writeln!(out, "point\t{}", yes_no(point.is_symmetric()?)).unwrap();
            let f = RationalMatrix::from_plucker(&point)?.bap()?;
            writeln!(out, "permutation\t{}", yes_no(is_symmetric_bap(&f)?)).unwrap();
            Ok(out)
        }
        Command::Decompose { input, symmetric } => {
            let m = match read_input(&input)? {
                Input::Matrix(m) => m,
                Input::Graph(file) => RationalMatrix::from_plucker(&file.weighted()?.boundary_measurement()?)?,
            };
            let script = if symmetric { sym_decompose(&m)? } else { decompose(&m)? };
            Ok(script.to_text())
        }
        Command::Realize { input } => {
            let w = BridgeScript::parse(&read(&input)?)?.realize()?;
            Ok(format::write_graph(w.graph(), Some(w.weights())))
        }
        Command::Render { input } => {
            let file = read_graph(&input)?;
            Ok(dot::render(&file.graph, file.weights.as_deref()))
        }
        Command::EnumerateBap { k, n, symmetric } => {
            let mut out = String::new();
            for f in BoundedAffinePermutation::enumerate(k, n) {
                if !symmetric || is_symmetric_bap(&f)? {
                    writeln!(out, "{f}").unwrap();
                }
            }
            Ok(out)
        }
        Command::VerifyEquivalence { n } => verify_equivalence(n),
    }
}

fn verify_equivalence(n: usize) -> Result<String> {
    if !n.is_multiple_of(2) {
        return Err(positroid::Error::OddGroundSet(n).into());
    }
    let (mut total, mut symmetric) = (0, 0);
    let mut failures = Vec::new();
    for f in BoundedAffinePermutation::enumerate(n / 2, n) {
        total += 1;
        let necklace = GrassmannNecklace::from_bap(&f);
        let verdicts = [
            is_symmetric_positroid(&Positroid::from_necklace(&necklace))?,
            is_symmetric_bap(&f)?,
            is_symmetric_necklace(&necklace)?,
            is_symmetric_dual_necklace(&DualGrassmannNecklace::from_bap(&f))?,
        ];
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            failures.push(format!("{f}: predicates disagree {verdicts:?}"));
            continue;
        }
        if verdicts[0] {
            symmetric += 1;
            let g = symmetric_graph_from_bap(&f)?;
            if !(g.is_symmetric() && g.is_reduced()? && g.bap()? == f) {
                failures.push(format!("{f}: constructed graph fails"));
            }
        }
    }
    if let Some(first) = failures.first() {
        return Err(CliError::Check(format!("{} failure(s), first {first}", failures.len())));
    }
    Ok(format!("n\t{n}\npermutations\t{total}\nsymmetric\t{symmetric}\nagree\tyes\n"))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(args.command).and_then(|text| match &args.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {}", e.code(), e.to_string().replace('\n', " "));
            ExitCode::from(e.exit_code())
        }
    }
}

//! `betanbc` command-line front end.
//!
//! Every subcommand reads an arrangement file (and a weights file where
//! needed) and prints one compact JSON document. Exit status is 0 on
//! success, 1 for usage or input errors and 2 when a computed result
//! contradicts a theorem. Errors are reported as JSON on standard error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use betanbc::bases::{betanbc_basis, monomial_basis_check, transition_matrix};
use betanbc::complexes::{broken_circuit_complex, check_lex_shelling, folkman_complex};
use betanbc::matroid::betanbc_recursive;
use betanbc::osalgebra::{aomoto, WeightVector};
use betanbc::random::{random_gated_weights, rng};
use betanbc::rational::format_rational;
use betanbc::resonance::DenseData;
use betanbc::verify::{verify, VerifyOptions};
use betanbc::{parse_arrangement, Arrangement, Exec, Matroid};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "betanbc",
    version,
    about = "Broken-circuit bases and flag-form cohomology of hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Leave the hyperplane at infinity alone out of the nonresonance
    /// conditions, as in the worked example.
    #[arg(long, global = true)]
    paper_example_compat: bool,
}

#[derive(Args)]
struct Input {
    /// Arrangement file (JSON).
    arrangement: PathBuf,
}

#[derive(Args)]
struct Weighted {
    /// Arrangement file (JSON).
    arrangement: PathBuf,
    /// Weights file: a JSON array of rational strings.
    #[arg(long)]
    weights: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Recursive,
    Shelling,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection lattice: every flat with its codimension and support.
    Lattice(Input),
    /// Circuits and broken circuits.
    Circuits(Input),
    /// nbc bases.
    Nbc(Input),
    /// βnbc bases.
    Betanbc {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Characteristic polynomial and the β invariant.
    Charpoly(Input),
    /// The order complex of the proper part of the lattice.
    Folkman(Input),
    /// Reduced Betti numbers of the broken circuit and Folkman complexes.
    Betti(Input),
    /// Dimensions of the Orlik-Solomon algebra by degree.
    OsDims(Input),
    /// Dimensions and cohomology of the Aomoto complex.
    Aomoto(Weighted),
    /// Flag-form basis of the top cohomology with its rank certificate.
    Basis(Weighted),
    /// Whether the βnbc monomials give a basis of the top cohomology.
    MonomialCheck(Weighted),
    /// Transition matrix from the given order's basis to another order's.
    Transition {
        #[command(flatten)]
        weighted: Weighted,
        /// Target order, a comma-separated permutation of 1..n.
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<usize>,
        /// Number of weight samples, the given weights included.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Seed for the extra samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dense flats.
    Dense {
        #[command(flatten)]
        input: Input,
        /// Also list dense elements of the projective closure.
        #[arg(long)]
        with_infinity: bool,
    },
    /// Checks the nonresonance condition.
    Nonresonance(Weighted),
    /// Runs the full invariant suite; exits 2 on any failed check.
    Verify(Weighted),
}

/// A failure carried to the exit path.
struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl Failure {
    fn usage(kind: &str, message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind: kind.to_string(),
            message: message.into(),
        }
    }
}

impl From<betanbc::Error> for Failure {
    fn from(e: betanbc::Error) -> Self {
        Failure {
            code: if e.is_inconsistency() { 2 } else { 1 },
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

/// A report and the exit code to leave with after printing it.
struct Report {
    body: Value,
    code: u8,
}

impl Report {
    fn ok<T: Serialize>(value: &T) -> Self {
        Report {
            body: serde_json::to_value(value).expect("reports serialize"),
            code: 0,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Arrangement, Failure> {
    Ok(parse_arrangement(&read(path)?)?)
}

fn load_weighted(w: &Weighted) -> Result<(Matroid, WeightVector), Failure> {
    let m = Matroid::new(&load(&w.arrangement)?);
    let weights = WeightVector::parse(&read(&w.weights)?)?;
    let weights = WeightVector::for_arrangement(weights.values().to_vec(), m.len())?;
    Ok((m, weights))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let compat = cli.paper_example_compat;
    let exec = Exec::default();
    let report = match &cli.command {
        Command::Lattice(i) => {
            let a = load(&i.arrangement)?;
            let lattice = a.lattice_with(exec);
            let flats: Vec<Value> = lattice
                .flats()
                .iter()
                .map(|f| {
                    json!({
                        "id": f.id(),
                        "codim": f.codim(),
                        "support": f.support(),
                        "point": f.point().iter().map(format_rational).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Report::ok(&json!({
                "dimension": a.dimension(),
                "rank": lattice.rank(),
                "flats": flats,
            }))
        }
        Command::Circuits(i) => {
            let m = Matroid::new(&load(&i.arrangement)?);
            Report::ok(&json!({
                "circuits": m.circuits(),
                "broken_circuits": m.broken_circuits(),
            }))
        }
        Command::Nbc(i) => Report::ok(&Matroid::new(&load(&i.arrangement)?).nbc_bases()),
        Command::Betanbc { input, method } => {
            let a = load(&input.arrangement)?;
            let bases = match method {
                Method::Direct => Matroid::new(&a).betanbc_direct(),
                Method::Recursive => betanbc_recursive(&a),
                Method::Shelling => {
                    let shelling = check_lex_shelling(&Matroid::new(&a));
                    if !shelling.is_shelling {
                        return Err(betanbc::Error::Inconsistency(format!(
                            "lexicographic order fails to shell at {:?}",
                            shelling.violation
                        ))
                        .into());
                    }
                    shelling.homology_facets
                }
            };
            Report::ok(&bases)
        }
        Command::Charpoly(i) => {
            let m = Matroid::new(&load(&i.arrangement)?);
            let chi = m.char_poly();
            Report::ok(&json!({
                "coefficients": chi.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "beta": m.beta_count_check().to_string(),
            }))
        }
        Command::Folkman(i) => {
            let m = Matroid::new(&load(&i.arrangement)?);
            let f = folkman_complex(&m);
            let vertices: Vec<Value> = (0..f.complex.vertex_count())
                .map(|p| {
                    let flat = &m.lattice().flats()[f.flat_at(p)];
                    json!({"flat": flat.id(), "codim": flat.codim(), "support": flat.support()})
                })
                .collect();
            Report::ok(&json!({
                "dimension": f.complex.dimension(),
                "vertices": vertices,
                "facets": f.complex.facets(),
            }))
        }
        Command::Betti(i) => {
            let m = Matroid::new(&load(&i.arrangement)?);
            Report::ok(&json!({
                "broken_circuit": broken_circuit_complex(&m).reduced_betti_numbers(exec),
                "folkman": folkman_complex(&m).complex.reduced_betti_numbers(exec),
            }))
        }
        Command::OsDims(i) => {
            let m = Matroid::new(&load(&i.arrangement)?);
            let dims: Vec<usize> = (0..=m.rank()).map(|p| m.nbc_sets(p).len()).collect();
            Report::ok(&json!({ "dims": dims }))
        }
        Command::Aomoto(w) => {
            let (m, weights) = load_weighted(w)?;
            let complex = aomoto(&m, &weights);
            Report::ok(&json!({
                "dims": complex.dims(),
                "cohomology": complex.cohomology_dims(exec),
                "squares_to_zero": complex.squares_to_zero(),
            }))
        }
        Command::Basis(w) => {
            let (m, weights) = load_weighted(w)?;
            Report::ok(&betanbc_basis(&m, &weights)?)
        }
        Command::MonomialCheck(w) => {
            let (m, weights) = load_weighted(w)?;
            Report::ok(&monomial_basis_check(&m, &weights)?)
        }
        Command::Transition {
            weighted,
            order,
            samples,
            seed,
        } => {
            let (m, weights) = load_weighted(weighted)?;
            if *samples == 0 {
                return Err(Failure::usage("usage", "--samples must be at least 1"));
            }
            let dense = DenseData::new(&m);
            let mut r = rng(*seed);
            let mut all = vec![weights];
            while all.len() < *samples {
                all.push(random_gated_weights(&mut r, &dense, m.len(), true));
            }
            let identity: Vec<usize> = (1..=m.len()).collect();
            Report::ok(&transition_matrix(m.arrangement(), &identity, order, &all)?)
        }
        Command::Dense {
            input,
            with_infinity,
        } => {
            let m = Matroid::new(&load(&input.arrangement)?);
            let dense = DenseData::new(&m);
            let report = dense.report();
            let mut body = json!({ "affine": report.affine });
            if *with_infinity {
                let projective: Vec<_> = report
                    .projective
                    .iter()
                    .filter(|e| !(compat && e.support.len() == 1 && e.at_infinity))
                    .collect();
                body["projective"] = serde_json::to_value(projective).expect("reports serialize");
            }
            Report::ok(&body)
        }
        Command::Nonresonance(w) => {
            let (m, weights) = load_weighted(w)?;
            Report::ok(&DenseData::new(&m).check_nonresonance(&weights, compat))
        }
        Command::Verify(w) => {
            let (m, weights) = load_weighted(w)?;
            let options = VerifyOptions {
                exec,
                ..VerifyOptions::default()
            };
            let result = verify(m.arrangement(), &weights, &options);
            Report {
                code: if result.ok { 0 } else { 2 },
                body: serde_json::to_value(&result).expect("reports serialize"),
            }
        }
    };
    Ok(report)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage("io", format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(f: &Failure) -> ExitCode {
    let diagnostic = json!({"error": {"kind": f.kind, "message": f.message}});
    eprintln!("{diagnostic}");
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail(&Failure::usage("usage", e.to_string().trim_end()));
        }
    };
    let result = run(&cli).and_then(|report| {
        let text = format!("{}\n", report.body);
        emit(&text, cli.output.as_deref())?;
        Ok(report.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => fail(&f),
    }
}

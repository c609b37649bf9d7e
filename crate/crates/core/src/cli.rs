//! The `pdetlab` command line.
//!
//! Every subcommand takes its input either as a path to a complex JSON file
//! or as a family shorthand such as `polygon5`, `simplex6-skel2` or
//! `pyramid-polygon5`. Exit codes: 0 success, 1 a check failed, 2 bad
//! input, 3 enumeration budget exceeded.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::families::{pyramid, Family, Structure};
use crate::orientation::dirac_operator;
use crate::poly::{weighted_pdet, VarTable};
use crate::report::{digest, RunReport};
use crate::suite::{run_suite, Suite, SuiteOptions};
use crate::trees::{enumerate_trees, laplacian_pdet, tau, tau_via_pdet_chain, weigh_trees, DEFAULT_BUDGET};
use crate::complex::ComplexFile;
use crate::linalg::pdet;

#[derive(Parser, Debug)]
#[command(name = "pdetlab", version, about = "Exact pseudodeterminants, cellular trees and self-dual balls")]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on candidate facet sets visited by tree enumeration.
    #[arg(long, global = true, env = "PDETLAB_BUDGET")]
    budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated complex to a JSON file (`-` for stdout).
    ///
    /// `gen polygon 5 out.json`, `gen simplex 5 out.json`,
    /// `gen skeleton 6 2 out.json`, `gen trapezohedron 6 out.json`,
    /// `gen pyramid --base in.json out.json`, or a shorthand such as
    /// `gen pyramid-polygon5 out.json`.
    Gen {
        family: String,
        /// Family parameters followed by the output path.
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
        /// Self-dual base complex for `pyramid`.
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// pdet(∂ₖ∂ₖᵗ), optionally its weighted form and the Dirac pdet.
    Pdet {
        input: String,
        #[arg(long)]
        dim: Option<i32>,
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        dirac: bool,
    },
    /// Stream the cellular trees of one dimension as JSON lines.
    Trees {
        input: String,
        #[arg(long)]
        dim: i32,
        #[arg(long)]
        weighted: bool,
    },
    /// The torsion tree enumerator τₖ.
    Tau {
        input: String,
        #[arg(long)]
        dim: i32,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Run a verification suite and report each identity.
    Verify {
        input: String,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Tree pairs sampled per dimension for the pair torsion check.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumerate,
    Chain,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Linalg,
    MatrixTree,
    Duality,
    Antipodal,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Linalg => Suite::Linalg,
            SuiteArg::MatrixTree => Suite::MatrixTree,
            SuiteArg::Duality => Suite::Duality,
            SuiteArg::Antipodal => Suite::Antipodal,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::BudgetExceeded { .. } = e {
                eprintln!("hint: raise --budget or use `tau --method chain`");
            }
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

struct Input {
    structure: Structure,
    digest: String,
}

/// A file when `arg` names one, else a family shorthand.
fn load(arg: &str) -> Result<Input> {
    let path = Path::new(arg);
    if path.exists() {
        let bytes = std::fs::read(path)?;
        let text = String::from_utf8(bytes.clone()).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        let file = ComplexFile::parse(&text)?;
        Ok(Input {
            structure: Structure::from_file(&file)?,
            digest: digest(&bytes),
        })
    } else {
        let family: Family = arg.parse().map_err(|_| {
            Error::Parse(format!("`{arg}` is neither a file nor a family like polygon5 or simplex6-skel2"))
        })?;
        let structure = family.build()?;
        let digest = digest(structure.to_file().to_json().as_bytes());
        Ok(Input { structure, digest })
    }
}

fn emit(cli: &Cli, mut report: RunReport, started: Instant) -> i32 {
    report.set_elapsed(started.elapsed());
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.render_table());
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}

fn execute(cli: &Cli, command: Vec<String>) -> Result<i32> {
    let started = Instant::now();
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let mut report = RunReport::new(command);
    match &cli.command {
        Command::Gen { family, args, base } => {
            let (out, params) = args.split_last().expect("clap requires one argument");
            let structure = generate(family, params, base.as_deref())?;
            let text = structure.to_file().to_json();
            if out == "-" {
                print!("{text}");
            } else {
                std::fs::write(out, &text)?;
                if !cli.json {
                    let f = structure.complex().f_vector();
                    eprintln!("wrote {out}: {} cells, f-vector {f:?}", structure.complex().len());
                }
            }
            Ok(0)
        }
        Command::Pdet { input, dim, weighted, dirac } => {
            let inp = load(input)?;
            report.input_digest = Some(inp.digest);
            let c = inp.structure.complex();
            if dim.is_none() && !dirac {
                return Err(Error::Parse("pass --dim k and/or --dirac".into()));
            }
            if let Some(k) = *dim {
                let b = c.boundary_matrix(k)?;
                report.result(format!("pdet(∂{k}∂{k}ᵗ)"), laplacian_pdet(&b));
                if *weighted {
                    let (n, m) = (b.rows(), b.cols());
                    let names: Vec<String> = c
                        .dim_range(k - 1)
                        .map(|i| format!("x[{}]", c.cell(i).id()))
                        .chain(c.dim_range(k).map(|i| format!("y[{}]", c.cell(i).id())))
                        .collect();
                    let x: Vec<usize> = (0..n).collect();
                    let y: Vec<usize> = (n..n + m).collect();
                    let p = weighted_pdet(&b, &x, &y)?;
                    report.result(format!("pdet(X∂{k}Y∂{k}ᵗ)"), p.render(&VarTable::new(names)));
                }
            }
            if *dirac {
                report.result("pdet(∂+∂ᵗ)", pdet(&dirac_operator(c))?);
            }
            Ok(emit(cli, report, started))
        }
        Command::Trees { input, dim, weighted } => {
            let inp = load(input)?;
            let c = inp.structure.complex();
            let trees = enumerate_trees(c, *dim, budget)?;
            let value: num_bigint::BigInt = trees.iter().map(|t| &t.torsion * &t.torsion).sum();
            if cli.json {
                report.input_digest = Some(inp.digest);
                report.result("trees", trees.len());
            } else {
                for t in &trees {
                    println!("{}", t.to_json_line(c));
                }
            }
            report.result(format!("τ{dim}"), &value);
            if *weighted {
                let names = c.dim_range(*dim).map(|i| format!("x[{}]", c.cell(i).id())).collect();
                let vars: Vec<usize> = (0..c.f(*dim)).collect();
                report.result(format!("τ{dim}(S,x)"), weigh_trees(&trees, &vars)?.render(&VarTable::new(names)));
            }
            if cli.json {
                Ok(emit(cli, report, started))
            } else {
                for r in &report.results {
                    eprintln!("{} = {}", r.name, r.value);
                }
                Ok(0)
            }
        }
        Command::Tau { input, dim, method } => {
            let inp = load(input)?;
            report.input_digest = Some(inp.digest);
            let c = inp.structure.complex();
            let chain = if *method != Method::Enumerate { Some(tau_via_pdet_chain(c, *dim)?) } else { None };
            let enumerated = if *method != Method::Chain { Some(tau(c, *dim, budget)?) } else { None };
            if let Some(t) = &enumerated {
                report.result("trees", t.tree_count);
                report.result("max torsion", &t.max_torsion);
            }
            match (&chain, &enumerated) {
                (Some(ch), Some(en)) => {
                    report.result(format!("τ{dim}"), ch);
                    report.compare("enumeration = chain", "Σ_T |H̃(T)|² = pdet(∂ᵢ∂ᵢᵗ)/τᵢ₋₁", ch, &en.value);
                }
                (Some(v), None) => report.result(format!("τ{dim}"), v),
                (None, Some(en)) => report.result(format!("τ{dim}"), &en.value),
                (None, None) => unreachable!(),
            }
            Ok(emit(cli, report, started))
        }
        Command::Verify { input, suite, samples, seed } => {
            let inp = load(input)?;
            report.input_digest = Some(inp.digest);
            let opts = SuiteOptions {
                budget,
                pair_samples: *samples,
                seed: *seed,
            };
            run_suite(&inp.structure, (*suite).into(), &opts, &mut report)?;
            Ok(emit(cli, report, started))
        }
    }
}

fn generate(family: &str, params: &[String], base: Option<&Path>) -> Result<Structure> {
    let nums = params
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| Error::InvalidFamily(format!("`{p}` is not a parameter"))))
        .collect::<Result<Vec<_>>>()?;
    let f = match (family, nums.as_slice()) {
        ("pyramid", []) => {
            let path = base.ok_or_else(|| Error::InvalidFamily("pyramid needs --base FILE".into()))?;
            let file = ComplexFile::parse(&std::fs::read_to_string(path)?)?;
            return match Structure::from_file(&file)? {
                Structure::SelfDual(s) => Ok(Structure::SelfDual(pyramid(&s)?)),
                Structure::Plain(_) => Err(Error::InvalidFamily("pyramid base must carry alpha and ball_dim".into())),
            };
        }
        ("polygon", [n]) => Family::Polygon(*n),
        ("simplex", [n]) => Family::Simplex(*n),
        ("simplex" | "skeleton", [n, k]) => Family::SimplexSkeleton(*n, *k),
        ("trapezohedron", [m]) => Family::Trapezohedron(*m),
        (shorthand, []) => shorthand.parse()?,
        _ => return Err(Error::InvalidFamily(format!("bad parameters {params:?} for `{family}`"))),
    };
    f.build()
}

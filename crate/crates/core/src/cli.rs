//! Command-line front end. [`run`] parses arguments, dispatches, prints, and
//! returns the process exit code: 0 on success or an all-pass report, 1 on a
//! failed check or computation, 2 on a usage or input error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bracketing::bracketing_function;
use crate::closure::GeneratorSet;
use crate::error::{Error, Result};
use crate::lie::{BracketShape, LieElement};
use crate::magnus::classify_pair;
use crate::parse::{parse_derivation, parse_expr, parse_schur_ref};
use crate::schur::SchurElement;
use crate::transfer::{operad_compose, star, transfer, Composition};
use crate::verify::{run_suite, Suite, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "schurlie", version, about = "Exact computations with free Lie algebras, Schur algebras and derivations")]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rewrite a Lie expression in the Lyndon basis.
    Normalize {
        expr: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Expand a Lie or tensor expression in the tensor algebra.
    Embed {
        expr: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Group-ring element of a bracket shape such as `[[,],]`.
    Brq {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Orbit-coefficient basis of the Schur algebra as JSON lines.
    SchurBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
    /// Apply a Schur element (JSON file or inline JSON) to an expression.
    SchurApply {
        #[arg(long)]
        schur: String,
        expr: String,
        /// Treat the input as a Lie element and return Lyndon coordinates.
        #[arg(long)]
        lie: bool,
        #[arg(long)]
        json: bool,
    },
    /// Star product of two Schur elements.
    Star { left: String, right: String },
    /// Transfer of block maps along a composition such as `(2,1)`.
    Transfer {
        #[arg(long)]
        lambda: String,
        parts: Vec<String>,
    },
    /// Operad composition `θ ∘ (θ_1, …, θ_m)`.
    OperadCompose {
        theta: String,
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Bracket of two derivations (`chi:i,j`, `theta:i,s,t`, or `x1=...; x2=...`).
    DerBracket {
        left: String,
        right: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Schur action on a derivation.
    Phi {
        #[arg(long)]
        schur: String,
        derivation: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify the subgroup generated by two conjugation automorphisms.
    Classify {
        /// Two generators as `i,j:k,l`.
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest degree checked (commutator depth for `johnson` and `pairs`).
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random instances per case for the fuzzing suites.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum)]
    pub generators: Option<Generators>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Generators {
    Mtilde,
    Gamma,
}

impl From<Generators> for GeneratorSet {
    fn from(g: Generators) -> Self {
        match g {
            Generators::Mtilde => GeneratorSet::MTilde,
            Generators::Gamma => GeneratorSet::Gamma,
        }
    }
}

/// Text printed on success, and whether the command counts as passing.
struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Self {
        Outcome { text: text.into(), pass: true }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(jobs) = cli.jobs {
        // fails only if a pool already exists, in which case it is reused
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match execute(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error of the computation
            let _ = writeln!(stdout, "{}", out.text.trim_end());
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::Range { .. } | Error::Argument(_) | Error::Dimension(_) => 2,
        _ => 1,
    }
}

/// Rank implied by the expression when `--n` is absent.
fn rank_for(expr_max: usize, n: Option<usize>) -> usize {
    n.unwrap_or(expr_max.max(1))
}

fn lie_json(a: &LieElement) -> serde_json::Value {
    let terms: Vec<_> = a
        .coefficients()
        .iter()
        .map(|(w, c)| json!({ "lyndon": w.to_dotted(), "coeff": c.to_string() }))
        .collect();
    json!({ "n": a.n(), "degree": a.degree(), "text": a.to_string(), "terms": terms })
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Normalize { expr, n, json } => {
            let e = parse_expr(&expr)?;
            let a = e.to_lie(rank_for(e.max_generator(), n))?;
            Ok(Outcome::ok(if json { lie_json(&a).to_string() } else { a.to_string() }))
        }
        Command::Embed { expr, n, json } => {
            let e = parse_expr(&expr)?;
            let t = e.to_tensor(rank_for(e.max_generator(), n))?;
            if json {
                let terms: Vec<_> = t.iter().map(|(w, c)| json!({ "word": w.to_dotted(), "coeff": c.to_string() })).collect();
                Ok(Outcome::ok(json!({ "degree": t.degree(), "terms": terms }).to_string()))
            } else {
                Ok(Outcome::ok(t.to_string()))
            }
        }
        Command::Brq { shape, json } => {
            let s: BracketShape = shape.parse()?;
            let g = bracketing_function(&s);
            Ok(Outcome::ok(if json {
                json!({ "shape": s.to_string(), "degree": g.degree(), "element": g.to_string() }).to_string()
            } else {
                g.to_string()
            }))
        }
        Command::SchurBasis { n, q } => {
            let lines: Vec<String> = SchurElement::basis(n, q).iter().map(SchurElement::to_json).collect();
            Ok(Outcome::ok(lines.join("\n")))
        }
        Command::SchurApply { schur, expr, lie, json } => {
            let f = parse_schur_ref(&schur)?;
            let e = parse_expr(&expr)?;
            if lie {
                let a = e.to_lie(f.n())?;
                let b = f.apply_to_lie(&a)?;
                Ok(Outcome::ok(if json { lie_json(&b).to_string() } else { b.to_string() }))
            } else {
                let t = f.apply(&e.to_tensor(f.n())?)?;
                if json {
                    let terms: Vec<_> = t.iter().map(|(w, c)| json!({ "word": w.to_dotted(), "coeff": c.to_string() })).collect();
                    Ok(Outcome::ok(json!({ "degree": t.degree(), "terms": terms }).to_string()))
                } else {
                    Ok(Outcome::ok(t.to_string()))
                }
            }
        }
        Command::Star { left, right } => {
            let f = parse_schur_ref(&left)?;
            let g = parse_schur_ref(&right)?;
            Ok(Outcome::ok(star(&f, &g)?.to_json()))
        }
        Command::Transfer { lambda, parts } => {
            let lambda: Composition = lambda.parse()?;
            let fs = parts.iter().map(|p| parse_schur_ref(p)).collect::<Result<Vec<_>>>()?;
            Ok(Outcome::ok(transfer(&lambda, &fs)?.to_json()))
        }
        Command::OperadCompose { theta, inputs } => {
            let theta = parse_schur_ref(&theta)?;
            let inputs = inputs.iter().map(|p| parse_schur_ref(p)).collect::<Result<Vec<_>>>()?;
            Ok(Outcome::ok(operad_compose(&theta, &inputs)?.to_json()))
        }
        Command::DerBracket { left, right, n, json } => {
            let d = parse_derivation(&left, n)?.bracket(&parse_derivation(&right, n)?)?;
            Ok(Outcome::ok(derivation_text(&d, json)))
        }
        Command::Phi { schur, derivation, json } => {
            let f = parse_schur_ref(&schur)?;
            let d = parse_derivation(&derivation, f.n())?.schur_act(&f)?;
            Ok(Outcome::ok(derivation_text(&d, json)))
        }
        Command::Classify { pair, n, depth, json } => {
            let (a, b) = parse_pair(&pair)?;
            let report = classify_pair(n, a, b, depth)?;
            let text = if json {
                serde_json::to_string_pretty(&report).expect("serializable")
            } else {
                let mut s = format!("chi({},{}) and chi({},{}) in rank {n}: {}\n", a.0, a.1, b.0, b.1, report.classification);
                s.push_str(&format!("index condition: {}, commutator trivial: {}\n", report.index_condition, report.commutator_trivial));
                for c in &report.certificate {
                    s.push_str(&format!("  depth {} {}: {}\n", c.depth, c.commutator, c.johnson_image));
                }
                s
            };
            Ok(Outcome { text, pass: report.classification != crate::magnus::PairClass::Inconclusive })
        }
        Command::Verify(args) => {
            let options = VerifyOptions {
                n: args.n,
                max_degree: args.max_degree,
                seed: args.seed,
                samples: args.samples,
                generators: args.generators.map(Into::into),
            };
            let report = run_suite(args.suite, &options)?;
            Ok(Outcome { text: if args.json { report.to_json() } else { report.to_human() }, pass: report.passed })
        }
    }
}

fn derivation_text(d: &crate::derivation::Derivation, json: bool) -> String {
    if json {
        let images: Vec<_> = d.images().iter().map(lie_json).collect();
        json!({ "n": d.n(), "degree": d.degree(), "images": images }).to_string()
    } else {
        d.to_string()
    }
}

/// `i,j:k,l` into two index pairs.
fn parse_pair(text: &str) -> Result<((usize, usize), (usize, usize))> {
    let bad = || Error::Argument(format!("expected a pair like 1,2:2,1, found {text:?}"));
    let (l, r) = text.split_once(':').ok_or_else(bad)?;
    let one = |s: &str| -> Result<(usize, usize)> {
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
    };
    Ok((one(l)?, one(r)?))
}

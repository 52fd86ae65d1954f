use std::cmp::Ordering;
use std::process::ExitCode;

use braidrep::distinguish::{self, Certificate, Outcome, SeparationReport};
use braidrep::verify::{self, RunConfig, Suite};
use braidrep::{dehornoy, magnus, BraidWord, Error, FreeWord, RepKind, Representation};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

/// Braid group actions on free groups.
///
/// Braid words are written as signed generator indices (`1 -2 3`, or
/// `s1 S2 s3`); free words as `x1 X2 x3^-2`. An empty string or `e` is the
/// identity.
#[derive(Parser, Debug)]
#[command(name = "braidrep", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of strands, which is also the free group rank.
    #[arg(long, global = true, default_value_t = 3)]
    strands: usize,
    /// Representation: artin, wada1:K, wada2 or wada3.
    #[arg(long, global = true)]
    rep: Option<RepKind>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of handle reductions per word.
    #[arg(long, global = true, default_value_t = dehornoy::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the automorphism of a braid word to a free word.
    Act {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Handle-reduce a braid word to a definite word.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    /// Decide whether a braid word is trivial, positive or negative.
    Solve {
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    /// Compare two braids in the braid order.
    Compare {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Magnus matrix of a braid word.
    Magnus {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        /// Print only the determinant.
        #[arg(long)]
        det: bool,
    },
    /// List the defining relators of the braid group.
    Relators,
    /// Separate the images of two representations.
    Distinguish {
        #[arg(long)]
        a: RepKind,
        #[arg(long)]
        b: RepKind,
    },
    /// Run a property suite: lemma, relations, oracle, magnus, distinguish,
    /// positivity or order.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
        /// Random cases for the sampled part of the suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

enum Failure {
    Property,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn emit(global: &Global, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    if global.json {
        let mut value = value();
        if let Value::Object(map) = &mut value {
            map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        }
        println!("{value}");
    } else {
        println!("{}", text());
    }
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
}

fn describe(report: &SeparationReport) -> String {
    let head = format!(
        "{} vs {} on {} strands: ",
        report.a, report.b, report.strands
    );
    match &report.outcome {
        Outcome::Identical => head + "IDENTICAL (same generator automorphisms)",
        Outcome::Inconclusive { conjugator, reason } => {
            format!("{head}INCONCLUSIVE\n  {reason}\n  conjugator: {conjugator}")
        }
        Outcome::Separated { certificate } => {
            let body = match certificate {
                Certificate::DeterminantExponent {
                    witness,
                    other,
                    witness_determinant,
                    other_generator_determinants,
                    modulus,
                    witness_exponent,
                } => format!(
                    "  det of s1 under {witness}: {witness_determinant}\n  \
                     generator determinants under {other}: {}\n  \
                     every determinant in the {other} image is +-t^({modulus}m); \
                     {modulus} does not divide {witness_exponent}",
                    other_generator_determinants.join(", ")
                ),
                Certificate::UnitDeterminant {
                    witness,
                    other,
                    witness_determinant,
                    other_generator_determinants,
                } => format!(
                    "  det of s1 under {witness}: {witness_determinant}\n  \
                     generator determinants under {other}: {}\n  \
                     every determinant in the {other} image is 1",
                    other_generator_determinants.join(", ")
                ),
                Certificate::Lattice {
                    witness,
                    other,
                    witness_relators,
                    witness_lattice,
                    other_lattice,
                    joined_lattice,
                    target,
                    product_identity,
                } => format!(
                    "  relators of s1 under {witness}: {}\n  \
                     lattice of s1 under {witness}: {witness_lattice:?}\n  \
                     lattice of the {other} image: {other_lattice:?}\n  \
                     joined lattice: {joined_lattice:?}\n  \
                     {target:?} lies in the join but in neither lattice\n  \
                     ({}) * ({}) = {}",
                    witness_relators.join(", "),
                    product_identity[0],
                    product_identity[1],
                    product_identity[2]
                ),
            };
            format!("{head}SEPARATED\n{body}")
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    let n = g.strands;
    let rep = g.rep.unwrap_or(RepKind::Artin);
    let braid = |text: &str| BraidWord::parse(text, n);
    match &cli.command {
        Command::Act { braid: b, word } => {
            let w = braid(b)?;
            let u = FreeWord::parse(word, n)?;
            let image = Representation::shared(rep, n)?.act(&w, &u)?;
            emit(
                g,
                || image.to_string(),
                || json!({ "rep": rep, "image": image.to_string() }),
            );
        }
        Command::Reduce { braid: b } => {
            let form = dehornoy::handle_reduce_with_budget(&braid(b)?, g.budget)?;
            emit(
                g,
                || form.word.to_string(),
                || {
                    json!({
                        "word": form.word.to_string(),
                        "main_index": form.main_index,
                        "sign": form.sign,
                        "steps": form.steps,
                        "verdict": form.verdict(),
                    })
                },
            );
        }
        Command::Solve { braid: b } => {
            let v = dehornoy::solve_word_problem_with_budget(&braid(b)?, g.budget)?;
            emit(g, || v.to_string(), || json!({ "verdict": v }));
        }
        Command::Compare { u, v } => {
            let o = dehornoy::compare_with_budget(&braid(u)?, &braid(v)?, g.budget)?;
            emit(
                g,
                || ordering_name(o).into(),
                || json!({ "order": ordering_name(o) }),
            );
        }
        Command::Magnus { braid: b, det } => {
            let m = magnus::magnus_matrix(rep, &braid(b)?)?;
            let d = m.determinant();
            if *det {
                emit(
                    g,
                    || d.to_string(),
                    || json!({ "rep": rep, "determinant": d.to_string() }),
                );
            } else {
                let rows: Vec<Vec<String>> = m
                    .rows()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect();
                emit(
                    g,
                    || m.to_string(),
                    || json!({ "rep": rep, "matrix": rows, "determinant": d.to_string() }),
                );
            }
        }
        Command::Relators => {
            let rels: Vec<String> = braidrep::braid::relators(n)?
                .iter()
                .map(ToString::to_string)
                .collect();
            emit(
                g,
                || rels.join("\n"),
                || json!({ "strands": n, "relators": rels }),
            );
        }
        Command::Distinguish { a, b } => {
            let report = distinguish::distinguish(*a, *b, n)?;
            emit(
                g,
                || describe(&report),
                || serde_json::to_value(&report).expect("report serializes"),
            );
        }
        Command::Verify {
            suite,
            max_length,
            samples,
        } => {
            let config = RunConfig {
                strands: n,
                kinds: g.rep.map_or_else(RepKind::standard_kinds, |k| vec![k]),
                max_length: *max_length,
                step_budget: g.budget,
                seed: g.seed,
                samples: *samples,
            };
            let report = verify::run_suite(*suite, &config)?;
            emit(
                g,
                || report.to_string(),
                || serde_json::to_value(&report).expect("report serializes"),
            );
            if !report.passed() {
                return Err(Failure::Property);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExhausted { .. } => ExitCode::from(3),
                Error::Verification(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

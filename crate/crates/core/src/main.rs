//! Command-line front end.
//!
//! Exit codes: 0 success (and, for `verify`, all checks passed), 1 internal
//! failure or failed verification, 2 invalid input, 3 resource limit.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use supergt::error::Error;
use supergt::oracle::DEFAULT_BUDGET;
use supergt::tableau::DEFAULT_CAP;
use supergt::{
    build_bundle, character, check_cyclic_generation, check_drinfeld_relation,
    check_highest_vector, check_initial_tableau_identity, check_odd_structure,
    check_super_commutators, dimension, drinfeld_polynomials, highest_weight_series, oracle_module,
    serialize, CovariantWeight, SuperDims,
};

#[derive(Parser)]
#[command(
    name = "supergt",
    about = "Covariant gl(m|n) representations in the supertableau basis, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WeightArgs {
    /// Number of even basis directions (m >= 1).
    #[arg(long)]
    m: usize,
    /// Number of odd basis directions (n >= 1).
    #[arg(long)]
    n: usize,
    /// Highest weight, e.g. "2|1,0".
    #[arg(long)]
    lambda: String,
    /// Cap on the number of basis vectors.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

impl WeightArgs {
    fn parse_weight(&self) -> Result<CovariantWeight, Error> {
        let dims = SuperDims::new(self.m, self.n)
            .ok_or_else(|| Error::NotCovariant("m and n must be at least 1".into()))?;
        CovariantWeight::parse(dims, &self.lambda)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the representation and write it as JSON.
    Build {
        #[command(flatten)]
        weight: WeightArgs,
        /// Output path for the bundle file.
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Build and run the relation, highest-vector, and cyclicity checks.
    Verify {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Print the weight-multiplicity character as JSON.
    Character {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Print Yangian data of the multiplicity space L(lambda)^+_mu.
    Drinfeld {
        #[command(flatten)]
        weight: WeightArgs,
        /// gl_m highest weight mu, e.g. "1" or "2,1".
        #[arg(long)]
        mu: String,
    },
    /// Compare dimension and character against the tensor-power oracle.
    OracleCompare {
        #[command(flatten)]
        weight: WeightArgs,
        /// Cap on the number of pure tensors the oracle may touch.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotCovariant(_)
        | Error::NotDominant(_)
        | Error::MultiplicityBoundViolated(_)
        | Error::InconsistentPattern(_) => 2,
        Error::ResourceLimit(_) | Error::BudgetExceeded(_) => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Build { weight, out } => {
            let lambda = weight.parse_weight()?;
            let bundle = build_bundle(&lambda, weight.cap)?;
            let text = serialize::save_bundle(&bundle);
            if let Err(e) = fs::write(&out, text) {
                eprintln!("error: cannot write {}: {e}", out.display());
                return Ok(false);
            }
            println!(
                "{}",
                json!({ "lambda": lambda.to_string(), "dim": bundle.dim(), "out": out })
            );
            Ok(true)
        }
        Command::Verify { weight } => {
            let lambda = weight.parse_weight()?;
            let bundle = build_bundle(&lambda, weight.cap)?;
            let relations = check_super_commutators(&bundle);
            let highest = check_highest_vector(&bundle);
            let cyclic = check_cyclic_generation(&bundle);
            let odd = check_odd_structure(&bundle);
            let ok = relations.passed() && highest.passed() && cyclic.passed() && odd;
            println!(
                "{}",
                json!({
                    "lambda": lambda.to_string(),
                    "dim": bundle.dim(),
                    "relations": {
                        "passed": relations.passed(),
                        "checked": relations.checked,
                        "sampled": relations.sampled,
                        "failures": relations.failures,
                    },
                    "highest_vector": {
                        "passed": highest.passed(),
                        "nonvanishing": highest.nonvanishing,
                        "wrong_eigenvalue": highest.wrong_eigenvalue,
                    },
                    "cyclic_generation": { "rank": cyclic.rank, "dim": cyclic.dim },
                    "odd_structure": odd,
                    "all_passed": ok,
                })
            );
            Ok(ok)
        }
        Command::Character { weight } => {
            let lambda = weight.parse_weight()?;
            let ch = character(&lambda, weight.cap)?;
            let m = lambda.dims().m();
            let mut map = serde_json::Map::new();
            for (w, &mult) in ch.iter() {
                map.insert(w.render(m), json!(mult));
            }
            println!("{}", serde_json::Value::Object(map));
            Ok(true)
        }
        Command::Drinfeld { weight, mu } => {
            let lambda = weight.parse_weight()?;
            let mu: Vec<i64> = if mu.trim().is_empty() {
                vec![]
            } else {
                mu.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::NotCovariant(format!("bad mu entry {t:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let polys = drinfeld_polynomials(&lambda, &mu)?;
            let relation = check_drinfeld_relation(&lambda, &mu)?;
            let lemma: Vec<bool> = (1..=lambda.dims().n())
                .map(|p| check_initial_tableau_identity(&lambda, &mu, p))
                .collect::<Result<_, _>>()?;
            let series: Vec<serde_json::Value> = (1..=lambda.dims().n())
                .map(|p| {
                    let f = highest_weight_series(&lambda, &mu, p)?;
                    Ok(json!({
                        "p": p,
                        "num": f.num().to_string(),
                        "den": f.den().to_string(),
                    }))
                })
                .collect::<Result<_, Error>>()?;
            println!(
                "{}",
                json!({
                    "lambda": lambda.to_string(),
                    "mu": mu,
                    "P": polys.all_roots(),
                    "P_polys": polys.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "highest_weight_series": series,
                    "drinfeld_relation_ok": relation.all_passed(),
                    "lemma_identity_ok": lemma.iter().all(|&b| b),
                })
            );
            Ok(true)
        }
        Command::OracleCompare { weight, budget } => {
            let lambda = weight.parse_weight()?;
            let dim_basis = dimension(&lambda, weight.cap)?;
            let ch_basis = character(&lambda, weight.cap)?;
            let out = oracle_module(&lambda, budget)?;
            let equal = ch_basis == out.character;
            println!(
                "{}",
                json!({
                    "lambda": lambda.to_string(),
                    "dim_basis": dim_basis,
                    "dim_oracle": out.dimension,
                    "characters_equal": equal,
                    "kernel_dim": out.kernel_dim,
                    "kernel_spans_agree": out.kernel_spans_agree,
                })
            );
            Ok(dim_basis == out.dimension && equal)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

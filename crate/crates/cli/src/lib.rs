//! The `spindle` command line: compute invariants, run identity suites.

pub mod cache;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use spindle_core::charmult::{decompose_tensor_square, irreducible_character};
use spindle_core::dynkin::dynkin_product;
use spindle_core::endalg_a::{end_alg_report, RepKind};
use spindle_core::qanalogues::{
    f_lambda, jump_polynomial, jump_tensor, lusztig_q_multiplicity, poincare_cg, poincare_ct,
    t_poly,
};
use spindle_core::truncsym::truncsym_report;
use spindle_core::verify::{run_suite, Suite, VerifyOptions};
use spindle_core::{Budget, Error, RootSystem, TypeLetter, Weight};

use cache::{Cache, CacheKey};
use output::{factored_form, render, Format, RootSystemInfo, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spindle",
    version,
    about = "Dynkin polynomials, q-analogues and endomorphism algebras of simple Lie algebra modules"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Directory for cached results.
    #[arg(long, env = "SPINDLE_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest Weyl group order that may be enumerated.
    #[arg(long, global = true, default_value_t = Budget::default().max_weyl_order)]
    max_weyl_order: u128,
    /// Largest module dimension for explicit characters.
    #[arg(long, global = true, default_value_t = Budget::default().max_dimension)]
    max_dimension: u128,
    /// Largest matrix size for explicit matrix constructions.
    #[arg(long, global = true, default_value_t = Budget::default().max_matrix_dim)]
    max_matrix_dim: usize,
    /// Largest number of box partitions enumerated.
    #[arg(long, global = true, default_value_t = Budget::default().max_partitions)]
    max_partitions: u128,
    /// Allow full Weyl group sums of any size (E8).
    #[arg(long, global = true)]
    full_weyl: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_weyl_order: self.max_weyl_order,
            max_dimension: self.max_dimension,
            max_matrix_dim: self.max_matrix_dim,
            max_partitions: self.max_partitions,
            full_weyl: self.full_weyl,
        }
    }
}

#[derive(Debug, Args)]
struct SystemArgs {
    /// Type letter A to G.
    #[arg(long = "type")]
    type_letter: TypeLetter,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Args)]
struct WeightArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Fundamental-weight coordinates in Bourbaki numbering, e.g. 1,0,2.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix, degrees and positive roots.
    RootSystem(SystemArgs),
    /// Weight multiplicities of V_λ.
    Character(WeightArgs),
    /// Dynkin polynomial D_λ(q).
    Dynkin(WeightArgs),
    /// Jump polynomial of V_λ (λ in the root lattice), or of V_λ ⊗ V_μ* with --mu.
    Jump {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Compute V_λ^A from explicit matrices instead of the Weyl sum.
        #[arg(long, conflicts_with = "mu")]
        explicit: bool,
    },
    /// Lusztig q-analogue m_λ^μ(q).
    Lusztig {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// t_λ(q), the Poincaré polynomial of the stabilizer of λ.
    TPoly(WeightArgs),
    /// F_λ(q), the jump polynomial of End V_λ.
    FLambda(WeightArgs),
    /// Poincaré series of C_λ(g).
    PoincareCg(WeightArgs),
    /// Poincaré series of C_λ(t).
    PoincareCt(WeightArgs),
    /// Decomposition of V_λ ⊗ V_λ*.
    TensorSquare(WeightArgs),
    /// Commutant checks for S^m or ∧^k of C^{n+1}.
    EndAlgA {
        #[arg(long)]
        n: usize,
        /// sym:M or ext:K
        #[arg(long)]
        kind: RepKind,
    },
    /// Truncated symmetric polynomials against [m+n over m] and D_{mϖ_1}.
    Truncsym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run identity suites.
    Verify {
        /// Suite names, or `all`.
        #[arg(default_value = "all")]
        suites: Vec<String>,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        height_bound: Option<usize>,
    },
}

struct Ctx {
    budget: Budget,
    cache: Option<Cache>,
}

impl Ctx {
    fn cached<T>(
        &self,
        op: &str,
        w: &WeightArgs,
        lambda: &Weight,
        extra: &[i64],
        f: impl FnOnce() -> spindle_core::Result<T>,
    ) -> spindle_core::Result<T>
    where
        T: serde::Serialize + serde::de::DeserializeOwned,
    {
        match &self.cache {
            None => f(),
            Some(c) => {
                let key = CacheKey {
                    operation: op.into(),
                    type_letter: w.system.type_letter.to_string(),
                    rank: w.system.rank,
                    weight: lambda.coords().to_vec(),
                    extra: extra.to_vec(),
                };
                c.get_or_compute(&key, f)
            }
        }
    }
}

fn system(s: &SystemArgs) -> spindle_core::Result<RootSystem> {
    RootSystem::new(s.type_letter, s.rank)
}

fn parse_suites(names: &[String]) -> spindle_core::Result<Vec<Suite>> {
    if names.iter().any(|n| n == "all") {
        return Ok(Suite::ALL.to_vec());
    }
    names.iter().map(|n| n.parse()).collect()
}

fn compute(cmd: &Command, ctx: &Ctx) -> spindle_core::Result<Value> {
    let budget = &ctx.budget;
    Ok(match cmd {
        Command::RootSystem(s) => Value::RootSystem(RootSystemInfo::of(&system(s)?)),
        Command::Character(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            Value::Character(ctx.cached("character", w, &l, &[], || {
                irreducible_character(&rs, &l, budget)
            })?)
        }
        Command::Dynkin(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            let p = ctx.cached("dynkin", w, &l, &[], || dynkin_product(&rs, &l))?;
            let f = factored_form(&p, Some((rs.type_letter(), rs.rank(), &l)));
            Value::Poly(p, f)
        }
        Command::Jump { w, mu, explicit } => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            let p = match (mu, explicit) {
                (Some(mu), _) => {
                    let mu = Weight::parse(mu)?;
                    ctx.cached("jump-tensor", w, &l, mu.coords(), || jump_tensor(&rs, &l, &mu, budget))?
                }
                (None, true) => ctx.cached("jump-explicit", w, &l, &[], || jump_polynomial(&rs, &l, budget))?,
                (None, false) => ctx.cached("jump", w, &l, &[], || {
                    if !rs.in_root_lattice(&l) {
                        return Err(Error::Domain(format!(
                            "{l} is not in the root lattice; use --mu to take the jump polynomial of V_λ ⊗ V_μ*"
                        )));
                    }
                    lusztig_q_multiplicity(&rs, &l, &Weight::zero(rs.rank()), budget)
                })?,
            };
            let f = factored_form(&p, None);
            Value::Poly(p, f)
        }
        Command::Lusztig { w, mu } => {
            let (rs, l, mu) = (
                system(&w.system)?,
                Weight::parse(&w.weight)?,
                Weight::parse(mu)?,
            );
            let p = ctx.cached("lusztig", w, &l, mu.coords(), || {
                lusztig_q_multiplicity(&rs, &l, &mu, budget)
            })?;
            let f = factored_form(&p, None);
            Value::Poly(p, f)
        }
        Command::TPoly(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            let p = ctx.cached("t-poly", w, &l, &[], || t_poly(&rs, &l))?;
            let f = factored_form(&p, None);
            Value::Poly(p, f)
        }
        Command::FLambda(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            let p = ctx.cached("f-lambda", w, &l, &[], || f_lambda(&rs, &l, budget))?;
            let f = factored_form(&p, None);
            Value::Poly(p, f)
        }
        Command::PoincareCg(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            Value::Series(ctx.cached("poincare-cg", w, &l, &[], || poincare_cg(&rs, &l, budget))?)
        }
        Command::PoincareCt(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            Value::Series(ctx.cached("poincare-ct", w, &l, &[], || poincare_ct(&rs, &l))?)
        }
        Command::TensorSquare(w) => {
            let (rs, l) = (system(&w.system)?, Weight::parse(&w.weight)?);
            Value::Tensor(ctx.cached("tensor-square", w, &l, &[], || {
                decompose_tensor_square(&rs, &l, budget)
            })?)
        }
        Command::EndAlgA { n, kind } => Value::EndAlg(end_alg_report(*n, *kind, budget)?),
        Command::Truncsym { n, m } => {
            if *n == 0 || *m == 0 {
                return Err(Error::Usage("n and m must be at least 1".into()));
            }
            Value::TruncSym(truncsym_report(*n, *m, budget)?)
        }
        Command::Verify {
            suites,
            max_rank,
            height_bound,
        } => {
            let opts = VerifyOptions {
                max_rank: *max_rank,
                height_bound: *height_bound,
                budget: *budget,
                ..VerifyOptions::default()
            };
            let reports = parse_suites(suites)?
                .into_iter()
                .map(|s| {
                    let r = run_suite(s, &opts);
                    log::info!("{s}: {} checks in {:.2?}", r.checks.len(), r.elapsed);
                    r
                })
                .collect();
            Value::Verify(reports)
        }
    })
}

fn budget_hint(what: &str) -> &'static str {
    let w = what.to_ascii_lowercase();
    if w.contains("weyl") {
        "--max-weyl-order or --full-weyl"
    } else if w.contains("matrix") {
        "--max-matrix-dim"
    } else if w.contains("partition") {
        "--max-partitions"
    } else {
        "--max-dimension"
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Domain(_) => EXIT_USAGE,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Arithmetic(_) | Error::Internal(_) => EXIT_VERIFY_FAILED,
    }
}

/// Runs the CLI on `args`, writing to the given streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let ctx = Ctx {
        budget: cli.budget.budget(),
        cache: cli.cache_dir.clone().map(Cache::new),
    };
    match compute(&cli.command, &ctx) {
        Ok(v) => {
            let _ = out.write_all(render(&v, cli.format).as_bytes());
            match v {
                Value::Verify(reports) if !reports.iter().all(|r| r.passed()) => EXIT_VERIFY_FAILED,
                _ => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Resource { what, .. } = &e {
                let _ = writeln!(err, "raise the budget with {}", budget_hint(what));
            }
            exit_code(&e)
        }
    }
}

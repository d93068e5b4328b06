use std::fmt;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use weightlattice::closed_forms::{golay24_generator, golay24_table_rho, hamming_dual_refined, mds_refined};
use weightlattice::code::{format_code, parse_code, Code};
use weightlattice::enumerators::{
    macwilliams_transform, min_distance_from_lattice, omega_from_lattice, specialize_to_field_size, EnumeratorResult,
};
use weightlattice::lattice::{FlatLattice, LatticeOptions, DEFAULT_FLAT_BUDGET};
use weightlattice::oracle::{verify_enumerators, OracleOptions, DEFAULT_BUDGET};
use weightlattice::poly::{QPoly, WPoly};
use weightlattice::specialize::{compare_specializations, default_primes};
use weightlattice::Error;

/// Exact weight enumerators of linear codes from the lattice of saturated
/// coordinate sets.
#[derive(Parser, Debug)]
#[command(name = "weightlattice", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Show q-coefficients with small linear factors pulled out.
    #[arg(long, global = true)]
    factor_display: bool,
    /// Maximum number of flats to enumerate.
    #[arg(long, env = "WEIGHTLATTICE_FLAT_BUDGET", default_value_t = DEFAULT_FLAT_BUDGET, global = true)]
    flat_budget: u64,
    /// Accept generator matrices with zero columns.
    #[arg(long, global = true)]
    allow_zero_columns: bool,
    /// Run on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Comprehensive and refined weight enumerators of a code.
    Enumerate {
        /// Generator-matrix file, or - for standard input.
        input: String,
        /// Also print the weight distribution at this field size.
        #[arg(long)]
        at_q: Option<BigInt>,
    },
    /// Comprehensive enumerator of the dual code.
    Macwilliams {
        /// A code file, or with --k a polynomial in text or JSON form.
        input: String,
        /// Dimension of the code whose enumerator is given.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Minimum Hamming distance.
    Mindist { input: String },
    /// Characteristic polynomial of the associated arrangement.
    Charpoly { input: String },
    /// Every flat with its dimension and counting polynomial.
    Lattice { input: String },
    /// Compare a code over the rationals with its reductions modulo primes.
    Specialize {
        input: String,
        /// Comma-separated primes (default: all primes up to 50).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
    /// Check the enumerators against exhaustive enumeration.
    Verify {
        input: String,
        /// Comma-separated extension degrees.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        ext: Vec<u32>,
        /// Maximum number of codewords per field.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Closed-form refined enumerators.
    Formula {
        #[command(subcommand)]
        family: Family,
    },
    /// The extended binary Golay code.
    Golay {
        /// Print the generator matrix instead of the tabulated enumerator.
        #[arg(long)]
        generator: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Dual of the Hamming code with m check symbols over a field of p elements.
    Hamming {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
    },
    /// Any [n, k] MDS code.
    Mds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
}

/// Failure classes, one exit code each.
#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
    Math(String),
    Mismatch(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Math(_) => 4,
            Failure::Mismatch(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Failure::Input(m) | Failure::Budget(m) | Failure::Math(m) | Failure::Mismatch(m)) = self;
        f.write_str(m)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(msg),
            Error::NotDivisible(_) | Error::DimensionZeroDual | Error::RankDropped { .. } => Failure::Math(msg),
            _ => Failure::Input(msg),
        }
    }
}

struct Ctx {
    format: Format,
    factored: bool,
    allow_zero_columns: bool,
    lattice: LatticeOptions,
}

impl Ctx {
    fn poly(&self, w: &WPoly) -> String {
        if self.factored {
            w.format_factored()
        } else {
            w.format()
        }
    }

    fn qpoly(&self, p: &QPoly) -> String {
        if self.factored {
            p.format_factored()
        } else {
            p.to_string()
        }
    }

    fn read(&self, input: &str) -> Result<String, Failure> {
        if input == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("standard input: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("{input}: {e}")))
        }
    }

    fn code(&self, input: &str) -> Result<Code, Failure> {
        let text = self.read(input)?;
        parse_code(&text, self.allow_zero_columns).map_err(|e| Failure::Input(format!("{input}: {e}")))
    }

    fn lattice(&self, code: &Code) -> Result<FlatLattice, Failure> {
        Ok(FlatLattice::with_options(code, self.lattice)?)
    }

    fn emit(&self, text: String, value: Value) {
        let out = match self.format {
            Format::Text => text,
            Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
        };
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
}

fn distribution_text(a: &[BigInt]) -> String {
    a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    let ctx = Ctx {
        format: g.format,
        factored: g.factor_display,
        allow_zero_columns: g.allow_zero_columns,
        lattice: LatticeOptions { flat_budget: g.flat_budget, parallel: !g.sequential },
    };
    match cli.command {
        Command::Enumerate { input, at_q } => {
            let code = ctx.code(&input)?;
            let r = EnumeratorResult::compute(&code, ctx.lattice)?;
            let mut text = format!(
                "field: {}\nn: {}\nk: {}\nflats: {}\nmin_distance: {}\nomega: {}\nrho: {}",
                r.field,
                r.n,
                r.k,
                r.flat_count,
                r.min_distance,
                ctx.poly(&r.omega),
                ctx.poly(&r.rho)
            );
            let mut value = r.to_json();
            if let Some(q0) = at_q {
                let a = specialize_to_field_size(&r.omega, &q0)?;
                text.push_str(&format!("\nweights at q={q0}: {}", distribution_text(&a)));
                value["weights_at_q"] = json!({
                    "q": weightlattice::poly::json::bigint_to_json(&q0),
                    "weights": a.iter().map(weightlattice::poly::json::bigint_to_json).collect::<Vec<_>>(),
                });
            }
            ctx.emit(text, value);
        }
        Command::Macwilliams { input, k } => {
            let (omega, k) = match k {
                Some(k) => {
                    let text = ctx.read(&input)?;
                    (parse_poly(&text)?, k)
                }
                None => {
                    let code = ctx.code(&input)?;
                    (omega_from_lattice(&ctx.lattice(&code)?), code.dim() as u32)
                }
            };
            let dual = macwilliams_transform(&omega, k)?;
            ctx.emit(ctx.poly(&dual), dual.to_json());
        }
        Command::Mindist { input } => {
            let code = ctx.code(&input)?;
            let d = min_distance_from_lattice(&ctx.lattice(&code)?);
            ctx.emit(d.to_string(), json!({ "min_distance": d }));
        }
        Command::Charpoly { input } => {
            let code = ctx.code(&input)?;
            let lat = ctx.lattice(&code)?;
            let p = lat.zeta_at(0);
            ctx.emit(ctx.qpoly(p), json!({ "characteristic_polynomial": p.to_json() }));
        }
        Command::Lattice { input } => {
            let code = ctx.code(&input)?;
            let lat = ctx.lattice(&code)?;
            let text = (0..lat.len())
                .map(|i| format!("{:?} dim={} zeta={}", lat.flats()[i], lat.dim(i), ctx.qpoly(lat.zeta_at(i))))
                .collect::<Vec<_>>()
                .join("\n");
            ctx.emit(text, lat.to_json());
        }
        Command::Specialize { input, primes } => {
            let code = ctx.code(&input)?;
            let primes = primes.unwrap_or_else(default_primes);
            let r = compare_specializations(&code, &primes, ctx.lattice)?;
            let mut lines = vec![format!("generic rho: {}", ctx.poly(&r.generic_rho))];
            for p in &r.per_prime {
                if p.matches_generic {
                    lines.push(format!("p={}: matches", p.prime));
                } else {
                    lines.push(format!("p={}: differs, rho: {}", p.prime, ctx.poly(&p.rho)));
                }
            }
            let ex: Vec<String> = r.exceptional_primes.iter().map(|p| p.to_string()).collect();
            lines.push(format!("exceptional primes: {}", if ex.is_empty() { "none".into() } else { ex.join(",") }));
            ctx.emit(lines.join("\n"), r.to_json());
        }
        Command::Verify { input, ext, budget } => {
            let code = ctx.code(&input)?;
            let opts = OracleOptions { budget, parallel: ctx.lattice.parallel };
            let r = verify_enumerators(&code, &ext, ctx.lattice, opts)?;
            let mut lines = Vec::new();
            for e in &r.extensions {
                let flat_misses = e.flats.iter().filter(|c| BigInt::from(c.observed) != c.predicted).count();
                lines.push(format!(
                    "degree {} (q={}): {} | weights {} | flats checked {}, mismatched {} | min weight {}",
                    e.degree,
                    e.field_size,
                    if e.pass { "ok" } else { "MISMATCH" },
                    e.observed_weights.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
                    e.flats.len(),
                    flat_misses + e.stray_zero_sets.len(),
                    e.min_weight
                ));
            }
            lines.push(format!("predicted minimum distance: {}", r.predicted_min_distance));
            lines.push(if r.pass { "pass".into() } else { "FAIL".into() });
            ctx.emit(lines.join("\n"), r.to_json());
            if !r.pass {
                return Err(Failure::Mismatch("brute force disagrees with the enumerators".into()));
            }
        }
        Command::Formula { family } => {
            let w = match family {
                Family::Hamming { p, m } => hamming_dual_refined(p, m)?,
                Family::Mds { n, k } => mds_refined(n, k)?,
            };
            ctx.emit(ctx.poly(&w), w.to_json());
        }
        Command::Golay { generator } => {
            if generator {
                let code = golay24_generator();
                let rows: Vec<Vec<String>> = (0..code.dim())
                    .map(|r| code.generator().row(r).iter().map(|e| code.field().format_elem(e)).collect())
                    .collect();
                ctx.emit(format_code(&code).trim_end().to_string(), json!({ "field": "gf 2", "generator": rows }));
            } else {
                let rho = golay24_table_rho();
                ctx.emit(ctx.poly(&rho), rho.to_json());
            }
        }
    }
    Ok(())
}

/// A polynomial in JSON form, in text form, or the `omega` field of an
/// `enumerate --format json` report.
fn parse_poly(text: &str) -> Result<WPoly, Failure> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| Failure::Input(format!("polynomial JSON: {e}")))?;
        let poly = v.get("omega").unwrap_or(&v);
        Ok(WPoly::from_json(poly)?)
    } else {
        WPoly::parse(trimmed).map_err(|e| Failure::Input(e.to_string()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

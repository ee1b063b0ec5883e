//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the rendered output together with the exit code:
//! 0 on success, 1 on usage errors, 2 on precondition violations and 3 when
//! a checked identity fails.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::character::{brauer_expand, brauer_sum, orbit_sum, schur_character, weyl_character, zhat_character};
use crate::error::Error;
use crate::injective::{determinant_shift, hook_injective_end, pm_hook_injective, steinberg_tilting, InjectiveDescriptor};
use crate::json;
use crate::oracle::{run_suite, SuiteConfig, DEFAULT_SEED};
use crate::planner::{
    construct_classical, construct_quantum, max_h_classical, max_h_quantum, min_r_classical, min_r_quantum,
    ClassicalParams, ConstructionResult, QuantumParams,
};
use crate::weight::{dominance_leq, DominantWeight, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_IDENTITY_FAIL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "schur-repdim", version, about = "Weight and character combinatorics for Schur algebras")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized oracle checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Leave characters out of descriptor and construction output.
    #[arg(long, global = true)]
    no_character: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RegimeArg {
    Classical,
    Quantum,
}

#[derive(Args, Debug)]
struct PlannerArgs {
    #[arg(value_enum)]
    regime: RegimeArg,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'p')]
    p: u64,
    #[arg(short = 'm')]
    m: u32,
    /// Order of the root of unity (quantum regime only).
    #[arg(short = 'l')]
    l: Option<u64>,
    #[arg(short = 'r')]
    r: BigInt,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weyl character χ(λ).
    Char {
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Orbit of a weight under the symmetric group.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Compare two weights in the dominance order.
    Dominance {
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(allow_hyphen_values = true)]
        b: Weight,
    },
    /// p-adic decomposition into column p-regular digits.
    Padic {
        #[arg(short = 'p')]
        p: u64,
        weight: DominantWeight,
    },
    /// Check χ((p−1)δ)·s(λ) = Σ_{μ∈Wλ} χ((p−1)δ+μ).
    Brauer {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p')]
        p: u64,
        lambda: Weight,
    },
    /// Character e^{λ−(p−1)δ}·χ((p−1)δ).
    Zhat {
        #[arg(short = 'p')]
        p: u64,
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Tilting module M((p−1)δ+λ) = I((p−1)δ+w₀λ).
    Tilting {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p')]
        p: u64,
        lambda: DominantWeight,
    },
    /// Injective I((pᵐ−1)δ + aεₙ) and its endomorphism algebra.
    Hook {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm', default_value_t = 1)]
        m: u32,
        #[arg(short = 'a')]
        a: BigInt,
        /// Tensor with this many copies of the determinant module.
        #[arg(long, default_value_t = 0)]
        shift: u64,
    },
    /// Build μ ∈ Λ⁺(n,r) and the representation-dimension bound.
    #[command(disable_help_flag = true)]
    Construct {
        #[command(flatten)]
        args: PlannerArgs,
        #[arg(short = 'h')]
        h: u32,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Largest h available at degree r, and the resulting bound.
    Bound {
        #[command(flatten)]
        args: PlannerArgs,
    },
    /// Run the oracle suite.
    Verify {
        #[arg(long = "max-n", default_value_t = 3)]
        max_n: usize,
        #[arg(long = "max-deg", default_value_t = 10)]
        max_deg: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
    },
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(code: i32, message: String) -> Self {
        Outcome { code, stdout: String::new(), stderr: message }
    }
}

fn precondition(e: Error) -> Outcome {
    let code = match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    };
    Outcome::error(code, format!("error: {e}\n"))
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome::error(EXIT_USAGE, rendered),
            };
        }
    };
    dispatch(&cli).unwrap_or_else(precondition)
}

/// Entry point used by the binary: prints the outcome and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let as_json = cli.json;
    let with_char = !cli.no_character;
    match &cli.command {
        Command::Char { n, weight } => {
            if let Some(n) = n {
                if *n != weight.rank() {
                    return Err(Error::RankMismatch { left: *n, right: weight.rank() });
                }
            }
            let chi = weyl_character(weight);
            if as_json {
                return Ok(Outcome::ok(render_json(&json::character_to_json(&chi))));
            }
            let mut s = format!("χ{weight}: {} terms, dimension {}\n", chi.len(), chi.dimension());
            for (w, c) in chi.terms() {
                writeln!(s, "  {w}  {c}").unwrap();
            }
            Ok(Outcome::ok(s))
        }
        Command::Orbit { weight } => {
            let orbit = weight.weyl_orbit();
            if as_json {
                let v = json!({
                    "weight": json::weight_to_json(weight),
                    "size": orbit.len(),
                    "orbit": orbit.iter().map(json::weight_to_json).collect::<Vec<_>>(),
                });
                return Ok(Outcome::ok(render_json(&v)));
            }
            let mut s = format!("W{weight}: {} elements\n", orbit.len());
            for w in &orbit {
                writeln!(s, "  {w}").unwrap();
            }
            Ok(Outcome::ok(s))
        }
        Command::Dominance { a, b } => {
            let leq = dominance_leq(a, b)?;
            let geq = dominance_leq(b, a)?;
            if as_json {
                let v = json!({ "a": json::weight_to_json(a), "b": json::weight_to_json(b), "leq": leq, "geq": geq });
                return Ok(Outcome::ok(render_json(&v)));
            }
            let rel = match (leq, geq) {
                (true, true) => "=",
                (true, false) => "<",
                (false, true) => ">",
                (false, false) => "incomparable with",
            };
            Ok(Outcome::ok(format!("{a} {rel} {b}\n")))
        }
        Command::Padic { p, weight } => {
            let base = BigInt::from(*p);
            let dec = weight.p_adic_decompose(&base)?;
            let breadth = weight.p_adic_breadth(&base)?;
            if as_json {
                let v = json!({
                    "weight": json::weight_to_json(weight),
                    "base": p,
                    "digits": dec.digits.iter().map(|d| json::weight_to_json(d)).collect::<Vec<_>>(),
                    "p_adic_breadth": breadth.to_string().parse::<serde_json::Number>().unwrap(),
                });
                return Ok(Outcome::ok(render_json(&v)));
            }
            let terms: Vec<String> = dec
                .digits
                .iter()
                .enumerate()
                .map(|(j, d)| if j == 0 { d.to_string() } else { format!("{p}^{j}·{d}") })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            Ok(Outcome::ok(format!("{weight} = {rhs}\np-adic breadth: {breadth}\n")))
        }
        Command::Brauer { n, p, lambda } => cmd_brauer(*n, *p, lambda, as_json),
        Command::Zhat { p, weight } => {
            let z = zhat_character(weight, &BigInt::from(*p))?;
            if as_json {
                return Ok(Outcome::ok(render_json(&json::character_to_json(&z))));
            }
            let mut s = format!("Ẑ{weight} at p={p}: {} terms, dimension {}\n", z.len(), z.dimension());
            for (w, c) in z.terms() {
                writeln!(s, "  {w}  {c}").unwrap();
            }
            Ok(Outcome::ok(s))
        }
        Command::Tilting { n, p, lambda } => {
            let d = steinberg_tilting(*n, *p, lambda)?;
            Ok(render_descriptor(&d, as_json, with_char))
        }
        Command::Hook { n, p, m, a, shift } => {
            if *m == 1 {
                // the single-digit case is the truncated algebra k[x]/(xⁿ) when a ≥ 1
                if let Ok(a_small) = u64::try_from(a) {
                    if a_small >= 1 {
                        hook_injective_end(*n, *p, a_small)?;
                    }
                }
            }
            let d = determinant_shift(&pm_hook_injective(*n, *p, *m, a, with_char)?, *shift);
            Ok(render_descriptor(&d, as_json, with_char))
        }
        Command::Construct { args, h, .. } => {
            let res = match args.regime {
                RegimeArg::Classical => {
                    construct_classical(&ClassicalParams::new(args.n, args.p, args.m, *h, args.r.clone()), with_char)?
                }
                RegimeArg::Quantum => {
                    let l = args.l.ok_or_else(|| Error::Precondition("quantum regime needs -l".into()))?;
                    construct_quantum(&QuantumParams::new(args.n, args.p, args.m, l, *h, args.r.clone()), with_char)?
                }
            };
            Ok(render_construction(&res, as_json, with_char))
        }
        Command::Bound { args } => cmd_bound(args, as_json),
        Command::Verify { max_n, max_deg, primes } => {
            let reports = run_suite(&SuiteConfig::new(*max_n, *max_deg, primes).with_seed(cli.seed));
            let all = reports.iter().all(|r| r.passed());
            let code = if all { EXIT_OK } else { EXIT_IDENTITY_FAIL };
            if as_json {
                let v = Value::Array(reports.iter().map(json::report_to_json).collect());
                return Ok(Outcome::with_code(code, render_json(&v)));
            }
            let mut s = String::new();
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(s, "{tag} {} ({} checked)", r.identity, r.checked).unwrap();
                if let Some(f) = r.failures.first() {
                    writeln!(s, "     first failure: {}: expected {}, got {}", f.inputs, f.expected, f.got).unwrap();
                }
            }
            writeln!(s, "{}", if all { "all identities PASS" } else { "some identities FAIL" }).unwrap();
            Ok(Outcome::with_code(code, s))
        }
    }
}

fn cmd_brauer(n: usize, p: u64, lambda: &Weight, as_json: bool) -> Result<Outcome, Error> {
    if lambda.rank() != n {
        return Err(Error::RankMismatch { left: n, right: lambda.rank() });
    }
    let bp = BigInt::from(p);
    let in_regime = DominantWeight::try_from(lambda.clone())
        .ok()
        .filter(|l| l.is_polynomial() && l.breadth() < bp && l.is_column_regular(&bp).unwrap_or(false));
    let Some(lam) = in_regime else {
        return Err(Error::Precondition(format!(
            "regime violation: {lambda} must be dominant, column {p}-regular, with breadth below {p}"
        )));
    };
    let st = DominantWeight::try_from(Weight::delta(n).scale(&(&bp - 1)))?;
    let lhs = &schur_character(&st) * &orbit_sum(&lam);
    let terms = brauer_expand(&st, &lam)?;
    let rhs = brauer_sum(n, &terms);
    let all_plus = terms.iter().all(|(s, _)| *s == 1);
    let pass = lhs == rhs && all_plus && BigInt::from(terms.len()) == lam.orbit_size();
    let code = if pass { EXIT_OK } else { EXIT_IDENTITY_FAIL };
    if as_json {
        let v = json!({
            "n": n,
            "p": p,
            "lambda": json::weight_to_json(&lam),
            "lhs_terms": lhs.len(),
            "rhs_terms": rhs.len(),
            "summands": terms.iter().map(|(s, r)| json!({"sign": s, "weight": json::weight_to_json(r)})).collect::<Vec<_>>(),
            "all_signs_positive": all_plus,
            "pass": pass,
        });
        return Ok(Outcome::with_code(code, render_json(&v)));
    }
    let mut s = format!(
        "χ{st}·s{lam}: {} terms\nΣ χ(...): {} summands, {} terms\n",
        lhs.len(),
        terms.len(),
        rhs.len()
    );
    for (sign, rep) in &terms {
        writeln!(s, "  {}χ{rep}", if *sign > 0 { "+" } else { "-" }).unwrap();
    }
    writeln!(s, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    Ok(Outcome::with_code(code, s))
}

fn cmd_bound(args: &PlannerArgs, as_json: bool) -> Result<Outcome, Error> {
    let (h, next) = match args.regime {
        RegimeArg::Classical => {
            let h = max_h_classical(args.n, args.p, args.m, &args.r)?;
            (h, min_r_classical(args.n, args.p, args.m, h + 1)?)
        }
        RegimeArg::Quantum => {
            let l = args.l.ok_or_else(|| Error::Precondition("quantum regime needs -l".into()))?;
            let h = max_h_quantum(args.n, args.p, args.m, l, &args.r)?;
            (h, min_r_quantum(args.n, args.p, args.m, l, h + 1)?)
        }
    };
    let offset = match args.regime {
        RegimeArg::Classical => 1,
        RegimeArg::Quantum => 2,
    };
    let bound = (h > 0).then_some(h + offset);
    if as_json {
        let v = json!({
            "regime": format!("{:?}", args.regime).to_lowercase(),
            "n": args.n,
            "p": args.p,
            "m": args.m,
            "l": args.l,
            "r": args.r.to_string().parse::<serde_json::Number>().unwrap(),
            "h": h,
            "repdim_lower_bound": bound,
            "next_threshold": next.to_string().parse::<serde_json::Number>().unwrap(),
        });
        return Ok(Outcome::ok(render_json(&v)));
    }
    let s = match bound {
        Some(b) => format!("h = {h}, representation dimension ≥ {b} (next step at r = {next})\n"),
        None => format!("h = 0: no nontrivial bound (needs r ≥ {next})\n"),
    };
    Ok(Outcome::ok(s))
}

fn render_descriptor(d: &InjectiveDescriptor, as_json: bool, with_char: bool) -> Outcome {
    if as_json {
        return Outcome::ok(render_json(&json::descriptor_to_json(d, with_char)));
    }
    let mut s = format!("socle weight: {}\n", d.socle_weight());
    writeln!(s, "End algebra: {} (dimension {})", d.end_algebra(), d.end_algebra().dimension()).unwrap();
    match d.index() {
        Some(ix) => writeln!(s, "admissible index: {}{}", if ix.exact { "" } else { "≥ " }, ix.value).unwrap(),
        None => writeln!(s, "admissible index: not determined").unwrap(),
    }
    if let (true, Some(ch)) = (with_char, d.character()) {
        writeln!(s, "character: {} terms, dimension {}", ch.len(), ch.dimension()).unwrap();
    }
    Outcome::ok(s)
}

fn render_construction(res: &ConstructionResult, as_json: bool, with_char: bool) -> Outcome {
    if as_json {
        return Outcome::ok(render_json(&json::construction_to_json(res, with_char)));
    }
    let mut s = format!("regime: {}  n={} p={} m={} P={}", res.regime, res.n, res.p, res.m, res.modulus);
    if let Some(l) = res.l {
        write!(s, " l={l}").unwrap();
    }
    writeln!(s, "  h={} r={}", res.h, res.r).unwrap();
    if let Some(lz) = &res.level_zero {
        writeln!(s, "u_-1 = {}, λ_-1 = {}, s = {}", lz.digit, lz.factor, lz.s).unwrap();
    }
    let digits: Vec<String> = res.digits.iter().map(ToString::to_string).collect();
    writeln!(s, "digits u_0..u_h: {}", digits.join(", ")).unwrap();
    for (i, lam) in res.lambda_factors.iter().enumerate() {
        writeln!(s, "λ^{i} = {lam}").unwrap();
    }
    writeln!(s, "γ = {}", res.gamma).unwrap();
    writeln!(s, "μ = {}  (|μ| = {})", res.mu, res.mu.degree()).unwrap();
    let alg = res.descriptor.end_algebra();
    writeln!(s, "End(I(μ)) = {} (dimension {})", alg, alg.dimension()).unwrap();
    if let (true, Some(ch)) = (with_char, res.descriptor.character()) {
        writeln!(s, "ch I(μ): {} terms, dimension {}", ch.len(), ch.dimension()).unwrap();
    }
    writeln!(s, "representation dimension ≥ {}", res.repdim_lower_bound).unwrap();
    Outcome::ok(s)
}

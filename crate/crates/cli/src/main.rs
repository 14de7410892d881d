//! `dgva`: axiom checks, brackets, envelopes, characters, cohomology,
//! Sugawara verification and locality probes from the command line.
//!
//! Exit status: 0 on success, 1 when a check fails or a computation is
//! refused on mathematical grounds, 2 for malformed input or flags.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dgva::catalog::{catalog_presentation, sugawara, verify_virasoro_action, CATALOG_NAMES};
use dgva::envelope::{euler_characteristic, vacuum, EnvelopeContext, VVector};
use dgva::loop_algebra::{check_dg_lie, fmt_lelement, loop_bracket, LElement, Mode};
use dgva::report::AxiomReport;
use dgva::vla::VlaPresentation;
use dgva::{Error, Scalar};

#[derive(Parser)]
#[command(name = "dgva", version, about = "Exact computations with dg vertex Lie algebras and their envelopes")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(clap::Args)]
struct EnvelopeArgs {
    /// Presentation file or catalog name
    input: String,
    /// Central level, NAME=p/q; repeat for several centrals
    #[arg(long = "level", value_name = "NAME=Q")]
    levels: Vec<String>,
    /// Weight cap
    #[arg(long, default_value = "8", allow_hyphen_values = true)]
    cap: String,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the dg Lie axioms of L(U) on a mode window
    Check {
        input: String,
        #[arg(long, default_value = "-5:5", allow_hyphen_values = true)]
        window: String,
    },
    /// Print the mode bracket [u_m, v_n]
    #[command(allow_negative_numbers = true)]
    Bracket { input: String, u: String, m: i64, v: String, n: i64 },
    /// List the PBW basis of V(U) by weight
    Envelope(EnvelopeArgs),
    /// Graded dimensions of V(U) per weight
    Character(EnvelopeArgs),
    /// Cohomology dimensions of V(U) per weight and degree
    Cohomology(EnvelopeArgs),
    /// Build the Sugawara vector of an affine envelope and verify the Virasoro action
    Sugawara {
        input: String,
        /// Level of the central
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, default_value = "-3:3", allow_hyphen_values = true)]
        window: String,
        /// Largest weight of the basis vectors the action is checked on
        #[arg(long, default_value = "4", allow_hyphen_values = true)]
        cap: String,
    },
    /// Measure the locality order of two generators (or `1` for the vacuum)
    Locality {
        #[command(flatten)]
        env: EnvelopeArgs,
        u: String,
        v: String,
        /// Probe vectors have weight up to this value
        #[arg(long, default_value = "6", allow_hyphen_values = true)]
        probe_cap: String,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
    /// List catalog entries, or print one as a presentation file
    Catalog { name: Option<String> },
}

/// A failure and the exit status it maps to.
struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let semantic = matches!(
            e,
            Error::WeightOverflow { .. }
                | Error::WindowExceeded(_)
                | Error::NotScalar
                | Error::Degenerate
                | Error::CriticalLevel(_)
        );
        let debug = format!("{e:?}");
        let kind = debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string();
        Failure { code: if semantic { 1 } else { 2 }, kind, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, kind: "InvalidArgument".into(), message }
}

type Outcome = Result<u8, Failure>;

fn load(input: &str) -> Result<VlaPresentation, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {input}: {e}")))?;
        return Ok(text.parse()?);
    }
    catalog_presentation(input).ok_or_else(|| {
        input_error(format!("{input:?} is neither a readable file nor a catalog name ({})", CATALOG_NAMES.join(", ")))
    })
}

fn parse_window(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || input_error(format!("invalid window {s:?}; expected LO:HI"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let (lo, hi): (i64, i64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_scalar(s: &str) -> Result<Scalar, Failure> {
    Ok(s.parse::<Scalar>()?)
}

fn parse_levels(items: &[String]) -> Result<BTreeMap<String, Scalar>, Failure> {
    let mut out = BTreeMap::new();
    for item in items {
        let (name, value) =
            item.split_once('=').ok_or_else(|| input_error(format!("invalid level {item:?}; expected NAME=p/q")))?;
        if out.insert(name.to_string(), parse_scalar(value)?).is_some() {
            return Err(input_error(format!("level {name:?} given twice")));
        }
    }
    Ok(out)
}

/// ASCII spellings of the Greek generator names.
fn canonical_id(name: &str) -> &str {
    match name {
        "omega" => "ω",
        "tau" => "τ",
        other => other,
    }
}

fn context(args: &EnvelopeArgs, headroom: i64) -> Result<EnvelopeContext, Failure> {
    let p = load(&args.input)?;
    let cap = parse_scalar(&args.cap)?;
    let levels = parse_levels(&args.levels)?;
    Ok(EnvelopeContext::new(p, &levels, cap + Scalar::from_int(headroom))?)
}

fn print_report(report: &AxiomReport, format: Format) {
    match format {
        Format::Human => print!("{}", report.to_human()),
        Format::Machine => print!("{}", report.to_machine()),
    }
}

fn cmd_check(input: &str, window: &str, format: Format) -> Outcome {
    let p = load(input)?;
    let window = parse_window(window)?;
    let report = check_dg_lie(&p, window);
    print_report(&report, format);
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_bracket(input: &str, u: &str, m: i64, v: &str, n: i64, format: Format) -> Outcome {
    let p = load(input)?;
    let gen = |id: &str| {
        let id = canonical_id(id);
        p.gen_id(id).ok_or_else(|| Failure::from(Error::UnknownGenerator(id.to_string())))
    };
    let (a, b) = (gen(u)?, gen(v)?);
    let x = LElement::basis(Mode::Gen { gen: a, n: m });
    let y = LElement::basis(Mode::Gen { gen: b, n });
    let value = loop_bracket(&p, &x, &y);
    let text = fmt_lelement(&p, &value);
    match format {
        Format::Human => println!("{text}"),
        Format::Machine => {
            let terms: Vec<_> = value
                .iter()
                .map(|(mode, c)| match mode {
                    Mode::Gen { gen, n } => json!({ "coeff": c, "gen": p.generator(*gen).id, "n": n }),
                    Mode::Central(k) => json!({ "coeff": c, "central": p.central(*k).id, "n": -1 }),
                })
                .collect();
            println!("{}", json!({ "record": "bracket", "value": text, "terms": terms }));
        }
    }
    Ok(0)
}

fn cmd_envelope(args: &EnvelopeArgs, format: Format) -> Outcome {
    let ctx = context(args, 0)?;
    for (w, monomials) in ctx.basis_by_weight() {
        match format {
            Format::Human => {
                println!("weight {w}: {} vectors", monomials.len());
                for m in &monomials {
                    println!("  {}    degree {}", ctx.fmt_monomial(m), ctx.monomial_degree(m));
                }
            }
            Format::Machine => {
                for m in &monomials {
                    let v = ctx.vector_json(&VVector::basis(m.clone()));
                    let rec = json!({ "record": "basis", "weight": w, "degree": ctx.monomial_degree(m), "vector": v });
                    println!("{rec}");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_character(args: &EnvelopeArgs, format: Format) -> Outcome {
    let ctx = context(args, 0)?;
    let ch = ctx.character();
    match format {
        Format::Human => {
            println!("{:>8}  {:>6}  by degree", "weight", "dim");
            for e in &ch {
                let parts: Vec<String> = e.dims.iter().map(|(d, n)| format!("{d}:{n}")).collect();
                println!("{:>8}  {:>6}  {}", e.weight.to_string(), e.total(), parts.join(" "));
            }
            let dims: Vec<String> = ch.iter().map(|e| e.total().to_string()).collect();
            println!("dims: {}", dims.join(","));
        }
        Format::Machine => {
            for e in &ch {
                let dims: BTreeMap<String, usize> = e.dims.iter().map(|(d, n)| (d.to_string(), *n)).collect();
                println!("{}", json!({ "record": "character", "weight": e.weight, "dim": e.total(), "by_degree": dims }));
            }
        }
    }
    Ok(0)
}

fn cmd_cohomology(args: &EnvelopeArgs, format: Format) -> Outcome {
    let ctx = context(args, 0)?;
    let h = ctx.cohomology_dims()?;
    let chi = euler_characteristic(&h);
    let ch = ctx.character();
    let mut consistent = true;
    for e in &ch {
        consistent &= chi.get(&e.weight).copied().unwrap_or(0) == e.euler();
    }
    match format {
        Format::Human => {
            println!("{:>8}  {:>6}  {:>6}", "weight", "degree", "dim H");
            for e in &h {
                println!("{:>8}  {:>6}  {:>6}", e.weight.to_string(), e.degree.to_string(), e.dim);
            }
            let totals: Vec<String> = ch
                .iter()
                .map(|c| h.iter().filter(|e| e.weight == c.weight).map(|e| e.dim).sum::<usize>().to_string())
                .collect();
            println!("dims: {}", totals.join(","));
            println!("Euler characteristics match the character: {}", if consistent { "yes" } else { "NO" });
        }
        Format::Machine => {
            for e in &h {
                println!("{}", json!({ "record": "cohomology", "weight": e.weight, "degree": e.degree, "dim": e.dim }));
            }
            println!("{}", json!({ "record": "summary", "euler_consistent": consistent }));
        }
    }
    Ok(if consistent { 0 } else { 1 })
}

fn cmd_sugawara(input: &str, k: &str, window: &str, cap: &str, format: Format) -> Outcome {
    let p = load(input)?;
    let k = parse_scalar(k)?;
    let window = parse_window(window)?;
    let basis_cap = parse_scalar(cap)?;
    let central = p
        .centrals()
        .first()
        .map(|c| c.id.clone())
        .ok_or_else(|| input_error("an affine presentation has exactly one central".into()))?;
    let reach = window.0.abs().max(window.1.abs());
    let headroom = Scalar::from_int(2 * reach + 2);
    let levels = BTreeMap::from([(central, k.clone())]);
    let ctx = EnvelopeContext::new(p, &levels, &basis_cap + &headroom)?;
    let s = sugawara(&ctx, &k)?;
    let report = verify_virasoro_action(&s.omega, &ctx, window, &basis_cap);
    match format {
        Format::Human => {
            println!("omega = {}", ctx.fmt_vector(&s.omega));
            println!("h_vee = {}", s.h_dual);
            println!("c = {}", s.central_charge);
            print!("{}", report.to_human());
        }
        Format::Machine => {
            let rec = json!({
                "record": "sugawara",
                "omega": ctx.vector_json(&s.omega),
                "h_vee": s.h_dual,
                "central_charge": s.central_charge,
                "level": s.level,
            });
            println!("{rec}");
            print!("{}", report.to_machine());
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_locality(env: &EnvelopeArgs, u: &str, v: &str, probe_cap: &str, k_max: u32, format: Format) -> Outcome {
    let ctx = context(env, 0)?;
    let probe_cap = parse_scalar(probe_cap)?;
    let state = |name: &str| -> Result<VVector, Failure> {
        if name == "1" || name == "vacuum" {
            return Ok(vacuum());
        }
        let id = canonical_id(name);
        let g = ctx.presentation().gen_id(id).ok_or_else(|| Failure::from(Error::UnknownGenerator(id.into())))?;
        Ok(ctx.generator_state(g)?)
    };
    let (x, y) = (state(u)?, state(v)?);
    let probes: Vec<VVector> = ctx.basis_up_to(&probe_cap).into_iter().map(VVector::basis).collect();
    let k = ctx.locality_order(&x, &y, &probes, k_max)?;
    match format {
        Format::Human => println!("locality order of ({u}, {v}): {k}  ({} probes of weight <= {probe_cap})", probes.len()),
        Format::Machine => {
            println!("{}", json!({ "record": "locality", "u": u, "v": v, "order": k, "probes": probes.len() }))
        }
    }
    Ok(0)
}

fn cmd_catalog(name: Option<&str>, format: Format) -> Outcome {
    match name {
        None => {
            for n in CATALOG_NAMES {
                match format {
                    Format::Human => println!("{n}"),
                    Format::Machine => println!("{}", json!({ "record": "catalog", "name": n })),
                }
            }
        }
        Some(n) => {
            let p = catalog_presentation(n).ok_or_else(|| input_error(format!("no catalog entry {n:?}")))?;
            print!("{}", p.to_file().to_json());
        }
    }
    Ok(0)
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Check { input, window } => cmd_check(input, window, f),
        Command::Bracket { input, u, m, v, n } => cmd_bracket(input, u, *m, v, *n, f),
        Command::Envelope(args) => cmd_envelope(args, f),
        Command::Character(args) => cmd_character(args, f),
        Command::Cohomology(args) => cmd_cohomology(args, f),
        Command::Sugawara { input, k, window, cap } => cmd_sugawara(input, k, window, cap, f),
        Command::Locality { env, u, v, probe_cap, k_max } => cmd_locality(env, u, v, probe_cap, *k_max, f),
        Command::Catalog { name } => cmd_catalog(name.as_deref(), f),
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
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            match cli.format {
                Format::Human => eprintln!("error: {}", fail.message),
                Format::Machine => {
                    eprintln!("{}", json!({ "record": "error", "kind": fail.kind, "message": fail.message }))
                }
            }
            ExitCode::from(fail.code)
        }
    }
}

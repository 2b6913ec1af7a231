//! `lgk`: based root data, Galois-cohomology targets, and parameter
//! reductions from the command line. JSON in, canonical JSON out; table
//! output is a pure reformatting of the JSON.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use lgk::galcoh;
use lgk::json;
use lgk::param::{self, TorusElement, TwistData};
use lgk::rootdata::{presets, BasedRootDatum, SublatticeSpec};
use lgk::zlat::FiniteGroup;
use lgk::LgkError;

#[derive(Parser)]
#[command(name = "lgk", version, about = "L-group kit: root data, cohomology targets, parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Based root datum operations
    Brd {
        #[command(subcommand)]
        cmd: BrdCmd,
    },
    /// Galois-cohomology classification targets
    Cohomology {
        #[command(subcommand)]
        cmd: CohCmd,
    },
    /// Langlands-parameter reductions
    Param {
        #[command(subcommand)]
        cmd: ParamCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct DatumInput {
    /// Preset name, e.g. `SL 2`, `SL2`, `PGL3`, `Sp4`, `SO5`, `SU3`, `ResSL2`
    #[arg(long, num_args = 1..=2)]
    preset: Option<Vec<String>>,
    /// Path to a brd_schema JSON file
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum BrdCmd {
    /// Build a datum and print its canonical JSON
    New(DatumInput),
    /// Re-emit a datum (canonical round trip)
    Show(DatumInput),
    /// Dual datum
    Dual(DatumInput),
    /// Run the axiom checks; exit 1 with the report on failure
    Validate(DatumInput),
    /// Levi sub-datum on a base subset
    Levi {
        #[command(flatten)]
        datum: DatumInput,
        /// Comma-separated base positions, e.g. `0` or `0,2`
        #[arg(long)]
        subset: String,
    },
}

#[derive(Subcommand)]
enum CohCmd {
    /// H^1(F, T) for the torus of the datum (cocharacter module)
    H1Torus(CohArgs),
    /// Character group of pi_0 of the Galois-fixed dual center
    Alpha(CohArgs),
    /// Character group of the Galois-fixed dual center (free rank kept)
    Iso(CohArgs),
    /// Rigid target for a central subgroup given by a sublattice
    Rigid {
        #[command(flatten)]
        args: CohArgs,
        /// `full-center` or a path to `{"basis": [[..]]}` JSON
        #[arg(long)]
        sublattice: String,
    },
    /// B(T): coinvariants plus optional Newton point
    BTorus {
        #[command(flatten)]
        args: CohArgs,
        /// Comma-separated integer cocharacter to average, e.g. `1,0`
        #[arg(long)]
        newton: Option<String>,
    },
}

#[derive(Args)]
struct CohArgs {
    #[command(flatten)]
    datum: DatumInput,
    /// Print the classification cardinality
    #[arg(long)]
    count: bool,
    /// Non-Archimedean interpretation: the classifying map is bijective
    #[arg(long)]
    nonarch: bool,
    /// Archimedean field: targets carry a bijectivity caveat
    #[arg(long)]
    arch: bool,
}

#[derive(Args)]
struct ParamInput {
    /// Path to a param_schema JSON file
    input: std::path::PathBuf,
    /// Preset name of G; operations run on the dual datum
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum ParamCmd {
    /// Check the homomorphism and compatibility conditions
    Validate(ParamInput),
    /// Langlands decomposition (Levi, bounded part, radial twist)
    Decompose(ParamInput),
    /// Smallest base subset supporting the parameter
    MinimalLevi(ParamInput),
    /// Essential discreteness with certificate
    Discrete(ParamInput),
    /// Endoscopic based root datum from a semisimple element
    Endoscopy {
        /// Preset name of G
        #[arg(long)]
        group: String,
        /// Circle part of s: comma-separated rationals, e.g. `1/2` or `0,1/2`
        #[arg(long)]
        s: String,
        /// `trivial` or `frobenius-weyl` (Coxeter Weyl part on a C2 twist)
        #[arg(long, default_value = "trivial")]
        twist: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                LgkError::Parse(_) | LgkError::Preset(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load_datum(input: &DatumInput) -> Result<BasedRootDatum, LgkError> {
    match (&input.preset, &input.input) {
        (Some(tokens), None) => presets::preset_by_compact_name(&tokens.join("")),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| LgkError::Parse(format!("{}: {e}", path.display())))?;
            json::parse_brd(&text)
        }
        _ => Err(LgkError::Parse(
            "exactly one of --preset and --input is required".into(),
        )),
    }
}

fn print_out(json_text: &str, format: Format) {
    match format {
        Format::Json => println!("{json_text}"),
        Format::Table => print!("{}", table_from_json(json_text)),
    }
}

/// Pure JSON-to-table formatter: one `key: value` line per field, nested
/// objects indented, arrays inline.
fn table_from_json(text: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(text).expect("formatter gets valid JSON");
    let mut out = String::new();
    render(&v, 0, &mut out);
    out
}

fn render(v: &serde_json::Value, indent: usize, out: &mut String) {
    match v {
        serde_json::Value::Object(m) => {
            for (k, val) in m {
                out.push_str(&"  ".repeat(indent));
                out.push_str(k);
                out.push(':');
                if val.is_object() {
                    out.push('\n');
                    render(val, indent + 1, out);
                } else {
                    out.push(' ');
                    out.push_str(&val.to_string());
                    out.push('\n');
                }
            }
        }
        other => {
            out.push_str(&"  ".repeat(indent));
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}

fn parse_positions(s: &str) -> Result<Vec<usize>, LgkError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| LgkError::Parse(format!("bad base position `{t}`")))
        })
        .collect()
}

fn parse_rat_list(s: &str) -> Result<Vec<BigRational>, LgkError> {
    s.split(',')
        .map(|t| json::parse_rational(&serde_json::Value::String(t.trim().into()), "s"))
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode, LgkError> {
    match cli.command {
        Command::Brd { cmd } => run_brd(cmd),
        Command::Cohomology { cmd } => run_coh(cmd),
        Command::Param { cmd } => run_param(cmd),
    }
}

fn run_brd(cmd: BrdCmd) -> Result<ExitCode, LgkError> {
    match cmd {
        BrdCmd::New(input) | BrdCmd::Show(input) => {
            let b = load_datum(&input)?;
            print_out(&json::emit_brd(&b), input.format);
            Ok(ExitCode::SUCCESS)
        }
        BrdCmd::Dual(input) => {
            let b = load_datum(&input)?;
            print_out(&json::emit_brd(&b.dual()), input.format);
            Ok(ExitCode::SUCCESS)
        }
        BrdCmd::Validate(input) => {
            // bypass the constructor-time validation so the report is shown
            let b = match load_datum(&input) {
                Ok(b) => b,
                Err(LgkError::RootDatum(msg)) => {
                    println!("FAIL\n{msg}");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e),
            };
            let report = b.validate();
            if report.is_pass() {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL");
                for v in &report.violations {
                    println!("- {v}");
                }
                Ok(ExitCode::from(1))
            }
        }
        BrdCmd::Levi { datum, subset } => {
            let b = load_datum(&datum)?;
            let s = parse_positions(&subset)?;
            for &p in &s {
                if p >= b.simple.len() {
                    return Err(LgkError::Parse(format!("base position {p} out of range")));
                }
            }
            let (levi, stable) = b.levi_subdatum(&s);
            if !stable {
                eprintln!("note: subset not Galois-stable; action dropped");
            }
            print_out(&json::emit_brd(&levi), datum.format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn finish_target(
    mut target: galcoh::CohomologyTarget,
    args: &CohArgs,
) -> Result<ExitCode, LgkError> {
    if args.arch {
        target.caveats.push("target only - map not bijective".into());
    }
    if args.count {
        if args.arch || !args.nonarch {
            eprintln!("error: target only - map not bijective (counts need --nonarch)");
            return Ok(ExitCode::from(1));
        }
        match target.group.order() {
            Some(n) => {
                let noun = if n == BigInt::from(1) { "class" } else { "classes" };
                println!("{n} {noun}");
            }
            None => println!("infinitely many classes"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    print_out(&json::emit_target(&target), args.datum.format);
    Ok(ExitCode::SUCCESS)
}

fn run_coh(cmd: CohCmd) -> Result<ExitCode, LgkError> {
    match cmd {
        CohCmd::H1Torus(args) => {
            let b = load_datum(&args.datum)?;
            let g = galcoh::h1_torus(&b.x.dual());
            if args.count {
                if args.arch || !args.nonarch {
                    eprintln!("error: counts need --nonarch");
                    return Ok(ExitCode::from(1));
                }
                println!("{} classes", g.torsion_order());
                return Ok(ExitCode::SUCCESS);
            }
            print_out(&json::emit_group(&g), args.datum.format);
            Ok(ExitCode::SUCCESS)
        }
        CohCmd::Alpha(args) => {
            let b = load_datum(&args.datum)?;
            finish_target(galcoh::alpha_target(&b), &args)
        }
        CohCmd::Iso(args) => {
            let b = load_datum(&args.datum)?;
            finish_target(galcoh::iso_target(&b), &args)
        }
        CohCmd::Rigid { args, sublattice } => {
            let b = load_datum(&args.datum)?;
            let y = if sublattice == "full-center" {
                SublatticeSpec::root_lattice(&b)?
            } else {
                let text = std::fs::read_to_string(&sublattice)
                    .map_err(|e| LgkError::Parse(format!("{sublattice}: {e}")))?;
                json::parse_sublattice(&text, b.rank())?
            };
            finish_target(galcoh::rigid_target(&b, &y)?, &args)
        }
        CohCmd::BTorus { args, newton } => {
            let b = load_datum(&args.datum)?;
            let bt = galcoh::b_torus(&b.x.dual());
            match newton {
                Some(spec) => {
                    let lambda: Vec<BigInt> = parse_rat_list(&spec)?
                        .into_iter()
                        .map(|r| {
                            if r.is_integer() {
                                Ok(r.to_integer())
                            } else {
                                Err(LgkError::Parse("newton input must be integral".into()))
                            }
                        })
                        .collect::<Result<_, _>>()?;
                    if lambda.len() != b.rank() {
                        return Err(LgkError::Parse("newton input has wrong length".into()));
                    }
                    print_out(&json::emit_rat_vec(&bt.newton(&lambda)), args.datum.format);
                }
                None => print_out(&json::emit_group(&bt.group), args.datum.format),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_param(
    input: &ParamInput,
) -> Result<(BasedRootDatum, param::ParamDatum, Format), LgkError> {
    let b = presets::preset_by_compact_name(&input.group)?.dual();
    let text = std::fs::read_to_string(&input.input)
        .map_err(|e| LgkError::Parse(format!("{}: {e}", input.input.display())))?;
    let p = json::parse_param(&text, &b)?;
    Ok((b, p, input.format))
}

fn run_param(cmd: ParamCmd) -> Result<ExitCode, LgkError> {
    match cmd {
        ParamCmd::Validate(input) => {
            let (b, p, _) = load_param(&input)?;
            let report = param::validate_param(&p, &b);
            if report.is_pass() {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL");
                for v in &report.violations {
                    println!("- {v}");
                }
                Ok(ExitCode::from(1))
            }
        }
        ParamCmd::Decompose(input) => {
            let (b, p, format) = load_param(&input)?;
            let d = param::langlands_decompose(&p, &b)?;
            let mut out = String::from("{\"levi\":[");
            out.push_str(
                &d.levi.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            );
            out.push_str("],\"nu\":");
            out.push_str(&json::emit_rat_vec(&d.nu));
            out.push_str(",\"phi0_bounded\":");
            out.push_str(if d.phi0.is_bounded() { "true" } else { "false" });
            out.push('}');
            print_out(&out, format);
            Ok(ExitCode::SUCCESS)
        }
        ParamCmd::MinimalLevi(input) => {
            let (b, p, format) = load_param(&input)?;
            let levi = param::minimal_levi(&p, &b)?;
            let out = format!(
                "{{\"levi\":[{}]}}",
                levi.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            );
            print_out(&out, format);
            Ok(ExitCode::SUCCESS)
        }
        ParamCmd::Discrete(input) => {
            let (b, p, format) = load_param(&input)?;
            let cert = param::is_essentially_discrete(&p, &b)?;
            let out = format!(
                "{{\"discrete\":{},\"minimal_levi\":[{}],\"levi_is_full\":{},\"fixed_dim\":{},\"central_dim\":{}}}",
                cert.discrete,
                cert.minimal_levi.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                cert.levi_is_full,
                cert.fixed_dim,
                cert.central_dim
            );
            print_out(&out, format);
            Ok(ExitCode::SUCCESS)
        }
        ParamCmd::Endoscopy { group, s, twist, format } => {
            let b = presets::preset_by_compact_name(&group)?;
            let circle = parse_rat_list(&s)?;
            if circle.len() != b.rank() {
                return Err(LgkError::Parse(format!(
                    "--s needs {} coordinates",
                    b.rank()
                )));
            }
            let radial = vec![BigRational::zero(); b.rank()];
            let elt = TorusElement::new(circle, radial);
            let twist_data = match twist.as_str() {
                "trivial" => param::trivial_twist(&b),
                "frobenius-weyl" => TwistData {
                    group: FiniteGroup::cyclic(2),
                    weyl_words: vec![vec![], (0..b.simple.len()).collect()],
                    galois: vec![b.x.group.identity; 2],
                },
                other => {
                    return Err(LgkError::Parse(format!("unknown twist `{other}`")));
                }
            };
            let e = param::endoscopic_datum(&b, &elt, &twist_data)?;
            print_out(&json::emit_endoscopic(&e), format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

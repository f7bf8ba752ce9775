//! `toric-elim`: Koszul complex dimensions, sparse resultants, emptiness checks
//! and Bézout certificates for systems given as JSON files.

mod system_file;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use toric_elim::bezout::{verify_certificate, CertificateSolver};
use toric_elim::koszul::{build_complex, check_exact, rightmost_surjective, BuiltComplex};
use toric_elim::resultant::{
    complementary_mixed_volumes, sparse_resultant_with_complex, specialize_resultant, verify_minor_divisibility,
    MinorSample,
};
use toric_elim::{geom, Coefficients, Error, LaurentPoly, ShiftRule, SparseSystem};

use system_file::{parse_delta, parse_points, LoadError, SystemFile};

const EXIT_INPUT: u8 = 2;
const EXIT_GEOMETRY: u8 = 3;
const EXIT_ALGEBRA: u8 = 4;
const EXIT_NO_CERTIFICATE: u8 = 5;

#[derive(Parser)]
#[command(name = "toric-elim", version, about = "Exact sparse elimination on toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// System description (JSON).
    file: PathBuf,
    /// Shift vector, e.g. "1/2,1/2"; overrides the file.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Auxiliary polytope as points, e.g. "0,0;1,0"; overrides the file.
    #[arg(long = "Q", allow_hyphen_values = true)]
    q: Option<String>,
    /// Seed for the random specialization; overrides the file.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// How the shift enters the lattice-point bases.
    #[arg(long, value_enum, default_value_t = Rule::Translate)]
    shift_rule: Rule,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Translate,
    Direction,
}

#[derive(Subcommand)]
enum Command {
    /// Per-level component dimensions of the graded Koszul complex.
    Dims(Common),
    /// Sparse resultant of n+1 supports.
    Resultant {
        #[command(flatten)]
        common: Common,
        /// Check this many maximal minors of the last map for divisibility ("all" for every one).
        #[arg(long)]
        verify_minors: Option<String>,
    },
    /// Bézout certificate for a target Laurent polynomial.
    Certificate {
        #[command(flatten)]
        common: Common,
        /// Target such as "t^(2,2)" or "3/2*t^(1,0) - 1".
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Decide whether the system has common zeros on the toric variety.
    Check(Common),
    /// Mixed volumes of the Newton polytopes.
    MixedVolume(Common),
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotFullDimensional { .. } | Error::Unbounded => EXIT_GEOMETRY,
            Error::ExactnessFailure { .. } | Error::DivisionFailure(_) | Error::DegreeMismatch { .. } => {
                EXIT_ALGEBRA
            }
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Format(message) => Failure { code: EXIT_INPUT, message },
            LoadError::System(e) => e.into(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

struct Loaded {
    system: SparseSystem,
    seed: u64,
    format: Format,
}

fn load(common: &Common) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| input_error(format!("cannot read {}: {e}", common.file.display())))?;
    let file = SystemFile::parse(&text)?;
    let delta = common.delta.as_deref().map(parse_delta).transpose().map_err(input_error)?;
    let q = common.q.as_deref().map(parse_points).transpose().map_err(input_error)?;
    let seed = common.seed.or(file.seed).unwrap_or(0);
    let rule = match common.shift_rule {
        Rule::Translate => ShiftRule::Translate,
        Rule::Direction => ShiftRule::Direction,
    };
    let system = file.into_system(delta, q)?.with_shift_rule(rule);
    Ok(Loaded { system, seed, format: common.format })
}

fn emit(format: Format, value: &Value, text: String) {
    let body = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => text,
    };
    // A closed pipe downstream is not our failure.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn cmd_dims(common: &Common) -> Result<(), Failure> {
    let loaded = load(common)?;
    let (_, built) = build_complex(&loaded.system)?;
    let levels = built.dimension_signature();
    let mut text = String::new();
    for (l, dims) in levels.iter().enumerate() {
        let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
        let _ = writeln!(text, "level {l}: {}", parts.join(" + "));
    }
    emit(loaded.format, &json!({ "levels": levels }), text);
    Ok(())
}

fn cmd_resultant(common: &Common, verify_minors: Option<&str>) -> Result<(), Failure> {
    let loaded = load(common)?;
    let system = &loaded.system;
    if system.k() != system.n() + 1 {
        return Err(input_error(format!(
            "a resultant needs n+1 = {} polynomials, found {}",
            system.n() + 1,
            system.k()
        )));
    }
    let sample = match verify_minors {
        None => None,
        Some("all") => Some(MinorSample::All),
        Some(n) => {
            let count = n.parse().map_err(|_| input_error(format!("--verify-minors expects a count or \"all\", got {n:?}")))?;
            Some(MinorSample::Count { count, seed: loaded.seed })
        }
    };
    let (res, complex) = sparse_resultant_with_complex(system, loaded.seed)?;
    let terms: Value = serde_json::from_str(&res.terms_json()).expect("well-formed term list");
    let mut out = json!({
        "polynomial": res.render(),
        "terms": terms,
        "degrees": res.degrees,
        "mixed_volumes": res.mixed_volumes,
        "minor_sizes": res.selection.minor_sizes(),
    });
    let mut text = format!("{}\n", res.render());
    for (i, (d, mv)) in res.degrees.iter().zip(&res.mixed_volumes).enumerate() {
        let _ = writeln!(text, "group {}: degree {d}, mixed volume {mv}", i + 1);
    }
    if matches!(system.coefficients(), Coefficients::Concrete(_)) {
        let value = specialize_resultant(&res, system)?;
        out["value"] = json!(value.to_string());
        let _ = writeln!(text, "value: {value}");
    }
    if let Some(sample) = sample {
        let report = verify_minor_divisibility(&complex, &res, sample);
        out["minors"] = json!({
            "total": report.total,
            "checked": report.checked,
            "zero": report.zero,
            "divisible": report.divisible,
            "indivisible": report.indivisible,
        });
        let _ = writeln!(
            text,
            "minors: {} checked of {}, {} zero, {} divisible, {} indivisible",
            report.checked,
            report.total,
            report.zero,
            report.divisible,
            report.indivisible.len()
        );
        if !report.indivisible.is_empty() {
            emit(loaded.format, &out, text);
            return Err(Failure { code: EXIT_ALGEBRA, message: "a maximal minor is not divisible by the resultant".into() });
        }
    }
    emit(loaded.format, &out, text);
    Ok(())
}

fn cmd_certificate(common: &Common, target: &str) -> Result<(), Failure> {
    let loaded = load(common)?;
    let system = &loaded.system;
    if matches!(system.coefficients(), Coefficients::Generic) {
        return Err(input_error("certificates need concrete coefficients"));
    }
    let g = LaurentPoly::parse(target, system.n())?;
    let solver = CertificateSolver::new(system)?;
    let Some(cert) = solver.solve(&g)? else {
        return Err(Failure { code: EXIT_NO_CERTIFICATE, message: format!("no certificate exists for {g}") });
    };
    let verified = verify_certificate(&cert, system);
    let value: Value = serde_json::from_str(&cert.to_json(verified)).expect("well-formed certificate");
    let mut text = format!("{g} =\n");
    for (i, c) in cert.cofactors.iter().enumerate() {
        let _ = writeln!(text, "  ({c}) * f{}", i + 1);
    }
    let _ = writeln!(text, "verified: {verified}");
    emit(loaded.format, &value, text);
    if verified {
        Ok(())
    } else {
        Err(Failure { code: EXIT_ALGEBRA, message: "certificate failed verification".into() })
    }
}

fn cmd_check(common: &Common) -> Result<(), Failure> {
    let loaded = load(common)?;
    let (_, built) = build_complex(&loaded.system)?;
    let BuiltComplex::Concrete(complex) = built else {
        return Err(input_error("check needs concrete coefficients"));
    };
    let surjective = rightmost_surjective(&complex.complex);
    let exact = check_exact(&complex.complex);
    let verdict = if surjective { "empty (surjective)" } else { "nonempty (not surjective)" };
    let value = json!({ "empty": surjective, "exact": exact, "verdict": verdict });
    emit(loaded.format, &value, format!("{verdict}\nexact: {exact}\n"));
    Ok(())
}

fn cmd_mixed_volume(common: &Common) -> Result<(), Failure> {
    let loaded = load(common)?;
    let system = &loaded.system;
    let polytopes = system.newton_polytopes()?;
    let volumes = if system.k() == system.n() + 1 {
        complementary_mixed_volumes(&polytopes)?
    } else if system.k() == system.n() {
        vec![geom::mixed_volume(&polytopes)?]
    } else {
        return Err(input_error(format!(
            "mixed volumes need n or n+1 polytopes for n = {}, found {}",
            system.n(),
            system.k()
        )));
    };
    let parts: Vec<String> = volumes.iter().map(u64::to_string).collect();
    emit(loaded.format, &json!({ "mixed_volumes": volumes }), format!("{}\n", parts.join(" ")));
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var("TORIC_ELIM_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let outcome = match &cli.command {
        Command::Dims(c) => cmd_dims(c),
        Command::Resultant { common, verify_minors } => cmd_resultant(common, verify_minors.as_deref()),
        Command::Certificate { common, target } => cmd_certificate(common, target),
        Command::Check(c) => cmd_check(c),
        Command::MixedVolume(c) => cmd_mixed_volume(c),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

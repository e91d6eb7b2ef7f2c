//! Command-line front door: compute G-group reports for catalog families,
//! run the verification suites, and list the catalog, in text or JSON.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation failure, 3 failing
//! verification verdict.

use crate::catalog::{self, AdeType, BranchForm, Family, RingSpec};
use crate::endoalg::suites::{run_suite, SuiteConfig, SuiteKind, SuiteReport};
use crate::endoalg::{PrimeField, Rationals};
use crate::kcalc::{self, ComputationReport};
use crate::znf::IntegerMatrix;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_SPEC: i32 = 2;
pub const EXIT_FAILED_VERDICT: i32 = 3;

// Writes swallow errors so a closed pipe (e.g. `ccmk ... | head`) ends the
// program through the normal exit path instead of a panic.
fn write_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn write_stderr(text: &str) {
    use std::io::Write;
    let _ = std::io::stderr().write_all(text.as_bytes());
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Verification coefficient field: `q` for the rationals or `f<p>` for a
/// prime field with p > 5.
#[derive(Clone, Debug)]
pub enum VerifyField {
    Rationals,
    Prime(u64),
}

impl VerifyField {
    fn parse(text: &str) -> Result<Self, String> {
        match text {
            "q" | "rationals" => Ok(VerifyField::Rationals),
            _ => {
                let digits = text
                    .strip_prefix('f')
                    .ok_or_else(|| format!("expected `q` or `f<p>`, got {text:?}"))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| format!("bad prime in field spec {text:?}"))?;
                PrimeField::new(p)?;
                Ok(VerifyField::Prime(p))
            }
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ccmk",
    version,
    about = "Exact G0/G1 computations for Cohen-Macaulay singularities with cluster tilting data",
    after_help = "Linear forms for --forms are written `a x + b y` with integer or rational\n\
                  coefficients and are whitespace-insensitive: `x-y`, `2x+y`, `-x + 3/2 y`, `y`.\n\
                  Forms are separated by commas."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CommonOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute T, G0, H, Xi and G1 for a catalog family.
    Compute {
        #[command(subcommand)]
        family: ComputeFamily,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run an endomorphism-ring verification suite.
    Verify {
        /// One of: endoring, factorizations, tilde, phi, all.
        suite: String,
        /// Working precision for curve-case series (raised to 4n+2 when
        /// needed).
        #[arg(long, default_value_t = 50)]
        precision: u64,
        /// Coefficient field: `q` or `f<p>` with p a prime > 5.
        #[arg(long, default_value = "f7")]
        field: String,
        /// Seed for the randomized checks.
        #[arg(long, env = "CCMK_SEED", default_value_t = 0)]
        seed: u64,
        /// Largest truncated-polynomial n in the factorization suite.
        #[arg(long = "n-max", default_value_t = 5)]
        n_max: u32,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Catalog information.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args, Debug)]
struct CharOpt {
    /// Characteristic of the symbolic ground field (0 for char zero).
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Subcommand, Debug)]
enum ComputeFamily {
    /// k[x]/x^n.
    TruncatedPoly {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// k[[t^2, t^(2n+1)]].
    A2nCurve {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// k[[s^2, st, t^2]].
    A1Surface {
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// k[[x^2, xy, xz, y^2, yz, z^2]].
    InvariantDim3 {
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// k[[x,y]]/(f_1 ... f_n) with linear branch forms.
    HypersurfaceDim1 {
        /// Comma-separated linear forms, e.g. "x-y,x+y".
        #[arg(long)]
        forms: String,
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// The A_1 curve (x-y)(x+y).
    A1Dim1 {
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// The D_2n curve (x-y^(n-1)) y (x+y^(n-1)).
    D2nDim1 {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// The A_(2n-1) curve (x-y^n)(x+y^n); Aut(L)_ab only.
    #[command(name = "a2n-minus1-dim1")]
    A2nMinus1Dim1 {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// k[[x,y,u,v]]/(f_1 ... f_n + uv).
    HypersurfaceDim3 {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        char_opt: CharOpt,
    },
    /// ADE finite-type metadata.
    Ade {
        #[arg(long = "type", value_enum)]
        ade_type: CliAdeType,
        /// Index for A_n / D_n types.
        #[arg(long, default_value_t = 0)]
        index: u32,
        #[arg(long)]
        dim: u32,
        #[command(flatten)]
        char_opt: CharOpt,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CliAdeType {
    A,
    D,
    E6,
    E7,
    E8,
}

impl From<CliAdeType> for AdeType {
    fn from(t: CliAdeType) -> AdeType {
        match t {
            CliAdeType::A => AdeType::A,
            CliAdeType::D => AdeType::D,
            CliAdeType::E6 => AdeType::E6,
            CliAdeType::E7 => AdeType::E7,
            CliAdeType::E8 => AdeType::E8,
        }
    }
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List supported families with availability flags.
    List {
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// Parse arguments and dispatch; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Compute { family, common } => cmd_compute(family, common.output),
        Command::Verify { suite, precision, field, seed, n_max, common } => {
            cmd_verify(&suite, precision, &field, seed, n_max, common.output)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { json, common } => {
                let fmt = if json { OutputFormat::Json } else { common.output };
                cmd_catalog_list(fmt)
            }
        },
    }
}

fn spec_from_family(family: ComputeFamily) -> Result<RingSpec, String> {
    Ok(match family {
        ComputeFamily::TruncatedPoly { n, char_opt } => {
            RingSpec::truncated_poly(n).with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::A2nCurve { n, char_opt } => {
            RingSpec::a2n_curve(n).with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::A1Surface { char_opt } => {
            RingSpec::a1_surface().with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::InvariantDim3 { char_opt } => {
            RingSpec::invariant_dim3().with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::HypersurfaceDim1 { forms, char_opt } => {
            let parsed: Result<Vec<BranchForm>, String> = forms
                .split(',')
                .map(|text| catalog::parse_linear_form(text).map(BranchForm::Linear))
                .collect();
            RingSpec::hypersurface_dim1(parsed?).with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::A1Dim1 { char_opt } => {
            RingSpec::a1_dim1().with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::D2nDim1 { n, char_opt } => {
            if n < 2 {
                return Err("d2n-dim1 requires --n >= 2".to_string());
            }
            RingSpec::d2n_dim1(n).with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::A2nMinus1Dim1 { n, char_opt } => {
            RingSpec::a2n_minus1_dim1(n).with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::HypersurfaceDim3 { n, char_opt } => {
            RingSpec::hypersurface_dim3(n).with_characteristic(char_opt.characteristic)
        }
        ComputeFamily::Ade { ade_type, index, dim, char_opt } => {
            RingSpec::ade(ade_type.into(), index, dim)
                .with_characteristic(char_opt.characteristic)
        }
    })
}

fn cmd_compute(family: ComputeFamily, output: OutputFormat) -> i32 {
    let spec = match spec_from_family(family) {
        Ok(spec) => spec,
        Err(message) => {
            write_stderr(&format!("error: {message}\n"));
            return EXIT_USAGE;
        }
    };
    let diagnostics = catalog::validate(&spec);
    let invalid = diagnostics.iter().any(|d| d.severity == catalog::Severity::Error);
    let report = kcalc::full_report(&spec);
    match output {
        OutputFormat::Json => {
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            write_stdout(&format!("{json}\n"));
        }
        OutputFormat::Text => write_stdout(&report_text(&report)),
    }
    if invalid {
        EXIT_INVALID_SPEC
    } else {
        EXIT_OK
    }
}

fn describe_spec(spec: &RingSpec) -> String {
    let family = match &spec.family {
        Family::TruncatedPoly { n } => format!("truncated-poly (n = {n})"),
        Family::A2nCurve { n } => format!("a2n-curve (n = {n})"),
        Family::A1Surface => "a1-surface".to_string(),
        Family::InvariantDim3 => "invariant-dim3".to_string(),
        Family::ReducedHypersurfaceDim1 { forms, .. } => {
            let rendered: Vec<String> = forms.iter().map(ToString::to_string).collect();
            format!("hypersurface-dim1 (forms: {})", rendered.join(", "))
        }
        Family::A2nMinus1Dim1 { n } => format!("a2n-minus1-dim1 (n = {n})"),
        Family::HypersurfaceDim3 { n } => format!("hypersurface-dim3 (n = {n})"),
        Family::AdeMetadata { ade_type, index, dim } => {
            let name = match ade_type {
                AdeType::A => format!("A_{index}"),
                AdeType::D => format!("D_{index}"),
                AdeType::E6 => "E_6".to_string(),
                AdeType::E7 => "E_7".to_string(),
                AdeType::E8 => "E_8".to_string(),
            };
            format!("ade ({name}, dim = {dim})")
        }
    };
    if spec.field.characteristic == 0 {
        family
    } else {
        format!("{family}, char = {}", spec.field.characteristic)
    }
}

fn render_matrix(m: &IntegerMatrix) -> String {
    if m.cols() == 0 || m.rows() == 0 {
        return format!("  ({}x{} empty matrix)", m.rows(), m.cols());
    }
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m.get(i, j).to_string().len()).max().unwrap())
        .collect();
    (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols())
                .map(|j| format!("{:>width$}", m.get(i, j), width = widths[j]))
                .collect();
            format!("  [ {} ]", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn report_text(report: &ComputationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("ring: {}\n", describe_spec(&report.spec)));
    match &report.t_matrix {
        Some(t) => {
            out.push_str(&format!("T ({}x{}):\n", t.rows(), t.cols()));
            out.push_str(&render_matrix(t));
            out.push('\n');
        }
        None => out.push_str("T: (unavailable)\n"),
    }
    match &report.g0 {
        Some(g0) => out.push_str(&format!("G0: {g0}\n")),
        None => out.push_str("G0: (unavailable)\n"),
    }
    match report.h_rank {
        Some(h) => out.push_str(&format!("H rank: {h}\n")),
        None => out.push_str("H rank: (unavailable)\n"),
    }
    match &report.xi {
        Some(xi) => out.push_str(&format!(
            "Xi: {} generator(s) in (k*)^{}\n",
            xi.generators.cols(),
            xi.ambient_rank
        )),
        None => out.push_str("Xi: (unavailable)\n"),
    }
    match &report.g1 {
        Some(g1) => out.push_str(&format!("G1: {g1}\n")),
        None => out.push_str("G1: (unavailable)\n"),
    }
    if !report.notes.is_empty() {
        out.push_str("notes:\n");
        for note in &report.notes {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    out
}

fn cmd_verify(
    suite_name: &str,
    precision: u64,
    field_text: &str,
    seed: u64,
    n_max: u32,
    output: OutputFormat,
) -> i32 {
    let Some(kind) = SuiteKind::parse(suite_name) else {
        write_stderr(&format!(
            "error: unknown suite {suite_name:?}; expected endoring, factorizations, tilde, phi or all\n"
        ));
        return EXIT_USAGE;
    };
    let field = match VerifyField::parse(field_text) {
        Ok(field) => field,
        Err(message) => {
            write_stderr(&format!("error: {message}\n"));
            return EXIT_USAGE;
        }
    };
    let config = SuiteConfig {
        precision,
        seed,
        truncated_n_max: n_max,
        ..SuiteConfig::default()
    };
    let report = match &field {
        VerifyField::Rationals => run_suite(&Rationals, kind, &config),
        VerifyField::Prime(p) => {
            let fp = PrimeField::new(*p).expect("validated above");
            run_suite(&fp, kind, &config)
        }
    };
    print_suite_report(&report, field_text, output);
    if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_FAILED_VERDICT
    }
}

fn print_suite_report(report: &SuiteReport, field_text: &str, output: OutputFormat) {
    match output {
        OutputFormat::Json => {
            let json = serde_json::to_string_pretty(&report.entries)
                .expect("verdict entries serialize");
            write_stdout(&format!("{json}\n"));
            for note in &report.notes {
                write_stderr(&format!("note: {note}\n"));
            }
        }
        OutputFormat::Text => {
            let mut out = format!("verification over field {field_text}:\n");
            for entry in &report.entries {
                out.push_str(&format!("  {:<5} {}\n", entry.verdict, entry.case));
                if let Some(ce) = &entry.counterexample {
                    out.push_str(&format!("        counterexample: {ce}\n"));
                }
            }
            for note in &report.notes {
                out.push_str(&format!("note: {note}\n"));
            }
            let failed = report.entries.iter().filter(|e| !e.is_holds()).count();
            out.push_str(&format!("{} check(s), {} failed\n", report.entries.len(), failed));
            write_stdout(&out);
        }
    }
}

fn cmd_catalog_list(output: OutputFormat) -> i32 {
    let families = catalog::list_families();
    match output {
        OutputFormat::Json => {
            let json = serde_json::to_string_pretty(&families).expect("descriptors serialize");
            write_stdout(&format!("{json}\n"));
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for f in &families {
                out.push_str(&format!("{}\n", f.id));
                out.push_str(&format!("    {}\n", f.description));
                out.push_str(&format!("    parameters: {}\n", f.parameters));
                out.push_str(&format!("    field: {}\n", f.characteristic));
                out.push_str(&format!("    {}\n", f.availability));
            }
            write_stdout(&out);
        }
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_field_parsing() {
        assert!(matches!(VerifyField::parse("q"), Ok(VerifyField::Rationals)));
        assert!(matches!(VerifyField::parse("rationals"), Ok(VerifyField::Rationals)));
        assert!(matches!(VerifyField::parse("f7"), Ok(VerifyField::Prime(7))));
        assert!(matches!(VerifyField::parse("f11"), Ok(VerifyField::Prime(11))));
        assert!(VerifyField::parse("f5").is_err());
        assert!(VerifyField::parse("f9").is_err());
        assert!(VerifyField::parse("gf8").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["ccmk", "compute", "no-such-family"]), EXIT_USAGE);
        assert_eq!(run(["ccmk", "verify", "no-such-suite"]), EXIT_USAGE);
        assert_eq!(run(["ccmk", "verify", "tilde", "--field", "f9"]), EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run(["ccmk", "--help"]), EXIT_OK);
    }

    #[test]
    fn compute_exit_codes() {
        assert_eq!(run(["ccmk", "compute", "truncated-poly", "--n", "3"]), EXIT_OK);
        assert_eq!(
            run(["ccmk", "compute", "truncated-poly", "--n", "3", "--char", "2"]),
            EXIT_INVALID_SPEC
        );
        assert_eq!(
            run(["ccmk", "compute", "hypersurface-dim1", "--forms", "x,x"]),
            EXIT_INVALID_SPEC
        );
        assert_eq!(
            run(["ccmk", "compute", "hypersurface-dim1", "--forms", "x*y"]),
            EXIT_USAGE
        );
    }

    #[test]
    fn catalog_list_ok() {
        assert_eq!(run(["ccmk", "catalog", "list"]), EXIT_OK);
        assert_eq!(run(["ccmk", "catalog", "list", "--json"]), EXIT_OK);
    }
}

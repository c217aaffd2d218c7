//! The `painleve-series` command line.

mod cache;

pub use cache::*;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::elliptic::{
    eisenstein_q_oracle, eisenstein_table, half_period, half_period_reference, hurwitz_bridge, hurwitz_numbers,
    EllipticCase,
};
use crate::error::{Error, Result};
use crate::exact::mp::{format_significant, format_truncated, Precision};
use crate::exact::{format_fraction, parse_rational, Params, Recursion};
use crate::laurent::{
    extend_pentagonal, generating_function_residual, laurent_coeffs, modular_polynomials, ode_residual,
    pentagonal_coeffs, pentagonal_f_tilde, twisted_w,
};
use crate::poles::{gamma_constant, pole_map_csv, pole_map_svg, trusted_zeros};
use crate::tau::{
    bilinear_residual, euler_homogeneity_violations, extend_bilinear, hamiltonian_check, integrality_report,
    quartic_residual, tau_coeffs, tau_from_triple_sum, tau_polynomials, triple_sum_coeffs, u_from_tau, TauMethod,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

const TABLE_INDICES: [u32; 10] = [1, 2, 3, 4, 5, 6, 11, 12, 13, 14];

#[derive(Debug, Parser)]
#[command(name = "painleve-series", version, about = "Series expansions for the first Painleve equation")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub g2: String,
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub g3: String,
    /// Truncation order (number of coefficients, or s_max for `triple-sum`).
    #[arg(long, global = true, default_value_t = 100)]
    pub terms: usize,
    /// Decimal digits for floating-point output.
    #[arg(long, global = true, default_value_t = 25)]
    pub digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Coefficient cache file, read if present and rewritten when extended.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Bilinear,
    Quartic,
    TripleSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Equianharmonic,
    Lemniscatic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laurent coefficients c_n, or the weighted polynomials P_n with --symbolic.
    Laurent {
        #[arg(long)]
        symbolic: bool,
    },
    /// Tau-function coefficients C_n.
    Tau {
        #[arg(long, value_enum, default_value_t = MethodArg::Bilinear)]
        method: MethodArg,
        #[arg(long)]
        symbolic: bool,
    },
    /// Triple-sum coefficients A_{l,m,n} up to s = --terms.
    TripleSum {
        #[arg(long)]
        check_integrality: bool,
    },
    /// Half-period, Eisenstein values from the Laurent series and the q-series, Hurwitz numbers.
    Elliptic {
        #[arg(long, value_enum, default_value_t = CaseArg::Equianharmonic)]
        case: CaseArg,
        #[arg(long, value_delimiter = ',', default_values_t = TABLE_INDICES)]
        n: Vec<u32>,
    },
    /// Pentagonal coefficients v_n, the constant gamma and F~_n.
    Pentagon {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE_INDICES)]
        n: Vec<u32>,
        /// Include wall-clock timings (makes output non-deterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Zeros of the truncated tau-function that survive a change of order.
    Poles,
    /// Cross-recursion and residual checks at the given parameters.
    Verify,
}

/// Named columns of string cells.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    fn new(name: &str, columns: &[&str]) -> Self {
        Section { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub command: String,
    pub meta: Vec<(String, String)>,
    pub sections: Vec<Section>,
}

impl Report {
    fn new(command: &str, params: &Params) -> Self {
        let mut r = Report { command: command.into(), ..Default::default() };
        r.meta("g2", format_fraction(&params.g2));
        r.meta("lambda", format_fraction(&params.lambda));
        r.meta("g3", format_fraction(&params.g3));
        r
    }

    fn meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.push((key.into(), value.into()));
    }

    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        let meta: Map<String, Value> = self.meta.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        root.insert("meta".into(), Value::Object(meta));
        for s in &self.sections {
            let rows = s
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        s.columns.iter().zip(row).map(|(c, v)| (c.clone(), Value::String(v.clone()))).collect();
                    Value::Object(obj)
                })
                .collect();
            root.insert(s.name.clone(), Value::Array(rows));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("string-only JSON");
        text.push('\n');
        text
    }

    /// Metadata as `# key=value` lines, then each section as a header row and
    /// data rows, prefixed by `# section` when there are several.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}={v}\n"));
        }
        for (i, s) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if self.sections.len() > 1 {
                out.push_str(&format!("# {}\n", s.name));
            }
            out.push_str(&csv_line(&s.columns));
            for row in &s.rows {
                out.push_str(&csv_line(row));
            }
        }
        out
    }
}

fn csv_line(cells: &[String]) -> String {
    let quoted: Vec<String> = cells
        .iter()
        .map(|c| if c.contains([',', '"', '\n']) { format!("\"{}\"", c.replace('"', "\"\"")) } else { c.clone() })
        .collect();
    format!("{}\n", quoted.join(","))
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::NumericalFailure { .. } | Error::NonGeneric(_) | Error::InsufficientOrder(_) | Error::Pole => {
            EXIT_NUMERICAL
        }
        Error::Inconsistency(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out` or the `--out` file. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let written = match &cli.common.out {
                Some(path) => fs::write(path, &text).map_err(Error::from),
                None => out.write_all(text.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if code == EXIT_VERIFY {
                let _ = writeln!(err, "verification failed");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn params_of(common: &CommonArgs) -> Result<Params> {
    Ok(Params::new(parse_rational(&common.g2)?, parse_rational(&common.lambda)?, parse_rational(&common.g3)?))
}

fn rational_rows(section: &mut Section, values: impl IntoIterator<Item = (usize, String)>) {
    for (i, v) in values {
        section.push(vec![i.to_string(), v]);
    }
}

/// Output text and exit code.
fn execute(cli: &Cli) -> Result<(String, i32)> {
    let common = &cli.common;
    let params = params_of(common)?;
    let n = common.terms;
    let digits = common.digits;
    if common.format == OutputFormat::Svg && !matches!(cli.command, Command::Poles) {
        return Err(Error::Unsupported("svg output is only available for `poles`".into()));
    }
    let mut code = EXIT_OK;
    let report = match &cli.command {
        Command::Laurent { symbolic } => {
            let mut r = Report::new("laurent", &params);
            let mut s = Section::new("coefficients", &["n", "value"]);
            if *symbolic {
                r.meta("symbolic", "true");
                rational_rows(&mut s, modular_polynomials(n).iter().map(|(i, p)| (i, p.to_string())));
            } else {
                let table = match &common.cache {
                    Some(path) => cached_table(path, &params, Recursion::Laurent, n, || {
                        laurent_coeffs(&params, n).table().clone()
                    })?,
                    None => laurent_coeffs(&params, n).table().clone(),
                };
                rational_rows(&mut s, table.iter().map(|(i, c)| (i, format_fraction(c))));
            }
            r.sections.push(s);
            r
        }
        Command::Tau { method, symbolic } => {
            let method = match method {
                MethodArg::Bilinear => TauMethod::Bilinear,
                MethodArg::Quartic => TauMethod::Quartic,
                MethodArg::TripleSum => TauMethod::TripleSum,
            };
            let mut r = Report::new("tau", &params);
            r.meta("method", method.name());
            let mut s = Section::new("coefficients", &["n", "value"]);
            if *symbolic {
                r.meta("symbolic", "true");
                rational_rows(&mut s, tau_polynomials(n, method).table().iter().map(|(i, p)| (i, p.to_string())));
            } else {
                let fresh = || tau_coeffs(&params, n, method).table().clone();
                let table = match (&common.cache, method) {
                    (Some(path), TauMethod::Bilinear) => cached_table(path, &params, Recursion::TauBilinear, n, fresh)?,
                    _ => fresh(),
                };
                rational_rows(&mut s, table.iter().map(|(i, c)| (i, format_fraction(c))));
            }
            r.sections.push(s);
            r
        }
        Command::TripleSum { check_integrality } => {
            let table = triple_sum_coeffs(n as u32);
            let mut r = Report::new("triple-sum", &params);
            r.meta("s_max", n.to_string());
            let mut s = Section::new("coefficients", &["l", "m", "n", "s", "value"]);
            for ((l, m, k), a) in table.entries() {
                let w = 4 * l + 5 * m + 6 * k + 1;
                s.push(vec![l.to_string(), m.to_string(), k.to_string(), w.to_string(), format_fraction(a)]);
            }
            r.sections.push(s);
            if *check_integrality {
                let bad = integrality_report(&table);
                r.meta("integrality_violations", bad.len().to_string());
                let mut v = Section::new("violations", &["l", "m", "n"]);
                for (l, m, k) in bad {
                    v.push(vec![l.to_string(), m.to_string(), k.to_string()]);
                }
                if !v.rows.is_empty() {
                    code = EXIT_VERIFY;
                }
                r.sections.push(v);
            }
            r
        }
        Command::Elliptic { case, n: ns } => elliptic_report(*case, ns, digits)?,
        Command::Pentagon { n: ns, timings } => {
            let count = n.max(ns.iter().copied().max().unwrap_or(0) as usize);
            let v = match &common.cache {
                Some(path) => cached_table(path, &Params::pentagonal(), Recursion::Pentagonal, count, || {
                    pentagonal_coeffs(count)
                })?,
                None => pentagonal_coeffs(count),
            };
            let gamma = gamma_constant(digits)?;
            let mut r = Report::new("pentagon", &Params::pentagonal());
            r.meta("gamma", format_truncated(&gamma.value, digits));
            r.meta("gamma_ratio", format_truncated(&gamma.ratio, digits));
            r.meta("gamma_ratio_n", gamma.ratio_n.to_string());
            r.meta("gamma_root", format_truncated(&gamma.root, digits));
            r.meta("gamma_root_order", gamma.root_order.to_string());
            r.meta("gamma_agreeing_digits", gamma.agreeing_digits.to_string());
            if *timings {
                r.meta("gamma_ratio_seconds", format!("{:.6}", gamma.ratio_time.as_secs_f64()));
                r.meta("gamma_root_seconds", format!("{:.6}", gamma.root_time.as_secs_f64()));
            }
            let mut vs = Section::new("v", &["n", "value"]);
            rational_rows(&mut vs, v.iter().map(|(i, c)| (i, format_fraction(c))));
            let precision = Precision::digits(digits + 10);
            let f = pentagonal_f_tilde(&v, &gamma.value, ns.iter().map(|&k| k as usize), precision);
            let mut fs = Section::new("f_tilde", &["n", "value"]);
            for (k, x) in ns.iter().zip(&f) {
                fs.push(vec![k.to_string(), format_truncated(x, digits)]);
            }
            r.sections.push(vs);
            r.sections.push(fs);
            r
        }
        Command::Poles => {
            let set = trusted_zeros(&params, n, digits)?;
            if common.format == OutputFormat::Svg {
                return Ok((pole_map_svg(&set)?, code));
            }
            if common.format == OutputFormat::Csv {
                return Ok((pole_map_csv(&set, digits)?, code));
            }
            let csv = pole_map_csv(&set, digits)?;
            let mut r = Report::new("poles", &params);
            r.meta("order", set.order.to_string());
            r.meta("comparison_order", set.comparison_order.to_string());
            r.meta("trust_radius", format_significant(&set.trust_radius, 12));
            r.meta("count", set.zeros.len().to_string());
            let mut s = Section::new("zeros", &["re", "im", "stability"]);
            for line in csv.lines().skip(1) {
                s.push(line.split(',').map(str::to_string).collect());
            }
            r.sections.push(s);
            r
        }
        Command::Verify => {
            let (r, ok) = verify_report(&params, n)?;
            if !ok {
                code = EXIT_VERIFY;
            }
            r
        }
    };
    let text = match common.format {
        OutputFormat::Csv => report.to_csv(),
        _ => report.to_json(),
    };
    Ok((text, code))
}

fn elliptic_report(case_arg: CaseArg, ns: &[u32], digits: u32) -> Result<Report> {
    let case = match case_arg {
        CaseArg::Equianharmonic => EllipticCase::equianharmonic(),
        CaseArg::Lemniscatic => EllipticCase::lemniscatic(),
    };
    let precision = Precision::digits(digits + 10);
    let mut r = Report::new("elliptic", &case.params());
    r.meta("case", case.kind().name());
    r.meta("omega1", format_truncated(&half_period(&case, precision)?, digits));
    r.meta("omega1_reference", format_truncated(&half_period_reference(&case, precision)?, digits));
    let k = case.symmetry_order();
    let tau = case.tau_modular(precision.bits())?;
    let mut s = Section::new("eisenstein", &["n", "weight", "laurent", "q_series"]);
    for (n, g) in eisenstein_table(&case, ns, precision)? {
        let q = eisenstein_q_oracle(&tau, n * k, precision)?;
        s.push(vec![n.to_string(), (n * k).to_string(), format_truncated(&g, digits), format_truncated(&q.re, digits)]);
    }
    r.sections.push(s);
    if case_arg == CaseArg::Lemniscatic {
        let count = ns.iter().copied().max().unwrap_or(0).min(10) as usize;
        let exact = hurwitz_numbers(count);
        let mut h = Section::new("hurwitz", &["n", "exact", "from_eisenstein"]);
        for (n, value) in exact.iter() {
            let bridge = hurwitz_bridge(n as u32, precision)?;
            h.push(vec![n.to_string(), format_fraction(value), format_significant(&bridge, digits)]);
        }
        r.sections.push(h);
    }
    Ok(r)
}

/// Runs every exact cross-check at order `n`; the flag is true when all pass.
pub fn verify_report(params: &Params, n: usize) -> Result<(Report, bool)> {
    if n < 8 {
        return Err(Error::Domain(format!("verify needs --terms >= 8, got {n}")));
    }
    let mut checks: Vec<(&str, bool, String)> = Vec::new();
    let laurent = laurent_coeffs(params, n);
    checks.push(("laurent-ode-residual", ode_residual(&laurent).is_zero(), format!("c_0..c_{n}")));

    let bilinear = tau_coeffs(params, n, TauMethod::Bilinear);
    let quartic = tau_coeffs(params, n, TauMethod::Quartic);
    let triple = tau_from_triple_sum(&triple_sum_coeffs(n as u32 + 1), params, n)?;
    checks.push(("tau-bilinear-equals-quartic", bilinear.coeffs() == quartic.coeffs(), format!("C_0..C_{n}")));
    checks.push(("tau-bilinear-equals-triple-sum", bilinear.coeffs() == triple.coeffs(), format!("C_0..C_{n}")));

    let round_trip = u_from_tau(&bilinear);
    let m = round_trip.order().min(n);
    checks.push((
        "u-from-tau-equals-laurent",
        round_trip.table().truncated(m).values() == laurent.table().truncated(m).values(),
        format!("c_0..c_{m}"),
    ));
    checks.push(("bilinear-residual", bilinear_residual(&bilinear).is_zero(), String::new()));
    checks.push(("quartic-residual", quartic_residual(&bilinear).is_zero(), String::new()));
    checks.push(("hamiltonian-identities", hamiltonian_check(&bilinear).vanishes(), String::new()));

    let s_max = n as u32 + 1;
    let bad = integrality_report(&triple_sum_coeffs(s_max));
    checks.push(("triple-sum-integrality", bad.is_empty(), format!("s <= {s_max}, {} violations", bad.len())));

    let weight = n.min(30);
    let homogeneity = euler_homogeneity_violations(&tau_polynomials(weight, TauMethod::Bilinear));
    checks.push(("symbolic-homogeneity", homogeneity.is_empty(), format!("weight <= {weight}")));

    let count = (n / 5).max(5);
    let v = pentagonal_coeffs(count);
    let extended = extend_pentagonal(v.truncated(count / 2), count);
    checks.push(("pentagonal-extension", extended == v, format!("v_1..v_{count}")));
    let w = twisted_w(&v, count);
    checks.push(("generating-function-ode", generating_function_residual(&w, v.values()).is_zero(), String::new()));

    let prefix = bilinear.coeffs()[..n / 2].to_vec();
    let resumed = extend_bilinear(params, prefix, n);
    checks.push(("tau-extension", resumed.coeffs() == bilinear.coeffs(), format!("C_{}..C_{n}", n / 2)));

    let mut r = Report::new("verify", params);
    r.meta("terms", n.to_string());
    let mut s = Section::new("checks", &["check", "status", "detail"]);
    let mut all = true;
    for (name, ok, detail) in checks {
        all &= ok;
        s.push(vec![name.into(), if ok { "pass" } else { "fail" }.into(), detail]);
    }
    r.meta("result", if all { "pass" } else { "fail" });
    r.sections.push(s);
    Ok((r, all))
}


//! Command-line front end.
//!
//! Every math subcommand produces a [`ResultEnvelope`], rendered as a table,
//! JSON or CSV. Exit codes: 0 success, 2 usage or domain error, 3 internal
//! invariant violation.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Number, Value};

use crate::chains::{self, SignConvention, TwistParams};
use crate::dims::{self, ModuliParams};
use crate::error::Error;
use crate::polyring::IntPolynomial;
use crate::ranktwo;
use crate::reproduce;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "higgs-betti",
    version,
    about = "Exact Betti numbers and fixed-point counts for Higgs bundle moduli spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub genus: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub degree: i64,
}

#[derive(Debug, Clone, Args)]
pub struct TwistArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub rank: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub twist: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub degree: i64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Dimensions of the moduli spaces, Hitchin base and spectral data.
    Dims {
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        degree: i64,
    },
    /// Poincaré polynomial of the symmetric product S^n X.
    Symprod {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        order: u32,
    },
    /// Poincaré polynomial of stable rank-2 bundles of odd degree.
    Bundles2 {
        #[command(flatten)]
        curve: CurveArgs,
        /// Fix the determinant (SL instead of GL).
        #[arg(long)]
        fixed_det: bool,
    },
    /// Poincaré polynomial of the rank-2 Higgs moduli space.
    Betti2 {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Poincaré polynomial of the PGL(2) Higgs moduli space.
    Pgl2 {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// List the (1,…,1) fixed points of twisted Higgs bundles on P¹.
    ChainsList {
        #[command(flatten)]
        twist: TwistArgs,
    },
    /// Count the (1,…,1) fixed points of twisted Higgs bundles on P¹.
    ChainsCount {
        #[command(flatten)]
        twist: TwistArgs,
    },
    /// Möbius-sum closed form Ω(r, q).
    Omega {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, default_value = "corrected", value_parser = SignConvention::from_str)]
        sign: SignConvention,
    },
    /// Size-r subsets of {1,…,2r−1} with sum ≡ residue (mod r).
    Subsets {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        residue: i64,
    },
    /// Plane partitions with at most two rows, n = 0..=nmax.
    Planepart {
        #[arg(long)]
        nmax: usize,
    },
    /// Compare fixed-point counts across several coprime degrees.
    Indep {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        degrees: Vec<i64>,
    },
    /// Run every bundled reproduction check.
    Reproduce,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dims { .. } => "dims",
            Command::Symprod { .. } => "symprod",
            Command::Bundles2 { .. } => "bundles2",
            Command::Betti2 { .. } => "betti2",
            Command::Pgl2 { .. } => "pgl2",
            Command::ChainsList { .. } => "chains-list",
            Command::ChainsCount { .. } => "chains-count",
            Command::Omega { .. } => "omega",
            Command::Subsets { .. } => "subsets",
            Command::Planepart { .. } => "planepart",
            Command::Indep { .. } => "indep",
            Command::Reproduce => "reproduce",
        }
    }
}

/// Typed result payload, serialized as `{"kind": ..., "value": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Payload {
    Integer(Number),
    /// Lowest exponent first.
    Coefficients(Vec<Number>),
    Vectors(Vec<Vec<i64>>),
    Report(Value),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope {
    pub command: String,
    pub params: Map<String, Value>,
    pub result: Payload,
    pub provenance: Vec<String>,
}

fn big(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integer literal is a valid JSON number")
}

fn coefficients(p: &IntPolynomial) -> Payload {
    Payload::Coefficients(p.coeffs().iter().map(big).collect())
}

fn params<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn require_coprime(rank: i64, degree: i64) -> crate::Result<()> {
    if rank >= 1 && rank.gcd(&degree) != 1 {
        return Err(Error::Domain(format!(
            "--degree {degree} is not coprime to --rank {rank}"
        )));
    }
    Ok(())
}

const LOCALIZATION: &str =
    "Morse-Bott localization: P[M](t) = sum of t^index P[C](t) over U(1)-fixed components";
const STABLE_BUNDLES: &str =
    "stable rank-2 bundles: ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4))";
const MACDONALD: &str = "Macdonald: coefficient of s^n in (1+st)^{2g} / ((1-s)(1-st^2))";
const CHAIN_PROBLEM: &str =
    "type (1,...,1) fixed points on P^1: sum d_i = d, d_i - d_{i+1} <= q, suffix slope < d/r";

/// Runs one subcommand and wraps its result in an envelope.
pub fn execute(cmd: &Command) -> crate::Result<ResultEnvelope> {
    let name = cmd.name().to_string();
    let (params, result, provenance): (Map<String, Value>, Payload, Vec<&str>) = match cmd {
        Command::Dims {
            genus,
            rank,
            degree,
        } => {
            let p = ModuliParams::new(*genus, *rank, *degree);
            let report = json!({
                "dim_moduli_gl": dims::dim_moduli_gl(&p)?,
                "dim_moduli_sl": dims::dim_moduli_sl(&p)?,
                "hitchin_base_dim_gl": dims::hitchin_base_dim(&p, false)?,
                "hitchin_base_dim_sl": dims::hitchin_base_dim(&p, true)?,
                "spectral_genus": dims::spectral_genus(&p)?,
                "pushforward_degree": dims::pushforward_degree(&p)?,
                "h0_canonical_powers": (1..=*rank)
                    .map(|i| dims::h0_canonical_power(*genus, i))
                    .collect::<crate::Result<Vec<_>>>()?,
                "coprime": p.is_coprime(),
            });
            (
                params([
                    ("genus", json!(genus)),
                    ("rank", json!(rank)),
                    ("degree", json!(degree)),
                ]),
                Payload::Report(report),
                vec![
                    "dim M(r,d) = 2r^2(g-1)+2; dim M^0(r,d) = 2(r^2-1)(g-1)",
                    "dim A_r = r^2(g-1)+1 = g'; h^0(w^i) = (2i-1)(g-1)",
                    "e = d - (1-g') + r(1-g)",
                ],
            )
        }
        Command::Symprod { genus, order } => (
            params([("genus", json!(genus)), ("order", json!(order))]),
            coefficients(&ranktwo::symprod_poincare(*genus, *order)),
            vec![MACDONALD],
        ),
        Command::Bundles2 { curve, fixed_det } => {
            let poly = if *fixed_det {
                ranktwo::stable_bundles_sl2(curve.genus, curve.degree)?
            } else {
                ranktwo::stable_bundles_gl2(curve.genus, curve.degree)?
            };
            (
                params([
                    ("genus", json!(curve.genus)),
                    ("degree", json!(curve.degree)),
                    (
                        "fixed_det",
                        json!(if *fixed_det { "true" } else { "false" }),
                    ),
                ]),
                coefficients(&poly),
                vec![STABLE_BUNDLES, "P[N(2,d)](t) = (1+t)^{2g} P[N^0(2,d)](t)"],
            )
        }
        Command::Betti2 { curve } => (
            params([
                ("genus", json!(curve.genus)),
                ("degree", json!(curve.degree)),
            ]),
            coefficients(&ranktwo::rank2_poincare(curve.genus, curve.degree)?),
            vec![
                LOCALIZATION,
                "(1,1) components: index 4b-2d+2g-2 over S^{d-2b+2g-2}X x Jac",
                STABLE_BUNDLES,
                MACDONALD,
            ],
        ),
        Command::Pgl2 { curve } => (
            params([
                ("genus", json!(curve.genus)),
                ("degree", json!(curve.degree)),
            ]),
            coefficients(&ranktwo::pgl2_poincare(curve.genus, curve.degree)?),
            vec![
                "PGL(2) moduli (Langlands dual): P[M(2,d)](t) / (1+t)^{2g}",
                LOCALIZATION,
            ],
        ),
        Command::ChainsList { twist } | Command::ChainsCount { twist } => {
            require_coprime(twist.rank, twist.degree)?;
            let p = TwistParams::new(twist.rank, twist.twist, twist.degree);
            let result = if matches!(cmd, Command::ChainsList { .. }) {
                Payload::Vectors(
                    chains::enumerate_chains(&p)?
                        .into_iter()
                        .map(|v| v.0)
                        .collect(),
                )
            } else {
                Payload::Integer(Number::from(chains::count_chains(&p)?))
            };
            (
                params([
                    ("rank", json!(twist.rank)),
                    ("twist", json!(twist.twist)),
                    ("degree", json!(twist.degree)),
                ]),
                result,
                vec![CHAIN_PROBLEM],
            )
        }
        Command::Omega { rank, twist, sign } => (
            params([
                ("rank", json!(rank)),
                ("twist", json!(twist)),
                ("sign", json!(sign.to_string())),
            ]),
            Payload::Integer(big(&chains::omega_closed_form(*rank, *twist, *sign)?)),
            vec![
                "Omega(r,q) = 1/((q+1)r^2) sum_{e|r} mu(r/e) C((q+1)e, e) sign(e)",
                "OEIS A131868 (q = 1)",
            ],
        ),
        Command::Subsets { rank, residue } => (
            params([("rank", json!(rank)), ("residue", json!(residue))]),
            Payload::Integer(big(&chains::subset_count(*rank, *residue)?)),
            vec!["OEIS A131868: r*Omega(r,1) = #size-r subsets of {1..2r-1} summing to 1 mod r"],
        ),
        Command::Planepart { nmax } => (
            params([("nmax", json!(nmax))]),
            Payload::Coefficients(
                chains::plane_partitions_two_rows(*nmax)
                    .iter()
                    .map(big)
                    .collect(),
            ),
            vec!["OEIS A000990: plane partitions of n with at most 2 rows"],
        ),
        Command::Indep {
            rank,
            twist,
            degrees,
        } => {
            let report = chains::degree_independence_check(*rank, *twist, degrees)?;
            let degrees_str = degrees
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            (
                params([
                    ("rank", json!(rank)),
                    ("twist", json!(twist)),
                    ("degrees", json!(degrees_str)),
                ]),
                Payload::Report(serde_json::to_value(report).expect("report serializes")),
                vec![
                    CHAIN_PROBLEM,
                    "Betti numbers of M(r,d) independent of coprime d",
                ],
            )
        }
        Command::Reproduce => {
            let summary = reproduce::run_all();
            (
                Map::new(),
                Payload::Report(serde_json::to_value(&summary).expect("summary serializes")),
                vec!["bundled reproduction suite"],
            )
        }
    };
    Ok(ResultEnvelope {
        command: name,
        params,
        result,
        provenance: provenance.into_iter().map(String::from).collect(),
    })
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_domain() {
        EXIT_USAGE
    } else {
        EXIT_INTERNAL
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_reproduce_table(report: &Value) -> String {
    let mut out = String::new();
    let checks = report["checks"].as_array().cloned().unwrap_or_default();
    for c in &checks {
        let ok = c["passed"].as_bool().unwrap_or(false);
        let _ = writeln!(
            out,
            "{} {} [{}]",
            if ok { "PASS" } else { "FAIL" },
            render_value(&c["name"]),
            render_value(&c["citation"]),
        );
        if !ok {
            let _ = writeln!(out, "     expected: {}", render_value(&c["expected"]));
            let _ = writeln!(out, "     actual:   {}", render_value(&c["actual"]));
        }
    }
    let _ = writeln!(
        out,
        "{} passed, {} failed",
        report["passed"], report["failed"]
    );
    out
}

fn render_table(env: &ResultEnvelope) -> String {
    let mut out = String::new();
    let params: Vec<String> = env
        .params
        .iter()
        .map(|(k, v)| format!("{k}={}", render_value(v)))
        .collect();
    let _ = writeln!(out, "# {} {}", env.command, params.join(" "));
    match &env.result {
        Payload::Integer(n) => {
            let _ = writeln!(out, "{n}");
        }
        Payload::Coefficients(cs) => {
            let poly = IntPolynomial::from_coeffs(
                cs.iter()
                    .map(|c| BigInt::from_str(&c.to_string()).expect("integer coefficient")),
            );
            let _ = writeln!(out, "{poly}");
            let _ = writeln!(out, "{:>8}  coefficient", "exponent");
            for (k, c) in cs.iter().enumerate() {
                let _ = writeln!(out, "{k:>8}  {c}");
            }
        }
        Payload::Vectors(vs) => {
            for v in vs {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "({})", items.join(","));
            }
            let _ = writeln!(out, "count: {}", vs.len());
        }
        Payload::Report(v) if env.command == "reproduce" => {
            out.push_str(&render_reproduce_table(v));
        }
        Payload::Report(Value::Object(m)) => {
            for (k, v) in m {
                let _ = writeln!(out, "{k}: {}", render_value(v));
            }
        }
        Payload::Report(v) => {
            let _ = writeln!(out, "{}", render_value(v));
        }
    }
    out
}

fn render_csv(env: &ResultEnvelope) -> String {
    let mut out = String::new();
    match &env.result {
        Payload::Integer(n) => {
            let _ = writeln!(out, "value\n{n}");
        }
        Payload::Coefficients(cs) => {
            out.push_str("exponent,coefficient\n");
            for (k, c) in cs.iter().enumerate() {
                let _ = writeln!(out, "{k},{c}");
            }
        }
        Payload::Vectors(vs) => {
            let width = vs.first().map_or(0, Vec::len);
            let header: Vec<String> = (1..=width).map(|i| format!("d{i}")).collect();
            let _ = writeln!(out, "{}", header.join(","));
            for v in vs {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{}", items.join(","));
            }
        }
        Payload::Report(v) if env.command == "reproduce" => {
            out.push_str("name,passed,expected,actual\n");
            for c in v["checks"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(&render_value(&c["name"])),
                    c["passed"],
                    csv_field(&render_value(&c["expected"])),
                    csv_field(&render_value(&c["actual"])),
                );
            }
        }
        Payload::Report(v) => {
            out.push_str("key,value\n");
            if let Value::Object(m) = v {
                for (k, val) in m {
                    let _ = writeln!(out, "{k},{}", csv_field(&render_value(val)));
                }
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render(env: &ResultEnvelope, format: Format) -> String {
    match format {
        Format::Table => render_table(env),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(env).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(env),
    }
}

/// Full CLI run: returns the text for stdout, the text for stderr, and the
/// exit code.
pub fn run(cli: &Cli) -> (String, String, i32) {
    match execute(&cli.command) {
        Ok(env) => {
            let code = match (&cli.command, &env.result) {
                (Command::Reproduce, Payload::Report(v)) => {
                    if v["failed"].as_u64() == Some(0) {
                        EXIT_OK
                    } else {
                        EXIT_INTERNAL
                    }
                }
                _ => EXIT_OK,
            };
            (render(&env, cli.format), String::new(), code)
        }
        Err(e) => (String::new(), format!("error: {e}\n"), exit_code(&e)),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                (String::new(), text, code)
            } else {
                (text, String::new(), code)
            }
        }
    }
}

//! `overpoly`: command-line front end to the overpartition polynomial
//! library.

mod format;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use overpoly::curves;
use overpoly::enumerator::{self, PartConfig};
use overpoly::polyring::{default_var_names, LaurentPoly, MultiPoly, UniPoly};
use overpoly::sequences;
use overpoly::specializations::{self as sp, FactorVariant};
use overpoly::verify;
use overpoly::zeros::{self, ComplexPoint, Family};
use overpoly::Error;

use format::g12;

#[derive(Parser)]
#[command(
    name = "overpoly",
    version,
    about = "Restricted b-ary overpartition polynomials"
)]
struct Cli {
    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE. The values `csv` and `json` select the format
    /// instead.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    /// Residual tolerance for root finding.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum Special {
    Qx,
    Rx,
    Qz,
    Rz,
    Qtilde,
    Rtilde,
    Q1,
}

#[derive(Subcommand)]
enum Command {
    /// The polynomial p_n in base b.
    Poly {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        n: BigUint,
        /// Comma-separated variable names.
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        eval_all_ones: bool,
    },
    /// Q_n or R_n in base b.
    Qr {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        eval_all_ones: bool,
    },
    /// Univariate specializations.
    Special {
        #[arg(long, value_enum)]
        family: Special,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<i64>,
        /// Base for the diagonal families.
        #[arg(long, default_value_t = 2)]
        b: u32,
        /// Cyclotomic factor list (q1 with alpha = 1, beta = 1 or 2).
        #[arg(long)]
        factor: bool,
    },
    /// Enumerate overpartitions of n.
    Enum {
        #[arg(long)]
        b: u32,
        /// Multiplicity bound on plain parts; defaults to b.
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        count: bool,
        /// Write repeated plain parts as v^k.
        #[arg(long)]
        compact: bool,
    },
    /// Numerical zeros of a univariate family.
    Zeros {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
    },
    /// Zero-locus curve f_{alpha,beta} and sample points on it.
    Curve {
        #[arg(
            long,
            allow_hyphen_values = true,
            required_unless_present = "check_table"
        )]
        alpha: Option<i64>,
        #[arg(
            long,
            allow_hyphen_values = true,
            required_unless_present = "check_table"
        )]
        beta: Option<i64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Derive every tabulated curve and compare.
        #[arg(long, alias = "check-table6")]
        check_table: bool,
    },
    /// Run verification suites.
    Verify {
        /// `all` or a comma-separated list of suite names.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap on every n-range.
        #[arg(long)]
        nmax: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityViolation { .. } | Error::NoConvergence { .. } => {
                Failure::Violation(format!("{e}\n"))
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, file) = match cli.out.as_deref() {
        Some("csv") => (Some(Format::Csv), None),
        Some("json") => (Some(Format::Json), None),
        other => (cli.format, other.map(str::to_string)),
    };
    let result = run(&cli.command, format, cli.tol);
    let (text, code) = match result {
        Ok(text) => (text, 0),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Violation(report)) => (report, 1),
    };
    let written = match file {
        Some(path) => fs::write(&path, &text).map_err(|e| format!("{path}: {e}")),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn run(cmd: &Command, format: Option<Format>, tol: Option<f64>) -> Outcome {
    match cmd {
        Command::Poly {
            b,
            n,
            vars,
            eval_all_ones,
        } => {
            let p = sequences::p_poly(*b, n)?;
            emit_multi(&p, vars.as_deref(), *eval_all_ones, format)
        }
        Command::Qr {
            b,
            n,
            kind,
            vars,
            eval_all_ones,
        } => {
            let p = match kind {
                Kind::Q => sequences::Q_poly(*b, *n)?,
                Kind::R => sequences::R_poly(*b, *n)?,
            };
            emit_multi(&p, vars.as_deref(), *eval_all_ones, format)
        }
        Command::Special {
            family,
            n,
            alpha,
            beta,
            b,
            factor,
        } => special(*family, *n, (*alpha, *beta), *b, *factor, format),
        Command::Enum {
            b,
            lambda,
            n,
            count,
            compact,
        } => enumerate(*b, lambda.unwrap_or(*b), *n, *count, *compact, format),
        Command::Zeros { family, n } => {
            let fam = Family::parse(family)
                .ok_or_else(|| Failure::Usage(format!("unknown family `{family}`")))?;
            let p = fam.poly(*n)?;
            if p.degree() < 1 {
                return Err(Failure::Usage(format!("{family} at n = {n} is constant")));
            }
            let tol = tol.unwrap_or(zeros::DEFAULT_TOL);
            let pts = zeros::roots(&p, tol)?;
            Ok(emit_points(&pts, format.unwrap_or(Format::Csv)))
        }
        Command::Curve {
            alpha,
            beta,
            samples,
            check_table,
        } => {
            if *check_table {
                curves::check_curve_table()?;
                return Ok(format!(
                    "all {} tabulated curves match\n",
                    curves::CURVE_TABLE.len()
                ));
            }
            let (a, b) = (alpha.expect("required"), beta.expect("required"));
            curve(a, b, *samples, format)
        }
        Command::Verify { suite, nmax } => run_verify(suite, *nmax, format),
    }
}

fn var_names(p: &MultiPoly, vars: Option<&str>) -> Result<Vec<String>, Failure> {
    match vars {
        None => Ok(default_var_names(p.arity())),
        Some(list) => {
            let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            if names.len() != p.arity() || names.iter().any(String::is_empty) {
                return Err(Failure::Usage(format!(
                    "--vars needs {} names, got `{list}`",
                    p.arity()
                )));
            }
            Ok(names)
        }
    }
}

fn emit_multi(
    p: &MultiPoly,
    vars: Option<&str>,
    all_ones: bool,
    format: Option<Format>,
) -> Outcome {
    let json = format == Some(Format::Json);
    if all_ones {
        let v = p.eval_all_ones();
        return Ok(if json {
            format!("{}\n", json!({ "all_ones": v.to_string() }))
        } else {
            format!("{v}\n")
        });
    }
    if json {
        return Ok(format!("{}\n", p.to_json()));
    }
    let names = var_names(p, vars)?;
    Ok(format!("{}\n", p.display_with(&names)))
}

fn uni_json(p: &UniPoly) -> Value {
    MultiPoly::from_uni(p, 1, 0).to_json_value()
}

fn render_laurent(l: &LaurentPoly) -> String {
    if l.low() >= 0 {
        return l
            .to_poly()
            .expect("polynomial")
            .display_var("z")
            .to_string();
    }
    format!("z^({})*({})", l.low(), l.body().display_var("z"))
}

fn special(
    family: Special,
    n: u32,
    (alpha, beta): (Option<i64>, Option<i64>),
    b: u32,
    factor: bool,
    format: Option<Format>,
) -> Outcome {
    let json = format == Some(Format::Json);
    if factor {
        let variant = match (family, alpha, beta) {
            (Special::Q1, Some(1), Some(1)) => FactorVariant::Zz,
            (Special::Q1, Some(1), Some(2)) => FactorVariant::Zz2,
            _ => {
                return Err(Failure::Usage(
                    "--factor needs --family q1 --alpha 1 --beta 1|2".into(),
                ))
            }
        };
        let fs = sp::factor_Q1(n, variant)?;
        return Ok(if json {
            format!("{}\n", Value::Array(fs.iter().map(uni_json).collect()))
        } else {
            fs.iter()
                .map(|f| format!("{}\n", f.display_var("z")))
                .collect()
        });
    }
    let p = match family {
        Special::Qx => sp::Qx(n),
        Special::Rx => sp::Rx(n),
        Special::Qz => sp::QZ_sequence_base(b, n)?.pop().expect("non-empty"),
        Special::Rz => sp::RZ_sequence_base(b, n)?.pop().expect("non-empty"),
        Special::Qtilde => sp::Qtilde(n)?,
        Special::Rtilde => sp::Rtilde(n)?,
        Special::Q1 => {
            let (Some(a), Some(bb)) = (alpha, beta) else {
                return Err(Failure::Usage("q1 needs --alpha and --beta".into()));
            };
            if a == 0 && bb == 0 {
                return Err(Failure::Usage("(alpha, beta) = (0, 0) is excluded".into()));
            }
            let l = sp::q1_laurent(n, a, bb);
            return Ok(if json {
                format!(
                    "{}\n",
                    json!({ "low": l.low(), "poly": uni_json(l.body()) })
                )
            } else {
                format!("{}\n", render_laurent(&l))
            });
        }
    };
    let var = if matches!(family, Special::Qx | Special::Rx) {
        "x"
    } else {
        "z"
    };
    Ok(if json {
        format!("{}\n", uni_json(&p))
    } else {
        format!("{}\n", p.display_var(var))
    })
}

fn enumerate(
    b: u32,
    lambda: u32,
    n: u64,
    count: bool,
    compact: bool,
    format: Option<Format>,
) -> Outcome {
    let cfg = PartConfig::new(b, lambda)?;
    let parts = enumerator::enumerate(&cfg, n);
    let json = format == Some(Format::Json);
    if count {
        return Ok(if json {
            format!("{}\n", json!({ "count": parts.len() }))
        } else {
            format!("{}\n", parts.len())
        });
    }
    let rendered: Vec<String> = parts.iter().map(|p| p.render(&cfg, compact)).collect();
    Ok(if json {
        format!("{}\n", json!(rendered))
    } else {
        rendered.iter().map(|r| format!("{r}\n")).collect()
    })
}

fn num(x: f64) -> Value {
    g12(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

fn emit_points(pts: &[ComplexPoint], format: Format) -> String {
    match format {
        Format::Json => {
            let arr: Vec<Value> = pts
                .iter()
                .map(|p| json!({ "re": num(p.re), "im": num(p.im), "residual": num(p.residual) }))
                .collect();
            format!("{}\n", Value::Array(arr))
        }
        Format::Csv => {
            let mut s = String::from("re,im,residual\n");
            for p in pts {
                s.push_str(&format!(
                    "{},{},{}\n",
                    g12(p.re),
                    g12(p.im),
                    g12(p.residual)
                ));
            }
            s
        }
        Format::Text => {
            let rows: Vec<[String; 3]> = pts
                .iter()
                .map(|p| [g12(p.re), g12(p.im), g12(p.residual)])
                .collect();
            let w: Vec<usize> = (0..3)
                .map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0).max(8))
                .collect();
            let mut s = format!(
                "{:>w0$}  {:>w1$}  {:>w2$}\n",
                "re",
                "im",
                "residual",
                w0 = w[0],
                w1 = w[1],
                w2 = w[2]
            );
            for r in rows {
                s.push_str(&format!(
                    "{:>w0$}  {:>w1$}  {:>w2$}\n",
                    r[0],
                    r[1],
                    r[2],
                    w0 = w[0],
                    w1 = w[1],
                    w2 = w[2]
                ));
            }
            s
        }
    }
}

fn curve(alpha: i64, beta: i64, samples: usize, format: Option<Format>) -> Outcome {
    let f = curves::derive_curve(alpha, beta)?;
    let pts = curves::sample_curve(alpha, beta, samples)?;
    if format == Some(Format::Json) {
        let samples: Vec<Value> = pts.iter().map(|&(x, y)| json!([num(x), num(y)])).collect();
        let doc = json!({
            "alpha": alpha,
            "beta": beta,
            "text": f.to_string(),
            "poly": f.to_json_value(),
            "samples": samples,
        });
        return Ok(format!("{doc}\n"));
    }
    let mut s = format!("# f = {f}\nx,y\n");
    for (x, y) in pts {
        s.push_str(&format!("{},{}\n", g12(x), g12(y)));
    }
    Ok(s)
}

fn run_verify(suite: &str, nmax: Option<u32>, format: Option<Format>) -> Outcome {
    let chosen: Vec<&'static verify::Suite> = if suite == "all" {
        verify::SUITES.iter().collect()
    } else {
        suite
            .split(',')
            .map(|name| {
                verify::find(name.trim()).ok_or_else(|| {
                    let known: Vec<&str> = verify::SUITES.iter().map(|s| s.name).collect();
                    Failure::Usage(format!(
                        "unknown suite `{name}`; known: all, {}",
                        known.join(", ")
                    ))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let outcomes = verify::run_suites(&chosen, nmax);
    let all_pass = outcomes.iter().all(|o| o.pass);
    let text = if format == Some(Format::Json) {
        // Timings vary run to run; they are left out of machine output.
        let arr: Vec<Value> = outcomes
            .iter()
            .map(|o| json!({ "suite": o.suite, "pass": o.pass, "detail": o.detail }))
            .collect();
        format!("{}\n", json!({ "pass": all_pass, "suites": arr }))
    } else {
        let passed = outcomes.iter().filter(|o| o.pass).count();
        format!(
            "{}{passed}/{} suites passed\n",
            verify::render_table(&outcomes),
            outcomes.len()
        )
    };
    if all_pass {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

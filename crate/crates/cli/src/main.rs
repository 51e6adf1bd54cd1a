//! `plethyx`: command-line front end for the plethyx library.
//!
//! Exit codes: 0 ok, 1 verification mismatch, 2 usage, parse or scope
//! error, 3 resource cap exceeded, 4 internal disagreement between methods.

use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use plethyx::formulas::{
    count_restriction_tuples, frobenius_e_closed, frobenius_h_closed, frobenius_three_columns,
    plethysm_coeff_hr_closed, restriction_via_main,
};
use plethyx::plethysm::{frobenius_oracle, plethysm, plethysm_adjoint, restriction_oracle};
use plethyx::schur::{e_to_schur, h_to_schur, hall_inner, pieri_e, pieri_h};
use plethyx::tableaux::enumerate_lr_tableaux;
use plethyx::verify::{
    monomial_substitution_plethysm, sweep_frobenius_he, sweep_he_h_perp, sweep_plethysm_hr,
    sweep_plethysm_laws, sweep_restriction, sweep_ring, sweep_s_h_perp, SweepReport,
};
use plethyx::{Error, IntVector, Partition, SchurPoly, SkewShape};
use serde_json::{json, Value};

const DEFAULT_CAP: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "plethyx",
    version,
    about = "Exact symmetric-function computations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Number of worker threads (default: all cores).
    #[arg(long, global = true)]
    parallelism: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Tuples,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    PlethysmHr,
    Restriction,
    HeHPerp,
    FHe,
    SHPerp,
    Ring,
    PlethysmLaws,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^λ_{μ,ν}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        /// Also list the LR tableaux of shape λ/μ and content ν.
        #[arg(long)]
        show_tableaux: bool,
    },
    /// s_λ · h_r, or s_λ · e_r with --e.
    Pieri {
        lambda: Partition,
        r: usize,
        #[arg(long)]
        e: bool,
    },
    /// Plethysm f[g] for f, g of the form s:λ, h:a,b,.. or e:a,b,..
    Plethysm {
        f: Spec,
        g: Spec,
        /// closed: power-sum substitution; oracle: monomial substitution.
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// ⟨s_λ, s_μ[h_r]⟩ by the closed formula (needs λ_1 ≤ r+1).
    PlethCoeff {
        lambda: Partition,
        mu: Partition,
        r: usize,
        /// Fall back to brute-force plethysm when outside the formula's scope.
        #[arg(long)]
        oracle: bool,
    },
    /// f[g^⊥] = Σ_μ ⟨f, s_μ[g]⟩ s_μ.
    Adjoint { f: Spec, g: Spec },
    /// f[H^⊥], the Frobenius transform of the restriction to S_n.
    Frobenius {
        f: Spec,
        /// Truncation degree for the oracle (default: deg f + 3).
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Restriction coefficient r_λ^μ.
    Restriction {
        lambda: Partition,
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// All nonzero r_λ^μ with |μ| ≤ max-mu (needs λ_1 ≤ 3).
    Table {
        lambda: Partition,
        #[arg(long)]
        max_mu: usize,
    },
    /// Run an exhaustive comparison sweep.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_size: usize,
    },
}

/// A symmetric function given on the command line.
#[derive(Clone, Debug)]
enum Spec {
    S(Partition),
    H(IntVector),
    E(IntVector),
}

impl FromStr for Spec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected s:λ, h:r or e:r, got {s:?}")))?;
        match kind.trim() {
            "s" => Ok(Spec::S(rest.parse()?)),
            "h" => Ok(Spec::H(rest.parse()?)),
            "e" => Ok(Spec::E(rest.parse()?)),
            other => Err(Error::Parse(format!("unknown basis {other:?} in {s:?}"))),
        }
    }
}

impl Spec {
    fn to_schur(&self) -> SchurPoly {
        match self {
            Spec::S(l) => SchurPoly::s(l.clone()),
            Spec::H(v) => h_to_schur(v),
            Spec::E(v) => e_to_schur(v),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Spec::S(l) => l.size(),
            Spec::H(v) | Spec::E(v) => v.size(),
        }
    }
}

enum Failure {
    Lib(Error),
    Mismatch,
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    format: Format,
}

impl Out {
    /// Prints `text` or `json` depending on the format.
    fn emit(&self, text: impl Display, json: impl FnOnce() -> Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Json => println!("{}", serde_json::to_string(&json()).expect("serializable")),
        }
    }
}

fn cap() -> Result<usize, Error> {
    match std::env::var("PLETHYX_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("PLETHYX_CAP={v:?}: {e}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn agree<T: PartialEq + Display>(what: &str, values: &[(&str, T)]) -> Outcome {
    if values.windows(2).all(|w| w[0].1 == w[1].1) {
        return Ok(());
    }
    let listing: Vec<String> = values.iter().map(|(m, v)| format!("{m}={v}")).collect();
    Err(Failure::Disagreement(format!(
        "{what}: {}",
        listing.join(", ")
    )))
}

fn cmd_lr(out: &Out, lambda: Partition, mu: Partition, nu: Partition, show: bool) -> Outcome {
    let tableaux = if lambda.contains(&mu) && lambda.size() == mu.size() + nu.size() {
        enumerate_lr_tableaux(&SkewShape::new(lambda, mu)?, &nu)
    } else {
        Vec::new()
    };
    let n = tableaux.len();
    let mut text = n.to_string();
    if show {
        for t in &tableaux {
            text.push_str(&format!("\n{t}"));
        }
    }
    out.emit(text, || {
        let mut v = json!({ "value": n });
        if show {
            v["tableaux"] = tableaux
                .iter()
                .map(|t| Value::from(t.to_string()))
                .collect();
        }
        v
    });
    Ok(())
}

fn cmd_pieri(out: &Out, lambda: Partition, r: usize, e: bool) -> Outcome {
    let p = if e {
        pieri_e(r, &lambda)
    } else {
        pieri_h(r, &lambda)
    };
    out.emit(&p, || json!(p));
    Ok(())
}

fn cmd_plethysm(out: &Out, f: Spec, g: Spec, method: Method) -> Outcome {
    let (f, g) = (f.to_schur(), g.to_schur());
    let result = match method {
        Method::Closed => plethysm(&f, &g)?,
        Method::Oracle => monomial_substitution_plethysm(&f, &g, cap()?)?,
        Method::All => {
            let a = plethysm(&f, &g)?;
            let b = monomial_substitution_plethysm(&f, &g, cap()?)?;
            agree("plethysm", &[("power-sum", &a), ("monomial", &b)])?;
            a
        }
        Method::Tuples => {
            return Err(Error::InvalidArgument(
                "--method tuples applies to restriction only".into(),
            )
            .into())
        }
    };
    out.emit(&result, || json!(result));
    Ok(())
}

fn cmd_pleth_coeff(out: &Out, lambda: Partition, mu: Partition, r: usize, oracle: bool) -> Outcome {
    let value = match plethysm_coeff_hr_closed(&lambda, &mu, r) {
        Ok(v) => v.into(),
        Err(Error::OutOfScope(_)) if oracle => hall_inner(
            &SchurPoly::s(lambda),
            &plethysm(&SchurPoly::s(mu), &SchurPoly::h(r))?,
        ),
        Err(e) => return Err(e.into()),
    };
    out.emit(
        &value,
        || json!({ "value": value.to_string().parse::<i64>().ok() }),
    );
    Ok(())
}

fn cmd_adjoint(out: &Out, f: Spec, g: Spec) -> Outcome {
    let result = plethysm_adjoint(&f.to_schur(), &g.to_schur())?;
    out.emit(&result, || json!(result));
    Ok(())
}

fn frobenius_closed(f: &Spec, max_degree: usize) -> Result<plethyx::HPrefixedSeries, Error> {
    match f {
        Spec::S(l) => frobenius_three_columns(l, max_degree),
        Spec::H(v) => Ok(frobenius_h_closed(v, max_degree)),
        Spec::E(v) => Ok(frobenius_e_closed(v, max_degree)),
    }
}

fn cmd_frobenius(out: &Out, f: Spec, max_degree: Option<usize>, method: Method) -> Outcome {
    let max = max_degree.unwrap_or(f.degree() + 3);
    match method {
        Method::Closed => {
            let series = frobenius_closed(&f, max)?;
            out.emit(&series, || json!(series));
        }
        Method::Oracle => {
            let series = frobenius_oracle(&f.to_schur(), max)?;
            out.emit(&series, || json!(series));
        }
        Method::All => {
            let closed = frobenius_closed(&f, max)?;
            let oracle = frobenius_oracle(&f.to_schur(), max)?;
            agree(
                "frobenius",
                &[("closed", closed.expand(max)), ("oracle", oracle.clone())],
            )?;
            out.emit(&closed, || json!(closed));
        }
        Method::Tuples => {
            return Err(Error::InvalidArgument(
                "--method tuples applies to restriction only".into(),
            )
            .into())
        }
    }
    Ok(())
}

fn cmd_restriction(out: &Out, lambda: Partition, mu: Partition, method: Method) -> Outcome {
    let values: Vec<(&str, String)> = match method {
        Method::Closed => vec![("closed", restriction_via_main(&lambda, &mu)?.to_string())],
        Method::Tuples => vec![(
            "tuples",
            count_restriction_tuples(&lambda, &mu)?.to_string(),
        )],
        Method::Oracle => vec![("oracle", restriction_oracle(&lambda, &mu)?.to_string())],
        Method::All => {
            let mut v = Vec::new();
            if lambda.first() <= 3 {
                v.push(("closed", restriction_via_main(&lambda, &mu)?.to_string()));
                v.push((
                    "tuples",
                    count_restriction_tuples(&lambda, &mu)?.to_string(),
                ));
            }
            v.push(("oracle", restriction_oracle(&lambda, &mu)?.to_string()));
            v
        }
    };
    agree("restriction", &values)?;
    let text: Vec<&str> = values.iter().map(|(_, v)| v.as_str()).collect();
    out.emit(text.join(" "), || {
        let mut obj = serde_json::Map::new();
        for (m, v) in &values {
            obj.insert((*m).into(), json!(v.parse::<i64>().ok()));
        }
        Value::Object(obj)
    });
    Ok(())
}

fn cmd_table(out: &Out, lambda: Partition, max_mu: usize) -> Outcome {
    let series = frobenius_three_columns(&lambda, max_mu)?.expand(max_mu);
    let rows: Vec<(&Partition, String)> = series
        .value()
        .canonical_terms()
        .map(|(mu, c)| (mu, c.to_string()))
        .collect();
    let mut text = String::new();
    for (i, (mu, c)) in rows.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        text.push_str(&format!("({mu})\t{c}"));
    }
    out.emit(text, || {
        json!({
            "lambda": lambda.parts(),
            "rows": rows
                .iter()
                .map(|(mu, c)| json!({ "mu": mu.parts(), "value": c.parse::<i64>().ok() }))
                .collect::<Vec<_>>(),
        })
    });
    Ok(())
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::PlethysmHr => "plethysm-hr",
        Suite::Restriction => "restriction",
        Suite::HeHPerp => "he-h-perp",
        Suite::FHe => "f-he",
        Suite::SHPerp => "s-h-perp",
        Suite::Ring => "ring",
        Suite::PlethysmLaws => "plethysm-laws",
    }
}

fn cmd_verify(out: &Out, suite: Suite, max_size: usize) -> Outcome {
    let report: SweepReport = match suite {
        Suite::PlethysmHr => sweep_plethysm_hr(max_size, 4)?,
        Suite::Restriction => sweep_restriction(max_size, max_size)?,
        Suite::HeHPerp => sweep_he_h_perp(max_size)?,
        Suite::FHe => sweep_frobenius_he(max_size)?,
        Suite::SHPerp => sweep_s_h_perp(max_size, 6)?,
        Suite::Ring => sweep_ring(max_size)?,
        Suite::PlethysmLaws => sweep_plethysm_laws(max_size)?,
    };
    let name = suite_name(suite);
    // Timing goes to stderr so that stdout is identical between runs.
    eprintln!("{name}: {:.3}s", report.elapsed.as_secs_f64());
    let mut text = format!(
        "{name}: checked={} mismatches={}",
        report.checked,
        report.mismatches.len()
    );
    for m in &report.mismatches {
        text.push_str(&format!(
            "\n  {}: closed {} oracle {}",
            m.input, m.closed, m.oracle
        ));
    }
    out.emit(text, || {
        let mut v = report.to_json_without_timing();
        v["suite"] = Value::from(name);
        v
    });
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Outcome {
    let out = Out { format: cli.format };
    match cli.command {
        Command::Lr {
            lambda,
            mu,
            nu,
            show_tableaux,
        } => cmd_lr(&out, lambda, mu, nu, show_tableaux),
        Command::Pieri { lambda, r, e } => cmd_pieri(&out, lambda, r, e),
        Command::Plethysm { f, g, method } => cmd_plethysm(&out, f, g, method),
        Command::PlethCoeff {
            lambda,
            mu,
            r,
            oracle,
        } => cmd_pleth_coeff(&out, lambda, mu, r, oracle),
        Command::Adjoint { f, g } => cmd_adjoint(&out, f, g),
        Command::Frobenius {
            f,
            max_degree,
            method,
        } => cmd_frobenius(&out, f, max_degree, method),
        Command::Restriction { lambda, mu, method } => cmd_restriction(&out, lambda, mu, method),
        Command::Table { lambda, max_mu } => cmd_table(&out, lambda, max_mu),
        Command::Verify { suite, max_size } => cmd_verify(&out, suite, max_size),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.parallelism {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Disagreement(msg)) => {
            eprintln!("error: methods disagree: {msg}");
            ExitCode::from(4)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                Error::NonIntegral { .. } => 4,
                _ => 2,
            })
        }
    }
}

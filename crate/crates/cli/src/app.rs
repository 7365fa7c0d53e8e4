use std::fmt::Write;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use jackpow::jack::{binom, jack, pieri_c, theta};
use jackpow::partitions::enumerate_partitions;
use jackpow::rect::{extension_divisibility, rect_boundary, rect_recurrence, Which};
use jackpow::theta::{
    alpha_to_beta, rect_theta_symbolic, theorem2_sum, theta_hat_general, AuditSummary, RectMode,
};
use jackpow::verify::{self, Check, DefaultSource, Sampling};
use jackpow::{Basis, Partition};
use serde_json::json;

use crate::golden;
use crate::render::{Format, Output};

#[derive(Parser, Debug)]
#[command(
    name = "jackpow",
    version,
    about = "Exact power-sum coefficients of Jack polynomials"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub output: Format,
    /// Seed for sampled sweeps.
    #[arg(long, default_value_t = 42, global = true)]
    pub seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest weight for full Jack expansions.
    #[arg(
        long,
        env = "JACK_MAX_WEIGHT",
        default_value_t = 8,
        value_parser = clap::value_parser!(u64).range(1..),
        global = true
    )]
    pub max_weight: u64,
    /// Attach per-report runtimes.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partitions of n in reverse lexicographic order.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Only partitions contained in this shape.
        #[arg(long)]
        inside: Option<Partition>,
    },
    #[command(subcommand)]
    Jack(JackCmd),
    #[command(subcommand)]
    Theta(ThetaCmd),
    #[command(subcommand)]
    Rect(RectCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BasisArg {
    P,
    M,
}

#[derive(Subcommand, Debug)]
pub enum JackCmd {
    /// J_lambda in the power-sum or monomial basis.
    Expand {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
    },
    /// Coefficient of p_rho in J_lambda.
    Theta {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        rho: Partition,
    },
    /// Generalized binomial coefficient.
    Binom {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Coefficient of J at lambda with a box added in row i, in p_1 J_lambda.
    Pieri {
        #[arg(long)]
        lambda: Partition,
        /// Row index, starting at 1.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        i: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Interpolate,
    Closed,
}

#[derive(Subcommand, Debug)]
pub enum ThetaCmd {
    /// Normalized coefficient at lambda; mu may contain parts 1.
    Hat {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Symbolic value on m rectangles with the coefficient audit of its positive form.
    Rect {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=3))]
        m: u64,
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = ModeArg::Interpolate)]
        mode: ModeArg,
    },
    /// Rising-factorial sum in (p, q, alpha) with the audit in (p, q, beta).
    Thm2 {
        #[arg(long)]
        mu: Partition,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum WhichArg {
    AddRowTop,
    AddRowBottom,
    RemoveBox,
}

impl From<WhichArg> for Which {
    fn from(w: WhichArg) -> Which {
        match w {
            WhichArg::AddRowTop => Which::AddRowTop,
            WhichArg::AddRowBottom => Which::AddRowBottom,
            WhichArg::RemoveBox => Which::RemoveBox,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum RectCmd {
    /// Value on the p x q rectangle from the recurrence, in (p, q, alpha, beta).
    Theta {
        #[arg(long)]
        mu: Partition,
        /// Treat beta as a free parameter instead of alpha - 1.
        #[arg(long)]
        independent_beta: bool,
    },
    /// Value on a shape one box away from the rectangle.
    Boundary {
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long)]
        independent_beta: bool,
    },
    /// Value at concrete (p, q) and its divisibility by alpha - beta - 1.
    Divisibility {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Identity checkers over all valid parameters up to a weight.
    Identities {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Restrict to these checks (repeatable).
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<Check>,
        /// Run a seeded sample of this many cases per check.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Positivity audit on m rectangles for indices without parts 1.
    Conjecture1 {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=3))]
        m: u64,
        #[arg(long, default_value_t = 4)]
        mu_max: usize,
    },
    /// Recurrence table relations as four-variable identities.
    Table6,
    /// Rising-factorial sum: positivity, integrality, known expansion.
    Thm2 {
        #[arg(long)]
        mu: Partition,
    },
    /// Single- and two-rectangle positive forms against known expressions.
    Displays,
    /// Nonnegativity of the single-rectangle positive form.
    Positivity {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Two-parameter extension checks.
    Extension {
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
    /// Compare command outputs with the stored golden files.
    Golden {
        #[arg(long, default_value = "crates/cli/tests/golden")]
        dir: PathBuf,
        /// Rewrite the golden files instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

fn parse_check(s: &str) -> Result<Check, String> {
    Check::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.id()).collect();
        format!("unknown check {s:?}, expected one of {}", names.join(", "))
    })
}

fn audit_json(f: &exactalg::MPoly) -> serde_json::Value {
    json!(AuditSummary::from(&f.coefficient_audit()))
}

pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Partitions { n, inside } => {
            let ps = enumerate_partitions(*n, inside.as_ref());
            let text: Vec<String> = ps.iter().map(|p| p.to_text()).collect();
            Ok(Output::new(serde_json::to_value(&ps)?, text.join("\n")))
        }
        Command::Jack(cmd) => jack_cmd(cmd),
        Command::Theta(cmd) => theta_cmd(cmd),
        Command::Rect(cmd) => rect_cmd(cmd),
        Command::Verify(cmd) => verify_cmd(cli, cmd),
    }
}

fn jack_cmd(cmd: &JackCmd) -> Result<Output> {
    match cmd {
        JackCmd::Expand { lambda, basis } => {
            let e = jack(lambda)?;
            let f = match basis {
                BasisArg::P => e.in_p,
                BasisArg::M => e.in_m,
            };
            let prefix = if f.basis() == Basis::PowerSum {
                "p"
            } else {
                "m"
            };
            let mut text = String::new();
            for (index, coef) in f.terms() {
                writeln!(text, "{prefix}[{index}]: {coef}")?;
            }
            Ok(Output::new(serde_json::to_value(&f)?, text.trim_end()))
        }
        JackCmd::Theta { lambda, rho } => Output::value(&theta(lambda, rho)?),
        JackCmd::Binom { lambda, mu } => Output::value(&binom(lambda, mu)?),
        JackCmd::Pieri { lambda, i } => Output::value(&pieri_c(lambda, *i as usize)?),
    }
}

fn theta_cmd(cmd: &ThetaCmd) -> Result<Output> {
    match cmd {
        ThetaCmd::Hat { lambda, mu } => Output::value(&theta_hat_general(lambda, mu)?),
        ThetaCmd::Rect { m, mu, mode } => {
            let mode = match mode {
                ModeArg::Interpolate => RectMode::Interpolate,
                ModeArg::Closed => RectMode::ClosedForm,
            };
            let rp = rect_theta_symbolic(*m as usize, mu, mode)?;
            let positive = rp.positive_form();
            let audit = AuditSummary::from(&rp.audit());
            let json = json!({
                "m": rp.m,
                "mu": rp.mu,
                "poly": rp.poly,
                "positive_form": positive,
                "audit": audit,
            });
            let text = format!(
                "{}\npositive form: {positive}\nnonneg={} integer={} unit={}",
                rp.poly, audit.nonneg, audit.integer, audit.unit
            );
            Ok(Output::new(json, text))
        }
        ThetaCmd::Thm2 { mu } => {
            let f = theorem2_sum(mu)?;
            let in_beta = alpha_to_beta(&f);
            let audit = audit_json(&in_beta);
            let json = json!({ "mu": mu, "poly": f, "beta_form": in_beta, "audit": audit });
            let text = format!("{f}\nin beta: {in_beta}\n{audit}");
            Ok(Output::new(json, text))
        }
    }
}

fn rect_cmd(cmd: &RectCmd) -> Result<Output> {
    match cmd {
        RectCmd::Theta {
            mu,
            independent_beta,
        } => Output::value(&rect_recurrence(mu, !independent_beta)?.value),
        RectCmd::Boundary {
            mu,
            which,
            independent_beta,
        } => Output::value(&rect_boundary(mu, (*which).into(), !independent_beta)?),
        RectCmd::Divisibility { mu, p, q } => {
            if *p == 0 || *q == 0 {
                bail!("p and q must be positive");
            }
            let d = extension_divisibility(mu, *p, *q)?;
            let mut text = format!(
                "{}\ndivisible by alpha - beta - 1: {}",
                d.value, d.divisible
            );
            if let Some(quot) = &d.quotient {
                write!(text, "\nquotient: {quot}")?;
            }
            Ok(Output::new(serde_json::to_value(&d)?, text))
        }
    }
}

fn verify_cmd(cli: &Cli, cmd: &VerifyCmd) -> Result<Output> {
    let reports = match cmd {
        VerifyCmd::Identities {
            max_n,
            checks,
            sample,
        } => {
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks.clone()
            };
            let sampling = match sample {
                Some(count) => Sampling::Sample {
                    seed: cli.seed,
                    count: *count,
                },
                None => Sampling::Exhaustive,
            };
            verify::sweep(
                &DefaultSource::new(),
                &checks,
                *max_n,
                sampling,
                cli.timings,
            )
        }
        VerifyCmd::Conjecture1 { m, mu_max } => {
            verify::conjecture1(*m as usize, *mu_max, cli.timings)?
        }
        VerifyCmd::Table6 => verify::table6(),
        VerifyCmd::Thm2 { mu } => verify::thm2(mu)?,
        VerifyCmd::Displays => {
            let mut r = verify::single_rectangle_displays();
            r.extend(verify::two_rectangle_displays()?);
            r
        }
        VerifyCmd::Positivity { max } => verify::positivity_audit(*max)?,
        VerifyCmd::Extension { max } => verify::extension(*max, &[(1, 1), (3, 1), (2, 2)])?,
        VerifyCmd::Golden { dir, bless } => golden::run(dir, *bless)?,
    };
    Output::reports(reports)
}

/// Parses and runs an argument vector without touching process state.
pub fn run_args<I, S>(args: I) -> Result<Output>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(
        std::iter::once("jackpow".into()).chain(args.into_iter().map(Into::into)),
    )?;
    execute(&cli)
}

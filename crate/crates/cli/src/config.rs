use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trinoise_core::channels::{Correlation, Normalization, ScenarioTemplate, SiteSet};
use trinoise_core::negativity::StateLabel;

use crate::error::{CliError, CliResult};

pub const DEFAULT_P_STEPS: usize = 101;
pub const DEFAULT_COMPARE_SAMPLES: usize = 11;

#[derive(Debug, Parser)]
#[command(
    name = "trinoise",
    version,
    about = "Depolarizing noise on three-qubit GHZ and W states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the negativities over a p grid as CSV.
    Sweep(RunArgs),
    /// Locate the first p where the tripartite negativity vanishes.
    Death(RunArgs),
    /// Check completeness, Hermiticity, positivity and trace of the channel output.
    Verify(RunArgs),
    /// Audit the closed-form output states against the Kraus sums.
    Compare(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateArg {
    #[value(name = "ghz", alias = "GHZ")]
    Ghz,
    #[value(name = "w", alias = "W")]
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorrelationArg {
    Correlated,
    #[value(name = "non_correlated", alias = "non-correlated")]
    NonCorrelated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    Literal,
    Renormalize,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value = "ghz", ignore_case = true)]
    pub state: StateArg,
    /// Noisy sites, any non-empty subset of `abc`.
    #[arg(long, default_value = "abc")]
    pub sites: String,
    #[arg(long, value_enum, default_value = "correlated")]
    pub correlation: CorrelationArg,
    #[arg(long, value_enum, default_value = "renormalize")]
    pub normalization: NormalizationArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub p_max: f64,
    /// Grid size; 101 for sweep and death, 11 samples for compare.
    #[arg(long)]
    pub p_steps: Option<usize>,
    /// Output file for sweep (default sweep.csv) and compare (default compare.txt).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Reserved; no command is stochastic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Sweep,
    Death,
    Verify,
    Compare,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub state: StateLabel,
    pub sites: SiteSet,
    pub correlation: Correlation,
    pub normalization: Normalization,
    pub p_min: f64,
    pub p_max: f64,
    pub p_steps: usize,
    pub output_path: PathBuf,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_command(command: Command) -> CliResult<Self> {
        let (kind, args) = match command {
            Command::Sweep(a) => (CommandKind::Sweep, a),
            Command::Death(a) => (CommandKind::Death, a),
            Command::Verify(a) => (CommandKind::Verify, a),
            Command::Compare(a) => (CommandKind::Compare, a),
        };
        let sites = SiteSet::parse(&args.sites).map_err(|_| {
            CliError::Usage(format!(
                "invalid --sites {:?}: expected a subset of abc",
                args.sites
            ))
        })?;
        let default_steps = match kind {
            CommandKind::Compare => DEFAULT_COMPARE_SAMPLES,
            _ => DEFAULT_P_STEPS,
        };
        let default_out = match kind {
            CommandKind::Compare => "compare.txt",
            _ => "sweep.csv",
        };
        let cfg = RunConfig {
            command: kind,
            state: match args.state {
                StateArg::Ghz => StateLabel::Ghz,
                StateArg::W => StateLabel::W,
            },
            sites,
            correlation: match args.correlation {
                CorrelationArg::Correlated => Correlation::Correlated,
                CorrelationArg::NonCorrelated => Correlation::NonCorrelated,
            },
            normalization: match args.normalization {
                NormalizationArg::Literal => Normalization::Literal,
                NormalizationArg::Renormalize => Normalization::Renormalize,
            },
            p_min: args.p_min,
            p_max: args.p_max,
            p_steps: args.p_steps.unwrap_or(default_steps),
            output_path: args.out.unwrap_or_else(|| PathBuf::from(default_out)),
            seed: args.seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> CliResult<()> {
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        if !in_unit(self.p_min) || !in_unit(self.p_max) {
            return Err(CliError::Usage(format!(
                "p range [{}, {}] must lie in [0, 1]",
                self.p_min, self.p_max
            )));
        }
        if self.p_min > self.p_max {
            return Err(CliError::Usage(format!(
                "--p-min {} exceeds --p-max {}",
                self.p_min, self.p_max
            )));
        }
        if self.p_steps == 0 {
            return Err(CliError::Usage("--p-steps must be positive".into()));
        }
        match self.command {
            CommandKind::Sweep if self.p_steps < 2 && self.p_min != self.p_max => {
                return Err(CliError::Usage(
                    "--p-steps must be at least 2 for sweep".into(),
                ));
            }
            CommandKind::Death if self.p_min >= self.p_max => {
                return Err(CliError::Usage("death needs --p-min < --p-max".into()));
            }
            CommandKind::Compare if self.p_steps >= 2 && self.p_min == self.p_max => {
                return Err(CliError::Usage(
                    "compare needs --p-min < --p-max for several samples".into(),
                ));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn template(&self) -> ScenarioTemplate {
        ScenarioTemplate::new(self.sites, self.correlation, self.normalization)
    }
}

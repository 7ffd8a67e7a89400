use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::Failure;

#[derive(Parser, Debug)]
#[command(name = "sot", version, about = "Split octonions, Cl(4,4) and triality")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = sot_core::sample::DEFAULT_SEED)]
    pub seed: u64,

    /// Float-mode tolerance (> 0); sampled invariance checks compare residuals relative to input size.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tolerance: f64,

    /// Number of random samples in sampled checks (≥ 1).
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Arithmetic; defaults to exact for verify/matrices and float for rotate/trilinear.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The 8×8 multiplication table and the associator families.
    Table,
    /// Run an identity suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Apply a plane rotor to a vector or spinor.
    Rotate(RotateArgs),
    /// Evaluate the trilinear form.
    Trilinear(TrilinearArgs),
    /// Print α, Γ, B or the spinor frame.
    Matrices {
        #[arg(value_enum)]
        which: Which,
    },
}

#[derive(Args, Debug)]
pub struct RotateArgs {
    /// Plane indices `mu,nu`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub plane: Vec<usize>,
    /// Angle (compact planes) or rapidity (boost planes), radians.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, value_enum)]
    pub target: Target,
    /// 8 components for a vector, 16 (φ then ψ) for a spinor.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub components: Vec<f64>,
}

#[derive(Args, Debug)]
pub struct TrilinearArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub phi: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub x: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub psi: Vec<String>,
    #[arg(long, value_enum, default_value_t = Representation::Both)]
    pub representation: Representation,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Moufang,
    Malcev,
    Clifford,
    Associators,
    Correspondence,
    Triality,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Vector,
    Spinor,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Matrix,
    Octonion,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Gamma,
    #[value(name = "B", alias = "b")]
    B,
    Xi,
    Alpha,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Moufang => "moufang",
            Suite::Malcev => "malcev",
            Suite::Clifford => "clifford",
            Suite::Associators => "associators",
            Suite::Correspondence => "correspondence",
            Suite::Triality => "triality",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    pub mode: Option<Mode>,
}

impl RunConfig {
    pub fn with_default_mode(&self, mode: Mode) -> Self {
        Self { mode: Some(self.mode.unwrap_or(mode)), ..self.clone() }
    }

    pub fn exact(&self) -> bool {
        self.mode == Some(Mode::Exact)
    }
}

impl Cli {
    pub fn config(&self) -> Result<RunConfig, Failure> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Failure::Usage(format!("--tolerance must be a positive number, got {}", self.tolerance)));
        }
        Ok(RunConfig {
            seed: self.seed,
            tolerance: self.tolerance,
            samples: usize::try_from(self.samples).map_err(|_| Failure::Usage("--samples too large".into()))?,
            mode: self.mode,
        })
    }
}

//! Library side of the `syzygy` command: input schemas, command
//! implementations and the parallel sweep runner.

pub mod commands;
pub mod input;
pub mod sweep;

use std::fmt;

use syzygy_core::Error;

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Engine(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Engine(e) => match e {
                Error::TypeOther
                | Error::UnsupportedTaggedConfiguration(_)
                | Error::UndeterminedOrbit(_)
                | Error::EnumerationLimit(_)
                | Error::NotFiniteDimensional(_)
                | Error::IncompleteIndecomposableList
                | Error::NotGorenstein
                | Error::NotSelfinjective
                | Error::Inconclusive
                | Error::FieldTooSmall { .. } => EXIT_LIMIT,
                _ => EXIT_INPUT,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "input error: {s}"),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub char: Option<u32>,
    pub max_len: usize,
    pub orbit_bound: usize,
    pub seed: u64,
    pub jobs: usize,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            char: None,
            max_len: syzygy_core::algebra::DEFAULT_MAX_LEN,
            orbit_bound: syzygy_core::homology::DEFAULT_ORBIT_BOUND,
            seed: 0,
            jobs: 0,
            format: Format::Text,
        }
    }
}

impl Options {
    pub fn field(&self) -> Result<syzygy_core::Field, CliError> {
        Ok(match self.char {
            Some(p) => syzygy_core::Field::new(p)?,
            None => syzygy_core::Field::default(),
        })
    }
}

/// Rendered output of a command and whether a verification failed.
#[derive(Clone, Debug)]
pub struct Report {
    pub body: String,
    pub failed: bool,
}

impl Report {
    pub fn ok(body: String) -> Self {
        Report { body, failed: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_FAIL
        } else {
            EXIT_PASS
        }
    }
}

use std::path::PathBuf;

use clap::ValueEnum;
use richardson_core::ideal::TermOrderKind;
use richardson_core::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Diagonal,
    Antidiagonal,
}

impl From<OrderArg> for TermOrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Diagonal => TermOrderKind::Diagonal,
            OrderArg::Antidiagonal => TermOrderKind::Antidiagonal,
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub order: TermOrderKind,
    pub max_degree: usize,
    pub workers: usize,
    pub format: Format,
    pub limits: Limits,
    pub out_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(
        n: usize,
        order: TermOrderKind,
        max_degree: usize,
        workers: Option<usize>,
        format: Format,
        force: bool,
        out_dir: Option<PathBuf>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "n must be at least 2, got {n}"
            )));
        }
        if max_degree < 1 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        let workers =
            workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
        if workers < 1 {
            return Err(Error::InvalidArgument("workers must be at least 1".into()));
        }
        let limits = Limits {
            force,
            ..Limits::default()
        };
        limits.check_n(n)?;
        limits.check_degree(max_degree)?;
        Ok(Self {
            n,
            order,
            max_degree,
            workers,
            format,
            limits,
            out_dir,
        })
    }

    /// Runs `f` on a pool of `workers` threads.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        Ok(pool.install(f))
    }
}

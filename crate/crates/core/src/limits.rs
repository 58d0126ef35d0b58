use crate::error::{Error, Result};

/// Guards against factorial and exponential blowups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted at all.
    pub max_n: usize,
    /// Largest `n` for exhaustive sweeps over `S_n` or `S_n x S_n`.
    pub sweep_max_n: usize,
    pub max_degree: usize,
    /// Upper bound on `|T_w^v|^d` for degree-`d` monomial enumeration.
    pub monomial_budget: u64,
    /// Upper bound on the number of candidate points in a lattice-point box.
    pub lattice_box_budget: u64,
    /// Lift `sweep_max_n` and `max_degree`; the other guards still apply.
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: 8,
            sweep_max_n: 6,
            max_degree: 3,
            monomial_budget: 2_000_000,
            lattice_box_budget: 5_000_000,
            force: false,
        }
    }
}

impl Limits {
    pub fn forced() -> Self {
        Self {
            force: true,
            ..Self::default()
        }
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.max_n {
            return Err(Error::Budget(format!("n = {n} outside 1..={}", self.max_n)));
        }
        Ok(())
    }

    pub fn check_sweep(&self, n: usize) -> Result<()> {
        self.check_n(n)?;
        if n > self.sweep_max_n && !self.force {
            return Err(Error::Budget(format!(
                "exhaustive sweep over S_{n} exceeds the default limit n <= {} (use force)",
                self.sweep_max_n
            )));
        }
        Ok(())
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "degree must be at least 1".to_string(),
            ));
        }
        if d > self.max_degree && !self.force {
            return Err(Error::Budget(format!(
                "degree {d} exceeds the default limit {} (use force)",
                self.max_degree
            )));
        }
        Ok(())
    }
}

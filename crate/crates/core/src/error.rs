use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("invalid margins: {0}")]
    InvalidMargins(String),

    #[error("cannot parse table from {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("degenerate genotype frequencies (g0={g0}, g2={g2})")]
    DegenerateFreqs { g0: f64, g2: f64 },

    #[error("penetrance f2={f2} exceeds 1; model infeasible for this prevalence and MAF")]
    PenetranceOverflow { f2: f64 },

    #[error("outcome space too large: n1+n2={total} exceeds cap {cap}")]
    CapExceeded { total: u64, cap: u64 },

    #[error("table total N={needed} exceeds log-factorial table size {available}")]
    TableTooSmall { needed: u64, available: u64 },

    #[error("quadrature did not converge: estimated error {error:e} after {subdivisions} subdivisions")]
    Quadrature { error: f64, subdivisions: usize },

    #[error("config error: {0}")]
    Config(String),
}

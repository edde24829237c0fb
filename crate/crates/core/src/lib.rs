//! Robust disease–genotype association tests for 2×3 case–control tables.
//!
//! The crate computes seven test statistics (`CATT_1/2`, Pearson, MIN2, MAX3,
//! CMAX, CLRT and MERT), their asymptotic p-values, and exact conditional
//! p-values obtained by enumerating every table that shares the observed
//! column margins. A Monte Carlo engine estimates test size and power for
//! genetic models parameterized by prevalence, minor allele frequency,
//! dominance `δ` and relative risk `λ2`.
//!
//! ```
//! use genassoc::{exact, ContingencyTable, StatisticKind};
//!
//! let table: ContingencyTable = "2,0,0,0,1,1".parse().unwrap();
//! let lf = exact::LogFactorialTable::new(table.total());
//! let p = exact::exact_p(StatisticKind::Pearson, &table, &exact::EnumerationOptions::full(), &lf)
//!     .unwrap();
//! assert!((p.value().unwrap() - 1.0 / 3.0).abs() < 1e-12);
//! ```

pub mod asymptotic;
pub mod cli;
pub mod error;
pub mod exact;
pub mod genetics;
pub mod simulation;
pub mod statistics;
pub mod tables;

pub use error::{Error, Result};
pub use statistics::{Direction, StatisticKind, StatisticSet};
pub use tables::{ContingencyTable, Margins};

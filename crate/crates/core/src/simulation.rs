//! Monte Carlo size and power, and exact power for tiny designs.
//!
//! Replicate `i` draws from its own ChaCha8 stream keyed by `(seed, i)`, so
//! results do not depend on how replicates are split across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;

use crate::asymptotic::special::{chi2_sf, normal_sf};
use crate::asymptotic::{p_value_from, GenotypeFreqEstimate, QuadratureSpec};
use crate::error::{Error, Result};
use crate::exact::{exact_p, exact_p_all, EnumerationOptions, LogFactorialTable};
use crate::genetics::{theta_from_model, GeneticModelSpec, PopulationParams};
use crate::statistics::{MarginContext, StatisticKind, TableStatistics};
use crate::tables::ContingencyTable;

/// Largest `n1 + n2` accepted by [`exact_power`].
pub const EXACT_POWER_CAP: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Asymptotic,
    Exact,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::Asymptotic, Method::Exact];

    pub fn index(self) -> usize {
        self as usize
    }

    /// One-letter code used in output tables.
    pub fn code(self) -> &'static str {
        match self {
            Method::Asymptotic => "A",
            Method::Exact => "C",
        }
    }
}

/// One trinomial row: `x0 ~ Bin(n, p0)`, then `x1 ~ Bin(n - x0, p1/(p1+p2))`.
fn draw_row<R: Rng + ?Sized>(p: [f64; 3], n: u32, rng: &mut R) -> [u32; 3] {
    let x0 = binomial(n, p[0], rng);
    let rest = p[1] + p[2];
    let x1 = if rest > 0.0 {
        binomial(n - x0, (p[1] / rest).min(1.0), rng)
    } else {
        0
    };
    [x0, x1, n - x0 - x1]
}

fn binomial<R: Rng + ?Sized>(n: u32, p: f64, rng: &mut R) -> u32 {
    if n == 0 || p <= 0.0 {
        return 0;
    }
    if p >= 1.0 {
        return n;
    }
    Binomial::new(u64::from(n), p)
        .expect("p in (0,1)")
        .sample(rng) as u32
}

/// A random table with independent trinomial case and control rows.
pub fn draw_table<R: Rng + ?Sized>(
    theta: &PopulationParams,
    n1: u32,
    n2: u32,
    rng: &mut R,
) -> Result<ContingencyTable> {
    let x = draw_row(theta.p, n1, rng);
    let y = draw_row(theta.q, n2, rng);
    ContingencyTable::new(x, y)
}

/// Generator for replicate `index` of a run seeded with `seed`.
pub fn replicate_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyDesign {
    pub n1: u32,
    pub n2: u32,
    pub spec: GeneticModelSpec,
    pub replicates: u64,
    /// Strictly decreasing after [`StudyDesign::new`].
    pub alphas: Vec<f64>,
    pub seed: u64,
    /// Enumeration abort threshold; defaults to the largest alpha.
    pub abort_threshold: Option<f64>,
    pub quadrature: QuadratureSpec,
}

impl StudyDesign {
    pub fn new(
        n1: u32,
        n2: u32,
        spec: GeneticModelSpec,
        replicates: u64,
        alphas: &[f64],
        seed: u64,
    ) -> Result<Self> {
        let mut alphas = alphas.to_vec();
        alphas.sort_by(|a, b| b.total_cmp(a));
        alphas.dedup();
        let design = Self {
            n1,
            n2,
            spec,
            replicates,
            alphas,
            seed,
            abort_threshold: None,
            quadrature: QuadratureSpec::default(),
        };
        design.validate()?;
        Ok(design)
    }

    pub fn with_abort_threshold(mut self, threshold: Option<f64>) -> Result<Self> {
        self.abort_threshold = threshold;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n1 == 0 || self.n2 == 0 {
            return Err(Error::Config(format!(
                "row totals must be positive, got n1={} n2={}",
                self.n1, self.n2
            )));
        }
        if self.replicates == 0 {
            return Err(Error::Config("replicates must be >= 1".into()));
        }
        if self.alphas.is_empty() {
            return Err(Error::Config("at least one alpha is required".into()));
        }
        if let Some(&a) = self.alphas.iter().find(|&&a| !(a > 0.0 && a < 1.0)) {
            return Err(Error::Config(format!("alpha must be in (0,1), got {a}")));
        }
        if self.alphas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Config("alphas must be strictly decreasing".into()));
        }
        if let Some(t) = self.abort_threshold {
            EnumerationOptions::with_abort(t).validate()?;
            if t < self.alphas[0] {
                return Err(Error::Config(format!(
                    "abort threshold {t} is below the largest alpha {}",
                    self.alphas[0]
                )));
            }
        }
        self.quadrature.validate()?;
        self.spec.validate()
    }

    pub fn threshold(&self) -> f64 {
        self.abort_threshold.unwrap_or(self.alphas[0])
    }
}

/// Rejection counts per statistic, method and alpha.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerEstimate {
    pub replicates: u64,
    pub alphas: Vec<f64>,
    hits: Vec<u64>,
}

/// One line of a [`PowerEstimate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerRow {
    pub kind: StatisticKind,
    pub method: Method,
    pub alpha: f64,
    pub hits: u64,
    pub replicates: u64,
    pub power: f64,
    pub ci_half: f64,
}

impl PowerRow {
    /// Estimate times `5 / alpha`, so an exact-size test reads 5.
    pub fn scaled(&self) -> f64 {
        self.power * 5.0 / self.alpha
    }
}

impl PowerEstimate {
    fn empty(replicates: u64, alphas: &[f64]) -> Self {
        Self {
            replicates,
            alphas: alphas.to_vec(),
            hits: vec![0; 7 * 2 * alphas.len()],
        }
    }

    fn slot(&self, kind: StatisticKind, method: Method, alpha_index: usize) -> usize {
        (kind.index() * 2 + method.index()) * self.alphas.len() + alpha_index
    }

    fn merge(mut self, other: &Self) -> Self {
        self.hits.iter_mut().zip(&other.hits).for_each(|(a, b)| *a += b);
        self
    }

    pub fn hits(&self, kind: StatisticKind, method: Method, alpha_index: usize) -> u64 {
        self.hits[self.slot(kind, method, alpha_index)]
    }

    pub fn power(&self, kind: StatisticKind, method: Method, alpha_index: usize) -> f64 {
        self.hits(kind, method, alpha_index) as f64 / self.replicates as f64
    }

    /// Half-length of the normal-approximation 95% interval.
    pub fn ci_half(&self, kind: StatisticKind, method: Method, alpha_index: usize) -> f64 {
        ci_half(self.power(kind, method, alpha_index), self.replicates)
    }

    pub fn row(&self, kind: StatisticKind, method: Method, alpha_index: usize) -> PowerRow {
        PowerRow {
            kind,
            method,
            alpha: self.alphas[alpha_index],
            hits: self.hits(kind, method, alpha_index),
            replicates: self.replicates,
            power: self.power(kind, method, alpha_index),
            ci_half: self.ci_half(kind, method, alpha_index),
        }
    }

    /// Rows ordered by statistic, then method, then decreasing alpha.
    pub fn rows(&self) -> Vec<PowerRow> {
        let mut rows = Vec::with_capacity(self.hits.len());
        for kind in StatisticKind::ALL {
            for method in Method::ALL {
                for a in 0..self.alphas.len() {
                    rows.push(self.row(kind, method, a));
                }
            }
        }
        rows
    }
}

pub fn ci_half(power: f64, replicates: u64) -> f64 {
    1.96 * (power * (1.0 - power) / replicates as f64).sqrt()
}

/// Asymptotic p-value, or `None` when a cheap lower bound already exceeds
/// `cutoff` and the quadrature can be skipped.
fn asymptotic_p_below(
    kind: StatisticKind,
    stats: &TableStatistics,
    g: &GenotypeFreqEstimate,
    spec: &QuadratureSpec,
    cutoff: f64,
) -> Result<Option<f64>> {
    let bound = match kind {
        StatisticKind::Min2 => stats.min2,
        StatisticKind::Max3 => 2.0 * normal_sf(stats.max3),
        StatisticKind::Cmax => chi2_sf(stats.cmax.max(0.0), 1)?,
        _ => 0.0,
    };
    if bound > cutoff {
        return Ok(None);
    }
    p_value_from(kind, stats, g, spec).map(Some)
}

struct Worker<'a> {
    design: &'a StudyDesign,
    theta: PopulationParams,
    lf: &'a LogFactorialTable,
    opts: EnumerationOptions,
}

impl Worker<'_> {
    fn replicate(&self, index: u64, acc: &mut PowerEstimate) {
        let d = self.design;
        let mut rng = replicate_rng(d.seed, index);
        let z = draw_table(&self.theta, d.n1, d.n2, &mut rng).expect("rows are non-empty");
        let m = z.margins();
        let [x0, x1, _] = z.cases();
        let stats = MarginContext::new(&m).evaluate(x0, x1);
        let g = GenotypeFreqEstimate::from_margins(&m);
        let largest = d.alphas[0];
        for kind in StatisticKind::ALL {
            // Degenerate frequency estimates count as non-rejections.
            if let Ok(Some(p)) = asymptotic_p_below(kind, &stats, &g, &d.quadrature, largest) {
                self.count(acc, kind, Method::Asymptotic, p);
            }
        }
        let exact = exact_p_all(&z, &self.opts, self.lf).expect("table sized for the design");
        for kind in StatisticKind::ALL {
            if let Some(p) = exact.get(kind).value() {
                self.count(acc, kind, Method::Exact, p);
            }
        }
    }

    fn count(&self, acc: &mut PowerEstimate, kind: StatisticKind, method: Method, p: f64) {
        for (a, &alpha) in self.design.alphas.iter().enumerate() {
            if p > alpha {
                break;
            }
            let slot = acc.slot(kind, method, a);
            acc.hits[slot] += 1;
        }
    }
}

/// Estimated size or power of every statistic under both methods, using the
/// global rayon pool.
pub fn estimate_power(design: &StudyDesign) -> Result<PowerEstimate> {
    design.validate()?;
    let theta = theta_from_model(&design.spec)?;
    let lf = LogFactorialTable::new(u64::from(design.n1) + u64::from(design.n2));
    let worker = Worker {
        design,
        theta,
        lf: &lf,
        opts: EnumerationOptions::with_abort(design.threshold()),
    };
    let empty = || PowerEstimate::empty(design.replicates, &design.alphas);
    Ok((0..design.replicates)
        .into_par_iter()
        .fold(empty, |mut acc, i| {
            worker.replicate(i, &mut acc);
            acc
        })
        .reduce(empty, |a, b| a.merge(&b)))
}

/// [`estimate_power`] on a dedicated pool of `threads` workers. The result
/// does not depend on `threads`.
pub fn estimate_power_with_threads(design: &StudyDesign, threads: usize) -> Result<PowerEstimate> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start thread pool: {e}")))?;
    pool.install(|| estimate_power(design))
}

// All compositions of n into three parts with their multinomial
// probabilities under p.
fn row_outcomes(p: [f64; 3], n: u32, lf: &LogFactorialTable) -> Vec<([u32; 3], f64)> {
    let ln_p = p.map(f64::ln);
    let mut out = Vec::new();
    for x0 in 0..=n {
        for x1 in 0..=n - x0 {
            let x = [x0, x1, n - x0 - x1];
            if (0..3).any(|i| x[i] > 0 && p[i] == 0.0) {
                continue;
            }
            let ln_prob = lf.ln_factorial(n)
                + (0..3)
                    .filter(|&i| x[i] > 0)
                    .map(|i| f64::from(x[i]) * ln_p[i] - lf.ln_factorial(x[i]))
                    .sum::<f64>();
            out.push((x, ln_prob.exp()));
        }
    }
    out
}

/// Power of the exact conditional test at `theta`, summing the product
/// trinomial probability of every outcome whose exact p-value is at most
/// `alpha`.
pub fn exact_power(
    theta: &PopulationParams,
    n1: u32,
    n2: u32,
    kind: StatisticKind,
    alpha: f64,
) -> Result<f64> {
    let total = u64::from(n1) + u64::from(n2);
    if total > EXACT_POWER_CAP {
        return Err(Error::CapExceeded { total, cap: EXACT_POWER_CAP });
    }
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidTable("row totals must be positive".into()));
    }
    let lf = LogFactorialTable::new(total);
    let cases = row_outcomes(theta.p, n1, &lf);
    let controls = row_outcomes(theta.q, n2, &lf);
    let opts = EnumerationOptions::full();
    let mut power = 0.0;
    for &(x, px) in &cases {
        for &(y, py) in &controls {
            let z = ContingencyTable::new(x, y)?;
            if exact_p(kind, &z, &opts, &lf)?.rejects(alpha) {
                power += px * py;
            }
        }
    }
    Ok(power.min(1.0))
}

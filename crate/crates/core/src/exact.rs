//! Exact conditional p-values by enumerating every table with the observed
//! margins.
//!
//! Under the null the case row is trivariate hypergeometric given the column
//! margins, so the p-value of a statistic is the total probability of tables
//! at least as extreme as the observed one. Probabilities are assembled from
//! a shared table of `ln l!`. For simulation studies the sum can stop as
//! soon as every tracked statistic's partial sum passes a threshold; the
//! sweep then starts at the observed `x0`, where the conditional mass is
//! concentrated, to make that happen early.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Hypergeometric};

use crate::error::{Error, Result};
use crate::statistics::{xlnx, MarginContext, StatisticKind, StatisticSet};
use crate::tables::{ContingencyTable, Margins};

/// `ln l!` for `l = 0..=n_max`, plus `l ln l` for the CLRT hot path.
#[derive(Debug, Clone)]
pub struct LogFactorialTable {
    ln_fact: Vec<f64>,
    x_ln_x: Vec<f64>,
}

impl LogFactorialTable {
    pub fn new(n_max: u64) -> Self {
        let len = n_max as usize + 1;
        let mut ln_fact = Vec::with_capacity(len);
        // Compensated running sum of ln j.
        let (mut sum, mut carry) = (0.0f64, 0.0f64);
        ln_fact.push(0.0);
        for l in 1..len {
            let term = (l as f64).ln() - carry;
            let next = sum + term;
            carry = (next - sum) - term;
            sum = next;
            ln_fact.push(sum);
        }
        let x_ln_x = (0..len as u64).map(xlnx).collect();
        Self { ln_fact, x_ln_x }
    }

    /// Largest `l` covered.
    pub fn n_max(&self) -> u64 {
        self.ln_fact.len() as u64 - 1
    }

    #[inline]
    pub fn ln_factorial(&self, l: u32) -> f64 {
        self.ln_fact[l as usize]
    }

    pub fn x_ln_x(&self) -> &[f64] {
        &self.x_ln_x
    }

    fn check(&self, n: u64) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::TableTooSmall {
                needed: n,
                available: self.n_max(),
            });
        }
        Ok(())
    }

    // ln C(m0,·)C(m1,·)C(m2,·) − ln C(N, n1), without the x-dependent part.
    fn ln_margin_constant(&self, m: &Margins) -> f64 {
        let [m0, m1, m2] = m.columns();
        self.ln_factorial(m0) + self.ln_factorial(m1) + self.ln_factorial(m2)
            - self.ln_fact[m.total() as usize]
            + self.ln_factorial(m.n1())
            + self.ln_factorial(m.n2())
    }
}

/// Trivariate hypergeometric probability of `z` given its own margins.
pub fn hypergeometric_prob(z: &ContingencyTable, lf: &LogFactorialTable) -> Result<f64> {
    lf.check(z.total())?;
    let m = z.margins();
    let x = z.cases();
    let y = z.controls();
    let ln_p = lf.ln_margin_constant(&m)
        - x.iter().chain(&y).map(|&v| lf.ln_factorial(v)).sum::<f64>();
    Ok(ln_p.exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    /// Start at the observed `x0`, go up to the maximum, then down from
    /// `x0 − 1`. Within each `x0`, the same pattern starts from the most
    /// probable `x1`.
    ProbabilitySweep,
    Lexicographic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumerationOptions {
    pub abort_threshold: Option<f64>,
    pub ordering: Ordering,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self::full()
    }
}

impl EnumerationOptions {
    /// No early abort; the setting for reporting single tables.
    pub fn full() -> Self {
        Self {
            abort_threshold: None,
            ordering: Ordering::ProbabilitySweep,
        }
    }

    /// Stop once the p-value is known to exceed `threshold`.
    pub fn with_abort(threshold: f64) -> Self {
        Self {
            abort_threshold: Some(threshold),
            ordering: Ordering::ProbabilitySweep,
        }
    }

    pub fn ordering(mut self, ordering: Ordering) -> Self {
        self.ordering = ordering;
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self.abort_threshold {
            Some(t) if !(t > 0.0 && t <= 1.0) => Err(Error::Domain(format!(
                "abort threshold must be in (0,1], got {t}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Result of an exact enumeration for one statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExactP {
    Value(f64),
    /// The sum passed `threshold` before enumeration finished, so
    /// `p > threshold`.
    Aborted { threshold: f64 },
}

impl ExactP {
    pub fn value(&self) -> Option<f64> {
        match *self {
            ExactP::Value(p) => Some(p),
            ExactP::Aborted { .. } => None,
        }
    }

    pub fn is_aborted(&self) -> bool {
        matches!(self, ExactP::Aborted { .. })
    }

    /// Whether the test rejects at level `alpha`. An aborted result never
    /// rejects, which is exact for every `alpha <= threshold`.
    pub fn rejects(&self, alpha: f64) -> bool {
        match *self {
            ExactP::Value(p) => p <= alpha,
            ExactP::Aborted { .. } => false,
        }
    }
}

/// All seven exact p-values from one enumeration pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactOutcome {
    pub p: [ExactP; 7],
    /// Tables visited before the pass finished or aborted.
    pub summands: u64,
}

impl ExactOutcome {
    pub fn get(&self, kind: StatisticKind) -> ExactP {
        self.p[kind.index()]
    }
}

// Mode of x1 given x0: hypergeometric, `draws` out of m1 + m2.
fn conditional_x1_mode(m1: u32, m2: u32, draws: u32) -> u32 {
    ((u64::from(draws) + 1) * (u64::from(m1) + 1) / (u64::from(m1) + u64::from(m2) + 2)) as u32
}

fn enumerate(
    z: &ContingencyTable,
    tracked: [bool; 7],
    opts: &EnumerationOptions,
    lf: &LogFactorialTable,
) -> Result<ExactOutcome> {
    opts.validate()?;
    lf.check(z.total())?;
    let m = z.margins();
    let ctx = MarginContext::with_xlnx_table(&m, lf.x_ln_x());
    let [ox0, ox1, _] = z.cases();
    let observed = ctx.evaluate_set(ox0, ox1);
    let directions = StatisticKind::ALL.map(StatisticKind::direction);
    let [m0, m1, m2] = m.columns();
    let n1 = m.n1();
    let ln_const = lf.ln_margin_constant(&m);

    let mut sums = [0.0f64; 7];
    let mut passed = [false; 7];
    let mut remaining = tracked.iter().filter(|&&t| t).count();
    let mut summands = 0u64;
    let anchor = match opts.ordering {
        Ordering::ProbabilitySweep => Some(ox0),
        Ordering::Lexicographic => None,
    };

    for x0 in m.x0_order(anchor) {
        let base = ln_const - lf.ln_factorial(x0) - lf.ln_factorial(m0 - x0);
        let slice = m.x1_range(x0);
        let (lo, hi) = (*slice.start(), *slice.end());
        let start = match opts.ordering {
            Ordering::ProbabilitySweep => conditional_x1_mode(m1, m2, n1 - x0).clamp(lo, hi),
            Ordering::Lexicographic => lo,
        };
        for x1 in (start..=hi).chain((lo..start).rev()) {
            let x2 = n1 - x0 - x1;
            let prob = (base
                - lf.ln_factorial(x1)
                - lf.ln_factorial(m1 - x1)
                - lf.ln_factorial(x2)
                - lf.ln_factorial(m2 - x2))
            .exp();
            summands += 1;
            let values: StatisticSet = ctx.evaluate_set(x0, x1);
            for k in 0..7 {
                if !tracked[k] || !directions[k].at_least_as_extreme(values[k], observed[k]) {
                    continue;
                }
                sums[k] += prob;
                if let Some(threshold) = opts.abort_threshold {
                    if !passed[k] && sums[k] > threshold {
                        passed[k] = true;
                        remaining -= 1;
                        if remaining == 0 {
                            let p = std::array::from_fn(|i| {
                                if tracked[i] {
                                    ExactP::Aborted { threshold }
                                } else {
                                    ExactP::Value(f64::NAN)
                                }
                            });
                            return Ok(ExactOutcome { p, summands });
                        }
                    }
                }
            }
        }
    }
    let p = std::array::from_fn(|i| {
        ExactP::Value(if tracked[i] { sums[i].min(1.0) } else { f64::NAN })
    });
    Ok(ExactOutcome { p, summands })
}

/// Exact conditional p-value of one statistic.
pub fn exact_p(
    kind: StatisticKind,
    z: &ContingencyTable,
    opts: &EnumerationOptions,
    lf: &LogFactorialTable,
) -> Result<ExactP> {
    let mut tracked = [false; 7];
    tracked[kind.index()] = true;
    Ok(enumerate(z, tracked, opts, lf)?.p[kind.index()])
}

/// Exact conditional p-values of all seven statistics in one pass. With an
/// abort threshold the pass stops only when every partial sum exceeds it.
pub fn exact_p_all(
    z: &ContingencyTable,
    opts: &EnumerationOptions,
    lf: &LogFactorialTable,
) -> Result<ExactOutcome> {
    enumerate(z, [true; 7], opts, lf)
}

/// Draws `x` tables with the margins of `m` from the conditional null, which
/// is what shuffling the genotype vector against fixed disease labels does.
pub struct ConditionalSampler {
    margins: Margins,
    first: Hypergeometric,
    second: Vec<Option<Hypergeometric>>,
}

impl ConditionalSampler {
    pub fn new(m: &Margins) -> Self {
        let [m0, _, _] = m.columns().map(u64::from);
        let total = m.total();
        let first = Hypergeometric::new(total, m0, u64::from(m.n1()))
            .expect("margins give a valid hypergeometric");
        Self {
            margins: *m,
            first,
            second: vec![None; *m.x0_range().end() as usize + 1],
        }
    }

    /// Returns `(x0, x1)` of a random table.
    pub fn sample<R: rand::Rng + ?Sized>(&mut self, rng: &mut R) -> (u32, u32) {
        let [m0, m1, _] = self.margins.columns().map(u64::from);
        let rest_total = self.margins.total() - m0;
        let x0 = self.first.sample(rng) as u32;
        let draws = u64::from(self.margins.n1() - x0);
        let second = self.second[x0 as usize].get_or_insert_with(|| {
            Hypergeometric::new(rest_total, m1, draws).expect("valid conditional draw")
        });
        let x1 = second.sample(rng) as u32;
        (x0, x1)
    }
}

/// Simulated permutation p-values for all seven statistics:
/// `(1 + #{T(z_i) at least as extreme as T(z)}) / (b + 1)`.
pub fn permutation_p_all(z: &ContingencyTable, b: u64, seed: u64) -> Result<[f64; 7]> {
    if b == 0 {
        return Err(Error::Domain("permutation count b must be >= 1".into()));
    }
    let m = z.margins();
    let xl: Vec<f64> = (0..=m.total()).map(xlnx).collect();
    let ctx = MarginContext::with_xlnx_table(&m, &xl);
    let [ox0, ox1, _] = z.cases();
    let observed = ctx.evaluate_set(ox0, ox1);
    let mut sampler = ConditionalSampler::new(&m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = [0u64; 7];
    for _ in 0..b {
        let (x0, x1) = sampler.sample(&mut rng);
        let values = ctx.evaluate_set(x0, x1);
        for kind in StatisticKind::ALL {
            let k = kind.index();
            if kind.direction().at_least_as_extreme(values[k], observed[k]) {
                hits[k] += 1;
            }
        }
    }
    Ok(hits.map(|h| (1 + h) as f64 / (b + 1) as f64))
}

/// Simulated permutation p-value of one statistic. Deterministic in `seed`
/// and identical to the matching entry of [`permutation_p_all`].
pub fn permutation_p(kind: StatisticKind, z: &ContingencyTable, b: u64, seed: u64) -> Result<f64> {
    Ok(permutation_p_all(z, b, seed)?[kind.index()])
}

//! The seven robust association statistics.
//!
//! Every statistic is a function of the case row once the margins are fixed,
//! so evaluation goes through a [`MarginContext`] that holds the
//! margin-only constants (CATT variances, the MERT correlation, the null
//! log-likelihood). Public single-table functions build a context and call
//! the same code as the enumeration hot loop, so the observed table and every
//! enumerated table are scored identically.
//!
//! Degenerate inputs never fail: a zero-variance CATT is 0, an undefined
//! data-driven score falls to the "otherwise" branch of CMAX and CLRT, and a
//! degenerate MERT correlation is taken as 0.

use std::fmt;
use std::str::FromStr;

use crate::asymptotic::special::normal_sf;
use crate::error::{Error, Result};
use crate::tables::{ContingencyTable, Margins};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatisticKind {
    CattHalf,
    Pearson,
    Min2,
    Max3,
    Cmax,
    Clrt,
    Mert,
}

impl StatisticKind {
    pub const ALL: [StatisticKind; 7] = [
        StatisticKind::CattHalf,
        StatisticKind::Pearson,
        StatisticKind::Min2,
        StatisticKind::Max3,
        StatisticKind::Cmax,
        StatisticKind::Clrt,
        StatisticKind::Mert,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            StatisticKind::CattHalf => "CATT_HALF",
            StatisticKind::Pearson => "PEARSON",
            StatisticKind::Min2 => "MIN2",
            StatisticKind::Max3 => "MAX3",
            StatisticKind::Cmax => "CMAX",
            StatisticKind::Clrt => "CLRT",
            StatisticKind::Mert => "MERT",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            StatisticKind::Min2 => Direction::SmallRejects,
            _ => Direction::LargeRejects,
        }
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Ok(match key.as_str() {
            "catt" | "catthalf" | "catt12" => StatisticKind::CattHalf,
            "pearson" | "chisq" => StatisticKind::Pearson,
            "min2" => StatisticKind::Min2,
            "max3" => StatisticKind::Max3,
            "cmax" => StatisticKind::Cmax,
            "clrt" => StatisticKind::Clrt,
            "mert" => StatisticKind::Mert,
            _ => return Err(Error::Domain(format!("unknown statistic {s:?}"))),
        })
    }
}

/// Which tail of a statistic is evidence against the null.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    LargeRejects,
    SmallRejects,
}

impl Direction {
    /// `candidate` is at least as extreme as `observed`, with a relative
    /// tolerance of 1e-12 that errs toward counting ties. For large-rejects
    /// statistics the tolerance is floored at 1e-12 absolute, so
    /// algebraically-zero values that round differently still tie.
    #[inline]
    pub fn at_least_as_extreme(self, candidate: f64, observed: f64) -> bool {
        match self {
            Direction::LargeRejects => candidate >= observed - TIE_TOLERANCE * observed.abs().max(1.0),
            Direction::SmallRejects => candidate <= observed + TIE_TOLERANCE * observed.abs(),
        }
    }
}

pub const TIE_TOLERANCE: f64 = 1e-12;

/// A statistic value tagged with its rejection direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatisticValue {
    pub value: f64,
    pub direction: Direction,
}

/// Test-oriented values of all seven statistics, indexed by
/// [`StatisticKind::index`]: `|CATT_1/2|`, Pearson, MIN2, MAX3, CMAX, CLRT,
/// `|MERT|`.
pub type StatisticSet = [f64; 7];

/// Where the data-driven score `s` falls; decides the CMAX and CLRT branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreRegion {
    /// Some `m_i = 0` or a zero denominator.
    Undefined,
    /// `0 < s < 1`.
    Interior,
    /// `s = 0` or `s = 1`.
    Boundary,
    Outside,
}

/// All per-table quantities; signed where the statistic has a sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableStatistics {
    pub catt0: f64,
    pub catt_half: f64,
    pub catt1: f64,
    pub pearson: f64,
    pub min2: f64,
    pub max3: f64,
    pub cmax: f64,
    pub clrt: f64,
    pub mert: f64,
    pub score: ScoreRegion,
}

impl TableStatistics {
    pub fn value(&self, kind: StatisticKind) -> f64 {
        match kind {
            StatisticKind::CattHalf => self.catt_half.abs(),
            StatisticKind::Pearson => self.pearson,
            StatisticKind::Min2 => self.min2,
            StatisticKind::Max3 => self.max3,
            StatisticKind::Cmax => self.cmax,
            StatisticKind::Clrt => self.clrt,
            StatisticKind::Mert => self.mert.abs(),
        }
    }

    pub fn set(&self) -> StatisticSet {
        StatisticKind::ALL.map(|k| self.value(k))
    }

    pub fn statistic(&self, kind: StatisticKind) -> StatisticValue {
        StatisticValue {
            value: self.value(kind),
            direction: kind.direction(),
        }
    }
}

/// `l ln l` with `0 ln 0 = 0`.
#[inline]
pub fn xlnx(l: u64) -> f64 {
    if l == 0 {
        0.0
    } else {
        let v = l as f64;
        v * v.ln()
    }
}

/// Margin-level constants shared by every table with the same margins.
#[derive(Debug, Clone)]
pub struct MarginContext<'a> {
    m: [u32; 3],
    n1: u32,
    n2: u32,
    n: f64,
    // 1/sd for the CATT numerators with scores (0,0,1), (0,1/2,1), (0,1,1).
    inv_sd: [f64; 3],
    pearson_weight: [f64; 3],
    mert_scale: f64,
    l0: f64,
    rec_const: f64,
    dom_const: f64,
    row_terms: f64,
    xlx: Option<&'a [f64]>,
}

impl<'a> MarginContext<'a> {
    pub fn new(m: &Margins) -> Self {
        Self::build(m, None)
    }

    /// Uses a precomputed `l ln l` table (entries must equal [`xlnx`]) for
    /// the CLRT log-likelihoods.
    pub fn with_xlnx_table(m: &Margins, table: &'a [f64]) -> Self {
        assert!(table.len() as u64 > m.total(), "x ln x table too short");
        Self::build(m, Some(table))
    }

    fn build(m: &Margins, xlx: Option<&'a [f64]>) -> Self {
        let cols = m.columns();
        let (n1, n2) = (m.n1(), m.n2());
        let total = m.total();
        let n = total as f64;
        let n1n2 = f64::from(n1) * f64::from(n2);
        let mi = cols.map(i128::from);
        let ni = i128::from(total);
        // 4·(N·Σs²m − (Σsm)²) with integer scores a = 2s ∈ {0,1,2}.
        let var4 = |a1: i128| {
            let s2 = a1 * a1 * mi[1] + 4 * mi[2];
            let s1 = a1 * mi[1] + 2 * mi[2];
            ni * s2 - s1 * s1
        };
        let inv_sd = [0, 1, 2].map(|a1| {
            let v = var4(a1);
            if v <= 0 {
                0.0
            } else {
                // n1·n2·(Σs²m − (Σsm)²/N) = n1·n2·v / (4N)
                1.0 / (n1n2 * v as f64 / (4.0 * n)).sqrt()
            }
        });
        let pearson_weight = cols.map(|c| if c == 0 { 0.0 } else { 1.0 / (f64::from(c) * n1n2) });
        let [g0, g2] = [f64::from(cols[0]) / n, f64::from(cols[2]) / n];
        let rho = if g0 >= 1.0 || g2 >= 1.0 {
            0.0
        } else {
            (g0 * g2 / ((1.0 - g0) * (1.0 - g2))).sqrt()
        };
        let mut ctx = Self {
            m: cols,
            n1,
            n2,
            n,
            inv_sd,
            pearson_weight,
            mert_scale: 1.0 / (2.0 * (1.0 + rho)).sqrt(),
            l0: 0.0,
            rec_const: 0.0,
            dom_const: 0.0,
            row_terms: 0.0,
            xlx,
        };
        let [m0, m1, m2] = cols.map(u64::from);
        ctx.row_terms = ctx.xl(u64::from(n1)) + ctx.xl(u64::from(n2));
        ctx.l0 = ctx.xl(m0) + ctx.xl(m1) + ctx.xl(m2) - ctx.xl(total);
        ctx.rec_const = ctx.xl(m0) + ctx.xl(m1) - ctx.xl(m0 + m1);
        ctx.dom_const = ctx.xl(m1) + ctx.xl(m2) - ctx.xl(m1 + m2);
        ctx
    }

    #[inline]
    fn xl(&self, l: u64) -> f64 {
        match self.xlx {
            Some(t) => t[l as usize],
            None => xlnx(l),
        }
    }

    pub fn margins(&self) -> Margins {
        Margins::new(self.m, self.n1).expect("context built from valid margins")
    }

    /// `N·x_i − n1·m_i`, the score-free pieces of every CATT numerator.
    #[inline]
    fn centred(&self, x: [u32; 3]) -> [f64; 3] {
        let n = i64::from(self.n1) + i64::from(self.n2);
        [0, 1, 2].map(|i| (n * i64::from(x[i]) - i64::from(self.n1) * i64::from(self.m[i])) as f64)
    }

    /// `CATT_s` with scores `(0, s, 1)` for an arbitrary `s`.
    pub fn catt(&self, x0: u32, x1: u32, s: f64) -> f64 {
        let x = [x0, x1, self.n1 - x0 - x1];
        let u = self.centred(x);
        let [_, m1, m2] = self.m.map(f64::from);
        let n1n2 = f64::from(self.n1) * f64::from(self.n2);
        let var = n1n2 * ((s * s * m1 + m2) - (s * m1 + m2).powi(2) / self.n);
        if var <= 0.0 {
            return 0.0;
        }
        (s * u[1] + u[2]) / var.sqrt()
    }

    /// Classifies the data-driven score in exact integer arithmetic.
    pub fn score_region(&self, x0: u32, x1: u32) -> ScoreRegion {
        let [m0, m1, m2] = self.m.map(i128::from);
        if m0 == 0 || m1 == 0 || m2 == 0 {
            return ScoreRegion::Undefined;
        }
        let (x0, x1) = (i128::from(x0), i128::from(x1));
        let x2 = i128::from(self.n1) - x0 - x1;
        // s = a / b
        let a = (x1 * m0 - x0 * m1) * m2;
        let b = (x2 * m0 - x0 * m2) * m1;
        if b == 0 {
            return ScoreRegion::Undefined;
        }
        let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
        if a == 0 || a == b {
            ScoreRegion::Boundary
        } else if a > 0 && a < b {
            ScoreRegion::Interior
        } else {
            ScoreRegion::Outside
        }
    }

    /// Evaluates every statistic for the table with case row
    /// `(x0, x1, n1 − x0 − x1)`.
    #[inline]
    pub fn evaluate(&self, x0: u32, x1: u32) -> TableStatistics {
        let x2 = self.n1 - x0 - x1;
        let x = [x0, x1, x2];
        let u = self.centred(x);
        let catt0 = u[2] * self.inv_sd[0];
        let catt_half = (0.5 * u[1] + u[2]) * self.inv_sd[1];
        let catt1 = (u[1] + u[2]) * self.inv_sd[2];
        let pearson = u[0] * u[0] * self.pearson_weight[0]
            + u[1] * u[1] * self.pearson_weight[1]
            + u[2] * u[2] * self.pearson_weight[2];
        let min2 = (2.0 * normal_sf(catt_half.abs())).min((-0.5 * pearson).exp()).min(1.0);
        let max3 = catt0.abs().max(catt_half.abs()).max(catt1.abs());
        let score = self.score_region(x0, x1);
        let cmax = match score {
            ScoreRegion::Interior => pearson,
            _ => (catt0 * catt0).max(catt1 * catt1),
        };

        let [m0, m1, m2] = self.m;
        let y = [m0 - x0, m1 - x1, m2 - x2].map(u64::from);
        let x = x.map(u64::from);
        let loglik = match score {
            ScoreRegion::Interior | ScoreRegion::Boundary => {
                self.xl(x[0]) + self.xl(x[1]) + self.xl(x[2]) + self.xl(y[0]) + self.xl(y[1])
                    + self.xl(y[2])
                    - self.row_terms
            }
            _ => {
                let rec = self.xl(x[0] + x[1]) + self.xl(x[2]) + self.xl(y[0] + y[1])
                    + self.xl(y[2])
                    + self.rec_const
                    - self.row_terms;
                let dom = self.xl(x[0]) + self.xl(x[1] + x[2]) + self.xl(y[0])
                    + self.xl(y[1] + y[2])
                    + self.dom_const
                    - self.row_terms;
                rec.max(dom)
            }
        };
        let clrt = if u == [0.0; 3] {
            0.0
        } else {
            (2.0 * (loglik - self.l0)).max(0.0)
        };
        let mert = (catt0 + catt1) * self.mert_scale;
        TableStatistics {
            catt0,
            catt_half,
            catt1,
            pearson,
            min2,
            max3,
            cmax,
            clrt,
            mert,
            score,
        }
    }

    /// The seven test-oriented values only.
    #[inline]
    pub fn evaluate_set(&self, x0: u32, x1: u32) -> StatisticSet {
        self.evaluate(x0, x1).set()
    }
}

/// All statistics for one table.
pub fn table_statistics(t: &ContingencyTable) -> TableStatistics {
    let m = t.margins();
    let [x0, x1, _] = t.cases();
    MarginContext::new(&m).evaluate(x0, x1)
}

/// Test-oriented value and direction of one statistic.
pub fn statistic(kind: StatisticKind, t: &ContingencyTable) -> StatisticValue {
    table_statistics(t).statistic(kind)
}

/// Signed Cochran–Armitage trend statistic with scores `(0, s, 1)`.
pub fn catt(t: &ContingencyTable, s: f64) -> f64 {
    let stats = table_statistics(t);
    if s == 0.0 {
        stats.catt0
    } else if s == 0.5 {
        stats.catt_half
    } else if s == 1.0 {
        stats.catt1
    } else {
        let m = t.margins();
        let [x0, x1, _] = t.cases();
        MarginContext::new(&m).catt(x0, x1, s)
    }
}

pub fn pearson(t: &ContingencyTable) -> f64 {
    table_statistics(t).pearson
}

/// `s = (x1/m1 − x0/m0) / (x2/m2 − x0/m0)`, or `None` when undefined.
pub fn data_driven_score(t: &ContingencyTable) -> Option<f64> {
    let m = t.margins().columns().map(f64::from);
    if m.contains(&0.0) {
        return None;
    }
    let x = t.cases().map(f64::from);
    let p = [x[0] / m[0], x[1] / m[1], x[2] / m[2]];
    let denom = p[2] - p[0];
    if denom == 0.0 {
        return None;
    }
    Some((p[1] - p[0]) / denom)
}

pub fn max3(t: &ContingencyTable) -> f64 {
    table_statistics(t).max3
}

pub fn cmax(t: &ContingencyTable) -> f64 {
    table_statistics(t).cmax
}

pub fn clrt(t: &ContingencyTable) -> f64 {
    table_statistics(t).clrt
}

/// Signed MERT; tests use `|MERT|`.
pub fn mert(t: &ContingencyTable) -> f64 {
    table_statistics(t).mert
}

pub fn min2_statistic(t: &ContingencyTable) -> f64 {
    table_statistics(t).min2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotic::{p_catt, p_pearson};
    use proptest::prelude::*;

    fn t(x: [u32; 3], y: [u32; 3]) -> ContingencyTable {
        ContingencyTable::new(x, y).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    // Textbook forms, written independently of the context code.
    fn catt_direct(t: &ContingencyTable, s: f64) -> f64 {
        let sc = [0.0, s, 1.0];
        let x = t.cases().map(f64::from);
        let y = t.controls().map(f64::from);
        let (n1, n2) = (t.n1() as f64, t.n2() as f64);
        let n = n1 + n2;
        let m: Vec<f64> = (0..3).map(|i| x[i] + y[i]).collect();
        let num: f64 = (0..3).map(|i| sc[i] * (n2 * x[i] - n1 * y[i])).sum();
        let ss: f64 = (0..3).map(|i| sc[i] * sc[i] * m[i]).sum();
        let s1: f64 = (0..3).map(|i| sc[i] * m[i]).sum();
        let var = n1 * n2 * (ss - s1 * s1 / n);
        if var <= 0.0 {
            0.0
        } else {
            num / var.sqrt()
        }
    }

    fn pearson_direct(t: &ContingencyTable) -> f64 {
        let x = t.cases().map(f64::from);
        let y = t.controls().map(f64::from);
        let (n1, n2) = (t.n1() as f64, t.n2() as f64);
        let n = n1 + n2;
        (0..3)
            .filter(|&i| x[i] + y[i] > 0.0)
            .map(|i| {
                let m = x[i] + y[i];
                let (ex, ey) = (m * n1 / n, m * n2 / n);
                (x[i] - ex).powi(2) / ex + (y[i] - ey).powi(2) / ey
            })
            .sum()
    }

    #[test]
    fn catt_examples() {
        let tab = t([10, 20, 30], [30, 20, 10]);
        assert!(close(catt(&tab, 0.5), 1200.0 / 72000f64.sqrt(), 1e-12));
        assert!(close(catt(&tab, 0.5), 20f64.sqrt(), 1e-12));
        assert!(close(catt(&tab, 0.0), 1200.0 / 96000f64.sqrt(), 1e-12));
        assert!(close(catt(&tab, 0.0), 3.87298, 1e-5));
        assert!(close(catt(&tab, 0.3), catt_direct(&tab, 0.3), 1e-12));
        let sym = t([4, 7, 2], [4, 7, 2]);
        for s in [0.0, 0.25, 0.5, 1.0] {
            assert_eq!(catt(&sym, s), 0.0);
        }
        // Zero variance: every case and control in one genotype.
        assert_eq!(catt(&t([3, 0, 0], [5, 0, 0]), 0.5), 0.0);
    }

    #[test]
    fn pearson_examples() {
        assert!(close(pearson(&t([10, 20, 30], [30, 20, 10])), 20.0, 1e-12));
        assert!(close(pearson(&t([2, 0, 0], [0, 1, 1])), 4.0, 1e-12));
        assert_eq!(pearson(&t([3, 1, 4], [3, 1, 4])), 0.0);
        assert!(close(pearson(&t([3, 0, 4], [1, 0, 9])), pearson_direct(&t([3, 0, 4], [1, 0, 9])), 1e-12));
    }

    #[test]
    fn data_driven_score_examples() {
        assert_eq!(data_driven_score(&t([10, 20, 30], [30, 20, 10])), Some(0.5));
        assert_eq!(data_driven_score(&t([3, 3, 3], [3, 3, 3])), None);
        assert_eq!(data_driven_score(&t([0, 5, 10], [10, 5, 0])), Some(0.5));
        assert_eq!(data_driven_score(&t([0, 5, 0], [10, 5, 0])), None);
    }

    #[test]
    fn max3_examples() {
        let tab = t([10, 20, 30], [30, 20, 10]);
        assert!(close(max3(&tab), 20f64.sqrt(), 1e-12));
        assert_eq!(max3(&t([1, 2, 3], [1, 2, 3])), 0.0);
        let small = t([2, 0, 0], [0, 1, 1]);
        let want = [0.0, 0.5, 1.0]
            .iter()
            .map(|&s| catt_direct(&small, s).abs())
            .fold(0.0, f64::max);
        assert!(close(max3(&small), want, 1e-12));
    }

    #[test]
    fn cmax_examples() {
        assert!(close(cmax(&t([10, 20, 30], [30, 20, 10])), 20.0, 1e-12));
        assert_eq!(cmax(&t([2, 2, 2], [2, 2, 2])), 0.0);
        // Case proportions 0.2, 0.5, 0.45 give s = 1.2.
        let tab = t([20, 50, 45], [80, 50, 55]);
        let s = data_driven_score(&tab).unwrap();
        assert!(close(s, 1.2, 1e-12));
        let want = catt(&tab, 0.0).powi(2).max(catt(&tab, 1.0).powi(2));
        assert!(close(cmax(&tab), want, 1e-12));
        let grid = (0..=10_000)
            .map(|i| catt_direct(&tab, f64::from(i) / 1e4).powi(2))
            .fold(0.0, f64::max);
        assert!(close(cmax(&tab), grid, 1e-9));
    }

    // Trinomial log-likelihood maximized over p_i, q_i subject to
    // p0/q0 = p1/q1 (rec) or p1/q1 = p2/q2 (dom) by a 1-d grid over the
    // shared case fraction of the merged columns.
    fn constrained_max_numeric(t: &ContingencyTable, merge: (usize, usize)) -> f64 {
        let x = t.cases().map(f64::from);
        let y = t.controls().map(f64::from);
        let (n1, n2) = (t.n1() as f64, t.n2() as f64);
        let xl = |v: f64| if v > 0.0 { v * v.ln() } else { 0.0 };
        let (a, b) = merge;
        let c = 3 - a - b;
        let lone = xl(x[c]) + xl(y[c]) - xl(n1) - xl(n2) + xl(x[a] + x[b]) + xl(y[a] + y[b]);
        // Within the merged pair, split both rows with a common fraction r.
        let ll = |r: f64| {
            let w = |v: f64, p: f64| if v > 0.0 { v * p.ln() } else { 0.0 };
            w(x[a], r) + w(x[b], 1.0 - r) + w(y[a], r) + w(y[b], 1.0 - r)
        };
        let best = (1..200_000)
            .map(|i| ll(f64::from(i) / 200_000.0))
            .fold(f64::NEG_INFINITY, f64::max);
        lone + best
    }

    #[test]
    fn clrt_examples() {
        let tab = t([10, 20, 30], [30, 20, 10]);
        let xl = |v: f64| v * v.ln();
        let l1 = 2.0 * (xl(10.0) + xl(20.0) + xl(30.0)) - 2.0 * xl(60.0);
        let l0 = 3.0 * xl(40.0) - xl(120.0);
        assert!(close(l1, -121.3686, 1e-4) && close(l0, -131.8334, 1e-4));
        assert!(close(clrt(&tab), 2.0 * (l1 - l0), 1e-10));
        assert!(close(clrt(&tab), 20.929, 1e-3));
        assert_eq!(clrt(&t([6, 1, 2], [6, 1, 2])), 0.0);

        // Anti-monotone: heterozygotes carry the excess.
        let anti = t([10, 40, 12], [30, 10, 28]);
        let s = data_driven_score(&anti).unwrap();
        assert!(!(0.0..=1.0).contains(&s));
        let l0 = xl(40.0) + xl(50.0) + xl(40.0) - xl(130.0);
        let rec = constrained_max_numeric(&anti, (0, 1));
        let dom = constrained_max_numeric(&anti, (1, 2));
        let want = 2.0 * (rec.max(dom) - l0);
        assert!(close(clrt(&anti), want, 1e-6), "{} vs {want}", clrt(&anti));
    }

    #[test]
    fn mert_examples() {
        let tab = t([10, 20, 30], [30, 20, 10]);
        let c0 = catt(&tab, 0.0);
        assert!(close(mert(&tab), 2.0 * c0 / 3f64.sqrt(), 1e-12));
        assert!(close(mert(&tab), 4.47214, 1e-5));
        assert_eq!(mert(&t([3, 2, 1], [3, 2, 1])), 0.0);
        // g = (0.81, 0.18, 0.01) → ρ = 0.207514.
        let tab = t([40, 10, 0], [41, 8, 1]);
        let rho: f64 = (0.0081f64 / 0.1881).sqrt();
        assert!(close(rho, 0.207514, 1e-6));
        let want = (catt(&tab, 0.0) + catt(&tab, 1.0)) / (2.0 * (1.0 + rho)).sqrt();
        assert!(close(mert(&tab), want, 1e-12));
    }

    #[test]
    fn min2_examples() {
        let tab = t([10, 20, 30], [30, 20, 10]);
        let want = p_catt(20f64.sqrt()).min(p_pearson(20.0).unwrap());
        assert!(close(min2_statistic(&tab), want, 1e-18));
        assert!(close(min2_statistic(&tab), 7.744e-6, 1e-8));
        assert_eq!(min2_statistic(&t([2, 5, 1], [2, 5, 1])), 1.0);
        assert_eq!(StatisticKind::Min2.direction(), Direction::SmallRejects);
        for k in StatisticKind::ALL {
            assert_eq!(k.direction() == Direction::SmallRejects, k == StatisticKind::Min2);
        }
    }

    #[test]
    fn kind_parsing() {
        for k in StatisticKind::ALL {
            assert_eq!(k.name().parse::<StatisticKind>().unwrap(), k);
        }
        assert_eq!("catt".parse::<StatisticKind>().unwrap(), StatisticKind::CattHalf);
        assert!("foo".parse::<StatisticKind>().is_err());
    }

    #[test]
    fn ties_err_toward_inclusion() {
        let d = Direction::LargeRejects;
        assert!(d.at_least_as_extreme(4.0 - 1e-13, 4.0));
        assert!(!d.at_least_as_extreme(3.9, 4.0));
        assert!(d.at_least_as_extreme(0.0, 1e-15));
        let d = Direction::SmallRejects;
        assert!(d.at_least_as_extreme(1e-20 * (1.0 + 1e-13), 1e-20));
        assert!(!d.at_least_as_extreme(2e-20, 1e-20));
    }

    fn table_strategy() -> impl Strategy<Value = ContingencyTable> {
        (prop::array::uniform3(0u32..40), prop::array::uniform3(0u32..40))
            .prop_filter("rows non-empty", |(x, y)| x.iter().sum::<u32>() > 0 && y.iter().sum::<u32>() > 0)
            .prop_map(|(x, y)| ContingencyTable::new(x, y).unwrap())
    }

    fn rel_close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
    }

    proptest! {
        #[test]
        fn matches_textbook_formulas(tab in table_strategy()) {
            for s in [0.0, 0.5, 1.0] {
                prop_assert!(rel_close(catt(&tab, s), catt_direct(&tab, s)));
            }
            prop_assert!(rel_close(pearson(&tab), pearson_direct(&tab)));
        }

        #[test]
        fn homozygote_swap_symmetry(tab in table_strategy()) {
            let a = table_statistics(&tab);
            let b = table_statistics(&tab.swap_homozygotes());
            prop_assert!(rel_close(a.catt_half.abs(), b.catt_half.abs()));
            prop_assert!(rel_close(a.catt0.abs(), b.catt1.abs()));
            prop_assert!(rel_close(a.catt1.abs(), b.catt0.abs()));
            for k in StatisticKind::ALL {
                prop_assert!(rel_close(a.value(k), b.value(k)), "{} {} {}", k, a.value(k), b.value(k));
            }
        }

        #[test]
        fn row_swap_symmetry(tab in table_strategy()) {
            let a = table_statistics(&tab);
            let b = table_statistics(&tab.swap_rows());
            prop_assert!(rel_close(a.pearson, b.pearson));
            prop_assert!(rel_close(a.max3, b.max3));
            prop_assert!(rel_close(a.cmax, b.cmax));
            prop_assert!(rel_close(a.clrt, b.clrt));
            prop_assert!(rel_close(a.catt0, -b.catt0));
            prop_assert!(rel_close(a.catt_half, -b.catt_half));
            prop_assert!(rel_close(a.catt1, -b.catt1));
            prop_assert!(rel_close(a.mert, -b.mert));
        }

        #[test]
        fn cmax_is_max_over_score_grid(tab in table_strategy()) {
            let grid = (0..=10_000)
                .map(|i| catt_direct(&tab, f64::from(i) / 1e4).powi(2))
                .fold(0.0, f64::max);
            let c = cmax(&tab);
            // Grid resolution 1e-4 in s; CATT_s² is smooth in s.
            prop_assert!(c >= grid - 1e-9 * grid.max(1.0));
            prop_assert!(c - grid <= 1e-6 * c.max(1.0), "cmax {} grid {}", c, grid);
        }

        #[test]
        fn ordering_properties(tab in table_strategy()) {
            let st = table_statistics(&tab);
            prop_assert!(st.clrt >= 0.0);
            prop_assert!(st.max3 >= st.catt_half.abs());
            prop_assert!(st.min2 > 0.0 && st.min2 <= 1.0);
            let m = tab.margins();
            let ctx = MarginContext::new(&m);
            let [x0, x1, _] = tab.cases();
            if matches!(ctx.score_region(x0, x1), ScoreRegion::Interior | ScoreRegion::Boundary) {
                prop_assert!(st.clrt >= 0.0);
            }
        }

        #[test]
        fn integer_score_region_agrees_with_float(tab in table_strategy()) {
            let m = tab.margins();
            let [x0, x1, _] = tab.cases();
            let region = MarginContext::new(&m).score_region(x0, x1);
            match data_driven_score(&tab) {
                None => prop_assert_eq!(region, ScoreRegion::Undefined),
                Some(s) if s > 1e-9 && s < 1.0 - 1e-9 => prop_assert_eq!(region, ScoreRegion::Interior),
                Some(s) if s < -1e-9 || s > 1.0 + 1e-9 => prop_assert_eq!(region, ScoreRegion::Outside),
                Some(_) => prop_assert_eq!(region, ScoreRegion::Boundary),
            }
        }

        #[test]
        fn xlnx_table_path_is_identical(tab in table_strategy()) {
            let m = tab.margins();
            let table: Vec<f64> = (0..=m.total()).map(xlnx).collect();
            let [x0, x1, _] = tab.cases();
            let a = MarginContext::new(&m).evaluate(x0, x1);
            let b = MarginContext::with_xlnx_table(&m, &table).evaluate(x0, x1);
            prop_assert_eq!(a, b);
        }
    }
}

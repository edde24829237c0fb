//! Asymptotic null distributions for the seven statistics.
//!
//! CATT, MERT and Pearson have closed-form tails. MIN2, MAX3 and CMAX (which
//! CLRT shares) are one-dimensional integrals over bivariate normal regions
//! and are evaluated with adaptive quadrature. Genotype frequencies entering
//! the correlation `ρ` are always estimated from the table margins.

pub mod quadrature;
pub mod special;

use std::f64::consts::PI;

pub use quadrature::{integrate, QuadratureSpec};

use crate::error::{Error, Result};
use crate::statistics::{MarginContext, StatisticKind, TableStatistics};
use crate::tables::{ContingencyTable, Margins};
use special::{chi2_1_upper_quantile, normal_cdf, normal_pdf, normal_sf, INV_2PI};

// Below this 1 − ρ², CATT_0 and CATT_1 are treated as identical.
const RHO_COLLAPSE: f64 = 1e-12;

/// Genotype frequencies `(g0, g1, g2)`, usually `m_i / N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenotypeFreqEstimate {
    g: [f64; 3],
}

impl GenotypeFreqEstimate {
    pub fn new(g0: f64, g1: f64, g2: f64) -> Result<Self> {
        let g = [g0, g1, g2];
        if g.iter().any(|v| !(0.0..=1.0).contains(v)) || (g0 + g1 + g2 - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "genotype frequencies must lie in [0,1] and sum to 1, got {g:?}"
            )));
        }
        Ok(Self { g })
    }

    pub fn from_margins(m: &Margins) -> Self {
        let n = m.total() as f64;
        let [m0, m1, m2] = m.columns();
        Self {
            g: [f64::from(m0) / n, f64::from(m1) / n, f64::from(m2) / n],
        }
    }

    pub fn freqs(&self) -> [f64; 3] {
        self.g
    }

    fn check(&self) -> Result<()> {
        let [g0, _, g2] = self.g;
        if g0 <= 0.0 || g0 >= 1.0 || g2 <= 0.0 || g2 >= 1.0 {
            return Err(Error::DegenerateFreqs { g0, g2 });
        }
        Ok(())
    }

    /// Null correlation of `CATT_0` and `CATT_1`.
    pub fn rho(&self) -> Result<f64> {
        self.check()?;
        let [g0, _, g2] = self.g;
        Ok((g0 * g2 / ((1.0 - g0) * (1.0 - g2))).sqrt().min(1.0))
    }

    /// Weights `(ω0, ω1)` with `CATT_1/2 ≈ ω0·CATT_0 + ω1·CATT_1`.
    pub fn omegas(&self) -> Result<(f64, f64)> {
        self.check()?;
        let [g0, _, g2] = self.g;
        let denom = g0 * (1.0 - g0) + g2 * (1.0 - g2) + 2.0 * g0 * g2;
        Ok((
            (g2 * (1.0 - g2) / denom).sqrt(),
            (g0 * (1.0 - g0) / denom).sqrt(),
        ))
    }

    /// Limiting probability that the data-driven score lies in (0, 1):
    /// `arccos(ρ) / π`.
    pub fn mixture_weight(&self) -> Result<f64> {
        Ok(self.rho()?.acos() / PI)
    }
}

/// Two-sided normal tail `2(1 − Φ(|z|))`.
pub fn p_catt(value: f64) -> f64 {
    (2.0 * normal_sf(value.abs())).min(1.0)
}

/// Chi-square(2) tail `e^{-x/2}`.
pub fn p_pearson(value: f64) -> Result<f64> {
    if value.is_nan() || value < 0.0 {
        return Err(Error::Domain(format!("Pearson statistic must be >= 0, got {value}")));
    }
    Ok((-0.5 * value).exp())
}

/// Two-sided normal tail for MERT.
pub fn p_mert(value: f64) -> f64 {
    p_catt(value)
}

/// Limiting `P(MIN2 ≤ t)`, which is the asymptotic p-value of an observed
/// MIN2 equal to `t`.
pub fn p_min2(t: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::Domain(format!("MIN2 value must be in (0,1], got {t}")));
    }
    if t == 1.0 {
        return Ok(1.0);
    }
    let q = chi2_1_upper_quantile(t)?;
    let upper = -2.0 * t.ln();
    let integral = if upper > q {
        integrate(
            |v| (-0.5 * v).exp() * (2.0 * q / v - 1.0).clamp(-1.0, 1.0).asin(),
            q,
            upper,
            spec,
        )?
    } else {
        0.0
    };
    Ok((0.5 * t + 0.5 * (-0.5 * q).exp() - INV_2PI * integral).clamp(0.0, 1.0))
}

// Φ(hi) − Φ(lo) for lo <= hi, taking the difference in whichever tail is
// more accurate.
#[inline]
fn normal_interval(lo: f64, hi: f64) -> f64 {
    if lo > 0.0 {
        normal_sf(lo) - normal_sf(hi)
    } else {
        normal_cdf(hi) - normal_cdf(lo)
    }
}

/// Limiting `P(MAX3 ≥ t)`: the bivariate normal mass of `(CATT_0, CATT_1)`
/// outside the hexagon `|z0| ≤ t, |z1| ≤ t, |ω0 z0 + ω1 z1| ≤ t`.
pub fn p_max3(t: f64, g: &GenotypeFreqEstimate, spec: &QuadratureSpec) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Domain(format!("MAX3 value must be >= 0, got {t}")));
    }
    let rho = g.rho()?;
    let (w0, w1) = g.omegas()?;
    if t == 0.0 {
        return Ok(1.0);
    }
    let one_minus_rho2 = 1.0 - rho * rho;
    if one_minus_rho2 < RHO_COLLAPSE {
        return Ok(p_catt(t));
    }
    let sd = one_minus_rho2.sqrt();
    let split = (1.0 - w1) * t / w0;
    let square = integrate(
        |x| normal_pdf(x) * normal_interval((-t - rho * x) / sd, (t - rho * x) / sd),
        0.0,
        split,
        spec,
    )?;
    let cut = integrate(
        |x| {
            let hi = ((t - w0 * x) / w1 - rho * x) / sd;
            let lo = (-t - rho * x) / sd;
            normal_pdf(x) * (normal_cdf(hi) - normal_cdf(lo))
        },
        split,
        t,
        spec,
    )?;
    Ok((1.0 - 2.0 * square - 2.0 * cut).clamp(0.0, 1.0))
}

/// Limiting `P(CMAX ≥ t)` (also used for CLRT): a mixture, with weight
/// `w = arccos(ρ)/π`, of the chi-square(2) tail and the tail of
/// `max(CATT_0², CATT_1²)`.
pub fn p_cmax(t: f64, g: &GenotypeFreqEstimate, spec: &QuadratureSpec) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Domain(format!("CMAX value must be >= 0, got {t}")));
    }
    let rho = g.rho()?;
    if t == 0.0 {
        return Ok(1.0);
    }
    let w = rho.acos() / PI;
    let root = t.sqrt();
    let one_minus_rho2 = 1.0 - rho * rho;
    let square = if one_minus_rho2 < RHO_COLLAPSE {
        // P(|Z| ≤ √t) / 2, the ρ = 1 limit of the integral below.
        0.5 * normal_interval(-root, root)
    } else {
        let sd = one_minus_rho2.sqrt();
        integrate(
            |x| normal_pdf(x) * normal_interval((-root - rho * x) / sd, (root - rho * x) / sd),
            0.0,
            root,
            spec,
        )?
    };
    let chi2_2_cdf = -(-0.5 * t).exp_m1();
    Ok((1.0 - w * chi2_2_cdf - 2.0 * (1.0 - w) * square).clamp(0.0, 1.0))
}

/// Asymptotic p-value of `kind` for an already evaluated table.
pub fn p_value_from(
    kind: StatisticKind,
    stats: &TableStatistics,
    g: &GenotypeFreqEstimate,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let value = stats.value(kind);
    match kind {
        StatisticKind::CattHalf => Ok(p_catt(value)),
        StatisticKind::Pearson => p_pearson(value),
        StatisticKind::Min2 => p_min2(value, spec),
        StatisticKind::Max3 => p_max3(value, g, spec),
        StatisticKind::Cmax | StatisticKind::Clrt => p_cmax(value, g, spec),
        StatisticKind::Mert => Ok(p_mert(value)),
    }
}

/// Asymptotic p-value of one statistic on `t`, with `g` estimated from the
/// margins of `t`.
pub fn asymptotic_p(kind: StatisticKind, t: &ContingencyTable) -> Result<f64> {
    let m = t.margins();
    let ctx = MarginContext::new(&m);
    let [x0, x1, _] = t.cases();
    let stats = ctx.evaluate(x0, x1);
    p_value_from(
        kind,
        &stats,
        &GenotypeFreqEstimate::from_margins(&m),
        &QuadratureSpec::default(),
    )
}

/// Asymptotic p-values of all seven statistics, indexed by
/// [`StatisticKind::index`].
pub fn asymptotic_p_all(t: &ContingencyTable, spec: &QuadratureSpec) -> [Result<f64>; 7] {
    let m = t.margins();
    let ctx = MarginContext::new(&m);
    let [x0, x1, _] = t.cases();
    let stats = ctx.evaluate(x0, x1);
    let g = GenotypeFreqEstimate::from_margins(&m);
    StatisticKind::ALL.map(|kind| p_value_from(kind, &stats, &g, spec))
}

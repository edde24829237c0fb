//! Normal and low-degree chi-square distribution functions.
//!
//! `erfc` comes from `libm` and the starting guess for its inverse from
//! `statrs`; everything here is a thin layer that keeps both tails accurate.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use libm::erfc;
use statrs::function::erf::erfc_inv;

use crate::error::{Error, Result};

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density φ.
#[inline]
pub fn normal_pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Standard normal cdf Φ.
#[inline]
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x * FRAC_1_SQRT_2)
}

/// Upper tail 1 − Φ(x), without cancellation for large x.
#[inline]
pub fn normal_sf(x: f64) -> f64 {
    0.5 * erfc(x * FRAC_1_SQRT_2)
}

/// Φ⁻¹(p) for p in (0, 1), polished with one Newton step.
pub fn normal_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("normal quantile needs p in (0,1), got {p}")));
    }
    if p > 0.5 {
        return Ok(-lower_quantile(1.0 - p));
    }
    Ok(lower_quantile(p))
}

fn lower_quantile(p: f64) -> f64 {
    let x = -SQRT_2 * erfc_inv(2.0 * p);
    let density = normal_pdf(x);
    if density > 0.0 {
        x - (normal_cdf(x) - p) / density
    } else {
        x
    }
}

fn check_chi2(x: f64, df: u32) -> Result<()> {
    if df != 1 && df != 2 {
        return Err(Error::Domain(format!("chi-square only supported for 1 or 2 df, got {df}")));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!("chi-square argument must be >= 0, got {x}")));
    }
    Ok(())
}

/// Chi-square cdf with 1 or 2 degrees of freedom.
pub fn chi2_cdf(x: f64, df: u32) -> Result<f64> {
    check_chi2(x, df)?;
    Ok(match df {
        1 => 1.0 - erfc((0.5 * x).sqrt()),
        _ => -(-0.5 * x).exp_m1(),
    })
}

/// Chi-square survival function with 1 or 2 degrees of freedom.
pub fn chi2_sf(x: f64, df: u32) -> Result<f64> {
    check_chi2(x, df)?;
    Ok(match df {
        1 => erfc((0.5 * x).sqrt()),
        _ => (-0.5 * x).exp(),
    })
}

/// The 1 − t quantile of chi-square with one degree of freedom, i.e. the `q`
/// with `P(χ²₁ ≥ q) = t`.
pub fn chi2_1_upper_quantile(t: f64) -> Result<f64> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::Domain(format!("tail probability must be in (0,1], got {t}")));
    }
    if t == 1.0 {
        return Ok(0.0);
    }
    let z = normal_quantile(0.5 * t)?;
    Ok(z * z)
}

pub(crate) const INV_2PI: f64 = 0.5 / PI;

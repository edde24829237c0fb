//! Genetic models for a single biallelic marker.
//!
//! A model is given by prevalence `k`, minor allele frequency, the shape
//! parameter `delta` and the homozygote relative risk `lambda2`; the
//! heterozygote risk is `lambda1 = 1 - delta + delta * lambda2`, so `delta`
//! of 0, 1/4, 1/2, 3/4 and 1 give the recessive, semi-recessive, additive,
//! semi-dominant and dominant models.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneticModelSpec {
    pub k: f64,
    pub maf: f64,
    pub delta: f64,
    pub lambda2: f64,
}

impl GeneticModelSpec {
    pub fn new(k: f64, maf: f64, delta: f64, lambda2: f64) -> Result<Self> {
        let spec = Self { k, maf, delta, lambda2 };
        spec.validate()?;
        Ok(spec)
    }

    /// The null model with the same prevalence and allele frequency.
    pub fn null(k: f64, maf: f64) -> Result<Self> {
        Self::new(k, maf, 0.5, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        let open = |v: f64| v > 0.0 && v < 1.0;
        if !open(self.k) {
            return Err(Error::Domain(format!("prevalence k must be in (0,1), got {}", self.k)));
        }
        if !open(self.maf) {
            return Err(Error::Domain(format!("maf must be in (0,1), got {}", self.maf)));
        }
        if !(0.0..=1.0).contains(&self.delta) {
            return Err(Error::Domain(format!("delta must be in [0,1], got {}", self.delta)));
        }
        if !(self.lambda2 >= 1.0 && self.lambda2.is_finite()) {
            return Err(Error::Domain(format!("lambda2 must be >= 1, got {}", self.lambda2)));
        }
        Ok(())
    }

    pub fn lambda1(&self) -> f64 {
        // 1 - delta + delta * lambda2, written so the null gives exactly 1.
        1.0 + self.delta * (self.lambda2 - 1.0)
    }

    pub fn is_null(&self) -> bool {
        self.lambda2 == 1.0
    }
}

/// Genotype probabilities among cases (`p`) and controls (`q`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PopulationParams {
    pub p: [f64; 3],
    pub q: [f64; 3],
}

impl PopulationParams {
    pub fn new(p: [f64; 3], q: [f64; 3]) -> Result<Self> {
        for (name, v) in [("case", p), ("control", q)] {
            if v.iter().any(|&x| !(x >= 0.0)) || (v.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
                return Err(Error::Domain(format!(
                    "{name} genotype probabilities must be non-negative and sum to 1, got {v:?}"
                )));
            }
        }
        Ok(Self { p, q })
    }

    /// Both rows drawn from the same genotype distribution.
    pub fn null(g: [f64; 3]) -> Result<Self> {
        Self::new(g, g)
    }
}

impl fmt::Display for PopulationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p=({:.6}, {:.6}, {:.6}) q=({:.6}, {:.6}, {:.6})",
            self.p[0], self.p[1], self.p[2], self.q[0], self.q[1], self.q[2]
        )
    }
}

/// Hardy–Weinberg genotype frequencies for minor allele frequency `maf`.
pub fn hwe_genotype_freqs(maf: f64) -> [f64; 3] {
    let major = 1.0 - maf;
    [major * major, 2.0 * maf * major, maf * maf]
}

/// Penetrances `(f0, f1, f2)` solving `k = Σ f_i g_i`.
pub fn penetrances(spec: &GeneticModelSpec) -> Result<[f64; 3]> {
    spec.validate()?;
    let g = hwe_genotype_freqs(spec.maf);
    let lambda1 = spec.lambda1();
    let f0 = spec.k / (g[0] + lambda1 * g[1] + spec.lambda2 * g[2]);
    let f = [f0, lambda1 * f0, spec.lambda2 * f0];
    if f[2] > 1.0 {
        return Err(Error::PenetranceOverflow { f2: f[2] });
    }
    Ok(f)
}

/// Case and control genotype probabilities implied by a genetic model
/// under Hardy–Weinberg equilibrium.
pub fn theta_from_model(spec: &GeneticModelSpec) -> Result<PopulationParams> {
    let f = penetrances(spec)?;
    let g = hwe_genotype_freqs(spec.maf);
    let k = spec.k;
    let mut p: [f64; 3] = std::array::from_fn(|i| f[i] * g[i] / k);
    let mut q: [f64; 3] = std::array::from_fn(|i| (1.0 - f[i]) * g[i] / (1.0 - k));
    // Rounding can leave the sums a few ulps off 1.
    for v in [&mut p, &mut q] {
        let s: f64 = v.iter().sum();
        v.iter_mut().for_each(|x| *x /= s);
    }
    PopulationParams::new(p, q)
}

/// Whether `p0/q0 <= p1/q1 <= p2/q2`, i.e. no overdominance. Ratios are
/// compared by cross-multiplication so zero controls are handled; a 0/0
/// genotype imposes no constraint.
pub fn is_monotone(theta: &PopulationParams) -> bool {
    let (p, q) = (theta.p, theta.q);
    let present: Vec<usize> = (0..3).filter(|&i| p[i] > 0.0 || q[i] > 0.0).collect();
    present
        .windows(2)
        .all(|w| p[w[0]] * q[w[1]] <= p[w[1]] * q[w[0]] * (1.0 + 1e-12))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn hwe() {
        assert!(close(hwe_genotype_freqs(0.1), [0.81, 0.18, 0.01], 1e-15));
        assert!(close(hwe_genotype_freqs(0.5), [0.25, 0.5, 0.25], 1e-15));
        assert!(close(hwe_genotype_freqs(0.2), [0.64, 0.32, 0.04], 1e-15));
    }

    #[test]
    fn dominant_example() {
        let spec = GeneticModelSpec::new(0.1, 0.1, 1.0, 2.0).unwrap();
        assert_eq!(spec.lambda1(), 2.0);
        let f = penetrances(&spec).unwrap();
        assert!((f[0] - 0.1 / 1.19).abs() < 1e-15);
        let theta = theta_from_model(&spec).unwrap();
        assert!(close(theta.p, [0.680672, 0.302521, 0.0168067], 1e-6));
        assert!(close(theta.q, [0.824370, 0.166387, 0.00924370], 1e-6));
        assert!(is_monotone(&theta));
    }

    #[test]
    fn recessive_example() {
        let spec = GeneticModelSpec::new(0.1, 0.1, 0.0, 2.0).unwrap();
        let f = penetrances(&spec).unwrap();
        assert!((f[0] - 0.1 / 1.01).abs() < 1e-15);
        let theta = theta_from_model(&spec).unwrap();
        let r: Vec<f64> = (0..3).map(|i| theta.p[i] / theta.q[i]).collect();
        assert!(r[0] <= r[1] && r[1] <= r[2]);
        assert!(is_monotone(&theta));
    }

    #[test]
    fn null_model() {
        let theta = theta_from_model(&GeneticModelSpec::null(0.1, 0.3).unwrap()).unwrap();
        assert!(close(theta.p, hwe_genotype_freqs(0.3), 1e-15));
        assert!(close(theta.q, hwe_genotype_freqs(0.3), 1e-15));
        assert!(is_monotone(&theta));
    }

    #[test]
    fn overdominant_and_overflow() {
        let theta = PopulationParams::new([0.2, 0.6, 0.2], [0.4, 0.2, 0.4]).unwrap();
        assert!(!is_monotone(&theta));
        let spec = GeneticModelSpec::new(0.5, 0.01, 0.0, 3.0).unwrap();
        assert!(matches!(theta_from_model(&spec), Err(Error::PenetranceOverflow { .. })));
        assert!(GeneticModelSpec::new(0.1, 0.0, 0.5, 2.0).is_err());
        assert!(GeneticModelSpec::new(0.1, 0.1, 1.5, 2.0).is_err());
        assert!(GeneticModelSpec::new(0.1, 0.1, 0.5, 0.9).is_err());
        assert!(PopulationParams::new([0.5, 0.5, 0.1], [1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn zero_genotype_is_compatible() {
        let theta = PopulationParams::new([0.5, 0.0, 0.5], [0.7, 0.0, 0.3]).unwrap();
        assert!(is_monotone(&theta));
    }

    #[test]
    fn study_grid_is_monotone() {
        for delta in [0.0, 0.25, 0.5, 0.75, 1.0] {
            for lambda2 in [1.1, 1.2, 1.5, 2.0] {
                let spec = GeneticModelSpec::new(0.1, 0.1, delta, lambda2).unwrap();
                assert!(is_monotone(&theta_from_model(&spec).unwrap()), "{spec:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn prevalence_is_reproduced(
            k in 0.01f64..0.5, maf in 0.01f64..0.99, delta in 0.0f64..=1.0, lambda2 in 1.0f64..3.0,
        ) {
            let spec = GeneticModelSpec::new(k, maf, delta, lambda2).unwrap();
            let Ok(theta) = theta_from_model(&spec) else { return Ok(()); };
            prop_assert!((theta.p.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert!((theta.q.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            // Back out f_i = p_i k / g_i and check the prevalence identity.
            let g = hwe_genotype_freqs(maf);
            let f: Vec<f64> = (0..3).map(|i| theta.p[i] * k / g[i]).collect();
            let k_back: f64 = (0..3).map(|i| f[i] * g[i]).sum();
            prop_assert!((k_back - k).abs() <= 1e-12);
            prop_assert!(is_monotone(&theta));
        }

        #[test]
        fn null_ignores_delta(k in 0.01f64..0.5, maf in 0.01f64..0.99, d1 in 0.0f64..=1.0, d2 in 0.0f64..=1.0) {
            let a = theta_from_model(&GeneticModelSpec::new(k, maf, d1, 1.0).unwrap()).unwrap();
            let b = theta_from_model(&GeneticModelSpec::new(k, maf, d2, 1.0).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

//! Tail probabilities of MIN2, MAX3 and CMAX as functions of the threshold,
//! for genotype frequencies under Hardy–Weinberg equilibrium at MAF 0.1.

use genassoc::asymptotic::{p_cmax, p_max3, p_min2, GenotypeFreqEstimate, QuadratureSpec};
use genassoc::genetics::hwe_genotype_freqs;

fn main() -> genassoc::Result<()> {
    let [g0, g1, g2] = hwe_genotype_freqs(0.1);
    let g = GenotypeFreqEstimate::new(g0, g1, g2)?;
    let spec = QuadratureSpec::default();
    let (w0, w1) = g.omegas()?;
    println!("rho = {:.6}, omega = ({w0:.4}, {w1:.4}), mixture weight = {:.6}", g.rho()?, g.mixture_weight()?);

    println!("\n{:>6} {:>12}", "t", "P(MAX3>=t)");
    for t in [1.0, 2.0, 3.0, 4.0, 5.0] {
        println!("{t:>6} {:>12.4e}", p_max3(t, &g, &spec)?);
    }
    println!("\n{:>6} {:>12}", "t", "P(CMAX>=t)");
    for t in [2.0, 6.0, 10.0, 20.0, 30.0] {
        println!("{t:>6} {:>12.4e}", p_cmax(t, &g, &spec)?);
    }
    println!("\n{:>8} {:>12}", "t", "P(MIN2<=t)");
    for t in [0.1, 0.01, 1e-4, 1e-6, 1e-8] {
        println!("{t:>8.0e} {:>12.4e}", p_min2(t, &spec)?);
    }
    Ok(())
}

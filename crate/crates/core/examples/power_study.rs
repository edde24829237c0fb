//! Simulated size and power of all seven statistics for one design.
//!
//! ```bash
//! cargo run --release --example power_study -- 20000
//! ```

use genassoc::genetics::GeneticModelSpec;
use genassoc::simulation::{estimate_power, Method, StudyDesign};
use genassoc::StatisticKind;

fn main() -> genassoc::Result<()> {
    let replicates = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5_000);
    let alphas = [0.05, 5e-3, 5e-5];
    for (label, spec) in [
        ("null", GeneticModelSpec::null(0.1, 0.1)?),
        ("semi-dominant, lambda2=1.5", GeneticModelSpec::new(0.1, 0.1, 0.75, 1.5)?),
    ] {
        let design = StudyDesign::new(500, 500, spec, replicates, &alphas, 7)?;
        let est = estimate_power(&design)?;
        println!("{label}, (500,500), b={replicates}");
        print!("{:<10}", "");
        for a in &est.alphas {
            print!("{:>20}", format!("alpha={a:e} A / C"));
        }
        println!();
        for kind in StatisticKind::ALL {
            print!("{:<10}", kind.name());
            for i in 0..est.alphas.len() {
                let a = 100.0 * est.power(kind, Method::Asymptotic, i);
                let c = 100.0 * est.power(kind, Method::Exact, i);
                print!("{:>20}", format!("{a:.2}% / {c:.2}%"));
            }
            println!();
        }
        println!();
    }
    Ok(())
}

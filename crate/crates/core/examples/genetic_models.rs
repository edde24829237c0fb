//! Case and control genotype probabilities for the five standard model
//! shapes at a fixed relative risk.

use genassoc::genetics::{is_monotone, penetrances, theta_from_model, GeneticModelSpec};

fn main() -> genassoc::Result<()> {
    let names = ["recessive", "semi-recessive", "additive", "semi-dominant", "dominant"];
    for (name, delta) in names.iter().zip([0.0, 0.25, 0.5, 0.75, 1.0]) {
        let spec = GeneticModelSpec::new(0.1, 0.1, delta, 2.0)?;
        let f = penetrances(&spec)?;
        let theta = theta_from_model(&spec)?;
        println!(
            "{name:<15} lambda1={:.2} f=({:.4}, {:.4}, {:.4}) {theta} monotone={}",
            spec.lambda1(),
            f[0],
            f[1],
            f[2],
            is_monotone(&theta)
        );
    }

    // Recessive models with a large effect need f2 > 1 at this prevalence.
    match theta_from_model(&GeneticModelSpec::new(0.1, 0.1, 0.0, 20.0)?) {
        Ok(theta) => println!("unexpectedly feasible: {theta}"),
        Err(e) => println!("lambda2=20, recessive: {e}"),
    }
    Ok(())
}

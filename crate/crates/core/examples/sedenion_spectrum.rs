//! The shifted spectrum of a random sedenion next to Δ = 2|Im x₁ × Im x₂|.

use cdmass::spectral::{shifted_spectrum, DEFAULT_CLUSTER_TOL};
use cdmass::structure::delta;
use cdmass::CdElement;

fn main() -> cdmass::Result<()> {
    for seed in 0..4 {
        let x = CdElement::random_seeded(4, seed)?;
        let s = shifted_spectrum(&x, DEFAULT_CLUSTER_TOL)?;
        let clusters: Vec<String> = s.clusters.iter().map(|c| format!("{:+.6} x{}", c.value, c.multiplicity)).collect();
        println!("seed {seed}: delta = {:.6}  spectrum = [{}]", delta(&x)?, clusters.join(", "));
    }
    Ok(())
}

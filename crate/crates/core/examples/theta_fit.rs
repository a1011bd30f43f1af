//! Fits the cos-sum pattern to a synthesized spectrum and to a measured one.

use cdmass::spectral::{Cluster, SpectrumMultiset, DEFAULT_CLUSTER_TOL};
use cdmass::structure::{cos_sum_values, delta, fit_theta_pattern, generic_alternative_element};

fn main() -> cdmass::Result<()> {
    let truth = [0.25, 0.7];
    let synthetic = SpectrumMultiset {
        clusters: cos_sum_values(1.3, &truth).into_iter().map(|value| Cluster { value, multiplicity: 4 }).collect(),
        cluster_tol: DEFAULT_CLUSTER_TOL,
        threshold: 1e-12,
    };
    let fit = fit_theta_pattern(&synthetic, 1.3, 2)?;
    println!("synthetic: thetas {:?} -> {:.6?}, residual {:.2e}", truth, fit.thetas, fit.residual);

    let draw = generic_alternative_element(6, 3)?;
    let d = delta(&draw.element)?;
    for amplitude in [d, d.sqrt()] {
        let fit = fit_theta_pattern(&draw.spectrum, amplitude, 2)?;
        println!(
            "level 6, amplitude {amplitude:.4}: residual {:.3e} (match threshold {:.3e})",
            fit.residual,
            1e-6 * amplitude * amplitude
        );
    }
    Ok(())
}

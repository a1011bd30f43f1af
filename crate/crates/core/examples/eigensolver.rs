//! Diagonalizes N_x for a random element of 𝔸₇ and checks the decomposition.

use cdmass::operators::n_operator_matrix;
use cdmass::spectral::{jacobi_eigen, DEFAULT_JACOBI_TOL};
use cdmass::CdElement;

fn main() -> cdmass::Result<()> {
    let x = CdElement::random_seeded(7, 99)?;
    let n = n_operator_matrix(&x)?;
    let spectrum = jacobi_eigen(&n, DEFAULT_JACOBI_TOL)?;
    let trace_err = (spectrum.eigenvalues.iter().sum::<f64>() - n.as_dense().trace()).abs();
    println!(
        "dim {}  sweeps {}  max residual {:.2e}  trace error {:.2e}",
        n.dim(),
        spectrum.sweeps,
        spectrum.residual,
        trace_err
    );
    println!("smallest {:.6}  largest {:.6}", spectrum.eigenvalues[0], spectrum.eigenvalues[n.dim() - 1]);
    Ok(())
}

//! Evaluates every mass relation on the shipped table, or on a file given as
//! the first argument.

use cdmass::physics::{
    burakovsky_check, gmo_check, load_meson_data, mass_formula_16, vector_analogue, MesonTable, DEFAULT_Z,
};

fn main() -> cdmass::Result<()> {
    let table = match std::env::args().nth(1) {
        Some(path) => load_meson_data(path)?,
        None => MesonTable::shipped(),
    };
    for r in [
        mass_formula_16(&table, DEFAULT_Z)?,
        vector_analogue(&table, DEFAULT_Z)?,
        gmo_check(&table, DEFAULT_Z)?,
        burakovsky_check(&table, DEFAULT_Z)?,
    ] {
        println!("{:<40} ratio {} +/- {}  {:?}", r.relation, r.ratio_display, r.sigma_display, r.verdict);
    }
    Ok(())
}

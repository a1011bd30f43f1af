//! Builds elements whose two doubling entries are alternative and prints the
//! degeneracy profile of their spectra at levels 5 to 7.

use cdmass::structure::{expected_distinct_nonneg, generic_alternative_element, profile_of};

fn main() -> cdmass::Result<()> {
    for level in 5..=7 {
        let draw = generic_alternative_element(level, 11)?;
        let p = profile_of(level, &draw.spectrum);
        println!(
            "level {level}: even = {}, nonzero multiplicities divisible by 4 = {}, distinct non-negative = {} (expected {})",
            p.is_even_spectrum,
            p.nonzero_multiple_of_four,
            p.distinct_nonneg,
            expected_distinct_nonneg(level)
        );
        let values: Vec<String> =
            draw.spectrum.nonnegative().iter().map(|c| format!("{:.4}x{}", c.value, c.multiplicity)).collect();
        println!("  {}", values.join("  "));
    }
    Ok(())
}

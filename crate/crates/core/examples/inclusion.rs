use cdmass::structure::{inclusion_check, InclusionMode};

fn main() -> cdmass::Result<()> {
    for (level, mode, trials) in
        [(5, InclusionMode::Alternative, 20), (6, InclusionMode::Alternative, 10), (5, InclusionMode::Generic, 50)]
    {
        let r = inclusion_check(level, mode, trials, 7, 1e-7)?;
        println!("level {level} {mode:?}: {}/{} include", r.holds, r.trials);
        if let Some(seed) = r.violation_seeds.first() {
            println!("  first violating seed: {seed}");
        }
    }
    Ok(())
}

use cdmass::physics::{assign_thetas, check_monotonicity, Family, MesonTable, Multiplet, DEFAULT_THETAS};

fn main() -> cdmass::Result<()> {
    let table = MesonTable::shipped();
    let assignment = assign_thetas(Multiplet::Sixteen);
    for row in &assignment.rows {
        println!("{:<6} {:?}", row.label, row.coefficients);
    }
    for family in [Family::Pseudoscalar, Family::Vector] {
        let report = check_monotonicity(&assignment, &table, DEFAULT_THETAS, family)?;
        println!("\n{family:?}: monotone = {}", report.monotone);
        for s in &report.slots {
            println!("  {:<12} cos^2 = {:.4}  m = {:>9.3} MeV", format!("{:?}", s.slot), s.cos_sq, s.mass);
        }
        for v in &report.violations {
            println!(
                "  violation: {:?} should be lighter than {:?} (by {:.1} MeV)",
                v.lighter_expected, v.heavier_expected, v.mass_excess
            );
        }
    }
    Ok(())
}

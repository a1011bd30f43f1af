use cdmass::algebra::{property_report, Identity};

fn main() -> cdmass::Result<()> {
    print!("{:>6}", "level");
    for id in Identity::ALL {
        print!("{:>16}", id.name());
    }
    println!();
    for level in 0..=6 {
        let report = property_report(level, 300, 2024, 1e-10)?;
        print!("{level:>6}");
        for id in Identity::ALL {
            let r = report.result(id);
            print!("{:>16}", if r.holds { "yes" } else { "no" });
        }
        println!("{}", if report.matches_ladder() { "" } else { "   <- unexpected" });
    }
    Ok(())
}

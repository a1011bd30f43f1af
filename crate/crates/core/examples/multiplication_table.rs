//! Prints the signed basis table of an algebra level (default: octonions).
//!
//! cargo run --example multiplication_table -- 3

use cdmass::algebra::multiplication_table;

fn main() -> cdmass::Result<()> {
    let level: u32 = std::env::args().nth(1).map_or(3, |s| s.parse().expect("level"));
    for row in multiplication_table(level)? {
        let cells: Vec<String> = row.iter().map(|(s, k)| format!("{}{k:<2}", if *s > 0 { '+' } else { '-' })).collect();
        println!("{}", cells.join(" "));
    }
    Ok(())
}

//! Searches 𝔸₄ for zero divisors of the form (e_i ± e_j)(e_k ± e_l).

use cdmass::CdElement;

fn main() -> cdmass::Result<()> {
    let e = |i| CdElement::basis(4, i);
    let mut found = Vec::new();
    for i in 1..16 {
        for j in i + 1..16 {
            for k in 1..16 {
                for l in k + 1..16 {
                    for (s, t) in [(1.0, 1.0), (1.0, -1.0)] {
                        let a = &e(i)? + &e(j)?.scale(s);
                        let b = &e(k)? + &e(l)?.scale(t);
                        if a.multiply(&b)?.is_zero() {
                            found.push((i, s, j, k, t, l));
                        }
                    }
                }
            }
        }
    }
    println!("{} products of two-term units vanish", found.len());
    for (i, s, j, k, t, l) in found.iter().take(8) {
        let sign = |v: &f64| if *v > 0.0 { '+' } else { '-' };
        println!("(e{i} {} e{j})(e{k} {} e{l}) = 0", sign(s), sign(t));
    }
    Ok(())
}

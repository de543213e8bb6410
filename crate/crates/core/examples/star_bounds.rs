//! The star pattern required of `D(h₀)` and the bounds `Z(n)` derived from
//! it, compared with `15n/4`.

use epiverify::highest_weight::{z_lower, StarPattern};

fn main() -> epiverify::Result<()> {
    let pattern = StarPattern::printed();
    for r in 0..15 {
        let row: String = (0..4)
            .map(|c| {
                if pattern.stars().contains(&(r, c)) {
                    '*'
                } else {
                    '.'
                }
            })
            .collect();
        println!("e{:<3} {row}", r + 5);
    }
    println!("stars per column: {:?}", pattern.column_counts());
    for n in 1..=4 {
        let z = z_lower(n, &pattern)?;
        println!("Z({n}) = {z:>2}   15n/4 = {:>5.2}", 15.0 * n as f64 / 4.0);
    }
    Ok(())
}

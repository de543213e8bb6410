//! Graded dimensions of the invariant ring, by both methods.
//!
//! `cargo run --release --example invariant_dimensions -- 3`

use std::time::Instant;

use epiverify::invariants::{invariant_dimension_sampled, invariant_space, MIN_ORACLE_TRIALS};

fn main() -> epiverify::Result<()> {
    let max: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(2);
    for d in 0..=max {
        let t = Instant::now();
        let space = invariant_space(d, max)?;
        let kernel_time = t.elapsed();
        let t = Instant::now();
        let sampled = invariant_dimension_sampled(d, MIN_ORACLE_TRIALS, 1)?;
        println!(
            "d = {d}: {} monomials, kernel {} ({:.2?}), sampled {} ({:.2?})",
            space.basis.len(),
            space.dimension(),
            kernel_time,
            sampled,
            t.elapsed()
        );
        if d == 2 {
            for p in space.polynomials().iter().take(12) {
                println!("    {p}");
            }
        }
    }
    Ok(())
}

//! Probes a few elements `g₀` of `SL₁₉` for a line fixed by `H` among the
//! coordinate flags of `g₀`, listing the `H`-stable flag members found.

use epiverify::group::DIM;
use epiverify::highest_weight::{probe_fixed_line, Permutation};
use epiverify::sampling;
use epiverify::RationalMatrix;

fn main() -> epiverify::Result<()> {
    let mut rng = sampling::rng(3);
    let samples = [
        ("identity", RationalMatrix::identity(DIM)),
        (
            "reversal",
            Permutation::from_images((1..=DIM).rev().collect())?.matrix(),
        ),
        (
            "random permutation",
            Permutation::random(&mut rng, DIM).matrix(),
        ),
        ("random SL19", sampling::special_linear(&mut rng, DIM)),
    ];
    for (name, g0) in samples {
        let verdict = probe_fixed_line(&g0)?;
        let flags: Vec<String> = verdict
            .stable()
            .iter()
            .map(|f| format!("W{}({:+})", f.dim, f.character))
            .collect();
        println!(
            "{name:<20} candidate: {:<5} stable: {}",
            verdict.is_candidate(),
            if flags.is_empty() {
                "none".into()
            } else {
                flags.join(" ")
            }
        );
    }
    Ok(())
}

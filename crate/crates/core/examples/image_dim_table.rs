//! Generic rank of `φ_w` for every support pattern of `w ∈ V₁`, with the
//! kernel dimension and which coordinate vectors of `V₂` the image reaches.

use epiverify::irreducibility::{phi_image_dim, phi_matrix, SupportPattern, IMAGE_DIM_TABLE};

fn main() -> epiverify::Result<()> {
    println!(
        "{:<12} {:>5} {:>6} {:>8}  image contains",
        "support", "rank", "kernel", "listed"
    );
    for (pattern, listed) in IMAGE_DIM_TABLE {
        let rank = phi_image_dim(pattern, 1)?;
        let phi = phi_matrix(&pattern.structured_point());
        let reached: Vec<String> = (5..=19)
            .filter(|&j| phi.contains_basis_vector(j).unwrap_or(false))
            .map(|j| format!("e{j}"))
            .collect();
        println!(
            "{:<12} {:>5} {:>6} {:>8}  {}",
            pattern.to_string(),
            rank,
            phi.kernel_dim(),
            listed,
            reached.join(" ")
        );
    }
    let all = SupportPattern::all();
    println!("{} patterns", all.len());
    Ok(())
}

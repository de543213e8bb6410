//! Bruhat factorization `g = u·P·b` of a random element of `SL₁₉`, and the
//! torus exponents `b = 15k − 4l` along the flag of its permutation.

use epiverify::group::DIM;
use epiverify::highest_weight::{bruhat_decompose, weight_exponent};
use epiverify::sampling;

fn main() -> epiverify::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let mut rng = sampling::rng(seed);
    let g = sampling::special_linear(&mut rng, DIM);
    let f = bruhat_decompose(&g)?;
    println!("permutation {} (sign {})", f.perm, f.perm_sign);
    println!(
        "u unit upper triangular: {}",
        f.u.is_unit_upper_triangular()
    );
    println!("b upper triangular: {}", f.b.is_upper_triangular());
    println!("u*P*b == g: {}", f.reconstruct() == g);
    for i in 1..DIM {
        let w = weight_exponent(&f.perm, i)?;
        println!("i = {i:>2}: k = {}, l = {:>2}, b = {:>3}", w.k, w.l, w.b);
    }
    Ok(())
}

//! Seeded random sampling of exact test data.
//!
//! All randomness in the crate flows through [`rng`], so a seed fully
//! determines every sampled matrix and parameter vector.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{frac, rat, Rational, RationalMatrix};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent stream for sub-task `index` of a seeded run.
pub fn sub_rng(seed: u64, index: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index.wrapping_add(1));
    r
}

/// Rational `p/q` with `|p| ≤ 50`, `1 ≤ q ≤ 9`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-50..=50), rng.gen_range(1..=9))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn small_int<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-5..=5))
}

/// Random upper unitriangular `n × n` matrix with rational entries.
pub fn unitriangular<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Less => rational(rng),
        std::cmp::Ordering::Greater => rat(0),
    })
}

/// Random element of `SL_n(ℚ)`: a dense small-integer matrix, resampled
/// until invertible, with its first row divided by the determinant.
pub fn special_linear<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    loop {
        let m = RationalMatrix::from_fn(n, n, |_, _| small_int(rng));
        let d = m.det().expect("square");
        if d.is_zero() {
            continue;
        }
        let inv = d.recip();
        return RationalMatrix::from_fn(n, n, |i, j| {
            if i == 0 {
                m.get(i, j) * &inv
            } else {
                m.get(i, j).clone()
            }
        });
    }
}

/// Uniform random permutation of `0..n`.
pub fn shuffled<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_are_reproducible() {
        let a: Vec<Rational> = (0..5).map(|_| rational(&mut rng(3))).collect();
        let b: Vec<Rational> = (0..5).map(|_| rational(&mut rng(3))).collect();
        assert_eq!(a, b);
        let x = rational(&mut sub_rng(3, 0));
        let y = rational(&mut sub_rng(3, 0));
        assert_eq!(x, y);
    }

    #[test]
    fn special_linear_has_unit_determinant() {
        let mut r = rng(11);
        for _ in 0..3 {
            assert_eq!(special_linear(&mut r, 6).det().unwrap(), rat(1));
        }
        assert!(unitriangular(&mut r, 5).is_unit_upper_triangular());
    }
}

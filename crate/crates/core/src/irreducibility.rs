//! Ranks of `φ_w : μ̄ ↦ M(μ̄)·w` for `w ∈ V₁`, and the case analysis showing
//! that a reductive group containing `H` leaves no proper subspace of `V`
//! invariant.
//!
//! The generic rank of `φ_w` depends only on which coordinates of `w` are
//! non-zero. It is evaluated at a structured point (distinct primes on the
//! support) and confirmed against seeded random points with the same support.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{m_matrix, s_element, MuVector, TorusWeights, DIM, N_MU, V1_DIM, V2_DIM};
use crate::linalg::{rat, unit_vector, Rational, RationalMatrix};
use crate::report::{Report, Source};
use crate::sampling;

/// Random points checked per support pattern.
pub const STABILITY_SAMPLES: usize = 10;

/// Which of `a₁ … a₄` are non-zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern(pub [bool; 4]);

impl SupportPattern {
    pub fn from_bits(bits: [u8; 4]) -> Self {
        Self(bits.map(|b| b != 0))
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| !*a || b)
    }

    /// All 16 patterns in the column order of [`IMAGE_DIM_TABLE`].
    pub fn all() -> [SupportPattern; 16] {
        IMAGE_DIM_TABLE.map(|(p, _)| p)
    }

    /// The point with `a_i = 2, 3, 5, 7` on the support and `0` elsewhere.
    pub fn structured_point(&self) -> [Rational; 4] {
        let primes = [2, 3, 5, 7];
        std::array::from_fn(|i| {
            if self.0[i] {
                rat(primes[i])
            } else {
                Rational::zero()
            }
        })
    }
}

impl fmt::Display for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<&str> = self.0.iter().map(|&x| if x { "1" } else { "0" }).collect();
        write!(f, "({})", b.join(","))
    }
}

const fn pat(a: u8, b: u8, c: u8, d: u8) -> SupportPattern {
    SupportPattern([a != 0, b != 0, c != 0, d != 0])
}

/// `dim Im φ_w` for each support pattern, as published (not computed).
pub const IMAGE_DIM_TABLE: [(SupportPattern, usize); 16] = [
    (pat(0, 0, 0, 0), 0),
    (pat(1, 0, 0, 0), 11),
    (pat(0, 1, 0, 0), 4),
    (pat(0, 0, 1, 0), 5),
    (pat(0, 0, 0, 1), 5),
    (pat(1, 1, 0, 0), 12),
    (pat(1, 0, 1, 0), 12),
    (pat(1, 0, 0, 1), 12),
    (pat(0, 1, 1, 0), 8),
    (pat(0, 1, 0, 1), 8),
    (pat(0, 0, 1, 1), 9),
    (pat(1, 1, 1, 0), 12),
    (pat(1, 1, 0, 1), 12),
    (pat(1, 0, 1, 1), 12),
    (pat(0, 1, 1, 1), 12),
    (pat(1, 1, 1, 1), 12),
];

/// The linear map `μ̄ ↦ M(μ̄)·w` as a `15 × 12` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub w: [Rational; 4],
    pub matrix: RationalMatrix,
}

impl PhiMap {
    pub fn image_dim(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.matrix.kernel_basis().len()
    }

    /// Whether `e_j` (1-based, `5 ≤ j ≤ 19`) lies in the image.
    pub fn contains_basis_vector(&self, j: usize) -> Result<bool> {
        if !(V1_DIM + 1..=DIM).contains(&j) {
            return Err(Error::InvalidInput(format!(
                "e{j} is not a basis vector of V2"
            )));
        }
        self.matrix
            .in_column_span(&unit_vector(V2_DIM, j - V1_DIM - 1))
    }
}

pub fn phi_matrix(w: &[Rational; 4]) -> PhiMap {
    let columns: Vec<Vec<Rational>> = (0..N_MU)
        .map(|k| {
            m_matrix(&MuVector::unit(k))
                .mul_vec(w)
                .expect("4 coordinates")
        })
        .collect();
    PhiMap {
        w: w.clone(),
        matrix: RationalMatrix::from_columns(V2_DIM, &columns).expect("15 rows"),
    }
}

/// Generic `dim Im φ_w` over `w` with the given support.
///
/// Fails with [`Error::Internal`] when the largest rank seen at
/// [`STABILITY_SAMPLES`] random points differs from the structured-point
/// rank.
pub fn phi_image_dim(pattern: SupportPattern, seed: u64) -> Result<usize> {
    let structured = phi_matrix(&pattern.structured_point()).image_dim();
    let mut rng = sampling::rng(seed);
    let mut max_seen = 0;
    for _ in 0..STABILITY_SAMPLES {
        let w: [Rational; 4] = std::array::from_fn(|i| {
            if pattern.0[i] {
                sampling::nonzero_rational(&mut rng)
            } else {
                Rational::zero()
            }
        });
        max_seen = max_seen.max(phi_matrix(&w).image_dim());
    }
    if max_seen != structured {
        return Err(Error::Internal(format!(
            "rank of phi_w for support {pattern} is {structured} at the structured point \
             but {max_seen} at random points"
        )));
    }
    Ok(structured)
}

pub fn verify_image_dim_table(seed: u64) -> Report {
    let mut r = Report::new("image-dim-table").seed(seed);
    for (i, (pattern, expected)) in IMAGE_DIM_TABLE.iter().enumerate() {
        let claim = format!("dim Im phi_w for support {pattern}");
        match phi_image_dim(*pattern, seed.wrapping_add(i as u64)) {
            Ok(d) => r.check(claim, expected, d, Source::Published),
            Err(e) => r.check(claim, expected, e, Source::Published),
        };
    }
    r.finish()
}

/// Splits `v` into its `V₁` and `V₂` components using only `v` and
/// `s·v`, where `s` acts through the canonical torus.
///
/// Any `s` whose two weights `s¹⁵` and `s⁻⁴` differ works; `s = 0` and
/// `s¹⁹ = 1` are rejected.
pub fn weight_split(v: &[Rational], s: &Rational) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if v.len() != DIM {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {}",
            v.len()
        )));
    }
    let t = s_element(s, &TorusWeights::canonical())?;
    let hi = num_traits::pow::Pow::pow(s, 15i32);
    let lo = num_traits::pow::Pow::pow(s, -4i32);
    if hi == lo {
        return Err(Error::InvalidInput(format!(
            "s = {s} gives equal weights on V1 and V2"
        )));
    }
    // s·v = hi·v₁ + lo·v₂ and v = v₁ + v₂
    let sv = t.act(v)?;
    let denom = (&hi - &lo).recip();
    let v1: Vec<Rational> = sv
        .iter()
        .zip(v)
        .map(|(a, b)| (a - &lo * b) * &denom)
        .collect();
    let v2: Vec<Rational> = v.iter().zip(&v1).map(|(a, b)| a - b).collect();
    Ok((v1, v2))
}

/// The `(vector in V₁, basis vectors of V₂ in its φ-image)` facts used to
/// show that an invariant subspace containing `V₁` is all of `V`.
pub const SPANNING_FACTS: [(usize, &[usize]); 4] = [
    (1, &[5, 6, 8, 9, 11, 12, 14, 15, 16, 17, 18]),
    (2, &[7]),
    (3, &[10]),
    (4, &[13, 19]),
];

pub fn verify_case_analysis(seed: u64) -> Report {
    let mut r = Report::new("irreducibility-cases").seed(seed);
    let mut dims = Vec::with_capacity(16);
    for (i, pattern) in SupportPattern::all().into_iter().enumerate() {
        match phi_image_dim(pattern, seed.wrapping_add(i as u64)) {
            Ok(d) => dims.push((pattern, d)),
            Err(e) => {
                r.check(
                    format!("generic rank for {pattern}"),
                    "stable",
                    e,
                    Source::Derived,
                );
            }
        }
    }

    for (pattern, d) in &dims {
        let phi = phi_matrix(&pattern.structured_point());
        r.check(
            format!("dim Ker + dim Im = 12 for support {pattern}"),
            N_MU,
            phi.kernel_dim() + d,
            Source::Published,
        );
    }

    let min_over = |k: usize| {
        dims.iter()
            .filter(|(p, _)| p.count() >= k)
            .map(|(_, d)| *d)
            .min()
            .unwrap_or(0)
    };
    let two = min_over(2);
    let three = min_over(3);
    let one = min_over(1);
    r.check(
        "min dim Im over supports with >= 2 entries",
        8,
        two,
        Source::Published,
    );
    r.check(
        "two images of dim >= 8 in V2 must meet (8 + 8 > 15)",
        true,
        two + two > V2_DIM,
        Source::Trivial,
    );
    r.check(
        "min dim Im over supports with >= 3 entries",
        12,
        three,
        Source::Published,
    );
    r.check(
        "min dim Im over supports with >= 1 entry",
        4,
        one,
        Source::Published,
    );
    r.check(
        "images of dim >= 12 and >= 4 in V2 must meet (12 + 4 > 15)",
        true,
        three + one > V2_DIM,
        Source::Trivial,
    );

    for (i, targets) in SPANNING_FACTS {
        let phi = phi_matrix(&std::array::from_fn(|c| {
            if c + 1 == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        for &j in targets {
            let computed = phi
                .contains_basis_vector(j)
                .map_or_else(|e| e.to_string(), |b| b.to_string());
            r.check(
                format!("e{j} in Im phi_e{i}"),
                true,
                computed,
                Source::Published,
            );
        }
    }
    let phi1 = phi_matrix(&[rat(1), rat(0), rat(0), rat(0)]);
    r.check(
        "e7 in Im phi_e1 (negative control)",
        false,
        phi1.contains_basis_vector(7)
            .map_or_else(|e| e.to_string(), |b| b.to_string()),
        Source::Derived,
    );

    let mut rng = sampling::rng(seed);
    let mut split_ok = true;
    for _ in 0..10 {
        let v: Vec<Rational> = (0..DIM).map(|_| sampling::rational(&mut rng)).collect();
        let (v1, v2) = weight_split(&v, &rat(2)).expect("s = 2 separates weights");
        split_ok &= (0..DIM).all(|i| {
            if i < V1_DIM {
                v1[i] == v[i] && v2[i].is_zero()
            } else {
                v2[i] == v[i] && v1[i].is_zero()
            }
        });
    }
    r.check(
        "torus action separates V1 and V2 components (10 samples)",
        true,
        split_ok,
        Source::Derived,
    );
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn e(i: usize) -> [Rational; 4] {
        std::array::from_fn(|c| if c + 1 == i { rat(1) } else { rat(0) })
    }

    fn nonzero_columns(phi: &PhiMap) -> Vec<usize> {
        (0..N_MU)
            .filter(|&k| phi.matrix.column(k).iter().any(|x| !x.is_zero()))
            .collect()
    }

    #[test]
    fn phi_matrix_examples() {
        assert!(phi_matrix(&[rat(0), rat(0), rat(0), rat(0)])
            .matrix
            .is_zero());

        let p1 = phi_matrix(&e(1));
        assert!(p1.matrix.column(0).iter().all(Zero::is_zero));
        let col1 = p1.matrix.column(1);
        assert_eq!(col1[0], rat(1));
        assert_eq!(col1.iter().filter(|x| !x.is_zero()).count(), 1);

        assert_eq!(nonzero_columns(&phi_matrix(&e(2))), vec![0, 1, 2, 7]);
    }

    #[test]
    fn columns_are_linear_in_mu() {
        let w = [frac(1, 2), rat(-3), rat(4), frac(5, 7)];
        let phi = phi_matrix(&w);
        let mu = MuVector::from_ints([3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8]);
        let direct = m_matrix(&mu).mul_vec(&w).unwrap();
        assert_eq!(phi.matrix.mul_vec(mu.as_slice()).unwrap(), direct);
    }

    #[test]
    fn table_spot_values() {
        for (bits, d) in [
            ([0, 0, 0, 0], 0),
            ([1, 0, 0, 0], 11),
            ([0, 1, 1, 0], 8),
            ([1, 1, 1, 1], 12),
            ([0, 0, 1, 0], 5),
            ([0, 0, 1, 1], 9),
        ] {
            assert_eq!(
                phi_image_dim(SupportPattern::from_bits(bits), 5).unwrap(),
                d
            );
        }
    }

    #[test]
    fn kernel_of_single_e2_support() {
        let phi = phi_matrix(&SupportPattern::from_bits([0, 1, 0, 0]).structured_point());
        let k = phi.matrix.kernel_basis();
        assert_eq!(k.len(), 8);
        for v in &k {
            assert!(phi.matrix.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn support_monotonicity() {
        let dims: Vec<(SupportPattern, usize)> = SupportPattern::all()
            .into_iter()
            .map(|p| (p, phi_image_dim(p, 1).unwrap()))
            .collect();
        for (p, dp) in &dims {
            for (q, dq) in &dims {
                if p.is_subset_of(q) {
                    assert!(dp <= dq, "{p} <= {q} but {dp} > {dq}");
                }
            }
        }
    }

    #[test]
    fn rank_constant_on_support_class() {
        let mut rng = sampling::rng(99);
        for p in SupportPattern::all() {
            let expect = phi_matrix(&p.structured_point()).image_dim();
            for _ in 0..10 {
                let w = std::array::from_fn(|i| {
                    if p.0[i] {
                        sampling::nonzero_rational(&mut rng)
                    } else {
                        rat(0)
                    }
                });
                let phi = phi_matrix(&w);
                assert_eq!(phi.image_dim(), expect, "support {p}");
                assert_eq!(phi.image_dim() + phi.kernel_dim(), N_MU);
            }
        }
    }

    #[test]
    fn weight_split_examples() {
        let mut v = vec![rat(0); DIM];
        v[0] = rat(1);
        v[4] = rat(1);
        let (a, b) = weight_split(&v, &rat(2)).unwrap();
        assert_eq!(a, unit_vector(DIM, 0));
        assert_eq!(b, unit_vector(DIM, 4));

        let mut w = vec![rat(0); DIM];
        w[10] = frac(2, 3);
        let (a, b) = weight_split(&w, &frac(-1, 3)).unwrap();
        assert!(a.iter().all(Zero::is_zero));
        assert_eq!(b, w);

        assert!(weight_split(&v, &rat(1)).is_err());
        assert!(weight_split(&v, &rat(0)).is_err());
        assert!(weight_split(&v[..3], &rat(2)).is_err());
    }

    #[test]
    fn membership_facts() {
        let p1 = phi_matrix(&e(1));
        assert!(p1.contains_basis_vector(5).unwrap());
        assert!(!p1.contains_basis_vector(7).unwrap());
        assert!(p1.contains_basis_vector(3).is_err());
    }

    #[test]
    fn full_reports_pass() {
        let t = verify_image_dim_table(0);
        assert!(t.passed(), "{t}");
        assert_eq!(t.details.len(), 16);
        let c = verify_case_analysis(0);
        assert!(c.passed(), "{c}");
    }
}

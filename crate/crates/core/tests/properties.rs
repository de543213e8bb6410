//! Property suites across modules, driven by proptest seeds.

use epiverify::group::{h_element, lie_generators, s_element, MuVector, TorusWeights, DIM, N_MU};
use epiverify::highest_weight::{bruhat_decompose, z_lower, Permutation, StarPattern};
use epiverify::invariants::{check_group_invariance, invariant_space};
use epiverify::irreducibility::{phi_matrix, SupportPattern};
use epiverify::linalg::{frac, rat, Rational, RationalMatrix};
use epiverify::sampling;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rational(), r * c)
            .prop_map(move |data| RationalMatrix::from_vec(r, c, data).unwrap())
    })
}

fn square_pair(max: usize) -> impl Strategy<Value = (RationalMatrix, RationalMatrix)> {
    (1..=max).prop_flat_map(|n| {
        let m = || {
            proptest::collection::vec(small_rational(), n * n)
                .prop_map(move |d| RationalMatrix::from_vec(n, n, d).unwrap())
        };
        (m(), m())
    })
}

fn mu() -> impl Strategy<Value = MuVector> {
    proptest::collection::vec(small_rational(), N_MU)
        .prop_map(|v| MuVector::from_slice(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(6)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix(6)) {
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(twice.rank, once.rank);
        prop_assert!(once.pivot_columns.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn det_is_multiplicative((a, b) in square_pair(5)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn images_lie_in_column_span(m in matrix(6), seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let x: Vec<Rational> = (0..m.cols()).map(|_| sampling::rational(&mut rng)).collect();
        prop_assert!(m.in_column_span(&m.mul_vec(&x).unwrap()).unwrap());
    }

    #[test]
    fn h0_is_a_vector_group(a in mu(), b in mu()) {
        let ha = h_element(&a);
        let hb = h_element(&b);
        prop_assert_eq!(ha.compose(&hb), h_element(&a.add(&b)));
        prop_assert!(ha.det().is_one());
    }

    #[test]
    fn torus_normalizes_h0(a in mu(), p in prop_oneof![-5i64..=-1, 1i64..=5], q in 1i64..=3) {
        let s = frac(p, q);
        let weights = TorusWeights::canonical();
        let se = s_element(&s, &weights).unwrap();
        prop_assert!(se.det().is_one());
        let lhs = se.compose(&h_element(&a)).compose(&se.inverse().unwrap());
        let scale = num_traits::pow::Pow::pow(&s, -19i32);
        prop_assert_eq!(lhs, h_element(&a.scale(&scale)));
    }

    #[test]
    fn phi_rank_nullity(w in proptest::array::uniform4(small_rational())) {
        let phi = phi_matrix(&w);
        prop_assert_eq!(phi.image_dim() + phi.kernel_dim(), N_MU);
        prop_assert_eq!(phi.matrix.rows(), 15);
    }

    #[test]
    fn bruhat_round_trip(seed in any::<u64>(), n in 2usize..=7) {
        let mut rng = sampling::rng(seed);
        let g = sampling::special_linear(&mut rng, n);
        let f = bruhat_decompose(&g).unwrap();
        prop_assert!(f.u.is_unit_upper_triangular());
        prop_assert!(f.b.is_upper_triangular());
        prop_assert_eq!(f.reconstruct(), g);
        let p = Permutation::random(&mut rng, n).matrix();
        prop_assert_eq!(bruhat_decompose(&p).unwrap().reconstruct(), p);
    }

    #[test]
    fn random_star_patterns_have_monotone_z(bits in proptest::collection::vec(any::<bool>(), 60)) {
        let pattern = StarPattern::from_positions(
            (0..15).flat_map(|r| (0..4).map(move |c| (r, c))).filter(|&(r, c)| bits[r * 4 + c]),
        );
        let z: Vec<usize> = (1..=4).map(|n| z_lower(n, &pattern).unwrap()).collect();
        prop_assert!(z.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(z.iter().all(|&v| v <= 15));
    }
}

#[test]
fn unipotent_generators_square_to_zero() {
    for x in lie_generators().iter().take(N_MU) {
        assert!((x * x).is_zero());
    }
}

#[test]
fn support_monotonicity_over_all_pairs() {
    let dims: Vec<(SupportPattern, usize)> = SupportPattern::all()
        .into_iter()
        .map(|p| (p, phi_matrix(&p.structured_point()).image_dim()))
        .collect();
    for (p, dp) in &dims {
        for (q, dq) in &dims {
            if p.is_subset_of(q) {
                assert!(dp <= dq, "{p} <= {q}");
            }
        }
    }
}

#[test]
fn invariants_survive_many_seeds() {
    let space = invariant_space(3, 4).unwrap();
    for seed in 0..3 {
        assert!(check_group_invariance(&space, 20, seed));
    }
    let mut x = vec![rat(0); DIM];
    x[0] = rat(1);
    let cubes: Vec<Rational> = space.polynomials().iter().map(|p| p.evaluate(&x)).collect();
    assert_eq!(cubes.iter().filter(|v| !v.is_zero()).count(), 1);
}

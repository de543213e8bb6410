//! Highest-weight lines and the flag argument.
//!
//! An `H`-fixed highest-weight vector for the Borel `g₀Bg₀⁻¹` exists only if
//! some flag subspaces `W_i = g₀·⟨e₁, …, e_i⟩` are `H`-stable and the torus
//! characters on their top exterior powers admit a vanishing positive
//! combination. This module provides:
//!
//! * Bruhat factors `g = u·P·b` and the torus exponents `b = 15k − 4l`;
//! * the star pattern of `D(h₀) = Q⁻¹·M(μ̄)·P`, the bounds `Z(n)` and a
//!   constructor for `h₀`;
//! * [`probe_fixed_line`], which decides the flag condition for a concrete
//!   `g₀` by exact linear algebra.
//!
//! Permutations are one-based: `ν(j) ∈ {1, …, n}`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{
    h_element, lie_generators, m_matrix, s_element, GroupElement, MuVector, TorusWeights, DIM,
    N_MU, V1_DIM, V2_DIM,
};
use crate::linalg::{rat, Rational, RationalMatrix};
use crate::report::{Report, Source};
use crate::sampling;

/// Retries allowed in [`construct_h0`] after the all-ones attempt.
pub const DEFAULT_RETRY_BUDGET: usize = 32;

/// Order in which the parameters of `h₀` are chosen.
pub const MU_CHOICE_ORDER: [usize; N_MU] = [11, 10, 9, 8, 7, 0, 6, 5, 4, 3, 2, 1];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// `images[j − 1] = ν(j)`, one-based.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Self {
        Self(
            sampling::shuffled(rng, n)
                .into_iter()
                .map(|x| x + 1)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ν(j)` for one-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// The 0/1 matrix sending `e_j` to `e_{ν(j)}`.
    pub fn matrix(&self) -> RationalMatrix {
        let n = self.len();
        RationalMatrix::from_fn(n, n, |i, j| {
            if self.0[j] == i + 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// `+1` or `−1`, from the cycle decomposition.
    pub fn sign(&self) -> i8 {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut j = start;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] - 1;
                len += 1;
            }
            transpositions += len.max(1) - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// `g = u · P(perm) · b` with `u` upper unitriangular and `b` upper
/// triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatFactors {
    pub u: RationalMatrix,
    pub perm: Permutation,
    pub perm_sign: i8,
    pub b: RationalMatrix,
}

impl BruhatFactors {
    pub fn reconstruct(&self) -> RationalMatrix {
        &(&self.u * &self.perm.matrix()) * &self.b
    }
}

/// Bruhat decomposition of an invertible square matrix.
///
/// Works column by column: the lowest non-zero entry of each column is the
/// pivot, entries above it are cleared by adding the pivot row upwards
/// (left multiplication by upper unitriangular matrices), and the rest of
/// the pivot row is cleared by adding the pivot column rightwards (right
/// multiplication by upper triangular matrices).
pub fn bruhat_decompose(g: &RationalMatrix) -> Result<BruhatFactors> {
    if !g.is_square() {
        return Err(Error::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let n = g.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| g.row(i).to_vec()).collect();
    let mut left: Vec<Vec<Rational>> = identity_rows(n);
    let mut right: Vec<Vec<Rational>> = identity_rows(n);
    let mut images = vec![0; n];

    for j in 0..n {
        let p = (0..n)
            .rev()
            .find(|&i| !a[i][j].is_zero())
            .ok_or(Error::Singular)?;
        images[j] = p + 1;

        let inv = a[p][j].recip();
        for row in a.iter_mut().chain(right.iter_mut()) {
            row[j] *= &inv;
        }
        for r in 0..p {
            if a[r][j].is_zero() {
                continue;
            }
            let c = a[r][j].clone();
            row_axpy(&mut a, r, p, &c);
            row_axpy(&mut left, r, p, &c);
        }
        for k in j + 1..n {
            if a[p][k].is_zero() {
                continue;
            }
            let c = a[p][k].clone();
            for row in a.iter_mut().chain(right.iter_mut()) {
                let t = &row[j] * &c;
                row[k] -= t;
            }
        }
    }

    let perm = Permutation::from_images(images).map_err(|_| Error::Singular)?;
    let left = RationalMatrix::from_rows(left)?;
    let right = RationalMatrix::from_rows(right)?;
    Ok(BruhatFactors {
        u: left.inverse()?,
        perm_sign: perm.sign(),
        perm,
        b: right.inverse()?,
    })
}

fn identity_rows(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat(1) } else { rat(0) })
                .collect()
        })
        .collect()
}

/// `row[r] −= c · row[p]`.
fn row_axpy(m: &mut [Vec<Rational>], r: usize, p: usize, c: &Rational) {
    let (src, dst) = if r < p {
        let (lo, hi) = m.split_at_mut(p);
        (&hi[0], &mut lo[r])
    } else {
        let (lo, hi) = m.split_at_mut(r);
        (&lo[p], &mut hi[0])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d -= c * s;
        }
    }
}

/// Torus exponent of the `i`-th fundamental weight after conjugating by a
/// permutation: `k` of the first `i` positions land in `{1, 2, 3, 4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightExponent {
    pub k: usize,
    pub l: usize,
    pub b: i64,
}

impl WeightExponent {
    pub fn from_counts(k: usize, l: usize) -> Self {
        Self {
            k,
            l,
            b: 15 * k as i64 - 4 * l as i64,
        }
    }
}

pub fn weight_exponent(perm: &Permutation, i: usize) -> Result<WeightExponent> {
    if perm.len() != DIM {
        return Err(Error::DimensionMismatch(format!(
            "permutation of {} points, expected {DIM}",
            perm.len()
        )));
    }
    if !(1..DIM).contains(&i) {
        return Err(Error::InvalidInput(format!(
            "i = {i} outside 1..={}",
            DIM - 1
        )));
    }
    let k = (1..=i).filter(|&j| perm.apply(j) <= V1_DIM).count();
    Ok(WeightExponent::from_counts(k, i - k))
}

/// Determinant of the upper-left `i × i` block of `P⁻¹·s·P` for `s = 2`.
pub fn conjugated_torus_minor(perm: &Permutation, i: usize) -> Result<Rational> {
    let p = perm.matrix();
    let s = s_element(&rat(2), &TorusWeights::canonical())?;
    let conj = &(&p.transpose() * s.matrix()) * &p;
    conj.leading_minor(i)
}

/// All `(k, l)` with `0 ≤ k ≤ 4`, `0 ≤ l ≤ 15` and `1 ≤ k + l ≤ 18`.
pub fn feasible_pairs() -> Vec<WeightExponent> {
    (0..=V1_DIM)
        .flat_map(|k| (0..=V2_DIM).map(move |l| (k, l)))
        .filter(|&(k, l)| (1..DIM).contains(&(k + l)))
        .map(|(k, l)| WeightExponent::from_counts(k, l))
        .collect()
}

pub fn enumerate_nonzero_b() -> Report {
    let mut r = Report::new("torus-exponents");
    let pairs = feasible_pairs();
    r.check("feasible (k, l) pairs", 78, pairs.len(), Source::Derived);
    r.check(
        "every feasible pair has b = 15k - 4l != 0",
        true,
        pairs.iter().all(|p| p.b != 0),
        Source::Published,
    );
    let has = |k, l| pairs.iter().any(|p| p.k == k && p.l == l);
    r.check("(0, 0) excluded", false, has(0, 0), Source::Published);
    r.check("(4, 15) excluded", false, has(4, 15), Source::Published);
    let min_abs = pairs.iter().map(|p| p.b.abs()).min().unwrap_or(0);
    let minimizers: Vec<String> = pairs
        .iter()
        .filter(|p| p.b.abs() == min_abs)
        .map(|p| format!("({}, {})", p.k, p.l))
        .collect();
    r.info("min |b| over feasible pairs", min_abs);
    r.info("pairs attaining min |b|", minimizers.join(" "));
    r.finish()
}

/// The entries of `D(h₀)` that are required to be non-zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPattern {
    stars: BTreeSet<(usize, usize)>,
}

const PRINTED_STARS: [[u8; 4]; 15] = [
    [1, 0, 0, 0],
    [1, 1, 0, 0],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [1, 0, 1, 0],
    [0, 0, 1, 0],
    [1, 0, 0, 0],
    [1, 0, 0, 1],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 0, 0, 1],
];

impl StarPattern {
    pub fn printed() -> Self {
        let stars = PRINTED_STARS
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, s)| **s == 1)
                    .map(move |(c, _)| (r, c))
            })
            .collect();
        Self { stars }
    }

    pub fn from_positions(stars: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self {
            stars: stars.into_iter().collect(),
        }
    }

    /// 0-based `(row, column)` positions.
    pub fn stars(&self) -> &BTreeSet<(usize, usize)> {
        &self.stars
    }

    pub fn column_counts(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for &(_, c) in &self.stars {
            counts[c] += 1;
        }
        counts
    }

    /// Whether every star position of `d` is non-zero.
    pub fn holds_in(&self, d: &RationalMatrix) -> bool {
        self.stars.iter().all(|&(r, c)| !d.get(r, c).is_zero())
    }
}

/// Minimum over `n`-element column subsets of the number of rows with a
/// star in one of the chosen columns.
pub fn z_lower(n: usize, pattern: &StarPattern) -> Result<usize> {
    if !(1..=V1_DIM).contains(&n) {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..=4")));
    }
    let min = (0u32..16)
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| {
            (0..V2_DIM)
                .filter(|&r| {
                    (0..V1_DIM).any(|c| mask & (1 << c) != 0 && pattern.stars.contains(&(r, c)))
                })
                .count()
        })
        .min()
        .expect("at least one subset");
    Ok(min)
}

/// `Z(n)` for `n = 1..4` together with the check that `Z(k) < 15k/4` has no
/// solution.
pub fn verify_z_bounds() -> Report {
    let pattern = StarPattern::printed();
    let mut r = Report::new("star-pattern-bounds");
    r.check(
        "star counts per column",
        "[11, 4, 4, 4]",
        format!("{:?}", pattern.column_counts()),
        Source::Published,
    );
    let expected = [
        (4, Source::Derived),
        (8, Source::Derived),
        (12, Source::Derived),
        (15, Source::Published),
    ];
    for (n, (z, src)) in (1..=4).zip(expected) {
        r.check(
            format!("Z({n})"),
            z,
            z_lower(n, &pattern).expect("n in range"),
            src,
        );
    }
    for k in 1..=4 {
        let z = z_lower(k, &pattern).expect("k in range");
        // Z(k) >= 15k/4  <=>  4·Z(k) >= 15k
        r.check(
            format!("Z({k}) = {z} >= 15*{k}/4 (so Z(k) < 15k/4 fails)"),
            true,
            4 * z >= 15 * k,
            Source::Published,
        );
    }
    r.finish()
}

/// Splits an upper unitriangular `u` into its diagonal blocks `P` (`4 × 4`)
/// and `Q` (`15 × 15`) and returns `Q⁻¹·M(μ̄)·P`.
pub fn d_matrix(u: &RationalMatrix, mu: &MuVector) -> Result<RationalMatrix> {
    let p = u.submatrix(0..V1_DIM, 0..V1_DIM);
    let q = u.submatrix(V1_DIM..DIM, V1_DIM..DIM);
    Ok(&(&q.inverse()? * &m_matrix(mu)) * &p)
}

/// Finds `μ̄` such that every star of the printed pattern is non-zero in
/// `D = Q⁻¹·M(μ̄)·P`.
///
/// Tries `μ̄ = (1, …, 1)` first, then up to `retries` seeded random
/// assignments drawn in the order of [`MU_CHOICE_ORDER`].
pub fn construct_h0<R: Rng>(
    u: &RationalMatrix,
    rng: &mut R,
    retries: usize,
) -> Result<(MuVector, RationalMatrix)> {
    if u.rows() != DIM || !u.is_unit_upper_triangular() {
        return Err(Error::InvalidInput(
            "u must be 19x19 upper unitriangular".into(),
        ));
    }
    let pattern = StarPattern::printed();
    let ones = MuVector::from_ints([1; N_MU]);
    let d = d_matrix(u, &ones)?;
    if pattern.holds_in(&d) {
        return Ok((ones, d));
    }
    for _ in 0..retries {
        let mut mu: [Rational; N_MU] = std::array::from_fn(|_| Rational::zero());
        for &k in &MU_CHOICE_ORDER {
            mu[k] = sampling::nonzero_rational(rng);
        }
        let mu = MuVector::new(mu);
        let d = d_matrix(u, &mu)?;
        if pattern.holds_in(&d) {
            return Ok((mu, d));
        }
    }
    Err(Error::Internal(format!(
        "no parameter choice within {retries} retries makes every star non-zero"
    )))
}

/// A flag subspace `W_i` that is stable under `Lie(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StableFlag {
    pub dim: usize,
    /// `dim(W_i ∩ V₁)`.
    pub v1_dim: usize,
    /// Weight of `S` on the top exterior power of `W_i`.
    pub character: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    NoFixedLine { stable: Vec<StableFlag> },
    Candidate { stable: Vec<StableFlag> },
}

impl ProbeVerdict {
    pub fn is_candidate(&self) -> bool {
        matches!(self, ProbeVerdict::Candidate { .. })
    }

    pub fn stable(&self) -> &[StableFlag] {
        match self {
            ProbeVerdict::NoFixedLine { stable } | ProbeVerdict::Candidate { stable } => stable,
        }
    }
}

/// `rank([B | X·B]) = rank(B)` for the first `i` columns `B` of `g0`.
pub fn flag_is_invariant(g0: &RationalMatrix, i: usize, x: &RationalMatrix) -> bool {
    let basis = g0.submatrix(0..g0.rows(), 0..i);
    let image = x * &basis;
    basis.hstack(&image).expect("same row count").rank() == i
}

/// For every `i`, whether `g0·⟨e₁, …, e_i⟩` is stable under `x`, read off
/// the vanishing of the lower-left `(n − i) × i` block of `g0⁻¹·x·g0`.
fn stable_dims(g0_inv: &RationalMatrix, g0: &RationalMatrix, x: &RationalMatrix) -> Vec<bool> {
    let n = g0.rows();
    let y = g0_inv * &(x * g0);
    // lowest[c] = largest row index with a non-zero entry in column c
    let lowest: Vec<Option<usize>> = (0..n)
        .map(|c| (0..n).rev().find(|&r| !y.get(r, c).is_zero()))
        .collect();
    (0..=n)
        .map(|i| lowest[..i].iter().all(|l| l.is_none_or(|r| r < i)))
        .collect()
}

/// Decides whether `H` could fix a highest-weight line for `g0·B·g0⁻¹`.
///
/// `W_i` is `H`-stable iff it is stable under all 13 Lie generators. For a
/// stable `W_i` the torus weight of its top wedge is
/// `15·dim(W_i ∩ V₁) − 4·dim(W_i ∩ V₂)`. A fixed line needs a positive
/// combination of these weights to vanish, i.e. a zero weight or weights of
/// both signs.
pub fn probe_fixed_line(g0: &RationalMatrix) -> Result<ProbeVerdict> {
    if g0.rows() != DIM || g0.cols() != DIM {
        return Err(Error::DimensionMismatch(format!(
            "g0 must be {DIM}x{DIM}, got {}x{}",
            g0.rows(),
            g0.cols()
        )));
    }
    let g0_inv = g0.inverse()?;
    let mut stable = [true; DIM + 1];
    for x in lie_generators() {
        for (s, ok) in stable.iter_mut().zip(stable_dims(&g0_inv, g0, &x)) {
            *s &= ok;
        }
        if stable[1..DIM].iter().all(|s| !s) {
            break;
        }
    }
    let flags: Vec<StableFlag> = (1..DIM)
        .filter(|&i| stable[i])
        .map(|i| {
            let v2_rank = g0.submatrix(V1_DIM..DIM, 0..i).rank();
            let v1_dim = i - v2_rank;
            StableFlag {
                dim: i,
                v1_dim,
                character: WeightExponent::from_counts(v1_dim, v2_rank).b,
            }
        })
        .collect();
    let zero = flags.iter().any(|f| f.character == 0);
    let pos = flags.iter().any(|f| f.character > 0);
    let neg = flags.iter().any(|f| f.character < 0);
    Ok(if zero || (pos && neg) {
        ProbeVerdict::Candidate { stable: flags }
    } else {
        ProbeVerdict::NoFixedLine { stable: flags }
    })
}

/// Exact round trips `u·P·b = g` on `trials` random elements of `SL₁₉` and
/// `trials` random permutation matrices.
pub fn verify_bruhat(seed: u64, trials: usize) -> Report {
    let mut r = Report::new("bruhat").seed(seed);
    let id = bruhat_decompose(&RationalMatrix::identity(DIM));
    r.check(
        "identity decomposes trivially",
        true,
        id.is_ok_and(|f| {
            f.perm == Permutation::identity(DIM)
                && f.u == RationalMatrix::identity(DIM)
                && f.b == RationalMatrix::identity(DIM)
        }),
        Source::Trivial,
    );
    let mut rng = sampling::sub_rng(seed, 1);
    let mut ok = 0;
    for _ in 0..trials {
        let g = sampling::special_linear(&mut rng, DIM);
        if bruhat_decompose(&g).is_ok_and(|f| well_formed(&f) && f.reconstruct() == g) {
            ok += 1;
        }
    }
    r.check(
        format!("u*P*b = g on {trials} random SL19 elements"),
        trials,
        ok,
        Source::Derived,
    );

    let mut ok = 0;
    for _ in 0..trials {
        let perm = Permutation::random(&mut rng, DIM);
        let p = perm.matrix();
        let sign = p.det().expect("square");
        if bruhat_decompose(&p).is_ok_and(|f| {
            f.perm == perm
                && f.u == RationalMatrix::identity(DIM)
                && f.b == RationalMatrix::identity(DIM)
                && rat(f.perm_sign as i64) == sign
        }) {
            ok += 1;
        }
    }
    r.check(
        format!("permutation matrices decompose as (I, perm, sign, I) on {trials} samples"),
        trials,
        ok,
        Source::Trivial,
    );
    r.finish()
}

fn well_formed(f: &BruhatFactors) -> bool {
    f.u.is_unit_upper_triangular()
        && f.b.is_upper_triangular()
        && rat(f.perm_sign as i64) == f.perm.matrix().det().expect("square")
}

/// `2^b` against the exact corner minors of the conjugated torus element.
pub fn verify_characters(seed: u64, trials: usize) -> Report {
    let mut r = Report::new("torus-characters").seed(seed);
    let mut rng = sampling::sub_rng(seed, 2);
    let mut ok = 0;
    let mut realized = BTreeSet::new();
    for _ in 0..trials {
        let perm = Permutation::random(&mut rng, DIM);
        let all = (1..DIM).all(|i| {
            let w = weight_exponent(&perm, i).expect("i in range");
            realized.insert((w.k, w.l));
            let expect = if w.b >= 0 {
                Rational::from_integer(BigInt::from(2).pow(w.b as u32))
            } else {
                Rational::new(BigInt::one(), BigInt::from(2).pow((-w.b) as u32))
            };
            conjugated_torus_minor(&perm, i).is_ok_and(|m| m == expect)
        });
        if all {
            ok += 1;
        }
    }
    r.check(
        format!("corner minors equal 2^b for all i on {trials} random permutations"),
        trials,
        ok,
        Source::Derived,
    );
    let feasible: BTreeSet<(usize, usize)> = feasible_pairs().iter().map(|w| (w.k, w.l)).collect();
    r.check(
        "realized (k, l) pairs are feasible",
        true,
        realized.is_subset(&feasible),
        Source::Trivial,
    );
    r.finish()
}

/// [`construct_h0`] on `trials` random upper unitriangular `u`.
pub fn verify_construction(seed: u64, trials: usize) -> Report {
    let mut r = Report::new("h0-construction").seed(seed);
    let (mu, d) = construct_h0(
        &RationalMatrix::identity(DIM),
        &mut sampling::rng(seed),
        DEFAULT_RETRY_BUDGET,
    )
    .expect("identity succeeds");
    r.check(
        "u = E accepts mu = (1, ..., 1)",
        true,
        mu == MuVector::from_ints([1; N_MU]),
        Source::Trivial,
    );
    r.check(
        "d[15,4] = mu_11 for u = E",
        mu.get(11),
        d.get(14, 3),
        Source::Published,
    );

    let mut rng = sampling::sub_rng(seed, 3);
    let pattern = StarPattern::printed();
    let mut ok = 0;
    let mut first_failure = None;
    for t in 0..trials {
        let u = sampling::unitriangular(&mut rng, DIM);
        match construct_h0(&u, &mut rng, DEFAULT_RETRY_BUDGET) {
            Ok((_, d)) if pattern.holds_in(&d) => ok += 1,
            Ok(_) => first_failure = first_failure.or(Some(format!("trial {t}: star check"))),
            Err(e) => first_failure = first_failure.or(Some(format!("trial {t}: {e}"))),
        }
    }
    r.check(
        format!("all 23 stars non-zero on {trials} random unitriangular u"),
        trials,
        ok,
        Source::Derived,
    );
    if let Some(f) = first_failure {
        r.info("first failure", f);
    }
    r.finish()
}

/// Runs the probe on the identity, `perm_trials` permutation matrices and
/// `trials` random elements of `SL₁₉`.
pub fn verify_probe(seed: u64, perm_trials: usize, trials: usize) -> Report {
    let mut r = Report::new("fixed-line-probe").seed(seed);
    let verdict = |g: &RationalMatrix| probe_fixed_line(g).map(|v| v.is_candidate());
    r.check(
        "identity: no fixed line",
        "false",
        fmt_verdict(verdict(&RationalMatrix::identity(DIM))),
        Source::Derived,
    );
    let mut rng = sampling::sub_rng(seed, 4);
    let mut clean = 0;
    let mut stable_seen = 0;
    for _ in 0..perm_trials {
        let p = Permutation::random(&mut rng, DIM).matrix();
        if let Ok(v) = probe_fixed_line(&p) {
            stable_seen += v.stable().len();
            if !v.is_candidate() {
                clean += 1;
            }
        }
    }
    r.check(
        format!("{perm_trials} permutation matrices: no fixed line"),
        perm_trials,
        clean,
        Source::Derived,
    );
    r.info("stable flags met among permutation samples", stable_seen);
    let mut clean = 0;
    for _ in 0..trials {
        let g = sampling::special_linear(&mut rng, DIM);
        if verdict(&g) == Ok(false) {
            clean += 1;
        }
    }
    r.check(
        format!("{trials} random SL19 elements: no fixed line"),
        trials,
        clean,
        Source::Derived,
    );
    r.finish()
}

/// Probe report for one user-supplied `g0`.
pub fn probe_report(g0: &RationalMatrix) -> Report {
    let mut r = Report::new("fixed-line-probe");
    match probe_fixed_line(g0) {
        Ok(v) => {
            for f in v.stable() {
                r.info(
                    format!("stable W_{}", f.dim),
                    format!("dim(W cap V1) = {}, character {}", f.v1_dim, f.character),
                );
            }
            r.check(
                "fixed line candidate",
                false,
                v.is_candidate(),
                Source::Derived,
            );
        }
        Err(e) => {
            r.check("fixed line candidate", false, e, Source::Derived);
        }
    }
    r.finish()
}

fn fmt_verdict(v: Result<bool>) -> String {
    v.map_or_else(|e| e.to_string(), |b| b.to_string())
}

/// Helper for the group-level cross-check: `g·W ⊆ W` for `W` spanned by the
/// columns of `basis`.
pub fn subspace_is_stable(basis: &RationalMatrix, g: &GroupElement) -> bool {
    let image = g.matrix() * basis;
    basis.hstack(&image).expect("rows").rank() == basis.rank()
}

/// `h(μ̄)` and `s(2)` as group elements, used by the cross-check.
pub fn group_samples<R: Rng>(rng: &mut R, count: usize) -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = (0..count)
        .map(|_| h_element(&MuVector::random(rng)))
        .collect();
    out.push(s_element(&rat(2), &TorusWeights::canonical()).expect("s = 2"));
    out
}

//! The groups `H₀`, `S` and `H = S·H₀` inside `SL₁₉`.
//!
//! Basis vectors `e₁ … e₁₉` are stored at indices `0 … 18`. `V₁` is spanned
//! by `e₁ … e₄` and `V₂` by `e₅ … e₁₉`; row `r` of the `15 × 4` block `M(μ̄)`
//! acts into `e_{r+5}` (0-based `r`).

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational, RationalMatrix};
use crate::sampling;

/// Dimension of `V`.
pub const DIM: usize = 19;
/// Dimension of `V₁ = ⟨e₁, …, e₄⟩`.
pub const V1_DIM: usize = 4;
/// Dimension of `V₂ = ⟨e₅, …, e₁₉⟩`.
pub const V2_DIM: usize = 15;
/// Number of additive parameters of `H₀`.
pub const N_MU: usize = 12;

/// Support of `M(μ̄)`: `(row, column, μ index)`, 0-based, listed row by row.
pub const M_LAYOUT: [(usize, usize, usize); 26] = [
    (0, 0, 1),
    (0, 1, 0),
    (1, 0, 2),
    (1, 1, 1),
    (2, 1, 2),
    (3, 0, 3),
    (3, 2, 0),
    (4, 0, 4),
    (4, 2, 3),
    (5, 2, 4),
    (6, 0, 5),
    (6, 3, 0),
    (7, 0, 6),
    (7, 3, 5),
    (8, 3, 6),
    (9, 0, 7),
    (9, 1, 0),
    (10, 0, 8),
    (10, 1, 7),
    (11, 0, 9),
    (11, 2, 8),
    (12, 0, 10),
    (12, 2, 9),
    (13, 0, 11),
    (13, 3, 10),
    (14, 3, 11),
];

/// Parameters `(μ₀, …, μ₁₁)` of an element of `H₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuVector([Rational; N_MU]);

impl MuVector {
    pub fn new(mu: [Rational; N_MU]) -> Self {
        Self(mu)
    }

    pub fn from_slice(mu: &[Rational]) -> Result<Self> {
        let arr: [Rational; N_MU] = mu.to_vec().try_into().map_err(|v: Vec<Rational>| {
            Error::InvalidInput(format!("expected {N_MU} parameters, got {}", v.len()))
        })?;
        Ok(Self(arr))
    }

    pub fn from_ints(mu: [i64; N_MU]) -> Self {
        Self(mu.map(rat))
    }

    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| Rational::zero()))
    }

    /// The unit vector `ê_k`.
    pub fn unit(k: usize) -> Self {
        Self(std::array::from_fn(|i| {
            if i == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        Self(std::array::from_fn(|_| sampling::rational(rng)))
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * c))
    }
}

/// Integer exponents of a one-dimensional torus `s ↦ diag(s^{w₁}, …)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusWeights(Vec<i64>);

impl TorusWeights {
    /// Rejects exponent vectors that do not sum to zero.
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidInput(format!(
                "torus exponents {exponents:?} do not sum to zero"
            )));
        }
        Ok(Self(exponents))
    }

    /// `(15, 15, 15, 15, −4, …, −4)`.
    pub fn canonical() -> Self {
        let mut w = vec![15; V1_DIM];
        w.extend(std::iter::repeat_n(-4, V2_DIM));
        Self(w)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A `19 × 19` matrix regarded as an element of `GL₁₉`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement(RationalMatrix);

impl GroupElement {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != DIM || matrix.cols() != DIM {
            return Err(Error::DimensionMismatch(format!(
                "group elements are {DIM}x{DIM}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self(matrix))
    }

    pub fn identity() -> Self {
        Self(RationalMatrix::identity(DIM))
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.0
    }

    pub fn det(&self) -> Rational {
        self.0.det().expect("square")
    }

    pub fn is_special(&self) -> bool {
        self.det().is_one()
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self(self.0.inverse()?))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    pub fn act(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.0.mul_vec(v)
    }
}

/// The `15 × 4` block `M(μ̄)`.
pub fn m_matrix(mu: &MuVector) -> RationalMatrix {
    let mut data = vec![Rational::zero(); V2_DIM * V1_DIM];
    for &(r, c, k) in &M_LAYOUT {
        data[r * V1_DIM + c] = mu.get(k).clone();
    }
    RationalMatrix::from_vec(V2_DIM, V1_DIM, data).expect("15x4")
}

/// `h(μ̄) = [[E₄, 0], [M(μ̄), E₁₅]]`.
pub fn h_element(mu: &MuVector) -> GroupElement {
    let m = m_matrix(mu);
    GroupElement(RationalMatrix::from_fn(DIM, DIM, |i, j| {
        if i == j {
            Rational::one()
        } else if i >= V1_DIM && j < V1_DIM {
            m.get(i - V1_DIM, j).clone()
        } else {
            Rational::zero()
        }
    }))
}

/// `diag(s^{w₁}, …, s^{w₁₉})`.
pub fn s_element(s: &Rational, weights: &TorusWeights) -> Result<GroupElement> {
    if s.is_zero() {
        return Err(Error::InvalidInput(
            "torus parameter s must be non-zero".into(),
        ));
    }
    if weights.len() != DIM {
        return Err(Error::DimensionMismatch(format!(
            "{} torus exponents for a {DIM}-dimensional space",
            weights.len()
        )));
    }
    let diag: Vec<Rational> = weights
        .exponents()
        .iter()
        .map(|&w| num_traits::pow::Pow::pow(s, w as i32))
        .collect();
    GroupElement::new(RationalMatrix::diagonal(&diag))
}

/// Generators of `Lie(H)`: `X₀ … X₁₁` with lower-left block `∂M/∂μ_k`,
/// followed by `X_S = diag(15, 15, 15, 15, −4, …, −4)`.
pub fn lie_generators() -> Vec<RationalMatrix> {
    let mut gens: Vec<RationalMatrix> = (0..N_MU).map(unipotent_generator).collect();
    gens.push(torus_generator());
    gens
}

/// `X_k = h(ê_k) − E`.
pub fn unipotent_generator(k: usize) -> RationalMatrix {
    let mut data = vec![Rational::zero(); DIM * DIM];
    for &(r, c, idx) in &M_LAYOUT {
        if idx == k {
            data[(r + V1_DIM) * DIM + c] = Rational::one();
        }
    }
    RationalMatrix::from_vec(DIM, DIM, data).expect("19x19")
}

pub fn torus_generator() -> RationalMatrix {
    let diag: Vec<Rational> = TorusWeights::canonical()
        .exponents()
        .iter()
        .map(|&w| rat(w))
        .collect();
    RationalMatrix::diagonal(&diag)
}

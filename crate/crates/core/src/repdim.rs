//! Root systems of all simple types and the Weyl dimension formula.
//!
//! Simple roots are numbered as in Bourbaki; the two spin nodes of `D_n`
//! are `n − 1` and `n`. Each system is generated from the Gram matrix of its
//! simple roots (scaled to integers), and the positive roots are obtained by
//! closing the simple roots under root strings.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::TorusWeights;
use crate::report::{Report, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub const ALL: [RootType; 7] = [
        RootType::A,
        RootType::B,
        RootType::C,
        RootType::D,
        RootType::E,
        RootType::F,
        RootType::G,
    ];

    /// Ranks for which `(self, rank)` names a simple type, each
    /// isomorphism class once (`B₂ = C₂`, `D₃ = A₃` are listed under `B`
    /// and `A`).
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            RootType::A => rank >= 1,
            RootType::B => rank >= 2,
            RootType::C => rank >= 3,
            RootType::D => rank >= 4,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E" => Ok(RootType::E),
            "F" => Ok(RootType::F),
            "G" => Ok(RootType::G),
            other => Err(Error::InvalidInput(format!(
                "unknown root system type `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    /// `(α_i, α_j)` scaled so that every entry is an integer.
    pub gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in the basis of simple roots, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.root_type, self.rank)
    }
}

/// Coefficients of a dominant weight on the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(pub Vec<u64>);

impl DominantWeight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `ω_i`, one-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn from_coords(coords: &[u64]) -> Self {
        Self(coords.to_vec())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, a)| **a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("w{}", i + 1)
                } else {
                    format!("{a}w{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Comma-separated coordinates, e.g. `0,1,0,0`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInput(format!("bad weight coordinate `{t}`")))
            })
            .collect::<Result<Vec<u64>>>()
            .map(DominantWeight)
    }
}

fn gram_matrix(t: RootType, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t {
        RootType::A => {
            for i in 0..n {
                g[i][i] = 2;
                if i + 1 < n {
                    link(&mut g, i, i + 1, -1);
                }
            }
        }
        RootType::B => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 2 } else { 4 };
                if i + 1 < n {
                    link(&mut g, i, i + 1, -2);
                }
            }
        }
        RootType::C => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 4 } else { 2 };
                if i + 1 < n {
                    link(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
                }
            }
        }
        RootType::D => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            // chain 1-…-(n−1), branch (n−2)-n
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        RootType::E => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            // 1-3-4-5-6(-7-8), 2-4
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        RootType::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        RootType::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Number of positive roots of each type, by the classical formulas.
pub fn classical_positive_root_count(t: RootType, n: usize) -> usize {
    match t {
        RootType::A => n * (n + 1) / 2,
        RootType::B | RootType::C => n * n,
        RootType::D => n * (n - 1),
        RootType::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        RootType::F => 24,
        RootType::G => 6,
    }
}

pub fn build_root_system(root_type: RootType, rank: usize) -> Result<RootSystem> {
    if !root_type.valid_rank(rank) {
        return Err(Error::InvalidInput(format!(
            "{root_type}{rank} is not a simple type"
        )));
    }
    let gram = gram_matrix(root_type, rank);
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let (q, r) = (2 * gram[i][j]).div_rem(&gram[j][j]);
                    assert_eq!(r, 0, "non-integral Cartan entry");
                    q
                })
                .collect()
        })
        .collect();

    let simple: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for alpha in &level {
            for i in 0..rank {
                // ⟨α, α_i^∨⟩ = Σ_j c_j · cartan[j][i]
                let pairing: i64 = (0..rank).map(|j| alpha[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = alpha.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        level = next.into_iter().collect();
        for r in &level {
            all.insert(r.clone());
        }
        roots.extend(level.iter().cloned());
    }

    let rs = RootSystem {
        root_type,
        rank,
        gram,
        cartan,
        positive_roots: roots,
    };
    let expected = classical_positive_root_count(root_type, rank);
    if rs.positive_roots.len() != expected {
        return Err(Error::Internal(format!(
            "{rs} produced {} positive roots, expected {expected}",
            rs.positive_roots.len()
        )));
    }
    Ok(rs)
}

impl RootSystem {
    /// Dimension of the group: `2·|Φ⁺| + rank`.
    pub fn group_dimension(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    /// `ρ` in fundamental-weight coordinates.
    pub fn rho(&self) -> DominantWeight {
        DominantWeight(vec![1; self.rank])
    }

    /// The permutation of simple roots induced by `−w₀`.
    pub fn dual_involution(&self) -> Vec<usize> {
        let n = self.rank;
        let mut perm: Vec<usize> = (0..n).collect();
        match (self.root_type, n) {
            (RootType::A, _) => perm.reverse(),
            (RootType::D, n) if n % 2 == 1 => perm.swap(n - 2, n - 1),
            (RootType::E, 6) => {
                perm.swap(0, 5);
                perm.swap(2, 4);
            }
            _ => {}
        }
        perm
    }

    /// Highest weight of the dual module, `−w₀(λ)`.
    pub fn dual_weight(&self, lambda: &DominantWeight) -> DominantWeight {
        let perm = self.dual_involution();
        let mut out = vec![0; self.rank];
        for (i, &a) in lambda.0.iter().enumerate() {
            out[perm[i]] = a;
        }
        DominantWeight(out)
    }
}

/// `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`, evaluated exactly.
///
/// With `(ω_i, α_j) = δ_ij (α_j, α_j)/2`, each factor is
/// `Σ c_j (λ_j + 1) |α_j|² / Σ c_j |α_j|²` for `α = Σ c_j α_j`.
pub fn weyl_dim(rs: &RootSystem, lambda: &DominantWeight) -> Result<BigUint> {
    if lambda.rank() != rs.rank {
        return Err(Error::DimensionMismatch(format!(
            "weight of rank {} for {rs}",
            lambda.rank()
        )));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &rs.positive_roots {
        let mut n = BigInt::zero();
        let mut d = BigInt::zero();
        for (j, (c, a)) in alpha.iter().zip(&lambda.0).enumerate() {
            let w = BigInt::from(c * rs.gram[j][j]);
            n += &w * BigInt::from(a + 1);
            d += w;
        }
        num *= n;
        den *= d;
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || !q.is_positive() {
        return Err(Error::Internal(format!(
            "Weyl product for {lambda} on {rs} is {num}/{den}, not a positive integer"
        )));
    }
    Ok(q.to_biguint().expect("positive"))
}

/// Every dominant weight with `weyl_dim < bound`, sorted by dimension and
/// then by coordinates.
///
/// Breadth-first from `0` by adding fundamental weights; a weight whose
/// dimension reaches `bound` is not expanded, since the dimension strictly
/// grows with every coordinate.
pub fn enumerate_irreps_below(rs: &RootSystem, bound: u64) -> Result<Vec<(DominantWeight, u64)>> {
    let mut out = Vec::new();
    let mut seen: HashSet<DominantWeight> = HashSet::new();
    let mut queue = VecDeque::from([DominantWeight::zero(rs.rank)]);
    seen.insert(DominantWeight::zero(rs.rank));
    while let Some(lambda) = queue.pop_front() {
        let dim = weyl_dim(rs, &lambda)?;
        let Some(dim) = dim.to_u64().filter(|d| *d < bound) else {
            continue;
        };
        for i in 0..rs.rank {
            let mut next = lambda.clone();
            next.0[i] += 1;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push((lambda, dim));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Whether `V(λ)` is isomorphic to its dual.
pub fn is_self_dual(rs: &RootSystem, lambda: &DominantWeight) -> bool {
    rs.dual_weight(lambda) == *lambda
}

/// Dimension of the space of bilinear forms invariant under the torus with
/// the given exponents: pairs `(i, j)` with `w_i + w_j = 0`.
pub fn s_invariant_bilinear_dim(weights: &TorusWeights) -> usize {
    let w = weights.exponents();
    w.iter()
        .flat_map(|a| w.iter().map(move |b| a + b))
        .filter(|s| *s == 0)
        .count()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// A simple module of dimension exactly `target` found by the scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanHit {
    pub root_type: RootType,
    pub rank: usize,
    pub weight: DominantWeight,
    pub self_dual: bool,
    pub group_dimension: usize,
}

impl fmt::Display for ScanHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.root_type, self.rank, self.weight)
    }
}

/// Every simple module of dimension `target` of every simple type of rank
/// at most `max_rank`.
pub fn scan_dimension(target: u64, max_rank: usize) -> Result<Vec<ScanHit>> {
    let mut hits = Vec::new();
    for t in RootType::ALL {
        for rank in 1..=max_rank {
            if !t.valid_rank(rank) {
                continue;
            }
            let rs = build_root_system(t, rank)?;
            for (weight, dim) in enumerate_irreps_below(&rs, target + 1)? {
                if dim == target {
                    hits.push(ScanHit {
                        root_type: t,
                        rank,
                        self_dual: is_self_dual(&rs, &weight),
                        group_dimension: rs.group_dimension(),
                        weight,
                    });
                }
            }
        }
    }
    Ok(hits)
}

fn dims_of(list: &[(DominantWeight, u64)]) -> String {
    format!("{:?}", list.iter().map(|(_, d)| *d).collect::<Vec<_>>())
}

fn irreps_below(t: RootType, rank: usize, bound: u64) -> String {
    build_root_system(t, rank)
        .and_then(|rs| enumerate_irreps_below(&rs, bound))
        .map_or_else(|e| e.to_string(), |l| dims_of(&l))
}

fn dim_of(t: RootType, rank: usize, coords: &[u64]) -> String {
    build_root_system(t, rank)
        .and_then(|rs| weyl_dim(&rs, &DominantWeight::from_coords(coords)))
        .map_or_else(|e| e.to_string(), |d| d.to_string())
}

fn group_dim(t: RootType, rank: usize) -> usize {
    build_root_system(t, rank).map_or(0, |rs| rs.group_dimension())
}

/// Checks that no proper reductive subgroup of `SL₁₉` can contain `H`.
pub fn verify_reductive_exclusion() -> Report {
    use RootType::*;
    let mut r = Report::new("reductive-exclusion");

    r.check(
        "torus-invariant bilinear forms on V",
        0,
        s_invariant_bilinear_dim(&TorusWeights::canonical()),
        Source::Published,
    );
    r.check("dim V = 19 is prime", true, is_prime(19), Source::Trivial);
    r.check(
        "min dim of a group containing H0 (2 + 2*12)",
        26,
        2 + 2 * 12,
        Source::Published,
    );

    let fundamental = |rank: usize, i: usize| DominantWeight::fundamental(rank, i).0;
    r.check(
        "dim V(w3) for A5",
        20,
        dim_of(A, 5, &fundamental(5, 3)),
        Source::Published,
    );
    r.check(
        "dim V(w2) for D9",
        153,
        dim_of(D, 9, &fundamental(9, 2)),
        Source::Published,
    );
    r.check(
        "dim V(w7) for D7 (spin)",
        64,
        dim_of(D, 7, &fundamental(7, 7)),
        Source::Published,
    );
    r.check(
        "dim V(w2) for D5",
        45,
        dim_of(D, 5, &fundamental(5, 2)),
        Source::Published,
    );
    r.check(
        "dim V(w1) for E6",
        27,
        dim_of(E, 6, &fundamental(6, 1)),
        Source::Published,
    );
    r.check(
        "dim V(w1) for A18",
        19,
        dim_of(A, 18, &fundamental(18, 1)),
        Source::Trivial,
    );

    r.check("dim SL5 = 24 < 26", 24, group_dim(A, 4), Source::Published);
    r.check("dim SL6 = 35 >= 26", 35, group_dim(A, 5), Source::Published);
    for k in 6..=18u64 {
        let bound = k * (k - 1) / 2;
        r.check(
            format!("SL{k}: simple modules of dim < {bound}"),
            format!("[1, {k}, {k}]"),
            irreps_below(A, k as usize - 1, bound),
            Source::Published,
        );
    }
    r.check(
        "k(k-1)/2 > 19 for k = 7",
        true,
        7 * 6 / 2 > 19,
        Source::Trivial,
    );
    r.check(
        "SL6: simple modules of dim < 20",
        "[1, 6, 6, 15, 15]",
        irreps_below(A, 5, 20),
        Source::Derived,
    );

    r.check(
        "dim Spin6 = 15 < 26",
        15,
        group_dim(A, 3),
        Source::Published,
    );
    r.check(
        "dim Spin10 = 45 >= 26",
        45,
        group_dim(D, 5),
        Source::Published,
    );
    r.check(
        "Spin18: simple modules of dim < 153",
        "[1, 18]",
        irreps_below(D, 9, 153),
        Source::Published,
    );
    r.check(
        "Spin14: simple modules of dim < 64",
        "[1, 14]",
        irreps_below(D, 7, 64),
        Source::Published,
    );
    r.check(
        "Spin10: simple modules of dim < 45",
        "[1, 10, 16, 16]",
        irreps_below(D, 5, 45),
        Source::Published,
    );
    r.check(
        "E6: simple modules of dim < 27",
        "[1]",
        irreps_below(E, 6, 27),
        Source::Published,
    );

    match scan_dimension(19, 18) {
        Ok(hits) => {
            let listing: Vec<String> = hits
                .iter()
                .map(|h| format!("{h}{}", if h.self_dual { "(self-dual)" } else { "" }))
                .collect();
            r.check(
                "19-dim simple modules, all simple types of rank <= 18",
                "A1:18w1(self-dual) A18:w18 A18:w1 B9:w1(self-dual)",
                listing.join(" "),
                Source::Derived,
            );
            let survivors: BTreeSet<String> = hits
                .iter()
                .filter(|h| !h.self_dual && h.group_dimension >= 26)
                .map(|h| format!("{}{}", h.root_type, h.rank))
                .collect();
            r.check(
                "types left after non-self-dual and dim >= 26 filters",
                "A18",
                survivors.into_iter().collect::<Vec<_>>().join(" "),
                Source::Published,
            );
        }
        Err(e) => {
            r.check("19-dim scan", "completed", e, Source::Derived);
        }
    }
    r.finish()
}

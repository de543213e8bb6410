//! Sparse exact elimination.
//!
//! Rows are inserted one at a time into a row echelon structure keyed by
//! leading column. Rank is available at any point; the null space is read
//! off after back-substitution.

use std::collections::{BTreeMap, BTreeSet};

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// Exact field arithmetic by reference, shared by [`Rational`] and the
/// prime field in [`super::modp`].
pub trait Field: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_ref(&self, other: &Self) -> Self;
}

impl Field for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

/// Sparse vector as `(index, value)` pairs with strictly increasing indices
/// and no stored zeros.
pub type SparseVec<T = Rational> = Vec<(usize, T)>;

/// Drops zeros and merges duplicate indices.
pub fn normalize<T: Field>(mut entries: Vec<(usize, T)>) -> SparseVec<T> {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<T> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = acc.add_ref(&v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a + c·b` on sparse vectors.
fn axpy<T: Field>(a: &[(usize, T)], c: &T, b: &[(usize, T)]) -> SparseVec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|e| e.0);
        let bj = b.get(j).map(|e| e.0);
        match (ai, bj) {
            (Some(x), Some(y)) if x == y => {
                let v = a[i].1.add_ref(&c.mul_ref(&b[j].1));
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, c.mul_ref(&b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Sparse dot product.
pub fn dot<T: Field>(a: &[(usize, T)], b: &[(usize, T)]) -> T {
    let (mut i, mut j) = (0, 0);
    let mut acc = T::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = acc.add_ref(&a[i].1.mul_ref(&b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Incrementally built row echelon form over `n_cols` unknowns.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    n_cols: usize,
    // leading column -> row with leading coefficient 1
    pivots: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(n_cols: usize) -> Self {
        Self {
            n_cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.n_cols - self.rank()
    }

    /// Reduces `row` against the current pivots and keeps it if it is
    /// independent. Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let mut row = row;
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return false;
            };
            debug_assert!(lead < self.n_cols);
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &-coeff, p),
                None => {
                    let inv = coeff.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Null space basis: one vector per free column `f`, equal to `e_f`
    /// minus the pivot-column coordinates read off the reduced rows.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut reduced: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let mut k = 1;
            while k < r.len() {
                let (col, coeff) = r[k].clone();
                if let Some(p) = reduced.get(&col) {
                    r = axpy(&r, &-coeff, p);
                    // position k now holds the next column after `col`
                    k = r.partition_point(|(c, _)| *c <= col);
                } else {
                    k += 1;
                }
            }
            reduced.insert(lead, r);
        }
        let mut basis: BTreeMap<usize, Vec<(usize, Rational)>> = (0..self.n_cols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|f| (f, vec![(f, Rational::one())]))
            .collect();
        for (&lead, row) in &reduced {
            for (col, v) in row.iter().skip(1) {
                if let Some(vec) = basis.get_mut(col) {
                    vec.push((lead, -v.clone()));
                }
            }
        }
        basis.into_values().map(normalize).collect()
    }
}

/// Null space of a growing set of linear conditions, kept as an explicit
/// sparse basis.
///
/// Adding a row `r` updates only the basis vectors with `r·k ≠ 0`: one of
/// them (the sparsest) is eliminated, the rest are corrected by a multiple of
/// it. A row already implied by the previous ones costs only the dot
/// products against the vectors sharing its support.
#[derive(Clone, Debug)]
pub struct KernelTracker<T: Field = Rational> {
    vectors: Vec<Option<SparseVec<T>>>,
    // coordinate -> ids of live vectors with a non-zero entry there
    support: Vec<BTreeSet<usize>>,
    live: usize,
}

impl<T: Field> KernelTracker<T> {
    pub fn new(n_cols: usize) -> Self {
        Self {
            vectors: (0..n_cols).map(|i| Some(vec![(i, T::one())])).collect(),
            support: (0..n_cols).map(|i| BTreeSet::from([i])).collect(),
            live: n_cols,
        }
    }

    pub fn dimension(&self) -> usize {
        self.live
    }

    /// Restricts to `{k : r·k = 0}`. Returns whether the dimension dropped.
    pub fn constrain(&mut self, row: &[(usize, T)]) -> bool {
        let candidates: BTreeSet<usize> = row
            .iter()
            .flat_map(|(c, _)| self.support[*c].iter().copied())
            .collect();
        let hits: Vec<(usize, T)> = candidates
            .into_iter()
            .filter_map(|id| {
                let v = dot(row, self.vectors[id].as_ref().expect("live"));
                (!v.is_zero()).then_some((id, v))
            })
            .collect();
        let Some(&(pivot, ref pv)) = hits
            .iter()
            .min_by_key(|(id, _)| self.vectors[*id].as_ref().map_or(0, Vec::len))
        else {
            return false;
        };
        let pv = pv.clone();
        let k = self.vectors[pivot].take().expect("live");
        for (c, _) in &k {
            self.support[*c].remove(&pivot);
        }
        for (id, v) in hits {
            if id == pivot {
                continue;
            }
            let old = self.vectors[id].take().expect("live");
            let new = axpy(&old, &v.div_ref(&pv).neg_ref(), &k);
            for (c, _) in &old {
                self.support[*c].remove(&id);
            }
            for (c, _) in &new {
                self.support[*c].insert(id);
            }
            self.vectors[id] = Some(new);
        }
        self.live -= 1;
        true
    }

    pub fn basis(&self) -> Vec<SparseVec<T>> {
        self.vectors.iter().flatten().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, RationalMatrix};
    use super::*;

    fn to_sparse(row: &[Rational]) -> SparseVec {
        normalize(row.iter().cloned().enumerate().collect())
    }

    fn densify(v: &SparseVec, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (i, x) in v {
            out[*i] = x.clone();
        }
        out
    }

    #[test]
    fn matches_dense_rank_and_kernel() {
        let m = RationalMatrix::from_i64_rows(&[
            [1, 2, 0, -1, 3],
            [2, 4, 1, 0, 1],
            [3, 6, 1, -1, 4],
            [0, 0, 0, 2, 5],
        ]);
        let mut e = SparseEchelon::new(5);
        for i in 0..m.rows() {
            e.insert(to_sparse(m.row(i)));
        }
        assert_eq!(e.rank(), m.rank());
        let dense: Vec<Vec<Rational>> = m.kernel_basis();
        let sparse: Vec<Vec<Rational>> = e.kernel_basis().iter().map(|v| densify(v, 5)).collect();
        assert_eq!(dense, sparse);
        for v in &sparse {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn tracker_matches_echelon() {
        let m = RationalMatrix::from_i64_rows(&[
            [1, 2, 0, -1, 3, 0],
            [2, 4, 1, 0, 1, 1],
            [3, 6, 1, -1, 4, 1],
            [0, 0, 0, 2, 5, -2],
            [1, 0, 0, 0, 0, 7],
        ]);
        let mut t = KernelTracker::new(6);
        let mut drops = 0;
        for i in 0..m.rows() {
            drops += usize::from(t.constrain(&to_sparse(m.row(i))));
        }
        assert_eq!(drops, m.rank());
        assert_eq!(t.dimension(), 6 - m.rank());
        let basis: Vec<Vec<Rational>> = t.basis().iter().map(|v| densify(v, 6)).collect();
        assert_eq!(basis.len(), t.dimension());
        for v in &basis {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        let stacked = RationalMatrix::from_columns(6, &basis).unwrap();
        assert_eq!(stacked.rank(), basis.len());
    }

    #[test]
    fn dependent_row_is_rejected() {
        let mut e = SparseEchelon::new(3);
        assert!(e.insert(vec![(0, rat(1)), (2, rat(2))]));
        assert!(!e.insert(vec![(0, rat(3)), (2, rat(6))]));
        assert!(!e.insert(vec![]));
        assert_eq!(e.nullity(), 2);
    }

    #[test]
    fn dot_and_normalize() {
        let a = normalize(vec![(3, rat(1)), (1, rat(2)), (3, rat(-1))]);
        assert_eq!(a, vec![(1, rat(2))]);
        assert_eq!(dot(&a, &[(1, rat(5)), (4, rat(1))]), rat(10));
    }
}

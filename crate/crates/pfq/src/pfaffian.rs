//! Skew-symmetric matrices, Pfaffians, and the identity toolbox
//! (Sylvester, Laplace, Cauchy-Binet) as executable operations.
//!
//! The production algorithm expands along the first surviving row with
//! memoization keyed by the surviving-index bitmask: O(2^m * m) ring
//! operations, division-free, so it works over any commutative ring.
//! `pfaffian_def` enumerates the permutation set F_{2m} directly and serves
//! as an independent oracle for small dimensions.

use crate::ring::Ring;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PfError {
    #[error("odd-dimensional matrix in strict mode")]
    OddDimension,
    #[error("dimension {0} too large for definition-based enumeration (max 10)")]
    TooLarge(usize),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("pivot Pfaffian Pf X([n]) is zero")]
    ZeroPivotPfaffian,
    #[error("index out of range")]
    IndexOutOfRange,
}

/// A sorted set of 1-based indices inside [n].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        idx.dedup();
        IndexSet(idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sigma(I) = sum of the (1-based) indices.
    pub fn sigma(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn complement(&self, n: usize) -> IndexSet {
        IndexSet((1..=n).filter(|i| !self.0.contains(i)).collect())
    }
}

/// All k-element subsets of [n] (1-based), in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if k == 0 {
            out.push(IndexSet(cur.clone()));
            return;
        }
        for i in start..=n.saturating_sub(k - 1) {
            cur.push(i);
            rec(i + 1, n, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    if k <= n {
        rec(1, n, k, &mut vec![], &mut out);
    }
    out
}

/// A plain rectangular matrix over a ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    /// Submatrix on 1-based row/column index sets.
    pub fn pick(&self, rows: &IndexSet, cols: &IndexSet) -> Matrix<T> {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.indices()[i] - 1, cols.indices()[j] - 1).clone()
        })
    }

    pub fn mul_transpose(&self, other: &Matrix<T>) -> Matrix<T> {
        // self (m x l) * other^T (l x n) -> m x n
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.rows, other.rows, |i, j| {
            let mut acc = T::r_zero();
            for k in 0..self.cols {
                acc = acc.r_add(&self.get(i, k).r_mul(other.get(j, k)));
            }
            acc
        })
    }

    /// Exact determinant, division-free (column-mask memoized expansion).
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "det: square matrix required");
        let n = self.rows;
        if n == 0 {
            return T::r_one();
        }
        assert!(n <= 20, "det: dimension too large");
        let mut memo: HashMap<u64, T> = HashMap::new();
        self.det_rec(n, (1u64 << n) - 1, &mut memo)
    }

    fn det_rec(&self, n: usize, colmask: u64, memo: &mut HashMap<u64, T>) -> T {
        if colmask == 0 {
            return T::r_one();
        }
        if let Some(v) = memo.get(&colmask) {
            return v.clone();
        }
        let row = n - colmask.count_ones() as usize;
        let mut acc = T::r_zero();
        let mut pos = 0usize;
        for j in 0..n {
            if colmask & (1 << j) == 0 {
                continue;
            }
            let e = self.get(row, j);
            if !e.r_is_zero() {
                let sub = self.det_rec(n, colmask & !(1 << j), memo);
                let term = e.r_mul(&sub);
                acc = if pos % 2 == 0 {
                    acc.r_add(&term)
                } else {
                    acc.r_sub(&term)
                };
            }
            pos += 1;
        }
        memo.insert(colmask, acc.clone());
        acc
    }
}

/// Skew-symmetric matrix: only the strict upper triangle is stored; the
/// logical entry (j,i) is -entry(i,j) and the diagonal is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<T> {
    pub dim: usize,
    upper: Vec<T>,
}

impl<T: Ring> SkewMatrix<T> {
    /// Build from an upper-triangle generator f(i,j) for 0-based i < j.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
        for i in 0..dim {
            for j in i + 1..dim {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { dim, upper }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Logical entry (i, j), 0-based.
    pub fn get(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.idx(i, j)].clone(),
            Equal => T::r_zero(),
            Greater => self.upper[self.idx(j, i)].r_neg(),
        }
    }

    /// Upper-triangle entry reference (i < j).
    pub fn upper_ref(&self, i: usize, j: usize) -> &T {
        &self.upper[self.idx(i, j)]
    }

    /// Principal submatrix on a 1-based index set.
    pub fn submatrix(&self, set: &IndexSet) -> Result<SkewMatrix<T>, PfError> {
        let idx = set.indices();
        if idx.iter().any(|&i| i == 0 || i > self.dim) {
            return Err(PfError::IndexOutOfRange);
        }
        Ok(SkewMatrix::from_fn(idx.len(), |i, j| {
            self.get(idx[i] - 1, idx[j] - 1)
        }))
    }

    /// Assemble the block matrix [[Z, W], [-W^T, O]].
    pub fn bordered(z: &SkewMatrix<T>, w: &Matrix<T>) -> SkewMatrix<T> {
        assert_eq!(z.dim, w.rows);
        let m = z.dim;
        SkewMatrix::from_fn(m + w.cols, |i, j| {
            if j < m {
                z.get(i, j)
            } else if i < m {
                w.get(i, j - m).clone()
            } else {
                T::r_zero()
            }
        })
    }

    /// Pfaffian; odd dimension returns 0 (callers pad explicitly when needed).
    pub fn pfaffian(&self) -> T {
        if self.dim % 2 == 1 {
            return T::r_zero();
        }
        self.pfaffian_even()
    }

    /// Pfaffian in strict mode: odd dimension is an error.
    pub fn pfaffian_strict(&self) -> Result<T, PfError> {
        if self.dim % 2 == 1 {
            return Err(PfError::OddDimension);
        }
        Ok(self.pfaffian_even())
    }

    fn pfaffian_even(&self) -> T {
        if self.dim == 0 {
            return T::r_one();
        }
        assert!(self.dim <= 26, "pfaffian: dimension too large for bitmask memoization");
        let full: u64 = (1u64 << self.dim) - 1;
        let mut memo: HashMap<u64, T> = HashMap::new();
        self.pf_rec(full, &mut memo)
    }

    fn pf_rec(&self, mask: u64, memo: &mut HashMap<u64, T>) -> T {
        if mask == 0 {
            return T::r_one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let k = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << k);
        let mut acc = T::r_zero();
        let mut positive = true;
        for j in (k + 1)..self.dim {
            if rest & (1u64 << j) == 0 {
                continue;
            }
            let e = self.upper_ref(k, j);
            if !e.r_is_zero() {
                let sub = self.pf_rec(rest & !(1u64 << j), memo);
                let term = e.r_mul(&sub);
                acc = if positive {
                    acc.r_add(&term)
                } else {
                    acc.r_sub(&term)
                };
            }
            positive = !positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Pfaffian straight from the definition: a signed sum over the
    /// perfect-matching permutations F_{2m}. Independent oracle, dim <= 10.
    pub fn pfaffian_def(&self) -> Result<T, PfError> {
        if self.dim % 2 == 1 {
            return Err(PfError::OddDimension);
        }
        if self.dim > 10 {
            return Err(PfError::TooLarge(self.dim));
        }
        if self.dim == 0 {
            return Ok(T::r_one());
        }
        let mut acc = T::r_zero();
        let mut flat: Vec<usize> = vec![];
        self.def_rec(&mut (0..self.dim).collect::<Vec<_>>(), &mut flat, &mut acc);
        Ok(acc)
    }

    fn def_rec(&self, free: &mut Vec<usize>, flat: &mut Vec<usize>, acc: &mut T) {
        if free.is_empty() {
            // sgn(sigma) by inversion count of the flattened word.
            let mut inv = 0usize;
            for a in 0..flat.len() {
                for b in a + 1..flat.len() {
                    if flat[a] > flat[b] {
                        inv += 1;
                    }
                }
            }
            let mut term = T::r_one();
            for pair in flat.chunks(2) {
                term = term.r_mul(&self.get(pair[0], pair[1]));
            }
            *acc = if inv % 2 == 0 {
                acc.r_add(&term)
            } else {
                acc.r_sub(&term)
            };
            return;
        }
        let i = free[0];
        for pos in 1..free.len() {
            let j = free[pos];
            let mut rest: Vec<usize> = free.clone();
            rest.remove(pos);
            rest.remove(0);
            flat.push(i);
            flat.push(j);
            self.def_rec(&mut rest, flat, acc);
            flat.pop();
            flat.pop();
        }
    }

    /// Expansion along the k-th row/column (1-based), per the expansion
    /// formula; used to test agreement for every k, not just k = 1.
    pub fn pfaffian_expand_along(&self, k: usize) -> T {
        assert!(k >= 1 && k <= self.dim && self.dim % 2 == 0 && self.dim > 0);
        let n = self.dim;
        let mut acc = T::r_zero();
        for i in 1..=n {
            if i == k {
                continue;
            }
            let rest = IndexSet::new((1..=n).filter(|&t| t != i && t != k).collect());
            let sub = self.submatrix(&rest).unwrap().pfaffian();
            let entry = if i < k { self.get(i - 1, k - 1) } else { self.get(k - 1, i - 1) };
            let term = entry.r_mul(&sub);
            acc = if (k + i - 1) % 2 == 0 {
                acc.r_add(&term)
            } else {
                acc.r_sub(&term)
            };
        }
        acc
    }

    /// Full dense form, handy for determinants (Pf^2 = det).
    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }
}

/// Right-hand side of the Pfaffian Laplace expansion for the block matrix
/// [[Z, W], [-W^T, O]] with Z skew m x m and W an m x n matrix:
/// a signed sum over (m-n)-subsets I of [m] when m > n, the determinant
/// case when m = n, and 0 when m < n.
pub fn laplace_pfaffian<T: Ring>(z: &SkewMatrix<T>, w: &Matrix<T>) -> Result<T, PfError> {
    let m = z.dim;
    let n = w.cols;
    assert_eq!(w.rows, m);
    if m % 2 != n % 2 {
        return Err(PfError::ParityMismatch(format!("m = {m}, n = {n}")));
    }
    if m < n {
        return Ok(T::r_zero());
    }
    let all_cols = IndexSet::new((1..=n).collect());
    if m == n {
        let d = w.det();
        return Ok(if (m * (m - 1) / 2) % 2 == 0 { d } else { d.r_neg() });
    }
    let mut acc = T::r_zero();
    for i_set in subsets(m, m - n) {
        let pf = z.submatrix(&i_set)?.pfaffian();
        if pf.r_is_zero() {
            continue;
        }
        let rows = i_set.complement(m);
        let d = w.pick(&rows, &all_cols).det();
        let term = pf.r_mul(&d);
        let sign = (i_set.sigma() + m * (m - 1) / 2) % 2;
        acc = if sign == 0 { acc.r_add(&term) } else { acc.r_sub(&term) };
    }
    Ok(acc)
}

/// Sylvester identity check over the fraction field: with n, m even and
/// Pf X([n]) nonzero,
///   Pf( Pf X([n] u {n+i, n+j}) / Pf X([n]) ) = Pf X / Pf X([n]).
pub fn sylvester_check(
    x: &SkewMatrix<crate::ratfn::RationalFn>,
    n: usize,
    m: usize,
) -> Result<bool, PfError> {
    use crate::ratfn::RationalFn;
    if n % 2 != 0 || m % 2 != 0 {
        return Err(PfError::ParityMismatch(format!("n = {n}, m = {m}")));
    }
    assert_eq!(n + m, x.dim);
    let base = IndexSet::new((1..=n).collect());
    let pivot = x.submatrix(&base)?.pfaffian();
    if pivot.is_zero() {
        return Err(PfError::ZeroPivotPfaffian);
    }
    let inner = SkewMatrix::from_fn(m, |i, j| {
        let mut idx: Vec<usize> = (1..=n).collect();
        idx.push(n + i + 1);
        idx.push(n + j + 1);
        let pf = x.submatrix(&IndexSet::new(idx)).unwrap().pfaffian();
        pf.div(&pivot)
    });
    let lhs: RationalFn = inner.pfaffian();
    let rhs = x.pfaffian().div(&pivot);
    Ok(lhs == rhs)
}

/// Both sides of the Pfaffian Cauchy-Binet identity (variant 1 or 2).
/// A is m x m skew, B is n x n skew, S is m x l, T is n x l; I runs over
/// subsets of [l] with #I = m = n (mod 2).
pub fn cauchy_binet_pf<T: Ring>(
    a: &SkewMatrix<T>,
    b: &SkewMatrix<T>,
    s: &Matrix<T>,
    t: &Matrix<T>,
    variant: u8,
) -> Result<(T, T), PfError> {
    let (m, n, l) = (a.dim, b.dim, s.cols);
    assert_eq!(s.rows, m);
    assert_eq!(t.rows, n);
    assert_eq!(t.cols, l);
    if m % 2 != n % 2 {
        return Err(PfError::ParityMismatch(format!("m = {m}, n = {n}")));
    }
    let all_rows_s = IndexSet::new((1..=m).collect());
    let all_rows_t = IndexSet::new((1..=n).collect());
    let mut left = T::r_zero();
    for k in (m % 2..=l).step_by(2) {
        for i_set in subsets(l, k) {
            let pa = SkewMatrix::bordered(a, &s.pick(&all_rows_s, &i_set)).pfaffian();
            if pa.r_is_zero() {
                continue;
            }
            let pb = SkewMatrix::bordered(b, &t.pick(&all_rows_t, &i_set)).pfaffian();
            let term = pa.r_mul(&pb);
            let signed = match variant {
                1 => {
                    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                        term
                    } else {
                        term.r_neg()
                    }
                }
                2 => term,
                _ => panic!("cauchy_binet_pf: variant must be 1 or 2"),
            };
            left = left.r_add(&signed);
        }
    }
    let st = s.mul_transpose(t); // m x n
    let flip = variant == 2;
    let block = SkewMatrix::from_fn(m + n, |i, j| {
        if j < m {
            a.get(i, j)
        } else if i < m {
            st.get(i, j - m).clone()
        } else {
            let e = b.get(i - m, j - m);
            if flip {
                e.r_neg()
            } else {
                e
            }
        }
    });
    let mut right = block.pfaffian();
    if variant == 2 && (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        right = right.r_neg();
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SparsePoly;

    fn sym(dim: usize) -> SkewMatrix<SparsePoly> {
        SkewMatrix::from_fn(dim, |i, j| SparsePoly::var(&format!("m{}_{}", i + 1, j + 1)))
    }

    #[test]
    fn conventions() {
        let empty: SkewMatrix<SparsePoly> = SkewMatrix::from_fn(0, |_, _| unreachable!());
        assert_eq!(empty.pfaffian(), SparsePoly::one());
        let odd = sym(3);
        assert_eq!(odd.pfaffian(), SparsePoly::zero());
        assert_eq!(odd.pfaffian_strict(), Err(PfError::OddDimension));
        let two = sym(2);
        assert_eq!(two.pfaffian(), SparsePoly::var("m1_2"));
    }

    #[test]
    fn generic_four_by_four() {
        let x = sym(4);
        let m = |i: usize, j: usize| SparsePoly::var(&format!("m{}_{}", i, j));
        let want = m(1, 2)
            .mul(&m(3, 4))
            .sub(&m(1, 3).mul(&m(2, 4)))
            .add(&m(1, 4).mul(&m(2, 3)));
        assert_eq!(x.pfaffian(), want);
        assert_eq!(x.pfaffian_def().unwrap(), want);
    }

    #[test]
    fn six_by_six_def_matches() {
        let x = sym(6);
        assert_eq!(x.pfaffian(), x.pfaffian_def().unwrap());
    }

    #[test]
    fn expansion_along_every_row() {
        let x = sym(6);
        let pf = x.pfaffian();
        for k in 1..=6 {
            assert_eq!(x.pfaffian_expand_along(k), pf, "row {k}");
        }
    }

    #[test]
    fn submatrix_readoff() {
        let x = sym(4);
        let s = x.submatrix(&IndexSet::new(vec![1, 3])).unwrap();
        assert_eq!(s.pfaffian(), SparsePoly::var("m1_3"));
        assert!(x.submatrix(&IndexSet::new(vec![5])).is_err());
    }
}

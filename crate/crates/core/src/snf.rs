//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] is the dense reference algorithm with an explicit
//! pivot rule (smallest nonzero absolute value, ties broken row-major) and
//! optional unimodular witnesses `U·M·V = S`. It first runs in checked `i64`
//! arithmetic and reruns in `BigInt` if any intermediate overflows.
//!
//! [`invariant_factors_sparse`] computes only the nonzero diagonal for large
//! sparse boundary matrices: it clears every column that has a `±1` entry
//! with row operations (which leaves the invariant factors unchanged) and
//! hands the small remainder to the dense routine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            a.data.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of a Smith normal form computation: `U·M·V = S` with `S` diagonal,
/// `diagonal[k] | diagonal[k+1]` for the nonzero part, zeros trailing.
#[derive(Clone, Debug)]
pub struct Snf {
    pub diagonal: Vec<BigInt>,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal as a full `rows × cols` matrix.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut s = IntMatrix::zeros(rows, cols);
        for (k, d) in self.diagonal.iter().enumerate() {
            s[(k, k)] = d.clone();
        }
        s
    }
}

trait Ring: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul {
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Ring for i64 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug)]
struct Overflow;

struct Dense<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

impl<T: Ring> Dense<T> {
    fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i != k {
            for j in 0..self.cols {
                self.a.swap(i * self.cols + j, k * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j != k {
            for i in 0..self.rows {
                self.a.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &T) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let x = &self.a[k * self.cols + j];
            if x.is_zero() {
                continue;
            }
            let p = q.checked_mul(x).ok_or(Overflow)?;
            let cur = &self.a[i * self.cols + j];
            self.a[i * self.cols + j] = cur.checked_sub(&p).ok_or(Overflow)?;
        }
        Ok(())
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &T) -> Result<(), Overflow> {
        for i in 0..self.rows {
            let x = &self.a[i * self.cols + k];
            if x.is_zero() {
                continue;
            }
            let p = q.checked_mul(x).ok_or(Overflow)?;
            let cur = &self.a[i * self.cols + j];
            self.a[i * self.cols + j] = cur.checked_sub(&p).ok_or(Overflow)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.a[i * self.cols + j].clone();
            self.a[i * self.cols + j] = v;
        }
    }

    fn to_matrix(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.a.iter().map(Ring::to_big).collect(),
        }
    }
}

fn identity<T: Ring>(n: usize) -> Dense<T> {
    let mut a = vec![T::zero(); n * n];
    for i in 0..n {
        a[i * n + i] = T::one();
    }
    Dense { rows: n, cols: n, a }
}

fn snf_generic<T: Ring>(m: &IntMatrix, witnesses: bool) -> Result<Snf, Overflow> {
    let data = m.data.iter().map(|x| T::from_big(x).ok_or(Overflow)).collect::<Result<Vec<T>, _>>()?;
    let mut a = Dense {
        rows: m.rows,
        cols: m.cols,
        a: data,
    };
    let mut u = witnesses.then(|| identity::<T>(m.rows));
    let mut v = witnesses.then(|| identity::<T>(m.cols));
    let n = m.rows.min(m.cols);
    let mut diagonal = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // Pivot: smallest nonzero |a_ij| in the trailing block, first in row-major order.
            let mut best: Option<(usize, usize)> = None;
            for i in t..a.rows {
                for j in t..a.cols {
                    let x = a.at(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a.at(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }
            let p = a.at(t, t).clone();
            let mut dirty = false;
            for i in t + 1..a.rows {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = a.at(i, t).div_floor(&p);
                a.row_sub(i, t, &q)?;
                if let Some(u) = u.as_mut() {
                    u.row_sub(i, t, &q)?;
                }
                dirty |= !a.at(i, t).is_zero();
            }
            for j in t + 1..a.cols {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = a.at(t, j).div_floor(&p);
                a.col_sub(j, t, &q)?;
                if let Some(v) = v.as_mut() {
                    v.col_sub(j, t, &q)?;
                }
                dirty |= !a.at(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            // Divisibility: fold a row with a non-multiple into the pivot row.
            let offender = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.at(i, j).is_multiple_of(&p)));
            if let Some(i) = offender {
                let minus_one = -T::one();
                a.row_sub(t, i, &minus_one)?;
                if let Some(u) = u.as_mut() {
                    u.row_sub(t, i, &minus_one)?;
                }
                continue;
            }
            if p.is_negative() {
                a.negate_row(t);
                if let Some(u) = u.as_mut() {
                    u.negate_row(t);
                }
            }
            break;
        }
        diagonal.push(a.at(t, t).to_big());
    }
    Ok(Snf {
        diagonal,
        u: u.map(|d| d.to_matrix()),
        v: v.map(|d| d.to_matrix()),
    })
}

/// Smith normal form with optional unimodular witnesses `U`, `V` such that `U·M·V = S`.
pub fn smith_normal_form(m: &IntMatrix, witnesses: bool) -> Snf {
    match snf_generic::<i64>(m, witnesses) {
        Ok(s) => s,
        Err(Overflow) => snf_generic::<BigInt>(m, witnesses).expect("BigInt arithmetic cannot overflow"),
    }
}

/// Sparse integer matrix stored by rows; entries are `(column, value)` sorted by column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub row_entries: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            row_entries: vec![Vec::new(); rows],
        }
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        let row = &mut self.row_entries[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(p) => {
                row[p].1 += v;
                if row[p].1 == 0 {
                    row.remove(p);
                }
            }
            Err(p) => {
                if v != 0 {
                    row.insert(p, (j, v));
                }
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        let row = &self.row_entries[i];
        row.binary_search_by_key(&j, |e| e.0).map_or(0, |p| row[p].1)
    }

    pub fn nnz(&self) -> usize {
        self.row_entries.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (i, row) in self.row_entries.iter().enumerate() {
            for &(j, v) in row {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn from_dense(m: &IntMatrix) -> Option<Self> {
        let mut s = SparseMatrix::new(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                let v = m[(i, j)].to_i64()?;
                if v != 0 {
                    s.row_entries[i].push((j, v));
                }
            }
        }
        Some(s)
    }

    /// Product `self · other`, both sparse.
    pub fn mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (i, row) in self.row_entries.iter().enumerate() {
            let mut acc = std::collections::BTreeMap::<usize, i64>::new();
            for &(k, a) in row {
                for &(j, b) in &other.row_entries[k] {
                    let e = acc.entry(j).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            out.row_entries[i] = acc.into_iter().filter(|e| e.1 != 0).collect();
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.row_entries.iter().all(Vec::is_empty)
    }
}

/// `target -= q * pivot` on sorted sparse rows.
fn row_axpy(target: &[(usize, i64)], pivot: &[(usize, i64)], q: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < pivot.len() {
        let ca = target.get(a).map_or(usize::MAX, |e| e.0);
        let cb = pivot.get(b).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(target[a]);
            a += 1;
        } else if cb < ca {
            out.push((cb, q.checked_mul(pivot[b].1)?.checked_neg()?));
            b += 1;
        } else {
            let v = target[a].1.checked_sub(q.checked_mul(pivot[b].1)?)?;
            if v != 0 {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    Some(out)
}

fn unit_elimination(m: &SparseMatrix) -> Option<(usize, SparseMatrix)> {
    let mut rows = m.row_entries.clone();
    let mut active = vec![true; m.rows];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); m.cols];
    for (i, row) in rows.iter().enumerate() {
        for &(j, _) in row {
            col_rows[j].push(i);
        }
    }
    let mut pivots = 0;
    let mut pivot_cols = vec![false; m.cols];
    for c in 0..m.cols {
        let mut candidates: Vec<usize> = std::mem::take(&mut col_rows[c]);
        candidates.sort_unstable();
        candidates.dedup();
        candidates.retain(|&i| active[i] && rows[i].binary_search_by_key(&c, |e| e.0).is_ok());
        let pivot = candidates
            .iter()
            .copied()
            .filter(|&i| {
                let p = rows[i].binary_search_by_key(&c, |e| e.0).unwrap();
                rows[i][p].1.abs() == 1
            })
            .min_by_key(|&i| (rows[i].len(), i));
        let Some(r) = pivot else {
            col_rows[c] = candidates;
            continue;
        };
        let pivot_row = std::mem::take(&mut rows[r]);
        let pv = pivot_row[pivot_row.binary_search_by_key(&c, |e| e.0).unwrap()].1;
        for &i in &candidates {
            if i == r {
                continue;
            }
            let a = rows[i][rows[i].binary_search_by_key(&c, |e| e.0).unwrap()].1;
            let q = a.checked_mul(pv)?;
            rows[i] = row_axpy(&rows[i], &pivot_row, q)?;
            for &(j, _) in &pivot_row {
                if j > c {
                    col_rows[j].push(i);
                }
            }
        }
        active[r] = false;
        pivot_cols[c] = true;
        pivots += 1;
    }
    let remaining_cols: Vec<usize> = (0..m.cols).filter(|&c| !pivot_cols[c]).collect();
    let mut col_pos = vec![usize::MAX; m.cols];
    for (k, &c) in remaining_cols.iter().enumerate() {
        col_pos[c] = k;
    }
    let rest: Vec<Vec<(usize, i64)>> = (0..m.rows)
        .filter(|&i| active[i] && !rows[i].is_empty())
        .map(|i| {
            rows[i]
                .iter()
                .map(|&(j, v)| {
                    debug_assert!(!pivot_cols[j]);
                    (col_pos[j], v)
                })
                .collect()
        })
        .collect();
    Some((
        pivots,
        SparseMatrix {
            rows: rest.len(),
            cols: remaining_cols.len(),
            row_entries: rest,
        },
    ))
}

/// Nonzero invariant factors of a sparse matrix, in divisibility order.
pub fn invariant_factors_sparse(m: &SparseMatrix) -> Vec<BigInt> {
    match unit_elimination(m) {
        Some((units, rest)) => {
            let mut out = vec![BigInt::one(); units];
            if !rest.is_zero() {
                let tail = smith_normal_form(&rest.to_dense(), false);
                out.extend(tail.diagonal.into_iter().filter(|d| !d.is_zero()));
            }
            out.sort();
            out
        }
        None => smith_normal_form(&m.to_dense(), false)
            .diagonal
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m, false).diagonal.iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(diag(&IntMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(diag(&IntMatrix::zeros(2, 3)), vec![0, 0]);
        assert_eq!(diag(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])), vec![1, 6]);
        assert_eq!(diag(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])), vec![2, 6, 12]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let mut m = IntMatrix::zeros(2, 2);
        m[(0, 0)] = big.clone();
        m[(1, 1)] = big.clone() * 3;
        let s = smith_normal_form(&m, true);
        assert_eq!(s.diagonal, vec![big.clone(), big * 3]);
    }

    fn check_witness(m: &IntMatrix) {
        let s = smith_normal_form(m, true);
        let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
        assert_eq!(u.mul(m).mul(v), s.diagonal_matrix(m.rows, m.cols));
        assert_eq!(u.determinant().abs(), BigInt::one());
        assert_eq!(v.determinant().abs(), BigInt::one());
        let nz: Vec<&BigInt> = s.diagonal.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            assert!(w[1].is_multiple_of(w[0]));
        }
        assert!(s.diagonal.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn witness_on_large_sparse_matrix() {
        // 200x200 banded matrix with small entries, deterministic pattern.
        let n = 200;
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(2 + (i % 3) as i64);
            if i + 1 < n {
                m[(i, i + 1)] = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
            }
            if i + 7 < n {
                m[(i + 7, i)] = BigInt::from((i % 5) as i64 - 2);
            }
        }
        let s = smith_normal_form(&m, true);
        let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
        assert_eq!(u.mul(&m).mul(v), s.diagonal_matrix(n, n));
    }

    proptest! {
        #[test]
        fn witnesses_hold(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-6i64..7, 36)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 6 + j]).collect()).collect();
            check_witness(&IntMatrix::from_rows(&data));
        }

        #[test]
        fn sparse_matches_dense(rows in 1usize..8, cols in 1usize..8, seed in proptest::collection::vec(-3i64..4, 64)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 8 + j]).collect()).collect();
            let dense = IntMatrix::from_rows(&data);
            let mut want: Vec<BigInt> = smith_normal_form(&dense, false).diagonal.into_iter().filter(|d| !d.is_zero()).collect();
            want.sort();
            let got = invariant_factors_sparse(&SparseMatrix::from_dense(&dense).unwrap());
            prop_assert_eq!(got, want);
        }
    }
}

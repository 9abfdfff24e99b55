//! Exact dense and sparse linear algebra over a [`Field`].

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    let mut out = Matrix::filled(a.rows, b.cols, f.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if !f.is_zero(y) {
                    let cur = f.add(out.get(i, j), &f.mul(x, y));
                    out.set(i, j, cur);
                }
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "dimension mismatch");
    (0..a.rows).map(|i| dot(f, a.row(i), v)).collect()
}

pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| {
        if f.is_zero(x) || f.is_zero(y) {
            acc
        } else {
            f.add(&acc, &f.mul(x, y))
        }
    })
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..m.cols {
            let v = f.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..m.cols {
                let rv = m.get(r, j);
                if !f.is_zero(rv) {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, rv));
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(f, &mut work).len()
}

pub fn determinant<F: Field>(f: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(a.get(i, c))) else {
            return f.zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = f.neg(&det);
        }
        let pivot = a.get(c, c).clone();
        det = f.mul(&det, &pivot);
        let inv = f.inv(&pivot).expect("nonzero pivot");
        for i in (c + 1)..n {
            let factor = f.mul(a.get(i, c), &inv);
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..n {
                let v = f.sub(a.get(i, j), &f.mul(&factor, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    det
}

/// Determinants of the top-left `k x k` blocks, `k = 1..=n`.
pub fn leading_principal_minors<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    (1..=m.rows)
        .map(|k| determinant(f, &Matrix::from_fn(k, k, |i, j| m.get(i, j).clone())))
        .collect()
}

/// The unique solution of `a x = b` for square nonsingular `a`.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = a.rows;
    assert_eq!(a.cols, n);
    assert_eq!(b.len(), n);
    let mut aug = Matrix::from_fn(n, n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some((0..n).map(|i| aug.get(i, n).clone()).collect())
}

pub fn inverse<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// Sparse row: strictly increasing column indices, nonzero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Incremental sparse Gaussian elimination.
///
/// Every stored pivot row has leading coefficient 1 and only columns greater
/// than its pivot. Incoming rows are fully reduced against the current
/// pivots, so the pivot set after all insertions is the set of leading
/// columns of the row space in the given column order.
pub struct SparseEchelon<F: Field> {
    field: F,
    pivots: Vec<Option<SparseRow<F::Elem>>>,
    rank: usize,
    acc: Vec<Option<F::Elem>>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        SparseEchelon {
            field,
            pivots: vec![None; ncols],
            rank: 0,
            acc: vec![None; ncols],
            heap: BinaryHeap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.pivots.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots[col].is_some()
    }

    /// Reduce `row` against the stored pivots. Entries of `row` may be unsorted
    /// but columns must be distinct.
    pub fn reduce(&mut self, row: &[(usize, F::Elem)]) -> SparseRow<F::Elem> {
        let f = &self.field;
        for (c, v) in row {
            if f.is_zero(v) {
                continue;
            }
            debug_assert!(self.acc[*c].is_none(), "duplicate column in row");
            self.acc[*c] = Some(v.clone());
            self.heap.push(Reverse(*c));
        }
        let mut out = Vec::new();
        while let Some(Reverse(c)) = self.heap.pop() {
            let Some(v) = self.acc[c].take() else {
                continue;
            };
            if f.is_zero(&v) {
                continue;
            }
            match &self.pivots[c] {
                Some(prow) => {
                    for (c2, w) in &prow[1..] {
                        let delta = f.mul(&v, w);
                        match &mut self.acc[*c2] {
                            Some(slot) => *slot = f.sub(slot, &delta),
                            slot @ None => {
                                *slot = Some(f.neg(&delta));
                                self.heap.push(Reverse(*c2));
                            }
                        }
                    }
                }
                None => out.push((c, v)),
            }
        }
        out
    }

    /// Insert a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: &[(usize, F::Elem)]) -> bool {
        let mut reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let lead = reduced[0].0;
        let inv = self.field.inv(&reduced[0].1).expect("nonzero lead");
        for (_, v) in reduced.iter_mut() {
            *v = self.field.mul(v, &inv);
        }
        reduced[0].1 = self.field.one();
        self.pivots[lead] = Some(reduced);
        self.rank += 1;
        true
    }

    /// Back-substitute to reduced echelon form and express every column in
    /// terms of the non-pivot ("free") columns.
    pub fn finish(mut self) -> ReducedEchelon<F::Elem> {
        let ncols = self.pivots.len();
        let free: Vec<usize> = (0..ncols).filter(|&c| self.pivots[c].is_none()).collect();
        let mut free_pos = vec![usize::MAX; ncols];
        for (k, &c) in free.iter().enumerate() {
            free_pos[c] = k;
        }
        // Process pivots from the right so that every row used for
        // substitution already lives on free columns only.
        let mut done: Vec<Option<SparseRow<F::Elem>>> = vec![None; ncols];
        for c in (0..ncols).rev() {
            let Some(row) = self.pivots[c].take() else {
                continue;
            };
            let f = &self.field;
            let tail = &row[1..];
            let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
            for (c2, v) in tail {
                match &done[*c2] {
                    Some(sub) => {
                        // column c2 = -(sub) in terms of free columns
                        for (c3, w) in sub {
                            let delta = f.mul(v, w);
                            let e = acc.entry(*c3).or_insert_with(|| f.zero());
                            *e = f.sub(e, &delta);
                        }
                    }
                    None => {
                        debug_assert!(free_pos[*c2] != usize::MAX);
                        let e = acc.entry(*c2).or_insert_with(|| f.zero());
                        *e = f.add(e, v);
                    }
                }
            }
            let reduced: SparseRow<F::Elem> =
                acc.into_iter().filter(|(_, v)| !f.is_zero(v)).collect();
            done[c] = Some(reduced);
        }
        let f = &self.field;
        let normal_forms = (0..ncols)
            .map(|c| match &done[c] {
                Some(row) => row
                    .iter()
                    .map(|(c2, v)| (free_pos[*c2], f.neg(v)))
                    .collect(),
                None => vec![(free_pos[c], f.one())],
            })
            .collect();
        ReducedEchelon {
            rank: self.rank,
            free_columns: free,
            normal_forms,
        }
    }
}

/// Result of [`SparseEchelon::finish`].
#[derive(Clone, Debug)]
pub struct ReducedEchelon<E> {
    pub rank: usize,
    /// Non-pivot columns, increasing.
    pub free_columns: Vec<usize>,
    /// For each column, its class modulo the row space written in the basis
    /// of free columns (indices into `free_columns`).
    pub normal_forms: Vec<SparseRow<E>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Rationals};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_and_inverse() {
        let a = mat(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(determinant(&Rationals, &a), q(4));
        let inv = inverse(&Rationals, &a).unwrap();
        assert_eq!(mat_mul(&Rationals, &a, &inv), identity(&Rationals, 3));
        let minors = leading_principal_minors(&Rationals, &a);
        assert_eq!(minors, vec![q(2), q(3), q(4)]);
        assert_eq!(rank(&Rationals, &mat(&[&[1, 2], &[2, 4]])), 1);
        assert!(solve(&Rationals, &mat(&[&[1, 2], &[2, 4]]), &[q(1), q(1)]).is_none());
    }

    #[test]
    fn sparse_matches_dense() {
        // rows: x0 - x1, x1 - x2, x0 - x2 (dependent), x3
        let rows: Vec<SparseRow<Rational>> = vec![
            vec![(0, q(1)), (1, q(-1))],
            vec![(1, q(1)), (2, q(-1))],
            vec![(0, q(1)), (2, q(-1))],
            vec![(3, q(2))],
        ];
        let mut e = SparseEchelon::new(Rationals, 5);
        let grew: Vec<bool> = rows.iter().map(|r| e.insert(r)).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        let red = e.finish();
        assert_eq!(red.rank, 3);
        assert_eq!(red.free_columns, vec![2, 4]);
        // x0 = x2, x1 = x2, x3 = 0
        assert_eq!(red.normal_forms[0], vec![(0, q(1))]);
        assert_eq!(red.normal_forms[1], vec![(0, q(1))]);
        assert!(red.normal_forms[3].is_empty());
        assert_eq!(red.normal_forms[4], vec![(1, q(1))]);
    }
}

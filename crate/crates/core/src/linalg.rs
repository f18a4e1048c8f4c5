//! Row reduction, rank, kernels and incremental echelon bases over any field.

use crate::field::FieldOps;

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: FieldOps>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(&rows[r][c]).unwrap();
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: FieldOps>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{x : A x = 0}` for an `r x ncols` matrix `A`.
pub fn kernel<F: FieldOps>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = field.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Basis of `{y : y A = 0}`.
pub fn left_kernel<F: FieldOps>(field: &F, rows: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    kernel(field, &transpose(rows, ncols), rows.len())
}

pub fn transpose<E: Clone>(rows: &[Vec<E>], ncols: usize) -> Vec<Vec<E>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

pub fn dot<F: FieldOps>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// `A * B^T`.
pub fn mul_transpose<F: FieldOps>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    a.iter().map(|ra| b.iter().map(|rb| dot(field, ra, rb)).collect()).collect()
}

/// Solves `x A = b` for a square invertible `A`; `None` if singular.
pub fn solve_left<F: FieldOps>(field: &F, a: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = a.len();
    // columns of A^T | b^T
    let at = transpose(a, n);
    let mut aug: Vec<Vec<F::Elem>> = at
        .into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square matrix; `None` if singular.
pub fn invert<F: FieldOps>(field: &F, a: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = a.len();
    let mut aug: Vec<Vec<F::Elem>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A basis kept in semi-reduced echelon form that accepts vectors one at a
/// time. Each stored row has a leading 1 at its pivot and zeros at every
/// earlier pivot.
#[derive(Clone, Debug)]
pub struct EchelonBasis<E> {
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
    len: usize,
}

impl<E: Clone + PartialEq + std::fmt::Debug> EchelonBasis<E> {
    pub fn new(len: usize) -> Self {
        EchelonBasis { rows: Vec::new(), pivots: Vec::new(), len }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn reduce<F: FieldOps<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if field.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !field.is_zero(r) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains<F: FieldOps<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    /// Adds `v`; returns whether it was independent of the stored rows.
    pub fn insert<F: FieldOps<Elem = E>>(&mut self, field: &F, v: &[E]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut r = self.reduce(field, v);
        let Some(p) = r.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&r[p]).unwrap();
        for x in r.iter_mut() {
            *x = field.mul(x, &inv);
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn into_rref<F: FieldOps<Elem = E>>(self, field: &F) -> Vec<Vec<E>> {
        let mut rows = self.rows;
        rref(field, &mut rows);
        rows
    }
}

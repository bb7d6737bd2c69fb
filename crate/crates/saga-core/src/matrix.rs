//! Dense exact linear algebra: reduced row echelon form, rank, nullspace,
//! solving, and inversion.
//!
//! The elimination core is generic over a scalar backend so the same logic
//! runs on raw `u64` prime-field words (the hot path during algebra
//! construction) and on arbitrary-precision rationals. The public [`Mat`]
//! type stores [`Scalar`]s and dispatches to the right backend.

use crate::scalar::{Field, FpCtx, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scalar backend for elimination.
pub trait Elim {
    type E: Clone + PartialEq + std::fmt::Debug;
    fn e_zero(&self) -> Self::E;
    fn e_one(&self) -> Self::E;
    fn e_is_zero(&self, a: &Self::E) -> bool;
    fn e_add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn e_sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn e_mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn e_neg(&self, a: &Self::E) -> Self::E;
    /// None only for zero.
    fn e_inv(&self, a: &Self::E) -> Option<Self::E>;
    fn e_from_scalar(&self, s: &Scalar) -> Self::E;
    fn e_to_scalar(&self, e: &Self::E) -> Scalar;
    /// a − c·b, fused where the backend can save a reduction.
    fn e_sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E {
        self.e_sub(a, &self.e_mul(c, b))
    }
}

impl Elim for FpCtx {
    type E = u64;
    fn e_zero(&self) -> u64 {
        0
    }
    fn e_one(&self) -> u64 {
        1
    }
    fn e_is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn e_add(&self, a: &u64, b: &u64) -> u64 {
        self.add(*a, *b)
    }
    fn e_sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub(*a, *b)
    }
    fn e_mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul(*a, *b)
    }
    fn e_neg(&self, a: &u64) -> u64 {
        self.neg(*a)
    }
    fn e_inv(&self, a: &u64) -> Option<u64> {
        self.inv(*a)
    }
    fn e_from_scalar(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Mod(m) => *m,
            Scalar::Rat(_) => panic!("rational scalar in prime-field elimination"),
        }
    }
    fn e_to_scalar(&self, e: &u64) -> Scalar {
        Scalar::Mod(*e)
    }
    fn e_sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        self.sub_mul(*a, *c, *b)
    }
}

/// Rational backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QCtx;

impl Elim for QCtx {
    type E = BigRational;
    fn e_zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn e_one(&self) -> BigRational {
        BigRational::one()
    }
    fn e_is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn e_add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn e_sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn e_mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn e_neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn e_inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn e_from_scalar(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rat(r) => r.clone(),
            Scalar::Mod(_) => panic!("prime-field scalar in rational elimination"),
        }
    }
    fn e_to_scalar(&self, e: &BigRational) -> Scalar {
        Scalar::Rat(e.clone())
    }
}

/// Incremental reduced-row-echelon eliminator. Rows are offered one at a
/// time; pivot rows are kept fully reduced against each other, so the
/// nullspace and reduction of further rows read off directly.
pub struct Eliminator<'a, F: Elim> {
    f: &'a F,
    cols: usize,
    /// (pivot column, row) sorted by pivot column; rows have pivot entry 1
    /// and zeros in every other pivot column.
    pivots: Vec<(usize, Vec<F::E>)>,
}

impl<'a, F: Elim> Eliminator<'a, F> {
    pub fn new(f: &'a F, cols: usize) -> Self {
        Eliminator {
            f,
            cols,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.iter().map(|(c, _)| *c).collect()
    }

    /// Reduce a row in place against the current pivots.
    pub fn reduce(&self, row: &mut [F::E]) {
        debug_assert_eq!(row.len(), self.cols);
        for (pc, prow) in &self.pivots {
            let c = row[*pc].clone();
            if self.f.e_is_zero(&c) {
                continue;
            }
            // row -= c * prow; prow[pc] == 1 so row[pc] becomes 0.
            for j in 0..self.cols {
                if !self.f.e_is_zero(&prow[j]) {
                    row[j] = self.f.e_sub_mul(&row[j], &c, &prow[j]);
                }
            }
        }
    }

    /// Offer a row; returns true when it contributed a new pivot.
    pub fn offer(&mut self, mut row: Vec<F::E>) -> bool {
        self.reduce(&mut row);
        let pc = match row.iter().position(|v| !self.f.e_is_zero(v)) {
            None => return false,
            Some(c) => c,
        };
        let inv = self.f.e_inv(&row[pc]).expect("nonzero entry inverts");
        for v in row.iter_mut() {
            if !self.f.e_is_zero(v) {
                *v = self.f.e_mul(v, &inv);
            }
        }
        // clear the new pivot column from existing rows to keep full RREF
        for (_, prow) in self.pivots.iter_mut() {
            let c = prow[pc].clone();
            if self.f.e_is_zero(&c) {
                continue;
            }
            for j in 0..row.len() {
                if !self.f.e_is_zero(&row[j]) {
                    prow[j] = self.f.e_sub_mul(&prow[j], &c, &row[j]);
                }
            }
        }
        let at = self
            .pivots
            .binary_search_by(|(c, _)| c.cmp(&pc))
            .expect_err("pivot column is new");
        self.pivots.insert(at, (pc, row));
        true
    }

    /// Basis of the solution space of (matrix)·v = 0, one vector per free
    /// column, ordered by free column index.
    pub fn nullspace(&self) -> Vec<Vec<F::E>> {
        let pivot_cols: Vec<usize> = self.pivot_cols();
        let mut out = Vec::with_capacity(self.cols - pivot_cols.len());
        for c in 0..self.cols {
            if pivot_cols.binary_search(&c).is_ok() {
                continue;
            }
            let mut v = vec![self.f.e_zero(); self.cols];
            v[c] = self.f.e_one();
            for (pc, prow) in &self.pivots {
                if !self.f.e_is_zero(&prow[c]) {
                    v[*pc] = self.f.e_neg(&prow[c]);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Dense matrix over one elimination backend (row major).
#[derive(Debug, Clone, PartialEq)]
pub struct DMat<F: Elim> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::E>,
}

impl<F: Elim> DMat<F> {
    pub fn zero(f: &F, rows: usize, cols: usize) -> Self {
        DMat {
            rows,
            cols,
            data: vec![f.e_zero(); rows * cols],
        }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = DMat::zero(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = f.e_one();
        }
        m
    }

    pub fn from_rows(f: &F, cols: usize, rows: Vec<Vec<F::E>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            data.extend(row);
        }
        let _ = f;
        DMat {
            rows: r,
            cols,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &F::E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, f: &F, j: usize) -> Vec<F::E> {
        let _ = f;
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn eliminator<'a>(&self, f: &'a F) -> Eliminator<'a, F> {
        let mut e = Eliminator::new(f, self.cols);
        for i in 0..self.rows {
            e.offer(self.row(i).to_vec());
        }
        e
    }

    pub fn rank(&self, f: &F) -> usize {
        self.eliminator(f).rank()
    }

    pub fn nullspace(&self, f: &F) -> Vec<Vec<F::E>> {
        self.eliminator(f).nullspace()
    }

    pub fn transpose(&self, f: &F) -> DMat<F> {
        let mut out = DMat::zero(f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, f: &F, other: &DMat<F>) -> DMat<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = DMat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.e_is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.e_is_zero(b) {
                        continue;
                    }
                    let t = f.e_add(out.get(i, j), &f.e_mul(a, b));
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &F, v: &[F::E]) -> Vec<F::E> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![f.e_zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.e_zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !f.e_is_zero(a) && !f.e_is_zero(&v[j]) {
                    acc = f.e_add(&acc, &f.e_mul(a, &v[j]));
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Solve self·x = b (any one solution, free variables set to zero).
    pub fn solve(&self, f: &F, b: &[F::E]) -> Option<Vec<F::E>> {
        assert_eq!(b.len(), self.rows);
        let mut elim = Eliminator::new(f, self.cols + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            elim.offer(row);
        }
        if elim.pivot_cols().contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![f.e_zero(); self.cols];
        for (pc, prow) in &elim.pivots {
            x[*pc] = prow[self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self, f: &F) -> Option<DMat<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut elim = Eliminator::new(f, 2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            let mut aug = vec![f.e_zero(); n];
            aug[i] = f.e_one();
            row.extend(aug);
            elim.offer(row);
        }
        let pcols = elim.pivot_cols();
        if pcols.len() < n || pcols.iter().take(n).ne((0..n).collect::<Vec<_>>().iter()) {
            return None;
        }
        let mut out = DMat::zero(f, n, n);
        for (pc, prow) in &elim.pivots {
            for j in 0..n {
                out.set(*pc, j, prow[n + j].clone());
            }
        }
        Some(out)
    }
}

/// Field-tagged matrix for public interfaces.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(rows_v: Vec<Vec<Scalar>>, cols: usize) -> Mat {
        let rows = rows_v.len();
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_v {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Mat { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    fn to_dmat<F: Elim>(&self, f: &F) -> DMat<F> {
        DMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|s| f.e_from_scalar(s)).collect(),
        }
    }

    fn from_dmat<F: Elim>(f: &F, m: &DMat<F>) -> Mat {
        Mat {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|e| f.e_to_scalar(e)).collect(),
        }
    }

    pub fn rank(&self, field: &Field) -> usize {
        match field {
            Field::Prime(ctx) => self.to_dmat(ctx).rank(ctx),
            Field::Rationals => self.to_dmat(&QCtx).rank(&QCtx),
        }
    }

    pub fn nullspace(&self, field: &Field) -> Vec<Vec<Scalar>> {
        match field {
            Field::Prime(ctx) => self
                .to_dmat(ctx)
                .nullspace(ctx)
                .iter()
                .map(|v| v.iter().map(|e| ctx.e_to_scalar(e)).collect())
                .collect(),
            Field::Rationals => self
                .to_dmat(&QCtx)
                .nullspace(&QCtx)
                .iter()
                .map(|v| v.iter().map(|e| QCtx.e_to_scalar(e)).collect())
                .collect(),
        }
    }

    pub fn solve(&self, field: &Field, b: &[Scalar]) -> Option<Vec<Scalar>> {
        match field {
            Field::Prime(ctx) => {
                let bb: Vec<u64> = b.iter().map(|s| ctx.e_from_scalar(s)).collect();
                self.to_dmat(ctx)
                    .solve(ctx, &bb)
                    .map(|x| x.iter().map(|e| ctx.e_to_scalar(e)).collect())
            }
            Field::Rationals => {
                let bb: Vec<BigRational> = b.iter().map(|s| QCtx.e_from_scalar(s)).collect();
                self.to_dmat(&QCtx)
                    .solve(&QCtx, &bb)
                    .map(|x| x.iter().map(|e| QCtx.e_to_scalar(e)).collect())
            }
        }
    }

    pub fn inverse(&self, field: &Field) -> Option<Mat> {
        match field {
            Field::Prime(ctx) => self.to_dmat(ctx).inverse(ctx).map(|m| Mat::from_dmat(ctx, &m)),
            Field::Rationals => self
                .to_dmat(&QCtx)
                .inverse(&QCtx)
                .map(|m| Mat::from_dmat(&QCtx, &m)),
        }
    }

    pub fn mul(&self, field: &Field, other: &Mat) -> Mat {
        match field {
            Field::Prime(ctx) => {
                Mat::from_dmat(ctx, &self.to_dmat(ctx).mul(ctx, &other.to_dmat(ctx)))
            }
            Field::Rationals => {
                Mat::from_dmat(&QCtx, &self.to_dmat(&QCtx).mul(&QCtx, &other.to_dmat(&QCtx)))
            }
        }
    }

    pub fn mul_vec(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = field.zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !field.is_zero(a) && !field.is_zero(&v[j]) {
                    acc = field.add(&acc, &field.mul(a, &v[j]));
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

/// Row-space equality of two collections of vectors over the field.
pub fn same_span(field: &Field, a: &[Vec<Scalar>], b: &[Vec<Scalar>], cols: usize) -> bool {
    let rank = |rows: &[Vec<Scalar>]| -> usize {
        Mat::from_rows(rows.to_vec(), cols).rank(field)
    };
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return false;
    }
    let mut all: Vec<Vec<Scalar>> = a.to_vec();
    all.extend(b.to_vec());
    rank(&all) == ra
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> (Field, FpCtx) {
        let f = Field::prime(p).unwrap();
        let ctx = *f.fp().unwrap();
        (f, ctx)
    }

    fn mat(field: &Field, cols: usize, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_nullspace_fp() {
        let (f, _) = fp(9973);
        let m = mat(&f, 3, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(&f), 2);
        let ns = m.nullspace(&f);
        assert_eq!(ns.len(), 1);
        // verify: m * v = 0
        let v = &ns[0];
        let prod = m.mul_vec(&f, v);
        assert!(prod.iter().all(|s| f.is_zero(s)));
    }

    #[test]
    fn rank_and_nullspace_q() {
        let f = Field::rationals();
        let m = mat(&f, 4, &[&[1, 2, 0, -1], &[0, 1, 1, 1], &[1, 3, 1, 0]]);
        assert_eq!(m.rank(&f), 2);
        let ns = m.nullspace(&f);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(&f, v).iter().all(|s| f.is_zero(s)));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let (f, _) = fp(101);
        let m = mat(&f, 2, &[&[2, 1], &[1, 1]]);
        let b = vec![f.from_i64(3), f.from_i64(2)];
        let x = m.solve(&f, &b).unwrap();
        assert_eq!(m.mul_vec(&f, &x), b);
        let inv = m.inverse(&f).unwrap();
        let id = m.mul(&f, &inv);
        assert_eq!(id, Mat::identity(&f, 2));

        let singular = mat(&f, 2, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse(&f).is_none());
        let bad = singular.solve(&f, &[f.from_i64(1), f.from_i64(3)]);
        assert!(bad.is_none());
    }

    #[test]
    fn solve_q_rational_pivots() {
        let f = Field::rationals();
        let m = mat(&f, 2, &[&[2, 3], &[4, 5]]);
        let b = vec![f.one(), f.zero()];
        let x = m.solve(&f, &b).unwrap();
        assert_eq!(m.mul_vec(&f, &x), b);
    }

    #[test]
    fn incremental_eliminator_matches_batch() {
        let (f, ctx) = fp(9973);
        let _ = f;
        let rows: Vec<Vec<u64>> = vec![
            vec![1, 2, 3, 4],
            vec![2, 4, 6, 8],
            vec![0, 1, 1, 0],
            vec![1, 3, 4, 4],
            vec![5, 0, 0, 1],
        ];
        let mut e = Eliminator::new(&ctx, 4);
        let mut new_pivots = 0;
        for r in rows.clone() {
            if e.offer(r) {
                new_pivots += 1;
            }
        }
        assert_eq!(new_pivots, e.rank());
        let dm = DMat::<FpCtx>::from_rows(&ctx, 4, rows);
        assert_eq!(dm.rank(&ctx), e.rank());
        assert_eq!(dm.nullspace(&ctx), e.nullspace());
    }

    #[test]
    fn span_comparison() {
        let f = Field::rationals();
        let a = vec![
            vec![f.from_i64(1), f.from_i64(0)],
            vec![f.from_i64(0), f.from_i64(1)],
        ];
        let b = vec![
            vec![f.from_i64(1), f.from_i64(1)],
            vec![f.from_i64(1), f.from_i64(-1)],
        ];
        assert!(same_span(&f, &a, &b, 2));
        let c = vec![vec![f.from_i64(1), f.from_i64(1)]];
        assert!(!same_span(&f, &a, &c, 2));
    }
}

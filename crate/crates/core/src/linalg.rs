//! Dense exact matrices, reduced row-echelon form and subspace arithmetic.
//!
//! Matrices carry their scalar ring by value (it is `Copy` and usually
//! zero-sized), so arithmetic never needs an external context. Elimination
//! routines assume the scalars form a field; callers guarantee that by only
//! building linear-algebra backends over the rationals or a prime modulus.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ScalarRing;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S: ScalarRing> {
    scalars: S,
    rows: usize,
    cols: usize,
    data: Vec<S::Value>,
}

impl<S: ScalarRing> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<S: ScalarRing> Matrix<S> {
    pub fn zeros(scalars: S, rows: usize, cols: usize) -> Self {
        Matrix {
            scalars,
            rows,
            cols,
            data: vec![scalars.zero(); rows * cols],
        }
    }

    pub fn identity(scalars: S, n: usize) -> Self {
        let mut m = Self::zeros(scalars, n, n);
        for i in 0..n {
            m.data[i * n + i] = scalars.one();
        }
        m
    }

    pub fn from_vec(scalars: S, rows: usize, cols: usize, data: Vec<S::Value>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix {
            scalars,
            rows,
            cols,
            data,
        }
    }

    pub fn from_i64_rows(scalars: S, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&v| scalars.from_i64(v))
            })
            .collect();
        Self::from_vec(scalars, r, c, data)
    }

    pub fn diagonal(scalars: S, diag: &[S::Value]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(scalars, n, n);
        for (i, v) in diag.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn scalars(&self) -> S {
        self.scalars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[S::Value] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &S::Value {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S::Value) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S::Value] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.scalars.is_zero(v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.scalars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        let s = self.scalars;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| s.add(x, y))
            .collect();
        Self::from_vec(s, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> Self {
        let s = self.scalars;
        let data = self.data.iter().map(|x| s.neg(x)).collect();
        Self::from_vec(s, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        let s = self.scalars;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| s.sub(x, y))
            .collect();
        Self::from_vec(s, self.rows, self.cols, data)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul shape");
        let s = self.scalars;
        let mut out = Self::zeros(s, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if s.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    let prod = s.mul(a, other.get(k, j));
                    out.data[idx] = s.add(&out.data[idx], &prod);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &S::Value) -> Self {
        let s = self.scalars;
        let data = self.data.iter().map(|x| s.mul(c, x)).collect();
        Self::from_vec(s, self.rows, self.cols, data)
    }

    /// Stacks the rows of `self` above the rows of `other`.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "stack width");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::from_vec(self.scalars, self.rows + other.rows, self.cols, data)
    }

    /// Bracketed row-major literal, e.g. `[[1/2,0],[0,0]]`.
    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let entries: Vec<String> = self.row(i).iter().map(|v| self.scalars.render(v)).collect();
                format!("[{}]", entries.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    /// Parses a bracketed literal of exactly `rows × cols` entries.
    pub fn parse(scalars: S, lit: &str, rows: usize, cols: usize) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidElement(format!("{msg} in matrix literal {lit:?}"));
        let compact: String = lit.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad("missing outer brackets"))?;
        let mut parsed_rows = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let end = body.find(']').ok_or_else(|| bad("unterminated row"))?;
            let row: Vec<S::Value> = body[..end]
                .split(',')
                .map(|e| scalars.parse(e))
                .collect::<Result<_>>()?;
            parsed_rows.push(row);
            rest = &body[end + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(bad("trailing comma"));
                }
                rest = r;
            } else if !rest.is_empty() {
                return Err(bad("expected ','"));
            }
        }
        if parsed_rows.len() != rows || parsed_rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidElement(format!(
                "matrix literal {lit:?} is not {rows}x{cols}"
            )));
        }
        Ok(Self::from_vec(scalars, rows, cols, parsed_rows.concat()))
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

/// Result of Gauss–Jordan elimination: `transform · input = reduced`.
#[derive(Debug, Clone)]
pub struct Rref<S: ScalarRing> {
    pub reduced: Matrix<S>,
    pub rank: usize,
    pub transform: Matrix<S>,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form with the first nonzero entry as pivot.
pub fn rref<S: ScalarRing>(m: &Matrix<S>) -> Rref<S> {
    let s = m.scalars;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut t = Matrix::identity(s, rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !s.is_zero(a.get(i, col))) else {
            continue;
        };
        if p != r {
            swap_rows(&mut a, p, r);
            swap_rows(&mut t, p, r);
        }
        let inv = s
            .inv(a.get(r, col))
            .expect("elimination over a ring that is not a field");
        scale_row(&mut a, r, &inv);
        scale_row(&mut t, r, &inv);
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, col).clone();
            if s.is_zero(&f) {
                continue;
            }
            axpy_row(&mut a, i, r, &f);
            axpy_row(&mut t, i, r, &f);
        }
        pivots.push(col);
        r += 1;
    }
    Rref {
        reduced: a,
        rank: r,
        transform: t,
        pivots,
    }
}

fn swap_rows<S: ScalarRing>(m: &mut Matrix<S>, i: usize, j: usize) {
    for c in 0..m.cols {
        m.data.swap(i * m.cols + c, j * m.cols + c);
    }
}

fn scale_row<S: ScalarRing>(m: &mut Matrix<S>, i: usize, f: &S::Value) {
    let s = m.scalars;
    for c in 0..m.cols {
        let idx = i * m.cols + c;
        m.data[idx] = s.mul(f, &m.data[idx]);
    }
}

/// row_i -= f · row_src
fn axpy_row<S: ScalarRing>(m: &mut Matrix<S>, i: usize, src: usize, f: &S::Value) {
    let s = m.scalars;
    for c in 0..m.cols {
        let v = s.mul(f, &m.data[src * m.cols + c]);
        let idx = i * m.cols + c;
        m.data[idx] = s.sub(&m.data[idx], &v);
    }
}

/// Which of the four fundamental subspaces a basis spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    ColumnSpace,
    RowSpace,
    NullSpace,
    LeftNullSpace,
}

impl Side {
    /// Column-vector subspaces model right ideals and right annihilators;
    /// row-vector subspaces model left ideals and left annihilators.
    pub fn is_column_side(self) -> bool {
        matches!(self, Side::ColumnSpace | Side::NullSpace)
    }
}

/// A subspace of `F^ambient` held as the nonzero rows of an RREF matrix, so
/// equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis<S: ScalarRing> {
    ambient: usize,
    side: Side,
    basis: Matrix<S>,
}

impl<S: ScalarRing> SubspaceBasis<S> {
    /// Span of the rows of `vectors`.
    pub fn span(vectors: &Matrix<S>, side: Side) -> Self {
        let r = rref(vectors);
        let data = r.reduced.data[..r.rank * vectors.cols].to_vec();
        SubspaceBasis {
            ambient: vectors.cols,
            side,
            basis: Matrix::from_vec(vectors.scalars, r.rank, vectors.cols, data),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        if self.side.is_column_side() != other.side.is_column_side() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compare {:?} with {:?}",
                self.side, other.side
            )));
        }
        Ok(())
    }

    fn joint_rank(&self, other: &Self) -> usize {
        self.basis.stack(&other.basis).rank()
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.dim() <= other.dim() && self.joint_rank(other) == other.dim())
    }

    pub fn meets_trivially(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.joint_rank(other) == self.dim() + other.dim())
    }

    /// `F^ambient = self ⊕ other`.
    pub fn is_direct_sum_with(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.dim() + other.dim() == self.ambient && self.joint_rank(other) == self.ambient)
    }

    pub fn same_space(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.basis == other.basis)
    }
}

pub fn column_space<S: ScalarRing>(m: &Matrix<S>) -> SubspaceBasis<S> {
    SubspaceBasis::span(&m.transpose(), Side::ColumnSpace)
}

pub fn row_space<S: ScalarRing>(m: &Matrix<S>) -> SubspaceBasis<S> {
    SubspaceBasis::span(m, Side::RowSpace)
}

/// `{x : m·x = 0}`.
pub fn null_space<S: ScalarRing>(m: &Matrix<S>) -> SubspaceBasis<S> {
    let basis = kernel_vectors(m);
    let out = SubspaceBasis::span(&basis, Side::NullSpace);
    assert_eq!(column_space(m).dim() + out.dim(), m.cols, "rank-nullity");
    out
}

/// `{y : y·m = 0}`, as row vectors.
pub fn left_null_space<S: ScalarRing>(m: &Matrix<S>) -> SubspaceBasis<S> {
    let basis = kernel_vectors(&m.transpose());
    let out = SubspaceBasis::span(&basis, Side::LeftNullSpace);
    assert_eq!(row_space(m).dim() + out.dim(), m.rows, "rank-nullity");
    out
}

/// One kernel vector per free column, stacked as rows.
fn kernel_vectors<S: ScalarRing>(m: &Matrix<S>) -> Matrix<S> {
    let s = m.scalars;
    let r = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !r.pivots.contains(c)).collect();
    let mut out = Matrix::zeros(s, free.len(), m.cols);
    for (k, &f) in free.iter().enumerate() {
        out.set(k, f, s.one());
        for (i, &p) in r.pivots.iter().enumerate() {
            out.set(k, p, s.neg(r.reduced.get(i, f)));
        }
    }
    out
}

/// Invertible `left`, `right` with `left · m · right = [[I_r, 0], [0, 0]]`.
#[derive(Debug, Clone)]
pub struct RankNormalForm<S: ScalarRing> {
    pub left: Matrix<S>,
    pub right: Matrix<S>,
    pub rank: usize,
}

pub fn rank_normal_form<S: ScalarRing>(m: &Matrix<S>) -> RankNormalForm<S> {
    let s = m.scalars;
    let r = rref(m);
    let n = m.cols;
    // Clear the non-pivot columns against the pivot columns.
    let mut v = Matrix::identity(s, n);
    for (i, &p) in r.pivots.iter().enumerate() {
        for j in 0..n {
            if r.pivots.contains(&j) {
                continue;
            }
            let f = r.reduced.get(i, j).clone();
            if s.is_zero(&f) {
                continue;
            }
            for row in 0..n {
                let delta = s.mul(&f, v.get(row, p));
                let cur = s.sub(v.get(row, j), &delta);
                v.set(row, j, cur);
            }
        }
    }
    // Permute pivot columns to the front.
    let order: Vec<usize> = r
        .pivots
        .iter()
        .copied()
        .chain((0..n).filter(|c| !r.pivots.contains(c)))
        .collect();
    let mut right = Matrix::zeros(s, n, n);
    for (dst, &src) in order.iter().enumerate() {
        for row in 0..n {
            right.set(row, dst, v.get(row, src).clone());
        }
    }
    RankNormalForm {
        left: r.transform,
        right,
        rank: r.rank,
    }
}

/// `[[I_r, 0], [0, 0]]` of shape `rows × cols`.
fn truncated_identity<S: ScalarRing>(s: S, rows: usize, cols: usize, r: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(s, rows, cols);
    for i in 0..r {
        m.set(i, i, s.one());
    }
    m
}

/// An inner inverse `g` (`m·g·m = m`) built from the rank normal form.
pub fn inner_inverse<S: ScalarRing>(m: &Matrix<S>) -> Matrix<S> {
    let nf = rank_normal_form(m);
    let n = truncated_identity(m.scalars, m.cols, m.rows, nf.rank);
    let g = nf.right.mul(&n).mul(&nf.left);
    assert_eq!(m.mul(&g).mul(m), *m, "inner inverse identity");
    g
}

/// General inner inverse `g₀ + (I − g₀m)·s + t·(I − m g₀)`; every inner
/// inverse of `m` arises for some choice of `s`, `t`.
pub fn inner_inverse_param<S: ScalarRing>(m: &Matrix<S>, s: &Matrix<S>, t: &Matrix<S>) -> Matrix<S> {
    let sc = m.scalars;
    let g0 = inner_inverse(m);
    let left = Matrix::identity(sc, m.cols).sub(&g0.mul(m)).mul(s);
    let right = t.mul(&Matrix::identity(sc, m.rows).sub(&m.mul(&g0)));
    let g = g0.add(&left).add(&right);
    assert_eq!(m.mul(&g).mul(m), *m, "parametrized inner inverse identity");
    g
}

/// Two-sided inverse of a square matrix, if it exists.
pub fn inverse<S: ScalarRing>(m: &Matrix<S>) -> Option<Matrix<S>> {
    assert!(m.is_square());
    let r = rref(m);
    (r.rank == m.rows).then_some(r.transform)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rationals, Zmod};

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_i64_rows(Rationals, rows)
    }

    fn qp(lit: &str, r: usize, c: usize) -> Matrix<Rationals> {
        Matrix::parse(Rationals, lit, r, c).unwrap()
    }

    #[test]
    fn rref_examples() {
        let i2 = Matrix::identity(Rationals, 2);
        let r = rref(&i2);
        assert_eq!((r.reduced.clone(), r.rank, r.transform.clone()), (i2.clone(), 2, i2));

        let r = rref(&q(&[&[2]]));
        assert_eq!(r.reduced, q(&[&[1]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.transform, qp("[[1/2]]", 1, 1));

        let m = q(&[&[1, 2], &[2, 4]]);
        let r = rref(&m);
        assert_eq!(r.reduced, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.transform.mul(&m), r.reduced);
        assert!(inverse(&r.transform).is_some());
    }

    #[test]
    fn subspace_examples() {
        let ns = null_space(&q(&[&[2, 0], &[0, 0]]));
        assert_eq!(ns.basis(), &q(&[&[0, 1]]));
        assert_eq!(column_space(&q(&[&[0, 0], &[0, 0]])).dim(), 0);
        assert_eq!(row_space(&q(&[&[1, 2], &[2, 4]])).basis(), &q(&[&[1, 2]]));

        let e1 = SubspaceBasis::span(&q(&[&[1, 0]]), Side::ColumnSpace);
        let e2 = SubspaceBasis::span(&q(&[&[0, 1]]), Side::ColumnSpace);
        let all = column_space(&Matrix::identity(Rationals, 2));
        assert!(e1.is_subset_of(&all).unwrap());
        assert!(e1.is_direct_sum_with(&e2).unwrap());
        let two = SubspaceBasis::span(&q(&[&[1, 1], &[0, 1]]), Side::ColumnSpace);
        assert!(!e1.is_direct_sum_with(&two).unwrap());
    }

    #[test]
    fn mismatched_sides_rejected() {
        let a = column_space(&Matrix::identity(Rationals, 2));
        let b = row_space(&Matrix::identity(Rationals, 2));
        assert!(matches!(a.is_subset_of(&b), Err(Error::DimensionMismatch(_))));
        let c = column_space(&Matrix::identity(Rationals, 3));
        assert!(matches!(a.is_subset_of(&c), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn inner_inverse_examples() {
        let m = q(&[&[2, 0], &[0, 0]]);
        let g = inner_inverse(&m);
        assert_eq!(m.mul(&g).mul(&m), m);
        assert_eq!(g, qp("[[1/2,0],[0,0]]", 2, 2));
        let i3 = Matrix::identity(Rationals, 3);
        assert_eq!(inner_inverse(&i3), i3);
        let z = Matrix::zeros(Rationals, 2, 2);
        assert_eq!(z.mul(&inner_inverse(&z)).mul(&z), z);
    }

    #[test]
    fn parametrized_inner_inverses() {
        let m = q(&[&[2, 0], &[0, 0]]);
        let z = Matrix::zeros(Rationals, 2, 2);
        assert_eq!(inner_inverse_param(&m, &z, &z), inner_inverse(&m));
        let s = q(&[&[0, 0], &[0, 1]]);
        let g = inner_inverse_param(&m, &s, &z);
        assert_eq!(m.mul(&g).mul(&m), m);
        assert_ne!(g, inner_inverse(&m));

        let i2 = Matrix::identity(Rationals, 2);
        let s = q(&[&[3, -1], &[7, 2]]);
        assert_eq!(inner_inverse_param(&i2, &s, &s), i2);
    }

    #[test]
    fn rectangular_inner_inverse() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let g = inner_inverse(&m);
        assert_eq!((g.rows(), g.cols()), (3, 2));
        assert_eq!(m.mul(&g).mul(&m), m);
    }

    #[test]
    fn rank_normal_form_shape() {
        let m = q(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 1]]);
        let nf = rank_normal_form(&m);
        assert_eq!(nf.rank, 2);
        let lmr = nf.left.mul(&m).mul(&nf.right);
        assert_eq!(lmr, truncated_identity(Rationals, 3, 3, 2));
        assert!(inverse(&nf.right).is_some());
    }

    #[test]
    fn prime_field_elimination() {
        let f = Zmod::new(5).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[2, 3], &[4, 1]]);
        // det = 2 - 12 = -10 = 0 mod 5
        assert_eq!(m.rank(), 1);
        let g = inner_inverse(&m);
        assert_eq!(m.mul(&g).mul(&m), m);
    }

    #[test]
    fn literal_round_trip() {
        let m = qp("[[1/2, -3],[0,4/6]]", 2, 2);
        assert_eq!(m.render(), "[[1/2,-3],[0,2/3]]");
        assert_eq!(qp(&m.render(), 2, 2), m);
        assert!(Matrix::parse(Rationals, "[[1,2],[3]]", 2, 2).is_err());
        assert!(Matrix::parse(Rationals, "[[1,2]]", 2, 2).is_err());
        assert!(Matrix::parse(Rationals, "[1,2]", 1, 2).is_err());
    }
}

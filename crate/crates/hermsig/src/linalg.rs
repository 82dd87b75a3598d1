//! Exact integer and rational linear algebra.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Rat = BigRational;
pub type IntVec = Vec<i64>;
pub type RatVec = Vec<Rat>;

pub fn q(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_rat_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_q(a: &[Rat], b: &[i64]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut s = Rat::zero();
    for (x, &y) in a.iter().zip(b) {
        if y != 0 {
            s += x * BigInt::from(y);
        }
    }
    s
}

pub fn dot_qq(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |s, (x, y)| s + x * y)
}

pub fn add(a: &[i64], b: &[i64]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> IntVec {
    a.iter().map(|x| x * k).collect()
}

pub fn neg(a: &[i64]) -> IntVec {
    a.iter().map(|x| -x).collect()
}

/// Converts a rational to i64 if it is an integer in range.
pub fn rat_to_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn rat_vec_to_int(v: &[Rat]) -> Option<IntVec> {
    v.iter().map(rat_to_i64).collect()
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_rat_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rat).collect();
    format!("({})", parts.join(","))
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl IMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[IntVec]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    /// Matrix with the given vectors as columns; `n` is the column length.
    pub fn from_cols(cols: &[IntVec], n: usize) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                m.set(i, j, col[i]);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> IntVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn mul_vec_q(&self, v: &[Rat]) -> RatVec {
        (0..self.rows).map(|i| dot_q(v, self.row(i))).collect()
    }

    pub fn add(&self, other: &IMat) -> IMat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &IMat) -> IMat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IMat::identity(self.rows)
    }

    pub fn to_q(&self) -> QMat {
        let mut m = QMat::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, q(self.get(i, j)));
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &IMat) -> IMat {
        let mut m = IMat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        m
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            (0..self.rows).map(|i| fmt_rat_vec(self.row(i))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: &[RatVec]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row.iter().cloned());
        }
        QMat { rows: r, cols: c, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        IMat::from_rows(rows).to_q()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> RatVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> RatVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| dot_qq(self.row(i), v)).collect()
    }

    pub fn add(&self, other: &QMat) -> QMat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: &Rat) -> QMat {
        let data = self.data.iter().map(|a| a * k).collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> QMat {
        let mut m = QMat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, as vectors.
    pub fn nullspace(&self) -> Vec<RatVec> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<RatVec> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = QMat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = QMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = QMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Smith normal form `u * a * v = diag(d)` with `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub diag: Vec<i128>,
    pub rank: usize,
}

pub fn smith(a: &IMat) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut x: Vec<Vec<i128>> =
        (0..m).map(|i| a.row(i).iter().map(|&v| v as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> =
        (0..m).map(|i| (0..m).map(|j| (i == j) as i128).collect()).collect();
    let mut v: Vec<Vec<i128>> =
        (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();

    fn swap_cols(mat: &mut [Vec<i128>], a: usize, b: usize) {
        for row in mat.iter_mut() {
            row.swap(a, b);
        }
    }
    fn add_row(mat: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
        for j in 0..mat[0].len() {
            let s = mat[src][j];
            mat[dst][j] += k * s;
        }
    }
    fn add_col(mat: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
        for row in mat.iter_mut() {
            let s = row[src];
            row[dst] += k * s;
        }
    }

    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if x[i][j] != 0 && best.map_or(true, |(bi, bj)| x[i][j].abs() < x[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        x.swap(t, bi);
        u.swap(t, bi);
        swap_cols(&mut x, t, bj);
        swap_cols(&mut v, t, bj);
        loop {
            let p = x[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let k = x[i][t].div_euclid(p);
                if k != 0 {
                    add_row(&mut x, i, t, -k);
                    add_row(&mut u, i, t, -k);
                }
                if x[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let k = x[t][j].div_euclid(p);
                if k != 0 {
                    add_col(&mut x, j, t, -k);
                    add_col(&mut v, j, t, -k);
                }
                if x[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                let mut best = (t, t);
                for i in t + 1..m {
                    if x[i][t] != 0 && x[i][t].abs() < x[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if x[t][j] != 0 && x[t][j].abs() < x[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    x.swap(t, best.0);
                    u.swap(t, best.0);
                } else if best.1 != t {
                    swap_cols(&mut x, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| x[i][j] % p != 0));
            match bad {
                Some(i) => {
                    add_row(&mut x, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if x[t][t] < 0 {
            for j in 0..n {
                x[t][j] = -x[t][j];
            }
            for j in 0..m {
                u[t][j] = -u[t][j];
            }
        }
        t += 1;
    }
    let diag = (0..m.min(n)).map(|i| x[i][i]).collect();
    Smith { u, v, diag, rank: t }
}

impl Smith {
    /// Integer solution of `a * y = b`, if one exists.
    pub fn solve(&self, b: &[i64]) -> Option<Vec<i128>> {
        let m = self.u.len();
        let n = self.v.len();
        let ub: Vec<i128> =
            (0..m).map(|i| (0..m).map(|j| self.u[i][j] * b[j] as i128).sum()).collect();
        let mut z = vec![0i128; n];
        for i in 0..m {
            if i < self.rank {
                if ub[i] % self.diag[i] != 0 {
                    return None;
                }
                z[i] = ub[i] / self.diag[i];
            } else if ub[i] != 0 {
                return None;
            }
        }
        Some((0..n).map(|i| (0..n).map(|j| self.v[i][j] * z[j]).sum()).collect())
    }
}

/// True iff `b` lies in the integer column span of `a`.
pub fn in_column_lattice(a: &IMat, b: &[i64]) -> bool {
    smith(a).solve(b).is_some()
}

/// Row-style Hermite normal form of the lattice spanned by the given rows.
/// Zero rows are dropped; pivots are positive and entries above pivots are reduced.
pub fn hermite_rows(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut out_rows = 0;
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (out_rows..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(out_rows, p);
            let mut done = true;
            for i in out_rows + 1..m.len() {
                if m[i][c] != 0 {
                    let k = m[i][c].div_euclid(m[out_rows][c]);
                    for j in 0..n {
                        let s = m[out_rows][j];
                        m[i][j] -= k * s;
                    }
                    if m[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if out_rows < m.len() && m[out_rows][c] != 0 {
            if m[out_rows][c] < 0 {
                for j in 0..n {
                    m[out_rows][j] = -m[out_rows][j];
                }
            }
            let p = m[out_rows][c];
            for i in 0..out_rows {
                let k = m[i][c].div_euclid(p);
                if k != 0 {
                    for j in 0..n {
                        let s = m[out_rows][j];
                        m[i][j] -= k * s;
                    }
                }
            }
            out_rows += 1;
        }
    }
    m.truncate(out_rows);
    m.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect()
}

/// Z-basis (as Hermite-reduced rows) of `{x in Z^n : a x = 0}`.
pub fn integer_kernel(a: &IMat) -> Vec<IntVec> {
    let n = a.cols();
    let s = smith(a);
    let basis: Vec<IntVec> = (s.rank..n)
        .map(|j| (0..n).map(|i| s.v[i][j] as i64).collect())
        .collect();
    hermite_rows(&basis, n)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num::integer::gcd(a, b)
}

pub fn rat_sign(x: &Rat) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_membership_basic() {
        // 2Z x Z
        let a = IMat::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert!(in_column_lattice(&a, &[2, 5]));
        assert!(!in_column_lattice(&a, &[1, 0]));
        let s = smith(&IMat::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.diag, vec![2, 6, 12]);
    }

    #[test]
    fn smith_solution_reproduces_rhs() {
        let a = IMat::from_rows(&[vec![1, 1, 0], vec![1, -1, 2], vec![0, 2, 4]]);
        let b = [3, 5, 6];
        if let Some(y) = smith(&a).solve(&b) {
            let y: IntVec = y.into_iter().map(|v| v as i64).collect();
            assert_eq!(a.mul_vec(&y), b.to_vec());
        }
    }

    #[test]
    fn kernel_of_block_swap() {
        // theta^T - I for the GL(4) block model: fixed vectors are e1-e2, e3-e4
        let theta = IMat::from_rows(&[
            vec![0, -1, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, -1, 0],
        ]);
        let k = integer_kernel(&theta.transpose().sub(&IMat::identity(4)));
        assert_eq!(k, vec![vec![1, -1, 0, 0], vec![0, 0, 1, -1]]);
        let k = integer_kernel(&IMat::zeros(3, 3));
        assert_eq!(k, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn rational_solve_and_inverse() {
        let a = QMat::from_int_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMat::identity(2));
        let x = a.solve(&[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let sing = QMat::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.nullspace(), vec![vec![q(-2), q(1)]]);
    }
}

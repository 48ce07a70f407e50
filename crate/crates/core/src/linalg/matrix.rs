//! Dense row-major rational matrices acting on column vectors.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LinalgError, Subspace, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn scalar(x: Q) -> Self {
        Matrix { rows: 1, cols: 1, data: vec![x] }
    }

    /// `x` times the `n × n` identity.
    pub fn scaled_identity(n: usize, x: &Q) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Q>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer literal rows; panics on ragged input, intended for fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&x| super::q(x)).collect()).collect();
        Matrix::from_rows(data).expect("ragged integer matrix")
    }

    /// Permutation matrix with `P[perm[i]][i] = 1`, i.e. `P e_i = e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.data[p * n + i] = Q::one();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, x: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|y| y * x).collect() }
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        // Clear denominators per row of `self` and per column of `rhs`, so the inner
        // products run on integers and each entry is normalised once.
        let row_scale: Vec<BigInt> = (0..self.rows).map(|i| lcm_of_denominators(self.row(i).iter())).collect();
        let col_scale: Vec<BigInt> =
            (0..rhs.cols).map(|j| lcm_of_denominators((0..rhs.rows).map(|k| rhs.get(k, j)))).collect();
        let a: Vec<BigInt> = (0..self.rows * self.cols)
            .map(|idx| scaled_numer(&self.data[idx], &row_scale[idx / self.cols]))
            .collect();
        let b: Vec<BigInt> = (0..rhs.rows * rhs.cols)
            .map(|idx| scaled_numer(&rhs.data[idx], &col_scale[idx % rhs.cols]))
            .collect();
        let mut acc = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            let orow = &mut acc[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let x = &a[i * self.cols + k];
                if x.is_zero() {
                    continue;
                }
                for (o, y) in orow.iter_mut().zip(&b[k * rhs.cols..(k + 1) * rhs.cols]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
        }
        let data = acc
            .into_iter()
            .enumerate()
            .map(|(idx, n)| {
                if n.is_zero() {
                    return Q::zero();
                }
                let d = &row_scale[idx / rhs.cols] * &col_scale[idx % rhs.cols];
                if d.is_one() { Q::from_integer(n) } else { Q::new(n, d) }
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; row `(i, k)` of the result sits at `i * b.rows + k`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let y = b.get(k, l);
                        if !y.is_zero() {
                            out.data[(i * b.rows + k) * c + j * b.cols + l] = a * y;
                        }
                    }
                }
            }
        }
        out
    }

    /// `self^{⊗k}`; the zeroth power is the 1×1 identity.
    pub fn kron_power(&self, k: usize) -> Matrix {
        (0..k).fold(Matrix::identity(1), |acc, _| acc.kron(self))
    }

    /// Ordinary matrix power, negative exponents through the inverse.
    pub fn pow(&self, exp: i64) -> Result<Matrix, LinalgError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut out = Matrix::identity(self.rows);
        for _ in 0..exp.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Computes `P⁻¹ M P` for the permutation matrix `P = permutation(perm)`.
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> Matrix {
        let n = perm.len();
        assert!(self.rows == n && self.cols == n, "permutation size mismatch");
        // (P⁻¹MP)[i][j] = M[perm[i]][perm[j]]
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = self.get(perm[i], perm[j]);
                if !x.is_zero() {
                    out.data[i * n + j] = x.clone();
                }
            }
        }
        out
    }

    /// Fraction-free Gauss-Jordan on the row-scaled integer matrix `DA`, then `A⁻¹ = (DA)⁻¹D`.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let w = 2 * n;
        let scale: Vec<BigInt> = (0..n).map(|i| lcm_of_denominators(self.row(i).iter())).collect();
        let mut a: Vec<BigInt> = vec![BigInt::zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = scaled_numer(self.get(i, j), &scale[i]);
            }
            a[i * w + n + i] = BigInt::one();
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = (k..n).find(|&r| !a[r * w + k].is_zero()).ok_or(LinalgError::Singular)?;
            if pivot != k {
                for j in 0..w {
                    a.swap(pivot * w + j, k * w + j);
                }
            }
            let pk = a[k * w + k].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[i * w + k].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let x = &pk * &a[i * w + j] - &f * &a[k * w + j];
                    debug_assert!((&x % &prev).is_zero(), "Bareiss division is exact");
                    a[i * w + j] = x / &prev;
                }
                a[i * w + k] = BigInt::zero();
            }
            prev = pk;
        }
        // Every diagonal entry of the left half now equals the last pivot.
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            let d = &a[i * w + i];
            for j in 0..n {
                let x = &a[i * w + n + j];
                if !x.is_zero() {
                    out.data[i * n + j] = Q::new(x * &scale[j], d.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && (self.full_rank_mod_prime() || self.rank() == self.rows)
    }

    /// Sufficient test: full rank after clearing row denominators and reducing modulo a prime.
    fn full_rank_mod_prime(&self) -> bool {
        const P: u128 = (1 << 61) - 1;
        let prime = BigInt::from(P);
        let mut a: Vec<Vec<u128>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let scale = lcm_of_denominators(row.iter());
                row.iter()
                    .map(|x| {
                        let r = scaled_numer(x, &scale) % &prime;
                        let r = if r.is_negative() { r + &prime } else { r };
                        r.to_u128().expect("reduced below the prime")
                    })
                    .collect()
            })
            .collect();
        let pow = |mut b: u128, mut e: u128| {
            let mut out = 1u128;
            while e > 0 {
                if e & 1 == 1 {
                    out = out * b % P;
                }
                b = b * b % P;
                e >>= 1;
            }
            out
        };
        for col in 0..self.cols {
            let Some(p) = (col..self.rows).find(|&r| a[r][col] != 0) else { return false };
            a.swap(p, col);
            let pivot = a[col].clone();
            let inv = pow(pivot[col], P - 2);
            for row in a.iter_mut().skip(col + 1) {
                if row[col] != 0 {
                    let f = row[col] * inv % P;
                    for c in col..self.cols {
                        row[c] = (row[c] + P - f * pivot[c] % P) % P;
                    }
                }
            }
        }
        true
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = a.get(row, col).recip();
            a.scale_row(row, &inv);
            for r in 0..a.rows {
                if r != row && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.axpy_row(r, row, &f);
                }
            }
            pivots.push(col);
            row += 1;
        }
        a.data.truncate(row * a.cols);
        a.rows = row;
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : M x = 0}` as a subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            basis.push(v);
        }
        Subspace::span(n, basis).expect("kernel vectors have ambient length")
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(LinalgError::DimensionMismatch("vstack column mismatch".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }

    /// Submatrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, x: &Q) {
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            if !v.is_zero() {
                *v *= x;
            }
        }
    }

    /// row[target] -= f * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, f: &Q) {
        let c = self.cols;
        for j in 0..c {
            let s = &self.data[source * c + j];
            if !s.is_zero() {
                let d = s * f;
                self.data[target * c + j] -= d;
            }
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix difference shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn lcm_of_denominators<'a>(entries: impl Iterator<Item = &'a Q>) -> BigInt {
    entries.filter(|x| !x.is_zero()).fold(BigInt::one(), |l, x| if x.denom().is_one() { l } else { l.lcm(x.denom()) })
}

fn scaled_numer(x: &Q, scale: &BigInt) -> BigInt {
    if x.is_zero() {
        BigInt::zero()
    } else if x.denom().is_one() {
        x.numer() * scale
    } else {
        x.numer() * (scale / x.denom())
    }
}

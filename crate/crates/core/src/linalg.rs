//! Exact dense linear algebra over the rationals and the integers.
//!
//! [`QMatrix`] is a row-major matrix of [`Q`] entries used for everything
//! module-theoretic; [`IntMatrix`] carries the K-group matrices, which are
//! integral by construction. [`certified_kernel`] solves the large sparse
//! integer systems produced by Hom computations: the kernel is found modulo a
//! 61-bit prime, lifted by rational reconstruction and then checked exactly,
//! so the returned basis is always an exact rational basis.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result, Q};

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of a reduced row echelon computation.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        QMatrix { rows: r, cols: c, data }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        QMatrix { rows: m.rows, cols: m.cols, data: m.data.iter().map(|&x| q(x)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Q) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Echelon {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..a.cols {
            if prow == a.rows {
                break;
            }
            let Some(found) = (prow..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(found, prow);
            let inv = a[(prow, col)].recip();
            for j in col..a.cols {
                let v = &a[(prow, j)] * &inv;
                a[(prow, j)] = v;
            }
            for r in 0..a.rows {
                if r == prow || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in col..a.cols {
                    if a[(prow, j)].is_zero() {
                        continue;
                    }
                    let v = &factor * &a[(prow, j)];
                    a[(r, j)] -= v;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Echelon { matrix: a, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let ech = self.rref();
        kernel_from_rref(&ech.matrix, &ech.pivots, self.cols)
    }

    /// Basis of the column space, as a list of the independent original columns.
    pub fn column_basis(&self) -> Vec<Vec<Q>> {
        let ech = self.rref();
        ech.pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Usage("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Q::one();
        }
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Err(Error::Internal("singular matrix".into()));
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = ech.matrix[(r, n + c)].clone();
            }
        }
        Ok(inv)
    }

    /// Solves `A X = B` for a matrix `A` with independent columns, returning
    /// `None` when some column of `B` is outside the column space.
    pub fn solve(&self, b: &QMatrix) -> Option<QMatrix> {
        assert_eq!(self.rows, b.rows);
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + b.cols);
        for r in 0..self.rows {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..b.cols {
                aug[(r, n + c)] = b[(r, c)].clone();
            }
        }
        let ech = aug.rref();
        if ech.pivots.iter().any(|&p| p >= n) || ech.pivots.len() < n {
            return None;
        }
        let mut x = Self::zeros(n, b.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = ech.matrix[(r, n + c)].clone();
            }
        }
        Some(x)
    }
}

fn kernel_from_rref(r: &QMatrix, pivots: &[usize], ncols: usize) -> Vec<Vec<Q>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Q::zero(); ncols];
            v[free] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Dense integer matrix; all K-group matrices live here.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows.iter().flat_map(|row| row.iter().copied()).collect::<Vec<_>>();
        assert_eq!(data.len(), r * c, "ragged rows");
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn scale(&self, s: i64) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Inverse over the integers; fails if the inverse is not integral.
    pub fn inverse(&self) -> Result<Self> {
        let inv = QMatrix::from_int(self).inverse()?;
        let mut out = Self::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = &inv[(r, c)];
                if !x.is_integer() {
                    return Err(Error::Internal(format!("inverse has non-integral entry {x}")));
                }
                out[(r, c)] = x
                    .to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::Internal("inverse entry overflows i64".into()))?;
            }
        }
        Ok(out)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Certified kernels of sparse integer systems.

const P61: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P61 as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64) -> u64 {
    powmod(a, P61 - 2)
}

fn to_mod(x: &BigInt) -> u64 {
    let m = BigInt::from(P61);
    let r = x.mod_floor(&m);
    r.to_u64().expect("reduced residue fits in u64")
}

/// Rational reconstruction of `a mod p` with numerator and denominator
/// bounded by `sqrt(p / 2)`.
fn reconstruct(a: u64) -> Option<Q> {
    let bound = ((P61 / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (P61 as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    Some(Q::new(BigInt::from(r1), BigInt::from(t1)))
}

/// A sparse row of an integer linear system: `(column, coefficient)` pairs.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Exact basis of `{v in Q^ncols : row . v = 0 for every row}`.
///
/// The rank over the prime field bounds the rational rank from below, so the
/// modular kernel dimension bounds the rational one from above; every lifted
/// vector is then verified exactly, which closes the gap. If reconstruction
/// or verification fails the system is solved by exact rational elimination.
pub fn certified_kernel(rows: &[SparseRow], ncols: usize) -> Vec<Vec<Q>> {
    if ncols == 0 {
        return Vec::new();
    }
    if let Some(k) = modular_kernel(rows, ncols) {
        return k;
    }
    let dense: Vec<Vec<Q>> = rows
        .iter()
        .map(|row| {
            let mut v = vec![Q::zero(); ncols];
            for (c, x) in row {
                v[*c] += Q::from_integer(x.clone());
            }
            v
        })
        .collect();
    if dense.is_empty() {
        return QMatrix::identity(ncols).data.chunks(ncols).map(<[Q]>::to_vec).collect();
    }
    QMatrix::from_rows(&dense).kernel()
}

fn modular_kernel(rows: &[SparseRow], ncols: usize) -> Option<Vec<Vec<Q>>> {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut v = vec![0u64; ncols];
            for (c, x) in row {
                v[*c] = (v[*c] + to_mod(x)) % P61;
            }
            v
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        if prow == a.len() {
            break;
        }
        let Some(found) = (prow..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(found, prow);
        let inv = invmod(a[prow][col]);
        for x in a[prow][col..].iter_mut() {
            *x = mulmod(*x, inv);
        }
        let pivot_row = a[prow].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == prow || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for j in col..ncols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + P61 - mulmod(f, pivot_row[j])) % P61;
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            let x = a[r][free];
            if x != 0 {
                v[p] = -reconstruct(x)?;
            }
        }
        basis.push(v);
    }
    for v in &basis {
        for row in rows {
            let s: Q = row.iter().map(|(c, x)| &v[*c] * Q::from_integer(x.clone())).sum();
            if !s.is_zero() {
                return None;
            }
        }
    }
    Some(basis)
}

/// Scales a rational row to a primitive integer row.
pub fn integer_row(entries: &[(usize, Q)]) -> SparseRow {
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    entries
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, (x * Q::from_integer(lcm.clone())).to_integer()))
        .collect()
}

pub fn q_to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn integer_inverse_rejects_fractions() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(m.inverse().unwrap(), IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]]));
        assert!(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).inverse().is_err());
    }

    #[test]
    fn certified_kernel_matches_dense() {
        let rows: Vec<SparseRow> = vec![
            vec![(0, 3.into()), (1, (-6).into()), (3, 1.into())],
            vec![(1, 2.into()), (2, 5.into())],
            vec![(0, 3.into()), (1, (-4).into()), (2, 5.into()), (3, 1.into())],
        ];
        let k = certified_kernel(&rows, 4);
        let dense = qm(&[&[3, -6, 0, 1], &[0, 2, 5, 0], &[3, -4, 5, 1]]);
        assert_eq!(k.len(), dense.kernel().len());
        for v in &k {
            assert!(dense.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let x = mulmod(P61 - 3, invmod(7));
        assert_eq!(reconstruct(x), Some(q_frac(-3, 7)));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = qm(&[&[1, 0], &[0, 1], &[1, 1]]);
        let b = qm(&[&[1], &[2], &[3]]);
        assert_eq!(a.solve(&b).unwrap(), qm(&[&[1], &[2]]));
        let bad = qm(&[&[1], &[2], &[4]]);
        assert!(a.solve(&bad).is_none());
    }
}

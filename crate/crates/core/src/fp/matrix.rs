//! Dense matrices and exact elimination over GF(p).
//!
//! Everything in the crate reduces to rank / kernel / span computations on
//! matrices whose dimensions stay in the low hundreds, so the representation
//! is a flat row-major `Vec<u32>` with canonical residues 0..p-1 and no
//! sparse machinery.

use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` mod the prime `p`, via Fermat.
pub fn modinv(p: u32, a: u32) -> u32 {
    debug_assert!(a % p != 0);
    modpow(p, a % p, p - 2)
}

pub fn modpow(p: u32, base: u32, mut exp: u32) -> u32 {
    let mut acc: u64 = 1;
    let mut b = (base % p) as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        exp >>= 1;
    }
    acc as u32
}

pub fn vec_is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn vec_add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
}

pub fn vec_sub(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| (x + p - y % p) % p).collect()
}

pub fn vec_scale(p: u32, c: u32, a: &[u32]) -> Vec<u32> {
    let c = (c % p) as u64;
    a.iter().map(|&x| (x as u64 * c % p as u64) as u32).collect()
}

pub fn vec_neg(p: u32, a: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| (p - x % p) % p).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct GfpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl GfpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        GfpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in rows {
            if r.len() != ncols {
                return Err(Error::Dim("ragged rows".into()));
            }
        }
        let mut m = Self::zeros(p, nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Build column by column: column `j` is `f(j)` in codomain coordinates.
    /// This is the natural constructor for linear maps, with vectors acting
    /// as columns and composition as left multiplication.
    pub fn from_columns(p: u32, rows: usize, cols: usize, f: impl Fn(usize) -> Vec<u32>) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for j in 0..cols {
            let col = f(j);
            debug_assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn mul(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(Error::Dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u64;
        let mut out = GfpMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j) as u64;
                    out.data[i * other.cols + j] = ((cur + a * other.get(k, j) as u64) % p) as u32;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = (acc + self.get(i, j) as u64 * v[j] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn add(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dim("shape mismatch in add".into()));
        }
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + b) % self.p;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GfpMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = (self.p - *a % self.p) % self.p;
        }
        out
    }

    pub fn sub_identity(&self) -> Result<GfpMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.sub(&GfpMatrix::identity(self.p, self.rows))
    }

    pub fn pow(&self, e: u32) -> Result<GfpMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = GfpMatrix::identity(self.p, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> GfpMatrix {
        let mut out = GfpMatrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn kronecker(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        let p = self.p as u64;
        let mut out = GfpMatrix::zeros(self.p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = (a * other.get(k, l) as u64 % p) as u32;
                        out.set(i * other.rows + k, j * other.cols + l, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn block_diag(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        let mut out = GfpMatrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.p, self.cols, (0..self.rows).map(|r| self.row(r).to_vec())).dim()
    }

    /// Basis of the solution space of `A x = 0`, column-vector convention.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let ech = Echelon::from_rows(self.p, self.cols, (0..self.rows).map(|r| self.row(r).to_vec()));
        let pivots = ech.pivots().to_vec();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            // back-substitute pivot coordinates from the reduced rows
            for (ri, &pc) in pivots.iter().enumerate() {
                let coeff = ech.basis()[ri][f];
                v[pc] = (self.p - coeff) % self.p;
            }
            basis.push(v);
        }
        basis
    }

    /// Echelonized basis of the column space.
    pub fn column_space(&self) -> Echelon {
        let t = self.transpose();
        Echelon::from_rows(self.p, t.cols, (0..t.rows).map(|r| t.row(r).to_vec()))
    }

    /// Solve `A x = b`; returns one solution if consistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        debug_assert_eq!(b.len(), self.rows);
        let p = self.p;
        let width = self.cols + 1;
        let mut aug: Vec<Vec<u32>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r] % p);
                row
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pr) = (next_row..aug.len()).find(|&r| aug[r][col] != 0) else {
                continue;
            };
            aug.swap(next_row, pr);
            let inv = modinv(p, aug[next_row][col]);
            for x in aug[next_row].iter_mut() {
                *x = (*x as u64 * inv as u64 % p as u64) as u32;
            }
            for r in 0..aug.len() {
                if r != next_row && aug[r][col] != 0 {
                    let c = aug[r][col];
                    for j in 0..width {
                        let sub = (c as u64 * aug[next_row][j] as u64 % p as u64) as u32;
                        aug[r][j] = (aug[r][j] + p - sub) % p;
                    }
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
        }
        // inconsistent if a zero row has nonzero rhs
        for r in next_row..aug.len() {
            if aug[r][self.cols] != 0 {
                return None;
            }
        }
        let mut x = vec![0u32; self.cols];
        for &(r, c) in &pivots {
            x[c] = aug[r][self.cols];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<GfpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|j| {
                let mut e = vec![0u32; n];
                e[j] = 1;
                self.solve(&e)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(GfpMatrix::from_columns(self.p, n, n, |j| cols[j].clone()))
    }
}

impl std::fmt::Debug for GfpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GfpMatrix(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// A subspace of GF(p)^width kept in reduced row echelon form.
///
/// Rows have unit pivots with the pivot column cleared everywhere else, so
/// `reduce` leaves a residual supported away from all pivot columns. That
/// makes quotient coordinates (complement positions) immediate.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u32,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u32, width: usize) -> Self {
        Echelon {
            p,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(p: u32, width: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut e = Self::new(p, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut v: Vec<u32> = v.iter().map(|&x| x % self.p).collect();
        self.reduce_in_place(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = modinv(self.p, v[pc]);
        for x in v.iter_mut() {
            *x = (*x as u64 * inv as u64 % self.p as u64) as u32;
        }
        // clear the new pivot column in existing rows
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for j in 0..self.width {
                    let sub = (c as u64 * v[j] as u64 % self.p as u64) as u32;
                    row[j] = (row[j] + self.p - sub) % self.p;
                }
            }
        }
        // keep rows ordered by pivot column
        let at = self.pivots.iter().position(|&q| q > pc).unwrap_or(self.pivots.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, pc);
        true
    }

    fn reduce_in_place(&self, v: &mut [u32]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                for j in 0..self.width {
                    let sub = (c as u64 * row[j] as u64 % self.p as u64) as u32;
                    v[j] = (v[j] + self.p - sub) % self.p;
                }
            }
        }
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v: Vec<u32> = v.iter().map(|&x| x % self.p).collect();
        self.reduce_in_place(&mut v);
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_all(&self, vs: &[Vec<u32>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their unit vectors represent a basis of the
    /// quotient GF(p)^width / span(self).
    pub fn complement_positions(&self) -> Vec<usize> {
        (0..self.width).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Coordinates of `v + span(self)` with respect to the complement basis.
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let r = self.reduce(v);
        self.complement_positions().iter().map(|&c| r[c]).collect()
    }

    pub fn same_space(&self, other: &Echelon) -> bool {
        self.dim() == other.dim() && other.basis().iter().all(|v| self.contains(v))
    }
}

/// dim(span(a) ∩ span(b)) computed from dim A + dim B − dim(A+B).
pub fn intersection_dim(a: &Echelon, b: &Echelon) -> usize {
    debug_assert_eq!(a.width(), b.width());
    let mut sum = a.clone();
    for v in b.basis() {
        sum.insert(v.clone());
    }
    a.dim() + b.dim() - sum.dim()
}

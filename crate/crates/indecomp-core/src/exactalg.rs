//! Exact arithmetic kernel: dense matrices over a prime field `F_p` and
//! arbitrary-precision rationals for geometry.
//!
//! Matrices store reduced residues in `[0, p)`. Row reduction uses partial
//! "first nonzero" pivoting so kernels and bases come out in a deterministic
//! order. A bit-packed path handles `p = 2`, where the exhaustive
//! certification loops spend most of their time.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used by the geometric layer.
pub type Rational = BigRational;

/// Parses a decimal literal such as `"1.86"` or `"-0.5"` into an exact rational.
pub fn rational_from_decimal(s: &str) -> Rational {
    let s = s.trim();
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1i32, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().expect("integer part")
    };
    let mut den = BigInt::one();
    for c in frac_part.chars() {
        let d = c.to_digit(10).expect("decimal digit") as i64;
        num = num * 10 + d;
        den *= 10;
    }
    if sign < 0 {
        num = -num;
    }
    BigRational::new(num, den)
}

/// A point of the assembled tile geometry. The strip tiles live in the
/// `z = 0` plane; the rotated junction tiles stand in vertical planes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point { x, y, z }
    }

    /// Squared Euclidean distance, exact.
    pub fn dist_sq(&self, other: &Point) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        let dz = &self.z - &other.z;
        &dx * &dx + &dy * &dy + &dz * &dz
    }
}

/// Errors from matrix operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    NotInvertible,
    ShapeMismatch { lhs: (usize, usize), rhs: (usize, usize) },
    ModulusMismatch { lhs: u64, rhs: u64 },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NotInvertible => write!(f, "matrix is not invertible"),
            MatrixError::ShapeMismatch { lhs, rhs } => {
                write!(f, "shape mismatch: {}x{} vs {}x{}", lhs.0, lhs.1, rhs.0, rhs.1)
            }
            MatrixError::ModulusMismatch { lhs, rhs } => {
                write!(f, "modulus mismatch: {} vs {}", lhs, rhs)
            }
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Dense matrix over `F_p`, row-major, entries reduced to `[0, p)`.
///
/// `p` must be an odd prime or 2, and small enough that `(p-1)^2` fits in a
/// `u64` product; `p ≤ 2^31` is plenty for this crate.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl core::ops::Index<(usize, usize)> for FieldMatrix {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.entries[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for FieldMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.entries[r * self.cols + c]
    }
}

impl FieldMatrix {
    pub fn zero(rows: usize, cols: usize, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        FieldMatrix { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zero(n, n, p);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows_data: &[Vec<i64>], p: u64) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        let mut m = Self::zero(rows, cols, p);
        for (r, row) in rows_data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m[(r, c)] = v.rem_euclid(p as i64) as u64;
            }
        }
        m
    }

    /// Builds from a function of `(row, col)`; values are reduced mod `p`.
    pub fn from_fn(rows: usize, cols: usize, p: u64, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zero(rows, cols, p);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c) % p;
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

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self[(r, c)] == u64::from(r == c)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_modulus(&self, other: &FieldMatrix) -> Result<(), MatrixError> {
        if self.p != other.p {
            return Err(MatrixError::ModulusMismatch { lhs: self.p, rhs: other.p });
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        self.check_modulus(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::ShapeMismatch {
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut out = self.clone();
        for (a, &b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = (*a + b) % self.p;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        self.check_modulus(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::ShapeMismatch {
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut out = self.clone();
        for (a, &b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a = (*a + self.p - b) % self.p;
        }
        Ok(out)
    }

    pub fn scale(&self, k: u64) -> FieldMatrix {
        let k = k % self.p;
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = *a * k % self.p;
        }
        out
    }

    pub fn matmul(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        self.check_modulus(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let p = self.p;
        let mut out = FieldMatrix::zero(self.rows, other.cols, p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out[(r, c)] + a * other[(k, c)] % p;
                    out[(r, c)] = v % p;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zero(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        self.check_modulus(other)?;
        if self.rows != other.rows {
            return Err(MatrixError::ShapeMismatch {
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut out = FieldMatrix::zero(self.rows, self.cols + other.cols, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)];
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)];
            }
        }
        Ok(out)
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        self.check_modulus(other)?;
        if self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch {
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut out = FieldMatrix::zero(self.rows + other.rows, self.cols, self.p);
        out.entries[..self.entries.len()].copy_from_slice(&self.entries);
        out.entries[self.entries.len()..].copy_from_slice(&other.entries);
        Ok(out)
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &FieldMatrix) -> Result<FieldMatrix, MatrixError> {
        self.check_modulus(other)?;
        let mut out = FieldMatrix::zero(self.rows + other.rows, self.cols + other.cols, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)];
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out[(self.rows + r, self.cols + c)] = other[(r, c)];
            }
        }
        Ok(out)
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    /// In-place reduced row echelon form. Returns the pivot columns in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        if self.p == 2 {
            return self.rref_in_place_gf2();
        }
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.entries.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = mod_inv(self[(r, c)], p);
            for k in c..cols {
                self[(r, k)] = self[(r, k)] * inv % p;
            }
            for i in 0..rows {
                if i != r && self[(i, c)] != 0 {
                    let f = self[(i, c)];
                    for k in c..cols {
                        let sub = f * self[(r, k)] % p;
                        self[(i, k)] = (self[(i, k)] + p - sub) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    // Bit-packed elimination for p = 2; the exhaustive locality and
    // isomorphism searches run thousands of these.
    fn rref_in_place_gf2(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let words = cols.div_ceil(64);
        let mut bits: Vec<u64> = vec![0; rows * words];
        for r in 0..rows {
            for c in 0..cols {
                if self[(r, c)] != 0 {
                    bits[r * words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let (w, m) = (c / 64, 1u64 << (c % 64));
            let Some(pr) = (r..rows).find(|&i| bits[i * words + w] & m != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..words {
                    bits.swap(pr * words + k, r * words + k);
                }
            }
            for i in 0..rows {
                if i != r && bits[i * words + w] & m != 0 {
                    for k in 0..words {
                        bits[i * words + k] ^= bits[r * words + k];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        for r in 0..rows {
            for c in 0..cols {
                self[(r, c)] = u64::from(bits[r * words + c / 64] & (1 << (c % 64)) != 0);
            }
        }
        pivots
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the null space `{v : Mv = 0}`, returned as the columns of a
    /// `cols x nullity` matrix. Basis vectors are the standard free-column
    /// completions of the RREF, in free-column order.
    pub fn kernel_basis(&self) -> FieldMatrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let p = self.p;
        let cols = self.cols;
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = FieldMatrix::zero(cols, free.len(), p);
        for (bi, &fc) in free.iter().enumerate() {
            out[(fc, bi)] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m[(r, fc)];
                if v != 0 {
                    out[(pc, bi)] = (p - v) % p;
                }
            }
        }
        out
    }

    /// Inverse of a square matrix, or `NotInvertible`.
    pub fn try_inverse(&self) -> Result<FieldMatrix, MatrixError> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = self.hstack(&FieldMatrix::identity(n, self.p))?;
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(MatrixError::NotInvertible);
        }
        let mut inv = FieldMatrix::zero(n, n, self.p);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)];
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// True iff the matrix is nilpotent, checked by repeated squaring-free
    /// multiplication: `M^n = 0` with `n` the size.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square(), "nilpotency of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return true;
        }
        let mut acc = self.clone();
        for _ in 1..n {
            if acc.is_zero() {
                return true;
            }
            acc = acc.matmul(self).expect("square multiply");
        }
        acc.is_zero()
    }

    /// Solves `self * x = rhs` for one solution, if consistent.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(rhs.len(), self.rows);
        let p = self.p;
        let mut aug = FieldMatrix::zero(self.rows, self.cols + 1, p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)];
            }
            aug[(r, self.cols)] = rhs[r] % p;
        }
        let pivots = aug.rref_in_place();
        if pivots.last().is_some_and(|&c| c == self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![0u64; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }
}

/// Jordan cell `J_d(λ)`: `λ` on the diagonal, 1 on the superdiagonal.
pub fn jordan_cell(d: usize, lambda: u64, p: u64) -> FieldMatrix {
    assert!(d >= 1, "Jordan cell needs d >= 1");
    FieldMatrix::from_fn(d, d, p, |r, c| {
        if r == c {
            lambda
        } else if c == r + 1 {
            1
        } else {
            0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn kernel_of_zero_matrix_is_identity() {
        let m = FieldMatrix::zero(3, 3, 5);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert!(k.is_identity());
    }

    #[test]
    fn kernel_of_nilpotent_cell() {
        // J_2(0) over F_5: kernel spanned by e_1.
        let m = jordan_cell(2, 0, 5);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 0]);
    }

    #[test]
    fn kernel_all_ones_f2_matches_enumeration() {
        let m = FieldMatrix::from_rows(&[vec![1, 1], vec![1, 1]], 2);
        // Oracle: enumerate all four vectors of F_2^2.
        let mut expected = Vec::new();
        for bits in 0..4u64 {
            let v = [bits & 1, bits >> 1];
            let prod: Vec<u64> =
                (0..2).map(|r| (m[(r, 0)] * v[0] + m[(r, 1)] * v[1]) % 2).collect();
            if prod == [0, 0] && v != [0, 0] {
                expected.push(vec![v[0], v[1]]);
            }
        }
        assert_eq!(expected, vec![vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 1]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FieldMatrix::identity(4, 7).rank(), 4);
        // J_d(0) has rank d-1; oracle: its rows are e_2..e_d and a zero row.
        for d in 1..6 {
            assert_eq!(jordan_cell(d, 0, 101).rank(), d - 1);
        }
        let block = FieldMatrix::from_rows(
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]],
            13,
        );
        assert_eq!(block.rank(), 2);
    }

    #[test]
    fn inverse_of_jordan_cells() {
        for d in 1..6 {
            for lam in [1u64, 2, 57] {
                let j = jordan_cell(d, lam, 101);
                let inv = j.try_inverse().expect("J_d(λ), λ≠0 is invertible");
                assert!(j.matmul(&inv).unwrap().is_identity());
                assert!(inv.matmul(&j).unwrap().is_identity());
            }
            assert_eq!(jordan_cell(d, 0, 101).try_inverse(), Err(MatrixError::NotInvertible));
        }
    }

    #[test]
    fn toeplitz_invertible_iff_leading_coefficient_nonzero() {
        // Upper triangular Toeplitz with a_1 ≠ 0 is invertible.
        let mk = |a: [i64; 3], p| {
            FieldMatrix::from_rows(
                &[vec![a[0], a[1], a[2]], vec![0, a[0], a[1]], vec![0, 0, a[0]]],
                p,
            )
        };
        assert!(mk([3, 5, 9], 101).is_invertible());
        assert!(!mk([0, 5, 9], 101).is_invertible());
    }

    #[test]
    fn nilpotency() {
        assert!(jordan_cell(4, 0, 101).is_nilpotent());
        assert!(!FieldMatrix::identity(3, 101).is_nilpotent());
        for d in 1..6 {
            assert!(!jordan_cell(d, 3, 101).is_nilpotent());
        }
        // J_d(λ) - λI is nilpotent for all d, λ.
        for d in 1..17 {
            for lam in [0u64, 1, 42, 100] {
                let j = jordan_cell(d, lam, 101);
                let shifted = j.sub(&FieldMatrix::identity(d, 101).scale(lam)).unwrap();
                assert!(shifted.is_nilpotent());
            }
        }
    }

    #[test]
    fn jordan_cell_pattern() {
        let j = jordan_cell(3, 7, 101);
        assert_eq!(
            j,
            FieldMatrix::from_rows(&[vec![7, 1, 0], vec![0, 7, 1], vec![0, 0, 7]], 101)
        );
        assert_eq!(jordan_cell(1, 7, 101), FieldMatrix::from_rows(&[vec![7]], 101));
        let j20 = jordan_cell(2, 0, 101);
        assert!(j20.matmul(&j20).unwrap().is_zero());
    }

    #[test]
    fn rational_decimal_parsing() {
        assert_eq!(rational_from_decimal("1.86"), BigRational::new(186.into(), 100.into()));
        assert_eq!(rational_from_decimal(".7"), BigRational::new(7.into(), 10.into()));
        assert_eq!(rational_from_decimal("-0.5"), BigRational::new((-1).into(), 2.into()));
        assert_eq!(rational_from_decimal("5"), BigRational::from_integer(5.into()));
    }

    #[test]
    fn gf2_path_agrees_with_generic_path() {
        // Same matrix reduced mod 2 through both code paths.
        let data = vec![
            vec![1, 0, 1, 1, 0],
            vec![0, 1, 1, 0, 1],
            vec![1, 1, 0, 1, 1],
            vec![0, 0, 1, 1, 1],
        ];
        let m2 = FieldMatrix::from_rows(&data, 2);
        // Re-run the generic path by pretending p = 2 is not special: compare
        // against rank over F_2 computed from the kernel dimension instead.
        let k = m2.kernel_basis();
        assert_eq!(m2.rank() + k.cols(), m2.cols());
        let mut prod_zero = true;
        for b in 0..k.cols() {
            for r in 0..m2.rows() {
                let s: u64 = (0..m2.cols()).map(|c| m2[(r, c)] * k[(c, b)]).sum();
                prod_zero &= s % 2 == 0;
            }
        }
        assert!(prod_zero);
    }
}

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{format_rational, GaussianRational, Rational};
use crate::error::{Error, Result};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(rows * cols, data.len(), "inconsistent dimensions");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::Parse("empty matrix".into()));
        }
        let ncols = rows[0].len();
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::Parse("ragged matrix rows".into()));
            }
        }
        Ok(Self::new(nrows, ncols, rows.into_iter().flatten().collect()))
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(
            rows,
            cols,
            entries
                .iter()
                .map(|&e| Rational::from_integer(e.into()))
                .collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.entry(i, j).is_one()
                    } else {
                        self.entry(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.entry_mut(j, i) = self.entry(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.entry(i, j).clone();
                    *out.entry_mut(i, j) = cur + a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.rows,
            });
        }
        Ok(Self::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.rows,
            });
        }
        Ok(Self::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn mul_gaussian_vec(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for j in 0..self.cols {
                    let e = self.entry(i, j);
                    if !e.is_zero() {
                        let scaled = GaussianRational::new(e * &v[j].re, e * &v[j].im);
                        acc = &acc + &scaled;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul_rational_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    acc = acc + self.entry(i, j) * &v[j];
                }
                acc
            })
            .collect())
    }

    fn trace(&self) -> Rational {
        (0..self.rows).map(|i| self.entry(i, i).clone()).sum()
    }

    /// Coefficients of `det(lambda I - M)`, ascending: `[c0, ..., cn]` with
    /// `c[n] = 1`. Computed with the Faddeev-LeVerrier recursion, which only
    /// divides by integers and is exact over the rationals.
    pub fn char_poly_coeffs(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut aux = Self::identity(n);
        for k in 1..=n {
            let am = self.mul(&aux)?;
            let c = -am.trace() / Rational::from_integer(k.into());
            coeffs[n - k] = c.clone();
            if k < n {
                aux = am;
                for i in 0..n {
                    let cur = aux.entry(i, i).clone();
                    *aux.entry_mut(i, i) = cur + &c;
                }
            }
        }
        Ok(coeffs)
    }

    /// Exact positive-semidefiniteness test for a symmetric matrix.
    ///
    /// Uses the sums `E_k` of all `k x k` principal minors, read off the
    /// characteristic polynomial: a symmetric matrix is PSD iff every
    /// `E_k >= 0`. Leading principal minors alone would only certify
    /// definiteness.
    pub fn psd_check(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let coeffs = self.char_poly_coeffs()?;
        let n = self.rows;
        for k in 1..=n {
            // det(lambda I - M) = sum_k (-1)^k E_k lambda^(n-k)
            let e_k = if k % 2 == 0 {
                coeffs[n - k].clone()
            } else {
                -coeffs[n - k].clone()
            };
            if e_k.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Signature (p - q) and rank of a symmetric matrix, exactly.
    ///
    /// Symmetric matrices have only real eigenvalues, so Descartes' rule of
    /// signs on the characteristic polynomial is exact: the number of
    /// positive eigenvalues is the number of sign variations.
    pub fn signature(&self) -> Result<(i64, usize)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let coeffs = self.char_poly_coeffs()?;
        let n = self.rows;
        let pos = sign_variations(coeffs.iter());
        let neg_coeffs: Vec<Rational> = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        let neg = sign_variations(neg_coeffs.iter());
        let zero_order = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(n);
        Ok((pos as i64 - neg as i64, n - zero_order))
    }

    /// Determinant via exact Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.entry(r, col).is_zero());
            let Some(pivot) = pivot else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.entry(pivot, j).clone();
                    let b = m.entry(col, j).clone();
                    *m.entry_mut(pivot, j) = b;
                    *m.entry_mut(col, j) = a;
                }
                det = -det;
            }
            let p = m.entry(col, col).clone();
            det = det * &p;
            for r in col + 1..n {
                let factor = m.entry(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * m.entry(col, j);
                    let cur = m.entry(r, j).clone();
                    *m.entry_mut(r, j) = cur - delta;
                }
            }
        }
        Ok(det)
    }

    /// Determinant of the top-left `k x k` block.
    pub fn leading_principal_minor(&self, k: usize) -> Result<Rational> {
        if k > self.rows || k > self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: k,
            });
        }
        let mut block = Self::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                *block.entry_mut(i, j) = self.entry(i, j).clone();
            }
        }
        block.det()
    }

    /// Exact rational basis of the kernel, from the reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut row = 0;
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let pivot = (row..rows).find(|&r| !m.entry(r, col).is_zero());
            let Some(pivot) = pivot else { continue };
            if pivot != row {
                for j in 0..cols {
                    let a = m.entry(pivot, j).clone();
                    let b = m.entry(row, j).clone();
                    *m.entry_mut(pivot, j) = b;
                    *m.entry_mut(row, j) = a;
                }
            }
            let p = m.entry(row, col).clone();
            for j in 0..cols {
                let v = m.entry(row, j) / &p;
                *m.entry_mut(row, j) = v;
            }
            for r in 0..rows {
                if r == row || m.entry(r, col).is_zero() {
                    continue;
                }
                let factor = m.entry(r, col).clone();
                for j in 0..cols {
                    let delta = &factor * m.entry(row, j);
                    let cur = m.entry(r, j).clone();
                    *m.entry_mut(r, j) = cur - delta;
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for col in 0..cols {
                if let Some(r) = pivot_of_col[col] {
                    v[col] = -m.entry(r, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.cols - self.nullspace().len()
    }

    /// Exact inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.entry(r, col).is_zero());
            let Some(pivot) = pivot else {
                return Err(Error::Singular);
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.entry(pivot, j).clone();
                    let b = m.entry(col, j).clone();
                    *m.entry_mut(pivot, j) = b;
                    *m.entry_mut(col, j) = a;
                    let a = inv.entry(pivot, j).clone();
                    let b = inv.entry(col, j).clone();
                    *inv.entry_mut(pivot, j) = b;
                    *inv.entry_mut(col, j) = a;
                }
            }
            let p = m.entry(col, col).clone();
            for j in 0..n {
                let v = m.entry(col, j) / &p;
                *m.entry_mut(col, j) = v;
                let v = inv.entry(col, j) / &p;
                *inv.entry_mut(col, j) = v;
            }
            for r in 0..n {
                if r == col || m.entry(r, col).is_zero() {
                    continue;
                }
                let factor = m.entry(r, col).clone();
                for j in 0..n {
                    let delta = &factor * m.entry(col, j);
                    let cur = m.entry(r, j).clone();
                    *m.entry_mut(r, j) = cur - delta;
                    let delta = &factor * inv.entry(col, j);
                    let cur = inv.entry(r, j).clone();
                    *inv.entry_mut(r, j) = cur - delta;
                }
            }
        }
        Ok(inv)
    }
}

/// Number of sign variations among the nonzero values of a sequence.
pub fn sign_variations<'a, I: Iterator<Item = &'a Rational>>(seq: I) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None;
    for v in seq {
        if v.is_zero() {
            continue;
        }
        let sign = v.is_positive();
        if let Some(prev) = last {
            if prev != sign {
                variations += 1;
            }
        }
        last = Some(sign);
    }
    variations
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_rational(self.entry(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn psd_examples() {
        assert!(RatMatrix::identity(3).psd_check().unwrap());
        // det = -256 < 0
        let m = RatMatrix::from_i64(2, 2, &[0, 16, 16, 0]);
        assert!(!m.psd_check().unwrap());
        // det = -3
        let m = RatMatrix::from_i64(2, 2, &[1, 2, 2, 1]);
        assert!(!m.psd_check().unwrap());
        let m = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        assert!(m.psd_check().is_err());
    }

    #[test]
    fn char_poly_examples() {
        let zero = RatMatrix::zero(2, 2);
        assert_eq!(zero.char_poly_coeffs().unwrap(), vec![int(0), int(0), int(1)]);
        let diag = RatMatrix::from_i64(2, 2, &[1, 0, 0, 2]);
        assert_eq!(
            diag.char_poly_coeffs().unwrap(),
            vec![int(2), int(-3), int(1)]
        );
        let m = RatMatrix::from_i64(2, 2, &[4, 10, 10, 30]);
        assert_eq!(
            m.char_poly_coeffs().unwrap(),
            vec![int(20), int(-34), int(1)]
        );
    }

    #[test]
    fn nullspace_examples() {
        assert!(RatMatrix::identity(3).nullspace().is_empty());
        assert_eq!(RatMatrix::zero(2, 2).nullspace().len(), 2);
        // sigma - I for the 4-cycle permutation matrix: kernel is the ones vector
        let sigma = RatMatrix::from_i64(
            4,
            4,
            &[0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0],
        );
        let m = sigma.sub(&RatMatrix::identity(4)).unwrap();
        let basis = m.nullspace();
        assert_eq!(basis.len(), 1);
        let b = &basis[0];
        assert!(b.iter().all(|c| c == &b[0] && !c.is_zero()));
        assert!(m.mul_rational_vec(b).unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 1]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(RatMatrix::zero(2, 2).inverse().is_err());
    }

    #[test]
    fn signature_and_rank() {
        let m = RatMatrix::from_i64(3, 3, &[1, 0, 0, 0, -2, 0, 0, 0, 0]);
        let (sig, rank) = m.signature().unwrap();
        assert_eq!((sig, rank), (0, 2));
        let m = RatMatrix::from_i64(2, 2, &[3, 0, 0, 5]);
        assert_eq!(m.signature().unwrap(), (2, 2));
    }

    #[test]
    fn gram_matrices_are_psd() {
        let a = RatMatrix::from_i64(3, 3, &[1, -2, 0, 4, 5, -1, 7, 0, 3]);
        let g = a.transpose().mul(&a).unwrap();
        assert!(g.psd_check().unwrap());
    }
}

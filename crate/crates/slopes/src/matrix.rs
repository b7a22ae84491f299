//! Exact square matrices over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use tdlc_padic::{Polynomial, Rational};

use crate::error::SlopeError;

/// A square matrix with exact rational entries, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(n: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), n * n, "matrix data length mismatch");
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, SlopeError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SlopeError::BadInput("matrix is not square".into()));
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n);
                r.iter().map(|&x| Rational::from_int(x))
            })
            .collect();
        Matrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zero(n);
        for (i, e) in entries.into_iter().enumerate() {
            *m.get_mut(i, i) = e;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_cols(n: usize, cols: &[Vec<Rational>]) -> Self {
        assert_eq!(cols.len(), n);
        let mut m = Matrix::zero(n);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n);
            for i in 0..n {
                *m.get_mut(i, j) = c[i].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * rhs.get(k, j);
                    *out.get_mut(i, j) += &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.n {
                    let prod = self.get(i, j) * &v[j];
                    acc += &prod;
                }
                acc
            })
            .collect()
    }

    /// Determinant by fraction-free Bareiss elimination on the
    /// denominator-cleared integer matrix.
    pub fn det(&self) -> Rational {
        let n = self.n;
        if n == 0 {
            return Rational::one();
        }
        // Clear denominators: scale the whole matrix by the lcm.
        let mut lcm = BigInt::one();
        for e in &self.data {
            lcm = lcm.lcm(e.denom());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det_int = if sign < 0 {
            -m[n - 1][n - 1].clone()
        } else {
            m[n - 1][n - 1].clone()
        };
        Rational::from_big(det_int, lcm.pow(n as u32))
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, SlopeError> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(SlopeError::SingularInput)?;
            if pivot_row != col {
                for j in 0..n {
                    let tmp = a.get(pivot_row, j).clone();
                    *a.get_mut(pivot_row, j) = a.get(col, j).clone();
                    *a.get_mut(col, j) = tmp;
                    let tmp = inv.get(pivot_row, j).clone();
                    *inv.get_mut(pivot_row, j) = inv.get(col, j).clone();
                    *inv.get_mut(col, j) = tmp;
                }
            }
            let pivot = a.get(col, col).clone();
            let pivot_inv = pivot.recip();
            for j in 0..n {
                *a.get_mut(col, j) = a.get(col, j) * &pivot_inv;
                *inv.get_mut(col, j) = inv.get(col, j) * &pivot_inv;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let d = &factor * a.get(col, j);
                    *a.get_mut(r, j) -= &d;
                    let d = &factor * inv.get(col, j);
                    *inv.get_mut(r, j) -= &d;
                }
            }
        }
        Ok(inv)
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow(&self, k: i64) -> Result<Matrix, SlopeError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Matrix::identity(self.n);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Monic characteristic polynomial `det(x I - A)` by fraction-free
    /// Bareiss elimination over the polynomial ring Q[x]. The leading
    /// principal minors of `x I - A` are monic, so no pivoting is needed
    /// and every division is exact.
    pub fn char_poly(&self) -> Polynomial {
        let n = self.n;
        if n == 0 {
            return Polynomial::one();
        }
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Polynomial::new(vec![-self.get(i, j), Rational::one()])
                        } else {
                            Polynomial::constant(-self.get(i, j))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev);
                }
                m[i][k] = Polynomial::zero();
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].clone()
    }

    /// Evaluate a polynomial at this matrix.
    pub fn eval_poly(&self, f: &Polynomial) -> Matrix {
        let n = self.n;
        let mut acc = Matrix::zero(n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                *acc.get_mut(i, i) += c;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_identity() {
        // x^2 - 2x + 1
        let m = Matrix::identity(2);
        assert_eq!(m.char_poly(), Polynomial::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_of_diagonal() {
        // diag(p, 1/p) -> x^2 - (p + 1/p) x + 1 at p = 5
        let m = Matrix::diagonal(vec![Rational::from_int(5), Rational::new(1, 5)]);
        let expected = Polynomial::new(vec![
            Rational::one(),
            -Rational::new(26, 5),
            Rational::one(),
        ]);
        assert_eq!(m.char_poly(), expected);
    }

    #[test]
    fn char_poly_of_companion_matrix() {
        // Companion matrix of x^3 - p x + p^2 at p = 3: x^3 + 0x^2 - 3x + 9.
        let p = 3i64;
        let m = Matrix::from_ints(&[&[0, 0, -p * p], &[1, 0, p], &[0, 1, 0]]);
        assert_eq!(m.char_poly(), Polynomial::from_ints(&[p * p, -p, 0, 1]));
    }

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.det(), Rational::one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.pow(-2).unwrap(), inv.mul(&inv));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn det_with_row_swap() {
        let m = Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        assert_eq!(m.det(), Rational::from_int(-2));
    }

    #[test]
    fn eval_poly_matches_cayley_hamilton() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let f = m.char_poly();
        assert!(m.eval_poly(&f).is_zero());
    }
}

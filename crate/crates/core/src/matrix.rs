//! Dense matrices over arbitrary-precision rationals.
//!
//! Everything here is exact: entries are `BigRational`, reductions happen on
//! every operation, and there is no floating point anywhere. A 0x0 matrix is
//! legal and stands for the map on a trivial homology group.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::KernelError;
use crate::poly::IntPoly;

/// Dense row-major matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows of machine integers. Handy in tests and for
    /// the small published matrices.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, |i, j| BigRational::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn from_bigint_rows(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, |i, j| BigRational::from_integer(rows[i][j].clone()))
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

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn scale(&self, k: &BigRational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * k)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    /// m-th power by binary exponentiation; `pow(0)` is the identity.
    pub fn pow(&self, mut m: u64) -> Matrix {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                result = result.mul(&base);
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn trace(&self) -> BigRational {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = BigRational::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    /// Exact determinant by Gaussian elimination; det of the 0x0 matrix is 1.
    pub fn det(&self) -> BigRational {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let at = |a: &Vec<BigRational>, r: usize, c: usize| a[r * n + c].clone();
        let mut d = BigRational::one();
        for i in 0..n {
            let mut piv = None;
            for r in i..n {
                if !at(&a, r, i).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let p = match piv {
                None => return BigRational::zero(),
                Some(p) => p,
            };
            if p != i {
                for c in 0..n {
                    a.swap(i * n + c, p * n + c);
                }
                d = -d;
            }
            let pivot = at(&a, i, i);
            d *= &pivot;
            for r in (i + 1)..n {
                let f = at(&a, r, i) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in i..n {
                    let v = at(&a, r, c) - &f * at(&a, i, c);
                    a[r * n + c] = v;
                }
            }
        }
        d
    }

    /// Characteristic polynomial det(tI - M), monic of degree n, by the
    /// Faddeev-LeVerrier recurrence (divisions are by the step index only, so
    /// the computation stays exact and integer inputs give integer output).
    /// A rational input whose polynomial is not integral is scaled to
    /// primitive integer form. The 0x0 matrix yields the constant 1.
    pub fn char_poly(&self) -> Result<IntPoly, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        // coeffs[n - k] is filled at step k
        let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut aux = self.clone();
        for k in 1..=n {
            if k > 1 {
                // aux = M * (aux + c_{n-k+1} I)
                let mut shifted = aux;
                let c = coeffs[n - k + 1].clone();
                for i in 0..n {
                    let v = shifted.get(i, i) + &c;
                    shifted.set(i, i, v);
                }
                aux = self.mul(&shifted);
            }
            let c = -aux.trace() / BigRational::from_integer(BigInt::from(k as i64));
            coeffs[n - k] = c;
        }
        Ok(IntPoly::from_rational_coeffs_primitive(&coeffs))
    }

    /// trace(M^m) for m >= 1 by direct exponentiation.
    pub fn trace_power(&self, m: u64) -> Result<BigRational, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if m == 0 {
            return Err(KernelError::ZeroIterate);
        }
        Ok(self.pow(m).trace())
    }

    /// trace(M^m) from Newton power sums over the characteristic polynomial;
    /// beyond the dimension the Cayley-Hamilton recurrence takes over, so no
    /// large intermediate matrices appear. Cross-checked against
    /// `trace_power` in the test suite.
    pub fn trace_power_newton(&self, m: u64) -> Result<BigRational, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if m == 0 {
            return Err(KernelError::ZeroIterate);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigRational::zero());
        }
        let chi = self.char_poly()?;
        // chi = t^n + a_1 t^(n-1) + ... + a_n
        let a = |k: usize| -> BigRational { BigRational::from_integer(chi.coeff(n - k)) };
        // Newton: p_k = -k a_k - sum_{i=1}^{k-1} a_i p_{k-i} for k <= n,
        // then p_k = -sum_{i=1}^{n} a_i p_{k-i} for k > n.
        let mm = m as usize;
        let mut p: Vec<BigRational> = Vec::with_capacity(mm + 1);
        p.push(BigRational::from_integer(BigInt::from(n as i64)));
        for k in 1..=mm {
            let mut s = BigRational::zero();
            for i in 1..=(k - 1).min(n) {
                s += a(i) * &p[k - i];
            }
            let mut pk = -s;
            if k <= n {
                pk -= BigRational::from_integer(BigInt::from(k as i64)) * a(k);
            }
            p.push(pk);
        }
        Ok(p[mm].clone())
    }

    /// k-th compound matrix: rows and columns indexed by strictly increasing
    /// k-element subsets in lexicographic order, entries the corresponding
    /// k x k minors. Accepts rectangular input; `compound(_, 0)` is `[1]`.
    pub fn compound(&self, k: usize) -> Matrix {
        let row_sets = k_subsets(self.rows, k);
        let col_sets = k_subsets(self.cols, k);
        Matrix::from_fn(row_sets.len(), col_sets.len(), |i, j| {
            self.minor(&row_sets[i], &col_sets[j])
        })
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> BigRational {
        let k = rows.len();
        Matrix::from_fn(k, k, |r, c| self.get(rows[r], cols[c]).clone()).det()
    }

    /// k-th exterior power of a square matrix, i.e. the induced map on the
    /// k-th exterior power of the underlying space.
    pub fn exterior_power(&self, k: usize) -> Result<Matrix, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if k > self.rows {
            return Err(KernelError::DegreeOutOfRange { k, n: self.rows });
        }
        Ok(self.compound(k))
    }

    /// det(I - t*M) as an integer polynomial (the reversed characteristic
    /// polynomial).
    pub fn det_one_minus_t(&self) -> Result<IntPoly, KernelError> {
        let chi = self.char_poly()?;
        Ok(chi.reversed(self.rows))
    }

    pub fn row(&self, r: usize) -> Vec<BigRational> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    /// Copies `block` into `self` with upper-left corner at (r0, c0).
    pub fn write_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn extract_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// All strictly increasing k-element subsets of {0..n-1} in lexicographic
/// order. For k > n the list is empty; for k == 0 it is the single empty set.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        if k == 0 {
            return out;
        }
        // find the rightmost position that can still advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Sum of signed traces of all exterior powers; equals det(I - A) and is the
/// bridge between trace formulas and determinant formulas on tori.
pub fn alternating_compound_trace_sum(a: &Matrix) -> BigRational {
    assert!(a.is_square());
    let n = a.rows();
    let mut total = BigRational::zero();
    for k in 0..=n {
        let t = a.compound(k).trace();
        if k % 2 == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    total
}

/// Rounds a known-integral rational down to a `BigInt`, panicking otherwise.
pub fn expect_integer(x: &BigRational) -> BigInt {
    assert!(x.is_integer(), "expected integer, got {x}");
    x.to_integer()
}

#[cfg(test)]
pub(crate) fn bigint_is(x: &BigRational, v: i64) -> bool {
    x.is_integer() && x.to_integer() == BigInt::from(v)
}

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Polynomial;

/// Dense square matrix of unbounded integers, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are not square.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            entries.extend(row.iter().map(|&x| x.into()));
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &BigInt) {
        self.entries[row * self.dim + col] += value;
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on the given (sorted or not) index list.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        let mut sub = Self::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                sub.set(a, b, self.get(i, j).clone());
            }
        }
        sub
    }

    /// Exact `Tr(self^n)` by repeated multiplication.
    pub fn trace_power(&self, n: usize) -> BigInt {
        assert!(n >= 1, "trace_power needs a positive exponent");
        self.trace_powers(n).pop().unwrap_or_default()
    }

    /// `[Tr(self^1), ..., Tr(self^max)]`.
    pub fn trace_powers(&self, max: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(max);
        if max == 0 {
            return out;
        }
        if self.dim == 0 {
            out.resize(max, BigInt::zero());
            return out;
        }
        let mut power = self.clone();
        out.push(power.trace());
        for _ in 1..max {
            power = &power * self;
            out.push(power.trace());
        }
        out
    }

    /// Coefficients of `det(I - z·self)` via Berkowitz's division-free
    /// characteristic polynomial algorithm.
    pub fn det_one_minus_z(&self) -> Polynomial {
        // Descending coefficients of the characteristic polynomial of the
        // leading principal submatrix processed so far; leading entry is 1.
        let mut charpoly = vec![BigInt::one()];
        for r in 0..self.dim {
            // Toeplitz column: 1, -a_rr, -C R, -C M R, ..., -C M^{r-1} R
            let mut column = Vec::with_capacity(r + 2);
            column.push(BigInt::one());
            column.push(-self.get(r, r).clone());
            let mut v: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for step in 0..r {
                let cv: BigInt = (0..r).map(|j| self.get(r, j) * &v[j]).sum();
                column.push(-cv);
                if step + 1 < r {
                    v = (0..r)
                        .map(|i| (0..r).map(|j| self.get(i, j) * &v[j]).sum())
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (row, slot) in next.iter_mut().enumerate() {
                for (col, c) in charpoly.iter().enumerate() {
                    if row >= col {
                        *slot += &column[row - col] * c;
                    }
                }
            }
            charpoly = next;
        }
        Polynomial::new(charpoly)
    }
}

/// Power sums `Tr(A^1..=max)` recovered from `P(z) = det(I - zA)` through
/// Newton's identities: `N c_N + sum_{k=1}^{N} t_k c_{N-k} = 0`.
pub fn power_sums_from_det(det: &Polynomial, max: usize) -> Vec<BigInt> {
    let c = |j: usize| det.coeff(j);
    let mut sums: Vec<BigInt> = Vec::with_capacity(max);
    for n in 1..=max {
        let mut t = -BigInt::from(n) * c(n);
        for k in 1..n {
            t -= &sums[k - 1] * c(n - k);
        }
        sums.push(t);
    }
    sums
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_det(m: &[Vec<i64>]) -> BigInt {
        // Laplace expansion; test-only oracle.
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = BigInt::from(m[0][c]) * naive_det(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn empty_matrix_determinant_is_one() {
        let m = IntMatrix::zeros(0);
        assert_eq!(m.det_one_minus_z(), Polynomial::one());
        assert_eq!(m.trace_powers(3), vec![BigInt::zero(); 3]);
    }

    #[test]
    fn two_by_two_charpoly() {
        let m = IntMatrix::from_rows(&[vec![2i64, 3], vec![5, 7]]);
        // det(I - zA) = 1 - 9z + (14 - 15) z^2
        assert_eq!(m.det_one_minus_z(), Polynomial::from_i64(&[1, -9, -1]));
    }

    #[test]
    fn determinant_matches_laplace_at_z_equals_one() {
        let rows = vec![
            vec![1i64, 2, 0, -1],
            vec![3, 0, 1, 2],
            vec![-2, 1, 4, 0],
            vec![0, 5, 1, 1],
        ];
        let m = IntMatrix::from_rows(&rows);
        let one_minus: Vec<Vec<i64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { 1 - x } else { -x })
                    .collect()
            })
            .collect();
        let p = m.det_one_minus_z();
        let at_one: BigInt = p.coeffs().iter().sum();
        assert_eq!(at_one, naive_det(&one_minus));
    }

    #[test]
    fn newton_identities_recover_traces() {
        let m = IntMatrix::from_rows(&[
            vec![0i64, 1, 1, 0, 2],
            vec![1, 0, 0, 1, 0],
            vec![0, 3, 1, 0, 1],
            vec![1, 0, 0, 0, 1],
            vec![0, 1, -1, 1, 0],
        ]);
        let det = m.det_one_minus_z();
        assert_eq!(power_sums_from_det(&det, 10), m.trace_powers(10));
    }

    #[test]
    fn submatrix_picks_rows_and_columns() {
        let m = IntMatrix::from_rows(&[vec![1i64, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let s = m.principal_submatrix(&[0, 2]);
        assert_eq!(s, IntMatrix::from_rows(&[vec![1i64, 3], vec![7, 9]]));
    }
}

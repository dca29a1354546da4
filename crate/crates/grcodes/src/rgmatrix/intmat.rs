//! Exact integer matrices: fraction-free Bareiss determinant plus
//! rational elimination for inverses and kernel vectors.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, indices: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(indices.len(), self.cols);
        for (r, &i) in indices.iter().enumerate() {
            for j in 0..self.cols {
                out.set(r, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn delete_cols(&self, sorted: &[usize]) -> IntMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !sorted.contains(j)).collect();
        let mut out = IntMatrix::zeros(self.rows, keep.len());
        for i in 0..self.rows {
            for (jj, &j) in keep.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det_bareiss(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(swap) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(swap, j).clone();
                            m.set(k, j, b);
                            m.set(swap, j, a);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m.set(i, j, q);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        let det = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| BigRational::from(self.get(i, j).clone())).collect())
            .collect()
    }

    /// Exact inverse over the rationals; None when singular.
    pub fn inverse_rational(&self) -> Option<Vec<Vec<BigRational>>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.to_rational();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
            m.swap(col, pivot);
            inv.swap(col, pivot);
            let lead = m[col][col].clone();
            for j in 0..n {
                m[col][j] /= &lead;
                inv[col][j] /= &lead;
            }
            for i in 0..n {
                if i != col && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in 0..n {
                        let t = &f * &m[col][j];
                        m[i][j] -= t;
                        let t = &f * &inv[col][j];
                        inv[i][j] -= t;
                    }
                }
            }
        }
        Some(inv)
    }

    /// One nonzero kernel vector (M x = 0) scaled to a primitive integer
    /// vector; None when M has full column rank.
    pub fn kernel_vector_integer(&self) -> Option<Vec<BigInt>> {
        let mut m = self.to_rational();
        let rows = self.rows;
        let cols = self.cols;
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&i| !m[i][col].is_zero());
            let Some(pivot) = pivot else { continue };
            m.swap(rank, pivot);
            let lead = m[rank][col].clone();
            for j in 0..cols {
                m[rank][j] /= &lead;
            }
            for i in 0..rows {
                if i != rank && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in 0..cols {
                        let t = &f * &m[rank][j];
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let free = (0..cols).find(|c| !pivots.contains(c))?;
        let mut x = vec![BigRational::zero(); cols];
        x[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = -m[r][free].clone();
        }
        // Clear denominators and divide by content.
        let mut lcm = BigInt::one();
        for v in &x {
            lcm = lcm.lcm(v.denom());
        }
        let mut ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from(lcm.clone())).to_integer()).collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        if !gcd.is_zero() && !gcd.is_one() {
            for v in &mut ints {
                *v /= &gcd;
            }
        }
        Some(ints)
    }

    pub fn is_unimodular_det(det: &BigInt) -> bool {
        det.abs().is_one()
    }
}

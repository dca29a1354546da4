//! Dense matrices over GF(p) for odd primes p, stored as reduced residues.

use crate::groupring::fp_inv;

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u16,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows.min(16) {
            let line: Vec<String> =
                (0..self.cols.min(24)).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(p: u16, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u16, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        debug_assert!(v < self.p);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let c = self.cols;
        let (i, j) = (i.min(j), i.max(j));
        let (a, b) = self.data.split_at_mut(j * c);
        a[i * c..(i + 1) * c].swap_with_slice(&mut b[..c]);
    }

    fn scale_row(&mut self, i: usize, f: u16) {
        let p = self.p as u32;
        for v in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *v = ((*v as u32 * f as u32) % p) as u16;
        }
    }

    /// dst -= f * src.
    fn axpy_rows(&mut self, dst: usize, src: usize, f: u16) {
        debug_assert_ne!(dst, src);
        let p = self.p as u32;
        let neg = (self.p - f % self.p) % self.p;
        let c = self.cols;
        let (lo, hi) = (dst.min(src), dst.max(src));
        let (a, b) = self.data.split_at_mut(hi * c);
        let (first, second) = (&mut a[lo * c..(lo + 1) * c], &mut b[..c]);
        let (d, s): (&mut [u16], &[u16]) =
            if dst < src { (first, second) } else { (second, first) };
        for (x, y) in d.iter_mut().zip(s.iter()) {
            *x = ((*x as u32 + neg as u32 * *y as u32) % p) as u16;
        }
    }

    /// In-place reduced row echelon form; returns (rank, pivot columns).
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let pivot = (rank..self.rows).find(|&i| self.get(i, col) != 0);
            let Some(pivot) = pivot else { continue };
            self.swap_rows(pivot, rank);
            let lead = self.get(rank, col);
            if lead != 1 {
                self.scale_row(rank, fp_inv(lead, self.p));
            }
            for i in 0..self.rows {
                let f = self.get(i, col);
                if i != rank && f != 0 {
                    self.axpy_rows(i, rank, f);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().0
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: u64 = 0;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.set(i, j, (acc % p) as u16);
            }
        }
        out
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn select_rows(&self, indices: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, indices.len(), self.cols);
        for (r, &i) in indices.iter().enumerate() {
            let c = self.cols;
            out.data[r * c..(r + 1) * c].copy_from_slice(self.row(i));
        }
        out
    }

    pub fn delete_cols(&self, sorted: &[usize]) -> FpMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !sorted.contains(j)).collect();
        let mut out = FpMatrix::zeros(self.p, self.rows, keep.len());
        for i in 0..self.rows {
            for (jj, &j) in keep.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = FpMatrix::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&v| v != 0).count()
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j) != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

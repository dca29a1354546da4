//! The RG-matrix isomorphism and exact linear algebra over prime fields
//! and the integers.
//!
//! `sigma` sends an element u to the n x n matrix with (i,j) entry equal to
//! the coefficient of u at g_i^{-1} g_j. It is a bijective ring homomorphism,
//! so unit/zero-divisor questions about u become rank and determinant
//! questions about the matrix.

mod bitmat;
mod fpmat;
mod intmat;

pub use bitmat::BitMatrix;
pub use fpmat::FpMatrix;
pub use intmat::IntMatrix;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groupring::{GroupRingElement, RingSpec};

/// Dense matrices are materialized up to this dimension.
pub const DENSE_LIMIT: usize = 4096;

/// A dense matrix over a prime field; GF(2) is bit-packed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldMatrix {
    F2(BitMatrix),
    Fp(FpMatrix),
}

impl FieldMatrix {
    pub fn zeros(p: u16, rows: usize, cols: usize) -> Self {
        if p == 2 {
            FieldMatrix::F2(BitMatrix::zeros(rows, cols))
        } else {
            FieldMatrix::Fp(FpMatrix::zeros(p, rows, cols))
        }
    }

    pub fn identity(p: u16, n: usize) -> Self {
        if p == 2 {
            FieldMatrix::F2(BitMatrix::identity(n))
        } else {
            FieldMatrix::Fp(FpMatrix::identity(p, n))
        }
    }

    pub fn p(&self) -> u16 {
        match self {
            FieldMatrix::F2(_) => 2,
            FieldMatrix::Fp(m) => m.p(),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            FieldMatrix::F2(m) => m.rows(),
            FieldMatrix::Fp(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            FieldMatrix::F2(m) => m.cols(),
            FieldMatrix::Fp(m) => m.cols(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u16 {
        match self {
            FieldMatrix::F2(m) => m.get(i, j) as u16,
            FieldMatrix::Fp(m) => m.get(i, j),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        match self {
            FieldMatrix::F2(m) => m.set(i, j, v % 2 == 1),
            FieldMatrix::Fp(m) => m.set(i, j, v % m.p()),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            FieldMatrix::F2(m) => m.rank(),
            FieldMatrix::Fp(m) => m.rank(),
        }
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        match (self, other) {
            (FieldMatrix::F2(a), FieldMatrix::F2(b)) => FieldMatrix::F2(a.mul(b)),
            (FieldMatrix::Fp(a), FieldMatrix::Fp(b)) => FieldMatrix::Fp(a.mul(b)),
            _ => panic!("field mismatch in matrix product"),
        }
    }

    pub fn add(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows(), self.cols()), (other.rows(), other.cols()));
        let mut out = self.clone();
        let p = self.p() as u32;
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.set(i, j, ((self.get(i, j) as u32 + other.get(i, j) as u32) % p) as u16);
            }
        }
        out
    }

    pub fn transpose(&self) -> FieldMatrix {
        match self {
            FieldMatrix::F2(m) => FieldMatrix::F2(m.transpose()),
            FieldMatrix::Fp(m) => FieldMatrix::Fp(m.transpose()),
        }
    }

    pub fn select_rows(&self, indices: &[usize]) -> FieldMatrix {
        match self {
            FieldMatrix::F2(m) => FieldMatrix::F2(m.select_rows(indices)),
            FieldMatrix::Fp(m) => FieldMatrix::Fp(m.select_rows(indices)),
        }
    }

    pub fn delete_cols(&self, sorted: &[usize]) -> FieldMatrix {
        match self {
            FieldMatrix::F2(m) => FieldMatrix::F2(m.delete_cols(sorted)),
            FieldMatrix::Fp(m) => FieldMatrix::Fp(m.delete_cols(sorted)),
        }
    }

    pub fn hstack(&self, other: &FieldMatrix) -> FieldMatrix {
        match (self, other) {
            (FieldMatrix::F2(a), FieldMatrix::F2(b)) => FieldMatrix::F2(a.hstack(b)),
            (FieldMatrix::Fp(a), FieldMatrix::Fp(b)) => FieldMatrix::Fp(a.hstack(b)),
            _ => panic!("field mismatch in hstack"),
        }
    }

    /// Stacks rows of `self` on top of `other`.
    pub fn vstack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols(), other.cols());
        let mut out = FieldMatrix::zeros(self.p(), self.rows() + other.rows(), self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows() {
            for j in 0..other.cols() {
                out.set(self.rows() + i, j, other.get(i, j));
            }
        }
        out
    }

    pub fn row_weight(&self, i: usize) -> usize {
        match self {
            FieldMatrix::F2(m) => m.row_weight(i),
            FieldMatrix::Fp(m) => m.row_weight(i),
        }
    }

    pub fn col_weight(&self, j: usize) -> usize {
        match self {
            FieldMatrix::F2(m) => m.col_weight(j),
            FieldMatrix::Fp(m) => m.col_weight(j),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldMatrix::F2(m) => m.is_zero(),
            FieldMatrix::Fp(m) => m.is_zero(),
        }
    }

    pub fn row_vec(&self, i: usize) -> Vec<u16> {
        (0..self.cols()).map(|j| self.get(i, j)).collect()
    }

    pub fn from_rows(p: u16, rows: &[Vec<u16>], cols: usize) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }
}

/// Outcome of row reduction: the reduced matrix, its rank, and the pivot
/// column indices in increasing order.
#[derive(Debug, Clone)]
pub struct RrefResult {
    pub reduced: FieldMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Reduced row echelon form (deterministic: leftmost pivot, lowest row).
pub fn rref(m: &FieldMatrix) -> RrefResult {
    let mut reduced = m.clone();
    let (rank, pivot_columns) = match &mut reduced {
        FieldMatrix::F2(b) => b.rref_in_place(),
        FieldMatrix::Fp(f) => f.rref_in_place(),
    };
    RrefResult { reduced, rank, pivot_columns }
}

/// Basis of the right kernel {x : M x = 0}, one vector per free column in
/// increasing column order.
pub fn null_space(m: &FieldMatrix) -> Vec<Vec<u16>> {
    let p = m.p();
    let r = rref(m);
    let n = m.cols();
    let mut basis = Vec::with_capacity(n - r.rank);
    for free in 0..n {
        if r.pivot_columns.contains(&free) {
            continue;
        }
        let mut x = vec![0u16; n];
        x[free] = 1;
        for (row, &pc) in r.pivot_columns.iter().enumerate() {
            let v = r.reduced.get(row, free);
            x[pc] = (p - v) % p;
        }
        basis.push(x);
    }
    basis
}

/// Basis of the left kernel {x : x M = 0}.
pub fn left_kernel(m: &FieldMatrix) -> Vec<Vec<u16>> {
    null_space(&m.transpose())
}

/// For a full-row-rank r x n matrix M, an n x r matrix C with M C = I_r
/// (free variables set to zero).
pub fn right_inverse(m: &FieldMatrix) -> Result<FieldMatrix> {
    let r = m.rows();
    let n = m.cols();
    let aug = m.hstack(&FieldMatrix::identity(m.p(), r));
    let red = rref(&aug);
    let main_pivots: Vec<usize> =
        red.pivot_columns.iter().copied().filter(|&c| c < n).collect();
    if main_pivots.len() < r {
        return Err(Error::NoRightInverse { rank: main_pivots.len(), rows: r });
    }
    let mut c = FieldMatrix::zeros(m.p(), n, r);
    for (row, &pc) in main_pivots.iter().enumerate() {
        for i in 0..r {
            c.set(pc, i, red.reduced.get(row, n + i));
        }
    }
    debug_assert!(matrices_equal_identity(&m.mul(&c)));
    Ok(c)
}

fn matrices_equal_identity(m: &FieldMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m.get(i, j) == u16::from(i == j)))
}

/// RREF with zero rows dropped: a canonical basis of the row space.
pub fn row_space_canonical(m: &FieldMatrix) -> FieldMatrix {
    let r = rref(m);
    r.reduced.select_rows(&(0..r.rank).collect::<Vec<_>>())
}

/// Row-space equality via canonical forms.
pub fn row_space_eq(a: &FieldMatrix, b: &FieldMatrix) -> bool {
    row_space_canonical(a) == row_space_canonical(b)
}

/// Incremental Gaussian elimination for scanning rows in a fixed order and
/// keeping the independent ones.
pub struct RowBasis {
    p: u16,
    cols: usize,
    // echelon rows with their pivot column, in insertion order
    rows: Vec<(usize, Vec<u32>)>,
}

impl RowBasis {
    pub fn new(p: u16, cols: usize) -> Self {
        RowBasis { p, cols, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Inserts the row if independent of those kept so far; returns whether
    /// it was kept.
    pub fn try_insert(&mut self, row: &[u16]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let p = self.p as u64;
        let mut work: Vec<u32> = row.iter().map(|&v| v as u32).collect();
        for (pivot, basis_row) in &self.rows {
            let f = work[*pivot] as u64;
            if f != 0 {
                // work -= f * basis_row (basis rows have leading 1)
                let neg = p - f % p;
                for (w, b) in work.iter_mut().zip(basis_row) {
                    *w = ((*w as u64 + neg * *b as u64) % p) as u32;
                }
            }
        }
        let Some(pivot) = work.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = crate::groupring::fp_inv(work[pivot] as u16, self.p) as u64;
        for w in work.iter_mut() {
            *w = (*w as u64 * inv % p) as u32;
        }
        self.rows.push((pivot, work));
        true
    }

    /// Scans the rows of `m` at `candidates` in order, returning the indices
    /// kept as independent.
    pub fn greedy_rows(m: &FieldMatrix, candidates: impl Iterator<Item = usize>) -> Vec<usize> {
        let mut basis = RowBasis::new(m.p(), m.cols());
        let mut kept = Vec::new();
        for i in candidates {
            if basis.try_insert(&m.row_vec(i)) {
                kept.push(i);
            }
        }
        kept
    }
}

/// Dense representation of an RG-matrix.
#[derive(Debug, Clone)]
pub enum AnyMatrix {
    Field(FieldMatrix),
    Int(IntMatrix),
}

/// The matrix sigma(u) of a group ring element under the canonical listing.
///
/// Fully determined by its source element; the dense form is cached up to
/// [`DENSE_LIMIT`].
#[derive(Debug, Clone)]
pub struct RGMatrix {
    source: GroupRingElement,
    dense: Option<AnyMatrix>,
}

/// Builds sigma(u).
pub fn rg_matrix(u: &GroupRingElement) -> RGMatrix {
    let n = u.order();
    let dense = if n <= DENSE_LIMIT { Some(build_dense(u)) } else { None };
    RGMatrix { source: u.clone(), dense }
}

fn build_dense(u: &GroupRingElement) -> AnyMatrix {
    let g = u.group();
    let n = g.order();
    match u.ring() {
        RingSpec::Gf(p) => {
            let mut m = FieldMatrix::zeros(p, n, n);
            // Each row is the coefficient vector translated by g_i^{-1}.
            if p == 2 {
                if let FieldMatrix::F2(b) = &mut m {
                    let support = u.support();
                    for i in 0..n {
                        // entry (i, j) = 1 where g_i^{-1} g_j in supp(u),
                        // i.e. j = g_i * s
                        for &s in &support {
                            b.set(i, g.mul(i, s), true);
                        }
                    }
                }
            } else {
                for i in 0..n {
                    let gi = g.inv(i);
                    for j in 0..n {
                        m.set(i, j, u.coeff(g.mul(gi, j)));
                    }
                }
            }
            AnyMatrix::Field(m)
        }
        RingSpec::Integers => {
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                let gi = g.inv(i);
                for j in 0..n {
                    let c = u.coeff_int(g.mul(gi, j));
                    if !c.is_zero() {
                        m.set(i, j, c);
                    }
                }
            }
            AnyMatrix::Int(m)
        }
    }
}

impl RGMatrix {
    pub fn n(&self) -> usize {
        self.source.order()
    }

    pub fn ring(&self) -> RingSpec {
        self.source.ring()
    }

    pub fn source(&self) -> &GroupRingElement {
        &self.source
    }

    /// Entry (i, j) as an integer, valid for any order.
    pub fn entry_int(&self, i: usize, j: usize) -> BigInt {
        let g = self.source.group();
        self.source.coeff_int(g.mul(g.inv(i), j))
    }

    /// Dense prime-field form; errors over Z or above the dense limit.
    pub fn field(&self) -> Result<&FieldMatrix> {
        match &self.dense {
            Some(AnyMatrix::Field(m)) => Ok(m),
            Some(AnyMatrix::Int(_)) => {
                Err(Error::UnsupportedOverIntegers("prime-field linear algebra"))
            }
            None => Err(Error::DenseLimitExceeded { order: self.n(), limit: DENSE_LIMIT }),
        }
    }

    /// Dense integer form; errors over fields or above the dense limit.
    pub fn int(&self) -> Result<&IntMatrix> {
        match &self.dense {
            Some(AnyMatrix::Int(m)) => Ok(m),
            Some(AnyMatrix::Field(_)) => Err(Error::InvalidArgument(
                "integer matrix requested for a prime-field element".into(),
            )),
            None => Err(Error::DenseLimitExceeded { order: self.n(), limit: DENSE_LIMIT }),
        }
    }

    pub fn rref(&self) -> Result<RrefResult> {
        Ok(rref(self.field()?))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.field()?.rank())
    }

    pub fn null_space(&self) -> Result<Vec<Vec<u16>>> {
        Ok(null_space(self.field()?))
    }

    /// Exact determinant over Z.
    pub fn det_integer(&self) -> Result<BigInt> {
        Ok(self.int()?.det_bareiss())
    }
}

/// Shortcut: dense sigma(u) over a prime field.
pub fn sigma_field(u: &GroupRingElement) -> Result<FieldMatrix> {
    match rg_matrix(u).dense {
        Some(AnyMatrix::Field(m)) => Ok(m),
        Some(AnyMatrix::Int(_)) => Err(Error::UnsupportedOverIntegers("prime-field linear algebra")),
        None => Err(Error::DenseLimitExceeded { order: u.order(), limit: DENSE_LIMIT }),
    }
}

/// Unit / zero-divisor verdict with certificates.
#[derive(Debug, Clone)]
pub enum Classification {
    Unit { inverse: GroupRingElement },
    ZeroDivisor { witness: GroupRingElement },
    /// Over Z only: neither a unit nor a zero-divisor.
    Neither { det: BigInt },
}

impl Classification {
    pub fn is_unit(&self) -> bool {
        matches!(self, Classification::Unit { .. })
    }

    pub fn is_zero_divisor(&self) -> bool {
        matches!(self, Classification::ZeroDivisor { .. })
    }
}

/// Element whose coefficient vector is the given row (the first row of an
/// RG-matrix is the coefficient vector of its element).
pub fn element_from_row(template: &GroupRingElement, row: &[BigInt]) -> GroupRingElement {
    let terms: Vec<(usize, BigInt)> =
        row.iter().enumerate().map(|(j, v)| (j, v.clone())).collect();
    GroupRingElement::from_big_terms(template.group().clone(), template.ring(), &terms).unwrap()
}

/// Element whose RG-matrix has the given first column: the coefficient of
/// g_i^{-1} is column entry i.
pub fn element_from_first_column(template: &GroupRingElement, col: &[BigInt]) -> GroupRingElement {
    let g = template.group();
    let terms: Vec<(usize, BigInt)> =
        col.iter().enumerate().map(|(i, v)| (g.inv(i), v.clone())).collect();
    GroupRingElement::from_big_terms(g.clone(), template.ring(), &terms).unwrap()
}

/// Thm 2.2 style classification: over a prime field every nonzero element is
/// a unit or a zero-divisor; over Z the determinant decides, with `Neither`
/// for nonzero non-unit determinants.
pub fn classify(u: &GroupRingElement) -> Result<Classification> {
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = u.order();
    match u.ring() {
        RingSpec::Gf(p) => {
            let m = sigma_field(u)?;
            let aug = m.hstack(&FieldMatrix::identity(p, n));
            let red = rref(&aug);
            let rank_main = red.pivot_columns.iter().filter(|&&c| c < n).count();
            if rank_main == n {
                // Right half of the reduced augmented matrix is the inverse;
                // its first row is the coefficient vector of u^{-1}.
                let row: Vec<BigInt> =
                    (0..n).map(|j| BigInt::from(red.reduced.get(0, n + j))).collect();
                let inverse = element_from_row(u, &row);
                debug_assert!(u.mul(&inverse).unwrap().is_one());
                Ok(Classification::Unit { inverse })
            } else {
                let basis = null_space(&m);
                let first = &basis[0];
                let col: Vec<BigInt> = first.iter().map(|&v| BigInt::from(v)).collect();
                let witness = element_from_first_column(u, &col);
                debug_assert!(!witness.is_zero());
                debug_assert!(u.mul(&witness).unwrap().is_zero());
                Ok(Classification::ZeroDivisor { witness })
            }
        }
        RingSpec::Integers => {
            let m = rg_matrix(u);
            let det = m.det_integer()?;
            if det.is_zero() {
                let k = m.int()?.kernel_vector_integer().expect("det 0 implies kernel");
                let witness = element_from_first_column(u, &k);
                debug_assert!(u.mul(&witness).unwrap().is_zero());
                Ok(Classification::ZeroDivisor { witness })
            } else if det.abs().is_one() {
                let inv = m.int()?.inverse_rational().expect("unimodular");
                let row: Vec<BigInt> = inv[0]
                    .iter()
                    .map(|r| {
                        debug_assert!(r.denom().is_one());
                        r.to_integer()
                    })
                    .collect();
                let inverse = element_from_row(u, &row);
                debug_assert!(u.mul(&inverse).unwrap().is_one());
                Ok(Classification::Unit { inverse })
            } else {
                Ok(Classification::Neither { det })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::parse_element;
    use crate::groups::{make_group, GroupSpec};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn grp(text: &str) -> Arc<crate::groups::Group> {
        make_group(GroupSpec::parse(text).unwrap()).unwrap()
    }

    fn gf(p: u16) -> RingSpec {
        RingSpec::gf(p).unwrap()
    }

    fn rand_elem(
        g: &Arc<crate::groups::Group>,
        ring: RingSpec,
        rng: &mut StdRng,
    ) -> GroupRingElement {
        let terms: Vec<(usize, i64)> =
            (0..g.order()).map(|i| (i, rng.gen_range(0..6))).collect();
        GroupRingElement::from_terms(g.clone(), ring, &terms).unwrap()
    }

    #[test]
    fn sigma_of_identity_and_small_circulant() {
        let c2 = grp("C2");
        let one = GroupRingElement::one(c2.clone(), gf(2));
        let m = sigma_field(&one).unwrap();
        assert_eq!(m, FieldMatrix::identity(2, 2));

        let u = parse_element("1+g", &c2, gf(2)).unwrap();
        let m = sigma_field(&u).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j), 1);
            }
        }
    }

    #[test]
    fn sigma_entry_formula_oracle_dihedral() {
        // sigma entries must equal alpha_{g_i^{-1} g_j}; checks the
        // [[A, B], [B, A]] block shape with A circulant, B reverse circulant.
        let mut rng = StdRng::seed_from_u64(5);
        for gt in ["D6", "D8"] {
            let g = grp(gt);
            let n = g.order() / 2;
            for _ in 0..20 {
                let u = rand_elem(&g, gf(2), &mut rng);
                let m = sigma_field(&u).unwrap();
                for i in 0..g.order() {
                    for j in 0..g.order() {
                        let expect = u.coeff(g.mul(g.inv(i), j));
                        assert_eq!(m.get(i, j), expect);
                    }
                }
                // block structure: top-left circulant, top-right reverse circulant
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(m.get(i, j), u.coeff((j + n - i) % n));
                        assert_eq!(m.get(i, n + j), u.coeff(n + (i + j) % n));
                        assert_eq!(m.get(n + i, j), m.get(i, n + j));
                        assert_eq!(m.get(n + i, n + j), m.get(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_random() {
        let mut rng = StdRng::seed_from_u64(9);
        for gt in ["C7", "D8", "C4xC2", "E2^3"] {
            let g = grp(gt);
            for p in [2u16, 3] {
                for _ in 0..25 {
                    let u = rand_elem(&g, gf(p), &mut rng);
                    let v = rand_elem(&g, gf(p), &mut rng);
                    let su = sigma_field(&u).unwrap();
                    let sv = sigma_field(&v).unwrap();
                    assert_eq!(sigma_field(&u.mul(&v).unwrap()).unwrap(), su.mul(&sv));
                    assert_eq!(sigma_field(&u.add(&v).unwrap()).unwrap(), su.add(&sv));
                    assert_eq!(sigma_field(&u.transpose()).unwrap(), su.transpose());
                }
            }
        }
    }

    #[test]
    fn rref_examples() {
        let c2 = grp("C2");
        let u = parse_element("1+g", &c2, gf(2)).unwrap();
        let r = rg_matrix(&u).rref().unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
        assert_eq!(r.reduced.get(0, 1), 1);
        assert_eq!(r.reduced.get(1, 0), 0);

        let over_z = parse_element("1+g", &c2, RingSpec::integers()).unwrap();
        assert!(matches!(
            rg_matrix(&over_z).rref(),
            Err(Error::UnsupportedOverIntegers(_))
        ));
    }

    #[test]
    fn null_space_counts_and_annihilation() {
        let mut rng = StdRng::seed_from_u64(21);
        let g = grp("C8");
        for _ in 0..40 {
            let u = rand_elem(&g, gf(3), &mut rng);
            if u.is_zero() {
                continue;
            }
            let m = sigma_field(&u).unwrap();
            let rank = m.rank();
            let basis = null_space(&m);
            assert_eq!(basis.len(), 8 - rank);
            for x in &basis {
                for i in 0..8 {
                    let mut acc = 0u32;
                    for j in 0..8 {
                        acc += m.get(i, j) as u32 * x[j] as u32;
                    }
                    assert_eq!(acc % 3, 0);
                }
            }
        }
    }

    #[test]
    fn classify_trivial_and_paper_cases() {
        let c1 = grp("C1");
        let one = GroupRingElement::one(c1.clone(), gf(5));
        assert!(classify(&one).unwrap().is_unit());

        let c2 = grp("C2");
        let u = parse_element("1+g", &c2, gf(2)).unwrap();
        match classify(&u).unwrap() {
            Classification::ZeroDivisor { witness } => {
                assert_eq!(witness, u);
            }
            other => panic!("expected zero-divisor, got {other:?}"),
        }

        // u14 is a self-inverse unit
        let c14 = grp("C14");
        let u = parse_element("1+g^2+g^5+g^9+g^12", &c14, gf(2)).unwrap();
        match classify(&u).unwrap() {
            Classification::Unit { inverse } => assert_eq!(inverse, u),
            other => panic!("expected unit, got {other:?}"),
        }

        // 2 in ZC1 is neither
        let two = parse_element("2", &c1, RingSpec::integers()).unwrap();
        match classify(&two).unwrap() {
            Classification::Neither { det } => assert_eq!(det, BigInt::from(2)),
            other => panic!("expected neither, got {other:?}"),
        }

        assert!(matches!(
            classify(&GroupRingElement::zero(c2, gf(2))),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn classify_dichotomy_fields() {
        // Over a prime field the classification never returns Neither.
        let mut rng = StdRng::seed_from_u64(33);
        for gt in ["C6", "D6", "C4xC2"] {
            let g = grp(gt);
            for p in [2u16, 3] {
                for _ in 0..30 {
                    let u = rand_elem(&g, gf(p), &mut rng);
                    if u.is_zero() {
                        continue;
                    }
                    match classify(&u).unwrap() {
                        Classification::Unit { inverse } => {
                            assert!(u.mul(&inverse).unwrap().is_one());
                            assert!(inverse.mul(&u).unwrap().is_one());
                        }
                        Classification::ZeroDivisor { witness } => {
                            assert!(!witness.is_zero());
                            assert!(u.mul(&witness).unwrap().is_zero());
                        }
                        Classification::Neither { .. } => panic!("Neither over a field"),
                    }
                }
            }
        }
    }

    #[test]
    fn classify_integers_unit() {
        // g is a unit in ZC4 with inverse g^3.
        let c4 = grp("C4");
        let u = parse_element("g", &c4, RingSpec::integers()).unwrap();
        match classify(&u).unwrap() {
            Classification::Unit { inverse } => {
                assert_eq!(inverse, parse_element("g^3", &c4, RingSpec::integers()).unwrap());
            }
            other => panic!("expected unit, got {other:?}"),
        }
        // 1+g in ZC2 is a zero-divisor with witness proportional to 1-g.
        let c2 = grp("C2");
        let u = parse_element("1+g", &c2, RingSpec::integers()).unwrap();
        match classify(&u).unwrap() {
            Classification::ZeroDivisor { witness } => {
                assert!(u.mul(&witness).unwrap().is_zero());
                assert!(!witness.is_zero());
            }
            other => panic!("expected zero-divisor, got {other:?}"),
        }
    }

    #[test]
    fn right_inverse_cases() {
        // identity
        let id = FieldMatrix::identity(5, 3);
        assert_eq!(right_inverse(&id).unwrap(), id);

        // [1 1] over GF(2): C = (1,0)^T
        let mut m = FieldMatrix::zeros(2, 1, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 1);
        let c = right_inverse(&m).unwrap();
        assert_eq!((c.get(0, 0), c.get(1, 0)), (1, 0));

        // random full-rank 3x5 over GF(5): M C = I
        let mut rng = StdRng::seed_from_u64(2);
        let mut found = 0;
        while found < 10 {
            let mut m = FieldMatrix::zeros(5, 3, 5);
            for i in 0..3 {
                for j in 0..5 {
                    m.set(i, j, rng.gen_range(0..5));
                }
            }
            if m.rank() < 3 {
                continue;
            }
            found += 1;
            let c = right_inverse(&m).unwrap();
            assert!(matrices_equal_identity(&m.mul(&c)));
        }

        // rank-deficient input errors
        let z = FieldMatrix::zeros(2, 2, 3);
        assert!(matches!(right_inverse(&z), Err(Error::NoRightInverse { .. })));
    }

    #[test]
    fn det_integer_path() {
        let c2 = grp("C2");
        let one = GroupRingElement::one(c2.clone(), RingSpec::integers());
        assert_eq!(rg_matrix(&one).det_integer().unwrap(), BigInt::from(1));
        let u = parse_element("1+g", &c2, RingSpec::integers()).unwrap();
        assert_eq!(rg_matrix(&u).det_integer().unwrap(), BigInt::from(0));
    }
}

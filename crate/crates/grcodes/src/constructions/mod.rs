//! Named code families: cyclic codes via polynomial gcd, dihedral block
//! structure and doubling, orthogonal-unit series, the self-dual
//! C4 x C2 code, and regular QC-LDPC codes from direct products.

pub mod alist;

use std::sync::Arc;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{
    greedy_basis, unit_code, zero_divisor_code, CodeKind, LinearCode, Provenance, Side,
    SubmoduleBasis,
};
use crate::error::{Error, Result};
use crate::groupring::{GroupRingElement, RingSpec};
use crate::groups::{make_group, Group, GroupSpec};
use crate::poly::Poly;
use crate::rgmatrix::{
    classify, null_space, rg_matrix, sigma_field, AnyMatrix, Classification, FieldMatrix,
    RowBasis,
};

/// Generator/check polynomial pair of a cyclic code: d = gcd(h, x^n - 1)
/// and p with d * p = x^n - 1 as polynomials.
#[derive(Debug, Clone)]
pub struct PolyPair {
    pub generator: Poly,
    pub check: Poly,
}

#[derive(Debug)]
pub struct CyclicCode {
    pub pair: PolyPair,
    pub code: LinearCode,
}

fn require_cyclic_field(u: &GroupRingElement) -> Result<(u16, usize)> {
    let p = u
        .ring()
        .char()
        .ok_or(Error::UnsupportedOverIntegers("cyclic code construction"))?;
    match u.group().spec() {
        GroupSpec::Cyclic(n) => Ok((p, *n)),
        other => Err(Error::InvalidArgument(format!("expected a cyclic group, got {other}"))),
    }
}

/// Cyclic code of h: the code of d = gcd(h, x^n - 1) over the prefix basis
/// of size n - deg d. A unit h (gcd 1) yields the full space.
pub fn cyclic_code(h: &GroupRingElement) -> Result<CyclicCode> {
    let (p, n) = require_cyclic_field(h)?;
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    let modulus = Poly::x_n_minus_1(p, n);
    let d = Poly::from_element(h).gcd(&modulus);
    let deg_d = d.degree().expect("gcd of a nonzero element");
    if deg_d == n {
        return Err(Error::InvalidArgument("h is a multiple of x^n - 1: zero code".into()));
    }
    let (check, rem) = modulus.divmod(&d);
    assert!(rem.is_zero());
    assert_eq!(d.mul(&check), modulus, "d * p = x^n - 1");
    let d_elem = d.to_element(h.group().clone(), h.ring())?;
    let s = SubmoduleBasis::first(n - deg_d, n)?;
    let code = zero_divisor_code(&d_elem, &s, Side::Right)?;
    Ok(CyclicCode { pair: PolyPair { generator: d, check }, code })
}

/// Inverse in RC_n ~ GF(p)[x]/(x^n - 1) by extended Euclid. The error for
/// non-units carries the gcd, a zero-divisor certificate.
pub fn euclid_inverse(u: &GroupRingElement) -> Result<GroupRingElement> {
    let (p, n) = require_cyclic_field(u)?;
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    let modulus = Poly::x_n_minus_1(p, n);
    let (g, s, _) = Poly::from_element(u).ext_gcd(&modulus);
    if g.degree() != Some(0) {
        let cert = g.to_element(u.group().clone(), u.ring())?;
        return Err(Error::NotAUnit { certificate: Some(cert.to_text()) });
    }
    let (_, reduced) = s.divmod(&modulus);
    let inv = reduced.to_element(u.group().clone(), u.ring())?;
    debug_assert!(u.mul(&inv).unwrap().is_one());
    Ok(inv)
}

/// Verdict of the dihedral A+B / A-B invertibility criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockVerdict {
    Unit,
    ZeroDivisor,
    /// Over Z only.
    Neither,
}

/// The block split sigma(u) = [[A, B], [B, A]] of a dihedral element:
/// A circulant, B reverse circulant.
#[derive(Debug)]
pub struct DihedralBlocks {
    pub a: AnyMatrix,
    pub b: AnyMatrix,
    pub verdict: BlockVerdict,
    /// False when characteristic 2 forced the rank fallback.
    pub via_block_criterion: bool,
}

/// Splits sigma(u) into its circulant/reverse-circulant blocks and decides
/// unit-ness: over characteristic != 2 (GF(p) odd and Z), u is a unit iff
/// A+B and A-B are both invertible; over GF(2) the rank of sigma(u) decides.
pub fn dihedral_blocks(u: &GroupRingElement) -> Result<DihedralBlocks> {
    let n = match u.group().spec() {
        GroupSpec::Dihedral(n) => *n,
        other => return Err(Error::InvalidArgument(format!("expected dihedral, got {other}"))),
    };
    let order = 2 * n;
    let rows: Vec<usize> = (0..n).collect();
    let cols_a: Vec<usize> = (n..order).collect(); // delete to keep A
    let cols_b: Vec<usize> = (0..n).collect(); // delete to keep B
    match u.ring() {
        RingSpec::Gf(p) => {
            let m = sigma_field(u)?;
            let top = m.select_rows(&rows);
            let a = top.delete_cols(&cols_a);
            let b = top.delete_cols(&cols_b);
            let (verdict, via) = if p == 2 {
                let unit = m.rank() == order;
                (if unit { BlockVerdict::Unit } else { BlockVerdict::ZeroDivisor }, false)
            } else {
                let apb = a.add(&b);
                let amb = a.add(&neg_matrix(&b));
                let unit = apb.rank() == n && amb.rank() == n;
                (if unit { BlockVerdict::Unit } else { BlockVerdict::ZeroDivisor }, true)
            };
            Ok(DihedralBlocks {
                a: AnyMatrix::Field(a),
                b: AnyMatrix::Field(b),
                verdict,
                via_block_criterion: via,
            })
        }
        RingSpec::Integers => {
            let m = rg_matrix(u);
            let mi = m.int()?;
            let top = mi.select_rows(&rows);
            let a = top.delete_cols(&cols_a);
            let b = top.delete_cols(&cols_b);
            let det_p = a.add(&b).det_bareiss();
            let det_m = a.sub(&b).det_bareiss();
            let verdict = if det_p.is_zero() || det_m.is_zero() {
                BlockVerdict::ZeroDivisor
            } else if crate::rgmatrix::IntMatrix::is_unimodular_det(&det_p)
                && crate::rgmatrix::IntMatrix::is_unimodular_det(&det_m)
            {
                BlockVerdict::Unit
            } else {
                BlockVerdict::Neither
            };
            Ok(DihedralBlocks {
                a: AnyMatrix::Int(a),
                b: AnyMatrix::Int(b),
                verdict,
                via_block_criterion: true,
            })
        }
    }
}

fn neg_matrix(m: &FieldMatrix) -> FieldMatrix {
    let p = m.p();
    let mut out = FieldMatrix::zeros(p, m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if v != 0 {
                out.set(i, j, p - v);
            }
        }
    }
    out
}

/// A doubled dihedral zero-divisor u + a x u with its annihilator
/// v + a y v^T, greedy basis and resulting code.
#[derive(Debug)]
pub struct DoubledCode {
    pub element: GroupRingElement,
    pub annihilator: GroupRingElement,
    pub basis: SubmoduleBasis,
    pub code: LinearCode,
}

/// Builds the zero-divisor u + a x u in RD_2n from u, x, y in RC_n.
/// For a zero-divisor u any x, y work (uv = 0 gives the annihilator); a
/// unit u needs GF(2) and x = y = 1, where u + au = (1+a)u is singular.
pub fn dihedral_double(
    u: &GroupRingElement,
    x: &GroupRingElement,
    y: &GroupRingElement,
) -> Result<DoubledCode> {
    let (_, n) = require_cyclic_field(u)?;
    if u.group().spec() != x.group().spec() || u.group().spec() != y.group().spec() {
        return Err(Error::GroupMismatch);
    }
    if u.ring() != x.ring() || u.ring() != y.ring() {
        return Err(Error::RingMismatch);
    }
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    let v = match classify(u)? {
        Classification::ZeroDivisor { .. } => {
            let modulus = Poly::x_n_minus_1(u.ring().char().unwrap(), n);
            let d = Poly::from_element(u).gcd(&modulus);
            let (q, _) = modulus.divmod(&d);
            q.to_element(u.group().clone(), u.ring())?
        }
        Classification::Unit { inverse } => {
            if u.ring().char() != Some(2) || !x.is_one() || !y.is_one() {
                return Err(Error::InvalidArgument(
                    "doubling a unit requires GF(2) and x = y = 1".into(),
                ));
            }
            inverse
        }
        Classification::Neither { .. } => unreachable!("field classification"),
    };
    let dihedral = make_group(GroupSpec::Dihedral(n))?;
    let element = embed_double(&dihedral, u, &x.mul(u)?)?;
    let annihilator = embed_double(&dihedral, &v, &y.mul(&v.transpose())?)?;
    assert!(element.mul(&annihilator)?.is_zero(), "(u + axu)(v + ayv^T) = 0");
    let basis = greedy_basis(&element)?;
    let code = zero_divisor_code(&element, &basis, Side::Right)?;
    Ok(DoubledCode { element, annihilator, basis, code })
}

/// rot + a * refl as an element of RD_2n, both parts from RC_n.
fn embed_double(
    dihedral: &Arc<Group>,
    rot: &GroupRingElement,
    refl: &GroupRingElement,
) -> Result<GroupRingElement> {
    let n = rot.order();
    let mut terms: Vec<(usize, num::BigInt)> = Vec::new();
    for i in 0..n {
        let c = rot.coeff_int(i);
        if !c.is_zero() {
            terms.push((i, c));
        }
        let c = refl.coeff_int(i);
        if !c.is_zero() {
            terms.push((n + i, c));
        }
    }
    GroupRingElement::from_big_terms(dihedral.clone(), rot.ring(), &terms)
}

/// The rate-1/2 family over GF(2)D_2n, n even: u = 1 + a + ab + ... +
/// ab^{n-2} has sigma(u) = [[I, B], [B, I]] and check element
/// v = b + ... + b^{n-1} + ab^{n-1}.
#[derive(Debug)]
pub struct RateHalfCode {
    pub element: GroupRingElement,
    pub check_element: GroupRingElement,
    pub code: LinearCode,
}

pub fn rate_half_dihedral(n: usize) -> Result<RateHalfCode> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("rate-1/2 family needs even n >= 2, got {n}")));
    }
    let ring = RingSpec::gf(2).unwrap();
    let group = make_group(GroupSpec::Dihedral(n))?;
    let mut uterms = vec![(0usize, 1i64)];
    uterms.extend((0..=n - 2).map(|i| (n + i, 1)));
    let element = GroupRingElement::from_terms(group.clone(), ring, &uterms)?;
    let mut vterms: Vec<(usize, i64)> = (1..n).map(|i| (i, 1)).collect();
    vterms.push((2 * n - 1, 1));
    let check_element = GroupRingElement::from_terms(group.clone(), ring, &vterms)?;
    assert!(element.mul(&check_element)?.is_zero(), "uv = 0");
    let m = sigma_field(&element)?;
    assert_eq!(m.rank(), n, "rank U = n");
    assert_eq!(sigma_field(&check_element)?.rank(), n, "rank V = n");
    let s = SubmoduleBasis::first(n, 2 * n)?;
    let code = zero_divisor_code(&element, &s, Side::Right)?;
    // generator is (I_n | B)
    for i in 0..n {
        for j in 0..n {
            assert_eq!(code.generator().get(i, j), u16::from(i == j));
        }
    }
    Ok(RateHalfCode { element, check_element, code })
}

/// Orthogonal unit a = 1 + sum of u_i in GF(2)C_2n where
/// u_i = g^i + g^{n-i} + g^{n+i} + g^{2n-i}; satisfies a^2 = a a^T = 1.
pub fn orthogonal_unit(n: usize, indices: &[usize]) -> Result<GroupRingElement> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    let group = make_group(GroupSpec::Cyclic(2 * n))?;
    let ring = RingSpec::gf(2).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for &i in indices {
        if i == 0 || i >= n {
            return Err(Error::InvalidArgument(format!("index {i} outside 1..{n}")));
        }
        if 2 * i == n {
            return Err(Error::InvalidArgument(format!(
                "index {i} collapses: g^i and g^(n-i) coincide"
            )));
        }
        if seen.contains(&(n - i)) {
            return Err(Error::InvalidArgument(format!(
                "indices {} and {i} produce the same summand and cancel",
                n - i
            )));
        }
        if !seen.insert(i) {
            return Err(Error::InvalidArgument(format!("repeated index {i}")));
        }
    }
    let mut terms = vec![(0usize, 1i64)];
    for &i in indices {
        for e in [i, n - i, n + i, 2 * n - i] {
            terms.push((e, 1));
        }
    }
    let a = GroupRingElement::from_terms(group, ring, &terms)?;
    assert!(a.mul(&a)?.is_one(), "a^2 = 1");
    assert!(a.mul(&a.transpose())?.is_one(), "a a^T = 1");
    Ok(a)
}

/// The self-dual (8,4,4) code from u = 1 + h(a + a^2 + a^3) in
/// GF(2)(C4 x C2).
#[derive(Debug)]
pub struct SelfDualFamily {
    pub element: GroupRingElement,
    pub code: LinearCode,
    pub report: crate::codes::SelfDualReport,
}

pub fn selfdual_family() -> Result<SelfDualFamily> {
    let group = make_group(GroupSpec::parse("C4xC2")?)?;
    let ring = RingSpec::gf(2).unwrap();
    let element = crate::groupring::parse_element("1 + h*a + h*a^2 + h*a^3", &group, ring)?;
    let report = crate::codes::is_self_dual(&element)?;
    assert!(report.self_check && report.transpose_annihilates && report.rank == 4);
    let basis = greedy_basis(&element)?;
    let code = zero_divisor_code(&element, &basis, Side::Right)?;
    Ok(SelfDualFamily { element, code, report })
}

/// Plan for a regular (j,k) QC-LDPC code over GF(2)(G x H): one base-group
/// element f(h) per label h, and j selected block-rows.
#[derive(Debug, Clone)]
pub struct LdpcPlan {
    /// Base group G of order m (block size).
    pub base: GroupSpec,
    /// Label group H of order k (blocks per side).
    pub labels: GroupSpec,
    /// f: H -> G by listing index, length k; need not be injective.
    pub assignment: Vec<usize>,
    /// Sorted distinct H listing indices, length j.
    pub block_rows: Vec<usize>,
    /// Seed recorded for reproducibility headers.
    pub seed: Option<u64>,
}

impl LdpcPlan {
    /// Draws the assignment and block rows from a seeded generator.
    pub fn seeded(base: GroupSpec, labels: GroupSpec, j: usize, seed: u64) -> Result<LdpcPlan> {
        let m = base.order();
        let k = labels.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let assignment: Vec<usize> = (0..k).map(|_| rng.gen_range(0..m)).collect();
        let mut all: Vec<usize> = (0..k).collect();
        for i in 0..j.min(k) {
            let t = rng.gen_range(i..k);
            all.swap(i, t);
        }
        let mut block_rows = all[..j.min(k)].to_vec();
        block_rows.sort_unstable();
        let plan = LdpcPlan { base, labels, assignment, block_rows, seed: Some(seed) };
        plan.validate()?;
        Ok(plan)
    }

    /// Returns (m, k, j) after checking k > j >= 1 and index ranges.
    /// (m > k keeps the check sparse but is not required for regularity.)
    pub fn validate(&self) -> Result<(usize, usize, usize)> {
        let m = self.base.order();
        let k = self.labels.order();
        let j = self.block_rows.len();
        if !(k > j && j >= 1) {
            return Err(Error::InvalidPlan(format!("need k > j >= 1, got k={k} j={j}")));
        }
        if self.assignment.len() != k {
            return Err(Error::InvalidPlan(format!(
                "assignment must list one G element per label: expected {k}, got {}",
                self.assignment.len()
            )));
        }
        if self.assignment.iter().any(|&g| g >= m) {
            return Err(Error::InvalidPlan("assignment index out of range".into()));
        }
        let mut sorted = self.block_rows.clone();
        sorted.dedup();
        if sorted.len() != j
            || self.block_rows.windows(2).any(|w| w[0] >= w[1])
            || self.block_rows.iter().any(|&s| s >= k)
        {
            return Err(Error::InvalidPlan("block rows must be sorted distinct H indices".into()));
        }
        Ok((m, k, j))
    }
}

/// A constructed QC-LDPC code: the full (j,k)-regular check matrix plus a
/// LinearCode whose check rows are an independent subset of it.
#[derive(Debug)]
pub struct QcLdpc {
    pub group: Arc<Group>,
    pub element: GroupRingElement,
    /// jm x km, k ones per row, j ones per column, permutation blocks.
    pub check: FieldMatrix,
    pub code: LinearCode,
    pub target_rate: f64,
    pub exact_rate: f64,
}

/// Builds v = sum over h of (f(h), h) in GF(2)(G x H), listed with H
/// slowest so sigma(v) is the k x k grid of m x m permutation blocks, and
/// selects the planned block-rows as the parity-check matrix.
pub fn qc_ldpc(plan: &LdpcPlan) -> Result<QcLdpc> {
    let (m, k, j) = plan.validate()?;
    let group = make_group(GroupSpec::Product(vec![plan.labels.clone(), plan.base.clone()]))?;
    let ring = RingSpec::gf(2).unwrap();
    let terms: Vec<(usize, i64)> =
        plan.assignment.iter().enumerate().map(|(h, &g)| (h * m + g, 1)).collect();
    let element = GroupRingElement::from_terms(group.clone(), ring, &terms)?;
    let sigma = sigma_field(&element)?;
    let selected: Vec<usize> =
        plan.block_rows.iter().flat_map(|&s| s * m..(s + 1) * m).collect();
    let check = sigma.select_rows(&selected);
    // regularity: k per row, j per column; every block a permutation matrix
    let n = k * m;
    for i in 0..check.rows() {
        assert_eq!(check.row_weight(i), k, "row weight k");
    }
    for c in 0..n {
        assert_eq!(check.col_weight(c), j, "column weight j");
    }
    for br in 0..j {
        for bc in 0..k {
            for i in 0..m {
                let w = (0..m).filter(|&t| check.get(br * m + i, bc * m + t) != 0).count();
                assert_eq!(w, 1, "block row weight");
            }
            for t in 0..m {
                let w = (0..m).filter(|&i| check.get(br * m + i, bc * m + t) != 0).count();
                assert_eq!(w, 1, "block column weight");
            }
        }
    }
    let generator = FieldMatrix::from_rows(2, &null_space(&check), n);
    let dim = generator.rows();
    let independent = RowBasis::greedy_rows(&check, 0..check.rows());
    let code_check = check.select_rows(&independent);
    let provenance = Provenance {
        element: element.clone(),
        basis: None,
        side: Side::Right,
        kind: CodeKind::CheckDerived,
        inverse: None,
        note: plan.seed.map(|s| format!("qc-ldpc plan seed {s}")),
    };
    let code = new_code(generator, code_check, provenance);
    let target_rate = 1.0 - j as f64 / k as f64;
    let exact_rate = dim as f64 / n as f64;
    assert!(exact_rate >= target_rate - 1e-12);
    Ok(QcLdpc { group, element, check, code, target_rate, exact_rate })
}

// LinearCode construction is crate-private; route through a helper so the
// constructions module can assemble codes it has already verified.
fn new_code(generator: FieldMatrix, check: FieldMatrix, provenance: Provenance) -> LinearCode {
    crate::codes::assemble_code(generator, check, provenance)
}

/// The sparse unit-derived LDPC family: check element
/// v = 1 + sum of g^{n-o} over the offsets, generator element u = v^{-1},
/// submodule spanned by every stride-th listing element.
#[derive(Debug)]
pub struct LdpcUnitExample {
    pub check_element: GroupRingElement,
    pub generator_element: GroupRingElement,
    pub code: LinearCode,
}

pub fn ldpc_unit_example(n: usize, offsets: &[usize], stride: usize) -> Result<LdpcUnitExample> {
    if stride < 2 {
        return Err(Error::InvalidArgument("stride must be at least 2".into()));
    }
    if offsets.is_empty() {
        return Err(Error::InvalidArgument("need at least one offset".into()));
    }
    let group = make_group(GroupSpec::Cyclic(n))?;
    let ring = RingSpec::gf(2).unwrap();
    let mut terms = vec![(0usize, 1i64)];
    for &o in offsets {
        if o == 0 || o >= n {
            return Err(Error::InvalidArgument(format!("offset {o} outside 1..{n}")));
        }
        terms.push((n - o, 1));
    }
    let check_element = GroupRingElement::from_terms(group.clone(), ring, &terms)?;
    let generator_element = euclid_inverse(&check_element)?;
    let indices: Vec<usize> = (0..n).step_by(stride).collect();
    let s = SubmoduleBasis::new(indices, n)?;
    let code = unit_code(&generator_element, &s, Side::Right)?;
    // every check row is a column of sigma(v): weight exactly wt(v)
    let w = check_element.weight();
    for i in 0..code.check().rows() {
        assert_eq!(code.check().row_weight(i), w);
    }
    Ok(LdpcUnitExample { check_element, generator_element, code })
}

//! Acceptance suite: one test per criterion, each printing a PASS line on
//! success (run with --nocapture to see them). The two `as_published`
//! criteria assert the published parameters for the element exactly as
//! printed and fail with a diagnostic carrying the computed values; see the
//! repository README for the discrepancy note.
//!
//! The long enumerations (criterion 4, and the n = 1000 half of criterion
//! 8) are #[ignore]d by default: `cargo test --release -- --ignored`.

use std::collections::HashSet;
use std::sync::Arc;

use grcodes::codes::{
    best_basis, check_code, check_elements, dual, enumerate_codewords, greedy_basis,
    is_ideal, min_distance, min_distance_of_rows, orthogonal_complement_brute, unit_code,
    zero_divisor_code, CheckModule, DistanceOptions, LinearCode, Side, SubmoduleBasis,
};
use grcodes::constructions::{
    cyclic_code, dihedral_blocks, dihedral_double, euclid_inverse, ldpc_unit_example, qc_ldpc,
    BlockVerdict, LdpcPlan,
};
use grcodes::groupring::{parse_element, GroupRingElement, RingSpec};
use grcodes::groups::{make_group, Group, GroupSpec};
use grcodes::rgmatrix::{classify, row_space_eq, sigma_field, Classification, FieldMatrix};
use num::Zero as _;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn gf2() -> RingSpec {
    RingSpec::gf(2).unwrap()
}

fn gf(p: u16) -> RingSpec {
    RingSpec::gf(p).unwrap()
}

fn grp(text: &str) -> Arc<Group> {
    make_group(GroupSpec::parse(text).unwrap()).unwrap()
}

fn cyclic_elem(text: &str, n: usize) -> GroupRingElement {
    parse_element(text, &grp(&format!("C{n}")), gf2()).unwrap()
}

fn rand_elem(g: &Arc<Group>, p: u16, rng: &mut StdRng) -> GroupRingElement {
    let terms: Vec<(usize, i64)> =
        (0..g.order()).map(|i| (i, rng.gen_range(0..p as i64))).collect();
    GroupRingElement::from_terms(g.clone(), gf(p), &terms).unwrap()
}

fn nonzero_rand_elem(g: &Arc<Group>, p: u16, rng: &mut StdRng) -> GroupRingElement {
    loop {
        let e = rand_elem(g, p, rng);
        if !e.is_zero() {
            return e;
        }
    }
}

fn exact(code: &mut LinearCode) -> usize {
    min_distance(code, &DistanceOptions::default()).unwrap()
}

/// Independent membership oracle: y is in the row space of gen iff adjoining
/// it does not raise the rank.
fn in_row_space(gen: &FieldMatrix, y: &[u16]) -> bool {
    let stacked = gen.vstack(&FieldMatrix::from_rows(gen.p(), &[y.to_vec()], gen.cols()));
    stacked.rank() == gen.rank()
}

#[test]
fn acceptance_1_self_dual_8_4_4() {
    let g = grp("C4xC2");
    let u = parse_element("1 + h*a + h*a^2 + h*a^3", &g, gf2()).unwrap();
    assert!(u.mul(&u).unwrap().is_zero(), "u^2 = 0");
    assert!(u.mul(&u.transpose()).unwrap().is_zero(), "u u^T = 0");
    assert_eq!(sigma_field(&u).unwrap().rank(), 4, "rank sigma(u) = 4");
    let s = greedy_basis(&u).unwrap();
    let mut code = zero_divisor_code(&u, &s, Side::Right).unwrap();
    assert_eq!(exact(&mut code), 4, "exact distance 4");
    assert_eq!(enumerate_codewords(&code).len(), 16, "16 codewords");
    let d = dual(&code).unwrap();
    assert!(row_space_eq(d.generator(), code.generator()), "dual row space = code row space");
    println!("ACCEPTANCE 1 PASS: (8,4,4) self-dual code verified exactly");
}

#[test]
fn acceptance_2_hamming_7_4_3_as_published() {
    // Published parameters for cyclic_code(1 + x^2 + x^5, n = 7): k = 4,
    // d = 3. The element is actually coprime to x^7 - 1 (it is a unit), so
    // the computed code is the full (7,7,1) space; this criterion records
    // the discrepancy by failing honestly.
    let h = cyclic_elem("1+g^2+g^5", 7);
    let mut cc = cyclic_code(&h).unwrap();
    assert!(cc.code.generator().mul(&cc.code.check().transpose()).is_zero());
    let d = exact(&mut cc.code);
    let (n, k) = (cc.code.n(), cc.code.k());
    assert_eq!(
        (k, d),
        (4, 3),
        "ACCEPTANCE 2 FAIL: cyclic_code(1+g^2+g^5) gives a ({n},{k},{d}) code, not (7,4,3): \
         gcd(1+x^2+x^5, x^7+1) = 1 so the element is a unit; the rank-4 generator 1+g+g^3 \
         does produce Hamming (7,4,3)"
    );
    println!("ACCEPTANCE 2 PASS: Hamming (7,4,3) from 1+g^2+g^5");
}

#[test]
fn acceptance_3a_dihedral_double_14_7_4_as_published() {
    // Published parameters for the double of 1+b^2+b^5: (14,7,4) with 128
    // codewords. The element is a symmetric unit, so u^{-1}(u+au) = 1+a is
    // a weight-2 codeword; recorded by failing honestly.
    let u = cyclic_elem("1+g^2+g^5", 7);
    let one = GroupRingElement::one(u.group().clone(), gf2());
    let mut doubled = dihedral_double(&u, &one, &one).unwrap();
    assert_eq!(doubled.code.k(), 7, "rank of the doubled element is 7");
    assert_eq!(enumerate_codewords(&doubled.code).len(), 128, "128 codewords");
    let d = exact(&mut doubled.code);
    assert_eq!(
        d, 4,
        "ACCEPTANCE 3a FAIL: the double of 1+b^2+b^5 has exact distance {d}, not 4: the \
         element is a symmetric unit so 1+a (weight 2) is a codeword; doubling the rank-4 \
         element 1+b+b^3 does give (14,7,4)"
    );
    println!("ACCEPTANCE 3a PASS: (14,7,4) from the double of 1+b^2+b^5");
}

#[test]
fn acceptance_3b_dihedral_double_24_11_8() {
    let u = cyclic_elem("1+g^2+g^3+g^9+g^10+g^11", 12);
    let one = GroupRingElement::one(u.group().clone(), gf2());
    let mut doubled = dihedral_double(&u, &one, &one).unwrap();
    assert_eq!((doubled.code.n(), doubled.code.k()), (24, 11));
    assert_eq!(enumerate_codewords(&doubled.code).len(), 2048, "2048 codewords");
    assert_eq!(exact(&mut doubled.code), 8, "exact distance 8");
    println!("ACCEPTANCE 3b PASS: (24,11,8) from the double of 1+b^2+b^3+b^9+b^10+b^11");
}

#[test]
#[ignore = "extended: 2^30 Gray-code enumeration"]
fn acceptance_4_dihedral_double_62_30_12() {
    let u = cyclic_elem(
        "1+g+g^6+g^9+g^10+g^14+g^15+g^16+g^17+g^19+g^20+g^21+g^22+g^23+g^25+g^27",
        31,
    );
    let one = GroupRingElement::one(u.group().clone(), gf2());
    let mut doubled = dihedral_double(&u, &one, &one).unwrap();
    assert_eq!(doubled.code.k(), 30, "rank 30");
    let threads = std::thread::available_parallelism().map(|v| v.get()).unwrap_or(1);
    let d = min_distance(&mut doubled.code, &DistanceOptions { cap_bits: 36, threads }).unwrap();
    assert_eq!(d, 12, "exact distance 12 by 2^30 enumeration");
    println!("ACCEPTANCE 4 PASS: (62,30,12) verified by exact enumeration");
}

#[test]
fn acceptance_5_orthogonal_unit_best_basis() {
    let u = cyclic_elem("1+g^2+g^5+g^9+g^12", 14);
    assert!(u.mul(&u).unwrap().is_one(), "u^2 = 1 exactly");
    assert!(u.mul(&u.transpose()).unwrap().is_one(), "u u^T = 1 exactly");
    match classify(&u).unwrap() {
        Classification::Unit { inverse } => assert_eq!(inverse, u, "self-inverse"),
        other => panic!("u14 must classify as a unit, got {other:?}"),
    }
    let result = best_basis(&u, 7, 3432, 0).unwrap();
    assert!(result.exhaustive, "C(14,7) = 3432 subsets searched exhaustively");
    assert_eq!(
        result.distance, 4,
        "no |S| = 7 basis reaches distance 4; best achieved {}",
        result.distance
    );
    println!(
        "ACCEPTANCE 5 PASS: (14,7,4) via exhaustive best basis, S = {:?}",
        result.basis.indices()
    );
}

#[test]
fn acceptance_6_qc_ldpc_regularity() {
    let labels =
        [GroupSpec::Cyclic(3), GroupSpec::Cyclic(4), GroupSpec::parse("C3xC2").unwrap()];
    let mut ran = 0;
    let mut seed = 0u64;
    'outer: loop {
        for m in [5usize, 7, 11] {
            for h in &labels {
                for j in [2usize, 3] {
                    let k = h.order();
                    if j >= k {
                        continue;
                    }
                    let plan =
                        LdpcPlan::seeded(GroupSpec::Cyclic(m), h.clone(), j, seed).unwrap();
                    seed += 1;
                    let out = qc_ldpc(&plan).unwrap();
                    // (j,k)-regularity, explicitly
                    for i in 0..out.check.rows() {
                        assert_eq!(out.check.row_weight(i), k, "row weight k");
                    }
                    for c in 0..out.check.cols() {
                        assert_eq!(out.check.col_weight(c), j, "column weight j");
                    }
                    // every m x m block is a permutation matrix
                    for br in 0..j {
                        for bc in 0..k {
                            for t in 0..m {
                                let rw = (0..m)
                                    .filter(|&c| out.check.get(br * m + t, bc * m + c) != 0)
                                    .count();
                                let cw = (0..m)
                                    .filter(|&r| out.check.get(br * m + r, bc * m + t) != 0)
                                    .count();
                                assert_eq!((rw, cw), (1, 1), "permutation block");
                            }
                        }
                    }
                    assert!(out.exact_rate >= out.target_rate - 1e-12, "rate >= 1 - j/k");
                    ran += 1;
                    if ran == 20 {
                        break 'outer;
                    }
                }
            }
        }
    }
    println!("ACCEPTANCE 6 PASS: 20 seeded QC-LDPC plans exactly (j,k)-regular");
}

#[test]
fn acceptance_8_ldpc_unit_example_n100() {
    let out = ldpc_unit_example(100, &[1, 3, 8, 12], 2).unwrap();
    // unit by Euclid with verified inverse
    let v = &out.check_element;
    let u = &out.generator_element;
    assert_eq!(euclid_inverse(v).unwrap(), *u);
    assert!(v.mul(u).unwrap().is_one(), "v * v^{{-1}} = 1");
    for i in 0..out.code.check().rows() {
        assert_eq!(out.code.check().row_weight(i), 5, "check rows weight 5");
    }
    println!("ACCEPTANCE 8 PASS: n = 100 LDPC unit example verified");
}

#[test]
#[ignore = "extended: n = 1000 original with the 481-term inverse"]
fn acceptance_8_extended_ldpc_unit_example_n1000() {
    let out = ldpc_unit_example(1000, &[1, 3, 8, 12], 2).unwrap();
    assert_eq!(out.generator_element.weight(), 481, "weight(u) = 481");
    assert!(out.generator_element.mul(&out.check_element).unwrap().is_one());
    println!("ACCEPTANCE 8-extended PASS: n = 1000 generator element has 481 terms");
}

// ---------------------------------------------------------------------------
// Criterion 7: property suites, >= 100 randomized cases each, fixed seeds.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_7a_sigma_homomorphism_and_transpose() {
    let mut rng = StdRng::seed_from_u64(701);
    let mut cases = 0;
    for gt in ["C7", "C16", "D8", "D16", "C4xC2", "E2^3"] {
        let g = grp(gt);
        for p in [2u16, 3] {
            for _ in 0..10 {
                let u = rand_elem(&g, p, &mut rng);
                let v = rand_elem(&g, p, &mut rng);
                let su = sigma_field(&u).unwrap();
                let sv = sigma_field(&v).unwrap();
                assert_eq!(sigma_field(&u.mul(&v).unwrap()).unwrap(), su.mul(&sv));
                assert_eq!(sigma_field(&u.add(&v).unwrap()).unwrap(), su.add(&sv));
                assert_eq!(sigma_field(&u.transpose()).unwrap(), su.transpose());
                cases += 1;
            }
        }
    }
    assert!(cases >= 100, "ran {cases} cases");
    println!("ACCEPTANCE 7a PASS: sigma homomorphism + transpose, {cases} cases");
}

#[test]
fn acceptance_7b_dichotomy() {
    let mut rng = StdRng::seed_from_u64(702);
    let mut cases = 0;
    for gt in ["C6", "C12", "D6", "D12", "C4xC2", "E2^3"] {
        let g = grp(gt);
        for p in [2u16, 3] {
            for _ in 0..10 {
                let u = nonzero_rand_elem(&g, p, &mut rng);
                match classify(&u).unwrap() {
                    Classification::Unit { inverse } => {
                        assert!(u.mul(&inverse).unwrap().is_one());
                        assert!(inverse.mul(&u).unwrap().is_one());
                    }
                    Classification::ZeroDivisor { witness } => {
                        assert!(!witness.is_zero());
                        assert!(u.mul(&witness).unwrap().is_zero());
                    }
                    Classification::Neither { .. } => {
                        panic!("Neither must not occur over a prime field")
                    }
                }
                cases += 1;
            }
        }
    }
    assert!(cases >= 100, "ran {cases} cases");
    println!("ACCEPTANCE 7b PASS: unit/zero-divisor dichotomy, {cases} cases");
}

#[test]
fn acceptance_7c_membership_iff_principal_annihilation() {
    let mut rng = StdRng::seed_from_u64(703);
    let mut cases = 0;
    for n in [7usize, 8] {
        let g = grp(&format!("C{n}"));
        while cases < if n == 7 { 50 } else { 100 } {
            let u = nonzero_rand_elem(&g, 2, &mut rng);
            if classify(&u).unwrap().is_unit() {
                continue;
            }
            let s = greedy_basis(&u).unwrap();
            let code = zero_divisor_code(&u, &s, Side::Right).unwrap();
            let v = check_elements(&u).unwrap().principal.expect("cyclic principal");
            let sv = sigma_field(&v).unwrap();
            for y in 0u32..1 << n {
                let word: Vec<u16> = (0..n).map(|i| ((y >> i) & 1) as u16).collect();
                let annihilates =
                    FieldMatrix::from_rows(2, std::slice::from_ref(&word), n).mul(&sv).is_zero();
                assert_eq!(
                    in_row_space(code.generator(), &word),
                    annihilates,
                    "n={n} y={y:b}"
                );
            }
            cases += 1;
        }
    }
    println!("ACCEPTANCE 7c PASS: membership iff y*sigma(v) = 0, {cases} elements fully enumerated");
}

#[test]
fn acceptance_7d_dual_equals_brute_force_complement() {
    let mut rng = StdRng::seed_from_u64(704);
    let mut cases = 0;
    let groups = ["C6", "C8", "D6", "C4xC2", "C14", "E2^3"];
    while cases < 100 {
        let gt = groups[rng.gen_range(0..groups.len())];
        let g = grp(gt);
        let n = g.order();
        let u = nonzero_rand_elem(&g, 2, &mut rng);
        let code = match classify(&u).unwrap() {
            Classification::Unit { .. } => {
                let r = rng.gen_range(1..n);
                let s = SubmoduleBasis::first(r, n).unwrap();
                unit_code(&u, &s, Side::Right).unwrap()
            }
            Classification::ZeroDivisor { .. } => {
                let full = greedy_basis(&u).unwrap();
                if rng.gen_bool(0.5) || full.len() == 1 {
                    zero_divisor_code(&u, &full, Side::Right).unwrap()
                } else {
                    let s = rng.gen_range(1..full.len());
                    let sub =
                        SubmoduleBasis::new(full.indices()[..s].to_vec(), n).unwrap();
                    zero_divisor_code(&u, &sub, Side::Right).unwrap()
                }
            }
            Classification::Neither { .. } => unreachable!(),
        };
        let d = dual(&code).unwrap();
        // brute-force complement: every vector orthogonal to all rows
        let k = code.k();
        let gen = code.generator();
        let mut brute: HashSet<Vec<u16>> = HashSet::new();
        for y in 0u32..1 << n {
            let word: Vec<u16> = (0..n).map(|i| ((y >> i) & 1) as u16).collect();
            let orthogonal = (0..k).all(|i| {
                let dot: u32 = (0..n).map(|j| gen.get(i, j) as u32 * word[j] as u32).sum();
                dot.is_multiple_of(2)
            });
            if orthogonal {
                brute.insert(word);
            }
        }
        let dual_words: HashSet<Vec<u16>> = enumerate_codewords(&d).into_iter().collect();
        assert_eq!(dual_words, brute, "group {gt}");
        cases += 1;
    }
    println!("ACCEPTANCE 7d PASS: dual = brute-force complement, {cases} cases");
}

#[test]
fn acceptance_7e_ideal_criterion_both_directions() {
    let mut rng = StdRng::seed_from_u64(705);
    let mut cases = 0;
    let g = grp("C8");
    while cases < 100 {
        let u = nonzero_rand_elem(&g, 2, &mut rng);
        if classify(&u).unwrap().is_unit() {
            continue;
        }
        let full = greedy_basis(&u).unwrap();
        let s = if rng.gen_bool(0.5) || full.len() == 1 {
            full.clone()
        } else {
            let keep = rng.gen_range(1..full.len());
            SubmoduleBasis::new(full.indices()[..keep].to_vec(), 8).unwrap()
        };
        let code = zero_divisor_code(&u, &s, Side::Right).unwrap();
        // closure test: g*c stays in the code for every group element and
        // every spanning codeword
        let mut closed = true;
        'outer: for gi in 0..8 {
            let gelem = GroupRingElement::from_support(g.clone(), gf2(), &[gi]).unwrap();
            for &k in s.indices() {
                let xk = GroupRingElement::from_support(g.clone(), gf2(), &[k]).unwrap();
                let c = xk.mul(&u).unwrap();
                let gc = gelem.mul(&c).unwrap();
                let word: Vec<u16> = (0..8).map(|i| gc.coeff(i)).collect();
                if !in_row_space(code.generator(), &word) {
                    closed = false;
                    break 'outer;
                }
            }
        }
        assert_eq!(is_ideal(&u, &s).unwrap(), closed, "u = {u}, S = {:?}", s.indices());
        cases += 1;
    }
    println!("ACCEPTANCE 7e PASS: ideal criterion both directions, {cases} cases");
}

#[test]
fn acceptance_7f_cyclic_and_dihedral_rank_theorems() {
    let mut rng = StdRng::seed_from_u64(706);
    let mut cases = 0;
    // cyclic: the first dependence index of {u, gu, g^2 u, ...} is the rank
    for n in [7usize, 11, 16] {
        let g = grp(&format!("C{n}"));
        for _ in 0..34 {
            let u = nonzero_rand_elem(&g, 2, &mut rng);
            let m = sigma_field(&u).unwrap();
            let rank = m.rank();
            let mut prefix_rank = 0;
            for r in 1..=n {
                let sel: Vec<usize> = (0..r).collect();
                if m.select_rows(&sel).rank() == r {
                    prefix_rank = r;
                } else {
                    break;
                }
            }
            assert_eq!(prefix_rank, rank, "C{n}: u = {u}");
            cases += 1;
        }
    }
    // dihedral: rotation prefix then reflection prefix reaches the rank
    for half in [4usize, 6, 8] {
        let g = grp(&format!("D{}", 2 * half));
        let n = 2 * half;
        for _ in 0..34 {
            let u = nonzero_rand_elem(&g, 2, &mut rng);
            let m = sigma_field(&u).unwrap();
            let rank = m.rank();
            let s = greedy_basis(&u).unwrap();
            assert_eq!(s.len(), rank);
            // prefix-of-rotations then prefix-of-reflections shape
            let rotations: Vec<usize> =
                s.indices().iter().copied().filter(|&i| i < half).collect();
            let reflections: Vec<usize> =
                s.indices().iter().copied().filter(|&i| i >= half).collect();
            assert!(
                rotations.iter().copied().eq(0..rotations.len()),
                "rotation part is a prefix: {:?} (D{n}, u = {u})",
                s.indices()
            );
            assert!(
                reflections.iter().copied().eq(half..half + reflections.len()),
                "reflection part is a prefix: {:?} (D{n}, u = {u})",
                s.indices()
            );
            cases += 1;
        }
    }
    assert!(cases >= 100, "ran {cases}");
    println!("ACCEPTANCE 7f PASS: cyclic + dihedral rank theorems, {cases} cases");
}

#[test]
fn acceptance_7g_cyclic_rank_sum() {
    let mut rng = StdRng::seed_from_u64(707);
    let mut cases = 0;
    for n in [6usize, 9, 12, 15] {
        let g = grp(&format!("C{n}"));
        for _ in 0..26 {
            let h = nonzero_rand_elem(&g, 2, &mut rng);
            let cc = cyclic_code(&h).unwrap();
            let d_elem = cc.pair.generator.to_element(g.clone(), gf2()).unwrap();
            let p_elem = cc.pair.check.to_element(g.clone(), gf2()).unwrap();
            let rank_d = sigma_field(&d_elem).unwrap().rank();
            let rank_p = if p_elem.is_zero() {
                0
            } else {
                sigma_field(&p_elem).unwrap().rank()
            };
            assert_eq!(rank_d + rank_p, n, "C{n}: h = {h}");
            cases += 1;
        }
    }
    assert!(cases >= 100, "ran {cases}");
    println!("ACCEPTANCE 7g PASS: rank sigma(d) + rank sigma(p) = n, {cases} cases");
}

#[test]
fn acceptance_7h_shortened_check_vs_brute_force() {
    let mut rng = StdRng::seed_from_u64(708);
    let mut cases = 0;
    let groups = ["C8", "C10", "D6", "C12"];
    while cases < 100 {
        let gt = groups[rng.gen_range(0..groups.len())];
        let g = grp(gt);
        let n = g.order();
        let u = nonzero_rand_elem(&g, 2, &mut rng);
        let full = greedy_basis(&u).unwrap();
        if full.len() < 2 {
            continue;
        }
        let keep = rng.gen_range(1..full.len());
        let s = SubmoduleBasis::new(full.indices()[..keep].to_vec(), n).unwrap();
        let code = zero_divisor_code(&u, &s, Side::Right).unwrap();
        assert_eq!(code.check().rank(), n - keep, "check rank n - s");
        assert!(code.generator().mul(&code.check().transpose()).is_zero());
        // row space of the check equals the brute-force null space of the
        // generator
        let brute = orthogonal_complement_brute(code.generator());
        assert!(row_space_eq(code.check(), &brute), "{gt}: u = {u}");
        cases += 1;
    }
    println!("ACCEPTANCE 7h PASS: shortened check construction, {cases} cases");
}

#[test]
fn acceptance_7i_dihedral_block_criterion_gf3_and_z() {
    let mut rng = StdRng::seed_from_u64(709);
    let mut cases = 0;
    // GF(3): criterion matches the rank-based unit test
    for half in [3usize, 5] {
        let g = grp(&format!("D{}", 2 * half));
        for _ in 0..30 {
            let u = nonzero_rand_elem(&g, 3, &mut rng);
            let blocks = dihedral_blocks(&u).unwrap();
            assert!(blocks.via_block_criterion);
            let full = sigma_field(&u).unwrap().rank() == 2 * half;
            assert_eq!(blocks.verdict == BlockVerdict::Unit, full);
            cases += 1;
        }
    }
    // Z: verdict agrees with the determinant of sigma(u)
    let g = grp("D6");
    let z = RingSpec::integers();
    for _ in 0..40 {
        let terms: Vec<(usize, i64)> = (0..6).map(|i| (i, rng.gen_range(-2..=2))).collect();
        let u = GroupRingElement::from_terms(g.clone(), z, &terms).unwrap();
        if u.is_zero() {
            continue;
        }
        use num::Signed;
        let det = grcodes::rg_matrix(&u).det_integer().unwrap();
        let expect = if det.is_zero() {
            BlockVerdict::ZeroDivisor
        } else if det.abs() == num::BigInt::from(1) {
            BlockVerdict::Unit
        } else {
            BlockVerdict::Neither
        };
        assert_eq!(dihedral_blocks(&u).unwrap().verdict, expect);
        cases += 1;
    }
    assert!(cases >= 100, "ran {cases}");
    println!("ACCEPTANCE 7i PASS: A+B / A-B criterion vs rank and determinant, {cases} cases");
}

// A supporting check used by criterion 7c/7d machinery: check_code over
// a restricted module agrees with direct enumeration.
#[test]
fn acceptance_7j_check_code_general_module() {
    let mut rng = StdRng::seed_from_u64(710);
    let g = grp("C8");
    let mut cases = 0;
    while cases < 30 {
        let v = nonzero_rand_elem(&g, 2, &mut rng);
        if classify(&v).unwrap().is_unit() {
            continue;
        }
        let size = rng.gen_range(2..8);
        let mut idx: Vec<usize> = (0..8).collect();
        for i in 0..size {
            let j = rng.gen_range(i..8);
            idx.swap(i, j);
        }
        let mut sel = idx[..size].to_vec();
        sel.sort_unstable();
        let t = SubmoduleBasis::new(sel, 8).unwrap();
        let code = check_code(&v, CheckModule::Basis(t.clone())).unwrap();
        let sv = sigma_field(&v).unwrap();
        // enumerate the truth: words supported on T with word * sigma(v) = 0
        let mut truth: HashSet<Vec<u16>> = HashSet::new();
        for y in 0u32..256 {
            let word: Vec<u16> = (0..8).map(|i| ((y >> i) & 1) as u16).collect();
            let supported = (0..8).all(|i| word[i] == 0 || t.indices().contains(&i));
            if !supported {
                continue;
            }
            if FieldMatrix::from_rows(2, std::slice::from_ref(&word), 8).mul(&sv).is_zero() {
                truth.insert(word);
            }
        }
        let got: HashSet<Vec<u16>> = enumerate_codewords(&code).into_iter().collect();
        assert_eq!(got, truth);
        cases += 1;
    }
    println!("ACCEPTANCE 7j PASS: restricted check codes match enumeration, {cases} cases");
}

#[test]
fn acceptance_distance_engine_gray_vs_naive() {
    // part of criterion 7's support: the Gray-code engine agrees with naive
    // re-encoding for k <= 12 on random codes
    let mut rng = StdRng::seed_from_u64(711);
    let mut cases = 0;
    while cases < 100 {
        let p = if rng.gen_bool(0.7) { 2u16 } else { 3 };
        let k = rng.gen_range(1..8usize);
        let n = rng.gen_range(k..14usize);
        let mut m = FieldMatrix::zeros(p, k, n);
        for i in 0..k {
            for j in 0..n {
                m.set(i, j, rng.gen_range(0..p));
            }
        }
        if m.rank() < k {
            continue;
        }
        let fast = min_distance_of_rows(&m, &DistanceOptions::default()).unwrap();
        let mut naive = usize::MAX;
        let total = (p as u64).pow(k as u32);
        for msg in 1..total {
            let mut digits = vec![0u16; k];
            let mut c = msg;
            for d in digits.iter_mut() {
                *d = (c % p as u64) as u16;
                c /= p as u64;
            }
            let mut w = 0;
            for j in 0..n {
                let acc: u32 =
                    (0..k).map(|i| digits[i] as u32 * m.get(i, j) as u32).sum();
                if !acc.is_multiple_of(p as u32) {
                    w += 1;
                }
            }
            naive = naive.min(w);
        }
        assert_eq!(fast, naive);
        cases += 1;
    }
    println!("ACCEPTANCE distance-engine PASS: Gray-code = naive re-encoding, {cases} cases");
}

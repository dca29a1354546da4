//! Exact minimum distance by exhaustive message enumeration, plus the
//! sampling upper-bound estimator and the best-basis search.
//!
//! Over GF(2) messages are visited in Gray-code order so each step is one
//! row XOR; the counter space is split into contiguous ranges per worker and
//! reduced by min, so the result is identical for any thread count.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;
use crate::rgmatrix::{sigma_field, FieldMatrix, RowBasis};

use super::{LinearCode, SubmoduleBasis};

/// Default cap: exact enumeration up to 2^36 messages.
pub const DEFAULT_CAP_BITS: u32 = 36;

#[derive(Debug, Clone, Copy)]
pub struct DistanceOptions {
    /// Exact enumeration is refused beyond 2^cap_bits messages.
    pub cap_bits: u32,
    pub threads: usize,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions { cap_bits: DEFAULT_CAP_BITS, threads: 1 }
    }
}

/// Exact minimum Hamming weight over the nonzero row space of `gen`.
/// Requires independent rows (callers constructing codes guarantee it).
pub fn min_distance_of_rows(gen: &FieldMatrix, opts: &DistanceOptions) -> Result<usize> {
    let k = gen.rows();
    if k == 0 {
        return Err(Error::InvalidArgument("distance of a zero-dimensional code".into()));
    }
    let p = gen.p() as u128;
    let space = p.checked_pow(k as u32).filter(|&s| s <= 1u128 << opts.cap_bits);
    if space.is_none() {
        return Err(Error::DistanceCapExceeded {
            space: format!("{p}^{k}"),
            cap_bits: opts.cap_bits,
        });
    }
    let total = space.unwrap() - 1; // nonzero messages
    let threads = opts.threads.clamp(1, 64);
    match gen {
        FieldMatrix::F2(_) => Ok(min_distance_gf2(gen, total, threads)),
        FieldMatrix::Fp(_) => Ok(min_distance_fp(gen, total, threads)),
    }
}

/// Exact minimum distance, cached on the code.
pub fn min_distance(code: &mut LinearCode, opts: &DistanceOptions) -> Result<usize> {
    if let Some(d) = code.cached_distance() {
        return Ok(d);
    }
    let d = min_distance_of_rows(code.generator(), opts)?;
    code.set_cached_distance(d);
    Ok(d)
}

fn chunk_bounds(total: u128, threads: usize) -> Vec<(u128, u128)> {
    let t = threads as u128;
    (0..threads)
        .map(|i| {
            let lo = 1 + total * i as u128 / t;
            let hi = 1 + total * (i as u128 + 1) / t;
            (lo, hi)
        })
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn min_distance_gf2(gen: &FieldMatrix, total: u128, threads: usize) -> usize {
    let FieldMatrix::F2(bm) = gen else { unreachable!() };
    let k = bm.rows();
    let words = bm.row(0).len();
    let rows: Vec<Vec<u64>> = (0..k).map(|i| bm.row(i).to_vec()).collect();
    let chunks = chunk_bounds(total, threads);
    let run = |lo: u128, hi: u128| -> usize {
        // state at counter c is the codeword of the Gray code of c
        let start_gray = (lo - 1) ^ ((lo - 1) >> 1);
        if words == 1 {
            let mut cw = 0u64;
            for (i, row) in rows.iter().enumerate() {
                if start_gray >> i & 1 == 1 {
                    cw ^= row[0];
                }
            }
            let mut best = usize::MAX;
            for c in lo..hi {
                cw ^= rows[c.trailing_zeros() as usize][0];
                let w = cw.count_ones() as usize;
                if w < best {
                    best = w;
                }
            }
            best
        } else {
            let mut cw = vec![0u64; words];
            for (i, row) in rows.iter().enumerate() {
                if start_gray >> i & 1 == 1 {
                    for (a, b) in cw.iter_mut().zip(row) {
                        *a ^= b;
                    }
                }
            }
            let mut best = usize::MAX;
            for c in lo..hi {
                let row = &rows[c.trailing_zeros() as usize];
                let mut w = 0usize;
                for (a, b) in cw.iter_mut().zip(row) {
                    *a ^= b;
                    w += a.count_ones() as usize;
                }
                if w < best {
                    best = w;
                }
            }
            best
        }
    };
    if chunks.len() == 1 {
        let (lo, hi) = chunks[0];
        return run(lo, hi);
    }
    std::thread::scope(|s| {
        let handles: Vec<_> =
            chunks.iter().map(|&(lo, hi)| s.spawn(move || run(lo, hi))).collect();
        handles.into_iter().map(|h| h.join().expect("distance worker")).min().unwrap()
    })
}

fn min_distance_fp(gen: &FieldMatrix, total: u128, threads: usize) -> usize {
    let p = gen.p();
    let k = gen.rows();
    let n = gen.cols();
    let rows: Vec<Vec<u16>> = (0..k).map(|i| gen.row_vec(i)).collect();
    let chunks = chunk_bounds(total, threads);
    let run = |lo: u128, hi: u128| -> usize {
        // base-p odometer: each counter increment adds one generator row
        // per carried digit
        let mut digits = vec![0u16; k];
        let mut c = lo;
        for d in digits.iter_mut() {
            *d = (c % p as u128) as u16;
            c /= p as u128;
        }
        let mut cw = vec![0u32; n];
        for (i, &d) in digits.iter().enumerate() {
            if d != 0 {
                for (a, b) in cw.iter_mut().zip(&rows[i]) {
                    *a = (*a + d as u32 * *b as u32) % p as u32;
                }
            }
        }
        let weigh = |cw: &[u32]| cw.iter().filter(|&&v| v != 0).count();
        let mut best = weigh(&cw);
        for _ in lo + 1..hi {
            let mut pos = 0;
            loop {
                for (a, b) in cw.iter_mut().zip(&rows[pos]) {
                    *a = (*a + *b as u32) % p as u32;
                }
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            let w = weigh(&cw);
            if w < best {
                best = w;
            }
        }
        best
    };
    if chunks.len() == 1 {
        let (lo, hi) = chunks[0];
        return run(lo, hi);
    }
    std::thread::scope(|s| {
        let handles: Vec<_> =
            chunks.iter().map(|&(lo, hi)| s.spawn(move || run(lo, hi))).collect();
        handles.into_iter().map(|h| h.join().expect("distance worker")).min().unwrap()
    })
}

/// Randomized upper bound on the distance: the minimum weight over `samples`
/// random nonzero messages. Clearly labeled an upper bound by its name; use
/// when the dimension exceeds the exact-enumeration cap.
pub fn distance_upper_bound(code: &LinearCode, samples: u64, seed: u64) -> usize {
    let gen = code.generator();
    let p = gen.p();
    let k = code.k();
    let n = code.n();
    assert!(k > 0, "estimator needs a positive-dimensional code");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = usize::MAX;
    for _ in 0..samples {
        let mut msg: Vec<u16> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if msg.iter().all(|&d| d == 0) {
            msg[rng.gen_range(0..k)] = rng.gen_range(1..p.max(2));
        }
        let mut cw = vec![0u32; n];
        for (i, &d) in msg.iter().enumerate() {
            if d != 0 {
                for j in 0..n {
                    cw[j] = (cw[j] + d as u32 * gen.get(i, j) as u32) % p as u32;
                }
            }
        }
        let w = cw.iter().filter(|&&v| v != 0).count();
        if w < best {
            best = w;
        }
    }
    best
}

/// Outcome of a best-basis search.
#[derive(Debug, Clone)]
pub struct BestBasisResult {
    pub basis: SubmoduleBasis,
    pub distance: usize,
    /// True when every |S| = r subset was evaluated.
    pub exhaustive: bool,
    pub evaluated: u64,
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..r.min(n - r) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// argmax over bases S of size r of the exact distance of the code spanned
/// by the S rows of sigma(u). Exhaustive when C(n,r) fits the budget;
/// otherwise steepest-ascent over single-index swaps with seeded random
/// restarts until the budget runs out. Dependent row sets are skipped.
pub fn best_basis(
    u: &GroupRingElement,
    r: usize,
    budget: u64,
    seed: u64,
) -> Result<BestBasisResult> {
    let m = sigma_field(u)?;
    let n = m.cols();
    if r == 0 || r >= n {
        return Err(Error::InvalidBasis(format!("best-basis size {r} out of range for n = {n}")));
    }
    let opts = DistanceOptions::default();
    let mut evaluated = 0u64;
    let eval = |indices: &[usize], evaluated: &mut u64| -> Result<Option<usize>> {
        *evaluated += 1;
        let rows = m.select_rows(indices);
        if rows.rank() < r {
            return Ok(None);
        }
        Ok(Some(min_distance_of_rows(&rows, &opts)?))
    };

    if binomial(n, r) <= budget as u128 {
        let mut best: Option<(Vec<usize>, usize)> = None;
        for combo in (0..n).combinations(r) {
            if let Some(d) = eval(&combo, &mut evaluated)? {
                if best.as_ref().map(|(_, bd)| d > *bd).unwrap_or(true) {
                    best = Some((combo, d));
                }
            }
        }
        let (indices, distance) =
            best.ok_or_else(|| Error::InvalidBasis("no independent basis of that size".into()))?;
        return Ok(BestBasisResult {
            basis: SubmoduleBasis::new(indices, n)?,
            distance,
            exhaustive: true,
            evaluated,
        });
    }

    // Local search. Start from the greedy independent prefix.
    let start = {
        let kept = RowBasis::greedy_rows(&m, 0..n);
        if kept.len() < r {
            return Err(Error::InvalidBasis(format!(
                "rank {} of sigma(u) is below the requested size {r}",
                kept.len()
            )));
        }
        kept[..r].to_vec()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut global_best: Option<(Vec<usize>, usize)> = None;
    let mut current = start;
    let mut current_d = eval(&current, &mut evaluated)?.expect("independent start");
    loop {
        if global_best.as_ref().map(|(_, bd)| current_d > *bd).unwrap_or(true) {
            global_best = Some((current.clone(), current_d));
        }
        if evaluated >= budget {
            break;
        }
        // steepest ascent over single-index swaps
        let mut improved: Option<(Vec<usize>, usize)> = None;
        'swaps: for out_pos in 0..r {
            for cand in 0..n {
                if current.contains(&cand) {
                    continue;
                }
                if evaluated >= budget {
                    break 'swaps;
                }
                let mut next = current.clone();
                next[out_pos] = cand;
                next.sort_unstable();
                if let Some(d) = eval(&next, &mut evaluated)? {
                    if d > current_d && improved.as_ref().map(|(_, id)| d > *id).unwrap_or(true) {
                        improved = Some((next, d));
                    }
                }
            }
        }
        match improved {
            Some((next, d)) => {
                current = next;
                current_d = d;
            }
            None => {
                // local optimum: seeded random restart while budget remains
                let mut restarted = false;
                while evaluated < budget {
                    let mut fresh: Vec<usize> = (0..n).collect();
                    for i in 0..r {
                        let j = rng.gen_range(i..n);
                        fresh.swap(i, j);
                    }
                    let mut next = fresh[..r].to_vec();
                    next.sort_unstable();
                    if let Some(d) = eval(&next, &mut evaluated)? {
                        current = next;
                        current_d = d;
                        restarted = true;
                        break;
                    }
                }
                if !restarted {
                    break;
                }
            }
        }
    }
    let (indices, distance) = global_best.expect("at least the start was evaluated");
    Ok(BestBasisResult {
        basis: SubmoduleBasis::new(indices, n)?,
        distance,
        exhaustive: false,
        evaluated,
    })
}

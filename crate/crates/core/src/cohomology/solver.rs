//! Exact solving of sparse linear systems `A x = b` over `Z/nZ`.
//!
//! `n` is split by CRT into prime powers `p^e`:
//! * `p = 2, e = 1`: incremental elimination on bit-packed rows;
//! * `p` odd, `e = 1`: the same incremental scheme on dense residue rows;
//! * `e > 1`: dense elimination over the local ring `Z/p^e`, always pivoting
//!   on an entry of least `p`-adic valuation in the remaining submatrix.
//!
//! Pivot order is fixed by row and column order, so results are
//! deterministic.

use thiserror::Error;

use crate::number_theory::factorize;

/// Unknowns allowed for the dense `Z/p` basis (`cols²` residues).
pub const MAX_DENSE_PRIME_COLS: usize = 1 << 13;
/// Unknowns allowed for the packed `Z/2` basis (`cols²` bits).
pub const MAX_PACKED_COLS: usize = 1 << 15;
/// Entries allowed in the dense `Z/p^e` matrix.
pub const MAX_LOCAL_ENTRIES: usize = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("linear system too large: {0}")]
    SizeCapExceeded(String),
}

/// Rows are sparse `(column, coefficient)` lists; coefficients are reduced
/// modulo the working modulus on use.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
    pub rhs: Vec<u64>,
}

impl SparseSystem {
    pub fn new(cols: usize) -> Self {
        SparseSystem { cols, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<(usize, i64)>, rhs: u64) {
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Check a candidate solution.
    pub fn satisfied_by(&self, x: &[u64], modulus: u64) -> bool {
        let m = modulus as i128;
        self.rows.iter().zip(&self.rhs).all(|(row, &b)| {
            let lhs: i128 = row.iter().map(|&(c, a)| a as i128 * x[c] as i128).sum();
            (lhs - b as i128).rem_euclid(m) == 0
        })
    }
}

/// Solve over `Z/modulus`; `Ok(None)` when the system is inconsistent.
pub fn solve_mod(sys: &SparseSystem, modulus: u64) -> Result<Option<Vec<u64>>, SolverError> {
    assert!(modulus >= 2, "modulus must be at least 2");
    let factored = factorize(modulus).expect("modulus fits in 63 bits");
    let mut parts = Vec::with_capacity(factored.factors().len());
    for &(p, e) in factored.factors() {
        let q = p.pow(e);
        let part = if e == 1 && p == 2 {
            solve_gf2(sys)?
        } else if e == 1 {
            solve_prime(sys, p)?
        } else {
            solve_prime_power(sys, p, e)?
        };
        match part {
            Some(x) => parts.push((q, x)),
            None => return Ok(None),
        }
    }
    Ok(Some(crt_combine(&parts, modulus, sys.cols)))
}

fn crt_combine(parts: &[(u64, Vec<u64>)], modulus: u64, cols: usize) -> Vec<u64> {
    let mut x = vec![0u64; cols];
    for (q, xq) in parts {
        let rest = modulus / q;
        // rest · (rest⁻¹ mod q) is 1 mod q and 0 mod every other part.
        let coeff = (rest as u128 * inverse_mod(rest % q, *q) as u128 % modulus as u128) as u64;
        for (xi, &v) in x.iter_mut().zip(xq) {
            *xi = ((*xi as u128 + v as u128 * coeff as u128) % modulus as u128) as u64;
        }
    }
    x
}

/// Inverse of a unit modulo `m`.
pub(crate) fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i128, a as i128 % m as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "{a} is not a unit mod {m}");
    s0.rem_euclid(m as i128) as u64
}

fn reduce(a: i64, q: u64) -> u64 {
    a.rem_euclid(q as i64) as u64
}

/// Bit-packed rows over GF(2), kept in semi-echelon form: every stored row
/// has a distinct leading column and nothing before it.
struct PackedBasis {
    words: usize,
    rows: Vec<Vec<u64>>,
    rhs: Vec<bool>,
    lead: Vec<usize>,
    row_of_col: Vec<u32>,
}

const NO_ROW: u32 = u32::MAX;

impl PackedBasis {
    fn new(cols: usize) -> Self {
        PackedBasis {
            words: cols.div_ceil(64),
            rows: Vec::new(),
            rhs: Vec::new(),
            lead: Vec::new(),
            row_of_col: vec![NO_ROW; cols],
        }
    }

    fn first_set(bits: &[u64], from: usize) -> Option<usize> {
        let mut w = from / 64;
        if w >= bits.len() {
            return None;
        }
        let mut word = bits[w] & (!0u64 << (from % 64));
        loop {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == bits.len() {
                return None;
            }
            word = bits[w];
        }
    }

    /// Returns `false` if the row reduces to `0 = 1`.
    fn insert(&mut self, mut bits: Vec<u64>, mut rhs: bool) -> bool {
        let mut from = 0;
        while let Some(c) = Self::first_set(&bits, from) {
            let r = self.row_of_col[c];
            if r == NO_ROW {
                self.row_of_col[c] = self.rows.len() as u32;
                self.rows.push(bits);
                self.rhs.push(rhs);
                self.lead.push(c);
                return true;
            }
            let basis = &self.rows[r as usize];
            // Basis row r is zero before column c.
            for (w, b) in bits.iter_mut().zip(basis).skip(c / 64) {
                *w ^= *b;
            }
            rhs ^= self.rhs[r as usize];
            from = c + 1;
        }
        !rhs
    }

    fn back_substitute(&self, cols: usize) -> Vec<u64> {
        let mut x = vec![0u64; self.words];
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&r| std::cmp::Reverse(self.lead[r]));
        for r in order {
            let parity = self.rows[r].iter().zip(&x).map(|(a, b)| (a & b).count_ones()).sum::<u32>() & 1;
            if (parity == 1) != self.rhs[r] {
                let c = self.lead[r];
                x[c / 64] |= 1 << (c % 64);
            }
        }
        (0..cols).map(|c| x[c / 64] >> (c % 64) & 1).collect()
    }
}

fn solve_gf2(sys: &SparseSystem) -> Result<Option<Vec<u64>>, SolverError> {
    if sys.cols > MAX_PACKED_COLS {
        return Err(SolverError::SizeCapExceeded(format!(
            "{} unknowns over Z/2 (cap {MAX_PACKED_COLS})",
            sys.cols
        )));
    }
    let mut basis = PackedBasis::new(sys.cols);
    for (row, &b) in sys.rows.iter().zip(&sys.rhs) {
        let mut bits = vec![0u64; basis.words];
        for &(c, a) in row {
            if a & 1 == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        if !basis.insert(bits, b & 1 == 1) {
            return Ok(None);
        }
    }
    Ok(Some(basis.back_substitute(sys.cols)))
}

/// Dense semi-echelon basis over `Z/p`, leading entries normalised to 1.
fn solve_prime(sys: &SparseSystem, p: u64) -> Result<Option<Vec<u64>>, SolverError> {
    let cols = sys.cols;
    if cols > MAX_DENSE_PRIME_COLS {
        return Err(SolverError::SizeCapExceeded(format!(
            "{cols} unknowns over Z/{p} (cap {MAX_DENSE_PRIME_COLS})"
        )));
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut rhs: Vec<u64> = Vec::new();
    let mut lead: Vec<usize> = Vec::new();
    let mut row_of_col = vec![NO_ROW; cols];
    let mut dense = vec![0u64; cols];
    'rows: for (row, &b) in sys.rows.iter().zip(&sys.rhs) {
        dense.iter_mut().for_each(|x| *x = 0);
        for &(c, a) in row {
            dense[c] = (dense[c] + reduce(a, p)) % p;
        }
        let mut b = b % p;
        let mut c = 0;
        while c < cols {
            let a = dense[c];
            if a == 0 {
                c += 1;
                continue;
            }
            let r = row_of_col[c];
            if r == NO_ROW {
                let inv = inverse_mod(a, p);
                let normalised: Vec<u64> = dense.iter().map(|&x| x * inv % p).collect();
                row_of_col[c] = rows.len() as u32;
                rows.push(normalised);
                rhs.push(b * inv % p);
                lead.push(c);
                continue 'rows;
            }
            let basis = &rows[r as usize];
            for (x, &y) in dense[c..].iter_mut().zip(&basis[c..]) {
                *x = (*x + (p - a) * y) % p;
            }
            b = (b + (p - a) * rhs[r as usize]) % p;
            c += 1;
        }
        if b != 0 {
            return Ok(None);
        }
    }
    let mut x = vec![0u64; cols];
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_unstable_by_key(|&r| std::cmp::Reverse(lead[r]));
    for r in order {
        let c = lead[r];
        let s: u64 = rows[r][c + 1..].iter().zip(&x[c + 1..]).fold(0, |acc, (&a, &v)| (acc + a * v) % p);
        x[c] = (rhs[r] + p - s) % p;
    }
    Ok(Some(x))
}

fn valuation(mut x: u64, p: u64) -> u32 {
    debug_assert_ne!(x, 0);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// Elimination over `Z/p^e` by least-valuation pivots.
fn solve_prime_power(sys: &SparseSystem, p: u64, e: u32) -> Result<Option<Vec<u64>>, SolverError> {
    let q = p.pow(e);
    let (nrows, cols) = (sys.rows.len(), sys.cols);
    if nrows.saturating_mul(cols.max(1)) > MAX_LOCAL_ENTRIES {
        return Err(SolverError::SizeCapExceeded(format!(
            "{nrows}x{cols} system over Z/{q} (cap {MAX_LOCAL_ENTRIES} entries)"
        )));
    }
    let mut m = vec![0u64; nrows * cols];
    for (r, row) in sys.rows.iter().enumerate() {
        for &(c, a) in row {
            let cell = &mut m[r * cols + c];
            *cell = (*cell + reduce(a, q)) % q;
        }
    }
    let mut rhs: Vec<u64> = sys.rhs.iter().map(|&b| b % q).collect();
    let mut row_done = vec![false; nrows];
    let mut col_done = vec![false; cols];
    // (row, column, valuation) in pivot order
    let mut pivots: Vec<(usize, usize, u32)> = Vec::new();
    loop {
        let mut best: Option<(usize, usize, u32)> = None;
        'search: for r in (0..nrows).filter(|&r| !row_done[r]) {
            for c in (0..cols).filter(|&c| !col_done[c]) {
                let a = m[r * cols + c];
                if a == 0 {
                    continue;
                }
                let v = valuation(a, p);
                if best.map_or(true, |(_, _, bv)| v < bv) {
                    best = Some((r, c, v));
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((pr, pc, v)) = best else { break };
        let pv = p.pow(v);
        let unit_inv = inverse_mod(m[pr * cols + pc] / pv, q);
        for r in (0..nrows).filter(|&r| !row_done[r] && r != pr) {
            let a = m[r * cols + pc];
            if a == 0 {
                continue;
            }
            let factor = (a / pv) as u128 * unit_inv as u128 % q as u128;
            let neg = (q as u128 - factor) % q as u128;
            for c in 0..cols {
                let y = m[pr * cols + c];
                if y != 0 {
                    let cell = &mut m[r * cols + c];
                    *cell = ((*cell as u128 + neg * y as u128) % q as u128) as u64;
                }
            }
            rhs[r] = ((rhs[r] as u128 + neg * rhs[pr] as u128) % q as u128) as u64;
        }
        row_done[pr] = true;
        col_done[pc] = true;
        pivots.push((pr, pc, v));
    }
    // Leftover rows are zero; they must have zero right-hand side.
    if (0..nrows).any(|r| !row_done[r] && rhs[r] != 0) {
        return Ok(None);
    }
    if pivots.iter().any(|&(r, _, v)| rhs[r] % p.pow(v) != 0) {
        return Ok(None);
    }
    let mut x = vec![0u64; cols];
    for &(r, c, v) in pivots.iter().rev() {
        let pv = p.pow(v);
        let row = &m[r * cols..(r + 1) * cols];
        let s = row
            .iter()
            .zip(&x)
            .enumerate()
            .filter(|&(j, _)| j != c)
            .fold(0u128, |acc, (_, (&a, &xv))| (acc + a as u128 * xv as u128) % q as u128) as u64;
        let residual = (rhs[r] + q - s) % q;
        debug_assert_eq!(residual % pv, 0);
        let unit_inv = inverse_mod(row[c] / pv, q);
        x[c] = ((residual / pv) as u128 * unit_inv as u128 % q as u128) as u64;
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive search over all of `(Z/n)^cols`.
    fn brute_force(sys: &SparseSystem, n: u64) -> bool {
        let total = n.pow(sys.cols as u32);
        (0..total).any(|mut code| {
            let x: Vec<u64> = (0..sys.cols)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            sys.satisfied_by(&x, n)
        })
    }

    fn random_system(rng: &mut ChaCha8Rng, rows: usize, cols: usize, n: u64, consistent: bool) -> SparseSystem {
        let mut sys = SparseSystem::new(cols);
        let x: Vec<u64> = (0..cols).map(|_| rng.gen_range(0..n)).collect();
        for _ in 0..rows {
            let mut row: Vec<(usize, i64)> = Vec::new();
            for c in 0..cols {
                if rng.gen_bool(0.6) {
                    row.push((c, rng.gen_range(-(n as i64)..n as i64)));
                }
            }
            let b = if consistent {
                let lhs: i64 = row.iter().map(|&(c, a)| a * x[c] as i64).sum();
                lhs.rem_euclid(n as i64) as u64
            } else {
                rng.gen_range(0..n)
            };
            sys.push(row, b);
        }
        sys
    }

    #[test]
    fn p_adic_lifting_counterexample() {
        // 2x = 2 over Z/4: solvable (x = 1) though naive lift from x ≡ 0 fails.
        let mut sys = SparseSystem::new(1);
        sys.push(vec![(0, 2)], 2);
        let x = solve_mod(&sys, 4).unwrap().unwrap();
        assert!(sys.satisfied_by(&x, 4));
        let mut sys = SparseSystem::new(1);
        sys.push(vec![(0, 2)], 1);
        assert!(solve_mod(&sys, 4).unwrap().is_none());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2u64, 3, 4, 5, 6, 8, 9, 12] {
            for trial in 0..60 {
                let cols = rng.gen_range(1..=4);
                let rows = rng.gen_range(1..=6);
                let sys = random_system(&mut rng, rows, cols, n, trial % 2 == 0);
                let got = solve_mod(&sys, n).unwrap();
                assert_eq!(got.is_some(), brute_force(&sys, n), "n={n} {sys:?}");
                if let Some(x) = got {
                    assert!(sys.satisfied_by(&x, n));
                }
            }
        }
    }

    #[test]
    fn prime_paths_agree_with_local_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u64, 3, 7] {
            for trial in 0..40 {
                let sys = random_system(&mut rng, 30, 12, p, trial % 3 != 0);
                let fast = if p == 2 { solve_gf2(&sys) } else { solve_prime(&sys, p) }.unwrap();
                let local = solve_prime_power(&sys, p, 1).unwrap();
                assert_eq!(fast.is_some(), local.is_some());
                if let Some(x) = fast {
                    assert!(sys.satisfied_by(&x, p));
                }
            }
        }
    }

    #[test]
    fn packed_rows_cross_word_boundaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let sys = random_system(&mut rng, 400, 200, 2, true);
        let x = solve_mod(&sys, 2).unwrap().unwrap();
        assert!(sys.satisfied_by(&x, 2));
    }

    #[test]
    fn caps() {
        let sys = SparseSystem::new(MAX_DENSE_PRIME_COLS + 1);
        assert!(matches!(solve_mod(&sys, 3), Err(SolverError::SizeCapExceeded(_))));
        let sys = SparseSystem::new(MAX_PACKED_COLS + 1);
        assert!(matches!(solve_mod(&sys, 2), Err(SolverError::SizeCapExceeded(_))));
    }

    #[test]
    fn inverses() {
        for m in [2u64, 9, 25, 49, 97] {
            for a in (1..m).filter(|a| crate::number_theory::gcd(*a, m) == 1) {
                assert_eq!(a * inverse_mod(a, m) % m, 1);
            }
        }
    }
}

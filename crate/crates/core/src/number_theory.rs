//! Exact 64-bit integer arithmetic: factorization, Kronecker symbols,
//! quadratic discriminants and the split/inert/ramified trichotomy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest accepted magnitude (signed 64-bit range).
pub const MAX_VALUE: u64 = i64::MAX as u64;

/// Trial division bound before switching to Pollard rho.
const TRIAL_BOUND: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberTheoryError {
    #[error("value exceeds the signed 64-bit range")]
    Overflow,
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse {0:?} as a factored integer")]
    Parse(String),
}

/// A positive integer with its prime factorization, primes increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factored {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factored {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Primes dividing both `self` and `other`.
    pub fn common_primes(&self, other: &Factored) -> Vec<u64> {
        self.primes().filter(|p| other.value % p == 0).collect()
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Factored) -> Option<Factored> {
        if self.value % other.value != 0 {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let f = other.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, f)| f);
                (e > f).then_some((p, e - f))
            })
            .collect();
        Some(Factored { value: self.value / other.value, factors })
    }

    /// Build from prime-power pairs; the primes are checked.
    pub fn from_prime_powers(pairs: &[(u64, u32)]) -> Result<Factored, NumberTheoryError> {
        let mut value: u64 = 1;
        for &(p, e) in pairs {
            if !is_prime(p) {
                return Err(NumberTheoryError::NotPrime(p));
            }
            let pe = p.checked_pow(e).ok_or(NumberTheoryError::Overflow)?;
            value = value.checked_mul(pe).ok_or(NumberTheoryError::Overflow)?;
        }
        factorize(value)
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Factored {
    type Err = NumberTheoryError;

    /// Accepts `3^24`, `3^4*5^2*29^2`, `3^4 * 5^2` or a plain integer. Bases
    /// need not be prime; the product is refactored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || NumberTheoryError::Parse(s.to_string());
        let mut value: u64 = 1;
        let mut any = false;
        for term in s.split('*') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad());
            }
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
                None => (term, 1),
            };
            let base: u64 = base.parse().map_err(|_| bad())?;
            let pe = base.checked_pow(exp).ok_or(NumberTheoryError::Overflow)?;
            value = value.checked_mul(pe).ok_or(NumberTheoryError::Overflow)?;
            any = true;
        }
        if !any {
            return Err(bad());
        }
        factorize(value)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve primes as witnesses cover
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`.
fn pollard_brent(n: u64) -> u64 {
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut g = 1;
        let (mut x, mut ys) = (y, y);
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // Batched product hit zero; step back one at a time.
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn factor_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Complete prime factorization of `1 ≤ v ≤ 2^63 − 1`.
pub fn factorize(v: u64) -> Result<Factored, NumberTheoryError> {
    if v == 0 {
        return Err(NumberTheoryError::InvalidInput("cannot factor 0".into()));
    }
    if v > MAX_VALUE {
        return Err(NumberTheoryError::Overflow);
    }
    let mut rest = v;
    let mut primes = Vec::new();
    while rest % 2 == 0 {
        primes.push(2);
        rest /= 2;
    }
    let mut d = 3;
    while d < TRIAL_BOUND && d * d <= rest {
        while rest % d == 0 {
            primes.push(d);
            rest /= d;
        }
        d += 2;
    }
    if rest > 1 {
        if d * d > rest {
            primes.push(rest);
        } else {
            factor_into(rest, &mut primes);
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factored { value: v, factors })
}

pub fn is_squarefree(v: u64) -> Result<bool, NumberTheoryError> {
    Ok(factorize(v)?.is_squarefree())
}

/// Product of the distinct primes dividing `v`.
pub fn radical(v: u64) -> Result<u64, NumberTheoryError> {
    Ok(factorize(v)?.primes().product())
}

/// The Kronecker symbol `(a / m)`.
///
/// For an odd prime `m` not dividing `a` this is the Legendre symbol.
/// `(a / 0)` is 1 when `|a| = 1` and 0 otherwise.
pub fn kronecker(a: i64, m: i64) -> i8 {
    let (mut a, mut m) = (a as i128, m as i128);
    if m == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut sign: i8 = 1;
    if m < 0 {
        m = -m;
        if a < 0 {
            sign = -sign;
        }
    }
    let twos = m.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a/2) = 1 for a ≡ ±1 (mod 8), −1 for a ≡ ±3.
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
        m >>= twos;
    }
    // Jacobi symbol for odd m > 0.
    a = a.rem_euclid(m);
    while a != 0 {
        let t = a.trailing_zeros();
        a >>= t;
        if t % 2 == 1 && matches!(m % 8, 3 | 5) {
            sign = -sign;
        }
        if a % 4 == 3 && m % 4 == 3 {
            sign = -sign;
        }
        (a, m) = (m % a, a);
    }
    if m == 1 {
        sign
    } else {
        0
    }
}

fn check_squarefree(m: i64) -> Result<(), NumberTheoryError> {
    if m == 0 || m == 1 {
        return Err(NumberTheoryError::InvalidInput(format!("{m} does not define a quadratic field")));
    }
    if !is_squarefree(m.unsigned_abs())? {
        return Err(NumberTheoryError::NotSquarefree(m));
    }
    Ok(())
}

/// Fundamental discriminant of `Q(√m)`: `m` if `m ≡ 1 (mod 4)`, else `4m`.
pub fn quad_disc(m: i64) -> Result<i64, NumberTheoryError> {
    check_squarefree(m)?;
    if m.rem_euclid(4) == 1 {
        Ok(m)
    } else {
        m.checked_mul(4).ok_or(NumberTheoryError::Overflow)
    }
}

/// How a rational prime decomposes in a quadratic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitType::Split => "split",
            SplitType::Inert => "inert",
            SplitType::Ramified => "ramified",
        })
    }
}

/// Decomposition of the prime `p` in `Q(√m)`, read off from
/// `kronecker(quad_disc(m), p)`; `p = 2` goes through the mod-8 rule.
pub fn splitting_type(p: u64, m: i64) -> Result<SplitType, NumberTheoryError> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if p > MAX_VALUE {
        return Err(NumberTheoryError::Overflow);
    }
    let disc = quad_disc(m)?;
    Ok(match kronecker(disc, p as i64) {
        0 => SplitType::Ramified,
        1 => SplitType::Split,
        _ => SplitType::Inert,
    })
}

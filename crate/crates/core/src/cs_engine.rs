//! Chern-Simons values `CS_c([ρ]) ∈ (1/2)Z/Z` for quadratic and biquadratic
//! families, plus closed-form presets for explicit fields.
//!
//! The generic engine counts primes of `gcd(D_{L/K}, D)` that are inert in
//! `Q(√M)` or in `Q(√N)` with `N = D·t/M`. Presets evaluate the corresponding
//! Legendre-symbol criteria directly and are cross-checked against the
//! engine by [`consistency_check`].

use std::fmt;
use std::ops::{Add, RangeInclusive};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::number_theory::{
    factorize, gcd, is_prime, is_squarefree, kronecker, quad_disc, splitting_type, Factored,
    NumberTheoryError, SplitType,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsError {
    #[error("parameters outside the family hypotheses: {0}")]
    InvalidFamily(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("preset {0} has no engine data")]
    NoEngineData(String),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
}

fn invalid(msg: impl Into<String>) -> CsError {
    CsError::InvalidFamily(msg.into())
}

/// An element `numerator/denominator` of `(1/n)Z/Z`.
///
/// For `n > 2` the identification with roots of unity is only defined up to
/// `Aut(Z/nZ)`; every family here produces `n = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CsValue {
    numerator: u32,
    denominator: u32,
}

impl CsValue {
    pub fn new(numerator: u32, denominator: u32) -> Result<Self, CsError> {
        if denominator == 0 {
            return Err(CsError::InvalidArgument("denominator must be positive".into()));
        }
        Ok(CsValue { numerator: numerator % denominator, denominator })
    }

    pub fn zero() -> Self {
        CsValue { numerator: 0, denominator: 2 }
    }

    pub fn half() -> Self {
        CsValue { numerator: 1, denominator: 2 }
    }

    fn from_parity(s: usize) -> Self {
        CsValue { numerator: (s % 2) as u32, denominator: 2 }
    }

    pub fn numerator(&self) -> u32 {
        self.numerator
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    pub fn checked_add(self, other: CsValue) -> Option<CsValue> {
        (self.denominator == other.denominator).then(|| CsValue {
            numerator: ((self.numerator as u64 + other.numerator as u64) % self.denominator as u64) as u32,
            denominator: self.denominator,
        })
    }
}

impl Add for CsValue {
    type Output = CsValue;

    /// Panics if the denominators differ.
    fn add(self, other: CsValue) -> CsValue {
        self.checked_add(other).expect("adding values with different denominators")
    }
}

impl fmt::Display for CsValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl FromStr for CsValue {
    type Err = CsError;

    /// `k/n`, or a bare `0` which is read as `0/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CsError::InvalidArgument(format!("cannot parse {s:?} as a value"));
        match s.trim().split_once('/') {
            None if s.trim() == "0" => Ok(CsValue::zero()),
            None => Err(bad()),
            Some((k, n)) => {
                let k: u32 = k.trim().parse().map_err(|_| bad())?;
                let n: u32 = n.trim().parse().map_err(|_| bad())?;
                if k >= n {
                    return Err(bad());
                }
                CsValue::new(k, n)
            }
        }
    }
}

/// Data for the inert-count criterion. The caller asserts the field-theoretic
/// hypotheses; only the integer conditions are checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadFamilyInput {
    pub d: Factored,
    pub t: u64,
    pub m: u64,
    pub dlk: Factored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquadFamilyInput {
    pub d1: i64,
    pub d2: i64,
    pub t1: u64,
    pub t2: u64,
    pub m: u64,
}

fn check_t(t: u64, name: &str) -> Result<(), CsError> {
    if t <= 1 {
        return Err(invalid(format!("{name} = {t} must exceed 1")));
    }
    if !is_squarefree(t)? {
        return Err(invalid(format!("{name} = {t} is not squarefree")));
    }
    Ok(())
}

fn to_i64(v: u64) -> Result<i64, CsError> {
    i64::try_from(v).map_err(|_| CsError::NumberTheory(NumberTheoryError::Overflow))
}

/// `s/2 mod 1`, where `s` counts the primes `p | gcd(dlk, D)` inert in
/// `Q(√M)` or in `Q(√N)`, `N = D·t/M`.
pub fn cs_inert_count(input: &QuadFamilyInput) -> Result<CsValue, CsError> {
    let d = input.d.value();
    if d <= 1 || !input.d.is_squarefree() {
        return Err(invalid(format!("D = {} must be squarefree and > 1", input.d)));
    }
    check_t(input.t, "t")?;
    if gcd(input.t, d) != 1 {
        return Err(invalid(format!("t = {} is not coprime to D = {d}", input.t)));
    }
    if input.m <= 1 || d % input.m != 0 {
        return Err(invalid(format!("M = {} must be a divisor of D = {d} greater than 1", input.m)));
    }
    let n = (d / input.m).checked_mul(input.t).ok_or(NumberTheoryError::Overflow)?;
    let (m, n) = (to_i64(input.m)?, to_i64(n)?);
    let mut s = 0;
    for p in input.d.common_primes(&input.dlk) {
        if splitting_type(p, m)? == SplitType::Inert || splitting_type(p, n)? == SplitType::Inert {
            s += 1;
        }
    }
    Ok(CsValue::from_parity(s))
}

/// Validates the biquadratic hypotheses; the value is always 0.
pub fn cs_biquadratic(input: &BiquadFamilyInput) -> Result<CsValue, CsError> {
    let BiquadFamilyInput { d1, d2, t1, t2, m } = *input;
    for (name, d) in [("D1", d1), ("D2", d2)] {
        if d == 0 || d == 1 || !is_squarefree(d.unsigned_abs())? {
            return Err(invalid(format!("{name} = {d} must be squarefree and not 1")));
        }
    }
    check_t(t1, "t1")?;
    check_t(t2, "t2")?;
    let named = [("D1", d1.unsigned_abs()), ("D2", d2.unsigned_abs()), ("t1", t1), ("t2", t2)];
    for (i, &(a, x)) in named.iter().enumerate() {
        for &(b, y) in &named[i + 1..] {
            if gcd(x, y) != 1 {
                return Err(invalid(format!("{a} and {b} are not coprime")));
            }
        }
    }
    let prod = d1.unsigned_abs().checked_mul(d2.unsigned_abs()).ok_or(NumberTheoryError::Overflow)?;
    if m <= 1 || prod % m != 0 {
        return Err(invalid(format!("M = {m} must be a divisor of D1*D2 greater than 1")));
    }
    Ok(CsValue::zero())
}

/// Discriminant of `Q(√d1, √d2)` as the product of the discriminants of its
/// three quadratic subfields.
pub fn biquadratic_disc(d1: i64, d2: i64) -> Result<Factored, CsError> {
    let g = gcd(d1.unsigned_abs(), d2.unsigned_abs()) as i64;
    let d3 = (d1 / g).checked_mul(d2 / g).ok_or(NumberTheoryError::Overflow)?;
    let mut value: u64 = 1;
    for d in [d1, d2, d3] {
        let disc = quad_disc(d)?.unsigned_abs();
        value = value.checked_mul(disc).ok_or(NumberTheoryError::Overflow)?;
    }
    Ok(factorize(value)?)
}

fn squared(f: &Factored) -> Result<Factored, CsError> {
    let pairs: Vec<(u64, u32)> = f.factors().iter().map(|&(p, e)| (p, 2 * e)).collect();
    Ok(Factored::from_prime_powers(&pairs)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresetId {
    /// Cyclic quartic case over `Q(√p)`, `p ≡ 1 mod 4` prime.
    Zn2 { p: u64 },
    /// Quaternion case over `Q(√d1, √d2)`.
    KleinQ8 { d1: u64, d2: u64 },
    KleinQ8_145,
    KleinQ8_105,
    KleinD4_145,
    S4Gl2f3_7537,
    S4_16t65_2777,
    /// `Q(√5, √29)` with `t1 = t` and `t2` the least odd prime coprime to
    /// `145·t`.
    Biquad,
}

/// Field data a preset feeds into [`cs_inert_count`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineData {
    pub d: Factored,
    pub m: u64,
    pub dlk: Factored,
}

impl PresetId {
    pub const NAMED: [PresetId; 6] = [
        PresetId::KleinQ8_145,
        PresetId::KleinQ8_105,
        PresetId::KleinD4_145,
        PresetId::S4Gl2f3_7537,
        PresetId::S4_16t65_2777,
        PresetId::Biquad,
    ];

    pub fn validate(&self) -> Result<(), CsError> {
        match *self {
            PresetId::Zn2 { p } => {
                if !is_prime(p) || p % 4 != 1 {
                    return Err(invalid(format!("zn2 needs a prime p ≡ 1 mod 4, got {p}")));
                }
            }
            PresetId::KleinQ8 { d1, d2 } => {
                for d in [d1, d2] {
                    if d <= 1 || d % 4 != 1 || !is_squarefree(d)? {
                        return Err(invalid(format!("klein-q8 needs squarefree d > 1 with d ≡ 1 mod 4, got {d}")));
                    }
                }
                if gcd(d1, d2) != 1 {
                    return Err(invalid(format!("{d1} and {d2} are not coprime")));
                }
                d1.checked_mul(d2).ok_or(NumberTheoryError::Overflow)?;
            }
            _ => {}
        }
        Ok(())
    }

    /// The discriminant `D` of the base field's quadratic character.
    pub fn discriminant(&self) -> u64 {
        match *self {
            PresetId::Zn2 { p } => p,
            PresetId::KleinQ8 { d1, d2 } => d1 * d2,
            PresetId::KleinQ8_145 | PresetId::KleinD4_145 | PresetId::Biquad => 145,
            PresetId::KleinQ8_105 => 105,
            PresetId::S4Gl2f3_7537 => 7537,
            PresetId::S4_16t65_2777 => 2777,
        }
    }

    pub fn alphas(&self) -> RangeInclusive<u8> {
        match self {
            PresetId::Zn2 { .. } | PresetId::S4Gl2f3_7537 | PresetId::S4_16t65_2777 => 1..=1,
            _ => 1..=3,
        }
    }

    fn check_alpha(&self, alpha: u8) -> Result<(), CsError> {
        if self.alphas().contains(&alpha) {
            Ok(())
        } else {
            Err(invalid(format!("alpha {alpha} is not available for {self}")))
        }
    }

    /// The pair `(d1, d2)` of the biquadratic base field, where there is one.
    fn klein_pair(&self) -> Option<(u64, u64)> {
        match *self {
            PresetId::KleinQ8 { d1, d2 } => Some((d1, d2)),
            PresetId::KleinQ8_145 | PresetId::KleinD4_145 | PresetId::Biquad => Some((5, 29)),
            PresetId::KleinQ8_105 => Some((5, 21)),
            _ => None,
        }
    }

    /// `D`, `M` and `D_{L/K}` for the generic engine; `None` for presets the
    /// engine cannot reproduce.
    pub fn engine_data(&self, alpha: u8) -> Result<Option<EngineData>, CsError> {
        self.validate()?;
        self.check_alpha(alpha)?;
        let d = factorize(self.discriminant())?;
        let m = match self.klein_pair() {
            Some((d1, d2)) => [d1, d2, d1 * d2][alpha as usize - 1],
            None => self.discriminant(),
        };
        let dlk = match self {
            PresetId::KleinQ8_145 => {
                let dl = Factored::from_prime_powers(&[(3, 4), (5, 6), (29, 6)])?;
                let dk = squared(&biquadratic_disc(5, 29)?)?;
                dl.checked_div(&dk).ok_or_else(|| invalid("d_K^2 does not divide d_L"))?
            }
            PresetId::KleinD4_145 => Factored::from_prime_powers(&[(5, 2)])?,
            PresetId::S4Gl2f3_7537 => Factored::from_prime_powers(&[(3, 24)])?,
            PresetId::Zn2 { .. } | PresetId::KleinQ8 { .. } | PresetId::KleinQ8_105 => d.clone(),
            PresetId::S4_16t65_2777 | PresetId::Biquad => return Ok(None),
        };
        Ok(Some(EngineData { d, m, dlk }))
    }

    /// Checks `t` against the preset's hypotheses.
    pub fn check_t(&self, t: u64) -> Result<(), CsError> {
        check_t(t, "t")?;
        let d = self.discriminant();
        if gcd(t, d) != 1 {
            return Err(invalid(format!("t = {t} is not coprime to D = {d}")));
        }
        Ok(())
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetId::Zn2 { p } => write!(f, "zn2:{p}"),
            PresetId::KleinQ8 { d1, d2 } => write!(f, "klein-q8:{d1}:{d2}"),
            PresetId::KleinQ8_145 => write!(f, "klein-q8-145"),
            PresetId::KleinQ8_105 => write!(f, "klein-q8-105"),
            PresetId::KleinD4_145 => write!(f, "klein-d4-145"),
            PresetId::S4Gl2f3_7537 => write!(f, "s4-gl2f3-7537"),
            PresetId::S4_16t65_2777 => write!(f, "s4-16t65-2777"),
            PresetId::Biquad => write!(f, "biquad"),
        }
    }
}

impl FromStr for PresetId {
    type Err = CsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CsError::UnknownPreset(s.to_string());
        let num = |x: &str| x.parse::<u64>().map_err(|_| unknown());
        let preset = match s.split(':').collect::<Vec<_>>().as_slice() {
            ["zn2", p] => PresetId::Zn2 { p: num(p)? },
            ["klein-q8", d1, d2] => PresetId::KleinQ8 { d1: num(d1)?, d2: num(d2)? },
            ["klein-q8-145"] => PresetId::KleinQ8_145,
            ["klein-q8-105"] => PresetId::KleinQ8_105,
            ["klein-d4-145"] => PresetId::KleinD4_145,
            ["s4-gl2f3-7537"] => PresetId::S4Gl2f3_7537,
            ["s4-16t65-2777"] => PresetId::S4_16t65_2777,
            ["biquad"] => PresetId::Biquad,
            _ => return Err(unknown()),
        };
        preset.validate()?;
        Ok(preset)
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`, reducing `a` first.
fn legendre(a: u64, p: u64) -> i8 {
    kronecker((a % p) as i64, p as i64)
}

fn legendre_prod(a: u64, of: u64) -> i8 {
    factorize(of)
        .expect("preset moduli are small")
        .primes()
        .map(|p| legendre(a, p))
        .product()
}

fn half_if(cond: bool) -> CsValue {
    if cond {
        CsValue::half()
    } else {
        CsValue::zero()
    }
}

/// Least prime `> 2` coprime to `c`.
fn least_odd_prime_coprime(c: u64) -> u64 {
    (3..).step_by(2).find(|&q| is_prime(q) && c % q != 0).expect("primes are unbounded")
}

/// Closed-form value of a preset at `t`.
pub fn preset_eval(preset: PresetId, t: u64, alpha: u8) -> Result<CsValue, CsError> {
    preset.validate()?;
    preset.check_alpha(alpha)?;
    preset.check_t(t)?;
    let value = match preset {
        PresetId::Zn2 { p } => half_if(legendre(t, p) == -1),
        PresetId::KleinQ8 { d1, d2 } => {
            let (a, b) = match alpha {
                1 => (legendre_prod_mul(d2, t, d1), legendre_prod(d1, d2)),
                2 => (legendre_prod(d2, d1), legendre_prod_mul(d1, t, d2)),
                _ => (legendre_prod(t, d1 * d2), 1),
            };
            half_if(a * b == -1)
        }
        PresetId::KleinQ8_145 => match alpha {
            1 => half_if(matches!(t % 5, 2 | 3)),
            2 => half_if(legendre(t, 29) == -1),
            _ => half_if(legendre(t, 5) == -legendre(t, 29)),
        },
        PresetId::KleinQ8_105 => match alpha {
            1 => half_if(matches!(t % 5, 2 | 3)),
            2 => half_if(legendre(t, 3) == -legendre(t, 7)),
            _ => half_if(legendre(t, 3) * legendre(t, 5) * legendre(t, 7) == -1),
        },
        PresetId::KleinD4_145 => match alpha {
            2 => CsValue::zero(),
            _ => half_if(matches!(t % 5, 2 | 3)),
        },
        PresetId::S4Gl2f3_7537 => CsValue::zero(),
        PresetId::S4_16t65_2777 => half_if(legendre(t, 2777) == -1),
        PresetId::Biquad => {
            let t2 = least_odd_prime_coprime(145 * t);
            let m = [5, 29, 145][alpha as usize - 1];
            cs_biquadratic(&BiquadFamilyInput { d1: 5, d2: 29, t1: t, t2, m })?
        }
    };
    Ok(value)
}

/// `∏_{p | of} (a·b / p)` without forming `a·b`.
fn legendre_prod_mul(a: u64, b: u64, of: u64) -> i8 {
    legendre_prod(a, of) * legendre_prod(b, of)
}

/// The generic engine evaluated on a preset's field data.
pub fn engine_eval(preset: PresetId, t: u64, alpha: u8) -> Result<CsValue, CsError> {
    let data = preset.engine_data(alpha)?.ok_or_else(|| CsError::NoEngineData(preset.to_string()))?;
    preset.check_t(t)?;
    cs_inert_count(&QuadFamilyInput { d: data.d, t, m: data.m, dlk: data.dlk })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub t: u64,
    pub alpha: u8,
    pub preset: CsValue,
    pub engine: CsValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub preset: String,
    /// Number of `(t, alpha)` pairs compared.
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare [`preset_eval`] with [`engine_eval`] for every valid `t` in range
/// and every alpha of the preset.
pub fn consistency_check(preset: PresetId, ts: RangeInclusive<u64>) -> Result<ConsistencyReport, CsError> {
    if preset.engine_data(1)?.is_none() {
        return Err(CsError::NoEngineData(preset.to_string()));
    }
    let pairs: Vec<(u64, u8)> = ts
        .filter(|&t| preset.check_t(t).is_ok())
        .flat_map(|t| preset.alphas().map(move |a| (t, a)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(t, alpha)| Ok((t, alpha, preset_eval(preset, t, alpha)?, engine_eval(preset, t, alpha)?)))
        .collect::<Result<Vec<_>, CsError>>()?;
    let mismatches = results
        .into_iter()
        .filter(|(_, _, a, b)| a != b)
        .map(|(t, alpha, preset, engine)| Mismatch { t, alpha, preset, engine })
        .collect();
    Ok(ConsistencyReport { preset: preset.to_string(), checked: pairs.len(), mismatches })
}

/// One scan record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub t: u64,
    pub value: CsValue,
}

/// Preset values for every squarefree `t ≤ t_max` coprime to `D`, in
/// increasing `t`.
pub fn scan_records(preset: PresetId, alpha: u8, t_max: u64) -> Result<Vec<ScanRecord>, CsError> {
    preset.validate()?;
    preset.check_alpha(alpha)?;
    let ts: Vec<u64> = (2..=t_max).collect();
    let records: Vec<Option<ScanRecord>> = ts
        .par_iter()
        .map(|&t| match preset.check_t(t) {
            Err(_) => Ok(None),
            Ok(()) => Ok(Some(ScanRecord { t, value: preset_eval(preset, t, alpha)? })),
        })
        .collect::<Result<_, CsError>>()?;
    Ok(records.into_iter().flatten().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub count_half: u64,
    pub count_zero: u64,
}

impl Density {
    pub fn from_records(records: &[ScanRecord]) -> Self {
        let count_half = records.iter().filter(|r| !r.value.is_zero()).count() as u64;
        Density { count_half, count_zero: records.len() as u64 - count_half }
    }

    pub fn total(&self) -> u64 {
        self.count_half + self.count_zero
    }

    pub fn ratio(&self) -> f64 {
        self.count_half as f64 / self.total() as f64
    }

    /// `count_half / total` rounded half-up to six decimals, computed exactly.
    pub fn render(&self) -> String {
        let total = self.total() as u128;
        if total == 0 {
            return "0.000000".to_string();
        }
        let scaled = (2 * self.count_half as u128 * 1_000_000 + total) / (2 * total);
        format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
    }
}

pub fn density_scan(preset: PresetId, alpha: u8, t_max: u64) -> Result<Density, CsError> {
    if t_max < 100 {
        return Err(CsError::InvalidArgument(format!("t_max = {t_max} must be at least 100")));
    }
    Ok(Density::from_records(&scan_records(preset, alpha, t_max)?))
}

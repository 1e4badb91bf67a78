//! Inhomogeneous group cochains with `Z/nZ` coefficients and trivial action.
//!
//! A `k`-cochain on `G` is a dense array over `G^k`, tuples ordered
//! lexicographically with the first coordinate most significant. Cochains
//! are unnormalized: nothing is required to vanish on tuples containing the
//! identity.
//!
//! The differential is
//! `(da)(g₁..g_{k+1}) = a(g₂..g_{k+1}) + Σ_{i=1..k} (−1)^i a(..g_i g_{i+1}..) + (−1)^{k+1} a(g₁..g_k)`,
//! the cup product is `(a∪b)(g₁..g_{p+q}) = a(g₁..g_p)·b(g_{p+1}..g_{p+q})`,
//! and the Bockstein of `0 → Z/n → Z/n² → Z/n → 0` lifts each residue to
//! itself in `{0..n−1}` and divides the integral coboundary by `n`.

pub mod solver;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{cyclic_group, is_standard_cyclic, FiniteGroup, GroupError, GroupHom};
use crate::number_theory::factorize;
use solver::{solve_mod, SolverError, SparseSystem};

/// Largest cochain (number of tuples) that will be materialized.
pub const MAX_COCHAIN_LEN: u64 = 1 << 24;
/// Largest coboundary system (number of equations) the solver accepts.
pub const MAX_EQUATIONS: u64 = 1 << 21;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("mismatched context: {0}")]
    MismatchedContext(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("{m} does not divide the modulus {n}")]
    NotADivisor { m: u32, n: u32 },
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("ψ∘φ is not the identity of Z/{0}Z")]
    NotASection(usize),
    #[error("invalid cochain: {0}")]
    InvalidCochain(String),
    #[error("malformed cochain dump: {0}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl From<SolverError> for CohomologyError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::SizeCapExceeded(msg) => CohomologyError::SizeCapExceeded(msg),
        }
    }
}

type Result<T> = std::result::Result<T, CohomologyError>;

fn tuple_count(order: usize, degree: usize) -> Result<usize> {
    let len = (order as u64).checked_pow(degree as u32).unwrap_or(u64::MAX);
    if len > MAX_COCHAIN_LEN {
        return Err(CohomologyError::SizeCapExceeded(format!(
            "|G|^{degree} = {order}^{degree} exceeds {MAX_COCHAIN_LEN} entries"
        )));
    }
    Ok(len as usize)
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Index of a tuple in lexicographic order.
#[inline]
fn index_of(order: usize, tuple: impl IntoIterator<Item = usize>) -> usize {
    tuple.into_iter().fold(0, |acc, g| acc * order + g)
}

/// Step a tuple odometer; last coordinate varies fastest.
#[inline]
fn advance(tuple: &mut [usize], order: usize) {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < order {
            return;
        }
        *slot = 0;
    }
}

/// Output entries per parallel work item (rounded to whole rows).
const CHUNK: usize = 1 << 14;

fn chunk_len(order: usize) -> usize {
    (CHUNK / order).max(1) * order
}

/// Integral coboundary of `src` (a `degree`-cochain as plain integers),
/// passed through `map`; `None` as soon as `map` rejects a value.
fn integral_coboundary(
    group: &FiniteGroup,
    degree: usize,
    src: &[i64],
    map: impl Fn(i64) -> Option<u32> + Sync,
) -> Option<Vec<u32>> {
    let total = group.order().pow((degree + 1) as u32);
    let chunk = chunk_len(group.order());
    let mut out = vec![0u32; total];
    let ok = out
        .par_chunks_mut(chunk)
        .enumerate()
        .all(|(b, block)| coboundary_block(group, degree, src, b * chunk, block, &map));
    ok.then_some(out)
}

/// Whether every coboundary value passes `accept`, without storing them.
fn coboundary_all(group: &FiniteGroup, degree: usize, src: &[i64], accept: impl Fn(i64) -> bool + Sync) -> bool {
    let total = group.order().pow((degree + 1) as u32);
    let chunk = chunk_len(group.order());
    let map = |v| accept(v).then_some(0);
    (0..total.div_ceil(chunk)).into_par_iter().all(|b| {
        let start = b * chunk;
        let mut scratch = vec![0u32; chunk.min(total - start)];
        coboundary_block(group, degree, src, start, &mut scratch, &map)
    })
}

/// Fill `out` with the mapped coboundary at indices `start..start + out.len()`.
/// Both ends are multiples of the group order.
///
/// Rows share `(g₁..g_k)` and vary `g_{k+1} = x`; every term but the last
/// merge is then `src[base + x]`.
fn coboundary_block(
    group: &FiniteGroup,
    k: usize,
    src: &[i64],
    start: usize,
    out: &mut [u32],
    map: &impl Fn(i64) -> Option<u32>,
) -> bool {
    let order = group.order();
    if k == 0 {
        // Trivial action: a − a.
        return out.iter_mut().all(|slot| map(0).map(|v| *slot = v).is_some());
    }
    let pw: Vec<usize> = (0..=k).map(|j| order.pow(j as u32)).collect();
    let row_start = start / order;
    // head = (g₁..g_k) of the current row
    let mut head: Vec<usize> = (0..k).map(|i| row_start / pw[k - 1 - i] % order).collect();
    let mut prefix = vec![0usize; k + 1];
    let mut mid = vec![0usize; k + 1];
    let mut linear: Vec<(usize, bool)> = Vec::with_capacity(k);
    for row in out.chunks_mut(order) {
        for i in 0..k {
            prefix[i + 1] = prefix[i] * order + head[i];
        }
        // mid[j] indexes head[j..k]
        mid[k] = 0;
        for j in (0..k).rev() {
            mid[j] = head[j] * pw[k - 1 - j] + mid[j + 1];
        }
        linear.clear();
        // a(g₂..g_k, x), entering with sign +
        linear.push((mid[1] * order, false));
        for i in 0..k - 1 {
            let m = group.mul(head[i], head[i + 1]);
            let base = (prefix[i] * order + m) * pw[k - i - 1] + mid[i + 2] * order;
            linear.push((base, i % 2 == 0));
        }
        let merge_base = prefix[k - 1] * order;
        let merge_neg = (k - 1) % 2 == 0;
        let g_last = head[k - 1];
        let last = src[prefix[k]];
        let last = if k % 2 == 0 { -last } else { last };
        for (x, slot) in row.iter_mut().enumerate() {
            let mut acc = last;
            for &(base, neg) in &linear {
                let v = src[base + x];
                acc += if neg { -v } else { v };
            }
            let v = src[merge_base + group.mul(g_last, x)];
            acc += if merge_neg { -v } else { v };
            match map(acc) {
                Some(v) => *slot = v,
                None => return false,
            }
        }
        advance(&mut head, order);
    }
    true
}

/// An inhomogeneous `k`-cochain `G^k → Z/nZ`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    group: Arc<FiniteGroup>,
    degree: usize,
    modulus: u32,
    values: Vec<u32>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain")
            .field("group", &self.group.name())
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("len", &self.values.len())
            .finish()
    }
}

impl Cochain {
    pub fn zero(group: Arc<FiniteGroup>, degree: usize, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        let len = tuple_count(group.order(), degree)?;
        Ok(Cochain { group, degree, modulus, values: vec![0; len] })
    }

    pub fn from_values(group: Arc<FiniteGroup>, degree: usize, modulus: u32, values: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        let len = tuple_count(group.order(), degree)?;
        if values.len() != len {
            return Err(CohomologyError::InvalidCochain(format!(
                "expected {len} values, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v >= modulus) {
            return Err(CohomologyError::InvalidCochain(format!("value {v} not reduced mod {modulus}")));
        }
        Ok(Cochain { group, degree, modulus, values })
    }

    /// Cochain whose value at a tuple is `f(tuple) mod n`.
    pub fn from_fn(
        group: Arc<FiniteGroup>,
        degree: usize,
        modulus: u32,
        mut f: impl FnMut(&[usize]) -> u64,
    ) -> Result<Self> {
        check_modulus(modulus)?;
        let len = tuple_count(group.order(), degree)?;
        let mut tuple = vec![0usize; degree];
        let mut values = Vec::with_capacity(len);
        for _ in 0..len {
            values.push((f(&tuple) % modulus as u64) as u32);
            advance(&mut tuple, group.order());
        }
        Ok(Cochain { group, degree, modulus, values })
    }

    /// A homomorphism `G → Z/nZ` read as a 1-cochain.
    pub fn from_hom(f: &GroupHom) -> Result<Self> {
        let n = f.target().order();
        if !is_standard_cyclic(f.target()) || n < 2 {
            return Err(CohomologyError::MismatchedContext(format!(
                "target {} is not Z/nZ with n ≥ 2",
                f.target().name()
            )));
        }
        let values = f.image().iter().map(|&x| x as u32).collect();
        Cochain::from_values(f.source().clone(), 1, n as u32, values)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, tuple: &[usize]) -> u32 {
        assert_eq!(tuple.len(), self.degree);
        self.values[index_of(self.group.order(), tuple.iter().copied())]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(CohomologyError::MismatchedContext(format!(
                "groups {} and {} differ",
                self.group.name(),
                other.group.name()
            )));
        }
        if self.modulus != other.modulus {
            return Err(CohomologyError::MismatchedContext(format!(
                "moduli {} and {} differ",
                self.modulus, other.modulus
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Cochain, op: impl Fn(u64, u64, u64) -> u64) -> Result<Cochain> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(CohomologyError::MismatchedContext(format!(
                "degrees {} and {} differ",
                self.degree, other.degree
            )));
        }
        let n = self.modulus as u64;
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| op(a as u64, b as u64, n) as u32).collect();
        Ok(Cochain { values, ..self.clone() })
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.zip_with(other, |a, b, n| (a + b) % n)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.zip_with(other, |a, b, n| (a + n - b) % n)
    }

    pub fn scale(&self, k: u64) -> Cochain {
        let n = self.modulus as u64;
        let k = k % n;
        let values = self.values.iter().map(|&a| (a as u64 * k % n) as u32).collect();
        Cochain { values, ..self.clone() }
    }

    /// Stream the coboundary and report whether it vanishes.
    pub fn is_cocycle(&self) -> bool {
        let src: Vec<i64> = self.values.iter().map(|&v| v as i64).collect();
        let n = self.modulus as i64;
        coboundary_all(&self.group, self.degree, &src, |v| v.rem_euclid(n) == 0)
    }
}

fn check_modulus(n: u32) -> Result<()> {
    if n < 2 || n > (1 << 30) {
        return Err(CohomologyError::InvalidCochain(format!("modulus {n} out of range [2, 2^30]")));
    }
    Ok(())
}

/// The coboundary `da`, a `(k+1)`-cochain.
pub fn coboundary(a: &Cochain) -> Result<Cochain> {
    let n = a.modulus as i64;
    let src: Vec<i64> = a.values.iter().map(|&v| v as i64).collect();
    tuple_count(a.group.order(), a.degree + 1)?;
    let values = integral_coboundary(&a.group, a.degree, &src, |v| Some(v.rem_euclid(n) as u32))
        .expect("map never rejects");
    Ok(Cochain { group: a.group.clone(), degree: a.degree + 1, modulus: a.modulus, values })
}

/// Cup product `a ∪ b` of degree `p + q`.
pub fn cup(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    a.check_compatible(b)?;
    let len = tuple_count(a.group.order(), a.degree + b.degree)?;
    let n = a.modulus as u64;
    let mut values = Vec::with_capacity(len);
    for &x in &a.values {
        values.extend(b.values.iter().map(|&y| (x as u64 * y as u64 % n) as u32));
    }
    Ok(Cochain { group: a.group.clone(), degree: a.degree + b.degree, modulus: a.modulus, values })
}

/// Bockstein `δz = (1/n)·d(ẑ)` with `ẑ` the lift of `z` to `{0..n−1} ⊂ Z/n²`.
pub fn bockstein(z: &Cochain) -> Result<Cochain> {
    tuple_count(z.group.order(), z.degree + 1)?;
    let n = z.modulus as i64;
    let lift: Vec<i64> = z.values.iter().map(|&v| v as i64).collect();
    let values = integral_coboundary(&z.group, z.degree, &lift, |v| (v % n == 0).then(|| (v / n).rem_euclid(n) as u32))
        .ok_or(CohomologyError::NotACocycle)?;
    Ok(Cochain { group: z.group.clone(), degree: z.degree + 1, modulus: z.modulus, values })
}

/// `f*a`, the cochain `(g₁..g_k) ↦ a(f(g₁)..f(g_k))` on the source of `f`.
pub fn pullback(f: &GroupHom, a: &Cochain) -> Result<Cochain> {
    if !same_group(f.target(), &a.group) {
        return Err(CohomologyError::MismatchedContext(format!(
            "cochain lives on {}, homomorphism targets {}",
            a.group.name(),
            f.target().name()
        )));
    }
    let target_order = a.group.order();
    let source = f.source().clone();
    Cochain::from_fn(source, a.degree, a.modulus, |tuple| {
        a.values[index_of(target_order, tuple.iter().map(|&g| f.apply(g)))] as u64
    })
}

/// Reduce coefficients along `Z/n → Z/m` for `m | n`.
pub fn push_coefficients(a: &Cochain, m: u32) -> Result<Cochain> {
    if m < 2 || a.modulus % m != 0 {
        return Err(CohomologyError::NotADivisor { m, n: a.modulus });
    }
    let values = a.values.iter().map(|&v| v % m).collect();
    Ok(Cochain { group: a.group.clone(), degree: a.degree, modulus: m, values })
}

/// Outcome of a coboundary query.
#[derive(Clone, Debug)]
pub struct CoboundaryResult {
    pub is_coboundary: bool,
    /// Some `b` with `db = z`; absent for degree 0 and for non-coboundaries.
    pub witness: Option<Cochain>,
}

/// Decide whether the cocycle `z` is a coboundary, exactly over `Z/nZ`.
pub fn is_coboundary(z: &Cochain) -> Result<CoboundaryResult> {
    if !z.is_cocycle() {
        return Err(CohomologyError::NotACocycle);
    }
    if z.degree == 0 {
        return Ok(CoboundaryResult { is_coboundary: z.is_zero(), witness: None });
    }
    let order = z.group.order();
    let rows = (order as u64).pow(z.degree as u32);
    if rows > MAX_EQUATIONS {
        return Err(CohomologyError::SizeCapExceeded(format!(
            "{rows} equations exceeds the solver cap of {MAX_EQUATIONS}"
        )));
    }
    let witness_degree = z.degree - 1;
    if z.is_zero() {
        let zero = Cochain::zero(z.group.clone(), witness_degree, z.modulus)?;
        return Ok(CoboundaryResult { is_coboundary: true, witness: Some(zero) });
    }
    let cols = order.pow(witness_degree as u32);
    let system = coboundary_system(&z.group, witness_degree, &z.values, cols);
    match solve_mod(&system, z.modulus as u64)? {
        Some(x) => {
            let values = x.into_iter().map(|v| v as u32).collect();
            let b = Cochain::from_values(z.group.clone(), witness_degree, z.modulus, values)?;
            debug_assert_eq!(coboundary(&b).map(|db| db.values == z.values), Ok(true));
            Ok(CoboundaryResult { is_coboundary: true, witness: Some(b) })
        }
        None => Ok(CoboundaryResult { is_coboundary: false, witness: None }),
    }
}

/// Equations `(db)(t) = z(t)` in the unknown `(k−1)`-cochain `b`.
fn coboundary_system(group: &FiniteGroup, degree: usize, rhs: &[u32], cols: usize) -> SparseSystem {
    let order = group.order();
    let k = degree;
    let mut sys = SparseSystem::new(cols);
    let mut tuple = vec![0usize; k + 1];
    let mut merged = vec![0usize; k];
    for &b in rhs {
        let mut row: Vec<(usize, i64)> = Vec::with_capacity(k + 2);
        let mut put = |c: usize, a: i64| match row.iter_mut().find(|(rc, _)| *rc == c) {
            Some(entry) => entry.1 += a,
            None => row.push((c, a)),
        };
        if k == 0 {
            put(0, 1);
            put(0, -1);
        } else {
            put(index_of(order, tuple[1..].iter().copied()), 1);
            for i in 0..k {
                merged[..i].copy_from_slice(&tuple[..i]);
                merged[i] = group.mul(tuple[i], tuple[i + 1]);
                merged[i + 1..].copy_from_slice(&tuple[i + 2..]);
                put(index_of(order, merged.iter().copied()), if i % 2 == 0 { -1 } else { 1 });
            }
            put(index_of(order, tuple[..k].iter().copied()), if k % 2 == 0 { -1 } else { 1 });
        }
        row.retain(|&(_, a)| a != 0);
        sys.push(row, b as u64);
        advance(&mut tuple, order);
    }
    sys
}

/// A cohomology class, held by a representative cocycle.
#[derive(Clone, Debug)]
pub struct CohClass {
    rep: Cochain,
}

impl CohClass {
    pub fn new(rep: Cochain) -> Result<Self> {
        if !rep.is_cocycle() {
            return Err(CohomologyError::NotACocycle);
        }
        Ok(CohClass { rep })
    }

    pub fn rep(&self) -> &Cochain {
        &self.rep
    }

    pub fn into_rep(self) -> Cochain {
        self.rep
    }

    /// Whether two classes coincide in cohomology.
    pub fn cohomologous(&self, other: &CohClass) -> Result<bool> {
        Ok(is_coboundary(&self.rep.sub(&other.rep)?)?.is_coboundary)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factorize(n).expect("modulus is positive").factors() {
        let current = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(current.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Least `k ≥ 1` with `k·c` a coboundary. The order divides `n`, so only
/// divisors are tried.
pub fn class_order(c: &CohClass) -> Result<u64> {
    let n = c.rep.modulus as u64;
    for k in divisors(n) {
        if is_coboundary(&c.rep.scale(k))?.is_coboundary {
            return Ok(k);
        }
    }
    unreachable!("n·c = 0 is always a coboundary")
}

/// The class of `Id ∪ δ(Id)` in `H³(Z/nZ, Z/nZ)`.
pub fn cyclic_generator(n: u32) -> Result<CohClass> {
    check_modulus(n)?;
    if n as usize > crate::group::MAX_ORDER {
        return Err(CohomologyError::SizeCapExceeded(format!("Z/{n}Z exceeds the group order cap")));
    }
    let zn = Arc::new(cyclic_group(n as usize));
    let id = Cochain::from_fn(zn, 1, n, |t| t[0] as u64)?;
    CohClass::new(cup(&id, &bockstein(&id)?)?)
}

fn cyclic_modulus(f: &GroupHom) -> Result<u32> {
    let n = f.target().order();
    if n < 2 || !is_standard_cyclic(f.target()) {
        return Err(CohomologyError::MismatchedContext(format!(
            "{} is not Z/nZ with n ≥ 2",
            f.target().name()
        )));
    }
    Ok(n as u32)
}

/// The class `ψ ∪ δ(ψ)` on `A` for `ψ : A → Z/nZ`.
pub fn twist_class(psi: &GroupHom) -> Result<CohClass> {
    cyclic_modulus(psi)?;
    let psi_cochain = Cochain::from_hom(psi)?;
    CohClass::new(cup(&psi_cochain, &bockstein(&psi_cochain)?)?)
}

/// `φ*(ψ ∪ δψ)` evaluated directly on `φ`-image tuples, for groups whose
/// 3-cochains are too large to materialize.
fn pulled_back_twist_pointwise(phi: &GroupHom, psi: &GroupHom, n: u32) -> Result<Cochain> {
    let nn = n as i64;
    let lift = |g: usize| psi.apply(g) as i64;
    let a = psi.source();
    let bock = |g: usize, h: usize| ((lift(h) - lift(a.mul(g, h)) + lift(g)) / nn).rem_euclid(nn);
    Cochain::from_fn(phi.source().clone(), 3, n, |t| {
        let (x, y, z) = (phi.apply(t[0]), phi.apply(t[1]), phi.apply(t[2]));
        (lift(x) * bock(y, z)) as u64
    })
}

/// Check that `φ*(ψ ∪ δψ)` is cohomologous to `Id ∪ δ(Id)` on `Z/nZ`,
/// given `ψ∘φ = Id`.
pub fn twist_verify(phi: &GroupHom, psi: &GroupHom) -> Result<bool> {
    let n = cyclic_modulus(psi)?;
    if !same_group(phi.source(), psi.target()) {
        return Err(CohomologyError::MismatchedContext("φ must start at the target of ψ".into()));
    }
    if !same_group(phi.target(), psi.source()) {
        return Err(CohomologyError::MismatchedContext("φ must land in the source of ψ".into()));
    }
    if !psi.after(phi)?.is_identity() {
        return Err(CohomologyError::NotASection(n as usize));
    }
    let a_order = psi.source().order() as u64;
    let pulled = if a_order.pow(3) <= MAX_COCHAIN_LEN {
        pullback(phi, twist_class(psi)?.rep())?
    } else {
        pulled_back_twist_pointwise(phi, psi, n)?
    };
    let generator = cyclic_generator(n)?;
    CohClass::new(pulled)?.cohomologous(&generator)
}

/// Text dump: `cochain <group> <degree> <modulus>` then one value per line.
pub fn render_cochain(c: &Cochain) -> String {
    let mut out = format!("cochain {} {} {}\n", c.group.name(), c.degree, c.modulus);
    for v in &c.values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

/// Parse a dump against a known group; the header must match it.
pub fn parse_cochain(text: &str, group: Arc<FiniteGroup>) -> Result<Cochain> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| CohomologyError::Parse("empty dump".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let ["cochain", name, degree, modulus] = fields.as_slice() else {
        return Err(CohomologyError::Parse(format!("bad header {header:?}")));
    };
    if *name != group.name() {
        return Err(CohomologyError::MismatchedContext(format!(
            "dump is for group {name}, expected {}",
            group.name()
        )));
    }
    let degree: usize = degree.parse().map_err(|_| CohomologyError::Parse(format!("bad degree {degree:?}")))?;
    let modulus: u32 = modulus.parse().map_err(|_| CohomologyError::Parse(format!("bad modulus {modulus:?}")))?;
    let values = lines
        .map(|l| l.parse::<u32>().map_err(|_| CohomologyError::Parse(format!("bad value {l:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Cochain::from_values(group, degree, modulus, values)
}

//! Finite groups as dense multiplication tables, homomorphisms between them,
//! and semidirect products `G ⋊_α Z/nZ`.
//!
//! Elements are indices `0..order`. Tables are immutable once built; groups
//! are shared behind [`Arc`] so cochains and homomorphisms can hold on to
//! them cheaply.

mod families;
mod spec;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use families::{dihedral4, gl2, heisenberg, quaternion8, symmetric3, SplitGroup};
pub use spec::{builtin_group, parse_group_spec, render_group_spec, NamedGroup};

/// Hard cap on group order.
pub const MAX_ORDER: usize = 512;

/// Largest group accepted by [`enumerate_split_pairs`].
pub const MAX_ENUMERATION_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: u64, cap: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed group spec: {0}")]
    Parse(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u16>,
    identity: usize,
    inv: Vec<u16>,
}

impl PartialEq for FiniteGroup {
    // Names are labels only; two groups are the same when their tables agree.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// Validate a user-supplied table and build a group from it.
///
/// Checks range, identity, inverses and (exhaustively) associativity.
pub fn make_group(name: &str, order: usize, mul: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    if order == 0 {
        return Err(GroupError::NotAGroup("order must be positive".into()));
    }
    if order > MAX_ORDER {
        return Err(GroupError::OrderCapExceeded { order: order as u64, cap: MAX_ORDER });
    }
    if mul.len() != order || mul.iter().any(|row| row.len() != order) {
        return Err(GroupError::NotAGroup(format!("table is not {order}x{order}")));
    }
    let mut flat = Vec::with_capacity(order * order);
    for row in mul {
        for &x in row {
            if x >= order {
                return Err(GroupError::NotAGroup(format!("entry {x} out of range")));
            }
            flat.push(x as u16);
        }
    }
    let group = FiniteGroup::from_flat(name, order, flat)?;
    if let Some((a, b, c)) = group.associativity_failure() {
        return Err(GroupError::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
    }
    Ok(group)
}

impl FiniteGroup {
    /// Build from a flat table, locating the identity and inverses.
    /// Associativity is not checked here.
    fn from_flat(name: &str, order: usize, mul: Vec<u16>) -> Result<Self, GroupError> {
        debug_assert_eq!(mul.len(), order * order);
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {a} has no inverse")))?;
            inv[a] = b as u16;
        }
        Ok(FiniteGroup { name: name.to_string(), order, mul, identity, inv })
    }

    /// Build from a product closure over `0..order`. Used by constructions
    /// that are associative by construction.
    pub(crate) fn from_fn(
        name: &str,
        order: usize,
        mut product: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        if order > MAX_ORDER {
            return Err(GroupError::OrderCapExceeded { order: order as u64, cap: MAX_ORDER });
        }
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(product(a, b) as u16);
            }
        }
        Self::from_flat(name, order, mul)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row `a` of the table.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.mul[a * self.order..(a + 1) * self.order].iter().map(|&x| x as usize)
    }

    /// `a^k` for `k ≥ 0`.
    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Largest element order (equal to the exponent for the p-groups we build).
    pub fn max_element_order(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).max().unwrap_or(1)
    }

    /// Number of elements of each order, indexed by order.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.order + 1];
        for a in self.elements() {
            profile[self.element_order(a)] += 1;
        }
        profile
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_size(&self) -> usize {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .count()
    }

    /// First triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Table as nested rows, the shape [`make_group`] accepts.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.row(a).collect()).collect()
    }

    /// A small generating set, found greedily.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[self.identity] = true;
        // Prefer elements of large order so fewer generators are needed.
        let mut candidates: Vec<usize> = self.elements().collect();
        candidates.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        for a in candidates {
            if span[a] {
                continue;
            }
            gens.push(a);
            if self.close_under(&mut span, &gens) == self.order {
                break;
            }
        }
        gens
    }

    fn close_under(&self, span: &mut [bool], gens: &[usize]) -> usize {
        let mut stack: Vec<usize> = span.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect();
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !span[y] {
                    span[y] = true;
                    stack.push(y);
                }
            }
        }
        span.iter().filter(|&&s| s).count()
    }
}

/// `Z/nZ` under addition; element `i` is the residue `i`.
///
/// # Panics
/// If `n` is zero or exceeds [`MAX_ORDER`].
pub fn cyclic_group(n: usize) -> FiniteGroup {
    assert!((1..=MAX_ORDER).contains(&n), "cyclic group order {n} out of range");
    FiniteGroup::from_fn(&format!("zn:{n}"), n, |a, b| (a + b) % n).expect("Z/n is a group")
}

/// True when `g` is (table-identical to) `Z/nZ` for its own order.
pub fn is_standard_cyclic(g: &FiniteGroup) -> bool {
    let n = g.order();
    g.elements().all(|a| g.row(a).enumerate().all(|(b, ab)| ab == (a + b) % n))
}

/// A homomorphism given by the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        image: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if image.len() != source.order() {
            return Err(GroupError::NotAHomomorphism(format!(
                "image has {} entries, source has order {}",
                image.len(),
                source.order()
            )));
        }
        if let Some(&x) = image.iter().find(|&&x| x >= target.order()) {
            return Err(GroupError::NotAHomomorphism(format!("image entry {x} out of range")));
        }
        if image[source.identity()] != target.identity() {
            return Err(GroupError::NotAHomomorphism("identity not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(GroupError::NotAHomomorphism(format!(
                        "f({a}*{b}) != f({a})*f({b})"
                    )));
                }
            }
        }
        Ok(GroupHom { source, target, image })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let image = group.elements().collect();
        GroupHom { source: group.clone(), target: group, image }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &GroupHom) -> Result<GroupHom, GroupError> {
        if *first.target != *self.source {
            return Err(GroupError::NotAHomomorphism("composition across different groups".into()));
        }
        let image = first.image.iter().map(|&x| self.image[x]).collect();
        Ok(GroupHom { source: first.source.clone(), target: self.target.clone(), image })
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target && self.image.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// Data for `G ⋊_α Z/nZ`: `action[k]` is the permutation table of `α(k)`.
#[derive(Clone, Debug)]
pub struct SemidirectSpec {
    pub base: Arc<FiniteGroup>,
    pub n: usize,
    pub action: Vec<Vec<usize>>,
}

impl SemidirectSpec {
    /// Action generated by a single automorphism `α(1) = generator`;
    /// `α(k) = generator^k`.
    pub fn from_generator(base: Arc<FiniteGroup>, n: usize, generator: &[usize]) -> Self {
        let mut action = Vec::with_capacity(n);
        let mut current: Vec<usize> = base.elements().collect();
        for _ in 0..n {
            action.push(current.clone());
            current = current.iter().map(|&x| generator[x]).collect();
        }
        SemidirectSpec { base, n, action }
    }

    pub fn trivial(base: Arc<FiniteGroup>, n: usize) -> Self {
        let id: Vec<usize> = base.elements().collect();
        SemidirectSpec { base, n, action: vec![id; n] }
    }

    fn validate(&self) -> Result<(), GroupError> {
        let g = &*self.base;
        if self.n == 0 {
            return Err(GroupError::InvalidAction("n must be positive".into()));
        }
        if self.action.len() != self.n {
            return Err(GroupError::InvalidAction(format!(
                "expected {} automorphism tables, got {}",
                self.n,
                self.action.len()
            )));
        }
        for (k, table) in self.action.iter().enumerate() {
            if table.len() != g.order() || table.iter().any(|&x| x >= g.order()) {
                return Err(GroupError::InvalidAction(format!("table {k} malformed")));
            }
            let mut seen = vec![false; g.order()];
            for &x in table {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::InvalidAction(format!("table {k} is not a bijection")));
                }
            }
            for a in g.elements() {
                for b in g.elements() {
                    if table[g.mul(a, b)] != g.mul(table[a], table[b]) {
                        return Err(GroupError::InvalidAction(format!(
                            "table {k} is not an automorphism"
                        )));
                    }
                }
            }
        }
        if self.action[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(GroupError::InvalidAction("action[0] is not the identity".into()));
        }
        for j in 0..self.n {
            for k in 0..self.n {
                let jk = &self.action[(j + k) % self.n];
                if g.elements().any(|x| self.action[j][self.action[k][x]] != jk[x]) {
                    return Err(GroupError::InvalidAction(format!(
                        "action[{j}]∘action[{k}] != action[{}]",
                        (j + k) % self.n
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A group together with a section `φ : Z/nZ → A` and a retraction
/// `ψ : A → Z/nZ` satisfying `ψ∘φ = Id`.
#[derive(Clone, Debug)]
pub struct SplitPair {
    pub phi: GroupHom,
    pub psi: GroupHom,
}

/// `A = G ⋊_α Z/nZ` with `(g,j)(h,k) = (g·α(j)(h), j+k)`.
///
/// Element `(g, j)` has index `j·|G| + g`. Returns `A` together with the
/// section `φ(k) = (e, k)` and the projection `ψ(g, k) = k`.
pub fn semidirect_product(spec: &SemidirectSpec) -> Result<(Arc<FiniteGroup>, SplitPair), GroupError> {
    spec.validate()?;
    let g = &*spec.base;
    let (m, n) = (g.order(), spec.n);
    let order = (m as u64) * (n as u64);
    if order > MAX_ORDER as u64 {
        return Err(GroupError::OrderCapExceeded { order, cap: MAX_ORDER });
    }
    let name = format!("{}x|z{}", g.name(), n);
    let a = FiniteGroup::from_fn(&name, m * n, |x, y| {
        let (gx, jx) = (x % m, x / m);
        let (hy, ky) = (y % m, y / m);
        let prod = g.mul(gx, spec.action[jx][hy]);
        ((jx + ky) % n) * m + prod
    })?;
    let a = Arc::new(a);
    let zn = Arc::new(cyclic_group(n));
    let phi_image = (0..n).map(|k| k * m + g.identity()).collect();
    let psi_image = (0..m * n).map(|x| x / m).collect();
    let phi = GroupHom::new(zn.clone(), a.clone(), phi_image)?;
    let psi = GroupHom::new(a.clone(), zn, psi_image)?;
    debug_assert!(psi.after(&phi).map(|h| h.is_identity()).unwrap_or(false));
    Ok((a, SplitPair { phi, psi }))
}

/// All homomorphisms `A → Z/nZ`.
pub fn homs_to_cyclic(a: &Arc<FiniteGroup>, n: usize) -> Vec<GroupHom> {
    let zn = Arc::new(cyclic_group(n));
    let gens = a.generators();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    hom_search(a, n, &gens, 0, &mut assignment, &zn, &mut out);
    out
}

fn hom_search(
    a: &Arc<FiniteGroup>,
    n: usize,
    gens: &[usize],
    depth: usize,
    assignment: &mut [usize],
    zn: &Arc<FiniteGroup>,
    out: &mut Vec<GroupHom>,
) {
    if depth == gens.len() {
        if let Some(image) = extend_to_cyclic(a, n, gens, assignment) {
            out.push(GroupHom { source: a.clone(), target: zn.clone(), image });
        }
        return;
    }
    let ord = a.element_order(gens[depth]);
    for v in 0..n {
        // ψ(g)·ord(g) must vanish mod n.
        if (v * ord) % n != 0 {
            continue;
        }
        assignment[depth] = v;
        hom_search(a, n, gens, depth + 1, assignment, zn, out);
    }
}

/// Propagate generator images along the Cayley graph; `None` on conflict.
fn extend_to_cyclic(a: &FiniteGroup, n: usize, gens: &[usize], values: &[usize]) -> Option<Vec<usize>> {
    let mut image = vec![usize::MAX; a.order()];
    image[a.identity()] = 0;
    let mut stack = vec![a.identity()];
    while let Some(x) = stack.pop() {
        for (&g, &v) in gens.iter().zip(values) {
            let y = a.mul(x, g);
            let want = (image[x] + v) % n;
            if image[y] == usize::MAX {
                image[y] = want;
                stack.push(y);
            } else if image[y] != want {
                return None;
            }
        }
    }
    // A consistent labelling of the Cayley graph from generators is a homomorphism.
    Some(image)
}

/// Every pair `(φ, ψ)` with `φ : Z/nZ → A`, `ψ : A → Z/nZ`, `ψ∘φ = Id`.
pub fn enumerate_split_pairs(a: &Arc<FiniteGroup>, n: usize) -> Result<Vec<SplitPair>, GroupError> {
    if a.order() > MAX_ENUMERATION_ORDER {
        return Err(GroupError::OrderCapExceeded {
            order: a.order() as u64,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    if n == 0 || n > MAX_ORDER {
        return Err(GroupError::InvalidArgument(format!("n = {n} out of range")));
    }
    let zn = Arc::new(cyclic_group(n));
    let psis = homs_to_cyclic(a, n);
    // φ is determined by φ(1), any element with x^n = e.
    let roots: Vec<usize> = a.elements().filter(|&x| a.pow(x, n as u64) == a.identity()).collect();
    let mut pairs = Vec::new();
    for psi in &psis {
        for &x in &roots {
            if psi.apply(x) != 1 % n {
                continue;
            }
            let mut image = Vec::with_capacity(n);
            let mut cur = a.identity();
            for _ in 0..n {
                image.push(cur);
                cur = a.mul(cur, x);
            }
            let phi = GroupHom { source: zn.clone(), target: a.clone(), image };
            pairs.push(SplitPair { phi, psi: psi.clone() });
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_table() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    #[test]
    fn make_group_accepts_trivial_and_z2() {
        let t = make_group("t", 1, &[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.identity(), 0);
        let z2 = make_group("z2", 2, &z2_table()).unwrap();
        assert_eq!(z2, cyclic_group(2));
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn make_group_rejects_missing_inverse() {
        let err = make_group("bad", 2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(_)), "{err}");
    }

    #[test]
    fn make_group_rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not associative.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(make_group("loop", 5, &table), Err(GroupError::NotAGroup(_))));
    }

    #[test]
    fn make_group_rejects_bad_shapes() {
        assert!(make_group("x", 2, &[vec![0, 1]]).is_err());
        assert!(make_group("x", 2, &[vec![0, 2], vec![1, 0]]).is_err());
        assert!(matches!(
            make_group("x", 600, &[]),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn cyclic_basics() {
        assert_eq!(cyclic_group(1).order(), 1);
        let z4 = cyclic_group(4);
        assert_eq!(z4.inv(3), 1);
        let z6 = cyclic_group(6);
        assert_eq!(z6.mul(2, 5), 1);
        assert!(is_standard_cyclic(&z6));
    }

    #[test]
    fn s3_has_trivial_center() {
        let z3 = Arc::new(cyclic_group(3));
        let inversion: Vec<usize> = z3.elements().map(|x| z3.inv(x)).collect();
        let spec = SemidirectSpec::from_generator(z3, 2, &inversion);
        let (s3, pair) = semidirect_product(&spec).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.center_size(), 1);
        assert!(pair.psi.after(&pair.phi).unwrap().is_identity());
    }

    #[test]
    fn d4_order_profile() {
        let z4 = Arc::new(cyclic_group(4));
        let inversion: Vec<usize> = z4.elements().map(|x| z4.inv(x)).collect();
        let (d4, _) = semidirect_product(&SemidirectSpec::from_generator(z4, 2, &inversion)).unwrap();
        assert_eq!(d4.order(), 8);
        let profile = d4.order_profile();
        assert_eq!(profile[2], 5);
        assert_eq!(profile[4], 2);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn trivial_action_gives_abelian_direct_product() {
        let z3 = Arc::new(cyclic_group(3));
        let (a, _) = semidirect_product(&SemidirectSpec::trivial(z3, 4)).unwrap();
        assert_eq!(a.order(), 12);
        assert!(a.is_abelian());
        assert!(a.associativity_failure().is_none());
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        let z3 = Arc::new(cyclic_group(3));
        // Not a homomorphism of Z/3: swaps 0 and 1.
        let spec = SemidirectSpec { base: z3.clone(), n: 2, action: vec![vec![0, 1, 2], vec![1, 0, 2]] };
        assert!(matches!(semidirect_product(&spec), Err(GroupError::InvalidAction(_))));
        // Inversion has order 2, so it cannot generate an action of Z/3.
        let inversion: Vec<usize> = z3.elements().map(|x| z3.inv(x)).collect();
        let spec = SemidirectSpec { base: z3.clone(), n: 3, action: vec![vec![0, 1, 2], inversion.clone(), inversion] };
        assert!(matches!(semidirect_product(&spec), Err(GroupError::InvalidAction(_))));
        // action[0] must be the identity.
        let spec = SemidirectSpec { base: z3, n: 1, action: vec![vec![0, 2, 1]] };
        assert!(matches!(semidirect_product(&spec), Err(GroupError::InvalidAction(_))));
    }

    #[test]
    fn hom_validation() {
        let z4 = Arc::new(cyclic_group(4));
        let z2 = Arc::new(cyclic_group(2));
        assert!(GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).is_ok());
        assert!(GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 1, 0]).is_err());
        assert!(GroupHom::new(z4.clone(), z2.clone(), vec![1, 0, 1, 0]).is_err());
        assert!(GroupHom::new(z2, z4, vec![0, 1]).is_err());
    }

    #[test]
    fn composition_is_associative_with_identity_neutral() {
        let z8 = Arc::new(cyclic_group(8));
        let z4 = Arc::new(cyclic_group(4));
        let z2 = Arc::new(cyclic_group(2));
        let f = GroupHom::new(z8.clone(), z4.clone(), (0..8).map(|x| x % 4).collect()).unwrap();
        let g = GroupHom::new(z4.clone(), z4.clone(), (0..4).map(|x| (3 * x) % 4).collect()).unwrap();
        let h = GroupHom::new(z4.clone(), z2, (0..4).map(|x| x % 2).collect()).unwrap();
        let left = h.after(&g).unwrap().after(&f).unwrap();
        let right = h.after(&g.after(&f).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(f.after(&GroupHom::identity(z8)).unwrap(), f);
        assert_eq!(GroupHom::identity(z4).after(&f).unwrap(), f);
    }

    #[test]
    fn split_pairs_of_z2() {
        let z2 = Arc::new(cyclic_group(2));
        let pairs = enumerate_split_pairs(&z2, 2).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].phi.is_identity());
        assert!(pairs[0].psi.is_identity());
    }

    #[test]
    fn homs_to_cyclic_counts() {
        // |Hom(Z/6, Z/4)| = gcd(6, 4) = 2; |Hom(Z/2 x Z/2, Z/2)| = 4.
        let z6 = Arc::new(cyclic_group(6));
        assert_eq!(homs_to_cyclic(&z6, 4).len(), 2);
        let z2 = Arc::new(cyclic_group(2));
        let (v4, _) = semidirect_product(&SemidirectSpec::trivial(z2, 2)).unwrap();
        assert_eq!(homs_to_cyclic(&v4, 2).len(), 4);
    }
}

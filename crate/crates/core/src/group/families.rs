//! Named group families: S_3, D_4, Q_8, Heisenberg groups and GL(2, F_q).

use std::sync::Arc;

use super::{
    cyclic_group, semidirect_product, FiniteGroup, GroupError, GroupHom, SemidirectSpec, SplitPair,
    MAX_ORDER,
};

/// A group that comes with a split `ψ∘φ = Id` onto `Z/nZ`.
#[derive(Clone, Debug)]
pub struct SplitGroup {
    pub group: Arc<FiniteGroup>,
    pub n: usize,
    pub split: SplitPair,
}

fn inversion_action(base: &Arc<FiniteGroup>) -> Vec<usize> {
    base.elements().map(|x| base.inv(x)).collect()
}

fn rename(group: Arc<FiniteGroup>, split: SplitPair, name: &str) -> (Arc<FiniteGroup>, SplitPair) {
    let renamed = Arc::new((*group).clone().with_name(name));
    let zn = split.phi.source().clone();
    let phi = GroupHom::new(zn.clone(), renamed.clone(), split.phi.image().to_vec())
        .expect("renaming preserves the homomorphism");
    let psi = GroupHom::new(renamed.clone(), zn, split.psi.image().to_vec())
        .expect("renaming preserves the homomorphism");
    (renamed, SplitPair { phi, psi })
}

/// `S_3 = Z/3 ⋊ Z/2` with the generator of `Z/2` acting by inversion.
pub fn symmetric3() -> SplitGroup {
    let z3 = Arc::new(cyclic_group(3));
    let spec = SemidirectSpec::from_generator(z3.clone(), 2, &inversion_action(&z3));
    let (group, split) = semidirect_product(&spec).expect("valid action");
    let (group, split) = rename(group, split, "s3");
    SplitGroup { group, n: 2, split }
}

/// `D_4 = Z/4 ⋊ Z/2` with inversion.
pub fn dihedral4() -> SplitGroup {
    let z4 = Arc::new(cyclic_group(4));
    let spec = SemidirectSpec::from_generator(z4.clone(), 2, &inversion_action(&z4));
    let (group, split) = semidirect_product(&spec).expect("valid action");
    let (group, split) = rename(group, split, "d4");
    SplitGroup { group, n: 2, split }
}

/// The quaternion group. Index `4·s + u` is `(-1)^s · u` with
/// `u ∈ (1, i, j, k)`.
pub fn quaternion8() -> FiniteGroup {
    // unit products: (sign, unit) of u_a · u_b
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    FiniteGroup::from_fn("q8", 8, |a, b| {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (s, u) = UNITS[ua][ub];
        ((sa + sb + s) % 2) * 4 + u
    })
    .expect("Q8 is a group")
}

/// Mixed-radix encoding of coordinate vectors over `Z/nZ`.
fn encode(coords: &[usize], n: usize) -> usize {
    coords.iter().fold(0, |acc, &c| acc * n + c)
}

fn decode(mut index: usize, n: usize, len: usize) -> Vec<usize> {
    let mut coords = vec![0; len];
    for slot in coords.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    coords
}

/// The Heisenberg group `H_d(Z/nZ)` of upper unitriangular matrices
/// `[[1, a, c], [0, I, b], [0, 0, 1]]`, built as `G ⋊ Z/nZ`.
///
/// `G` is the subgroup where the last coordinate of `b` vanishes, and the
/// outer `Z/nZ` is generated by `x = E_{d-1,d}`, which acts on `G` by
/// conjugation: `(a, b, c) ↦ (a, b, c − k·a_last)`. `ψ` reads off the last
/// coordinate of `b` and `φ(k) = x^k`.
pub fn heisenberg(d: usize, n: usize) -> Result<SplitGroup, GroupError> {
    if d < 3 || n < 2 {
        return Err(GroupError::InvalidArgument(format!("heisenberg needs d ≥ 3 and n ≥ 2, got d={d}, n={n}")));
    }
    let order = (n as u64).checked_pow((2 * d - 3) as u32).unwrap_or(u64::MAX);
    if order > MAX_ORDER as u64 {
        return Err(GroupError::OrderCapExceeded { order, cap: MAX_ORDER });
    }
    let w = d - 2;
    // G coordinates: a (w entries), b without its last entry (w − 1), c.
    let len = 2 * w;
    let base_order = n.pow(len as u32);
    let split_g = |x: usize| {
        let v = decode(x, n, len);
        let a = v[..w].to_vec();
        let mut b = v[w..len - 1].to_vec();
        b.push(0);
        (a, b, v[len - 1])
    };
    let join_g = |a: &[usize], b: &[usize], c: usize| {
        let mut v = a.to_vec();
        v.extend_from_slice(&b[..w - 1]);
        v.push(c);
        encode(&v, n)
    };
    let base = FiniteGroup::from_fn(&format!("heis-base:{d}:{n}"), base_order, |x, y| {
        let (a1, b1, c1) = split_g(x);
        let (a2, b2, c2) = split_g(y);
        let dot: usize = a1.iter().zip(&b2).map(|(p, q)| p * q).sum();
        let a: Vec<usize> = a1.iter().zip(&a2).map(|(p, q)| (p + q) % n).collect();
        let b: Vec<usize> = b1.iter().zip(&b2).map(|(p, q)| (p + q) % n).collect();
        join_g(&a, &b, (c1 + c2 + dot) % n)
    })?;
    let base = Arc::new(base);
    let generator: Vec<usize> = base
        .elements()
        .map(|x| {
            let (a, b, c) = split_g(x);
            let shifted = (c + n - a[w - 1]) % n;
            join_g(&a, &b, shifted)
        })
        .collect();
    let spec = SemidirectSpec::from_generator(base, n, &generator);
    let (group, split) = semidirect_product(&spec)?;
    let (group, split) = rename(group, split, &format!("heis:{d}:{n}"));
    Ok(SplitGroup { group, n, split })
}

/// Arithmetic in `F_q` for `q ∈ {2, 3, 4, 5, 7, ...}` small: prime fields and `F_4`.
struct SmallField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl SmallField {
    fn new(q: usize) -> Option<Self> {
        let (add, mul): (Vec<usize>, Vec<usize>) = if q == 4 {
            // F_2[x]/(x² + x + 1); element b1·x + b0 is stored as 2·b1 + b0.
            let mul_poly = |a: usize, b: usize| {
                let mut prod = 0usize;
                for i in 0..2 {
                    if b >> i & 1 == 1 {
                        prod ^= a << i;
                    }
                }
                if prod & 4 != 0 {
                    prod ^= 0b111;
                }
                prod
            };
            (0..16).map(|i| (i / 4) ^ (i % 4)).zip((0..16).map(|i| mul_poly(i / 4, i % 4))).unzip()
        } else if q >= 2 && (2..q).all(|d| q % d != 0) {
            (0..q * q).map(|i| (i / q + i % q) % q).zip((0..q * q).map(|i| (i / q) * (i % q) % q)).unzip()
        } else {
            return None;
        };
        Some(SmallField { q, add, mul })
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    /// Smallest element generating the multiplicative group.
    fn primitive(&self) -> usize {
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    k += 1;
                }
                k == self.q - 1
            })
            .expect("finite fields have primitive elements")
    }
}

/// `GL(2, F_q)` with `ψ = log_g ∘ det` onto `Z/(q−1)Z` and the diagonal
/// section `φ(k) = diag(g^k, 1)`, where `g` is the least primitive element.
///
/// Matrices `[[a, b], [c, d]]` are enumerated row-major over the entries
/// (`a` slowest), keeping invertible ones; indices follow that order.
pub fn gl2(q: usize) -> Result<SplitGroup, GroupError> {
    if q < 3 {
        return Err(GroupError::InvalidArgument(format!("gl2 needs q ≥ 3, got {q}")));
    }
    let order = ((q * q - 1) * (q * q - q)) as u64;
    if order > MAX_ORDER as u64 {
        return Err(GroupError::OrderCapExceeded { order, cap: MAX_ORDER });
    }
    let field = SmallField::new(q)
        .ok_or_else(|| GroupError::InvalidArgument(format!("q = {q} is not a supported prime power")))?;
    let det = |m: [usize; 4]| field.add(field.mul(m[0], m[3]), field.neg(field.mul(m[1], m[2])));
    let mut matrices = Vec::new();
    let mut index_of = vec![usize::MAX; q.pow(4)];
    for code in 0..q.pow(4) {
        let m = [code / (q * q * q), code / (q * q) % q, code / q % q, code % q];
        if det(m) != 0 {
            index_of[code] = matrices.len();
            matrices.push(m);
        }
    }
    debug_assert_eq!(matrices.len() as u64, order);
    let code = |m: [usize; 4]| ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
    let matmul = |x: [usize; 4], y: [usize; 4]| {
        let e = |i: usize, j: usize| {
            field.add(field.mul(x[2 * i], y[j]), field.mul(x[2 * i + 1], y[2 + j]))
        };
        [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
    };
    let group = FiniteGroup::from_fn(&format!("gl2:{q}"), matrices.len(), |i, j| {
        index_of[code(matmul(matrices[i], matrices[j]))]
    })?;
    let group = Arc::new(group);

    let n = q - 1;
    let g = field.primitive();
    let mut log = vec![usize::MAX; q];
    let mut powers = Vec::with_capacity(n);
    let mut x = 1;
    for k in 0..n {
        log[x] = k;
        powers.push(x);
        x = field.mul(x, g);
    }
    let zn = Arc::new(cyclic_group(n));
    let phi_image = powers.iter().map(|&gk| index_of[code([gk, 0, 0, 1])]).collect();
    let psi_image = matrices.iter().map(|&m| log[det(m)]).collect();
    let phi = GroupHom::new(zn.clone(), group.clone(), phi_image)?;
    let psi = GroupHom::new(group.clone(), zn, psi_image)?;
    Ok(SplitGroup { group, n, split: SplitPair { phi, psi } })
}

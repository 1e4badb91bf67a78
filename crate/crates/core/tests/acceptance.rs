//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Oracles here are written independently of the library.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use acs_core::cohomology::{
    bockstein, class_order, coboundary, cup, cyclic_generator, is_coboundary, pullback,
    push_coefficients, twist_class, twist_verify, Cochain,
};
use acs_core::cs_engine::{
    consistency_check, cs_biquadratic, density_scan, preset_eval, BiquadFamilyInput, CsValue, PresetId,
};
use acs_core::group::{
    cyclic_group, dihedral4, enumerate_split_pairs, gl2, heisenberg, homs_to_cyclic, quaternion8,
    symmetric3, FiniteGroup, GroupHom,
};
use acs_core::number_theory::{kronecker, splitting_type, SplitType};

type Outcome = Result<String, String>;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Legendre symbol by Euler's criterion, `p` an odd prime.
fn euler(a: i64, p: u64) -> i8 {
    match pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit];
    let mut primes = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            primes.push(i as u64);
            for j in (i * i..limit).step_by(i) {
                composite[j] = true;
            }
        }
    }
    primes
}

fn squarefree(v: u64) -> bool {
    let mut d = 2;
    while d * d <= v {
        if v % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn half_if(c: bool) -> CsValue {
    if c {
        CsValue::half()
    } else {
        CsValue::zero()
    }
}

fn same_field_values() -> Outcome {
    let a = preset_eval(PresetId::S4Gl2f3_7537, 2777, 1).map_err(|e| e.to_string())?;
    let b = preset_eval(PresetId::S4_16t65_2777, 7537, 1).map_err(|e| e.to_string())?;
    if a == CsValue::zero() && b == CsValue::half() {
        Ok(format!("s4-gl2f3-7537(2777) = {a}, s4-16t65-2777(7537) = {b}"))
    } else {
        Err(format!("got {a} and {b}"))
    }
}

fn klein_closed_forms() -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for t in 2..=5000u64 {
        if !squarefree(t) {
            continue;
        }
        let ti = t as i64;
        if gcd(t, 145) == 1 {
            let expect = [
                half_if(t % 5 == 2 || t % 5 == 3),
                half_if(euler(ti, 29) == -1),
                half_if(euler(ti, 5) == -euler(ti, 29)),
            ];
            for (alpha, e) in (1..=3).zip(expect) {
                let got = preset_eval(PresetId::KleinQ8_145, t, alpha).map_err(|e| e.to_string())?;
                checked += 1;
                if got != e {
                    mismatches.push(format!("145 t={t} a={alpha}"));
                }
            }
        }
        if gcd(t, 105) == 1 {
            let expect = [
                half_if(t % 5 == 2 || t % 5 == 3),
                half_if(euler(ti, 3) == -euler(ti, 7)),
                half_if(euler(ti, 3) * euler(ti, 5) * euler(ti, 7) == -1),
            ];
            for (alpha, e) in (1..=3).zip(expect) {
                let got = preset_eval(PresetId::KleinQ8_105, t, alpha).map_err(|e| e.to_string())?;
                checked += 1;
                if got != e {
                    mismatches.push(format!("105 t={t} a={alpha}"));
                }
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{checked} evaluations, 0 mismatches"))
    } else {
        Err(format!("{} mismatches, first {}", mismatches.len(), mismatches[0]))
    }
}

fn preset_vs_engine() -> Outcome {
    let presets = [
        PresetId::KleinQ8_145,
        PresetId::KleinQ8_105,
        PresetId::KleinD4_145,
        PresetId::Zn2 { p: 5 },
        PresetId::Zn2 { p: 13 },
        PresetId::Zn2 { p: 17 },
        PresetId::Zn2 { p: 29 },
        PresetId::S4Gl2f3_7537,
    ];
    let mut checked = 0;
    for p in presets {
        let report = consistency_check(p, 2..=5000).map_err(|e| e.to_string())?;
        if !report.is_consistent() {
            return Err(format!("{p}: {} mismatches, first {:?}", report.mismatches.len(), report.mismatches[0]));
        }
        checked += report.checked;
    }
    Ok(format!("{checked} (t, alpha) pairs across {} presets, 0 mismatches", presets.len()))
}

fn random_biquad(rng: &mut ChaCha8Rng, primes: &[u64]) -> BiquadFamilyInput {
    loop {
        // distribute distinct primes among d1, d2, t1, t2 (or nowhere)
        let mut parts = [1u64; 4];
        for &p in primes {
            let slot = rng.gen_range(0..12);
            if slot < 4 && parts[slot].checked_mul(p).is_some_and(|v| v < 1 << 40) {
                parts[slot] *= p;
            }
        }
        let [a1, a2, t1, t2] = parts;
        if t1 == 1 || t2 == 1 || a1 * a2 == 1 {
            continue;
        }
        let d1 = if rng.gen_bool(0.5) { -(a1 as i64) } else { a1 as i64 };
        let d2 = if rng.gen_bool(0.5) { -(a2 as i64) } else { a2 as i64 };
        if d1 == 1 || d2 == 1 {
            continue;
        }
        let ps: Vec<u64> = primes.iter().copied().filter(|p| (a1 * a2) % p == 0).collect();
        let mut m = 1;
        while m == 1 {
            m = ps.iter().filter(|_| rng.gen_bool(0.5)).product();
        }
        return BiquadFamilyInput { d1, d2, t1, t2, m };
    }
}

fn biquadratic_vanishing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let primes = sieve(60);
    for i in 0..1000 {
        let input = random_biquad(&mut rng, &primes);
        match cs_biquadratic(&input) {
            Ok(v) if v == CsValue::zero() => {}
            other => return Err(format!("instance {i} {input:?} gave {other:?}")),
        }
    }
    Ok("1000 random valid inputs all 0".into())
}

fn generator_order() -> Outcome {
    let mut orders = Vec::new();
    for n in 2..=6u32 {
        let k = class_order(&cyclic_generator(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if k != n as u64 {
            return Err(format!("order {k} for n = {n}"));
        }
        orders.push(k);
    }
    // brute force: gen + d(b) is never zero for any 2-cochain b on Z/2
    let gen = cyclic_generator(2).unwrap().into_rep();
    let z2 = gen.group().clone();
    if gen.is_zero() {
        return Err("generator cochain is zero".into());
    }
    for code in 0..16u32 {
        let b = Cochain::from_values(z2.clone(), 2, 2, (0..4).map(|i| (code >> i) & 1).collect()).unwrap();
        if gen.add(&coboundary(&b).unwrap()).unwrap().is_zero() {
            return Err(format!("generator is the coboundary of cochain {code}"));
        }
    }
    Ok(format!("orders {orders:?}; n = 2 confirmed over all 16 cochains"))
}

fn twist() -> Outcome {
    let mut cases = vec![
        ("S3", symmetric3()),
        ("D4", dihedral4()),
        ("H3(Z/2)", heisenberg(3, 2).unwrap()),
        ("H3(Z/3)", heisenberg(3, 3).unwrap()),
    ];
    for (name, g) in cases.drain(..) {
        if !twist_verify(&g.split.phi, &g.split.psi).map_err(|e| format!("{name}: {e}"))? {
            return Err(format!("{name} failed"));
        }
    }
    let q8 = Arc::new(quaternion8());
    let pairs = enumerate_split_pairs(&q8, 2).map_err(|e| e.to_string())?;
    if !pairs.is_empty() {
        return Err(format!("Q8 has {} split pairs", pairs.len()));
    }
    let start = Instant::now();
    let g = gl2(3).unwrap();
    if !twist_verify(&g.split.phi, &g.split.psi).map_err(|e| format!("GL(2,3): {e}"))? {
        return Err("GL(2,3) failed".into());
    }
    // the twisted class itself is nontrivial on GL(2,3): 48^3 equations in 48^2 unknowns over Z/2
    let class = twist_class(&g.split.psi).map_err(|e| e.to_string())?;
    if is_coboundary(class.rep()).map_err(|e| e.to_string())?.is_coboundary {
        return Err("twisted class on GL(2,3) is a coboundary".into());
    }
    let gl_time = start.elapsed();
    if gl_time > Duration::from_secs(120) {
        return Err(format!("GL(2,3) took {gl_time:?}"));
    }
    Ok(format!("S3, D4, H3(Z/2), H3(Z/3), GL(2,3) verified; Q8 has no split pair; GL(2,3) in {gl_time:.2?}"))
}

struct AlgebraCase {
    name: &'static str,
    group: Arc<FiniteGroup>,
    n: u32,
}

fn random_cochain(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>, degree: usize, n: u32) -> Cochain {
    Cochain::from_fn(g.clone(), degree, n, |_| rng.gen_range(0..n as u64)).unwrap()
}

/// Highest degree kept under 2^18 entries, at most 4.
fn top_degree(order: usize) -> usize {
    (1..=4).take_while(|&k| (order as u64).pow(k as u32) <= 1 << 18).last().unwrap()
}

/// A homomorphism `Z/n → A` sending 1 to some non-identity `x` with `x^n = e`.
fn hom_from_cyclic(a: &Arc<FiniteGroup>, n: usize) -> GroupHom {
    let x = a.elements().find(|&x| x != a.identity() && a.pow(x, n as u64) == a.identity()).unwrap_or(a.identity());
    let image = (0..n).map(|k| a.pow(x, k as u64)).collect();
    GroupHom::new(Arc::new(cyclic_group(n)), a.clone(), image).unwrap()
}

/// `(dc)(t)` straight from the alternating-sum formula.
fn coboundary_at(c: &Cochain, t: &[usize]) -> i64 {
    let g = c.group();
    let k = c.degree();
    let mut acc = c.value(&t[1..]) as i64;
    for i in 0..k {
        let mut merged: Vec<usize> = t[..i].to_vec();
        merged.push(g.mul(t[i], t[i + 1]));
        merged.extend_from_slice(&t[i + 2..]);
        let v = c.value(&merged) as i64;
        acc += if i % 2 == 0 { -v } else { v };
    }
    let last = c.value(&t[..k]) as i64;
    acc += if k % 2 == 0 { -last } else { last };
    acc.rem_euclid(c.modulus() as i64)
}

/// Cocycle test at random tuples, for cochains whose coboundary is too large
/// to enumerate within the time budget.
fn sampled_cocycle(c: &Cochain, rng: &mut ChaCha8Rng, samples: usize) -> bool {
    let order = c.group().order();
    (0..samples).all(|_| {
        let t: Vec<usize> = (0..=c.degree()).map(|_| rng.gen_range(0..order)).collect();
        coboundary_at(c, &t) == 0
    })
}

fn algebra_case(case: &AlgebraCase, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (g, n) = (&case.group, case.n);
    let top = top_degree(g.order());
    let homs = homs_to_cyclic(g, n as usize);
    let psi = homs.iter().rev().find(|h| !h.is_identity()).unwrap_or(&homs[0]).clone();
    let phi = hom_from_cyclic(g, n as usize);
    let zn = phi.source().clone();
    let fail = |what: &str| Err(format!("{}: {what}", case.name));
    for _ in 0..100 {
        // d∘d = 0
        let a = random_cochain(rng, g, top - 2, n);
        if !coboundary(&coboundary(&a).unwrap()).unwrap().is_zero() {
            return fail("d∘d ≠ 0");
        }
        // Leibniz: d(a∪b) = da∪b + (−1)^p a∪db
        let (p, q) = if top >= 3 { (1, top - 2) } else { (0, 1) };
        let a = random_cochain(rng, g, p, n);
        let b = random_cochain(rng, g, q, n);
        let lhs = coboundary(&cup(&a, &b).unwrap()).unwrap();
        let first = cup(&coboundary(&a).unwrap(), &b).unwrap();
        let second = cup(&a, &coboundary(&b).unwrap()).unwrap();
        let rhs = if p % 2 == 0 { first.add(&second) } else { first.sub(&second) }.unwrap();
        if lhs != rhs {
            return fail("Leibniz rule");
        }
        // Bockstein of a cocycle is a cocycle
        let k = (top - 1).min(2);
        let mut z = coboundary(&random_cochain(rng, g, k - 1, n)).unwrap();
        let h1 = Cochain::from_hom(&homs[rng.gen_range(0..homs.len())]).unwrap();
        let h2 = Cochain::from_hom(&homs[rng.gen_range(0..homs.len())]).unwrap();
        z = z.add(&if k == 2 { cup(&h1, &h2).unwrap() } else { h1 }).unwrap();
        if !z.is_cocycle() {
            return fail("random cocycle");
        }
        let beta = bockstein(&z).map_err(|e| e.to_string())?;
        let full = (g.order() as u64).pow(k as u32 + 2) <= 1 << 20;
        if full && !beta.is_cocycle() || !full && !sampled_cocycle(&beta, rng, 4096) {
            return fail("Bockstein of a cocycle");
        }
        // pullback functoriality along Z/n → A → Z/n and A → Z/n → A, and naturality
        let c = random_cochain(rng, &zn, 2, n);
        let composite = psi.after(&phi).unwrap();
        if pullback(&composite, &c).unwrap() != pullback(&phi, &pullback(&psi, &c).unwrap()).unwrap() {
            return fail("pullback functoriality on Z/n");
        }
        let x = random_cochain(rng, g, top - 1, n);
        let composite = phi.after(&psi).unwrap();
        if pullback(&composite, &x).unwrap() != pullback(&psi, &pullback(&phi, &x).unwrap()).unwrap() {
            return fail("pullback functoriality on A");
        }
        if pullback(&phi, &coboundary(&x).unwrap()).unwrap() != coboundary(&pullback(&phi, &x).unwrap()).unwrap() {
            return fail("pullback commutes with d");
        }
        // coefficient pushforward commutes with d
        let y = random_cochain(rng, g, top - 1, 12);
        for m in [2, 3, 4, 6] {
            let pushed_d = push_coefficients(&coboundary(&y).unwrap(), m).unwrap();
            if pushed_d != coboundary(&push_coefficients(&y, m).unwrap()).unwrap() {
                return fail("push_coefficients and d");
            }
        }
    }
    Ok(())
}

fn algebra_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = vec![
        AlgebraCase { name: "S3", group: symmetric3().group, n: 2 },
        AlgebraCase { name: "D4", group: dihedral4().group, n: 2 },
        AlgebraCase { name: "Q8", group: Arc::new(quaternion8()), n: 2 },
        AlgebraCase { name: "H3(Z/2)", group: heisenberg(3, 2).unwrap().group, n: 2 },
        AlgebraCase { name: "H3(Z/3)", group: heisenberg(3, 3).unwrap().group, n: 3 },
        AlgebraCase { name: "GL(2,3)", group: gl2(3).unwrap().group, n: 2 },
    ];
    for n in 2..=6u32 {
        let name: &'static str = ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6"][n as usize - 2];
        cases.push(AlgebraCase { name, group: Arc::new(cyclic_group(n as usize)), n });
    }
    for case in &cases {
        algebra_case(case, &mut rng)?;
    }
    Ok(format!("5 identities x 100 random cochains on {} groups", cases.len()))
}

fn number_theory_oracle() -> Outcome {
    let primes = sieve(10_000);
    let mut evaluations = 0u64;
    for &p in primes.iter().skip(1) {
        for a in 1..p as i64 {
            if kronecker(a, p as i64) != euler(a, p) {
                return Err(format!("({a}/{p})"));
            }
            evaluations += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut trials = 0;
    while trials < 10_000 {
        let p = primes[rng.gen_range(0..primes.len())];
        let m: i64 = rng.gen_range(-1_000_000..1_000_000);
        if m == 0 || m == 1 || !squarefree(m.unsigned_abs()) {
            continue;
        }
        trials += 1;
        let disc = if m.rem_euclid(4) == 1 { m } else { 4 * m };
        let expect = if disc % p as i64 == 0 {
            SplitType::Ramified
        } else if p == 2 {
            if m.rem_euclid(8) == 1 {
                SplitType::Split
            } else {
                SplitType::Inert
            }
        } else if euler(m, p) == 1 {
            SplitType::Split
        } else {
            SplitType::Inert
        };
        let got = splitting_type(p, m).map_err(|e| e.to_string())?;
        if got != expect {
            return Err(format!("p = {p}, m = {m}: {got} vs {expect}"));
        }
    }
    Ok(format!("{evaluations} Legendre symbols and {trials} splitting types agree"))
}

fn density() -> Outcome {
    let mut out = Vec::new();
    for alpha in 1..=3 {
        let d = density_scan(PresetId::KleinQ8_145, alpha, 100_000).map_err(|e| e.to_string())?;
        if !(0.49..=0.51).contains(&d.ratio()) {
            return Err(format!("klein-q8-145 alpha {alpha} density {}", d.render()));
        }
        out.push(d.render());
    }
    let d = density_scan(PresetId::S4Gl2f3_7537, 1, 100_000).map_err(|e| e.to_string())?;
    if d.count_half != 0 {
        return Err(format!("s4-gl2f3-7537 has {} nonzero values", d.count_half));
    }
    Ok(format!("klein-q8-145 densities {}; s4-gl2f3-7537 density {}", out.join(", "), d.render()))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("same-field values", Duration::from_millis(10), same_field_values),
        ("klein closed forms", Duration::from_secs(1), klein_closed_forms),
        ("preset vs engine", Duration::from_secs(5), preset_vs_engine),
        ("biquadratic vanishing", Duration::from_secs(1), biquadratic_vanishing),
        ("generator order", Duration::from_secs(30), generator_order),
        ("twist verification", Duration::from_secs(120), twist),
        ("cohomology algebra", Duration::from_secs(10), algebra_suite),
        ("number theory oracle", Duration::from_secs(30), number_theory_oracle),
        ("density", Duration::from_secs(5), density),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {limit:?} limit")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} {} {name} [{elapsed:.2?}] {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

#![allow(dead_code)]

use hermsig::linalg::{dot, to_rat_vec, IntVec, QMat, Rat};
use hermsig::oracle::{dominant_weights_up_to, kernel_signature};
use hermsig::rootdata::{
    dominant_representative, freudenthal_multiplicities, generate_weyl_group, weyl_dimension, weyl_dimension_rat,
    DEFAULT_WEYL_CAP,
};
use hermsig::weylres::{build_W_theta, enumerate_W1};
use hermsig::{builtin_group, restrict, GroupLabel, PositiveSystem, RootDatum, SignatureEngine};
use num::{One, Zero};
use rand::Rng;
use std::collections::HashSet;

pub type Check = Result<usize, String>;

/// Root systems of rank at most 4, as Cartan types.
pub fn small_types() -> Vec<(char, usize)> {
    let mut v: Vec<(char, usize)> = (1..=4).map(|n| ('A', n)).collect();
    v.extend((2..=4).map(|n| ('B', n)));
    v.extend((2..=4).map(|n| ('C', n)));
    v.extend([('D', 4), ('G', 2), ('F', 4)]);
    v
}

/// Built-in real forms whose restricted rank is at most 4.
pub fn small_builtins() -> Vec<GroupLabel> {
    let mut v: Vec<GroupLabel> = (1..=8).map(GroupLabel::GL).collect();
    v.extend((2..=8).map(GroupLabel::SL));
    v.extend([GroupLabel::Sp(2), GroupLabel::Sp(3), GroupLabel::PSp(2), GroupLabel::PSp(3), GroupLabel::PSO(2)]);
    v.extend([GroupLabel::SO(3, 1), GroupLabel::SO(3, 3), GroupLabel::SO(5, 3), GroupLabel::SO(5, 5)]);
    v.extend([GroupLabel::SplitE6, GroupLabel::Compact('A', 2), GroupLabel::Compact('B', 2)]);
    v.push(GroupLabel::Complex('A', 2));
    v
}

pub fn datum_axioms(d: &RootDatum) -> Check {
    let roots: HashSet<&IntVec> = d.roots().iter().collect();
    let coroots: HashSet<&IntVec> = d.coroots().iter().collect();
    for i in 0..d.num_roots() {
        let (a, c) = (d.root(i), d.coroot(i));
        if dot(a, c) != 2 {
            return Err(format!("{}: <α, α∨> ≠ 2 for {a:?}", d.label()));
        }
        let neg: IntVec = a.iter().map(|x| -x).collect();
        if d.index_of(&neg).is_none() {
            return Err(format!("{}: −{a:?} is not a root", d.label()));
        }
        for j in 0..d.num_roots() {
            if !roots.contains(&d.reflect_weight(i, d.root(j))) {
                return Err(format!("{}: s_{i} does not preserve the roots", d.label()));
            }
            let cj = d.coroot(j);
            let p = dot(a, cj);
            let img: IntVec = cj.iter().zip(c).map(|(x, y)| x - p * y).collect();
            if !coroots.contains(&img) {
                return Err(format!("{}: s_{i}∨ does not preserve the coroots", d.label()));
            }
        }
        let coeff = d.simple_coefficients(i);
        if coeff.iter().any(|&x| x > 0) && coeff.iter().any(|&x| x < 0) {
            return Err(format!("{}: {a:?} has mixed-sign simple coefficients", d.label()));
        }
    }
    Ok(d.num_roots())
}

pub fn weyl_matches_freudenthal(d: &RootDatum, lam: &[i64]) -> Check {
    let pos = PositiveSystem::standard(d);
    let w = weyl_dimension(&pos, &to_rat_vec(lam)).map_err(|e| e.to_string())?;
    let f: u64 = freudenthal_multiplicities(&pos, lam).map_err(|e| e.to_string())?.values().sum();
    if w != f {
        return Err(format!("{} λ = {lam:?}: Weyl {w} vs Freudenthal {f}", d.label()));
    }
    Ok(1)
}

/// dim(kψ + (k−1)ρ) = k^{|R⁺|} dim(ψ).
pub fn homogeneity(d: &RootDatum, psi: &[i64], k: i64) -> Check {
    let pos = PositiveSystem::standard(d);
    let rho = pos.rho();
    let npos = pos.positive().len() as u32;
    let lhs_arg: Vec<Rat> = psi
        .iter()
        .zip(&rho)
        .map(|(&x, r)| Rat::from_integer((k * x).into()) + r * Rat::from_integer((k - 1).into()))
        .collect();
    // exact rationals: k^{|R⁺|} overflows u64 for F4
    let lhs = weyl_dimension_rat(&pos, &lhs_arg).map_err(|e| e.to_string())?;
    let rhs = weyl_dimension_rat(&pos, &to_rat_vec(psi)).map_err(|e| e.to_string())?
        * Rat::from_integer(num::BigInt::from(k).pow(npos));
    if lhs != rhs {
        return Err(format!("{} ψ = {psi:?}, k = {k}: {lhs} ≠ {rhs}", d.label()));
    }
    Ok(1)
}

/// dominant_representative is idempotent and constant on W-orbits.
pub fn dominant_rep_invariant(d: &RootDatum, phi: &[i64]) -> Check {
    let pos = PositiveSystem::standard(d);
    let w = generate_weyl_group(&pos, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?;
    let phi = to_rat_vec(phi);
    let (rep, _) = dominant_representative(&pos, &phi);
    if !pos.is_dominant_q(&rep) || dominant_representative(&pos, &rep).0 != rep {
        return Err(format!("{}: representative of {phi:?} is not a fixed point", d.label()));
    }
    for e in &w {
        if dominant_representative(&pos, &e.act_q(&phi)).0 != rep {
            return Err(format!("{}: representative differs along the orbit of {phi:?}", d.label()));
        }
    }
    Ok(w.len())
}

/// The right W_K0-cosets of W¹ partition W^θ (checked inside `enumerate_W1`), and every
/// w ∈ W¹ sends R⁺_K into P'.
pub fn coset_partition(label: &GroupLabel) -> Check {
    let rf = builtin_group(label).map_err(|e| e.to_string())?;
    let rd = restrict(&rf).map_err(|e| e.to_string())?;
    let w = build_W_theta(&rf, &rd).map_err(|e| e.to_string())?;
    let c = enumerate_W1(&rd, &w).map_err(|e| format!("{label}: {e}"))?;
    if c.reps.len() * w.w_k.order() != w.order() {
        return Err(format!("{label}: |W¹|·|W_K0| ≠ |W^θ|"));
    }
    let mut seen = vec![0usize; c.reps.len()];
    for &k in &c.coset_of {
        seen[k] += 1;
    }
    if seen.iter().any(|&s| s != w.w_k.order()) {
        return Err(format!("{label}: cosets have unequal sizes"));
    }
    Ok(w.order())
}

/// ε(1) = +1 for every λ in a small box of T_c coordinates.
pub fn epsilon_normalized(label: &GroupLabel, bound: i64) -> Check {
    let rf = builtin_group(label).map_err(|e| e.to_string())?;
    let engine = SignatureEngine::new(&rf).map_err(|e| e.to_string())?;
    let n = rf.compact_rank();
    let mut checked = 0;
    for lam in boxed(n, 0, bound) {
        let Ok(lc) = engine.normalize(&lam) else { continue };
        let e = engine.epsilon(&lc, 0).map_err(|e| e.to_string())?;
        if e != 1 {
            return Err(format!("{label}: ε(1) = {e} at λ_c = {lc:?}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// SL(2,R): ε(s) = (−1)^{λ_c}. GL(2m,R): ε(s_m) = (−1)^{2μ_m} with λ_c = 2μ.
pub fn epsilon_parity() -> Check {
    let mut checked = 0;
    let rf = builtin_group(&GroupLabel::SL(2)).map_err(|e| e.to_string())?;
    let engine = SignatureEngine::new(&rf).map_err(|e| e.to_string())?;
    for k in 1..=12i64 {
        let e = engine.epsilon(&[k], 1).map_err(|e| e.to_string())?;
        if e != if k % 2 == 0 { 1 } else { -1 } {
            return Err(format!("SL(2,R): ε(s) = {e} at λ_c = {k}"));
        }
        checked += 1;
    }
    for m in 1..=3usize {
        let rf = builtin_group(&GroupLabel::GL(2 * m)).map_err(|e| e.to_string())?;
        let engine = SignatureEngine::new(&rf).map_err(|e| e.to_string())?;
        for lc in boxed(m, 1, 4) {
            if lc.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let mut target = lc.clone();
            target[m - 1] = -target[m - 1];
            let pos = engine
                .w1()
                .reps
                .iter()
                .position(|&i| engine.weyl_group().elements()[i].act(&lc) == target)
                .ok_or_else(|| format!("GL({}): s_m is missing from W¹", 2 * m))?;
            let e = engine.epsilon(&lc, pos).map_err(|e| e.to_string())?;
            if e != if lc[m - 1] % 2 == 0 { 1 } else { -1 } {
                return Err(format!("GL({}): ε(s_m) = {e} at λ_c = {lc:?}", 2 * m));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn q(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// A random unimodular integer matrix, built from elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> QMat {
    let mut a = QMat::identity(n);
    if n < 2 {
        return a;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = q(rng.gen_range(-2..=2));
        for col in 0..n {
            let v = a.get(i, col) + &c * a.get(j, col);
            a.set(i, col, v);
        }
    }
    a
}

/// A kernel-signature instance: `zeros` blocks (±1, T = 0) and `pairs` blocks
/// (S = diag(1, −1), T = x·[[0, 1], [−1, 0]]), conjugated by a random unimodular A.
/// Returns (T', S', expected (p₁, q₁)).
pub fn kernel_instance<R: Rng>(rng: &mut R, zeros: usize, pairs: usize) -> (QMat, QMat, (usize, usize)) {
    let n = zeros + 2 * pairs;
    let mut s = QMat::zeros(n, n);
    let mut t = QMat::zeros(n, n);
    let (mut p, mut qq) = (0, 0);
    for i in 0..zeros {
        if rng.gen_bool(0.5) {
            s.set(i, i, Rat::one());
            p += 1;
        } else {
            s.set(i, i, -Rat::one());
            qq += 1;
        }
    }
    for k in 0..pairs {
        let i = zeros + 2 * k;
        let x = q(rng.gen_range(1..=5));
        s.set(i, i, Rat::one());
        s.set(i + 1, i + 1, -Rat::one());
        t.set(i, i + 1, x.clone());
        t.set(i + 1, i, -x);
    }
    let a = random_unimodular(rng, n);
    let ainv = a.inverse().expect("unimodular");
    let s2 = a.transpose().mul(&s).mul(&a);
    let t2 = ainv.mul(&t).mul(&a);
    (t2, s2, (p, qq))
}

pub fn kernel_case<R: Rng>(rng: &mut R, zeros: usize, pairs: usize) -> Check {
    let (t, s, want) = kernel_instance(rng, zeros, pairs);
    let got = kernel_signature(&t, &s).map_err(|e| e.to_string())?;
    if got != want {
        return Err(format!("kernel signature {got:?}, expected {want:?} ({zeros} zero blocks, {pairs} pairs)"));
    }
    Ok(1)
}

/// All integer vectors in [lo, hi]^n, lexicographic.
pub fn boxed(n: usize, lo: i64, hi: i64) -> Vec<IntVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: IntVec| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Self-dual weakly decreasing λ ∈ Z^n with |λ_i| ≤ bound.
pub fn self_dual_gl(n: usize, bound: i64) -> Vec<IntVec> {
    let m = n / 2;
    boxed(m, 0, bound)
        .into_iter()
        .filter(|h| h.windows(2).all(|w| w[0] >= w[1]))
        .map(|h| {
            let mut lam = h.clone();
            if n % 2 == 1 {
                lam.push(0);
            }
            lam.extend(h.iter().rev().map(|x| -x));
            lam
        })
        .collect()
}

pub fn weights_up_to(d: &RootDatum, cap: u64) -> Vec<IntVec> {
    dominant_weights_up_to(d, cap).unwrap().into_iter().map(|(a, _)| a).collect()
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(Zero::is_zero)
}

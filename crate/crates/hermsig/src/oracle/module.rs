//! Irreducible highest-weight modules built weight space by weight space, with the
//! contravariant (Shapovalov) form and the invariant symmetric form of the split real form.

use super::inertia::{inertia, Inertia};
use crate::error::{ensure_internal, Error, Result};
use crate::linalg::{q, to_rat_vec, IntVec, QMat, Rat};
use crate::rootdata::{check_finite_type, weyl_dimension, PositiveSystem, RootDatum};
use num::Zero;
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_MODULE_CAP: u64 = 400;

/// A weight space, indexed by its depth k with μ = λ − Σ k_i α_i.
#[derive(Clone, Debug)]
struct Space {
    depth: Vec<usize>,
    dim: usize,
    /// Basis vector j is f_i applied to basis vector b of the space at depth k − e_i.
    origin: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct ExplicitModule {
    cartan: Vec<Vec<i64>>,
    lambda: IntVec,
    spaces: Vec<Space>,
    index: HashMap<Vec<usize>, usize>,
    /// e[(s, i)] maps space s to the space at depth k − e_i.
    e: HashMap<(usize, usize), QMat>,
    /// f[(s, i)] maps space s to the space at depth k + e_i.
    f: HashMap<(usize, usize), QMat>,
}

fn shift(k: &[usize], i: usize, up: bool) -> Option<Vec<usize>> {
    let mut v = k.to_vec();
    if up {
        v[i] += 1;
    } else {
        v[i] = v[i].checked_sub(1)?;
    }
    Some(v)
}

/// Builds the irreducible module of highest weight λ (fundamental-weight coordinates).
pub fn construct_irrep(cartan: &[Vec<i64>], lambda: &[i64], cap: u64) -> Result<ExplicitModule> {
    check_finite_type(cartan)?;
    let n = cartan.len();
    if lambda.len() != n {
        return Err(Error::Invalid(format!("λ has {} entries for rank {n}", lambda.len())));
    }
    if let Some(i) = lambda.iter().position(|&x| x < 0) {
        let mut cor = vec![0; n];
        cor[i] = 1;
        return Err(Error::NotDominant { coroot: cor, value: lambda[i].to_string() });
    }
    let pos = PositiveSystem::standard(&RootDatum::from_cartan(cartan, "oracle")?);
    let expected = weyl_dimension(&pos, &to_rat_vec(lambda))?;
    if expected > cap {
        return Err(Error::CapExceeded { what: format!("dimension {expected} of the module"), cap: cap as usize });
    }

    let mut m = ExplicitModule {
        cartan: cartan.to_vec(),
        lambda: lambda.to_vec(),
        spaces: vec![Space { depth: vec![0; n], dim: 1, origin: Vec::new() }],
        index: HashMap::new(),
        e: HashMap::new(),
        f: HashMap::new(),
    };
    m.index.insert(vec![0; n], 0);
    let mut frontier = vec![0usize];
    let mut total = 1u64;
    while !frontier.is_empty() {
        let mut next_depths: Vec<Vec<usize>> = frontier
            .iter()
            .flat_map(|&s| (0..n).map(move |i| (s, i)))
            .map(|(s, i)| shift(&m.spaces[s].depth, i, true).unwrap())
            .collect();
        next_depths.sort();
        next_depths.dedup();
        let mut next = Vec::new();
        for k in next_depths {
            if let Some(s) = m.build_space(&k)? {
                total += m.spaces[s].dim as u64;
                ensure_internal!(total <= expected, "module exceeds its Weyl dimension {expected}");
                next.push(s);
            }
        }
        frontier = next;
    }
    ensure_internal!(total == expected, "module dimension {total} ≠ Weyl dimension {expected}");
    Ok(m)
}

impl ExplicitModule {
    fn space_of(&self, k: &[usize]) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// ⟨μ, α_i∨⟩ for the weight at depth k.
    pub fn pairing(&self, k: &[usize], i: usize) -> i64 {
        self.lambda[i] - (0..k.len()).map(|j| k[j] as i64 * self.cartan[i][j]).sum::<i64>()
    }

    fn build_space(&mut self, k: &[usize]) -> Result<Option<usize>> {
        let n = k.len();
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            if let Some(src) = shift(k, i, false).and_then(|d| self.space_of(&d)) {
                for b in 0..self.spaces[src].dim {
                    cands.push((i, b));
                }
            }
        }
        if cands.is_empty() {
            return Ok(None);
        }
        // Ψ(c) = (e_j c)_j with e_j f_i b = f_i e_j b + δ_ij ⟨μ_b, α_i∨⟩ b
        let targets: Vec<(usize, usize)> = (0..n)
            .filter_map(|j| shift(k, j, false).and_then(|d| self.space_of(&d)).map(|s| (j, s)))
            .collect();
        let len: usize = targets.iter().map(|&(_, s)| self.spaces[s].dim).sum();
        let mut psi = QMat::zeros(len, cands.len());
        for (ci, &(i, b)) in cands.iter().enumerate() {
            let src = self.space_of(&shift(k, i, false).unwrap()).unwrap();
            let mut off = 0;
            for &(j, tgt) in &targets {
                let dt = self.spaces[tgt].dim;
                let mut col = vec![Rat::zero(); dt];
                if let Some(&mid) = shift(&self.spaces[src].depth, j, false).as_ref().and_then(|d| self.index.get(d)) {
                    let ej = &self.e[&(src, j)];
                    let fi = &self.f[&(mid, i)];
                    for (r, c) in col.iter_mut().enumerate() {
                        let mut acc = Rat::zero();
                        for t in 0..self.spaces[mid].dim {
                            acc += fi.get(r, t) * ej.get(t, b);
                        }
                        *c = acc;
                    }
                }
                if i == j {
                    debug_assert_eq!(tgt, src);
                    col[b] += q(self.pairing(&self.spaces[src].depth, i));
                }
                for (r, v) in col.into_iter().enumerate() {
                    psi.set(off + r, ci, v);
                }
                off += dt;
            }
        }
        let (rref, pivots) = psi.rref();
        if pivots.is_empty() {
            return Ok(None);
        }
        let d = pivots.len();
        let s = self.spaces.len();
        self.spaces.push(Space { depth: k.to_vec(), dim: d, origin: pivots.iter().map(|&p| cands[p]).collect() });
        self.index.insert(k.to_vec(), s);
        // f_i on the previous spaces, in the new basis
        let mut fmats: BTreeMap<usize, QMat> = BTreeMap::new();
        for (ci, &(i, b)) in cands.iter().enumerate() {
            let src = self.space_of(&shift(k, i, false).unwrap()).unwrap();
            let fm = fmats.entry(i).or_insert_with(|| QMat::zeros(d, self.spaces[src].dim));
            for r in 0..d {
                fm.set(r, b, rref.get(r, ci).clone());
            }
        }
        for (i, fm) in fmats {
            let src = self.space_of(&shift(k, i, false).unwrap()).unwrap();
            self.f.insert((src, i), fm);
        }
        let mut off = 0;
        for &(j, tgt) in &targets {
            let dt = self.spaces[tgt].dim;
            let mut em = QMat::zeros(dt, d);
            for (col, &p) in pivots.iter().enumerate() {
                for r in 0..dt {
                    em.set(r, col, psi.get(off + r, p).clone());
                }
            }
            self.e.insert((s, j), em);
            off += dt;
        }
        Ok(Some(s))
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }
    pub fn dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim).sum()
    }
    pub fn num_spaces(&self) -> usize {
        self.spaces.len()
    }
    pub fn depth(&self, s: usize) -> &[usize] {
        &self.spaces[s].depth
    }
    pub fn space_dim(&self, s: usize) -> usize {
        self.spaces[s].dim
    }

    /// Weight of space s in fundamental-weight coordinates.
    pub fn weight(&self, s: usize) -> IntVec {
        (0..self.rank()).map(|i| self.pairing(&self.spaces[s].depth, i)).collect()
    }

    /// Weight multiplicities keyed by fundamental-weight coordinates.
    pub fn multiplicities(&self) -> BTreeMap<IntVec, u64> {
        (0..self.spaces.len()).map(|s| (self.weight(s), self.spaces[s].dim as u64)).collect()
    }

    /// e_i on space s, or None when e_i maps it to zero.
    pub fn e_block(&self, s: usize, i: usize) -> Option<&QMat> {
        self.e.get(&(s, i))
    }
    pub fn f_block(&self, s: usize, i: usize) -> Option<&QMat> {
        self.f.get(&(s, i))
    }

    fn neighbour(&self, s: usize, i: usize, up: bool) -> Option<usize> {
        shift(&self.spaces[s].depth, i, up).and_then(|d| self.space_of(&d))
    }

    /// Checks [e_i, f_j] = δ_ij h_i on every weight space.
    pub fn check_commutators(&self) -> Result<()> {
        let n = self.rank();
        for s in 0..self.spaces.len() {
            let d = self.spaces[s].dim;
            for i in 0..n {
                for j in 0..n {
                    let mut terms: Vec<QMat> = Vec::new();
                    if let Some(up) = self.neighbour(s, j, true) {
                        if let (Some(fj), Some(ei)) = (self.f_block(s, j), self.e_block(up, i)) {
                            terms.push(ei.mul(fj));
                        }
                    }
                    if let Some(down) = self.neighbour(s, i, false) {
                        if let (Some(ei), Some(fj)) = (self.e_block(s, i), self.f_block(down, j)) {
                            terms.push(fj.mul(ei).scale(&q(-1)));
                        }
                    }
                    let rows = terms.first().map_or(d, |t| t.rows());
                    let mut lhs = QMat::zeros(rows, d);
                    for t in &terms {
                        ensure_internal!(t.rows() == rows, "commutator terms land in different spaces");
                        lhs = lhs.add(t);
                    }
                    if i == j {
                        let expect = QMat::identity(d).scale(&q(self.pairing(&self.spaces[s].depth, i)));
                        ensure_internal!(lhs == expect, "[e_{i}, f_{i}] ≠ h_{i} on weight {:?}", self.weight(s));
                    } else {
                        ensure_internal!(lhs.is_zero(), "[e_{i}, f_{j}] ≠ 0 on weight {:?}", self.weight(s));
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies a word of lowering operators (rightmost first) starting from space s.
    fn apply_f_word(&self, s: usize, word: &[usize]) -> Option<(usize, QMat)> {
        let mut cur = s;
        let mut m = QMat::identity(self.spaces[s].dim);
        for &i in word.iter().rev() {
            let next = self.neighbour(cur, i, true)?;
            m = self.f_block(cur, i)?.mul(&m);
            cur = next;
        }
        Some((cur, m))
    }

    /// Checks the Serre relations Σ_s (−1)^s C(N,s) f_i^(N−s) f_j f_i^s = 0, N = 1 − a_ij.
    pub fn check_serre(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let big = (1 - self.cartan[i][j]) as usize;
                for s in 0..self.spaces.len() {
                    let mut acc: Option<(usize, QMat)> = None;
                    let mut binom = 1i64;
                    for t in 0..=big {
                        let mut word = vec![i; big - t];
                        word.push(j);
                        word.extend(std::iter::repeat(i).take(t));
                        if let Some((tgt, mat)) = self.apply_f_word(s, &word) {
                            let c = q(if t % 2 == 0 { binom } else { -binom });
                            let term = mat.scale(&c);
                            acc = Some(match acc {
                                None => (tgt, term),
                                Some((t0, a)) => {
                                    ensure_internal!(t0 == tgt, "Serre terms land in different spaces");
                                    (t0, a.add(&term))
                                }
                            });
                        }
                        binom = binom * (big - t) as i64 / (t as i64 + 1);
                    }
                    if let Some((_, a)) = acc {
                        ensure_internal!(a.is_zero(), "Serre relation ({i},{j}) fails on weight {:?}", self.weight(s));
                    }
                }
            }
        }
        Ok(())
    }

    /// Contravariant form with ⟨v_λ, v_λ⟩ = 1 and ⟨f_i x, y⟩ = ⟨x, e_i y⟩, per weight space.
    pub fn shapovalov(&self) -> Vec<QMat> {
        let mut g: Vec<QMat> = Vec::with_capacity(self.spaces.len());
        for s in 0..self.spaces.len() {
            let d = self.spaces[s].dim;
            if s == 0 {
                g.push(QMat::identity(1));
                continue;
            }
            let mut m = QMat::zeros(d, d);
            for (a, &(i, b)) in self.spaces[s].origin.iter().enumerate() {
                let src = self.neighbour(s, i, false).unwrap();
                let ei = self.e_block(s, i).unwrap();
                let row = g[src].mul(ei);
                for c in 0..d {
                    m.set(a, c, row.get(b, c).clone());
                }
            }
            g.push(m);
        }
        g
    }

    /// Positive definiteness of every Shapovalov block (the module is irreducible).
    pub fn check_shapovalov(&self) -> Result<()> {
        for (s, g) in self.shapovalov().iter().enumerate() {
            ensure_internal!(g.is_symmetric(), "Shapovalov block {s} is not symmetric");
            let inr = inertia(g)?;
            ensure_internal!(inr.p == g.rows(), "Shapovalov block on {:?} is not positive definite", self.weight(s));
        }
        Ok(())
    }
}

/// Invariant symmetric form of the split real form, stored as blocks S_s on V_μ × V_−μ.
#[derive(Clone, Debug)]
pub struct GramForm {
    /// blocks[s] pairs space s with space partner[s].
    pub blocks: Vec<QMat>,
    pub partner: Vec<usize>,
    /// The invariant bilinear form is alternating; the Hermitian form is then i·S.
    pub skew: bool,
    /// Inertia of the Hermitian form (S, or i·S when skew).
    pub inertia: Inertia,
}

impl GramForm {
    /// Full matrix in the basis ordered by weight space.
    pub fn dense(&self, m: &ExplicitModule) -> QMat {
        let offs: Vec<usize> = (0..m.num_spaces())
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += m.space_dim(s);
                Some(o)
            })
            .collect();
        let n = m.dim();
        let mut out = QMat::zeros(n, n);
        for s in 0..m.num_spaces() {
            let t = self.partner[s];
            let b = &self.blocks[s];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.set(offs[s] + r, offs[t] + c, b.get(r, c).clone());
                }
            }
        }
        out
    }
}

/// Solves for S on V × V from S(v_λ, lowest) = 1 and S(f_i x, y) = −S(x, f_i y),
/// then verifies invariance under every e_i, f_i exactly. S is symmetric or alternating.
pub fn invariant_symmetric_form(m: &ExplicitModule) -> Result<GramForm> {
    let n = m.rank();
    let lowest = (0..m.num_spaces()).max_by_key(|&s| m.depth(s).iter().sum::<usize>()).unwrap();
    let low_w = m.weight(lowest);
    let neg: IntVec = m.lambda.iter().map(|x| -x).collect();
    if low_w != neg || m.space_dim(lowest) != 1 {
        return Err(Error::Precondition(format!(
            "highest weight {:?} is not self-dual (lowest weight {low_w:?})",
            m.lambda
        )));
    }
    let kl = m.depth(lowest).to_vec();
    let partner: Vec<usize> = (0..m.num_spaces())
        .map(|s| {
            let d: Vec<usize> = kl.iter().zip(m.depth(s)).map(|(a, b)| a - b).collect();
            m.space_of(&d).ok_or_else(|| Error::Internal(format!("no partner space for {:?}", m.weight(s))))
        })
        .collect::<Result<_>>()?;
    let mut blocks: Vec<QMat> = Vec::with_capacity(m.num_spaces());
    for s in 0..m.num_spaces() {
        let t = partner[s];
        let (d, dt) = (m.space_dim(s), m.space_dim(t));
        ensure_internal!(d == dt, "weights ±μ have different multiplicities");
        if s == 0 {
            blocks.push(QMat::identity(1));
            continue;
        }
        let mut b = QMat::zeros(d, dt);
        for (a, &(i, src_b)) in m.spaces[s].origin.iter().enumerate() {
            let src = m.neighbour(s, i, false).unwrap();
            // f_i y for y in V(partner) lands in V(partner + e_i) = partner of src
            if let Some(fi) = m.f_block(t, i) {
                ensure_internal!(m.neighbour(t, i, true) == Some(partner[src]), "partner bookkeeping");
                let row = blocks[src].mul(fi);
                for c in 0..dt {
                    b.set(a, c, -row.get(src_b, c).clone());
                }
            }
        }
        blocks.push(b);
    }
    let symmetric = (0..m.num_spaces()).all(|s| blocks[partner[s]] == blocks[s].transpose());
    let skew = (0..m.num_spaces()).all(|s| blocks[partner[s]] == blocks[s].transpose().scale(&q(-1)));
    ensure_internal!(symmetric || skew, "invariant form is neither symmetric nor skew");
    // S(X x, y) + S(x, X y) = 0 for X = e_i, f_i
    for s in 0..m.num_spaces() {
        for i in 0..n {
            for up in [false, true] {
                let (Some(xs), x_block) = (m.neighbour(s, i, up), if up { m.f_block(s, i) } else { m.e_block(s, i) })
                else {
                    continue;
                };
                let Some(xm) = x_block else { continue };
                // y ranges over the partner of xs
                let y = partner[xs];
                let lhs = xm.transpose().mul(&blocks[xs]);
                let other = if up { m.f_block(y, i) } else { m.e_block(y, i) };
                let rhs = match other {
                    Some(ym) => blocks[s].mul(ym),
                    None => QMat::zeros(m.space_dim(s), m.space_dim(y)),
                };
                ensure_internal!(lhs.add(&rhs).is_zero(), "form is not invariant under {}_{i}", if up { "f" } else { "e" });
            }
        }
    }
    let mut inr = Inertia { p: 0, q: 0, z: 0 };
    for s in 0..m.num_spaces() {
        let t = partner[s];
        if t == s && skew {
            // i·S is Hermitian with eigenvalues in ± pairs
            let r = blocks[s].rank();
            inr.p += r / 2;
            inr.q += r / 2;
            inr.z += m.space_dim(s) - r;
        } else if t == s {
            let x = inertia(&blocks[s])?;
            inr.p += x.p;
            inr.q += x.q;
            inr.z += x.z;
        } else if s < t {
            let r = blocks[s].rank();
            let d = m.space_dim(s);
            inr.p += r;
            inr.q += r;
            inr.z += 2 * (d - r);
        }
    }
    ensure_internal!(inr.z == 0, "invariant form is degenerate on an irreducible module");
    Ok(GramForm { blocks, partner, skew: !symmetric, inertia: inr })
}

/// Dimension of the space of invariant bilinear forms, by a dense solve.
/// Intended for small modules only.
pub fn invariant_form_nullity(m: &ExplicitModule, max_dim: usize) -> Result<usize> {
    let n = m.dim();
    if n > max_dim {
        return Err(Error::CapExceeded { what: "dense invariance solve".into(), cap: max_dim });
    }
    let offs: Vec<usize> = (0..m.num_spaces())
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += m.space_dim(s);
            Some(o)
        })
        .collect();
    let mut gens: Vec<QMat> = Vec::new();
    for i in 0..m.rank() {
        for up in [false, true] {
            let mut g = QMat::zeros(n, n);
            for s in 0..m.num_spaces() {
                let (Some(t), Some(b)) = (m.neighbour(s, i, up), if up { m.f_block(s, i) } else { m.e_block(s, i) })
                else {
                    continue;
                };
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        g.set(offs[t] + r, offs[s] + c, b.get(r, c).clone());
                    }
                }
            }
            gens.push(g);
        }
        let mut h = QMat::zeros(n, n);
        for s in 0..m.num_spaces() {
            let v = q(m.pairing(m.depth(s), i));
            for r in 0..m.space_dim(s) {
                h.set(offs[s] + r, offs[s] + r, v.clone());
            }
        }
        gens.push(h);
    }
    // unknowns S[a][b]; equations (XᵀS + SX)[a][b] = 0
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for x in &gens {
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                for c in 0..n {
                    let xca = x.get(c, a);
                    if !xca.is_zero() {
                        row[c * n + b] += xca;
                    }
                    let xcb = x.get(c, b);
                    if !xcb.is_zero() {
                        row[a * n + c] += xcb;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(n * n);
    }
    Ok(n * n - QMat::from_rows(&rows).rank())
}

/// |p − q| of the invariant form of the split real form on the irreducible of highest weight λ.
pub fn oracle_sig_split(cartan: &[Vec<i64>], lambda: &[i64]) -> Result<u64> {
    oracle_sig_split_capped(cartan, lambda, DEFAULT_MODULE_CAP)
}

pub fn oracle_sig_split_capped(cartan: &[Vec<i64>], lambda: &[i64], cap: u64) -> Result<u64> {
    let m = construct_irrep(cartan, lambda, cap)?;
    let g = invariant_symmetric_form(&m)?;
    Ok(g.inertia.sig() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{cartan_matrix, freudenthal_multiplicities};

    fn cm(f: char, n: usize) -> Vec<Vec<i64>> {
        cartan_matrix(f, n).unwrap()
    }

    #[test]
    fn a1_fundamental() {
        let m = construct_irrep(&cm('A', 1), &[1], 400).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.f_block(0, 0).unwrap(), &QMat::identity(1));
        assert_eq!(m.e_block(1, 0).unwrap(), &QMat::identity(1));
        m.check_commutators().unwrap();
    }

    #[test]
    fn a2_adjoint() {
        let m = construct_irrep(&cm('A', 2), &[1, 1], 400).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.multiplicities()[&vec![0, 0]], 2);
        m.check_commutators().unwrap();
        m.check_serre().unwrap();
        m.check_shapovalov().unwrap();
        let g = invariant_symmetric_form(&m).unwrap();
        let dense = inertia(&g.dense(&m)).unwrap();
        assert_eq!((dense.p.max(dense.q), dense.p.min(dense.q), dense.z), (5, 3, 0));
        assert_eq!(g.inertia, dense);
        assert_eq!(invariant_form_nullity(&m, 40).unwrap(), 1);
    }

    #[test]
    fn a1_adjoint_and_strings() {
        let m = construct_irrep(&cm('A', 1), &[2], 400).unwrap();
        let g = invariant_symmetric_form(&m).unwrap();
        assert_eq!((g.inertia.p.max(g.inertia.q), g.inertia.p.min(g.inertia.q)), (2, 1));
        for k in 0..8 {
            assert_eq!(oracle_sig_split(&cm('A', 1), &[k]).unwrap(), if k % 2 == 0 { 1 } else { 0 });
        }
        let odd = construct_irrep(&cm('A', 1), &[3], 400).unwrap();
        assert!(invariant_symmetric_form(&odd).unwrap().skew);
        assert_eq!(invariant_form_nullity(&odd, 40).unwrap(), 1);
    }

    #[test]
    fn a3_adjoint() {
        let m = construct_irrep(&cm('A', 3), &[1, 0, 1], 400).unwrap();
        assert_eq!(m.dim(), 15);
        assert_eq!(oracle_sig_split(&cm('A', 3), &[1, 0, 1]).unwrap(), 3);
    }

    #[test]
    fn matches_freudenthal() {
        let c = cm('C', 2);
        let pos = PositiveSystem::standard(&RootDatum::from_cartan(&c, "C2").unwrap());
        for lam in [[1, 0], [0, 1], [2, 1], [1, 2]] {
            let m = construct_irrep(&c, &lam, 400).unwrap();
            assert_eq!(m.multiplicities(), freudenthal_multiplicities(&pos, &lam).unwrap());
            m.check_commutators().unwrap();
            m.check_serre().unwrap();
        }
    }

    #[test]
    fn trivial_and_errors() {
        assert_eq!(oracle_sig_split(&cm('A', 2), &[0, 0]).unwrap(), 1);
        assert!(matches!(invariant_symmetric_form(&construct_irrep(&cm('A', 2), &[1, 0], 400).unwrap()), Err(Error::Precondition(_))));
        assert!(matches!(construct_irrep(&cm('A', 3), &[5, 5, 5], 400), Err(Error::CapExceeded { .. })));
        assert!(construct_irrep(&cm('A', 2), &[-1, 0], 400).is_err());
    }
}

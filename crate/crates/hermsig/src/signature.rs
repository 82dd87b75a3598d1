//! Signature of the invariant Hermitian form via the sum over W¹ of ε(w)·dim E_w,
//! the GL(n,R) closed form and the identities around it.

use crate::error::{ensure_internal, Error, Result};
use crate::exec::Exec;
use crate::linalg::{dot, fmt_rat_vec, q, qfrac, rat_to_i64, to_rat_vec, IMat, IntVec, QMat, Rat, RatVec};
use crate::realform::{
    gl_split_to_fundamental, is_decreasing, is_self_dual, is_weakly_integral, GroupLabel, HighestWeightSpec, RealForm,
    RootClass,
};
use crate::restricted::{restrict, RestrictedDatum};
use crate::rootdata::{dominant_representative, weyl_dimension, PositiveSystem, RootDatum};
use crate::weylres::{build_W_theta, component_group_of, enumerate_W1, ComponentGroup, CosetReps, RestrictedWeylGroup};
use num::{One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariance {
    GInvariant,
    GSharpOnly,
    NoForm,
}

impl std::fmt::Display for Invariance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Invariance::GInvariant => "G_invariant",
            Invariance::GSharpOnly => "G_sharp_only",
            Invariance::NoForm => "no_form",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    /// Reduced word in the simple restricted reflections.
    pub word: Vec<usize>,
    pub epsilon: i8,
    pub dim_e: u64,
    /// w λ_c.
    pub weight: IntVec,
    /// Highest weight w(λ_c+ρ_G) − ρ_K of E_w.
    pub k_weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub verdict: Invariance,
    /// ε(xw) = ε(w) for all x in W^sing_ncpt(K), w in W¹.
    pub reading_constancy: bool,
    /// ε(x) = 1 for all x in W^sing_ncpt(K).
    pub reading_literal: bool,
    pub component_group_order: usize,
    pub ambiguity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureResult {
    pub group: String,
    pub lambda: IntVec,
    pub dim: u64,
    pub p: u64,
    pub q: u64,
    pub sig: u64,
    pub r: u32,
    pub ell: usize,
    pub p0: u64,
    pub q0: u64,
    pub contributions: Vec<Contribution>,
    pub invariance: InvarianceReport,
}

impl SignatureResult {
    pub fn pair(&self) -> (u64, u64) {
        (self.p.max(self.q), self.p.min(self.q))
    }
}

/// Precomputed structure of one real form, reused across many λ.
#[derive(Clone, Debug)]
pub struct SignatureEngine {
    rf: RealForm,
    rd: RestrictedDatum,
    w: RestrictedWeylGroup,
    w1: CosetReps,
    cg: ComponentGroup,
    k_pos: PositiveSystem,
    sing_simple: Vec<(IntVec, bool)>,
    sing_matrix: Option<QMat>,
    r: u32,
    exec: Exec,
    flip_epsilon: Option<usize>,
}

impl SignatureEngine {
    pub fn new(rf: &RealForm) -> Result<Self> {
        let rd = restrict(rf)?;
        let w = build_W_theta(rf, &rd)?;
        crate::weylres::semidirect_decompositions(&rd, &w)?;
        let w1 = enumerate_W1(&rd, &w)?;
        let cg = component_group_of(rf, &rd)?;
        let k_pos = rd.k_system()?;
        ensure_internal!(k_pos.two_rho() == rd.two_rho_k(), "2ρ_K of the K subsystem disagrees");
        let sing = rd.subsystem(rd.sing_imag(), "sing imag")?;
        let sing_simple: Vec<(IntVec, bool)> = sing
            .simple()
            .iter()
            .map(|&s| {
                let root = sing.datum().root(s).clone();
                let j = rd.index_of(&root).unwrap();
                (root, rd.markers()[j].noncompact)
            })
            .collect();
        let sing_matrix = if sing_simple.is_empty() {
            None
        } else {
            let rows: Vec<IntVec> = sing_simple.iter().map(|(r, _)| r.clone()).collect();
            Some(QMat::from_int_rows(&rows).transpose())
        };
        let r = r_value(rf, &rd)?;
        Ok(SignatureEngine {
            rf: rf.clone(),
            rd,
            w,
            w1,
            cg,
            k_pos,
            sing_simple,
            sing_matrix,
            r,
            exec: Exec::default(),
            flip_epsilon: None,
        })
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    /// Fault injection: negate ε on the given W¹ position.
    pub fn with_flipped_epsilon(mut self, position: Option<usize>) -> Self {
        self.flip_epsilon = position;
        self
    }

    pub fn real_form(&self) -> &RealForm {
        &self.rf
    }
    pub fn restricted(&self) -> &RestrictedDatum {
        &self.rd
    }
    pub fn weyl_group(&self) -> &RestrictedWeylGroup {
        &self.w
    }
    pub fn w1(&self) -> &CosetReps {
        &self.w1
    }
    pub fn component_group(&self) -> &ComponentGroup {
        &self.cg
    }
    pub fn r(&self) -> u32 {
        self.r
    }

    /// ε(w) for the W¹ element at position `pos`, λ_c dominant.
    pub fn epsilon(&self, lambda_c: &[i64], pos: usize) -> Result<i8> {
        let w = &self.w.elements()[self.w1.reps[pos]].matrix;
        let e = epsilon_raw(self, lambda_c, w)?;
        Ok(if self.flip_epsilon == Some(pos) { -e } else { e })
    }

    /// Dominant W^θ-representative of λ_c; the representation only depends on the orbit.
    pub fn normalize(&self, lambda_c: &[i64]) -> Result<IntVec> {
        if lambda_c.len() != self.rd.rank() {
            return Err(Error::Invalid(format!(
                "λ_c has {} coordinates, T_c has dimension {}",
                lambda_c.len(),
                self.rd.rank()
            )));
        }
        let (dom, _) = dominant_representative(self.rd.positive_system(), &to_rat_vec(lambda_c));
        crate::linalg::rat_vec_to_int(&dom).ok_or_else(|| Error::Internal("dominant representative left the lattice".into()))
    }

    pub fn invariance(&self, lambda_c: &[i64], eps: &[i8]) -> InvarianceReport {
        let mut constancy = true;
        let mut literal = true;
        for x in &self.cg.elements {
            let xi = self.w.index_of(x).expect("s_B lies in W^θ");
            literal &= eps[self.w1.coset_of[xi]] == 1;
            for (pos, &wi) in self.w1.reps.iter().enumerate() {
                let xw = x.mul(&self.w.elements()[wi].matrix);
                let j = self.w.index_of(&xw).expect("closed under products");
                constancy &= eps[self.w1.coset_of[j]] == eps[pos];
            }
        }
        let _ = lambda_c;
        InvarianceReport {
            verdict: if constancy { Invariance::GInvariant } else { Invariance::GSharpOnly },
            reading_constancy: constancy,
            reading_literal: literal,
            component_group_order: self.cg.order(),
            ambiguity: self.cg.order() > 1,
        }
    }

    pub fn compute(&self, spec: &HighestWeightSpec) -> Result<SignatureResult> {
        if spec.nu_re.iter().any(|x| !x.is_zero()) {
            return Err(Error::NoForm(format!(
                "ν = {} has a nonzero real part; ν must be purely imaginary",
                fmt_rat_vec(&spec.nu_re)
            )));
        }
        let lam = self.normalize(&spec.lambda_c)?;
        let probe = HighestWeightSpec::new(lam.clone(), self.rf.split_rank());
        if !is_weakly_integral(&self.rf, &probe) {
            return Err(Error::NotIntegral(format!("λ_c = {lam:?} does not pair integrally with every coroot")));
        }
        let dim = self.full_dimension(&lam)?;
        let positions: Vec<usize> = (0..self.w1.reps.len()).collect();
        let contributions = self.exec.try_map(&positions, |&pos| self.contribution(&lam, pos))?;
        let (mut p0, mut q0) = (0u64, 0u64);
        for c in &contributions {
            if c.epsilon > 0 {
                p0 += c.dim_e;
            } else {
                q0 += c.dim_e;
            }
        }
        let diff = p0 as i128 - q0 as i128;
        let den = 1i128 << self.r;
        ensure_internal!(diff % den == 0, "2^{} does not divide p0 - q0 = {diff}", self.r);
        let signed = diff / den;
        let sig = signed.unsigned_abs() as u64;
        ensure_internal!(sig <= dim && (dim - sig) % 2 == 0, "Sig = {sig} incompatible with dim = {dim}");
        let p = ((dim as i128 + signed) / 2) as u64;
        let q = dim - p;
        let eps: Vec<i8> = contributions.iter().map(|c| c.epsilon).collect();
        let invariance = self.invariance(&lam, &eps);
        Ok(SignatureResult {
            group: self.rf.label().to_string(),
            lambda: lam,
            dim,
            p,
            q,
            sig,
            r: self.r,
            ell: self.rf.split_rank(),
            p0,
            q0,
            contributions,
            invariance,
        })
    }

    fn contribution(&self, lam: &[i64], pos: usize) -> Result<Contribution> {
        let el = &self.w.elements()[self.w1.reps[pos]];
        let epsilon = self.epsilon(lam, pos)?;
        // 2·w(λ_c+ρ_G) and its K-regularity
        let shifted = el.matrix.mul_vec(&crate::linalg::add(&crate::linalg::scale(lam, 2), self.rd.two_rho_g()));
        for &g in self.k_pos.positive() {
            ensure_internal!(
                dot(&shifted, self.k_pos.datum().coroot(g)) > 0,
                "w(λ_c+ρ_G) is not K-regular dominant"
            );
        }
        let hw: RatVec = crate::linalg::sub(&shifted, self.rd.two_rho_k()).iter().map(|&x| qfrac(x, 2)).collect();
        let dim_e = weyl_dimension(&self.k_pos, &hw).map_err(|e| match e {
            Error::NotDominant { .. } => Error::Internal(format!("E_w highest weight not K-dominant: {e}")),
            other => other,
        })?;
        ensure_internal!(dim_e > 0, "dim E_w = 0");
        Ok(Contribution {
            word: el.word.clone().unwrap_or_default(),
            epsilon,
            dim_e,
            weight: el.matrix.mul_vec(lam),
            k_weight: fmt_rat_vec(&hw),
        })
    }

    /// Weyl dimension over the lifted positive system, λ given by λ_c and ν = 0.
    pub fn full_dimension(&self, lam: &[i64]) -> Result<u64> {
        let amb = self.rd.ambient_positive();
        let lq = to_rat_vec(lam);
        let mut num = Rat::one();
        let mut den = Rat::one();
        for &a in amb.positive() {
            let rho = qfrac(dot(amb.two_rho(), amb.datum().coroot(a)), 2);
            let l = crate::linalg::dot_qq(&lq, self.rf.coroot_t(a));
            ensure_internal!(!(l.clone() + &rho).is_negative(), "λ_c is not dominant for the lifted positive system");
            num *= l + &rho;
            den *= rho;
        }
        let v = num / den;
        ensure_internal!(v.is_integer() && v.is_positive(), "dimension {v} is not a positive integer");
        rat_to_i64(&v).map(|x| x as u64).ok_or_else(|| Error::Internal("dimension overflow".into()))
    }
}

fn epsilon_raw(e: &SignatureEngine, lambda_c: &[i64], w: &IMat) -> Result<i8> {
    let diff = crate::linalg::sub(lambda_c, &w.mul_vec(lambda_c));
    let Some(m) = &e.sing_matrix else {
        ensure_internal!(diff.iter().all(|&x| x == 0), "λ_c − wλ_c ≠ 0 with empty singular imaginary system");
        return Ok(1);
    };
    let n = m
        .solve(&to_rat_vec(&diff))
        .ok_or_else(|| Error::Internal(format!("λ_c − wλ_c = {diff:?} is outside the singular imaginary span")))?;
    let mut sign = 1i8;
    for (c, (_, noncompact)) in n.iter().zip(&e.sing_simple) {
        ensure_internal!(c.is_integer() && !c.is_negative(), "expansion coefficient {c} is not a nonnegative integer");
        if *noncompact && !(c.to_integer() % 2u8).is_zero() {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// r by root counting, checked against (dim 𝔤 − dim 𝔨 − ℓ)/2.
fn r_value(rf: &RealForm, rd: &RestrictedDatum) -> Result<u32> {
    let d = rf.datum();
    let amb = rd.ambient_positive();
    let mut complex_pos = 0usize;
    let mut ncpt_pos = 0usize;
    let (mut n_cpt, mut n_cplx) = (0usize, 0usize);
    for i in 0..d.num_roots() {
        match rf.classify_root(i) {
            RootClass::Complex => {
                n_cplx += 1;
                if amb.is_positive(i) {
                    complex_pos += 1;
                }
            }
            RootClass::ImaginaryNoncompact => {
                if amb.is_positive(i) {
                    ncpt_pos += 1;
                }
            }
            RootClass::ImaginaryCompact => n_cpt += 1,
            RootClass::Real => return Err(Error::Internal("real root".into())),
        }
    }
    ensure_internal!(complex_pos % 2 == 0, "positive complex roots are not closed under θ");
    let r_count = complex_pos / 2 + ncpt_pos;
    let dim_g = d.rank() + d.num_roots();
    let dim_k = rf.compact_rank() + n_cpt + n_cplx / 2;
    let twice = dim_g - dim_k - rf.split_rank();
    ensure_internal!(twice % 2 == 0 && twice / 2 == r_count, "r by counting ({r_count}) ≠ r by dimension ({twice}/2)");
    Ok(r_count as u32)
}

/// One-shot signature computation.
pub fn compute_signature(rf: &RealForm, spec: &HighestWeightSpec) -> Result<SignatureResult> {
    SignatureEngine::new(rf)?.compute(spec)
}

/// ε for a W¹ position, for callers holding an engine.
pub fn epsilon(engine: &SignatureEngine, lambda_c: &[i64], pos: usize) -> Result<i8> {
    engine.epsilon(lambda_c, pos)
}

pub fn invariance_level(engine: &SignatureEngine, lambda_c: &[i64]) -> Result<InvarianceReport> {
    let lam = engine.normalize(lambda_c)?;
    let eps = (0..engine.w1().reps.len()).map(|p| engine.epsilon(&lam, p)).collect::<Result<Vec<_>>>()?;
    Ok(engine.invariance(&lam, &eps))
}

fn check_gl_input(n: usize, lam: &[i64]) -> Result<()> {
    if lam.len() != n {
        return Err(Error::Invalid(format!("expected {n} entries, got {}", lam.len())));
    }
    if !is_decreasing(lam) {
        return Err(Error::Invalid(format!("{lam:?} is not weakly decreasing")));
    }
    if !is_self_dual(lam) {
        return Err(Error::NoForm(format!("{lam:?} is not equal to minus its reverse")));
    }
    Ok(())
}

/// Sig for GL(n,R): dim σ(μ+½)/2^(m−1+ε) on D_m or B_m.
pub fn gl_closed_form(n: usize, lam: &[i64]) -> Result<u64> {
    check_gl_input(n, lam)?;
    let (m, eps) = (n / 2, n % 2);
    if m == 0 {
        return Ok(1);
    }
    let d = if eps == 0 { RootDatum::orthogonal_d(m) } else { RootDatum::orthogonal_b(m) };
    let pos = PositiveSystem::standard(&d);
    let hw: RatVec = lam[..m].iter().map(|&x| q(x) + qfrac(1, 2)).collect();
    let dim = weyl_dimension(&pos, &hw)?;
    let den = 1u64 << (m - 1 + eps);
    ensure_internal!(dim % den == 0, "2^{} does not divide dim σ = {dim}", m - 1 + eps);
    Ok(dim / den)
}

/// (dim π(λ), Sig² ∏ (2λ_i+n−2i+1)/(n−2i+1)).
pub fn ratio_identity(n: usize, lam: &[i64]) -> Result<(Rat, Rat)> {
    check_gl_input(n, lam)?;
    let pos = PositiveSystem::standard(&RootDatum::gl(n));
    let lhs = q(weyl_dimension(&pos, &to_rat_vec(lam))? as i64);
    let sig = gl_closed_form(n, lam)? as i64;
    let mut rhs = q(sig * sig);
    for i in 1..=n / 2 {
        let c = n as i64 - 2 * i as i64 + 1;
        rhs *= qfrac(2 * lam[i - 1] + c, c);
    }
    Ok((lhs, rhs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProbe {
    pub n: usize,
    pub lambda0: IntVec,
    pub degree: usize,
    pub sigs: Vec<u64>,
    /// differences[j] is the j-th iterated forward difference.
    pub differences: Vec<Vec<i128>>,
    pub vanishes: bool,
    pub top_nonzero: bool,
}

/// Expected degree m² + m(ε−1) of Sig along regular rays in GL(n).
pub fn gl_sig_degree(n: usize) -> usize {
    let (m, eps) = (n / 2, n % 2);
    m * m + m * eps - m
}

/// Sig(kλ₀), k = 1..kmax, from the general formula, with iterated differences.
pub fn sig_degree_probe(n: usize, lambda0: &[i64], kmax: usize, exec: Exec) -> Result<DegreeProbe> {
    check_gl_input(n, lambda0)?;
    let m = n / 2;
    if lambda0[..m].windows(2).any(|w| w[0] <= w[1]) || (m > 0 && lambda0[m - 1] <= 0) {
        return Err(Error::Invalid(format!("{lambda0:?} is not strictly regular")));
    }
    let degree = gl_sig_degree(n);
    let rf = RealForm::builtin(&GroupLabel::GL(n))?;
    let engine = SignatureEngine::new(&rf)?.with_exec(Exec::Sequential);
    let ks: Vec<i64> = (1..=kmax as i64).collect();
    let sigs = exec.try_map(&ks, |&k| {
        let lam: IntVec = lambda0.iter().map(|x| k * x).collect();
        engine.compute(&gl_split_to_fundamental(n, &lam)?).map(|r| r.sig)
    })?;
    let mut differences = vec![sigs.iter().map(|&s| s as i128).collect::<Vec<_>>()];
    while differences.last().unwrap().len() > 1 {
        let prev = differences.last().unwrap();
        differences.push(prev.windows(2).map(|w| w[1] - w[0]).collect());
    }
    let vanishes = differences.get(degree + 1).map_or(false, |d| d.iter().all(|&x| x == 0));
    let top_nonzero = differences.get(degree).map_or(false, |d| d.iter().all(|&x| x != 0));
    Ok(DegreeProbe { n, lambda0: lambda0.to_vec(), degree, sigs, differences, vanishes, top_nonzero })
}

/// Sig for GL(n,R) through the general formula, λ in split coordinates.
pub fn gl_signature(n: usize, lam: &[i64]) -> Result<SignatureResult> {
    let rf = RealForm::builtin(&GroupLabel::GL(n))?;
    compute_signature(&rf, &gl_split_to_fundamental(n, lam)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::builtin_group;

    #[test]
    fn gl_examples() {
        assert_eq!(gl_signature(3, &[1, 0, -1]).unwrap().sig, 2);
        assert_eq!(gl_signature(4, &[1, 0, 0, -1]).unwrap().sig, 3);
        assert_eq!(gl_signature(4, &[2, 1, -1, -2]).unwrap().sig, 5);
        assert_eq!(gl_closed_form(4, &[2, 1, -1, -2]).unwrap(), 5);
        assert_eq!(gl_closed_form(4, &[1, 0, 0, -1]).unwrap(), 3);
        assert_eq!(gl_closed_form(4, &[0, 0, 0, 0]).unwrap(), 1);
    }

    #[test]
    fn gl_not_self_dual() {
        assert!(matches!(gl_signature(4, &[2, 1, 0, -1]), Err(Error::NoForm(_))));
        assert!(matches!(gl_closed_form(4, &[2, 1, 0, -1]), Err(Error::NoForm(_))));
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_identity(4, &[2, 1, -1, -2]).unwrap(), (q(175), q(175)));
        assert_eq!(ratio_identity(3, &[1, 0, -1]).unwrap(), (q(8), q(8)));
    }

    #[test]
    fn sl2_parity() {
        let rf = builtin_group(&GroupLabel::SL(2)).unwrap();
        let e = SignatureEngine::new(&rf).unwrap();
        for k in 0..6 {
            let r = e.compute(&HighestWeightSpec::new(vec![k], 0)).unwrap();
            assert_eq!(r.dim, k as u64 + 1);
            assert_eq!(r.sig, if k % 2 == 0 { 1 } else { 0 });
        }
    }

    #[test]
    fn compact_sig_is_dim() {
        let rf = builtin_group(&GroupLabel::Compact('B', 2)).unwrap();
        let r = compute_signature(&rf, &HighestWeightSpec::new(vec![1, 1], 0)).unwrap();
        assert_eq!(r.sig, r.dim);
        assert_eq!(r.r, 0);
    }

    #[test]
    fn degree_probe_small() {
        let p = sig_degree_probe(4, &[2, 1, -1, -2], 5, Exec::Sequential).unwrap();
        assert_eq!(p.degree, 2);
        assert!(p.vanishes && p.top_nonzero);
    }
}

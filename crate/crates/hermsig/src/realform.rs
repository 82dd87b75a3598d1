//! Cartan involutions, root classification, gradings, integrality and the built-in groups.

use crate::error::{Error, Result};
use crate::linalg::{
    dot, hermite_rows, integer_kernel, q, to_rat_vec, IMat, IntVec, QMat, Rat, RatVec,
};
use crate::rootdata::{cartan_matrix, RootDatum};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Grading {
    Compact,
    Noncompact,
}

impl Grading {
    fn times(self, other: Grading) -> Grading {
        if self == other {
            Grading::Compact
        } else {
            Grading::Noncompact
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootClass {
    Real,
    Complex,
    ImaginaryCompact,
    ImaginaryNoncompact,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupLabel {
    /// GL(n,R)
    GL(usize),
    /// SL(n,R)
    SL(usize),
    /// Sp(2n,R)
    Sp(usize),
    /// PSp(2n,R)
    PSp(usize),
    /// PSO(2n,2n)
    PSO(usize),
    /// SO(p,q) with p, q odd, on the orthogonal lattice
    SO(usize, usize),
    SplitE6,
    Compact(char, usize),
    Complex(char, usize),
    Custom(String),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::GL(n) => write!(f, "GL({n},R)"),
            GroupLabel::SL(n) => write!(f, "SL({n},R)"),
            GroupLabel::Sp(n) => write!(f, "Sp({},R)", 2 * n),
            GroupLabel::PSp(n) => write!(f, "PSp({},R)", 2 * n),
            GroupLabel::PSO(n) => write!(f, "PSO({},{})", 2 * n, 2 * n),
            GroupLabel::SO(p, q) => write!(f, "SO({p},{q})"),
            GroupLabel::SplitE6 => write!(f, "split E6"),
            GroupLabel::Compact(t, r) => write!(f, "compact {t}{r}"),
            GroupLabel::Complex(t, r) => write!(f, "complex {t}{r}"),
            GroupLabel::Custom(s) => write!(f, "{s}"),
        }
    }
}

/// A real form on a maximally compact Cartan: root datum, Cartan involution on X*,
/// and the compact/noncompact grading of imaginary roots.
#[derive(Clone, Debug)]
pub struct RealForm {
    label: GroupLabel,
    datum: RootDatum,
    theta: IMat,
    grading: BTreeMap<usize, Grading>,
    theta_perm: Vec<usize>,
    fixed_basis: IMat,
    anti_basis: IMat,
    coroot_t: Vec<RatVec>,
    coroot_a: Vec<RatVec>,
}

impl RealForm {
    pub fn new(
        label: GroupLabel,
        datum: RootDatum,
        theta: IMat,
        grading: BTreeMap<usize, Grading>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidRealForm(m));
        let n = datum.rank();
        if theta.rows() != n || theta.cols() != n {
            return bad(format!("theta must be {n}x{n}"));
        }
        if !theta.mul(&theta).is_identity() {
            return bad("theta is not an involution".into());
        }
        let tt = theta.transpose();
        let mut theta_perm = Vec::with_capacity(datum.num_roots());
        for i in 0..datum.num_roots() {
            let img = theta.mul_vec(datum.root(i));
            let Some(j) = datum.index_of(&img) else {
                return bad(format!("theta does not map root {:?} to a root", datum.root(i)));
            };
            if tt.mul_vec(datum.coroot(i)) != *datum.coroot(j) {
                return bad(format!(
                    "theta is not compatible with the coroot of {:?}",
                    datum.root(i)
                ));
            }
            if j == datum.negative(i) {
                return bad(format!(
                    "root {:?} is real; the Cartan is not maximally compact",
                    datum.root(i)
                ));
            }
            theta_perm.push(j);
        }
        for &k in grading.keys() {
            if k >= datum.num_roots() || theta_perm[k] != k {
                return bad(format!("grading given on non-imaginary root index {k}"));
            }
        }
        for i in 0..datum.num_roots() {
            if theta_perm[i] == i {
                let Some(g) = grading.get(&i) else {
                    return bad(format!("imaginary root {:?} has no grading", datum.root(i)));
                };
                if grading.get(&datum.negative(i)) != Some(g) {
                    return bad(format!("grading is not symmetric on {:?}", datum.root(i)));
                }
            }
        }
        // additivity
        let imag: Vec<usize> = (0..datum.num_roots()).filter(|&i| theta_perm[i] == i).collect();
        for &a in &imag {
            for &b in &imag {
                let s = crate::linalg::add(datum.root(a), datum.root(b));
                if let Some(c) = datum.index_of(&s) {
                    if grading[&c] != grading[&a].times(grading[&b]) {
                        return bad(format!(
                            "grading is not additive on {:?} + {:?}",
                            datum.root(a),
                            datum.root(b)
                        ));
                    }
                }
            }
        }
        let fixed_rows = integer_kernel(&tt.sub(&IMat::identity(n)));
        let anti_rows = integer_kernel(&tt.add(&IMat::identity(n)));
        let fixed_basis = if fixed_rows.is_empty() { IMat::zeros(0, n) } else { IMat::from_rows(&fixed_rows) };
        let anti_basis = if anti_rows.is_empty() { IMat::zeros(0, n) } else { IMat::from_rows(&anti_rows) };
        let bt = fixed_basis.to_q().transpose();
        let at = anti_basis.to_q().transpose();
        let mut coroot_t = Vec::new();
        let mut coroot_a = Vec::new();
        for i in 0..datum.num_roots() {
            let c = datum.coroot(i);
            let tc = tt.mul_vec(c);
            let plus: RatVec = c.iter().zip(&tc).map(|(x, y)| crate::linalg::qfrac(x + y, 2)).collect();
            let minus: RatVec = c.iter().zip(&tc).map(|(x, y)| crate::linalg::qfrac(x - y, 2)).collect();
            coroot_t.push(solve_in_basis(&bt, &plus)?);
            coroot_a.push(solve_in_basis(&at, &minus)?);
        }
        let rf = RealForm {
            label,
            datum,
            theta,
            grading,
            theta_perm,
            fixed_basis,
            anti_basis,
            coroot_t,
            coroot_a,
        };
        rf.check_complex_reflection_stability()?;
        Ok(rf)
    }

    /// Builds the grading map from a predicate evaluated on the imaginary roots.
    pub fn with_grading_fn(
        label: GroupLabel,
        datum: RootDatum,
        theta: IMat,
        f: impl Fn(&IntVec) -> Grading,
    ) -> Result<Self> {
        let mut grading = BTreeMap::new();
        for i in 0..datum.num_roots() {
            let a = datum.root(i);
            if theta.mul_vec(a) == *a {
                grading.insert(i, f(a));
            }
        }
        Self::new(label, datum, theta, grading)
    }

    /// Custom group: `grading` lists compact/noncompact for the θ-fixed roots in root order.
    pub fn custom(
        name: &str,
        rank: usize,
        roots: Vec<IntVec>,
        coroots: Vec<IntVec>,
        theta: Vec<IntVec>,
        grading: Vec<Grading>,
    ) -> Result<Self> {
        let datum = RootDatum::from_roots(rank, roots, coroots, name)?;
        if theta.len() != rank || theta.iter().any(|r| r.len() != rank) {
            return Err(Error::InvalidRealForm(format!("theta must be {rank}x{rank}")));
        }
        let theta = IMat::from_rows(&theta);
        let fixed: Vec<usize> =
            (0..datum.num_roots()).filter(|&i| theta.mul_vec(datum.root(i)) == *datum.root(i)).collect();
        if fixed.len() != grading.len() {
            return Err(Error::InvalidRealForm(format!(
                "grading has {} entries but there are {} theta-fixed roots",
                grading.len(),
                fixed.len()
            )));
        }
        let map = fixed.into_iter().zip(grading).collect();
        Self::new(GroupLabel::Custom(name.to_string()), datum, theta, map)
    }

    fn check_complex_reflection_stability(&self) -> Result<()> {
        let d = &self.datum;
        for a in 0..d.num_roots() {
            if self.classify_root(a) != RootClass::Complex {
                continue;
            }
            let (m, _) = self.complex_reflection(a)?;
            for (&b, &g) in &self.grading {
                let img = m.mul_vec(d.root(b));
                let c = d.index_of(&img).expect("Weyl elements permute roots");
                if self.grading.get(&c) != Some(&g) {
                    return Err(Error::InvalidRealForm(format!(
                        "grading is not stable under the reflection attached to complex root {:?}",
                        d.root(a)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Ambient Weyl element realizing the restricted reflection of a complex root:
    /// s_α s_θα when α+θα is not a root, s_(α+θα) when it is.
    pub fn complex_reflection(&self, a: usize) -> Result<(IMat, bool)> {
        let d = &self.datum;
        let ta = self.theta_perm[a];
        let sum = crate::linalg::add(d.root(a), d.root(ta));
        if let Some(s) = d.index_of(&sum) {
            Ok((d.reflection_matrix(s), true))
        } else {
            if dot(d.root(a), d.coroot(ta)) != 0 {
                return Err(Error::InvalidRealForm(format!(
                    "complex root {:?} is neither orthogonal to its θ-image nor summing to a root",
                    d.root(a)
                )));
            }
            Ok((d.reflection_matrix(a).mul(&d.reflection_matrix(ta)), false))
        }
    }

    pub fn label(&self) -> &GroupLabel {
        &self.label
    }
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }
    pub fn theta(&self) -> &IMat {
        &self.theta
    }
    pub fn grading(&self) -> &BTreeMap<usize, Grading> {
        &self.grading
    }
    pub fn theta_root(&self, i: usize) -> usize {
        self.theta_perm[i]
    }
    /// Rows form a Z-basis of the θ-fixed cocharacters; T_c coordinates are pairings with them.
    pub fn fixed_basis(&self) -> &IMat {
        &self.fixed_basis
    }
    /// Rows form a Z-basis of the (−θ)-fixed cocharacters.
    pub fn anti_basis(&self) -> &IMat {
        &self.anti_basis
    }
    /// Dimension of T_c.
    pub fn compact_rank(&self) -> usize {
        self.fixed_basis.rows()
    }
    /// Dimension of A_c.
    pub fn split_rank(&self) -> usize {
        self.anti_basis.rows()
    }
    /// (α∨ + θα∨)/2 in the fixed basis.
    pub fn coroot_t(&self, i: usize) -> &RatVec {
        &self.coroot_t[i]
    }
    /// (α∨ − θα∨)/2 in the anti-fixed basis.
    pub fn coroot_a(&self, i: usize) -> &RatVec {
        &self.coroot_a[i]
    }

    pub fn classify_root(&self, i: usize) -> RootClass {
        let t = self.theta_perm[i];
        if t == i {
            match self.grading.get(&i) {
                Some(Grading::Compact) => RootClass::ImaginaryCompact,
                _ => RootClass::ImaginaryNoncompact,
            }
        } else if t == self.datum.negative(i) {
            RootClass::Real
        } else {
            RootClass::Complex
        }
    }

    /// Restriction of a character of H_c to T_c coordinates.
    pub fn restrict_character(&self, lam: &[i64]) -> IntVec {
        self.fixed_basis.mul_vec(lam)
    }

    /// (λ_c, ν) of a character of H_c, without any dominance normalization.
    pub fn spec_from_character(&self, lam: &[i64]) -> HighestWeightSpec {
        let nu = self.anti_basis.mul_vec(lam);
        HighestWeightSpec {
            lambda_c: self.restrict_character(lam),
            nu_re: to_rat_vec(&nu),
            nu_im: vec![Rat::zero(); nu.len()],
        }
    }

    pub fn builtin(label: &GroupLabel) -> Result<RealForm> {
        builtin_group(label)
    }
}

fn solve_in_basis(bt: &QMat, v: &[Rat]) -> Result<RatVec> {
    if bt.cols() == 0 {
        if v.iter().all(Zero::is_zero) {
            return Ok(Vec::new());
        }
        return Err(Error::Internal("vector outside an empty sublattice".into()));
    }
    bt.solve(v).ok_or_else(|| Error::Internal("projection outside the eigenlattice".into()))
}

/// The pair (λ_c, ν_c) indexing an irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightSpec {
    pub lambda_c: IntVec,
    pub nu_re: RatVec,
    pub nu_im: RatVec,
}

impl HighestWeightSpec {
    pub fn new(lambda_c: IntVec, split_rank: usize) -> Self {
        HighestWeightSpec {
            lambda_c,
            nu_re: vec![Rat::zero(); split_rank],
            nu_im: vec![Rat::zero(); split_rank],
        }
    }
}

pub fn classify_root(rf: &RealForm, i: usize) -> RootClass {
    rf.classify_root(i)
}

/// ⟨dγ, α∨⟩ ∈ Z for every root; the imaginary part of ν must pair to zero.
pub fn is_weakly_integral(rf: &RealForm, g: &HighestWeightSpec) -> bool {
    let lam = crate::linalg::to_rat_vec(&g.lambda_c);
    (0..rf.datum().num_roots()).all(|i| {
        let re = crate::linalg::dot_qq(&lam, rf.coroot_t(i)) + crate::linalg::dot_qq(&g.nu_re, rf.coroot_a(i));
        let im = crate::linalg::dot_qq(&g.nu_im, rf.coroot_a(i));
        re.is_integer() && im.is_zero()
    })
}

/// On the maximally compact Cartan there are no real roots, so this equals weak integrality.
pub fn is_strongly_integral(rf: &RealForm, g: &HighestWeightSpec) -> bool {
    let no_real = (0..rf.datum().num_roots()).all(|i| rf.classify_root(i) != RootClass::Real);
    debug_assert!(no_real);
    is_weakly_integral(rf, g) && no_real
}

pub fn hermitian_dual(g: &HighestWeightSpec) -> HighestWeightSpec {
    HighestWeightSpec {
        lambda_c: g.lambda_c.clone(),
        nu_re: g.nu_re.iter().map(|x| -x).collect(),
        nu_im: g.nu_im.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HermitianExistence {
    None,
    ExistsOnIdentityComponent,
    SeeInvarianceLevel,
}

/// A form exists on G(R)^# iff ν is purely imaginary; when the component group is
/// nontrivial, invariance under the full group is decided by `signature::invariance_level`.
pub fn hermitian_existence(rf: &RealForm, g: &HighestWeightSpec) -> Result<HermitianExistence> {
    if g.nu_re.iter().any(|x| !x.is_zero()) {
        return Ok(HermitianExistence::None);
    }
    let cg = crate::weylres::component_group(rf)?;
    Ok(if cg.order() > 1 {
        HermitianExistence::SeeInvarianceLevel
    } else {
        HermitianExistence::ExistsOnIdentityComponent
    })
}

pub fn is_decreasing(l: &[i64]) -> bool {
    l.windows(2).all(|w| w[0] >= w[1])
}

pub fn is_self_dual(l: &[i64]) -> bool {
    let n = l.len();
    (0..n).all(|i| l[i] == -l[n - 1 - i])
}

/// Converts a split-Cartan highest weight of GL(n,R) to (λ_c, ν) on the block model.
pub fn gl_split_to_fundamental(n: usize, lam: &[i64]) -> Result<HighestWeightSpec> {
    if lam.len() != n {
        return Err(Error::Invalid(format!("expected {n} entries, got {}", lam.len())));
    }
    if !is_decreasing(lam) {
        return Err(Error::Invalid(format!("{lam:?} is not weakly decreasing")));
    }
    let m = n / 2;
    let lambda_c = (0..m).map(|j| lam[j] - lam[n - 1 - j]).collect();
    let mut nu: Vec<Rat> = (0..m).map(|j| q(lam[j] + lam[n - 1 - j])).collect();
    if n % 2 == 1 {
        nu.push(q(lam[m]));
    }
    let k = nu.len();
    Ok(HighestWeightSpec { lambda_c, nu_re: nu, nu_im: vec![Rat::zero(); k] })
}

/// Converts a split highest weight of SL(n,R) (any decreasing n-vector) to fundamental coordinates.
pub fn sl_split_to_character(lam: &[i64]) -> Result<IntVec> {
    if !is_decreasing(lam) {
        return Err(Error::Invalid(format!("{lam:?} is not weakly decreasing")));
    }
    Ok(lam.windows(2).map(|w| w[0] - w[1]).collect())
}

fn perm_matrix(perm: &[usize]) -> IMat {
    let n = perm.len();
    let mut m = IMat::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m.set(p, i, 1);
    }
    m
}

fn gl_theta(n: usize) -> IMat {
    let mut t = IMat::zeros(n, n);
    for j in 0..n / 2 {
        t.set(2 * j, 2 * j + 1, -1);
        t.set(2 * j + 1, 2 * j, -1);
    }
    if n % 2 == 1 {
        t.set(n - 1, n - 1, -1);
    }
    t
}

/// Diagram automorphism of a Cartan-matrix datum acting on fundamental-weight coordinates.
fn diagram_theta(perm: &[usize]) -> IMat {
    perm_matrix(perm)
}

fn root_lattice_basis(d: &RootDatum) -> IMat {
    IMat::from_rows(&hermite_rows(d.roots(), d.rank()))
}

fn index_grading(d: &RootDatum, compact: impl Fn(&IntVec) -> bool) -> BTreeMap<usize, Grading> {
    (0..d.num_roots())
        .map(|i| (i, if compact(d.root(i)) { Grading::Compact } else { Grading::Noncompact }))
        .collect()
}

fn parity_grading(x: IntVec) -> impl Fn(&IntVec) -> Grading {
    move |a: &IntVec| {
        if dot(a, &x).rem_euclid(2) == 0 {
            Grading::Compact
        } else {
            Grading::Noncompact
        }
    }
}

pub fn builtin_group(label: &GroupLabel) -> Result<RealForm> {
    let bad = |m: &str| Err(Error::Invalid(format!("{label}: {m}")));
    match *label {
        GroupLabel::GL(n) => {
            if n == 0 {
                return bad("n must be positive");
            }
            RealForm::with_grading_fn(label.clone(), RootDatum::gl(n), gl_theta(n), |_| Grading::Noncompact)
        }
        GroupLabel::SL(n) => {
            if n < 2 {
                return bad("n must be at least 2");
            }
            let d = RootDatum::from_type('A', n - 1)?;
            let perm: Vec<usize> = (0..n - 1).map(|i| n - 2 - i).collect();
            RealForm::with_grading_fn(label.clone(), d, diagram_theta(&perm), |_| Grading::Noncompact)
        }
        GroupLabel::Sp(n) | GroupLabel::PSp(n) => {
            if n == 0 {
                return bad("n must be positive");
            }
            let d = RootDatum::symplectic(n);
            let grading = index_grading(&d, |a| a.iter().sum::<i64>() == 0);
            let d = if matches!(label, GroupLabel::PSp(_)) {
                d.sublattice(&root_lattice_basis(&d), format!("C{n} adjoint"))?
            } else {
                d
            };
            RealForm::new(label.clone(), d, IMat::identity(n), grading)
        }
        GroupLabel::PSO(n) => {
            if n == 0 {
                return bad("n must be positive");
            }
            let d = RootDatum::orthogonal_d(2 * n);
            // compact iff both indices lie in the same half
            let grading = index_grading(&d, |a| a[..n].iter().map(|x| x.abs()).sum::<i64>() != 1);
            let d = d.sublattice(&root_lattice_basis(&d), format!("D{} adjoint", 2 * n))?;
            RealForm::new(label.clone(), d, IMat::identity(2 * n), grading)
        }
        GroupLabel::SO(p, qq) => {
            if p % 2 == 0 || qq % 2 == 0 {
                return bad("p and q must be odd");
            }
            let (a, b) = (p / 2, qq / 2);
            let m = a + b + 1;
            let d = RootDatum::orthogonal_d(m);
            let mut theta = IMat::identity(m);
            theta.set(m - 1, m - 1, -1);
            let mut x = vec![0i64; m];
            for v in x.iter_mut().take(a) {
                *v = 1;
            }
            RealForm::with_grading_fn(label.clone(), d, theta, parity_grading(x))
        }
        GroupLabel::SplitE6 => split_e6(),
        GroupLabel::Compact(t, r) => {
            let d = RootDatum::from_type(t, r)?;
            RealForm::with_grading_fn(label.clone(), d, IMat::identity(r), |_| Grading::Compact)
        }
        GroupLabel::Complex(t, r) => {
            let d0 = RootDatum::from_type(t, r)?;
            let d = d0.direct_sum(&d0);
            let perm: Vec<usize> = (0..2 * r).map(|i| (i + r) % (2 * r)).collect();
            RealForm::with_grading_fn(label.clone(), d, perm_matrix(&perm), |_| Grading::Compact)
        }
        GroupLabel::Custom(_) => bad("custom groups are built from a specification"),
    }
}

/// Split E6 on the fundamental Cartan: θ is the diagram automorphism and the grading
/// is the one on the D4 imaginary subsystem with exactly eight compact roots.
fn split_e6() -> Result<RealForm> {
    let d = RootDatum::from_type('E', 6)?;
    debug_assert_eq!(cartan_matrix('E', 6)?.len(), 6);
    let theta = diagram_theta(&[5, 1, 4, 3, 2, 0]);
    let imag: Vec<usize> =
        (0..d.num_roots()).filter(|&i| theta.mul_vec(d.root(i)) == *d.root(i)).collect();
    let flags: Vec<bool> = (0..d.num_roots())
        .map(|i| d.simple_coefficients(i).iter().any(|&c| c > 0))
        .collect();
    let imag_roots: Vec<IntVec> = imag.iter().map(|&i| d.root(i).clone()).collect();
    let imag_flags: Vec<bool> = imag.iter().map(|&i| flags[i]).collect();
    let simple = crate::rootdata::indecomposables(&imag_roots, &imag_flags);
    let sq = QMat::from_int_rows(&simple.iter().map(|&s| imag_roots[s].clone()).collect::<Vec<_>>()).transpose();
    let coeffs: Vec<IntVec> = imag_roots
        .iter()
        .map(|a| {
            sq.solve(&to_rat_vec(a))
                .and_then(|c| c.iter().map(crate::linalg::rat_to_i64).collect())
                .expect("imaginary roots lie in the span of imaginary simple roots")
        })
        .collect();
    for mask in 0u32..(1 << simple.len()) {
        let mut grading = BTreeMap::new();
        for (k, &i) in imag.iter().enumerate() {
            let odd: i64 = coeffs[k]
                .iter()
                .enumerate()
                .map(|(s, c)| if mask >> s & 1 == 1 { c.abs() } else { 0 })
                .sum();
            let g = if odd % 2 == 0 { Grading::Compact } else { Grading::Noncompact };
            grading.insert(i, g);
        }
        let compact = grading.values().filter(|&&g| g == Grading::Compact).count();
        if compact != 8 {
            continue;
        }
        if let Ok(rf) = RealForm::new(GroupLabel::SplitE6, d.clone(), theta.clone(), grading) {
            return Ok(rf);
        }
    }
    Err(Error::Internal("no valid grading for split E6".into()))
}

/// Convenience: λ_c is dominant and integral for HighestWeightSpec purposes.
pub fn check_nonnegative(v: &[Rat]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root_index(rf: &RealForm, v: &[i64]) -> usize {
        rf.datum().index_of(v).unwrap()
    }

    #[test]
    fn gl4_classification() {
        let rf = builtin_group(&GroupLabel::GL(4)).unwrap();
        assert_eq!(rf.classify_root(root_index(&rf, &[1, -1, 0, 0])), RootClass::ImaginaryNoncompact);
        assert_eq!(rf.classify_root(root_index(&rf, &[1, 0, -1, 0])), RootClass::Complex);
        assert_eq!(rf.fixed_basis().to_rows(), vec![vec![1, -1, 0, 0], vec![0, 0, 1, -1]]);
        assert_eq!(rf.anti_basis().to_rows(), vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
    }

    #[test]
    fn compact_a1() {
        let rf = builtin_group(&GroupLabel::Compact('A', 1)).unwrap();
        assert!(rf.theta().is_identity());
        for i in 0..2 {
            assert_eq!(rf.classify_root(i), RootClass::ImaginaryCompact);
        }
    }

    #[test]
    fn all_builtins_construct() {
        for l in [
            GroupLabel::GL(1), GroupLabel::GL(2), GroupLabel::GL(5), GroupLabel::SL(2), GroupLabel::SL(5),
            GroupLabel::Sp(3), GroupLabel::PSp(2), GroupLabel::PSO(2), GroupLabel::SO(3, 3),
            GroupLabel::SO(1, 3), GroupLabel::SplitE6, GroupLabel::Compact('G', 2), GroupLabel::Complex('A', 2),
        ] {
            let rf = builtin_group(&l).unwrap_or_else(|e| panic!("{l}: {e}"));
            for i in 0..rf.datum().num_roots() {
                assert_ne!(rf.classify_root(i), RootClass::Real);
            }
        }
    }

    #[test]
    fn e6_grading_has_eight_compact_roots() {
        let rf = builtin_group(&GroupLabel::SplitE6).unwrap();
        let imag = rf.grading().len();
        let cpt = rf.grading().values().filter(|&&g| g == Grading::Compact).count();
        assert_eq!((imag, cpt), (24, 8));
    }

    #[test]
    fn rejects_bad_gradings() {
        // SL(3) with the imaginary root compact is fine, but making a single sign asymmetric is not
        let rf = builtin_group(&GroupLabel::SL(3)).unwrap();
        let mut g = rf.grading().clone();
        let first = *g.keys().next().unwrap();
        g.insert(first, Grading::Compact);
        let err = RealForm::new(GroupLabel::SL(3), rf.datum().clone(), rf.theta().clone(), g);
        assert!(matches!(err, Err(Error::InvalidRealForm(_))));
        // Sp(4) with long roots compact and e1+e2 noncompact violates additivity
        let d = RootDatum::symplectic(2);
        let bad = RealForm::with_grading_fn(GroupLabel::Sp(2), d, IMat::identity(2), |a| {
            if a.iter().any(|x| x.abs() == 2) || a.iter().sum::<i64>() == 0 {
                Grading::Compact
            } else {
                Grading::Noncompact
            }
        });
        assert!(matches!(bad, Err(Error::InvalidRealForm(_))));
    }

    #[test]
    fn integrality_examples() {
        let rf = builtin_group(&GroupLabel::GL(3)).unwrap();
        // λ_c = 3 comes from the character (3,0,0), whose ν is nonzero
        let g = rf.spec_from_character(&[3, 0, 0]);
        assert_eq!(g.lambda_c, vec![3]);
        assert!(is_weakly_integral(&rf, &g));
        assert!(is_strongly_integral(&rf, &g));
        // with ν = 0 the complex root e1-e3 pairs to 3/2
        assert!(!is_weakly_integral(&rf, &HighestWeightSpec::new(vec![3], rf.split_rank())));
        let zero = HighestWeightSpec::new(vec![0], rf.split_rank());
        assert!(is_weakly_integral(&rf, &zero) && is_strongly_integral(&rf, &zero));
    }

    #[test]
    fn split_conversion() {
        let g = gl_split_to_fundamental(4, &[1, 0, 0, -1]).unwrap();
        assert_eq!(g.lambda_c, vec![2, 0]);
        assert!(g.nu_re.iter().all(Zero::is_zero));
        let g = gl_split_to_fundamental(5, &[2, 1, 0, -1, -2]).unwrap();
        assert_eq!(g.lambda_c, vec![4, 2]);
        assert!(gl_split_to_fundamental(3, &[0, 1, 0]).is_err());
        let g = gl_split_to_fundamental(4, &[2, 1, 0, -1]).unwrap();
        assert!(g.nu_re.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn hermitian_dual_examples() {
        let g = HighestWeightSpec { lambda_c: vec![1], nu_re: vec![q(2)], nu_im: vec![q(3)] };
        let h = hermitian_dual(&g);
        assert_eq!(h.nu_re, vec![q(-2)]);
        assert_eq!(h.nu_im, vec![q(3)]);
        assert_eq!(hermitian_dual(&h), g);
    }
}

//! Restricted roots on the maximally compact torus, their subsystems, ρ-vectors,
//! singular subsystems, restricted heights and diagram folding.

use crate::error::{ensure_internal, Error, Result};
use crate::linalg::{dot, dot_q, q, to_rat_vec, IntVec, QMat, Rat, RatVec};
use crate::realform::{Grading, RealForm, RootClass};
use crate::rootdata::{
    dominant_int, indecomposables, weyl_orbit, PositiveSystem, RootDatum, DEFAULT_WEYL_CAP,
};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RestrictedCase {
    Imaginary,
    ComplexNonsum,
    ComplexSum,
}

#[derive(Clone, Debug)]
pub struct RestrictedRoot {
    /// (α+θα)/2 in ambient coordinates.
    pub value: RatVec,
    /// Pairings with the fixed basis.
    pub coords: IntVec,
    /// Restricted coroot in the fixed basis.
    pub coroot: IntVec,
    pub coroot_ambient: IntVec,
    pub case: RestrictedCase,
    pub sources: Vec<usize>,
    pub grading: Option<Grading>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Markers {
    pub reduced: bool,
    pub complex: bool,
    pub imaginary: bool,
    pub compact: bool,
    pub noncompact: bool,
    pub k: bool,
}

#[derive(Clone, Debug)]
pub struct RestrictedDatum {
    roots: Vec<RestrictedRoot>,
    markers: Vec<Markers>,
    pos: PositiveSystem,
    ambient_pos: PositiveSystem,
    restriction: Vec<usize>,
    two_rho_cplx: IntVec,
    two_rho_imag: IntVec,
    two_rho_k: IntVec,
    two_rho_g: IntVec,
    sing_imag: Vec<usize>,
    sing_cplx: Vec<usize>,
    sing_ncpt: Vec<usize>,
    adjust_word: Vec<usize>,
}

fn axiom(e: Error) -> Error {
    match e {
        Error::InvalidDatum(m) => Error::Internal(format!("restricted roots violate a root-datum axiom: {m}")),
        other => other,
    }
}

/// Builds the restricted root datum of a real form.
pub fn restrict(rf: &RealForm) -> Result<RestrictedDatum> {
    let d = rf.datum();
    let b = rf.fixed_basis();
    let k = rf.compact_rank();
    let tt = rf.theta().transpose();
    let bt = b.to_q().transpose();

    let mut groups: BTreeMap<IntVec, Vec<usize>> = BTreeMap::new();
    for i in 0..d.num_roots() {
        groups.entry(b.mul_vec(d.root(i))).or_default().push(i);
    }
    let mut roots = Vec::new();
    let mut restriction = vec![0; d.num_roots()];
    for (coords, sources) in groups {
        ensure_internal!(coords.iter().any(|&x| x != 0), "a root restricts to zero");
        let mut rec: Option<(IntVec, RestrictedCase)> = None;
        for &s in &sources {
            let cls = rf.classify_root(s);
            let ts = rf.theta_root(s);
            let c = d.coroot(s);
            let (case, cor) = match cls {
                RootClass::ImaginaryCompact | RootClass::ImaginaryNoncompact => {
                    (RestrictedCase::Imaginary, c.clone())
                }
                RootClass::Complex => {
                    let sum = crate::linalg::add(d.root(s), d.root(ts));
                    let cc = crate::linalg::add(c, &tt.mul_vec(c));
                    if d.index_of(&sum).is_some() {
                        (RestrictedCase::ComplexSum, crate::linalg::scale(&cc, 2))
                    } else {
                        (RestrictedCase::ComplexNonsum, cc)
                    }
                }
                RootClass::Real => return Err(Error::Internal("real root on a maximally compact Cartan".into())),
            };
            match &rec {
                None => rec = Some((cor, case)),
                Some((c0, k0)) => {
                    ensure_internal!(
                        *c0 == cor && *k0 == case,
                        "sources of restricted root {coords:?} disagree on the coroot"
                    );
                }
            }
        }
        let (coroot_ambient, case) = rec.unwrap();
        let y = bt
            .solve(&to_rat_vec(&coroot_ambient))
            .and_then(|y| y.iter().map(crate::linalg::rat_to_i64).collect::<Option<IntVec>>())
            .ok_or_else(|| Error::Internal(format!("restricted coroot of {coords:?} is not in the fixed lattice")))?;
        let s0 = sources[0];
        let ts0 = rf.theta_root(s0);
        let value: RatVec = d
            .root(s0)
            .iter()
            .zip(d.root(ts0))
            .map(|(x, y)| crate::linalg::qfrac(x + y, 2))
            .collect();
        ensure_internal!(
            dot_q(&value, &coroot_ambient) == q(2),
            "restricted root {coords:?} does not pair to 2 with its coroot"
        );
        let grading = if case == RestrictedCase::Imaginary { rf.grading().get(&s0).copied() } else { None };
        for &s in &sources {
            restriction[s] = roots.len();
        }
        roots.push(RestrictedRoot { value, coords, coroot: y, coroot_ambient, case, sources, grading });
    }

    let coords: Vec<IntVec> = roots.iter().map(|r| r.coords.clone()).collect();
    let coroots: Vec<IntVec> = roots.iter().map(|r| r.coroot.clone()).collect();
    let mut flags: Vec<bool> = coords.iter().map(|c| lex_pos(c)).collect();
    let is_k: Vec<bool> = roots
        .iter()
        .map(|r| r.case != RestrictedCase::Imaginary || r.grading == Some(Grading::Compact))
        .collect();

    // move the chamber until 2ρ_K is dominant; R+_K is unchanged by each step
    let mut adjust_word = Vec::new();
    let datum = loop {
        let simple = indecomposables(&coords, &flags);
        let datum = RootDatum::new(k, coords.clone(), coroots.clone(), simple.clone(), "restricted").map_err(axiom)?;
        let mut two_rho_k = vec![0; k];
        for i in 0..coords.len() {
            if flags[i] && is_k[i] {
                two_rho_k = crate::linalg::add(&two_rho_k, &coords[i]);
            }
        }
        let bad = simple.iter().copied().find(|&s| dot(&two_rho_k, &coroots[s]) < 0);
        let Some(s) = bad else { break datum };
        ensure_internal!(!is_k[s], "a simple K-root pairs negatively with 2ρ_K");
        adjust_word.push(s);
        flags = (0..coords.len())
            .map(|j| flags[datum.index_of(&datum.reflect_weight(s, &coords[j])).unwrap()])
            .collect();
        ensure_internal!(adjust_word.len() <= coords.len(), "2ρ_K adjustment did not terminate");
    };
    let pos = PositiveSystem::standard(&datum);
    ensure_internal!(pos.flags() == flags.as_slice(), "restricted positive system mismatch");

    let amb_flags: Vec<bool> = (0..d.num_roots()).map(|i| flags[restriction[i]]).collect();
    let ambient_pos = PositiveSystem::from_flags(d, amb_flags).map_err(axiom)?;
    for i in 0..d.num_roots() {
        ensure_internal!(
            ambient_pos.is_positive(i) == ambient_pos.is_positive(rf.theta_root(i)),
            "lifted positive system is not θ-stable"
        );
    }

    let markers: Vec<Markers> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let imaginary = r.case == RestrictedCase::Imaginary;
            let compact = imaginary && r.grading == Some(Grading::Compact);
            Markers {
                reduced: datum.index_of(&crate::linalg::scale(&r.coords, 2)).is_none(),
                complex: !imaginary,
                imaginary,
                compact,
                noncompact: imaginary && !compact,
                k: is_k[i],
            }
        })
        .collect();
    for (i, r) in roots.iter().enumerate() {
        ensure_internal!(
            !markers[i].reduced == (r.case == RestrictedCase::ComplexSum),
            "non-reduced restricted root {:?} is not of the complex-sum case",
            r.coords
        );
    }
    let sum_where = |pred: &dyn Fn(&Markers) -> bool| -> IntVec {
        let mut s = vec![0; k];
        for i in 0..roots.len() {
            if flags[i] && pred(&markers[i]) {
                s = crate::linalg::add(&s, &roots[i].coords);
            }
        }
        s
    };
    let two_rho_cplx = sum_where(&|m| m.complex);
    let two_rho_imag = sum_where(&|m| m.imaginary);
    let two_rho_k = sum_where(&|m| m.k);
    let two_rho_g = b.mul_vec(ambient_pos.two_rho());

    let zero_on = |v: &IntVec| -> Vec<usize> {
        (0..roots.len()).filter(|&i| dot(v, &roots[i].coroot) == 0).collect()
    };
    let sing_imag = zero_on(&two_rho_cplx);
    let sing_cplx = zero_on(&two_rho_imag);
    let sing_ncpt = zero_on(&two_rho_k);
    for &i in &sing_imag {
        ensure_internal!(markers[i].imaginary, "singular imaginary set contains a complex root");
    }
    for &i in &sing_cplx {
        ensure_internal!(markers[i].complex, "singular complex set contains an imaginary root");
    }
    for &i in &sing_ncpt {
        ensure_internal!(markers[i].noncompact, "singular noncompact set contains a K-root");
        for &j in &sing_ncpt {
            if i != j && j != datum.negative(i) {
                ensure_internal!(
                    dot(&roots[j].coords, &roots[i].coroot) == 0,
                    "singular noncompact roots are not orthogonal"
                );
            }
        }
    }
    // K is a reduced system
    for i in 0..roots.len() {
        if markers[i].k {
            if let Some(j) = datum.index_of(&crate::linalg::scale(&roots[i].coords, 2)) {
                ensure_internal!(!markers[j].k, "K-subsystem is not reduced");
            }
        }
    }

    Ok(RestrictedDatum {
        roots,
        markers,
        pos,
        ambient_pos,
        restriction,
        two_rho_cplx,
        two_rho_imag,
        two_rho_k,
        two_rho_g,
        sing_imag,
        sing_cplx,
        sing_ncpt,
        adjust_word,
    })
}

fn lex_pos(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).map_or(false, |&x| x > 0)
}

impl RestrictedDatum {
    pub fn roots(&self) -> &[RestrictedRoot] {
        &self.roots
    }
    pub fn markers(&self) -> &[Markers] {
        &self.markers
    }
    /// Positive system P' on the restricted datum (2ρ_K dominant).
    pub fn positive_system(&self) -> &PositiveSystem {
        &self.pos
    }
    pub fn datum(&self) -> &RootDatum {
        self.pos.datum()
    }
    /// The θ-stable positive system of the ambient datum lifted from P'.
    pub fn ambient_positive(&self) -> &PositiveSystem {
        &self.ambient_pos
    }
    pub fn restriction_of(&self, ambient_root: usize) -> usize {
        self.restriction[ambient_root]
    }
    pub fn rank(&self) -> usize {
        self.datum().rank()
    }
    pub fn is_positive(&self, i: usize) -> bool {
        self.pos.is_positive(i)
    }
    pub fn two_rho_cplx(&self) -> &IntVec {
        &self.two_rho_cplx
    }
    pub fn two_rho_imag(&self) -> &IntVec {
        &self.two_rho_imag
    }
    pub fn two_rho_k(&self) -> &IntVec {
        &self.two_rho_k
    }
    /// 2ρ_G restricted to T_c.
    pub fn two_rho_g(&self) -> &IntVec {
        &self.two_rho_g
    }
    pub fn sing_imag(&self) -> &[usize] {
        &self.sing_imag
    }
    pub fn sing_cplx(&self) -> &[usize] {
        &self.sing_cplx
    }
    pub fn sing_ncpt(&self) -> &[usize] {
        &self.sing_ncpt
    }
    /// Simple reflections (restricted root indices) applied to reach P'.
    pub fn adjustment_word(&self) -> &[usize] {
        &self.adjust_word
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.datum().index_of(coords)
    }

    pub fn subset(&self, pred: impl Fn(usize, &Markers) -> bool) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| pred(i, &self.markers[i])).collect()
    }

    /// Root subsystem on the given restricted roots with the positivity of P'.
    pub fn subsystem(&self, idx: &[usize], label: &str) -> Result<PositiveSystem> {
        let coords: Vec<IntVec> = idx.iter().map(|&i| self.roots[i].coords.clone()).collect();
        let cor: Vec<IntVec> = idx.iter().map(|&i| self.roots[i].coroot.clone()).collect();
        let flags: Vec<bool> = idx.iter().map(|&i| self.pos.is_positive(i)).collect();
        let simple = indecomposables(&coords, &flags);
        let d = RootDatum::new(self.rank(), coords, cor, simple, label).map_err(axiom)?;
        let p = PositiveSystem::standard(&d);
        ensure_internal!(p.flags() == flags.as_slice(), "subsystem {label} positivity mismatch");
        Ok(p)
    }

    pub fn k_system(&self) -> Result<PositiveSystem> {
        self.subsystem(&self.subset(|_, m| m.k), "K")
    }

    pub fn reduced_indices(&self) -> Vec<usize> {
        self.subset(|_, m| m.reduced)
    }

    /// Sum of the coroots of positive reduced restricted roots.
    pub fn two_rho_check_res(&self) -> IntVec {
        let mut s = vec![0; self.rank()];
        for i in self.reduced_indices() {
            if self.is_positive(i) {
                s = crate::linalg::add(&s, &self.roots[i].coroot);
            }
        }
        s
    }

    pub fn lifted_positive_count(&self) -> usize {
        self.ambient_pos.positive().len()
    }
}

/// Restricted height: pairing of the dominant representative with 2ρ∨ of the reduced system.
pub fn restricted_height(rd: &RestrictedDatum, phi: &[i64]) -> i64 {
    let dom = dominant_int(rd.positive_system(), phi);
    dot(&dom, &rd.two_rho_check_res())
}

/// Whether λ_c − φ is a nonnegative integer combination of positive restricted roots.
pub fn restricted_weight_test(rd: &RestrictedDatum, lambda_c: &[i64], phi: &[i64]) -> Result<(bool, Option<IntVec>)> {
    let pos = rd.positive_system();
    let simple = pos.simple();
    let diff = crate::linalg::sub(lambda_c, phi);
    if simple.is_empty() {
        let ok = diff.iter().all(|&x| x == 0);
        return Ok((ok, ok.then(Vec::new)));
    }
    let m = QMat::from_int_rows(&simple.iter().map(|&s| rd.roots()[s].coords.clone()).collect::<Vec<_>>()).transpose();
    let coeffs = m.solve(&to_rat_vec(&diff)).and_then(|c| {
        let ok = c.iter().all(|x| x.is_integer() && !x.is_negative());
        if ok {
            c.iter().map(crate::linalg::rat_to_i64).collect::<Option<IntVec>>()
        } else {
            None
        }
    });
    match coeffs {
        Some(c) => {
            let (hl, hp) = (restricted_height(rd, lambda_c), restricted_height(rd, phi));
            ensure_internal!(hp <= hl, "restricted weight exceeds the height of λ_c");
            ensure_internal!((hp == hl) == (phi == lambda_c), "height equality without weight equality");
            Ok((true, Some(c)))
        }
        None => Ok((false, None)),
    }
}

/// The W^θ-orbit of λ_c.
pub fn restricted_extremal_weights(rd: &RestrictedDatum, lambda_c: &[i64]) -> Result<Vec<IntVec>> {
    weyl_orbit(rd.positive_system(), lambda_c, DEFAULT_WEYL_CAP)
}

/// One simple component of a root system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Component {
    pub family: String,
    pub rank: usize,
}

/// Isomorphism type of a root system; `raw` holds the Cartan matrix of unrecognized parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct TypeLabel {
    pub components: Vec<Component>,
    pub unrecognized: Option<Vec<Vec<i64>>>,
}

impl TypeLabel {
    /// Canonical label from a family/rank list, with low-rank coincidences folded.
    pub fn from_parts(parts: &[(&str, usize)]) -> TypeLabel {
        let mut comps = Vec::new();
        for &(f, n) in parts {
            match (f, n) {
                (_, 0) => {}
                ("D", 1) => {}
                ("A", _) => comps.push(Component { family: "A".into(), rank: n }),
                ("B" | "C", 1) => comps.push(Component { family: "A".into(), rank: 1 }),
                ("C", 2) => comps.push(Component { family: "B".into(), rank: 2 }),
                ("D", 2) => {
                    comps.push(Component { family: "A".into(), rank: 1 });
                    comps.push(Component { family: "A".into(), rank: 1 });
                }
                ("D", 3) => comps.push(Component { family: "A".into(), rank: 3 }),
                _ => comps.push(Component { family: f.into(), rank: n }),
            }
        }
        comps.sort();
        TypeLabel { components: comps, unrecognized: None }
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty() && self.unrecognized.is_none()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        let c = &self.components;
        while i < c.len() {
            let mut j = i;
            while j < c.len() && c[j] == c[i] {
                j += 1;
            }
            let base = format!("{}{}", c[i].family, c[i].rank);
            parts.push(if j - i > 1 { format!("{base}^{}", j - i) } else { base });
            i = j;
        }
        if self.unrecognized.is_some() {
            parts.push("?".into());
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Identifies the type of a root system from its positive system.
pub fn identify(pos: &PositiveSystem) -> TypeLabel {
    let d = pos.datum();
    let simple = pos.simple();
    let c = d.cartan_of(simple);
    let n = simple.len();
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        comp_of[s] = id;
        let mut members = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if y != x && c[x][y] != 0 && comp_of[y] == usize::MAX {
                    comp_of[y] = id;
                    stack.push(y);
                    members.push(y);
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    let mut parts: Vec<(String, usize)> = Vec::new();
    let mut raw: Option<Vec<Vec<i64>>> = None;
    for members in &comps {
        let nonreduced = members
            .iter()
            .any(|&s| d.index_of(&crate::linalg::scale(d.root(simple[s]), 2)).is_some());
        match classify_component(&c, members) {
            Some((fam, r)) => {
                let fam = if nonreduced && (fam == "B" || (fam == "A" && r == 1)) { "BC".to_string() } else { fam };
                parts.push((fam, r));
            }
            None => {
                raw = Some(c.clone());
            }
        }
    }
    let refs: Vec<(&str, usize)> = parts.iter().map(|(f, r)| (f.as_str(), *r)).collect();
    let mut t = TypeLabel::from_parts(&refs);
    t.unrecognized = raw;
    t
}

fn classify_component(c: &[Vec<i64>], m: &[usize]) -> Option<(String, usize)> {
    let n = m.len();
    if n == 1 {
        return Some(("A".into(), 1));
    }
    let adj = |a: usize, b: usize| c[m[a]][m[b]] != 0;
    let bond = |a: usize, b: usize| c[m[a]][m[b]] * c[m[b]][m[a]];
    let deg: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| b != a && adj(a, b)).count()).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj(a, b))
        .collect();
    if edges.len() != n - 1 {
        return None;
    }
    let multi: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| bond(a, b) > 1).collect();
    match multi.len() {
        0 => {
            let branch: Vec<usize> = (0..n).filter(|&a| deg[a] >= 3).collect();
            if branch.is_empty() {
                return Some(("A".into(), n));
            }
            if branch.len() != 1 || deg[branch[0]] != 3 {
                return None;
            }
            let centre = branch[0];
            let mut arms: Vec<usize> = (0..n)
                .filter(|&b| b != centre && adj(centre, b))
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    loop {
                        let next = (0..n).find(|&x| x != prev && x != cur && adj(cur, x));
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Some(("D".into(), n)),
                [1, 2, 2] => Some(("E".into(), 6)),
                [1, 2, 3] => Some(("E".into(), 7)),
                [1, 2, 4] => Some(("E".into(), 8)),
                _ => None,
            }
        }
        1 => {
            if deg.iter().any(|&x| x > 2) {
                return None;
            }
            let (a, b) = multi[0];
            match bond(a, b) {
                3 if n == 2 => Some(("G".into(), 2)),
                2 => {
                    if n == 2 {
                        return Some(("B".into(), 2));
                    }
                    if n == 4 && deg[a] == 2 && deg[b] == 2 {
                        return Some(("F".into(), 4));
                    }
                    let (end, other) = if deg[a] == 1 { (a, b) } else if deg[b] == 1 { (b, a) } else { return None };
                    // c[end][other] = <α_other, α_end^vee> = -2 means α_other is long
                    if c[m[end]][m[other]] == -2 {
                        Some(("B".into(), n))
                    } else {
                        Some(("C".into(), n))
                    }
                }
                _ => None,
            }
        }
        _ => None,
    }
}

/// Types of the distinguished subsystems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedTypes {
    pub res: TypeLabel,
    pub res_red: TypeLabel,
    pub cplx: TypeLabel,
    pub imag: TypeLabel,
    pub k: TypeLabel,
    pub sing_cplx: TypeLabel,
    pub sing_imag: TypeLabel,
    pub sing_ncpt: TypeLabel,
}

pub fn restricted_type(rd: &RestrictedDatum) -> Result<RestrictedTypes> {
    let ty = |idx: Vec<usize>, name: &str| -> Result<TypeLabel> { Ok(identify(&rd.subsystem(&idx, name)?)) };
    Ok(RestrictedTypes {
        res: identify(rd.positive_system()),
        res_red: ty(rd.reduced_indices(), "res,red")?,
        cplx: ty(rd.subset(|_, m| m.complex), "cplx")?,
        imag: ty(rd.subset(|_, m| m.imaginary), "imag")?,
        k: ty(rd.subset(|_, m| m.k), "K")?,
        sing_cplx: ty(rd.sing_cplx().to_vec(), "sing cplx")?,
        sing_imag: ty(rd.sing_imag().to_vec(), "sing imag")?,
        sing_ncpt: ty(rd.sing_ncpt().to_vec(), "sing ncpt")?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexTag {
    Imaginary,
    Complex,
    ComplexSelfJoined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub tag: VertexTag,
    /// Filled circle: the vertex is an imaginary root.
    pub filled: bool,
    pub compact: Option<bool>,
    pub self_loop: bool,
    /// θ-partner vertex in the unfolded diagrams.
    pub theta_partner: Option<usize>,
    /// Simple roots of the ambient datum behind this vertex.
    pub sources: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: i64,
    /// For multiple edges, the vertex of the longer root.
    pub long: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// The four diagrams: R with θ, R_res, R_red with θ, and R_res,red.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldDiagram {
    pub ambient: Diagram,
    pub restricted: Diagram,
    pub reduced: Diagram,
    pub restricted_reduced: Diagram,
}

impl Diagram {
    /// Canonical picture of the diagram. A path reads like `o-*=>o@`: `o` complex, `*` imaginary,
    /// `@` a self-joined vertex, `=>` a double edge with the long root on the left. Anything
    /// else becomes the sorted list of (fill, degree) tokens.
    pub fn shape(&self) -> String {
        let n = self.vertices.len();
        if n == 0 {
            return String::new();
        }
        let mut adj = vec![Vec::new(); n];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, k));
            adj[e.b].push((e.a, k));
        }
        let token = |v: usize| {
            let x = &self.vertices[v];
            format!("{}{}", if x.filled { "*" } else { "o" }, if x.self_loop { "@" } else { "" })
        };
        let is_path = self.edges.len() + 1 == n && adj.iter().all(|a| a.len() <= 2);
        let ends: Vec<usize> = (0..n).filter(|&v| adj[v].len() <= 1).collect();
        if !is_path || ends.is_empty() {
            let mut toks: Vec<String> = (0..n).map(|v| format!("{}{}", token(v), adj[v].len())).collect();
            toks.sort();
            return toks.join(" ");
        }
        let walk = |start: usize| -> String {
            let mut out = token(start);
            let (mut prev, mut cur) = (usize::MAX, start);
            loop {
                let Some(&(next, k)) = adj[cur].iter().find(|&&(w, _)| w != prev) else { break };
                let e = &self.edges[k];
                let link = match (e.multiplicity, e.long) {
                    (1, _) => "-".to_string(),
                    (m, Some(l)) => {
                        let bars = "=".repeat(m as usize - 1);
                        if l == cur { format!("{bars}>") } else { format!("<{bars}") }
                    }
                    (m, None) => "=".repeat(m as usize - 1),
                };
                out.push_str(&link);
                out.push_str(&token(next));
                prev = cur;
                cur = next;
            }
            out
        };
        ends.iter().map(|&s| walk(s)).min().unwrap()
    }
}

fn edges_from(roots: &[IntVec], coroots: &[IntVec]) -> Vec<Edge> {
    let n = roots.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let cab = dot(&roots[b], &coroots[a]);
            let cba = dot(&roots[a], &coroots[b]);
            if cab == 0 {
                continue;
            }
            let mult = cab * cba;
            let long = if mult > 1 {
                if cab.abs() > cba.abs() { Some(b) } else { Some(a) }
            } else {
                None
            };
            out.push(Edge { a, b, multiplicity: mult, long });
        }
    }
    out
}

pub fn fold_diagram(rf: &RealForm, rd: &RestrictedDatum) -> Result<FoldDiagram> {
    let d = rf.datum();
    let simple = rd.ambient_positive().simple().to_vec();
    let pos_in = |r: usize| simple.iter().position(|&s| s == r);
    let compact_of = |r: usize| rf.grading().get(&r).map(|g| *g == Grading::Compact);

    // ambient diagram with θ
    let mut amb_vertices = Vec::new();
    for (v, &s) in simple.iter().enumerate() {
        let t = rf.theta_root(s);
        let partner = pos_in(t).ok_or_else(|| Error::Internal("θ does not permute simple roots".into()))?;
        let tag = if t == s {
            VertexTag::Imaginary
        } else if dot(d.root(s), d.coroot(t)) != 0 {
            VertexTag::ComplexSelfJoined
        } else {
            VertexTag::Complex
        };
        amb_vertices.push(Vertex {
            id: v,
            tag,
            filled: t == s,
            compact: compact_of(s),
            self_loop: false,
            theta_partner: (partner != v).then_some(partner),
            sources: vec![d.root(s).clone()],
        });
    }
    let amb_roots: Vec<IntVec> = simple.iter().map(|&s| d.root(s).clone()).collect();
    let amb_cor: Vec<IntVec> = simple.iter().map(|&s| d.coroot(s).clone()).collect();
    let ambient = Diagram { vertices: amb_vertices.clone(), edges: edges_from(&amb_roots, &amb_cor) };

    // orbits
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..simple.len() {
        match amb_vertices[v].theta_partner {
            Some(p) if p < v => {}
            Some(p) => orbits.push(vec![v, p]),
            None => orbits.push(vec![v]),
        }
    }
    let mut res_vertices = Vec::new();
    let mut res_roots = Vec::new();
    let mut res_cor = Vec::new();
    let mut rr_vertices = Vec::new();
    let mut rr_roots = Vec::new();
    let mut rr_cor = Vec::new();
    for (id, orb) in orbits.iter().enumerate() {
        let s = simple[orb[0]];
        let r = &rd.roots()[rd.restriction_of(s)];
        let tag = amb_vertices[orb[0]].tag;
        let sources: Vec<IntVec> = orb.iter().map(|&v| d.root(simple[v]).clone()).collect();
        res_vertices.push(Vertex {
            id,
            tag,
            filled: tag == VertexTag::Imaginary,
            compact: compact_of(s),
            self_loop: tag == VertexTag::ComplexSelfJoined,
            theta_partner: None,
            sources: sources.clone(),
        });
        res_roots.push(r.coords.clone());
        res_cor.push(r.coroot.clone());
        if tag == VertexTag::ComplexSelfJoined {
            let dbl = crate::linalg::scale(&r.coords, 2);
            let j = rd.index_of(&dbl).ok_or_else(|| Error::Internal("self-joined vertex without a doubled root".into()))?;
            let ambient_sum = crate::linalg::add(d.root(s), d.root(rf.theta_root(s)));
            let ai = d.index_of(&ambient_sum).unwrap();
            rr_vertices.push(Vertex {
                id,
                tag: VertexTag::Imaginary,
                filled: true,
                compact: compact_of(ai),
                self_loop: false,
                theta_partner: None,
                sources: vec![ambient_sum],
            });
            rr_roots.push(rd.roots()[j].coords.clone());
            rr_cor.push(rd.roots()[j].coroot.clone());
        } else {
            let mut v = res_vertices[id].clone();
            v.self_loop = false;
            rr_vertices.push(v);
            rr_roots.push(r.coords.clone());
            rr_cor.push(r.coroot.clone());
        }
    }
    let restricted = Diagram { vertices: res_vertices, edges: edges_from(&res_roots, &res_cor) };
    let restricted_reduced = Diagram { vertices: rr_vertices, edges: edges_from(&rr_roots, &rr_cor) };

    // R_red: adjacent pairs replaced by their sum
    let mut red_vertices = Vec::new();
    let mut red_roots = Vec::new();
    let mut red_cor = Vec::new();
    let mut id_of_orbit_vertex = vec![usize::MAX; simple.len()];
    for v in 0..simple.len() {
        let av = &amb_vertices[v];
        if av.tag == VertexTag::ComplexSelfJoined {
            let p = av.theta_partner.unwrap();
            if p < v {
                continue;
            }
            let sum = crate::linalg::add(d.root(simple[v]), d.root(simple[p]));
            let ai = d.index_of(&sum).unwrap();
            id_of_orbit_vertex[v] = red_vertices.len();
            id_of_orbit_vertex[p] = red_vertices.len();
            red_vertices.push(Vertex {
                id: red_vertices.len(),
                tag: VertexTag::Imaginary,
                filled: true,
                compact: compact_of(ai),
                self_loop: false,
                theta_partner: None,
                sources: vec![sum.clone()],
            });
            red_roots.push(sum);
            red_cor.push(d.coroot(ai).clone());
        } else {
            id_of_orbit_vertex[v] = red_vertices.len();
            let mut nv = av.clone();
            nv.id = red_vertices.len();
            red_vertices.push(nv);
            red_roots.push(d.root(simple[v]).clone());
            red_cor.push(d.coroot(simple[v]).clone());
        }
    }
    for v in red_vertices.iter_mut() {
        if let Some(p) = v.theta_partner {
            v.theta_partner = Some(id_of_orbit_vertex[p]);
        }
    }
    let reduced = Diagram { vertices: red_vertices, edges: edges_from(&red_roots, &red_cor) };
    Ok(FoldDiagram { ambient, restricted, reduced, restricted_reduced })
}

/// Rational pairing helper used by callers that hold T_c weights with half-integers.
pub fn pair_coroot(rd: &RestrictedDatum, v: &[Rat], i: usize) -> Rat {
    dot_q(v, &rd.roots()[i].coroot)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{builtin_group, GroupLabel};

    fn rd(l: GroupLabel) -> (RealForm, RestrictedDatum) {
        let rf = builtin_group(&l).unwrap();
        let rd = restrict(&rf).unwrap();
        (rf, rd)
    }

    #[test]
    fn identity_theta_keeps_datum() {
        let (rf, r) = rd(GroupLabel::Compact('B', 3));
        assert_eq!(r.roots().len(), rf.datum().num_roots());
        assert!(r.markers().iter().all(|m| m.imaginary && m.compact));
    }

    #[test]
    fn sl5_is_bc2() {
        let (_, r) = rd(GroupLabel::SL(5));
        let t = restricted_type(&r).unwrap();
        assert_eq!(t.res.to_string(), "BC2");
        assert_eq!(t.res_red.to_string(), "C2".replace("C2", "B2"));
    }

    #[test]
    fn gl5_is_bc2_and_gl4_is_c2() {
        let (_, r) = rd(GroupLabel::GL(5));
        assert_eq!(identify(r.positive_system()).to_string(), "BC2");
        let (_, r) = rd(GroupLabel::GL(4));
        assert_eq!(identify(r.positive_system()).to_string(), "B2");
    }

    #[test]
    fn e6_is_f4() {
        let (_, r) = rd(GroupLabel::SplitE6);
        assert_eq!(identify(r.positive_system()).to_string(), "F4");
    }

    #[test]
    fn sl2_height() {
        let (_, r) = rd(GroupLabel::SL(2));
        // one restricted root of coordinate 2 with coroot 1
        assert_eq!(restricted_height(&r, &[2]), 2);
        assert_eq!(restricted_height(&r, &[-2]), 2);
        assert_eq!(restricted_height(&r, &[0]), 0);
    }

    #[test]
    fn gl4_extremal_orbit() {
        let (_, r) = rd(GroupLabel::GL(4));
        let o = restricted_extremal_weights(&r, &[2, 0]).unwrap();
        assert_eq!(o, vec![vec![-2, 0], vec![0, -2], vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn weight_test_basic() {
        let (_, r) = rd(GroupLabel::GL(4));
        assert_eq!(restricted_weight_test(&r, &[2, 0], &[2, 0]).unwrap(), (true, Some(vec![0, 0])));
        let s = r.positive_system().simple()[0];
        let a = r.roots()[s].coords.clone();
        let phi = crate::linalg::sub(&[4, 2], &a);
        assert!(restricted_weight_test(&r, &[4, 2], &phi).unwrap().0);
        assert!(!restricted_weight_test(&r, &[2, 0], &[1, 0]).unwrap().0);
    }
}

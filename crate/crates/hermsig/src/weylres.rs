//! The restricted Weyl group W^θ, its subgroups and semidirect factorizations,
//! the coset representatives W¹, and the component group W^sing_ncpt(K).

use crate::error::{ensure_internal, Error, Result};
use crate::linalg::{dot, in_column_lattice, IMat, IntVec};
use crate::realform::{builtin_group, GroupLabel, RealForm};
use crate::restricted::{identify, restrict, restricted_type, RestrictedCase, RestrictedDatum, TypeLabel};
use crate::rootdata::{generate_weyl_group, PositiveSystem, WeylElement, DEFAULT_WEYL_CAP};
use serde::Serialize;
use std::collections::{HashMap, HashSet};

/// A subgroup of W^θ generated by reflections in a set of restricted roots.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub name: String,
    /// Restricted root indices whose reflections generate the subgroup.
    pub generators: Vec<usize>,
    elements: Vec<IMat>,
    set: HashSet<IMat>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[IMat] {
        &self.elements
    }
    pub fn contains(&self, m: &IMat) -> bool {
        self.set.contains(m)
    }
}

fn closure(name: &str, rank: usize, gens: &[IMat], cap: usize) -> Result<(Vec<IMat>, HashSet<IMat>)> {
    let mut set = HashSet::new();
    let mut out = vec![IMat::identity(rank)];
    set.insert(out[0].clone());
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for g in gens {
            let m = g.mul(&cur);
            if set.insert(m.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { what: format!("order of {name}"), cap });
                }
                out.push(m);
            }
        }
    }
    Ok((out, set))
}

fn subgroup(rd: &RestrictedDatum, name: &str, roots: &[usize], cap: usize) -> Result<Subgroup> {
    let d = rd.datum();
    let mut generators: Vec<usize> = roots.iter().copied().filter(|&i| rd.is_positive(i)).collect();
    generators.sort_unstable();
    let mats: Vec<IMat> = generators.iter().map(|&i| d.reflection_matrix(i)).collect();
    let (elements, set) = closure(name, rd.rank(), &mats, cap)?;
    Ok(Subgroup { name: name.to_string(), generators, elements, set })
}

/// How the reflection in a restricted root is realized in the ambient Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Realization {
    /// s_α for the imaginary root α.
    Imaginary,
    /// s_α s_θα, α and θα orthogonal.
    ComplexPair,
    /// s_(α+θα).
    ComplexSum,
}

#[derive(Clone, Debug)]
pub struct ReflectionEntry {
    pub root: usize,
    pub source: usize,
    pub kind: Realization,
    pub ambient: IMat,
}

#[derive(Clone, Debug)]
pub struct RestrictedWeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<IMat, usize>,
    inverses: Vec<usize>,
    pub w_cplx: Subgroup,
    pub w_imag: Subgroup,
    pub w_sing_imag: Subgroup,
    pub w_sing_cplx: Subgroup,
    pub w_sing_ncpt: Subgroup,
    pub w_k: Subgroup,
    pub dictionary: Vec<ReflectionEntry>,
}

impl RestrictedWeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }
    pub fn index_of(&self, m: &IMat) -> Option<usize> {
        self.index.get(m).copied()
    }
    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }
}

/// Builds W^θ on T_c coordinates with its subgroup registry and reflection dictionary.
#[allow(non_snake_case)]
pub fn build_W_theta(rf: &RealForm, rd: &RestrictedDatum) -> Result<RestrictedWeylGroup> {
    build_w_theta_capped(rf, rd, DEFAULT_WEYL_CAP)
}

pub fn build_w_theta_capped(rf: &RealForm, rd: &RestrictedDatum, cap: usize) -> Result<RestrictedWeylGroup> {
    let pos = rd.positive_system();
    let elements = generate_weyl_group(pos, cap)?;
    let index: HashMap<IMat, usize> = elements.iter().enumerate().map(|(i, e)| (e.matrix.clone(), i)).collect();
    let d = pos.datum();
    let inverses = elements
        .iter()
        .map(|e| {
            let mut m = IMat::identity(d.rank());
            for &l in e.word.as_ref().unwrap().iter().rev() {
                m = m.mul(&d.reflection_matrix(pos.simple()[l]));
            }
            index.get(&m).copied().ok_or_else(|| Error::Internal("inverse outside W^θ".into()))
        })
        .collect::<Result<Vec<_>>>()?;

    let all_idx = |f: &dyn Fn(usize) -> bool| -> Vec<usize> { (0..rd.roots().len()).filter(|&i| f(i)).collect() };
    let m = rd.markers();
    let w_cplx = subgroup(rd, "W_cplx", &all_idx(&|i| m[i].complex), cap)?;
    let w_imag = subgroup(rd, "W_imag", &all_idx(&|i| m[i].imaginary), cap)?;
    let w_sing_imag = subgroup(rd, "W_sing_imag", rd.sing_imag(), cap)?;
    let w_sing_cplx = subgroup(rd, "W_sing_cplx", rd.sing_cplx(), cap)?;
    let w_sing_ncpt = subgroup(rd, "W_sing_ncpt", rd.sing_ncpt(), cap)?;
    let w_k = subgroup(rd, "W_K0", &all_idx(&|i| m[i].k), cap)?;

    let dictionary = reflection_dictionary(rf, rd)?;
    Ok(RestrictedWeylGroup {
        elements,
        index,
        inverses,
        w_cplx,
        w_imag,
        w_sing_imag,
        w_sing_cplx,
        w_sing_ncpt,
        w_k,
        dictionary,
    })
}

/// Realizes each positive restricted reflection in the ambient Weyl group and checks
/// that the realization commutes with θ and restricts to the restricted reflection.
fn reflection_dictionary(rf: &RealForm, rd: &RestrictedDatum) -> Result<Vec<ReflectionEntry>> {
    let d = rf.datum();
    let b = rf.fixed_basis();
    let theta = rf.theta();
    let mut out = Vec::new();
    for (i, r) in rd.roots().iter().enumerate() {
        if !rd.is_positive(i) {
            continue;
        }
        let source = r.sources[0];
        let (kind, ambient) = match r.case {
            RestrictedCase::Imaginary => (Realization::Imaginary, d.reflection_matrix(source)),
            RestrictedCase::ComplexNonsum | RestrictedCase::ComplexSum => {
                let (mat, is_sum) = rf.complex_reflection(source)?;
                ensure_internal!(
                    is_sum == (r.case == RestrictedCase::ComplexSum),
                    "reflection realization disagrees with the coroot case of {:?}",
                    r.coords
                );
                (if is_sum { Realization::ComplexSum } else { Realization::ComplexPair }, mat)
            }
        };
        ensure_internal!(ambient.mul(theta) == theta.mul(&ambient), "realization of {:?} does not commute with θ", r.coords);
        ensure_internal!(
            b.mul(&ambient) == rd.datum().reflection_matrix(i).mul(b),
            "realization of {:?} does not restrict to its reflection",
            r.coords
        );
        out.push(ReflectionEntry { root: i, source, kind, ambient });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidirectCheck {
    pub normal: String,
    pub complement: String,
    pub normal_order: usize,
    pub complement_order: usize,
    pub whole_order: usize,
    pub normal_ok: bool,
    pub product_ok: bool,
    pub intersection_trivial: bool,
}

impl SemidirectCheck {
    pub fn holds(&self) -> bool {
        self.normal_ok && self.product_ok && self.intersection_trivial
    }
}

fn semidirect(rd: &RestrictedDatum, w: &RestrictedWeylGroup, n: &Subgroup, c: &Subgroup) -> SemidirectCheck {
    let d = rd.datum();
    let gens: Vec<IMat> = rd.positive_system().simple().iter().map(|&s| d.reflection_matrix(s)).collect();
    let normal_ok = gens.iter().all(|g| {
        n.generators.iter().all(|&h| {
            let x = d.reflection_matrix(h);
            n.contains(&g.mul(&x).mul(g))
        })
    });
    let intersection_trivial = c.elements().iter().filter(|m| n.contains(m)).count() == 1;
    SemidirectCheck {
        normal: n.name.clone(),
        complement: c.name.clone(),
        normal_order: n.order(),
        complement_order: c.order(),
        whole_order: w.order(),
        normal_ok,
        product_ok: n.order() * c.order() == w.order(),
        intersection_trivial,
    }
}

/// W^θ = W_cplx ⋊ W_sing_imag and W^θ = W_sing_cplx ⋉ W_imag.
pub fn semidirect_decompositions(rd: &RestrictedDatum, w: &RestrictedWeylGroup) -> Result<(SemidirectCheck, SemidirectCheck)> {
    let a = semidirect(rd, w, &w.w_cplx, &w.w_sing_imag);
    let b = semidirect(rd, w, &w.w_imag, &w.w_sing_cplx);
    ensure_internal!(a.holds(), "W_cplx ⋊ W_sing_imag fails: {a:?}");
    ensure_internal!(b.holds(), "W_sing_cplx ⋉ W_imag fails: {b:?}");
    Ok((a, b))
}

/// Coset representatives W¹ together with the map from W^θ to its W_K0-coset representative.
#[derive(Clone, Debug)]
pub struct CosetReps {
    /// Indices into W^θ, in W^θ enumeration order (identity first).
    pub reps: Vec<usize>,
    /// For each element of W^θ, the position in `reps` of its right coset W_K0·w.
    pub coset_of: Vec<usize>,
}

/// All w with w⁻¹R⁺_K ⊆ P', checked to partition W^θ into right W_K0-cosets.
#[allow(non_snake_case)]
pub fn enumerate_W1(rd: &RestrictedDatum, w: &RestrictedWeylGroup) -> Result<CosetReps> {
    let d = rd.datum();
    let k_pos: Vec<usize> = (0..rd.roots().len()).filter(|&i| rd.markers()[i].k && rd.is_positive(i)).collect();
    let mut reps = Vec::new();
    for (idx, _) in w.elements().iter().enumerate() {
        let inv = &w.elements()[w.inverse(idx)].matrix;
        let ok = k_pos.iter().all(|&g| {
            let img = inv.mul_vec(d.root(g));
            d.index_of(&img).map_or(false, |j| rd.is_positive(j))
        });
        if ok {
            reps.push(idx);
        }
    }
    ensure_internal!(
        reps.len() * w.w_k.order() == w.order(),
        "|W¹|·|W_K0| = {}·{} ≠ |W^θ| = {}",
        reps.len(),
        w.w_k.order(),
        w.order()
    );
    let mut coset_of = vec![usize::MAX; w.order()];
    for (ri, &r) in reps.iter().enumerate() {
        let rm = &w.elements()[r].matrix;
        ensure_internal!(w.w_sing_imag.contains(rm), "W¹ element outside W_sing_imag");
        let shifted = rm.mul_vec(rd.two_rho_g());
        for &g in &k_pos {
            ensure_internal!(dot(&shifted, &rd.roots()[g].coroot) > 0, "W¹ element moves 2ρ_G out of the K-chamber");
        }
        for x in w.w_k.elements() {
            let j = w.index_of(&x.mul(rm)).ok_or_else(|| Error::Internal("coset element outside W^θ".into()))?;
            ensure_internal!(coset_of[j] == usize::MAX, "right W_K0-cosets of W¹ overlap");
            coset_of[j] = ri;
        }
    }
    ensure_internal!(coset_of.iter().all(|&c| c != usize::MAX), "right W_K0-cosets of W¹ do not cover W^θ");
    Ok(CosetReps { reps, coset_of })
}

/// The positive singular noncompact roots β_1..β_r.
#[derive(Clone, Debug, Serialize)]
pub struct SingularNcptBasis {
    pub roots: Vec<usize>,
    pub coords: Vec<IntVec>,
    /// Ambient coroots β_j∨ in X_*.
    pub coroots: Vec<IntVec>,
}

pub fn singular_ncpt_basis(rd: &RestrictedDatum) -> Result<SingularNcptBasis> {
    let roots: Vec<usize> = rd.sing_ncpt().iter().copied().filter(|&i| rd.is_positive(i)).collect();
    let coords: Vec<IntVec> = roots.iter().map(|&i| rd.roots()[i].coords.clone()).collect();
    let coroots: Vec<IntVec> = roots.iter().map(|&i| rd.roots()[i].coroot_ambient.clone()).collect();
    for i in 0..roots.len() {
        for j in 0..roots.len() {
            if i != j {
                ensure_internal!(dot(&coords[i], &rd.roots()[roots[j]].coroot) == 0, "singular noncompact roots not orthogonal");
            }
        }
    }
    ensure_internal!(roots.len() <= rd.rank(), "more singular noncompact roots than the rank");
    Ok(SingularNcptBasis { roots, coords, coroots })
}

/// W^sing_ncpt(K): the elements s_B whose H_B lies in (1+θ)X_*.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentGroup {
    pub basis: SingularNcptBasis,
    /// Subsets B as membership masks over `basis.roots`, sorted.
    pub subsets: Vec<Vec<bool>>,
    pub h: Vec<IntVec>,
    #[serde(skip)]
    pub elements: Vec<IMat>,
}

impl ComponentGroup {
    pub fn order(&self) -> usize {
        self.subsets.len()
    }
    /// Rank as an elementary abelian 2-group.
    pub fn rank(&self) -> u32 {
        self.order().trailing_zeros()
    }
}

const MAX_SING_NCPT: usize = 24;

pub fn singular_ncpt_in_k(rf: &RealForm, rd: &RestrictedDatum, basis: SingularNcptBasis) -> Result<ComponentGroup> {
    let r = basis.roots.len();
    if r > MAX_SING_NCPT {
        return Err(Error::CapExceeded { what: "singular noncompact rank".into(), cap: MAX_SING_NCPT });
    }
    let one_plus = IMat::identity(rf.datum().rank()).add(&rf.theta().transpose());
    let mut masks: Vec<u32> = Vec::new();
    let mut h = Vec::new();
    for mask in 0u32..(1u32 << r) {
        let mut hb = vec![0; rf.datum().rank()];
        for j in 0..r {
            if mask & (1 << j) != 0 {
                hb = crate::linalg::add(&hb, &basis.coroots[j]);
            }
        }
        if in_column_lattice(&one_plus, &hb) {
            masks.push(mask);
            h.push(hb);
        }
    }
    let set: HashSet<u32> = masks.iter().copied().collect();
    for &a in &masks {
        for &b in &masks {
            ensure_internal!(set.contains(&(a ^ b)), "W^sing_ncpt(K) is not closed under symmetric difference");
        }
    }
    let d = rd.datum();
    let elements = masks
        .iter()
        .map(|&mask| {
            let mut m = IMat::identity(rd.rank());
            for j in 0..r {
                if mask & (1 << j) != 0 {
                    m = m.mul(&d.reflection_matrix(basis.roots[j]));
                }
            }
            m
        })
        .collect();
    let subsets = masks.iter().map(|&mask| (0..r).map(|j| mask & (1 << j) != 0).collect()).collect();
    Ok(ComponentGroup { basis, subsets, h, elements })
}

pub fn component_group(rf: &RealForm) -> Result<ComponentGroup> {
    let rd = restrict(rf)?;
    component_group_of(rf, &rd)
}

pub fn component_group_of(rf: &RealForm, rd: &RestrictedDatum) -> Result<ComponentGroup> {
    singular_ncpt_in_k(rf, rd, singular_ncpt_basis(rd)?)
}

/// Families of simple root systems carrying an outer involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableFamily {
    /// A_{2n−1}
    AOdd,
    /// A_{2n}
    AEven,
    /// D_{n+1}
    D,
    E6,
}

impl std::fmt::Display for TableFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableFamily::AOdd => write!(f, "A_(2n-1)"),
            TableFamily::AEven => write!(f, "A_(2n)"),
            TableFamily::D => write!(f, "D_(n+1)"),
            TableFamily::E6 => write!(f, "E6"),
        }
    }
}

/// One row of the restricted-root table: types, and the orders of the two
/// semidirect factorizations W_cplx ⋊ W^sing_imag and W^sing_cplx ⋉ W_imag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: TableFamily,
    pub n: usize,
    pub ambient: TypeLabel,
    pub res: TypeLabel,
    pub cplx: TypeLabel,
    pub imag: TypeLabel,
    pub sing_cplx: TypeLabel,
    pub sing_imag: TypeLabel,
    pub cplx_by_sing_imag: (usize, usize),
    pub sing_cplx_by_imag: (usize, usize),
}

fn fact(n: usize) -> usize {
    (1..=n).product()
}

/// The model real form used for a row. D_{n+1} uses the quasi-split SO(p,q) with p, q odd;
/// the row only sees θ on the roots, which is the same for every such p, q.
pub fn table_model(family: TableFamily, n: usize) -> Result<GroupLabel> {
    if n == 0 || (family == TableFamily::E6 && n != 1) {
        return Err(Error::Invalid(format!("no table row {family} with n = {n}")));
    }
    Ok(match family {
        TableFamily::AOdd => GroupLabel::SL(2 * n),
        TableFamily::AEven => GroupLabel::SL(2 * n + 1),
        TableFamily::D => {
            let (a, b) = ((n + 1) / 2, n / 2);
            GroupLabel::SO(2 * a + 1, 2 * b + 1)
        }
        TableFamily::E6 => GroupLabel::SplitE6,
    })
}

/// The row as printed in the table, with low-rank coincidences folded.
pub fn expected_table_row(family: TableFamily, n: usize) -> Result<TableRow> {
    table_model(family, n)?;
    let t = |parts: &[(&str, usize)]| TypeLabel::from_parts(parts);
    let a1n: Vec<(&str, usize)> = vec![("A", 1); n];
    let (wd, wb) = (fact(n) << n.saturating_sub(1), fact(n) << n);
    Ok(match family {
        TableFamily::AOdd => TableRow {
            family,
            n,
            ambient: t(&[("A", 2 * n - 1)]),
            res: t(&[("C", n)]),
            cplx: t(&[("D", n)]),
            imag: t(&a1n),
            sing_cplx: t(&[("A", n - 1)]),
            sing_imag: t(&[("A", 1)]),
            cplx_by_sing_imag: (wd, 2),
            sing_cplx_by_imag: (fact(n), 1 << n),
        },
        TableFamily::AEven => TableRow {
            family,
            n,
            ambient: t(&[("A", 2 * n)]),
            res: t(&[("BC", n)]),
            cplx: t(&[("B", n)]),
            imag: t(&a1n),
            sing_cplx: t(&[("A", n - 1)]),
            sing_imag: t(&[]),
            cplx_by_sing_imag: (wb, 1),
            sing_cplx_by_imag: (fact(n), 1 << n),
        },
        TableFamily::D => TableRow {
            family,
            n,
            ambient: t(&[("D", n + 1)]),
            res: t(&[("B", n)]),
            cplx: t(&a1n),
            imag: t(&[("D", n)]),
            sing_cplx: t(&[("A", 1)]),
            sing_imag: t(&[("A", n - 1)]),
            cplx_by_sing_imag: (1 << n, fact(n)),
            sing_cplx_by_imag: (2, wd),
        },
        TableFamily::E6 => TableRow {
            family,
            n,
            ambient: t(&[("E", 6)]),
            res: t(&[("F", 4)]),
            cplx: t(&[("D", 4)]),
            imag: t(&[("D", 4)]),
            sing_cplx: t(&[("A", 2)]),
            sing_imag: t(&[("A", 2)]),
            cplx_by_sing_imag: (192, 6),
            sing_cplx_by_imag: (6, 192),
        },
    })
}

/// Computes a row from scratch on the model real form.
pub fn computed_table_row(family: TableFamily, n: usize) -> Result<TableRow> {
    let rf = builtin_group(&table_model(family, n)?)?;
    let rd = restrict(&rf)?;
    let types = restricted_type(&rd)?;
    let w = build_W_theta(&rf, &rd)?;
    let (a, b) = semidirect_decompositions(&rd, &w)?;
    let ambient = identify(&PositiveSystem::standard(rf.datum()));
    Ok(TableRow {
        family,
        n,
        ambient,
        res: types.res,
        cplx: types.cplx,
        imag: types.imag,
        sing_cplx: types.sing_cplx,
        sing_imag: types.sing_imag,
        cplx_by_sing_imag: (a.normal_order, a.complement_order),
        sing_cplx_by_imag: (b.complement_order, b.normal_order),
    })
}

/// All rows covered by the table checks.
pub fn table_row_keys() -> Vec<(TableFamily, usize)> {
    let mut keys: Vec<(TableFamily, usize)> = (1..=4).map(|n| (TableFamily::AOdd, n)).collect();
    keys.extend((1..=3).map(|n| (TableFamily::AEven, n)));
    keys.extend((1..=4).map(|n| (TableFamily::D, n)));
    keys.push((TableFamily::E6, 1));
    keys
}

/// Shapes of the four fold diagrams (ambient, restricted, reduced, restricted reduced)
/// as drawn for SL(5,R) and split E6.
pub fn expected_fold_shapes(label: &GroupLabel) -> Option<[&'static str; 4]> {
    match label {
        GroupLabel::SL(5) => Some(["o-o-o-o", "o=>o@", "o-*-o", "*=>o"]),
        GroupLabel::SplitE6 => Some(["*1 *3 o1 o1 o2 o2", "*-*=>o-o", "*1 *3 o1 o1 o2 o2", "*-*=>o-o"]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{builtin_group, GroupLabel};

    fn setup(l: GroupLabel) -> (RealForm, RestrictedDatum, RestrictedWeylGroup) {
        let rf = builtin_group(&l).unwrap();
        let rd = restrict(&rf).unwrap();
        let w = build_W_theta(&rf, &rd).unwrap();
        (rf, rd, w)
    }

    #[test]
    fn orders() {
        assert_eq!(setup(GroupLabel::Compact('A', 1)).2.order(), 2);
        assert_eq!(setup(GroupLabel::SL(4)).2.order(), 8);
        assert_eq!(setup(GroupLabel::SplitE6).2.order(), 1152);
    }

    #[test]
    fn w1_examples() {
        let (_, rd, w) = setup(GroupLabel::Compact('B', 2));
        assert_eq!(enumerate_W1(&rd, &w).unwrap().reps.len(), 1);
        let (_, rd, w) = setup(GroupLabel::GL(4));
        assert_eq!(enumerate_W1(&rd, &w).unwrap().reps.len(), 2);
        let (_, rd, w) = setup(GroupLabel::SL(2));
        assert_eq!(enumerate_W1(&rd, &w).unwrap().reps.len(), 2);
    }

    #[test]
    fn semidirect_identity_theta() {
        let (_, rd, w) = setup(GroupLabel::Compact('A', 2));
        let (a, _) = semidirect_decompositions(&rd, &w).unwrap();
        assert_eq!(a.normal_order, 1);
        assert_eq!(a.complement_order, 6);
    }

    #[test]
    fn component_groups() {
        let order = |l| component_group(&builtin_group(&l).unwrap()).unwrap().order();
        assert_eq!(order(GroupLabel::SL(2)), 1);
        assert_eq!(order(GroupLabel::Compact('C', 3)), 1);
        assert_eq!(order(GroupLabel::Sp(2)), 1);
        assert_eq!(order(GroupLabel::PSp(2)), 2);
        assert_eq!(order(GroupLabel::PSp(3)), 2);
        assert_eq!(order(GroupLabel::PSO(2)), 4);
    }

    #[test]
    fn table_rows_match() {
        for (fam, n) in table_row_keys() {
            assert_eq!(computed_table_row(fam, n).unwrap(), expected_table_row(fam, n).unwrap(), "{fam} n={n}");
        }
    }

    #[test]
    fn fold_shapes_match() {
        for l in [GroupLabel::SL(5), GroupLabel::SplitE6] {
            let rf = builtin_group(&l).unwrap();
            let rd = restrict(&rf).unwrap();
            let f = crate::restricted::fold_diagram(&rf, &rd).unwrap();
            let got = [f.ambient.shape(), f.restricted.shape(), f.reduced.shape(), f.restricted_reduced.shape()];
            assert_eq!(got, expected_fold_shapes(&l).unwrap().map(String::from), "{l}");
        }
    }
}

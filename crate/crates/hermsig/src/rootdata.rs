//! Root data, positive systems, Weyl groups, Weyl dimension and Freudenthal multiplicities.

use crate::error::{ensure_internal, Error, Result};
use crate::linalg::{
    dot, dot_q, fmt_rat, fmt_rat_vec, q, rat_to_i64, to_rat_vec, IMat, IntVec, QMat, Rat, RatVec,
};
use num::{One, Signed};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// Root datum with roots in X* and coroots in X_*, both written in dual bases so that
/// the pairing is the dot product.
#[derive(Clone, Debug)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<IntVec>,
    coroots: Vec<IntVec>,
    simple: Vec<usize>,
    label: String,
    index: HashMap<IntVec, usize>,
    neg: Vec<usize>,
    simple_coeffs: Vec<IntVec>,
}

impl RootDatum {
    /// Validates all root-datum axioms and the positive system defined by `simple`.
    pub fn new(
        rank: usize,
        roots: Vec<IntVec>,
        coroots: Vec<IntVec>,
        simple: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidDatum(m));
        if roots.len() != coroots.len() {
            return bad(format!("{} roots but {} coroots", roots.len(), coroots.len()));
        }
        for (i, (a, c)) in roots.iter().zip(&coroots).enumerate() {
            if a.len() != rank || c.len() != rank {
                return bad(format!("root {i} has wrong length"));
            }
            if dot(a, c) != 2 {
                return bad(format!("pairing of root {i} with its coroot is {}", dot(a, c)));
            }
        }
        let mut index = HashMap::new();
        for (i, a) in roots.iter().enumerate() {
            if index.insert(a.clone(), i).is_some() {
                return bad(format!("root {a:?} listed twice"));
            }
        }
        let mut neg = Vec::with_capacity(roots.len());
        for (i, a) in roots.iter().enumerate() {
            let na: IntVec = a.iter().map(|x| -x).collect();
            let Some(&j) = index.get(&na) else {
                return bad(format!("negative of root {a:?} missing"));
            };
            if coroots[j].iter().zip(&coroots[i]).any(|(x, y)| *x != -*y) {
                return bad(format!("coroot of -{a:?} is not the negated coroot"));
            }
            neg.push(j);
        }
        let coindex: HashMap<&IntVec, usize> =
            coroots.iter().enumerate().map(|(i, c)| (c, i)).collect();
        for i in 0..roots.len() {
            for j in 0..roots.len() {
                let p = dot(&roots[j], &coroots[i]);
                let img: IntVec =
                    roots[j].iter().zip(&roots[i]).map(|(b, a)| b - p * a).collect();
                let Some(&k) = index.get(&img) else {
                    return bad(format!("reflection in root {i} does not preserve the roots"));
                };
                let pc = dot(&roots[i], &coroots[j]);
                let cimg: IntVec =
                    coroots[j].iter().zip(&coroots[i]).map(|(b, a)| b - pc * a).collect();
                if coindex.get(&cimg) != Some(&k) {
                    return bad(format!(
                        "reflection in root {i} does not act compatibly on coroots"
                    ));
                }
            }
        }
        // positive system from the simple roots
        let simple_q = QMat::from_int_rows(
            &simple.iter().map(|&s| roots[s].clone()).collect::<Vec<_>>(),
        )
        .transpose();
        if simple_q.rank() != simple.len() {
            return bad("simple roots are linearly dependent".into());
        }
        let mut simple_coeffs = Vec::with_capacity(roots.len());
        for a in &roots {
            let Some(c) = simple_q.solve(&to_rat_vec(a)) else {
                return bad(format!("root {a:?} is not in the span of the simple roots"));
            };
            let Some(c) = c.iter().map(rat_to_i64).collect::<Option<IntVec>>() else {
                return bad(format!("root {a:?} is not an integral combination of simple roots"));
            };
            if c.iter().any(|&x| x > 0) && c.iter().any(|&x| x < 0) {
                return bad(format!("root {a:?} has mixed-sign simple coefficients"));
            }
            simple_coeffs.push(c);
        }
        Ok(RootDatum { rank, roots, coroots, simple, label: label.into(), index, neg, simple_coeffs })
    }

    /// Chooses the lexicographically positive system.
    pub fn from_roots(
        rank: usize,
        roots: Vec<IntVec>,
        coroots: Vec<IntVec>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let positive: Vec<bool> = roots.iter().map(|a| lex_positive(a)).collect();
        let simple = indecomposables(&roots, &positive);
        Self::new(rank, roots, coroots, simple, label)
    }

    /// Generates all roots by reflection closure of the simple roots and coroots.
    pub fn from_simple(
        rank: usize,
        simple_roots: &[IntVec],
        simple_coroots: &[IntVec],
        label: impl Into<String>,
    ) -> Result<Self> {
        const CAP: usize = 100_000;
        let mut seen: HashMap<IntVec, IntVec> = HashMap::new();
        let mut queue: VecDeque<(IntVec, IntVec)> = VecDeque::new();
        for (a, c) in simple_roots.iter().zip(simple_coroots) {
            if seen.insert(a.clone(), c.clone()).is_none() {
                queue.push_back((a.clone(), c.clone()));
            }
        }
        while let Some((b, bc)) = queue.pop_front() {
            for (a, c) in simple_roots.iter().zip(simple_coroots) {
                let p = dot(&b, c);
                let img: IntVec = b.iter().zip(a).map(|(x, y)| x - p * y).collect();
                let pc = dot(a, &bc);
                let cimg: IntVec = bc.iter().zip(c).map(|(x, y)| x - pc * y).collect();
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), cimg.clone());
                    queue.push_back((img, cimg));
                    if seen.len() > CAP {
                        return Err(Error::InvalidDatum("reflection closure is infinite".into()));
                    }
                }
            }
        }
        // order: positive roots by height then coefficients, then their negatives
        let sq = QMat::from_int_rows(simple_roots).transpose();
        let mut pos: Vec<(i64, IntVec, IntVec)> = Vec::new();
        for a in seen.keys() {
            let c = sq
                .solve(&to_rat_vec(a))
                .and_then(|c| c.iter().map(rat_to_i64).collect::<Option<IntVec>>())
                .ok_or_else(|| Error::InvalidDatum("simple roots do not span the roots".into()))?;
            if c.iter().all(|&x| x >= 0) {
                pos.push((c.iter().sum(), c, a.clone()));
            }
        }
        pos.sort();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for (_, _, a) in &pos {
            roots.push(a.clone());
            coroots.push(seen[a].clone());
        }
        for (_, _, a) in &pos {
            let na: IntVec = a.iter().map(|x| -x).collect();
            coroots.push(seen.get(&na).cloned().ok_or_else(|| {
                Error::InvalidDatum("root set is not symmetric".into())
            })?);
            roots.push(na);
        }
        if roots.len() != seen.len() {
            return Err(Error::InvalidDatum("some roots are neither positive nor negative".into()));
        }
        let simple = simple_roots.iter().map(|a| roots.iter().position(|r| r == a).unwrap()).collect();
        Self::new(rank, roots, coroots, simple, label)
    }

    /// Simply connected datum of a Cartan matrix, `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    /// X* is written in fundamental-weight coordinates.
    pub fn from_cartan(cartan: &[Vec<i64>], label: impl Into<String>) -> Result<Self> {
        check_finite_type(cartan)?;
        let n = cartan.len();
        let simple_roots: Vec<IntVec> = (0..n).map(|j| (0..n).map(|i| cartan[i][j]).collect()).collect();
        let simple_coroots: Vec<IntVec> =
            (0..n).map(|j| (0..n).map(|i| (i == j) as i64).collect()).collect();
        Self::from_simple(n, &simple_roots, &simple_coroots, label)
    }

    pub fn from_type(family: char, rank: usize) -> Result<Self> {
        let c = cartan_matrix(family, rank)?;
        Self::from_cartan(&c, format!("{family}{rank}"))
    }

    /// Parses labels such as `A3`, `E6` or `GL4`.
    pub fn from_label(label: &str) -> Result<Self> {
        let s = label.trim();
        if let Some(n) = s.strip_prefix("GL") {
            let n: usize = n
                .trim_matches(|c| c == '(' || c == ')')
                .parse()
                .map_err(|_| Error::Invalid(format!("bad label {label}")))?;
            return Ok(Self::gl(n));
        }
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| Error::Invalid("empty label".into()))?;
        let rank: usize =
            chars.as_str().parse().map_err(|_| Error::Invalid(format!("bad label {label}")))?;
        Self::from_type(family.to_ascii_uppercase(), rank)
    }

    /// GL(n) with roots e_i - e_j.
    pub fn gl(n: usize) -> Self {
        let e = |i: usize| -> IntVec { (0..n).map(|k| (k == i) as i64).collect() };
        let simple: Vec<IntVec> = (0..n.saturating_sub(1)).map(|i| crate::linalg::sub(&e(i), &e(i + 1))).collect();
        Self::from_simple(n, &simple, &simple, format!("GL{n}")).expect("GL(n) datum is valid")
    }

    /// B_m in orthogonal coordinates: roots ±e_i±e_j, ±e_i.
    pub fn orthogonal_b(m: usize) -> Self {
        let e = |i: usize| -> IntVec { (0..m).map(|k| (k == i) as i64).collect() };
        let mut sr = Vec::new();
        let mut sc = Vec::new();
        for i in 0..m.saturating_sub(1) {
            let v = crate::linalg::sub(&e(i), &e(i + 1));
            sr.push(v.clone());
            sc.push(v);
        }
        if m > 0 {
            sr.push(e(m - 1));
            sc.push(crate::linalg::scale(&e(m - 1), 2));
        }
        Self::from_simple(m, &sr, &sc, format!("B{m}")).expect("B_m datum is valid")
    }

    /// D_m in orthogonal coordinates: roots ±e_i±e_j.
    pub fn orthogonal_d(m: usize) -> Self {
        let e = |i: usize| -> IntVec { (0..m).map(|k| (k == i) as i64).collect() };
        let mut sr = Vec::new();
        for i in 0..m.saturating_sub(1) {
            sr.push(crate::linalg::sub(&e(i), &e(i + 1)));
        }
        if m >= 2 {
            sr.push(crate::linalg::add(&e(m - 2), &e(m - 1)));
        }
        Self::from_simple(m, &sr, &sr, format!("D{m}")).expect("D_m datum is valid")
    }

    /// C_n in orthogonal coordinates: roots ±e_i±e_j, ±2e_i.
    pub fn symplectic(n: usize) -> Self {
        let e = |i: usize| -> IntVec { (0..n).map(|k| (k == i) as i64).collect() };
        let mut sr = Vec::new();
        let mut sc = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let v = crate::linalg::sub(&e(i), &e(i + 1));
            sr.push(v.clone());
            sc.push(v);
        }
        if n > 0 {
            sr.push(crate::linalg::scale(&e(n - 1), 2));
            sc.push(e(n - 1));
        }
        Self::from_simple(n, &sr, &sc, format!("C{n}")).expect("C_n datum is valid")
    }

    pub fn direct_sum(&self, other: &RootDatum) -> RootDatum {
        let n = self.rank + other.rank;
        let pad_l = |v: &IntVec| -> IntVec {
            let mut w = v.clone();
            w.resize(n, 0);
            w
        };
        let pad_r = |v: &IntVec| -> IntVec {
            let mut w = vec![0; self.rank];
            w.extend_from_slice(v);
            w
        };
        let mut roots: Vec<IntVec> = self.roots.iter().map(pad_l).collect();
        roots.extend(other.roots.iter().map(pad_r));
        let mut coroots: Vec<IntVec> = self.coroots.iter().map(pad_l).collect();
        coroots.extend(other.coroots.iter().map(pad_r));
        let mut simple = self.simple.clone();
        simple.extend(other.simple.iter().map(|s| s + self.roots.len()));
        RootDatum::new(n, roots, coroots, simple, format!("{}x{}", self.label, other.label))
            .expect("direct sum of valid data is valid")
    }

    /// Restricts X* to the sublattice with the given basis rows.
    pub fn sublattice(&self, basis: &IMat, label: impl Into<String>) -> Result<RootDatum> {
        let bt = basis.to_q().transpose();
        let mut roots = Vec::new();
        for a in &self.roots {
            let y = bt
                .solve(&to_rat_vec(a))
                .and_then(|y| y.iter().map(rat_to_i64).collect::<Option<IntVec>>())
                .ok_or_else(|| Error::InvalidDatum(format!("root {a:?} is not in the sublattice")))?;
            roots.push(y);
        }
        let coroots = self.coroots.iter().map(|c| basis.mul_vec(c)).collect();
        RootDatum::new(basis.rows(), roots, coroots, self.simple.clone(), label)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn roots(&self) -> &[IntVec] {
        &self.roots
    }
    pub fn coroots(&self) -> &[IntVec] {
        &self.coroots
    }
    pub fn root(&self, i: usize) -> &IntVec {
        &self.roots[i]
    }
    pub fn coroot(&self, i: usize) -> &IntVec {
        &self.coroots[i]
    }
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }
    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }
    pub fn negative(&self, i: usize) -> usize {
        self.neg[i]
    }
    /// Coefficients of root `i` over the construction simple roots.
    pub fn simple_coefficients(&self, i: usize) -> &IntVec {
        &self.simple_coeffs[i]
    }
    pub fn is_reduced(&self) -> bool {
        self.roots.iter().all(|a| self.index_of(&crate::linalg::scale(a, 2)).is_none())
    }

    pub fn reflect_weight(&self, i: usize, v: &[i64]) -> IntVec {
        let p = dot(v, &self.coroots[i]);
        v.iter().zip(&self.roots[i]).map(|(x, a)| x - p * a).collect()
    }

    pub fn reflect_weight_q(&self, i: usize, v: &[Rat]) -> RatVec {
        let p = dot_q(v, &self.coroots[i]);
        v.iter().zip(&self.roots[i]).map(|(x, &a)| x - &p * q(a)).collect()
    }

    /// Reflection s_i as a matrix acting on X* column vectors.
    pub fn reflection_matrix(&self, i: usize) -> IMat {
        let mut m = IMat::identity(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                m.set(r, c, m.get(r, c) - self.roots[i][r] * self.coroots[i][c]);
            }
        }
        m
    }

    /// Cartan matrix of a set of roots, `c[i][j] = <root_j, coroot_i>`.
    pub fn cartan_of(&self, idx: &[usize]) -> Vec<Vec<i64>> {
        idx.iter()
            .map(|&i| idx.iter().map(|&j| dot(&self.roots[j], &self.coroots[i])).collect())
            .collect()
    }
}

fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).map_or(false, |&x| x > 0)
}

/// Positive roots not expressible as a sum of two positive roots.
pub fn indecomposables(roots: &[IntVec], positive: &[bool]) -> Vec<usize> {
    let pos: Vec<usize> = (0..roots.len()).filter(|&i| positive[i]).collect();
    let set: HashSet<&IntVec> = pos.iter().map(|&i| &roots[i]).collect();
    pos.iter()
        .copied()
        .filter(|&i| {
            !pos.iter().any(|&j| {
                let d = crate::linalg::sub(&roots[i], &roots[j]);
                set.contains(&d)
            })
        })
        .collect()
}

/// Cartan matrix of a finite type, Bourbaki numbering, `c[i][j] = <alpha_j, alpha_i^vee>`.
pub fn cartan_matrix(family: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Err(Error::Invalid(format!("no finite type {family}{n}")));
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        'A' if n >= 1 => {
            for i in 0..n - 1 {
                link(&mut c, i, i + 1);
            }
        }
        'B' | 'C' if n >= 1 => {
            for i in 0..n - 1 {
                link(&mut c, i, i + 1);
            }
            if n >= 2 {
                if family == 'B' {
                    c[n - 1][n - 2] = -2;
                } else {
                    c[n - 2][n - 1] = -2;
                }
            }
        }
        'D' if n >= 2 => {
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            if n >= 3 {
                link(&mut c, n - 3, n - 1);
            }
        }
        'E' if (6..=8).contains(&n) => {
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            for i in 2..n - 1 {
                link(&mut c, i, i + 1);
            }
        }
        'F' if n == 4 => {
            link(&mut c, 0, 1);
            link(&mut c, 1, 2);
            link(&mut c, 2, 3);
            c[2][1] = -2;
        }
        'G' if n == 2 => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
        _ => return bad(),
    }
    Ok(c)
}

/// Checks the generalized Cartan matrix axioms and finite type; on failure reports a minimal
/// principal submatrix that is not positive definite after symmetrization.
pub fn check_finite_type(c: &[Vec<i64>]) -> Result<()> {
    let n = c.len();
    for (i, row) in c.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {i} is {}", row[i])));
        }
        for j in 0..n {
            if i != j && (row[j] > 0 || ((row[j] == 0) != (c[j][i] == 0))) {
                return Err(Error::InvalidCartan(format!("bad off-diagonal pair at ({i},{j})")));
            }
        }
    }
    // symmetrizer d with d_i c_ij = d_j c_ji
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rat::one());
        let mut stack = vec![start];
        let mut comp = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                let dj = d[i].clone().unwrap() * q(c[i][j]) / q(c[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                        comp.push(j);
                    }
                    Some(x) if *x != dj => {
                        comp.sort();
                        return Err(Error::NotFiniteType {
                            nodes: comp.clone(),
                            matrix: sub_int(c, &comp),
                        });
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<Rat> = d.into_iter().map(Option::unwrap).collect();
    let sym = |idx: &[usize]| -> QMat {
        let mut m = QMat::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, &d[i] * q(c[i][j]));
            }
        }
        m
    };
    let all: Vec<usize> = (0..n).collect();
    if is_positive_definite(&sym(&all)) {
        return Ok(());
    }
    if n <= 16 {
        for size in 1..=n {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                if !is_positive_definite(&sym(&idx)) {
                    return Err(Error::NotFiniteType { matrix: sub_int(c, &idx), nodes: idx });
                }
            }
        }
    }
    Err(Error::NotFiniteType { nodes: all.clone(), matrix: c.to_vec() })
}

fn sub_int(c: &[Vec<i64>], idx: &[usize]) -> Vec<Vec<i64>> {
    idx.iter().map(|&i| idx.iter().map(|&j| c[i][j]).collect()).collect()
}

fn is_positive_definite(m: &QMat) -> bool {
    let mut a = m.clone();
    let n = a.rows();
    for k in 0..n {
        let p = a.get(k, k).clone();
        if !p.is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = a.get(i, k) / &p;
            for j in k..n {
                let v = a.get(i, j) - &f * a.get(k, j);
                a.set(i, j, v);
            }
        }
    }
    true
}

/// A choice of positive roots in a root datum.
#[derive(Clone, Debug)]
pub struct PositiveSystem {
    datum: RootDatum,
    is_positive: Vec<bool>,
    positive: Vec<usize>,
    simple: Vec<usize>,
    two_rho: IntVec,
}

impl PositiveSystem {
    /// The positive system determined by the datum's simple roots.
    pub fn standard(datum: &RootDatum) -> Self {
        let flags = (0..datum.num_roots())
            .map(|i| datum.simple_coeffs[i].iter().any(|&x| x > 0))
            .collect();
        Self::build(datum.clone(), flags, datum.simple.clone())
    }

    /// Validates a positive set: exactly one of ±α, closed under addition, and generated
    /// by its indecomposable elements.
    pub fn from_flags(datum: &RootDatum, flags: Vec<bool>) -> Result<Self> {
        let n = datum.num_roots();
        if flags.len() != n {
            return Err(Error::InvalidDatum("positivity flags have wrong length".into()));
        }
        for i in 0..n {
            if flags[i] == flags[datum.negative(i)] {
                return Err(Error::InvalidDatum(format!(
                    "root {:?} and its negative have equal positivity",
                    datum.root(i)
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if flags[i] && flags[j] {
                    let s = crate::linalg::add(datum.root(i), datum.root(j));
                    if let Some(k) = datum.index_of(&s) {
                        if !flags[k] {
                            return Err(Error::InvalidDatum("positive set is not closed".into()));
                        }
                    }
                }
            }
        }
        let simple = indecomposables(&datum.roots, &flags);
        let sq = QMat::from_int_rows(
            &simple.iter().map(|&s| datum.root(s).clone()).collect::<Vec<_>>(),
        )
        .transpose();
        for i in (0..n).filter(|&i| flags[i]) {
            let ok = sq
                .solve(&to_rat_vec(datum.root(i)))
                .map(|c| c.iter().all(|x| x.is_integer() && !x.is_negative()))
                .unwrap_or(false);
            if !ok {
                return Err(Error::InvalidDatum("positive set is not generated by its simple roots".into()));
            }
        }
        Ok(Self::build(datum.clone(), flags, simple))
    }

    fn build(datum: RootDatum, is_positive: Vec<bool>, simple: Vec<usize>) -> Self {
        let positive: Vec<usize> = (0..datum.num_roots()).filter(|&i| is_positive[i]).collect();
        let mut two_rho = vec![0; datum.rank()];
        for &i in &positive {
            for (t, a) in two_rho.iter_mut().zip(datum.root(i)) {
                *t += a;
            }
        }
        PositiveSystem { datum, is_positive, positive, simple, two_rho }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }
    pub fn is_positive(&self, i: usize) -> bool {
        self.is_positive[i]
    }
    pub fn flags(&self) -> &[bool] {
        &self.is_positive
    }
    pub fn positive(&self) -> &[usize] {
        &self.positive
    }
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }
    pub fn two_rho(&self) -> &IntVec {
        &self.two_rho
    }
    pub fn rho(&self) -> RatVec {
        self.two_rho.iter().map(|&x| crate::linalg::qfrac(x, 2)).collect()
    }

    pub fn is_dominant_q(&self, v: &[Rat]) -> bool {
        self.simple.iter().all(|&s| !dot_q(v, self.datum.coroot(s)).is_negative())
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.simple.iter().all(|&s| dot(v, self.datum.coroot(s)) >= 0)
    }

    /// Sum of positive coroots.
    pub fn two_rho_check(&self) -> IntVec {
        let mut s = vec![0; self.datum.rank()];
        for &i in &self.positive {
            for (t, c) in s.iter_mut().zip(self.datum.coroot(i)) {
                *t += c;
            }
        }
        s
    }
}

/// Weyl group element; the matrix acts on X* column vectors and is the ground truth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub matrix: IMat,
    /// Letters index `PositiveSystem::simple()`; `[a, b]` means `s_a s_b`.
    pub word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { matrix: IMat::identity(rank), word: Some(Vec::new()) }
    }

    pub fn length(&self) -> Option<usize> {
        self.word.as_ref().map(Vec::len)
    }

    pub fn act(&self, v: &[i64]) -> IntVec {
        self.matrix.mul_vec(v)
    }

    pub fn act_q(&self, v: &[Rat]) -> RatVec {
        self.matrix.mul_vec_q(v)
    }

    /// Multiplies out the word; `None` if the element carries no word.
    pub fn word_matrix(&self, pos: &PositiveSystem) -> Option<IMat> {
        let w = self.word.as_ref()?;
        let mut m = IMat::identity(pos.datum().rank());
        for &l in w {
            m = m.mul(&pos.datum().reflection_matrix(pos.simple()[l]));
        }
        Some(m)
    }
}

/// All elements of the Weyl group in breadth-first order, each with a reduced word.
pub fn generate_weyl_group(pos: &PositiveSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let d = pos.datum();
    let gens: Vec<IMat> = pos.simple().iter().map(|&s| d.reflection_matrix(s)).collect();
    let mut seen: HashSet<IMat> = HashSet::new();
    let mut out = vec![WeylElement::identity(d.rank())];
    seen.insert(out[0].matrix.clone());
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for (l, g) in gens.iter().enumerate() {
            let m = g.mul(&cur.matrix);
            if seen.insert(m.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { what: "Weyl group order".into(), cap });
                }
                let mut word = vec![l];
                word.extend(cur.word.as_ref().unwrap());
                out.push(WeylElement { matrix: m, word: Some(word) });
            }
        }
    }
    Ok(out)
}

/// Dominant W-conjugate of a rational weight and an element carrying φ to it.
pub fn dominant_representative(pos: &PositiveSystem, phi: &[Rat]) -> (RatVec, WeylElement) {
    let d = pos.datum();
    let mut v = phi.to_vec();
    let mut m = IMat::identity(d.rank());
    let mut word = Vec::new();
    loop {
        let hit = pos
            .simple()
            .iter()
            .enumerate()
            .find(|(_, &s)| dot_q(&v, d.coroot(s)).is_negative());
        let Some((l, &s)) = hit else { break };
        v = d.reflect_weight_q(s, &v);
        m = d.reflection_matrix(s).mul(&m);
        word.insert(0, l);
    }
    (v, WeylElement { matrix: m, word: Some(word) })
}

/// Integer version of [`dominant_representative`] without the group element.
pub fn dominant_int(pos: &PositiveSystem, phi: &[i64]) -> IntVec {
    let d = pos.datum();
    let mut v = phi.to_vec();
    loop {
        let hit = pos.simple().iter().find(|&&s| dot(&v, d.coroot(s)) < 0);
        match hit {
            Some(&s) => v = d.reflect_weight(s, &v),
            None => return v,
        }
    }
}

/// Orbit of an integral weight under the Weyl group, sorted.
pub fn weyl_orbit(pos: &PositiveSystem, v: &[i64], cap: usize) -> Result<Vec<IntVec>> {
    let d = pos.datum();
    let mut seen: BTreeSet<IntVec> = BTreeSet::new();
    seen.insert(v.to_vec());
    let mut queue = vec![v.to_vec()];
    while let Some(x) = queue.pop() {
        for &s in pos.simple() {
            let y = d.reflect_weight(s, &x);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { what: "Weyl orbit size".into(), cap });
                }
                queue.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Weyl dimension formula as an exact rational, after checking regular dominance of λ+ρ.
pub fn weyl_dimension_rat(pos: &PositiveSystem, lam: &[Rat]) -> Result<Rat> {
    let d = pos.datum();
    let two_rho = pos.two_rho();
    let mut num = Rat::one();
    let mut den = Rat::one();
    for &i in pos.positive() {
        let c = d.coroot(i);
        let l = dot_q(lam, c);
        let r = q(dot(two_rho, c));
        let top = &l * q(2) + &r;
        if !top.is_positive() {
            return Err(Error::NotDominant { coroot: c.clone(), value: fmt_rat(&(top / q(2))) });
        }
        num *= top;
        den *= r;
    }
    Ok(num / den)
}

/// Weyl dimension formula; λ must be weakly integral and λ+ρ regular dominant.
pub fn weyl_dimension(pos: &PositiveSystem, lam: &[Rat]) -> Result<u64> {
    let d = pos.datum();
    for &i in pos.positive() {
        if !dot_q(lam, d.coroot(i)).is_integer() {
            return Err(Error::NotIntegral(format!(
                "{} pairs non-integrally with coroot {:?}",
                fmt_rat_vec(lam),
                d.coroot(i)
            )));
        }
    }
    let v = weyl_dimension_rat(pos, lam)?;
    ensure_internal!(v.is_integer(), "Weyl dimension {} is not an integer", fmt_rat(&v));
    rat_to_i64(&v)
        .and_then(|x| u64::try_from(x).ok())
        .ok_or_else(|| Error::Internal(format!("Weyl dimension {} out of range", fmt_rat(&v))))
}

/// Full weight multiset of the irreducible module of dominant integral highest weight λ.
pub fn freudenthal_multiplicities(pos: &PositiveSystem, lam: &[i64]) -> Result<BTreeMap<IntVec, u64>> {
    let d = pos.datum();
    if !d.is_reduced() {
        return Err(Error::Precondition("Freudenthal recursion needs a reduced root system".into()));
    }
    for &s in pos.simple() {
        let p = dot(lam, d.coroot(s));
        if p < 0 {
            return Err(Error::NotDominant { coroot: d.coroot(s).clone(), value: p.to_string() });
        }
    }
    let dom = dominant_multiplicities(pos, lam)?;
    let mut out = BTreeMap::new();
    for (mu, m) in &dom {
        for w in weyl_orbit(pos, mu, DEFAULT_WEYL_CAP)? {
            out.insert(w, *m);
        }
    }
    Ok(out)
}

/// Multiplicities of the dominant weights only.
pub fn dominant_multiplicities(pos: &PositiveSystem, lam: &[i64]) -> Result<BTreeMap<IntVec, u64>> {
    let d = pos.datum();
    let coroots: Vec<&IntVec> = d.coroots().iter().collect();
    let form = |x: &[i64], y: &[i64]| -> i128 {
        coroots.iter().map(|c| dot(x, c) as i128 * dot(y, c) as i128).sum()
    };
    // dominant weights below λ, by depth
    let mut depth: BTreeMap<IntVec, usize> = BTreeMap::new();
    depth.insert(lam.to_vec(), 0);
    let mut layer = vec![lam.to_vec()];
    let mut order = vec![lam.to_vec()];
    let mut dcount = 0;
    while !layer.is_empty() {
        dcount += 1;
        let mut next = BTreeSet::new();
        for mu in &layer {
            for &i in pos.positive() {
                let nu = crate::linalg::sub(mu, d.root(i));
                if pos.is_dominant(&nu) && !depth.contains_key(&nu) {
                    next.insert(nu);
                }
            }
        }
        for nu in &next {
            depth.insert(nu.clone(), dcount);
        }
        order.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    // sort by height below λ so that higher weights come first
    let two_rho_check = pos.two_rho_check();
    let ht = |mu: &IntVec| dot(&crate::linalg::sub(lam, mu), &two_rho_check);
    order.sort_by_key(|mu| (ht(mu), mu.clone()));

    let two_rho = pos.two_rho();
    let top: IntVec = lam.iter().zip(two_rho).map(|(a, r)| 2 * a + r).collect();
    let top_norm = form(&top, &top);
    let mut mult: BTreeMap<IntVec, u64> = BTreeMap::new();
    for mu in &order {
        if mu.as_slice() == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc: i128 = 0;
        for &i in pos.positive() {
            let a = d.root(i);
            let mut k = 1;
            loop {
                let w: IntVec = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let wd = dominant_int(pos, &w);
                let Some(&m) = mult.get(&wd) else { break };
                if m == 0 {
                    break;
                }
                acc += m as i128 * form(&w, a);
                k += 1;
            }
        }
        let shifted: IntVec = mu.iter().zip(two_rho).map(|(a, r)| 2 * a + r).collect();
        let den = top_norm - form(&shifted, &shifted);
        ensure_internal!(den > 0, "Freudenthal denominator vanished at {mu:?}");
        let numer = 8 * acc;
        ensure_internal!(numer % den == 0, "Freudenthal quotient not integral at {mu:?}");
        mult.insert(mu.clone(), (numer / den) as u64);
    }
    mult.retain(|_, m| *m > 0);
    Ok(mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qfrac;

    fn weyl_order(family: char, n: u64) -> u64 {
        let fact = |k: u64| (1..=k).product::<u64>();
        match family {
            'A' => fact(n + 1),
            'B' | 'C' => (1 << n) * fact(n),
            'D' => (1 << (n - 1)) * fact(n),
            'E' => [51840, 2903040, 696729600][(n - 6) as usize],
            'F' => 1152,
            'G' => 12,
            _ => unreachable!(),
        }
    }

    #[test]
    fn classical_root_counts_and_orders() {
        for (f, n, roots) in [
            ('A', 1, 2), ('A', 2, 6), ('A', 3, 12), ('B', 2, 8), ('C', 3, 18),
            ('D', 4, 24), ('G', 2, 12), ('F', 4, 48), ('E', 6, 72),
        ] {
            let d = RootDatum::from_type(f, n).unwrap();
            assert_eq!(d.num_roots(), roots, "{f}{n}");
            let pos = PositiveSystem::standard(&d);
            if weyl_order(f, n as u64) <= 51840 {
                let w = generate_weyl_group(&pos, DEFAULT_WEYL_CAP).unwrap();
                assert_eq!(w.len() as u64, weyl_order(f, n as u64), "{f}{n}");
            }
        }
    }

    #[test]
    fn gl_label_and_epsilon_models() {
        let d = RootDatum::from_label("GL4").unwrap();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.num_roots(), 12);
        for a in d.roots() {
            assert_eq!(a.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(a.iter().filter(|&&x| x == -1).count(), 1);
        }
        assert_eq!(RootDatum::orthogonal_b(3).num_roots(), 18);
        assert_eq!(RootDatum::orthogonal_d(3).num_roots(), 12);
        assert_eq!(RootDatum::symplectic(2).num_roots(), 8);
        assert_eq!(RootDatum::orthogonal_d(1).num_roots(), 0);
    }

    #[test]
    fn cartan_matches_epsilon_models() {
        // C2 from the Cartan matrix and from ±e_i±e_j, ±2e_i have the same simple pairings
        let c = cartan_matrix('C', 2).unwrap();
        let e = RootDatum::symplectic(2);
        assert_eq!(e.cartan_of(e.simple()), c);
        let b = RootDatum::orthogonal_b(3);
        assert_eq!(b.cartan_of(b.simple()), cartan_matrix('B', 3).unwrap());
    }

    #[test]
    fn non_finite_type_rejected_with_submatrix() {
        // affine A2: a triangle
        let c = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        match RootDatum::from_cartan(&c, "x") {
            Err(Error::NotFiniteType { nodes, .. }) => assert_eq!(nodes, vec![0, 1, 2]),
            other => panic!("unexpected {other:?}"),
        }
        // hyperbolic bond inside a larger matrix
        let c = vec![vec![2, -3, 0], vec![-2, 2, -1], vec![0, -1, 2]];
        match RootDatum::from_cartan(&c, "x") {
            Err(Error::NotFiniteType { nodes, .. }) => assert_eq!(nodes, vec![0, 1]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let a1 = PositiveSystem::standard(&RootDatum::from_type('A', 1).unwrap());
        for k in 0..6 {
            assert_eq!(weyl_dimension(&a1, &[q(k)]).unwrap(), (k + 1) as u64);
        }
        let d2 = PositiveSystem::standard(&RootDatum::orthogonal_d(2));
        assert_eq!(weyl_dimension(&d2, &[qfrac(3, 2), qfrac(1, 2)]).unwrap(), 6);
        assert!(matches!(weyl_dimension(&a1, &[q(-3)]), Err(Error::NotDominant { .. })));
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = PositiveSystem::standard(&RootDatum::from_type('A', 1).unwrap());
        let (v, w) = dominant_representative(&a1, &[q(-3)]);
        assert_eq!(v, vec![q(3)]);
        assert_eq!(w.word, Some(vec![0]));
        let a2 = PositiveSystem::standard(&RootDatum::from_type('A', 2).unwrap());
        let phi = vec![q(-1), q(2)];
        let (v, w) = dominant_representative(&a2, &phi);
        assert!(a2.is_dominant_q(&v));
        assert_eq!(w.act_q(&phi), v);
        assert_eq!(w.word_matrix(&a2).unwrap(), w.matrix);
        // the orbit of (-1,2) is that of (1,1)... checked by brute force over W
        let all = generate_weyl_group(&a2, 100).unwrap();
        let orbit: BTreeSet<RatVec> = all.iter().map(|g| g.act_q(&phi)).collect();
        let doms: Vec<&RatVec> = orbit.iter().filter(|x| a2.is_dominant_q(x)).collect();
        assert_eq!(doms, vec![&v]);
    }

    #[test]
    fn freudenthal_examples() {
        let a2 = PositiveSystem::standard(&RootDatum::from_type('A', 2).unwrap());
        let m = freudenthal_multiplicities(&a2, &[1, 1]).unwrap();
        assert_eq!(m.values().sum::<u64>(), 8);
        assert_eq!(m[&vec![0, 0]], 2);
        let a1 = PositiveSystem::standard(&RootDatum::from_type('A', 1).unwrap());
        let m = freudenthal_multiplicities(&a1, &[4]).unwrap();
        let keys: Vec<IntVec> = m.keys().cloned().collect();
        assert_eq!(keys, vec![vec![-4], vec![-2], vec![0], vec![2], vec![4]]);
        assert!(m.values().all(|&x| x == 1));
        let zero = freudenthal_multiplicities(&a2, &[0, 0]).unwrap();
        assert_eq!(zero.len(), 1);
    }

    #[test]
    fn words_multiply_out() {
        let c2 = PositiveSystem::standard(&RootDatum::from_type('C', 2).unwrap());
        let w = generate_weyl_group(&c2, 100).unwrap();
        assert_eq!(w.len(), 8);
        for g in &w {
            assert_eq!(g.word_matrix(&c2).unwrap(), g.matrix);
        }
        assert!(matches!(generate_weyl_group(&c2, 5), Err(Error::CapExceeded { .. })));
    }
}

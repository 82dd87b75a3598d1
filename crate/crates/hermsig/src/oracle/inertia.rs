//! Exact inertia of symmetric rational matrices and the kernel-signature lemma.

use crate::error::{ensure_internal, Error, Result};
use crate::linalg::{QMat, Rat};
use num::{One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

impl Inertia {
    pub fn sig(&self) -> usize {
        self.p.abs_diff(self.q)
    }
    pub fn diff(&self) -> i64 {
        self.p as i64 - self.q as i64
    }
}

/// Inertia by symmetric congruence elimination; a 2×2 pivot is used when the diagonal vanishes.
pub fn inertia(s: &QMat) -> Result<Inertia> {
    if !s.is_symmetric() {
        return Err(Error::Precondition("matrix is not symmetric".into()));
    }
    let mut a: Vec<Vec<Rat>> = (0..s.rows()).map(|i| s.row(i).to_vec()).collect();
    let (mut p, mut q, mut z) = (0, 0, 0);
    while !a.is_empty() {
        let n = a.len();
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let piv = a[i][i].clone();
            if piv.is_positive() {
                p += 1;
            } else {
                q += 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            a = rest
                .iter()
                .map(|&j| rest.iter().map(|&k| &a[j][k] - &a[j][i] * &a[i][k] / &piv).collect())
                .collect();
            continue;
        }
        let off = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((i, j)) = off else {
            z += n;
            break;
        };
        // [[0, b], [b, 0]] has one positive and one negative eigenvalue
        p += 1;
        q += 1;
        let b = a[i][j].clone();
        let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        a = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| &a[r][c] - (&a[r][i] * &a[j][c] + &a[r][j] * &a[i][c]) / &b)
                    .collect()
            })
            .collect();
    }
    Ok(Inertia { p, q, z })
}

/// Polynomials as coefficient vectors, lowest degree first, without trailing zeros.
pub type Poly = Vec<Rat>;

fn trim(mut p: Poly) -> Poly {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    p
}

fn deg(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

fn rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let db = deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &c * bi;
        }
        r = trim(r);
    }
    r
}

fn quo(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let db = deg(b).expect("division by zero polynomial");
    let mut out = vec![Rat::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &b[db];
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &c * bi;
        }
        out[dr - db] = c;
        r = trim(r);
    }
    trim(out)
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer((i as i64).into())).collect())
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Characteristic polynomial det(tI − A) by Faddeev–LeVerrier.
pub fn charpoly(a: &QMat) -> Poly {
    let n = a.rows();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut m = QMat::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m);
        for i in 0..n {
            let v = next.get(i, i) + &c[n - k + 1];
            next.set(i, i, v);
        }
        m = next;
        let am = a.mul(&m);
        let tr = (0..n).fold(Rat::zero(), |acc, i| acc + am.get(i, i));
        c[n - k] = -tr / Rat::from_integer((k as i64).into());
    }
    c
}

fn sign_changes(values: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in values.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sgn(x: &Rat) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Whether every root of p is real and at most zero (Sturm count on the squarefree part).
pub fn roots_real_nonpositive(p: &Poly) -> bool {
    let p = trim(p.clone());
    let d = derivative(&p);
    let sq = if d.is_empty() { p.clone() } else { quo(&p, &gcd(&p, &d)) };
    let Some(n) = deg(&sq) else { return true };
    if n == 0 {
        return true;
    }
    let mut seq = vec![sq.clone(), derivative(&sq)];
    while !seq.last().unwrap().is_empty() {
        let k = seq.len();
        let r: Poly = rem(&seq[k - 2], &seq[k - 1]).into_iter().map(|c| -c).collect();
        seq.push(trim(r));
    }
    seq.pop();
    let at_minus_inf = sign_changes(seq.iter().map(|s| {
        let d = s.len() - 1;
        sgn(&s[d]) * if d % 2 == 0 { 1 } else { -1 }
    }));
    let at_zero = sign_changes(seq.iter().map(|s| sgn(&s[0])));
    at_minus_inf - at_zero == n
}

/// Signature of S on ker T, checked against P − Q on the whole space.
pub fn kernel_signature(t: &QMat, s: &QMat) -> Result<(usize, usize)> {
    let n = s.rows();
    if t.rows() != n || t.cols() != n || s.cols() != n {
        return Err(Error::Precondition("T and S must be square of the same size".into()));
    }
    if !s.is_symmetric() {
        return Err(Error::Precondition("S is not symmetric".into()));
    }
    if s.mul(t) != t.transpose().mul(s) {
        return Err(Error::Precondition("T is not self-adjoint for S".into()));
    }
    let t2 = t.mul(t);
    if !roots_real_nonpositive(&charpoly(&t2)) {
        return Err(Error::Precondition("T² has a root that is not real and nonpositive".into()));
    }
    if t.rank() != t2.rank() {
        return Err(Error::Precondition("T has a nilpotent part at eigenvalue 0".into()));
    }
    let whole = inertia(s)?;
    if whole.z != 0 {
        return Err(Error::Precondition("S is degenerate".into()));
    }
    let kernel = t.nullspace();
    if kernel.is_empty() {
        ensure_internal!(whole.p == whole.q, "P − Q ≠ 0 with trivial kernel");
        return Ok((0, 0));
    }
    let k = QMat::from_rows(&kernel).transpose();
    let restricted = k.transpose().mul(s).mul(&k);
    let ker = inertia(&restricted)?;
    ensure_internal!(ker.z == 0, "form is degenerate on ker T");
    ensure_internal!(ker.diff() == whole.diff(), "p1 − q1 = {} but P − Q = {}", ker.diff(), whole.diff());
    Ok((ker.p, ker.q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn m(rows: &[&[i64]]) -> QMat {
        QMat::from_int_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(inertia(&QMat::identity(3)).unwrap(), Inertia { p: 3, q: 0, z: 0 });
        assert_eq!(inertia(&m(&[&[1, 0], &[0, -1]])).unwrap(), Inertia { p: 1, q: 1, z: 0 });
        assert_eq!(inertia(&m(&[&[0, 1], &[1, 0]])).unwrap(), Inertia { p: 1, q: 1, z: 0 });
        assert_eq!(inertia(&m(&[&[1, 1], &[1, 1]])).unwrap(), Inertia { p: 1, q: 0, z: 1 });
        assert_eq!(
            inertia(&m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]])).unwrap(),
            Inertia { p: 1, q: 1, z: 1 }
        );
    }

    #[test]
    fn charpoly_and_sturm() {
        // t^2 + 1
        let c = charpoly(&m(&[&[0, 1], &[-1, 0]]));
        assert_eq!(c, vec![q(1), q(0), q(1)]);
        assert!(!roots_real_nonpositive(&c));
        // (t+1)^2 t
        assert!(roots_real_nonpositive(&vec![q(0), q(1), q(2), q(1)]));
        // t - 1
        assert!(!roots_real_nonpositive(&vec![q(-1), q(1)]));
    }

    #[test]
    fn kernel_examples() {
        let s = m(&[&[1, 0], &[0, -1]]);
        assert_eq!(kernel_signature(&QMat::zeros(2, 2), &s).unwrap(), (1, 1));
        let t = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(kernel_signature(&t, &s).unwrap(), (0, 0));
        let s3 = m(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        let t3 = m(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        assert_eq!(kernel_signature(&t3, &s3).unwrap(), (1, 0));
    }

    #[test]
    fn kernel_rejects_real_eigenvalues() {
        let s = QMat::identity(2);
        let t = m(&[&[1, 0], &[0, 0]]);
        assert!(matches!(kernel_signature(&t, &s), Err(Error::Precondition(_))));
    }
}

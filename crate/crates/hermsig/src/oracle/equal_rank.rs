//! Character oracle for equal-rank real forms: the invariant form is the compact form
//! twisted by exp(iπx), x a rational cocharacter realizing the grading.

use crate::error::{Error, Result};
use crate::linalg::{dot_q, IntVec, QMat, RatVec};
use crate::realform::{Grading, RealForm};
use crate::rootdata::{freudenthal_multiplicities, PositiveSystem};
use num::{Integer, Signed, ToPrimitive};

/// A rational x with ⟨α, x⟩ ≡ 0 (compact) or 1 (noncompact) mod 2 on every root.
pub fn grading_cocharacter(rf: &RealForm) -> Result<RatVec> {
    if !rf.theta().is_identity() {
        return Err(Error::Precondition("θ is not the identity; the form is not of equal rank".into()));
    }
    let d = rf.datum();
    let simple = d.simple();
    let rows: Vec<IntVec> = simple.iter().map(|&s| d.root(s).clone()).collect();
    let rhs: RatVec = simple
        .iter()
        .map(|s| match rf.grading()[s] {
            Grading::Compact => crate::linalg::q(0),
            Grading::Noncompact => crate::linalg::q(1),
        })
        .collect();
    let x = if rows.is_empty() {
        vec![crate::linalg::q(0); d.rank()]
    } else {
        QMat::from_int_rows(&rows)
            .solve(&rhs)
            .ok_or_else(|| Error::Precondition("grading system on simple roots is infeasible".into()))?
    };
    for i in 0..d.num_roots() {
        let v = dot_q(&x, d.root(i));
        let want = if rf.grading()[&i] == Grading::Noncompact { 1 } else { 0 };
        if !v.is_integer() || v.to_integer().mod_floor(&2.into()) != want.into() {
            return Err(Error::Precondition(format!("grading is not realized by x on root {:?}", d.root(i))));
        }
    }
    Ok(x)
}

/// |Σ_μ m(μ) (−1)^⟨λ−μ, x⟩| with multiplicities from Freudenthal; λ dominant in X* coordinates.
pub fn oracle_sig_equal_rank(rf: &RealForm, lambda: &[i64]) -> Result<u64> {
    let x = grading_cocharacter(rf)?;
    let pos = PositiveSystem::standard(rf.datum());
    let mults = freudenthal_multiplicities(&pos, lambda)?;
    let mut total: i128 = 0;
    for (mu, m) in &mults {
        let diff = crate::linalg::sub(lambda, mu);
        let e = dot_q(&x, &diff);
        if !e.is_integer() {
            return Err(Error::Internal(format!("⟨λ − μ, x⟩ = {e} is not an integer")));
        }
        let parity = e.to_integer().abs().is_odd();
        let m = *m as i128;
        total += if parity { -m } else { m };
    }
    total.unsigned_abs().to_u64().ok_or_else(|| Error::Internal("signature overflow".into()))
}

/// Sum of multiplicities, for cross-checks.
pub fn total_dimension(rf: &RealForm, lambda: &[i64]) -> Result<u64> {
    let pos = PositiveSystem::standard(rf.datum());
    Ok(freudenthal_multiplicities(&pos, lambda)?.values().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{builtin_group, GroupLabel};

    #[test]
    fn compact_gives_dim() {
        let rf = builtin_group(&GroupLabel::Compact('A', 2)).unwrap();
        assert_eq!(oracle_sig_equal_rank(&rf, &[1, 1]).unwrap(), 8);
    }

    #[test]
    fn sp4_adjoint_and_sl2() {
        let rf = builtin_group(&GroupLabel::Sp(2)).unwrap();
        assert_eq!(oracle_sig_equal_rank(&rf, &[2, 0]).unwrap(), 2);
        let rf = builtin_group(&GroupLabel::SL(2)).unwrap();
        assert_eq!(oracle_sig_equal_rank(&rf, &[2]).unwrap(), 1);
    }
}

//! Agreement suites: every oracle value is compared with the general formula on the
//! matching built-in real form.

use crate::error::Result;
use crate::exec::Exec;
use crate::linalg::{to_rat_vec, IntVec};
use crate::oracle::equal_rank::oracle_sig_equal_rank;
use crate::oracle::module::oracle_sig_split_capped;
use crate::realform::{builtin_group, GroupLabel};
use crate::rootdata::{cartan_matrix, weyl_dimension, PositiveSystem, RootDatum};
use crate::signature::SignatureEngine;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SuiteKind {
    SplitA1,
    SplitA2,
    SplitA3,
    SplitC2,
    EqualRankSp4,
    EqualRankSp6,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 6] = [
        SuiteKind::SplitA1,
        SuiteKind::SplitA2,
        SuiteKind::SplitA3,
        SuiteKind::SplitC2,
        SuiteKind::EqualRankSp4,
        SuiteKind::EqualRankSp6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::SplitA1 => "split A1 / SL(2,R)",
            SuiteKind::SplitA2 => "split A2 / SL(3,R)",
            SuiteKind::SplitA3 => "split A3 / SL(4,R)",
            SuiteKind::SplitC2 => "split C2 / Sp(4,R)",
            SuiteKind::EqualRankSp4 => "equal rank Sp(4,R)",
            SuiteKind::EqualRankSp6 => "equal rank Sp(6,R)",
        }
    }

    fn cartan_type(self) -> (char, usize) {
        match self {
            SuiteKind::SplitA1 => ('A', 1),
            SuiteKind::SplitA2 => ('A', 2),
            SuiteKind::SplitA3 => ('A', 3),
            SuiteKind::SplitC2 | SuiteKind::EqualRankSp4 => ('C', 2),
            SuiteKind::EqualRankSp6 => ('C', 3),
        }
    }

    fn group(self) -> GroupLabel {
        match self {
            SuiteKind::SplitA1 => GroupLabel::SL(2),
            SuiteKind::SplitA2 => GroupLabel::SL(3),
            SuiteKind::SplitA3 => GroupLabel::SL(4),
            SuiteKind::SplitC2 | SuiteKind::EqualRankSp4 => GroupLabel::Sp(2),
            SuiteKind::EqualRankSp6 => GroupLabel::Sp(3),
        }
    }

    fn is_split(self) -> bool {
        !matches!(self, SuiteKind::EqualRankSp4 | SuiteKind::EqualRankSp6)
    }

    /// Fundamental-weight coordinates to the character lattice of the built-in group.
    fn to_character(self, a: &[i64]) -> IntVec {
        match self.cartan_type() {
            // ω_i = e_1 + ... + e_i
            ('C', _) => (0..a.len()).map(|i| a[i..].iter().sum()).collect(),
            _ => a.to_vec(),
        }
    }

    /// Split forms only carry a form when λ is fixed by −w₀.
    fn admissible(self, a: &[i64]) -> bool {
        match self.cartan_type() {
            ('A', _) => a.iter().eq(a.iter().rev()),
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    /// Highest weight in fundamental-weight coordinates.
    pub lambda: IntVec,
    /// The same weight as a character of the built-in group.
    pub character: IntVec,
    pub dim: u64,
    pub oracle: std::result::Result<u64, String>,
    pub formula: std::result::Result<u64, String>,
}

impl Case {
    pub fn agrees(&self) -> bool {
        matches!((&self.oracle, &self.formula), (Ok(a), Ok(b)) if a == b)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub kind: SuiteKind,
    pub cap: u64,
    pub cases: Vec<Case>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(Case::agrees)
    }
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.agrees())
    }
}

/// Dominant weights (fundamental coordinates) with Weyl dimension at most `cap`, in
/// lexicographic order.
pub fn dominant_weights_up_to(datum: &RootDatum, cap: u64) -> Result<Vec<(IntVec, u64)>> {
    let pos = PositiveSystem::standard(datum);
    let n = datum.rank();
    let dim = |a: &[i64]| weyl_dimension(&pos, &to_rat_vec(a));
    let mut out = Vec::new();
    let mut a = vec![0i64; n];
    // odometer over a box; the dimension is increasing in each coordinate, so each
    // coordinate stops at the first overflow
    loop {
        let d = dim(&a)?;
        if d <= cap {
            out.push((a.clone(), d));
            a[n - 1] += 1;
            continue;
        }
        let Some(k) = (0..n).rev().find(|&k| a[k] > 0) else { break };
        if k == 0 {
            break;
        }
        a[k] = 0;
        a[k - 1] += 1;
        for x in a[k..].iter_mut() {
            *x = 0;
        }
    }
    out.sort();
    Ok(out)
}

/// Runs one suite. `fault` flips ε at that W¹ position in the formula, for harness checks.
pub fn run_suite(kind: SuiteKind, cap: u64, exec: Exec, fault: Option<usize>) -> Result<SuiteReport> {
    let start = Instant::now();
    let (family, rank) = kind.cartan_type();
    let cartan = cartan_matrix(family, rank)?;
    let datum = RootDatum::from_type(family, rank)?;
    let rf = builtin_group(&kind.group())?;
    let engine = SignatureEngine::new(&rf)?.with_exec(Exec::Sequential).with_flipped_epsilon(fault);
    let weights: Vec<(IntVec, u64)> =
        dominant_weights_up_to(&datum, cap)?.into_iter().filter(|(a, _)| kind.admissible(a)).collect();
    let cases = exec.map(&weights, |(a, dim)| {
        let character = kind.to_character(a);
        let oracle = if kind.is_split() {
            oracle_sig_split_capped(&cartan, a, cap)
        } else {
            oracle_sig_equal_rank(&rf, &character)
        };
        let formula = engine.compute(&rf.spec_from_character(&character)).map(|r| r.sig);
        Case {
            lambda: a.clone(),
            character,
            dim: *dim,
            oracle: oracle.map_err(|e| e.to_string()),
            formula: formula.map_err(|e| e.to_string()),
        }
    });
    Ok(SuiteReport { kind, cap, cases, elapsed: start.elapsed() })
}

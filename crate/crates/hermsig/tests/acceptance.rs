//! One line per acceptance criterion, with the time budget of each. Run with
//! `cargo test -p hermsig --test acceptance -- --nocapture` to see the report.

mod common;

use common::*;
use hermsig::linalg::Rat;
use hermsig::oracle::{oracle_sig_split, run_suite, SuiteKind};
use hermsig::rootdata::cartan_matrix;
use hermsig::realform::gl_split_to_fundamental;
use hermsig::signature::{gl_closed_form, sig_degree_probe};
use hermsig::weylres::{computed_table_row, expected_fold_shapes, expected_table_row, table_row_keys, component_group};
use hermsig::restricted::fold_diagram;
use hermsig::{builtin_group, compute_signature, restrict, Exec, GroupLabel, RootDatum, SignatureEngine, SignatureResult};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

struct Outcome {
    id: usize,
    title: &'static str,
    budget: Duration,
    elapsed: Duration,
    result: Result<String, String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.result.is_ok() && self.elapsed <= self.budget
    }
    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let detail = match &self.result {
            Ok(s) if self.elapsed > self.budget => format!("{s}; over the {:?} budget", self.budget),
            Ok(s) => s.clone(),
            Err(e) => e.clone(),
        };
        format!(
            "criterion {:>2} [{status}] {} ({:.2}s of {}s): {detail}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

fn run(id: usize, title: &'static str, budget_s: u64, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = f();
    Outcome { id, title, budget: Duration::from_secs(budget_s), elapsed: start.elapsed(), result }
}

/// The criterion-1 sweep: GL(n), n = 2..6, self-dual decreasing λ with |λ_i| ≤ 3.
fn gl_sweep() -> Vec<(usize, Vec<i64>)> {
    (2..=6).flat_map(|n| self_dual_gl(n, 3).into_iter().map(move |l| (n, l))).collect()
}

fn gl_results() -> Result<Vec<(usize, Vec<i64>, SignatureResult)>, String> {
    let mut out = Vec::new();
    for n in 2..=6 {
        let rf = builtin_group(&GroupLabel::GL(n)).map_err(|e| e.to_string())?;
        let engine = SignatureEngine::new(&rf).map_err(|e| e.to_string())?;
        let lams: Vec<Vec<i64>> = gl_sweep().into_iter().filter(|(k, _)| *k == n).map(|(_, l)| l).collect();
        let res = Exec::default().try_map(&lams, |l| {
            let spec = gl_split_to_fundamental(n, l)?;
            engine.compute(&spec)
        });
        let res = res.map_err(|e| e.to_string())?;
        out.extend(lams.into_iter().zip(res).map(|(l, r)| (n, l, r)));
    }
    Ok(out)
}

fn criterion_1() -> Result<String, String> {
    let all = gl_results()?;
    for (n, l, r) in &all {
        let closed = gl_closed_form(*n, l).map_err(|e| e.to_string())?;
        if r.sig != closed {
            return Err(format!("GL({n}) λ = {l:?}: formula {} vs closed form {closed}", r.sig));
        }
    }
    Ok(format!("{} weights agree", all.len()))
}

fn criterion_2() -> Result<String, String> {
    for n in 2..=8usize {
        let mut l = vec![0i64; n];
        l[0] = 1;
        l[n - 1] = -1;
        let rf = builtin_group(&GroupLabel::GL(n)).map_err(|e| e.to_string())?;
        let r = compute_signature(&rf, &gl_split_to_fundamental(n, &l).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if r.sig != n as u64 - 1 {
            return Err(format!("GL({n}) adjoint: Sig = {}", r.sig));
        }
    }
    Ok("Sig = n − 1 for n = 2..8".into())
}

fn criterion_3() -> Result<String, String> {
    let all = gl_results()?;
    for (n, l, r) in &all {
        let mut rhs = Rat::from_integer(((r.sig * r.sig) as i64).into());
        for i in 1..=n / 2 {
            let c = *n as i64 - 2 * i as i64 + 1;
            rhs *= Rat::new((2 * l[i - 1] + c).into(), c.into());
        }
        if Rat::from_integer((r.dim as i64).into()) != rhs {
            return Err(format!("GL({n}) λ = {l:?}: dim {} vs {rhs}", r.dim));
        }
    }
    Ok(format!("exact on {} weights", all.len()))
}

fn criterion_4() -> Result<String, String> {
    let all = gl_results()?;
    let mut below = Vec::new();
    for (n, l, r) in &all {
        let d = r.p.abs_diff(r.q);
        if d * d > r.p + r.q {
            return Err(format!("GL({n}) λ = {l:?}: (p−q)² = {} > p+q = {}", d * d, r.p + r.q));
        }
        if !is_zero(l) && r.sig < *n as u64 - 1 {
            below.push(format!("GL({n}) {l:?} Sig {}", r.sig));
        }
    }
    if below.is_empty() {
        return Ok(format!("both bounds hold on {} weights", all.len()));
    }
    // GL(4) (1,1,−1,−1) restricts to the SL(4,R) irreducible (0,2,0); the brute-force form agrees
    let oracle = oracle_sig_split(&cartan_matrix('A', 3).unwrap(), &[0, 2, 0]).map_err(|e| e.to_string())?;
    Err(format!(
        "(p−q)² ≤ p+q holds on all {} weights, but Sig ≥ n−1 fails on {}: {}; split oracle on A3 (0,2,0) gives Sig {oracle}",
        all.len(),
        below.len(),
        below.join(", ")
    ))
}

fn suites(kinds: &[SuiteKind]) -> Result<String, String> {
    let mut parts = Vec::new();
    for &k in kinds {
        let rep = run_suite(k, 400, Exec::default(), None).map_err(|e| e.to_string())?;
        if let Some(c) = rep.failures().next() {
            return Err(format!("{}: λ = {:?} oracle {:?} formula {:?}", k.name(), c.lambda, c.oracle, c.formula));
        }
        parts.push(format!("{} {}", k.name(), rep.cases.len()));
    }
    Ok(parts.join(", "))
}

fn criterion_7() -> Result<String, String> {
    let keys = table_row_keys();
    for &(fam, n) in &keys {
        let got = computed_table_row(fam, n).map_err(|e| e.to_string())?;
        let want = expected_table_row(fam, n).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("{fam} n = {n}: computed {got:?}, table {want:?}"));
        }
    }
    for l in [GroupLabel::SL(5), GroupLabel::SplitE6] {
        let rf = builtin_group(&l).map_err(|e| e.to_string())?;
        let rd = restrict(&rf).map_err(|e| e.to_string())?;
        let f = fold_diagram(&rf, &rd).map_err(|e| e.to_string())?;
        let got = [f.ambient.shape(), f.restricted.shape(), f.reduced.shape(), f.restricted_reduced.shape()];
        let want = expected_fold_shapes(&l).unwrap().map(String::from);
        if got != want {
            return Err(format!("{l} folds {got:?}, expected {want:?}"));
        }
    }
    Ok(format!("{} rows and 2 fold diagrams", keys.len()))
}

fn criterion_8() -> Result<String, String> {
    let order = |l: &GroupLabel| -> Result<(usize, u32), String> {
        let rf = builtin_group(l).map_err(|e| e.to_string())?;
        let c = component_group(&rf).map_err(|e| e.to_string())?;
        Ok((c.order(), c.rank()))
    };
    let simply_connected: Vec<GroupLabel> = (2..=6)
        .map(GroupLabel::SL)
        .chain([GroupLabel::Sp(2), GroupLabel::Sp(3), GroupLabel::SplitE6, GroupLabel::Compact('B', 3)])
        .collect();
    for l in &simply_connected {
        if order(l)?.0 != 1 {
            return Err(format!("{l}: component group is not trivial"));
        }
    }
    for n in [2, 3] {
        if order(&GroupLabel::PSp(n))?.0 != 2 {
            return Err(format!("PSp({}): order ≠ 2", 2 * n));
        }
    }
    if order(&GroupLabel::PSO(2))? != (4, 2) {
        return Err("PSO(4,4): not a Klein four-group".into());
    }
    Ok(format!("{} simply connected trivial, PSp order 2, PSO(4,4) = (Z/2)²", simply_connected.len()))
}

fn criterion_9() -> Result<String, String> {
    let rays: [(usize, Vec<i64>); 3] = [(2, vec![1, -1]), (3, vec![1, 0, -1]), (4, vec![2, 1, -1, -2])];
    let mut parts = Vec::new();
    for (n, l0) in rays {
        let deg = hermsig::signature::gl_sig_degree(n);
        let p = sig_degree_probe(n, &l0, deg + 3, Exec::default()).map_err(|e| e.to_string())?;
        if !p.vanishes || !p.top_nonzero {
            return Err(format!("GL({n}) ray {l0:?}: Sig(kλ₀) = {:?}, degree {deg}", p.sigs));
        }
        parts.push(format!("GL({n}) degree {deg}"));
    }
    Ok(parts.join(", "))
}

fn criterion_10() -> Result<String, String> {
    let mut counts = [0usize; 7];
    for (f, r) in small_types() {
        let d = RootDatum::from_type(f, r).map_err(|e| e.to_string())?;
        counts[0] += datum_axioms(&d)?;
        for lam in weights_up_to(&d, 1000) {
            counts[1] += weyl_matches_freudenthal(&d, &lam)?;
        }
        for psi in boxed(r, 0, 2) {
            for k in 1..=4 {
                counts[2] += homogeneity(&d, &psi, k)?;
            }
        }
        if r <= 3 {
            for phi in boxed(r, -2, 2) {
                counts[3] += dominant_rep_invariant(&d, &phi)?;
            }
        }
    }
    for l in small_builtins() {
        let rf = builtin_group(&l).map_err(|e| e.to_string())?;
        counts[0] += datum_axioms(rf.datum())?;
        counts[4] += coset_partition(&l)?;
        if rf.compact_rank() <= 4 {
            counts[5] += epsilon_normalized(&l, 2)?;
        }
    }
    counts[5] += epsilon_parity()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for zeros in 0..=4 {
        for pairs in 0..=3 {
            if zeros + pairs == 0 {
                continue;
            }
            for _ in 0..5 {
                counts[6] += kernel_case(&mut rng, zeros, pairs)?;
            }
        }
    }
    Ok(format!(
        "axioms {} roots, Weyl/Freudenthal {}, homogeneity {}, dominant rep {}, cosets {}, ε {}, kernel {}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5], counts[6]
    ))
}

// Runs without the libtest harness so the criterion lines are never captured.
fn main() {
    let outcomes = vec![
        run(1, "GL closed form equals general formula", 10, criterion_1),
        run(2, "adjoint Sig = n − 1", 1, criterion_2),
        run(3, "ratio identity", 10, criterion_3),
        run(4, "indefiniteness bounds", 10, criterion_4),
        run(5, "split oracle equivalence", 600, || {
            suites(&[SuiteKind::SplitA1, SuiteKind::SplitA2, SuiteKind::SplitA3, SuiteKind::SplitC2])
        }),
        run(6, "equal-rank oracle equivalence", 300, || suites(&[SuiteKind::EqualRankSp4, SuiteKind::EqualRankSp6])),
        run(7, "table reproduction", 30, criterion_7),
        run(8, "component groups", 5, criterion_8),
        run(9, "degree probe", 10, criterion_9),
        run(10, "property suites", 120, criterion_10),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }
    // Criterion 4's lower bound Sig ≥ n−1 is contradicted by the closed form itself at
    // GL(4) (1,1,−1,−1); that FAIL stays visible above, and any other failure is fatal.
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
    let known = outcomes[3].result.as_ref().err().map_or(false, |e| e.contains("fails on 1: GL(4) [1, 1, -1, -1] Sig 2"));
    let unexpected: Vec<usize> = failed.iter().copied().filter(|&id| !(id == 4 && known)).collect();
    if !unexpected.is_empty() {
        eprintln!("acceptance: unexpected failures in criteria {unexpected:?}");
        std::process::exit(1);
    }
    println!("acceptance: {} of {} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    if !failed.is_empty() {
        println!("acceptance: criterion 4 fails on a counterexample to the bound itself, see its line above");
    }
}

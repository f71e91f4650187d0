//! Acceptance suite. Each test checks one criterion at its stated tolerance
//! and prints a single `PASS` or `FAIL` line.
//!
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use turancover::generators::{
    combinatorial_lines, complete, f_free_random, greedy_hard_setsystem, hard_instance_extra_sets,
    random_hypergraph, random_simple_setsystem, random_with_edge_count, simplify_reduction, tent,
};
use turancover::hypergraph::{binomial, blow_up};
use turancover::lp::{check_complementary_slackness, solve_lp_pair};
use turancover::oracles::{brute_nu, brute_tau, contains_subhypergraph, find_tents, rho};
use turancover::rounding::{ahtp_cover_blowup, discrepancy_set, t2_cover, AhtpPlan, Coloring, RoundingParams};
use turancover::setcover::{brute_force_opt, greedy_set_cover, simple_greedy_bound};
use turancover::{Hypergraph, Limits, LpMode, Rational};

fn lim() -> Limits {
    Limits::default()
}

fn report(id: u32, name: &str, ok: bool, elapsed: Duration, budget: Duration, detail: &str) {
    let in_time = elapsed <= budget;
    let pass = ok && in_time;
    println!(
        "{} criterion {id:>2} {name}: {detail} [{:.2}s of {}s]",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
    assert!(in_time, "criterion {id} ({name}) exceeded its time budget");
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Random `t`-uniform hypergraph on `n` vertices with about `target` edges
/// and at least one edge.
fn random_sparse(n: usize, t: usize, target: f64, seed: u64) -> Hypergraph {
    let p = (target / binomial(n, t) as f64).min(1.0);
    (0..)
        .map(|k| random_hypergraph(n, t, p, seed.wrapping_mul(1_000).wrapping_add(k), &lim()).unwrap())
        .find(|h| !h.is_empty())
        .unwrap()
}

fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[test]
fn c01_extremal_blowups() {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut ok = true;
    for (t, want_tau) in [(3, 2), (4, 3), (5, 3)] {
        let b = blow_up(&complete(t + 1, t, &lim()).unwrap(), t - 1).unwrap();
        let nu = brute_nu(b.hyper(), &lim()).unwrap();
        let tau = brute_tau(b.hyper(), &lim()).unwrap();
        ok &= nu == 1 && tau == want_tau;
        detail.push(format!("t={t}: nu={nu} tau={tau}"));
    }
    report(1, "extremal blow-ups", ok, start.elapsed(), Duration::from_secs(5), &detail.join(", "));
}

#[test]
fn c02_lp_duality_and_support() {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for t in 2..=5 {
        for p in [0.2, 0.5] {
            for seed in 0..25u64 {
                let n = 6 + (seed as usize % 7);
                let h = random_hypergraph(n, t, p, seed + 100 * t as u64, &lim()).unwrap();
                let pair = solve_lp_pair(&h, LpMode::Exact, &lim()).unwrap();
                match check_complementary_slackness(&pair.primal, &pair.dual, &h) {
                    Ok(r) => {
                        let tau = pair.primal.objective.exact().unwrap().clone();
                        let nu = pair.dual.objective.exact().unwrap().clone();
                        if tau != nu || Rational::from_integer(BigInt::from(r.support_size)) > r.support_bound() {
                            failures.push(format!("t={t} p={p} seed={seed}"));
                        }
                    }
                    Err(e) => failures.push(format!("t={t} p={p} seed={seed}: {e}")),
                }
                checked += 1;
            }
        }
    }
    let detail = format!("{checked} instances, {} failures {:?}", failures.len(), failures);
    report(2, "LP duality and support bound", checked >= 200 && failures.is_empty(), start.elapsed(), Duration::from_secs(120), &detail);
}

/// Criteria 3 and 4 share the same suite of runs.
struct RoundingSuite {
    graphs: usize,
    trials: usize,
    invalid: usize,
    lemma_violations: usize,
    chosen_invalid: usize,
}

fn rounding_suite() -> RoundingSuite {
    let mut s = RoundingSuite { graphs: 0, trials: 0, invalid: 0, lemma_violations: 0, chosen_invalid: 0 };
    for i in 0..102u64 {
        let t = 3 + (i as usize % 6);
        let n = (t + 2 + (i as usize / 6) % 6).min(14);
        let g = random_sparse(n, t, 4.0 + (i % 9) as f64, i);
        let b = blow_up(&g, t - 1).unwrap();
        let params = RoundingParams::new(t, 1_000 + i, 100).unwrap();
        let plan = AhtpPlan::new(&b, params.clone(), LpMode::Exact, &lim()).unwrap();
        if !plan.threshold().threshold_bound_holds() {
            s.lemma_violations += 1;
        }
        for trial in plan.trials() {
            s.trials += 1;
            if !b.hyper().is_vertex_cover(&trial.cover) {
                s.invalid += 1;
            }
        }
        let chosen = ahtp_cover_blowup(&b, &params, LpMode::Exact, &lim()).unwrap();
        if !b.hyper().is_vertex_cover(&chosen.cover) {
            s.chosen_invalid += 1;
        }
        s.graphs += 1;
    }
    s
}

#[test]
fn c03_c04_rounding_validity_and_threshold_bound() {
    let start = Instant::now();
    let s = rounding_suite();
    let elapsed = start.elapsed();
    let detail3 = format!(
        "{} graphs, {} trials, {} invalid trial covers, {} invalid returned covers",
        s.graphs, s.trials, s.invalid, s.chosen_invalid
    );
    let ok3 = s.graphs >= 100 && s.trials >= 100 * s.graphs && s.invalid == 0 && s.chosen_invalid == 0;
    let detail4 = format!("{} exact runs, {} violations of |U| gamma <= OPT - OPT'", s.graphs, s.lemma_violations);
    let ok4 = s.lemma_violations == 0;
    println!(
        "{} criterion  4 threshold bound (exact): {detail4}",
        if ok4 { "PASS" } else { "FAIL" }
    );
    report(3, "rounding validity", ok3, elapsed, Duration::from_secs(300), &detail3);
    assert!(ok4, "criterion 4 failed: {detail4}");
}

#[test]
fn c05_discrepancy_set_mean() {
    // Thresholding at 1/t' empties every instance with t below about 70, so the
    // colouring step is exercised on the LP support of the blow-up itself
    // (t = 100: the full vertex set of the blow-up).
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    let cases: Vec<(usize, Hypergraph)> = vec![
        (8, random_sparse(14, 8, 12.0, 51)),
        (12, random_sparse(14, 12, 5.0, 52)),
        (16, random_sparse(18, 16, 4.0, 53)),
        (20, random_sparse(22, 20, 3.0, 54)),
        (100, random_with_edge_count(300, 100, 5, 55).unwrap()),
    ];
    for (t, g) in cases {
        let b = blow_up(&g, t - 1).unwrap();
        let params = RoundingParams::new(t, 0, 1).unwrap();
        let support: Vec<usize> = if t <= 20 {
            solve_lp_pair(b.hyper(), LpMode::Exact, &lim()).unwrap().primal.support()
        } else {
            (0..b.hyper().n()).collect()
        };
        let support = if support.len() >= 20 { support } else { (0..b.hyper().n()).collect() };
        let sizes: Vec<f64> = (0..1000u64)
            .map(|i| {
                let c = Coloring::random(b.base_n(), 2, 7_000 + i);
                discrepancy_set(&support, b.labels(), &c, params.discrepancy_threshold()).len() as f64
            })
            .collect();
        let (mean, se) = mean_and_se(&sizes);
        let bound = 2.0 / t as f64 * support.len() as f64;
        let pass = support.len() >= 20 && mean <= bound + 3.0 * se;
        ok &= pass;
        detail.push(format!("t={t} |S|={} mean={mean:.3} bound={bound:.3}", support.len()));
    }
    report(5, "discrepancy set mean", ok, start.elapsed(), Duration::from_secs(120), &detail.join("; "));
}

#[test]
fn c06_large_t_size_bound() {
    let start = Instant::now();
    let t = 100;
    let g = random_with_edge_count(300, t, 50, 2024).unwrap();
    let b = blow_up(&g, t - 1).unwrap();
    let params = RoundingParams::new(t, 99, 200).unwrap();
    let plan = AhtpPlan::new(&b, params.clone(), LpMode::Float, &lim()).unwrap();
    let trials = plan.trials();
    let all_valid = trials.iter().all(|tr| b.hyper().is_vertex_cover(&tr.cover));
    let sizes: Vec<f64> = trials.iter().map(|tr| tr.cover.len() as f64).collect();
    let (mean, se) = mean_and_se(&sizes);
    let lp_opt = plan.threshold().lp_opt.to_f64();
    let bound = params.size_bound(lp_opt);
    let s = plan.support().len();
    let parity_ok = trials.iter().all(|tr| tr.parity_class.len() <= s / 2);
    let threshold_ok = plan.threshold().threshold_bound_holds();
    let ok = all_valid && parity_ok && threshold_ok && mean <= bound + 3.0 * se;
    let detail = format!(
        "{} trials, mean size {mean:.2} (se {se:.3}), t' * OPT = {bound:.2}, |U|={} |S|={s}",
        trials.len(),
        plan.threshold().u.len()
    );
    report(6, "large-t size bound (float)", ok, start.elapsed(), Duration::from_secs(600), &detail);
}

#[test]
fn c07_pair_blowup_cover() {
    let start = Instant::now();
    let g = complete(4, 3, &lim()).unwrap();
    let b = blow_up(&g, 2).unwrap();
    let r = t2_cover(&g, 17, 20, LpMode::Exact, &lim()).unwrap();
    let tau_star = solve_lp_pair(b.hyper(), LpMode::Exact, &lim()).unwrap().primal.objective;
    let tau = brute_tau(b.hyper(), &lim()).unwrap();
    let bound = tau_star.exact().unwrap() * rat(9, 4);
    let ok = b.hyper().is_vertex_cover(&r.cover)
        && Rational::from_integer(BigInt::from(r.size())) <= bound
        && r.size() <= 4
        && tau == 2;
    let detail = format!("size {} (bound {bound}), tau*={tau_star}, tau={tau}", r.size());
    report(7, "pair blow-up cover", ok, start.elapsed(), Duration::from_secs(10), &detail);
}

#[test]
fn c08_greedy_lower_bound() {
    let start = Instant::now();
    let k = 20;
    let s = greedy_hard_setsystem(k).unwrap();
    let m = hard_instance_extra_sets(k);
    let picks = greedy_set_cover(&s).unwrap().len();
    let blocks: Vec<usize> = (m..m + k).collect();
    let ratio = picks as f64 / k as f64;
    let floor = (400f64).ln() / 2.0 - 1.0;
    let ok = m == 57 && picks >= 57 && s.is_cover(&blocks) && s.is_simple() && ratio >= 2.85 && ratio > floor;
    let detail = format!("greedy {picks} sets vs {k} blocks, ratio {ratio:.3} > {floor:.3}");
    report(8, "greedy lower bound", ok, start.elapsed(), Duration::from_secs(5), &detail);
}

#[test]
fn c09_greedy_upper_bound() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut violations = 0;
    let mut checked = 0;
    for seed in 0..60u64 {
        let n = 12 + (seed as usize % 13);
        let s = random_simple_setsystem(n, 10, 5, seed).unwrap();
        if s.len() > 30 {
            continue;
        }
        let opt = brute_force_opt(&s).unwrap();
        let picks = greedy_set_cover(&s).unwrap().len();
        let ratio = picks as f64 / opt as f64;
        worst = worst.max(ratio / simple_greedy_bound(n));
        if ratio > simple_greedy_bound(n) {
            violations += 1;
        }
        checked += 1;
    }
    let detail = format!("{checked} systems, {violations} violations, worst ratio/bound {worst:.3}");
    report(9, "greedy upper bound", checked >= 50 && violations == 0, start.elapsed(), Duration::from_secs(120), &detail);
}

#[test]
fn c10_tent_freeness() {
    let start = Instant::now();
    let mut nonempty = 0;
    for seed in 0..50u64 {
        let g = random_hypergraph(9, 3, 0.3, seed, &lim()).unwrap();
        let b = blow_up(&g, 2).unwrap();
        if !find_tents(b.hyper(), &lim()).unwrap().is_empty() {
            nonempty += 1;
        }
    }
    let l2 = find_tents(&combinatorial_lines(2, &lim()).unwrap(), &lim()).unwrap().len();
    let l3 = find_tents(&combinatorial_lines(3, &lim()).unwrap(), &lim()).unwrap().len();
    let canon = find_tents(&tent(3).unwrap(), &lim()).unwrap().len();
    let ok = nonempty == 0 && l2 == 0 && l3 == 0 && canon == 1;
    let detail = format!("50 blow-ups with tents: {nonempty}; lines(2): {l2}; lines(3): {l3}; canonical tent: {canon}");
    report(10, "tent-freeness", ok, start.elapsed(), Duration::from_secs(60), &detail);
}

#[test]
fn c11_rho() {
    let start = Instant::now();
    let r_tent = rho(&tent(3).unwrap()).unwrap();
    let disjoint = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    let shared = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
    let r_dis = rho(&disjoint).unwrap();
    let r_sh = rho(&shared).unwrap();
    let ok = r_tent == rat(3, 4) && r_tent > rat(1, 2) && r_dis == rat(1, 3) && r_sh == rat(1, 2);
    let detail = format!("tent {r_tent}, disjoint {r_dis}, shared vertex {r_sh}");
    report(11, "rho", ok, start.elapsed(), Duration::from_secs(1), &detail);
}

#[test]
fn c12_pattern_free_and_simplify() {
    let start = Instant::now();
    let t3 = tent(3).unwrap();
    let mut with_copy = 0;
    let mut edges = 0;
    for seed in 0..20u64 {
        let h = f_free_random(12, 3, std::slice::from_ref(&t3), None, seed, &lim()).unwrap();
        edges += h.m();
        if contains_subhypergraph(&h, &t3, &lim()).unwrap().is_some() {
            with_copy += 1;
        }
    }
    let mut not_simple = 0;
    for seed in 0..20u64 {
        let g = random_hypergraph(8, 3, 0.4, seed, &lim()).unwrap();
        if !simplify_reduction(&g, 3, 3, seed).unwrap().is_simple() {
            not_simple += 1;
        }
    }
    let ok = with_copy == 0 && not_simple == 0;
    let detail = format!(
        "20 tent-free samples ({edges} edges total), {with_copy} with a tent; 20 simplified, {not_simple} not simple"
    );
    report(12, "pattern-free construction and simplification", ok, start.elapsed(), Duration::from_secs(60), &detail);
}

fn pipeline(stages: &[&[&str]]) -> (Vec<u8>, i32) {
    let mut data = Vec::new();
    let mut code = 0;
    for args in stages {
        let mut child = Command::new(env!("CARGO_BIN_EXE_turancover"))
            .args(*args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .expect("spawn cli");
        child.stdin.take().unwrap().write_all(&data).unwrap();
        let out = child.wait_with_output().unwrap();
        data = out.stdout;
        code = out.status.code().unwrap_or(-1);
        if code != 0 {
            break;
        }
    }
    (data, code)
}

/// The CLI pipelines used by the determinism check.
pub const SUITE: &[&[&[&str]]] = &[
    &[&["gen", "complete", "--n", "4", "--t", "3"], &["blowup", "--k", "2"], &["oracle", "tau"]],
    &[
        &["gen", "complete", "--n", "4", "--t", "3"],
        &["blowup", "--k", "2"],
        &["round", "ahtp", "--seed", "7", "--trials", "20", "--mode", "exact"],
        &["verify", "cover"],
    ],
    &[&["gen", "lines", "--n", "2"], &["oracle", "tents"]],
    &[
        &["gen", "random", "--n", "9", "--t", "4", "--p", "0.08", "--seed", "3"],
        &["round", "ahtp", "--seed", "11", "--trials", "50", "--mode", "exact"],
    ],
    &[
        &["gen", "random", "--n", "8", "--t", "4", "--p", "0.1", "--seed", "5"],
        &["round", "t2", "--seed", "5", "--trials", "20"],
    ],
    &[&["gen", "random", "--n", "12", "--t", "10", "--p", "0.05", "--seed", "8"], &["round", "colorcode", "--seed", "2"]],
    &[&["gen", "complete", "--n", "5", "--t", "3"], &["blowup", "--k", "2"], &["round", "threshold"]],
    &[&["gen", "random", "--n", "9", "--t", "3", "--p", "0.3", "--seed", "1"], &["lp", "vc", "--mode", "exact"]],
    &[&["gen", "random", "--n", "9", "--t", "3", "--p", "0.3", "--seed", "1"], &["lp", "matching", "--mode", "float"]],
    &[&["gen", "complete", "--n", "6", "--t", "3"], &["oracle", "nu", "--witness"]],
    &[&["gen", "complete", "--n", "6", "--t", "3"], &["oracle", "alpha", "--witness"]],
    &[&["gen", "complete", "--n", "5", "--t", "3"], &["oracle", "taustar"]],
    &[&["gen", "complete", "--n", "4", "--t", "3"], &["oracle", "rho"]],
    &[&["gen", "hard-setcover", "--k", "6"], &["setcover", "greedy"]],
    &[&["gen", "ffree", "--n", "12", "--t", "3", "--seed", "4"]],
    &[
        &["gen", "complete", "--n", "5", "--t", "3"],
        &["gen", "simplify", "--clouds", "3", "--copies", "4", "--seed", "2"],
        &["verify", "simple"],
    ],
];

#[test]
fn c13_cli_determinism() {
    let start = Instant::now();
    let run_all = || SUITE.iter().map(|p| pipeline(p)).collect::<Vec<_>>();
    let first = run_all();
    let second = run_all();
    let failed: Vec<usize> = first.iter().enumerate().filter(|(_, (_, c))| *c != 0).map(|(i, _)| i).collect();
    let differing: Vec<usize> = (0..SUITE.len()).filter(|&i| first[i] != second[i]).collect();
    let ok = failed.is_empty() && differing.is_empty();
    let detail = format!(
        "{} pipelines run twice, nonzero exits {:?}, differing outputs {:?}",
        SUITE.len(),
        failed,
        differing
    );
    report(13, "CLI determinism", ok, start.elapsed(), Duration::from_secs(300), &detail);
}

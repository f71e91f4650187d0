//! Solves the fractional vertex cover LP and its matching dual, in exact and
//! float mode, and checks complementary slackness on the exact pair.

use turancover::generators::{complete, random_hypergraph};
use turancover::io::format_lp_solution;
use turancover::lp::{check_complementary_slackness, solve_lp_pair};
use turancover::oracles::{brute_nu, brute_tau};
use turancover::{blow_up, Hypergraph, Limits, LpMode, Result};

fn report(name: &str, h: &Hypergraph, limits: &Limits) -> Result<()> {
    let exact = solve_lp_pair(h, LpMode::Exact, limits)?;
    let float = solve_lp_pair(h, LpMode::Float, limits)?;
    let slack = check_complementary_slackness(&exact.primal, &exact.dual, h)?;
    println!("{name}: n = {}, m = {}, t = {}", h.n(), h.m(), h.t());
    println!("  nu = {}, tau* = {} ({} pivots), tau = {}", brute_nu(h, limits)?, exact.primal.objective, exact.pivots, brute_tau(h, limits)?);
    println!("  float tau* = {:.12}, dual = {:.12}", float.primal.objective_f64(), float.dual.objective_f64());
    println!("  support {} <= {} = t * tau*", slack.support_size, slack.support_bound());
    Ok(())
}

fn main() -> Result<()> {
    let limits = Limits::default();
    let k4 = blow_up(&complete(4, 3, &limits)?, 2)?;
    report("K4 2-blow-up", k4.hyper(), &limits)?;

    let pair = solve_lp_pair(k4.hyper(), LpMode::Exact, &limits)?;
    print!("{}", format_lp_solution(&pair.primal));
    print!("{}", format_lp_solution(&pair.dual));

    let g = random_hypergraph(10, 4, 0.08, 3, &limits)?;
    report("random 4-uniform", &g, &limits)?;
    report("its 2-blow-up", blow_up(&g, 2)?.hyper(), &limits)?;
    Ok(())
}

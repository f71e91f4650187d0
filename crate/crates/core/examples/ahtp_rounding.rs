//! Runs the main rounding algorithm on (t-1)-blow-ups and prints how the
//! cover splits into thresholded, high-discrepancy and parity vertices.

use turancover::generators::{complete, random_hypergraph, random_with_edge_count};
use turancover::rounding::{ahtp_cover, AhtpPlan, RoundingParams};
use turancover::{blow_up, Hypergraph, Limits, LpMode, Result};

fn run(name: &str, g: &Hypergraph, mode: LpMode, limits: &Limits) -> Result<()> {
    let params = RoundingParams::new(g.t(), 42, 64)?;
    let r = ahtp_cover(g, &params, mode, limits)?;
    let lp = r.lp_opt.as_ref().map_or(f64::NAN, |v| v.to_f64());
    println!("{name}: t = {}, t' = {:.3}, blow-up tau* = {lp:.4}", g.t(), params.t_prime);
    println!(
        "  cover {} = |U| {} + |S'| {} + parity {} (source {}, trial {})",
        r.size(),
        r.breakdown.u.len(),
        r.breakdown.s_prime.len(),
        r.breakdown.parity_class.len(),
        r.source.name(),
        r.trial_index
    );
    println!("  rounding best {:?}, fallback {:?}, t' * tau* = {:.2}", r.rounding_size, r.fallback_size, params.size_bound(lp));
    Ok(())
}

fn main() -> Result<()> {
    let limits = Limits::default();
    run("K5 (3-uniform)", &complete(5, 3, &limits)?, LpMode::Exact, &limits)?;
    run("random 5-uniform", &random_hypergraph(9, 5, 0.1, 1, &limits)?, LpMode::Exact, &limits)?;
    run("sparse 100-uniform", &random_with_edge_count(300, 100, 20, 5)?, LpMode::Float, &limits)?;

    // The plan exposes the thresholding outcome and single trials.
    let g = random_hypergraph(8, 4, 0.3, 9, &limits)?;
    let b = blow_up(&g, 3)?;
    let plan = AhtpPlan::new(&b, RoundingParams::new(4, 7, 8)?, LpMode::Exact, &limits)?;
    let th = plan.threshold();
    println!("\nthreshold: {} rounds, |U| = {}, residual tau* = {}", th.rounds, th.u.len(), th.lp_opt_residual);
    println!("  |U| bound holds: {}, support bound holds: {}", th.threshold_bound_holds(), th.support_bound_holds());
    for trial in plan.trials().iter().take(3) {
        println!("  trial {} (seed {:#x}): cover {}", trial.index, trial.seed, trial.cover.len());
    }
    Ok(())
}

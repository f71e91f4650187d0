//! Covers the 2-blow-up of a t-uniform hypergraph by thresholding at 4/t^2
//! and keeping supported pairs whose two base vertices get the same colour.

use turancover::generators::random_hypergraph;
use turancover::rounding::{t2_cover, T2Plan};
use turancover::{blow_up, Limits, LpMode, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let g = random_hypergraph(15, 6, 0.05, 3, &limits)?;
    let b = blow_up(&g, 2)?;
    println!("base: n = {}, m = {}; 2-blow-up: n = {}, t = {}", g.n(), g.m(), b.hyper().n(), b.hyper().t());

    let plan = T2Plan::new(&b, 11, LpMode::Float, &limits)?;
    let support = plan.support().len();
    let trials = 500;
    let mean = (0..trials).map(|i| plan.trial(i).parity_class.len()).sum::<usize>() as f64 / trials as f64;
    println!("residual support {support}, mean monochromatic pairs {mean:.2} (half is {:.1})", support as f64 / 2.0);

    let r = t2_cover(&g, 11, 32, LpMode::Float, &limits)?;
    let lp = r.lp_opt.as_ref().map_or(f64::NAN, |v| v.to_f64());
    println!("best of 32: cover {} (|U| {}, pairs {}), tau* = {lp:.3}, t^2/4 * tau* = {:.1}", r.size(), r.breakdown.u.len(), r.breakdown.parity_class.len(), (g.t() * g.t()) as f64 / 4.0 * lp);
    println!("covers every edge: {}", b.hyper().is_vertex_cover(&r.cover));
    Ok(())
}

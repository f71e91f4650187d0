//! Enumerates the combinatorial lines of [3]^n as a 3-uniform hypergraph and
//! compares its covering number with the fractional bound.

use turancover::generators::combinatorial_lines;
use turancover::lp::solve_vc_lp;
use turancover::oracles::{brute_tau, find_tents, min_vertex_cover};
use turancover::{Limits, LpMode, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for n in 1..=3 {
        let h = combinatorial_lines(n, &limits)?;
        let lp = solve_vc_lp(&h, LpMode::Exact, &limits)?;
        println!(
            "n = {n}: {} points, {} lines, simple = {}, tents = {}, tau* = {}, tau = {}",
            h.n(),
            h.m(),
            h.is_simple(),
            find_tents(&h, &limits)?.len(),
            lp.objective,
            brute_tau(&h, &limits)?
        );
    }
    let h = combinatorial_lines(2, &limits)?;
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(|&v| format!("{}{}", v / 3 + 1, v % 3 + 1)).collect();
        println!("  line {}", words.join(" "));
    }
    let cover = min_vertex_cover(&h, &limits)?;
    println!("a minimum cover of [3]^2: {:?}", cover.members());
    Ok(())
}

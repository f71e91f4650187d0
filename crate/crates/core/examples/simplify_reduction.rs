//! Turns an arbitrary t-uniform hypergraph into a simple one by replacing
//! every vertex with a cloud of copies and dropping edges that reuse a pair.

use turancover::generators::{complete, simplify_reduction};
use turancover::oracles::brute_tau;
use turancover::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let g = complete(5, 3, &limits)?;
    println!("K5 (3-uniform): n = {}, m = {}, simple = {}, tau = {}", g.n(), g.m(), g.is_simple(), brute_tau(&g, &limits)?);
    for (clouds, copies) in [(2, 2), (3, 3), (4, 4)] {
        let h = simplify_reduction(&g, clouds, copies, 17)?;
        println!("  clouds {clouds}, copies {copies}: n = {:3}, m = {:3}, simple = {}", h.n(), h.m(), h.is_simple());
    }
    Ok(())
}

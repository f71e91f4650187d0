//! Builds k-blow-ups of two small hypergraphs and shows how the edges and
//! labels line up with the base, and when the result is simple.

use turancover::generators::{complete, random_hypergraph};
use turancover::oracles::find_tents;
use turancover::{blow_up, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();

    let k4 = complete(4, 3, &limits)?;
    let b = blow_up(&k4, 2)?;
    println!("K4 (3-uniform) blown up with k = 2: n = {}, m = {}, t = {}", b.hyper().n(), b.hyper().m(), b.hyper().t());
    for (v, label) in b.labels().iter().enumerate() {
        println!("  vertex {v} <- {label:?}");
    }
    for (i, e) in b.hyper().edges().iter().enumerate() {
        println!("  edge {e:?} <- base edge {:?}", b.base().edge(b.origin(i)));
    }
    println!("  simple: {}, tents: {}", b.hyper().is_simple(), find_tents(b.hyper(), &limits)?.len());

    // k = t - 1 always gives a simple hypergraph: two edges share a vertex
    // only if their base edges share t - 1 vertices.
    let g = random_hypergraph(9, 4, 0.15, 7, &limits)?;
    println!("\nrandom 4-uniform base: n = {}, m = {}", g.n(), g.m());
    for k in 1..g.t() {
        let b = blow_up(&g, k)?;
        println!(
            "  k = {k}: n = {:4}, m = {:3}, t = {:2}, simple = {}",
            b.hyper().n(),
            b.hyper().m(),
            b.hyper().t(),
            b.hyper().is_simple()
        );
    }
    Ok(())
}

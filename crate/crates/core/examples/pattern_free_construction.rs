//! Samples a random hypergraph and deletes every copy of a forbidden pattern,
//! leaving an F-free hypergraph that still has many edges.

use turancover::generators::{f_free_random, tent};
use turancover::oracles::{contains_subhypergraph, rho};
use turancover::{Hypergraph, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let family = vec![tent(3)?];
    let density = rho(&family[0])?;
    println!("forbidding the 3-uniform tent, rho = {density}");
    for (n, seed) in [(12, 1), (16, 2), (20, 3)] {
        let h = f_free_random(n, 3, &family, None, seed, &limits)?;
        let free = contains_subhypergraph(&h, &family[0], &limits)?.is_none();
        println!("  n = {n:2}: {:3} edges remain, tent-free = {free}", h.m());
    }

    // Two edges sharing two vertices, forbidden: the output is linear.
    let cherry = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]])?;
    let h = f_free_random(10, 3, &[cherry], Some(0.2), 5, &limits)?;
    println!("forbidding two edges on a common pair: {} edges, simple = {}", h.m(), h.is_simple());
    Ok(())
}

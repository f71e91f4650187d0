//! Exact covering, matching and independence numbers with witnesses, and the
//! size guard that bounds the searches.

use turancover::generators::{complete, random_hypergraph};
use turancover::oracles::{brute_alpha, max_independent_set, max_matching, min_vertex_cover};
use turancover::{Error, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let g = random_hypergraph(11, 3, 0.2, 4, &limits)?;
    let cover = min_vertex_cover(&g, &limits)?;
    let matching = max_matching(&g, &limits)?;
    let independent = max_independent_set(&g, &limits)?;
    println!("random 3-uniform: n = {}, m = {}", g.n(), g.m());
    println!("  tau = {} via {:?} (cover: {})", cover.len(), cover.members(), g.is_vertex_cover(&cover));
    println!("  nu = {} via edges {:?} (matching: {})", matching.len(), matching, g.is_matching(&matching));
    println!("  alpha = {} via {:?}", independent.len(), independent.members());
    println!("  tau + alpha = {} = n", cover.len() + independent.len());

    let tight = Limits { search_nodes: 50, ..limits };
    match brute_alpha(&complete(14, 3, &limits)?, &tight) {
        Err(Error::Resource(msg)) => println!("budget of 50 nodes: {msg}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}

//! Finds tents (three edges through a common vertex plus an edge meeting
//! each of them in one further vertex) and computes pattern densities.

use turancover::generators::{complete, tent};
use turancover::oracles::{contains_subhypergraph, find_tents, rho};
use turancover::{blow_up, Hypergraph, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let t3 = tent(3)?;
    println!("3-uniform tent: n = {}, edges {:?}", t3.n(), t3.edges());
    for found in find_tents(&t3, &limits)? {
        println!("  legs {:?}, base {}", found.legs, found.base);
    }
    println!("  rho = {}", rho(&t3)?);

    let k6 = complete(6, 3, &limits)?;
    println!("K6 (3-uniform): {} tents", find_tents(&k6, &limits)?.len());
    let embeds = contains_subhypergraph(&k6, &t3, &limits)?.is_some();
    println!("  tent embeds: {embeds} (it needs 7 vertices)");

    // The 2-blow-up of a 3-uniform hypergraph is simple, hence tent-free.
    let k7 = complete(7, 3, &limits)?;
    let b = blow_up(&k7, 2)?;
    println!("K7 2-blow-up: m = {}, tents = {}", b.hyper().m(), find_tents(b.hyper(), &limits)?.len());

    let path = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]])?;
    println!("loose path: rho = {}", rho(&path)?);
    let host = complete(7, 3, &limits)?;
    let emb = contains_subhypergraph(&host, &t3, &limits)?.expect("K7 contains a tent");
    println!("tent in K7: vertices {:?}, valid = {}", emb.vertex_map, emb.is_valid(&host, &t3));
    Ok(())
}

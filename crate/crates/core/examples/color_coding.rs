//! Colour-codes the base vertices with about (t-1)/(2 ln t) colours and
//! covers the blow-up with the vertices whose label misses some colour.

use turancover::generators::{complete, random_with_edge_count};
use turancover::rounding::{color_code_cover, color_code_cover_with, color_coding_palette, Coloring};
use turancover::{blow_up, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for t in [5, 10, 20, 40] {
        println!("t = {t:2}: {} colours", color_coding_palette(t));
    }

    let b = blow_up(&complete(12, 10, &limits)?, 9)?;
    let n = b.hyper().n() as f64;
    let runs = 200;
    let mean = (0..runs).map(|s| color_code_cover(&b, s).map(|r| r.size())).sum::<Result<usize>>()? as f64 / runs as f64;
    println!("K12 (10-uniform) 9-blow-up: n = {n}, mean cover fraction {:.3}", mean / n);

    let g = random_with_edge_count(60, 20, 6, 4)?;
    let b = blow_up(&g, 19)?;
    let coloring = Coloring::random(g.n(), color_coding_palette(20), 99);
    let r = color_code_cover_with(&b, &coloring);
    println!("sparse 20-uniform: {} edges covered by {} vertices: {}", b.hyper().m(), r.size(), b.hyper().is_vertex_cover(&r.cover));
    Ok(())
}

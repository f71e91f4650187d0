//! Runs greedy set cover on the instance family that forces it to pay an
//! extra ln k factor, and on a random simple system.

use turancover::generators::{greedy_hard_setsystem, hard_instance_extra_sets, random_simple_setsystem};
use turancover::io::format_greedy_trace;
use turancover::setcover::{brute_force_opt, greedy_ratio_check, greedy_set_cover, simple_greedy_bound};
use turancover::Result;

fn main() -> Result<()> {
    for k in [3, 4, 5, 6] {
        let s = greedy_hard_setsystem(k)?;
        let trace = greedy_set_cover(&s)?;
        println!(
            "k = {k}: {} elements, {} sets, simple = {}, greedy picks {}, optimum k = {k}, extra sets {}",
            s.n(),
            s.len(),
            s.is_simple(),
            trace.len(),
            hard_instance_extra_sets(k)
        );
    }

    let s = random_simple_setsystem(14, 10, 4, 8)?;
    let trace = greedy_set_cover(&s)?;
    let opt = brute_force_opt(&s)?;
    println!("\nrandom simple system: greedy {}, optimum {opt}, ratio {}", trace.len(), greedy_ratio_check(&s, opt)?);
    println!("bound for simple systems on {} elements: {:.3}", s.n(), simple_greedy_bound(s.n()));
    print!("{}", format_greedy_trace(&trace));
    Ok(())
}

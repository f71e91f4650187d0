//! Instance constructions: complete and random hypergraphs, pattern-free
//! random hypergraphs, the combinatorial-lines hypergraph, the set system on
//! which greedy is slow, and the cloud-expansion simplification.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{binomial, Hypergraph};
use crate::limits::Limits;
use crate::oracles::{contains_subhypergraph, rho, MAX_PATTERN_EDGES};
use crate::setcover::SetSystem;

fn check_enumeration(count: u128, what: &str, limits: &Limits) -> Result<()> {
    if count > limits.enumeration as u128 {
        return Err(Error::resource(format!(
            "{what} would enumerate {count} candidates, guard is {}",
            limits.enumeration
        )));
    }
    Ok(())
}

/// All `C(n, t)` edges.
pub fn complete(n: usize, t: usize, limits: &Limits) -> Result<Hypergraph> {
    if n < t {
        return Err(Error::param(format!("complete hypergraph needs n >= t, got n={n}, t={t}")));
    }
    check_enumeration(binomial(n, t), "complete hypergraph", limits)?;
    Hypergraph::new(t, n, (0..n).combinations(t).collect())
}

/// Each `t`-subset of `0..n` kept independently with probability `p`,
/// visiting subsets in lexicographic order.
pub fn random_hypergraph(n: usize, t: usize, p: f64, seed: u64, limits: &Limits) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("edge probability {p} is outside [0, 1]")));
    }
    if n < t {
        return Err(Error::param(format!("random hypergraph needs n >= t, got n={n}, t={t}")));
    }
    check_enumeration(binomial(n, t), "random hypergraph", limits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..n).combinations(t).filter(|_| rng.gen::<f64>() < p).collect();
    Hypergraph::new(t, n, edges)
}

/// `m` distinct uniformly random `t`-subsets of `0..n`, by rejection.
///
/// Meant for sizes where `C(n, t)` cannot be enumerated.
pub fn random_with_edge_count(n: usize, t: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    if n < t || t < 2 {
        return Err(Error::param(format!("need 2 <= t <= n, got n={n}, t={t}")));
    }
    if m as u128 > binomial(n, t) {
        return Err(Error::param(format!("cannot draw {m} distinct edges from C({n},{t})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let mut e = sample(&mut rng, n, t).into_vec();
        e.sort_unstable();
        if seen.insert(e.clone()) {
            edges.push(e);
        }
    }
    Hypergraph::new(t, n, edges)
}

/// The `t`-tent: three edges through an apex, and a fourth edge meeting
/// each of them in a distinct single vertex.
///
/// Vertex 0 is the apex, leg `i` is `{0, 2i+1, 2i+2}` and the base is
/// `{2, 4, 6}`. For `t > 3` every edge is padded with its own fresh vertices.
pub fn tent(t: usize) -> Result<Hypergraph> {
    if t < 3 {
        return Err(Error::param(format!("tents need t >= 3, got {t}")));
    }
    let pad = t - 3;
    let mut next = 7;
    let mut fresh = || {
        let r: Vec<usize> = (next..next + pad).collect();
        next += pad;
        r
    };
    let mut edges = Vec::with_capacity(4);
    for i in 0..3 {
        let mut e = vec![0, 2 * i + 1, 2 * i + 2];
        e.extend(fresh());
        edges.push(e);
    }
    let mut base = vec![2, 4, 6];
    base.extend(fresh());
    edges.push(base);
    Hypergraph::new(t, 7 + 4 * pad, edges)
}

/// Random hypergraph with every copy of a family member destroyed.
///
/// Samples [`random_hypergraph`], then repeatedly finds the first copy of the
/// first family member that still occurs and deletes all of its edges,
/// restarting the search after each deletion. When `p` is `None` it defaults
/// to `n^(-1/rho)` with `rho` the smallest density in the family.
pub fn f_free_random(
    n: usize,
    t: usize,
    family: &[Hypergraph],
    p: Option<f64>,
    seed: u64,
    limits: &Limits,
) -> Result<Hypergraph> {
    for (i, f) in family.iter().enumerate() {
        if f.is_empty() {
            return Err(Error::param(format!("family member {i} has no edges")));
        }
        if f.m() > MAX_PATTERN_EDGES {
            return Err(Error::resource(format!(
                "family member {i} has {} edges, at most {MAX_PATTERN_EDGES} are supported",
                f.m()
            )));
        }
        if f.t() != t {
            return Err(Error::param(format!("family member {i} is {}-uniform, expected {t}", f.t())));
        }
    }
    let p = match p {
        Some(p) => p,
        None => {
            let densities = family.iter().map(rho).collect::<Result<Vec<_>>>()?;
            let Some(min) = densities.into_iter().min() else {
                return Err(Error::param("default edge probability needs a nonempty family"));
            };
            let r = num_traits::ToPrimitive::to_f64(&min).unwrap_or(f64::INFINITY);
            (n as f64).powf(-1.0 / r)
        }
    };
    let mut h = random_hypergraph(n, t, p, seed, limits)?;
    'search: loop {
        for f in family {
            if let Some(emb) = contains_subhypergraph(&h, f, limits)? {
                let doomed: HashSet<usize> = emb.edge_map.into_iter().collect();
                let keep: Vec<usize> = (0..h.m()).filter(|i| !doomed.contains(i)).collect();
                h = h.restrict_edges(&keep);
                continue 'search;
            }
        }
        return Ok(h);
    }
}

/// Combinatorial lines of `[3]^n`.
///
/// Point `x` gets id `sum (x_i - 1) * 3^(n-i)`. Each line is given by a
/// nonempty wildcard set and fixed values elsewhere, so there are `4^n - 3^n`.
pub fn combinatorial_lines(n: usize, limits: &Limits) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::param("combinatorial lines need n >= 1"));
    }
    let points = 3u128.checked_pow(n as u32).unwrap_or(u128::MAX);
    let lines = 4u128.checked_pow(n as u32).unwrap_or(u128::MAX);
    check_enumeration(points, "combinatorial-lines vertex set", limits)?;
    check_enumeration(lines, "combinatorial-lines edge set", limits)?;
    let mut edges = Vec::with_capacity((lines - points) as usize);
    for word in 0..lines as u64 {
        // base-4 digits, most significant first; digit 3 is the wildcard
        let digits: Vec<u64> = (0..n).rev().map(|i| (word >> (2 * i)) & 3).collect();
        if !digits.contains(&3) {
            continue;
        }
        let edge = (0..3u64)
            .map(|fill| {
                digits
                    .iter()
                    .fold(0usize, |acc, &d| acc * 3 + if d == 3 { fill } else { d } as usize)
            })
            .collect();
        edges.push(edge);
    }
    Hypergraph::new(3, points as usize, edges)
}

/// `ceil((k - 1) ln k)`, the number of extra sets in [`greedy_hard_setsystem`].
pub fn hard_instance_extra_sets(k: usize) -> usize {
    ((k as f64 - 1.0) * (k as f64).ln()).ceil() as usize
}

/// Simple set system on `k^2` elements where greedy needs about
/// `(k - 1) ln k` sets although the `k` blocks cover everything.
///
/// Blocks are `{jk, ..., jk + k - 1}`. Each extra set takes the largest
/// uncovered element from the `p` blocks with the most uncovered elements,
/// `p` being the largest such count. Extra sets come first so that greedy
/// prefers them on ties.
pub fn greedy_hard_setsystem(k: usize) -> Result<SetSystem> {
    if k < 2 {
        return Err(Error::param(format!("hard instance needs k >= 2, got {k}")));
    }
    let mut remaining: Vec<Vec<usize>> = (0..k).map(|j| (j * k..(j + 1) * k).collect()).collect();
    let mut extra = Vec::new();
    for _ in 0..hard_instance_extra_sets(k) {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&j| (std::cmp::Reverse(remaining[j].len()), j));
        let p = remaining[order[0]].len();
        if p == 0 {
            break;
        }
        let set: Vec<usize> = order[..p].iter().filter_map(|&j| remaining[j].pop()).collect();
        extra.push(set);
    }
    let blocks = (0..k).map(|j| (j * k..(j + 1) * k).collect());
    SetSystem::new(k * k, extra.into_iter().chain(blocks).collect())
}

/// Random simple set system on `0..n`.
///
/// Draws up to `50 * sets` candidates of size `2..=max_size`, keeping those
/// that share at most one element with every kept set, until `sets` are kept.
/// Uncovered elements are then added as singletons.
pub fn random_simple_setsystem(n: usize, sets: usize, max_size: usize, seed: u64) -> Result<SetSystem> {
    if max_size < 2 || max_size > n {
        return Err(Error::param(format!("set size bound {max_size} must lie in 2..={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = HashSet::new();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for _ in 0..50 * sets {
        if kept.len() == sets {
            break;
        }
        let size = rng.gen_range(2..=max_size);
        let mut s = sample(&mut rng, n, size).into_vec();
        s.sort_unstable();
        let ps: Vec<(usize, usize)> = s.iter().copied().tuple_combinations().collect();
        if ps.iter().all(|p| !pairs.contains(p)) {
            pairs.extend(ps);
            kept.push(s);
        }
    }
    let mut hit = vec![false; n];
    kept.iter().flatten().for_each(|&x| hit[x] = true);
    kept.extend((0..n).filter(|&x| !hit[x]).map(|x| vec![x]));
    SetSystem::new(n, kept)
}

/// Cloud expansion of `g` followed by conflict deletion.
///
/// Vertex `v` becomes the cloud `v*B .. v*B + B - 1`. Each base edge yields
/// `P` edges picking one cloud copy per endpoint uniformly. Scanning in
/// generation order, an edge is dropped when an earlier generated edge
/// (dropped or not) shares two of its vertices, so the result is simple.
pub fn simplify_reduction(g: &Hypergraph, clouds: usize, copies: usize, seed: u64) -> Result<Hypergraph> {
    if clouds == 0 || copies == 0 {
        return Err(Error::param("cloud size and copy count must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen_pairs = HashSet::new();
    let mut kept = Vec::new();
    for e in g.edges() {
        for _ in 0..copies {
            let mut edge: Vec<usize> = e.iter().map(|&v| v * clouds + rng.gen_range(0..clouds)).collect();
            edge.sort_unstable();
            let mut conflict = false;
            for pair in edge.iter().copied().tuple_combinations::<(usize, usize)>() {
                conflict |= !seen_pairs.insert(pair);
            }
            if !conflict {
                kept.push(edge);
            }
        }
    }
    Hypergraph::new(g.t(), g.n() * clouds, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::find_tents;
    use crate::setcover::greedy_set_cover;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete(4, 3, &lim()).unwrap().m(), 4);
        assert_eq!(complete(5, 4, &lim()).unwrap().m(), 5);
        assert_eq!(complete(6, 6, &lim()).unwrap().m(), 1);
        assert!(complete(2, 3, &lim()).is_err());
    }

    #[test]
    fn random_extremes_and_count() {
        assert!(random_hypergraph(8, 3, 0.0, 1, &lim()).unwrap().is_empty());
        assert_eq!(random_hypergraph(8, 3, 1.0, 1, &lim()).unwrap(), complete(8, 3, &lim()).unwrap());
        let h = random_hypergraph(10, 3, 0.5, 42, &lim()).unwrap();
        // mean 60, sigma sqrt(30)
        assert!((h.m() as f64 - 60.0).abs() <= 4.0 * 30f64.sqrt());
        assert_eq!(h, random_hypergraph(10, 3, 0.5, 42, &lim()).unwrap());
        assert!(random_hypergraph(8, 3, 1.5, 1, &lim()).is_err());
    }

    #[test]
    fn fixed_edge_count() {
        let h = random_with_edge_count(300, 100, 50, 9).unwrap();
        assert_eq!(h.m(), 50);
        assert_eq!(h.t(), 100);
        assert!(random_with_edge_count(4, 3, 5, 0).is_err());
    }

    #[test]
    fn lines_counts() {
        for n in 1..=4 {
            let h = combinatorial_lines(n, &lim()).unwrap();
            assert_eq!(h.n(), 3usize.pow(n as u32));
            assert_eq!(h.m(), 4usize.pow(n as u32) - 3usize.pow(n as u32));
        }
        let h = combinatorial_lines(1, &lim()).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
        // diagonal of [3]^2: 11, 22, 33
        assert!(combinatorial_lines(2, &lim()).unwrap().edges().contains(&vec![0, 4, 8]));
    }

    #[test]
    fn hard_instance_shape() {
        let s = greedy_hard_setsystem(2).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.sets(), &[vec![1, 3], vec![0, 1], vec![2, 3]]);
        let k = 20;
        let s = greedy_hard_setsystem(k).unwrap();
        assert_eq!(hard_instance_extra_sets(k), 57);
        assert!(s.is_simple());
        let blocks: Vec<usize> = (57..57 + k).collect();
        assert!(s.is_cover(&blocks));
        let trace = greedy_set_cover(&s).unwrap();
        assert!(trace.len() >= 57);
        for i in 0..57 {
            let before = trace.uncovered_before(i, k * k);
            assert_eq!(trace.newly_covered[i], before.div_ceil(k));
            assert_eq!(s.sets()[i].len(), before.div_ceil(k));
        }
    }

    #[test]
    fn tent_shape() {
        let t3 = tent(3).unwrap();
        assert_eq!((t3.n(), t3.m()), (7, 4));
        let t5 = tent(5).unwrap();
        assert_eq!((t5.n(), t5.m()), (15, 4));
        assert_eq!(find_tents(&t5, &lim()).unwrap().len(), 1);
        assert!(tent(2).is_err());
    }

    #[test]
    fn f_free_kills_copies() {
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert!(f_free_random(8, 3, &[single], Some(0.5), 3, &lim()).unwrap().is_empty());
        let t3 = tent(3).unwrap();
        assert!(f_free_random(12, 3, std::slice::from_ref(&t3), Some(0.0), 3, &lim()).unwrap().is_empty());
        for seed in 0..5 {
            let h = f_free_random(12, 3, std::slice::from_ref(&t3), Some(0.3), seed, &lim()).unwrap();
            assert!(contains_subhypergraph(&h, &t3, &lim()).unwrap().is_none());
        }
    }

    #[test]
    fn simplify_is_simple() {
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let h = simplify_reduction(&single, 5, 3, 7).unwrap();
        assert_eq!(h.n(), 15);
        assert!(h.m() <= 3 && h.is_simple());
        let k5 = complete(5, 3, &lim()).unwrap();
        let thin = simplify_reduction(&k5, 1, 1, 0).unwrap();
        assert!(thin.is_simple());
        assert!(thin.m() >= 1);
        for seed in 0..10 {
            assert!(simplify_reduction(&k5, 3, 4, seed).unwrap().is_simple());
        }
    }

    #[test]
    fn random_simple_systems() {
        for seed in 0..10 {
            let s = random_simple_setsystem(20, 12, 5, seed).unwrap();
            assert!(s.is_simple());
            assert!(s.uncovered_element().is_none());
        }
    }
}

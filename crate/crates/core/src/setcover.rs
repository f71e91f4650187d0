//! Set systems and the greedy set-cover algorithm.
//!
//! On simple set systems (pairwise intersections of size at most one) greedy
//! uses at most `k * (1 + ln(n) / 2)` sets when `k` sets suffice.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A family of subsets of the universe `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut canon = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::param(format!("set {i} repeats element {}", w[0])));
            }
            if let Some(&x) = s.last().filter(|&&x| x >= n) {
                return Err(Error::param(format!("set {i} uses element {x} outside 0..{n}")));
            }
            canon.push(s);
        }
        Ok(SetSystem { n, sets: canon })
    }

    pub(crate) fn from_canonical(n: usize, sets: Vec<Vec<usize>>) -> Self {
        SetSystem { n, sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// True iff any two sets share at most one element.
    pub fn is_simple(&self) -> bool {
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, s) in self.sets.iter().enumerate() {
            for (a, b) in s.iter().copied().tuple_combinations() {
                if owner.insert((a, b), i).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Dual system: universe = set ids, one set per element of nonzero degree.
    pub fn dual(&self) -> SetSystem {
        let mut inc = vec![Vec::new(); self.n];
        for (i, s) in self.sets.iter().enumerate() {
            for &x in s {
                inc[x].push(i);
            }
        }
        SetSystem::from_canonical(self.sets.len(), inc.into_iter().filter(|s| !s.is_empty()).collect())
    }

    /// First element not contained in any set.
    pub fn uncovered_element(&self) -> Option<usize> {
        let mut hit = vec![false; self.n];
        for s in &self.sets {
            for &x in s {
                hit[x] = true;
            }
        }
        hit.iter().position(|&h| !h)
    }

    /// True iff the chosen sets cover the universe.
    pub fn is_cover(&self, ids: &[usize]) -> bool {
        let mut hit = vec![false; self.n];
        for &i in ids {
            match self.sets.get(i) {
                Some(s) => s.iter().for_each(|&x| hit[x] = true),
                None => return false,
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Same check as [`SetSystem::is_simple`], as a free function.
pub fn is_simple_system(s: &SetSystem) -> bool {
    s.is_simple()
}

/// Record of a greedy run: one entry per picked set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GreedyTrace {
    pub picked: Vec<usize>,
    pub newly_covered: Vec<usize>,
    pub uncovered_after: Vec<usize>,
}

impl GreedyTrace {
    pub fn len(&self) -> usize {
        self.picked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picked.is_empty()
    }

    /// Uncovered count before pick `i`.
    pub fn uncovered_before(&self, i: usize, n: usize) -> usize {
        if i == 0 {
            n
        } else {
            self.uncovered_after[i - 1]
        }
    }
}

/// Greedy set cover: repeatedly take the set covering the most uncovered
/// elements, lowest set id on ties.
pub fn greedy_set_cover(s: &SetSystem) -> Result<GreedyTrace> {
    if let Some(x) = s.uncovered_element() {
        return Err(Error::param(format!("element {x} is not contained in any set")));
    }
    let mut covered = vec![false; s.n()];
    let mut remaining = s.n();
    let mut trace = GreedyTrace::default();
    while remaining > 0 {
        let (best, gain) = s
            .sets()
            .iter()
            .enumerate()
            .map(|(i, set)| (i, set.iter().filter(|&&x| !covered[x]).count()))
            .fold((usize::MAX, 0), |acc, (i, g)| if g > acc.1 { (i, g) } else { acc });
        debug_assert!(gain > 0);
        for &x in &s.sets()[best] {
            covered[x] = true;
        }
        remaining -= gain;
        trace.picked.push(best);
        trace.newly_covered.push(gain);
        trace.uncovered_after.push(remaining);
    }
    Ok(trace)
}

/// Largest number of sets accepted by [`brute_force_opt`].
pub const BRUTE_FORCE_MAX_SETS: usize = 30;

/// Exact minimum cover size, by iterative deepening over the cardinality.
///
/// Each level branches on the sets containing the lowest uncovered element.
pub fn brute_force_opt(s: &SetSystem) -> Result<usize> {
    if s.len() > BRUTE_FORCE_MAX_SETS {
        return Err(Error::resource(format!(
            "brute-force set cover limited to {BRUTE_FORCE_MAX_SETS} sets, got {}",
            s.len()
        )));
    }
    if let Some(x) = s.uncovered_element() {
        return Err(Error::param(format!("element {x} is not contained in any set")));
    }
    let words = s.n().div_ceil(64);
    let masks: Vec<Vec<u64>> = s
        .sets()
        .iter()
        .map(|set| {
            let mut m = vec![0u64; words];
            for &x in set {
                m[x / 64] |= 1 << (x % 64);
            }
            m
        })
        .collect();
    let mut containing = vec![Vec::new(); s.n()];
    for (i, set) in s.sets().iter().enumerate() {
        for &x in set {
            containing[x].push(i);
        }
    }
    let max_set = s.sets().iter().map(Vec::len).max().unwrap_or(0).max(1);

    fn search(
        covered: &mut Vec<u64>,
        remaining: usize,
        budget: usize,
        n: usize,
        masks: &[Vec<u64>],
        containing: &[Vec<usize>],
        max_set: usize,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        if budget == 0 || remaining > budget * max_set {
            return false;
        }
        let x = (0..n).find(|&x| covered[x / 64] & (1 << (x % 64)) == 0).unwrap();
        for &i in &containing[x] {
            let saved = covered.clone();
            let mut gain = 0;
            for (w, m) in covered.iter_mut().zip(&masks[i]) {
                gain += (m & !*w).count_ones() as usize;
                *w |= m;
            }
            if search(covered, remaining - gain, budget - 1, n, masks, containing, max_set) {
                return true;
            }
            *covered = saved;
        }
        false
    }

    for k in 0..=s.len() {
        let mut covered = vec![0u64; words];
        if search(&mut covered, s.n(), k, s.n(), &masks, &containing, max_set) {
            return Ok(k);
        }
    }
    unreachable!("the full family covers the universe")
}

/// `ln(n) / 2 + 1`, the greedy guarantee on simple systems.
pub fn simple_greedy_bound(n: usize) -> f64 {
    (n as f64).ln() / 2.0 + 1.0
}

/// Greedy size divided by `opt`, checked against `ln(n)/2 + 1`.
pub fn greedy_ratio_check(s: &SetSystem, opt: usize) -> Result<BigRational> {
    if !s.is_simple() {
        return Err(Error::param("set system is not simple"));
    }
    if opt == 0 {
        return Err(Error::param("optimum must be positive"));
    }
    let picks = greedy_set_cover(s)?.len();
    let ratio = BigRational::new(BigInt::from(picks), BigInt::from(opt));
    if picks as f64 > opt as f64 * simple_greedy_bound(s.n()) {
        return Err(Error::verify(format!(
            "greedy used {picks} sets against optimum {opt}, above ln(n)/2+1 = {:.4}",
            simple_greedy_bound(s.n())
        )));
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn simplicity() {
        let s = SetSystem::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(s.is_simple());
        let s = SetSystem::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(!s.is_simple());
    }

    #[test]
    fn greedy_singletons() {
        let s = SetSystem::new(4, (0..4).map(|x| vec![x]).collect()).unwrap();
        let tr = greedy_set_cover(&s).unwrap();
        assert_eq!(tr.picked, vec![0, 1, 2, 3]);
        assert_eq!(tr.newly_covered, vec![1; 4]);
        assert_eq!(tr.uncovered_after, vec![3, 2, 1, 0]);
    }

    #[test]
    fn greedy_full_set_first() {
        let mut sets: Vec<Vec<usize>> = (0..5).map(|x| vec![x]).collect();
        sets.push((0..5).collect());
        let s = SetSystem::new(5, sets).unwrap();
        let tr = greedy_set_cover(&s).unwrap();
        assert_eq!(tr.picked, vec![5]);
    }

    #[test]
    fn greedy_infeasible_names_element() {
        let s = SetSystem::new(3, vec![vec![0], vec![2]]).unwrap();
        match greedy_set_cover(&s) {
            Err(Error::Parameter(msg)) => assert!(msg.contains("element 1")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn brute_force_small() {
        let s = SetSystem::new(
            6,
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 3], vec![1, 4], vec![2, 5]],
        )
        .unwrap();
        assert_eq!(brute_force_opt(&s).unwrap(), 2);
        let s = SetSystem::new(0, vec![]).unwrap();
        assert_eq!(brute_force_opt(&s).unwrap(), 0);
    }

    #[test]
    fn ratio_on_disjoint_sets() {
        let s = SetSystem::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(greedy_ratio_check(&s, 3).unwrap().is_one());
        let bad = SetSystem::new(3, vec![vec![0, 1, 2], vec![0, 1]]).unwrap();
        assert!(matches!(greedy_ratio_check(&bad, 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn dual_round_trip() {
        let s = SetSystem::new(5, vec![vec![0, 1], vec![1, 2, 3], vec![4]]).unwrap();
        assert_eq!(s.dual().dual(), s);
    }
}

//! Brute-force ground truth for small instances: exact vertex cover,
//! matching and independence numbers, tent detection, sub-hypergraph
//! containment and the density `rho(F)`.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::limits::Limits;
use crate::lp::{solve_vc_lp, LpMode, Rational};

/// Largest pattern accepted by [`contains_subhypergraph`].
pub const MAX_PATTERN_EDGES: usize = 6;
/// Largest hypergraph accepted by [`rho`].
pub const MAX_RHO_EDGES: usize = 20;

struct Budget {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Budget {
    fn new(limits: &Limits, what: &'static str) -> Self {
        Budget { used: 0, limit: limits.search_nodes, what }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::resource(format!(
                "{} search exceeded {} nodes",
                self.what, self.limit
            )));
        }
        Ok(())
    }
}

struct TauSearch<'a> {
    h: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    hits: Vec<usize>,
    chosen: Vec<usize>,
    forbidden: Vec<bool>,
    best: Vec<usize>,
    floor: usize,
    budget: Budget,
}

impl TauSearch<'_> {
    fn choose(&mut self, v: usize) {
        self.chosen.push(v);
        for &e in &self.inc[v] {
            self.hits[e] += 1;
        }
    }

    fn unchoose(&mut self) {
        let v = self.chosen.pop().unwrap();
        for &e in &self.inc[v] {
            self.hits[e] -= 1;
        }
    }

    /// Size of a greedy family of pairwise disjoint uncovered edges.
    fn packing_bound(&self) -> usize {
        let mut used = vec![false; self.h.n()];
        let mut count = 0;
        for (i, e) in self.h.edges().iter().enumerate() {
            if self.hits[i] == 0 && e.iter().all(|&v| !used[v]) {
                e.iter().for_each(|&v| used[v] = true);
                count += 1;
            }
        }
        count
    }

    fn run(&mut self) -> Result<()> {
        self.budget.tick()?;
        if self.best.len() <= self.floor {
            return Ok(());
        }
        // uncovered edge with the fewest allowed vertices
        let mut pick: Option<(usize, usize)> = None;
        for (i, e) in self.h.edges().iter().enumerate() {
            if self.hits[i] > 0 {
                continue;
            }
            let free = e.iter().filter(|&&v| !self.forbidden[v]).count();
            if free == 0 {
                return Ok(());
            }
            if pick.is_none_or(|(_, f)| free < f) {
                pick = Some((i, free));
            }
        }
        let Some((edge, _)) = pick else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        };
        if self.chosen.len() + self.packing_bound() >= self.best.len() {
            return Ok(());
        }
        let options: Vec<usize> = self.h.edge(edge).iter().copied().filter(|&v| !self.forbidden[v]).collect();
        let mut newly_forbidden = Vec::new();
        for v in options {
            self.choose(v);
            self.run()?;
            self.unchoose();
            self.forbidden[v] = true;
            newly_forbidden.push(v);
        }
        for v in newly_forbidden {
            self.forbidden[v] = false;
        }
        Ok(())
    }
}

fn greedy_cover(h: &Hypergraph) -> Vec<usize> {
    let inc = h.incidence();
    let mut covered = vec![false; h.m()];
    let mut left = h.m();
    let mut cover = Vec::new();
    while left > 0 {
        let v = (0..h.n())
            .max_by_key(|&v| (inc[v].iter().filter(|&&e| !covered[e]).count(), std::cmp::Reverse(v)))
            .unwrap();
        for &e in &inc[v] {
            if !covered[e] {
                covered[e] = true;
                left -= 1;
            }
        }
        cover.push(v);
    }
    cover
}

/// A minimum vertex cover, by branch and bound over uncovered edges.
///
/// The bound combines a greedy packing of disjoint uncovered edges at every
/// node with `ceil(tau*)` from the LP at the root.
pub fn min_vertex_cover(h: &Hypergraph, limits: &Limits) -> Result<VertexSet> {
    if h.is_empty() {
        return Ok(VertexSet::empty());
    }
    let lp = solve_vc_lp(h, LpMode::Float, limits)?.objective_f64();
    let floor = (lp - 1e-6).ceil().max(1.0) as usize;
    let best = greedy_cover(h);
    let mut search = TauSearch {
        h,
        inc: h.incidence(),
        hits: vec![0; h.m()],
        chosen: Vec::new(),
        forbidden: vec![false; h.n()],
        best,
        floor,
        budget: Budget::new(limits, "vertex cover"),
    };
    search.run()?;
    Ok(search.best.into_iter().collect())
}

/// Exact `tau(H)`.
pub fn brute_tau(h: &Hypergraph, limits: &Limits) -> Result<usize> {
    Ok(min_vertex_cover(h, limits)?.len())
}

struct NuSearch<'a> {
    h: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    /// vertex is matched or discarded
    blocked: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    budget: Budget,
}

impl NuSearch<'_> {
    fn available(&self, e: usize) -> bool {
        self.h.edge(e).iter().all(|&v| !self.blocked[v])
    }

    fn run(&mut self) -> Result<()> {
        self.budget.tick()?;
        let mut live = vec![false; self.h.n()];
        let mut any = false;
        for e in 0..self.h.m() {
            if self.available(e) {
                any = true;
                self.h.edge(e).iter().for_each(|&v| live[v] = true);
            }
        }
        if !any {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        let live_count = live.iter().filter(|&&b| b).count();
        if self.chosen.len() + live_count / self.h.t() <= self.best.len() {
            return Ok(());
        }
        let v = live.iter().position(|&b| b).unwrap();
        let edges: Vec<usize> = self.inc[v].iter().copied().filter(|&e| self.available(e)).collect();
        for e in edges {
            let verts = self.h.edge(e).to_vec();
            verts.iter().for_each(|&u| self.blocked[u] = true);
            self.chosen.push(e);
            self.run()?;
            self.chosen.pop();
            verts.iter().for_each(|&u| self.blocked[u] = false);
        }
        self.blocked[v] = true;
        self.run()?;
        self.blocked[v] = false;
        Ok(())
    }
}

/// A maximum matching (edge ids), by branching on the lowest live vertex.
pub fn max_matching(h: &Hypergraph, limits: &Limits) -> Result<Vec<usize>> {
    let mut search = NuSearch {
        h,
        inc: h.incidence(),
        blocked: vec![false; h.n()],
        chosen: Vec::new(),
        best: Vec::new(),
        budget: Budget::new(limits, "matching"),
    };
    search.run()?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Exact `nu(H)`.
pub fn brute_nu(h: &Hypergraph, limits: &Limits) -> Result<usize> {
    Ok(max_matching(h, limits)?.len())
}

struct AlphaSearch<'a> {
    h: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    inside: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    budget: Budget,
}

impl AlphaSearch<'_> {
    fn run(&mut self, v: usize) -> Result<()> {
        self.budget.tick()?;
        if self.chosen.len() + (self.h.n() - v) <= self.best.len() {
            return Ok(());
        }
        if v == self.h.n() {
            self.best = self.chosen.clone();
            return Ok(());
        }
        let t = self.h.t();
        if self.inc[v].iter().all(|&e| self.inside[e] + 1 < t) {
            for &e in &self.inc[v] {
                self.inside[e] += 1;
            }
            self.chosen.push(v);
            self.run(v + 1)?;
            self.chosen.pop();
            for &e in &self.inc[v] {
                self.inside[e] -= 1;
            }
        }
        self.run(v + 1)
    }
}

/// A maximum independent set: no edge lies entirely inside it.
pub fn max_independent_set(h: &Hypergraph, limits: &Limits) -> Result<VertexSet> {
    let mut search = AlphaSearch {
        h,
        inc: h.incidence(),
        inside: vec![0; h.m()],
        chosen: Vec::new(),
        best: Vec::new(),
        budget: Budget::new(limits, "independent set"),
    };
    search.run(0)?;
    Ok(search.best.into_iter().collect())
}

/// Exact `alpha(H)`.
pub fn brute_alpha(h: &Hypergraph, limits: &Limits) -> Result<usize> {
    Ok(max_independent_set(h, limits)?.len())
}

/// Four edges forming a tent: `legs` share a vertex and `base` meets each
/// leg in exactly one vertex, at three distinct points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tent {
    pub legs: [usize; 3],
    pub base: usize,
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

fn common_point(a: &[usize], b: &[usize]) -> Option<usize> {
    a.iter().copied().find(|v| b.binary_search(v).is_ok())
}

/// Every tent of `h`, each `(legs, base)` pair reported once, sorted.
pub fn find_tents(h: &Hypergraph, limits: &Limits) -> Result<Vec<Tent>> {
    let m = h.m() as u64;
    if m.saturating_mul(m).saturating_mul(m) > limits.enumeration.saturating_mul(1000) {
        return Err(Error::resource(format!("tent scan over {m} edges exceeds the size guard")));
    }
    let mut tents = Vec::new();
    for base in 0..h.m() {
        let e4 = h.edge(base);
        // (edge, meeting point) for edges meeting the base in exactly one vertex
        let cands: Vec<(usize, usize)> = (0..h.m())
            .filter(|&i| i != base && intersection_size(h.edge(i), e4) == 1)
            .map(|i| (i, common_point(h.edge(i), e4).unwrap()))
            .collect();
        for (a, b, c) in cands.iter().tuple_combinations() {
            if a.1 == b.1 || a.1 == c.1 || b.1 == c.1 {
                continue;
            }
            let (ea, eb, ec) = (h.edge(a.0), h.edge(b.0), h.edge(c.0));
            if ea.iter().any(|v| eb.binary_search(v).is_ok() && ec.binary_search(v).is_ok()) {
                tents.push(Tent { legs: [a.0, b.0, c.0], base });
            }
        }
    }
    tents.sort_unstable();
    Ok(tents)
}

/// An injective homomorphism of a pattern into a host hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// Image of each pattern vertex.
    pub vertex_map: Vec<usize>,
    /// Image of each pattern edge.
    pub edge_map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that each pattern edge maps onto its image edge.
    pub fn is_valid(&self, host: &Hypergraph, pattern: &Hypergraph) -> bool {
        let distinct = |xs: &[usize]| xs.iter().sorted().dedup().count() == xs.len();
        if self.vertex_map.len() != pattern.n() || self.edge_map.len() != pattern.m() {
            return false;
        }
        if !distinct(&self.vertex_map) || !distinct(&self.edge_map) {
            return false;
        }
        pattern.edges().iter().zip(&self.edge_map).all(|(e, &j)| {
            j < host.m() && {
                let mut img: Vec<usize> = e.iter().map(|&v| self.vertex_map[v]).collect();
                img.sort_unstable();
                img == host.edge(j)
            }
        })
    }
}

struct EmbedSearch<'a> {
    host: &'a Hypergraph,
    pattern: &'a Hypergraph,
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
    edge_used: Vec<bool>,
    edge_map: Vec<usize>,
    budget: Budget,
}

impl EmbedSearch<'_> {
    fn edges(&mut self, i: usize) -> Result<bool> {
        if i == self.pattern.m() {
            return Ok(true);
        }
        for j in 0..self.host.m() {
            if self.edge_used[j] {
                continue;
            }
            self.budget.tick()?;
            self.edge_used[j] = true;
            self.edge_map.push(j);
            if self.assign(i, j, 0)? {
                return Ok(true);
            }
            self.edge_map.pop();
            self.edge_used[j] = false;
        }
        Ok(false)
    }

    /// Maps the vertices of pattern edge `i` onto host edge `j`, position by position.
    fn assign(&mut self, i: usize, j: usize, pos: usize) -> Result<bool> {
        let t = self.pattern.t();
        if pos == t {
            return self.edges(i + 1);
        }
        let fv = self.pattern.edge(i)[pos];
        let target = self.host.edge(j);
        if let Some(hv) = self.forward[fv] {
            if target.binary_search(&hv).is_ok() {
                return self.assign(i, j, pos + 1);
            }
            return Ok(false);
        }
        for &hv in target {
            if self.backward[hv].is_some() {
                continue;
            }
            self.forward[fv] = Some(hv);
            self.backward[hv] = Some(fv);
            if self.assign(i, j, pos + 1)? {
                return Ok(true);
            }
            self.forward[fv] = None;
            self.backward[hv] = None;
        }
        Ok(false)
    }
}

/// First embedding of `pattern` into `host` in lexicographic search order.
///
/// Pattern vertices outside every edge go to the lowest unused host vertices.
pub fn contains_subhypergraph(host: &Hypergraph, pattern: &Hypergraph, limits: &Limits) -> Result<Option<Embedding>> {
    if pattern.m() > MAX_PATTERN_EDGES {
        return Err(Error::resource(format!(
            "pattern has {} edges, at most {MAX_PATTERN_EDGES} are supported",
            pattern.m()
        )));
    }
    if pattern.t() != host.t() || pattern.m() > host.m() || pattern.n() > host.n() {
        return Ok(None);
    }
    let mut search = EmbedSearch {
        host,
        pattern,
        forward: vec![None; pattern.n()],
        backward: vec![None; host.n()],
        edge_used: vec![false; host.m()],
        edge_map: Vec::new(),
        budget: Budget::new(limits, "embedding"),
    };
    if !search.edges(0)? {
        return Ok(None);
    }
    let mut free = (0..host.n()).filter(|&v| search.backward[v].is_none());
    let mut vertex_map = Vec::with_capacity(pattern.n());
    for slot in &search.forward {
        match slot {
            Some(v) => vertex_map.push(*v),
            None => match free.next() {
                Some(v) => vertex_map.push(v),
                None => return Ok(None),
            },
        }
    }
    Ok(Some(Embedding { vertex_map, edge_map: search.edge_map }))
}

/// `max (e' - 1) / (v' - t)` over all sub-hypergraphs with at least two edges,
/// where `v'` counts the vertices covered by the chosen edges.
pub fn rho(f: &Hypergraph) -> Result<Rational> {
    if f.m() < 2 {
        return Err(Error::param("rho needs a non-trivial hypergraph (at least two edges)"));
    }
    if f.m() > MAX_RHO_EDGES {
        return Err(Error::resource(format!(
            "rho enumerates edge subsets of at most {MAX_RHO_EDGES} edges, got {}",
            f.m()
        )));
    }
    let words = f.n().div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = f
        .edges()
        .iter()
        .map(|e| {
            let mut m = vec![0u64; words];
            e.iter().for_each(|&v| m[v / 64] |= 1 << (v % 64));
            m
        })
        .collect();
    let t = f.t() as i64;
    let mut best: Option<Rational> = None;

    fn walk(
        i: usize,
        count: usize,
        union: &mut Vec<u64>,
        masks: &[Vec<u64>],
        t: i64,
        best: &mut Option<Rational>,
    ) {
        if i == masks.len() {
            if count >= 2 {
                let v: i64 = union.iter().map(|w| w.count_ones() as i64).sum();
                let r = Rational::new(BigInt::from(count as i64 - 1), BigInt::from(v - t));
                if best.as_ref().is_none_or(|b| &r > b) {
                    *best = Some(r);
                }
            }
            return;
        }
        walk(i + 1, count, union, masks, t, best);
        let saved = union.clone();
        union.iter_mut().zip(&masks[i]).for_each(|(w, m)| *w |= m);
        walk(i + 1, count + 1, union, masks, t, best);
        *union = saved;
    }

    walk(0, 0, &mut vec![0u64; words], &masks, t, &mut best);
    Ok(best.expect("at least one subset of size two"))
}

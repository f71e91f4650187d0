//! Uniform hypergraphs, the k-blow-up operator and cover/matching checks.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::setcover::SetSystem;

/// A `t`-uniform hypergraph on the vertices `0..n`.
///
/// Edges are strictly increasing vertex lists and the edge list is kept in
/// lexicographic order, so two hypergraphs with the same edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    t: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting duplicate edges.
    pub fn new(t: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(t, n, edges, false)
    }

    /// Builds a hypergraph, silently dropping duplicate edges.
    pub fn new_dedup(t: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(t, n, edges, true)
    }

    /// Hypergraph with no edges.
    pub fn empty(t: usize, n: usize) -> Result<Self> {
        Self::build(t, n, Vec::new(), false)
    }

    fn build(t: usize, n: usize, edges: Vec<Vec<usize>>, dedup: bool) -> Result<Self> {
        if t < 2 {
            return Err(Error::param(format!("uniformity must be at least 2, got {t}")));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.len() != t {
                return Err(Error::param(format!("edge {i} has {} vertices, expected {t}", e.len())));
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::param(format!("edge {i} repeats vertex {}", w[0])));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::param(format!("edge {i} uses vertex {v} outside 0..{n}")));
            }
            canon.push(e);
        }
        canon.sort_unstable();
        let before = canon.len();
        canon.dedup();
        if !dedup && canon.len() != before {
            return Err(Error::param("duplicate edge in input"));
        }
        Ok(Hypergraph { t, n, edges: canon })
    }

    /// Internal constructor for edge lists already in canonical form.
    pub(crate) fn from_canonical(t: usize, n: usize, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == t && e.windows(2).all(|w| w[0] < w[1])));
        Hypergraph { t, n, edges }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// For every vertex, the ids of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Number of vertices lying in at least one edge.
    pub fn active_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                seen[v] = true;
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// The sub-hypergraph keeping only the edges with the given ids (same vertex range).
    pub fn restrict_edges(&self, keep: &[usize]) -> Hypergraph {
        let mut ids = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let edges = ids.into_iter().map(|i| self.edges[i].clone()).collect();
        Hypergraph::from_canonical(self.t, self.n, edges)
    }

    /// Removes the given vertices together with every edge touching them.
    /// Vertex ids are preserved; removed vertices become isolated.
    pub fn delete_vertices(&self, removed: &[usize]) -> (Hypergraph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..self.m())
            .filter(|&i| !self.edges[i].iter().any(|&v| gone[v]))
            .collect();
        (self.restrict_edges(&kept), kept)
    }

    /// True iff any two distinct edges share at most one vertex.
    pub fn is_simple(&self) -> bool {
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for (a, b) in e.iter().copied().tuple_combinations() {
                if let Some(&j) = owner.get(&(a, b)) {
                    if j != i {
                        return false;
                    }
                }
                owner.insert((a, b), i);
            }
        }
        true
    }

    /// True iff every edge meets `cover`.
    pub fn is_vertex_cover(&self, cover: &VertexSet) -> bool {
        let mut mask = vec![false; self.n];
        for &v in cover.members() {
            if v >= self.n {
                return false;
            }
            mask[v] = true;
        }
        self.edges.iter().all(|e| e.iter().any(|&v| mask[v]))
    }

    /// Edges of `self` not met by `cover`.
    pub fn uncovered_edges(&self, cover: &VertexSet) -> Vec<usize> {
        let mut mask = vec![false; self.n];
        for &v in cover.members() {
            if v < self.n {
                mask[v] = true;
            }
        }
        (0..self.m())
            .filter(|&i| !self.edges[i].iter().any(|&v| mask[v]))
            .collect()
    }

    /// True iff the selected edges are pairwise disjoint. Out-of-range or
    /// repeated edge ids make the selection invalid.
    pub fn is_matching(&self, edge_ids: &[usize]) -> bool {
        let mut used = vec![false; self.n];
        let mut picked = vec![false; self.m()];
        for &i in edge_ids {
            if i >= self.m() || picked[i] {
                return false;
            }
            picked[i] = true;
            for &v in &self.edges[i] {
                if used[v] {
                    return false;
                }
                used[v] = true;
            }
        }
        true
    }

    /// Dual set system: the universe is the edge set and every vertex of
    /// nonzero degree contributes its incidence list, in vertex order.
    pub fn dual(&self) -> SetSystem {
        let sets = self.incidence().into_iter().filter(|s| !s.is_empty()).collect();
        SetSystem::from_canonical(self.m(), sets)
    }
}

/// A sorted set of distinct vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Validates `members` against the vertex range `0..n`.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!("vertex {} listed twice", w[0])));
        }
        if let Some(&v) = members.last().filter(|&&v| v >= n) {
            return Err(Error::param(format!("vertex {v} outside 0..{n}")));
        }
        Ok(VertexSet { members })
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn all(n: usize) -> Self {
        VertexSet { members: (0..n).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.members.iter().chain(other.members.iter()).copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let set: BTreeSet<usize> = iter.into_iter().collect();
        VertexSet { members: set.into_iter().collect() }
    }
}

/// The k-blow-up `G^(k)` of a `t`-uniform hypergraph `G`.
///
/// Vertex `i` of [`BlowUp::hyper`] stands for the k-subset `labels[i]` of base
/// vertices; labels are numbered in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUp {
    hyper: Hypergraph,
    labels: Vec<Vec<usize>>,
    base: Hypergraph,
    k: usize,
    origin: Vec<usize>,
}

impl BlowUp {
    pub fn hyper(&self) -> &Hypergraph {
        &self.hyper
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &[usize] {
        &self.labels[v]
    }

    /// The hypergraph that was blown up.
    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn base_t(&self) -> usize {
        self.base.t()
    }

    pub fn base_n(&self) -> usize {
        self.base.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Index of the base edge that produced blow-up edge `i`.
    pub fn origin(&self, i: usize) -> usize {
        self.origin[i]
    }

    /// Rebuilds a blow-up from a serialized hypergraph plus vertex labels,
    /// checking that it really is the k-blow-up of the recovered base.
    pub fn from_parts(hyper: Hypergraph, labels: Vec<Vec<usize>>, k: usize, base_n: usize) -> Result<Self> {
        if labels.len() != hyper.n() {
            return Err(Error::param(format!(
                "{} labels for {} blow-up vertices",
                labels.len(),
                hyper.n()
            )));
        }
        if let Some((v, l)) = labels.iter().enumerate().find(|(_, l)| l.len() != k) {
            return Err(Error::param(format!("label of vertex {v} has {} entries, expected {k}", l.len())));
        }
        let mut base_edges = Vec::with_capacity(hyper.m());
        for e in hyper.edges() {
            let union: BTreeSet<usize> = e.iter().flat_map(|&v| labels[v].iter().copied()).collect();
            base_edges.push(union.into_iter().collect::<Vec<_>>());
        }
        // with no edges the base uniformity is the t with C(t, k) = |blow-up edge|
        let base_t = match base_edges.first() {
            Some(e) => e.len(),
            None => (k + 1..=hyper.t().max(k + 1))
                .find(|&t| binomial(t, k) == hyper.t() as u128)
                .ok_or_else(|| Error::param(format!("no base uniformity gives {}-vertex edges for k={k}", hyper.t())))?,
        };
        let base = Hypergraph::new(base_t, base_n, base_edges)?;
        let rebuilt = blow_up(&base, k)?;
        if rebuilt.hyper != hyper || rebuilt.labels != labels {
            return Err(Error::param("labels do not describe a blow-up of the recovered base"));
        }
        Ok(rebuilt)
    }
}

/// Saturating binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// The k-blow-up of `g`, for `1 <= k < t`.
pub fn blow_up(g: &Hypergraph, k: usize) -> Result<BlowUp> {
    let t = g.t();
    if k == 0 || k >= t {
        return Err(Error::param(format!("blow-up order k={k} must satisfy 1 <= k < t={t}")));
    }
    let per_edge = binomial(t, k);
    let budget = Limits::default().enumeration as u128;
    if per_edge.saturating_mul(g.m().max(1) as u128) > budget {
        return Err(Error::resource(format!(
            "blow-up would enumerate {} subsets per edge over {} edges",
            per_edge,
            g.m()
        )));
    }
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for e in g.edges() {
        for sub in e.iter().copied().combinations(k) {
            ids.entry(sub).or_insert(0);
        }
    }
    let labels: Vec<Vec<usize>> = ids.keys().cloned().collect();
    for (i, slot) in ids.values_mut().enumerate() {
        *slot = i;
    }
    let mut tagged: Vec<(Vec<usize>, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let edge: Vec<usize> = e.iter().copied().combinations(k).map(|s| ids[&s]).collect();
            (edge, j)
        })
        .collect();
    tagged.sort();
    tagged.dedup_by(|a, b| a.0 == b.0);
    let origin = tagged.iter().map(|(_, j)| *j).collect();
    let edges = tagged.into_iter().map(|(e, _)| e).collect();
    let hyper = Hypergraph::from_canonical(per_edge as usize, labels.len(), edges);
    Ok(BlowUp { hyper, labels, base: g.clone(), k, origin })
}

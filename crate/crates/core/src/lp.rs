//! The vertex-cover LP of a hypergraph and its fractional-matching dual.
//!
//! Both are solved by a dense tableau simplex using Bland's smallest-index
//! rule, either on a fraction-free big-integer tableau (exact mode) or over
//! `f64` with a fixed tolerance (float mode). The float tableau is rebuilt
//! from the original data periodically and at the final basis. One simplex
//! run yields an optimal basic pair `(x, y)`; the second vector is read off
//! the final reduced costs, so the pair always satisfies complementary
//! slackness.
//!
//! Two equivalent tableaus are used depending on the shape of the instance:
//! when `m <= n` the covering LP is solved directly by the dual simplex
//! (rows = edges), otherwise the packing LP is solved by the primal simplex
//! (rows = vertices). The choice depends only on the instance, so results are
//! reproducible.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;

pub type Rational = BigRational;

/// Feasibility tolerance used in float mode.
pub const FLOAT_TOL: f64 = 1e-9;

const MAX_PIVOTS: usize = 5_000_000;

/// Float tableaus are rebuilt from the original data this often.
const REINVERT_EVERY: usize = 32;

const MAX_RESUMES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpMode {
    Exact,
    Float,
}

impl std::str::FromStr for LpMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(LpMode::Exact),
            "float" => Ok(LpMode::Float),
            other => Err(Error::param(format!("unknown LP mode '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpKind {
    /// Fractional vertex cover, indexed by vertex id.
    Primal,
    /// Fractional matching, indexed by edge id.
    Dual,
}

/// A scalar from either solver mode.
#[derive(Debug, Clone, PartialEq)]
pub enum LpValue {
    Exact(Rational),
    Float(f64),
}

impl LpValue {
    pub fn zero(mode: LpMode) -> Self {
        match mode {
            LpMode::Exact => LpValue::Exact(Rational::zero()),
            LpMode::Float => LpValue::Float(0.0),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            LpValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            LpValue::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            LpValue::Exact(r) => Some(r),
            LpValue::Float(_) => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            LpValue::Exact(r) => r.is_positive(),
            LpValue::Float(x) => *x > FLOAT_TOL,
        }
    }

    /// `self >= threshold`, exactly or up to [`FLOAT_TOL`].
    pub fn at_least(&self, threshold: &Rational) -> bool {
        match self {
            LpValue::Exact(r) => r >= threshold,
            LpValue::Float(x) => *x >= threshold.to_f64().unwrap_or(f64::INFINITY) - FLOAT_TOL,
        }
    }

    pub fn sub(&self, other: &LpValue) -> LpValue {
        match (self, other) {
            (LpValue::Exact(a), LpValue::Exact(b)) => LpValue::Exact(a - b),
            _ => LpValue::Float(self.to_f64() - other.to_f64()),
        }
    }
}

impl fmt::Display for LpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpValue::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            LpValue::Float(x) => write!(f, "{:.16e}", x),
        }
    }
}

/// A primal (cover) or dual (matching) LP solution.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub kind: LpKind,
    pub mode: LpMode,
    pub values: Vec<LpValue>,
    pub objective: LpValue,
}

impl LpSolution {
    /// Ids with a strictly positive value.
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_positive())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn value(&self, i: usize) -> &LpValue {
        &self.values[i]
    }

    pub fn objective_f64(&self) -> f64 {
        self.objective.to_f64()
    }
}

/// Optimal primal/dual pair from a single simplex run.
#[derive(Debug, Clone, PartialEq)]
pub struct LpPair {
    pub primal: LpSolution,
    pub dual: LpSolution,
    pub pivots: usize,
}

/// Pivoting primitives shared by both simplex variants. Signs are taken
/// exactly in the integer tableau and up to [`FLOAT_TOL`] in the float one.
trait Pivoting {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn basis(&self) -> &[usize];
    fn rhs_neg(&self, r: usize) -> bool;
    fn entry_neg(&self, r: usize, j: usize) -> bool;
    fn entry_pos(&self, r: usize, j: usize) -> bool;
    fn cost_neg(&self, j: usize) -> bool;
    /// Compares `cost[a] / -row[r][a]` with `cost[b] / -row[r][b]`.
    fn cmp_dual_ratio(&self, r: usize, a: usize, b: usize) -> Ordering;
    /// Compares `rhs[a] / row[a][j]` with `rhs[b] / row[b][j]`.
    fn cmp_primal_ratio(&self, j: usize, a: usize, b: usize) -> Ordering;
    fn pivot(&mut self, r: usize, j: usize);
    fn pivots(&self) -> usize;
    /// Called after every pivot.
    fn after_pivot(&mut self) {}

    fn is_basic(&self) -> Vec<bool> {
        let mut b = vec![false; self.cols()];
        for &j in self.basis() {
            b[j] = true;
        }
        b
    }

    /// Dual simplex with the smallest-index rule. Requires `cost >= 0`.
    fn dual_simplex(&mut self) -> Result<()> {
        loop {
            let leaving = (0..self.rows()).filter(|&r| self.rhs_neg(r)).min_by_key(|&r| self.basis()[r]);
            let Some(r) = leaving else { return Ok(()) };
            let basic = self.is_basic();
            let mut best: Option<usize> = None;
            for (j, &is_basic) in basic.iter().enumerate() {
                if is_basic || !self.entry_neg(r, j) {
                    continue;
                }
                match best {
                    Some(b) if self.cmp_dual_ratio(r, j, b) != Ordering::Less => {}
                    _ => best = Some(j),
                }
            }
            let j = best.ok_or_else(|| Error::param("covering LP is infeasible"))?;
            self.pivot(r, j);
            self.after_pivot();
            if self.pivots() > MAX_PIVOTS {
                return Err(Error::resource("simplex pivot limit reached"));
            }
        }
    }

    /// Primal simplex with Bland's rule. Requires `rhs >= 0`.
    fn primal_simplex(&mut self) -> Result<()> {
        loop {
            let Some(j) = (0..self.cols()).find(|&j| self.cost_neg(j)) else {
                return Ok(());
            };
            let mut best: Option<usize> = None;
            for r in 0..self.rows() {
                if !self.entry_pos(r, j) {
                    continue;
                }
                best = match best {
                    None => Some(r),
                    Some(b) => match self.cmp_primal_ratio(j, r, b) {
                        Ordering::Less => Some(r),
                        Ordering::Equal if self.basis()[r] < self.basis()[b] => Some(r),
                        _ => Some(b),
                    },
                };
            }
            let r = best.ok_or_else(|| Error::param("packing LP is unbounded"))?;
            self.pivot(r, j);
            self.after_pivot();
            if self.pivots() > MAX_PIVOTS {
                return Err(Error::resource("simplex pivot limit reached"));
            }
        }
    }
}

/// Near-equal ratios compare equal so that the smallest-index tie rule
/// still applies; exact comparison here lets rounding noise cycle.
fn float_cmp(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= 1e-11 * a.abs().max(b.abs()).max(1.0) {
        Ordering::Equal
    } else {
        a.partial_cmp(&b).unwrap_or(Ordering::Equal)
    }
}

/// Dense float tableau `B^-1 A | B^-1 b` with reduced costs, plus the
/// original data it is periodically rebuilt from.
struct FloatTableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    cost: Vec<f64>,
    basis: Vec<usize>,
    pivots: usize,
    orig_rows: Vec<Vec<f64>>,
    orig_rhs: Vec<f64>,
    orig_cost: Vec<f64>,
}

impl Pivoting for FloatTableau {
    fn rows(&self) -> usize {
        self.rows.len()
    }
    fn cols(&self) -> usize {
        self.cost.len()
    }
    fn basis(&self) -> &[usize] {
        &self.basis
    }
    fn rhs_neg(&self, r: usize) -> bool {
        self.rhs[r] < -FLOAT_TOL
    }
    fn entry_neg(&self, r: usize, j: usize) -> bool {
        self.rows[r][j] < -FLOAT_TOL
    }
    fn entry_pos(&self, r: usize, j: usize) -> bool {
        self.rows[r][j] > FLOAT_TOL
    }
    fn cost_neg(&self, j: usize) -> bool {
        self.cost[j] < -FLOAT_TOL
    }
    fn cmp_dual_ratio(&self, r: usize, a: usize, b: usize) -> Ordering {
        float_cmp(self.cost[a] / -self.rows[r][a], self.cost[b] / -self.rows[r][b])
    }
    fn cmp_primal_ratio(&self, j: usize, a: usize, b: usize) -> Ordering {
        float_cmp(self.rhs[a] / self.rows[a][j], self.rhs[b] / self.rows[b][j])
    }
    fn pivots(&self) -> usize {
        self.pivots
    }
    fn after_pivot(&mut self) {
        if self.pivots.is_multiple_of(REINVERT_EVERY) {
            self.reinvert();
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        fn flush(v: f64) -> f64 {
            if v.abs() < 1e-14 {
                0.0
            } else {
                v
            }
        }
        let p = self.rows[r][j];
        let nz: Vec<usize> = (0..self.rows[r].len()).filter(|&k| self.rows[r][k] != 0.0).collect();
        for &k in &nz {
            self.rows[r][k] /= p;
        }
        self.rhs[r] /= p;
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r]);
        for i in 0..self.rows.len() {
            let f = self.rows[i][j];
            if i == r || f.abs() <= FLOAT_TOL {
                continue;
            }
            for &k in &nz {
                self.rows[i][k] = flush(self.rows[i][k] - f * pivot_row[k]);
            }
            self.rows[i][j] = 0.0;
            self.rhs[i] = flush(self.rhs[i] - f * pivot_rhs);
        }
        let f = self.cost[j];
        if f.abs() > FLOAT_TOL {
            for &k in &nz {
                self.cost[k] = flush(self.cost[k] - f * pivot_row[k]);
            }
            self.cost[j] = 0.0;
        }
        self.basis[r] = j;
        self.pivots += 1;
    }
}

impl FloatTableau {
    fn new(form: &StandardForm) -> Self {
        let orig_rows: Vec<Vec<f64>> = form.rows.iter().map(|row| row.iter().map(|&v| f64::from(v)).collect()).collect();
        let orig_rhs: Vec<f64> = form.rhs.iter().map(|&v| f64::from(v)).collect();
        let orig_cost: Vec<f64> = form.cost.iter().map(|&v| f64::from(v)).collect();
        FloatTableau {
            rows: orig_rows.clone(),
            rhs: orig_rhs.clone(),
            cost: orig_cost.clone(),
            basis: form.basis.clone(),
            pivots: 0,
            orig_rows,
            orig_rhs,
            orig_cost,
        }
    }

    /// Rebuilds the tableau for the current basis from the original data by
    /// Gauss-Jordan elimination with partial pivoting, discarding the error
    /// accumulated over earlier pivots. Returns false, leaving the tableau
    /// unchanged, if the basis is numerically singular.
    fn reinvert(&mut self) -> bool {
        let k = self.basis.len();
        let mut rows = self.orig_rows.clone();
        let mut rhs = self.orig_rhs.clone();
        for c in 0..k {
            let col = self.basis[c];
            let Some(p) = (c..k).max_by(|&a, &b| rows[a][col].abs().total_cmp(&rows[b][col].abs())) else {
                return false;
            };
            if rows[p][col].abs() < 1e-12 {
                return false;
            }
            rows.swap(c, p);
            rhs.swap(c, p);
            let pv = rows[c][col];
            rows[c].iter_mut().for_each(|v| *v /= pv);
            rhs[c] /= pv;
            let (pivot_row, pivot_rhs) = (rows[c].clone(), rhs[c]);
            for i in (0..k).filter(|&i| i != c) {
                let f = rows[i][col];
                if f != 0.0 {
                    for (v, q) in rows[i].iter_mut().zip(&pivot_row) {
                        *v -= f * q;
                    }
                    rows[i][col] = 0.0;
                    rhs[i] -= f * pivot_rhs;
                }
            }
        }
        let mut cost = self.orig_cost.clone();
        for (row, &j) in rows.iter().zip(&self.basis) {
            let f = self.orig_cost[j];
            if f != 0.0 {
                for (v, q) in cost.iter_mut().zip(row) {
                    *v -= f * q;
                }
            }
        }
        for &j in &self.basis {
            cost[j] = 0.0;
        }
        self.rows = rows;
        self.rhs = rhs;
        self.cost = cost;
        true
    }

    fn is_optimal(&self) -> bool {
        !(0..self.rows()).any(|r| self.rhs_neg(r)) && !(0..self.cols()).any(|j| self.cost_neg(j))
    }
}

/// Fraction-free integer tableau: every entry is its rational value times
/// `den`, the (positive) determinant of the current basis. Each pivot
/// divides exactly by the previous determinant, so no gcd is ever taken.
struct IntTableau {
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    cost: Vec<BigInt>,
    den: BigInt,
    basis: Vec<usize>,
    pivots: usize,
}

impl Pivoting for IntTableau {
    fn rows(&self) -> usize {
        self.rows.len()
    }
    fn cols(&self) -> usize {
        self.cost.len()
    }
    fn basis(&self) -> &[usize] {
        &self.basis
    }
    fn rhs_neg(&self, r: usize) -> bool {
        self.rhs[r].is_negative()
    }
    fn entry_neg(&self, r: usize, j: usize) -> bool {
        self.rows[r][j].is_negative()
    }
    fn entry_pos(&self, r: usize, j: usize) -> bool {
        self.rows[r][j].is_positive()
    }
    fn cost_neg(&self, j: usize) -> bool {
        self.cost[j].is_negative()
    }
    fn cmp_dual_ratio(&self, r: usize, a: usize, b: usize) -> Ordering {
        // both denominators are negative
        (&self.cost[b] * &self.rows[r][a]).cmp(&(&self.cost[a] * &self.rows[r][b]))
    }
    fn cmp_primal_ratio(&self, j: usize, a: usize, b: usize) -> Ordering {
        (&self.rhs[a] * &self.rows[b][j]).cmp(&(&self.rhs[b] * &self.rows[a][j]))
    }
    fn pivots(&self) -> usize {
        self.pivots
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let p = self.rows[r][j].clone();
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        let den = &self.den;
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][j].clone();
            combine(&mut self.rows[i], &f, &p, &pivot_row, den);
            self.rhs[i] = (&self.rhs[i] * &p - &f * &pivot_rhs) / den;
        }
        let f = self.cost[j].clone();
        combine(&mut self.cost, &f, &p, &pivot_row, den);
        if p.is_negative() {
            for v in self.rows.iter_mut().flatten().chain(self.rhs.iter_mut()).chain(self.cost.iter_mut()) {
                *v = -&*v;
            }
            self.den = -p;
        } else {
            self.den = p;
        }
        self.basis[r] = j;
        self.pivots += 1;
    }
}

/// `row = (p * row - f * pivot_row) / den`; the division is exact.
fn combine(row: &mut [BigInt], f: &BigInt, p: &BigInt, pivot_row: &[BigInt], den: &BigInt) {
    for (v, q) in row.iter_mut().zip(pivot_row) {
        if f.is_zero() || q.is_zero() {
            if !v.is_zero() {
                *v = &*v * p / den;
            }
        } else {
            *v = (&*v * p - f * q) / den;
        }
    }
}

/// Equality-form LP with small integer data and an identity starting basis.
struct StandardForm {
    covering: bool,
    rows: Vec<Vec<i8>>,
    rhs: Vec<i8>,
    cost: Vec<i8>,
    basis: Vec<usize>,
    active: Vec<usize>,
    m: usize,
}

impl StandardForm {
    fn new(h: &Hypergraph) -> Self {
        let active = h.active_vertices();
        let nv = active.len();
        let m = h.m();
        let mut pos = vec![usize::MAX; h.n()];
        for (i, &v) in active.iter().enumerate() {
            pos[v] = i;
        }
        if m <= nv {
            // Covering LP: -A x + s = -1, slack basis is dual feasible.
            let mut rows = vec![vec![0i8; nv + m]; m];
            for (r, e) in h.edges().iter().enumerate() {
                for &v in e {
                    rows[r][pos[v]] = -1;
                }
                rows[r][nv + r] = 1;
            }
            let mut cost = vec![1i8; nv];
            cost.resize(nv + m, 0);
            StandardForm { covering: true, rows, rhs: vec![-1; m], cost, basis: (nv..nv + m).collect(), active, m }
        } else {
            // Packing LP: A^T y + s = 1, maximize sum y (minimize -sum y).
            let mut rows = vec![vec![0i8; m + nv]; nv];
            for (e, edge) in h.edges().iter().enumerate() {
                for &v in edge {
                    rows[pos[v]][e] = 1;
                }
            }
            for (r, row) in rows.iter_mut().enumerate() {
                row[m + r] = 1;
            }
            let mut cost = vec![-1i8; m];
            cost.resize(m + nv, 0);
            StandardForm { covering: false, rows, rhs: vec![1; nv], cost, basis: (m..m + nv).collect(), active, m }
        }
    }

    fn solve<P: Pivoting>(&self, tab: &mut P) -> Result<()> {
        if self.covering {
            tab.dual_simplex()
        } else {
            tab.primal_simplex()
        }
    }

    /// Reads `(x, y)` off a final basis: basic values give one vector and
    /// the slack reduced costs give the other.
    fn extract<T: Clone>(&self, n: usize, basis: &[usize], basic: Vec<T>, reduced: Vec<T>, zero: T) -> (Vec<T>, Vec<T>) {
        let nv = self.active.len();
        let m = self.m;
        let mut x = vec![zero.clone(); n];
        let mut y = vec![zero; m];
        if self.covering {
            for (r, &j) in basis.iter().enumerate() {
                if j < nv {
                    x[self.active[j]] = basic[r].clone();
                }
            }
            y.clone_from_slice(&reduced[nv..nv + m]);
        } else {
            for (r, &j) in basis.iter().enumerate() {
                if j < m {
                    y[j] = basic[r].clone();
                }
            }
            for (i, &v) in self.active.iter().enumerate() {
                x[v] = reduced[m + i].clone();
            }
        }
        (x, y)
    }
}

fn solve_float(h: &Hypergraph) -> Result<(Vec<f64>, Vec<f64>, usize)> {
    if h.m() == 0 {
        return Ok((vec![0.0; h.n()], Vec::new(), 0));
    }
    let form = StandardForm::new(h);
    let mut tab = FloatTableau::new(&form);
    // a clean rebuild can expose a slightly infeasible basis; resume from it
    for _ in 0..MAX_RESUMES {
        form.solve(&mut tab)?;
        if !tab.reinvert() || tab.is_optimal() {
            break;
        }
    }
    let basis = tab.basis.clone();
    let (x, y) = form.extract(h.n(), &basis, tab.rhs, tab.cost, 0.0);
    Ok((x, y, tab.pivots))
}

fn solve_exact(h: &Hypergraph) -> Result<(Vec<Rational>, Vec<Rational>, usize)> {
    if h.m() == 0 {
        return Ok((vec![Rational::zero(); h.n()], Vec::new(), 0));
    }
    let form = StandardForm::new(h);
    let int = |v: &i8| BigInt::from(*v);
    let mut tab = IntTableau {
        rows: form.rows.iter().map(|row| row.iter().map(int).collect()).collect(),
        rhs: form.rhs.iter().map(int).collect(),
        cost: form.cost.iter().map(int).collect(),
        den: BigInt::one(),
        basis: form.basis.clone(),
        pivots: 0,
    };
    form.solve(&mut tab)?;
    let den = tab.den.clone();
    let ratio = |v: BigInt| Rational::new(v, den.clone());
    let basic = tab.rhs.into_iter().map(ratio).collect();
    let reduced = tab.cost.into_iter().map(ratio).collect();
    let (x, y) = form.extract(h.n(), &tab.basis, basic, reduced, Rational::zero());
    Ok((x, y, tab.pivots))
}

fn sum_values(mode: LpMode, vals: &[LpValue]) -> LpValue {
    match mode {
        LpMode::Exact => {
            LpValue::Exact(vals.iter().filter_map(LpValue::exact).fold(Rational::zero(), |a, b| a + b))
        }
        LpMode::Float => LpValue::Float(vals.iter().map(LpValue::to_f64).sum()),
    }
}

/// Solves the covering LP and its dual in one simplex run.
pub fn solve_lp_pair(h: &Hypergraph, mode: LpMode, limits: &Limits) -> Result<LpPair> {
    let (xs, ys, pivots): (Vec<LpValue>, Vec<LpValue>, usize) = match mode {
        LpMode::Exact => {
            let product = h.n().saturating_mul(h.m());
            if product > limits.lp_exact_product {
                return Err(Error::resource(format!(
                    "exact LP with n*m = {product} exceeds the guard {}",
                    limits.lp_exact_product
                )));
            }
            let (x, y, p) = solve_exact(h)?;
            (x.into_iter().map(LpValue::Exact).collect(), y.into_iter().map(LpValue::Exact).collect(), p)
        }
        LpMode::Float => {
            let (x, y, p) = solve_float(h)?;
            let snap = |v: f64| LpValue::Float(if v.abs() <= FLOAT_TOL { 0.0 } else { v });
            (x.into_iter().map(snap).collect(), y.into_iter().map(snap).collect(), p)
        }
    };
    let primal = LpSolution { kind: LpKind::Primal, mode, objective: sum_values(mode, &xs), values: xs };
    let dual = LpSolution { kind: LpKind::Dual, mode, objective: sum_values(mode, &ys), values: ys };
    Ok(LpPair { primal, dual, pivots })
}

/// Optimal basic solution of the vertex-cover LP.
pub fn solve_vc_lp(h: &Hypergraph, mode: LpMode, limits: &Limits) -> Result<LpSolution> {
    Ok(solve_lp_pair(h, mode, limits)?.primal)
}

/// Optimal fractional matching.
pub fn solve_matching_lp(h: &Hypergraph, mode: LpMode, limits: &Limits) -> Result<LpSolution> {
    Ok(solve_lp_pair(h, mode, limits)?.dual)
}

/// Outcome of a successful complementary-slackness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlacknessReport {
    pub objective: Rational,
    pub support_size: usize,
    pub uniformity: usize,
}

impl SlacknessReport {
    /// `|support| <= t * objective` holds (it is checked before the report is built).
    pub fn support_bound(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.uniformity)) * &self.objective
    }
}

fn exact_values(sol: &LpSolution, expected: usize, what: &str) -> Result<Vec<Rational>> {
    if sol.mode != LpMode::Exact {
        return Err(Error::param(format!("{what} is not an exact-mode solution")));
    }
    if sol.values.len() != expected {
        return Err(Error::param(format!("{what} has {} values, expected {expected}", sol.values.len())));
    }
    let vals: Vec<Rational> = sol.values.iter().filter_map(|v| v.exact().cloned()).collect();
    if let Some(i) = vals.iter().position(|v| v.is_negative()) {
        return Err(Error::verify(format!("{what} value at {i} is negative")));
    }
    Ok(vals)
}

/// Checks feasibility, equal objectives and complementary slackness of an
/// exact primal/dual pair, and the support bound `|S| <= t * OPT`.
pub fn check_complementary_slackness(
    primal: &LpSolution,
    dual: &LpSolution,
    h: &Hypergraph,
) -> Result<SlacknessReport> {
    let x = exact_values(primal, h.n(), "primal")?;
    let y = exact_values(dual, h.m(), "dual")?;
    let one = Rational::one();
    let inc = h.incidence();
    let load: Vec<Rational> = inc
        .iter()
        .map(|es| es.iter().fold(Rational::zero(), |a, &e| a + &y[e]))
        .collect();
    let cover: Vec<Rational> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(Rational::zero(), |a, &v| a + &x[v]))
        .collect();
    if let Some(e) = cover.iter().position(|c| c < &one) {
        return Err(Error::verify(format!("edge {e} is not covered by the primal solution")));
    }
    if let Some(v) = load.iter().position(|l| l > &one) {
        return Err(Error::verify(format!("vertex {v} is overloaded by the dual solution")));
    }
    for v in 0..h.n() {
        if x[v].is_positive() && load[v] != one {
            return Err(Error::verify(format!(
                "vertex {v} has positive cover value but dual slack {}",
                &one - &load[v]
            )));
        }
    }
    for e in 0..h.m() {
        if y[e].is_positive() && cover[e] != one {
            return Err(Error::verify(format!(
                "edge {e} has positive matching value but primal slack {}",
                &cover[e] - &one
            )));
        }
    }
    let px: Rational = x.iter().fold(Rational::zero(), |a, b| a + b);
    let dy: Rational = y.iter().fold(Rational::zero(), |a, b| a + b);
    if px != dy {
        return Err(Error::verify(format!("objectives differ: {px} vs {dy}")));
    }
    let support_size = x.iter().filter(|v| v.is_positive()).count();
    let report = SlacknessReport { objective: px, support_size, uniformity: h.t() };
    if Rational::from_integer(BigInt::from(support_size)) > report.support_bound() {
        return Err(Error::verify(format!(
            "support of size {support_size} exceeds t * OPT = {}",
            report.support_bound()
        )));
    }
    Ok(report)
}

/// `floor(x * 10^6) / 10^6` as an exact rational.
pub fn rationalize_down(x: f64) -> Rational {
    let scale = BigInt::from(1_000_000u32);
    let scaled = (x * 1e6).floor();
    let num = BigInt::from(scaled as i64);
    Rational::new(num, scale)
}

/// Exact `ceil` of a non-negative rational.
pub fn ceil_rational(r: &Rational) -> BigInt {
    let (q, rem) = r.numer().div_rem(r.denom());
    if rem.is_zero() || r.is_negative() {
        q
    } else {
        q + 1
    }
}

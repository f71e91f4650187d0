//! LP rounding for vertex cover on blown-up hypergraphs.
//!
//! The main entry point is [`ahtp_cover`]: threshold the LP recursively at
//! `1/t'` with `t' = t/2 + 2 sqrt(t ln t)`, then cover what is left by a random
//! two-colouring of the base vertices, keeping the high-discrepancy support
//! vertices and the smaller parity class. [`t2_cover`] is the analogous
//! procedure for the 2-blow-up, [`color_code_cover`] the LP-free colour-coding
//! cover, and [`fallback_threshold_cover`] the plain `1/u` threshold.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{blow_up, BlowUp, Hypergraph, VertexSet};
use crate::limits::Limits;
use crate::lp::{rationalize_down, solve_lp_pair, LpMode, LpSolution, LpValue, Rational};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Parameters of the main rounding algorithm for uniformity `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundingParams {
    pub t: usize,
    /// `t/2 + 2 sqrt(t ln t)`.
    pub t_prime: f64,
    /// `1 / t_prime`.
    pub gamma: f64,
    /// `sqrt(4 ln t / (t - 1))`.
    pub delta: f64,
    pub seed: u64,
    pub trials: usize,
}

impl RoundingParams {
    pub fn new(t: usize, seed: u64, trials: usize) -> Result<Self> {
        if t < 3 {
            return Err(Error::param(format!("rounding needs t >= 3, got {t}")));
        }
        if trials == 0 {
            return Err(Error::param("at least one trial is required"));
        }
        let tf = t as f64;
        let t_prime = tf / 2.0 + 2.0 * (tf * tf.ln()).sqrt();
        let delta = (4.0 * tf.ln() / (tf - 1.0)).sqrt();
        Ok(RoundingParams { t, t_prime, gamma: 1.0 / t_prime, delta, seed, trials })
    }

    /// `gamma` rounded down to a multiple of `10^-6`.
    pub fn gamma_rational(&self) -> Rational {
        rationalize_down(self.gamma)
    }

    /// `(1 - delta)(t - 1)/2`: a support vertex whose smaller colour class has
    /// at most this many base vertices is a high-discrepancy vertex.
    pub fn discrepancy_threshold(&self) -> f64 {
        (1.0 - self.delta) * (self.t as f64 - 1.0) / 2.0
    }

    /// `t' * lp_opt`, the expected-size guarantee.
    pub fn size_bound(&self, lp_opt: f64) -> f64 {
        self.t_prime * lp_opt
    }
}

/// Per-trial seed: the root seed xor splitmix64 of the trial index.
pub fn child_seed(root: u64, trial: usize) -> u64 {
    let mut z = (trial as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    root ^ (z ^ (z >> 31))
}

/// A colouring of base vertices with colours in `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
    seed: u64,
}

impl Coloring {
    /// Uniform independent colours from a seeded ChaCha stream.
    pub fn random(n: usize, num_colors: usize, seed: u64) -> Self {
        assert!(num_colors >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors = (0..n).map(|_| rng.gen_range(0..num_colors)).collect();
        Coloring { colors, num_colors, seed }
    }

    pub fn from_colors(colors: Vec<usize>, num_colors: usize) -> Result<Self> {
        if num_colors == 0 || colors.iter().any(|&c| c >= num_colors) {
            return Err(Error::param("colour out of range"));
        }
        Ok(Coloring { colors, num_colors, seed: 0 })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Colour histogram of a set of base vertices.
    pub fn counts(&self, label: &[usize]) -> Vec<usize> {
        let mut c = vec![0; self.num_colors];
        for &u in label {
            c[self.colors[u]] += 1;
        }
        c
    }
}

/// Which procedure produced a [`CoverResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverSource {
    Rounding,
    Fallback,
    ColorCoding,
    Threshold,
}

impl CoverSource {
    pub fn name(self) -> &'static str {
        match self {
            CoverSource::Rounding => "rounding",
            CoverSource::Fallback => "fallback",
            CoverSource::ColorCoding => "colorcode",
            CoverSource::Threshold => "threshold",
        }
    }
}

/// Provenance of the vertices of a cover.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Breakdown {
    /// Vertices rounded up by thresholding (or, for colour coding, the
    /// vertices missing a colour).
    pub u: VertexSet,
    /// High-discrepancy support vertices.
    pub s_prime: VertexSet,
    /// The selected residue class.
    pub parity_class: VertexSet,
}

impl Breakdown {
    pub fn union(&self) -> VertexSet {
        self.u.union(&self.s_prime).union(&self.parity_class)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverResult {
    pub cover: VertexSet,
    pub breakdown: Breakdown,
    pub lp_opt: Option<LpValue>,
    pub lp_opt_residual: Option<LpValue>,
    pub seed: u64,
    pub trial_index: usize,
    /// Size of the LP support left after thresholding.
    pub support_size: usize,
    pub source: CoverSource,
    /// Best rounding cover size, when a fallback comparison was made.
    pub rounding_size: Option<usize>,
    pub fallback_size: Option<usize>,
}

impl CoverResult {
    pub fn size(&self) -> usize {
        self.cover.len()
    }
}

/// Output of recursive thresholding.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdOutcome {
    /// Every vertex whose LP value reached `gamma` in some round.
    pub u: VertexSet,
    /// Input minus `u` and every edge touching it; vertex ids unchanged.
    pub residual: Hypergraph,
    /// Ids (in the input) of the residual edges.
    pub residual_edges: Vec<usize>,
    /// Optimal LP solution of the residual; every value is below `gamma`.
    pub x_residual: LpSolution,
    pub lp_opt: LpValue,
    pub lp_opt_residual: LpValue,
    pub gamma: Rational,
    pub rounds: usize,
}

impl ThresholdOutcome {
    /// LP support of the residual.
    pub fn support(&self) -> Vec<usize> {
        self.x_residual.support()
    }

    /// `|U| * gamma <= OPT - OPT'`, i.e. `|U| <= (1/gamma)(OPT - OPT')`.
    /// Exact in exact mode; float mode allows `1e-6` slack.
    pub fn threshold_bound_holds(&self) -> bool {
        let drop = self.lp_opt.sub(&self.lp_opt_residual);
        match drop {
            LpValue::Exact(d) => {
                Rational::from_integer(BigInt::from(self.u.len())) * &self.gamma <= d
            }
            LpValue::Float(d) => {
                self.u.len() as f64 * self.gamma.to_f64().unwrap_or(0.0) <= d + 1e-6
            }
        }
    }

    /// `|S| <= uniformity * OPT'` on the residual.
    pub fn support_bound_holds(&self) -> bool {
        let s = self.support().len();
        let t = self.residual.t();
        match &self.lp_opt_residual {
            LpValue::Exact(o) => Rational::from_integer(BigInt::from(s)) <= Rational::from_integer(BigInt::from(t)) * o,
            LpValue::Float(o) => s as f64 <= t as f64 * o + 1e-6,
        }
    }
}

/// Repeatedly solves the LP, moves every vertex with value `>= gamma` into
/// `U` and deletes it with its edges, until no value reaches `gamma`.
pub fn recursive_threshold(
    h: &Hypergraph,
    gamma: &Rational,
    mode: LpMode,
    limits: &Limits,
) -> Result<ThresholdOutcome> {
    if !(gamma > &Rational::zero() && gamma < &Rational::from_integer(BigInt::from(1))) {
        return Err(Error::param(format!("threshold {gamma} must lie in (0, 1)")));
    }
    let mut current = h.clone();
    let mut kept: Vec<usize> = (0..h.m()).collect();
    let mut x = solve_lp_pair(&current, mode, limits)?.primal;
    let lp_opt = x.objective.clone();
    let mut u = Vec::new();
    let mut rounds = 0;
    loop {
        let high: Vec<usize> = (0..current.n()).filter(|&v| x.values[v].at_least(gamma)).collect();
        if high.is_empty() {
            break;
        }
        rounds += 1;
        u.extend_from_slice(&high);
        let (next, local) = current.delete_vertices(&high);
        kept = local.into_iter().map(|i| kept[i]).collect();
        current = next;
        x = solve_lp_pair(&current, mode, limits)?.primal;
    }
    Ok(ThresholdOutcome {
        u: u.into_iter().collect(),
        residual: current,
        residual_edges: kept,
        lp_opt_residual: x.objective.clone(),
        x_residual: x,
        lp_opt,
        gamma: gamma.clone(),
        rounds,
    })
}

/// Vertices of `support` whose label has at most `threshold` base vertices of
/// some colour (two colours).
pub fn discrepancy_set(support: &[usize], labels: &[Vec<usize>], coloring: &Coloring, threshold: f64) -> Vec<usize> {
    support
        .iter()
        .copied()
        .filter(|&v| {
            let c = coloring.counts(&labels[v]);
            c.iter().any(|&k| k as f64 <= threshold)
        })
        .collect()
}

/// The smaller class of `support` under `f(v) = C_1(v) mod 2`, lower class
/// on ties.
pub fn parity_class(support: &[usize], labels: &[Vec<usize>], coloring: &Coloring) -> Vec<usize> {
    let (odd, even): (Vec<usize>, Vec<usize>) = support
        .iter()
        .copied()
        .partition(|&v| labels[v].iter().filter(|&&u| coloring.color(u) == 1).count() % 2 == 1);
    if even.len() <= odd.len() {
        even
    } else {
        odd
    }
}

/// One colouring of the residual support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub s_prime: VertexSet,
    pub parity_class: VertexSet,
    pub cover: VertexSet,
}

/// Everything in the main algorithm that precedes the random colouring.
#[derive(Debug, Clone)]
pub struct AhtpPlan<'a> {
    blowup: &'a BlowUp,
    params: RoundingParams,
    threshold: ThresholdOutcome,
    support: Vec<usize>,
}

impl<'a> AhtpPlan<'a> {
    /// Runs recursive thresholding on `b = G^(t-1)` with the rationalized `1/t'`.
    pub fn new(b: &'a BlowUp, params: RoundingParams, mode: LpMode, limits: &Limits) -> Result<Self> {
        let t = b.base_t();
        if b.k() + 1 != t {
            return Err(Error::param(format!("expected the (t-1)-blow-up, got k={} for t={t}", b.k())));
        }
        if params.t != t {
            return Err(Error::param(format!("parameters are for t={}, instance has t={t}", params.t)));
        }
        let threshold = recursive_threshold(b.hyper(), &params.gamma_rational(), mode, limits)?;
        let support = threshold.support();
        Ok(AhtpPlan { blowup: b, params, threshold, support })
    }

    pub fn params(&self) -> &RoundingParams {
        &self.params
    }

    pub fn threshold(&self) -> &ThresholdOutcome {
        &self.threshold
    }

    /// LP support `S` of the residual instance.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `U ∪ S' ∪ f^-1(p)` for a given two-colouring of the base vertices.
    pub fn round(&self, coloring: &Coloring, index: usize) -> Trial {
        let labels = self.blowup.labels();
        let s_prime: VertexSet =
            discrepancy_set(&self.support, labels, coloring, self.params.discrepancy_threshold())
                .into_iter()
                .collect();
        let parity: VertexSet = parity_class(&self.support, labels, coloring).into_iter().collect();
        let cover = self.threshold.u.union(&s_prime).union(&parity);
        Trial { index, seed: coloring.seed(), s_prime, parity_class: parity, cover }
    }

    /// Trial `i`, coloured from the child seed of the root seed.
    pub fn trial(&self, i: usize) -> Trial {
        let seed = child_seed(self.params.seed, i);
        let coloring = Coloring::random(self.blowup.base_n(), 2, seed);
        self.round(&coloring, i)
    }

    /// All trials, computed in parallel and returned in index order.
    pub fn trials(&self) -> Vec<Trial> {
        (0..self.params.trials).into_par_iter().map(|i| self.trial(i)).collect()
    }
}

fn best_trial(trials: Vec<Trial>) -> Trial {
    trials
        .into_iter()
        .min_by_key(|t| (t.cover.len(), t.index))
        .expect("at least one trial")
}

/// The main rounding algorithm on `G^(t-1)`.
///
/// The best of `params.trials` colourings is compared against
/// [`fallback_threshold_cover`] and the smaller cover is returned; both sizes
/// are recorded.
pub fn ahtp_cover(g: &Hypergraph, params: &RoundingParams, mode: LpMode, limits: &Limits) -> Result<CoverResult> {
    if g.t() < 3 {
        return Err(Error::param(format!("rounding needs t >= 3, got {}", g.t())));
    }
    let b = blow_up(g, g.t() - 1)?;
    ahtp_cover_blowup(&b, params, mode, limits)
}

/// [`ahtp_cover`] on an already blown-up instance.
pub fn ahtp_cover_blowup(b: &BlowUp, params: &RoundingParams, mode: LpMode, limits: &Limits) -> Result<CoverResult> {
    let plan = AhtpPlan::new(b, params.clone(), mode, limits)?;
    let best = best_trial(plan.trials());
    let th = plan.threshold();
    let rounding = CoverResult {
        cover: best.cover.clone(),
        breakdown: Breakdown {
            u: th.u.clone(),
            s_prime: best.s_prime.clone(),
            parity_class: best.parity_class.clone(),
        },
        lp_opt: Some(th.lp_opt.clone()),
        lp_opt_residual: Some(th.lp_opt_residual.clone()),
        seed: params.seed,
        trial_index: best.index,
        support_size: plan.support().len(),
        source: CoverSource::Rounding,
        rounding_size: Some(best.cover.len()),
        fallback_size: None,
    };
    let fallback = fallback_threshold_cover(b.hyper(), mode, limits)?;
    let fallback_size = fallback.size();
    let mut chosen = if fallback_size < rounding.size() {
        CoverResult { seed: params.seed, trial_index: 0, source: CoverSource::Fallback, ..fallback }
    } else {
        rounding
    };
    chosen.rounding_size = Some(best.cover.len());
    chosen.fallback_size = Some(fallback_size);
    Ok(chosen)
}

/// `ceil((t - 1) / (2 ln t))`, the number of colours used by colour coding.
pub fn color_coding_palette(t: usize) -> usize {
    let tf = t as f64;
    ((tf - 1.0) / (2.0 * tf.ln())).ceil().max(1.0) as usize
}

/// LP-free cover of `G^(t-1)` by colour coding with `P` colours: the vertices
/// missing some colour together with the least popular class of
/// `f(v) = sum_i i * C_i(v) mod P`. Valid for every colouring.
pub fn color_code_cover(b: &BlowUp, seed: u64) -> Result<CoverResult> {
    let t = b.base_t();
    if t < 3 {
        return Err(Error::param(format!("colour coding needs t >= 3, got {t}")));
    }
    if b.k() + 1 != t {
        return Err(Error::param(format!("expected the (t-1)-blow-up, got k={} for t={t}", b.k())));
    }
    let p = color_coding_palette(t);
    let coloring = Coloring::random(b.base_n(), p, seed);
    Ok(color_code_cover_with(b, &coloring))
}

/// Colour-coding cover for an explicit colouring.
pub fn color_code_cover_with(b: &BlowUp, coloring: &Coloring) -> CoverResult {
    let p = coloring.num_colors();
    let mut missing = Vec::new();
    let mut classes = vec![Vec::new(); p];
    for (v, label) in b.labels().iter().enumerate() {
        let counts = coloring.counts(label);
        if counts.contains(&0) {
            missing.push(v);
        }
        let f = counts.iter().enumerate().map(|(i, &c)| i * c).sum::<usize>() % p;
        classes[f].push(v);
    }
    let least = (0..p).min_by_key(|&i| (classes[i].len(), i)).unwrap();
    let u: VertexSet = missing.into_iter().collect();
    let parity: VertexSet = std::mem::take(&mut classes[least]).into_iter().collect();
    CoverResult {
        cover: u.union(&parity),
        breakdown: Breakdown { u, s_prime: VertexSet::empty(), parity_class: parity },
        lp_opt: None,
        lp_opt_residual: None,
        seed: coloring.seed(),
        trial_index: 0,
        support_size: b.hyper().n(),
        source: CoverSource::ColorCoding,
        rounding_size: None,
        fallback_size: None,
    }
}

/// Everything in the 2-blow-up procedure that precedes the colouring.
#[derive(Debug, Clone)]
pub struct T2Plan<'a> {
    blowup: &'a BlowUp,
    threshold: ThresholdOutcome,
    support: Vec<usize>,
    seed: u64,
}

impl<'a> T2Plan<'a> {
    /// Thresholds the LP of `G^(2)` recursively at `4/t^2`.
    pub fn new(b: &'a BlowUp, seed: u64, mode: LpMode, limits: &Limits) -> Result<Self> {
        let t = b.base_t();
        if t < 3 {
            return Err(Error::param(format!("the 2-blow-up procedure needs t >= 3, got {t}")));
        }
        if b.k() != 2 {
            return Err(Error::param(format!("expected the 2-blow-up, got k={}", b.k())));
        }
        let gamma = Rational::new(BigInt::from(4), BigInt::from(t * t));
        let threshold = recursive_threshold(b.hyper(), &gamma, mode, limits)?;
        let support = threshold.support();
        Ok(T2Plan { blowup: b, threshold, support, seed })
    }

    pub fn threshold(&self) -> &ThresholdOutcome {
        &self.threshold
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Monochromatic supported pairs.
    pub fn monochromatic(&self, coloring: &Coloring) -> VertexSet {
        self.support
            .iter()
            .copied()
            .filter(|&v| {
                let l = self.blowup.label(v);
                coloring.color(l[0]) == coloring.color(l[1])
            })
            .collect()
    }

    pub fn trial(&self, i: usize) -> Trial {
        let seed = child_seed(self.seed, i);
        let coloring = Coloring::random(self.blowup.base_n(), 2, seed);
        let mono = self.monochromatic(&coloring);
        Trial {
            index: i,
            seed,
            s_prime: VertexSet::empty(),
            cover: self.threshold.u.union(&mono),
            parity_class: mono,
        }
    }
}

/// Cover of `G^(2)`: threshold at `4/t^2`, then add the supported pairs that
/// are monochromatic under a random two-colouring. Best of `trials`.
pub fn t2_cover(g: &Hypergraph, seed: u64, trials: usize, mode: LpMode, limits: &Limits) -> Result<CoverResult> {
    if g.t() < 3 {
        return Err(Error::param(format!("the 2-blow-up procedure needs t >= 3, got {}", g.t())));
    }
    let b = blow_up(g, 2)?;
    t2_cover_blowup(&b, seed, trials, mode, limits)
}

/// [`t2_cover`] on an already blown-up instance.
pub fn t2_cover_blowup(b: &BlowUp, seed: u64, trials: usize, mode: LpMode, limits: &Limits) -> Result<CoverResult> {
    if trials == 0 {
        return Err(Error::param("at least one trial is required"));
    }
    let plan = T2Plan::new(b, seed, mode, limits)?;
    let all: Vec<Trial> = (0..trials).into_par_iter().map(|i| plan.trial(i)).collect();
    let best = best_trial(all);
    let th = plan.threshold();
    Ok(CoverResult {
        cover: best.cover.clone(),
        breakdown: Breakdown { u: th.u.clone(), s_prime: VertexSet::empty(), parity_class: best.parity_class },
        lp_opt: Some(th.lp_opt.clone()),
        lp_opt_residual: Some(th.lp_opt_residual.clone()),
        seed,
        trial_index: best.index,
        support_size: plan.support().len(),
        source: CoverSource::Rounding,
        rounding_size: Some(best.cover.len()),
        fallback_size: None,
    })
}

/// All vertices whose LP value is at least `1/u`, `u` the uniformity.
pub fn fallback_threshold_cover(h: &Hypergraph, mode: LpMode, limits: &Limits) -> Result<CoverResult> {
    let x = solve_lp_pair(h, mode, limits)?.primal;
    let threshold = Rational::new(BigInt::from(1), BigInt::from(h.t()));
    let cover: VertexSet = (0..h.n()).filter(|&v| x.values[v].at_least(&threshold)).collect();
    Ok(CoverResult {
        breakdown: Breakdown { u: cover.clone(), ..Breakdown::default() },
        cover,
        lp_opt_residual: Some(LpValue::zero(mode)),
        lp_opt: Some(x.objective.clone()),
        seed: 0,
        trial_index: 0,
        support_size: 0,
        source: CoverSource::Threshold,
        rounding_size: None,
        fallback_size: None,
    })
}

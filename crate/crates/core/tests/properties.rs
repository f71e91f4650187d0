use proptest::prelude::*;

use turancover::generators::{random_hypergraph, simplify_reduction};
use turancover::hypergraph::blow_up;
use turancover::io::{format_blowup, format_hypergraph, format_setsystem, parse_documents, Document, ParseOptions};
use turancover::lp::{check_complementary_slackness, solve_lp_pair};
use turancover::oracles::{brute_alpha, brute_nu, brute_tau, find_tents};
use turancover::rounding::{
    color_code_cover, fallback_threshold_cover, t2_cover_blowup, AhtpPlan, RoundingParams,
};
use turancover::setcover::greedy_set_cover;
use turancover::{Hypergraph, Limits, LpMode, Rational, SetSystem};

fn lim() -> Limits {
    Limits::default()
}

fn small_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, 0usize..=4, 0.05f64..0.6, any::<u64>()).prop_map(|(t, extra, p, seed)| {
        random_hypergraph(t + 2 + extra, t, p, seed, &lim()).unwrap()
    })
}

fn rounding_base() -> impl Strategy<Value = Hypergraph> {
    (3usize..=8, 0usize..=4, 1.0f64..10.0, any::<u64>()).prop_map(|(t, extra, target, seed)| {
        let n = (t + 1 + extra).min(14);
        let total = turancover::hypergraph::binomial(n, t) as f64;
        random_hypergraph(n, t, (target / total).min(1.0), seed, &lim()).unwrap()
    })
}

fn simple_setsystem() -> impl Strategy<Value = SetSystem> {
    (4usize..=14, 1usize..=8, 2usize..=4, any::<u64>()).prop_map(|(n, sets, size, seed)| {
        turancover::generators::random_simple_setsystem(n, sets, size.min(n), seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn strong_duality_exact(h in small_hypergraph()) {
        let pair = solve_lp_pair(&h, LpMode::Exact, &lim()).unwrap();
        let report = check_complementary_slackness(&pair.primal, &pair.dual, &h).unwrap();
        prop_assert_eq!(pair.primal.objective.exact(), pair.dual.objective.exact());
        prop_assert!(Rational::from_integer(report.support_size.into()) <= report.support_bound());
    }

    #[test]
    fn float_mode_tracks_exact(h in small_hypergraph()) {
        let exact = solve_lp_pair(&h, LpMode::Exact, &lim()).unwrap().primal.objective.to_f64();
        let float = solve_lp_pair(&h, LpMode::Float, &lim()).unwrap().primal.objective.to_f64();
        prop_assert!((exact - float).abs() < 1e-7);
    }

    #[test]
    fn sandwich(h in small_hypergraph()) {
        let tau_star = solve_lp_pair(&h, LpMode::Exact, &lim()).unwrap().primal.objective.to_f64();
        let tau = brute_tau(&h, &lim()).unwrap();
        let nu = brute_nu(&h, &lim()).unwrap();
        prop_assert!(nu as f64 <= tau_star + 1e-9);
        prop_assert!(tau_star <= tau as f64 + 1e-9);
        prop_assert!(tau <= h.t() * nu);
    }

    #[test]
    fn cover_and_independent_set_complement(h in small_hypergraph()) {
        prop_assert_eq!(brute_tau(&h, &lim()).unwrap() + brute_alpha(&h, &lim()).unwrap(), h.n());
    }

    #[test]
    fn tau_monotone_under_edge_addition(h in small_hypergraph(), pick in any::<prop::sample::Index>()) {
        let all = turancover::generators::complete(h.n(), h.t(), &lim()).unwrap();
        let extra = all.edge(pick.index(all.m())).to_vec();
        let mut edges = h.edges().to_vec();
        edges.push(extra);
        let bigger = Hypergraph::new_dedup(h.t(), h.n(), edges).unwrap();
        prop_assert!(brute_tau(&bigger, &lim()).unwrap() >= brute_tau(&h, &lim()).unwrap());
    }

    #[test]
    fn top_blowup_is_simple_and_tent_free(g in rounding_base()) {
        let b = blow_up(&g, g.t() - 1).unwrap();
        prop_assert!(b.hyper().is_simple());
        prop_assert_eq!(b.hyper().m(), g.m());
        if g.t() == 3 {
            prop_assert!(find_tents(b.hyper(), &lim()).unwrap().is_empty());
        }
    }

    #[test]
    fn rounding_covers_for_every_colouring(g in rounding_base(), seed in any::<u64>()) {
        let b = blow_up(&g, g.t() - 1).unwrap();
        let params = RoundingParams::new(g.t(), seed, 20).unwrap();
        let plan = AhtpPlan::new(&b, params, LpMode::Exact, &lim()).unwrap();
        prop_assert!(plan.threshold().threshold_bound_holds());
        prop_assert!(plan.threshold().support_bound_holds());
        for trial in plan.trials() {
            prop_assert!(b.hyper().is_vertex_cover(&trial.cover));
            prop_assert!(trial.parity_class.len() <= plan.support().len() / 2);
        }
    }

    #[test]
    fn colour_coding_covers(g in rounding_base(), seed in any::<u64>()) {
        let b = blow_up(&g, g.t() - 1).unwrap();
        let r = color_code_cover(&b, seed).unwrap();
        prop_assert!(b.hyper().is_vertex_cover(&r.cover));
    }

    #[test]
    fn pair_blowup_rounding_covers(g in rounding_base(), seed in any::<u64>()) {
        prop_assume!(g.t() <= 6);
        let b = blow_up(&g, 2).unwrap();
        let r = t2_cover_blowup(&b, seed, 5, LpMode::Exact, &lim()).unwrap();
        prop_assert!(b.hyper().is_vertex_cover(&r.cover));
    }

    #[test]
    fn fallback_within_uniformity_factor(h in small_hypergraph()) {
        let r = fallback_threshold_cover(&h, LpMode::Exact, &lim()).unwrap();
        prop_assert!(h.is_vertex_cover(&r.cover));
        let tau_star = r.lp_opt.as_ref().unwrap().to_f64();
        prop_assert!(r.size() as f64 <= h.t() as f64 * tau_star + 1e-9);
    }

    #[test]
    fn simplification_is_simple(g in small_hypergraph(), clouds in 1usize..=4, copies in 1usize..=4, seed in any::<u64>()) {
        prop_assert!(simplify_reduction(&g, clouds, copies, seed).unwrap().is_simple());
    }

    #[test]
    fn setsystem_double_dual(s in simple_setsystem()) {
        prop_assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn greedy_gains_never_increase(s in simple_setsystem()) {
        let tr = greedy_set_cover(&s).unwrap();
        prop_assert!(s.is_cover(&tr.picked));
        prop_assert!(tr.newly_covered.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn text_round_trip(h in small_hypergraph(), s in simple_setsystem()) {
        let docs = parse_documents(&format_hypergraph(&h), ParseOptions::default()).unwrap();
        prop_assert_eq!(docs, vec![Document::Hyper(h.clone())]);
        let docs = parse_documents(&format_setsystem(&s), ParseOptions::default()).unwrap();
        prop_assert_eq!(docs, vec![Document::Sets(s)]);
        let b = blow_up(&h, 1).unwrap();
        let docs = parse_documents(&format_blowup(&b), ParseOptions::default()).unwrap();
        prop_assert_eq!(docs, vec![Document::BlowUp(b)]);
    }
}

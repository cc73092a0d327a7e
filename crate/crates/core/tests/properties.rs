use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use indbound::bounds::{bounds_report, lower_bound_connected};
use indbound::cli::fuzz::{random_connected_graph, random_graph};
use indbound::extremal::{gen_basic, BasicFamily};
use indbound::{
    alpha_exact, greedy_expand, is_maximal_independent, solve_connected, solve_general,
    verify_certificate, Graph, GraphClass,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0..0.7f64).prop_map(|(n, seed, p)| {
        random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.0..0.5f64).prop_map(|(n, seed, p)| {
        random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

/// Largest independent set size by trying every subset.
fn naive_alpha(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let set: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if set.len() > best && g.is_independent_set(&set) {
            best = set.len();
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn adjacency_is_symmetric_and_degrees_sum(g in arb_graph(30)) {
        let mut degree_sum = 0;
        for u in g.vertices() {
            degree_sum += g.degree(u);
            prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            for &v in g.neighbors(u) {
                prop_assert!(v != u);
                prop_assert!(g.has_edge(v, u));
            }
        }
        prop_assert_eq!(degree_sum, 2 * g.size());
        prop_assert_eq!(g.edges().count(), g.size());
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(30)) {
        let partition = g.components();
        let mut seen: Vec<usize> = partition.parts.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, g.vertices().collect::<Vec<_>>());
        for part in &partition.parts {
            let sub = g.induced_subgraph(part).unwrap();
            prop_assert!(sub.graph.is_connected());
            for &u in part {
                for &v in g.neighbors(u) {
                    prop_assert!(part.contains(&v));
                }
            }
        }
        prop_assert_eq!(g.is_connected(), partition.len() == 1);
    }

    #[test]
    fn independence_matches_pairwise_check(g in arb_graph(6)) {
        let n = g.order();
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let pairwise = set
                .iter()
                .all(|&u| set.iter().all(|&v| u == v || !g.has_edge(u, v)));
            prop_assert_eq!(g.is_independent_set(&set), pairwise);
        }
    }

    #[test]
    fn greedy_trace_invariants(g in arb_connected(2, 40)) {
        let trace = greedy_expand(&g).unwrap();
        let (n, k) = (g.order(), g.max_degree());
        prop_assert!(g.is_independent_set(&trace.chosen));
        prop_assert!(trace.len() >= lower_bound_connected(n, k).unwrap());
        prop_assert_eq!(trace.covered_by(trace.len()).len(), n);

        let total: usize = trace.increments.iter().map(Vec::len).sum();
        prop_assert_eq!(total, n);
        prop_assert_eq!(trace.increment(1).len(), g.degree(trace.pick(1)) + 1);
        prop_assert_eq!(g.degree(trace.pick(1)), k);
        for i in 2..=trace.len() {
            prop_assert!(trace.increment(i).len() <= k);
            let p = trace.witnesses[i - 2];
            prop_assert!(trace.in_covered(p, i - 1));
            prop_assert!(g.has_edge(p, trace.pick(i)));
        }
        prop_assert_eq!(greedy_expand(&g).unwrap(), trace);
    }

    #[test]
    fn oracle_matches_enumeration(g in arb_graph(12)) {
        let result = alpha_exact(&g).unwrap();
        prop_assert_eq!(result.alpha, naive_alpha(&g));
        prop_assert_eq!(result.witness.len(), result.alpha);
        prop_assert!(g.is_independent_set(&result.witness));
        prop_assert!(is_maximal_independent(&g, &result.witness));
    }

    #[test]
    fn connected_certificates_verify(g in arb_connected(2, 40)) {
        let cert = solve_connected(&g).unwrap();
        prop_assert!(verify_certificate(&g, &cert));
        prop_assert!(cert.set.len() >= cert.guarantee);
        prop_assert!(cert.guarantee >= lower_bound_connected(g.order(), g.max_degree()).unwrap());
    }

    #[test]
    fn general_certificates_verify(g in arb_graph(40)) {
        let cert = solve_general(&g).unwrap();
        prop_assert!(verify_certificate(&g, &cert));
        prop_assert!(cert.set.len() >= bounds_report(&g).aggregate_lower);
    }

    #[test]
    fn aggregate_bounds_are_additive(a in arb_graph(15), b in arb_graph(15)) {
        let (ra, rb) = (bounds_report(&a), bounds_report(&b));
        let union = bounds_report(&a.disjoint_union(&b));
        prop_assert_eq!(union.aggregate_lower, ra.aggregate_lower + rb.aggregate_lower);
        prop_assert_eq!(union.aggregate_upper, ra.aggregate_upper + rb.aggregate_upper);
        prop_assert_eq!(union.caro_wei, ra.caro_wei + rb.caro_wei);
        prop_assert_eq!(union.singleton_count, ra.singleton_count + rb.singleton_count);
    }
}

#[test]
fn basic_families_classify() {
    for n in 1..=12 {
        assert_eq!(
            gen_basic(BasicFamily::Complete, n).unwrap().classify().unwrap(),
            if n == 1 { GraphClass::Singleton } else { GraphClass::Complete }
        );
    }
    for n in 4..=12 {
        assert_eq!(gen_basic(BasicFamily::Cycle, n).unwrap().classify().unwrap(), GraphClass::Cycle);
    }
    for n in 3..=12 {
        assert_eq!(gen_basic(BasicFamily::Path, n).unwrap().classify().unwrap(), GraphClass::Path);
    }
    assert_eq!(gen_basic(BasicFamily::Cycle, 3).unwrap().classify().unwrap(), GraphClass::Complete);
    assert_eq!(gen_basic(BasicFamily::Path, 2).unwrap().classify().unwrap(), GraphClass::Complete);
}

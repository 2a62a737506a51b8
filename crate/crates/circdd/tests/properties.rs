//! Property tests for the invariants that quantify over inputs.

use circdd::arith::gcd;
use circdd::circulant::{
    canonicalize, make_graph, multiply, CirculantGraph, GeneratingSet,
};
use proptest::prelude::*;

fn arb_order() -> impl Strategy<Value = u64> {
    7u64..5_000
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalize_is_idempotent_and_order_insensitive(
        n in arb_order(),
        raw in prop::collection::vec(1u64..50_000, 1..6),
        seed in any::<u64>(),
    ) {
        let Ok(once) = canonicalize(n, &raw) else { return Ok(()) };
        let twice = canonicalize(n, &once).unwrap();
        prop_assert_eq!(&once, &twice);
        // permuting the input never changes the canonical output
        let mut shuffled = raw.clone();
        let len = shuffled.len();
        let mut state = seed | 1;
        for i in (1..len).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state as usize) % (i + 1));
        }
        prop_assert_eq!(once, canonicalize(n, &shuffled).unwrap());
    }

    #[test]
    fn unit_multiplication_preserves_diameter(
        n in 7u64..10_000,
        gens in prop::collection::vec(1u64..5_000, 2..4),
        u in 2u64..10_000,
    ) {
        let Ok(gs) = GeneratingSet::new(n, &gens, false) else { return Ok(()) };
        let u = u % n;
        if u == 0 || gcd(u, n) != 1 { return Ok(()); }
        let Ok(image) = multiply(&gs, u) else { return Ok(()) };
        let d1 = CirculantGraph::from_genset(gs).diameter();
        let d2 = CirculantGraph::from_genset(image).diameter();
        prop_assert_eq!(d1, d2);
    }

    #[test]
    fn distance_profile_is_symmetric(
        n in 7u64..3_000,
        gens in prop::collection::vec(1u64..1_500, 1..4),
    ) {
        let degree = 2 * gens.len() as u32;
        let Ok(graph) = make_graph(n, &gens, degree) else { return Ok(()) };
        let prof = graph.distances();
        for v in 1..n {
            prop_assert_eq!(prof.get(v), prof.get(n - v));
        }
        prop_assert_eq!(prof.diameter(), graph.diameter());
    }

    #[test]
    fn ball_sizes_respect_the_upper_bound(
        n in 7u64..3_000,
        gens in prop::collection::vec(1u64..1_500, 1..4),
        odd in any::<bool>(),
    ) {
        let n = if odd && n % 2 == 1 { n + 1 } else { n };
        let degree = 2 * gens.len() as u32 + u32::from(odd);
        let Ok(graph) = make_graph(n, &gens, degree) else { return Ok(()) };
        for (t, &count) in graph.ball_sizes().iter().enumerate() {
            let bound = circdd::bounds::m_ac(degree, t as u64).unwrap();
            prop_assert!(count <= bound, "|B_{t}| = {count} > M_AC = {bound}");
        }
    }

    #[test]
    fn primitive_enumeration_is_closed_and_equidistant(
        n in 11u64..4_000,
        gens in prop::collection::vec(2u64..2_000, 2..4),
    ) {
        // force a primitive input
        let mut gens = gens;
        gens.push(1);
        let Ok(gs) = GeneratingSet::new(n, &gens, false) else { return Ok(()) };
        let graph = CirculantGraph::from_genset(gs.clone());
        let sets = circdd::circulant::enumerate_primitive_gensets(&graph).unwrap();
        prop_assert!(!sets.is_empty());
        prop_assert!(sets.len() <= gs.dimension());
        let diam = graph.diameter();
        for s in sets {
            prop_assert!(s.is_primitive());
            prop_assert_eq!(CirculantGraph::from_genset(s).diameter(), diam);
        }
    }

    #[test]
    fn find_multiplier_matches_exhaustive_scan(
        n in 7u64..300,
        gens in prop::collection::vec(1u64..150, 2..4),
        u in 1u64..300,
    ) {
        let Ok(a) = GeneratingSet::new(n, &gens, false) else { return Ok(()) };
        let u = u % n;
        if u == 0 || gcd(u, n) != 1 { return Ok(()); }
        let Ok(b) = multiply(&a, u) else { return Ok(()) };
        let got = circdd::circulant::find_multiplier(n, &a, &b);
        let oracle = (1..n)
            .filter(|&x| gcd(x, n) == 1)
            .find(|&x| multiply(&a, x).map_or(false, |img| img == b));
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn lattice_covering_agrees_with_bfs(
        n in 10u64..4_000,
        gens in prop::collection::vec(1u64..2_000, 2..4),
    ) {
        let f = gens.len();
        let Ok(gs) = GeneratingSet::new(n, &gens, false) else { return Ok(()) };
        if gs.dimension() != f { return Ok(()); }
        let graph = CirculantGraph::from_genset(gs.clone());
        let diam = graph.diameter() as u64;
        let basis = circdd::lattice::kernel_lattice(n, gs.gens()).unwrap();
        prop_assert_eq!(circdd::lattice::covering_radius(&basis).unwrap(), diam);
    }
}

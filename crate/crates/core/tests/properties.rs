use proptest::prelude::*;
use rothlab::graph::{parse_graph6, emit_graph6};
use rothlab::report::analyze;
use rothlab::roth::{s_roth_oracle, VerdictReason};
use rothlab::spectra::mu;
use rothlab::{Biadjacency, CompositeInstance, Graph};

fn graph(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut b = bits.iter();
    for i in 0..n {
        for j in i + 1..n {
            if *b.next().unwrap_or(&false) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

prop_compose! {
    fn arb_graph(max_n: usize)(n in 1..=max_n)(bits in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2), n in Just(n)) -> Graph {
        graph(n, &bits)
    }
}

prop_compose! {
    /// Valid instances only: scaffold rows and columns nonempty, H connected.
    fn arb_instance()(s in 1usize..6, t in 1usize..6)(
        k in proptest::collection::vec(proptest::bool::weighted(0.7), s * t),
        bits in proptest::collection::vec(any::<bool>(), t * (t - 1) / 2),
        complete in any::<bool>(),
        s in Just(s), t in Just(t),
    ) -> Option<CompositeInstance> {
        let g = graph(t, &bits);
        let b = if complete {
            Biadjacency::complete(t, s)
        } else {
            let rows: Vec<Vec<u8>> = (0..t).map(|i| (0..s).map(|c| k[i * s + c] as u8).collect()).collect();
            Biadjacency::from_rows(&rows).ok()?
        };
        CompositeInstance::compose(s, &g, Some(&b)).ok()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn roth_implies_simple(inst in arb_instance()) {
        let Some(inst) = inst else { return Ok(()) };
        let v = s_roth_oracle(&inst).unwrap();
        prop_assert!(!v.is_s_roth || v.multiplicity == 1);
        prop_assert_eq!(v.is_s_roth, v.reason == VerdictReason::SignedEigenvector);
        let norm: f64 = v.eigenvector.iter().map(|x| x * x).sum();
        prop_assert!((norm - 1.0).abs() < 1e-9);
    }

    #[test]
    fn reports_are_consistent(inst in arb_instance()) {
        let Some(inst) = inst else { return Ok(()) };
        let r = analyze(&inst).unwrap();
        prop_assert!(r.is_consistent(), "{}", emit_graph6(inst.h()));
    }

    #[test]
    fn verdict_survives_relabelling(inst in arb_instance(), seed in any::<u64>()) {
        let Some(inst) = inst else { return Ok(()) };
        // reverse T and rotate S; the verdict must not move
        let (t, s) = (inst.t(), inst.s());
        let r = (seed as usize) % s;
        let perm: Vec<usize> = (0..t).map(|i| t - 1 - i).chain((0..s).map(|k| t + (k + r) % s)).collect();
        let h2 = inst.h().relabel(&perm);
        let s_set: Vec<usize> = (t..t + s).map(|v| perm[v]).collect();
        let other = CompositeInstance::from_graph(&h2, &s_set).unwrap();
        let (a, b) = (s_roth_oracle(&inst).unwrap(), s_roth_oracle(&other).unwrap());
        prop_assert_eq!(a.is_s_roth, b.is_s_roth);
        prop_assert!((a.mu - b.mu).abs() < 1e-9);
    }

    #[test]
    fn adding_edges_never_lowers_mu(g in arb_graph(8), extra in proptest::collection::vec((0usize..8, 0usize..8), 1..6)) {
        let mut g = g;
        let mut prev = mu::<f64>(&g).unwrap();
        for (u, v) in extra {
            let (u, v) = (u % g.n(), v % g.n());
            if u == v || g.has_edge(u, v) {
                continue;
            }
            g.add_edge(u, v).unwrap();
            let next = mu::<f64>(&g).unwrap();
            prop_assert!(next >= prev - 1e-9);
            prev = next;
        }
    }

    #[test]
    fn mu_below_min_degree(g in arb_graph(9)) {
        if g.n() < 2 || !g.is_connected() {
            return Ok(());
        }
        prop_assert!(mu::<f64>(&g).unwrap() < g.min_degree() as f64);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

use mdlab::analysis::{block_decomposition, find_matching_cuts, forced_classes, theta_classes};
use mdlab::coloring::{is_md_coloring, md_check};
use mdlab::graph::{canonical_form, is_isomorphic};
use mdlab::products::{cartesian_md_coloring, product, ProductKind};
use mdlab::solver::{md_lower_bound, md_oracle, md_upper_bound, Direction};
use mdlab::{from_graph6, md_exact, to_graph6, Graph, SearchConfig};
use proptest::prelude::*;

/// A connected graph: a random tree plus a random set of extra edges.
fn connected(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            let pairs = n * (n - 1) / 2;
            (Just(n), parents, prop::collection::vec(0..pairs, 0..=max_extra))
        })
        .prop_map(|(n, parents, extra)| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edges = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .chain(extra.iter().map(|&k| all[k]))
                .collect::<std::collections::BTreeSet<_>>();
            Graph::new(n, edges).unwrap()
        })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in connected(12, 20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in connected(8, 10).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = permuted(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn solver_matches_oracle(g in connected(7, 5).prop_filter("oracle size", |g| g.m() <= 10)) {
        let cfg = SearchConfig::default();
        prop_assert_eq!(md_exact(&g, &cfg).unwrap().value, md_oracle(&g).unwrap());
    }

    #[test]
    fn certificate_and_bounds(g in connected(8, 8)) {
        let cfg = SearchConfig::default();
        let r = md_exact(&g, &cfg).unwrap();
        prop_assert_eq!(r.certificate.k(), r.value);
        prop_assert!(is_md_coloring(&g, &r.certificate).unwrap().0);
        let (upper, _) = md_upper_bound(&g, &cfg).unwrap();
        let (lower, _) = md_lower_bound(&g).unwrap();
        prop_assert!(lower <= r.value && r.value <= upper, "{} <= {} <= {}", lower, r.value, upper);
    }

    #[test]
    fn configurations_agree(g in connected(7, 8)) {
        let full = md_exact(&g, &SearchConfig::default()).unwrap().value;
        let plain = md_exact(&g, &SearchConfig::plain()).unwrap().value;
        let up = SearchConfig { direction: Direction::Ascending, ..SearchConfig::default() };
        prop_assert_eq!(full, plain);
        prop_assert_eq!(full, md_exact(&g, &up).unwrap().value);
    }

    #[test]
    fn adding_an_edge_never_raises_md(g in connected(7, 6), pick in any::<prop::sample::Index>()) {
        let n = g.n();
        let missing: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        prop_assume!(!missing.is_empty());
        let e = missing[pick.index(missing.len())];
        let bigger = Graph::new(n, g.edges().iter().copied().chain([e])).unwrap();
        let cfg = SearchConfig::default();
        prop_assert!(md_exact(&bigger, &cfg).unwrap().value <= md_exact(&g, &cfg).unwrap().value);
    }

    #[test]
    fn merging_keeps_md(g in connected(8, 6)) {
        let r = md_exact(&g, &SearchConfig::default()).unwrap();
        for k in 1..=r.value {
            let merged = r.certificate.merge_to_k(k).unwrap();
            prop_assert!(md_check(&g, merged.colors()));
        }
    }

    #[test]
    fn md_is_sum_over_blocks(g in connected(9, 4)) {
        let cfg = SearchConfig::default();
        let whole = md_exact(&g, &cfg).unwrap().value;
        let sum: usize = block_decomposition(&g).unwrap().blocks.iter().map(|b| md_exact(&b.graph, &cfg).unwrap().value).sum();
        prop_assert_eq!(whole, sum);
    }

    #[test]
    fn theta_classes_refine_forced_classes(g in connected(8, 10)) {
        let theta = theta_classes(&g);
        let forced = forced_classes(&g);
        prop_assert!(forced.len() <= theta.len());
        for class in &theta.classes {
            let owner = forced.class_of[class[0]];
            prop_assert!(class.iter().all(|&e| forced.class_of[e] == owner));
        }
    }

    #[test]
    fn matching_cuts_are_matchings(g in connected(9, 6)) {
        for cut in find_matching_cuts(&g, false).unwrap() {
            let mut seen = 0u64;
            for &e in &cut {
                let (u, v) = g.edge(e);
                prop_assert!(seen & (1 << u | 1 << v) == 0);
                seen |= 1 << u | 1 << v;
            }
        }
    }

    #[test]
    fn cartesian_coloring_is_md(a in connected(4, 2), b in connected(4, 2)) {
        let cfg = SearchConfig::default();
        let (ra, rb) = (md_exact(&a, &cfg).unwrap(), md_exact(&b, &cfg).unwrap());
        let c = cartesian_md_coloring(&a, &ra.certificate, &b, &rb.certificate).unwrap();
        let p = product(&a, &b, ProductKind::Cartesian).unwrap();
        prop_assert_eq!(c.k(), ra.value + rb.value);
        prop_assert!(md_check(&p, c.colors()));
    }
}

use proptest::prelude::*;
use ramseylab::{coloring, graph6};
use ramseylab_core::{Color, EdgeColoring, Graph};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..80).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn coloring_round_trip(g in graph_strategy(), seed in any::<u64>()) {
        let c = EdgeColoring::from_fn(&g, |(u, v)| {
            if (seed >> ((u * 7 + v) % 64)) & 1 == 1 { Color::Red } else { Color::Blue }
        });
        let text = coloring::format(&c);
        let back = coloring::parse_for(&text, &g).unwrap().unwrap();
        prop_assert_eq!(back, c);
    }
}

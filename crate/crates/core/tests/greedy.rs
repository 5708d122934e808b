mod common;

use burning::exact::exact_burning_number;
use burning::graph::validate_schedule;
use burning::greedy::{greedy_burning, TieBreak};
use burning::Graph;
use common::{arb_graph, floyd};
use proptest::prelude::*;

fn tie_break() -> impl Strategy<Value = TieBreak> {
    prop_oneof![Just(TieBreak::MinIndex), Just(TieBreak::Farthest)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn within_three_times_optimal(g in arb_graph(12), tb in tie_break()) {
        let res = greedy_burning(&g, tb).unwrap();
        let b = exact_burning_number(&g, g.vertex_count()).unwrap().value;
        prop_assert!(b <= res.r && res.r <= 3 * b, "b = {}, r = {}", b, res.r);
        prop_assert_eq!(res.schedule.horizon(), res.r);
        prop_assert!(validate_schedule(&g, &res.schedule).unwrap().is_valid());
    }

    /// Center `i` was uncovered when chosen, so it lies beyond the ball of
    /// every earlier center `j`; the last third are thus pairwise at least
    /// `ceil(2r/3)` apart.
    #[test]
    fn centers_are_spread(g in arb_graph(12), tb in tie_break()) {
        let res = greedy_burning(&g, tb).unwrap();
        let d = floyd(&g);
        let c = &res.centers_in_order;
        let r = res.r;
        for i in 0..r {
            for j in 0..i {
                prop_assert!(d[c[i]][c[j]] > j, "{:?}", c);
                if j >= r - r / 3 {
                    prop_assert!(d[c[i]][c[j]] >= (2 * r).div_ceil(3));
                }
            }
        }
    }
}

#[test]
fn deterministic() {
    let g = Graph::cycle(11).disjoint_union(&Graph::path(7));
    for tb in [TieBreak::MinIndex, TieBreak::Farthest] {
        let a = greedy_burning(&g, tb).unwrap();
        let b = greedy_burning(&g, tb).unwrap();
        assert_eq!(a.centers_in_order, b.centers_in_order);
    }
}

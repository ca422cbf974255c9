use ng_core::bounds::{check_csikvari_terpai, check_nosal, check_ramsey_sign, run_battery_on, SpectralPair};
use ng_core::Graph;

/// Every labelled graph on 7 vertices, checked against the spectrum-only bounds.
#[test]
fn all_order_seven_graphs() {
    for mask in 0..1u64 << 21 {
        let g = Graph::from_pair_mask(7, mask).unwrap();
        let p = SpectralPair::new(&g).unwrap();
        for r in check_nosal(&p) {
            assert!(r.satisfied, "{} on {}", r.bound_id, g.to_graph6());
        }
        assert!(check_csikvari_terpai(&p).satisfied);
    }
}

#[test]
fn all_order_four_graphs_full_battery() {
    for mask in 0..1u64 << 6 {
        let g = Graph::from_pair_mask(4, mask).unwrap();
        let p = SpectralPair::new(&g).unwrap();
        assert!(check_ramsey_sign(&p, 1).unwrap().satisfied);
        for r in run_battery_on(&p, 4).unwrap() {
            assert!(!r.is_violation(), "{} {:?} on {}", r.bound_id, r.params, g.to_graph6());
        }
    }
}

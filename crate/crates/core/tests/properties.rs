mod common;

use branchpair::branchings::{
    count_out_branchings, enumerate_in_branchings, enumerate_out_branchings, find_good_pair,
    find_strong_arc_decomposition, good_pair_matrix, Branching,
};
use branchpair::connectivity::arc_strong_connectivity;
use branchpair::digraph::{
    are_isomorphic, is_semicomplete, parse_digraph, recognize_semicomplete_split, to_arc_list, Digraph, VertexId,
};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::arc_list;

/// Loopless digraphs on 1..=max_n vertices with at most `max_arcs` arcs;
/// parallel arcs only when the multigraph flag comes up.
fn digraphs(max_n: usize, max_arcs: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, any::<bool>()).prop_flat_map(move |(n, multigraph)| {
        prop::collection::vec((0..n, 0..n), 0..=max_arcs).prop_map(move |raw| {
            let mut arcs: Vec<(usize, usize)> = Vec::new();
            for (t, h) in raw {
                if t != h && (multigraph || !arcs.contains(&(t, h))) {
                    arcs.push((t, h));
                }
            }
            Digraph::new(n, &arcs, !multigraph).unwrap()
        })
    })
}

fn ids(b: &Branching) -> Vec<usize> {
    b.arcs.iter().map(|a| a.0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn reverse_is_an_involution(d in digraphs(6, 14)) {
        prop_assert_eq!(d.reverse().reverse().arc_pairs(), d.arc_pairs());
        let flipped: Vec<_> = d.arc_pairs().into_iter().map(|(t, h)| (h, t)).collect();
        prop_assert_eq!(d.reverse().arc_pairs(), flipped);
    }

    #[test]
    fn semicompleteness_survives_reversal(d in digraphs(6, 20)) {
        prop_assert_eq!(is_semicomplete(&d), is_semicomplete(&d.reverse()));
    }

    #[test]
    fn split_recognition_matches_oracle(d in digraphs(6, 24)) {
        let found = recognize_semicomplete_split(&d);
        if let Some(p) = &found {
            prop_assert!(p.validate(&d, true));
        }
        prop_assert_eq!(found.is_some(), common::is_semicomplete_split(d.n(), &arc_list(&d)));
    }

    #[test]
    fn connectivity_matches_oracle(d in digraphs(5, 14)) {
        let cert = arc_strong_connectivity(&d);
        prop_assert_eq!(cert.k, common::arc_strong_connectivity(d.n(), &arc_list(&d)));
        prop_assert!(cert.witness_is_valid(&d));
        prop_assert_eq!(arc_strong_connectivity(&d.reverse()).k, cert.k);
    }

    #[test]
    fn adding_an_arc_never_lowers_connectivity(d in digraphs(5, 12), t in 0usize..5, h in 0usize..5) {
        let (t, h) = (t % d.n(), h % d.n());
        prop_assume!(t != h && (!d.is_simple() || d.find_arc(VertexId(t), VertexId(h)).is_none()));
        let bigger = d.with_arc(VertexId(t), VertexId(h)).unwrap();
        prop_assert!(arc_strong_connectivity(&bigger).k >= arc_strong_connectivity(&d).k);
    }

    #[test]
    fn enumeration_agrees_with_determinant(d in digraphs(5, 12)) {
        let arcs = arc_list(&d);
        for r in d.vertices() {
            let outs = enumerate_out_branchings(&d, r);
            prop_assert_eq!(BigUint::from(outs.len()), count_out_branchings(&d, r));
            for b in &outs {
                let chosen: Vec<_> = ids(b).into_iter().map(|a| arcs[a]).collect();
                prop_assert!(common::is_out_branching(d.n(), r.0, &chosen));
            }
            let ins = enumerate_in_branchings(&d, r);
            prop_assert_eq!(BigUint::from(ins.len()), count_out_branchings(&d.reverse(), r));
        }
    }

    #[test]
    fn good_pair_verdicts_are_sound_and_complete(d in digraphs(4, 9)) {
        for u in d.vertices() {
            for v in d.vertices() {
                let found = find_good_pair(&d, u, v).unwrap();
                if let Some(pair) = &found {
                    prop_assert!(common::check_pair(&d, pair));
                    prop_assert_eq!((pair.out_root(), pair.in_root()), (u, v));
                }
                prop_assert_eq!(found.is_some(), common::good_pair_exists(&d, u.0, v.0));
            }
        }
    }

    #[test]
    fn good_pairs_are_dual_under_reversal(d in digraphs(5, 12)) {
        let r = d.reverse();
        for u in d.vertices() {
            for v in d.vertices() {
                let forward = find_good_pair(&d, u, v).unwrap();
                let backward = find_good_pair(&r, v, u).unwrap();
                prop_assert_eq!(forward.is_some(), backward.is_some());
                if let Some(pair) = forward {
                    // the same arc sets, roles swapped, work in the reverse
                    let (out_ids, in_ids) = common::pair_ids(&pair);
                    prop_assert!(common::is_good_pair(&r, v.0, u.0, &in_ids, &out_ids));
                }
            }
        }
    }

    #[test]
    fn good_pairs_survive_arc_addition(d in digraphs(5, 12), t in 0usize..5, h in 0usize..5) {
        let (t, h) = (t % d.n(), h % d.n());
        prop_assume!(t != h && (!d.is_simple() || d.find_arc(VertexId(t), VertexId(h)).is_none()));
        let bigger = d.with_arc(VertexId(t), VertexId(h)).unwrap();
        let before = good_pair_matrix(&d).to_bools();
        let after = good_pair_matrix(&bigger).to_bools();
        for (row_b, row_a) in before.iter().zip(&after) {
            for (&b, &a) in row_b.iter().zip(row_a) {
                prop_assert!(!b || a);
            }
        }
    }

    #[test]
    fn decomposition_search_matches_oracle(d in digraphs(5, 11)) {
        let found = find_strong_arc_decomposition(&d).unwrap();
        prop_assert_eq!(found.is_some(), common::has_strong_arc_decomposition(d.n(), &arc_list(&d)));
        if let Some(dec) = found {
            prop_assert!(dec.validate(&d));
            // each side holds an out-branching and an in-branching everywhere
            prop_assert!(good_pair_matrix(&d).all_good());
        }
    }

    #[test]
    fn arc_list_roundtrip(d in digraphs(6, 14)) {
        let back = parse_digraph(&to_arc_list(&d, &["generated"])).unwrap();
        let names = |g: &Digraph| -> Vec<(String, String)> {
            let name = |v: VertexId| g.label(v).map_or_else(|| v.0.to_string(), str::to_string);
            g.arcs().iter().map(|a| (name(a.tail), name(a.head))).collect()
        };
        prop_assert_eq!(names(&back), names(&d));
        prop_assert_eq!(back.is_simple(), d.is_simple());
        let touched = d.vertices().filter(|&v| d.out_degree(v) + d.in_degree(v) > 0).count();
        prop_assert_eq!(back.n(), touched);
    }

    #[test]
    fn relabelled_copies_are_isomorphic(d in digraphs(6, 14), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p < d.n()).collect();
        let moved: Vec<_> = d.arc_pairs().into_iter().map(|(t, h)| (perm[t], perm[h])).collect();
        let copy = Digraph::new(d.n(), &moved, d.is_simple()).unwrap();
        let map = are_isomorphic(&d, &copy);
        prop_assert!(map.is_some());
        let map = map.unwrap();
        for u in d.vertices() {
            for v in d.vertices() {
                prop_assert_eq!(d.multiplicity(u, v), copy.multiplicity(map[u.0], map[v.0]));
            }
        }
        prop_assert!(are_isomorphic(&copy, &d).is_some());
    }

    #[test]
    fn isomorphism_is_symmetric(a in digraphs(4, 8), b in digraphs(4, 8)) {
        prop_assert_eq!(are_isomorphic(&a, &b).is_some(), are_isomorphic(&b, &a).is_some());
    }
}

use std::collections::BTreeMap;

use proptest::prelude::*;
use zkmorse::cw_homology::{betti_moment_angle, support_partition_check, wedge_formula, CellModel, Prime};
use zkmorse::morse::{
    build_matching, compatible_relabeling, critical_direct, critical_recursive, l_monotonicity_violations, morse_betti,
    morse_histogram, order_to_relabeling, verify_acyclic, Sign, SignVector, DEFAULT_ORDER_BUDGET,
};
use zkmorse::simplicial::generators::{flag_of_graph, shifted_random};
use zkmorse::vertex_decomp::is_vertex_decomposable;
use zkmorse::{FaceSet, Graph, SimplicialComplex};

fn complex_on(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        (Just(m), prop::collection::vec(0u32..1 << m, 0..=m + 2), any::<bool>()).prop_map(|(m, masks, void)| {
            if masks.is_empty() {
                return if void { SimplicialComplex::void(m) } else { SimplicialComplex::irrelevant(m) };
            }
            let faces: Vec<FaceSet> = masks.into_iter().map(FaceSet::from_bits).collect();
            SimplicialComplex::from_facets(m, &faces, false).unwrap()
        })
    })
}

/// Complexes in which every singleton is a face.
fn complex_with_singletons(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    complex_on(max_m).prop_map(|k| {
        let mut faces: Vec<FaceSet> = k.facets().to_vec();
        faces.extend((1..=k.m()).map(FaceSet::singleton));
        SimplicialComplex::from_facets(k.m(), &faces, false).unwrap()
    })
}

fn graph_on(max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(any::<bool>(), m * (m - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e).collect();
            Graph::from_edges(m, &edges).unwrap()
        })
    })
}

fn sign_vector(max_len: usize) -> impl Strategy<Value = SignVector> {
    prop::collection::vec(prop_oneof![Just(Sign::Minus), Just(Sign::Plus), Just(Sign::Bullet)], 0..=max_len)
        .prop_map(SignVector::new)
}

fn alternating(map: &BTreeMap<usize, usize>) -> i64 {
    map.iter().map(|(&d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dual_is_an_involution(k in complex_on(7)) {
        prop_assert_eq!(k.alexander_dual().alexander_dual(), k);
    }

    #[test]
    fn minimal_nonfaces_are_complements_of_dual_facets(k in complex_on(7)) {
        let m = k.m();
        let dual = k.alexander_dual();
        let mut complements: Vec<FaceSet> = dual.facets().iter().map(|f| f.complement(m)).collect();
        complements.sort();
        if k.is_full_simplex() {
            prop_assert!(dual.is_void() && k.minimal_nonfaces().is_empty());
        } else {
            prop_assert_eq!(k.minimal_nonfaces(), complements);
        }
    }

    #[test]
    fn deletion_and_link_swap_under_duality(k in complex_on(6), v in 1usize..=6) {
        prop_assume!(v <= k.m());
        let dual = k.alexander_dual();
        prop_assert_eq!(k.deletion(v).unwrap().alexander_dual(), dual.link(v).unwrap());
        prop_assert_eq!(k.link(v).unwrap().alexander_dual(), dual.deletion(v).unwrap());
    }

    #[test]
    fn relabel_round_trips(k in complex_on(6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (1..=k.m()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let perm = order_to_relabeling(&order);
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p - 1] = i + 1;
        }
        prop_assert_eq!(k.relabel(&perm).unwrap().relabel(&inverse).unwrap(), k);
    }

    #[test]
    fn support_partition_holds(k in complex_on(6)) {
        prop_assert!(support_partition_check(&k));
    }

    #[test]
    fn sign_vector_text_and_cell_round_trip(c in sign_vector(8), n in 1usize..=3) {
        prop_assert_eq!(c.to_string().parse::<SignVector>().unwrap(), c.clone());
        prop_assert_eq!(SignVector::from_cell(&c.to_cell(n), n), Some(c.clone()));
        prop_assert_eq!(c.to_cell(n).dim(n), c.dim(n));
    }

    #[test]
    fn tilde_is_idempotent(c in sign_vector(8)) {
        let t = c.tilde();
        prop_assert_eq!(t.tilde(), t.clone());
        prop_assert_eq!(t.supp(), c.supp());
        prop_assert_eq!(t.j_index(), c.j_index());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn routes_agree_and_matching_is_acyclic(k in complex_on(5), n in 1usize..=2) {
        let model = CellModel::moment_angle(&k, n).unwrap();
        let matching = build_matching(&model);
        prop_assert!(matching.is_valid(&model));
        prop_assert!(verify_acyclic(&model, &matching));
        prop_assert!(l_monotonicity_violations(&model, &matching).is_empty());
        prop_assert_eq!(critical_direct(&k, n).unwrap(), critical_recursive(&k));
    }

    #[test]
    fn euler_characteristics_agree(k in complex_on(5), n in 1usize..=3) {
        let table = betti_moment_angle(&k, n, Prime::TWO).unwrap();
        prop_assert_eq!(table.euler_from_cells(), table.euler_from_ranks());
        let morse = morse_histogram(&critical_recursive(&k), n);
        prop_assert_eq!(alternating(&morse), table.euler_from_cells());
    }

    #[test]
    fn morse_counts_bound_betti_numbers(k in complex_on(5), n in 1usize..=2) {
        let morse = morse_betti(&k, n);
        for p in [Prime::TWO, Prime::THREE] {
            for (d, b) in betti_moment_angle(&k, n, p).unwrap().nonzero() {
                prop_assert!(morse.get(&(d as usize)).copied().unwrap_or(0) >= b);
            }
        }
    }

    #[test]
    fn shifted_complexes_have_decomposable_duals(m in 1usize..=7, seed in any::<u64>()) {
        let k = shifted_random(m, seed).unwrap();
        prop_assert!(k.is_shifted());
        prop_assert!(is_vertex_decomposable(&k.alexander_dual()));
    }

    #[test]
    fn chordal_flag_complexes_have_decomposable_duals(g in graph_on(7)) {
        prop_assume!(g.is_chordal());
        let k = flag_of_graph(&g).unwrap();
        prop_assert!(k.is_flag());
        prop_assert!(is_vertex_decomposable(&k.alexander_dual()));
    }

    #[test]
    fn compatible_labeling_realises_betti_numbers(k in complex_with_singletons(5), n in 1usize..=2) {
        prop_assume!(is_vertex_decomposable(&k.alexander_dual()));
        let (_, relabeled) = compatible_relabeling(&k, DEFAULT_ORDER_BUDGET).unwrap().expect("order exists");
        let oracle: BTreeMap<usize, usize> = betti_moment_angle(&k, n, Prime::TWO)
            .unwrap()
            .nonzero()
            .into_iter()
            .map(|(d, r)| (d as usize, r))
            .collect();
        prop_assert_eq!(&morse_betti(&relabeled, n), &oracle);
        prop_assert_eq!(&wedge_formula(&k, n, Prime::TWO).unwrap().unreduced(true), &oracle);
    }
}

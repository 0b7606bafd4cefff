//! Randomized invariants.

mod common;

use penthex_core::boundary_code::all_codes_up_to_rotation;
use penthex_core::oracle::default_budget;
use penthex_core::patch_graph::{canonical_form, cut, equivalent, one_bend_shortest_paths, reverse_cut, PatchRecord};
use penthex_core::sequence_ops::{apply, apply_anchored, enumerate_ops, iv_closure};
use penthex_core::{parse, BoundaryCode, Oracle, SequenceList, Solver, SolverConfig};
use proptest::prelude::*;

fn code_strategy(min: usize, max: usize) -> impl Strategy<Value = BoundaryCode> {
    prop::collection::vec(prop_oneof![Just(2u8), Just(3u8)], min..=max).prop_map(|v| BoundaryCode::new(v).unwrap())
}

/// Codes with the given `f5` range, built from digit counts: `d2 = d3 + 6 - f5`.
fn code_with_f5(f5: std::ops::RangeInclusive<i64>, max_d3: usize) -> impl Strategy<Value = BoundaryCode> {
    (f5, 0..=max_d3)
        .prop_filter("at least five digits", |&(f5, d3)| 2 * d3 as i64 + 6 - f5 >= 5)
        .prop_flat_map(|(f5, d3)| {
            let d2 = (d3 as i64 + 6 - f5) as usize;
            let mut v = vec![3u8; d3];
            v.extend(std::iter::repeat_n(2, d2));
            Just(v).prop_shuffle()
        })
        .prop_map(|v| BoundaryCode::new(v).unwrap())
}

fn list_strategy() -> impl Strategy<Value = SequenceList> {
    prop::collection::vec(code_strategy(5, 16), 0..=3).prop_map(SequenceList::new)
}

proptest! {
    #[test]
    fn display_parses_back(list in list_strategy()) {
        prop_assume!(!list.is_empty());
        let text = list.to_string().replace(" | ", "|");
        prop_assert_eq!(parse(&text).unwrap(), list);
    }

    #[test]
    fn canonical_rotation_is_a_class_invariant(c in code_strategy(1, 30), k in 0usize..30) {
        let r = c.rotated(k);
        prop_assert_eq!(c.canonical_rotation(), r.canonical_rotation());
        prop_assert!(c.rotation_equivalent(&r));
        let canon = c.canonical_rotation();
        prop_assert_eq!(canon.canonical_rotation(), canon.clone());
        prop_assert!((0..c.len()).all(|i| c.rotated(i) >= canon));
    }

    #[test]
    fn every_operation_lowers_f5_by_one(list in list_strategy(), d in 1usize..7, pick in any::<prop::sample::Index>()) {
        let ops = enumerate_ops(&list, d);
        prop_assume!(!ops.is_empty());
        let op = ops[pick.index(ops.len())];
        let post = apply(&list, &op).unwrap();
        prop_assert_eq!(post.f5(), list.f5() - 1);
        let (anchored, _) = apply_anchored(&list, &op).unwrap();
        prop_assert_eq!(anchored, post);
    }

    #[test]
    fn iv_closure_is_idempotent(list in list_strategy()) {
        let once = iv_closure(&list);
        prop_assert!(once.items().iter().all(|c| !c.is_pentagon()));
        prop_assert_eq!(iv_closure(&once), once);
    }

    #[test]
    fn solver_agrees_with_the_oracle(c in code_with_f5(0..=3, 4)) {
        let solver = Solver::new().decide(&c, &SolverConfig::default()).unwrap();
        prop_assert_eq!(solver.exists, Oracle::new().exists(&c, default_budget(&c)));
        prop_assert!(solver.stats.max_depth as i64 <= c.f5());
    }

    #[test]
    fn relabelling_keeps_canonical_form(seed in any::<u64>()) {
        let patches = common::patches_up_to(3);
        let p = &patches[(seed as usize) % patches.len()];
        let n = p.vertex_count();
        // a permutation of the vertex labels derived from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let rec = PatchRecord::from(p);
        let mut rotation = vec![Vec::new(); n];
        for (v, nbrs) in rec.rotation.iter().enumerate() {
            rotation[perm[v]] = nbrs.iter().map(|&w| perm[w]).collect();
        }
        let moved = PatchRecord {
            rotation,
            boundary_start: perm[rec.boundary_start],
            boundary_next: perm[rec.boundary_next],
            ..rec
        }
        .to_patch()
        .unwrap();
        prop_assert_eq!(canonical_form(&moved), canonical_form(p));
        prop_assert!(equivalent(&moved, p));
    }
}

#[test]
fn cut_round_trip_on_small_patches() {
    for p in common::patches_up_to(5) {
        let code = SequenceList::single(p.boundary_code());
        for face in p.inner_faces().into_iter().filter(|f| f.len() == 5) {
            for path in one_bend_shortest_paths(&p, &face) {
                let (parts, op) = cut(&p, &face, &path).unwrap();
                let (post, anchor) = apply_anchored(&code, &op).unwrap();
                let codes: Vec<_> = parts.iter().map(|q| q.boundary_code()).collect();
                assert_eq!(codes, post.items(), "{}", p.boundary_code());
                let back = reverse_cut(&parts, &op, &anchor).unwrap();
                assert!(equivalent(&back[0], &p), "{}", p.boundary_code());
            }
        }
    }
}

#[test]
fn hexagonal_base_case_is_exact_on_short_codes() {
    let oracle = Oracle::new();
    for n in 6..=14 {
        for c in all_codes_up_to_rotation(n).into_iter().filter(|c| c.f5() == 0) {
            assert_eq!(oracle.exists_hex(&c), oracle.exists(&c, default_budget(&c)), "{c}");
        }
    }
}

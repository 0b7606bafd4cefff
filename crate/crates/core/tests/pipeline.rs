//! End-to-end behaviour of the public API on documented instances.

mod common;

use penthex_core::oracle::{count_distinct, default_budget, fill_search, SearchConfig};
use penthex_core::patch_graph::{equivalent, fixtures, validate_patch, PatchSetRecord};
use penthex_core::solver::{build_witness, count_solutions, decide, test_recurse};
use penthex_core::{parse, BoundaryCode, Oracle, SequenceList, SolverConfig, SolverError};

fn code(s: &str) -> BoundaryCode {
    s.parse().unwrap()
}

fn witness_cfg() -> SolverConfig {
    SolverConfig { want_witness: true, ..SolverConfig::default() }
}

#[test]
fn decide_examples() {
    assert!(decide(&code("22222"), &witness_cfg()).unwrap().exists);
    assert!(!decide(&code("2222222"), &witness_cfg()).unwrap().exists);
    let ans = decide(&code("322232222"), &witness_cfg()).unwrap();
    assert!(ans.exists);
    assert!(equivalent(&ans.witness.unwrap()[0], &fixtures::pentagon_hexagon()));
    assert_eq!(decide(&code("2323232323"), &SolverConfig::default()).unwrap_err(), SolverError::Unsupported(6));
}

#[test]
fn decide_is_rotation_invariant() {
    let c = code("222323232233");
    let expected = decide(&c, &SolverConfig::default()).unwrap().exists;
    for k in 0..c.len() {
        assert_eq!(decide(&c.rotated(k), &SolverConfig::default()).unwrap().exists, expected, "rotation {k}");
    }
}

#[test]
fn witnesses_realize_rotations_of_the_input() {
    for text in ["222222", "22232223", "222232223", "223223223", "2232322323", "222323232233"] {
        let c = code(text);
        let ans = decide(&c, &witness_cfg()).unwrap();
        assert!(ans.exists, "{text}");
        let ps = ans.witness.unwrap();
        assert_eq!(ps.len(), 1);
        let p = validate_patch(ps[0].graph().clone()).unwrap();
        assert!(p.boundary_code().rotation_equivalent(&c), "{text}");
        assert_eq!(p.f5() as i64, c.f5());
    }
}

#[test]
fn test_recurse_examples() {
    let ans = test_recurse(&parse("222222").unwrap(), 3, &witness_cfg()).unwrap();
    assert!(ans.exists);
    assert!(ans.trace.unwrap().is_empty());
    assert!(test_recurse(&SequenceList::empty(), 1, &witness_cfg()).unwrap().exists);
    let both = test_recurse(&parse("322232222|222222").unwrap(), 6, &witness_cfg()).unwrap();
    assert!(both.exists);
    assert_eq!(both.witness.unwrap().len(), 2);
    assert!(!test_recurse(&parse("22323|222222").unwrap(), 2, &witness_cfg()).unwrap().exists);
}

#[test]
fn replaying_a_trace_from_oracle_patches() {
    let ans = decide(&code("2232322323"), &witness_cfg()).unwrap();
    let trace = ans.trace.unwrap();
    assert!(trace.is_consistent());
    let oracle = Oracle::new();
    let base: Vec<_> = trace.current().items().iter().map(|c| oracle.hex_witness(c).unwrap()).collect();
    let ps = build_witness(&trace, &base).unwrap();
    assert!(ps[0].boundary_code().rotation_equivalent(&code("2232322323")));
}

#[test]
fn counts_match_the_oracle_on_short_codes() {
    for n in 5..=8 {
        for c in penthex_core::boundary_code::all_codes_up_to_rotation(n) {
            if !(0..=4).contains(&c.f5()) {
                continue;
            }
            let solver = count_solutions(&c, 50, &SolverConfig::default()).unwrap();
            assert_eq!(solver, count_distinct(&c, 50), "{c}");
        }
    }
    assert_eq!(count_solutions(&code("222222"), 10, &SolverConfig::default()).unwrap(), 1);
    assert_eq!(count_solutions(&code("22222"), 10, &SolverConfig::default()).unwrap(), 1);
}

#[test]
fn oracle_patches_survive_serialization() {
    let c = code("222323232233");
    let found = fill_search(&c, &SearchConfig::for_code(&c)).unwrap();
    assert!(!found.is_empty());
    let text = serde_json::to_string(&PatchSetRecord::new(&found)).unwrap();
    let back = serde_json::from_str::<PatchSetRecord>(&text).unwrap().to_patches().unwrap();
    assert_eq!(back.len(), found.len());
    for (a, b) in found.iter().zip(&back) {
        assert!(equivalent(a, b));
        assert_eq!(b.boundary_code(), c);
    }
    assert!(Oracle::new().exists(&c, default_budget(&c)));
}

#[test]
fn generated_patches_are_found_by_the_oracle() {
    let oracle = Oracle::new();
    for p in common::patches_up_to(4) {
        let c = p.boundary_code();
        let found = oracle.enumerate(&c, p.face_count(), 1000);
        assert!(found.iter().any(|q| equivalent(q, &p)), "{c}");
    }
}

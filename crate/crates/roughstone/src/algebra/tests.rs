use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::chain::build_c3_power;
use crate::space::ApproximationSpace;
use crate::ternary::build_tp_algebra;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The three-element chain with its star and plus tables written out.
fn c3_by_hand() -> FiniteAlgebra {
    FiniteAlgebra::from_fns(
        labels(&["0", "h", "1"]),
        |a, b| a.min(b),
        |a, b| a.max(b),
        |a| [2, 0, 0][a],
        |a| [2, 2, 0][a],
        0,
        2,
        Some(1),
    )
    .unwrap()
}

/// Four-element Boolean algebra: elements as bitmasks 00 < 01, 10 < 11,
/// star and plus both the complement.
fn boolean4() -> FiniteAlgebra {
    FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "1"]),
        |x, y| x & y,
        |x, y| x | y,
        |x| 3 ^ x,
        |x| 3 ^ x,
        0,
        3,
        None,
    )
    .unwrap()
}

/// The four-element chain 0 < a < b < 1 with its unique Stone structure:
/// a and b are dense (star 0) and dually dense (plus 1).
fn chain4() -> FiniteAlgebra {
    FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "1"]),
        |x, y| x.min(y),
        |x, y| x.max(y),
        |x| [3, 0, 0, 0][x],
        |x| [3, 3, 3, 0][x],
        0,
        3,
        None,
    )
    .unwrap()
}

/// The diamond: three incomparable middles with pairwise meet 0 and
/// join 1. A lattice, but not a distributive one.
fn diamond_m3() -> FiniteAlgebra {
    let meet = |x: usize, y: usize| {
        if x == y {
            x
        } else {
            match (x.min(y), x.max(y)) {
                (0, _) => 0,
                (_, 4) => x.min(y),
                _ => 0,
            }
        }
    };
    let join = |x: usize, y: usize| {
        if x == y {
            x
        } else {
            match (x.min(y), x.max(y)) {
                (0, m) => m,
                (_, 4) => 4,
                _ => 4,
            }
        }
    };
    FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "c", "1"]),
        meet,
        join,
        |_| 0,
        |_| 0,
        0,
        4,
        None,
    )
    .unwrap()
}

fn point() -> FiniteAlgebra {
    FiniteAlgebra::from_tables(
        labels(&["e"]),
        vec![0],
        vec![0],
        vec![0],
        vec![0],
        0,
        0,
        Some(0),
    )
    .unwrap()
}

#[test]
fn construction_rejects_malformed_tables() {
    let err = FiniteAlgebra::from_tables(
        labels(&["0", "1"]),
        vec![0, 0, 0], // wrong shape
        vec![0, 0, 0, 1],
        vec![1, 0],
        vec![1, 0],
        0,
        1,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, AlgebraError::TableShape { op: "meet", .. }));

    let err = FiniteAlgebra::from_tables(
        labels(&["0", "1"]),
        vec![0, 0, 0, 1],
        vec![0, 1, 1, 7], // out of range
        vec![1, 0],
        vec![1, 0],
        0,
        1,
        None,
    )
    .unwrap_err();
    assert_eq!(
        err,
        AlgebraError::OutputOutOfRange {
            op: "join",
            args: vec![1, 1],
            value: 7
        }
    );

    let err = FiniteAlgebra::from_tables(
        labels(&["0", "0"]),
        vec![0, 0, 0, 1],
        vec![0, 1, 1, 1],
        vec![1, 0],
        vec![1, 0],
        0,
        1,
        None,
    )
    .unwrap_err();
    assert_eq!(err, AlgebraError::DuplicateLabel("0".into()));

    let err = FiniteAlgebra::from_tables(labels(&[]), vec![], vec![], vec![], vec![], 0, 0, None)
        .unwrap_err();
    assert_eq!(err, AlgebraError::EmptyCarrier);

    let err = FiniteAlgebra::from_tables(
        labels(&["e"]),
        vec![0],
        vec![0],
        vec![0],
        vec![0],
        0,
        0,
        Some(5),
    )
    .unwrap_err();
    assert_eq!(
        err,
        AlgebraError::ConstantOutOfRange {
            name: "core_h",
            value: 5
        }
    );
}

#[test]
fn c3_passes_every_law() {
    let a = c3_by_hand();
    assert!(a.check_bounded_distributive_lattice().holds());
    assert!(a.check_pseudocomplement().holds());
    assert!(a.check_dual_pseudocomplement().holds());
    assert!(a.check_stone_identities().holds());
    assert!(a.check_regular().holds());
    assert!(a.check_center_boolean().holds());
    assert!(a.check_center_images().holds());
    assert!(a.check_core_decomposition().unwrap().holds());
}

#[test]
fn point_algebra_is_degenerate_but_lawful() {
    let a = point();
    let verdict = a.verify_crdsa();
    assert!(verdict.holds());
    assert_eq!(verdict.core, vec![0]);
    assert_eq!(a.center(), vec![0]);
    assert!(a.atoms().is_empty());
    assert!(a.check_center_boolean().holds());
    assert!(a.check_core_decomposition().unwrap().holds());
}

#[test]
fn diamond_fails_distributivity_at_the_first_middle_triple() {
    let a = diamond_m3();
    let report = a.check_bounded_distributive_lattice();
    assert!(!report.holds());
    let ce = report.counterexample().unwrap();
    assert_eq!(ce.elements, vec![1, 2, 3]);
    // the witness falsifies x∧(y∨z) = (x∧y)∨(x∧z)
    let [x, y, z] = ce.elements[..] else { panic!() };
    assert_ne!(a.meet(x, a.join(y, z)), a.join(a.meet(x, y), a.meet(x, z)));
}

#[test]
fn broken_star_fails_pseudocomplement_at_h_h() {
    let broken = FiniteAlgebra::from_fns(
        labels(&["0", "h", "1"]),
        |a, b| a.min(b),
        |a, b| a.max(b),
        |a| [2, 2, 0][a], // h ↦ 1 instead of h ↦ 0
        |a| [2, 2, 0][a],
        0,
        2,
        Some(1),
    )
    .unwrap();
    let report = broken.check_pseudocomplement();
    assert!(!report.holds());
    let ce = report.counterexample().unwrap();
    assert_eq!(ce.elements, vec![1, 1]);
    // substituting: h ≤ h* holds but h ∧ h ≠ 0
    assert!(broken.leq(1, broken.star(1)));
    assert_ne!(broken.meet(1, 1), broken.zero());
}

#[test]
fn boolean4_is_a_regular_stone_algebra_without_core() {
    let a = boolean4();
    assert!(a.check_bounded_distributive_lattice().holds());
    assert!(a.check_pseudocomplement().holds());
    assert!(a.check_dual_pseudocomplement().holds());
    assert!(a.check_stone_identities().holds());
    assert!(a.check_regular().holds());
    assert_eq!(a.dense_set(), vec![3]); // only 1 is dense
    assert_eq!(a.dual_dense_set(), vec![0]);
    assert!(a.core().is_empty());
    let (ok, core) = a.is_crdsa();
    assert!(!ok);
    assert_eq!(core, None);
    // complement makes every element central
    assert_eq!(a.center(), vec![0, 1, 2, 3]);
    assert!(a.check_center_images().holds());
    assert_eq!(
        a.check_core_decomposition().unwrap_err(),
        AlgebraError::NoUniqueCore { found: 0 }
    );
}

#[test]
fn dense_chain_fails_regularity() {
    let a = chain4();
    assert!(a.check_bounded_distributive_lattice().holds());
    assert!(a.check_pseudocomplement().holds());
    assert!(a.check_dual_pseudocomplement().holds());
    assert!(a.check_stone_identities().holds());
    let report = a.check_regular();
    assert!(!report.holds());
    let ce = report.counterexample().unwrap();
    assert_eq!(ce.elements, vec![2, 1]); // x = b, y = a
                                         // substituting: b ∧ b⁺ = b ≰ a = a ∨ a*
    assert!(!a.leq(a.meet(2, a.plus(2)), a.join(1, a.star(1))));
}

#[test]
fn derived_sets_of_c3() {
    let a = c3_by_hand();
    assert_eq!(a.dense_set(), vec![1, 2]); // {h, 1}
    assert_eq!(a.dual_dense_set(), vec![0, 1]); // {0, h}
    assert_eq!(a.core(), vec![1]);
    assert_eq!(a.center(), vec![0, 2]);
    assert_eq!(a.atoms(), vec![1]);
    let (ok, core) = a.is_crdsa();
    assert!(ok);
    assert_eq!(core, Some(1));
}

#[test]
fn dense_set_of_c3_squared_is_the_upper_quadrant() {
    let a = build_c3_power(2).unwrap();
    let dense: Vec<&str> = a.dense_set().iter().map(|&e| a.label(e)).collect();
    assert_eq!(dense, ["hh", "h1", "1h", "11"]);
    assert!(a.check_core_decomposition().unwrap().holds());
}

#[test]
fn core_decomposition_arithmetic_on_c3() {
    let a = c3_by_hand();
    let h = 1;
    // h** = 1 and h⁺⁺ = 0, so h** ∧ (h⁺⁺ ∨ h) = h
    assert_eq!(a.star(a.star(h)), 2);
    assert_eq!(a.plus(a.plus(h)), 0);
    assert_eq!(a.meet(a.star(a.star(h)), a.join(a.plus(a.plus(h)), h)), h);
    // 1 ∧ (1 ∨ h) = 1
    assert_eq!(a.meet(2, a.join(2, h)), 2);
}

#[test]
fn center_closure_failure_is_witnessed() {
    // complement star, except a ↦ a: the center {0, b, 1} is no longer
    // closed under star at b
    let mutated = FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "1"]),
        |x, y| x & y,
        |x, y| x | y,
        |x| [3, 1, 1, 0][x],
        |x| 3 ^ x,
        0,
        3,
        None,
    )
    .unwrap();
    assert_eq!(mutated.center(), vec![0, 2, 3]);
    let report = mutated.check_center_boolean();
    assert!(!report.holds());
    let ce = report.counterexample().unwrap();
    assert_eq!(ce.elements, vec![2]);
    assert!(ce.equation.contains("leaves the center"));
}

#[test]
fn center_images_detect_mismatch() {
    // star misses the central element b: star image {1, b→? } — send
    // everything to 0 or 1 so the image is {0,1} while the center is
    // computed from star = plus pointwise
    let skew = FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "1"]),
        |x, y| x & y,
        |x, y| x | y,
        |x| [3, 0, 0, 0][x],
        |x| [3, 3, 3, 0][x],
        0,
        3,
        None,
    )
    .unwrap();
    // center = {x : x* = x⁺} = {0, 1}... star image = {0, 3}, plus image = {0, 3}
    assert_eq!(skew.center(), vec![0, 3]);
    assert!(skew.check_center_images().holds());

    // now wire star(a) = a: a enters the star image without being central
    let skew = FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "1"]),
        |x, y| x & y,
        |x, y| x | y,
        |x| [3, 1, 0, 0][x],
        |x| [3, 3, 3, 0][x],
        0,
        3,
        None,
    )
    .unwrap();
    let report = skew.check_center_images();
    assert!(!report.holds());
    assert_eq!(report.counterexample().unwrap().elements, vec![1]);
}

#[test]
fn subalgebra_generated_by_constants_is_the_diagonal() {
    let a = build_c3_power(2).unwrap();
    let sub = a.generate_subalgebra(&[]);
    let carrier: Vec<&str> = sub.elements().map(|e| sub.label(e)).collect();
    assert_eq!(carrier, ["00", "hh", "11"]);
    let witness = find_isomorphism(&sub, &c3_by_hand()).unwrap();
    assert!(witness.is_some());
}

#[test]
fn subalgebra_of_full_carrier_is_the_algebra_itself() {
    let a = build_c3_power(2).unwrap();
    let all: Vec<Elem> = a.elements().collect();
    let sub = a.generate_subalgebra(&all);
    assert_eq!(sub.len(), a.len());
    assert_eq!(sub.labels(), a.labels());
}

/// Independent fixed-point closure oracle over sets.
fn closure_oracle(alg: &FiniteAlgebra, seeds: &[Elem]) -> BTreeSet<Elem> {
    let mut set: BTreeSet<Elem> = seeds.iter().copied().collect();
    set.insert(alg.zero());
    set.insert(alg.one());
    if let Some(h) = alg.core_h() {
        set.insert(h);
    }
    loop {
        let mut next = set.clone();
        for &a in &set {
            next.insert(alg.star(a));
            next.insert(alg.plus(a));
            for &b in &set {
                next.insert(alg.meet(a, b));
                next.insert(alg.join(a, b));
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

#[test]
fn single_corner_generates_all_of_c3_squared() {
    let a = build_c3_power(2).unwrap();
    let seed = a.element("10").unwrap();
    let closure = a.subalgebra_closure(&[seed]);
    let oracle: Vec<Elem> = closure_oracle(&a, &[seed]).into_iter().collect();
    assert_eq!(closure, oracle);
    // golden value: the corner generates the whole nine-element algebra
    assert_eq!(closure, (0..9).collect::<Vec<_>>());
}

proptest! {
    #[test]
    fn subalgebra_closure_is_idempotent_and_monotone(
        seeds in prop::collection::btree_set(0usize..9, 0..5),
        extra in prop::collection::btree_set(0usize..9, 0..3),
    ) {
        let a = build_c3_power(2).unwrap();
        let seeds: Vec<Elem> = seeds.into_iter().collect();
        let closed = a.subalgebra_closure(&seeds);
        prop_assert_eq!(&a.subalgebra_closure(&closed), &closed);
        prop_assert_eq!(&closure_oracle(&a, &seeds).into_iter().collect::<Vec<_>>(), &closed);

        let mut larger = seeds.clone();
        larger.extend(extra);
        let closed_larger = a.subalgebra_closure(&larger);
        prop_assert!(closed.iter().all(|e| closed_larger.contains(e)));
    }
}

#[test]
fn isomorphism_witness_between_c3_squared_and_tp2() {
    let a = build_c3_power(2).unwrap();
    let names: Vec<String> = vec!["1".into(), "2".into()];
    let b = build_tp_algebra(&names).unwrap();
    let witness = find_isomorphism(&a, &b).unwrap().expect("must exist");
    let map = crate::morphisms::AlgebraMap::new(a, b, witness).unwrap();
    assert!(map.is_isomorphism().holds());
}

#[test]
fn size_mismatch_yields_no_witness() {
    assert_eq!(find_isomorphism(&c3_by_hand(), &boolean4()).unwrap(), None);
}

#[test]
fn shuffled_carrier_still_matches() {
    let a = build_c3_power(2).unwrap();
    let n = a.len();
    // same algebra with the carrier listed in reverse order
    let perm = |e: Elem| n - 1 - e;
    let b = FiniteAlgebra::from_fns(
        (0..n).map(|e| a.label(perm(e)).to_string()).collect(),
        |x, y| perm(a.meet(perm(x), perm(y))),
        |x, y| perm(a.join(perm(x), perm(y))),
        |x| perm(a.star(perm(x))),
        |x| perm(a.plus(perm(x))),
        perm(a.zero()),
        perm(a.one()),
        a.core_h().map(perm),
    )
    .unwrap();
    let witness = find_isomorphism(&a, &b).unwrap().expect("must exist");
    let map = crate::morphisms::AlgebraMap::new(a, b, witness).unwrap();
    assert!(map.is_isomorphism().holds());
}

#[test]
fn oversized_search_is_refused() {
    let a = build_c3_power(2).unwrap();
    assert_eq!(
        find_isomorphism_bounded(&a, &a, 5).unwrap_err(),
        AlgebraError::CarrierTooLarge { size: 9, bound: 5 }
    );
}

#[test]
fn witness_existence_is_symmetric_across_a_small_pool() {
    let names: Vec<String> = vec!["1".into(), "2".into()];
    let pool = [
        c3_by_hand(),
        boolean4(),
        chain4(),
        point(),
        build_c3_power(2).unwrap(),
        build_tp_algebra(&names).unwrap(),
    ];
    for a in &pool {
        for b in &pool {
            let ab = find_isomorphism(a, b).unwrap().is_some();
            let ba = find_isomorphism(b, a).unwrap().is_some();
            assert_eq!(ab, ba);
        }
    }
}

#[test]
fn center_cardinality_decides_crdsa_isomorphism() {
    let c3sq = build_c3_power(2).unwrap();
    let space =
        ApproximationSpace::from_names(&["w", "x", "y", "z"], &[&["w", "x"], &["y", "z"]]).unwrap();
    let prsa = space.build_prsa().unwrap();
    assert_eq!(crdsa_isomorphic_by_center(&c3sq, &prsa), Ok(true));
    // cross-check against the witness search
    assert!(find_isomorphism(&c3sq, &prsa).unwrap().is_some());

    let c3 = c3_by_hand();
    assert_eq!(crdsa_isomorphic_by_center(&c3, &c3sq), Ok(false));
    assert_eq!(
        crdsa_isomorphic_by_center(&c3, &boolean4()),
        Err(AlgebraError::NotCrdsa)
    );

    // a three-block space with fat blocks has the same center as C₃³
    let c3cubed = build_c3_power(3).unwrap();
    let three = ApproximationSpace::from_names(
        &["a", "b", "c", "d", "e", "f"],
        &[&["a", "b"], &["c", "d"], &["e", "f"]],
    )
    .unwrap();
    assert_eq!(
        crdsa_isomorphic_by_center(&c3cubed, &three.build_prsa().unwrap()),
        Ok(true)
    );
}

#[test]
fn core_is_the_intersection_of_the_dense_sets() {
    for algebra in [
        c3_by_hand(),
        boolean4(),
        chain4(),
        point(),
        build_c3_power(2).unwrap(),
    ] {
        let dense = algebra.dense_set();
        let dual = algebra.dual_dense_set();
        let intersection: Vec<Elem> = dense.iter().copied().filter(|e| dual.contains(e)).collect();
        assert_eq!(algebra.core(), intersection);
    }
}

#[test]
fn center_cardinality_scales_to_four_classes() {
    // an 81-element rough algebra has the center of C3^4 even though it
    // is beyond the brute-force witness scale
    let space = ApproximationSpace::from_names(
        &["a", "b", "c", "d", "e", "f", "g", "h"],
        &[&["a", "b"], &["c", "d"], &["e", "f"], &["g", "h"]],
    )
    .unwrap();
    let prsa = space.build_prsa().unwrap();
    assert_eq!(prsa.len(), 81);
    assert_eq!(prsa.center().len(), 16);
    let power = build_c3_power(4).unwrap();
    assert_eq!(crdsa_isomorphic_by_center(&prsa, &power), Ok(true));
}

#[test]
fn law_report_renders_and_exposes_its_witness() {
    let report = chain4().check_regular();
    let text = report.to_string();
    assert!(text.starts_with("regularity: fails"));
    assert!(!report.holds());
    assert!(report.counterexample().is_some());

    let ok = c3_by_hand().check_regular();
    assert_eq!(ok.to_string(), "regularity: holds");
    assert!(ok.counterexample().is_none());
}

#[test]
fn verify_crdsa_reports_the_failing_law() {
    let verdict = chain4().verify_crdsa();
    assert!(!verdict.holds());
    assert_eq!(verdict.first_failure().unwrap().law(), "regularity");
    assert!(verdict.core_element.is_none());
    // dense chain: core = {a, b} even though regularity fails
    assert_eq!(verdict.core, vec![1, 2]);
}

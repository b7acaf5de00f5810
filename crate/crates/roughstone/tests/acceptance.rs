//! Acceptance suite: one test per criterion of the verification battery,
//! each printing its pass/fail line (visible with `--nocapture`).
//!
//! The same battery backs `roughstone selftest`.

use roughstone::selftest::{self, Outcome};

fn run(index: usize, name: &'static str, criterion: fn() -> Result<(), String>) {
    let outcome = Outcome {
        index,
        name,
        result: criterion(),
    };
    println!("{outcome}");
    assert!(outcome.passed(), "{outcome}");
}

#[test]
fn criterion_1_table_reproduction() {
    run(1, "table-reproduction", selftest::table_reproduction);
}

#[test]
fn criterion_2_crdsa_characterization() {
    run(
        2,
        "crdsa-characterization",
        selftest::crdsa_characterization,
    );
}

#[test]
fn criterion_3_axiom_suite() {
    run(3, "axiom-suite", selftest::axiom_suite);
}

#[test]
fn criterion_4_carrier_census() {
    run(4, "carrier-census", selftest::carrier_census);
}

#[test]
fn criterion_5_isomorphism_chain() {
    run(5, "isomorphism-chain", selftest::isomorphism_chain);
}

#[test]
fn criterion_6_center_crisp_coincidence() {
    run(
        6,
        "center-crisp-coincidence",
        selftest::center_crisp_coincidence,
    );
}

#[test]
fn criterion_7_doubling_roundtrip() {
    run(7, "doubling-roundtrip", selftest::doubling_roundtrip);
}

#[test]
fn criterion_8_crdsa_classification() {
    run(8, "crdsa-classification", selftest::crdsa_classification);
}

#[test]
fn criterion_9_complete_lattice_operations() {
    run(
        9,
        "complete-lattice-operations",
        selftest::complete_lattice_operations,
    );
}

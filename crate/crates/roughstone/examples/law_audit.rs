//! Auditing the double Stone axioms on explicit algebras, including ones
//! wired to fail, and reading the counterexample reports.
//!
//! Run with `cargo run --example law_audit`.

use roughstone::algebra::FiniteAlgebra;
use roughstone::chain::build_c3_power;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn main() {
    println!("== C3^2, the nine-element chain power ==");
    let square = build_c3_power(2).expect("tiny carrier");
    let verdict = square.verify_crdsa();
    for report in &verdict.law_reports {
        println!("  {report}");
    }
    println!(
        "  core: {:?}",
        verdict.core_element.map(|e| square.label(e))
    );
    println!(
        "  center: {:?}",
        square
            .center()
            .iter()
            .map(|&e| square.label(e))
            .collect::<Vec<_>>()
    );
    println!(
        "  atoms: {:?}",
        square
            .atoms()
            .iter()
            .map(|&e| square.label(e))
            .collect::<Vec<_>>()
    );
    println!(
        "  core decomposition: {}",
        square.check_core_decomposition().expect("core exists")
    );
    println!();

    println!("== the four-element chain 0 < a < b < 1 with dense middles ==");
    let chain = FiniteAlgebra::from_fns(
        labels(&["0", "a", "b", "1"]),
        |x, y| x.min(y),
        |x, y| x.max(y),
        |x| [3, 0, 0, 0][x],
        |x| [3, 3, 3, 0][x],
        0,
        3,
        None,
    )
    .expect("valid tables");
    println!("  {}", chain.check_stone_identities());
    println!("  {}", chain.check_regular());
    println!();

    println!("== C3 with the star table broken at h ==");
    let broken = FiniteAlgebra::from_fns(
        labels(&["0", "h", "1"]),
        |a, b| a.min(b),
        |a, b| a.max(b),
        |a| [2, 2, 0][a], // star(h) wired to 1
        |a| [2, 2, 0][a],
        0,
        2,
        Some(1),
    )
    .expect("valid tables");
    println!("  {}", broken.check_pseudocomplement());
}

//! The space file format and its diagnostics: positioned errors for
//! duplicate elements, overlapping blocks, uncovered elements and
//! malformed directives.
//!
//! Run with `cargo run --example space_files`.

use roughstone::space::parse_space;

fn main() {
    let good = "universe: w x y z\nblock: w x\nblock: y z\n";
    let space = parse_space(good).expect("valid");
    println!(
        "parsed: {} elements, {} classes",
        space.universe_len(),
        space.block_count()
    );
    println!("crdsa space: {}", space.is_crdsa_space());
    println!();

    let bad_inputs = [
        ("overlap", "universe: w x y\nblock: w x\nblock: x y\n"),
        ("duplicate", "universe: w w\n"),
        ("uncovered", "universe: w x\nblock: w\n"),
        ("empty universe", "universe:\n"),
        ("unknown element", "universe: w\nblock: w q\n"),
        ("bad directive", "universe: w\nblok: w\n"),
        ("no universe", "block: w\n"),
    ];
    for (what, text) in bad_inputs {
        let err = parse_space(text).expect_err("must fail");
        println!("{what:16} -> {err}");
    }
}

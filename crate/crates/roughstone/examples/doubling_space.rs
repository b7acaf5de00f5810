//! Doubling an index set into an approximation space: each index j
//! yields a two-element class {j0, j1}, and the resulting rough set
//! algebra is the chain power over the original indices.
//!
//! Run with `cargo run --example doubling_space`.

use roughstone::morphisms::roundtrip_doubling;
use roughstone::space::build_doubling_space;

fn main() {
    let names: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
    let space = build_doubling_space(&names).expect("distinct names");

    println!("universe: {}", space.names().join(" "));
    let blocks: Vec<String> = space
        .blocks()
        .iter()
        .map(|b| space.render_subset(b))
        .collect();
    println!("classes:  {}", blocks.join(" "));
    println!("carrier:  {} rough pairs", space.carrier_size());

    let algebra = space.build_prsa().expect("27 elements");
    println!("center:   {} elements", algebra.center().len());
    println!("atoms:    {}", algebra.atoms().len());
    let (is_crdsa, core) = algebra.is_crdsa();
    println!(
        "core:     {}",
        core.map(|e| algebra.label(e).to_string())
            .unwrap_or_else(|| "none".to_string())
    );
    assert!(is_crdsa);

    println!();
    for n in 1..=3 {
        let index_names: Vec<String> = names.iter().take(n).cloned().collect();
        let report = roundtrip_doubling(&index_names).expect("small index sets");
        println!("roundtrip over {n} indices: {report}");
    }
}

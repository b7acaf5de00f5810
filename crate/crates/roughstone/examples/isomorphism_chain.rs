//! Tracing a rough set algebra through its structure maps: the class
//! collapse onto the chain power over the classes, the coordinate map α
//! on the ternary partition lattice, and the embedding into the chain
//! power over the whole universe.
//!
//! Run with `cargo run --example isomorphism_chain`.

use roughstone::morphisms::{alpha_map, class_collapse, embed_prsa_into_c3u};
use roughstone::space::ApproximationSpace;

fn main() {
    let space = ApproximationSpace::from_names(&["w", "x", "y", "z"], &[&["w", "x"], &["y", "z"]])
        .expect("valid space");

    let collapse = class_collapse(&space).expect("small carrier");
    let embed = embed_prsa_into_c3u(&space).expect("small carrier");
    println!("class collapse: {}", collapse.is_isomorphism());
    println!("universe embed: {}", embed.is_embedding());

    let class_names: Vec<String> = (0..space.block_count()).map(|e| format!("e{e}")).collect();
    let coord = alpha_map(&class_names).expect("two indices");
    println!("alpha:          {}", coord.is_isomorphism());
    println!();

    println!("pair  ->  over classes  ->  over universe");
    let algebra = collapse.source();
    for e in algebra.elements() {
        println!(
            "  {:14}  {}  {}",
            algebra.label(e),
            collapse.image(e),
            embed.image(e)
        );
    }
}

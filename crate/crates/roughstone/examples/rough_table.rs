//! Approximating subsets of a small universe and printing the rough
//! table: every subset with its lower/upper approximations, ternary
//! partition, and chain vectors over the universe and over the classes.
//!
//! Run with `cargo run --example rough_table`.

use roughstone::cli::RoughTable;
use roughstone::space::parse_space;

fn main() {
    let space = parse_space(
        "# four elements, two classes\n\
         universe: w x y z\n\
         block: w x\n\
         block: y z\n",
    )
    .expect("well-formed space");

    let x = space.subset(&["w", "x", "z"]).expect("known elements");
    println!("X          = {}", space.render_subset(&x));
    println!(
        "lower(X)   = {}",
        space.render_subset(&space.lower_approx(&x))
    );
    println!(
        "upper(X)   = {}",
        space.render_subset(&space.upper_approx(&x))
    );
    println!("boundary   = {}", space.render_subset(&space.boundary(&x)));
    println!();

    println!("full table, one row per subset:");
    let table = RoughTable::full(&space).expect("small universe");
    print!("{}", table.to_aligned());
    println!();

    println!("distinct rough pairs only:");
    let distinct = RoughTable::distinct(&space).expect("small carrier");
    print!("{}", distinct.to_aligned());
}

//! Familywise joins and meets in the ternary partition lattice: whole
//! families collapse componentwise, matching folds of the binary
//! operations, with the empty family landing on the bounds.
//!
//! Run with `cargo run --example ternary_families`.

use roughstone::morphisms::alpha;
use roughstone::set::IndexSet;
use roughstone::ternary::{enumerate_partitions, join_all, meet_all, TernaryPartition};

fn main() {
    let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let carrier = enumerate_partitions(3);
    println!("{} partitions over three indices", carrier.len());

    let family = [
        TernaryPartition::new(IndexSet::from_indices(3, &[0]), IndexSet::empty(3)),
        TernaryPartition::new(IndexSet::empty(3), IndexSet::from_indices(3, &[2])),
        TernaryPartition::core(3),
    ];
    for p in &family {
        println!("  member {}  ->  {}", p.render(&names), alpha(p));
    }
    let join = join_all(3, &family);
    let meet = meet_all(3, &family);
    println!(
        "join of the family: {}  ->  {}",
        join.render(&names),
        alpha(&join)
    );
    println!(
        "meet of the family: {}  ->  {}",
        meet.render(&names),
        alpha(&meet)
    );

    let fold = family
        .iter()
        .skip(1)
        .fold(family[0].clone(), |acc, p| acc.join(p));
    assert_eq!(join, fold);
    println!("familywise join equals the binary fold");

    println!(
        "empty family: join = {}, meet = {}",
        join_all(3, []).render(&names),
        meet_all(3, []).render(&names)
    );

    let everything = join_all(3, &carrier);
    println!(
        "join of the whole carrier: {} (the top)",
        everything.render(&names)
    );
}

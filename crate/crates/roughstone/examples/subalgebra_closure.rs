//! Generating subalgebras by fixed-point closure and identifying them
//! with chain powers by brute-force witness search.
//!
//! Run with `cargo run --example subalgebra_closure`.

use roughstone::algebra::find_isomorphism;
use roughstone::chain::build_c3_power;

fn main() {
    let square = build_c3_power(2).expect("nine elements");

    for seeds in [vec![], vec!["10"], vec!["0h"]] {
        let seed_ids: Vec<usize> = seeds
            .iter()
            .map(|l| square.element(l).expect("label exists"))
            .collect();
        let sub = square.generate_subalgebra(&seed_ids);
        let carrier: Vec<&str> = sub.elements().map(|e| sub.label(e)).collect();
        println!(
            "seeds {seeds:?} generate {} elements: {carrier:?}",
            sub.len()
        );

        for n in 0..=2 {
            let power = build_c3_power(n).expect("tiny");
            if find_isomorphism(&sub, &power)
                .expect("within the search bound")
                .is_some()
            {
                println!("  identified: isomorphic to C3^{n}");
            }
        }
    }
}

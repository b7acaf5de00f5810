//! End-to-end verification battery.
//!
//! Nine checks exercise the crate against frozen reference data and
//! exhaustive small-scale enumeration: the sixteen-row reference table of
//! the two-block four-element space, the block-size characterization of
//! core algebras over every partition of universes up to size six, the
//! full axiom suite over chain powers, partition lattices and rough set
//! algebras, carrier counts against the power-set image, the verified
//! isomorphism and embedding chain, the center/crisp coincidence, the
//! doubling round trip, the classification of small core algebras as
//! chain powers, and familywise lattice operations against binary folds.
//!
//! The same battery backs the `selftest` subcommand and the `acceptance`
//! integration test target, one pass/fail line per check.

use std::fmt;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{crdsa_isomorphic_by_center, find_isomorphism, FiniteAlgebra};
use crate::chain::build_c3_power;
use crate::cli::RoughTable;
use crate::morphisms::{alpha_map, class_collapse, embed_prsa_into_c3u, roundtrip_doubling};
use crate::set::IndexSet;
use crate::space::{
    all_set_partitions, build_doubling_space, letter_names, ApproximationSpace, RoughPair,
};
use crate::ternary::{build_tp_algebra, enumerate_partitions, join_all, meet_all};

/// Result of one battery check.
pub struct Outcome {
    pub index: usize,
    pub name: &'static str,
    pub result: Result<(), String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            Ok(()) => write!(f, "PASS  criterion {} ({})", self.index, self.name),
            Err(msg) => write!(f, "FAIL  criterion {} ({}): {msg}", self.index, self.name),
        }
    }
}

type Criterion = fn() -> Result<(), String>;

/// Runs the whole battery in order.
pub fn run_all() -> Vec<Outcome> {
    let checks: [(&'static str, Criterion); 9] = [
        ("table-reproduction", table_reproduction),
        ("crdsa-characterization", crdsa_characterization),
        ("axiom-suite", axiom_suite),
        ("carrier-census", carrier_census),
        ("isomorphism-chain", isomorphism_chain),
        ("center-crisp-coincidence", center_crisp_coincidence),
        ("doubling-roundtrip", doubling_roundtrip),
        ("crdsa-classification", crdsa_classification),
        ("complete-lattice-operations", complete_lattice_operations),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, run))| Outcome {
            index: i + 1,
            name,
            result: run(),
        })
        .collect()
}

/// The standard worked space: four elements in two doubleton classes.
pub fn worked_space() -> ApproximationSpace {
    ApproximationSpace::from_names(&["w", "x", "y", "z"], &[&["w", "x"], &["y", "z"]])
        .expect("the worked space is valid")
}

/// Reference table of the worked space, one row per subset in
/// binary-counter order: X, X̲, X̄, X̄ᶜ, ternary partition, chain vector
/// over U, chain vector over the classes.
pub const WORKED_TABLE: [[&str; 7]; 16] = [
    ["∅", "∅", "∅", "U", "(∅,U)", "0000", "00"],
    ["{w}", "∅", "{w,x}", "{y,z}", "(∅,{y,z})", "hh00", "h0"],
    ["{x}", "∅", "{w,x}", "{y,z}", "(∅,{y,z})", "hh00", "h0"],
    [
        "{w,x}",
        "{w,x}",
        "{w,x}",
        "{y,z}",
        "({w,x},{y,z})",
        "1100",
        "10",
    ],
    ["{y}", "∅", "{y,z}", "{w,x}", "(∅,{w,x})", "00hh", "0h"],
    ["{w,y}", "∅", "U", "∅", "(∅,∅)", "hhhh", "hh"],
    ["{x,y}", "∅", "U", "∅", "(∅,∅)", "hhhh", "hh"],
    ["{w,x,y}", "{w,x}", "U", "∅", "({w,x},∅)", "11hh", "1h"],
    ["{z}", "∅", "{y,z}", "{w,x}", "(∅,{w,x})", "00hh", "0h"],
    ["{w,z}", "∅", "U", "∅", "(∅,∅)", "hhhh", "hh"],
    ["{x,z}", "∅", "U", "∅", "(∅,∅)", "hhhh", "hh"],
    ["{w,x,z}", "{w,x}", "U", "∅", "({w,x},∅)", "11hh", "1h"],
    [
        "{y,z}",
        "{y,z}",
        "{y,z}",
        "{w,x}",
        "({y,z},{w,x})",
        "0011",
        "01",
    ],
    ["{w,y,z}", "{y,z}", "U", "∅", "({y,z},∅)", "hh11", "h1"],
    ["{x,y,z}", "{y,z}", "U", "∅", "({y,z},∅)", "hh11", "h1"],
    ["U", "U", "U", "∅", "(U,∅)", "1111", "11"],
];

fn spaces_of_size(n: usize) -> Vec<ApproximationSpace> {
    all_set_partitions(n)
        .into_iter()
        .map(|blocks| ApproximationSpace::new(letter_names(n), blocks).expect("valid partition"))
        .collect()
}

fn fat_spaces_up_to(n_max: usize) -> Vec<ApproximationSpace> {
    (2..=n_max)
        .flat_map(spaces_of_size)
        .filter(ApproximationSpace::is_crdsa_space)
        .collect()
}

/// Hand-picked spaces with 7 to 12 elements and assorted block shapes.
fn larger_spaces() -> Vec<ApproximationSpace> {
    let shapes: [&[usize]; 10] = [
        &[3, 4],
        &[1, 2, 4],
        &[2, 2, 2, 2],
        &[1, 1, 1, 1, 1, 1, 1, 1],
        &[4, 5],
        &[2, 3, 5],
        &[1, 2, 3, 5],
        &[2, 2, 3, 5],
        &[6, 6],
        &[1, 1, 5, 5],
    ];
    shapes
        .iter()
        .map(|sizes| {
            let n: usize = sizes.iter().sum();
            let mut next = 0;
            let blocks: Vec<Vec<usize>> = sizes
                .iter()
                .map(|&s| {
                    let block = (next..next + s).collect();
                    next += s;
                    block
                })
                .collect();
            ApproximationSpace::new(letter_names(n), blocks).expect("valid shape")
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, elapsed: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!("{what} took {elapsed:?}, budget {budget:?}")
    })
}

/// Criterion 1: the full table of the worked space reproduces all sixteen
/// reference rows, within one second.
pub fn table_reproduction() -> Result<(), String> {
    let start = Instant::now();
    let space = worked_space();
    let table = RoughTable::full(&space).map_err(|e| e.to_string())?;
    let rendered = table.to_aligned();
    let elapsed = start.elapsed();

    ensure(table.rows().len() == 16, || {
        format!("expected 16 rows, got {}", table.rows().len())
    })?;
    for (i, (row, expect)) in table.rows().iter().zip(WORKED_TABLE).enumerate() {
        for (col, (got, want)) in row.iter().zip(expect).enumerate() {
            ensure(got == want, || {
                format!(
                    "row {i}, column {}: got {got:?}, want {want:?}",
                    RoughTable::HEADER[col]
                )
            })?;
        }
    }
    ensure(rendered.lines().count() == 17, || {
        "aligned rendering must have a header and 16 rows".to_string()
    })?;
    let distinct = RoughTable::distinct(&space).map_err(|e| e.to_string())?;
    ensure(distinct.rows().len() == 9, || {
        format!("expected 9 distinct rows, got {}", distinct.rows().len())
    })?;
    within(Duration::from_secs(1), elapsed, "table construction")
}

/// Criterion 2: over every partition of universes of size 1..=6, the
/// algebra has a core exactly when every block has two or more elements,
/// and the witness subset maps to (∅, U) exactly when present. Ten-second
/// budget.
pub fn crdsa_characterization() -> Result<(), String> {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=6 {
        let spaces = spaces_of_size(n);
        if n == 6 {
            ensure(spaces.len() == 203, || {
                format!("expected 203 partitions at n=6, got {}", spaces.len())
            })?;
        }
        for space in spaces {
            let fat = space.is_crdsa_space();
            let algebra = space.build_prsa().map_err(|e| e.to_string())?;
            let (is_crdsa, core) = algebra.is_crdsa();
            ensure(is_crdsa == fat, || {
                format!("algebra verdict {is_crdsa} vs block census {fat} on {space:?}")
            })?;
            let witness = space.core_witness();
            ensure(witness.is_some() == fat, || {
                format!("witness presence disagrees with block census on {space:?}")
            })?;
            if let Some(x) = witness {
                let pair = space.rough_pair(&x);
                ensure(pair.lower().is_empty() && pair.upper().is_full(), || {
                    format!("witness rough pair is {:?}, not (∅,U)", pair)
                })?;
                let h = core.expect("crdsa verdict carries the core element");
                ensure(algebra.label(h) == space.render_pair(&pair), || {
                    "core element differs from the witness pair".to_string()
                })?;
            }
            checked += 1;
        }
    }
    ensure(checked == 278, || {
        format!("expected 278 spaces across n=1..=6, got {checked}")
    })?;
    within(
        Duration::from_secs(10),
        start.elapsed(),
        "characterization sweep",
    )
}

fn full_audit(algebra: &FiniteAlgebra, what: &str) -> Result<(), String> {
    let verdict = algebra.verify_crdsa();
    if let Some(failure) = verdict.first_failure() {
        return Err(format!("{what}: {failure}"));
    }
    ensure(verdict.core.len() == 1, || {
        format!("{what}: core has {} elements", verdict.core.len())
    })?;
    let decomposition = algebra
        .check_core_decomposition()
        .map_err(|e| e.to_string())?;
    ensure(decomposition.holds(), || format!("{what}: {decomposition}"))?;
    let center = algebra.check_center_boolean();
    ensure(center.holds(), || format!("{what}: {center}"))?;
    let images = algebra.check_center_images();
    ensure(images.holds(), || format!("{what}: {images}"))
}

/// Criterion 3: chain powers up to C₃³, partition lattices up to three
/// indices, and the rough set algebra of every all-blocks-fat space with
/// at most eight elements pass the complete axiom suite with singleton
/// core, core decomposition and Boolean center.
pub fn axiom_suite() -> Result<(), String> {
    for n in 0..=3 {
        let power = build_c3_power(n).map_err(|e| e.to_string())?;
        full_audit(&power, &format!("C3^{n}"))?;
        let tp = build_tp_algebra(&letter_names(n)).map_err(|e| e.to_string())?;
        full_audit(&tp, &format!("TP over {n} indices"))?;
    }
    let spaces = fat_spaces_up_to(8);
    ensure(spaces.len() == 935, || {
        format!(
            "expected 935 fat spaces with at most 8 elements, got {}",
            spaces.len()
        )
    })?;
    for space in &spaces {
        let algebra = space.build_prsa().map_err(|e| e.to_string())?;
        full_audit(&algebra, &format!("rough algebra of {space:?}"))?;
    }
    Ok(())
}

/// Criterion 4: the carrier count equals the per-block product (2 for
/// singletons, 3 otherwise) and matches the deduplicated power-set image
/// on every corpus space with at most twelve elements.
pub fn carrier_census() -> Result<(), String> {
    let mut corpus: Vec<ApproximationSpace> = (1..=6).flat_map(spaces_of_size).collect();
    corpus.extend(larger_spaces());
    for space in &corpus {
        let carrier = space.enumerate_carrier();
        let formula = space.carrier_size();
        ensure(carrier.len() == formula, || {
            format!(
                "enumerated {} pairs, formula gives {formula} on {space:?}",
                carrier.len()
            )
        })?;
        let n = space.universe_len();
        ensure(n <= 12, || format!("corpus space too large ({n})"))?;
        let mut image: std::collections::HashSet<RoughPair> = std::collections::HashSet::new();
        for mask in 0..1u64 << n {
            image.insert(space.rough_pair(&IndexSet::from_mask(n, mask)));
        }
        ensure(image.len() == carrier.len(), || {
            format!(
                "power-set image has {} pairs, carrier {}",
                image.len(),
                carrier.len()
            )
        })?;
        for pair in &carrier {
            ensure(image.contains(pair), || {
                format!("enumerated pair {pair:?} never arises as an approximation")
            })?;
        }
    }
    // the worked space has exactly nine distinct pairs
    ensure(worked_space().carrier_size() == 9, || {
        "worked space must have 9 distinct rough pairs".to_string()
    })
}

/// Criterion 5: for every fat space with at most eight elements (hence at
/// most four classes), the class collapse is a verified isomorphism onto
/// the chain power over the classes, α is a verified isomorphism for each
/// width, and the composite φ;α embeds the algebra into the chain power
/// over the universe.
pub fn isomorphism_chain() -> Result<(), String> {
    for width in 0..=4 {
        let coord = alpha_map(&letter_names(width)).map_err(|e| e.to_string())?;
        let report = coord.is_isomorphism();
        ensure(report.holds(), || {
            format!("alpha at width {width}: {report}")
        })?;
    }
    for space in fat_spaces_up_to(8) {
        let collapse = class_collapse(&space).map_err(|e| e.to_string())?;
        let report = collapse.is_isomorphism();
        ensure(report.holds(), || {
            format!("class collapse on {space:?}: {report}")
        })?;
        let embed = embed_prsa_into_c3u(&space).map_err(|e| e.to_string())?;
        let report = embed.is_embedding();
        ensure(report.holds(), || {
            format!("embedding on {space:?}: {report}")
        })?;
    }
    Ok(())
}

/// Criterion 6: the center computed from star/plus equals the crisp
/// pairs, with cardinality 2^|E|, on every corpus space; on spaces small
/// enough for explicit tables the center passes the Boolean laws.
pub fn center_crisp_coincidence() -> Result<(), String> {
    let mut corpus: Vec<ApproximationSpace> = (1..=6).flat_map(spaces_of_size).collect();
    corpus.extend(larger_spaces());
    for space in &corpus {
        let center = space.center_of_prsa();
        let crisp = space.crisp_sets();
        ensure(center == crisp, || {
            format!("center and crisp pairs disagree on {space:?}")
        })?;
        let expected = 1usize << space.block_count();
        ensure(center.len() == expected, || {
            format!("center has {} elements, expected {expected}", center.len())
        })?;
        if space.carrier_size() <= 729 {
            let algebra = space.build_prsa().map_err(|e| e.to_string())?;
            ensure(algebra.center().len() == expected, || {
                "table-based center disagrees with the formula route".to_string()
            })?;
            let report = algebra.check_center_boolean();
            ensure(report.holds(), || format!("{space:?}: {report}"))?;
        }
    }
    Ok(())
}

/// Criterion 7: the doubling round trip passes for one, two and three
/// indices; at two indices the doubled space has the block structure of
/// the worked space and a brute-force witness ties the two algebras.
pub fn doubling_roundtrip() -> Result<(), String> {
    for n in 1..=3 {
        let report = roundtrip_doubling(&letter_names(n)).map_err(|e| e.to_string())?;
        ensure(report.holds(), || format!("{n} indices: {report}"))?;
    }
    let doubled = build_doubling_space(&letter_names(2)).map_err(|e| e.to_string())?;
    let worked = worked_space();
    let doubled_sizes: Vec<usize> = doubled.blocks().iter().map(IndexSet::len).collect();
    let worked_sizes: Vec<usize> = worked.blocks().iter().map(IndexSet::len).collect();
    ensure(doubled_sizes == worked_sizes, || {
        format!("block sizes {doubled_sizes:?} differ from {worked_sizes:?}")
    })?;
    let a = doubled.build_prsa().map_err(|e| e.to_string())?;
    let b = worked.build_prsa().map_err(|e| e.to_string())?;
    ensure(a.len() == 9 && b.len() == 9, || {
        "both nine-element algebras expected".to_string()
    })?;
    let witness = find_isomorphism(&a, &b).map_err(|e| e.to_string())?;
    ensure(witness.is_some(), || {
        "no brute-force witness between the doubled and worked algebras".to_string()
    })
}

/// Criterion 8: every core algebra in the corpus with at most 27 elements
/// has carrier 3ⁿ, center 2ⁿ and n atoms, and is isomorphic to the chain
/// power of that width — by witness search for n ≤ 2, by center
/// cardinality and unary fiber structure at n = 3.
pub fn crdsa_classification() -> Result<(), String> {
    let mut corpus: Vec<(String, FiniteAlgebra)> = Vec::new();
    for n in 0..=3 {
        corpus.push((
            format!("C3^{n}"),
            build_c3_power(n).map_err(|e| e.to_string())?,
        ));
        corpus.push((
            format!("TP over {n} indices"),
            build_tp_algebra(&letter_names(n)).map_err(|e| e.to_string())?,
        ));
    }
    for space in fat_spaces_up_to(6) {
        corpus.push((
            format!("{space:?}"),
            space.build_prsa().map_err(|e| e.to_string())?,
        ));
    }
    // generated subalgebras are core algebras in their own right
    let cube = build_c3_power(3).map_err(|e| e.to_string())?;
    corpus.push((
        "diagonal of C3^3".to_string(),
        cube.generate_subalgebra(&[]),
    ));
    corpus.push((
        "corner subalgebra of C3^3".to_string(),
        cube.generate_subalgebra(&[cube.element("100").expect("label exists")]),
    ));

    for (what, algebra) in &corpus {
        if algebra.len() > 27 {
            continue;
        }
        let (is_crdsa, _) = algebra.is_crdsa();
        if !is_crdsa {
            return Err(format!("{what} failed the core audit"));
        }
        let size = algebra.len();
        let n = (0..=3)
            .find(|&k| 3usize.pow(k) == size)
            .ok_or_else(|| format!("{what}: carrier {size} is not a power of three"))?;
        let power = build_c3_power(n as usize).map_err(|e| e.to_string())?;
        ensure(algebra.center().len() == 1 << n, || {
            format!(
                "{what}: center {} instead of {}",
                algebra.center().len(),
                1 << n
            )
        })?;
        ensure(algebra.atoms().len() == n as usize, || {
            format!("{what}: {} atoms instead of {n}", algebra.atoms().len())
        })?;
        if n <= 2 {
            let witness = find_isomorphism(algebra, &power).map_err(|e| e.to_string())?;
            ensure(witness.is_some(), || {
                format!("{what}: no witness against C3^{n}")
            })?;
        } else {
            let same = crdsa_isomorphic_by_center(algebra, &power).map_err(|e| e.to_string())?;
            ensure(same, || {
                format!("{what}: center cardinality differs from C3^{n}")
            })?;
            ensure(fiber_profile(algebra) == fiber_profile(&power), || {
                format!("{what}: star/plus fiber profile differs from C3^{n}")
            })?;
        }
    }
    Ok(())
}

/// Sorted star- and plus-fiber sizes, an isomorphism invariant.
fn fiber_profile(algebra: &FiniteAlgebra) -> (Vec<usize>, Vec<usize>) {
    let mut star = vec![0usize; algebra.len()];
    let mut plus = vec![0usize; algebra.len()];
    for e in algebra.elements() {
        star[algebra.star(e)] += 1;
        plus[algebra.plus(e)] += 1;
    }
    star.sort_unstable();
    plus.sort_unstable();
    (star, plus)
}

/// Criterion 9: familywise join and meet agree with binary folds on a
/// thousand random nonempty families over the 27 partitions of three
/// indices.
pub fn complete_lattice_operations() -> Result<(), String> {
    let carrier = enumerate_partitions(3);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for round in 0..1000 {
        let mut family = Vec::new();
        for p in &carrier {
            if rng.random_bool(0.5) {
                family.push(p.clone());
            }
        }
        if family.is_empty() {
            family.push(carrier[rng.random_range(0..carrier.len())].clone());
        }
        let join = join_all(3, &family);
        let meet = meet_all(3, &family);
        let fold_join = family
            .iter()
            .skip(1)
            .fold(family[0].clone(), |acc, p| acc.join(p));
        let fold_meet = family
            .iter()
            .skip(1)
            .fold(family[0].clone(), |acc, p| acc.meet(p));
        ensure(join == fold_join, || {
            format!("round {round}: familywise join differs from the fold")
        })?;
        ensure(meet == fold_meet, || {
            format!("round {round}: familywise meet differs from the fold")
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_lines_render() {
        let ok = Outcome {
            index: 1,
            name: "table-reproduction",
            result: Ok(()),
        };
        assert_eq!(ok.to_string(), "PASS  criterion 1 (table-reproduction)");
        let bad = Outcome {
            index: 2,
            name: "x",
            result: Err("boom".into()),
        };
        assert_eq!(bad.to_string(), "FAIL  criterion 2 (x): boom");
    }

    #[test]
    fn worked_space_is_the_expected_shape() {
        let s = worked_space();
        assert_eq!(s.universe_len(), 4);
        assert_eq!(s.block_count(), 2);
        assert!(s.is_crdsa_space());
    }
}

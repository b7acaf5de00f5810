//! The ternary partition lattice TP over a finite index set.
//!
//! A point is a pair (X₁, X₂) of disjoint subsets of the index set J;
//! the implicit middle region J \ (X₁ ∪ X₂) is never stored. Join and
//! meet act by `(X₁,X₂) ∨ (Y₁,Y₂) = (X₁∪Y₁, X₂∩Y₂)` and dually, giving a
//! bounded distributive lattice with bottom (∅,J), top (J,∅) and the
//! distinguished element h = (∅,∅). Star and plus make it a core regular
//! double Stone algebra; the lattice is finitely complete, with joins and
//! meets of whole families computed componentwise.

use std::fmt;

use crate::algebra::{AlgebraError, FiniteAlgebra, MAX_TABLE_CARRIER};
use crate::chain::{enumerate_vectors, C3Value};
use crate::set::{render_set, IndexSet};

/// A pair of disjoint subsets (`ones`, `zeros`) of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryPartition {
    ones: IndexSet,
    zeros: IndexSet,
}

impl TernaryPartition {
    /// Panics unless `ones` and `zeros` are disjoint sets over the same
    /// index universe.
    pub fn new(ones: IndexSet, zeros: IndexSet) -> Self {
        assert!(
            ones.is_disjoint_from(&zeros),
            "ternary partition requires disjoint parts"
        );
        TernaryPartition { ones, zeros }
    }

    /// The bottom element (∅, J).
    pub fn bottom(n: usize) -> Self {
        TernaryPartition::new(IndexSet::empty(n), IndexSet::full(n))
    }

    /// The top element (J, ∅).
    pub fn top(n: usize) -> Self {
        TernaryPartition::new(IndexSet::full(n), IndexSet::empty(n))
    }

    /// The core element h = (∅, ∅).
    pub fn core(n: usize) -> Self {
        TernaryPartition::new(IndexSet::empty(n), IndexSet::empty(n))
    }

    pub fn ones(&self) -> &IndexSet {
        &self.ones
    }

    pub fn zeros(&self) -> &IndexSet {
        &self.zeros
    }

    /// Size of the index set J.
    pub fn universe_len(&self) -> usize {
        self.ones.universe_len()
    }

    /// The implicit middle region J \ (ones ∪ zeros).
    pub fn middle(&self) -> IndexSet {
        self.ones.union(&self.zeros).complement()
    }

    pub fn join(&self, other: &Self) -> Self {
        TernaryPartition::new(
            self.ones.union(&other.ones),
            self.zeros.intersection(&other.zeros),
        )
    }

    pub fn meet(&self, other: &Self) -> Self {
        TernaryPartition::new(
            self.ones.intersection(&other.ones),
            self.zeros.union(&other.zeros),
        )
    }

    /// The partial order `(X₁,X₂) ≤ (Y₁,Y₂) ⟺ X₁ ⊆ Y₁ and Y₂ ⊆ X₂`.
    pub fn leq(&self, other: &Self) -> bool {
        self.ones.is_subset_of(&other.ones) && other.zeros.is_subset_of(&self.zeros)
    }

    /// Pseudocomplement `(X₁,X₂)* = (X₂, J \ X₂)`.
    pub fn star(&self) -> Self {
        TernaryPartition::new(self.zeros.clone(), self.zeros.complement())
    }

    /// Dual pseudocomplement `(X₁,X₂)⁺ = (J \ X₁, X₁)`.
    pub fn plus(&self) -> Self {
        TernaryPartition::new(self.ones.complement(), self.ones.clone())
    }

    /// Renders as `({a,b},{c})` with the crate's set conventions.
    pub fn render(&self, names: &[String]) -> String {
        format!(
            "({},{})",
            render_set(&self.ones, names),
            render_set(&self.zeros, names)
        )
    }
}

impl fmt::Display for TernaryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.ones, self.zeros)
    }
}

/// Join of a whole family, componentwise: (⋃ X₁ᵢ, ⋂ X₂ᵢ).
///
/// The empty family yields the bottom (∅, J).
pub fn join_all<'a>(
    n: usize,
    items: impl IntoIterator<Item = &'a TernaryPartition>,
) -> TernaryPartition {
    items
        .into_iter()
        .fold(TernaryPartition::bottom(n), |acc, item| acc.join(item))
}

/// Meet of a whole family, componentwise: (⋂ X₁ᵢ, ⋃ X₂ᵢ).
///
/// The empty family yields the top (J, ∅).
pub fn meet_all<'a>(
    n: usize,
    items: impl IntoIterator<Item = &'a TernaryPartition>,
) -> TernaryPartition {
    items
        .into_iter()
        .fold(TernaryPartition::top(n), |acc, item| acc.meet(item))
}

/// All 3ⁿ disjoint pairs over `{0,..,n-1}`, ordered lexicographically by
/// the per-index trichotomy (0 = in zeros, h = middle, 1 = in ones).
pub fn enumerate_partitions(n: usize) -> Vec<TernaryPartition> {
    enumerate_vectors(n)
        .into_iter()
        .map(|v| {
            let mut ones = IndexSet::empty(n);
            let mut zeros = IndexSet::empty(n);
            for i in 0..n {
                match v.coord(i) {
                    C3Value::One => ones.insert(i),
                    C3Value::Zero => zeros.insert(i),
                    C3Value::H => {}
                }
            }
            TernaryPartition::new(ones, zeros)
        })
        .collect()
}

/// Builds TP over the named index set as an explicit algebra.
pub fn build_tp_algebra(names: &[String]) -> Result<FiniteAlgebra, AlgebraError> {
    let n = names.len();
    let size = 3usize.checked_pow(n as u32).unwrap_or(usize::MAX);
    if size > MAX_TABLE_CARRIER {
        return Err(AlgebraError::CarrierTooLarge {
            size,
            bound: MAX_TABLE_CARRIER,
        });
    }
    let carrier = enumerate_partitions(n);
    let index: std::collections::HashMap<&TernaryPartition, usize> =
        carrier.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let labels = carrier.iter().map(|p| p.render(names)).collect();
    FiniteAlgebra::from_fns(
        labels,
        |a, b| index[&carrier[a].meet(&carrier[b])],
        |a, b| index[&carrier[a].join(&carrier[b])],
        |a| index[&carrier[a].star()],
        |a| index[&carrier[a].plus()],
        index[&TernaryPartition::bottom(n)],
        index[&TernaryPartition::top(n)],
        Some(index[&TernaryPartition::core(n)]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(n: usize, ones: &[usize], zeros: &[usize]) -> TernaryPartition {
        TernaryPartition::new(
            IndexSet::from_indices(n, ones),
            IndexSet::from_indices(n, zeros),
        )
    }

    #[test]
    fn join_and_meet_formulas() {
        // ({0,1},{2,3}) ∨ (∅,∅) = ({0,1},∅)
        let a = tp(4, &[0, 1], &[2, 3]);
        let h = TernaryPartition::core(4);
        assert_eq!(a.join(&h), tp(4, &[0, 1], &[]));
        assert_eq!(a.meet(&h), tp(4, &[], &[2, 3]));
    }

    #[test]
    fn bounds_absorb() {
        for p in enumerate_partitions(3) {
            assert_eq!(p.join(&TernaryPartition::bottom(3)), p);
            assert_eq!(p.meet(&TernaryPartition::top(3)), p);
            assert!(TernaryPartition::bottom(3).leq(&p));
            assert!(p.leq(&TernaryPartition::top(3)));
        }
    }

    #[test]
    fn order_examples() {
        // chain over a single index: (∅,{0}) < (∅,∅) < ({0},∅)
        assert!(tp(1, &[], &[0]).leq(&tp(1, &[], &[])));
        assert!(tp(1, &[], &[]).leq(&tp(1, &[0], &[])));
        // reversed and incomparable cases
        assert!(!tp(1, &[0], &[]).leq(&tp(1, &[], &[0])));
        assert!(!tp(2, &[0], &[]).leq(&tp(2, &[1], &[])));
    }

    #[test]
    fn leq_agrees_with_meet_order() {
        for n in 0..=3 {
            let all = enumerate_partitions(n);
            for a in &all {
                for b in &all {
                    assert_eq!(a.leq(b), &a.meet(b) == a);
                }
            }
        }
    }

    #[test]
    fn star_and_plus_constants() {
        let n = 3;
        assert_eq!(
            TernaryPartition::core(n).star(),
            TernaryPartition::bottom(n)
        );
        assert_eq!(TernaryPartition::bottom(n).star(), TernaryPartition::top(n));
        assert_eq!(TernaryPartition::top(n).plus(), TernaryPartition::bottom(n));
    }

    #[test]
    fn star_example_two_blocks() {
        // ({0,1},{2,3})* = ({2,3},{0,1})
        let a = tp(4, &[0, 1], &[2, 3]);
        assert_eq!(a.star(), tp(4, &[2, 3], &[0, 1]));
    }

    #[test]
    fn family_join_meet() {
        let names: Vec<String> = ["e", "f"].iter().map(|s| s.to_string()).collect();
        let _ = names;
        // {(∅,{e}), ({e},∅)} over J={e,f}: join = ({e},∅)
        let z = [tp(2, &[], &[0]), tp(2, &[0], &[])];
        assert_eq!(join_all(2, &z), tp(2, &[0], &[]));
        assert_eq!(meet_all(2, &z), tp(2, &[], &[0]));
        // top absorbs the join of the whole carrier
        let all = enumerate_partitions(2);
        assert_eq!(join_all(2, &all), TernaryPartition::top(2));
        assert_eq!(meet_all(2, &all), TernaryPartition::bottom(2));
        // empty-family conventions
        assert_eq!(join_all(2, []), TernaryPartition::bottom(2));
        assert_eq!(meet_all(2, []), TernaryPartition::top(2));
    }

    proptest::proptest! {
        /// Familywise joins and meets agree with folds of the binary
        /// operations on arbitrary nonempty families.
        #[test]
        fn familywise_ops_equal_folds(picks in proptest::collection::vec(0usize..27, 1..12)) {
            let carrier = enumerate_partitions(3);
            let family: Vec<TernaryPartition> =
                picks.iter().map(|&i| carrier[i].clone()).collect();
            let fold_join = family
                .iter()
                .skip(1)
                .fold(family[0].clone(), |acc, p| acc.join(p));
            let fold_meet = family
                .iter()
                .skip(1)
                .fold(family[0].clone(), |acc, p| acc.meet(p));
            proptest::prop_assert_eq!(join_all(3, &family), fold_join);
            proptest::prop_assert_eq!(meet_all(3, &family), fold_meet);
        }
    }

    #[test]
    fn tp_algebra_shapes() {
        let names = |k: usize| -> Vec<String> { (0..k).map(|i| format!("j{i}")).collect() };
        let chain = build_tp_algebra(&names(1)).unwrap();
        assert_eq!(chain.len(), 3);
        assert!(chain.is_crdsa().0);

        let nine = build_tp_algebra(&names(2)).unwrap();
        assert_eq!(nine.len(), 9);
        let (ok, core) = nine.is_crdsa();
        assert!(ok);
        assert_eq!(nine.label(core.unwrap()), "(∅,∅)");

        let point = build_tp_algebra(&names(0)).unwrap();
        assert_eq!(point.len(), 1);
    }

    #[test]
    #[should_panic(expected = "disjoint")]
    fn overlapping_parts_are_rejected() {
        let _ = tp(2, &[0], &[0, 1]);
    }
}

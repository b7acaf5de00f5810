//! Finite approximation spaces ⟨U, θ⟩ and their rough set algebras.
//!
//! An approximation space is a finite ordered universe together with an
//! equivalence relation given by its partition blocks. Every subset X of
//! the universe has a lower approximation (the union of blocks contained
//! in X) and an upper approximation (the union of blocks meeting X); the
//! pair of the two is the *rough set* of X, and the collection of all
//! distinct rough pairs carries the principal rough set algebra: meets
//! and joins componentwise, `⟨X̲,X̄⟩* = ⟨X̄ᶜ,X̄ᶜ⟩` and `⟨X̲,X̄⟩⁺ = ⟨X̲ᶜ,X̲ᶜ⟩`.
//!
//! The carrier is enumerated directly from the per-block trichotomy
//! (outside / boundary / inside) rather than through the 2^|U| subset
//! images; the power-set image serves as a test oracle only. A block can
//! be a boundary region only when it has at least two elements, which is
//! why the algebra has a core element exactly when every block does.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteAlgebra, MAX_TABLE_CARRIER};
use crate::chain::{C3Value, C3Vector};
use crate::set::{render_set, IndexSet};

// Per-block trichotomy digits, ordered by the chain 0 < h < 1.
const OUTSIDE: u8 = 0;
const BOUNDARY: u8 = 1;
const INSIDE: u8 = 2;

/// Validation failures for an approximation space.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("universe must not be empty")]
    EmptyUniverse,
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("block must not be empty")]
    EmptyBlock,
    #[error("unknown element {0:?} (not declared in the universe)")]
    UnknownElement(String),
    #[error("element {0:?} already belongs to a block")]
    ElementInTwoBlocks(String),
    #[error("element {0:?} is not covered by any block")]
    UncoveredElement(String),
}

/// A finite set with an equivalence relation, given by its blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    names: Vec<String>,
    blocks: Vec<IndexSet>,
    class_of: Vec<usize>,
}

impl ApproximationSpace {
    /// Builds a space from element names and blocks of element indices.
    /// Blocks keep their given order; elements keep universe order.
    pub fn new(names: Vec<String>, blocks: Vec<Vec<usize>>) -> Result<Self, SpaceError> {
        if names.is_empty() {
            return Err(SpaceError::EmptyUniverse);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(SpaceError::DuplicateElement(name.clone()));
            }
        }
        let n = names.len();
        let mut class_of = vec![usize::MAX; n];
        let mut block_sets = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(SpaceError::EmptyBlock);
            }
            let mut set = IndexSet::empty(n);
            for &i in block {
                if i >= n {
                    return Err(SpaceError::UnknownElement(format!("#{i}")));
                }
                if class_of[i] != usize::MAX || set.contains(i) {
                    return Err(SpaceError::ElementInTwoBlocks(names[i].clone()));
                }
                class_of[i] = b;
                set.insert(i);
            }
            block_sets.push(set);
        }
        if let Some(i) = (0..n).find(|&i| class_of[i] == usize::MAX) {
            return Err(SpaceError::UncoveredElement(names[i].clone()));
        }
        Ok(ApproximationSpace {
            names,
            blocks: block_sets,
            class_of,
        })
    }

    /// Name-based construction, mostly for tests and examples.
    pub fn from_names(names: &[&str], blocks: &[&[&str]]) -> Result<Self, SpaceError> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let resolve = |name: &str| -> Result<usize, SpaceError> {
            owned
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| SpaceError::UnknownElement(name.to_string()))
        };
        let mut index_blocks = Vec::with_capacity(blocks.len());
        for block in blocks {
            index_blocks.push(block.iter().map(|n| resolve(n)).collect::<Result<_, _>>()?);
        }
        Self::new(owned, index_blocks)
    }

    pub fn universe_len(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Number of equivalence classes, |E|.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[IndexSet] {
        &self.blocks
    }

    /// Ordinal of the block containing element `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Builds a subset of the universe from element names.
    pub fn subset(&self, members: &[&str]) -> Result<IndexSet, SpaceError> {
        let mut set = IndexSet::empty(self.universe_len());
        for name in members {
            let i = self
                .element(name)
                .ok_or_else(|| SpaceError::UnknownElement(name.to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Lower approximation: the union of blocks contained in X.
    pub fn lower_approx(&self, x: &IndexSet) -> IndexSet {
        let mut out = IndexSet::empty(self.universe_len());
        for block in &self.blocks {
            if block.is_subset_of(x) {
                out = out.union(block);
            }
        }
        out
    }

    /// Upper approximation: the union of blocks meeting X.
    pub fn upper_approx(&self, x: &IndexSet) -> IndexSet {
        let mut out = IndexSet::empty(self.universe_len());
        for block in &self.blocks {
            if !block.is_disjoint_from(x) {
                out = out.union(block);
            }
        }
        out
    }

    /// Boundary region: upper minus lower approximation.
    pub fn boundary(&self, x: &IndexSet) -> IndexSet {
        self.upper_approx(x).difference(&self.lower_approx(x))
    }

    /// The rough set of X.
    pub fn rough_pair(&self, x: &IndexSet) -> RoughPair {
        RoughPair {
            lower: self.lower_approx(x),
            upper: self.upper_approx(x),
        }
    }

    /// Whether `pair` is realizable in this space: both parts θ-closed,
    /// lower ⊆ upper, and every boundary block of size at least two.
    pub fn is_valid_pair(&self, pair: &RoughPair) -> bool {
        if !pair.lower.is_subset_of(&pair.upper) {
            return false;
        }
        let closed = |s: &IndexSet| {
            self.blocks
                .iter()
                .all(|b| b.is_subset_of(s) || b.is_disjoint_from(s))
        };
        closed(&pair.lower)
            && closed(&pair.upper)
            && self
                .blocks
                .iter()
                .all(|b| !b.is_subset_of(&pair.boundary()) || b.len() >= 2)
    }

    fn pair_from_digits(&self, digits: &[u8]) -> RoughPair {
        let n = self.universe_len();
        let mut lower = IndexSet::empty(n);
        let mut upper = IndexSet::empty(n);
        for (block, &d) in self.blocks.iter().zip(digits) {
            match d {
                INSIDE => {
                    lower = lower.union(block);
                    upper = upper.union(block);
                }
                BOUNDARY => upper = upper.union(block),
                _ => {}
            }
        }
        RoughPair { lower, upper }
    }

    /// Per-block trichotomy of a pair: 1 where the block lies inside the
    /// lower approximation, 0 where it misses the upper approximation,
    /// h in between.
    pub fn block_trichotomy(&self, pair: &RoughPair) -> C3Vector {
        C3Vector(
            self.blocks
                .iter()
                .map(|b| {
                    if b.is_subset_of(&pair.lower) {
                        C3Value::One
                    } else if b.is_disjoint_from(&pair.upper) {
                        C3Value::Zero
                    } else {
                        C3Value::H
                    }
                })
                .collect(),
        )
    }

    /// Number of distinct rough pairs: the product over blocks of 2 for
    /// singletons and 3 otherwise. Saturates instead of overflowing.
    pub fn carrier_size(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| if b.len() == 1 { 2usize } else { 3 })
            .fold(1usize, usize::saturating_mul)
    }

    /// All distinct rough pairs, in canonical order: lexicographic on the
    /// per-block trichotomy vector with 0 < h < 1 and the first block most
    /// significant. Singleton blocks admit no boundary digit.
    pub fn enumerate_carrier(&self) -> Vec<RoughPair> {
        let choices: Vec<&'static [u8]> = self
            .blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    [OUTSIDE, INSIDE].as_slice()
                } else {
                    [OUTSIDE, BOUNDARY, INSIDE].as_slice()
                }
            })
            .collect();
        let mut out = Vec::with_capacity(self.carrier_size());
        let mut pick = vec![0usize; choices.len()];
        loop {
            let digits: Vec<u8> = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
            out.push(self.pair_from_digits(&digits));
            let mut i = choices.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if pick[i] + 1 < choices[i].len() {
                    pick[i] += 1;
                    pick[i + 1..].fill(0);
                    break;
                }
            }
        }
    }

    /// Pseudocomplement of a pair: the crisp pair on the complement of
    /// the upper approximation.
    pub fn pair_star(&self, pair: &RoughPair) -> RoughPair {
        let c = pair.upper.complement();
        RoughPair {
            lower: c.clone(),
            upper: c,
        }
    }

    /// Dual pseudocomplement: the crisp pair on the complement of the
    /// lower approximation.
    pub fn pair_plus(&self, pair: &RoughPair) -> RoughPair {
        let c = pair.lower.complement();
        RoughPair {
            lower: c.clone(),
            upper: c,
        }
    }

    /// Builds the principal rough set algebra as an explicit algebra.
    ///
    /// The carrier is [`Self::enumerate_carrier`] in canonical order with
    /// 0 = (∅,∅) and 1 = (U,U); the core constant (∅,U) is present exactly
    /// when every block has at least two elements.
    pub fn build_prsa(&self) -> Result<FiniteAlgebra, AlgebraError> {
        let size = self.carrier_size();
        if size > MAX_TABLE_CARRIER {
            return Err(AlgebraError::CarrierTooLarge {
                size,
                bound: MAX_TABLE_CARRIER,
            });
        }
        let carrier = self.enumerate_carrier();
        let index: HashMap<&RoughPair, usize> =
            carrier.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let labels = carrier.iter().map(|p| self.render_pair(p)).collect();
        let n = self.universe_len();
        let zero = RoughPair {
            lower: IndexSet::empty(n),
            upper: IndexSet::empty(n),
        };
        let one = RoughPair {
            lower: IndexSet::full(n),
            upper: IndexSet::full(n),
        };
        let core = RoughPair {
            lower: IndexSet::empty(n),
            upper: IndexSet::full(n),
        };
        FiniteAlgebra::from_fns(
            labels,
            |a, b| {
                index[&RoughPair {
                    lower: carrier[a].lower.intersection(&carrier[b].lower),
                    upper: carrier[a].upper.intersection(&carrier[b].upper),
                }]
            },
            |a, b| {
                index[&RoughPair {
                    lower: carrier[a].lower.union(&carrier[b].lower),
                    upper: carrier[a].upper.union(&carrier[b].upper),
                }]
            },
            |a| index[&self.pair_star(&carrier[a])],
            |a| index[&self.pair_plus(&carrier[a])],
            index[&zero],
            index[&one],
            if self.is_crdsa_space() {
                Some(index[&core])
            } else {
                None
            },
        )
    }

    /// Whether the rough set algebra has a core, i.e. every block has at
    /// least two elements.
    pub fn is_crdsa_space(&self) -> bool {
        self.blocks.iter().all(|b| b.len() >= 2)
    }

    /// A witness subset X with rough pair (∅, U): the second element of
    /// every block in universe order. None when some block is a singleton.
    pub fn core_witness(&self) -> Option<IndexSet> {
        if !self.is_crdsa_space() {
            return None;
        }
        let mut x = IndexSet::empty(self.universe_len());
        for block in &self.blocks {
            x.insert(block.iter().nth(1).expect("block has two elements"));
        }
        Some(x)
    }

    /// The crisp pairs (A, A) for every union A of blocks, in canonical
    /// carrier order. There are 2^|E| of them.
    pub fn crisp_sets(&self) -> Vec<RoughPair> {
        let k = self.block_count();
        assert!(k < 63, "too many blocks to enumerate crisp pairs");
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0..(1u64 << k) {
            // first block most significant, matching canonical carrier order
            let digits: Vec<u8> = (0..k)
                .map(|b| {
                    if mask >> (k - 1 - b) & 1 == 1 {
                        INSIDE
                    } else {
                        OUTSIDE
                    }
                })
                .collect();
            out.push(self.pair_from_digits(&digits));
        }
        out
    }

    /// The central pairs `{p : p* = p⁺}` of the rough set algebra,
    /// computed through the star and plus formulas, in canonical order.
    pub fn center_of_prsa(&self) -> Vec<RoughPair> {
        self.enumerate_carrier()
            .into_iter()
            .filter(|p| self.pair_star(p) == self.pair_plus(p))
            .collect()
    }

    /// Renders a pair as `({w,x},U)`, members in universe order.
    pub fn render_pair(&self, pair: &RoughPair) -> String {
        format!(
            "({},{})",
            render_set(&pair.lower, &self.names),
            render_set(&pair.upper, &self.names)
        )
    }

    pub fn render_subset(&self, set: &IndexSet) -> String {
        render_set(set, &self.names)
    }
}

/// A rough set: the pair of lower and upper approximations of some subset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RoughPair {
    lower: IndexSet,
    upper: IndexSet,
}

impl RoughPair {
    /// Assembles a pair from parts; panics unless lower ⊆ upper. Whether
    /// the parts are θ-closed for a given space is checked by
    /// [`ApproximationSpace::is_valid_pair`].
    pub fn new(lower: IndexSet, upper: IndexSet) -> Self {
        assert!(
            lower.is_subset_of(&upper),
            "rough pair requires lower ⊆ upper"
        );
        RoughPair { lower, upper }
    }

    pub fn lower(&self) -> &IndexSet {
        &self.lower
    }

    pub fn upper(&self) -> &IndexSet {
        &self.upper
    }

    pub fn boundary(&self) -> IndexSet {
        self.upper.difference(&self.lower)
    }

    pub fn is_crisp(&self) -> bool {
        self.lower == self.upper
    }
}

impl fmt::Debug for RoughPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.lower, self.upper)
    }
}

/// Doubles an index set into the space U = J × {0,1} with one two-element
/// block per index. Element `j` contributes `j0` and `j1`.
pub fn build_doubling_space(index_names: &[String]) -> Result<ApproximationSpace, SpaceError> {
    let mut names = Vec::with_capacity(index_names.len() * 2);
    let mut blocks = Vec::with_capacity(index_names.len());
    for (i, j) in index_names.iter().enumerate() {
        names.push(format!("{j}0"));
        names.push(format!("{j}1"));
        blocks.push(vec![2 * i, 2 * i + 1]);
    }
    ApproximationSpace::new(names, blocks)
}

/// Every set partition of `{0,..,n-1}`, as block lists in order of first
/// appearance, enumerated through restricted growth strings.
pub fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let k = max + 1;
            let mut blocks = vec![Vec::new(); k];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e);
            }
            out.push(blocks);
            return;
        }
        for v in 0..=max + 1 {
            rgs.push(v);
            rec(i + 1, n, rgs, max.max(v), out);
            rgs.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0];
    rec(1, n, &mut rgs, 0, &mut out);
    out
}

/// Single-letter universe names `a, b, c, ..` for generated spaces.
pub fn letter_names(n: usize) -> Vec<String> {
    assert!(n <= 26, "letter names cover at most 26 elements");
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Parse failures for the space file format, with a 1-based position.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected a `universe:` line before any blocks")]
    MissingUniverse,
    #[error("second `universe:` line")]
    DuplicateUniverse,
    #[error("unknown directive {0:?} (expected `universe:` or `block:`)")]
    UnknownDirective(String),
    #[error(transparent)]
    Space(SpaceError),
}

/// Parses the line-oriented space format:
///
/// ```text
/// # comment
/// universe: w x y z
/// block: w x
/// block: y z
/// ```
///
/// One `universe:` line first, then one `block:` line per class; `#`
/// starts a comment; element order is the order of first appearance.
pub fn parse_space(text: &str) -> Result<ApproximationSpace, ParseError> {
    let fail = |line: usize, column: usize, kind: ParseErrorKind| ParseError { line, column, kind };
    let space_fail =
        |line: usize, column: usize, e: SpaceError| fail(line, column, ParseErrorKind::Space(e));

    let mut names: Vec<String> = Vec::new();
    let mut name_pos: Vec<(usize, usize)> = Vec::new();
    let mut universe_seen = false;
    let mut claimed: Vec<bool> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(&(kw_col, keyword)) = tokens.first() else {
            continue;
        };
        match keyword {
            "universe:" => {
                if universe_seen {
                    return Err(fail(line_no, kw_col, ParseErrorKind::DuplicateUniverse));
                }
                universe_seen = true;
                if tokens.len() == 1 {
                    return Err(space_fail(line_no, kw_col, SpaceError::EmptyUniverse));
                }
                for &(col, name) in &tokens[1..] {
                    if names.iter().any(|n| n == name) {
                        return Err(space_fail(
                            line_no,
                            col,
                            SpaceError::DuplicateElement(name.to_string()),
                        ));
                    }
                    names.push(name.to_string());
                    name_pos.push((line_no, col));
                }
                claimed = vec![false; names.len()];
            }
            "block:" => {
                if !universe_seen {
                    return Err(fail(line_no, kw_col, ParseErrorKind::MissingUniverse));
                }
                if tokens.len() == 1 {
                    return Err(space_fail(line_no, kw_col, SpaceError::EmptyBlock));
                }
                let mut block = Vec::with_capacity(tokens.len() - 1);
                for &(col, name) in &tokens[1..] {
                    let Some(i) = names.iter().position(|n| n == name) else {
                        return Err(space_fail(
                            line_no,
                            col,
                            SpaceError::UnknownElement(name.to_string()),
                        ));
                    };
                    if claimed[i] {
                        return Err(space_fail(
                            line_no,
                            col,
                            SpaceError::ElementInTwoBlocks(name.to_string()),
                        ));
                    }
                    claimed[i] = true;
                    block.push(i);
                }
                blocks.push(block);
            }
            other => {
                return Err(fail(
                    line_no,
                    kw_col,
                    ParseErrorKind::UnknownDirective(other.to_string()),
                ));
            }
        }
    }

    if !universe_seen {
        return Err(fail(1, 1, ParseErrorKind::MissingUniverse));
    }
    if let Some(i) = claimed.iter().position(|&c| !c) {
        let (line, column) = name_pos[i];
        return Err(space_fail(
            line,
            column,
            SpaceError::UncoveredElement(names[i].clone()),
        ));
    }
    Ok(ApproximationSpace::new(names, blocks).expect("parser already validated the space"))
}

/// Whitespace tokenization with 1-based character columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut chars = line.char_indices().enumerate().peekable();
    while let Some(&(char_pos, (byte_pos, c))) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let start_byte = byte_pos;
        let start_col = char_pos + 1;
        let mut end_byte = line.len();
        while let Some(&(_, (b, c))) = chars.peek() {
            if c.is_whitespace() {
                end_byte = b;
                break;
            }
            chars.next();
        }
        out.push((start_col, &line[start_byte..end_byte]));
    }
    out
}

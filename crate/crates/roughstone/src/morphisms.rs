//! Structure maps between the algebras of this crate, verified
//! exhaustively rather than assumed.
//!
//! Three concrete maps matter here:
//!
//! * `alpha` — the coordinate bijection between a ternary partition
//!   lattice and the corresponding chain power: index i reads 1 on X₁,
//!   0 on X₂, h in between.
//! * `phi` — the passage from a rough pair to its ternary partition,
//!   `⟨X̲,X̄⟩ ↦ (X̲, X̄ᶜ)`, injective and operation-preserving on every
//!   rough set algebra.
//! * the class collapse — the per-block trichotomy sending a rough pair
//!   of ⟨U,θ⟩ to a vector indexed by the classes of θ. For spaces whose
//!   blocks all have at least two elements this is a bijection onto the
//!   full chain power.
//!
//! Composing `phi` with `alpha` embeds the rough set algebra into the
//! chain power indexed by the whole universe; the collapse identifies it
//! with the far smaller power indexed by the classes.
//!
//! [`AlgebraMap`] verifies a map between two explicit algebras;
//! [`C3PowerMap`] verifies a map whose target is a chain power computed
//! pointwise, so the target never needs its quadratic tables
//! materialized.

use std::collections::HashSet;

use thiserror::Error;

use crate::algebra::{find_isomorphism, AlgebraError, Elem, FiniteAlgebra, LawReport};
use crate::chain::{C3Value, C3Vector};
use crate::set::IndexSet;
use crate::space::{build_doubling_space, ApproximationSpace, RoughPair, SpaceError};
use crate::ternary::{build_tp_algebra, enumerate_partitions, TernaryPartition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// The coordinate map of a ternary partition: 1 on `ones`, 0 on `zeros`,
/// h on the middle region.
pub fn alpha(tp: &TernaryPartition) -> C3Vector {
    C3Vector(
        (0..tp.universe_len())
            .map(|i| {
                if tp.ones().contains(i) {
                    C3Value::One
                } else if tp.zeros().contains(i) {
                    C3Value::Zero
                } else {
                    C3Value::H
                }
            })
            .collect(),
    )
}

/// Inverse of [`alpha`]: collects the 1-coordinates and 0-coordinates.
pub fn alpha_inv(v: &C3Vector) -> TernaryPartition {
    let n = v.len();
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
}

/// The ternary partition of a rough pair: `⟨X̲,X̄⟩ ↦ (X̲, X̄ᶜ)`.
pub fn phi(pair: &RoughPair) -> TernaryPartition {
    TernaryPartition::new(pair.lower().clone(), pair.upper().complement())
}

/// A total assignment between the carriers of two explicit algebras.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    assignment: Vec<Elem>,
}

enum MapLevel {
    Homomorphism,
    Embedding,
    Isomorphism,
}

impl AlgebraMap {
    pub fn new(
        source: FiniteAlgebra,
        target: FiniteAlgebra,
        assignment: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        if assignment.len() != source.len() {
            return Err(AlgebraError::AssignmentShape {
                expected: source.len(),
                got: assignment.len(),
            });
        }
        if let Some((arg, &value)) = assignment
            .iter()
            .enumerate()
            .find(|(_, &v)| v >= target.len())
        {
            return Err(AlgebraError::AssignmentOutOfRange { arg, value });
        }
        Ok(AlgebraMap {
            source,
            target,
            assignment,
        })
    }

    pub fn source(&self) -> &FiniteAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FiniteAlgebra {
        &self.target
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.assignment[e]
    }

    pub fn assignment(&self) -> &[Elem] {
        &self.assignment
    }

    /// Checks preservation of 0, 1, h (when the source carries it), star,
    /// plus, meet and join over all inputs, in that order.
    pub fn is_homomorphism(&self) -> LawReport {
        self.verify(MapLevel::Homomorphism, "homomorphism")
    }

    /// A homomorphism that is also injective.
    pub fn is_embedding(&self) -> LawReport {
        self.verify(MapLevel::Embedding, "embedding")
    }

    /// An embedding that is also surjective.
    pub fn is_isomorphism(&self) -> LawReport {
        self.verify(MapLevel::Isomorphism, "isomorphism")
    }

    fn verify(&self, level: MapLevel, law: &'static str) -> LawReport {
        let (s, t, f) = (&self.source, &self.target, &self.assignment);
        if f[s.zero()] != t.zero() {
            return LawReport::fail(
                law,
                vec![s.zero()],
                format!("0 maps to {}, not 0", t.label(f[s.zero()])),
            );
        }
        if f[s.one()] != t.one() {
            return LawReport::fail(
                law,
                vec![s.one()],
                format!("1 maps to {}, not 1", t.label(f[s.one()])),
            );
        }
        if let Some(h) = s.core_h() {
            if t.core_h() != Some(f[h]) {
                return LawReport::fail(
                    law,
                    vec![h],
                    format!(
                        "core constant h maps to {}, not the target core",
                        t.label(f[h])
                    ),
                );
            }
        }
        for x in s.elements() {
            if f[s.star(x)] != t.star(f[x]) {
                return LawReport::fail(
                    law,
                    vec![x],
                    format!(
                        "f(x*) = {} but f(x)* = {} at x={}",
                        t.label(f[s.star(x)]),
                        t.label(t.star(f[x])),
                        s.label(x)
                    ),
                );
            }
            if f[s.plus(x)] != t.plus(f[x]) {
                return LawReport::fail(
                    law,
                    vec![x],
                    format!(
                        "f(x⁺) = {} but f(x)⁺ = {} at x={}",
                        t.label(f[s.plus(x)]),
                        t.label(t.plus(f[x])),
                        s.label(x)
                    ),
                );
            }
        }
        for x in s.elements() {
            for y in s.elements() {
                if f[s.meet(x, y)] != t.meet(f[x], f[y]) {
                    return LawReport::fail(
                        law,
                        vec![x, y],
                        format!(
                            "f(x∧y) = {} but f(x)∧f(y) = {} at x={}, y={}",
                            t.label(f[s.meet(x, y)]),
                            t.label(t.meet(f[x], f[y])),
                            s.label(x),
                            s.label(y)
                        ),
                    );
                }
                if f[s.join(x, y)] != t.join(f[x], f[y]) {
                    return LawReport::fail(
                        law,
                        vec![x, y],
                        format!(
                            "f(x∨y) = {} but f(x)∨f(y) = {} at x={}, y={}",
                            t.label(f[s.join(x, y)]),
                            t.label(t.join(f[x], f[y])),
                            s.label(x),
                            s.label(y)
                        ),
                    );
                }
            }
        }
        if matches!(level, MapLevel::Embedding | MapLevel::Isomorphism) {
            let mut seen: Vec<Option<Elem>> = vec![None; t.len()];
            for x in s.elements() {
                if let Some(prev) = seen[f[x]] {
                    return LawReport::fail(
                        law,
                        vec![prev, x],
                        format!(
                            "not injective: {} and {} both map to {}",
                            s.label(prev),
                            s.label(x),
                            t.label(f[x])
                        ),
                    );
                }
                seen[f[x]] = Some(x);
            }
            if matches!(level, MapLevel::Isomorphism) {
                if let Some(missed) = t.elements().find(|&e| seen[e].is_none()) {
                    return LawReport::fail(
                        law,
                        vec![missed],
                        format!("not surjective: no element maps to {}", t.label(missed)),
                    );
                }
            }
        }
        LawReport::ok(law)
    }
}

/// A total assignment from an explicit algebra into the chain power of a
/// given width, with target operations computed pointwise on the vectors.
#[derive(Debug, Clone)]
pub struct C3PowerMap {
    source: FiniteAlgebra,
    width: usize,
    images: Vec<C3Vector>,
}

impl C3PowerMap {
    pub fn new(
        source: FiniteAlgebra,
        width: usize,
        images: Vec<C3Vector>,
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.len() {
            return Err(AlgebraError::AssignmentShape {
                expected: source.len(),
                got: images.len(),
            });
        }
        if let Some((arg, img)) = images.iter().enumerate().find(|(_, v)| v.len() != width) {
            return Err(AlgebraError::AssignmentOutOfRange {
                arg,
                value: img.len(),
            });
        }
        Ok(C3PowerMap {
            source,
            width,
            images,
        })
    }

    pub fn source(&self) -> &FiniteAlgebra {
        &self.source
    }

    /// Number of coordinates of the target power.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn image(&self, e: Elem) -> &C3Vector {
        &self.images[e]
    }

    pub fn images(&self) -> &[C3Vector] {
        &self.images
    }

    pub fn is_homomorphism(&self) -> LawReport {
        self.verify(MapLevel::Homomorphism, "homomorphism")
    }

    pub fn is_embedding(&self) -> LawReport {
        self.verify(MapLevel::Embedding, "embedding")
    }

    /// An embedding hitting all 3^width vectors. Surjectivity follows
    /// from injectivity and a cardinality count, so the full target is
    /// never enumerated.
    pub fn is_isomorphism(&self) -> LawReport {
        self.verify(MapLevel::Isomorphism, "isomorphism")
    }

    fn verify(&self, level: MapLevel, law: &'static str) -> LawReport {
        let (s, f) = (&self.source, &self.images);
        let constants = [(s.zero(), C3Value::Zero, "0"), (s.one(), C3Value::One, "1")];
        for (e, v, name) in constants {
            if f[e] != C3Vector::constant(self.width, v) {
                return LawReport::fail(
                    law,
                    vec![e],
                    format!("constant {name} maps to {}, not the constant vector", f[e]),
                );
            }
        }
        if let Some(h) = s.core_h() {
            if f[h] != C3Vector::constant(self.width, C3Value::H) {
                return LawReport::fail(
                    law,
                    vec![h],
                    format!("core constant h maps to {}, not the all-h vector", f[h]),
                );
            }
        }
        for x in s.elements() {
            if f[s.star(x)] != f[x].star() {
                return LawReport::fail(
                    law,
                    vec![x],
                    format!(
                        "f(x*) = {} but f(x)* = {} at x={}",
                        f[s.star(x)],
                        f[x].star(),
                        s.label(x)
                    ),
                );
            }
            if f[s.plus(x)] != f[x].plus() {
                return LawReport::fail(
                    law,
                    vec![x],
                    format!(
                        "f(x⁺) = {} but f(x)⁺ = {} at x={}",
                        f[s.plus(x)],
                        f[x].plus(),
                        s.label(x)
                    ),
                );
            }
        }
        for x in s.elements() {
            for y in s.elements() {
                if f[s.meet(x, y)] != f[x].meet(&f[y]) {
                    return LawReport::fail(
                        law,
                        vec![x, y],
                        format!(
                            "f(x∧y) = {} but f(x)∧f(y) = {} at x={}, y={}",
                            f[s.meet(x, y)],
                            f[x].meet(&f[y]),
                            s.label(x),
                            s.label(y)
                        ),
                    );
                }
                if f[s.join(x, y)] != f[x].join(&f[y]) {
                    return LawReport::fail(
                        law,
                        vec![x, y],
                        format!(
                            "f(x∨y) = {} but f(x)∨f(y) = {} at x={}, y={}",
                            f[s.join(x, y)],
                            f[x].join(&f[y]),
                            s.label(x),
                            s.label(y)
                        ),
                    );
                }
            }
        }
        if matches!(level, MapLevel::Embedding | MapLevel::Isomorphism) {
            let mut seen: HashSet<&C3Vector> = HashSet::with_capacity(f.len());
            for x in s.elements() {
                if !seen.insert(&f[x]) {
                    let prev = s.elements().find(|&p| f[p] == f[x]).expect("duplicate");
                    return LawReport::fail(
                        law,
                        vec![prev, x],
                        format!(
                            "not injective: {} and {} both map to {}",
                            s.label(prev),
                            s.label(x),
                            f[x]
                        ),
                    );
                }
            }
            if matches!(level, MapLevel::Isomorphism) {
                let full = 3usize.checked_pow(self.width as u32);
                if full != Some(s.len()) {
                    return LawReport::fail(
                        law,
                        vec![],
                        format!(
                            "not surjective: image has {} of {} vectors",
                            s.len(),
                            full.map_or("3^width".to_string(), |n| n.to_string())
                        ),
                    );
                }
            }
        }
        LawReport::ok(law)
    }
}

/// The map α as a verified object: the ternary partition algebra over
/// `names` mapped coordinatewise into the chain power of the same width.
pub fn alpha_map(names: &[String]) -> Result<C3PowerMap, AlgebraError> {
    let source = build_tp_algebra(names)?;
    let images = enumerate_partitions(names.len())
        .iter()
        .map(alpha)
        .collect();
    C3PowerMap::new(source, names.len(), images)
}

/// The map φ as a verified object between explicit algebras: the rough
/// set algebra of `space` into the ternary partition algebra over U.
///
/// Bounded by the table cap on 3^|U|, so this route suits small
/// universes; [`embed_prsa_into_c3u`] scales further.
pub fn phi_map(space: &ApproximationSpace) -> Result<AlgebraMap, AlgebraError> {
    let source = space.build_prsa()?;
    let target = build_tp_algebra(space.names())?;
    let tp_carrier = enumerate_partitions(space.universe_len());
    let assignment = space
        .enumerate_carrier()
        .iter()
        .map(|pair| {
            let tp = phi(pair);
            tp_carrier
                .iter()
                .position(|q| *q == tp)
                .expect("phi lands in the ternary partition carrier")
        })
        .collect();
    AlgebraMap::new(source, target, assignment)
}

/// The embedding `⟨X̲,X̄⟩ ↦ α(X̲, X̄ᶜ)` of the rough set algebra into the
/// chain power indexed by the universe, as a verified object.
///
/// The target stays pointwise, so only the rough carrier is bounded by
/// the table cap — the universe may be larger than the algebra.
pub fn embed_prsa_into_c3u(space: &ApproximationSpace) -> Result<C3PowerMap, AlgebraError> {
    let source = space.build_prsa()?;
    let images = space
        .enumerate_carrier()
        .iter()
        .map(|pair| alpha(&phi(pair)))
        .collect();
    C3PowerMap::new(source, space.universe_len(), images)
}

/// The per-class trichotomy collapse of the rough set algebra into the
/// chain power indexed by the classes of θ, as a verified object.
pub fn class_collapse(space: &ApproximationSpace) -> Result<C3PowerMap, AlgebraError> {
    let source = space.build_prsa()?;
    let images = space
        .enumerate_carrier()
        .iter()
        .map(|pair| space.block_trichotomy(pair))
        .collect();
    C3PowerMap::new(source, space.block_count(), images)
}

/// Round trip through the doubling construction: builds the space
/// U = J × {0,1} with one block per index, then verifies that the class
/// collapse identifies its rough set algebra with the chain power over J,
/// that α identifies the ternary partition lattice with the same power,
/// and (for |J| ≤ 2) that a brute-force witness confirms the composite
/// isomorphism between the rough set algebra and the partition lattice.
pub fn roundtrip_doubling(index_names: &[String]) -> Result<LawReport, MorphismError> {
    const LAW: &str = "doubling-roundtrip";
    let space = build_doubling_space(index_names)?;

    let collapse = class_collapse(&space)?;
    let report = collapse.is_isomorphism();
    if let Some(ce) = report.counterexample() {
        return Ok(LawReport::fail(
            LAW,
            ce.elements.clone(),
            format!("class collapse is not an isomorphism: {}", ce.equation),
        ));
    }

    let coord = alpha_map(index_names)?;
    let report = coord.is_isomorphism();
    if let Some(ce) = report.counterexample() {
        return Ok(LawReport::fail(
            LAW,
            ce.elements.clone(),
            format!("α is not an isomorphism: {}", ce.equation),
        ));
    }

    if index_names.len() <= 2 {
        let prsa = space.build_prsa()?;
        let tp = build_tp_algebra(index_names)?;
        if find_isomorphism(&prsa, &tp)?.is_none() {
            return Ok(LawReport::fail(
                LAW,
                vec![],
                "no brute-force isomorphism witness between the rough algebra \
                 and the partition lattice"
                    .to_string(),
            ));
        }
    }
    Ok(LawReport::ok(LAW))
}

//! Equational law checkers.
//!
//! Each checker substitutes every tuple of carrier elements into one family
//! of identities and reports the first violation. Tuples are enumerated in
//! lexicographic carrier order and the families in a fixed documented
//! order, so a failing algebra always yields the same counterexample.

use super::{AlgebraError, Elem, FiniteAlgebra};

/// Verdict of one law-family check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    law: &'static str,
    counterexample: Option<Counterexample>,
}

/// A substitution witnessing the failure of a law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// The substituted carrier elements, in quantifier order.
    pub elements: Vec<Elem>,
    /// The violated identity instance, rendered with carrier labels.
    pub equation: String,
}

impl LawReport {
    pub(crate) fn ok(law: &'static str) -> Self {
        LawReport {
            law,
            counterexample: None,
        }
    }

    pub(crate) fn fail(law: &'static str, elements: Vec<Elem>, equation: String) -> Self {
        LawReport {
            law,
            counterexample: Some(Counterexample { elements, equation }),
        }
    }

    /// Name of the law family this report is about.
    pub fn law(&self) -> &'static str {
        self.law
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }
}

impl std::fmt::Display for LawReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: holds", self.law),
            Some(ce) => write!(f, "{}: fails, {}", self.law, ce.equation),
        }
    }
}

impl FiniteAlgebra {
    /// Checks that ⟨carrier, ∧, ∨, 0, 1⟩ is a bounded distributive
    /// lattice: commutativity, associativity, absorption, idempotence,
    /// both distributive laws, and the 0/1 bound laws, in that order.
    pub fn check_bounded_distributive_lattice(&self) -> LawReport {
        const LAW: &str = "bounded-distributive-lattice";
        for x in self.elements() {
            for y in self.elements() {
                if self.meet(x, y) != self.meet(y, x) {
                    return self.fail2(LAW, "∧ not commutative", x, y);
                }
                if self.join(x, y) != self.join(y, x) {
                    return self.fail2(LAW, "∨ not commutative", x, y);
                }
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if self.meet(x, self.meet(y, z)) != self.meet(self.meet(x, y), z) {
                        return self.fail3(LAW, "∧ not associative", x, y, z);
                    }
                    if self.join(x, self.join(y, z)) != self.join(self.join(x, y), z) {
                        return self.fail3(LAW, "∨ not associative", x, y, z);
                    }
                }
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                if self.meet(x, self.join(x, y)) != x {
                    return self.fail2(LAW, "absorption x∧(x∨y)=x fails", x, y);
                }
                if self.join(x, self.meet(x, y)) != x {
                    return self.fail2(LAW, "absorption x∨(x∧y)=x fails", x, y);
                }
            }
        }
        for x in self.elements() {
            if self.meet(x, x) != x {
                return self.fail1(LAW, "∧ not idempotent", x);
            }
            if self.join(x, x) != x {
                return self.fail1(LAW, "∨ not idempotent", x);
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return self.fail3(LAW, "x∧(y∨z)=(x∧y)∨(x∧z) fails", x, y, z);
                    }
                    let lhs = self.join(x, self.meet(y, z));
                    let rhs = self.meet(self.join(x, y), self.join(x, z));
                    if lhs != rhs {
                        return self.fail3(LAW, "x∨(y∧z)=(x∨y)∧(x∨z) fails", x, y, z);
                    }
                }
            }
        }
        for x in self.elements() {
            if self.meet(self.zero(), x) != self.zero() {
                return self.fail1(LAW, "0 is not a meet annihilator", x);
            }
            if self.join(self.zero(), x) != x {
                return self.fail1(LAW, "0 is not a join identity", x);
            }
            if self.meet(self.one(), x) != x {
                return self.fail1(LAW, "1 is not a meet identity", x);
            }
            if self.join(self.one(), x) != self.one() {
                return self.fail1(LAW, "1 is not a join annihilator", x);
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks `y ≤ x* ⟺ y ∧ x = 0` for all x, y.
    pub fn check_pseudocomplement(&self) -> LawReport {
        const LAW: &str = "pseudocomplement";
        for x in self.elements() {
            for y in self.elements() {
                let below_star = self.leq(y, self.star(x));
                let meets_to_zero = self.meet(y, x) == self.zero();
                if below_star != meets_to_zero {
                    let eq = format!(
                        "y ≤ x* is {below_star} but y∧x = 0 is {meets_to_zero} at x={}, y={} (x*={})",
                        self.label(x),
                        self.label(y),
                        self.label(self.star(x)),
                    );
                    return LawReport::fail(LAW, vec![x, y], eq);
                }
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks `y ≥ x⁺ ⟺ y ∨ x = 1` for all x, y.
    pub fn check_dual_pseudocomplement(&self) -> LawReport {
        const LAW: &str = "dual-pseudocomplement";
        for x in self.elements() {
            for y in self.elements() {
                let above_plus = self.leq(self.plus(x), y);
                let joins_to_one = self.join(y, x) == self.one();
                if above_plus != joins_to_one {
                    let eq = format!(
                        "y ≥ x⁺ is {above_plus} but y∨x = 1 is {joins_to_one} at x={}, y={} (x⁺={})",
                        self.label(x),
                        self.label(y),
                        self.label(self.plus(x)),
                    );
                    return LawReport::fail(LAW, vec![x, y], eq);
                }
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks the Stone identities `x* ∨ x** = 1` and `x⁺ ∧ x⁺⁺ = 0`.
    pub fn check_stone_identities(&self) -> LawReport {
        const LAW: &str = "stone-identities";
        for x in self.elements() {
            let s = self.star(x);
            if self.join(s, self.star(s)) != self.one() {
                let eq = format!(
                    "x*∨x** = {} ≠ 1 at x={}",
                    self.label(self.join(s, self.star(s))),
                    self.label(x)
                );
                return LawReport::fail(LAW, vec![x], eq);
            }
        }
        for x in self.elements() {
            let p = self.plus(x);
            if self.meet(p, self.plus(p)) != self.zero() {
                let eq = format!(
                    "x⁺∧x⁺⁺ = {} ≠ 0 at x={}",
                    self.label(self.meet(p, self.plus(p))),
                    self.label(x)
                );
                return LawReport::fail(LAW, vec![x], eq);
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks regularity in both of its equivalent forms: the inequality
    /// `x ∧ x⁺ ≤ y ∨ y*` for all pairs, and the implication
    /// `x* = y* and x⁺ = y⁺ ⟹ x = y`.
    pub fn check_regular(&self) -> LawReport {
        const LAW: &str = "regularity";
        for x in self.elements() {
            for y in self.elements() {
                let lhs = self.meet(x, self.plus(x));
                let rhs = self.join(y, self.star(y));
                if !self.leq(lhs, rhs) {
                    let eq = format!(
                        "x∧x⁺ = {} ≰ {} = y∨y* at x={}, y={}",
                        self.label(lhs),
                        self.label(rhs),
                        self.label(x),
                        self.label(y)
                    );
                    return LawReport::fail(LAW, vec![x, y], eq);
                }
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                if self.star(x) == self.star(y) && self.plus(x) == self.plus(y) && x != y {
                    let eq = format!(
                        "x={} and y={} share x*=y*={} and x⁺=y⁺={} but differ",
                        self.label(x),
                        self.label(y),
                        self.label(self.star(x)),
                        self.label(self.plus(x))
                    );
                    return LawReport::fail(LAW, vec![x, y], eq);
                }
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks that the center contains 0 and 1, is closed under ∧, ∨ and *,
    /// and that * acts as Boolean complement within it.
    pub fn check_center_boolean(&self) -> LawReport {
        const LAW: &str = "center-boolean";
        let mut central = vec![false; self.len()];
        for e in self.center() {
            central[e] = true;
        }
        if !central[self.zero()] {
            return self.fail1(LAW, "0 is not central", self.zero());
        }
        if !central[self.one()] {
            return self.fail1(LAW, "1 is not central", self.one());
        }
        for x in self.elements().filter(|&x| central[x]) {
            let s = self.star(x);
            if !central[s] {
                let eq = format!(
                    "x* = {} leaves the center at x={}",
                    self.label(s),
                    self.label(x)
                );
                return LawReport::fail(LAW, vec![x], eq);
            }
            if self.meet(x, s) != self.zero() {
                return self.fail1(LAW, "x∧x* ≠ 0 within the center", x);
            }
            if self.join(x, s) != self.one() {
                return self.fail1(LAW, "x∨x* ≠ 1 within the center", x);
            }
            for y in self.elements().filter(|&y| central[y]) {
                if !central[self.meet(x, y)] {
                    return self.fail2(LAW, "center not closed under ∧", x, y);
                }
                if !central[self.join(x, y)] {
                    return self.fail2(LAW, "center not closed under ∨", x, y);
                }
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks the image characterizations of the center:
    /// `{x : x* = x⁺} = {x* : x ∈ L} = {x⁺ : x ∈ L}`.
    pub fn check_center_images(&self) -> LawReport {
        const LAW: &str = "center-images";
        let mut central = vec![false; self.len()];
        for e in self.center() {
            central[e] = true;
        }
        let mut star_image = vec![false; self.len()];
        let mut plus_image = vec![false; self.len()];
        for x in self.elements() {
            star_image[self.star(x)] = true;
            plus_image[self.plus(x)] = true;
        }
        for e in self.elements() {
            if central[e] != star_image[e] {
                let eq = format!(
                    "{} is {} the center but {} the star image",
                    self.label(e),
                    in_out(central[e]),
                    in_out(star_image[e])
                );
                return LawReport::fail(LAW, vec![e], eq);
            }
            if central[e] != plus_image[e] {
                let eq = format!(
                    "{} is {} the center but {} the plus image",
                    self.label(e),
                    in_out(central[e]),
                    in_out(plus_image[e])
                );
                return LawReport::fail(LAW, vec![e], eq);
            }
        }
        LawReport::ok(LAW)
    }

    /// Checks the core decomposition `x = x** ∧ (x⁺⁺ ∨ h)` and its dual
    /// `x = x⁺⁺ ∨ (x** ∧ h)` against the unique core element.
    ///
    /// Errors when the core is not a singleton.
    pub fn check_core_decomposition(&self) -> Result<LawReport, AlgebraError> {
        const LAW: &str = "core-decomposition";
        let core = self.core();
        let [h] = core[..] else {
            return Err(AlgebraError::NoUniqueCore { found: core.len() });
        };
        for x in self.elements() {
            let ss = self.star(self.star(x));
            let pp = self.plus(self.plus(x));
            let meet_form = self.meet(ss, self.join(pp, h));
            if meet_form != x {
                let eq = format!(
                    "x**∧(x⁺⁺∨h) = {} ≠ x at x={}",
                    self.label(meet_form),
                    self.label(x)
                );
                return Ok(LawReport::fail(LAW, vec![x], eq));
            }
            let join_form = self.join(pp, self.meet(ss, h));
            if join_form != x {
                let eq = format!(
                    "x⁺⁺∨(x**∧h) = {} ≠ x at x={}",
                    self.label(join_form),
                    self.label(x)
                );
                return Ok(LawReport::fail(LAW, vec![x], eq));
            }
        }
        Ok(LawReport::ok(LAW))
    }

    fn fail1(&self, law: &'static str, what: &str, x: Elem) -> LawReport {
        LawReport::fail(law, vec![x], format!("{what} at x={}", self.label(x)))
    }

    fn fail2(&self, law: &'static str, what: &str, x: Elem, y: Elem) -> LawReport {
        LawReport::fail(
            law,
            vec![x, y],
            format!("{what} at x={}, y={}", self.label(x), self.label(y)),
        )
    }

    fn fail3(&self, law: &'static str, what: &str, x: Elem, y: Elem, z: Elem) -> LawReport {
        LawReport::fail(
            law,
            vec![x, y, z],
            format!(
                "{what} at x={}, y={}, z={}",
                self.label(x),
                self.label(y),
                self.label(z)
            ),
        )
    }
}

fn in_out(b: bool) -> &'static str {
    if b {
        "in"
    } else {
        "outside"
    }
}

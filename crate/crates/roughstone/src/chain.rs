//! The three-element chain 0 < h < 1 and its finite powers.
//!
//! `C₃` carries the canonical core regular double Stone structure: meet
//! and join are min and max under the chain order, star sends everything
//! above 0 to 0 (and 0 to 1), plus sends everything below 1 to 1 (and 1
//! to 0), and h is the core element. Powers act coordinatewise; a vector
//! renders as a string such as `hh00`, one character per coordinate.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraError, FiniteAlgebra, MAX_TABLE_CARRIER};

/// One of the three chain values, ordered `Zero < H < One`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C3Value {
    Zero,
    H,
    One,
}

pub use C3Value::{One, Zero, H};

impl C3Value {
    pub const ALL: [C3Value; 3] = [Zero, H, One];

    pub fn meet(self, other: Self) -> Self {
        self.min(other)
    }

    pub fn join(self, other: Self) -> Self {
        self.max(other)
    }

    /// Pseudocomplement: 0 ↦ 1, h ↦ 0, 1 ↦ 0.
    pub fn star(self) -> Self {
        match self {
            Zero => One,
            H | One => Zero,
        }
    }

    /// Dual pseudocomplement: 0 ↦ 1, h ↦ 1, 1 ↦ 0.
    pub fn plus(self) -> Self {
        match self {
            Zero | H => One,
            One => Zero,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Zero => '0',
            H => 'h',
            One => '1',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Zero),
            'h' => Some(H),
            '1' => Some(One),
            _ => None,
        }
    }
}

impl fmt::Display for C3Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A point of C₃ᴱ: one chain value per coordinate of an ordered index set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct C3Vector(pub Vec<C3Value>);

impl C3Vector {
    pub fn constant(n: usize, v: C3Value) -> Self {
        C3Vector(vec![v; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coord(&self, i: usize) -> C3Value {
        self.0[i]
    }

    pub fn meet(&self, other: &Self) -> Self {
        self.zip_with(other, C3Value::meet)
    }

    pub fn join(&self, other: &Self) -> Self {
        self.zip_with(other, C3Value::join)
    }

    pub fn star(&self) -> Self {
        C3Vector(self.0.iter().map(|v| v.star()).collect())
    }

    pub fn plus(&self) -> Self {
        C3Vector(self.0.iter().map(|v| v.plus()).collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C3Value, C3Value) -> C3Value) -> Self {
        assert_eq!(self.len(), other.len(), "vectors over different index sets");
        C3Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl fmt::Display for C3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{}", v.as_char())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid chain vector character {0:?} (expected 0, h or 1)")]
pub struct ParseC3VectorError(char);

impl FromStr for C3Vector {
    type Err = ParseC3VectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| C3Value::from_char(c).ok_or(ParseC3VectorError(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(C3Vector)
    }
}

/// All 3ⁿ vectors in lexicographic order (first coordinate most
/// significant, coordinate order 0 < h < 1).
pub fn enumerate_vectors(n: usize) -> Vec<C3Vector> {
    let mut out = Vec::with_capacity(3usize.pow(n as u32));
    let mut digits = vec![0u8; n];
    loop {
        out.push(C3Vector(
            digits.iter().map(|&d| C3Value::ALL[d as usize]).collect(),
        ));
        // increment the base-3 counter, most significant digit first
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if digits[i] < 2 {
                digits[i] += 1;
                digits[i + 1..].fill(0);
                break;
            }
        }
    }
}

/// Builds C₃ⁿ as an explicit algebra: carrier in lexicographic vector
/// order, constants all-0, all-1 and all-h, operations coordinatewise.
pub fn build_c3_power(n: usize) -> Result<FiniteAlgebra, AlgebraError> {
    let size = 3usize.checked_pow(n as u32).unwrap_or(usize::MAX);
    if size > MAX_TABLE_CARRIER {
        return Err(AlgebraError::CarrierTooLarge {
            size,
            bound: MAX_TABLE_CARRIER,
        });
    }
    let vectors = enumerate_vectors(n);
    let index: std::collections::HashMap<C3Vector, usize> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let labels = vectors.iter().map(|v| v.to_string()).collect();
    FiniteAlgebra::from_fns(
        labels,
        |a, b| index[&vectors[a].meet(&vectors[b])],
        |a, b| index[&vectors[a].join(&vectors[b])],
        |a| index[&vectors[a].star()],
        |a| index[&vectors[a].plus()],
        index[&C3Vector::constant(n, Zero)],
        index[&C3Vector::constant(n, One)],
        Some(index[&C3Vector::constant(n, H)]),
    )
}

/// The three-element chain itself, as an explicit algebra.
pub fn build_c3() -> FiniteAlgebra {
    build_c3_power(1).expect("C3 is far below the carrier cap")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_plus_tables() {
        assert_eq!(Zero.star(), One);
        assert_eq!(H.star(), Zero);
        assert_eq!(One.star(), Zero);
        assert_eq!(Zero.plus(), One);
        assert_eq!(H.plus(), One);
        assert_eq!(One.plus(), Zero);
        // composition through the tables
        assert_eq!(H.plus().star(), Zero);
    }

    #[test]
    fn vector_ops_are_pointwise() {
        let a: C3Vector = "h0".parse().unwrap();
        let b: C3Vector = "0h".parse().unwrap();
        assert_eq!(a.join(&b), "hh".parse().unwrap());
        assert_eq!(a.meet(&b), "00".parse().unwrap());
        assert_eq!(
            C3Vector::from_str("1h").unwrap().star(),
            "00".parse().unwrap()
        );
        let zero = C3Vector::constant(2, Zero);
        assert_eq!(a.join(&zero), a);
    }

    #[test]
    fn meet_join_are_min_max() {
        for &a in &C3Value::ALL {
            for &b in &C3Value::ALL {
                assert_eq!(a.meet(b), a.min(b));
                assert_eq!(a.join(b), a.max(b));
            }
        }
    }

    #[test]
    fn display_roundtrip() {
        let v: C3Vector = "hh00".parse().unwrap();
        assert_eq!(v.to_string(), "hh00");
        assert_eq!(v.0, vec![H, H, Zero, Zero]);
        assert!("hx".parse::<C3Vector>().is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let vs = enumerate_vectors(2);
        let strings: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(
            strings,
            ["00", "0h", "01", "h0", "hh", "h1", "10", "1h", "11"]
        );
        assert_eq!(enumerate_vectors(0).len(), 1);
        assert_eq!(enumerate_vectors(3).len(), 27);
    }

    #[test]
    fn c3_squared_is_a_crdsa_with_the_expected_shape() {
        let alg = build_c3_power(2).unwrap();
        assert_eq!(alg.len(), 9);
        let (ok, core) = alg.is_crdsa();
        assert!(ok);
        assert_eq!(alg.label(core.unwrap()), "hh");
        let atoms: Vec<&str> = alg.atoms().iter().map(|&e| alg.label(e)).collect();
        assert_eq!(atoms, ["0h", "h0"]);
        let center: Vec<&str> = alg.center().iter().map(|&e| alg.label(e)).collect();
        assert_eq!(center, ["00", "01", "10", "11"]);
    }

    #[test]
    fn degenerate_and_cubic_powers() {
        let one = build_c3_power(0).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.is_crdsa().0);

        let cubed = build_c3_power(3).unwrap();
        assert_eq!(cubed.len(), 27);
        assert_eq!(cubed.center().len(), 8);
        let core: Vec<&str> = cubed.core().iter().map(|&e| cubed.label(e)).collect();
        assert_eq!(core, ["hhh"]);
        // atoms are exactly the vectors with a single h coordinate
        let atoms: Vec<&str> = cubed.atoms().iter().map(|&e| cubed.label(e)).collect();
        assert_eq!(atoms, ["00h", "0h0", "h00"]);
    }

    #[test]
    fn power_beyond_cap_is_refused() {
        assert!(matches!(
            build_c3_power(7),
            Err(AlgebraError::CarrierTooLarge { .. })
        ));
    }

    /// The covering relation of C₃², frozen from the nine-element Hasse
    /// diagram of the two-coordinate power.
    #[test]
    fn c3_squared_cover_relation() {
        let alg = build_c3_power(2).unwrap();
        let mut covers = Vec::new();
        for a in alg.elements() {
            for b in alg.elements() {
                if a != b && alg.leq(a, b) {
                    let strictly_between = alg
                        .elements()
                        .any(|c| c != a && c != b && alg.leq(a, c) && alg.leq(c, b));
                    if !strictly_between {
                        covers.push((alg.label(a).to_string(), alg.label(b).to_string()));
                    }
                }
            }
        }
        let expect = [
            ("00", "0h"),
            ("00", "h0"),
            ("0h", "01"),
            ("0h", "hh"),
            ("h0", "hh"),
            ("h0", "10"),
            ("01", "h1"),
            ("hh", "h1"),
            ("hh", "1h"),
            ("10", "1h"),
            ("h1", "11"),
            ("1h", "11"),
        ];
        let mut expect: Vec<(String, String)> = expect
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        covers.sort();
        expect.sort();
        assert_eq!(covers, expect);
    }
}

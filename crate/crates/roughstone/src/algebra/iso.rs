//! Isomorphism testing between explicit finite algebras.
//!
//! Two routes are provided. [`find_isomorphism`] runs a backtracking
//! search over operation-preserving bijections, pruned by constants and
//! by per-element fingerprints; it is exact but capped at
//! [`DEFAULT_ISO_BOUND`] elements. [`crdsa_isomorphic_by_center`] uses the
//! structure theory instead: two CRDSAs are isomorphic exactly when their
//! centers are, and finite Boolean algebras are isomorphic exactly when
//! they are equinumerous, so comparing center cardinalities decides the
//! question for carriers far beyond the search bound.

use super::{AlgebraError, Elem, FiniteAlgebra, DEFAULT_ISO_BOUND};

/// Searches for an isomorphism witness with the default size cap.
///
/// `Ok(Some(map))` carries the first witness in carrier order, as a vector
/// sending source index `i` to target index `map[i]`.
pub fn find_isomorphism(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<Option<Vec<Elem>>, AlgebraError> {
    find_isomorphism_bounded(a, b, DEFAULT_ISO_BOUND)
}

/// Same as [`find_isomorphism`] with an explicit carrier-size cap.
pub fn find_isomorphism_bounded(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    bound: usize,
) -> Result<Option<Vec<Elem>>, AlgebraError> {
    let size = a.len().max(b.len());
    if size > bound {
        return Err(AlgebraError::CarrierTooLarge { size, bound });
    }
    if a.len() != b.len() || a.core_h().is_some() != b.core_h().is_some() {
        return Ok(None);
    }

    let fa = fingerprints(a);
    let fb = fingerprints(b);
    {
        let mut sa = fa.clone();
        let mut sb = fb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
    }

    let n = a.len();
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; n]; // source -> target
    let mut used = vec![UNSET; n]; // target -> source

    let assign = |map: &mut Vec<usize>, used: &mut Vec<usize>, s: Elem, t: Elem| -> bool {
        if map[s] != UNSET {
            return map[s] == t;
        }
        if used[t] != UNSET {
            return false;
        }
        map[s] = t;
        used[t] = s;
        true
    };

    // Constants are forced.
    if !assign(&mut map, &mut used, a.zero(), b.zero())
        || !assign(&mut map, &mut used, a.one(), b.one())
    {
        return Ok(None);
    }
    if let (Some(ha), Some(hb)) = (a.core_h(), b.core_h()) {
        if !assign(&mut map, &mut used, ha, hb) {
            return Ok(None);
        }
    }

    if search(a, b, &fa, &fb, &mut map, &mut used, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Isomorphism invariants of one element: the sizes of its star and plus
/// fibers and of its down- and up-sets.
fn fingerprints(alg: &FiniteAlgebra) -> Vec<(usize, usize, usize, usize)> {
    alg.elements()
        .map(|e| {
            let star_fiber = alg.elements().filter(|&y| alg.star(y) == e).count();
            let plus_fiber = alg.elements().filter(|&y| alg.plus(y) == e).count();
            let below = alg.elements().filter(|&y| alg.leq(y, e)).count();
            let above = alg.elements().filter(|&y| alg.leq(e, y)).count();
            (star_fiber, plus_fiber, below, above)
        })
        .collect()
}

fn search(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    fa: &[(usize, usize, usize, usize)],
    fb: &[(usize, usize, usize, usize)],
    map: &mut Vec<usize>,
    used: &mut Vec<usize>,
    from: Elem,
) -> bool {
    const UNSET: usize = usize::MAX;
    let Some(s) = (from..a.len()).find(|&s| map[s] == UNSET) else {
        return full_check(a, b, map);
    };
    for t in b.elements() {
        if used[t] != UNSET || fa[s] != fb[t] {
            continue;
        }
        map[s] = t;
        used[t] = s;
        if consistent(a, b, map, s) && search(a, b, fa, fb, map, used, s + 1) {
            return true;
        }
        map[s] = UNSET;
        used[t] = UNSET;
    }
    false
}

/// Partial-map consistency after assigning `s`: every operation among
/// assigned elements whose result is also assigned must commute with the
/// map, and images of unary operations must not collide.
fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize], s: Elem) -> bool {
    const UNSET: usize = usize::MAX;
    let t = map[s];
    if map[a.star(s)] != UNSET && map[a.star(s)] != b.star(t) {
        return false;
    }
    if map[a.plus(s)] != UNSET && map[a.plus(s)] != b.plus(t) {
        return false;
    }
    for d in a.elements().filter(|&d| map[d] != UNSET) {
        for (x, y) in [(d, s), (s, d)] {
            let m = a.meet(x, y);
            if map[m] != UNSET && map[m] != b.meet(map[x], map[y]) {
                return false;
            }
            let j = a.join(x, y);
            if map[j] != UNSET && map[j] != b.join(map[x], map[y]) {
                return false;
            }
        }
        if a.star(d) == s && b.star(map[d]) != t {
            return false;
        }
        if a.plus(d) == s && b.plus(map[d]) != t {
            return false;
        }
    }
    true
}

fn full_check(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
    for x in a.elements() {
        if map[a.star(x)] != b.star(map[x]) || map[a.plus(x)] != b.plus(map[x]) {
            return false;
        }
        for y in a.elements() {
            if map[a.meet(x, y)] != b.meet(map[x], map[y])
                || map[a.join(x, y)] != b.join(map[x], map[y])
            {
                return false;
            }
        }
    }
    map[a.zero()] == b.zero() && map[a.one()] == b.one() && a.core_h().map(|h| map[h]) == b.core_h()
}

/// Decides isomorphism of two CRDSAs by comparing center cardinalities.
///
/// Errors when either algebra fails the CRDSA audit.
pub fn crdsa_isomorphic_by_center(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<bool, AlgebraError> {
    if !a.is_crdsa().0 || !b.is_crdsa().0 {
        return Err(AlgebraError::NotCrdsa);
    }
    Ok(a.center().len() == b.center().len())
}

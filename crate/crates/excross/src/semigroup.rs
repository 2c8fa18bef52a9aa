//! The universal inverse semigroup S(G) of a finite group G.
//!
//! S(G) is generated by symbols [g], g ∈ G, subject to
//!
//! ```text
//! (i)   [g⁻¹][g][h] = [g⁻¹][gh]
//! (ii)  [g][h][h⁻¹] = [gh][h⁻¹]
//! (iii) [g][e]      = [g]
//! ```
//!
//! Every element has a unique standard form ε_{s₁}…ε_{sₙ}[g] with
//! ε_g = [g][g⁻¹]. This module stores elements in that form as a set of ε
//! subscripts plus a bracket, with the convention that the subscript set
//! contains neither e (ε_e is the unit) nor the bracket g (ε_g[g] = [g]).
//!
//! The product rule used here,
//! `(E₁,g)·(E₂,h) = canon(E₁ ∪ gE₂ ∪ {g}, gh)`, follows from commuting
//! brackets past ε's ([h]ε_g = ε_{hg}[h]) and [g][h] = ε_g[gh]; it is treated
//! as a conjecture and certified against the word-rewriting oracle in
//! [`crate::oracle`] rather than assumed.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::group::GroupTable;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SgError {
    #[error("element index {index} out of range for group of order {order} (group mismatch?)")]
    GroupMismatch { index: usize, order: usize },
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
}

/// Default bound on |G| for full enumeration of S(G).
pub const DEFAULT_ENUM_BOUND: usize = 8;

/// An element of S(G) in canonical standard form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SElem {
    /// Sorted, deduplicated ε subscripts; never contains e or the bracket.
    eps: Vec<usize>,
    bracket: usize,
}

impl SElem {
    /// Canonicalizes: sorts, dedups, strips e and the bracket element.
    pub fn new<I: IntoIterator<Item = usize>>(
        group: &GroupTable,
        eps: I,
        bracket: usize,
    ) -> Result<SElem, SgError> {
        let order = group.order();
        if bracket >= order {
            return Err(SgError::GroupMismatch {
                index: bracket,
                order,
            });
        }
        let mut e: Vec<usize> = Vec::new();
        for s in eps {
            if s >= order {
                return Err(SgError::GroupMismatch { index: s, order });
            }
            if s != group.identity() && s != bracket {
                e.push(s);
            }
        }
        e.sort_unstable();
        e.dedup();
        Ok(SElem { eps: e, bracket })
    }

    /// The generator [g].
    pub fn generator(group: &GroupTable, g: usize) -> Result<SElem, SgError> {
        SElem::new(group, [], g)
    }

    /// The unit [e].
    pub fn unit() -> SElem {
        SElem {
            eps: Vec::new(),
            bracket: 0,
        }
    }

    /// The idempotent ε_g = [g][g⁻¹] (the unit when g = e).
    pub fn epsilon(group: &GroupTable, g: usize) -> Result<SElem, SgError> {
        SElem::new(group, [g], 0)
    }

    pub fn eps(&self) -> &[usize] {
        &self.eps
    }

    pub fn bracket(&self) -> usize {
        self.bracket
    }

    /// γ(ε_{s₁}…ε_{sₙ}[g]) = g; a homomorphism onto G.
    pub fn gamma(&self) -> usize {
        self.bracket
    }

    /// An element is idempotent iff its bracket is the unit.
    pub fn is_idempotent(&self) -> bool {
        self.bracket == 0
    }

    fn check(&self, group: &GroupTable) -> Result<(), SgError> {
        let order = group.order();
        if self.bracket >= order {
            return Err(SgError::GroupMismatch {
                index: self.bracket,
                order,
            });
        }
        for &s in &self.eps {
            if s >= order {
                return Err(SgError::GroupMismatch { index: s, order });
            }
        }
        Ok(())
    }

    /// Renders as `e_{s1}…e_{sn}[g]` using the group's element names.
    pub fn render(&self, group: &GroupTable) -> String {
        let mut out = String::new();
        for &s in &self.eps {
            let _ = write!(out, "e_{{{}}}", group.name(s));
        }
        let _ = write!(out, "[{}]", group.name(self.bracket));
        out
    }
}

impl std::fmt::Debug for SElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SElem(eps {:?}, bracket {})", self.eps, self.bracket)
    }
}

/// `x·y` via the certified closed form `(E₁,g)(E₂,h) = canon(E₁ ∪ gE₂ ∪ {g}, gh)`.
pub fn multiply(group: &GroupTable, x: &SElem, y: &SElem) -> Result<SElem, SgError> {
    x.check(group)?;
    y.check(group)?;
    Ok(mul_unchecked(group, x, y))
}

pub(crate) fn mul_unchecked(group: &GroupTable, x: &SElem, y: &SElem) -> SElem {
    let g = x.bracket;
    let eps = x
        .eps
        .iter()
        .copied()
        .chain(y.eps.iter().map(|&t| group.mul(g, t)))
        .chain([g]);
    SElem::new(group, eps, group.mul(g, y.bracket)).expect("indices in range")
}

/// `x*`: the unique inverse, `canon(g⁻¹·E ∪ {g⁻¹}, g⁻¹)`.
pub fn star(group: &GroupTable, x: &SElem) -> Result<SElem, SgError> {
    x.check(group)?;
    Ok(star_unchecked(group, x))
}

pub(crate) fn star_unchecked(group: &GroupTable, x: &SElem) -> SElem {
    let gi = group.inv(x.bracket);
    let eps = x.eps.iter().map(|&s| group.mul(gi, s)).chain([gi]);
    SElem::new(group, eps, gi).expect("indices in range")
}

/// Natural partial order: x ≤ y iff x = y·f for some idempotent f; in
/// standard form, same bracket and eps(y) ⊆ eps(x).
pub fn leq(x: &SElem, y: &SElem) -> bool {
    x.bracket == y.bracket && y.eps.iter().all(|s| x.eps.binary_search(s).is_ok())
}

/// All of S(G) in a deterministic order: brackets ascending, subscript subsets
/// by ascending bitmask over G∖{e, bracket}.
///
/// |S(G)| = 2^(n−1) + (n−1)·2^(n−2) for |G| = n.
pub fn enumerate(group: &GroupTable) -> Result<Vec<SElem>, SgError> {
    enumerate_with_bound(group, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_with_bound(group: &GroupTable, bound: usize) -> Result<Vec<SElem>, SgError> {
    let n = group.order();
    if n > bound {
        return Err(SgError::GroupTooLarge { order: n, bound });
    }
    let mut out = Vec::new();
    for bracket in 0..n {
        let candidates: Vec<usize> = (0..n)
            .filter(|&s| s != group.identity() && s != bracket)
            .collect();
        for mask in 0u64..(1u64 << candidates.len()) {
            let eps = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s);
            out.push(SElem::new(group, eps, bracket)?);
        }
    }
    Ok(out)
}

pub fn expected_count(order: usize) -> usize {
    if order == 1 {
        return 1;
    }
    (1 << (order - 1)) + (order - 1) * (1 << (order - 2))
}

/// Enumerated S(G) with an index, plus the full multiplication table.
pub struct SgTable {
    pub elements: Vec<SElem>,
    pub index: HashMap<SElem, usize>,
    pub table: Vec<Vec<usize>>,
}

impl SgTable {
    pub fn build(group: &GroupTable, bound: usize) -> Result<SgTable, SgError> {
        let elements = enumerate_with_bound(group, bound)?;
        let index: HashMap<SElem, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let table = elements
            .iter()
            .map(|x| {
                elements
                    .iter()
                    .map(|y| index[&mul_unchecked(group, x, y)])
                    .collect()
            })
            .collect();
        Ok(SgTable {
            elements,
            index,
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> GroupTable {
        GroupTable::preset("cyclic 2").unwrap()
    }

    fn z3() -> GroupTable {
        GroupTable::preset("cyclic 3").unwrap()
    }

    #[test]
    fn generators_and_unit() {
        let g = z2();
        assert_eq!(SElem::generator(&g, 0).unwrap(), SElem::unit());
        let a = SElem::generator(&g, 1).unwrap();
        assert_eq!(a.eps(), &[] as &[usize]);
        assert_eq!(a.bracket(), 1);
        let g3 = z3();
        let a2 = SElem::generator(&g3, 2).unwrap();
        assert_eq!(a2.bracket(), 2);
    }

    #[test]
    fn canonical_form_strips_unit_and_bracket() {
        let g = z3();
        // ε_e ε_a [a] = ε_a[a] = [a]: both e and the bracket are stripped.
        let x = SElem::new(&g, [0, 1], 1).unwrap();
        assert_eq!(x, SElem::generator(&g, 1).unwrap());
    }

    #[test]
    fn square_of_generator_is_epsilon() {
        let g = z2();
        let a = SElem::generator(&g, 1).unwrap();
        let aa = multiply(&g, &a, &a).unwrap();
        assert_eq!(aa, SElem::epsilon(&g, 1).unwrap());
        assert!(aa.is_idempotent());
    }

    #[test]
    fn right_unit_law() {
        let g = z3();
        for x in enumerate(&g).unwrap() {
            assert_eq!(multiply(&g, &x, &SElem::unit()).unwrap(), x);
            assert_eq!(multiply(&g, &SElem::unit(), &x).unwrap(), x);
        }
    }

    #[test]
    fn z3_generator_times_inverse_generator() {
        let g = z3();
        let a = SElem::generator(&g, 1).unwrap();
        let b = SElem::generator(&g, 2).unwrap(); // b = a²
        assert_eq!(
            multiply(&g, &a, &b).unwrap(),
            SElem::epsilon(&g, 1).unwrap()
        );
    }

    #[test]
    fn star_examples() {
        let g = z3();
        let a = SElem::generator(&g, 1).unwrap();
        assert_eq!(star(&g, &a).unwrap(), SElem::generator(&g, 2).unwrap());

        let idem = SElem::epsilon(&g, 1).unwrap();
        assert_eq!(
            star(&g, &idem).unwrap(),
            idem,
            "idempotents are self-adjoint"
        );

        // ({a}, a²)* = ({a²}, a)
        let x = SElem::new(&g, [1], 2).unwrap();
        let expected = SElem::new(&g, [2], 1).unwrap();
        assert_eq!(star(&g, &x).unwrap(), expected);
    }

    #[test]
    fn star_is_the_inverse() {
        let g = z3();
        for x in enumerate(&g).unwrap() {
            let s = star(&g, &x).unwrap();
            let xsx = multiply(&g, &multiply(&g, &x, &s).unwrap(), &x).unwrap();
            let sxs = multiply(&g, &multiply(&g, &s, &x).unwrap(), &s).unwrap();
            assert_eq!(xsx, x);
            assert_eq!(sxs, s);
        }
    }

    #[test]
    fn idempotent_iff_unit_bracket() {
        let g = z2();
        for x in enumerate(&g).unwrap() {
            let is_idem = multiply(&g, &x, &x).unwrap() == x;
            assert_eq!(x.is_idempotent(), is_idem);
        }
    }

    #[test]
    fn order_examples() {
        let g = z2();
        let unit = SElem::unit();
        let eps_a = SElem::epsilon(&g, 1).unwrap();
        let a = SElem::generator(&g, 1).unwrap();
        assert!(leq(&eps_a, &unit));
        assert!(!leq(&unit, &eps_a));
        assert!(leq(&a, &a));
        assert!(!leq(&a, &unit), "brackets differ");
    }

    #[test]
    fn order_agrees_with_idempotent_witness_search() {
        // x ≤ y iff some idempotent f has x = y·f; exhaustive over S(Z₃).
        let g = z3();
        let all = enumerate(&g).unwrap();
        let idempotents: Vec<&SElem> = all.iter().filter(|x| x.is_idempotent()).collect();
        for x in &all {
            for y in &all {
                let witness = idempotents
                    .iter()
                    .any(|f| multiply(&g, y, f).unwrap() == *x);
                assert_eq!(leq(x, y), witness, "x={x:?} y={y:?}");
            }
        }
    }

    #[test]
    fn order_is_compatible_with_multiplication() {
        for spec in ["cyclic 2", "cyclic 3"] {
            let g = GroupTable::preset(spec).unwrap();
            let all = enumerate(&g).unwrap();
            for x in &all {
                for y in &all {
                    if !leq(x, y) {
                        continue;
                    }
                    for u in &all {
                        for v in &all {
                            if leq(u, v) {
                                let xu = multiply(&g, x, u).unwrap();
                                let yv = multiply(&g, y, v).unwrap();
                                assert!(leq(&xu, &yv));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_is_a_homomorphism() {
        for spec in ["cyclic 2", "cyclic 3", "cyclic 4", "klein4"] {
            let g = GroupTable::preset(spec).unwrap();
            let all = enumerate(&g).unwrap();
            for x in &all {
                assert_eq!(star(&g, x).unwrap().gamma(), g.inv(x.gamma()));
                for y in &all {
                    let xy = multiply(&g, x, y).unwrap();
                    assert_eq!(xy.gamma(), g.mul(x.gamma(), y.gamma()));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate(&GroupTable::preset("trivial").unwrap())
                .unwrap()
                .len(),
            1
        );
        assert_eq!(enumerate(&z2()).unwrap().len(), 3);
        assert_eq!(enumerate(&z3()).unwrap().len(), 8);
        assert_eq!(
            enumerate(&GroupTable::preset("klein4").unwrap())
                .unwrap()
                .len(),
            20
        );
        assert_eq!(
            enumerate(&GroupTable::preset("sym3").unwrap())
                .unwrap()
                .len(),
            112
        );
        assert_eq!(expected_count(2), 3);
        assert_eq!(expected_count(3), 8);
        assert_eq!(expected_count(4), 20);
        assert_eq!(expected_count(6), 112);
    }

    #[test]
    fn enumeration_closed_under_product_and_star() {
        let g = GroupTable::preset("klein4").unwrap();
        let table = SgTable::build(&g, 8).unwrap();
        for x in &table.elements {
            assert!(table.index.contains_key(&star_unchecked(&g, x)));
            for y in &table.elements {
                assert!(table.index.contains_key(&mul_unchecked(&g, x, y)));
            }
        }
    }

    #[test]
    fn enumeration_rejects_large_groups() {
        let g = GroupTable::preset("cyclic 9").unwrap();
        assert!(matches!(enumerate(&g), Err(SgError::GroupTooLarge { .. })));
    }

    #[test]
    fn multiply_rejects_foreign_elements() {
        let g = z2();
        let g3 = z3();
        let x = SElem::generator(&g3, 2).unwrap();
        assert!(matches!(
            multiply(&g, &x, &SElem::unit()),
            Err(SgError::GroupMismatch { .. })
        ));
    }

    #[test]
    fn associativity_exhaustive_small() {
        for spec in ["cyclic 2", "cyclic 3"] {
            let g = GroupTable::preset(spec).unwrap();
            let all = enumerate(&g).unwrap();
            for x in &all {
                for y in &all {
                    let xy = mul_unchecked(&g, x, y);
                    for z in &all {
                        let lhs = mul_unchecked(&g, &xy, z);
                        let rhs = mul_unchecked(&g, x, &mul_unchecked(&g, y, z));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_is_unique_exhaustive_small() {
        for spec in ["cyclic 2", "cyclic 3", "cyclic 4", "klein4"] {
            let g = GroupTable::preset(spec).unwrap();
            let all = enumerate(&g).unwrap();
            for x in &all {
                let expected = star_unchecked(&g, x);
                let inverses: Vec<&SElem> = all
                    .iter()
                    .filter(|y| {
                        mul_unchecked(&g, &mul_unchecked(&g, x, y), x) == *x
                            && mul_unchecked(&g, &mul_unchecked(&g, y, x), y) == **y
                    })
                    .collect();
                assert_eq!(inverses, vec![&expected]);
            }
        }
    }

    #[test]
    fn epsilon_commutation_orientation() {
        // [h]·ε_g = ε_{hg}·[h] (not ε_{gh}[h]) — checked against the engine
        // for a noncommuting pair of sym3.
        let g = GroupTable::preset("sym3").unwrap();
        let (r, s) = (1, 3);
        assert_ne!(g.mul(r, s), g.mul(s, r));
        let h_elem = SElem::generator(&g, s).unwrap();
        let eps_g = SElem::epsilon(&g, r).unwrap();
        let lhs = multiply(&g, &h_elem, &eps_g).unwrap();
        let hg = SElem::new(&g, [g.mul(s, r)], s).unwrap();
        let gh = SElem::new(&g, [g.mul(r, s)], s).unwrap();
        assert_eq!(lhs, hg);
        assert_ne!(lhs, gh);
    }
}

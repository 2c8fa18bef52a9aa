//! Named fixtures used by the test suites and shipped as JSON documents.

use crate::action::{AlgebraPartialAction, SetPartialAction, SgAction};
use crate::group::{GroupTable, PartialBijection};
use crate::linalg::{rat_int, Matrix, StructureAlgebra, Subspace};

/// Z₂ on X = {0,1} with X_a = {0} and θ_a the identity on {0}.
pub fn p1() -> SetPartialAction {
    let g = GroupTable::preset("cyclic 2").unwrap();
    let theta_a = PartialBijection::identity_on(2, [0]).unwrap();
    SetPartialAction::new(g, 2, [(1, theta_a)]).unwrap()
}

/// Z₂ on X = {0,1,2} with X_a = {0,1} and θ_a = swap(0,1).
pub fn z2_swap() -> SetPartialAction {
    let g = GroupTable::preset("cyclic 2").unwrap();
    let theta_a = PartialBijection::from_pairs(3, [(0, 1), (1, 0)]).unwrap();
    SetPartialAction::new(g, 3, [(1, theta_a)]).unwrap()
}

/// Z₂ acting globally on two points by the swap.
pub fn z2_global() -> SetPartialAction {
    let g = GroupTable::preset("cyclic 2").unwrap();
    let theta_a = PartialBijection::from_pairs(2, [(0, 1), (1, 0)]).unwrap();
    SetPartialAction::new(g, 2, [(1, theta_a)]).unwrap()
}

/// Z₂ with X_a = ∅: the degenerate partial action.
pub fn z2_empty() -> SetPartialAction {
    let g = GroupTable::preset("cyclic 2").unwrap();
    SetPartialAction::new(g, 2, []).unwrap()
}

/// Z₃ partial rotation on three points: the restriction of the 3-cycle
/// (0 1 2) plus a fixed point 3 to the subset {0, 1, 3}.
pub fn z3_rotation() -> SetPartialAction {
    let g = GroupTable::preset("cyclic 3").unwrap();
    let sigma = vec![vec![0, 1, 2, 3], vec![1, 2, 0, 3], vec![2, 0, 1, 3]];
    SetPartialAction::restriction_of_global(g, 4, &sigma, &[0, 1, 3]).unwrap()
}

/// sym3 partial action on four points: the left-regular action of S₃ on
/// itself, restricted to the subset {e, r, r², s}.
pub fn sym3_partial() -> SetPartialAction {
    let g = GroupTable::preset("sym3").unwrap();
    let sigma: Vec<Vec<usize>> = g
        .elements()
        .map(|x| g.elements().map(|p| g.mul(x, p)).collect())
        .collect();
    SetPartialAction::restriction_of_global(g, 6, &sigma, &[0, 1, 2, 3]).unwrap()
}

/// Broken Z₄ fixture: X = {0}, θ_a = θ_{a³} = id on {0}, X_{a²} = ∅.
/// Violates axiom (ii) at (g,h) = (a,a).
pub fn z4_broken() -> SetPartialAction {
    let g = GroupTable::preset("cyclic 4").unwrap();
    let id0 = PartialBijection::identity_on(1, [0]).unwrap();
    SetPartialAction::new(g, 1, [(1, id0.clone()), (3, id0)]).unwrap()
}

/// A valid algebra-level partial action of Z₂ whose crossed product is not
/// associative: A = span{x, w, z} with x·w = w·x = z and all other products
/// zero; D_a = span{w, z} is a zero-product ideal and α_a swaps w and z.
pub fn zero_product_action() -> AlgebraPartialAction {
    let group = GroupTable::preset("cyclic 2").unwrap();
    let z = |i: usize| {
        let mut v = vec![rat_int(0); 3];
        v[i] = rat_int(1);
        v
    };
    let algebra = StructureAlgebra::new(
        vec!["x".into(), "w".into(), "z".into()],
        vec![((0, 1), z(2)), ((1, 0), z(2))],
        Some(Matrix::identity(3)),
        None,
    )
    .unwrap();
    let ideals = vec![
        Subspace::full(3),
        Subspace::from_vectors(3, vec![z(1), z(2)]).unwrap(),
    ];
    let mut alpha_a = Matrix::zeros(3, 3);
    alpha_a[(2, 1)] = rat_int(1);
    alpha_a[(1, 2)] = rat_int(1);
    let maps = vec![Matrix::identity(3), alpha_a];
    AlgebraPartialAction::new(group, algebra, ideals, maps).unwrap()
}

pub fn p1_sg_action() -> SgAction {
    p1().induce_algebra_action()
        .unwrap()
        .to_sg_action(8)
        .unwrap()
}

pub fn z2_swap_sg_action() -> SgAction {
    z2_swap()
        .induce_algebra_action()
        .unwrap()
        .to_sg_action(8)
        .unwrap()
}

pub fn z3_rotation_sg_action() -> SgAction {
    z3_rotation()
        .induce_algebra_action()
        .unwrap()
        .to_sg_action(8)
        .unwrap()
}

pub fn sym3_sg_action() -> SgAction {
    sym3_partial()
        .induce_algebra_action()
        .unwrap()
        .to_sg_action(8)
        .unwrap()
}

/// The four set-level fixtures exercised by the verification suites.
pub fn standard_set_fixtures() -> Vec<(&'static str, SetPartialAction)> {
    vec![
        ("p1", p1()),
        ("z2_swap", z2_swap()),
        ("z3_rotation", z3_rotation()),
        ("sym3_partial", sym3_partial()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_set_fixtures_validate() {
        for (name, f) in standard_set_fixtures() {
            assert!(f.validate().passed(), "{name}: {}", f.validate());
        }
        assert!(z2_global().validate().passed());
        assert!(z2_empty().validate().passed());
        assert!(!z4_broken().validate().passed());
    }

    #[test]
    fn zero_product_action_is_a_valid_partial_action() {
        let a = zero_product_action();
        assert!(a.validate().passed(), "{}", a.validate());
        // but its ideal D_a has zero multiplication
        let rep = a.ideals_idempotent_report();
        assert!(!rep.passed());
    }

    #[test]
    fn z3_rotation_shape() {
        let p = z3_rotation();
        assert_eq!(p.base_size(), 3);
        assert_eq!(p.x_set(1).len(), 2);
        assert_eq!(p.x_set(2).len(), 2);
    }

    #[test]
    fn sym3_partial_shape() {
        let p = sym3_partial();
        assert_eq!(p.base_size(), 4);
        let dims: Vec<usize> = p.group().elements().map(|g| p.x_set(g).len()).collect();
        assert_eq!(dims, vec![4, 3, 3, 2, 2, 2]);
    }
}

//! Property tests for the exact linear algebra substrate and the randomized
//! inverse-uniqueness checks at larger sizes.

use proptest::prelude::*;

use excross::group::PartialBijection;
use excross::linalg::{rat, Matrix, Rat, StructureAlgebra, Subspace};
use excross::semigroup;
use excross::GroupTable;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(small_rat(), c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(5)) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn intersection_is_order_independent(
        vs in proptest::collection::vec(proptest::collection::vec(small_rat(), 4), 1..4),
        ws in proptest::collection::vec(proptest::collection::vec(small_rat(), 4), 1..4),
        us in proptest::collection::vec(proptest::collection::vec(small_rat(), 4), 1..4),
    ) {
        let a = Subspace::from_vectors(4, vs).unwrap();
        let b = Subspace::from_vectors(4, ws).unwrap();
        let c = Subspace::from_vectors(4, us).unwrap();
        let abc = a.intersect(&b).unwrap().intersect(&c).unwrap();
        let cba = c.intersect(&b).unwrap().intersect(&a).unwrap();
        let bac = b.intersect(&a).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(&abc, &cba);
        prop_assert_eq!(&abc, &bac);
    }

    #[test]
    fn closure_is_a_fixpoint_and_an_ideal(
        gens in proptest::collection::vec(proptest::collection::vec(small_rat(), 5), 0..3)
    ) {
        let a = StructureAlgebra::function_algebra(5);
        let closed = a.two_sided_ideal_closure(gens).unwrap();
        prop_assert!(a.is_ideal(&closed));
        let again = a
            .two_sided_ideal_closure(closed.basis_rows().map(<[Rat]>::to_vec))
            .unwrap();
        prop_assert_eq!(closed, again);
    }

    #[test]
    fn quotient_projection_is_multiplicative(points in proptest::collection::vec(0usize..5, 0..5)) {
        // Coordinate ideals of a function algebra; the quotient construction
        // itself re-verifies π(xy) = π(x)π(y) on every basis pair and errors
        // otherwise.
        let a = StructureAlgebra::function_algebra(5);
        let gens = points.iter().map(|&p| {
            let mut v = vec![Rat::from_integer(0.into()); 5];
            v[p] = Rat::from_integer(1.into());
            v
        });
        let ideal = a.two_sided_ideal_closure(gens).unwrap();
        let (q, projection) = a.quotient(&ideal).unwrap();
        prop_assert_eq!(q.dim(), 5 - ideal.dim());
        prop_assert_eq!(projection.rows(), q.dim());
    }

    #[test]
    fn matrix_inverse_round_trips(m in small_matrix(4)) {
        if m.rows() == m.cols() {
            if let Ok(inv) = m.inverse() {
                prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(m.rows()));
                prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(m.rows()));
            }
        }
    }
}

#[test]
fn partial_bijection_inverse_unique_randomized_base_five() {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
    let all = PartialBijection::enumerate_all(5);
    assert_eq!(all.len(), 1546);
    for _ in 0..30 {
        let f = &all[rng.gen_range(0..all.len())];
        let star = f.converse();
        let inverses: Vec<&PartialBijection> = all
            .iter()
            .filter(|g| {
                f.compose(g).unwrap().compose(f).unwrap() == *f
                    && g.compose(f).unwrap().compose(g).unwrap() == **g
            })
            .collect();
        assert_eq!(inverses, vec![&star]);
    }
}

#[test]
fn selem_inverse_unique_randomized_sym3() {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let g = GroupTable::preset("sym3").unwrap();
    let all = semigroup::enumerate(&g).unwrap();
    for _ in 0..40 {
        let x = &all[rng.gen_range(0..all.len())];
        let star = semigroup::star(&g, x).unwrap();
        let inverses: Vec<&semigroup::SElem> = all
            .iter()
            .filter(|y| {
                let xy = semigroup::multiply(&g, x, y).unwrap();
                let yx = semigroup::multiply(&g, y, x).unwrap();
                semigroup::multiply(&g, &xy, x).unwrap() == *x
                    && semigroup::multiply(&g, &yx, y).unwrap() == **y
            })
            .collect();
        assert_eq!(inverses.len(), 1);
        assert_eq!(inverses[0], &star);
    }
}

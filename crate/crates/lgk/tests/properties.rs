//! Property-based tests for the integer linear algebra layer and the
//! finite-group module constructions.

use num_bigint::BigInt;
use proptest::prelude::*;

use lgk::zlat::{FinAbGroup, FiniteGroup, GammaModule, IntMatrix};

fn small_matrix(max_dim: usize, max_abs: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-max_abs..=max_abs, r * c)
            .prop_map(move |entries| IntMatrix::from_i64(r, c, &entries))
    })
}

/// Random unimodular matrix: a product of elementary row operations.
fn unimodular_from_ops(dim: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(dim);
    for &(i, j, c) in ops {
        let (i, j) = (i % dim, j % dim);
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(dim);
        e.set(i, j, BigInt::from(c));
        u = e.mul(&u);
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// The Smith normal form is deterministic, its diagonal divides in
    /// sequence, and the transforms reconstruct it: U m V = D.
    #[test]
    fn snf_is_deterministic_with_dividing_diagonal(m in small_matrix(5, 10)) {
        let s1 = m.smith_normal_form();
        let s2 = m.smith_normal_form();
        prop_assert_eq!(&s1.d, &s2.d);
        let diag = s1.d.diagonal();
        for w in diag.windows(2) {
            if w[0] != BigInt::from(0) {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            }
        }
        prop_assert!(s1.u.is_unimodular());
        prop_assert!(s1.v.is_unimodular());
        prop_assert_eq!(s1.u.mul(&m).mul(&s1.v), s1.d);
    }

    /// Cokernel invariant factors do not change under unimodular row or
    /// column operations.
    #[test]
    fn cokernel_is_unimodular_invariant(
        m in small_matrix(5, 10),
        ops_u in proptest::collection::vec((0..5usize, 0..5usize, -3i64..=3), 0..8),
        ops_v in proptest::collection::vec((0..5usize, 0..5usize, -3i64..=3), 0..8),
    ) {
        let u = unimodular_from_ops(m.rows, &ops_u);
        let v = unimodular_from_ops(m.cols, &ops_v);
        let base = FinAbGroup::cokernel(&m);
        prop_assert_eq!(FinAbGroup::cokernel(&u.mul(&m)), base.clone());
        prop_assert_eq!(FinAbGroup::cokernel(&m.mul(&v)), base);
    }

    /// For a cyclic action of any finite order, the Tate group in degree
    /// minus one equals the torsion of the coinvariants.
    #[test]
    fn tate_equals_torsion_of_coinvariants(
        keys in proptest::collection::vec(0u64..1000, 4),
        signs in proptest::collection::vec(prop::bool::ANY, 4),
    ) {
        // signed permutation from sorting the random keys
        let mut idx: Vec<usize> = (0..4).collect();
        idx.sort_by_key(|&i| keys[i]);
        let mut m = IntMatrix::zero(4, 4);
        for (j, &i) in idx.iter().enumerate() {
            let sign = if signs[j] { 1 } else { -1 };
            m.set(i, j, BigInt::from(sign));
        }
        let mut order = 1;
        let mut power = m.clone();
        while !power.is_identity() {
            power = power.mul(&m);
            order += 1;
        }
        let group = FiniteGroup::cyclic(order);
        let mut action = vec![IntMatrix::identity(4)];
        for _ in 1..order {
            action.push(action.last().unwrap().mul(&m));
        }
        let module = GammaModule::new(4, group, action).unwrap();
        prop_assert_eq!(
            module.tate_h_minus1(),
            FinAbGroup::cokernel(&module.augmentation_matrix()).torsion()
        );
    }

    /// Induction along a subgroup of index 3 multiplies the rank by 3 and
    /// preserves coinvariants and the Tate group (Shapiro).
    #[test]
    fn induction_shapiro(diag_signs in proptest::collection::vec(prop::bool::ANY, 3)) {
        let mut a = IntMatrix::identity(3);
        for (i, &s) in diag_signs.iter().enumerate() {
            a.set(i, i, BigInt::from(if s { 1 } else { -1 }));
        }
        let c2 = FiniteGroup::cyclic(2);
        let module = GammaModule::new(3, c2, vec![IntMatrix::identity(3), a]).unwrap();
        let c6 = FiniteGroup::cyclic(6);
        let induced = module.induce(&c6, &[0, 3]).unwrap();
        prop_assert_eq!(induced.rank, 3 * module.rank);
        prop_assert_eq!(induced.group.order, 6);
        prop_assert_eq!(induced.coinvariants().group, module.coinvariants().group);
        prop_assert_eq!(induced.tate_h_minus1(), module.tate_h_minus1());
    }
}

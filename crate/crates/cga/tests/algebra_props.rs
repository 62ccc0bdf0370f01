//! Property tests for the multivector arithmetic.

use cga::oracle::cayley_check;
use cga::{Multivector, Tolerance};
use proptest::prelude::*;

fn multivector() -> impl Strategy<Value = Multivector> {
    prop::array::uniform32(-1.0..1.0f64).prop_map(Multivector::from_coeffs)
}

/// Grade-1 element with all five generator components.
fn vector() -> impl Strategy<Value = Multivector> {
    prop::array::uniform5(-1.0..1.0f64).prop_map(|v| {
        let mut c = [0.0; 32];
        for (g, x) in v.into_iter().enumerate() {
            c[1 << g] = x;
        }
        Multivector::from_coeffs(c)
    })
}

/// A blade built as the wedge of 1..=3 random vectors (possibly zero).
fn blade() -> impl Strategy<Value = (Multivector, usize)> {
    (prop::collection::vec(prop::array::uniform5(-1.0..1.0f64), 1..=3)).prop_map(|vectors| {
        let grade = vectors.len();
        let mut acc = Multivector::scalar(1.0);
        for v in vectors {
            let mut c = [0.0; 32];
            for (g, x) in v.into_iter().enumerate() {
                c[1 << g] = x;
            }
            acc = acc.wedge(&Multivector::from_coeffs(c));
        }
        (acc, grade)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn geometric_product_is_associative(a in multivector(), b in multivector(), c in multivector()) {
        let left = a.geometric(&b).geometric(&c);
        let right = a.geometric(&b.geometric(&c));
        let bound = 1e-10 * a.norm() * b.norm() * c.norm();
        prop_assert!((left - right).norm() <= bound);
    }

    #[test]
    fn geometric_product_distributes(a in multivector(), b in multivector(), c in multivector()) {
        let left = a.geometric(&(b + c));
        let right = a.geometric(&b) + a.geometric(&c);
        let bound = 1e-12 * a.norm() * (b.norm() + c.norm()) + 1e-15;
        prop_assert!((left - right).norm() <= bound);
    }

    #[test]
    fn vector_anticommutator_is_scalar(x in vector(), y in vector()) {
        let sym = x.geometric(&y) + y.geometric(&x);
        let want = Multivector::scalar(2.0 * x.scalar_product(&y));
        prop_assert!((sym - want).norm() <= 1e-14 * (1.0 + x.norm() * y.norm()));
    }

    #[test]
    fn left_contraction_duality(x in vector(), a in blade(), b in blade()) {
        let (a, ga) = a;
        let (b, _) = b;
        let left = x.left_contract(&a.wedge(&b));
        let sign = if ga % 2 == 0 { 1.0 } else { -1.0 };
        let right = x.left_contract(&a).wedge(&b) + a.wedge(&x.left_contract(&b)) * sign;
        let bound = 1e-11 * (1.0 + x.norm() * a.norm() * b.norm());
        prop_assert!((left - right).norm() <= bound);
    }

    #[test]
    fn reversion_is_an_involution_and_antiautomorphism(a in multivector(), b in multivector()) {
        prop_assert_eq!(a.reverse().reverse(), a);
        let left = a.geometric(&b).reverse();
        let right = b.reverse().geometric(&a.reverse());
        prop_assert!((left - right).norm() <= 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn grade_parts_sum_back(a in multivector()) {
        let mut sum = Multivector::ZERO;
        for k in 0..=5 {
            sum += a.grade(k);
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn blade_inverse_multiplies_to_one(v in prop::array::uniform5(-1.0..1.0f64)) {
        let mut c = [0.0; 32];
        for (g, x) in v.into_iter().enumerate() {
            c[1 << g] = x;
        }
        let a = Multivector::from_coeffs(c);
        let tol = Tolerance::default();
        if let Ok(inv) = a.inverse(tol) {
            let unit = a.geometric(&inv);
            prop_assert!((unit - Multivector::scalar(1.0)).norm() <= 1e-6);
        }
    }
}

#[test]
fn metric_constants() {
    let n = Multivector::n();
    let nb = Multivector::nb();
    assert_eq!(n * n, Multivector::ZERO);
    assert_eq!(nb * nb, Multivector::ZERO);
    assert_eq!(n.scalar_product(&nb), -1.0);
    assert_eq!(
        Multivector::minkowski_plane() * Multivector::minkowski_plane(),
        Multivector::scalar(1.0)
    );
    assert_eq!(
        Multivector::euclid_pseudoscalar() * Multivector::euclid_pseudoscalar(),
        Multivector::scalar(-1.0)
    );
}

#[test]
fn blade_products_match_the_independent_table() {
    assert!(cayley_check().is_empty());
}

#[test]
fn values_are_immutable_and_thread_safe() {
    fn assert_send_sync<T: Send + Sync + Copy>() {}
    assert_send_sync::<Multivector>();
    assert_send_sync::<cga::Vec3>();
    assert_send_sync::<cga::Bivec3>();
    assert_send_sync::<Tolerance>();
}

//! Randomized and exhaustive property suites for the exact kernels.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use strataforge_core::chevalley::LieAlgebra;
use strataforge_core::cyclo::Cyclo8;
use strataforge_core::linalg::Mat;
use strataforge_core::roots::RootSystem;

fn rat_strategy() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn cyclo_strategy() -> impl Strategy<Value = Cyclo8> {
    (rat_strategy(), rat_strategy(), rat_strategy(), rat_strategy())
        .prop_map(|(a, b, c, d)| Cyclo8::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(x in cyclo_strategy(), y in cyclo_strategy(), z in cyclo_strategy()) {
        // Associativity and commutativity.
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        // Distributivity.
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        // Inverses.
        if !x.is_zero() {
            let xi = x.inv().unwrap();
            prop_assert_eq!(&x * &xi, Cyclo8::one());
        }
    }

    #[test]
    fn conj_is_involutive_automorphism(x in cyclo_strategy(), y in cyclo_strategy()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
    }

    #[test]
    fn norm_positivity(x in cyclo_strategy()) {
        // x * conj(x) is real nonnegative for real x; more precisely for
        // any real r, sign(r * r) >= 0 with equality iff r = 0.
        let (re, _) = x.re_im();
        let sq = &re * &re;
        let s = sq.sign_real().unwrap();
        if re.is_zero() {
            prop_assert_eq!(s, 0);
        } else {
            prop_assert_eq!(s, 1);
        }
    }
}

#[test]
fn jacobi_exhaustive_all_types() {
    // LieAlgebra::build verifies the Jacobi identity on every basis triple
    // and the string property of all structure constants; failure is a
    // construction error.
    for name in ["A1", "A2", "B2", "C2", "G2", "C3"] {
        LieAlgebra::build(RootSystem::of_type(name).unwrap())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn cayley_matrix_properties_exhaustive() {
    for name in ["A2", "C2", "G2"] {
        let la = LieAlgebra::build(RootSystem::of_type(name).unwrap()).unwrap();
        for alpha in 0..la.rs.n_pos {
            let c = la.cayley_matrix(alpha).unwrap();
            // Order eight.
            assert_eq!(c.pow(8), Mat::identity(la.dim), "{name}");
            // Bracket automorphism and Killing isometry on basis pairs.
            for a in 0..la.dim {
                for b in 0..la.dim {
                    let ea = la.basis_vector(a);
                    let eb = la.basis_vector(b);
                    assert_eq!(
                        c.apply(&la.bracket(&ea, &eb)),
                        la.bracket(&c.apply(&ea), &c.apply(&eb)),
                        "{name} alpha {alpha}"
                    );
                    assert_eq!(
                        la.killing_form(&c.apply(&ea), &c.apply(&eb)),
                        la.killing_form(&ea, &eb)
                    );
                }
            }
        }
    }
}

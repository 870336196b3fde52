use links_gould::polyring::format::{parse, serialize, A, QP};
use links_gould::polyring::point::rat;
use links_gould::polyring::{ExtScalar, Format, Gaussian, LaurentPoly, RationalPoint};
use num_rational::BigRational;
use proptest::prelude::*;

type P = LaurentPoly<i128>;

fn poly(denom: u32) -> impl Strategy<Value = P> {
    prop::collection::vec(((-6i32..=6, -6i32..=6), -9i128..=9), 0..7)
        .prop_map(move |terms| LaurentPoly::from_terms(denom, terms))
}

fn lg_poly() -> impl Strategy<Value = P> {
    prop_oneof![poly(1), poly(2)]
}

fn gpoly() -> impl Strategy<Value = LaurentPoly<Gaussian>> {
    prop::collection::vec(((-5i32..=5, -5i32..=5), (-6i128..=6, -6i128..=6)), 0..6)
        .prop_map(|t| LaurentPoly::from_terms(4, t.into_iter().map(|(e, (re, im))| (e, Gaussian::new(re, im)))))
}

fn ext() -> impl Strategy<Value = ExtScalar<i128>> {
    (poly(2), poly(2)).prop_map(|(a, b)| ExtScalar::new(a, b))
}

fn point() -> impl Strategy<Value = RationalPoint> {
    let nz = prop_oneof![-9i64..=-1, 1i64..=9];
    (nz.clone(), 1i64..=9, nz, 1i64..=9).prop_map(|(a, b, c, d)| RationalPoint::new(rat(a, b), rat(c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in lg_poly(), b in lg_poly(), c in lg_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&P::one()), a.clone());
    }

    #[test]
    fn involutions_square_to_identity(a in lg_poly()) {
        prop_assert_eq!(a.involute_q().involute_q(), a.clone());
        prop_assert_eq!(a.involute_alpha().involute_alpha(), a.clone());
        prop_assert_eq!(a.mul(&a.involute_q()).involute_q(), a.mul(&a.involute_q()));
    }

    #[test]
    fn exact_division_recovers_factor(a in lg_poly(), b in lg_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn ext_mul_commutative_associative(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn base_embeds_homomorphically(a in poly(2), b in poly(2)) {
        let (ea, eb) = (ExtScalar::from_base(a.clone()), ExtScalar::from_base(b.clone()));
        prop_assert_eq!(ea.mul(&eb), ExtScalar::from_base(a.mul(&b)));
        prop_assert_eq!(ea.add(&eb), ExtScalar::from_base(a.add(&b)));
        prop_assert!(ea.mul(&eb).is_y_free());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in lg_poly(), b in lg_poly(), pt in point()) {
        let ev = |x: &P| -> BigRational { x.eval_rational(&pt).unwrap() };
        prop_assert_eq!(ev(&a.mul(&b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&a.add(&b)), ev(&a) + ev(&b));
    }

    #[test]
    fn integer_round_trips(a in lg_poly()) {
        for f in [Format::Plain, Format::Json, Format::Csv] {
            let s = serialize(&a, f, QP);
            let back: P = parse(&s, f, QP, a.denom()).unwrap();
            prop_assert_eq!(&back, &a, "{:?}: {}", f, s);
        }
    }

    #[test]
    fn gaussian_round_trips(a in gpoly()) {
        for f in [Format::Plain, Format::Json, Format::Csv] {
            let s = serialize(&a, f, A);
            let back: LaurentPoly<Gaussian> = parse(&s, f, A, 4).unwrap();
            prop_assert_eq!(&back, &a, "{:?}: {}", f, s);
        }
    }
}

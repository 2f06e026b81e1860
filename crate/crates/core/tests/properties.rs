//! Randomized law checks for the series arithmetic, the specialization
//! homomorphism, and the orbit walker. Each law runs 1000 cases.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use qaffine::algebra::{standard_weights, weyl_orbit, Algebra};
use qaffine::characters::specialized_character;
use qaffine::mseries::MSeries;
use qaffine::qseries::{ProductFactor, ProductSpec, QSeries};
use qaffine::rat::{rat, rint, Rat};

fn qseries_any() -> impl Strategy<Value = QSeries> {
    (1u32..=4, -6i64..=6, prop::collection::vec(-9i64..=9, 1..12)).prop_map(
        |(grain, snum, coeffs)| {
            let shift = rat(snum, grain as i64);
            let order = &shift + rat(coeffs.len() as i64 - 1, grain as i64);
            QSeries::from_parts(
                grain,
                shift,
                order,
                coeffs.into_iter().map(BigInt::from).collect(),
            )
        },
    )
}

fn qseries_unit() -> impl Strategy<Value = QSeries> {
    (1u32..=4, -4i64..=4, any::<bool>(), prop::collection::vec(-9i64..=9, 0..12)).prop_map(
        |(grain, snum, neg, rest)| {
            let mut coeffs = vec![if neg { -1i64 } else { 1 }];
            coeffs.extend(rest);
            let shift = rat(snum, grain as i64);
            let order = &shift + rat(coeffs.len() as i64 - 1, grain as i64);
            QSeries::from_parts(
                grain,
                shift,
                order,
                coeffs.into_iter().map(BigInt::from).collect(),
            )
        },
    )
}

fn power_ratio() -> impl Strategy<Value = Rat> {
    prop_oneof![
        Just(rat(1, 6)),
        Just(rat(1, 3)),
        Just(rat(1, 2)),
        Just(rat(2, 3)),
        Just(rint(1)),
        Just(rat(3, 2)),
        Just(rint(2)),
        Just(rint(3)),
    ]
}

fn product_factors() -> impl Strategy<Value = Vec<ProductFactor>> {
    prop::collection::vec(
        (1u32..=10, prop::collection::btree_set(0u32..10, 1..4), prop_oneof![-3i32..0, 1i32..=3]),
        1..4,
    )
    .prop_map(|raw| {
        raw.into_iter()
            .map(|(m, residues, e)| {
                ProductFactor::new(m, residues.into_iter().map(|r| r % m), e)
            })
            .collect()
    })
}

fn mseries_terms(order: i64, max_terms: usize) -> impl Strategy<Value = MSeries> {
    prop::collection::vec(
        (prop::collection::vec(0..=order, 3), -5i64..=5),
        0..max_terms,
    )
    .prop_map(move |terms| {
        let mut m = MSeries::new(3, &[1, 1, 1], order);
        for (e, c) in terms {
            if e.iter().sum::<i64>() <= order {
                m.add_term(&e, BigInt::from(c));
            }
        }
        m
    })
}

fn mseries_unit(order: i64, max_terms: usize) -> impl Strategy<Value = MSeries> {
    (mseries_terms(order, max_terms), any::<bool>()).prop_map(move |(base, neg)| {
        let mut m = MSeries::new(3, &[1, 1, 1], order);
        m.add_term(&[0, 0, 0], BigInt::from(if neg { -1 } else { 1 }));
        for (key, c) in base.terms() {
            if key.iter().any(|&e| e > 0) {
                m.add_term(key, c.clone());
            }
        }
        m
    })
}

fn algebra_any() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just(Algebra::A1_1), Just(Algebra::A2_1), Just(Algebra::A2_2)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn addition_commutes(a in qseries_any(), b in qseries_any()) {
        prop_assert!(a.add(&b).eq_to_min_order(&b.add(&a)));
    }

    #[test]
    fn addition_associates(a in qseries_any(), b in qseries_any(), c in qseries_any()) {
        prop_assert!(a.add(&b).add(&c).eq_to_min_order(&a.add(&b.add(&c))));
    }

    #[test]
    fn multiplication_commutes(a in qseries_any(), b in qseries_any()) {
        prop_assert!(a.mul(&b).eq_to_min_order(&b.mul(&a)));
    }

    #[test]
    fn multiplication_associates(a in qseries_any(), b in qseries_any(), c in qseries_any()) {
        prop_assert!(a.mul(&b).mul(&c).eq_to_min_order(&a.mul(&b.mul(&c))));
    }

    #[test]
    fn multiplication_distributes(a in qseries_any(), b in qseries_any(), c in qseries_any()) {
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        prop_assert!(lhs.eq_to_min_order(&rhs));
    }

    #[test]
    fn one_is_a_multiplicative_identity(a in qseries_any()) {
        let window = a.order() - a.shift();
        let one = QSeries::monomial(rint(0), BigInt::from(1), window);
        prop_assert!(a.mul(&one).eq_to_min_order(&a));
    }

    #[test]
    fn substitution_is_multiplicative(a in qseries_any(), b in qseries_any(), p in power_ratio()) {
        let lhs = a.mul(&b).substitute_power(&p).unwrap();
        let rhs = a.substitute_power(&p).unwrap().mul(&b.substitute_power(&p).unwrap());
        prop_assert!(lhs.eq_to_min_order(&rhs));
    }

    #[test]
    fn substitution_round_trips(a in qseries_any(), p in power_ratio()) {
        let back = a.substitute_power(&p).unwrap().substitute_power(&p.recip()).unwrap();
        prop_assert!(back.eq_to_min_order(&a));
        prop_assert_eq!(back.order(), a.order());
    }

    #[test]
    fn exponent_shift_is_monomial_multiplication(
        a in qseries_any(),
        rn in -6i64..=6,
        rd in 1i64..=4,
    ) {
        let r = rat(rn, rd);
        let order = &r + (a.order() - a.shift());
        let one_shifted = QSeries::monomial(r.clone(), BigInt::from(1), order);
        prop_assert!(a.shift_exponent(&r).eq_to_min_order(&a.mul(&one_shifted)));
    }

    #[test]
    fn inversion_round_trips(a in qseries_unit()) {
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv);
        let one = QSeries::monomial(rint(0), BigInt::from(1), prod.order().clone());
        prop_assert!(prod.eq_to_min_order(&one));
    }

    #[test]
    fn inversion_is_an_involution(a in qseries_unit()) {
        let back = a.invert().unwrap().invert().unwrap();
        prop_assert!(back.eq_to_min_order(&a));
        prop_assert_eq!(back.order(), a.order());
    }

    #[test]
    fn congruence_products_cancel_against_negated_exponents(
        factors in product_factors(),
        order in 4i64..=24,
    ) {
        let spec = ProductSpec::new(factors.clone());
        let negated = ProductSpec::new(
            factors
                .into_iter()
                .map(|f| ProductFactor::new(f.modulus, f.residues.clone(), -f.exponent))
                .collect(),
        );
        let prod = spec.expand(order).mul(&negated.expand(order));
        prop_assert!(prod.eq_to_min_order(&QSeries::one(order)));
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(
        a in mseries_terms(8, 24),
        b in mseries_terms(8, 24),
        s in prop::collection::vec(1i64..=3, 3),
    ) {
        let lhs = a.mul(&b).unwrap().specialize(&s).unwrap();
        let rhs = a.specialize(&s).unwrap().mul(&b.specialize(&s).unwrap());
        prop_assert!(lhs.eq_to_min_order(&rhs));
    }

    #[test]
    fn specialization_is_additive(
        a in mseries_terms(8, 24),
        b in mseries_terms(8, 24),
        s in prop::collection::vec(1i64..=3, 3),
    ) {
        let lhs = a.add(&b).unwrap().specialize(&s).unwrap();
        let rhs = a.specialize(&s).unwrap().add(&b.specialize(&s).unwrap());
        prop_assert!(lhs.eq_to_min_order(&rhs));
    }

    #[test]
    fn multivariate_inversion_round_trips(a in mseries_unit(6, 12)) {
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv).unwrap();
        let one = MSeries::one(3, &[1, 1, 1], prod.order());
        prop_assert!(prod.eq_to_min_order(&one).unwrap());
    }

    #[test]
    fn character_coefficients_are_nonnegative(
        (algebra, k, sel, s, order) in (algebra_any(), 1i64..=3, 0usize..64)
            .prop_flat_map(|(algebra, k, sel)| {
                let rank = algebra.rank();
                (
                    Just(algebra),
                    Just(k),
                    Just(sel),
                    prop::collection::vec(1i64..=3, rank),
                    6i64..=12,
                )
            }),
    ) {
        let level = if algebra == Algebra::A2_2 { 2 * k + 1 } else { k };
        let weights = standard_weights(algebra, level).unwrap();
        let weight = &weights[sel % weights.len()];
        let ch = specialized_character(weight, &s, order).unwrap();
        for (exp, c) in ch.entries() {
            prop_assert!(!c.is_negative(), "negative coefficient {c} at {exp}");
        }
    }

    #[test]
    fn orbit_walk_is_closed_and_parity_consistent(
        (algebra, lpr, s, max_degree) in algebra_any().prop_flat_map(|algebra| {
            let rank = algebra.rank();
            (
                Just(algebra),
                prop::collection::vec(1i64..=4, rank),
                prop::collection::vec(1i64..=3, rank),
                4i64..=14,
            )
        }),
    ) {
        let points = weyl_orbit(algebra, &lpr, &s, max_degree).unwrap();
        let gcm = algebra.gcm();
        let n = algebra.rank();

        let index: std::collections::HashMap<Vec<i64>, i8> =
            points.iter().map(|p| (p.cvec.clone(), p.parity)).collect();
        prop_assert_eq!(index.len(), points.len(), "duplicate orbit points");
        prop_assert_eq!(index.get(&vec![0; n]), Some(&1), "identity point missing");

        let mut keys = BTreeSet::new();
        for p in &points {
            let degree = p.degree(&s);
            prop_assert!(degree <= max_degree);
            prop_assert!(p.cvec.iter().all(|&c| c >= 0));
            prop_assert!(keys.insert((degree, p.cvec.clone())), "output not sorted");

            for j in 0..n {
                let mu_j = lpr[j]
                    - (0..n).map(|i| p.cvec[i] * gcm[j][i]).sum::<i64>();
                prop_assert!(mu_j != 0, "regular weight fixed by a reflection");
                let mut image = p.cvec.clone();
                image[j] += mu_j;
                if degree + s[j] * mu_j <= max_degree {
                    prop_assert_eq!(
                        index.get(&image),
                        Some(&-p.parity),
                        "reflection image missing or with wrong sign"
                    );
                }
            }
        }
        let sorted: Vec<_> = keys.into_iter().collect();
        let listed: Vec<_> = points.iter().map(|p| (p.degree(&s), p.cvec.clone())).collect();
        prop_assert_eq!(listed, sorted, "points not listed in (degree, cvec) order");
    }
}

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use schur_repdim::character::{brauer_expand, brauer_sum, orbit_sum, weyl_character};
use schur_repdim::injective::{pm_hook_injective, steinberg_tilting, tensor_factorization};
use schur_repdim::json::{character_from_json, character_to_json, construction_from_json, construction_to_json};
use schur_repdim::planner::{construct_classical, construct_quantum, max_h_classical, min_r_classical};
use schur_repdim::{dominance_leq, ClassicalParams, DominantWeight, QuantumParams, Weight};

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn weight(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(lo..=hi, n).prop_map(Weight::from_ints)
}

fn dominant(n: usize, hi: i64) -> impl Strategy<Value = DominantWeight> {
    weight(n, 0, hi).prop_map(|w| w.dominant_representative())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

/// `(n, p, m)` with `P = pᵐ > n` and `P ≤ 16`.
fn planner_setting() -> impl Strategy<Value = (usize, u64, u32)> {
    (2usize..=4, prime(), 1u32..=4).prop_filter_map("P out of range", |(n, p, m)| {
        let big_p = p.pow(m);
        (big_p > n as u64 && big_p <= 16).then_some((n, p, m))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn padic_digits_reconstruct(lam in (1usize..=4).prop_flat_map(|n| dominant(n, 200)), p in prime()) {
        let bp = big(p);
        let dec = lam.p_adic_decompose(&bp).unwrap();
        prop_assert_eq!(&dec.reconstruct(lam.rank()), lam.as_weight());
        for d in &dec.digits {
            prop_assert!(d.is_column_regular(&bp).unwrap());
            prop_assert!(d.breadth() < BigInt::from(p * lam.rank() as u64));
        }
    }

    #[test]
    fn dominance_is_a_partial_order(
        (a, b, c) in (1usize..=4).prop_flat_map(|n| (weight(n, -4, 4), weight(n, -4, 4), weight(n, -4, 4)))
    ) {
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
        // every orbit element sits below the dominant representative
        let top = a.dominant_representative();
        prop_assert!(dominance_leq(&a, top.as_weight()).unwrap());
    }

    #[test]
    fn brauer_formula_holds_for_any_weights(
        (lam, nu) in (1usize..=3).prop_flat_map(|n| (dominant(n, 3), weight(n, -2, 2)))
    ) {
        let lhs = &weyl_character(lam.as_weight()) * &orbit_sum(&nu);
        let rhs = brauer_sum(lam.rank(), &brauer_expand(&lam, &nu).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_twist_is_multiplicative(
        (a, b) in (1usize..=3).prop_flat_map(|n| (dominant(n, 3), dominant(n, 3))),
        f in 1u64..=4,
    ) {
        let (x, y) = (weyl_character(a.as_weight()), weyl_character(b.as_weight()));
        let f = big(f);
        prop_assert_eq!(
            (&x * &y).frobenius_twist(&f).unwrap(),
            &x.frobenius_twist(&f).unwrap() * &y.frobenius_twist(&f).unwrap()
        );
    }

    #[test]
    fn character_json_round_trip(lam in (1usize..=3).prop_flat_map(|n| weight(n, -3, 3))) {
        let chi = weyl_character(&lam);
        prop_assert_eq!(character_from_json(&character_to_json(&chi)).unwrap(), chi);
    }

    #[test]
    fn classical_construction_invariants(
        (n, p, m) in planner_setting(),
        h in 1u32..=3,
        extra in 0u64..=2000,
    ) {
        let min = min_r_classical(n, p, m, h).unwrap();
        let r = &min + big(extra);
        let res = construct_classical(&ClassicalParams::new(n, p, m, h, r.clone()), false).unwrap();
        let big_p = big(p.pow(m));
        let bp = big(p);

        prop_assert_eq!(res.mu.degree(), r.clone());
        prop_assert_eq!(res.mu.as_weight(), res.descriptor.socle_weight().as_weight());
        prop_assert_eq!(res.repdim_lower_bound, h + 1);
        prop_assert!(res.descriptor.index().map_or(false, |i| i.value >= h));

        let mut excess = BigInt::zero();
        let mut scale = BigInt::one();
        for (i, u) in res.digits.iter().enumerate() {
            prop_assert!(*u >= BigInt::zero());
            if i < h as usize {
                prop_assert!(*u < big_p);
            }
            excess += u * &scale;
            scale *= &big_p;
        }
        prop_assert_eq!(excess, &r - &min);

        for lam in &res.lambda_factors {
            prop_assert!(lam.is_column_regular(&big_p).unwrap());
            prop_assert!(lam.breadth() <= &big_p - 1);
            // strip the determinant part
            let det = Weight::omega(n).scale(&lam.entries()[n - 1]);
            let tau = DominantWeight::try_from(lam.as_weight() - &det).unwrap();
            prop_assert!(tau.p_adic_breadth(&bp).unwrap() < bp);
        }

        let max_h = max_h_classical(n, p, m, &r).unwrap();
        prop_assert!(max_h >= h);
        prop_assert!(min_r_classical(n, p, m, max_h + 1).unwrap() > r);
    }

    #[test]
    fn construction_json_round_trip(
        (n, p, m) in planner_setting(),
        h in 1u32..=2,
        extra in 0u64..=200,
        l in 2u64..=3,
        quantum in any::<bool>(),
    ) {
        let res = if quantum {
            let min = schur_repdim::min_r_quantum(n, p, m, l, h).unwrap();
            construct_quantum(&QuantumParams::new(n, p, m, l, h, min + big(extra)), false).unwrap()
        } else {
            let min = min_r_classical(n, p, m, h).unwrap();
            construct_classical(&ClassicalParams::new(n, p, m, h, min + big(extra)), false).unwrap()
        };
        let back = construction_from_json(&construction_to_json(&res, false)).unwrap();
        prop_assert_eq!(back, res);
    }

    #[test]
    fn tensor_factorization_adds_degrees_and_indices(
        (n, p) in (2usize..=3, prime()).prop_filter("p > n", |(n, p)| *p > *n as u64),
        a in prop::collection::vec(1u64..=6, 1..=2),
        g in 0u64..=3,
    ) {
        let a: Vec<u64> = a.into_iter().map(|x| 1 + x % (p - 1)).collect();
        let factors: Vec<_> = a.iter().map(|&x| pm_hook_injective(n, p, 1, &big(x), true).unwrap()).collect();
        let gamma = DominantWeight::try_from(Weight::epsilon(n, 1).unwrap().scale(&big(g))).unwrap();
        let t = tensor_factorization(&factors, p, 1, &gamma).unwrap();

        let mut expected = gamma.as_weight().scale(&num_traits::pow(big(p), factors.len()));
        for (i, f) in factors.iter().enumerate().rev() {
            expected = &expected + &f.socle_weight().as_weight().scale(&num_traits::pow(big(p), i));
        }
        prop_assert_eq!(t.socle_weight().as_weight(), &expected);

        let chi = t.character().unwrap();
        let socle_degree = t.socle_weight().degree();
        prop_assert!(chi.terms().all(|(w, _)| w.degree() == socle_degree));

        let index: u32 = factors.iter().map(|f| f.index().unwrap().value).sum();
        prop_assert_eq!(t.index().unwrap().value, index);
        let dim: BigInt = factors.iter().map(|f| f.end_algebra().dimension()).product();
        prop_assert_eq!(t.end_algebra().dimension(), dim);
    }
}

#[test]
fn steinberg_tilting_character_matches_brauer_sum() {
    for n in 2..=3usize {
        for p in [2u64, 3, 5] {
            let st = DominantWeight::try_from(Weight::delta(n).scale(&big(p - 1))).unwrap();
            for r in 0..=(p - 1) * n as u64 {
                for lam in schur_repdim::weight::dominant_polynomial_weights(n, r) {
                    let Ok(d) = steinberg_tilting(n, p, &lam) else { continue };
                    let expected = brauer_sum(n, &brauer_expand(&st, &lam).unwrap());
                    assert_eq!(d.character(), Some(&expected), "n={n} p={p} λ={lam}");
                    let top = st.as_weight() + lam.as_weight();
                    assert!(expected.weight_multiplicity(&top).is_one());
                }
            }
        }
    }
}

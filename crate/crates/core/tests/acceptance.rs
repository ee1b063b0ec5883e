//! Acceptance suite. Every comparison is exact; each criterion prints one
//! PASS/FAIL line with its elapsed time and fails the test on any mismatch.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_repdim::character::{brauer_expand, orbit_sum, schur_character, weyl_character, zhat_character, Character};
use schur_repdim::injective::{hook_injective_end, steinberg_tilting};
use schur_repdim::oracle::{alternant_eval, dimension_via_product, evaluate_character};
use schur_repdim::planner::{
    construct_classical, construct_quantum, min_r_classical, min_r_quantum, ClassicalParams, QuantumParams,
};
use schur_repdim::weight::dominant_polynomial_weights;
use schur_repdim::{DominantWeight, Error, Weight};

const SEED: u64 = 20_081_113;

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// Runs a criterion, prints its verdict line and enforces the time budget.
fn criterion(id: u32, label: &str, budget: Duration, body: impl FnOnce() -> Vec<String>) {
    let start = Instant::now();
    let failures = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let ok = failures.is_empty() && in_time;
    println!(
        "[{}] criterion {id}: {label} ({:.2}s, budget {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for f in failures.iter().take(10) {
        println!("       {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {} mismatches", failures.len());
    assert!(in_time, "criterion {id} exceeded its {}s budget", budget.as_secs());
}

/// Column p-regular partitions of rank n with breadth below p.
fn restricted(n: usize, p: u64) -> Vec<DominantWeight> {
    (0..=(p - 1) * n as u64)
        .flat_map(|r| dominant_polynomial_weights(n, r))
        .filter(|l| l.breadth() < big(p) && l.is_column_regular(&big(p)).unwrap())
        .collect()
}

fn steinberg(n: usize, p: u64) -> DominantWeight {
    DominantWeight::try_from(Weight::delta(n).scale(&big(p - 1))).unwrap()
}

#[test]
fn criterion_1_brauer_sweep() {
    criterion(1, "χ((p−1)δ)·s(λ) = Σ_{μ∈Wλ} χ((p−1)δ+μ), |Wλ| summands, signs +1", Duration::from_secs(30), || {
        let mut bad = Vec::new();
        for n in [2usize, 3] {
            for p in [2u64, 3, 5] {
                let st = steinberg(n, p);
                let chi_st = schur_character(&st);
                for lam in restricted(n, p) {
                    let lhs = &chi_st * &orbit_sum(&lam);
                    let orbit = lam.weyl_orbit();
                    let mut rhs = Character::zero(n);
                    for mu in &orbit {
                        rhs = &rhs + &weyl_character(&(st.as_weight() + mu));
                    }
                    if lhs != rhs {
                        bad.push(format!("n={n} p={p} λ={lam}: sides differ"));
                    }
                    let terms = brauer_expand(&st, &lam).unwrap();
                    if terms.len() != orbit.len() || terms.iter().any(|(s, _)| *s != 1) {
                        bad.push(format!("n={n} p={p} λ={lam}: {} summands vs |Wλ|={}", terms.len(), orbit.len()));
                    }
                }
            }
        }
        bad
    });
}

#[test]
fn criterion_2_end_dimension_law() {
    criterion(2, "dim End = |Wλ|; = n for λ = aε₁", Duration::from_secs(5), || {
        let mut bad = Vec::new();
        for n in [2usize, 3] {
            for p in [2u64, 3, 5] {
                for lam in restricted(n, p) {
                    let d = steinberg_tilting(n, p, &lam).unwrap();
                    let orbit = BigInt::from(lam.weyl_orbit().len());
                    if d.end_algebra().dimension() != orbit {
                        bad.push(format!("n={n} p={p} λ={lam}: dim End {} vs |Wλ| {orbit}", d.end_algebra().dimension()));
                    }
                }
                for a in 1..p {
                    let lam = DominantWeight::try_from(Weight::epsilon(n, 1).unwrap().scale(&big(a))).unwrap();
                    let d = steinberg_tilting(n, p, &lam).unwrap();
                    let hook = hook_injective_end(n, p, a).unwrap();
                    if d.end_algebra().dimension() != big(n as u64) || hook.dimension() != big(n as u64) {
                        bad.push(format!("n={n} p={p} a={a}: hook algebra dimension is not n"));
                    }
                    if d.end_algebra().as_truncated() != Some(&hook) {
                        bad.push(format!("n={n} p={p} a={a}: algebra {} vs {hook}", d.end_algebra()));
                    }
                }
            }
        }
        bad
    });
}

#[test]
fn criterion_3_counterexample_arithmetic() {
    criterion(3, "dim χ((p,0)) = p+1 and dim twist(ch E, p) = 2", Duration::from_secs(1), || {
        let mut bad = Vec::new();
        for p in [2u64, 3, 5, 7] {
            let sym = weyl_character(&Weight::from_ints([p, 0]));
            if sym.dimension() != big(p + 1) {
                bad.push(format!("p={p}: dim S^pE = {}", sym.dimension()));
            }
            let e = weyl_character(&Weight::from_ints([1u64, 0]));
            let twisted = e.frobenius_twist(&big(p)).unwrap();
            if twisted.dimension() != big(2) {
                bad.push(format!("p={p}: dim E^F = {}", twisted.dimension()));
            }
        }
        bad
    });
}

#[test]
fn criterion_4_zhat_dimension() {
    criterion(4, "dim Ẑ(λ) = p^{n(n−1)/2} on random λ", Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut bad = Vec::new();
        for n in [2usize, 3] {
            for p in [2u64, 3] {
                let expected = num_traits::pow(big(p), n * (n - 1) / 2);
                for _ in 0..20 {
                    let lam = Weight::from_ints((0..n).map(|_| rng.gen_range(-20i64..=20)));
                    let z = zhat_character(&lam, &big(p)).unwrap();
                    if z.dimension() != expected {
                        bad.push(format!("n={n} p={p} λ={lam}: {}", z.dimension()));
                    }
                }
            }
        }
        bad
    });
}

#[test]
fn criterion_5_oracle_equivalence() {
    criterion(5, "tableau χ = alternant ratio (5 points) = Weyl product dimension, n ≤ 4, |λ| ≤ 10", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut bad = Vec::new();
        let mut weights = 0;
        for n in 1..=4usize {
            for r in 0..=10u64 {
                for a in dominant_polynomial_weights(n, r) {
                    weights += 1;
                    let chi = schur_character(&a);
                    if chi.dimension() != dimension_via_product(&a) {
                        bad.push(format!("{a}: dimension {} vs product {}", chi.dimension(), dimension_via_product(&a)));
                    }
                    for _ in 0..5 {
                        let mut pool: Vec<i64> = (2..=50).collect();
                        let point: Vec<BigRational> = (0..n)
                            .map(|_| {
                                let v = pool.swap_remove(rng.gen_range(0..pool.len()));
                                BigRational::from_integer(BigInt::from(v))
                            })
                            .collect();
                        let want = alternant_eval(&a, &point).unwrap();
                        let got = evaluate_character(&chi, &point);
                        if want != got {
                            bad.push(format!("{a} at {point:?}: {want} vs {got}"));
                        }
                    }
                }
            }
        }
        if weights < 100 {
            bad.push(format!("only {weights} weights enumerated"));
        }
        bad
    });
}

/// (n, p, m) with n ≤ 4 and n < P = pᵐ ≤ 16.
fn planner_grid() -> Vec<(usize, u64, u32)> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for m in 1..=4u32 {
                let big_p = p.pow(m);
                if big_p > n as u64 && big_p <= 16 {
                    out.push((n, p, m));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_6_planner_exactness() {
    criterion(6, "μ=(8,4) with k[x₁,x₂]/(x₁²,x₂²); |μ| = r on 200 draws; min_r 12 and 24", Duration::from_secs(10), || {
        let mut bad = Vec::new();
        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 2, 12u32), true).unwrap();
        if res.mu != DominantWeight::from_ints([8, 4]) {
            bad.push(format!("μ = {}", res.mu));
        }
        let alg = res.descriptor.end_algebra().as_truncated().cloned();
        if alg.as_ref().map(|a| (a.generators(), a.cap())) != Some((2, 2)) || res.descriptor.end_algebra().dimension() != big(4) {
            bad.push(format!("End = {}", res.descriptor.end_algebra()));
        }
        if res.repdim_lower_bound != 3 {
            bad.push(format!("bound {}", res.repdim_lower_bound));
        }
        if min_r_classical(2, 3, 1, 2).unwrap() != big(12) {
            bad.push("classical min_r ≠ 12".into());
        }
        if min_r_quantum(2, 3, 1, 2, 1).unwrap() != big(24) {
            bad.push("quantum min_r ≠ 24".into());
        }
        let q = construct_quantum(&QuantumParams::new(2, 3, 1, 2, 1, 24u32), false).unwrap();
        if q.repdim_lower_bound != 3 || q.mu.degree() != big(24) {
            bad.push(format!("quantum r=24: μ={} bound {}", q.mu, q.repdim_lower_bound));
        }

        let grid = planner_grid();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for draw in 0..200 {
            let (n, p, m) = grid[rng.gen_range(0..grid.len())];
            let h = rng.gen_range(1..=3u32);
            let min = min_r_classical(n, p, m, h).unwrap();
            let r = &min + BigInt::from(rng.gen_range(0..=500u32));
            let res = match construct_classical(&ClassicalParams::new(n, p, m, h, r.clone()), false) {
                Ok(res) => res,
                Err(e) => {
                    bad.push(format!("draw {draw}: n={n} p={p} m={m} h={h} r={r}: {e}"));
                    continue;
                }
            };
            let big_p = big(p.pow(m));
            let digits_ok = res.digits[..h as usize].iter().all(|u| *u >= BigInt::zero() && *u < big_p)
                && res.digits[h as usize] >= BigInt::zero();
            let mut excess = BigInt::zero();
            let mut scale = BigInt::one();
            for u in &res.digits {
                excess += u * &scale;
                scale *= &big_p;
            }
            let gens = res.descriptor.end_algebra().as_truncated().map(|t| t.generators()).unwrap_or(0);
            if res.mu.degree() != r
                || !res.mu.is_dominant()
                || !res.mu.is_polynomial()
                || !digits_ok
                || excess != &r - &min
                || gens < h
                || res.repdim_lower_bound != h + 1
            {
                bad.push(format!("draw {draw}: n={n} p={p} m={m} h={h} r={r}: μ={}", res.mu));
            }
        }
        bad
    });
}

#[test]
fn criterion_7_threshold_tightness() {
    criterion(7, "construct succeeds at min_r and fails with BelowThreshold at min_r − 1", Duration::from_secs(5), || {
        let grid = planner_grid();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
        let mut bad = Vec::new();
        for draw in 0..20 {
            let (n, p, m) = grid[rng.gen_range(0..grid.len())];
            let h = rng.gen_range(1..=3u32);
            let l = rng.gen_range(2..=4u64);

            let min = min_r_classical(n, p, m, h).unwrap();
            if construct_classical(&ClassicalParams::new(n, p, m, h, min.clone()), false).is_err() {
                bad.push(format!("draw {draw}: classical fails at min_r = {min}"));
            }
            match construct_classical(&ClassicalParams::new(n, p, m, h, &min - 1), false) {
                Err(Error::BelowThreshold { required, .. }) if required == min => {}
                other => bad.push(format!("draw {draw}: classical at min_r − 1 gave {other:?}")),
            }

            let qmin = min_r_quantum(n, p, m, l, h).unwrap();
            match construct_quantum(&QuantumParams::new(n, p, m, l, h, qmin.clone()), false) {
                Ok(res) if res.digits.iter().all(Zero::is_zero) => {}
                other => bad.push(format!("draw {draw}: quantum at min_r = {qmin} gave {:?}", other.map(|r| r.digits))),
            }
            match construct_quantum(&QuantumParams::new(n, p, m, l, h, &qmin - 1), false) {
                Err(Error::BelowThreshold { required, .. }) if required == qmin => {}
                other => bad.push(format!("draw {draw}: quantum at min_r − 1 gave {:?}", other.map(|r| r.mu))),
            }
        }
        bad
    });
}

//! The digit construction of a weight `μ ∈ Λ⁺(n, r)` whose injective hull
//! `I(μ)` has endomorphism algebra a tensor power of `k[x]/(xⁿ)`, and the
//! representation-dimension lower bounds for `S(n, r)` and `S_q(n, r)` that
//! follow from it.
//!
//! With `P = pᵐ > n` and `|δ| = n(n−1)/2`, the classical construction needs
//!
//! ```text
//! r ≥ ((P−1)|δ| + 1)(P^h − 1)/(P − 1)
//! ```
//!
//! and writes the excess over that threshold in base `P`. Each of the `h`
//! low digits selects a hook factor; the remaining high part becomes `γ`.
//! The quantum construction (parameter a primitive l-th root of unity) peels
//! off one more layer at modulus `lP` before running the classical one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::injective::{
    determinant_shift, is_prime, pm_hook_injective, quantum_hook_injective, tensor_factorization,
    tensor_with_twist, InjectiveDescriptor,
};
use crate::weight::{DominantWeight, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Classical,
    Quantum,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Classical => "classical",
            Regime::Quantum => "quantum",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalParams {
    pub n: usize,
    pub p: u64,
    pub m: u32,
    pub h: u32,
    pub r: BigInt,
}

impl ClassicalParams {
    pub fn new(n: usize, p: u64, m: u32, h: u32, r: impl Into<BigInt>) -> Self {
        ClassicalParams { n, p, m, h, r: r.into() }
    }

    /// `P = pᵐ`
    pub fn modulus(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.m as usize)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumParams {
    pub classical: ClassicalParams,
    /// Order of the root of unity `q`.
    pub l: u64,
}

impl QuantumParams {
    pub fn new(n: usize, p: u64, m: u32, l: u64, h: u32, r: impl Into<BigInt>) -> Self {
        QuantumParams {
            classical: ClassicalParams::new(n, p, m, h, r),
            l,
        }
    }
}

/// The extra layer of the quantum construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelZero {
    /// `u₋₁ ∈ [0, lP − 1]`
    pub digit: BigInt,
    /// `λ₋₁`
    pub factor: DominantWeight,
    /// Degree handed to the classical layer.
    pub s: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub regime: Regime,
    pub n: usize,
    pub p: u64,
    pub m: u32,
    pub modulus: BigInt,
    pub l: Option<u64>,
    pub h: u32,
    pub r: BigInt,
    /// `u₀, …, u_{h−1}, u_h`
    pub digits: Vec<BigInt>,
    pub level_zero: Option<LevelZero>,
    /// `λ⁰, …, λ^{h−1}`
    pub lambda_factors: Vec<DominantWeight>,
    pub gamma: DominantWeight,
    pub mu: DominantWeight,
    pub descriptor: InjectiveDescriptor,
    pub repdim_lower_bound: u32,
}

fn delta_degree(n: usize) -> BigInt {
    BigInt::from(n * (n - 1) / 2)
}

/// `1 + P + ⋯ + P^{h−1}`
fn geometric(modulus: &BigInt, h: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut term = BigInt::one();
    for _ in 0..h {
        acc += &term;
        term *= modulus;
    }
    acc
}

fn check_classical(n: usize, p: u64, m: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Precondition(format!("rank n = {n} must be at least 2")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let modulus = num_traits::pow(BigInt::from(p), m as usize);
    if modulus <= BigInt::from(n) {
        return Err(Error::Precondition(format!("P = {p}^{m} = {modulus} must exceed n = {n}")));
    }
    Ok(modulus)
}

fn check_l(l: u64) -> Result<()> {
    if l < 2 {
        return Err(Error::Precondition(format!("root-of-unity order l = {l} must exceed 1")));
    }
    Ok(())
}

/// Smallest `m ≥ 1` with `pᵐ > n`.
pub fn minimal_m(n: usize, p: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut m = 1;
    let mut pow = p as u128;
    while pow <= n as u128 {
        pow *= p as u128;
        m += 1;
    }
    Ok(m)
}

/// `((P−1)|δ| + 1)(P^h − 1)/(P − 1)`
pub fn min_r_classical(n: usize, p: u64, m: u32, h: u32) -> Result<BigInt> {
    let modulus = check_classical(n, p, m)?;
    Ok(((&modulus - 1) * delta_degree(n) + 1) * geometric(&modulus, h))
}

/// `((lP−1)|δ| + 1) + lP·((P−1)|δ| + 1)(P^h − 1)/(P − 1)`
pub fn min_r_quantum(n: usize, p: u64, m: u32, l: u64, h: u32) -> Result<BigInt> {
    check_l(l)?;
    let modulus = check_classical(n, p, m)?;
    let lp = BigInt::from(l) * &modulus;
    Ok((&lp - 1) * delta_degree(n) + 1 + lp * min_r_classical(n, p, m, h)?)
}

/// Largest `h` whose threshold is at most `r`; 0 means no bound beyond the trivial one.
pub fn max_h_classical(n: usize, p: u64, m: u32, r: &BigInt) -> Result<u32> {
    let mut h = 0;
    while min_r_classical(n, p, m, h + 1)? <= *r {
        h += 1;
    }
    Ok(h)
}

/// Quantum counterpart of [`max_h_classical`].
pub fn max_h_quantum(n: usize, p: u64, m: u32, l: u64, r: &BigInt) -> Result<u32> {
    let mut h = 0;
    while min_r_quantum(n, p, m, l, h + 1)? <= *r {
        h += 1;
    }
    Ok(h)
}

/// `(1+u)ε₁` below the top digit, `(modulus−n)ε₁ + ω` at it.
fn hook_factor(n: usize, u: &BigInt, modulus: &BigInt) -> (DominantWeight, bool) {
    let e1 = Weight::epsilon(n, 1).expect("n ≥ 2");
    let top = u == &(modulus - 1);
    let w = if top {
        &e1.scale(&(modulus - BigInt::from(n))) + &Weight::omega(n)
    } else {
        e1.scale(&(u + 1))
    };
    (DominantWeight::try_from(w).expect("hook plus ω is dominant"), top)
}

fn layer_weight(n: usize, modulus: &BigInt, lam: &DominantWeight) -> Weight {
    &Weight::delta(n).scale(&(modulus - 1)) + &lam.w0()
}

/// Runs the classical digit construction for `params`.
///
/// With `materialize = false` no character is computed; the weight and
/// algebra bookkeeping is unaffected.
pub fn construct_classical(params: &ClassicalParams, materialize: bool) -> Result<ConstructionResult> {
    let ClassicalParams { n, p, m, h, ref r } = *params;
    let modulus = check_classical(n, p, m)?;
    if h == 0 {
        return Err(Error::Precondition("h must be at least 1".into()));
    }
    let threshold = min_r_classical(n, p, m, h)?;
    if *r < threshold {
        return Err(Error::BelowThreshold {
            required: threshold,
            got: r.clone(),
        });
    }

    let mut rest = r - &threshold;
    let mut digits = Vec::with_capacity(h as usize + 1);
    for _ in 0..h {
        let (q, u) = rest.div_mod_floor(&modulus);
        digits.push(u);
        rest = q;
    }
    digits.push(rest);

    let mut lambda_factors = Vec::with_capacity(h as usize);
    let mut factors = Vec::with_capacity(h as usize);
    for u in &digits[..h as usize] {
        let (lam, top) = hook_factor(n, u, &modulus);
        let factor = if top {
            let base = pm_hook_injective(n, p, m, &(&modulus - BigInt::from(n)), materialize)?;
            determinant_shift(&base, 1)
        } else {
            pm_hook_injective(n, p, m, &(u + 1), materialize)?
        };
        lambda_factors.push(lam);
        factors.push(factor);
    }
    let gamma_w = Weight::epsilon(n, 1).expect("n ≥ 2").scale(&digits[h as usize]);
    let gamma = DominantWeight::try_from(gamma_w).expect("multiple of ε₁");
    let descriptor = tensor_factorization(&factors, p, m, &gamma)?;

    let mut mu_w = gamma.scale(&num_traits::pow(modulus.clone(), h as usize));
    let mut scale = BigInt::one();
    for lam in &lambda_factors {
        mu_w = &mu_w + &layer_weight(n, &modulus, lam).scale(&scale);
        scale *= &modulus;
    }
    let mu = DominantWeight::try_from(mu_w)?;
    assert_eq!(&mu, descriptor.socle_weight(), "assembled μ must be the tensor socle");
    assert_eq!(&mu.degree(), r, "|μ| must equal r");
    assert!(mu.is_polynomial());
    let index = descriptor.index().expect("hook factors are admissible");
    assert!(index.value >= h, "index {} below h = {h}", index.value);

    Ok(ConstructionResult {
        regime: Regime::Classical,
        n,
        p,
        m,
        modulus,
        l: None,
        h,
        r: r.clone(),
        digits,
        level_zero: None,
        lambda_factors,
        gamma,
        mu,
        descriptor,
        repdim_lower_bound: h + 1,
    })
}

/// Runs the quantum construction: level-zero digit at modulus `lP`, then the
/// classical construction on the remaining degree `s`, twisted by `lP`.
pub fn construct_quantum(params: &QuantumParams, materialize: bool) -> Result<ConstructionResult> {
    let QuantumParams { ref classical, l } = *params;
    let ClassicalParams { n, p, m, h, ref r } = *classical;
    check_l(l)?;
    let modulus = check_classical(n, p, m)?;
    if h == 0 {
        return Err(Error::Precondition("h must be at least 1".into()));
    }
    let threshold = min_r_quantum(n, p, m, l, h)?;
    if *r < threshold {
        return Err(Error::BelowThreshold {
            required: threshold,
            got: r.clone(),
        });
    }
    let lp = BigInt::from(l) * &modulus;
    let base: BigInt = (&lp - 1) * delta_degree(n) + 1;
    let (s, u) = (r - &base).div_mod_floor(&lp);

    let inner = construct_classical(&ClassicalParams::new(n, p, m, h, s.clone()), materialize)?;

    let (lam0, top) = hook_factor(n, &u, &lp);
    let level = if top {
        determinant_shift(&quantum_hook_injective(n, p, m, l, &(&lp - BigInt::from(n)), materialize)?, 1)
    } else {
        quantum_hook_injective(n, p, m, l, &(&u + 1), materialize)?
    };
    let descriptor = tensor_with_twist(&level, &inner.descriptor, &lp)?;

    let mu_w = &layer_weight(n, &lp, &lam0) + &inner.mu.scale(&lp);
    let mu = DominantWeight::try_from(mu_w)?;
    assert_eq!(&mu, descriptor.socle_weight(), "assembled μ must be the tensor socle");
    assert_eq!(&mu.degree(), r, "|μ| must equal r");
    let index = descriptor.index().expect("hook factors are admissible");
    assert!(index.value > h, "index {} below h + 1", index.value);

    Ok(ConstructionResult {
        regime: Regime::Quantum,
        n,
        p,
        m,
        modulus,
        l: Some(l),
        h,
        r: r.clone(),
        digits: inner.digits,
        level_zero: Some(LevelZero { digit: u, factor: lam0, s }),
        lambda_factors: inner.lambda_factors,
        gamma: inner.gamma,
        mu,
        descriptor,
        repdim_lower_bound: h + 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injective::EndAlgebra;

    fn dw(v: &[i64]) -> DominantWeight {
        DominantWeight::from_ints(v.iter().copied())
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn thresholds() {
        assert_eq!(min_r_classical(2, 3, 1, 2).unwrap(), big(12));
        assert_eq!(min_r_classical(2, 3, 1, 1).unwrap(), big(3));
        assert_eq!(min_r_classical(3, 5, 1, 1).unwrap(), big(13));
        assert_eq!(min_r_classical(2, 3, 1, 3).unwrap(), big(39));
        assert!(min_r_classical(3, 3, 1, 1).is_err());
        assert!(min_r_classical(3, 2, 1, 1).is_err());
        assert!(min_r_classical(2, 4, 1, 1).is_err());

        assert_eq!(min_r_quantum(2, 3, 1, 2, 1).unwrap(), big(24));
        assert_eq!(min_r_quantum(2, 3, 1, 2, 2).unwrap(), big(78));
        assert_eq!(min_r_quantum(3, 2, 2, 3, 1).unwrap(), big(154));
        assert!(min_r_quantum(2, 3, 1, 1, 1).is_err());
    }

    #[test]
    fn max_h_examples() {
        assert_eq!(max_h_classical(2, 3, 1, &big(12)).unwrap(), 2);
        assert_eq!(max_h_classical(2, 3, 1, &big(11)).unwrap(), 1);
        assert_eq!(max_h_classical(2, 3, 1, &big(2)).unwrap(), 0);
        assert_eq!(max_h_quantum(2, 3, 1, 2, &big(24)).unwrap(), 1);
        assert_eq!(max_h_quantum(2, 3, 1, 2, &big(23)).unwrap(), 0);
        assert_eq!(minimal_m(2, 3).unwrap(), 1);
        assert_eq!(minimal_m(3, 2).unwrap(), 2);
        assert_eq!(minimal_m(4, 2).unwrap(), 3);
    }

    #[test]
    fn classical_r12() {
        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 2, 12), true).unwrap();
        assert_eq!(res.digits, vec![big(0), big(0), big(0)]);
        assert_eq!(res.lambda_factors, vec![dw(&[1, 0]), dw(&[1, 0])]);
        assert_eq!(res.gamma, dw(&[0, 0]));
        assert_eq!(res.mu, dw(&[8, 4]));
        assert_eq!(res.descriptor.end_algebra().to_string(), "k[x1,x2]/(x1^2,x2^2)");
        assert_eq!(res.descriptor.end_algebra().dimension(), big(4));
        assert_eq!(res.repdim_lower_bound, 3);
        assert_eq!(res.descriptor.character().unwrap().dimension(), big(36));
    }

    #[test]
    fn classical_small_r() {
        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 1, 3), true).unwrap();
        assert_eq!((res.mu.clone(), res.repdim_lower_bound), (dw(&[2, 1]), 2));
        assert_eq!(res.lambda_factors, vec![dw(&[1, 0])]);

        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 1, 5), true).unwrap();
        assert_eq!(res.digits[0], big(2));
        assert_eq!(res.lambda_factors, vec![dw(&[2, 1])]);
        assert_eq!(res.mu, dw(&[3, 2]));

        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 1, 4), true).unwrap();
        assert_eq!(res.lambda_factors, vec![dw(&[2, 0])]);
        assert_eq!(res.mu, dw(&[2, 2]));

        // excess spills into γ
        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 1, 10), true).unwrap();
        assert_eq!(res.digits, vec![big(1), big(2)]);
        assert_eq!(res.gamma, dw(&[2, 0]));
        assert_eq!(res.mu, dw(&[8, 2]));
    }

    #[test]
    fn classical_rejects() {
        assert_eq!(
            construct_classical(&ClassicalParams::new(2, 3, 1, 2, 11), false),
            Err(Error::BelowThreshold { required: big(12), got: big(11) })
        );
        assert!(construct_classical(&ClassicalParams::new(3, 3, 1, 1, 100), false).is_err());
        assert!(construct_classical(&ClassicalParams::new(2, 3, 1, 0, 100), false).is_err());
    }

    #[test]
    fn quantum_examples() {
        let res = construct_quantum(&QuantumParams::new(2, 3, 1, 2, 1, 24), true).unwrap();
        let lz = res.level_zero.clone().unwrap();
        assert_eq!((lz.digit, lz.factor, lz.s), (big(0), dw(&[1, 0]), big(3)));
        assert_eq!(res.lambda_factors, vec![dw(&[1, 0])]);
        assert_eq!(res.mu, dw(&[17, 7]));
        assert_eq!(res.repdim_lower_bound, 3);
        let ix = res.descriptor.index().unwrap();
        assert!(ix.value >= 2 && !ix.exact);

        let res = construct_quantum(&QuantumParams::new(2, 3, 1, 2, 1, 25), false).unwrap();
        assert_eq!(res.level_zero.as_ref().unwrap().factor, dw(&[2, 0]));
        assert_eq!(res.mu.degree(), big(25));

        // u₋₁ at the top digit lP − 1 = 5
        let res = construct_quantum(&QuantumParams::new(2, 3, 1, 2, 1, 29), false).unwrap();
        assert_eq!(res.level_zero.as_ref().unwrap().factor, dw(&[5, 1]));
        assert_eq!(res.mu.degree(), big(29));

        assert!(matches!(
            construct_quantum(&QuantumParams::new(2, 3, 1, 2, 1, 23), false),
            Err(Error::BelowThreshold { .. })
        ));
    }

    #[test]
    fn truncated_shape() {
        for r in 12..60 {
            let res = construct_classical(&ClassicalParams::new(2, 3, 1, 2, r), false).unwrap();
            match res.descriptor.end_algebra() {
                EndAlgebra::Truncated(t) => {
                    assert_eq!(t.cap(), 2);
                    assert!(t.generators() >= 2);
                }
                other => panic!("unexpected algebra {other}"),
            }
        }
    }
}

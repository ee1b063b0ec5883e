//! Brute-force verifiers for the character layer.
//!
//! Everything here is computed along a route that does not share code with
//! [`crate::character`]'s tableau enumeration: Schur polynomials as ratios of
//! alternants over exact rationals, dimensions from the type A product
//! formula, orbits from raw permutation enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::character::{
    brauer_expand, brauer_sum, orbit_sum, schur_character, zhat_character, Character,
};
use crate::error::{Error, Result};
use crate::weight::{dominance_leq, dominant_polynomial_weights, factorial, DominantWeight, Weight};

/// Seed used when none is given on the command line.
pub const DEFAULT_SEED: u64 = 0x5eed_2008;

/// One failing instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of checking one identity over a range of instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub identity: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl OracleReport {
    fn new(identity: &str) -> Self {
        OracleReport {
            identity: identity.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<E, G>(&mut self, ok: bool, inputs: impl FnOnce() -> String, expected: E, got: G)
    where
        E: FnOnce() -> String,
        G: FnOnce() -> String,
    {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs(),
                expected: expected(),
                got: got(),
            });
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Display>(&mut self, inputs: impl FnOnce() -> String, expected: T, got: T) {
        let ok = expected == got;
        self.check(ok, inputs, || expected.to_string(), || got.to_string());
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

fn power(x: &BigRational, e: &BigInt) -> BigRational {
    let e = e.to_i32().expect("exponent fits in i32");
    x.pow(e)
}

/// Schur polynomial at `point` as `det(xᵢ^{aⱼ+n−j}) / det(xᵢ^{n−j})`.
pub fn alternant_eval(a: &DominantWeight, point: &[BigRational]) -> Result<BigRational> {
    let n = a.rank();
    if point.len() != n {
        return Err(Error::RankMismatch {
            left: n,
            right: point.len(),
        });
    }
    if !a.is_polynomial() {
        return Err(Error::NotPolynomial(a.to_string()));
    }
    let distinct: BTreeSet<&BigRational> = point.iter().collect();
    if distinct.len() != n || point.iter().any(Zero::is_zero) {
        return Err(Error::DegeneratePoint);
    }
    let build = |exps: &dyn Fn(usize) -> BigInt| -> Vec<Vec<BigRational>> {
        point
            .iter()
            .map(|x| (0..n).map(|j| power(x, &exps(j))).collect())
            .collect()
    };
    let num = determinant(build(&|j| &a.entries()[j] + BigInt::from(n - 1 - j)));
    let den = determinant(build(&|j| BigInt::from(n - 1 - j)));
    Ok(num / den)
}

/// Evaluates a character as a Laurent polynomial at `point`.
pub fn evaluate_character(x: &Character, point: &[BigRational]) -> BigRational {
    x.terms()
        .map(|(w, c)| {
            w.entries()
                .iter()
                .zip(point)
                .fold(BigRational::from_integer(c.clone()), |acc, (e, v)| acc * power(v, e))
        })
        .sum()
}

fn random_point(n: usize, rng: &mut impl Rng) -> Vec<BigRational> {
    let mut pool: Vec<i64> = (2..=50).collect();
    pool.shuffle(rng);
    pool[..n]
        .iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

fn show_point(point: &[BigRational]) -> String {
    let parts: Vec<String> = point.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Compares the tableau-built `χ(a)` with the alternant ratio at `trials`
/// random points with distinct integer coordinates in `2..=50`.
pub fn verify_chi_against_alternant(a: &DominantWeight, trials: usize, rng: &mut impl Rng) -> OracleReport {
    let mut report = OracleReport::new("chi_vs_alternant");
    let chi = schur_character(a);
    for _ in 0..trials {
        let point = random_point(a.rank(), rng);
        let expected = alternant_eval(a, &point).expect("valid point");
        let got = evaluate_character(&chi, &point);
        report.expect_eq(|| format!("a={a} point={}", show_point(&point)), expected, got);
    }
    report
}

/// Type A Weyl dimension formula `∏_{i<j} (aᵢ − aⱼ + j − i) / (j − i)`.
pub fn dimension_via_product(a: &DominantWeight) -> BigInt {
    let e = a.entries();
    let n = e.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= &e[i] - &e[j] + BigInt::from(j - i);
            den *= BigInt::from(j - i);
        }
    }
    num / den
}

/// All `n!` rearrangements of `w`, by Heap's algorithm, deduplicated.
pub fn brute_force_orbit(w: &Weight) -> BTreeSet<Weight> {
    let mut v = w.entries().to_vec();
    let n = v.len();
    let mut out = BTreeSet::new();
    let mut c = vec![0usize; n];
    out.insert(Weight::new(v.clone()).expect("rank ≥ 1"));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                v.swap(0, i);
            } else {
                v.swap(c[i], i);
            }
            out.insert(Weight::new(v.clone()).expect("rank ≥ 1"));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Bounds and seed for [`run_suite`].
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub max_degree: u64,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub alternant_trials: usize,
}

impl SuiteConfig {
    pub fn new(max_n: usize, max_degree: u64, primes: &[u64]) -> Self {
        SuiteConfig {
            max_n,
            max_degree,
            primes: primes.to_vec(),
            seed: DEFAULT_SEED,
            alternant_trials: 5,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Runs every weight-lattice and character identity over the configured
/// ranges. Identical configs give identical reports.
pub fn run_suite(config: &SuiteConfig) -> Vec<OracleReport> {
    let checks: [fn(&SuiteConfig, &mut ChaCha8Rng) -> OracleReport; 14] = [
        check_padic_reconstruction,
        check_orbit_size_law,
        check_dominance_partial_order,
        check_w0,
        check_steinberg_shift_regular,
        check_w_symmetry,
        check_highest_weight,
        check_weyl_dimension,
        check_alternant,
        check_brauer_general,
        check_brauer_steinberg_regime,
        check_twist_homomorphism,
        check_twist_dimension_multiplicative,
        check_zhat_dimension,
    ];
    checks
        .iter()
        .enumerate()
        .map(|(i, check)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(i as u64));
            check(config, &mut rng)
        })
        .collect()
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn dominant_upto(n: usize, max_degree: u64) -> Vec<DominantWeight> {
    (0..=max_degree).flat_map(|r| dominant_polynomial_weights(n, r)).collect()
}

fn column_regular_below(n: usize, modulus: u64) -> Vec<DominantWeight> {
    dominant_upto(n, (modulus - 1) * n as u64)
        .into_iter()
        .filter(|lam| lam.breadth() < big(modulus))
        .filter(|lam| lam.is_column_regular(&big(modulus)).expect("modulus ≥ 2"))
        .collect()
}

fn check_padic_reconstruction(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("padic_reconstruction");
    for n in 1..=cfg.max_n {
        for a in dominant_upto(n, cfg.max_degree) {
            for &p in &cfg.primes {
                for base in [p, p * p] {
                    let b = big(base);
                    let dec = a.p_adic_decompose(&b).expect("polynomial input");
                    rep.expect_eq(|| format!("a={a} base={base}"), a.as_weight().clone(), dec.reconstruct(n));
                    let regular = dec.digits.iter().all(|d| d.is_column_regular(&b).unwrap());
                    rep.check(regular, || format!("a={a} base={base}"), || "regular digits".into(), || "irregular digit".into());
                    // uniqueness of the lowest digit by exhaustive search
                    let candidates = lowest_digit_candidates(&a, base);
                    let want = dec.digits.first().cloned().unwrap_or_else(|| DominantWeight::try_from(Weight::zero(n)).unwrap());
                    let ok = candidates.len() == 1 && candidates[0] == want;
                    rep.check(ok, || format!("a={a} base={base}"), || format!("unique digit {want}"), || format!("{} candidates", candidates.len()));
                }
            }
        }
    }
    rep
}

/// Every column-regular partition `d ≤ a` with `d ≡ a (mod base)` and
/// `(a − d)/base` a partition.
fn lowest_digit_candidates(a: &DominantWeight, base: u64) -> Vec<DominantWeight> {
    let n = a.rank();
    let entries: Vec<u64> = a.entries().iter().map(|x| x.to_u64().unwrap()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u64; n];
    fn rec(i: usize, entries: &[u64], base: u64, cur: &mut Vec<u64>, out: &mut Vec<DominantWeight>) {
        if i == entries.len() {
            let d = Weight::from_ints(cur.iter().copied());
            let Ok(d) = DominantWeight::try_from(d) else { return };
            if !d.is_column_regular(&big(base)).unwrap() {
                return;
            }
            let rest: Vec<u64> = entries.iter().zip(cur.iter()).map(|(a, d)| (a - d) / base).collect();
            if rest.windows(2).all(|w| w[0] >= w[1]) {
                out.push(d);
            }
            return;
        }
        let mut v = entries[i] % base;
        while v <= entries[i] {
            cur[i] = v;
            rec(i + 1, entries, base, cur, out);
            v += base;
        }
    }
    rec(0, &entries, base, &mut cur, &mut out);
    out
}

fn check_orbit_size_law(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("orbit_size_law");
    for n in 1..=cfg.max_n.min(4) {
        let mut weights: Vec<Weight> = Vec::new();
        // every weight with entries in −1..=2
        let mut cur = vec![-1i64; n];
        loop {
            weights.push(Weight::from_ints(cur.iter().copied()));
            let mut i = 0;
            while i < n && cur[i] == 2 {
                cur[i] = -1;
                i += 1;
            }
            if i == n {
                break;
            }
            cur[i] += 1;
        }
        weights.extend(dominant_upto(n, cfg.max_degree.min(8)).into_iter().map(DominantWeight::into_weight));
        for w in weights {
            let orbit = w.weyl_orbit();
            let mut sorted = w.entries().to_vec();
            sorted.sort();
            let mut stab = BigInt::one();
            let mut run = 1;
            for i in 1..=n {
                if i < n && sorted[i] == sorted[i - 1] {
                    run += 1;
                } else {
                    stab *= factorial(run);
                    run = 1;
                }
            }
            rep.expect_eq(|| format!("w={w}"), factorial(n), BigInt::from(orbit.len()) * stab);
            rep.expect_eq(|| format!("w={w} orbit_size"), BigInt::from(orbit.len()), w.orbit_size());
            let brute = brute_force_orbit(&w);
            rep.check(brute == orbit, || format!("w={w}"), || format!("{} permutations", brute.len()), || format!("{} elements", orbit.len()));
        }
    }
    rep
}

fn check_dominance_partial_order(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("dominance_partial_order");
    for n in 1..=cfg.max_n.min(5) {
        for r in 0..=cfg.max_degree.min(12) {
            let ws = dominant_polynomial_weights(n, r);
            let leq = |a: &DominantWeight, b: &DominantWeight| dominance_leq(a, b).unwrap();
            for a in &ws {
                rep.check(leq(a, a), || format!("a={a}"), || "reflexive".into(), || "not reflexive".into());
                for b in &ws {
                    if a != b {
                        let anti = !(leq(a, b) && leq(b, a));
                        rep.check(anti, || format!("a={a} b={b}"), || "antisymmetric".into(), || "both comparable".into());
                    }
                }
            }
            let triples = if ws.len() <= 12 { ws.len().pow(3) } else { 1000 };
            for t in 0..triples {
                let (a, b, c) = if ws.len() <= 12 {
                    let k = ws.len();
                    (&ws[t % k], &ws[(t / k) % k], &ws[t / (k * k)])
                } else {
                    (ws.choose(rng).unwrap(), ws.choose(rng).unwrap(), ws.choose(rng).unwrap())
                };
                let ok = !(leq(a, b) && leq(b, c)) || leq(a, c);
                rep.check(ok, || format!("a={a} b={b} c={c}"), || "transitive".into(), || "a ≰ c".into());
            }
        }
    }
    rep
}

fn check_w0(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("w0_preserves_degree_and_orbit");
    for n in 1..=cfg.max_n.min(4) {
        for a in dominant_upto(n, cfg.max_degree.min(8)) {
            for x in a.weyl_orbit() {
                let y = x.w0();
                rep.expect_eq(|| format!("x={x}"), x.degree(), y.degree());
                let inside = a.weyl_orbit().contains(&y);
                rep.check(inside, || format!("x={x}"), || "w0 x in orbit".into(), || format!("{y} outside"));
                rep.expect_eq(|| format!("x={x} involution"), x.clone(), y.w0());
            }
        }
    }
    rep
}

fn check_steinberg_shift_regular(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("steinberg_shift_stays_in_xm");
    for &p in &cfg.primes {
        let mut m = 1u32;
        while p.pow(m) <= 9 {
            let big_p = p.pow(m);
            for n in 1..=cfg.max_n.min(3) {
                for lam in column_regular_below(n, big_p) {
                    let shifted = &Weight::delta(n).scale(&big(big_p - 1)) + &lam.w0();
                    let ok = DominantWeight::try_from(shifted.clone())
                        .map(|s| s.in_xm(&big(p), m).unwrap())
                        .unwrap_or(false);
                    rep.check(ok, || format!("lam={lam} p={p} m={m}"), || "in X_m".into(), || shifted.to_string());
                }
            }
            m += 1;
        }
    }
    rep
}

fn check_w_symmetry(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("chi_w_symmetry");
    for n in 1..=cfg.max_n.min(4) {
        for a in dominant_upto(n, cfg.max_degree) {
            let chi = schur_character(&a);
            for (mu, c) in chi.terms() {
                let rep_mu = mu.dominant_representative();
                rep.expect_eq(|| format!("a={a} mu={mu}"), chi.weight_multiplicity(&rep_mu), c.clone());
            }
        }
    }
    rep
}

fn check_highest_weight(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("chi_highest_weight");
    for n in 1..=cfg.max_n.min(4) {
        for a in dominant_upto(n, cfg.max_degree) {
            let chi = schur_character(&a);
            rep.expect_eq(|| format!("a={a}"), BigInt::one(), chi.weight_multiplicity(&a));
            for (mu, _) in chi.terms() {
                let d = mu.dominant_representative();
                let ok = dominance_leq(&d, &a).unwrap();
                rep.check(ok, || format!("a={a} mu={mu}"), || format!("{d} ≤ {a}"), || "not dominated".into());
            }
        }
    }
    rep
}

fn check_weyl_dimension(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("weyl_dimension_product");
    for n in 1..=cfg.max_n.min(4) {
        for a in dominant_upto(n, cfg.max_degree) {
            rep.expect_eq(|| format!("a={a}"), dimension_via_product(&a), schur_character(&a).dimension());
        }
    }
    rep
}

fn check_alternant(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("chi_vs_alternant");
    for n in 1..=cfg.max_n.min(4) {
        for a in dominant_upto(n, cfg.max_degree) {
            let sub = verify_chi_against_alternant(&a, cfg.alternant_trials, rng);
            rep.checked += sub.checked;
            rep.failures.extend(sub.failures);
        }
    }
    rep
}

fn check_brauer_general(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("brauer_identity_general");
    let cap = cfg.max_degree.min(14);
    for n in 1..=cfg.max_n.min(3) {
        for lam in dominant_upto(n, cap) {
            let lam_deg = lam.degree().to_u64().unwrap();
            let chi = schur_character(&lam);
            for nu in dominant_upto(n, cap - lam_deg) {
                let lhs = &chi * &orbit_sum(&nu);
                let rhs = brauer_sum(n, &brauer_expand(&lam, &nu).unwrap());
                rep.check(lhs == rhs, || format!("lam={lam} nu={nu}"), || lhs.to_string(), || rhs.to_string());
            }
        }
    }
    rep
}

fn check_brauer_steinberg_regime(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("brauer_identity_steinberg_regime");
    for &p in &cfg.primes {
        for n in 1..=cfg.max_n.min(3) {
            let st = DominantWeight::try_from(Weight::delta(n).scale(&big(p - 1))).unwrap();
            let chi = schur_character(&st);
            for lam in column_regular_below(n, p) {
                let terms = brauer_expand(&st, &lam).unwrap();
                let lhs = &chi * &orbit_sum(&lam);
                let rhs = brauer_sum(n, &terms);
                let inputs = || format!("p={p} lam={lam}");
                rep.check(lhs == rhs, inputs, || lhs.to_string(), || rhs.to_string());
                rep.expect_eq(inputs, lam.orbit_size(), BigInt::from(terms.len()));
                let all_plus = terms.iter().all(|(s, _)| *s == 1);
                rep.check(all_plus, inputs, || "all signs +1".into(), || "negative sign".into());
                let distinct: BTreeSet<_> = terms.iter().map(|(_, r)| r.clone()).collect();
                rep.expect_eq(inputs, terms.len(), distinct.len());
            }
        }
    }
    rep
}

fn random_dominant(n: usize, max_entry: i64, rng: &mut impl Rng) -> DominantWeight {
    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::from_ints(v)
}

fn check_twist_homomorphism(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("frobenius_twist_homomorphism");
    for n in 1..=cfg.max_n.min(3) {
        for &p in &cfg.primes {
            for _ in 0..10 {
                let x = schur_character(&random_dominant(n, 3, rng));
                let y = &orbit_sum(&random_dominant(n, 3, rng)) - &Character::one(n);
                let k = big(p);
                let tw = |c: &Character| c.frobenius_twist(&k).unwrap();
                let inputs = || format!("n={n} p={p} x={x} y={y}");
                rep.check(tw(&(&x * &y)) == &tw(&x) * &tw(&y), inputs, || "product".into(), || "differs".into());
                rep.check(tw(&(&x + &y)) == &tw(&x) + &tw(&y), inputs, || "sum".into(), || "differs".into());
                rep.expect_eq(inputs, x.dimension(), tw(&x).dimension());
            }
        }
    }
    rep
}

fn check_twist_dimension_multiplicative(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("twisted_product_dimension");
    for n in 1..=cfg.max_n.min(3) {
        for &p in &cfg.primes {
            let low = column_regular_below(n, p);
            for _ in 0..10 {
                let lam0 = low.choose(rng).unwrap();
                let mu = random_dominant(n, 3, rng);
                let x = schur_character(lam0);
                let y = schur_character(&mu);
                let prod = &x * &y.frobenius_twist(&big(p)).unwrap();
                rep.expect_eq(|| format!("p={p} lam0={lam0} mu={mu}"), x.dimension() * y.dimension(), prod.dimension());
            }
        }
    }
    rep
}

fn check_zhat_dimension(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> OracleReport {
    let mut rep = OracleReport::new("zhat_dimension");
    for n in 1..=cfg.max_n.min(3) {
        for &p in &cfg.primes {
            for _ in 0..5 {
                let lam = Weight::from_ints((0..n).map(|_| rng.gen_range(-6i64..=6)));
                let z = zhat_character(&lam, &big(p)).unwrap();
                let expected = num_traits::pow(big(p), n * (n - 1) / 2);
                rep.expect_eq(|| format!("p={p} lam={lam}"), expected, z.dimension());
            }
        }
    }
    rep
}

//! The weight lattice `ℤⁿ` of the general linear group: dominance order,
//! the special weights δ, ω and εᵢ, the longest Weyl group element, orbits
//! under the symmetric group, column regularity and p-adic decomposition.
//!
//! Entries are arbitrary-precision integers. Weights are immutable values.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A weight of fixed rank `n ≥ 1`. Ordered lexicographically on entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<BigInt>);

/// Which of the distinguished weights to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialWeight {
    /// `(n−1, …, 1, 0)`
    Delta,
    /// `(1, …, 1)`
    Omega,
    /// Standard basis vector, 1-based position.
    Epsilon(usize),
}

/// Builds δ, ω or εᵢ of rank `n`.
pub fn special_weight(kind: SpecialWeight, n: usize) -> Result<Weight> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(match kind {
        SpecialWeight::Delta => Weight((0..n).rev().map(BigInt::from).collect()),
        SpecialWeight::Omega => Weight(vec![BigInt::one(); n]),
        SpecialWeight::Epsilon(i) => {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            let mut v = vec![BigInt::zero(); n];
            v[i - 1] = BigInt::one();
            Weight(v)
        }
    })
}

impl Weight {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(Weight(entries))
    }

    /// Convenience constructor from machine integers.
    ///
    /// Panics on an empty list.
    pub fn from_ints<T: Into<BigInt>, I: IntoIterator<Item = T>>(entries: I) -> Self {
        let v: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        assert!(!v.is_empty(), "a weight needs rank at least 1");
        Weight(v)
    }

    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "a weight needs rank at least 1");
        Weight(vec![BigInt::zero(); n])
    }

    pub fn delta(n: usize) -> Self {
        special_weight(SpecialWeight::Delta, n).expect("rank at least 1")
    }

    pub fn omega(n: usize) -> Self {
        special_weight(SpecialWeight::Omega, n).expect("rank at least 1")
    }

    /// `εᵢ` with 1-based `i`.
    pub fn epsilon(n: usize, i: usize) -> Result<Self> {
        special_weight(SpecialWeight::Epsilon(i), n)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    /// `|λ| = λ₁ + ⋯ + λₙ`
    pub fn degree(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// `w₀λ = (λₙ, …, λ₁)`
    pub fn w0(&self) -> Weight {
        Weight(self.0.iter().rev().cloned().collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Entrywise multiplication by `k`.
    pub fn scale(&self, k: &BigInt) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    /// The dominant representative of the orbit `Wλ` (entries sorted decreasingly).
    pub fn dominant_representative(&self) -> DominantWeight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight(Weight(v))
    }

    /// All distinct permutations of the entries.
    pub fn weyl_orbit(&self) -> BTreeSet<Weight> {
        let mut v = self.0.clone();
        v.sort();
        let mut out = BTreeSet::new();
        loop {
            out.insert(Weight(v.clone()));
            if !next_permutation(&mut v) {
                break;
            }
        }
        out
    }

    /// `n! / ∏ (multiplicity of each value)!`, computed without enumerating.
    pub fn orbit_size(&self) -> BigInt {
        let mut v = self.0.clone();
        v.sort();
        let mut size = factorial(v.len());
        let mut run = 1usize;
        for i in 1..=v.len() {
            if i < v.len() && v[i] == v[i - 1] {
                run += 1;
            } else {
                size /= factorial(run);
                run = 1;
            }
        }
        size
    }
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Add for &Weight {
    type Output = Weight;

    /// Panics on rank mismatch; use [`Weight::checked_add`] for a fallible sum.
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("rank mismatch in weight addition")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("rank mismatch in weight subtraction")
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `"(a,b,…)"`; the parentheses are optional and whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        if inner.trim().is_empty() {
            return Err(Error::Parse(format!("empty weight literal {s:?}")));
        }
        let entries = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(entries)
    }
}

/// Dominance order: partial sums of `a` bounded by those of `b`, equal totals.
pub fn dominance_leq(a: &Weight, b: &Weight) -> Result<bool> {
    a.check_rank(b)?;
    let mut sa = BigInt::zero();
    let mut sb = BigInt::zero();
    for (x, y) in a.0.iter().zip(&b.0) {
        sa += x;
        sb += y;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(sa == sb)
}

/// A weight with weakly decreasing entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight(Weight);

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;

    fn try_from(w: Weight) -> Result<Self> {
        if w.is_dominant() {
            Ok(DominantWeight(w))
        } else {
            Err(Error::NotDominant(w.to_string()))
        }
    }
}

impl Deref for DominantWeight {
    type Target = Weight;

    fn deref(&self) -> &Weight {
        &self.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DominantWeight::try_from(s.parse::<Weight>()?)
    }
}

fn check_modulus(l: &BigInt) -> Result<()> {
    if *l < BigInt::from(2) {
        return Err(Error::InvalidModulus(l.clone()));
    }
    Ok(())
}

impl DominantWeight {
    /// Panics if the entries are not weakly decreasing.
    pub fn from_ints<T: Into<BigInt>, I: IntoIterator<Item = T>>(entries: I) -> Self {
        DominantWeight::try_from(Weight::from_ints(entries)).expect("dominant weight")
    }

    pub fn as_weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }

    /// `b(λ) = λ₁`
    pub fn breadth(&self) -> BigInt {
        self.0 .0[0].clone()
    }

    /// Column `l`-regular: `λᵢ − λᵢ₊₁ < l` for all `i` and `λₙ < l`.
    pub fn is_column_regular(&self, l: &BigInt) -> Result<bool> {
        check_modulus(l)?;
        let e = &self.0 .0;
        let gaps_ok = e.windows(2).all(|w| &(&w[0] - &w[1]) < l);
        Ok(gaps_ok && e.last().expect("rank ≥ 1") < l)
    }

    /// Membership in `X_m(n)`: column `p^m`-regular.
    pub fn in_xm(&self, p: &BigInt, m: u32) -> Result<bool> {
        check_modulus(p)?;
        if m == 0 {
            return Err(Error::Precondition("m must be at least 1".into()));
        }
        self.is_column_regular(&num_traits::pow(p.clone(), m as usize))
    }

    /// Unique decomposition `λ = Σ pʲ λʲ` with every `λʲ` column p-regular.
    ///
    /// The digit at each step is forced: its last entry is `λₙ mod p`, and each
    /// earlier entry adds the residue of the corresponding gap `λᵢ − λᵢ₊₁` mod p.
    /// Trailing zero digits are not emitted, so the zero weight has no digits.
    pub fn p_adic_decompose(&self, p: &BigInt) -> Result<PAdicDecomposition> {
        check_modulus(p)?;
        if !self.is_polynomial() {
            return Err(Error::NotPolynomial(self.to_string()));
        }
        let n = self.rank();
        let mut rest = self.0 .0.clone();
        let mut digits = Vec::new();
        while rest.iter().any(|x| !x.is_zero()) {
            let mut d = vec![BigInt::zero(); n];
            d[n - 1] = rest[n - 1].mod_floor(p);
            for i in (0..n - 1).rev() {
                let gap = &rest[i] - &rest[i + 1];
                d[i] = &d[i + 1] + gap.mod_floor(p);
            }
            for (r, x) in rest.iter_mut().zip(&d) {
                *r = (&*r - x) / p;
            }
            digits.push(DominantWeight(Weight(d)));
        }
        Ok(PAdicDecomposition {
            base: p.clone(),
            digits,
        })
    }

    /// Maximum breadth over the p-adic digits (0 for the zero weight).
    pub fn p_adic_breadth(&self, p: &BigInt) -> Result<BigInt> {
        let dec = self.p_adic_decompose(p)?;
        Ok(dec
            .digits
            .iter()
            .map(DominantWeight::breadth)
            .max()
            .unwrap_or_else(BigInt::zero))
    }
}

/// `λ = Σⱼ baseʲ · digits[j]`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAdicDecomposition {
    pub base: BigInt,
    pub digits: Vec<DominantWeight>,
}

impl PAdicDecomposition {
    pub fn reconstruct(&self, n: usize) -> Weight {
        let mut acc = Weight::zero(n);
        let mut scale = BigInt::one();
        for d in &self.digits {
            acc = &acc + &d.scale(&scale);
            scale *= &self.base;
        }
        acc
    }
}

/// All dominant polynomial weights of rank `n` and degree exactly `r`
/// (partitions of `r` with at most `n` parts), in reverse lexicographic order.
pub fn dominant_polynomial_weights(n: usize, r: u64) -> Vec<DominantWeight> {
    fn rec(n: usize, remaining: u64, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<DominantWeight>) {
        if prefix.len() == n {
            if remaining == 0 {
                out.push(DominantWeight(Weight::from_ints(prefix.iter().copied())));
            }
            return;
        }
        let slots = (n - prefix.len()) as u64;
        let hi = cap.min(remaining);
        for x in (0..=hi).rev() {
            if x * slots < remaining {
                break;
            }
            prefix.push(x);
            rec(n, remaining - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, r, &mut Vec::with_capacity(n), &mut out);
    out
}

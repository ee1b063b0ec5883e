//! Formal characters: the group ring `ℤX(n)` with exponentials `e^λ`, orbit
//! sums, Weyl characters, Frobenius dilation and Brauer's expansion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::{DominantWeight, Weight};

/// A finitely supported ℤ-valued function on weights of a fixed rank.
///
/// Terms are kept in lexicographic weight order with no zero multiplicities,
/// so structural equality is equality in the group ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        assert!(rank > 0, "rank must be at least 1");
        Character {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `e^0`, the unit of the ring.
    pub fn one(rank: usize) -> Self {
        Character::exponential(&Weight::zero(rank))
    }

    /// `e^λ`
    pub fn exponential(w: &Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), BigInt::one());
        Character {
            rank: w.rank(),
            terms,
        }
    }

    /// Collects `(weight, multiplicity)` pairs, merging repeats and dropping zeros.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, BigInt)>,
    {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut out = Character::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            out.accumulate(w, c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    /// Number of distinct weights in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight_multiplicity(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Sum of multiplicities, i.e. the value at `(1, …, 1)`.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check_rank(&self, other: &Character) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Character) -> Result<Character> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Character) -> Result<Character> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), -c);
        }
        Ok(out)
    }

    /// Convolution of supports.
    pub fn checked_mul(&self, other: &Character) -> Result<Character> {
        self.check_rank(other)?;
        let mut out = Character::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.accumulate(a + b, x * y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Character {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.accumulate(w.clone(), c * k);
        }
        out
    }

    /// Multiplication by `e^w`.
    pub fn shift(&self, w: &Weight) -> Result<Character> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        Ok(Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, c)| (k + w, c.clone())).collect(),
        })
    }

    /// Character of the Frobenius twist: every weight is dilated by `factor`.
    pub fn frobenius_twist(&self, factor: &BigInt) -> Result<Character> {
        if *factor < BigInt::one() {
            return Err(Error::Precondition(format!(
                "twist factor must be at least 1, got {factor}"
            )));
        }
        Ok(Character {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.scale(factor), c.clone()))
                .collect(),
        })
    }
}

impl Add for &Character {
    type Output = Character;

    fn add(self, rhs: &Character) -> Character {
        self.checked_add(rhs).expect("rank mismatch in character sum")
    }
}

impl Sub for &Character {
    type Output = Character;

    fn sub(self, rhs: &Character) -> Character {
        self.checked_sub(rhs).expect("rank mismatch in character difference")
    }
}

impl Mul for &Character {
    type Output = Character;

    fn mul(self, rhs: &Character) -> Character {
        self.checked_mul(rhs).expect("rank mismatch in character product")
    }
}

impl Neg for &Character {
    type Output = Character;

    fn neg(self) -> Character {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "e^{w}")?;
        }
        Ok(())
    }
}

/// `s(λ) = Σ_{μ ∈ Wλ} e^μ`
pub fn orbit_sum(w: &Weight) -> Character {
    Character {
        rank: w.rank(),
        terms: w.weyl_orbit().into_iter().map(|k| (k, BigInt::one())).collect(),
    }
}

/// Normal form of `χ(v)` under the dot action: `χ(v) = sign · χ(rep)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedChi {
    sign: i8,
    rep: Option<DominantWeight>,
}

impl SignedChi {
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Absent exactly when the sign is 0.
    pub fn dominant_rep(&self) -> Option<&DominantWeight> {
        self.rep.as_ref()
    }
}

/// Sorts `v + δ` strictly decreasingly; the sign is that of the sorting
/// permutation, zero when `v + δ` has a repeated entry.
pub fn dot_normalize(v: &Weight) -> SignedChi {
    let n = v.rank();
    let delta = Weight::delta(n);
    let shifted = (v + &delta).into_entries();
    let mut inversions = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return SignedChi { sign: 0, rep: None },
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let rep = &Weight::new(sorted).expect("rank ≥ 1") - &delta;
    SignedChi {
        sign: if inversions % 2 == 0 { 1 } else { -1 },
        rep: Some(DominantWeight::try_from(rep).expect("strictly decreasing minus δ is dominant")),
    }
}

type RawTerms = BTreeMap<Vec<BigInt>, BigInt>;

/// Weights of all semistandard tableaux of partition shape `shape` with
/// entries in `1..=shape.len()`, walked as interlacing chains
/// `∅ ⊂ λ⁽¹⁾ ⊂ ⋯ ⊂ λ⁽ⁿ⁾ = shape` of horizontal strips. Sub-shapes are memoized.
fn tableau_weights(shape: &[BigInt], memo: &mut HashMap<Vec<BigInt>, Rc<RawTerms>>) -> Rc<RawTerms> {
    if let Some(hit) = memo.get(shape) {
        return Rc::clone(hit);
    }
    let k = shape.len();
    let mut out = RawTerms::new();
    if k == 1 {
        out.insert(shape.to_vec(), BigInt::one());
    } else {
        let total: BigInt = shape.iter().sum();
        // b_j ranges over [shape_{j+1}, shape_j]
        let mut inner: Vec<BigInt> = shape[1..].to_vec();
        loop {
            let inner_total: BigInt = inner.iter().sum();
            let last = &total - &inner_total;
            let sub = tableau_weights(&inner, memo);
            for (wt, c) in sub.iter() {
                let mut full = wt.clone();
                full.push(last.clone());
                *out.entry(full).or_default() += c;
            }
            // odometer step
            let mut j = 0;
            loop {
                if j == k - 1 {
                    let rc = Rc::new(out);
                    memo.insert(shape.to_vec(), Rc::clone(&rc));
                    return rc;
                }
                if inner[j] < shape[j] {
                    inner[j] += 1;
                    break;
                }
                inner[j] = shape[j + 1].clone();
                j += 1;
            }
        }
    }
    let rc = Rc::new(out);
    memo.insert(shape.to_vec(), Rc::clone(&rc));
    rc
}

/// `χ(λ)` for dominant `λ`. Negative entries are handled by the determinant
/// twist `χ(λ) = χ(λ − λₙω) · e^{λₙω}`.
pub fn schur_character(a: &DominantWeight) -> Character {
    let n = a.rank();
    let last = a.entries()[n - 1].clone();
    let base: Vec<BigInt> = a.entries().iter().map(|x| x - &last).collect();
    let mut memo = HashMap::new();
    let raw = tableau_weights(&base, &mut memo);
    let twist = Weight::omega(n).scale(&last);
    Character {
        rank: n,
        terms: raw
            .iter()
            .map(|(wt, c)| {
                let w = Weight::new(wt.clone()).expect("rank ≥ 1");
                (&w + &twist, c.clone())
            })
            .collect(),
    }
}

/// `χ(v)` for an arbitrary weight, extended by the dot action:
/// `sign · χ(rep)`, the zero character on walls.
pub fn weyl_character(v: &Weight) -> Character {
    let s = dot_normalize(v);
    match (s.sign, s.rep) {
        (0, _) | (_, None) => Character::zero(v.rank()),
        (1, Some(rep)) => schur_character(&rep),
        (_, Some(rep)) => -&schur_character(&rep),
    }
}

/// Brauer's formula: `χ(λ)·s(ν) = Σ_{μ ∈ Wν} χ(λ + μ)`, each summand put in
/// dot normal form; wall terms are dropped.
pub fn brauer_expand(lam: &DominantWeight, nu: &Weight) -> Result<Vec<(i8, DominantWeight)>> {
    if lam.rank() != nu.rank() {
        return Err(Error::RankMismatch {
            left: lam.rank(),
            right: nu.rank(),
        });
    }
    Ok(nu
        .weyl_orbit()
        .iter()
        .filter_map(|mu| {
            let s = dot_normalize(&(lam.as_weight() + mu));
            s.rep.map(|r| (s.sign, r))
        })
        .collect())
}

/// Sums `sign · χ(rep)` over a Brauer expansion.
pub fn brauer_sum(rank: usize, expansion: &[(i8, DominantWeight)]) -> Character {
    let mut acc = Character::zero(rank);
    for (sign, rep) in expansion {
        let chi = schur_character(rep);
        acc = if *sign > 0 { &acc + &chi } else { &acc - &chi };
    }
    acc
}

/// `e^{λ − (p−1)δ} · χ((p−1)δ)`
pub fn zhat_character(lam: &Weight, p: &BigInt) -> Result<Character> {
    if *p < BigInt::from(2) {
        return Err(Error::InvalidModulus(p.clone()));
    }
    let n = lam.rank();
    let steinberg = Weight::delta(n).scale(&(p - 1));
    let chi = schur_character(&DominantWeight::try_from(steinberg.clone())?);
    chi.shift(&(lam - &steinberg))
}

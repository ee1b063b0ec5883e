//! Descriptors for the injective and tilting modules that carry
//! truncated-polynomial endomorphism algebras.
//!
//! A module is never modelled as such: it is recorded by its socle weight,
//! optionally its formal character, and its endomorphism algebra. The
//! character is what can be checked here; the algebra comes from the known
//! structure results for these particular families.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::character::{orbit_sum, schur_character, Character};
use crate::error::{Error, Result};
use crate::weight::{DominantWeight, Weight};

/// `k[x₁, …, x_s] / (x₁^c, …, x_s^c)`; `s = 0` is the ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPolyAlgebra {
    generators: u32,
    cap: usize,
}

impl TruncatedPolyAlgebra {
    pub fn new(generators: u32, cap: usize) -> Result<Self> {
        if cap < 2 {
            return Err(Error::Precondition(format!("truncation exponent {cap} must be at least 2")));
        }
        Ok(TruncatedPolyAlgebra { generators, cap })
    }

    pub fn trivial(cap: usize) -> Result<Self> {
        TruncatedPolyAlgebra::new(0, cap)
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `cap^generators`
    pub fn dimension(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.cap), self.generators as usize)
    }

    /// Tensor product over k; generator counts add.
    pub fn tensor(&self, other: &TruncatedPolyAlgebra) -> Result<Self> {
        if self.cap != other.cap {
            return Err(Error::Precondition(format!(
                "cannot tensor truncations {} and {}",
                self.cap, other.cap
            )));
        }
        Ok(TruncatedPolyAlgebra {
            generators: self.generators + other.generators,
            cap: self.cap,
        })
    }
}

impl fmt::Display for TruncatedPolyAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generators {
            0 => f.write_str("k"),
            1 => write!(f, "k[x]/(x^{})", self.cap),
            s => {
                let vars: Vec<String> = (1..=s).map(|i| format!("x{i}")).collect();
                let rels: Vec<String> = vars.iter().map(|v| format!("{v}^{}", self.cap)).collect();
                write!(f, "k[{}]/({})", vars.join(","), rels.join(","))
            }
        }
    }
}

/// An endomorphism algebra: truncated polynomial, or known only by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndAlgebra {
    Truncated(TruncatedPolyAlgebra),
    Opaque { dimension: BigInt },
}

impl EndAlgebra {
    pub fn dimension(&self) -> BigInt {
        match self {
            EndAlgebra::Truncated(t) => t.dimension(),
            EndAlgebra::Opaque { dimension } => dimension.clone(),
        }
    }

    pub fn as_truncated(&self) -> Option<&TruncatedPolyAlgebra> {
        match self {
            EndAlgebra::Truncated(t) => Some(t),
            EndAlgebra::Opaque { .. } => None,
        }
    }

    pub fn tensor(&self, other: &EndAlgebra) -> Result<EndAlgebra> {
        Ok(match (self, other) {
            (EndAlgebra::Truncated(a), EndAlgebra::Truncated(b)) => EndAlgebra::Truncated(a.tensor(b)?),
            _ => EndAlgebra::Opaque {
                dimension: self.dimension() * other.dimension(),
            },
        })
    }
}

impl fmt::Display for EndAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndAlgebra::Truncated(t) => t.fmt(f),
            EndAlgebra::Opaque { dimension } => write!(f, "<algebra of dimension {dimension}>"),
        }
    }
}

/// Index of admissibility. `exact = false` means the value is only a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleIndex {
    pub value: u32,
    pub exact: bool,
}

impl AdmissibleIndex {
    fn combine(self, other: AdmissibleIndex) -> AdmissibleIndex {
        AdmissibleIndex {
            value: self.value + other.value,
            exact: self.exact && other.exact,
        }
    }
}

/// Socle weight, optional character and endomorphism algebra of an injective module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveDescriptor {
    socle_weight: DominantWeight,
    character: Option<Character>,
    end_algebra: EndAlgebra,
    index: Option<AdmissibleIndex>,
}

impl InjectiveDescriptor {
    /// Checks that the socle weight lies in the character's support and that a
    /// truncated algebra's generator count matches the index.
    pub fn new(
        socle_weight: DominantWeight,
        character: Option<Character>,
        end_algebra: EndAlgebra,
        index: Option<AdmissibleIndex>,
    ) -> Result<Self> {
        if let Some(ch) = &character {
            if ch.rank() != socle_weight.rank() {
                return Err(Error::RankMismatch {
                    left: socle_weight.rank(),
                    right: ch.rank(),
                });
            }
            if !ch.weight_multiplicity(&socle_weight).is_positive() {
                return Err(Error::Precondition(format!(
                    "socle weight {socle_weight} not in the character's support"
                )));
            }
        }
        if let (EndAlgebra::Truncated(t), Some(ix)) = (&end_algebra, &index) {
            if t.generators() != ix.value {
                return Err(Error::Precondition(format!(
                    "index {} disagrees with {} generators",
                    ix.value,
                    t.generators()
                )));
            }
        }
        Ok(InjectiveDescriptor {
            socle_weight,
            character,
            end_algebra,
            index,
        })
    }

    pub fn socle_weight(&self) -> &DominantWeight {
        &self.socle_weight
    }

    pub fn character(&self) -> Option<&Character> {
        self.character.as_ref()
    }

    pub fn end_algebra(&self) -> &EndAlgebra {
        &self.end_algebra
    }

    pub fn index(&self) -> Option<AdmissibleIndex> {
        self.index
    }

    pub fn rank(&self) -> usize {
        self.socle_weight.rank()
    }

    /// Drops the character, e.g. before serializing a large result.
    pub fn without_character(mut self) -> Self {
        self.character = None;
        self
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("rank n = {n} must be at least 2")));
    }
    Ok(())
}

fn steinberg_weight(n: usize, modulus: &BigInt) -> DominantWeight {
    DominantWeight::try_from(Weight::delta(n).scale(&(modulus - 1))).expect("multiple of δ is dominant")
}

fn hook(n: usize, a: &BigInt) -> Weight {
    Weight::epsilon(n, 1).expect("n ≥ 1").scale(a)
}

fn socle_for(n: usize, modulus: &BigInt, lam: &Weight) -> DominantWeight {
    let w = steinberg_weight(n, modulus).as_weight() + &lam.w0();
    DominantWeight::try_from(w).expect("(l−1)δ + w₀λ is dominant for column l-regular λ")
}

/// The tilting module `M((p−1)δ + λ) = I((p−1)δ + w₀λ)` for `λ ∈ X₁(n)` with
/// `b(λ) < p`: character `χ((p−1)δ)·s(λ)`, endomorphism algebra of
/// dimension `|Wλ|`.
///
/// The algebra is identified as `k[x]/(xⁿ)` when `λ = aε₁`, as `k` when
/// `Wλ = {λ}`, and left opaque otherwise.
pub fn steinberg_tilting(n: usize, p: u64, lam: &DominantWeight) -> Result<InjectiveDescriptor> {
    check_rank(n)?;
    check_prime(p)?;
    if lam.rank() != n {
        return Err(Error::RankMismatch {
            left: n,
            right: lam.rank(),
        });
    }
    let bp = BigInt::from(p);
    if !lam.is_polynomial() || !lam.is_column_regular(&bp)? || lam.breadth() >= bp {
        return Err(Error::Precondition(format!(
            "{lam} must be column {p}-regular with breadth below {p}"
        )));
    }
    let character = &schur_character(&steinberg_weight(n, &bp)) * &orbit_sum(lam);
    let orbit = lam.orbit_size();
    let tail_zero = lam.entries()[1..].iter().all(Zero::is_zero);
    let (end_algebra, index) = if orbit.is_one() {
        (EndAlgebra::Truncated(TruncatedPolyAlgebra::trivial(n)?), Some(AdmissibleIndex { value: 0, exact: true }))
    } else if tail_zero {
        (EndAlgebra::Truncated(TruncatedPolyAlgebra::new(1, n)?), Some(AdmissibleIndex { value: 1, exact: true }))
    } else {
        (EndAlgebra::Opaque { dimension: orbit }, None)
    };
    InjectiveDescriptor::new(socle_for(n, &bp, lam), Some(character), end_algebra, index)
}

/// `End(I((p−1)δ + aεₙ)) = k[x]/(xⁿ)` for `1 ≤ a < p`.
pub fn hook_injective_end(n: usize, p: u64, a: u64) -> Result<TruncatedPolyAlgebra> {
    check_rank(n)?;
    check_prime(p)?;
    if a == 0 || a >= p {
        return Err(Error::Precondition(format!("hook length a = {a} must satisfy 1 ≤ a < {p}")));
    }
    TruncatedPolyAlgebra::new(1, n)
}

fn base_digits(a: &BigInt, base: &BigInt, count: u32) -> Vec<BigInt> {
    let mut rest = a.clone();
    (0..count)
        .map(|_| {
            let (q, r) = rest.div_mod_floor(base);
            rest = q;
            r
        })
        .collect()
}

/// `I((pᵐ−1)δ + aεₙ)` for `0 ≤ a ≤ pᵐ − 1`, as the twisted tensor product of
/// one Steinberg-hook factor per base-p digit of `a`. Each nonzero digit
/// contributes one generator `k[x]/(xⁿ)`.
///
/// With `materialize = false` the character is left out.
pub fn pm_hook_injective(n: usize, p: u64, m: u32, a: &BigInt, materialize: bool) -> Result<InjectiveDescriptor> {
    check_rank(n)?;
    check_prime(p)?;
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let bp = BigInt::from(p);
    let big_p = num_traits::pow(bp.clone(), m as usize);
    if a.is_negative() || *a >= big_p {
        return Err(Error::Precondition(format!("a = {a} must satisfy 0 ≤ a ≤ {}", &big_p - 1)));
    }
    let digits = base_digits(a, &bp, m);
    let nonzero = digits.iter().filter(|d| !d.is_zero()).count() as u32;
    let character = if materialize {
        let mut acc = Character::one(n);
        let mut scale = BigInt::one();
        for d in &digits {
            let lam = DominantWeight::try_from(hook(n, d))?;
            let factor = steinberg_tilting(n, p, &lam)?;
            acc = &acc * &factor.character.expect("materialized").frobenius_twist(&scale)?;
            scale *= &bp;
        }
        Some(acc)
    } else {
        None
    };
    InjectiveDescriptor::new(
        socle_for(n, &big_p, &hook(n, a)),
        character,
        EndAlgebra::Truncated(TruncatedPolyAlgebra::new(nonzero, n)?),
        Some(AdmissibleIndex { value: nonzero, exact: true }),
    )
}

/// Tensoring with `D^{⊗k}`: socle moves by `kω`, the algebra is unchanged.
pub fn determinant_shift(d: &InjectiveDescriptor, k: u64) -> InjectiveDescriptor {
    let shift = Weight::omega(d.rank()).scale(&BigInt::from(k));
    InjectiveDescriptor {
        socle_weight: DominantWeight::try_from(d.socle_weight.as_weight() + &shift).expect("dominant"),
        character: d.character.as_ref().map(|c| c.shift(&shift).expect("same rank")),
        end_algebra: d.end_algebra.clone(),
        index: d.index,
    }
}

/// `lower ⊗ upper^F` where `F` dilates weights by `factor`.
pub fn tensor_with_twist(lower: &InjectiveDescriptor, upper: &InjectiveDescriptor, factor: &BigInt) -> Result<InjectiveDescriptor> {
    if lower.rank() != upper.rank() {
        return Err(Error::RankMismatch {
            left: lower.rank(),
            right: upper.rank(),
        });
    }
    let socle = lower.socle_weight.as_weight() + &upper.socle_weight.scale(factor);
    let character = match (&lower.character, &upper.character) {
        (Some(a), Some(b)) => Some(a * &b.frobenius_twist(factor)?),
        _ => None,
    };
    let index = match (lower.index, upper.index) {
        (Some(a), Some(b)) => Some(a.combine(b)),
        _ => None,
    };
    Ok(InjectiveDescriptor {
        socle_weight: DominantWeight::try_from(socle)?,
        character,
        end_algebra: lower.end_algebra.tensor(&upper.end_algebra)?,
        index,
    })
}

/// The costandard `∇(γ)`, injective with trivial endomorphism algebra.
fn costandard(n: usize, gamma: &DominantWeight, materialize: bool) -> Result<InjectiveDescriptor> {
    InjectiveDescriptor::new(
        gamma.clone(),
        materialize.then(|| schur_character(gamma)),
        EndAlgebra::Truncated(TruncatedPolyAlgebra::trivial(n)?),
        Some(AdmissibleIndex { value: 0, exact: true }),
    )
}

/// `⊗ᵢ I(λⁱ)^{F^{mi}} ⊗ I(γ)^{F^{mh}}` with `h = factors.len()`: socle
/// `Σ P^i λⁱ + P^h γ` for `P = pᵐ`, product of twisted characters, tensor
/// product of endomorphism algebras. Every factor socle must lie in `X_m(n)`.
///
/// The character is produced only when every factor carries one.
pub fn tensor_factorization(
    factors: &[InjectiveDescriptor],
    p: u64,
    m: u32,
    gamma: &DominantWeight,
) -> Result<InjectiveDescriptor> {
    check_prime(p)?;
    let n = gamma.rank();
    check_rank(n)?;
    if !gamma.is_polynomial() {
        return Err(Error::NotPolynomial(gamma.to_string()));
    }
    let bp = BigInt::from(p);
    for f in factors {
        if f.rank() != n {
            return Err(Error::RankMismatch { left: n, right: f.rank() });
        }
        if !f.socle_weight.in_xm(&bp, m)? {
            return Err(Error::Precondition(format!(
                "factor socle {} is not column {p}^{m}-regular",
                f.socle_weight
            )));
        }
    }
    let big_p = num_traits::pow(bp, m as usize);
    let materialize = factors.iter().all(|f| f.character.is_some());
    // fold from the top: X ↦ factor ⊗ X^F
    let mut acc = costandard(n, gamma, materialize)?;
    for f in factors.iter().rev() {
        acc = tensor_with_twist(f, &acc, &big_p)?;
    }
    Ok(acc)
}

/// Level-zero factor of the quantum construction: `I((lP−1)δ + aεₙ)` for
/// `0 ≤ a ≤ lP − 1`, split as `a = a₀ + l·a₁` into an l-Steinberg hook and the
/// Frobenius (by l) pullback of the classical `pm_hook_injective(a₁)`.
///
/// The index is reported as a lower bound.
pub fn quantum_hook_injective(
    n: usize,
    p: u64,
    m: u32,
    l: u64,
    a: &BigInt,
    materialize: bool,
) -> Result<InjectiveDescriptor> {
    check_rank(n)?;
    if l < 2 {
        return Err(Error::Precondition(format!("root-of-unity order l = {l} must exceed 1")));
    }
    let bl = BigInt::from(l);
    let big_p = num_traits::pow(BigInt::from(p), m as usize);
    let top = &bl * &big_p;
    if a.is_negative() || *a >= top {
        return Err(Error::Precondition(format!("a = {a} must satisfy 0 ≤ a ≤ {}", &top - 1)));
    }
    let (a1, a0) = a.div_mod_floor(&bl);
    let low_lam = hook(n, &a0);
    let low_char = materialize.then(|| &schur_character(&steinberg_weight(n, &bl)) * &orbit_sum(&low_lam));
    let low_gens = u32::from(!a0.is_zero());
    let low = InjectiveDescriptor::new(
        socle_for(n, &bl, &low_lam),
        low_char,
        EndAlgebra::Truncated(TruncatedPolyAlgebra::new(low_gens, n)?),
        Some(AdmissibleIndex { value: low_gens, exact: false }),
    )?;
    let high = pm_hook_injective(n, p, m, &a1, materialize)?;
    let mut out = tensor_with_twist(&low, &high, &bl)?;
    if let Some(ix) = out.index.as_mut() {
        ix.exact = false;
    }
    Ok(out)
}

/// A composition multiplicity: a known integer, or a coefficient times named
/// unknown factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Known(BigInt),
    Symbolic { coefficient: BigInt, symbols: Vec<String> },
}

impl Multiplicity {
    pub fn known(v: impl Into<BigInt>) -> Self {
        Multiplicity::Known(v.into())
    }

    pub fn symbol(name: &str) -> Self {
        Multiplicity::Symbolic {
            coefficient: BigInt::one(),
            symbols: vec![name.to_string()],
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Multiplicity::Known(v) => Some(v),
            Multiplicity::Symbolic { .. } => None,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Known(v) => write!(f, "{v}"),
            Multiplicity::Symbolic { coefficient, symbols } => {
                if !coefficient.is_one() {
                    write!(f, "{coefficient}·")?;
                }
                f.write_str(&symbols.join("·"))
            }
        }
    }
}

/// Product of composition multiplicities `[I(λ⁰):L(λ⁰)] ⋯ [I(γ):L(γ)]`.
/// Collapses to an integer when every input is known.
pub fn multiplicity_product_symbolic(factors: &[Multiplicity]) -> Multiplicity {
    let mut coefficient = BigInt::one();
    let mut symbols = Vec::new();
    for f in factors {
        match f {
            Multiplicity::Known(v) => coefficient *= v,
            Multiplicity::Symbolic { coefficient: c, symbols: s } => {
                coefficient *= c;
                symbols.extend(s.iter().cloned());
            }
        }
    }
    if symbols.is_empty() || coefficient.is_zero() {
        Multiplicity::Known(coefficient)
    } else {
        Multiplicity::Symbolic { coefficient, symbols }
    }
}

/// Number of nonzero base-`base` digits of `a`.
pub fn nonzero_digit_count(a: &BigInt, base: u64) -> u32 {
    let b = BigInt::from(base);
    let mut rest = a.clone();
    let mut count = 0;
    while rest.is_positive() {
        let (q, r) = rest.div_mod_floor(&b);
        if !r.is_zero() {
            count += 1;
        }
        rest = q;
    }
    count
}

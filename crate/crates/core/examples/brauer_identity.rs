//! Brauer's formula in the Steinberg regime: χ((p−1)δ)·s(λ) splits into
//! |Wλ| Weyl characters, all with sign +1.
//!
//! cargo run --example brauer_identity -- 3 5

use num_bigint::BigInt;
use schur_repdim::weight::dominant_polynomial_weights;
use schur_repdim::{brauer_expand, orbit_sum, schur_character, DominantWeight, Weight};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(3) as usize;
    let p = args.next().unwrap_or(3);
    let bp = BigInt::from(p);

    let st = DominantWeight::try_from(Weight::delta(n).scale(&(&bp - 1))).unwrap();
    let chi_st = schur_character(&st);
    for r in 0..=(p - 1) * n as u64 {
        for lam in dominant_polynomial_weights(n, r) {
            if lam.breadth() >= bp || !lam.is_column_regular(&bp).unwrap() {
                continue;
            }
            let terms = brauer_expand(&st, &lam).unwrap();
            let lhs = &chi_st * &orbit_sum(&lam);
            let rhs = terms.iter().fold(schur_repdim::Character::zero(n), |acc, (s, rep)| {
                &acc + &schur_character(rep).scale(&BigInt::from(*s))
            });
            let summands: Vec<String> = terms.iter().map(|(_, rep)| format!("χ{rep}")).collect();
            println!(
                "λ = {lam}: {} summands, {}  [{}]",
                terms.len(),
                summands.join(" + "),
                if lhs == rhs { "ok" } else { "MISMATCH" }
            );
        }
    }
}

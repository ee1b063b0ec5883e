//! Quantum construction at a primitive l-th root of unity.
//!
//! cargo run --example quantum_construction

use schur_repdim::{construct_quantum, max_h_quantum, min_r_quantum, QuantumParams};

fn main() {
    let (n, p, m, l) = (2, 3, 1, 2);
    for h in 1..=2 {
        let min = min_r_quantum(n, p, m, l, h).unwrap();
        for r in [min.clone(), &min + 5] {
            let res = construct_quantum(&QuantumParams::new(n, p, m, l, h, r.clone()), false).unwrap();
            let lz = res.level_zero.as_ref().unwrap();
            println!(
                "h = {h}, r = {r}: u₋₁ = {}, λ₋₁ = {}, s = {}, μ = {}, bound {}",
                lz.digit, lz.factor, lz.s, res.mu, res.repdim_lower_bound
            );
        }
    }
    let r = 1000.into();
    println!("at r = 1000 the largest h is {}", max_h_quantum(n, p, m, l, &r).unwrap());
}

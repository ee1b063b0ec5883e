//! Classical digit construction of μ ∈ Λ⁺(n, r) and the resulting bound.
//!
//! cargo run --example classical_construction -- 2 3 1 2 12

use num_bigint::BigInt;
use schur_repdim::{construct_classical, max_h_classical, min_r_classical, ClassicalParams};

fn main() {
    let a: Vec<String> = std::env::args().skip(1).collect();
    let get = |i: usize, d: &str| a.get(i).cloned().unwrap_or_else(|| d.to_string());
    let n: usize = get(0, "2").parse().unwrap();
    let p: u64 = get(1, "3").parse().unwrap();
    let m: u32 = get(2, "1").parse().unwrap();
    let h: u32 = get(3, "2").parse().unwrap();
    let r: BigInt = get(4, "12").parse().unwrap();

    println!("threshold for h = {h}: r ≥ {}", min_r_classical(n, p, m, h).unwrap());
    let res = match construct_classical(&ClassicalParams::new(n, p, m, h, r.clone()), true) {
        Ok(res) => res,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let digits: Vec<String> = res.digits.iter().map(ToString::to_string).collect();
    println!("digits {}", digits.join(", "));
    for (i, lam) in res.lambda_factors.iter().enumerate() {
        println!("λ^{i} = {lam}");
    }
    println!("γ = {}", res.gamma);
    println!("μ = {}  (|μ| = {})", res.mu, res.mu.degree());
    println!("End I(μ) = {} of dimension {}", res.descriptor.end_algebra(), res.descriptor.end_algebra().dimension());
    println!("representation dimension of S({n},{r}) ≥ {}", res.repdim_lower_bound);
    println!("largest h at this degree: {}", max_h_classical(n, p, m, &r).unwrap());
}

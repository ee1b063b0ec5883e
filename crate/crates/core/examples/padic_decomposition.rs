//! Base-p digits of a dominant polynomial weight.
//!
//! cargo run --example padic_decomposition -- "(8,4)" 3

use num_bigint::BigInt;
use schur_repdim::DominantWeight;

fn main() {
    let mut args = std::env::args().skip(1);
    let lam: DominantWeight = args.next().as_deref().unwrap_or("(8,4)").parse().expect("dominant weight");
    let p: BigInt = args.next().as_deref().unwrap_or("3").parse().expect("integer modulus");

    let dec = lam.p_adic_decompose(&p).unwrap();
    let parts: Vec<String> = dec.digits.iter().enumerate().map(|(j, d)| format!("{p}^{j}·{d}")).collect();
    println!("{lam} = {}", if parts.is_empty() { "0".into() } else { parts.join(" + ") });
    println!("p-adic breadth {}", lam.p_adic_breadth(&p).unwrap());
    println!("in X_1: {}", lam.in_xm(&p, 1).unwrap());
    assert_eq!(&dec.reconstruct(lam.rank()), lam.as_weight());
}

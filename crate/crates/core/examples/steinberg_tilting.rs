//! Tilting modules M((p−1)δ + λ) and their endomorphism algebras.
//!
//! cargo run --example steinberg_tilting

use schur_repdim::weight::dominant_polynomial_weights;
use schur_repdim::{hook_injective_end, steinberg_tilting};

fn main() {
    let (n, p) = (3, 3);
    for r in 0..=6 {
        for lam in dominant_polynomial_weights(n, r) {
            let Ok(d) = steinberg_tilting(n, p, &lam) else { continue };
            println!(
                "λ = {lam}  socle {}  dim ch {}  End = {} (dim {})",
                d.socle_weight(),
                d.character().unwrap().dimension(),
                d.end_algebra(),
                d.end_algebra().dimension()
            );
        }
    }
    for a in 1..p {
        println!("End I((p−1)δ + {a}ε{n}) = {}", hook_injective_end(n, p, a).unwrap());
    }
}

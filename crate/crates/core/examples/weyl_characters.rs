//! Weyl characters, weight multiplicities and the dimension check.
//!
//! cargo run --example weyl_characters

use schur_repdim::oracle::dimension_via_product;
use schur_repdim::{schur_character, weyl_character, DominantWeight, Weight};

fn main() {
    let adjoint = DominantWeight::from_ints([2, 1, 0]);
    let chi = schur_character(&adjoint);
    println!("χ{adjoint} = {chi}");
    println!("dimension {} (product formula {})", chi.dimension(), dimension_via_product(&adjoint));
    println!("multiplicity of (1,1,1): {}", chi.weight_multiplicity(&Weight::from_ints([1, 1, 1])));

    // non-dominant and negative weights
    for w in ["(-1,2)", "(0,1)", "(1,-1)"] {
        let w: Weight = w.parse().unwrap();
        println!("χ{w} = {}", weyl_character(&w));
    }

    for p in [2u32, 3, 5, 7] {
        let sym = weyl_character(&Weight::from_ints([p, 0]));
        println!("dim S^{p}E = {}", sym.dimension());
    }
}

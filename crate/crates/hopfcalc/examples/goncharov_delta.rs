//! Goncharov's coproduct on iterated-integral words over the alphabet {0,1}.
//!
//! A word I(a₀; a₁ … a_{n−1}; a_n) decomposes by choosing a subset of its
//! interior letters: the chosen letters (with the boundary) form the left
//! factor, and the cut-out pieces multiply into the right factor. Pieces
//! with no interior letter are unit-like and disappear in the Hopf quotient.
//!
//! Run with: cargo run --example goncharov_delta

use hopfcalc::cooperad::{
    antipode_in, check_coassoc_in, check_counit_laws, convolve_antipode_id, eta_eps, HopfAlgebra,
};
use hopfcalc::kernel::LinComb;
use hopfcalc::words::word_bialgebra;

fn main() -> hopfcalc::Result<()> {
    let h = word_bialgebra("01", false)?;

    // Δ of the weight-three word I(0; 1 0 1; 0), term by term.
    let x = h.parse("I(0; 1 0 1; 0)")?;
    let key = x.keys().next().unwrap().clone();
    println!("x = {}", h.display_key(&key));
    println!("Δ(x):");
    for ((l, r), c) in h.delta_key(&key)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, h.display_key(l), h.display_key(r));
    }

    // The coproduct is coassociative and counital, exactly.
    println!(
        "coassociative: {}",
        check_coassoc_in(&h, &x)? && check_counit_laws(&h, &x)?
    );

    // The antipode makes S * id = ηε as convolutions.
    let degree = h.degree_key(&key)?;
    let s = antipode_in(&h, &x, degree)?;
    println!("S(x):");
    for (k, c) in s.iter() {
        println!("  {}  ·  {}", c, h.display_key(k));
    }
    let lhs = convolve_antipode_id(&h, &x, true, degree)?;
    println!("μ(S⊗id)Δ(x) = ηε(x): {}", lhs == eta_eps(&h, &x)?);

    // Weight-one words are primitive: Δ(w) = w⊗1 + 1⊗w.
    let prim = h.parse("I(0; 1; 0)")?;
    let pk = prim.keys().next().unwrap();
    let d = h.delta_key(pk)?;
    let reduced: Vec<_> = d
        .iter()
        .filter(|((l, r), _)| l != &h.unit_key() && r != &h.unit_key())
        .collect();
    println!(
        "I(0; 1; 0) is primitive: {}",
        reduced.is_empty() && d.len() == 2
    );

    // Products of words live in the same bialgebra.
    let a = h.parse("I(0; 1; 1)")?;
    let b = h.parse("I(1; 0; 0)")?;
    let (ka, kb) = (a.keys().next().unwrap(), b.keys().next().unwrap());
    let prod = h.mul_key(ka, kb)?;
    println!("product: {}", h.display_key(&prod));
    println!(
        "Δ is multiplicative on it: {}",
        check_coassoc_in(&h, &LinComb::basis(prod))?
    );
    Ok(())
}

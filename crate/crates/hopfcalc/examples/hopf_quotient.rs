//! From bialgebra to Hopf algebra: quotienting out the point.
//!
//! The free construction is a bialgebra but not yet connected: the arity-one
//! degree-zero generators (the empty word I(a;;b), the bare tail |) are
//! group-like points. Dividing by "point = 1" makes the coalgebra conilpotent
//! and produces the Hopf algebra; tracking how many point factors each term
//! loses yields a one-parameter deformation that interpolates between the
//! free and quotient pictures.
//!
//! Run with: cargo run --example hopf_quotient

use hopfcalc::cooperad::{antipode_in, encode_factors, HopfAlgebra, UNIT_KEY};
use hopfcalc::kernel::{cint, LinComb};
use hopfcalc::words::{word_bialgebra, word_key};

fn main() -> hopfcalc::Result<()> {
    let h = word_bialgebra("01", false)?;

    // A raw tensor word with two empty (degree-zero) factors.
    let raw = encode_factors(&[
        word_key(&[0, 1]),       // I(0;;1), unit-like
        word_key(&[0, 1, 0]),    // I(0;1;0)
        word_key(&[1, 1]),       // I(1;;1), unit-like
    ]);
    println!("raw word: {}", h.display_key(&raw));
    println!("normalized: {}", h.display_key(&h.normalize_key(&raw)?));

    // The deformation keeps the number of deleted factors as an exponent.
    let q_form = h.normalize_q(&LinComb::basis(raw.clone()))?;
    for ((e, k), c) in &q_form.terms {
        println!("  q^{e} · {} · {}", c, h.display_key(k));
    }

    // Specializing q = 1 is exactly the Hopf quotient.
    let at_one = q_form.evaluate(&cint(1));
    println!(
        "q = 1 recovers the quotient: {}",
        at_one == h.hopf_quotient_normalize(&LinComb::basis(raw.clone()))?
    );

    // In the quotient, empty words are the unit itself.
    let empty = encode_factors(&[word_key(&[0, 0])]);
    println!(
        "I(0;;0) normalizes to the unit: {}",
        h.normalize_key(&empty)? == UNIT_KEY
    );

    // Conilpotence in action: the antipode series terminates at the degree.
    let x = h.parse("I(0; 1 0; 1)")?;
    let k = x.keys().next().unwrap().clone();
    let s = antipode_in(&h, &x, h.degree_key(&k)?)?;
    println!("S(I(0; 1 0; 1)):");
    for (k, c) in s.iter() {
        println!("  {}  ·  {}", c, h.display_key(k));
    }

    // Δ before the quotient is flanked by group-likes; after, by the unit.
    let w = encode_factors(&[word_key(&[0, 1, 0])]);
    println!("raw Δ(I(0; 1; 0)):");
    for ((l, r), c) in h.bialgebra_delta(&w)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, h.display_key(l), h.display_key(r));
    }
    println!("quotient Δ(I(0; 1; 0)):");
    for ((l, r), c) in h.delta_key(&w)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, h.display_key(l), h.display_key(r));
    }
    Ok(())
}

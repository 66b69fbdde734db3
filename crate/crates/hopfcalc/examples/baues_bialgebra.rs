//! The bialgebra of a semi-simplicial set, after Baues.
//!
//! Simplices of dimension n are cooperad elements of arity n: restricting a
//! simplex to the vertex ranges of a partition produces one coarse simplex
//! and one block simplex per part. The free construction then yields a
//! bialgebra on tensor words of simplices; for the nerve of a two-letter
//! alphabet this recovers the word bialgebra in simplicial clothing.
//!
//! Run with: cargo run --example baues_bialgebra

use hopfcalc::cooperad::{check_coassoc_in, check_counit_laws, HopfAlgebra};
use hopfcalc::simplicial::{
    baues_bialgebra_delta, nerve_bialgebra, simplex_key, sset_bialgebra, SemiSimplicialSet,
};

fn main() -> hopfcalc::Result<()> {
    // A hollow triangle with a filling 2-cell, supplied as plain data.
    let triangle = serde_json::json!({
        "name": "triangle",
        "generators": [["a", "b", "c"], ["ab", "ac", "bc"], ["abc"]],
        "faces": {
            "1,0": {"ab": "b", "ac": "c", "bc": "c"},
            "1,1": {"ab": "a", "ac": "a", "bc": "b"},
            "2,0": {"abc": "bc"},
            "2,1": {"abc": "ac"},
            "2,2": {"abc": "ab"}
        }
    });
    let space = SemiSimplicialSet::from_json(&triangle)?;
    println!("space `{}` with dims ≤ {}", space.name, space.dims());

    // Δ of the filling cell: long edge ⊗ x plus x ⊗ (first edge · second edge).
    let delta = baues_bialgebra_delta(&space, 2, "abc")?;
    let b = sset_bialgebra(space);
    println!("Δ(abc):");
    for ((l, r), c) in delta.iter() {
        println!("  {}  ·  {} ⊗ {}", c, b.display_key(l), b.display_key(r));
    }

    // The packaged instance passes the coalgebra axioms on that element.
    let x = b.parse(&simplex_key(2, "abc"))?;
    println!(
        "coassociative and counital: {}",
        check_coassoc_in(&b, &x)? && check_counit_laws(&b, &x)?
    );

    // The nerve of the alphabet {0,1}: n-simplices are (n+1)-letter strings,
    // faces drop a letter. Its bialgebra is graded by dimension − 1.
    let nerve = nerve_bialgebra("01", 4)?;
    for d in 0..=2 {
        println!(
            "nerve basis in degree {d}: {} elements",
            nerve.basis_of_degree(d)?.len()
        );
    }
    let y = nerve.parse("s3:0101")?;
    let yk = y.keys().next().unwrap().clone();
    println!("Δ(s3:0101):");
    for ((l, r), c) in nerve.delta_key(&yk)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, nerve.display_key(l), nerve.display_key(r));
    }
    Ok(())
}

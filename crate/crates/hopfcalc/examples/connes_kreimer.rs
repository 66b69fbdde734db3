//! The Connes–Kreimer Hopf algebra of rooted forests.
//!
//! Basis keys are products of canonical (symmetry-classed) rooted trees;
//! the coproduct sums over admissible cuts: for every parent-closed vertex
//! subset, the part containing the root goes left and the pruned branches
//! multiply on the right. The antipode follows from the usual recursive
//! convolution formula, computed here with exact rationals.
//!
//! Run with: cargo run --example connes_kreimer

use hopfcalc::cooperad::{antipode_in, convolve_antipode_id, eta_eps, HopfAlgebra};
use hopfcalc::kernel::LinComb;
use hopfcalc::trees::CkForestAlgebra;

fn main() -> hopfcalc::Result<()> {
    let h = CkForestAlgebra::new();

    // The ladder with three vertices: (* (* (*))) — chain root→mid→leaf.
    let x = h.parse("(* (* (*)))")?;
    let key = x.keys().next().unwrap().clone();
    println!("τ = {}", h.display_key(&key));
    println!("Δ(τ):");
    for ((l, r), c) in h.delta_key(&key)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, h.display_key(l), h.display_key(r));
    }

    // The cherry (* (*) (*)) has a squared term from its two branches.
    let cherry = h.parse("(* (*) (*))")?;
    let ck = cherry.keys().next().unwrap().clone();
    println!("Δ(cherry):");
    for ((l, r), c) in h.delta_key(&ck)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, h.display_key(l), h.display_key(r));
    }

    // Antipodes of the first few trees.
    for lit in ["(*)", "(* (*))", "(* (* (*)))", "(* (*) (*))"] {
        let t = h.parse(lit)?;
        let k = t.keys().next().unwrap().clone();
        let s = antipode_in(&h, &t, h.degree_key(&k)?)?;
        let rendered: Vec<String> = s
            .iter()
            .map(|(k, c)| format!("{} · {}", c, h.display_key(k)))
            .collect();
        println!("S({}) = {}", h.display_key(&k), rendered.join("  +  "));
    }

    // The defining convolution identity, on a forest with two components.
    let f = h.parse("(* (*)) * (*)")?;
    let fk = f.keys().next().unwrap().clone();
    let d = h.degree_key(&fk)?;
    let x = LinComb::basis(fk);
    let ok = convolve_antipode_id(&h, &x, true, d)? == eta_eps(&h, &x)?
        && convolve_antipode_id(&h, &x, false, d)? == eta_eps(&h, &x)?;
    println!("μ(S⊗id)Δ = ηε = μ(id⊗S)Δ on a 3-vertex forest: {ok}");

    // Counting the graded basis: forests with n vertices.
    for n in 0..=6 {
        println!("forests with {n} vertices: {}", h.basis_of_degree(n)?.len());
    }
    Ok(())
}

//! From the tree cooperad to Connes–Kreimer by tails and amputation.
//!
//! Trees with tails (free input slots) form a cooperad under two-level
//! decomposition; the free construction turns that into a bialgebra of
//! tensor words. Giving every vertex of a tailless tree one tail (♯), taking
//! the free coproduct there, and then clipping all tails again (♭) lands
//! exactly on the Connes–Kreimer forest coproduct.
//!
//! Run with: cargo run --example free_construction

use hopfcalc::cooperad::{encode_factors, HopfAlgebra, UNIT_KEY};
use hopfcalc::kernel::Tensor2;
use hopfcalc::trees::{flat, forest_key, sharp, symmetric_trees, tree_bialgebra, CkForestAlgebra, Tree};

/// Clip every tail of every factor of a tensor-word key and re-express the
/// result as a canonical forest key (trivial factors disappear).
fn amputate_word(key: &str) -> hopfcalc::Result<String> {
    if key == UNIT_KEY {
        return Ok(UNIT_KEY.to_string());
    }
    let mut bald: Vec<Tree> = Vec::new();
    for f in hopfcalc::cooperad::decode_factors(key)? {
        if let Some(t) = flat(&Tree::parse(&f)?) {
            bald.push(t.canonical());
        }
    }
    Ok(forest_key(&bald))
}

fn main() -> hopfcalc::Result<()> {
    let planar = tree_bialgebra(true);
    let ck = CkForestAlgebra::new();

    // The cherry, made operadic: one tail per vertex.
    let cherry = Tree::parse("(* (*) (*))")?;
    let sharped = sharp(&cherry);
    println!("cherry       ♯→  {}", sharped.compact());

    // Free-construction coproduct of the sharp (before any quotient).
    let key = encode_factors(&[sharped.compact()]);
    let raw = planar.bialgebra_delta(&key)?;
    println!("free Δ of the sharp has {} terms", raw.len());

    // Amputate both sides of every term; collect with multiplicity.
    let mut projected = Tensor2::zero();
    for ((l, r), c) in raw.iter() {
        projected.add_term(amputate_word(l)?, amputate_word(r)?, c.clone());
    }

    // Compare against the admissible-cut coproduct computed directly.
    let direct = ck.delta_key(&ck.parse("(* (*) (*))")?.keys().next().unwrap().clone())?;
    println!("projected free Δ == Connes–Kreimer Δ: {}", projected == direct);

    // The same equivalence across every tree with up to four vertices.
    let mut all_match = true;
    for n in 1..=4 {
        for t in symmetric_trees(n) {
            let key = encode_factors(&[sharp(&t).compact()]);
            let mut proj = Tensor2::zero();
            for ((l, r), c) in planar.bialgebra_delta(&key)?.iter() {
                proj.add_term(amputate_word(l)?, amputate_word(r)?, c.clone());
            }
            let direct = ck.delta_key(&forest_key(&[t.clone()]))?;
            if proj != direct {
                all_match = false;
                println!("mismatch on {}", t.compact());
            }
        }
    }
    println!("pipeline matches on all trees ≤ 4 vertices: {all_match}");

    // A glimpse of the raw cooperad: the two-vertex tree whose child holds
    // two tails decomposes under (2,1) by cutting off that child.
    let coop = &planar.coop;
    use hopfcalc::cooperad::Cooperad;
    let two_then_one = Tree::parse("(* (* . .) .)")?;
    let dec = coop.cogamma(&two_then_one.compact(), &[2, 1])?;
    println!("γ̌_(2,1) of {}:", two_then_one.compact());
    for (slots, c) in dec.iter() {
        let shown: Vec<&str> = slots.iter().map(|s| s.as_str()).collect();
        println!("  {}  ·  {}", c, shown.join(" ⊗ "));
    }
    Ok(())
}

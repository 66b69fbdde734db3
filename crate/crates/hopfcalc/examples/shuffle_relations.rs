//! Shuffle products and the standard relation families on word symbols.
//!
//! The product of two iterated-integral words with matching boundaries
//! expands as a sum over riffle shuffles of their interior letters. The
//! classical relation families (shuffle, path composition, loop, inversion,
//! exchange, 2-skeleton) all span coideals: the coproduct descends to the
//! quotient by each family, which is what coideal membership certifies.
//!
//! Run with: cargo run --example shuffle_relations

use hopfcalc::cooperad::{coideal_member_in, HopfAlgebra};
use hopfcalc::words::{relation_generators, shuffle_sum, word_bialgebra, RelationKind};

fn main() -> hopfcalc::Result<()> {
    let h = word_bialgebra("01", false)?;

    // I(0; 1; 1) · I(0; 0; 1) as a shuffle sum of the middles "1" and "0".
    let sum = shuffle_sum(&h, 0, &[1], &[0], 1)?;
    println!("I(0;1;1) ⧢ I(0;0;1):");
    for (k, c) in sum.iter() {
        println!("  {}  ·  {}", c, h.display_key(k));
    }

    // The loop relations I(a; …; a) with equal boundaries vanish in the
    // quotient; their span is a coideal, degreewise.
    let loops = relation_generators(RelationKind::Loop, 2, "01", false)?;
    println!("loop generators up to degree 2: {}", loops.len());
    let all_in = loops
        .iter()
        .map(|r| coideal_member_in(&h, r, &loops, None))
        .collect::<hopfcalc::Result<Vec<bool>>>()?;
    println!("loop family is a coideal: {}", all_in.iter().all(|&b| b));

    // Same for the 2-skeleton family (words through ≥ 3 distinct letters
    // need at least a 3-letter alphabet; over {0,1,2} the family is real).
    let h3 = word_bialgebra("012", false)?;
    let two_skel = relation_generators(RelationKind::TwoSkeleton, 2, "012", false)?;
    println!("2-skeleton generators up to degree 2: {}", two_skel.len());
    let ok = two_skel
        .iter()
        .map(|r| coideal_member_in(&h3, r, &two_skel, None))
        .collect::<hopfcalc::Result<Vec<bool>>>()?;
    println!("2-skeleton family is a coideal: {}", ok.iter().all(|&b| b));

    // One shuffle relation written out: the product minus its shuffle
    // expansion.
    let shuffles = relation_generators(RelationKind::Shuffle, 2, "01", false)?;
    let r = &shuffles[0];
    println!("first shuffle relation ({} terms):", r.len());
    for (k, c) in r.iter() {
        println!("  {}  ·  {}", c, h.display_key(k));
    }

    // The shuffle family alone is NOT a coideal: Δ of the relation above
    // leaves a term I(0;0;0) ⊗ I(0;0;0), and the loop word I(0;0;0) is not
    // in the shuffle span. Only together with the path and loop families
    // does the coproduct descend — that combination is the Hopf ideal.
    let alone = coideal_member_in(&h, r, &shuffles, None)?;
    println!("shuffle family alone descends: {alone}");
    let mut combined = shuffles.clone();
    combined.extend(relation_generators(RelationKind::Path, 2, "01", false)?);
    combined.extend(relation_generators(RelationKind::Loop, 2, "01", false)?);
    let ok = combined
        .iter()
        .map(|r| coideal_member_in(&h, r, &combined, None))
        .collect::<hopfcalc::Result<Vec<bool>>>()?;
    println!(
        "shuffle + path + loop combined is a coideal: {}",
        ok.iter().all(|&b| b)
    );
    Ok(())
}

//! The depth filtration of the free bialgebra of words.
//!
//! For tensor words the depth of a basis element is simply its length, and
//! the filtration F^{≥p} (elements whose decompositions have at least p
//! right-hand tensor factors) interacts with the structure maps:
//!   - products add depths,
//!   - every coproduct term stays at least as deep on both sides,
//!   - a word of arity n has depth at most n.
//!
//! Run with: cargo run --example depth_filtration

use hopfcalc::cooperad::{compositions, encode_factors, HopfAlgebra};
use hopfcalc::words::{word_bialgebra, word_key};

fn main() -> hopfcalc::Result<()> {
    let h = word_bialgebra("01", false)?;

    // A three-factor word: depth 3, arity 1+2+1.
    let w = encode_factors(&[
        word_key(&[0, 1, 0]),
        word_key(&[1, 0, 0, 1]),
        word_key(&[0, 0, 1]),
    ]);
    println!("w = {}", h.display_key(&w));
    println!("depth(w)          = {}", h.depth(&w)?);
    println!("depth observed    = {}", h.depth_observed(&w)?);
    println!("arity(w)          = {}", h.word_arity(&w)?);

    // Products add depths exactly in the free construction.
    let v = encode_factors(&[word_key(&[1, 1, 0])]);
    let p = h.mul_words(&w, &v)?;
    println!(
        "depth({} · v) = {} = {} + {}",
        h.display_key(&w),
        h.depth(&p)?,
        h.depth(&w)?,
        h.depth(&v)?
    );

    // Every coproduct term of a depth-p word lands in F^{≥p} ⊗ F^{≥p}.
    let p0 = h.depth(&w)?;
    let mut min_left = usize::MAX;
    let mut min_right = usize::MAX;
    for ((l, r), _) in h.bialgebra_delta(&w)?.iter() {
        min_left = min_left.min(h.depth(l)?);
        min_right = min_right.min(h.depth(r)?);
    }
    println!("Δ(w) ⊆ F^≥{p0} ⊗ F^≥{p0}: {}", min_left >= p0 && min_right >= p0);

    // The decomposition maps can only refine: every nonzero γ̌ image of w
    // has at least depth(w) right slots.
    let n = h.word_arity(&w)?;
    let mut min_slots = usize::MAX;
    for parts in compositions(n) {
        if !h.free_nc_cogamma(&w, &parts)?.is_zero() {
            min_slots = min_slots.min(parts.len());
        }
    }
    println!("fewest right slots over nonzero γ̌ images: {min_slots} (= depth)");

    // Depth is capped by arity: single letters cannot split further.
    println!("depth ≤ arity: {}", h.depth(&w)? <= n);
    Ok(())
}

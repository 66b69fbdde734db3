//! Joyal duality and the operads of simplices and little ordinals.
//!
//! Endpoint-preserving monotone maps [m] → [n] correspond contravariantly
//! to arbitrary monotone maps n̄ → m̄ between the finite ordinals without
//! endpoints. The dictionary exchanges composition order, squares to the
//! identity, and turns the little-ordinals structure maps into ordered
//! surjections with prescribed fiber sizes.
//!
//! Run with: cargo run --example joyal_duality

use hopfcalc::simplicial::{joyal_dual, little_ordinals_gamma, simplex_compose, MapKind, OrdMap};

fn main() -> hopfcalc::Result<()> {
    // An endpoint-preserving map [2] → [7] with values 0, 3, 7.
    let f = OrdMap::interval(8, vec![0, 3, 7])?;
    println!("f            : {:?} (interval)", f.values);
    let d = joyal_dual(&f)?;
    println!("dual(f)      : {:?} (ordinal, 7̄ → 2̄)", d.values);
    let dd = joyal_dual(&d)?;
    println!("dual²(f) == f: {}", dd == f);

    // Contravariance: dual(g ∘ f) = dual(f) ∘ dual(g).
    let g = OrdMap::interval(10, vec![0, 2, 5, 7, 9])?;
    let h = OrdMap::interval(5, vec![0, 1, 4])?; // [2] → [4]
    let gh = g.compose(&h)?;
    let lhs = joyal_dual(&gh)?;
    let rhs = joyal_dual(&h)?.compose(&joyal_dual(&g)?)?;
    println!("dual(g∘h) == dual(h)∘dual(g): {}", lhs == rhs);

    // Simplex composition [2] ∘₁ [2]: the two legs into [3].
    let (m_leg, n_leg) = simplex_compose(2, 1, 2)?;
    println!("[2]∘₁[2]: m-leg {:?}, n-leg {:?}", m_leg.values, n_leg.values);

    // Little ordinals: the partition (3, 4) of 7 yields the base inclusion
    // γ⁰ = (0, 3, 7) and one block inclusion per part.
    let (gamma0, blocks) = little_ordinals_gamma(&[3, 4])?;
    println!("γ⁰ for (3,4): {:?}", gamma0.values);
    for (i, b) in blocks.iter().enumerate() {
        println!("block {}: {:?}", i, b.values);
    }

    // The Joyal dual of γ⁰ is the monotone surjection 7̄ → 2̄ whose fibers
    // have sizes 3 and 4 — the shape of the underlying partition.
    let surj = joyal_dual(&gamma0)?;
    println!("dual(γ⁰)     : {:?}", surj.values);
    let mut fiber_sizes = vec![0usize; 2];
    for &v in &surj.values {
        fiber_sizes[v] += 1;
    }
    println!("fiber sizes  : {:?}", fiber_sizes);

    // Identities dualize to identities.
    let id = OrdMap::identity(MapKind::Interval, 5);
    println!("dual(id) == id: {}", joyal_dual(&id)?.values == OrdMap::identity(MapKind::Ordinal, 4).values);
    Ok(())
}

//! Graphs as flag involutions: Betti numbers, insertion, and the coproduct.
//!
//! A graph is a set of half-edges (flags) at vertices with a partial pairing;
//! paired flags form edges, unpaired ones are tails. Substituting a graph
//! into a vertex of another (matching its tails with the flags at that
//! vertex) is operadic insertion. The coproduct sums over edge subsets:
//! the spanning subgraph on the chosen edges goes left, the contraction of
//! its components goes right.
//!
//! Run with: cargo run --example graph_insertion

use hopfcalc::cooperad::HopfAlgebra;
use hopfcalc::graphs::{
    betti, bridges, ck_graph_delta, graph_key, insert, is_motic, is_one_pi, Admissible, Graph,
    GraphAlgebra, Momentum,
};
use hopfcalc::kernel::cint;

fn main() -> hopfcalc::Result<()> {
    // The dumbbell: two loops joined by a bridge.
    let mut dumbbell = Graph::new(2);
    dumbbell.add_edge(0, 0);
    dumbbell.add_edge(0, 1);
    dumbbell.add_edge(1, 1);
    let (b0, b1) = betti(&dumbbell);
    println!("dumbbell: b0 = {b0}, b1 = {b1}, key = {}", graph_key(&dumbbell));
    println!("bridges: {:?}", bridges(&dumbbell));
    println!("1-PI: {}", is_one_pi(&dumbbell));

    // The theta graph is bridgeless, hence one-particle irreducible.
    let mut theta = Graph::new(2);
    for _ in 0..3 {
        theta.add_edge(0, 1);
    }
    println!("theta: 1-PI = {}", is_one_pi(&theta));

    // Insertion: substitute the theta graph into vertex 0 of a tailed
    // single vertex. The host's flags at that vertex pair off with the
    // inserted graph's tails.
    let mut host = Graph::new(1);
    host.add_tail(0, Some(cint(1)), Some(Momentum::Token("q".into())));
    host.add_tail(0, Some(cint(1)), Some(Momentum::Token("q".into())));
    let mut insertee = theta.clone();
    insertee.add_tail(0, Some(cint(1)), None);
    insertee.add_tail(1, Some(cint(1)), None);
    let sockets = [(0usize, 6usize), (1usize, 7usize)]; // host flag ↦ insertee tail
    let glued = insert(&host, 0, &insertee, &sockets)?;
    let (g0, g1) = betti(&glued);
    println!("theta into a 2-tail vertex: b0 = {g0}, b1 = {g1}, 1-PI = {}", is_one_pi(&glued));

    // Motic needs full decoration: masses on edges, momenta (or the empty
    // marker) on tails. A massless bridge breaks the predicate.
    let mut decorated = Graph::new(2);
    decorated.add_edge_mass(0, 1, Some(cint(0)));
    decorated.add_tail(0, Some(cint(1)), Some(Momentum::Token("p".into())));
    decorated.add_tail(1, Some(cint(1)), Some(Momentum::Empty));
    println!("massless bridge is motic: {}", is_motic(&decorated)?);
    let mut massive = decorated.clone();
    massive.flags[0].mass = Some(cint(2));
    massive.flags[1].mass = Some(cint(2));
    println!("massive bridge is motic: {}", is_motic(&massive)?);

    // The coproduct over edge subsets, with three admissibility notions.
    for adm in [Admissible::All, Admissible::OnePi, Admissible::Motic] {
        match ck_graph_delta(&dumbbell, adm) {
            Ok(d) => println!("Δ_{adm:?}(dumbbell) has {} terms", d.len()),
            Err(e) => println!("Δ_{adm:?}(dumbbell): {e}"),
        }
    }

    // Packaged as a Hopf algebra: normalized keys, coassociativity.
    let h = GraphAlgebra::new();
    let key = graph_key(&theta);
    println!("Δ(theta) in the graph bialgebra:");
    for ((l, r), c) in h.delta_key(&key)?.iter() {
        println!("  {}  ·  {} ⊗ {}", c, h.display_key(l), h.display_key(r));
    }
    Ok(())
}

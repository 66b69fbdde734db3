//! hopfcalc — an exact-arithmetic engine for combinatorial Hopf algebras
//! arising from cooperads with multiplication.
//!
//! One generic pipeline builds several classical bialgebras from a single
//! ingredient, a counital cooperad: the Goncharov word Hopf algebra over a
//! finite alphabet, the Connes–Kreimer Hopf algebras of rooted forests and of
//! graphs, and the Baues-style bialgebra of a semi-simplicial set. All axioms
//! (coassociativity, compatibility, counit and antipode laws, coideal
//! descent of relation families) are verifiable by exact rational
//! computation — there is no floating point anywhere.
//!
//! Module map:
//! - [`kernel`]: linear combinations with `BigRational` coefficients over
//!   opaque canonical keys, tensor powers, convolution, the antipode series,
//!   coassociativity checking, and degreewise coideal membership via
//!   fraction-free elimination.
//! - [`cooperad`]: the cooperad interface, the free tensor-algebra
//!   construction with its bialgebra coproduct, depth filtration,
//!   infinitesimal (co-pre-Lie) operators, the Hopf quotient with its
//!   q-deformation bookkeeping, and the instance registry.
//! - [`words`]: the word cooperad over a finite alphabet, Goncharov's
//!   coproduct, shuffle products, and the six relation families.
//! - [`trees`]: planar and symmetric rooted trees with tails, grafting
//!   operads, the Connes–Kreimer forest coproduct by admissible cuts,
//!   canonicalization with automorphism counts, amputation, and the
//!   deconcatenation coproduct with its automorphism-weighted counit.
//! - [`graphs`]: the flag-involution graph model, Betti numbers, insertion,
//!   the graph coproduct by edge subsets, and the 1-PI/motic predicates.
//! - [`simplicial`]: monotone maps, the simplex and little-ordinals operads,
//!   Joyal duality, semi-simplicial sets, and the induced cooperad/bialgebra.
//! - [`cli`]: the command-line front end (`hopfcalc` binary).
//!
//! The crate-level examples directory demonstrates one capability per file;
//! start with `examples/goncharov_delta.rs`.

pub mod cli;
pub mod cooperad;
pub mod error;
pub mod graphs;
pub mod kernel;
pub mod simplicial;
pub mod trees;
pub mod words;

pub use error::{Error, Result};

//! The generic pipeline from a counital cooperad to a graded bialgebra and
//! its Hopf quotient.
//!
//! A cooperad here is a family Ǒ(n), n ≥ 1, of free modules with basis, with
//! decomposition maps
//!
//! ```text
//! γ̌_{n₁,…,n_k} : Ǒ(n) → Ǒ(k) ⊗ Ǒ(n₁) ⊗ … ⊗ Ǒ(n_k),    n = n₁+…+n_k, nᵢ ≥ 1,
//! ```
//!
//! coassociative in the operadic sense, plus (optionally) a counit on Ǒ(1)
//! and a distinguished group-like point "|". The free construction puts
//! B = ⊕ tensor words in basis generators, multiplication = concatenation,
//! extends γ̌ so that left outputs multiply and right outputs concatenate,
//! and defines the coproduct Δ = (id ⊗ μ)γ̌ summed over all compositions.
//! Identifying every degree-0 generator with the algebra unit (the quotient
//! by the two-sided ideal spanned by 1 − |) makes the result a connected
//! graded Hopf algebra; the number of deleted point factors survives as a
//! deformation exponent q.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{self, Coeff, Key, LinComb, Tensor2, TensorK};

/// Canonical key of the adjoined algebra unit (the empty tensor word).
pub const UNIT_KEY: &str = "1";

// ---------------------------------------------------------------------------
// Cooperad interface
// ---------------------------------------------------------------------------

/// A counital cooperad with a basis of canonical keys.
///
/// `cogamma(key, (n₁,…,n_k))` returns a tensor with 1 + k slots of raw
/// generator keys: slot 0 is the arity-k left output, slots 1..=k are the
/// right outputs of arities n₁,…,n_k.
pub trait Cooperad {
    fn name(&self) -> &str;

    /// Number of operadic inputs of a basis generator (≥ 1; there is no Ǒ(0)).
    fn arity(&self, key: &str) -> Result<usize>;

    /// Grading of the generated bialgebra. Degree-0 generators are exactly
    /// the ones identified with the unit in the Hopf quotient.
    fn hopf_degree(&self, key: &str) -> Result<usize>;

    fn cogamma(&self, key: &str, parts: &[usize]) -> Result<TensorK>;

    /// Cooperadic right counit on arity-1 generators.
    fn counit_eps1(&self, key: &str) -> Result<Coeff>;

    /// Distinguished group-like arity-1 generator, when the instance has one.
    fn point(&self) -> Option<Key>;

    /// All generators of a given arity, when finitely enumerable.
    fn generators_of_arity(&self, n: usize) -> Option<Vec<Key>>;

    /// All generators of a given Hopf degree, when finitely enumerable.
    fn generators_of_degree(&self, d: usize) -> Option<Vec<Key>>;

    fn parse_generator(&self, literal: &str) -> Result<Key>;

    fn display_generator(&self, key: &str) -> String;

    fn validate_key(&self, key: &str) -> Result<()>;
}

// ---------------------------------------------------------------------------
// Tensor-word codec
// ---------------------------------------------------------------------------

/// Encode an ordered list of generator keys as one canonical tensor-word key.
/// Each factor is length-prefixed (`<byte length>:<bytes>`), so the encoding
/// is injective regardless of the factor alphabet; the empty product is the
/// unit key `"1"`.
pub fn encode_factors(factors: &[String]) -> Key {
    if factors.is_empty() {
        return UNIT_KEY.to_string();
    }
    let mut out = String::new();
    for f in factors {
        out.push_str(&f.len().to_string());
        out.push(':');
        out.push_str(f);
    }
    out
}

/// Inverse of [`encode_factors`].
pub fn decode_factors(key: &str) -> Result<Vec<String>> {
    if key == UNIT_KEY {
        return Ok(Vec::new());
    }
    let bytes = key.as_bytes();
    let mut factors = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let colon = key[i..]
            .find(':')
            .ok_or_else(|| Error::Parse(format!("missing length prefix in tensor-word key `{key}`")))?
            + i;
        let len: usize = key[i..colon]
            .parse()
            .map_err(|_| Error::Parse(format!("bad length prefix in tensor-word key `{key}`")))?;
        let start = colon + 1;
        let end = start + len;
        if end > bytes.len() {
            return Err(Error::Parse(format!(
                "tensor-word key `{key}` truncated (factor of length {len} at byte {start})"
            )));
        }
        factors.push(key[start..end].to_string());
        i = end;
    }
    if factors.is_empty() {
        return Err(Error::Parse(format!("empty tensor-word key `{key}`")));
    }
    Ok(factors)
}

/// All compositions of `n` into ordered parts ≥ 1.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // First part takes 1..=n, recurse on the remainder.
    fn go(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for first in 1..=rest {
            acc.push(first);
            go(rest - first, acc, out);
            acc.pop();
        }
    }
    go(n, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Free construction
// ---------------------------------------------------------------------------

/// The free bialgebra on a cooperad: basis = tensor words in generators,
/// multiplication = concatenation (sorted when `symmetric`), coproduct
/// Δ = (id⊗μ)γ̌ summed over compositions. `delta_key` applies the Hopf
/// quotient normal form (degree-0 factors deleted) to both output slots.
pub struct FreeBialgebra<C: Cooperad> {
    pub coop: C,
    pub symmetric: bool,
    name: String,
}

impl<C: Cooperad> FreeBialgebra<C> {
    pub fn new(coop: C, symmetric: bool, name: impl Into<String>) -> Self {
        Self { coop, symmetric, name: name.into() }
    }

    pub fn factors(&self, key: &str) -> Result<Vec<String>> {
        let fs = decode_factors(key)?;
        for f in &fs {
            self.coop.validate_key(f)?;
        }
        Ok(fs)
    }

    fn encode(&self, mut factors: Vec<String>) -> Key {
        if self.symmetric {
            factors.sort();
        }
        encode_factors(&factors)
    }

    /// Total operadic arity of a tensor word (0 for the unit).
    pub fn word_arity(&self, key: &str) -> Result<usize> {
        let mut n = 0;
        for f in self.factors(key)? {
            n += self.coop.arity(&f)?;
        }
        Ok(n)
    }

    /// Total Hopf degree of a tensor word.
    pub fn word_degree(&self, key: &str) -> Result<usize> {
        let mut d = 0;
        for f in self.factors(key)? {
            d += self.coop.hopf_degree(&f)?;
        }
        Ok(d)
    }

    /// Depth-filtration value of a basis tensor word: its length.
    pub fn depth(&self, key: &str) -> Result<usize> {
        Ok(self.factors(key)?.len())
    }

    /// Depth recomputed from the decomposition maps alone: the smallest
    /// number of right outputs over all partitions with nonzero image.
    /// For the free construction this must equal [`Self::depth`].
    pub fn depth_observed(&self, key: &str) -> Result<usize> {
        let n = self.word_arity(key)?;
        let mut best: Option<usize> = None;
        for parts in compositions(n) {
            if let Some(b) = best {
                if parts.len() >= b {
                    continue;
                }
            }
            if !self.free_nc_cogamma(key, &parts)?.is_zero() {
                best = Some(parts.len());
            }
        }
        best.ok_or_else(|| Error::Validation(format!("no nonzero decomposition for `{key}`")))
    }

    /// Extension of γ̌ to tensor words: the composition `parts` must split
    /// into consecutive blocks matching the factor arities (otherwise the
    /// result is zero); each factor decomposes by its block, left outputs
    /// concatenate into one tensor word, right outputs concatenate in order.
    /// All 1 + k output slots are tensor-word keys.
    pub fn free_nc_cogamma(&self, key: &str, parts: &[usize]) -> Result<TensorK> {
        let factors = self.factors(key)?;
        if factors.is_empty() {
            return Err(Error::BadPartition(
                "the unit word has no decompositions".into(),
            ));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadPartition("partition parts must be ≥ 1".into()));
        }
        let arity = self.word_arity(key)?;
        let total: usize = parts.iter().sum();
        if total != arity {
            return Err(Error::BadPartition(format!(
                "partition sums to {total}, word has arity {arity}"
            )));
        }

        // Split `parts` into blocks summing to each factor's arity; the
        // split is unique when it exists because parts are positive.
        let mut blocks: Vec<&[usize]> = Vec::with_capacity(factors.len());
        let mut idx = 0usize;
        for f in &factors {
            let target = self.coop.arity(f)?;
            let mut acc = 0usize;
            let start = idx;
            while acc < target && idx < parts.len() {
                acc += parts[idx];
                idx += 1;
            }
            if acc != target {
                return Ok(TensorK::zero()); // not concatenable
            }
            blocks.push(&parts[start..idx]);
        }

        // Tensor the factorwise decompositions, then regroup slots.
        let mut combined = TensorK::scalar_one();
        for (f, block) in factors.iter().zip(&blocks) {
            let piece = self.coop.cogamma(f, block)?;
            combined = combined.tensor(&piece);
        }

        // combined slots: for each factor j, [left_j, rights_j...]; regroup
        // into [word(left_1..left_l), each right as a singleton word].
        let mut out = TensorK::zero();
        for (slots, coeff) in combined.iter() {
            let mut lefts: Vec<String> = Vec::with_capacity(factors.len());
            let mut rights: Vec<Key> = Vec::with_capacity(parts.len());
            let mut pos = 0usize;
            for block in &blocks {
                lefts.push(slots[pos].clone());
                for s in &slots[pos + 1..pos + 1 + block.len()] {
                    rights.push(encode_factors(std::slice::from_ref(s)));
                }
                pos += 1 + block.len();
            }
            let mut out_slots = Vec::with_capacity(1 + rights.len());
            out_slots.push(self.encode(lefts));
            out_slots.extend(rights);
            out.add_term(out_slots, coeff.clone());
        }
        Ok(out)
    }

    /// Coproduct of a single generator before the Hopf quotient:
    /// Δ(g) = Σ over compositions of arity(g) of (id⊗μ)γ̌(g).
    fn delta_generator(&self, gen: &str) -> Result<Tensor2> {
        let n = self.coop.arity(gen)?;
        let mut out = Tensor2::zero();
        for parts in compositions(n) {
            let dec = self.coop.cogamma(gen, &parts)?;
            for (slots, c) in dec.iter() {
                let left = encode_factors(std::slice::from_ref(&slots[0]));
                let right = self.encode(slots[1..].to_vec());
                out.add_term(left, right, c.clone());
            }
        }
        Ok(out)
    }

    /// Coproduct on the free bialgebra, before the Hopf quotient. Tensor
    /// words multiply slotwise: Δ(v·w) = (μ⊗μ)(id⊗τ⊗id)(Δv ⊗ Δw).
    pub fn bialgebra_delta(&self, key: &str) -> Result<Tensor2> {
        let factors = self.factors(key)?;
        let mut acc = Tensor2::single(UNIT_KEY, UNIT_KEY, Coeff::one());
        for f in &factors {
            let df = self.delta_generator(f)?;
            let mut next = Tensor2::zero();
            for ((l1, r1), c1) in acc.iter() {
                for ((l2, r2), c2) in df.iter() {
                    next.add_term(self.mul_words(l1, l2)?, self.mul_words(r1, r2)?, c1 * c2);
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Concatenation product of two tensor-word keys.
    pub fn mul_words(&self, a: &str, b: &str) -> Result<Key> {
        let mut fa = self.factors(a)?;
        let fb = self.factors(b)?;
        fa.extend(fb);
        Ok(self.encode(fa))
    }

    /// Hopf-quotient normal form of one key: delete every degree-0 factor.
    pub fn normalize_key(&self, key: &str) -> Result<Key> {
        let mut kept = Vec::new();
        for f in self.factors(key)? {
            if self.coop.hopf_degree(&f)? != 0 {
                kept.push(f);
            }
        }
        Ok(self.encode(kept))
    }

    /// Hopf-quotient normal form of a linear combination.
    pub fn hopf_quotient_normalize(&self, x: &LinComb) -> Result<LinComb> {
        let mut out = LinComb::zero();
        for (k, c) in x.iter() {
            out.add_term(self.normalize_key(k)?, c.clone());
        }
        Ok(out)
    }

    /// Deformation normal form: like [`Self::hopf_quotient_normalize`] but
    /// the number of deleted point factors is kept as an explicit exponent.
    /// Specializing the deformation parameter to 1 recovers the quotient.
    pub fn normalize_q(&self, x: &LinComb) -> Result<QNormalForm> {
        let mut terms: BTreeMap<(usize, Key), Coeff> = BTreeMap::new();
        for (k, c) in x.iter() {
            let mut kept = Vec::new();
            let mut dropped = 0usize;
            for f in self.factors(k)? {
                if self.coop.hopf_degree(&f)? == 0 {
                    dropped += 1;
                } else {
                    kept.push(f);
                }
            }
            let key = (dropped, self.encode(kept));
            let cur = terms.remove(&key).unwrap_or_else(Coeff::zero) + c;
            if !cur.is_zero() {
                terms.insert(key, cur);
            }
        }
        Ok(QNormalForm { terms })
    }

    /// Partial decomposition keeping the left output and the i-th right
    /// output (1-based), applying the counit to every other right slot.
    /// Both sides are raw generator keys. Summing over i yields the
    /// infinitesimal (co-pre-Lie) operator on generators.
    pub fn cocirc(&self, i: usize, gen: &str) -> Result<Tensor2> {
        self.coop.validate_key(gen)?;
        let n = self.coop.arity(gen)?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange(format!(
                "cocirc index {i} for arity {n}"
            )));
        }
        let mut out = Tensor2::zero();
        for m in 1..=(n - i + 1) {
            let mut parts = vec![1usize; n - m + 1];
            parts[i - 1] = m;
            let dec = self.coop.cogamma(gen, &parts)?;
            for (slots, c) in dec.iter() {
                let mut coeff = c.clone();
                for (j, s) in slots[1..].iter().enumerate() {
                    if j + 1 != i {
                        coeff *= self.coop.counit_eps1(s)?;
                    }
                }
                if !coeff.is_zero() {
                    out.add_term(slots[0].clone(), slots[i].clone(), coeff);
                }
            }
        }
        Ok(out)
    }

    /// Infinitesimal operator δ on tensor words, computed from first
    /// principles: keep the left output and one right output of the extended
    /// decomposition, apply the counit to all other right slots, sum over
    /// the kept position. Both sides are tensor-word keys. On products it
    /// satisfies the twisted compatibility
    /// δ(v·w) = Σ (v⁰·w)⊗v′ + Σ (v·w⁰)⊗w′ where δ(v) = Σ v⁰⊗v′.
    pub fn co_pre_lie(&self, key: &str) -> Result<Tensor2> {
        let n = self.word_arity(key)?;
        let mut out = Tensor2::zero();
        for i in 1..=n {
            for m in 1..=(n - i + 1) {
                let mut parts = vec![1usize; n - m + 1];
                parts[i - 1] = m;
                let dec = self.free_nc_cogamma(key, &parts)?;
                for (slots, c) in dec.iter() {
                    let mut coeff = c.clone();
                    for (j, s) in slots[1..].iter().enumerate() {
                        if j + 1 != i {
                            coeff *= self.counit_word(s)?;
                        }
                    }
                    if !coeff.is_zero() {
                        out.add_term(slots[0].clone(), slots[i].clone(), coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Counit of an arity-1 tensor word (necessarily a single factor).
    fn counit_word(&self, key: &str) -> Result<Coeff> {
        let fs = self.factors(key)?;
        if fs.len() != 1 {
            return Err(Error::Validation(format!(
                "counit applied to a word of length {}",
                fs.len()
            )));
        }
        self.coop.counit_eps1(&fs[0])
    }
}

/// Normal form in the q-deformed quotient: terms indexed by (exponent of the
/// deformation parameter, reduced tensor word).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QNormalForm {
    pub terms: BTreeMap<(usize, Key), Coeff>,
}

impl QNormalForm {
    /// Substitute a numeric value for the deformation parameter.
    pub fn evaluate(&self, q: &Coeff) -> LinComb {
        let mut out = LinComb::zero();
        for ((e, k), c) in &self.terms {
            let mut pow = Coeff::one();
            for _ in 0..*e {
                pow *= q;
            }
            out.add_term(k.clone(), c * pow);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// The packaged Hopf-algebra interface
// ---------------------------------------------------------------------------

/// What the kernel needs to know about a concrete Hopf algebra whose basis
/// is a set of canonical monomial keys: the (normalized) coproduct, the
/// product of basis elements, degrees, and optionally finite graded bases.
pub trait HopfAlgebra {
    fn name(&self) -> &str;

    fn unit_key(&self) -> Key {
        UNIT_KEY.to_string()
    }

    /// Coproduct of a basis key, in Hopf-quotient normal form on both sides.
    fn delta_key(&self, key: &str) -> Result<Tensor2>;

    /// Product of two basis keys (always a basis key for monomial bases).
    fn mul_key(&self, a: &str, b: &str) -> Result<Key>;

    fn degree_key(&self, key: &str) -> Result<usize>;

    /// Finite basis of a graded component.
    fn basis_of_degree(&self, degree: usize) -> Result<Vec<Key>>;

    /// Parse an element literal (a basis literal, `1`, or a `*`-separated
    /// product of basis literals).
    fn parse(&self, literal: &str) -> Result<LinComb>;

    fn display_key(&self, key: &str) -> String;

    fn validate_key(&self, key: &str) -> Result<()>;

    /// Counit: 1 on the unit key, 0 on every other normalized basis key.
    fn counit_key(&self, key: &str) -> Result<Coeff> {
        self.validate_key(key)?;
        Ok(if key == self.unit_key() { Coeff::one() } else { Coeff::zero() })
    }
}

impl<C: Cooperad> HopfAlgebra for FreeBialgebra<C> {
    fn name(&self) -> &str {
        &self.name
    }

    fn delta_key(&self, key: &str) -> Result<Tensor2> {
        let nk = self.normalize_key(key)?;
        let raw = self.bialgebra_delta(&nk)?;
        let mut out = Tensor2::zero();
        for ((l, r), c) in raw.iter() {
            out.add_term(self.normalize_key(l)?, self.normalize_key(r)?, c.clone());
        }
        Ok(out)
    }

    fn mul_key(&self, a: &str, b: &str) -> Result<Key> {
        let m = self.mul_words(a, b)?;
        self.normalize_key(&m)
    }

    fn degree_key(&self, key: &str) -> Result<usize> {
        self.word_degree(key)
    }

    fn basis_of_degree(&self, degree: usize) -> Result<Vec<Key>> {
        if degree == 0 {
            return Ok(vec![UNIT_KEY.to_string()]);
        }
        let mut out: BTreeSet<Key> = BTreeSet::new();
        for parts in compositions(degree) {
            // Cartesian product of per-part generator lists.
            let mut acc: Vec<Vec<String>> = vec![Vec::new()];
            for &p in &parts {
                let gens = self.coop.generators_of_degree(p).ok_or_else(|| {
                    Error::UnsupportedBasis(format!(
                        "instance `{}` cannot enumerate degree-{p} generators",
                        self.name
                    ))
                })?;
                let mut next = Vec::with_capacity(acc.len() * gens.len());
                for word in &acc {
                    for g in &gens {
                        let mut w = word.clone();
                        w.push(g.clone());
                        next.push(w);
                    }
                }
                acc = next;
            }
            for word in acc {
                out.insert(self.encode(word));
            }
        }
        Ok(out.into_iter().collect())
    }

    fn parse(&self, literal: &str) -> Result<LinComb> {
        let lit = literal.trim();
        if lit == UNIT_KEY {
            return Ok(LinComb::basis(UNIT_KEY.to_string()));
        }
        let mut factors = Vec::new();
        for piece in lit.split(" * ") {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::Parse("empty product factor".into()));
            }
            if piece == UNIT_KEY {
                continue;
            }
            factors.push(self.coop.parse_generator(piece)?);
        }
        let key = self.normalize_key(&self.encode(factors))?;
        Ok(LinComb::basis(key))
    }

    fn display_key(&self, key: &str) -> String {
        match self.factors(key) {
            Ok(fs) if fs.is_empty() => UNIT_KEY.to_string(),
            Ok(fs) => fs
                .iter()
                .map(|f| self.coop.display_generator(f))
                .collect::<Vec<_>>()
                .join(" * "),
            Err(_) => key.to_string(),
        }
    }

    fn validate_key(&self, key: &str) -> Result<()> {
        self.factors(key).map(|_| ())
    }
}

// ---------------------------------------------------------------------------
// Kernel adapters
// ---------------------------------------------------------------------------

/// Coproduct of a linear combination.
pub fn delta_lin(h: &dyn HopfAlgebra, x: &LinComb) -> Result<Tensor2> {
    let mut out = Tensor2::zero();
    for (k, c) in x.iter() {
        let d = h.delta_key(k)?;
        for ((l, r), cd) in d.iter() {
            out.add_term(l.clone(), r.clone(), cd * c);
        }
    }
    Ok(out)
}

/// Reduced coproduct Δ̄(x) = Δ(x) − x⊗1 − 1⊗x on basis keys (0 on the unit).
pub fn reduced_delta_key(h: &dyn HopfAlgebra, key: &str) -> Result<Tensor2> {
    let unit = h.unit_key();
    if key == unit {
        return Ok(Tensor2::zero());
    }
    let mut d = h.delta_key(key)?;
    d.add_term(key.to_string(), unit.clone(), -Coeff::one());
    d.add_term(unit, key.to_string(), -Coeff::one());
    Ok(d)
}

/// Antipode via the kernel series, with the instance's reduced coproduct.
pub fn antipode_in(h: &dyn HopfAlgebra, x: &LinComb, degree_bound: usize) -> Result<LinComb> {
    let rd = |k: &str| reduced_delta_key(h, k);
    let mu = |a: &str, b: &str| Ok(LinComb::basis(h.mul_key(a, b)?));
    kernel::antipode(x, &rd, &mu, &h.unit_key(), degree_bound)
}

/// μ(f ⊗ g)Δ(x) where f and g are `id` or the antipode (by flags), all inside
/// the instance. Used for the Hopf identity μ(S⊗id)Δ = ηε and its mirror.
pub fn convolve_antipode_id(
    h: &dyn HopfAlgebra,
    x: &LinComb,
    antipode_on_left: bool,
    degree_bound: usize,
) -> Result<LinComb> {
    let id = |k: &str| Ok(LinComb::basis(k.to_string()));
    let s = |k: &str| antipode_in(h, &LinComb::basis(k.to_string()), degree_bound);
    let delta = |k: &str| h.delta_key(k);
    let mu = |a: &str, b: &str| Ok(LinComb::basis(h.mul_key(a, b)?));
    if antipode_on_left {
        kernel::convolve(&s, &id, x, &delta, &mu)
    } else {
        kernel::convolve(&id, &s, x, &delta, &mu)
    }
}

/// ηε(x): the counit coefficient times the unit.
pub fn eta_eps(h: &dyn HopfAlgebra, x: &LinComb) -> Result<LinComb> {
    let mut c = Coeff::zero();
    for (k, v) in x.iter() {
        c += h.counit_key(k)? * v;
    }
    Ok(LinComb::single(h.unit_key(), c))
}

/// Coassociativity check inside an instance.
pub fn check_coassoc_in(h: &dyn HopfAlgebra, x: &LinComb) -> Result<bool> {
    let delta = |k: &str| h.delta_key(k);
    kernel::check_coassoc(&delta, x)
}

/// Left and right counit laws: (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x).
pub fn check_counit_laws(h: &dyn HopfAlgebra, x: &LinComb) -> Result<bool> {
    let d = delta_lin(h, x)?;
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((l, r), c) in d.iter() {
        left.add_term(r.clone(), h.counit_key(l)? * c);
        right.add_term(l.clone(), h.counit_key(r)? * c);
    }
    Ok(left == *x && right == *x)
}

/// Coideal membership inside an instance (see [`kernel::coideal_member`]).
pub fn coideal_member_in(
    h: &dyn HopfAlgebra,
    r: &LinComb,
    generators: &[LinComb],
    dimension_cap: Option<usize>,
) -> Result<bool> {
    let delta = |k: &str| h.delta_key(k);
    let mu = |a: &str, b: &str| Ok(LinComb::basis(h.mul_key(a, b)?));
    let degree_of = |k: &str| h.degree_key(k);
    let basis_of = |d: usize| h.basis_of_degree(d);
    let ctx = kernel::GradedHopfContext {
        delta: &delta,
        mu: &mu,
        degree_of: &degree_of,
        basis_of: &basis_of,
        unit_key: h.unit_key(),
        dimension_cap,
    };
    kernel::coideal_member(r, generators, &ctx)
}

// ---------------------------------------------------------------------------
// Registry and cooperad table dumps
// ---------------------------------------------------------------------------

/// Names accepted by [`instance`].
pub fn registry_names() -> Vec<&'static str> {
    vec![
        "words",
        "words-sym",
        "trees-planar",
        "trees-sym",
        "ck",
        "graphs",
        "nerve",
    ]
}

/// Construct a registered instance. `alphabet` applies to the word and nerve
/// instances (default `"01"`); each character is one letter.
pub fn instance(name: &str, alphabet: Option<&str>) -> Result<Box<dyn HopfAlgebra>> {
    let alpha = alphabet.unwrap_or("01");
    match name {
        "words" => Ok(Box::new(crate::words::word_bialgebra(alpha, false)?)),
        "words-sym" => Ok(Box::new(crate::words::word_bialgebra(alpha, true)?)),
        "trees-planar" => Ok(Box::new(crate::trees::tree_bialgebra(true))),
        "trees-sym" => Ok(Box::new(crate::trees::tree_bialgebra(false))),
        "ck" => Ok(Box::new(crate::trees::CkForestAlgebra::new())),
        "graphs" => Ok(Box::new(crate::graphs::GraphAlgebra::new())),
        "nerve" => Ok(Box::new(crate::simplicial::nerve_bialgebra(alpha, 6)?)),
        _ => Err(Error::UnknownInstance {
            name: name.to_string(),
            known: registry_names().join(", "),
        }),
    }
}

/// JSON dump of all decomposition tables up to an arity bound, for golden
/// tests. Requires the instance to enumerate generators by arity.
pub fn cogamma_table_json(coop: &dyn Cooperad, max_arity: usize) -> Result<serde_json::Value> {
    let mut entries = Vec::new();
    for n in 1..=max_arity {
        let gens = coop.generators_of_arity(n).ok_or_else(|| {
            Error::UnsupportedBasis(format!(
                "instance `{}` cannot enumerate arity-{n} generators",
                coop.name()
            ))
        })?;
        for g in gens {
            for parts in compositions(n) {
                let dec = coop.cogamma(&g, &parts)?;
                let terms: Vec<serde_json::Value> = dec
                    .iter()
                    .map(|(slots, c)| {
                        serde_json::json!({
                            "slots": slots,
                            "num": c.numer().to_string(),
                            "den": c.denom().to_string(),
                        })
                    })
                    .collect();
                entries.push(serde_json::json!({
                    "key": g,
                    "arity": n,
                    "parts": parts,
                    "terms": terms,
                }));
            }
        }
    }
    Ok(serde_json::json!({
        "instance": coop.name(),
        "max_arity": max_arity,
        "tables": entries,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::cint;
    use crate::words::word_bialgebra;

    fn wkey(idx: &[usize]) -> String {
        crate::words::word_key(idx)
    }

    fn single(idx: &[usize]) -> Key {
        encode_factors(&[wkey(idx)])
    }

    #[test]
    fn codec_round_trips_and_rejects_garbage() {
        let fs = vec!["w0,1".to_string(), "ab:c".to_string(), String::from("x")];
        let key = encode_factors(&fs);
        assert_eq!(decode_factors(&key).unwrap(), fs);
        assert_eq!(decode_factors(UNIT_KEY).unwrap(), Vec::<String>::new());
        assert!(decode_factors("7:short").is_err());
        assert!(decode_factors("xx").is_err());
    }

    #[test]
    fn free_cogamma_zero_on_non_concatenable_partitions() {
        let h = word_bialgebra("01", false).unwrap();
        // Word of arities (2, 1): factors (a0;a1;a2) and (b0;b1).
        let w = h.mul_words(&single(&[0, 1, 0]), &single(&[1, 1])).unwrap();
        assert!(h.free_nc_cogamma(&w, &[3]).unwrap().is_zero());
        assert!(h.free_nc_cogamma(&w, &[1, 2]).unwrap().is_zero());
        assert!(!h.free_nc_cogamma(&w, &[2, 1]).unwrap().is_zero());
        assert!(!h.free_nc_cogamma(&w, &[1, 1, 1]).unwrap().is_zero());
        // Argument errors.
        assert!(matches!(
            h.free_nc_cogamma(&w, &[2, 2]),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            h.free_nc_cogamma(&w, &[2, 1, 0]),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn free_cogamma_single_factor_matches_underlying_cogamma() {
        let h = word_bialgebra("01", false).unwrap();
        let g = wkey(&[0, 1, 1, 0]);
        for parts in compositions(3) {
            let lifted = h.free_nc_cogamma(&single(&[0, 1, 1, 0]), &parts).unwrap();
            let raw = h.coop.cogamma(&g, &parts).unwrap();
            let mut expect = TensorK::zero();
            for (slots, c) in raw.iter() {
                let enc: Vec<Key> = slots
                    .iter()
                    .map(|s| encode_factors(std::slice::from_ref(s)))
                    .collect();
                expect.add_term(enc, c.clone());
            }
            assert_eq!(lifted, expect, "partition {parts:?}");
        }
    }

    #[test]
    fn delta_on_arity_one_pair_interleaves_left_products() {
        // v, w of arity 1: γ̌(v·w) under (1,1) must produce left factors
        // multiplied and rights in order: (v_L·w_L) ⊗ v_R ⊗ w_R.
        let h = word_bialgebra("01", false).unwrap();
        let v = wkey(&[0, 1]);
        let w = wkey(&[1, 0]);
        let vw = h.mul_words(&single(&[0, 1]), &single(&[1, 0])).unwrap();
        let dec = h.free_nc_cogamma(&vw, &[1, 1]).unwrap();
        let expect = TensorK::single(
            vec![
                encode_factors(&[v.clone(), w.clone()]),
                encode_factors(&[v]),
                encode_factors(&[w]),
            ],
            Coeff::one(),
        );
        assert_eq!(dec, expect);
    }

    #[test]
    fn bialgebra_delta_agrees_with_partition_sum() {
        // Δ(v·w) computed by slotwise multiplication must equal the sum of
        // (id⊗μ) free_nc_cogamma over all compositions.
        let h = word_bialgebra("01", false).unwrap();
        let w = h.mul_words(&single(&[0, 1, 0]), &single(&[1, 1])).unwrap();
        let direct = h.bialgebra_delta(&w).unwrap();
        let mut summed = Tensor2::zero();
        for parts in compositions(h.word_arity(&w).unwrap()) {
            let dec = h.free_nc_cogamma(&w, &parts).unwrap();
            for (slots, c) in dec.iter() {
                let mut right = UNIT_KEY.to_string();
                for s in &slots[1..] {
                    right = h.mul_words(&right, s).unwrap();
                }
                summed.add_term(slots[0].clone(), right, c.clone());
            }
        }
        assert_eq!(direct, summed);
    }

    #[test]
    fn degree_zero_generators_are_group_like_before_quotient() {
        let h = word_bialgebra("01", false).unwrap();
        let g = single(&[0, 1]);
        let d = h.bialgebra_delta(&g).unwrap();
        assert_eq!(d, Tensor2::single(g.clone(), g, Coeff::one()));
    }

    #[test]
    fn quotient_normal_form_deletes_points() {
        let h = word_bialgebra("01", false).unwrap();
        // | · x · | → x with | any degree-0 word.
        let x = single(&[0, 1, 1]);
        let w = h.mul_words(&single(&[0, 0]), &x).unwrap();
        let w = h.mul_words(&w, &single(&[1, 1])).unwrap();
        assert_eq!(h.normalize_key(&w).unwrap(), x);
        // 1 − | → 0.
        let one_minus_point = LinComb::basis(UNIT_KEY.to_string())
            .sub(&LinComb::basis(single(&[0, 0])));
        assert!(h.hopf_quotient_normalize(&one_minus_point).unwrap().is_zero());
    }

    #[test]
    fn q_normal_form_counts_deleted_points() {
        let h = word_bialgebra("01", false).unwrap();
        let x = single(&[0, 1, 1]);
        let w = h.mul_words(&single(&[0, 0]), &x).unwrap();
        let w = h.mul_words(&w, &single(&[1, 1])).unwrap();
        let q = h.normalize_q(&LinComb::basis(w)).unwrap();
        assert_eq!(q.terms.len(), 1);
        let ((e, k), _) = q.terms.iter().next().unwrap();
        assert_eq!(*e, 2);
        assert_eq!(k, &x);
        // Evaluating at q = 1 recovers the plain quotient normal form.
        assert_eq!(q.evaluate(&Coeff::one()), LinComb::basis(x));
        // Evaluating at q = 3 scales by 9.
        assert_eq!(
            q.evaluate(&cint(3)).coeff(&single(&[0, 1, 1])),
            cint(9)
        );
    }

    #[test]
    fn cocirc_worked_example() {
        // On the word (a₀;a₁;a₂) with i = 1:
        //   (a₀;a₂) ⊗ (a₀;a₁;a₂)  +  (a₀;a₁;a₂) ⊗ (a₀;a₁).
        let h = word_bialgebra("01", false).unwrap();
        let g = wkey(&[0, 1, 0]);
        let got = h.cocirc(1, &g).unwrap();
        let mut expect = Tensor2::zero();
        expect.add_term(wkey(&[0, 0]), g.clone(), Coeff::one());
        expect.add_term(g.clone(), wkey(&[0, 1]), Coeff::one());
        assert_eq!(got, expect);
        // i = 2: the only contribution keeps the second single cut.
        let got2 = h.cocirc(2, &g).unwrap();
        let expect2 = Tensor2::single(g.clone(), wkey(&[1, 0]), Coeff::one());
        assert_eq!(got2, expect2);
        // Point generators are group-like for δ: | ↦ |⊗|.
        let p = wkey(&[0, 0]);
        assert_eq!(
            h.cocirc(1, &p).unwrap(),
            Tensor2::single(p.clone(), p.clone(), Coeff::one())
        );
        assert!(matches!(h.cocirc(3, &g), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn co_pre_lie_twisted_product_compatibility() {
        // δ(v·w) = Σ (v⁰·w)⊗v′ + Σ (v·w⁰)⊗w′; the untwisted variant in which
        // right outputs multiply is locked out by the negative control.
        let h = word_bialgebra("01", false).unwrap();
        let v = single(&[0, 1, 0]); // arity 2
        let w = single(&[1, 1]); // arity 1
        let vw = h.mul_words(&v, &w).unwrap();
        let direct = h.co_pre_lie(&vw).unwrap();

        let dv = h.co_pre_lie(&v).unwrap();
        let dw = h.co_pre_lie(&w).unwrap();
        let mut expected = Tensor2::zero();
        for ((v0, v1), c) in dv.iter() {
            expected.add_term(h.mul_words(v0, &w).unwrap(), v1.clone(), c.clone());
        }
        for ((w0, w1), c) in dw.iter() {
            expected.add_term(h.mul_words(&v, w0).unwrap(), w1.clone(), c.clone());
        }
        assert_eq!(direct, expected);

        // Negative control: multiplying the right outputs instead gives a
        // different tensor.
        let mut untwisted = Tensor2::zero();
        for ((v0, v1), c) in dv.iter() {
            untwisted.add_term(v0.clone(), h.mul_words(v1, &w).unwrap(), c.clone());
        }
        for ((w0, w1), c) in dw.iter() {
            untwisted.add_term(h.mul_words(&v, w0).unwrap(), w1.clone(), c.clone());
        }
        assert_ne!(direct, untwisted);
    }

    #[test]
    fn depth_is_word_length_and_observable() {
        let h = word_bialgebra("01", false).unwrap();
        let v = single(&[0, 1, 0]);
        let w = h.mul_words(&v, &single(&[1, 1])).unwrap();
        let w3 = h.mul_words(&w, &single(&[0, 1])).unwrap();
        assert_eq!(h.depth(&v).unwrap(), 1);
        assert_eq!(h.depth(&w).unwrap(), 2);
        assert_eq!(h.depth(&w3).unwrap(), 3);
        assert_eq!(h.depth_observed(&w3).unwrap(), 3);
        // Arity bounds depth.
        assert!(h.depth(&w3).unwrap() <= h.word_arity(&w3).unwrap());
    }

    #[test]
    fn registry_resolves_and_rejects() {
        for name in registry_names() {
            let inst = instance(name, None).unwrap();
            assert_eq!(inst.name(), name);
        }
        let err = match instance("nope", None) {
            Err(e) => e,
            Ok(_) => panic!("expected an unknown-instance error"),
        };
        let msg = err.to_string();
        assert!(msg.contains("registered instances"));
        assert!(msg.contains("trees-planar"));
    }

    #[test]
    fn basis_enumeration_matches_composition_count() {
        let h = word_bialgebra("01", false).unwrap();
        // Degree 2 over a 2-letter alphabet: compositions (2) and (1,1);
        //16 single-factor words of degree 2 plus 8·8 ordered pairs.
        let b = h.basis_of_degree(2).unwrap();
        assert_eq!(b.len(), 16 + 64);
        let hs = word_bialgebra("01", true).unwrap();
        // Symmetric: unordered pairs with repetition: 16 + C(8,2) + 8 = 16 + 36.
        let bs = hs.basis_of_degree(2).unwrap();
        assert_eq!(bs.len(), 16 + 36);
    }

    #[test]
    fn cogamma_table_dump_is_deterministic() {
        let h = word_bialgebra("01", false).unwrap();
        let a = cogamma_table_json(&h.coop, 2).unwrap();
        let b = cogamma_table_json(&h.coop, 2).unwrap();
        assert_eq!(a, b);
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"arity\":2"));
    }
}

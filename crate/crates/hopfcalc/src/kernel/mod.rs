//! Exact linear-algebra substrate: formal linear combinations over opaque
//! basis keys, tensor squares/powers, the convolution algebra, the antipode
//! series, a coassociativity checker, and degreewise coideal-membership
//! decided by fraction-free elimination.
//!
//! Basis keys are canonical byte strings produced by each basis module; the
//! kernel never interprets them. Coefficients are arbitrary-precision
//! rationals stored in lowest terms (`num::BigRational`); everything is
//! exact, there is no floating-point mode.

pub mod elim;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Canonical basis key. Lexicographic byte order is the global column order
/// used by all deterministic eliminations and serializations.
pub type Key = String;

/// Exact rational coefficient, always in lowest terms.
pub type Coeff = BigRational;

/// Coefficient constructors.
pub fn cint(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn cfrac(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Linear endomap on the free module, given on basis keys.
pub type EndoMap<'a> = &'a dyn Fn(&str) -> Result<LinComb>;
/// Coproduct, given on basis keys.
pub type CoprodMap<'a> = &'a dyn Fn(&str) -> Result<Tensor2>;
/// Product of two basis elements.
pub type ProdMap<'a> = &'a dyn Fn(&str, &str) -> Result<LinComb>;

/// Default cap on the number of columns (`dim(left) * dim(right)`) a single
/// bidegree component may occupy during elimination. Overridden by the
/// `HOPFCALC_DEGREE_CAP` environment variable or an explicit argument.
pub const DEFAULT_DIMENSION_CAP: usize = 4_000_000;

/// Resolve the elimination cap: explicit argument, else environment
/// variable, else the built-in default.
pub fn dimension_cap(explicit: Option<usize>) -> usize {
    static ENV_CAP: OnceLock<Option<usize>> = OnceLock::new();
    if let Some(c) = explicit {
        return c;
    }
    ENV_CAP
        .get_or_init(|| {
            std::env::var("HOPFCALC_DEGREE_CAP")
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
        })
        .unwrap_or(DEFAULT_DIMENSION_CAP)
}

// ---------------------------------------------------------------------------
// LinComb
// ---------------------------------------------------------------------------

/// Finite formal sum of basis elements with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Key, Coeff>,
}

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: impl Into<Key>, coeff: Coeff) -> Self {
        let mut t = Self::zero();
        t.add_term(key.into(), coeff);
        t
    }

    /// The basis element `key` with coefficient 1.
    pub fn basis(key: impl Into<Key>) -> Self {
        Self::single(key, Coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Key, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Coeff::one())
    }

    /// Coefficient of `key` (zero when absent).
    pub fn coeff(&self, key: &str) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Coeff)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Key> {
        self.terms.keys()
    }

    /// Apply a linear endomap given on basis keys.
    pub fn apply(&self, f: EndoMap) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let fx = f(k)?;
            for (k2, c2) in fx.iter() {
                out.add_term(k2.clone(), c2 * c);
            }
        }
        Ok(out)
    }

    /// Serialize as `{"terms": [{"key", "num", "den"}]}`, terms sorted by key.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                serde_json::json!({
                    "key": k,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("expected object with a \"terms\" array".into()))?;
        let mut out = Self::zero();
        for item in arr {
            let key = item
                .get("key")
                .and_then(|k| k.as_str())
                .ok_or_else(|| Error::Parse("term without string \"key\"".into()))?;
            let num = item
                .get("num")
                .and_then(|n| n.as_str())
                .ok_or_else(|| Error::Parse("term without string \"num\"".into()))?;
            let den = item
                .get("den")
                .and_then(|d| d.as_str())
                .unwrap_or("1");
            let n: BigInt = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
            let d: BigInt = den
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            out.add_term(key.to_string(), BigRational::new(n, d));
        }
        Ok(out)
    }
}

impl FromIterator<(Key, Coeff)> for LinComb {
    fn from_iter<T: IntoIterator<Item = (Key, Coeff)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Tensor2
// ---------------------------------------------------------------------------

/// Element of the tensor square: finite sum of `left ⊗ right` basis pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(Key, Key), Coeff>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(left: impl Into<Key>, right: impl Into<Key>, coeff: Coeff) -> Self {
        let mut t = Self::zero();
        t.add_term(left.into(), right.into(), coeff);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Key, right: Key, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let k = (left, right);
        let cur = self.terms.remove(&k).unwrap_or_else(Coeff::zero) + coeff;
        if !cur.is_zero() {
            self.terms.insert(k, cur);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// The flip τ(a⊗b) = b⊗a.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Tensor product of two linear combinations.
    pub fn of(a: &LinComb, b: &LinComb) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                out.add_term(ka.clone(), kb.clone(), ca * cb);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Key, Key), &Coeff)> {
        self.terms.iter()
    }

    /// Apply linear maps to the two slots.
    pub fn map_both(&self, f: EndoMap, g: EndoMap) -> Result<Self> {
        let mut out = Self::zero();
        for ((l, r), c) in &self.terms {
            let fl = f(l)?;
            let gr = g(r)?;
            for (kl, cl) in fl.iter() {
                for (kr, cr) in gr.iter() {
                    out.add_term(kl.clone(), kr.clone(), c * cl * cr);
                }
            }
        }
        Ok(out)
    }

    /// Contract with the product: μ(a⊗b) summed over all terms.
    pub fn contract(&self, mu: ProdMap) -> Result<LinComb> {
        let mut out = LinComb::zero();
        for ((l, r), c) in &self.terms {
            let p = mu(l, r)?;
            for (k, cp) in p.iter() {
                out.add_term(k.clone(), cp * c);
            }
        }
        Ok(out)
    }

    /// Serialize as `{"terms": [{"left", "right", "num", "den"}]}` sorted by
    /// (left, right) key pair.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((l, r), c)| {
                serde_json::json!({
                    "left": l,
                    "right": r,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl FromIterator<(Key, Key, Coeff)> for Tensor2 {
    fn from_iter<T: IntoIterator<Item = (Key, Key, Coeff)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (l, r, c) in iter {
            out.add_term(l, r, c);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// TensorK
// ---------------------------------------------------------------------------

/// Element of a k-fold tensor power (k may vary per term only during
/// intermediate reductions; all public producers emit uniform slot counts).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorK {
    terms: BTreeMap<Vec<Key>, Coeff>,
}

impl TensorK {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(slots: Vec<Key>, coeff: Coeff) -> Self {
        let mut t = Self::zero();
        t.add_term(slots, coeff);
        t
    }

    /// The scalar 1 viewed as the empty tensor (0 slots).
    pub fn scalar_one() -> Self {
        Self::single(Vec::new(), Coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, slots: Vec<Key>, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let cur = self.terms.remove(&slots).unwrap_or_else(Coeff::zero) + coeff;
        if !cur.is_zero() {
            self.terms.insert(slots, cur);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Key>, &Coeff)> {
        self.terms.iter()
    }

    /// Tensor-concatenate with another tensor (all slot pairs).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut slots = a.clone();
                slots.extend(b.iter().cloned());
                out.add_term(slots, ca * cb);
            }
        }
        out
    }

    pub fn from_tensor2(t: &Tensor2) -> Self {
        let mut out = Self::zero();
        for ((l, r), c) in t.iter() {
            out.add_term(vec![l.clone(), r.clone()], c.clone());
        }
        out
    }

    /// Collapse a 2-slot tensor back to `Tensor2`.
    pub fn to_tensor2(&self) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (slots, c) in &self.terms {
            if slots.len() != 2 {
                return Err(Error::Validation(format!(
                    "expected 2 tensor slots, found {}",
                    slots.len()
                )));
            }
            out.add_term(slots[0].clone(), slots[1].clone(), c.clone());
        }
        Ok(out)
    }

    /// Replace slot `i` by the image of a key-level map into linear
    /// combinations, distributing over terms.
    pub fn map_slot(&self, i: usize, f: EndoMap) -> Result<Self> {
        let mut out = Self::zero();
        for (slots, c) in &self.terms {
            if i >= slots.len() {
                return Err(Error::IndexOutOfRange(format!(
                    "tensor slot {i} of {}",
                    slots.len()
                )));
            }
            let img = f(&slots[i])?;
            for (k, ck) in img.iter() {
                let mut s = slots.clone();
                s[i] = k.clone();
                out.add_term(s, c * ck);
            }
        }
        Ok(out)
    }

    /// Replace slot `i` by a coproduct image, splicing the two new slots in
    /// place of the old one.
    pub fn split_slot(&self, i: usize, delta: CoprodMap) -> Result<Self> {
        let mut out = Self::zero();
        for (slots, c) in &self.terms {
            if i >= slots.len() {
                return Err(Error::IndexOutOfRange(format!(
                    "tensor slot {i} of {}",
                    slots.len()
                )));
            }
            let img = delta(&slots[i])?;
            for ((l, r), ck) in img.iter() {
                let mut s = Vec::with_capacity(slots.len() + 1);
                s.extend(slots[..i].iter().cloned());
                s.push(l.clone());
                s.push(r.clone());
                s.extend(slots[i + 1..].iter().cloned());
                out.add_term(s, c * ck);
            }
        }
        Ok(out)
    }

    /// Multiply all slots together left-to-right (empty tensor ↦ unit key).
    pub fn fold_mul(&self, mu: ProdMap, unit_key: &str) -> Result<LinComb> {
        let mut out = LinComb::zero();
        for (slots, c) in &self.terms {
            let mut acc = LinComb::basis(if slots.is_empty() {
                unit_key.to_string()
            } else {
                slots[0].clone()
            });
            for k in slots.iter().skip(1) {
                acc = mul_lincomb(&acc, &LinComb::basis(k.clone()), mu)?;
            }
            for (k, ck) in acc.iter() {
                out.add_term(k.clone(), ck * c);
            }
        }
        Ok(out)
    }
}

/// Bilinear extension of the basis-level product to linear combinations.
pub fn mul_lincomb(a: &LinComb, b: &LinComb, mu: ProdMap) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let p = mu(ka, kb)?;
            for (k, c) in p.iter() {
                out.add_term(k.clone(), c * ca * cb);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Convolution, antipode, coassociativity
// ---------------------------------------------------------------------------

/// Convolution product of two endomaps evaluated at `x`:  μ∘(f⊗g)∘Δ(x).
pub fn convolve(
    f: EndoMap,
    g: EndoMap,
    x: &LinComb,
    delta: CoprodMap,
    mu: ProdMap,
) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        let d = delta(k)?;
        let mapped = d.map_both(f, g)?;
        let m = mapped.contract(mu)?;
        for (k2, c2) in m.iter() {
            out.add_term(k2.clone(), c2 * c);
        }
    }
    Ok(out)
}

/// Antipode by the geometric series
/// `S(x) = Σ_{n≥0} (−1)^{n+1} μ^n ∘ Δ̄^n (x̄)`,
/// applied to the augmentation-ideal part x̄ of x (the unit component is
/// fixed). `reduced_delta` must be the reduced coproduct
/// Δ̄(y) = Δ(y) − y⊗1 − 1⊗y on basis keys of positive degree and 0 on the
/// unit; the series terminates on conilpotent (connected graded) coalgebras.
pub fn antipode(
    x: &LinComb,
    reduced_delta: CoprodMap,
    mu: ProdMap,
    unit_key: &str,
    degree_bound: usize,
) -> Result<LinComb> {
    // Split off the coefficient of the unit.
    let unit_coeff = x.coeff(unit_key);
    let mut bar = x.clone();
    bar.add_term(unit_key.to_string(), -unit_coeff.clone());

    let mut out = LinComb::single(unit_key.to_string(), unit_coeff);

    // n = 0 term: −x̄.
    let mut sign_positive = false; // (−1)^{n+1} with n = 0
    let mut current = TensorK::zero();
    for (k, c) in bar.iter() {
        current.add_term(vec![k.clone()], c.clone());
    }

    let mut n = 0usize;
    loop {
        if current.is_zero() {
            break;
        }
        if n > degree_bound {
            return Err(Error::NotConilpotent(degree_bound));
        }
        let folded = current.fold_mul(mu, unit_key)?;
        let signed = if sign_positive { folded } else { folded.neg() };
        out = out.add(&signed);

        // Next iterate: apply Δ̄ to the last slot.
        let last = match current.iter().next() {
            Some((slots, _)) => slots.len() - 1,
            None => break,
        };
        current = current.split_slot(last, reduced_delta)?;
        sign_positive = !sign_positive;
        n += 1;
    }
    Ok(out)
}

/// Check (Δ⊗id)Δ(x) = (id⊗Δ)Δ(x) by expanding both triple tensors.
pub fn check_coassoc(delta: CoprodMap, x: &LinComb) -> Result<bool> {
    let mut d = TensorK::zero();
    for (k, c) in x.iter() {
        let t = delta(k)?;
        for ((l, r), ct) in t.iter() {
            d.add_term(vec![l.clone(), r.clone()], c * ct);
        }
    }
    let lhs = d.split_slot(0, delta)?;
    let rhs = d.split_slot(1, delta)?;
    Ok(lhs == rhs)
}

// ---------------------------------------------------------------------------
// Coideal membership
// ---------------------------------------------------------------------------

/// Everything `coideal_member` needs to know about the hosting graded
/// bialgebra: coproduct, product, degrees, finite graded bases, the unit.
pub struct GradedHopfContext<'a> {
    pub delta: CoprodMap<'a>,
    pub mu: ProdMap<'a>,
    pub degree_of: &'a dyn Fn(&str) -> Result<usize>,
    pub basis_of: &'a dyn Fn(usize) -> Result<Vec<Key>>,
    pub unit_key: Key,
    /// Column cap per bidegree; `None` uses the environment/default cap.
    pub dimension_cap: Option<usize>,
}

/// Decide whether `Δ(r) ∈ I⊗H + H⊗I` degreewise, where `I` is the two-sided
/// ideal generated by `generators` (each homogeneous). This is the obstruction
/// for the quotient by the relations to inherit the coproduct.
///
/// The decision runs per bidegree (p, q) with p + q = deg r: the component
/// Δ(r)_{p,q} is reduced modulo I_p on the left; the remainder must have all
/// its right-hand coordinates in I_q. Elimination is fraction-free with
/// lexicographic basis-key column order.
pub fn coideal_member(
    r: &LinComb,
    generators: &[LinComb],
    ctx: &GradedHopfContext,
) -> Result<bool> {
    if r.is_zero() {
        return Ok(true);
    }
    let deg = homogeneous_degree(r, ctx.degree_of)?;
    let cap = dimension_cap(ctx.dimension_cap);

    // Degrees of the homogeneous generators.
    let mut gens: Vec<(usize, &LinComb)> = Vec::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        gens.push((homogeneous_degree(g, ctx.degree_of)?, g));
    }

    // Full coproduct of r, bucketed by left-degree.
    let dr = {
        let mut t = Tensor2::zero();
        for (k, c) in r.iter() {
            let d = (ctx.delta)(k)?;
            for ((l, rr), cd) in d.iter() {
                t.add_term(l.clone(), rr.clone(), cd * c);
            }
        }
        t
    };

    for p in 0..=deg {
        let q = deg - p;
        let basis_p = (ctx.basis_of)(p)?;
        let basis_q = (ctx.basis_of)(q)?;
        if basis_p.len().saturating_mul(basis_q.len()) > cap {
            return Err(Error::DegreeCapExceeded {
                needed: basis_p.len() * basis_q.len(),
                cap,
            });
        }

        // Component of Δ(r) in bidegree (p, q).
        let mut component = Tensor2::zero();
        for ((l, rr), c) in dr.iter() {
            if (ctx.degree_of)(l)? == p {
                debug_assert_eq!((ctx.degree_of)(rr)?, q, "coproduct must preserve degree");
                component.add_term(l.clone(), rr.clone(), c.clone());
            }
        }
        if component.is_zero() {
            continue;
        }

        let ideal_p = ideal_component(&gens, p, ctx)?;
        let ideal_q = ideal_component(&gens, q, ctx)?;

        let mut space_p = elim::RowSpace::new();
        for v in &ideal_p {
            space_p.insert(elim::clear_denominators(v.iter()));
        }
        let mut space_q = elim::RowSpace::new();
        for v in &ideal_q {
            space_q.insert(elim::clear_denominators(v.iter()));
        }

        // Reduce each right-keyed column vector modulo I_p, then require the
        // surviving left-coordinates to pair with right vectors inside I_q.
        // component = Σ_b c_b ⊗ b over right basis keys b.
        let mut columns: BTreeMap<Key, LinComb> = BTreeMap::new();
        for ((l, rr), c) in component.iter() {
            columns
                .entry(rr.clone())
                .or_insert_with(LinComb::zero)
                .add_term(l.clone(), c.clone());
        }

        // Remainders: for each right key b, ρ_b with λ_b·c_b ≡ ρ_b (mod I_p).
        // Regroup Σ_b (ρ_b/λ_b)⊗b by surviving left key a: w_a = Σ_b (ρ_b[a]/λ_b)·b.
        let mut regrouped: BTreeMap<Key, LinComb> = BTreeMap::new();
        for (b, cb) in &columns {
            let (rho, lambda) = space_p.reduce_tracked(elim::clear_denominators(cb.iter()));
            let lam = BigRational::from_integer(lambda);
            for (a, coeff_int) in rho {
                let coeff = BigRational::from_integer(coeff_int) / &lam;
                regrouped
                    .entry(a)
                    .or_insert_with(LinComb::zero)
                    .add_term(b.clone(), coeff);
            }
        }
        for (_a, w) in regrouped {
            if w.is_zero() {
                continue;
            }
            if !space_q.contains(elim::clear_denominators(w.iter())) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Spanning set of the two-sided ideal's degree-`p` component: all products
/// a·g·b with a, b basis elements and g a generator, total degree p.
fn ideal_component(
    gens: &[(usize, &LinComb)],
    p: usize,
    ctx: &GradedHopfContext,
) -> Result<Vec<LinComb>> {
    let mut out = Vec::new();
    for (dg, g) in gens {
        if *dg > p {
            continue;
        }
        let rest = p - dg;
        for pa in 0..=rest {
            let pb = rest - pa;
            let basis_a = (ctx.basis_of)(pa)?;
            let basis_b = (ctx.basis_of)(pb)?;
            for a in &basis_a {
                let ag = mul_lincomb(&LinComb::basis(a.clone()), g, ctx.mu)?;
                for b in &basis_b {
                    let agb = mul_lincomb(&ag, &LinComb::basis(b.clone()), ctx.mu)?;
                    if !agb.is_zero() {
                        out.push(agb);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Degree of a homogeneous linear combination; errors when terms disagree.
pub fn homogeneous_degree(x: &LinComb, degree_of: &dyn Fn(&str) -> Result<usize>) -> Result<usize> {
    let mut deg: Option<usize> = None;
    for (k, _) in x.iter() {
        let d = degree_of(k)?;
        match deg {
            None => deg = Some(d),
            Some(d0) if d0 == d => {}
            Some(d0) => {
                return Err(Error::Validation(format!(
                    "inhomogeneous input: degrees {d0} and {d} both occur"
                )))
            }
        }
    }
    deg.ok_or_else(|| Error::Validation("empty input has no degree".into()))
}

// ---------------------------------------------------------------------------
// Tests: a divided-power binomial toy Hopf algebra exercises every kernel op
// with frozen expected values before any combinatorial instance exists.
// ---------------------------------------------------------------------------

//! Monotone maps of finite ordinals, the splice and little-ordinals operads,
//! Joyal duality, semi-simplicial sets, and the bialgebra of a
//! semi-simplicial set.
//!
//! Two flavors of monotone map appear. An *interval* map [m] → [n] is
//! defined on the ordinals-with-endpoints {0,…,m} → {0,…,n} and preserves
//! both endpoints; an *ordinal* map n̄ → m̄ is any monotone map of the
//! n-element total order into the m-element one. Joyal duality exchanges
//! the two flavors contravariantly.
//!
//! Everything is 0-indexed: a map is stored as its value list, and the
//! duality reads ψ(i) = min{ j : φ(j) ≥ i+1 } − 1 with inverse
//! φ(j) = #{ i : ψ(i) < j }.

use std::collections::BTreeMap;

use num::One;

use crate::cooperad::{Cooperad, FreeBialgebra};
use crate::error::{Error, Result};
use crate::kernel::{Coeff, Key, Tensor2, TensorK};
use crate::words::Alphabet;

// ---------------------------------------------------------------------------
// Monotone maps of finite ordinals
// ---------------------------------------------------------------------------

/// Which category a map lives in; the Joyal dual swaps the two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// Ordinal-with-endpoints [m] → [n], endpoint-preserving.
    Interval,
    /// Plain monotone map of an n-element order into an m-element one.
    Ordinal,
}

/// A monotone map stored by its value list; `source` and `target` are the
/// element counts of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdMap {
    pub kind: MapKind,
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl OrdMap {
    fn check(kind: MapKind, source: usize, target: usize, values: &[usize]) -> Result<()> {
        if values.len() != source {
            return Err(Error::Validation(format!(
                "map lists {} values for a source of {} elements",
                values.len(),
                source
            )));
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(Error::Validation(format!(
                    "values {:?} are not monotone",
                    values
                )));
            }
        }
        if let Some(&last) = values.last() {
            if last >= target {
                return Err(Error::Validation(format!(
                    "value {last} outside a target of {target} elements"
                )));
            }
        }
        if kind == MapKind::Interval {
            if source == 0 || target == 0 {
                return Err(Error::Validation(
                    "an interval map needs nonempty source and target".into(),
                ));
            }
            if values[0] != 0 || values[source - 1] != target - 1 {
                return Err(Error::Validation(format!(
                    "interval map {values:?} must preserve both endpoints of [0,{}]",
                    target - 1
                )));
            }
        }
        Ok(())
    }

    /// Endpoint-preserving map [m] → [n]; sizes are m+1 and n+1.
    pub fn interval(target_size: usize, values: Vec<usize>) -> Result<Self> {
        Self::check(MapKind::Interval, values.len(), target_size, &values)?;
        Ok(OrdMap { kind: MapKind::Interval, source: values.len(), target: target_size, values })
    }

    /// Plain monotone map into a `target_size`-element order.
    pub fn ordinal(target_size: usize, values: Vec<usize>) -> Result<Self> {
        Self::check(MapKind::Ordinal, values.len(), target_size, &values)?;
        Ok(OrdMap { kind: MapKind::Ordinal, source: values.len(), target: target_size, values })
    }

    pub fn identity(kind: MapKind, size: usize) -> Self {
        OrdMap { kind, source: size, target: size, values: (0..size).collect() }
    }

    pub fn is_endpoint_preserving(&self) -> bool {
        self.source > 0
            && self.target > 0
            && self.values[0] == 0
            && self.values[self.source - 1] == self.target - 1
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn apply(&self, i: usize) -> Result<usize> {
        self.values
            .get(i)
            .copied()
            .ok_or_else(|| Error::IndexOutOfRange(format!("{i} in a {}-element source", self.source)))
    }

    /// self ∘ other (apply `other` first). Kinds and sizes must agree.
    pub fn compose(&self, other: &OrdMap) -> Result<OrdMap> {
        if self.kind != other.kind {
            return Err(Error::Validation("composing maps of different kinds".into()));
        }
        if other.target != self.source {
            return Err(Error::Validation(format!(
                "composition size mismatch: {} then {}",
                other.target, self.source
            )));
        }
        let values: Vec<usize> = other.values.iter().map(|&v| self.values[v]).collect();
        Ok(OrdMap { kind: self.kind, source: other.source, target: self.target, values })
    }
}

/// The contravariant bijection between endpoint-preserving maps [m] → [n]
/// and plain monotone maps n̄ → m̄: ψ(i) = min{ j : φ(j) ≥ i+1 } − 1, with
/// inverse φ(j) = #{ i : ψ(i) < j }. Applying it twice is the identity
/// and dual(g ∘ f) = dual(f) ∘ dual(g).
pub fn joyal_dual(f: &OrdMap) -> Result<OrdMap> {
    match f.kind {
        MapKind::Interval => {
            if !f.is_endpoint_preserving() {
                return Err(Error::Validation(format!(
                    "map {:?} is not endpoint-preserving",
                    f.values
                )));
            }
            let m = f.source - 1;
            let n = f.target - 1;
            let mut values = Vec::with_capacity(n);
            for i in 0..n {
                let j = f
                    .values
                    .iter()
                    .position(|&v| v >= i + 1)
                    .expect("an endpoint-preserving map attains the top");
                values.push(j - 1);
            }
            OrdMap::ordinal(m, values)
        }
        MapKind::Ordinal => {
            let n = f.source;
            let m = f.target;
            let values: Vec<usize> = (0..=m)
                .map(|j| f.values.iter().filter(|&&v| v < j).count())
                .collect();
            OrdMap::interval(n + 1, values)
        }
    }
}

/// Splice [n] into [m] at position i (1 ≤ i ≤ m): the two legs of the
/// induced functor [m] ⊔ [n] → [m+n−1]. The [m]-leg keeps 0..i−1 and shifts
/// the rest up by n−1; the [n]-leg lands on i−1..i−1+n.
pub fn simplex_compose(m: usize, i: usize, n: usize) -> Result<(OrdMap, OrdMap)> {
    if i < 1 || i > m {
        return Err(Error::IndexOutOfRange(format!(
            "splice position {i} for [{m}]"
        )));
    }
    let target = m + n; // element count of [m+n−1]
    let m_leg: Vec<usize> = (0..=m).map(|l| if l < i { l } else { l + n - 1 }).collect();
    let n_leg: Vec<usize> = (0..=n).map(|l| i - 1 + l).collect();
    Ok((OrdMap::ordinal(target, m_leg)?, OrdMap::ordinal(target, n_leg)?))
}

/// The little-ordinals structure map for parts (m₁,…,m_k), mᵢ ≥ 0: the
/// coarse map γ⁰: [k] → [n] through the partial sums, and for each r the
/// block inclusion γʳ: [mᵣ] → [n] onto the r-th consecutive block.
pub fn little_ordinals_gamma(parts: &[usize]) -> Result<(OrdMap, Vec<OrdMap>)> {
    let n: usize = parts.iter().sum();
    let mut psum = Vec::with_capacity(parts.len() + 1);
    psum.push(0usize);
    for &p in parts {
        psum.push(psum.last().unwrap() + p);
    }
    let gamma0 = OrdMap::interval(n + 1, psum.clone())?;
    let blocks = (1..=parts.len())
        .map(|r| OrdMap::ordinal(n + 1, (psum[r - 1]..=psum[r]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok((gamma0, blocks))
}

// ---------------------------------------------------------------------------
// Semi-simplicial sets
// ---------------------------------------------------------------------------

/// A finite semi-simplicial set: generator names per dimension and total
/// face tables dᵢ: X_d → X_{d−1}, 0 ≤ i ≤ d, satisfying dᵢdⱼ = dⱼ₋₁dᵢ for
/// i < j (checked at construction).
#[derive(Clone, Debug)]
pub struct SemiSimplicialSet {
    pub name: String,
    generators: Vec<Vec<String>>,
    faces: BTreeMap<(usize, usize), BTreeMap<String, String>>,
}

impl SemiSimplicialSet {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Vec<String>>,
        faces: BTreeMap<(usize, usize), BTreeMap<String, String>>,
    ) -> Result<Self> {
        let x = SemiSimplicialSet { name: name.into(), generators, faces };
        for (d, gens) in x.generators.iter().enumerate() {
            for (i, g) in gens.iter().enumerate() {
                if gens[..i].contains(g) {
                    return Err(Error::Validation(format!(
                        "generator `{g}` repeated in dimension {d}"
                    )));
                }
            }
        }
        for d in 1..x.generators.len() {
            for g in &x.generators[d] {
                for i in 0..=d {
                    let img = x.face(d, i, g)?;
                    if !x.generators[d - 1].iter().any(|h| h == img) {
                        return Err(Error::Validation(format!(
                            "face d_{i}({g}) = `{img}` is not a generator of dimension {}",
                            d - 1
                        )));
                    }
                }
            }
        }
        // dᵢdⱼ = dⱼ₋₁dᵢ for i < j on every generator of dimension ≥ 2.
        for d in 2..x.generators.len() {
            for g in &x.generators[d] {
                for j in 1..=d {
                    for i in 0..j {
                        let lhs = x.face(d - 1, i, x.face(d, j, g)?)?;
                        let rhs = x.face(d - 1, j - 1, x.face(d, i, g)?)?;
                        if lhs != rhs {
                            return Err(Error::Validation(format!(
                                "simplicial identity fails on `{g}`: d_{i} d_{j} = `{lhs}` but d_{} d_{i} = `{rhs}`",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(x)
    }

    /// Highest dimension carrying generators.
    pub fn dims(&self) -> usize {
        self.generators.len().saturating_sub(1)
    }

    pub fn generators_of_dim(&self, d: usize) -> &[String] {
        self.generators.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn face(&self, d: usize, i: usize, gen: &str) -> Result<&str> {
        self.faces
            .get(&(d, i))
            .and_then(|t| t.get(gen))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::Validation(format!("no face entry d_{i} on `{gen}` in dimension {d}"))
            })
    }

    /// The restriction x_{(A)} of a dim-`d` generator to the vertex subset
    /// `keep` (strictly increasing, nonempty): apply d_t for every omitted
    /// t, largest first. The result has dimension |A| − 1.
    pub fn restrict(&self, d: usize, gen: &str, keep: &[usize]) -> Result<(usize, String)> {
        if keep.is_empty() || keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadPartition(format!(
                "vertex subset {keep:?} must be nonempty and strictly increasing"
            )));
        }
        if *keep.last().unwrap() > d {
            return Err(Error::IndexOutOfRange(format!(
                "vertex {} of a {d}-simplex",
                keep.last().unwrap()
            )));
        }
        let mut cur = gen.to_string();
        let mut cur_d = d;
        for t in (0..=d).rev() {
            if !keep.contains(&t) {
                cur = self.face(cur_d, t, &cur)?.to_string();
                cur_d -= 1;
            }
        }
        Ok((cur_d, cur))
    }

    /// The nerve of the contractible groupoid on an alphabet, up to
    /// dimension `dims`: X_d = words of d+1 letters, dᵢ omits the i-th.
    pub fn nerve(alphabet: &str, dims: usize) -> Result<Self> {
        let ab = Alphabet::new(alphabet)?;
        let letters: Vec<char> = (0..ab.len()).map(|i| ab.symbol(i)).collect::<Result<_>>()?;
        let mut generators: Vec<Vec<String>> = Vec::with_capacity(dims + 1);
        let mut level: Vec<String> = vec![String::new()];
        for _ in 0..=dims {
            level = level
                .iter()
                .flat_map(|w| {
                    letters.iter().map(move |&c| {
                        let mut x = w.clone();
                        x.push(c);
                        x
                    })
                })
                .collect();
            generators.push(level.clone());
        }
        let mut faces: BTreeMap<(usize, usize), BTreeMap<String, String>> = BTreeMap::new();
        for d in 1..=dims {
            for i in 0..=d {
                let table: BTreeMap<String, String> = generators[d]
                    .iter()
                    .map(|w| {
                        let img: String = w
                            .chars()
                            .enumerate()
                            .filter_map(|(k, c)| (k != i).then_some(c))
                            .collect();
                        (w.clone(), img)
                    })
                    .collect();
                faces.insert((d, i), table);
            }
        }
        SemiSimplicialSet::new(format!("nerve({alphabet})"), generators, faces)
    }

    /// Load from `{"name"?, "generators": [[..dim 0..], [..dim 1..], …],
    /// "faces": {"d,i": {gen: image}}}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("semi-simplicial JSON must be an object".into()))?;
        let name = obj
            .get("name")
            .and_then(|x| x.as_str())
            .unwrap_or("sset")
            .to_string();
        let gens_json = obj
            .get("generators")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("needs a `generators` array of arrays".into()))?;
        let mut generators: Vec<Vec<String>> = Vec::with_capacity(gens_json.len());
        for level in gens_json {
            let names = level
                .as_array()
                .ok_or_else(|| Error::Parse("each `generators` entry must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("generator names must be strings".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            generators.push(names);
        }
        let mut faces: BTreeMap<(usize, usize), BTreeMap<String, String>> = BTreeMap::new();
        if let Some(fobj) = obj.get("faces") {
            let fobj = fobj
                .as_object()
                .ok_or_else(|| Error::Parse("`faces` must be an object".into()))?;
            for (k, table) in fobj {
                let (ds, is) = k
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("face key `{k}` must be `d,i`")))?;
                let d: usize = ds
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dimension in face key `{k}`")))?;
                let i: usize = is
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index in face key `{k}`")))?;
                let table = table
                    .as_object()
                    .ok_or_else(|| Error::Parse(format!("face table `{k}` must be an object")))?
                    .iter()
                    .map(|(g, img)| {
                        img.as_str()
                            .map(|s| (g.clone(), s.to_string()))
                            .ok_or_else(|| Error::Parse("face images must be strings".into()))
                    })
                    .collect::<Result<BTreeMap<_, _>>>()?;
                faces.insert((d, i), table);
            }
        }
        SemiSimplicialSet::new(name, generators, faces)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let faces: serde_json::Map<String, serde_json::Value> = self
            .faces
            .iter()
            .map(|((d, i), table)| {
                let t: serde_json::Map<String, serde_json::Value> = table
                    .iter()
                    .map(|(g, img)| (g.clone(), serde_json::json!(img)))
                    .collect();
                (format!("{d},{i}"), serde_json::Value::Object(t))
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "generators": self.generators,
            "faces": faces,
        })
    }
}

// ---------------------------------------------------------------------------
// The simplicial cooperad and the bialgebra of a semi-simplicial set
// ---------------------------------------------------------------------------

/// Keys are `s<dim>:<name>`; a dim-n generator has arity n and degree n−1.
pub struct SimplicialCooperad {
    pub space: SemiSimplicialSet,
}

pub fn simplex_key(dim: usize, name: &str) -> Key {
    format!("s{dim}:{name}")
}

fn parse_simplex_key(key: &str) -> Result<(usize, &str)> {
    let body = key
        .strip_prefix('s')
        .ok_or_else(|| Error::Parse(format!("simplex key `{key}` must start with `s`")))?;
    let (d, name) = body
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("simplex key `{key}` must be `s<dim>:<name>`")))?;
    let dim = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension in simplex key `{key}`")))?;
    Ok((dim, name))
}

impl SimplicialCooperad {
    fn lookup(&self, key: &str) -> Result<(usize, String)> {
        let (dim, name) = parse_simplex_key(key)?;
        if dim == 0 {
            return Err(Error::Validation(
                "dimension-0 simplices carry no operadic inputs".into(),
            ));
        }
        if !self.space.generators_of_dim(dim).iter().any(|g| g == name) {
            return Err(Error::Validation(format!(
                "`{name}` is not a dimension-{dim} generator of {}",
                self.space.name
            )));
        }
        Ok((dim, name.to_string()))
    }
}

impl Cooperad for SimplicialCooperad {
    fn name(&self) -> &str {
        "simplicial"
    }

    fn arity(&self, key: &str) -> Result<usize> {
        Ok(self.lookup(key)?.0)
    }

    fn hopf_degree(&self, key: &str) -> Result<usize> {
        Ok(self.lookup(key)?.0 - 1)
    }

    /// γ̌ restricts to the partial-sum vertices on the left and to the
    /// consecutive blocks on the right.
    fn cogamma(&self, key: &str, parts: &[usize]) -> Result<TensorK> {
        let (dim, name) = self.lookup(key)?;
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::BadPartition(format!(
                "parts {parts:?} must all be positive"
            )));
        }
        if parts.iter().sum::<usize>() != dim {
            return Err(Error::BadPartition(format!(
                "parts {parts:?} do not sum to the dimension {dim}"
            )));
        }
        let mut psum = vec![0usize];
        for &p in parts {
            psum.push(psum.last().unwrap() + p);
        }
        let mut slots = Vec::with_capacity(parts.len() + 1);
        let (d0, coarse) = self.space.restrict(dim, &name, &psum)?;
        slots.push(simplex_key(d0, &coarse));
        for r in 1..psum.len() {
            let block: Vec<usize> = (psum[r - 1]..=psum[r]).collect();
            let (dr, piece) = self.space.restrict(dim, &name, &block)?;
            slots.push(simplex_key(dr, &piece));
        }
        Ok(TensorK::single(slots, Coeff::one()))
    }

    fn counit_eps1(&self, key: &str) -> Result<Coeff> {
        let (dim, _) = self.lookup(key)?;
        if dim != 1 {
            return Err(Error::CounitRequired(format!(
                "counit evaluated on arity-{dim} simplex `{key}`"
            )));
        }
        Ok(Coeff::one())
    }

    fn point(&self) -> Option<Key> {
        None
    }

    fn generators_of_arity(&self, n: usize) -> Option<Vec<Key>> {
        if n == 0 {
            return Some(Vec::new());
        }
        Some(
            self.space
                .generators_of_dim(n)
                .iter()
                .map(|g| simplex_key(n, g))
                .collect(),
        )
    }

    fn generators_of_degree(&self, d: usize) -> Option<Vec<Key>> {
        self.generators_of_arity(d + 1)
    }

    fn parse_generator(&self, literal: &str) -> Result<Key> {
        let lit = literal.trim();
        if lit.starts_with('s') && lit.contains(':') {
            let (dim, name) = parse_simplex_key(lit)?;
            let key = simplex_key(dim, name);
            self.validate_key(&key)?;
            return Ok(key);
        }
        // A bare generator name: look it up in positive dimensions.
        for d in 1..=self.space.dims() {
            if self.space.generators_of_dim(d).iter().any(|g| g == lit) {
                return Ok(simplex_key(d, lit));
            }
        }
        Err(Error::Parse(format!(
            "`{lit}` is not a positive-dimension generator of {}",
            self.space.name
        )))
    }

    fn display_generator(&self, key: &str) -> String {
        key.to_string()
    }

    fn validate_key(&self, key: &str) -> Result<()> {
        self.lookup(key).map(|_| ())
    }
}

/// The bialgebra B(X): the free construction on the simplicial cooperad,
/// non-symmetric (tensor words of simplices in order).
pub fn sset_bialgebra(space: SemiSimplicialSet) -> FreeBialgebra<SimplicialCooperad> {
    let name = format!("B({})", space.name);
    FreeBialgebra::new(SimplicialCooperad { space }, false, name)
}

/// The nerve preset over an alphabet, up to the given dimension.
pub fn nerve_bialgebra(
    alphabet: &str,
    dims: usize,
) -> Result<FreeBialgebra<SimplicialCooperad>> {
    let space = SemiSimplicialSet::nerve(alphabet, dims)?;
    Ok(FreeBialgebra::new(SimplicialCooperad { space }, false, "nerve"))
}

/// Δ of a single generator in B(X): all ways to cut the vertex interval,
/// coarse restriction on the left, product of the pieces on the right.
pub fn baues_bialgebra_delta(
    space: &SemiSimplicialSet,
    dim: usize,
    name: &str,
) -> Result<Tensor2> {
    let b = sset_bialgebra(space.clone());
    let key = b.coop.parse_generator(&simplex_key(dim, name))?;
    b.bialgebra_delta(&crate::cooperad::encode_factors(&[key]))
}

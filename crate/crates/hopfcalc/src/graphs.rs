//! Graphs with flags: the (V, F, ι, ∂) data model, insertion composition,
//! the subgraph/contraction coproduct, and the 1-PI and motic predicates.
//!
//! A graph is a vertex count plus a list of flags (half-edges); a flag
//! carries the vertex it is attached to, an optional partner flag (the
//! other half of an internal edge; partnerless flags are tails), an
//! optional rational mass (equal on both halves of an edge), and an
//! optional momentum decoration on tails (an opaque token or the ∅ marker —
//! only the ∅ / non-∅ distinction ever matters).
//!
//! Canonical keys: each connected component is serialized under the
//! vertex labeling that minimizes the serialization, searched exhaustively
//! inside color-refinement classes for components with at most 8 flags;
//! larger components keep their labeled identity. A (multi-component)
//! graph key is the sorted tensor word of its component keys, so disjoint
//! union is concatenation.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;

use crate::cooperad::{decode_factors, encode_factors, HopfAlgebra, UNIT_KEY};
use crate::error::{Error, Result};
use crate::kernel::{Coeff, Key, LinComb, Tensor2};

/// Tail decoration: an opaque momentum token or the ∅ marker.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Momentum {
    Empty,
    Token(String),
}

/// A half-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub vertex: usize,
    pub partner: Option<usize>,
    pub mass: Option<Coeff>,
    pub momentum: Option<Momentum>,
}

/// A graph: `n_vertices` vertices indexed from 0 and a list of flags.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    pub n_vertices: usize,
    pub flags: Vec<Flag>,
}

impl Graph {
    pub fn new(n_vertices: usize) -> Self {
        Graph { n_vertices, flags: Vec::new() }
    }

    /// Append an undecorated edge between `u` and `v` (a loop when u = v).
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_edge_mass(u, v, None);
    }

    /// Append an edge carrying a mass.
    pub fn add_edge_mass(&mut self, u: usize, v: usize, mass: Option<Coeff>) {
        let i = self.flags.len();
        self.flags.push(Flag { vertex: u, partner: Some(i + 1), mass: mass.clone(), momentum: None });
        self.flags.push(Flag { vertex: v, partner: Some(i), mass, momentum: None });
    }

    /// Append a tail at `v`, optionally decorated.
    pub fn add_tail(&mut self, v: usize, mass: Option<Coeff>, momentum: Option<Momentum>) {
        self.flags.push(Flag { vertex: v, partner: None, mass, momentum });
    }

    /// Structural invariants: ∂ total, ι a fixed-point-free-on-pairs
    /// involution, edge halves share the mass, momentum only on tails.
    pub fn validate(&self) -> Result<()> {
        for (i, f) in self.flags.iter().enumerate() {
            if f.vertex >= self.n_vertices {
                return Err(Error::Validation(format!(
                    "flag {i} attached to vertex {} of {}",
                    f.vertex, self.n_vertices
                )));
            }
            if let Some(j) = f.partner {
                let g = self.flags.get(j).ok_or_else(|| {
                    Error::Validation(format!("flag {i} partnered to missing flag {j}"))
                })?;
                if j == i {
                    return Err(Error::Validation(format!("flag {i} partnered to itself")));
                }
                if g.partner != Some(i) {
                    return Err(Error::Validation(format!(
                        "involution not symmetric between flags {i} and {j}"
                    )));
                }
                if g.mass != f.mass {
                    return Err(Error::Validation(format!(
                        "halves of edge ({i},{j}) carry different masses"
                    )));
                }
                if f.momentum.is_some() {
                    return Err(Error::Validation(format!(
                        "flag {i} is internal but carries a momentum"
                    )));
                }
            }
            if let Some(Momentum::Token(t)) = &f.momentum {
                if t.contains(';') || t.contains(',') {
                    return Err(Error::Validation(format!(
                        "momentum token `{t}` contains a reserved character"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Edges as flag-index pairs (i, partner) with i < partner.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match f.partner {
                Some(j) if i < j => Some((i, j)),
                _ => None,
            })
            .collect()
    }

    /// Flag indices of tails, in flag order.
    pub fn tails(&self) -> Vec<usize> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, f)| if f.partner.is_none() { Some(i) } else { None })
            .collect()
    }

    pub fn n_edges(&self) -> usize {
        self.edges().len()
    }

    /// All edges carry a mass and all tails carry a momentum (or ∅).
    pub fn is_decorated(&self) -> bool {
        self.flags.iter().all(|f| {
            if f.partner.is_some() {
                f.mass.is_some()
            } else {
                f.momentum.is_some()
            }
        })
    }
}

// ---------------------------------------------------------------------------
// Betti numbers and bridges
// ---------------------------------------------------------------------------

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the union merged two distinct classes.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// (b₀, b₁): components by union-find over edges, b₁ = |E| − |V| + b₀.
pub fn betti(g: &Graph) -> (usize, usize) {
    let mut uf = UnionFind::new(g.n_vertices);
    let mut merges = 0usize;
    for (i, j) in g.edges() {
        if uf.union(g.flags[i].vertex, g.flags[j].vertex) {
            merges += 1;
        }
    }
    let b0 = g.n_vertices - merges;
    let b1 = g.n_edges() + b0 - g.n_vertices;
    (b0, b1)
}

/// Bridges (cut edges), as flag-index pairs, by depth-first low-links with
/// per-edge (not per-vertex) back-edge skipping, so parallel edges and loops
/// are never bridges.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n_vertices];
    for (eid, &(i, j)) in edges.iter().enumerate() {
        let (u, v) = (g.flags[i].vertex, g.flags[j].vertex);
        adj[u].push((eid, v));
        if u != v {
            adj[v].push((eid, u));
        }
    }
    let mut disc = vec![usize::MAX; g.n_vertices];
    let mut low = vec![0usize; g.n_vertices];
    let mut time = 0usize;
    let mut out = Vec::new();
    // Iterative DFS: stack of (vertex, entering edge id, adjacency cursor).
    for start in 0..g.n_vertices {
        if disc[start] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(start, usize::MAX, 0)];
        disc[start] = time;
        low[start] = time;
        time += 1;
        while let Some(&mut (u, in_edge, ref mut cursor)) = stack.last_mut() {
            if *cursor < adj[u].len() {
                let (eid, v) = adj[u][*cursor];
                *cursor += 1;
                if eid == in_edge {
                    continue; // do not go back along the entering edge
                }
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    stack.push((v, eid, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push(edges[in_edge]);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Every component is bridgeless.
pub fn is_one_pi(g: &Graph) -> bool {
    bridges(g).is_empty()
}

/// Motic test: every proper edge subset containing all massive edges spans
/// strictly fewer independent cycles. By monotonicity of b₁ this holds iff
/// every massless edge lies in a cycle, i.e. no massless edge is a bridge.
/// Requires full decorations (mass on every edge, momentum-or-∅ on tails).
pub fn is_motic(g: &Graph) -> Result<bool> {
    if !g.is_decorated() {
        return Err(Error::DecorationsRequired(
            "motic test needs a mass on every edge and a momentum (or ∅) on every tail".into(),
        ));
    }
    let massless_bridge = bridges(g)
        .into_iter()
        .any(|(i, _)| matches!(&g.flags[i].mass, Some(m) if m.is_zero()));
    Ok(!massless_bridge)
}

// ---------------------------------------------------------------------------
// Insertion
// ---------------------------------------------------------------------------

/// Substitute `h` for vertex `v` of `g`: the flags of `v` migrate (with
/// their partners and decorations) to the vertices of the matched tails of
/// `h`, and the matched tails disappear. `matching` pairs each flag of `v`
/// with a tail of `h`, bijectively.
pub fn insert(g: &Graph, v: usize, h: &Graph, matching: &[(usize, usize)]) -> Result<Graph> {
    g.validate()?;
    h.validate()?;
    if v >= g.n_vertices {
        return Err(Error::IndexOutOfRange(format!(
            "vertex {v} of a graph with {} vertices",
            g.n_vertices
        )));
    }
    let sockets: Vec<usize> = g
        .flags
        .iter()
        .enumerate()
        .filter_map(|(i, f)| if f.vertex == v { Some(i) } else { None })
        .collect();
    let tails = h.tails();
    if sockets.len() != tails.len() || matching.len() != sockets.len() {
        return Err(Error::Validation(format!(
            "insertion arity mismatch: vertex has {} flags, graph has {} tails, matching has {} pairs",
            sockets.len(),
            tails.len(),
            matching.len()
        )));
    }
    let mut socket_target: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used_tails: BTreeMap<usize, ()> = BTreeMap::new();
    for &(s, t) in matching {
        if !sockets.contains(&s) {
            return Err(Error::Validation(format!(
                "matching uses flag {s}, which is not attached to vertex {v}"
            )));
        }
        if !tails.contains(&t) {
            return Err(Error::Validation(format!("matching uses flag {t}, which is not a tail")));
        }
        if socket_target.insert(s, t).is_some() || used_tails.insert(t, ()).is_some() {
            return Err(Error::Validation("matching is not a bijection".into()));
        }
    }
    if socket_target.len() != sockets.len() {
        return Err(Error::Validation("matching does not cover every flag of the vertex".into()));
    }

    // Vertex relabeling: g's vertices except v first, then h's.
    let g_vertex = |u: usize| if u < v { u } else { u - 1 };
    let h_vertex = |w: usize| g.n_vertices - 1 + w;

    let mut flags: Vec<Flag> = Vec::with_capacity(g.flags.len() + h.flags.len());
    // g's flags keep their indices; flags at v migrate to matched vertices.
    for (i, f) in g.flags.iter().enumerate() {
        let vertex = if f.vertex == v {
            h_vertex(h.flags[socket_target[&i]].vertex)
        } else {
            g_vertex(f.vertex)
        };
        flags.push(Flag { vertex, partner: f.partner, mass: f.mass.clone(), momentum: f.momentum.clone() });
    }
    // h's internal flags follow; matched tails are dropped.
    let mut h_new_index: BTreeMap<usize, usize> = BTreeMap::new();
    for (j, f) in h.flags.iter().enumerate() {
        if f.partner.is_none() {
            continue;
        }
        h_new_index.insert(j, flags.len());
        flags.push(Flag {
            vertex: h_vertex(f.vertex),
            partner: f.partner, // remapped below
            mass: f.mass.clone(),
            momentum: f.momentum.clone(),
        });
    }
    for (j, &nj) in &h_new_index {
        let p = h.flags[*j].partner.expect("internal flag");
        flags[nj].partner = Some(h_new_index[&p]);
    }

    let out = Graph { n_vertices: g.n_vertices - 1 + h.n_vertices, flags };
    out.validate()?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// Canonical keys
// ---------------------------------------------------------------------------

fn mass_str(m: &Option<Coeff>) -> String {
    match m {
        None => String::new(),
        Some(r) if r.denom().is_one() => format!(",m{}", r.numer()),
        Some(r) => format!(",m{}/{}", r.numer(), r.denom()),
    }
}

fn momentum_str(m: &Option<Momentum>) -> String {
    match m {
        None => String::new(),
        Some(Momentum::Empty) => ",p".to_string(),
        Some(Momentum::Token(t)) => format!(",p{t}"),
    }
}

/// Serialization of a graph under the given vertex relabeling
/// (`perm[old] = new`): header, sorted edge records, sorted tail records.
fn serialize_with_perm(g: &Graph, perm: &[usize]) -> String {
    let mut edge_recs: Vec<String> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (perm[g.flags[i].vertex], perm[g.flags[j].vertex]);
            let (u, v) = (a.min(b), a.max(b));
            format!("e{u},{v}{}", mass_str(&g.flags[i].mass))
        })
        .collect();
    edge_recs.sort();
    let mut tail_recs: Vec<String> = g
        .tails()
        .iter()
        .map(|&i| {
            let f = &g.flags[i];
            format!("t{}{}{}", perm[f.vertex], mass_str(&f.mass), momentum_str(&f.momentum))
        })
        .collect();
    tail_recs.sort();
    let mut out = format!("g{}", g.n_vertices);
    for r in edge_recs.into_iter().chain(tail_recs) {
        out.push(';');
        out.push_str(&r);
    }
    out
}

/// Color-refinement signature of a vertex: degree data and incident
/// decorations, iterated once with neighbor multisets.
fn vertex_signatures(g: &Graph) -> Vec<String> {
    let base: Vec<String> = (0..g.n_vertices)
        .map(|v| {
            let mut inc_edges: Vec<String> = Vec::new();
            let mut inc_tails: Vec<String> = Vec::new();
            let mut loops = 0usize;
            for (i, j) in g.edges() {
                let (a, b) = (g.flags[i].vertex, g.flags[j].vertex);
                if a == v && b == v {
                    loops += 1;
                } else if a == v || b == v {
                    inc_edges.push(mass_str(&g.flags[i].mass));
                }
            }
            for t in g.tails() {
                if g.flags[t].vertex == v {
                    inc_tails.push(format!(
                        "{}{}",
                        mass_str(&g.flags[t].mass),
                        momentum_str(&g.flags[t].momentum)
                    ));
                }
            }
            inc_edges.sort();
            inc_tails.sort();
            format!("d{};l{loops};E{};T{}", inc_edges.len(), inc_edges.join("|"), inc_tails.join("|"))
        })
        .collect();
    // One refinement round: append sorted neighbor signatures.
    let mut refined: Vec<String> = Vec::with_capacity(g.n_vertices);
    for v in 0..g.n_vertices {
        let mut nb: Vec<&str> = Vec::new();
        for (i, j) in g.edges() {
            let (a, b) = (g.flags[i].vertex, g.flags[j].vertex);
            if a == v && b != v {
                nb.push(&base[b]);
            } else if b == v && a != v {
                nb.push(&base[a]);
            }
        }
        nb.sort();
        refined.push(format!("{}#{}", base[v], nb.join("&")));
    }
    refined
}

/// Canonical serialization of one component: the minimal serialization over
/// all vertex relabelings compatible with the color-refinement classes, for
/// components of at most 8 flags; the labeled identity above that cap.
pub fn canonical_component_key(g: &Graph) -> Key {
    let identity: Vec<usize> = (0..g.n_vertices).collect();
    if g.flags.len() > 8 {
        return serialize_with_perm(g, &identity);
    }
    let sigs = vertex_signatures(g);
    // Group vertices into classes ordered by signature.
    let mut classes: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (v, s) in sigs.iter().enumerate() {
        classes.entry(s.as_str()).or_default().push(v);
    }
    let class_list: Vec<Vec<usize>> = classes.into_values().collect();
    // Enumerate products of within-class permutations; assign new labels in
    // class order.
    let mut best: Option<String> = None;
    let mut perms_per_class: Vec<Vec<Vec<usize>>> = Vec::new();
    for c in &class_list {
        perms_per_class.push(permutations(c.len()));
    }
    let mut choice = vec![0usize; class_list.len()];
    loop {
        let mut perm = vec![0usize; g.n_vertices];
        let mut next = 0usize;
        for (ci, class) in class_list.iter().enumerate() {
            let p = &perms_per_class[ci][choice[ci]];
            for &slot in p {
                perm[class[slot]] = next;
                next += 1;
            }
        }
        let s = serialize_with_perm(g, &perm);
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
        // Advance.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return best.expect("at least one labeling");
            }
            choice[i] += 1;
            if choice[i] < perms_per_class[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if choice.is_empty() {
            return best.expect("at least one labeling");
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// Split into connected components (isolated vertices included), each with
/// vertices renumbered in increasing original order.
pub fn components(g: &Graph) -> Vec<Graph> {
    let mut uf = UnionFind::new(g.n_vertices);
    for (i, j) in g.edges() {
        uf.union(g.flags[i].vertex, g.flags[j].vertex);
    }
    let mut roots: BTreeMap<usize, usize> = BTreeMap::new(); // root -> component index
    let mut comp_of_vertex = vec![0usize; g.n_vertices];
    for v in 0..g.n_vertices {
        let r = uf.find(v);
        let next = roots.len();
        let c = *roots.entry(r).or_insert(next);
        comp_of_vertex[v] = c;
    }
    let n_comps = roots.len();
    let mut vertex_local = vec![0usize; g.n_vertices];
    let mut sizes = vec![0usize; n_comps];
    for v in 0..g.n_vertices {
        vertex_local[v] = sizes[comp_of_vertex[v]];
        sizes[comp_of_vertex[v]] += 1;
    }
    let mut out: Vec<Graph> = sizes.into_iter().map(Graph::new).collect();
    let mut flag_local = vec![0usize; g.flags.len()];
    for (i, f) in g.flags.iter().enumerate() {
        let c = comp_of_vertex[f.vertex];
        flag_local[i] = out[c].flags.len();
        out[c].flags.push(Flag {
            vertex: vertex_local[f.vertex],
            partner: f.partner, // remapped below
            mass: f.mass.clone(),
            momentum: f.momentum.clone(),
        });
    }
    for (i, f) in g.flags.iter().enumerate() {
        if let Some(j) = f.partner {
            let c = comp_of_vertex[f.vertex];
            out[c].flags[flag_local[i]].partner = Some(flag_local[j]);
        }
    }
    out
}

/// Key of a graph with every component kept (edgeless ones included):
/// the sorted tensor word of canonical component keys.
pub fn graph_key_raw(g: &Graph) -> Key {
    let mut keys: Vec<String> = components(g)
        .iter()
        .map(canonical_component_key)
        .collect();
    keys.sort();
    encode_factors(&keys)
}

/// Normalized Hopf key: edgeless components are deleted (they are the
/// degree-0 part identified with the unit).
pub fn graph_key(g: &Graph) -> Key {
    let mut keys: Vec<String> = components(g)
        .iter()
        .filter(|c| c.n_edges() > 0)
        .map(canonical_component_key)
        .collect();
    keys.sort();
    encode_factors(&keys)
}

/// Parse a single component key back into a graph.
pub fn parse_component_key(key: &str) -> Result<Graph> {
    let mut parts = key.split(';');
    let head = parts.next().unwrap_or_default();
    let n: usize = head
        .strip_prefix('g')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("graph key `{key}` must start with `g<n>`")))?;
    let mut g = Graph::new(n);
    for rec in parts {
        let (kind, rest) = rec.split_at(1);
        let fields: Vec<&str> = rest.split(',').collect();
        let mut mass: Option<Coeff> = None;
        let mut momentum: Option<Momentum> = None;
        let mut nums: Vec<usize> = Vec::new();
        for f in &fields {
            if let Some(m) = f.strip_prefix('m') {
                mass = Some(parse_rational(m)?);
            } else if let Some(p) = f.strip_prefix('p') {
                momentum = Some(if p.is_empty() {
                    Momentum::Empty
                } else {
                    Momentum::Token(p.to_string())
                });
            } else {
                nums.push(f.parse().map_err(|_| {
                    Error::Parse(format!("bad vertex index `{f}` in graph key `{key}`"))
                })?);
            }
        }
        match kind {
            "e" => {
                if nums.len() != 2 {
                    return Err(Error::Parse(format!("edge record `{rec}` needs two vertices")));
                }
                g.add_edge_mass(nums[0], nums[1], mass);
            }
            "t" => {
                if nums.len() != 1 {
                    return Err(Error::Parse(format!("tail record `{rec}` needs one vertex")));
                }
                let v = nums[0];
                g.flags.push(Flag { vertex: v, partner: None, mass, momentum });
            }
            other => {
                return Err(Error::Parse(format!("unknown record kind `{other}` in `{key}`")))
            }
        }
    }
    g.validate()?;
    Ok(g)
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let parse_int = |t: &str| -> Result<num::BigInt> {
        t.parse()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Coeff::new(parse_int(p)?, den))
        }
        None => Ok(Coeff::from(parse_int(s)?)),
    }
}

/// Parse a graph key into one graph: either a bare component serialization
/// (`g<n>;…`) or a tensor word of component keys.
pub fn parse_graph_key(key: &str) -> Result<Graph> {
    let comps = if key.starts_with('g') {
        vec![key.to_string()]
    } else {
        decode_factors(key)?
    };
    let mut out = Graph::new(0);
    for comp_key in comps {
        let c = parse_component_key(&comp_key)?;
        let v0 = out.n_vertices;
        let f0 = out.flags.len();
        out.n_vertices += c.n_vertices;
        for f in &c.flags {
            out.flags.push(Flag {
                vertex: v0 + f.vertex,
                partner: f.partner.map(|p| f0 + p),
                mass: f.mass.clone(),
                momentum: f.momentum.clone(),
            });
        }
    }
    out.validate()?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON interface
// ---------------------------------------------------------------------------

/// Read a graph from `{"vertices": [...], "flags": [{"id", "vertex",
/// "partner"|null, "mass"?, "momentum"?}]}`. Vertex order and flag ids give
/// the internal indices; a momentum of `""` is the ∅ marker.
pub fn graph_from_json(v: &serde_json::Value) -> Result<Graph> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("graph JSON must be an object".into()))?;
    let vertices = obj
        .get("vertices")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("graph JSON needs a `vertices` array".into()))?;
    let flags_json = obj
        .get("flags")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("graph JSON needs a `flags` array".into()))?;

    let mut ids: Vec<i64> = Vec::with_capacity(flags_json.len());
    for f in flags_json {
        let id = f
            .get("id")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| Error::Parse("flag needs an integer `id`".into()))?;
        if ids.contains(&id) {
            return Err(Error::Parse(format!("duplicate flag id {id}")));
        }
        ids.push(id);
    }
    let index_of = |id: i64| -> Result<usize> {
        ids.iter()
            .position(|&x| x == id)
            .ok_or_else(|| Error::Parse(format!("partner refers to unknown flag id {id}")))
    };

    let mut g = Graph::new(vertices.len());
    for f in flags_json {
        let vertex = f
            .get("vertex")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("flag needs a nonnegative `vertex`".into()))?
            as usize;
        let partner = match f.get("partner") {
            None | Some(serde_json::Value::Null) => None,
            Some(p) => Some(index_of(p.as_i64().ok_or_else(|| {
                Error::Parse("flag `partner` must be an id or null".into())
            })?)?),
        };
        let mass = match f.get("mass") {
            None | Some(serde_json::Value::Null) => None,
            Some(serde_json::Value::Number(n)) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| Error::Parse("mass number must be an integer; use \"p/q\" for fractions".into()))?;
                Some(Coeff::from(num::BigInt::from(i)))
            }
            Some(serde_json::Value::String(s)) => Some(parse_rational(s)?),
            Some(other) => {
                return Err(Error::Parse(format!("bad mass value {other}")));
            }
        };
        let momentum = match f.get("momentum") {
            None | Some(serde_json::Value::Null) => None,
            Some(serde_json::Value::String(s)) if s.is_empty() => Some(Momentum::Empty),
            Some(serde_json::Value::String(s)) => Some(Momentum::Token(s.clone())),
            Some(other) => {
                return Err(Error::Parse(format!("bad momentum value {other}")));
            }
        };
        g.flags.push(Flag { vertex, partner, mass, momentum });
    }
    g.validate()?;
    Ok(g)
}

/// Inverse of [`graph_from_json`] with indices as ids.
pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    let flags: Vec<serde_json::Value> = g
        .flags
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut o = serde_json::Map::new();
            o.insert("id".into(), serde_json::json!(i));
            o.insert("vertex".into(), serde_json::json!(f.vertex));
            o.insert(
                "partner".into(),
                match f.partner {
                    Some(p) => serde_json::json!(p),
                    None => serde_json::Value::Null,
                },
            );
            if let Some(m) = &f.mass {
                let s = if m.denom().is_one() {
                    m.numer().to_string()
                } else {
                    format!("{}/{}", m.numer(), m.denom())
                };
                o.insert("mass".into(), serde_json::json!(s));
            }
            match &f.momentum {
                Some(Momentum::Empty) => {
                    o.insert("momentum".into(), serde_json::json!(""));
                }
                Some(Momentum::Token(t)) => {
                    o.insert("momentum".into(), serde_json::json!(t));
                }
                None => {}
            }
            serde_json::Value::Object(o)
        })
        .collect();
    serde_json::json!({
        "vertices": (0..g.n_vertices).collect::<Vec<usize>>(),
        "flags": flags,
    })
}

// ---------------------------------------------------------------------------
// The subgraph/contraction coproduct
// ---------------------------------------------------------------------------

/// Admissibility filter for the left output of [`ck_graph_delta`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissible {
    All,
    OnePi,
    Motic,
}

impl std::str::FromStr for Admissible {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Self::All),
            "one_pi" | "one-pi" | "1pi" => Ok(Self::OnePi),
            "motic" => Ok(Self::Motic),
            other => Err(Error::Parse(format!(
                "unknown admissibility `{other}`; expected all, one_pi, or motic"
            ))),
        }
    }
}

/// Δ(g) = Σ over edge subsets A: γ_A ⊗ g/γ_A, where γ_A is the spanning
/// subgraph with edges A (tails retained; severed half-edges become tails,
/// decorated with ∅ when the graph is decorated) and g/γ_A contracts each
/// component of γ_A to a vertex, keeping the remaining edges (loops
/// included) and all tails. Keys keep edgeless components (the coproduct is
/// group-like on a single vertex before the Hopf quotient). The filter
/// restricts which γ_A contribute.
pub fn ck_graph_delta(g: &Graph, admissible: Admissible) -> Result<Tensor2> {
    g.validate()?;
    let decorated = g.is_decorated();
    let edges = g.edges();
    if admissible == Admissible::Motic && !decorated {
        return Err(Error::DecorationsRequired(
            "motic admissibility needs a fully decorated graph".into(),
        ));
    }
    let mut out = Tensor2::zero();
    for mask in 0u64..(1u64 << edges.len()) {
        let gamma = spanning_subgraph(g, &edges, mask, decorated);
        let keep = match admissible {
            Admissible::All => true,
            Admissible::OnePi => is_one_pi(&gamma),
            Admissible::Motic => is_motic(&gamma)?,
        };
        if !keep {
            continue;
        }
        let quotient = contract(g, &edges, mask);
        out.add_term(graph_key_raw(&gamma), graph_key_raw(&quotient), Coeff::one());
    }
    Ok(out)
}

/// The spanning subgraph with the selected edges; unselected edges sever
/// into two tails (∅-momentum in the decorated category).
fn spanning_subgraph(g: &Graph, edges: &[(usize, usize)], mask: u64, decorated: bool) -> Graph {
    let mut gamma = Graph::new(g.n_vertices);
    let mut in_subgraph = vec![true; g.flags.len()];
    for (eid, &(i, j)) in edges.iter().enumerate() {
        if mask & (1 << eid) == 0 {
            in_subgraph[i] = false;
            in_subgraph[j] = false;
        }
    }
    let mut new_index = vec![usize::MAX; g.flags.len()];
    for (i, f) in g.flags.iter().enumerate() {
        new_index[i] = gamma.flags.len();
        if f.partner.is_some() && !in_subgraph[i] {
            // Severed half-edge: becomes a tail.
            gamma.flags.push(Flag {
                vertex: f.vertex,
                partner: None,
                mass: f.mass.clone(),
                momentum: if decorated { Some(Momentum::Empty) } else { None },
            });
        } else {
            gamma.flags.push(f.clone());
        }
    }
    for (i, f) in g.flags.iter().enumerate() {
        if let Some(j) = f.partner {
            if in_subgraph[i] {
                gamma.flags[new_index[i]].partner = Some(new_index[j]);
            }
        }
    }
    gamma
}

/// Contract each component of the selected spanning subgraph to a vertex,
/// keeping the unselected edges and every tail.
fn contract(g: &Graph, edges: &[(usize, usize)], mask: u64) -> Graph {
    let mut uf = UnionFind::new(g.n_vertices);
    for (eid, &(i, j)) in edges.iter().enumerate() {
        if mask & (1 << eid) != 0 {
            uf.union(g.flags[i].vertex, g.flags[j].vertex);
        }
    }
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_class = vec![0usize; g.n_vertices];
    for v in 0..g.n_vertices {
        let r = uf.find(v);
        let next = class_of.len();
        vertex_class[v] = *class_of.entry(r).or_insert(next);
    }
    let mut q = Graph::new(class_of.len());
    let mut new_index = vec![usize::MAX; g.flags.len()];
    for (i, f) in g.flags.iter().enumerate() {
        let selected_edge = match f.partner {
            Some(_) => {
                let eid = edges
                    .iter()
                    .position(|&(a, b)| a == i || b == i)
                    .expect("edge flag indexed");
                mask & (1 << eid) != 0
            }
            None => false,
        };
        if selected_edge {
            continue; // contracted away
        }
        new_index[i] = q.flags.len();
        q.flags.push(Flag {
            vertex: vertex_class[f.vertex],
            partner: f.partner,
            mass: f.mass.clone(),
            momentum: f.momentum.clone(),
        });
    }
    for (i, f) in g.flags.iter().enumerate() {
        if new_index[i] == usize::MAX {
            continue;
        }
        if let Some(j) = f.partner {
            q.flags[new_index[i]].partner = Some(new_index[j]);
        }
    }
    q
}

// ---------------------------------------------------------------------------
// The graph Hopf algebra
// ---------------------------------------------------------------------------

/// The Hopf algebra of graphs modulo isomorphism, graded by edge count;
/// edgeless components are identified with the unit.
pub struct GraphAlgebra;

impl GraphAlgebra {
    pub fn new() -> Self {
        GraphAlgebra
    }
}

impl Default for GraphAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for GraphAlgebra {
    fn name(&self) -> &str {
        "graphs"
    }

    fn delta_key(&self, key: &str) -> Result<Tensor2> {
        self.validate_key(key)?;
        let g = parse_graph_key(key)?;
        let raw = ck_graph_delta(&g, Admissible::All)?;
        let mut out = Tensor2::zero();
        for ((l, r), c) in raw.iter() {
            out.add_term(
                graph_key(&parse_graph_key(l)?),
                graph_key(&parse_graph_key(r)?),
                c.clone(),
            );
        }
        Ok(out)
    }

    fn mul_key(&self, a: &str, b: &str) -> Result<Key> {
        let mut factors = decode_factors(a)?;
        factors.extend(decode_factors(b)?);
        factors.sort();
        Ok(encode_factors(&factors))
    }

    fn degree_key(&self, key: &str) -> Result<usize> {
        Ok(parse_graph_key(key)?.n_edges())
    }

    fn basis_of_degree(&self, degree: usize) -> Result<Vec<Key>> {
        Err(Error::UnsupportedBasis(format!(
            "graphs of a fixed edge count ({degree}) form an infinite family"
        )))
    }

    fn parse(&self, literal: &str) -> Result<LinComb> {
        let lit = literal.trim();
        if lit == UNIT_KEY {
            return Ok(LinComb::basis(UNIT_KEY.to_string()));
        }
        if lit.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(lit)?;
            let g = graph_from_json(&v)?;
            return Ok(LinComb::basis(graph_key(&g)));
        }
        // A canonical key, possibly not normalized yet.
        let g = parse_graph_key(lit)?;
        Ok(LinComb::basis(graph_key(&g)))
    }

    fn display_key(&self, key: &str) -> String {
        key.to_string()
    }

    fn validate_key(&self, key: &str) -> Result<()> {
        let comps = decode_factors(key)?;
        let mut sorted = comps.clone();
        sorted.sort();
        if sorted != comps {
            return Err(Error::Validation(format!("graph key `{key}` not sorted")));
        }
        for c in &comps {
            let g = parse_component_key(c)?;
            let (b0, _) = betti(&g);
            if b0 != 1 {
                return Err(Error::Validation(format!(
                    "graph key component `{c}` is not connected"
                )));
            }
            if g.n_edges() == 0 {
                return Err(Error::Validation(format!(
                    "graph key component `{c}` is edgeless (unit-like)"
                )));
            }
            if canonical_component_key(&g) != *c {
                return Err(Error::Validation(format!(
                    "graph key component `{c}` is not canonical"
                )));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Seeded samplers
// ---------------------------------------------------------------------------

/// A random graph: up to the given vertex/edge/tail budgets, optionally
/// fully decorated (random small masses, tails with token-or-∅ momenta).
pub fn random_graph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    max_tails: usize,
    decorated: bool,
) -> Graph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut g = Graph::new(n);
    let e = rng.gen_range(0..=max_edges);
    for _ in 0..e {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let mass = decorated.then(|| Coeff::from(num::BigInt::from(rng.gen_range(0..3))));
        g.add_edge_mass(u, v, mass);
    }
    let t = rng.gen_range(0..=max_tails);
    for _ in 0..t {
        let v = rng.gen_range(0..n);
        let momentum = decorated.then(|| {
            if rng.gen_bool(0.5) {
                Momentum::Empty
            } else {
                Momentum::Token(format!("k{}", rng.gen_range(0..4)))
            }
        });
        g.add_tail(v, None, momentum);
    }
    g
}

/// A random connected graph: a random tree plus extra random edges.
pub fn random_connected_graph<R: Rng>(
    rng: &mut R,
    n_vertices: usize,
    extra_edges: usize,
    decorated: bool,
) -> Graph {
    let n = n_vertices.max(1);
    let mut g = Graph::new(n);
    let mass = |rng: &mut R| decorated.then(|| Coeff::from(num::BigInt::from(rng.gen_range(0..3))));
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let m = mass(rng);
        g.add_edge_mass(u, v, m);
    }
    for _ in 0..extra_edges {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let m = mass(rng);
        g.add_edge_mass(u, v, m);
    }
    g
}

/// A random bridgeless connected graph with `n_tails` undecorated tails:
/// every bridge of a random connected graph is doubled.
pub fn random_one_pi<R: Rng>(
    rng: &mut R,
    n_vertices: usize,
    extra_edges: usize,
    n_tails: usize,
) -> Graph {
    let mut g = random_connected_graph(rng, n_vertices, extra_edges, false);
    for (i, j) in bridges(&g) {
        let (u, v) = (g.flags[i].vertex, g.flags[j].vertex);
        g.add_edge(u, v);
    }
    for _ in 0..n_tails {
        let v = rng.gen_range(0..g.n_vertices);
        g.add_tail(v, None, None);
    }
    debug_assert!(is_one_pi(&g));
    g
}

/// A random motic graph with `n_tails` momentum-decorated tails: a random
/// decorated connected graph whose massless bridges are either doubled or
/// given a nonzero mass.
pub fn random_motic<R: Rng>(
    rng: &mut R,
    n_vertices: usize,
    extra_edges: usize,
    n_tails: usize,
) -> Graph {
    let mut g = random_connected_graph(rng, n_vertices, extra_edges, true);
    loop {
        let massless: Vec<(usize, usize)> = bridges(&g)
            .into_iter()
            .filter(|&(i, _)| matches!(&g.flags[i].mass, Some(m) if m.is_zero()))
            .collect();
        if massless.is_empty() {
            break;
        }
        for (i, j) in massless {
            if rng.gen_bool(0.5) {
                let (u, v) = (g.flags[i].vertex, g.flags[j].vertex);
                g.add_edge_mass(u, v, Some(Coeff::zero()));
            } else {
                let m = Coeff::from(num::BigInt::from(rng.gen_range(1..3)));
                g.flags[i].mass = Some(m.clone());
                g.flags[j].mass = Some(m);
            }
        }
    }
    for _ in 0..n_tails {
        let v = rng.gen_range(0..g.n_vertices);
        let momentum = if rng.gen_bool(0.5) {
            Momentum::Empty
        } else {
            Momentum::Token(format!("k{}", rng.gen_range(0..4)))
        };
        g.add_tail(v, None, Some(momentum));
    }
    debug_assert!(is_motic(&g).unwrap());
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cooperad::{check_coassoc_in, check_counit_laws};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn theta() -> Graph {
        let mut g = Graph::new(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        g
    }

    #[test]
    fn betti_matches_frozen_examples() {
        let mut single = Graph::new(1);
        assert_eq!(betti(&single), (1, 0));
        single.add_tail(0, None, None);
        assert_eq!(betti(&single), (1, 0)); // tails do not affect topology
        assert_eq!(betti(&theta()), (1, 2));
        assert_eq!(betti(&Graph::new(0)), (0, 0));
        let mut loopy = Graph::new(1);
        loopy.add_edge(0, 0);
        assert_eq!(betti(&loopy), (1, 1));
    }

    #[test]
    fn euler_characteristic_is_exact_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 6, 8, 3, false);
            let (b0, b1) = betti(&g);
            assert_eq!(
                b0 as i64 - b1 as i64,
                g.n_vertices as i64 - g.n_edges() as i64
            );
        }
    }

    #[test]
    fn bridges_respect_parallel_edges_and_loops() {
        // Single edge: a bridge.
        let mut e = Graph::new(2);
        e.add_edge(0, 1);
        assert_eq!(bridges(&e).len(), 1);
        assert!(!is_one_pi(&e));
        // Parallel doubled edge: no bridges.
        let mut d = Graph::new(2);
        d.add_edge(0, 1);
        d.add_edge(0, 1);
        assert!(is_one_pi(&d));
        // Loop: no bridge.
        let mut l = Graph::new(1);
        l.add_edge(0, 0);
        assert!(is_one_pi(&l));
        // Dumbbell: two loops joined by a bridge.
        let mut db = Graph::new(2);
        db.add_edge(0, 0);
        db.add_edge(1, 1);
        db.add_edge(0, 1);
        assert_eq!(bridges(&db).len(), 1);
        assert!(!is_one_pi(&db));
        // Theta: 2-edge-connected.
        assert!(is_one_pi(&theta()));
        // Disconnected: a triangle plus a lone bridge elsewhere.
        let mut mix = Graph::new(5);
        mix.add_edge(0, 1);
        mix.add_edge(1, 2);
        mix.add_edge(2, 0);
        mix.add_edge(3, 4);
        assert!(!is_one_pi(&mix));
    }

    #[test]
    fn bridge_finder_agrees_with_deletion_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let g = random_graph(&mut rng, 5, 6, 0, false);
            let found = bridges(&g);
            let edges = g.edges();
            for (eid, &(i, j)) in edges.iter().enumerate() {
                // Delete edge eid and recount components.
                let mut h = Graph::new(g.n_vertices);
                for (e2, &(a, b)) in edges.iter().enumerate() {
                    if e2 != eid {
                        h.add_edge(g.flags[a].vertex, g.flags[b].vertex);
                    }
                }
                let is_bridge = betti(&h).0 > betti(&g).0;
                assert_eq!(
                    found.contains(&(i, j)),
                    is_bridge,
                    "edge ({i},{j}) of {}",
                    graph_key_raw(&g)
                );
            }
        }
    }

    #[test]
    fn motic_requires_decorations_and_frozen_cases() {
        // Massless bridge graph → false.
        let mut b = Graph::new(2);
        b.add_edge_mass(0, 1, Some(Coeff::zero()));
        assert!(!is_motic(&b).unwrap());
        // The same edge with a mass → true.
        let mut m = Graph::new(2);
        m.add_edge_mass(0, 1, Some(crate::kernel::cint(2)));
        assert!(is_motic(&m).unwrap());
        // Loops are always inside a cycle.
        let mut l = Graph::new(1);
        l.add_edge_mass(0, 0, Some(Coeff::zero()));
        assert!(is_motic(&l).unwrap());
        // Missing decorations are an error.
        let mut u = Graph::new(2);
        u.add_edge(0, 1);
        assert!(matches!(is_motic(&u), Err(Error::DecorationsRequired(_))));
        let mut t = Graph::new(1);
        t.add_edge_mass(0, 0, Some(Coeff::zero()));
        t.add_tail(0, None, None); // undecorated tail
        assert!(matches!(is_motic(&t), Err(Error::DecorationsRequired(_))));
    }

    #[test]
    fn motic_equals_one_pi_when_all_masses_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let mut g = random_connected_graph(&mut rng, 4, 2, false);
            for f in &mut g.flags {
                f.mass = Some(Coeff::zero());
            }
            assert_eq!(is_motic(&g).unwrap(), is_one_pi(&g));
        }
    }

    #[test]
    fn insertion_preserves_structure_and_betti() {
        // Insert a loop-graph into a 2-valent vertex of a loop-graph.
        let mut outer = Graph::new(1);
        outer.add_edge(0, 0); // b1 = 1, vertex 0 has two flags
        let mut inner = Graph::new(1);
        inner.add_edge(0, 0);
        inner.add_tail(0, None, None);
        inner.add_tail(0, None, None); // two tails to receive the two flags
        let tails = inner.tails();
        let matching = [(0usize, tails[0]), (1usize, tails[1])];
        let glued = insert(&outer, 0, &inner, &matching).unwrap();
        assert_eq!(glued.n_vertices, 1);
        let (b0, b1) = betti(&glued);
        assert_eq!((b0, b1), (1, 2)); // b1 additive: 1 + 1
        // Unit-like insertion: 1-valent vertex replaced by a 1-tail vertex.
        let mut g = Graph::new(2);
        g.add_edge(0, 1);
        let mut unit_v = Graph::new(1);
        unit_v.add_tail(0, None, None);
        let back = insert(&g, 1, &unit_v, &[(1, 0)]).unwrap();
        assert_eq!(graph_key_raw(&back), graph_key_raw(&g));
        // Arity mismatch is rejected.
        assert!(matches!(
            insert(&g, 0, &unit_v, &[]),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn insertion_is_associative_at_disjoint_vertices() {
        // g with two 1-valent vertices; insert h1 at one and h2 at the other
        // in both orders.
        let mut g = Graph::new(2);
        g.add_edge(0, 1);
        let mk_h = |loops: usize| {
            let mut h = Graph::new(1);
            for _ in 0..loops {
                h.add_edge(0, 0);
            }
            h.add_tail(0, None, None);
            h
        };
        let h1 = mk_h(1);
        let h2 = mk_h(2);
        let t1 = h1.tails()[0];
        let t2 = h2.tails()[0];
        // Order A: insert h1 at vertex 0 (socket flag 0), then h2 at the
        // image of vertex 1 (socket flag 1).
        let a1 = insert(&g, 0, &h1, &[(0, t1)]).unwrap();
        // After deleting vertex 0, old vertex 1 is vertex 0.
        let a2 = insert(&a1, 0, &h2, &[(1, t2)]).unwrap();
        // Order B: insert h2 at vertex 1 first, then h1 at vertex 0.
        let b1 = insert(&g, 1, &h2, &[(1, t2)]).unwrap();
        let b2 = insert(&b1, 0, &h1, &[(0, t1)]).unwrap();
        assert_eq!(graph_key_raw(&a2), graph_key_raw(&b2));
    }

    #[test]
    fn canonical_keys_are_relabeling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            // At most 3 edges + 2 tails = 8 flags: inside the cap below
            // which keys are full isomorphism invariants.
            let g = random_graph(&mut rng, 4, 3, 2, true);
            // Random vertex relabeling.
            let mut perm: Vec<usize> = (0..g.n_vertices).collect();
            for i in (1..perm.len()).rev() {
                let j = rng.gen_range(0..=i);
                perm.swap(i, j);
            }
            let mut relabeled = Graph::new(g.n_vertices);
            // Also shuffle flag order.
            let mut order: Vec<usize> = (0..g.flags.len()).collect();
            for i in (1..order.len()).rev() {
                let j = rng.gen_range(0..=i);
                order.swap(i, j);
            }
            let mut new_of_old = vec![0usize; g.flags.len()];
            for (new_i, &old_i) in order.iter().enumerate() {
                new_of_old[old_i] = new_i;
            }
            for &old_i in &order {
                let f = &g.flags[old_i];
                relabeled.flags.push(Flag {
                    vertex: perm[f.vertex],
                    partner: f.partner.map(|p| new_of_old[p]),
                    mass: f.mass.clone(),
                    momentum: f.momentum.clone(),
                });
            }
            assert_eq!(graph_key_raw(&g), graph_key_raw(&relabeled));
            assert_eq!(graph_key(&g), graph_key(&relabeled));
        }
    }

    #[test]
    fn canonical_keys_distinguish_decorations_and_multiplicity() {
        let mut a = Graph::new(2);
        a.add_edge(0, 1);
        let mut b = Graph::new(2);
        b.add_edge(0, 1);
        b.add_edge(0, 1);
        assert_ne!(graph_key(&a), graph_key(&b));
        let mut c = Graph::new(2);
        c.add_edge_mass(0, 1, Some(crate::kernel::cint(1)));
        assert_ne!(graph_key(&a), graph_key(&c));
        let mut d = Graph::new(2);
        d.add_edge(0, 1);
        d.add_tail(0, None, Some(Momentum::Empty));
        let mut e = Graph::new(2);
        e.add_edge(0, 1);
        e.add_tail(0, None, Some(Momentum::Token("k1".into())));
        assert_ne!(graph_key(&d), graph_key(&e));
    }

    #[test]
    fn key_round_trips_through_parse() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..25 {
            let g = random_graph(&mut rng, 4, 4, 2, true);
            let key = graph_key_raw(&g);
            let back = parse_graph_key(&key).unwrap();
            assert_eq!(graph_key_raw(&back), key);
            let nkey = graph_key(&g);
            if nkey != UNIT_KEY {
                let nback = parse_graph_key(&nkey).unwrap();
                assert_eq!(graph_key(&nback), nkey);
            }
        }
    }

    #[test]
    fn json_round_trips_and_validates() {
        let mut g = Graph::new(2);
        g.add_edge_mass(0, 1, Some(cfrac_test(3, 2)));
        g.add_tail(1, None, Some(Momentum::Empty));
        g.add_tail(0, None, Some(Momentum::Token("q".into())));
        let j = graph_to_json(&g);
        let back = graph_from_json(&j).unwrap();
        assert_eq!(back, g);
        // Asymmetric involution is rejected.
        let bad = serde_json::json!({
            "vertices": [0, 1],
            "flags": [
                {"id": 0, "vertex": 0, "partner": 1},
                {"id": 1, "vertex": 1, "partner": 0},
                {"id": 2, "vertex": 1, "partner": 0}
            ]
        });
        assert!(graph_from_json(&bad).is_err());
    }

    fn cfrac_test(n: i64, d: i64) -> Coeff {
        crate::kernel::cfrac(n, d)
    }

    #[test]
    fn delta_examples_match_edge_subset_enumeration() {
        // Single vertex: group-like before the quotient.
        let v = Graph::new(1);
        let d = ck_graph_delta(&v, Admissible::All).unwrap();
        let vk = graph_key_raw(&v);
        assert_eq!(d, Tensor2::single(vk.clone(), vk, Coeff::one()));

        // One edge: edgeless-subgraph and edge-subgraph terms.
        let mut e = Graph::new(2);
        e.add_edge(0, 1);
        let d = ck_graph_delta(&e, Admissible::All).unwrap();
        let ek = graph_key_raw(&e);
        let point = graph_key_raw(&Graph::new(1));
        let mut expect = Tensor2::zero();
        // A = ∅: two severed tails on the left, g unchanged on the right.
        let mut severed = Graph::new(2);
        severed.add_tail(0, None, None);
        severed.add_tail(1, None, None);
        expect.add_term(graph_key_raw(&severed), ek.clone(), Coeff::one());
        expect.add_term(ek.clone(), point, Coeff::one());
        assert_eq!(d, expect);
    }

    #[test]
    fn hopf_delta_is_coassociative_and_counital_on_small_graphs() {
        let h = GraphAlgebra::new();
        let mut samples: Vec<Graph> = Vec::new();
        samples.push(theta());
        let mut tri = Graph::new(3);
        tri.add_edge(0, 1);
        tri.add_edge(1, 2);
        tri.add_edge(2, 0);
        samples.push(tri);
        let mut le = Graph::new(2);
        le.add_edge(0, 1);
        le.add_edge(1, 1);
        samples.push(le);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            samples.push(random_graph(&mut rng, 3, 3, 1, false));
        }
        for g in &samples {
            let key = graph_key(g);
            let x = LinComb::basis(key);
            assert!(check_coassoc_in(&h, &x).unwrap(), "{}", graph_key(g));
            assert!(check_counit_laws(&h, &x).unwrap(), "{}", graph_key(g));
        }
    }

    #[test]
    fn admissible_filters_drop_non_qualifying_subgraphs() {
        // Dumbbell: loop - bridge - loop. The subgraph with only the bridge
        // edge appears under `all` but not under `one_pi`.
        let mut db = Graph::new(2);
        db.add_edge(0, 0);
        db.add_edge(0, 1);
        db.add_edge(1, 1);
        let all = ck_graph_delta(&db, Admissible::All).unwrap();
        let pi = ck_graph_delta(&db, Admissible::OnePi).unwrap();
        // 8 edge subsets, merged to 6 terms by the left-right symmetry.
        assert_eq!(all.iter().count(), 6);
        assert_eq!(
            all.iter().map(|(_, c)| c.clone()).sum::<Coeff>(),
            crate::kernel::cint(8)
        );
        // The bridge makes γ inadmissible whenever selected: 4 masks remain.
        assert_eq!(pi.iter().count(), 3);
        assert_eq!(
            pi.iter().map(|(_, c)| c.clone()).sum::<Coeff>(),
            crate::kernel::cint(4)
        );
        for ((l, _), _) in pi.iter() {
            let gl = parse_graph_key(l).unwrap();
            assert!(is_one_pi(&gl));
        }
    }

    #[test]
    fn one_pi_closure_under_insertion() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..25 {
            let g = random_one_pi(&mut rng, 3, 2, 0);
            // Choose a vertex and build a 1-PI insert with matching arity.
            let v = rng.gen_range(0..g.n_vertices);
            let valence = g.flags.iter().filter(|f| f.vertex == v).count();
            let h = random_one_pi(&mut rng, 2, 2, valence);
            let sockets: Vec<usize> = g
                .flags
                .iter()
                .enumerate()
                .filter_map(|(i, f)| (f.vertex == v).then_some(i))
                .collect();
            let matching: Vec<(usize, usize)> =
                sockets.into_iter().zip(h.tails()).collect();
            let glued = insert(&g, v, &h, &matching).unwrap();
            assert!(is_one_pi(&glued), "{}", graph_key_raw(&glued));
        }
    }

    #[test]
    fn motic_closure_under_insertion() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..25 {
            let mut g = random_motic(&mut rng, 3, 2, 1);
            // Decorate away nothing; choose a vertex, match arity with a
            // motic graph with that many momentum tails.
            let v = rng.gen_range(0..g.n_vertices);
            let valence = g.flags.iter().filter(|f| f.vertex == v).count();
            let h = random_motic(&mut rng, 2, 2, valence);
            let sockets: Vec<usize> = g
                .flags
                .iter()
                .enumerate()
                .filter_map(|(i, f)| (f.vertex == v).then_some(i))
                .collect();
            let matching: Vec<(usize, usize)> =
                sockets.into_iter().zip(h.tails()).collect();
            let glued = insert(&g, v, &h, &matching).unwrap();
            assert!(is_motic(&glued).unwrap(), "{}", graph_key_raw(&glued));
            g.add_tail(0, None, Some(Momentum::Empty));
            assert!(is_motic(&g).unwrap());
        }
    }

    #[test]
    fn delta_multiplicative_under_disjoint_union() {
        let h = GraphAlgebra::new();
        let mut a = Graph::new(2);
        a.add_edge(0, 1);
        a.add_edge(0, 1);
        let mut b = Graph::new(1);
        b.add_edge(0, 0);
        let ka = graph_key(&a);
        let kb = graph_key(&b);
        let kab = h.mul_key(&ka, &kb).unwrap();
        let dab = h.delta_key(&kab).unwrap();
        let da = h.delta_key(&ka).unwrap();
        let db = h.delta_key(&kb).unwrap();
        let mut expect = Tensor2::zero();
        for ((l1, r1), c1) in da.iter() {
            for ((l2, r2), c2) in db.iter() {
                expect.add_term(
                    h.mul_key(l1, l2).unwrap(),
                    h.mul_key(r1, r2).unwrap(),
                    c1 * c2,
                );
            }
        }
        assert_eq!(dab, expect);
    }
}

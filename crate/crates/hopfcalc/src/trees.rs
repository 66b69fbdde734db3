//! Planar and symmetric rooted trees with tails, the tree cooperad, and the
//! Connes–Kreimer forest Hopf algebra.
//!
//! A tree is either the trivial tree `|` (no vertices, one tail passing
//! through) or a root vertex with an ordered list of children, each a tail
//! (an operadic input slot, written `.`) or a subtree. The literal syntax is
//! `(* (* .) .)`; canonical keys drop the interior spaces. Arity = number of
//! tails, Hopf degree = number of vertices; vertices are indexed in preorder
//! (root is 0, then children left to right), tails are numbered 1..=arity in
//! planar order.
//!
//! The decomposition maps cut along "rooted" vertex subsets R (closed under
//! taking parents, possibly empty): the base keeps the vertices of R with a
//! tail at every severed edge and every original tail, and the right outputs
//! are the severed branches (a trivial tree for each original tail), in
//! planar order. The same cuts, with tails deleted, give the classical
//! forest coproduct: base forest on the left, severed branches on the right.

use std::collections::BTreeSet;

use num::{One, Zero};

use crate::cooperad::{encode_factors, Cooperad, FreeBialgebra, HopfAlgebra, UNIT_KEY};
use crate::error::{Error, Result};
use crate::kernel::{cfrac, Coeff, Key, LinComb, Tensor2, TensorK};

/// A child slot of a vertex: an operadic input or a subtree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kid {
    Tail,
    Sub(Tree),
}

/// A rooted tree with tails; `Trivial` is the treeless single input `|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tree {
    Trivial,
    Node(Vec<Kid>),
}

impl Tree {
    /// Number of tails (operadic inputs). The trivial tree has one.
    pub fn arity(&self) -> usize {
        match self {
            Tree::Trivial => 1,
            Tree::Node(kids) => kids
                .iter()
                .map(|k| match k {
                    Kid::Tail => 1,
                    Kid::Sub(t) => t.arity(),
                })
                .sum(),
        }
    }

    /// Number of vertices.
    pub fn vertices(&self) -> usize {
        match self {
            Tree::Trivial => 0,
            Tree::Node(kids) => {
                1 + kids
                    .iter()
                    .map(|k| match k {
                        Kid::Tail => 0,
                        Kid::Sub(t) => t.vertices(),
                    })
                    .sum::<usize>()
            }
        }
    }

    /// Canonical compact literal, e.g. `(*(*.).)`.
    pub fn compact(&self) -> String {
        let mut s = String::new();
        self.write(&mut s, false);
        s
    }

    /// Human-readable literal with spaces, e.g. `(* (* .) .)`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        self.write(&mut s, true);
        s
    }

    fn write(&self, out: &mut String, spaced: bool) {
        match self {
            Tree::Trivial => out.push('|'),
            Tree::Node(kids) => {
                out.push_str("(*");
                for k in kids {
                    if spaced {
                        out.push(' ');
                    }
                    match k {
                        Kid::Tail => out.push('.'),
                        Kid::Sub(t) => t.write(out, spaced),
                    }
                }
                out.push(')');
            }
        }
    }

    /// Parse a literal (spaces optional): `|`, `(*)`, `(* (* .) .)`, …
    pub fn parse(literal: &str) -> Result<Tree> {
        let chars: Vec<char> = literal.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0usize;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!(
                "trailing characters after tree literal `{literal}`"
            )));
        }
        Ok(t)
    }

    /// Canonical representative of the symmetry class: children sorted
    /// recursively by compact literal.
    pub fn canonical(&self) -> Tree {
        match self {
            Tree::Trivial => Tree::Trivial,
            Tree::Node(kids) => {
                let mut sorted: Vec<Kid> = kids
                    .iter()
                    .map(|k| match k {
                        Kid::Tail => Kid::Tail,
                        Kid::Sub(t) => Kid::Sub(t.canonical()),
                    })
                    .collect();
                sorted.sort_by_key(kid_sort_key);
                Tree::Node(sorted)
            }
        }
    }

    /// Order of the automorphism group of the symmetry class: at each vertex
    /// the factorials of the multiplicities of isomorphic child slots (tails
    /// are mutually interchangeable), times the subtree contributions.
    pub fn aut_order(&self) -> u64 {
        match self {
            Tree::Trivial => 1,
            Tree::Node(kids) => {
                let mut keys: Vec<String> = kids.iter().map(|k| kid_sort_key(k)).collect();
                keys.sort();
                let mut total = 1u64;
                let mut run = 1u64;
                for i in 1..=keys.len() {
                    if i < keys.len() && keys[i] == keys[i - 1] {
                        run += 1;
                    } else {
                        total *= factorial_u64(run);
                        run = 1;
                    }
                }
                for k in kids {
                    if let Kid::Sub(t) = k {
                        total *= t.aut_order();
                    }
                }
                total
            }
        }
    }

    /// True when every vertex has exactly `k` child slots (tails included).
    pub fn is_k_regular(&self, k: usize) -> bool {
        match self {
            Tree::Trivial => true,
            Tree::Node(kids) => {
                kids.len() == k
                    && kids.iter().all(|c| match c {
                        Kid::Tail => true,
                        Kid::Sub(t) => t.is_k_regular(k),
                    })
            }
        }
    }
}

fn kid_sort_key(k: &Kid) -> String {
    match k {
        Kid::Tail => ".".to_string(),
        Kid::Sub(t) => t.compact(),
    }
}

fn factorial_u64(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<Tree> {
    match chars.get(*pos) {
        Some('|') => {
            *pos += 1;
            Ok(Tree::Trivial)
        }
        Some('(') => parse_node(chars, pos),
        other => Err(Error::Parse(format!(
            "expected `|` or `(*`, found {other:?} at position {}",
            *pos
        ))),
    }
}

fn parse_node(chars: &[char], pos: &mut usize) -> Result<Tree> {
    if chars.get(*pos) != Some(&'(') || chars.get(*pos + 1) != Some(&'*') {
        return Err(Error::Parse(format!("expected `(*` at position {}", *pos)));
    }
    *pos += 2;
    let mut kids = Vec::new();
    loop {
        match chars.get(*pos) {
            Some(')') => {
                *pos += 1;
                return Ok(Tree::Node(kids));
            }
            Some('.') => {
                *pos += 1;
                kids.push(Kid::Tail);
            }
            Some('(') => {
                let sub = parse_node(chars, pos)?;
                kids.push(Kid::Sub(sub));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected {other:?} inside tree literal at position {}",
                    *pos
                )))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Grafting, tails, amputation
// ---------------------------------------------------------------------------

/// Replace the i-th tail (1-based, planar order) of `t` by `s`.
pub fn graft(t: &Tree, i: usize, s: &Tree) -> Result<Tree> {
    let a = t.arity();
    if i == 0 || i > a {
        return Err(Error::IndexOutOfRange(format!(
            "tail index {i} for a tree with {a} tails"
        )));
    }
    if *s == Tree::Trivial {
        return Ok(t.clone());
    }
    if *t == Tree::Trivial {
        return Ok(s.clone());
    }
    let mut counter = 0usize;
    fn go(t: &Tree, i: usize, s: &Tree, counter: &mut usize) -> Tree {
        match t {
            Tree::Trivial => Tree::Trivial,
            Tree::Node(kids) => {
                let mut out = Vec::with_capacity(kids.len());
                for k in kids {
                    match k {
                        Kid::Tail => {
                            *counter += 1;
                            if *counter == i {
                                out.push(Kid::Sub(s.clone()));
                            } else {
                                out.push(Kid::Tail);
                            }
                        }
                        Kid::Sub(c) => out.push(Kid::Sub(go(c, i, s, counter))),
                    }
                }
                Tree::Node(out)
            }
        }
    }
    Ok(go(t, i, s, &mut counter))
}

/// Append the root of `s` as a new last child of preorder vertex `v` of `t`.
pub fn graft_plus(t: &Tree, v: usize, s: &Tree) -> Result<Tree> {
    if *s == Tree::Trivial {
        return Ok(t.clone());
    }
    let total = t.vertices();
    if v >= total {
        return Err(Error::IndexOutOfRange(format!(
            "vertex index {v} for a tree with {total} vertices"
        )));
    }
    fn go(t: &Tree, v: usize, s: &Tree, next: &mut usize) -> Tree {
        match t {
            Tree::Trivial => Tree::Trivial,
            Tree::Node(kids) => {
                let me = *next;
                *next += 1;
                let mut out = Vec::with_capacity(kids.len() + 1);
                for k in kids {
                    match k {
                        Kid::Tail => out.push(Kid::Tail),
                        Kid::Sub(c) => out.push(Kid::Sub(go(c, v, s, next))),
                    }
                }
                if me == v {
                    out.push(Kid::Sub(s.clone()));
                }
                Tree::Node(out)
            }
        }
    }
    let mut next = 0usize;
    Ok(go(t, v, s, &mut next))
}

/// Append one new tail as the last child of every vertex.
pub fn sharp(t: &Tree) -> Tree {
    match t {
        Tree::Trivial => Tree::Trivial,
        Tree::Node(kids) => {
            let mut out: Vec<Kid> = kids
                .iter()
                .map(|k| match k {
                    Kid::Tail => Kid::Tail,
                    Kid::Sub(c) => Kid::Sub(sharp(c)),
                })
                .collect();
            out.push(Kid::Tail);
            Tree::Node(out)
        }
    }
}

/// For each preorder vertex v of `t`, the 1-based planar position of the
/// tail that [`sharp`] appends at v, within the tails of `sharp(t)`.
pub fn sharp_positions(t: &Tree) -> Vec<usize> {
    let mut pos = vec![0usize; t.vertices()];
    fn go(t: &Tree, next_vertex: &mut usize, tails_seen: &mut usize, pos: &mut [usize]) {
        if let Tree::Node(kids) = t {
            let me = *next_vertex;
            *next_vertex += 1;
            for k in kids {
                match k {
                    Kid::Tail => *tails_seen += 1,
                    Kid::Sub(c) => go(c, next_vertex, tails_seen, pos),
                }
            }
            *tails_seen += 1; // the appended tail of v comes last
            pos[me] = *tails_seen;
        }
    }
    let mut nv = 0usize;
    let mut ts = 0usize;
    go(t, &mut nv, &mut ts, &mut pos);
    pos
}

/// Delete every tail. The trivial tree flattens to the empty forest (`None`).
pub fn flat(t: &Tree) -> Option<Tree> {
    match t {
        Tree::Trivial => None,
        Tree::Node(kids) => Some(Tree::Node(
            kids.iter()
                .filter_map(|k| match k {
                    Kid::Tail => None,
                    Kid::Sub(c) => Some(Kid::Sub(flat(c).expect("subtree has a vertex"))),
                })
                .collect(),
        )),
    }
}

/// Delete the i-th tail (1-based, planar order) of a non-trivial tree.
pub fn amputate(t: &Tree, i: usize) -> Result<Tree> {
    match t {
        Tree::Trivial => Err(Error::Validation(
            "cannot amputate the trivial tree".into(),
        )),
        Tree::Node(_) => {
            let a = t.arity();
            if i == 0 || i > a {
                return Err(Error::IndexOutOfRange(format!(
                    "tail index {i} for a tree with {a} tails"
                )));
            }
            fn go(t: &Tree, i: usize, counter: &mut usize) -> Tree {
                match t {
                    Tree::Trivial => Tree::Trivial,
                    Tree::Node(kids) => {
                        let mut out = Vec::with_capacity(kids.len());
                        for k in kids {
                            match k {
                                Kid::Tail => {
                                    *counter += 1;
                                    if *counter != i {
                                        out.push(Kid::Tail);
                                    }
                                }
                                Kid::Sub(c) => out.push(Kid::Sub(go(c, i, counter))),
                            }
                        }
                        Tree::Node(out)
                    }
                }
            }
            let mut counter = 0usize;
            Ok(go(t, i, &mut counter))
        }
    }
}

// ---------------------------------------------------------------------------
// Rooted cuts and the tree cooperad
// ---------------------------------------------------------------------------

/// All vertex subsets closed under taking parents (the empty set included),
/// as bitmasks over preorder indices.
fn rooted_subsets(t: &Tree) -> Vec<u64> {
    let v = t.vertices();
    assert!(v <= 60, "tree too large for subset enumeration");
    // parent[i] for preorder index i (root's parent = usize::MAX).
    let mut parent = vec![usize::MAX; v];
    fn walk(t: &Tree, my_parent: usize, next: &mut usize, parent: &mut [usize]) {
        if let Tree::Node(kids) = t {
            let me = *next;
            *next += 1;
            parent[me] = my_parent;
            for k in kids {
                if let Kid::Sub(c) = k {
                    walk(c, me, next, parent);
                }
            }
        }
    }
    let mut next = 0usize;
    walk(t, usize::MAX, &mut next, &mut parent);
    let mut out = Vec::new();
    'mask: for mask in 0u64..(1u64 << v) {
        for i in 0..v {
            if mask & (1 << i) != 0 && parent[i] != usize::MAX && mask & (1 << parent[i]) == 0 {
                continue 'mask;
            }
        }
        out.push(mask);
    }
    out
}

/// Cut `t` along a rooted subset: returns the base (kept vertices, with a
/// tail for each severed edge and each original tail) and the severed right
/// outputs in planar order (a trivial tree per original tail).
fn cut_at(t: &Tree, mask: u64) -> (Tree, Vec<Tree>) {
    if mask == 0 {
        return (Tree::Trivial, vec![t.clone()]);
    }
    fn go(t: &Tree, mask: u64, next: &mut usize, rights: &mut Vec<Tree>) -> Tree {
        match t {
            Tree::Trivial => Tree::Trivial,
            Tree::Node(kids) => {
                *next += 1;
                let mut out = Vec::with_capacity(kids.len());
                for k in kids {
                    match k {
                        Kid::Tail => {
                            rights.push(Tree::Trivial);
                            out.push(Kid::Tail);
                        }
                        Kid::Sub(c) => {
                            let child_idx = *next;
                            if mask & (1 << child_idx) != 0 {
                                out.push(Kid::Sub(go(c, mask, next, rights)));
                            } else {
                                // Severed branch: skip its preorder indices.
                                *next += c.vertices();
                                rights.push(c.clone());
                                out.push(Kid::Tail);
                            }
                        }
                    }
                }
                Tree::Node(out)
            }
        }
    }
    let mut next = 0usize;
    let mut rights = Vec::new();
    let base = go(t, mask, &mut next, &mut rights);
    (base, rights)
}

/// Decomposition of a planar tree filtered by an arity partition: the sum
/// over rooted cuts whose base has `parts.len()` tails and whose j-th severed
/// output has arity `parts[j]`. Slot 0 is the base.
pub fn tree_decompose(t: &Tree, parts: &[usize]) -> Result<TensorK> {
    if parts.iter().any(|&p| p == 0) {
        return Err(Error::BadPartition("partition parts must be ≥ 1".into()));
    }
    let total: usize = parts.iter().sum();
    if total != t.arity() {
        return Err(Error::BadPartition(format!(
            "partition sums to {total}, tree has arity {}",
            t.arity()
        )));
    }
    let mut out = TensorK::zero();
    for mask in rooted_subsets(t) {
        let (base, rights) = cut_at(t, mask);
        if rights.len() != parts.len() {
            continue;
        }
        if rights.iter().zip(parts).any(|(r, &p)| r.arity() != p) {
            continue;
        }
        let mut slots = Vec::with_capacity(1 + rights.len());
        slots.push(base.compact());
        slots.extend(rights.iter().map(|r| r.compact()));
        out.add_term(slots, Coeff::one());
    }
    Ok(out)
}

/// The cooperad of rooted trees with tails; `planar` keeps the planar order,
/// otherwise keys and outputs are canonical symmetry classes.
pub struct TreeCooperad {
    pub planar: bool,
}

impl TreeCooperad {
    fn tree(&self, key: &str) -> Result<Tree> {
        let t = Tree::parse(key)?;
        let canon = self.canon_key(&t);
        if canon != key {
            return Err(Error::Validation(format!(
                "tree key `{key}` is not canonical (expected `{canon}`)"
            )));
        }
        Ok(t)
    }

    fn canon_key(&self, t: &Tree) -> Key {
        if self.planar {
            t.compact()
        } else {
            t.canonical().compact()
        }
    }
}

impl Cooperad for TreeCooperad {
    fn name(&self) -> &str {
        if self.planar {
            "trees-planar"
        } else {
            "trees-sym"
        }
    }

    fn arity(&self, key: &str) -> Result<usize> {
        Ok(self.tree(key)?.arity())
    }

    fn hopf_degree(&self, key: &str) -> Result<usize> {
        Ok(self.tree(key)?.vertices())
    }

    fn cogamma(&self, key: &str, parts: &[usize]) -> Result<TensorK> {
        let t = self.tree(key)?;
        let raw = tree_decompose(&t, parts)?;
        if self.planar {
            return Ok(raw);
        }
        let mut out = TensorK::zero();
        for (slots, c) in raw.iter() {
            let canon: Vec<Key> = slots
                .iter()
                .map(|s| Ok(self.canon_key(&Tree::parse(s)?)))
                .collect::<Result<_>>()?;
            out.add_term(canon, c.clone());
        }
        Ok(out)
    }

    fn counit_eps1(&self, key: &str) -> Result<Coeff> {
        let t = self.tree(key)?;
        if t.arity() != 1 {
            return Err(Error::Validation(format!(
                "counit applies to arity-1 trees, `{key}` has arity {}",
                t.arity()
            )));
        }
        Ok(if t == Tree::Trivial { Coeff::one() } else { Coeff::zero() })
    }

    fn point(&self) -> Option<Key> {
        Some("|".to_string())
    }

    fn generators_of_arity(&self, _n: usize) -> Option<Vec<Key>> {
        None // infinitely many: any number of vertices
    }

    fn generators_of_degree(&self, _d: usize) -> Option<Vec<Key>> {
        None // infinitely many: any number of tails
    }

    fn parse_generator(&self, literal: &str) -> Result<Key> {
        let t = Tree::parse(literal)?;
        if t.arity() == 0 {
            return Err(Error::Validation(format!(
                "tailless tree `{}` has no inputs; only tailed trees are cooperad elements",
                t.compact()
            )));
        }
        Ok(self.canon_key(&t))
    }

    fn display_generator(&self, key: &str) -> String {
        match Tree::parse(key) {
            Ok(t) => t.pretty(),
            Err(_) => key.to_string(),
        }
    }

    fn validate_key(&self, key: &str) -> Result<()> {
        let t = self.tree(key)?;
        if t.arity() == 0 {
            return Err(Error::Validation(format!(
                "tailless tree `{}` has no inputs; only tailed trees are cooperad elements",
                t.compact()
            )));
        }
        Ok(())
    }
}

/// The bialgebra of tensor words in trees, planar or symmetric.
pub fn tree_bialgebra(planar: bool) -> FreeBialgebra<TreeCooperad> {
    let name = if planar { "trees-planar" } else { "trees-sym" };
    FreeBialgebra::new(TreeCooperad { planar }, !planar, name)
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All tailless planar trees with `n` vertices (Catalan many).
pub fn planar_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Tree::Node(Vec::new())];
    }
    let mut out = Vec::new();
    for parts in crate::cooperad::compositions(n - 1) {
        let mut seqs: Vec<Vec<Kid>> = vec![Vec::new()];
        for &p in &parts {
            let subs = planar_trees(p);
            let mut next = Vec::with_capacity(seqs.len() * subs.len());
            for s in &seqs {
                for sub in &subs {
                    let mut t = s.clone();
                    t.push(Kid::Sub(sub.clone()));
                    next.push(t);
                }
            }
            seqs = next;
        }
        out.extend(seqs.into_iter().map(Tree::Node));
    }
    out
}

/// All tailless symmetric trees with `n` vertices, canonical representatives.
pub fn symmetric_trees(n: usize) -> Vec<Tree> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    for t in planar_trees(n) {
        let c = t.canonical();
        if seen.insert(c.compact()) {
            out.push(c);
        }
    }
    out
}

/// All multisets of tailless symmetric trees with `n` total vertices,
/// each forest sorted by canonical key.
pub fn symmetric_forests(n: usize) -> Vec<Vec<Tree>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut out = Vec::new();
    for parts in crate::cooperad::compositions(n) {
        let mut seqs: Vec<Vec<Tree>> = vec![Vec::new()];
        for &p in &parts {
            let trees = symmetric_trees(p);
            let mut next = Vec::with_capacity(seqs.len() * trees.len());
            for s in &seqs {
                for t in &trees {
                    let mut f = s.clone();
                    f.push(t.clone());
                    next.push(f);
                }
            }
            seqs = next;
        }
        for mut f in seqs {
            f.sort_by_key(|t| t.compact());
            let sig: Vec<String> = f.iter().map(|t| t.compact()).collect();
            if seen.insert(sig) {
                out.push(f);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// The forest Hopf algebra
// ---------------------------------------------------------------------------

/// Canonical key of a forest of symmetric trees (sorted tensor word).
pub fn forest_key(trees: &[Tree]) -> Key {
    let mut keys: Vec<String> = trees.iter().map(|t| t.canonical().compact()).collect();
    keys.sort();
    encode_factors(&keys)
}

fn forest_from_key(key: &str) -> Result<Vec<Tree>> {
    crate::cooperad::decode_factors(key)?
        .iter()
        .map(|k| Tree::parse(k))
        .collect()
}

/// Coproduct of one tailless symmetric tree by rooted cuts: base on the
/// left, severed branch forest on the right. Keys are forest keys.
pub fn ck_delta_tree(t: &Tree) -> Result<Tensor2> {
    if t.arity() != 0 {
        return Err(Error::Validation(format!(
            "forest coproduct applies to tailless trees, `{}` has {} tails",
            t.compact(),
            t.arity()
        )));
    }
    let mut out = Tensor2::zero();
    for mask in rooted_subsets(t) {
        let (base, rights) = cut_at(t, mask);
        let left = if mask == 0 {
            UNIT_KEY.to_string()
        } else {
            forest_key(&[strip_tails(&base)])
        };
        let branches: Vec<Tree> = rights.clone();
        let right = forest_key(&branches);
        out.add_term(left, right, Coeff::one());
    }
    Ok(out)
}

fn strip_tails(t: &Tree) -> Tree {
    flat(t).expect("base of a nonempty cut has a vertex")
}

/// The Connes–Kreimer Hopf algebra of rooted forests.
pub struct CkForestAlgebra;

impl CkForestAlgebra {
    pub fn new() -> Self {
        CkForestAlgebra
    }
}

impl Default for CkForestAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for CkForestAlgebra {
    fn name(&self) -> &str {
        "ck"
    }

    fn delta_key(&self, key: &str) -> Result<Tensor2> {
        self.validate_key(key)?;
        let trees = forest_from_key(key)?;
        let mut acc = Tensor2::single(UNIT_KEY, UNIT_KEY, Coeff::one());
        for t in &trees {
            let dt = ck_delta_tree(t)?;
            let mut next = Tensor2::zero();
            for ((l1, r1), c1) in acc.iter() {
                for ((l2, r2), c2) in dt.iter() {
                    next.add_term(self.mul_key(l1, l2)?, self.mul_key(r1, r2)?, c1 * c2);
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    fn mul_key(&self, a: &str, b: &str) -> Result<Key> {
        let mut trees = forest_from_key(a)?;
        trees.extend(forest_from_key(b)?);
        Ok(forest_key(&trees))
    }

    fn degree_key(&self, key: &str) -> Result<usize> {
        Ok(forest_from_key(key)?.iter().map(|t| t.vertices()).sum())
    }

    fn basis_of_degree(&self, degree: usize) -> Result<Vec<Key>> {
        Ok(symmetric_forests(degree)
            .iter()
            .map(|f| forest_key(f))
            .collect())
    }

    fn parse(&self, literal: &str) -> Result<LinComb> {
        let lit = literal.trim();
        if lit == UNIT_KEY {
            return Ok(LinComb::basis(UNIT_KEY.to_string()));
        }
        let mut trees = Vec::new();
        for piece in lit.split(" * ") {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::Parse("empty product factor".into()));
            }
            if piece == UNIT_KEY {
                continue;
            }
            let t = Tree::parse(piece)?;
            // Tails in the literal are clipped: the forest algebra lives on
            // tailless trees, reached by the amputation projection.
            match flat(&t) {
                None => continue, // the trivial tree is the unit
                Some(bald) => trees.push(bald),
            }
        }
        Ok(LinComb::basis(forest_key(&trees)))
    }

    fn display_key(&self, key: &str) -> String {
        match forest_from_key(key) {
            Ok(trees) if trees.is_empty() => UNIT_KEY.to_string(),
            Ok(trees) => trees
                .iter()
                .map(|t| t.pretty())
                .collect::<Vec<_>>()
                .join(" * "),
            Err(_) => key.to_string(),
        }
    }

    fn validate_key(&self, key: &str) -> Result<()> {
        let trees = forest_from_key(key)?;
        for t in &trees {
            if t.arity() != 0 {
                return Err(Error::Validation(format!(
                    "forest key contains a tailed tree `{}`",
                    t.compact()
                )));
            }
            if *t == Tree::Trivial {
                return Err(Error::Validation(
                    "forest key contains the trivial tree; it is the unit".into(),
                ));
            }
        }
        if forest_key(&trees) != key {
            return Err(Error::Validation(format!("forest key `{key}` not canonical")));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Weighted deconcatenation on isomorphism classes
// ---------------------------------------------------------------------------

/// Weighted deconcatenation coproduct on isomorphism classes of tailed
/// forests: sum over rooted cuts of each tree, the severed branch classes
/// (first-applied) on the left and the base class on the right, weighted by
/// k! where k is the total number of severed outputs (= tails of the base).
pub fn deconcat_delta(forest: &[Tree]) -> Result<Tensor2> {
    // Per-tree menu of cuts: (base, branches).
    let menus: Vec<Vec<(Tree, Vec<Tree>)>> = forest
        .iter()
        .map(|t| {
            rooted_subsets(t)
                .into_iter()
                .map(|mask| cut_at(t, mask))
                .collect()
        })
        .collect();
    let mut out = Tensor2::zero();
    let mut choice = vec![0usize; menus.len()];
    loop {
        let mut bases = Vec::new();
        let mut branches = Vec::new();
        for (i, &c) in choice.iter().enumerate() {
            let (b, rs) = &menus[i][c];
            bases.push(b.clone());
            branches.extend(rs.iter().cloned());
        }
        let k = branches.len() as u64;
        let weight = cfrac(factorial_u64(k) as i64, 1);
        out.add_term(forest_key(&branches), forest_key(&bases), weight);
        // Advance the product counter.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < menus[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if menus.is_empty() {
            return Ok(out);
        }
    }
}

/// Weighted counit on forest classes: 1/n! on the class of n trivial trees
/// (n = 0 is the empty forest), 0 on every other class.
pub fn deconcat_counit(key: &str) -> Result<Coeff> {
    let trees = forest_from_key(key)?;
    if trees.iter().all(|t| *t == Tree::Trivial) {
        let n = trees.len() as u64;
        Ok(cfrac(1, factorial_u64(n) as i64))
    } else {
        Ok(Coeff::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cooperad::{antipode_in, check_coassoc_in, check_counit_laws};
    use crate::kernel::cint;

    fn t(lit: &str) -> Tree {
        Tree::parse(lit).unwrap()
    }

    #[test]
    fn literals_round_trip_in_both_styles() {
        for lit in ["|", "(*)", "(* .)", "(* (* .) .)", "(* (*) (* .))"] {
            let tree = t(lit);
            assert_eq!(tree.pretty(), lit);
            assert_eq!(Tree::parse(&tree.compact()).unwrap(), tree);
        }
        assert!(Tree::parse("(* .").is_err());
        assert!(Tree::parse("(* .) x").is_err());
        assert!(Tree::parse("(.)").is_err());
    }

    #[test]
    fn arity_and_vertices_count_slots() {
        assert_eq!(t("|").arity(), 1);
        assert_eq!(t("|").vertices(), 0);
        assert_eq!(t("(*)").arity(), 0);
        assert_eq!(t("(*)").vertices(), 1);
        let x = t("(* (* .) . (*))");
        assert_eq!(x.arity(), 2);
        assert_eq!(x.vertices(), 3);
    }

    #[test]
    fn grafting_replaces_the_right_tail() {
        let base = t("(* . (* .) .)");
        let shrub = t("(* .)");
        assert_eq!(graft(&base, 1, &shrub).unwrap(), t("(* (* .) (* .) .)"));
        assert_eq!(graft(&base, 2, &shrub).unwrap(), t("(* . (* (* .)) .)"));
        assert_eq!(graft(&base, 3, &shrub).unwrap(), t("(* . (* .) (* .))"));
        assert!(graft(&base, 4, &shrub).is_err());
        // Trivial tree is a two-sided unit for grafting.
        assert_eq!(graft(&base, 2, &Tree::Trivial).unwrap(), base);
        assert_eq!(graft(&Tree::Trivial, 1, &shrub).unwrap(), shrub);
    }

    #[test]
    fn graft_plus_appends_to_the_named_vertex() {
        let base = t("(* (* .) .)");
        let s = t("(*)");
        // Vertex 0 is the root, vertex 1 the inner node.
        assert_eq!(graft_plus(&base, 0, &s).unwrap(), t("(* (* .) . (*))"));
        assert_eq!(graft_plus(&base, 1, &s).unwrap(), t("(* (* . (*)) .)"));
        assert!(graft_plus(&base, 2, &s).is_err());
        assert!(graft_plus(&Tree::Trivial, 0, &s).is_err());
        assert_eq!(graft_plus(&base, 0, &Tree::Trivial).unwrap(), base);
    }

    #[test]
    fn sharp_flat_and_the_grafting_dictionary() {
        let a = t("(* (*))");
        assert_eq!(sharp(&a), t("(* (* .) .)"));
        assert_eq!(flat(&sharp(&a)).unwrap(), a);
        assert_eq!(flat(&Tree::Trivial), None);

        // (τ♯ ∘_{ℓ(v)} τ′♯)♭ = τ ∘⁺ᵥ τ′ for every vertex v of τ.
        let tau = t("(* (*) (* (*)))");
        let tau_p = t("(* (*))");
        let pos = sharp_positions(&tau);
        assert_eq!(pos.len(), tau.vertices());
        for v in 0..tau.vertices() {
            let lhs = flat(&graft(&sharp(&tau), pos[v], &sharp(&tau_p)).unwrap()).unwrap();
            let rhs = graft_plus(&tau, v, &tau_p).unwrap();
            assert_eq!(lhs, rhs, "vertex {v}");
        }
    }

    #[test]
    fn amputation_satisfies_the_exchange_identity() {
        // σ_j σ_i = σ_i σ_{j+1} for i ≤ j (apply right factor first).
        let samples = [t("(* . (* . .) .)"), t("(* . . .)"), t("(* (* .) . (* . .))")];
        for s in &samples {
            let a = s.arity();
            for i in 1..=a {
                for j in i..a.saturating_sub(1) {
                    let lhs = amputate(&amputate(s, i).unwrap(), j).unwrap();
                    let rhs = amputate(&amputate(s, j + 1).unwrap(), i).unwrap();
                    assert_eq!(lhs, rhs, "i={i} j={j} on {}", s.compact());
                }
            }
        }
        assert!(amputate(&Tree::Trivial, 1).is_err());
    }

    #[test]
    fn decompose_includes_trivial_base_and_full_base() {
        let x = t("(* (* .) .)"); // arity 2
        let whole = tree_decompose(&x, &[2]).unwrap();
        // Base | with the whole tree, plus cuts with a single branch slot.
        let mut found_trivial = false;
        for (slots, _) in whole.iter() {
            if slots[0] == "|" {
                assert_eq!(slots[1], x.compact());
                found_trivial = true;
            }
        }
        assert!(found_trivial);
        let fine = tree_decompose(&x, &[1, 1]).unwrap();
        // R = all vertices: base = x itself with its two tails, rights = (|,|).
        let full_term = vec![x.compact(), "|".to_string(), "|".to_string()];
        assert!(fine.iter().any(|(s, _)| *s == full_term));
        assert!(matches!(
            tree_decompose(&x, &[3]),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn planar_cogamma_orders_branches_by_position() {
        // Cherry with two distinct branches: cutting both children must list
        // them in planar order.
        let x = t("(* (* .) (* . .))"); // arity 3
        let dec = tree_decompose(&x, &[1, 2]).unwrap();
        let term = vec![
            t("(* . .)").compact(),
            t("(* .)").compact(),
            t("(* . .)").compact(),
        ];
        assert!(dec.iter().any(|(s, _)| *s == term));
        // The swapped partition picks no such cut at the root (arities 2,1
        // do not match the planar branch order), only deeper cuts.
        let dec_swapped = tree_decompose(&x, &[2, 1]).unwrap();
        assert!(!dec_swapped
            .iter()
            .any(|(s, _)| s[1] == t("(* . .)").compact() && s[2] == t("(* .)").compact()));
    }

    #[test]
    fn canonical_form_sorts_and_aut_orders_are_frozen() {
        let corolla3 = t("(* . . .)");
        assert_eq!(corolla3.aut_order(), 6);
        let chain = t("(* (* (*)))");
        assert_eq!(chain.aut_order(), 1);
        let cherry = t("(* (*) (*))");
        assert_eq!(cherry.aut_order(), 2);
        let mixed = t("(* (*) (* (*)) (*))");
        // Children sort by compact literal; "(*(*))" precedes "(*)".
        assert_eq!(mixed.canonical(), t("(* (* (*)) (*) (*))"));
        assert_eq!(mixed.aut_order(), 2);
        // Two identical branches each with aut 2.
        let twin = t("(* (* (*) (*)) (* (*) (*)))");
        assert_eq!(twin.aut_order(), 2 * 2 * 2);
    }

    #[test]
    fn enumeration_counts_match_catalan_and_otter() {
        let catalan = [1usize, 1, 2, 5, 14];
        for (i, &c) in catalan.iter().enumerate() {
            assert_eq!(planar_trees(i + 1).len(), c, "planar n={}", i + 1);
        }
        let otter = [1usize, 1, 2, 4, 9, 20, 48];
        for (i, &c) in otter.iter().enumerate() {
            assert_eq!(symmetric_trees(i + 1).len(), c, "symmetric n={}", i + 1);
        }
        // Forests with ≤ 4 total vertices: 1,1,3,7,... (partitions of trees).
        assert_eq!(symmetric_forests(0).len(), 1);
        assert_eq!(symmetric_forests(1).len(), 1);
        assert_eq!(symmetric_forests(2).len(), 3 - 1); // {••, t₂}
        assert_eq!(symmetric_forests(3).len(), 4); // •••, •t₂, chain, cherry
    }

    #[test]
    fn forest_coproduct_matches_frozen_values() {
        let ck = CkForestAlgebra::new();
        let dot = forest_key(&[t("(*)")]);
        let t2 = forest_key(&[t("(* (*))")]);
        let dotdot = ck.mul_key(&dot, &dot).unwrap();

        let d_dot = ck.delta_key(&dot).unwrap();
        let mut expect = Tensor2::zero();
        expect.add_term(dot.clone(), UNIT_KEY.to_string(), Coeff::one());
        expect.add_term(UNIT_KEY.to_string(), dot.clone(), Coeff::one());
        assert_eq!(d_dot, expect);

        let d_t2 = ck.delta_key(&t2).unwrap();
        let mut expect2 = Tensor2::zero();
        expect2.add_term(t2.clone(), UNIT_KEY.to_string(), Coeff::one());
        expect2.add_term(UNIT_KEY.to_string(), t2.clone(), Coeff::one());
        expect2.add_term(dot.clone(), dot.clone(), Coeff::one());
        assert_eq!(d_t2, expect2);

        // Cherry: base on the left; cutting one of the two branches counts twice.
        let cherry = forest_key(&[t("(* (*) (*))")]);
        let d_cherry = ck.delta_key(&cherry).unwrap();
        let mut expect3 = Tensor2::zero();
        expect3.add_term(cherry.clone(), UNIT_KEY.to_string(), Coeff::one());
        expect3.add_term(UNIT_KEY.to_string(), cherry.clone(), Coeff::one());
        expect3.add_term(dot.clone(), dotdot.clone(), Coeff::one());
        expect3.add_term(t2.clone(), dot.clone(), cint(2));
        assert_eq!(d_cherry, expect3);
    }

    #[test]
    fn forest_antipodes_match_frozen_values() {
        let ck = CkForestAlgebra::new();
        let dot = forest_key(&[t("(*)")]);
        let t2 = forest_key(&[t("(* (*))")]);
        let t3 = forest_key(&[t("(* (* (*)))")]);
        let bound = 8;

        let s_dot = antipode_in(&ck, &LinComb::basis(dot.clone()), bound).unwrap();
        assert_eq!(s_dot, LinComb::basis(dot.clone()).neg());

        let s_t2 = antipode_in(&ck, &LinComb::basis(t2.clone()), bound).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(t2.clone(), -Coeff::one());
        expect.add_term(ck.mul_key(&dot, &dot).unwrap(), Coeff::one());
        assert_eq!(s_t2, expect);

        let s_t3 = antipode_in(&ck, &LinComb::basis(t3.clone()), bound).unwrap();
        let mut expect3 = LinComb::zero();
        expect3.add_term(t3.clone(), -Coeff::one());
        expect3.add_term(ck.mul_key(&dot, &t2).unwrap(), cint(2));
        expect3.add_term(
            ck.mul_key(&ck.mul_key(&dot, &dot).unwrap(), &dot).unwrap(),
            -Coeff::one(),
        );
        assert_eq!(s_t3, expect3);
    }

    #[test]
    fn forest_coproduct_is_coassociative_and_counital() {
        let ck = CkForestAlgebra::new();
        for f in symmetric_forests(4) {
            let x = LinComb::basis(forest_key(&f));
            assert!(check_coassoc_in(&ck, &x).unwrap());
            assert!(check_counit_laws(&ck, &x).unwrap());
        }
    }

    #[test]
    fn tree_instance_delta_quotients_out_trivial_trees() {
        use crate::cooperad::HopfAlgebra;
        let h = tree_bialgebra(true);
        let key = encode_factors(&[t("(* .)").compact()]);
        let d = h.delta_key(&key).unwrap();
        // Cuts of (* .): R=∅ → 1⊗(* .); R={0} → (* .)⊗| → (* .)⊗1 after the
        // quotient (two ways: the branch slot is | and the tail slot is |).
        let mut expect = Tensor2::zero();
        expect.add_term(UNIT_KEY.to_string(), key.clone(), Coeff::one());
        expect.add_term(key.clone(), UNIT_KEY.to_string(), Coeff::one());
        assert_eq!(d, expect);
    }

    #[test]
    fn deconcatenation_torsor_and_counit_identities() {
        // Δ_dec on the class of n trivial trees is n!·[idₙ]⊗[idₙ].
        let id3 = vec![Tree::Trivial, Tree::Trivial, Tree::Trivial];
        let d = deconcat_delta(&id3).unwrap();
        let k = forest_key(&id3);
        assert_eq!(d, Tensor2::single(k.clone(), k.clone(), cint(6)));
        assert_eq!(deconcat_counit(&k).unwrap(), cfrac(1, 6));

        // Counit identities on tailless forests.
        for f in [vec![t("(* (*))")], vec![t("(*)"), t("(* (*) (*))")]] {
            let fkey = forest_key(&f);
            let d = deconcat_delta(&f).unwrap();
            let mut left_applied = LinComb::zero();
            let mut right_applied = LinComb::zero();
            for ((l, r), c) in d.iter() {
                left_applied.add_term(r.clone(), deconcat_counit(l).unwrap() * c);
                right_applied.add_term(l.clone(), deconcat_counit(r).unwrap() * c);
            }
            assert_eq!(left_applied, LinComb::basis(fkey.clone()), "ε̄⊗id on {fkey}");
            assert_eq!(right_applied, LinComb::basis(fkey.clone()), "id⊗ε̄ on {fkey}");
        }
    }

    #[test]
    fn regularity_predicate_checks_all_vertices() {
        assert!(t("(* (* . .) (* . .))").is_k_regular(2));
        assert!(!t("(* (* .) .)").is_k_regular(2));
        assert!(t("|").is_k_regular(3));
    }
}

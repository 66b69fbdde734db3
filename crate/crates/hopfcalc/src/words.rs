//! Words with boundary letters: the cooperad of intervals over a finite
//! alphabet and the resulting Hopf algebra of iterated-integral symbols.
//!
//! A generator is a word `(a₀; a₁ … a_{n−1}; a_n)` of n+1 letters, written
//! `I(a0; a1 ... ; an)`: arity n (its interior gaps), Hopf degree n−1 (its
//! middle letters). The decomposition map cuts the interval at the partial
//! sums of the arity partition:
//!
//! ```text
//! γ̌_{n₁,…,n_k}(a₀,…,a_n) = (a_{i₀},a_{i₁},…,a_{i_k}) ⊗ ⊗_j (a_{i_{j−1}},…,a_{i_j}),
//! ```
//!
//! with i_j = n₁+…+n_j. Summing (id⊗μ)γ̌ over all compositions gives the
//! classical coproduct on iterated-integral symbols, which is re-derived
//! here independently by enumerating subsets of interior positions so the
//! two constructions can be checked against each other. The module also
//! produces the standard families of relation generators (shuffle, path
//! composition, loops, inversion, exchange, two-point skeleton) used in the
//! coideal tests.

use std::str::FromStr;

use num::One;

use crate::cooperad::{encode_factors, Cooperad, FreeBialgebra, HopfAlgebra, UNIT_KEY};
use crate::error::{Error, Result};
use crate::kernel::{Coeff, Key, LinComb, Tensor2, TensorK};

/// Ordered alphabet; one character per letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(spec: &str) -> Result<Self> {
        let symbols: Vec<char> = spec.chars().collect();
        if symbols.is_empty() {
            return Err(Error::AlphabetMismatch("alphabet must be nonempty".into()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::AlphabetMismatch(format!(
                    "alphabet `{spec}` repeats symbol `{c}`"
                )));
            }
        }
        Ok(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, c: char) -> Result<usize> {
        self.symbols.iter().position(|&s| s == c).ok_or_else(|| {
            Error::AlphabetMismatch(format!(
                "symbol `{c}` is not in alphabet `{}`",
                self.symbols.iter().collect::<String>()
            ))
        })
    }

    pub fn symbol(&self, i: usize) -> Result<char> {
        self.symbols.get(i).copied().ok_or_else(|| {
            Error::AlphabetMismatch(format!(
                "letter index {i} out of range for alphabet of {} symbols",
                self.symbols.len()
            ))
        })
    }
}

/// Canonical key of a word generator from its letter indices, e.g. `w0,1,0`.
pub fn word_key(letters: &[usize]) -> Key {
    let mut out = String::from("w");
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&l.to_string());
    }
    out
}

/// Inverse of [`word_key`]; requires at least the two boundary letters.
pub fn parse_word_key(key: &str) -> Result<Vec<usize>> {
    let body = key
        .strip_prefix('w')
        .ok_or_else(|| Error::Parse(format!("word key `{key}` must start with `w`")))?;
    let letters: Vec<usize> = body
        .split(',')
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad letter index `{p}` in key `{key}`")))
        })
        .collect::<Result<_>>()?;
    if letters.len() < 2 {
        return Err(Error::Parse(format!(
            "word key `{key}` needs two boundary letters"
        )));
    }
    Ok(letters)
}

/// The interval cooperad on words over a fixed alphabet.
pub struct WordCooperad {
    pub alphabet: Alphabet,
}

impl WordCooperad {
    pub fn new(alphabet: &str) -> Result<Self> {
        Ok(Self { alphabet: Alphabet::new(alphabet)? })
    }

    fn letters_checked(&self, key: &str) -> Result<Vec<usize>> {
        let letters = parse_word_key(key)?;
        for &l in &letters {
            self.alphabet.symbol(l)?;
        }
        Ok(letters)
    }

    fn all_letter_rows(&self, len: usize) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(rows.len() * self.alphabet.len());
            for row in &rows {
                for l in 0..self.alphabet.len() {
                    let mut r = row.clone();
                    r.push(l);
                    next.push(r);
                }
            }
            rows = next;
        }
        rows
    }
}

impl Cooperad for WordCooperad {
    fn name(&self) -> &str {
        "words"
    }

    fn arity(&self, key: &str) -> Result<usize> {
        Ok(self.letters_checked(key)?.len() - 1)
    }

    fn hopf_degree(&self, key: &str) -> Result<usize> {
        Ok(self.letters_checked(key)?.len() - 2)
    }

    fn cogamma(&self, key: &str, parts: &[usize]) -> Result<TensorK> {
        let letters = self.letters_checked(key)?;
        let n = letters.len() - 1;
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadPartition("partition parts must be ≥ 1".into()));
        }
        let total: usize = parts.iter().sum();
        if total != n {
            return Err(Error::BadPartition(format!(
                "partition sums to {total}, word has arity {n}"
            )));
        }
        // Cut positions are the partial sums 0 = i₀ < i₁ < … < i_k = n.
        let mut cuts = vec![0usize];
        for &p in parts {
            cuts.push(cuts.last().unwrap() + p);
        }
        let left: Vec<usize> = cuts.iter().map(|&i| letters[i]).collect();
        let mut slots = vec![word_key(&left)];
        for j in 1..cuts.len() {
            slots.push(word_key(&letters[cuts[j - 1]..=cuts[j]]));
        }
        Ok(TensorK::single(slots, Coeff::one()))
    }

    fn counit_eps1(&self, key: &str) -> Result<Coeff> {
        let letters = self.letters_checked(key)?;
        if letters.len() != 2 {
            return Err(Error::Validation(format!(
                "counit applies to arity-1 words, `{key}` has arity {}",
                letters.len() - 1
            )));
        }
        Ok(Coeff::one())
    }

    fn point(&self) -> Option<Key> {
        Some(word_key(&[0, 0]))
    }

    fn generators_of_arity(&self, n: usize) -> Option<Vec<Key>> {
        if n == 0 {
            return Some(Vec::new());
        }
        Some(self.all_letter_rows(n + 1).iter().map(|r| word_key(r)).collect())
    }

    fn generators_of_degree(&self, d: usize) -> Option<Vec<Key>> {
        Some(self.all_letter_rows(d + 2).iter().map(|r| word_key(r)).collect())
    }

    fn parse_generator(&self, literal: &str) -> Result<Key> {
        let lit = literal.trim();
        if lit.starts_with('w') {
            let letters = self.letters_checked(lit)?;
            return Ok(word_key(&letters));
        }
        let inner = lit
            .strip_prefix("I(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `I(a0; ...; an)`, got `{lit}`")))?;
        let segments: Vec<&str> = inner.split(';').collect();
        if segments.len() != 3 {
            return Err(Error::Parse(format!(
                "word literal `{lit}` needs two `;` separators"
            )));
        }
        let one_symbol = |seg: &str| -> Result<usize> {
            let t = seg.trim();
            let mut chars = t.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => self.alphabet.index_of(c),
                _ => Err(Error::Parse(format!(
                    "boundary `{t}` must be a single letter"
                ))),
            }
        };
        let mut letters = vec![one_symbol(segments[0])?];
        for tok in segments[1].split_whitespace() {
            let mut chars = tok.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => letters.push(self.alphabet.index_of(c)?),
                _ => {
                    return Err(Error::Parse(format!(
                        "middle letter `{tok}` must be a single symbol"
                    )))
                }
            }
        }
        letters.push(one_symbol(segments[2])?);
        Ok(word_key(&letters))
    }

    fn display_generator(&self, key: &str) -> String {
        match self.letters_checked(key) {
            Ok(letters) => {
                let sym = |i: usize| self.alphabet.symbol(letters[i]).unwrap_or('?');
                let middle: Vec<String> = (1..letters.len() - 1)
                    .map(|i| sym(i).to_string())
                    .collect();
                format!(
                    "I({}; {}; {})",
                    sym(0),
                    middle.join(" "),
                    sym(letters.len() - 1)
                )
            }
            Err(_) => key.to_string(),
        }
    }

    fn validate_key(&self, key: &str) -> Result<()> {
        self.letters_checked(key).map(|_| ())
    }
}

/// The word Hopf algebra over a given alphabet; `symmetric` sorts tensor
/// words, giving the commutative polynomial model.
pub fn word_bialgebra(alphabet: &str, symmetric: bool) -> Result<FreeBialgebra<WordCooperad>> {
    let name = if symmetric { "words-sym" } else { "words" };
    Ok(FreeBialgebra::new(WordCooperad::new(alphabet)?, symmetric, name))
}

/// Independent coproduct on one word generator: enumerate subsets of the
/// interior positions directly (no decomposition maps involved), keep the
/// subword through the chosen positions on the left and the product of the
/// cut pieces on the right, and delete pieces with no middle letters. Output
/// keys are normalized tensor words of the given instance.
pub fn goncharov_delta(
    h: &FreeBialgebra<WordCooperad>,
    letters: &[usize],
) -> Result<Tensor2> {
    if letters.len() < 2 {
        return Err(Error::Parse("a word needs two boundary letters".into()));
    }
    let n = letters.len() - 1;
    let interior = n - 1; // positions 1..=n-1
    let mut out = Tensor2::zero();
    for mask in 0u64..(1u64 << interior) {
        let mut cuts = vec![0usize];
        for b in 0..interior {
            if mask & (1 << b) != 0 {
                cuts.push(b + 1);
            }
        }
        cuts.push(n);
        let left_letters: Vec<usize> = cuts.iter().map(|&i| letters[i]).collect();
        let left = if left_letters.len() == 2 {
            UNIT_KEY.to_string()
        } else {
            encode_factors(&[word_key(&left_letters)])
        };
        let mut right_factors = Vec::new();
        for j in 1..cuts.len() {
            let piece = &letters[cuts[j - 1]..=cuts[j]];
            if piece.len() > 2 {
                right_factors.push(word_key(piece));
            }
        }
        let right = h.normalize_key(&encode_factors(&right_factors))?;
        let right = if h.symmetric { right } else { encode_factors(&h.factors(&right)?) };
        out.add_term(left, right, Coeff::one());
    }
    Ok(out)
}

/// All riffle shuffles of two index sequences (with multiplicity).
pub fn shuffle_middles(u: &[usize], v: &[usize]) -> Vec<Vec<usize>> {
    fn go(u: &[usize], v: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if u.is_empty() && v.is_empty() {
            out.push(acc.clone());
            return;
        }
        if let Some((&h, rest)) = u.split_first() {
            acc.push(h);
            go(rest, v, acc, out);
            acc.pop();
        }
        if let Some((&h, rest)) = v.split_first() {
            acc.push(h);
            go(u, rest, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(u, v, &mut Vec::new(), &mut out);
    out
}

/// Σ over riffles of `I(a; w; b)` as a normalized element of the instance.
pub fn shuffle_sum(
    h: &FreeBialgebra<WordCooperad>,
    a: usize,
    u: &[usize],
    v: &[usize],
    b: usize,
) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for w in shuffle_middles(u, v) {
        let mut letters = vec![a];
        letters.extend(&w);
        letters.push(b);
        let key = h.normalize_key(&encode_factors(&[word_key(&letters)]))?;
        out.add_term(key, Coeff::one());
    }
    Ok(out)
}

/// The standard relation families on iterated-integral symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// I(a;u;b)·I(a;v;b) − Σ_{w ∈ u⧢v} I(a;w;b).
    Shuffle,
    /// I(a₀;a₁…a_m;a_{m+1}) − Σ_{k=0..m} I(a₀;a₁…a_k;x)·I(x;a_{k+1}…a_m;a_{m+1}).
    Path,
    /// I(a;w;a) with equal boundary letters.
    Loop,
    /// I(a₀;a₁…a_n;a_{n+1}) − (−1)ⁿ I(a_{n+1};a_n…a₁;a₀).
    Inversion,
    /// Binary alphabet only: I(a₀;…;a_{n+1}) − I(ā_{n+1};ā_n…ā₁;ā₀).
    Exchange,
    /// I(a₀;a₁;a₂): all degree-1 symbols vanish.
    TwoSkeleton,
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shuffle" => Ok(Self::Shuffle),
            "path" => Ok(Self::Path),
            "loop" => Ok(Self::Loop),
            "inversion" => Ok(Self::Inversion),
            "exchange" => Ok(Self::Exchange),
            "two_skeleton" | "two-skeleton" => Ok(Self::TwoSkeleton),
            other => Err(Error::Parse(format!(
                "unknown relation kind `{other}`; expected one of shuffle, path, loop, inversion, exchange, two_skeleton"
            ))),
        }
    }
}

/// Generators (as normalized instance elements) of one relation family, up
/// to and including the given Hopf degree.
pub fn relation_generators(
    kind: RelationKind,
    degree_bound: usize,
    alphabet: &str,
    symmetric: bool,
) -> Result<Vec<LinComb>> {
    let h = word_bialgebra(alphabet, symmetric)?;
    let size = h.coop.alphabet.len();
    let rows = |len: usize| h.coop.all_letter_rows(len);
    let single = |letters: &[usize]| -> Result<LinComb> {
        let key = h.normalize_key(&encode_factors(&[word_key(letters)]))?;
        Ok(LinComb::basis(key))
    };
    let mut out = Vec::new();
    match kind {
        RelationKind::Shuffle => {
            for m in 1..degree_bound.max(1) {
                let n_max = degree_bound - m;
                for n in 1..=n_max {
                    for a in 0..size {
                        for b in 0..size {
                            for u in rows(m) {
                                for v in rows(n) {
                                    let mut lhs_l = vec![a];
                                    lhs_l.extend(&u);
                                    lhs_l.push(b);
                                    let mut lhs_r = vec![a];
                                    lhs_r.extend(&v);
                                    lhs_r.push(b);
                                    let prod = h.mul_key(
                                        &encode_factors(&[word_key(&lhs_l)]),
                                        &encode_factors(&[word_key(&lhs_r)]),
                                    )?;
                                    let rel = LinComb::basis(prod)
                                        .sub(&shuffle_sum(&h, a, &u, &v, b)?);
                                    if !rel.is_zero() {
                                        out.push(rel);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        RelationKind::Path => {
            for m in 1..=degree_bound {
                for row in rows(m + 2) {
                    let middle = &row[1..=m];
                    for x in 0..size {
                        let mut rel = single(&row)?;
                        for k in 0..=m {
                            let mut first = vec![row[0]];
                            first.extend(&middle[..k]);
                            first.push(x);
                            let mut second = vec![x];
                            second.extend(&middle[k..]);
                            second.push(row[m + 1]);
                            let prod = h.mul_key(
                                &h.normalize_key(&encode_factors(&[word_key(&first)]))?,
                                &h.normalize_key(&encode_factors(&[word_key(&second)]))?,
                            )?;
                            rel = rel.sub(&LinComb::basis(prod));
                        }
                        if !rel.is_zero() {
                            out.push(rel);
                        }
                    }
                }
            }
        }
        RelationKind::Loop => {
            for m in 1..=degree_bound {
                for a in 0..size {
                    for mid in rows(m) {
                        let mut letters = vec![a];
                        letters.extend(&mid);
                        letters.push(a);
                        out.push(single(&letters)?);
                    }
                }
            }
        }
        RelationKind::Inversion => {
            for m in 1..=degree_bound {
                for row in rows(m + 2) {
                    let mut rev: Vec<usize> = row.clone();
                    rev.reverse();
                    let sign = if m % 2 == 0 { Coeff::one() } else { -Coeff::one() };
                    let rel = single(&row)?.sub(&single(&rev)?.scale(&sign));
                    if !rel.is_zero() {
                        out.push(rel);
                    }
                }
            }
        }
        RelationKind::Exchange => {
            if size != 2 {
                return Err(Error::AlphabetMismatch(format!(
                    "exchange relations need a binary alphabet, got {size} letters"
                )));
            }
            for m in 1..=degree_bound {
                for row in rows(m + 2) {
                    let swapped: Vec<usize> = row.iter().rev().map(|&l| 1 - l).collect();
                    let rel = single(&row)?.sub(&single(&swapped)?);
                    if !rel.is_zero() {
                        out.push(rel);
                    }
                }
            }
        }
        RelationKind::TwoSkeleton => {
            if degree_bound >= 1 {
                for row in rows(3) {
                    out.push(single(&row)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cooperad::{compositions, delta_lin, HopfAlgebra};
    use crate::kernel::cint;

    fn single(h: &FreeBialgebra<WordCooperad>, letters: &[usize]) -> Key {
        h.normalize_key(&encode_factors(&[word_key(letters)])).unwrap()
    }

    #[test]
    fn keys_and_literals_round_trip() {
        let c = WordCooperad::new("01").unwrap();
        let k = c.parse_generator("I(0; 1 1; 0)").unwrap();
        assert_eq!(k, "w0,1,1,0");
        assert_eq!(c.display_generator(&k), "I(0; 1 1; 0)");
        assert_eq!(c.parse_generator("I(0; ; 1)").unwrap(), "w0,1");
        assert_eq!(c.display_generator("w0,1"), "I(0; ; 1)");
        assert_eq!(c.parse_generator("w1,0,1").unwrap(), "w1,0,1");
        assert!(matches!(
            c.parse_generator("I(0; 2; 0)"),
            Err(Error::AlphabetMismatch(_))
        ));
        assert!(c.parse_generator("I(0; 1)").is_err());
        assert!(parse_word_key("w3").is_err());
    }

    #[test]
    fn cogamma_cuts_at_partial_sums() {
        let c = WordCooperad::new("ab").unwrap();
        // (a₀,a₁,a₂,a₃) with partition (2,1): cuts at 0, 2, 3.
        let w = word_key(&[0, 1, 1, 0]);
        let dec = c.cogamma(&w, &[2, 1]).unwrap();
        let expect = TensorK::single(
            vec![
                word_key(&[0, 1, 0]),
                word_key(&[0, 1, 1]),
                word_key(&[1, 0]),
            ],
            Coeff::one(),
        );
        assert_eq!(dec, expect);
        assert!(matches!(c.cogamma(&w, &[2, 2]), Err(Error::BadPartition(_))));
    }

    #[test]
    fn cooperadic_coassociativity_on_words() {
        // Refine each right slot of γ̌_{n₁,n₂} by inner partitions n¹, n²
        // versus decomposing the left slot of the fine partition n¹⧺n² by
        // (|n¹|, |n²|) and regrouping. The interval cooperad has single-term
        // decompositions, so compare the slot tuples directly.
        let c = WordCooperad::new("01").unwrap();
        let w = word_key(&[0, 1, 0, 1, 1]);
        let (outer, inner1, inner2) = (vec![2usize, 2], vec![1usize, 1], vec![2usize]);

        // Left-hand side: (id ⊗ γ̌_{n¹} ⊗ γ̌_{n²}) γ̌_{2,2}.
        let coarse = c.cogamma(&w, &outer).unwrap();
        let (cs, _) = coarse.iter().next().unwrap();
        let d1 = c.cogamma(&cs[1], &inner1).unwrap();
        let d2 = c.cogamma(&cs[2], &inner2).unwrap();
        let (s1, _) = d1.iter().next().unwrap();
        let (s2, _) = d2.iter().next().unwrap();
        let mut lhs = vec![cs[0].clone()];
        lhs.extend(s1.iter().cloned());
        lhs.extend(s2.iter().cloned());

        // Right-hand side: decompose by the fine partition n¹⧺n² = (1,1,2),
        // then cut its left output by the block sizes (2,1) and interleave.
        let fine_parts = [&inner1[..], &inner2[..]].concat();
        let fine = c.cogamma(&w, &fine_parts).unwrap();
        let (fs, _) = fine.iter().next().unwrap();
        let top = c
            .cogamma(&fs[0], &[inner1.len(), inner2.len()])
            .unwrap();
        let (ts, _) = top.iter().next().unwrap();
        let mut rhs = vec![ts[0].clone(), ts[1].clone()];
        rhs.extend(fs[1..=inner1.len()].iter().cloned());
        rhs.push(ts[2].clone());
        rhs.extend(fs[inner1.len() + 1..].iter().cloned());

        assert_eq!(lhs, rhs);
    }

    #[test]
    fn independent_coproduct_matches_free_construction() {
        for symmetric in [false, true] {
            let h = word_bialgebra("01", symmetric).unwrap();
            for letters in [
                vec![0, 1, 0],
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1, 0],
                vec![0, 1, 0, 1, 1, 0],
            ] {
                let oracle = goncharov_delta(&h, &letters).unwrap();
                let direct = h.delta_key(&single(&h, &letters)).unwrap();
                assert_eq!(oracle, direct, "letters {letters:?} sym {symmetric}");
            }
        }
    }

    #[test]
    fn coproduct_of_weight_two_word_is_pinned() {
        let h = word_bialgebra("01", false).unwrap();
        let full = single(&h, &[0, 1, 1, 0]);
        let d = h.delta_key(&full).unwrap();
        let mut expect = Tensor2::zero();
        expect.add_term(UNIT_KEY.to_string(), full.clone(), Coeff::one());
        expect.add_term(full.clone(), UNIT_KEY.to_string(), Coeff::one());
        expect.add_term(single(&h, &[0, 1, 0]), single(&h, &[1, 1, 0]), Coeff::one());
        expect.add_term(single(&h, &[0, 1, 0]), single(&h, &[0, 1, 1]), Coeff::one());
        assert_eq!(d, expect);
    }

    #[test]
    fn coproduct_term_count_is_two_to_the_interior() {
        let h = word_bialgebra("01", false).unwrap();
        let w = vec![0, 1, 0, 1, 0];
        let d = goncharov_delta(&h, &w).unwrap();
        let total: Coeff = d.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, cint(8)); // 2^(5-2) cut subsets
    }

    #[test]
    fn delta_is_coassociative_and_counital_on_samples() {
        let h = word_bialgebra("01", false).unwrap();
        for letters in [vec![0, 1, 0], vec![0, 1, 1, 0], vec![1, 0, 1, 0, 0]] {
            let x = LinComb::basis(single(&h, &letters));
            assert!(crate::cooperad::check_coassoc_in(&h, &x).unwrap());
            assert!(crate::cooperad::check_counit_laws(&h, &x).unwrap());
        }
    }

    #[test]
    fn shuffle_sum_has_binomial_many_terms() {
        let h = word_bialgebra("01", false).unwrap();
        let u = vec![0, 1];
        let v = vec![1, 1];
        let s = shuffle_sum(&h, 0, &u, &v, 1).unwrap();
        let total: Coeff = s.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, cint(6)); // C(4,2)
        // Pinned small case: x ⧢ y = xy + yx.
        let s2 = shuffle_sum(&h, 0, &[0], &[1], 1).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(single(&h, &[0, 0, 1, 1]), Coeff::one());
        expect.add_term(single(&h, &[0, 1, 0, 1]), Coeff::one());
        assert_eq!(s2, expect);
    }

    #[test]
    fn path_relations_split_at_every_cut_point() {
        // Degree 1: I(a₀;a₁;a₂) − I(x;a₁;a₂) − I(a₀;a₁;x) after deleting the
        // empty pieces.
        let h = word_bialgebra("01", false).unwrap();
        let gens = relation_generators(RelationKind::Path, 1, "01", false).unwrap();
        let mut expect = LinComb::basis(single(&h, &[0, 1, 0]));
        expect = expect.sub(&LinComb::basis(single(&h, &[0, 1, 0]))); // x = a₀ piece k=0
        expect = expect.sub(&LinComb::basis(single(&h, &[0, 1, 0]))); // k=1 with x = a₂
        // For row (0,1,0) and x = 0 both products collapse to the word itself,
        // so the relation is −I(0;1;0); confirm it is present.
        assert!(gens.iter().any(|g| *g == expect));
        // Every generator lives in degree ≤ 1 component spanned by 8 symbols.
        for g in &gens {
            for (k, _) in g.iter() {
                assert!(h.degree_key(k).unwrap() <= 1);
            }
        }
    }

    #[test]
    fn relation_families_have_expected_shapes() {
        let h = word_bialgebra("01", false).unwrap();
        // Loops: both boundaries equal.
        let loops = relation_generators(RelationKind::Loop, 2, "01", false).unwrap();
        assert_eq!(loops.len(), 2 * 2 + 2 * 4); // m=1: 2·2, m=2: 2·4
        // Two-skeleton: all 8 degree-1 symbols.
        let skel = relation_generators(RelationKind::TwoSkeleton, 3, "01", false).unwrap();
        assert_eq!(skel.len(), 8);
        // Inversion at degree 1 pairs w with its reversal, sign −(−1)¹ = +.
        let inv = relation_generators(RelationKind::Inversion, 1, "01", false).unwrap();
        let rel = LinComb::basis(single(&h, &[0, 1, 0]))
            .add(&LinComb::basis(single(&h, &[0, 1, 0]))); // reversal of (0,1,0) is itself
        assert!(inv.iter().any(|g| *g == rel));
        // Exchange needs a binary alphabet.
        assert!(matches!(
            relation_generators(RelationKind::Exchange, 1, "012", false),
            Err(Error::AlphabetMismatch(_))
        ));
        let exch = relation_generators(RelationKind::Exchange, 1, "01", false).unwrap();
        // I(0;1;0) − I(1;0;1) must appear.
        let want = LinComb::basis(single(&h, &[0, 1, 0]))
            .sub(&LinComb::basis(single(&h, &[1, 0, 1])));
        assert!(exch.iter().any(|g| *g == want));
    }

    #[test]
    fn shuffle_relations_are_primitive_like_under_delta() {
        // Sanity: each shuffle relation r of degree 2 satisfies
        // Δ(r) ∈ B⊗r + r⊗B + (relations)⊗B + B⊗(relations) — here just check
        // Δ(r) ≠ 0 computes without error and r itself is nonzero.
        let gens = relation_generators(RelationKind::Shuffle, 2, "01", true).unwrap();
        assert!(!gens.is_empty());
        let h = word_bialgebra("01", true).unwrap();
        for g in gens.iter().take(4) {
            let _ = delta_lin(&h, g).unwrap();
            assert!(!g.is_zero());
        }
    }

    #[test]
    fn free_cogamma_partition_families_cover_all_compositions() {
        let c = WordCooperad::new("01").unwrap();
        let w = word_key(&[0, 1, 1, 0]);
        let mut seen = 0;
        for parts in compositions(3) {
            let dec = c.cogamma(&w, &parts).unwrap();
            assert_eq!(dec.iter().count(), 1);
            seen += 1;
        }
        assert_eq!(seen, 4); // compositions of 3
    }
}

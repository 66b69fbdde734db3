//! Sparse fraction-free row space over arbitrary-precision integers.
//!
//! Rows are sparse vectors keyed by an ordered column type; the column order
//! (lexicographic for string keys) fixes the pivot choice, making every
//! elimination deterministic. All arithmetic is integer cross-multiplication
//! followed by content (gcd) normalization, so no rounding ever occurs and
//! intermediate growth stays polynomial.

use std::collections::BTreeMap;

use num::bigint::Sign;
use num::{BigInt, Integer, One, Zero};

use crate::kernel::{Coeff, Key};

/// Sparse integer row: column → nonzero coefficient.
pub type Row<C> = BTreeMap<C, BigInt>;

/// An incrementally built echelon row space. Each stored row is normalized
/// (content 1, positive leading coefficient) and indexed by its leading
/// (smallest) column, which no other stored row leads with.
#[derive(Clone, Debug, Default)]
pub struct RowSpace<C: Ord + Clone> {
    rows: BTreeMap<C, Row<C>>,
}

impl<C: Ord + Clone> RowSpace<C> {
    pub fn new() -> Self {
        Self { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a row; returns true when it enlarges the span.
    pub fn insert(&mut self, mut row: Row<C>) -> bool {
        normalize(&mut row);
        loop {
            let lead = match row.keys().next() {
                None => return false,
                Some(c) => c.clone(),
            };
            match self.rows.get(&lead) {
                Some(pivot) => {
                    eliminate(&mut row, pivot, &lead);
                    normalize(&mut row);
                }
                None => {
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Fully reduce `row` against the stored rows: eliminate every column
    /// that some stored row leads with. Returns `(remainder, lambda)` with
    /// `lambda · row ≡ remainder` modulo the span and `lambda > 0`; the
    /// remainder's support avoids all pivot columns.
    pub fn reduce_tracked(&self, mut row: Row<C>) -> (Row<C>, BigInt) {
        let mut lambda = BigInt::one();
        loop {
            // Smallest column of `row` that is a pivot column.
            let col = row
                .keys()
                .find(|c| self.rows.contains_key(*c))
                .cloned();
            let col = match col {
                None => break,
                Some(c) => c,
            };
            let pivot = &self.rows[&col];
            let pivot_lead = pivot[&col].clone();
            lambda *= &pivot_lead;
            eliminate(&mut row, pivot, &col);
            // Shrink the tracked fraction by the common content.
            let mut g = content(&row);
            g = g.gcd(&lambda);
            if !g.is_one() && !g.is_zero() {
                for v in row.values_mut() {
                    *v /= &g;
                }
                lambda /= &g;
            }
        }
        (row, lambda)
    }

    /// Membership test: does `row` lie in the span?
    pub fn contains(&self, row: Row<C>) -> bool {
        self.reduce_tracked(row).0.is_empty()
    }
}

/// `row := pivot_lead · row − row[col] · pivot` (clears `col`).
fn eliminate<C: Ord + Clone>(row: &mut Row<C>, pivot: &Row<C>, col: &C) {
    let a = row[col].clone();
    let p = pivot[col].clone();
    for v in row.values_mut() {
        *v *= &p;
    }
    for (c, w) in pivot {
        let delta = -&a * w;
        let entry = row.entry(c.clone()).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            row.remove(c);
        }
    }
    debug_assert!(!row.contains_key(col));
}

/// Gcd of all coefficients (zero for the empty row).
fn content<C: Ord>(row: &Row<C>) -> BigInt {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide by the content and make the leading coefficient positive.
fn normalize<C: Ord + Clone>(row: &mut Row<C>) {
    let g = content(row);
    if g.is_zero() {
        return;
    }
    let flip = match row.values().next() {
        Some(v) => v.sign() == Sign::Minus,
        None => false,
    };
    for v in row.values_mut() {
        *v /= &g;
        if flip {
            *v = -&*v;
        }
    }
}

/// Clear denominators of a rational sparse vector, producing an integer row
/// with the same span membership behaviour.
pub fn clear_denominators<'a, I>(entries: I) -> Row<Key>
where
    I: Iterator<Item = (&'a Key, &'a Coeff)>,
{
    let pairs: Vec<(&Key, &Coeff)> = entries.collect();
    let mut lcm = BigInt::one();
    for (_, c) in &pairs {
        lcm = lcm.lcm(c.denom());
    }
    let mut row = Row::new();
    for (k, c) in pairs {
        let v = c.numer() * (&lcm / c.denom());
        if !v.is_zero() {
            row.insert(k.clone(), v);
        }
    }
    row
}

//! Canonical partition types and the bead-set view.
//!
//! A [`BarPartition`] is a strictly decreasing sequence of positive integers
//! (a strict partition). Its bead set `A(λ)` contains every positive part
//! and every negative integer `-x` with `x` not a part; position 0 is always
//! empty. The set is infinite, so it is exposed as a membership query
//! ([`BeadSet`]) rather than materialized.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A strict partition: strictly decreasing positive parts, possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarPartition {
    parts: Vec<u32>,
}

/// A weakly decreasing partition, possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinaryPartition {
    parts: Vec<u32>,
}

impl BarPartition {
    /// Builds a bar partition, rejecting non-positive entries, repeats, and
    /// out-of-order part sequences with distinct errors.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for &x in parts {
            if x <= 0 {
                return Err(Error::NonPositivePart(x));
            }
            let x = x as u32;
            if let Some(&prev) = out.last() {
                if prev == x {
                    return Err(Error::RepeatedPart(x));
                }
                if prev < x {
                    return Err(Error::NotStrictlyDecreasing { prev, next: x });
                }
            }
            out.push(x);
        }
        Ok(Self { parts: out })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Internal constructor for part lists known to be strictly decreasing.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(parts.last().map_or(true, |&x| x > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written `|λ|`.
    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn contains_part(&self, x: u32) -> bool {
        // Parts are strictly decreasing.
        self.parts.binary_search_by(|p| x.cmp(p)).is_ok()
    }

    /// Membership in the bead set `A(λ)`: positive beads are the parts,
    /// negative positions hold a bead exactly when the mirrored part is
    /// absent, and 0 is never occupied.
    pub fn bead(&self, x: i64) -> bool {
        if x == 0 {
            false
        } else if x > 0 {
            x <= u32::MAX as i64 && self.contains_part(x as u32)
        } else {
            -x > u32::MAX as i64 || !self.contains_part((-x) as u32)
        }
    }

    /// Query view over `A(λ)`.
    pub fn beads(&self) -> BeadSet<'_> {
        BeadSet { partition: self }
    }

    /// All bead positions in `[lo, hi]`, ascending.
    pub fn beads_in_window(&self, lo: i64, hi: i64) -> Result<Vec<i64>> {
        if lo > hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        Ok((lo..=hi).filter(|&x| self.bead(x)).collect())
    }
}

impl OrdinaryPartition {
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for &x in parts {
            if x <= 0 {
                return Err(Error::NonPositivePart(x));
            }
            let x = x as u32;
            if let Some(&prev) = out.last() {
                if prev < x {
                    return Err(Error::NotWeaklyDecreasing { prev, next: x });
                }
            }
            out.push(x);
        }
        Ok(Self { parts: out })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&x| x > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part with 1-based index, 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> OrdinaryPartition {
        let rows = self.parts.len() as u32;
        let mut cols = Vec::with_capacity(self.largest() as usize);
        for j in 1..=self.largest() {
            // Number of rows with at least j boxes.
            let height = self.parts.iter().take_while(|&&r| r >= j).count() as u32;
            debug_assert!(height <= rows);
            cols.push(height);
        }
        OrdinaryPartition::from_sorted_unchecked(cols)
    }
}

impl From<&BarPartition> for OrdinaryPartition {
    fn from(bp: &BarPartition) -> Self {
        OrdinaryPartition::from_sorted_unchecked(bp.parts.clone())
    }
}

/// Query view over the bead set `A(λ)` of a bar partition.
#[derive(Clone, Copy)]
pub struct BeadSet<'a> {
    partition: &'a BarPartition,
}

impl BeadSet<'_> {
    pub fn contains(&self, x: i64) -> bool {
        self.partition.bead(x)
    }
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{part}")?;
    }
    Ok(())
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Display for OrdinaryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::BadPartitionText(s.to_string()))
        })
        .collect()
}

impl FromStr for BarPartition {
    type Err = Error;

    /// Parses the text encoding: comma-separated decreasing integers, empty
    /// string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        BarPartition::new(&parse_parts(s)?)
    }
}

impl FromStr for OrdinaryPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrdinaryPartition::new(&parse_parts(s)?)
    }
}

impl Serialize for BarPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BarPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(deserializer)?;
        BarPartition::new(&parts).map_err(D::Error::custom)
    }
}

impl Serialize for OrdinaryPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrdinaryPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(deserializer)?;
        OrdinaryPartition::new(&parts).map_err(D::Error::custom)
    }
}

/// All strict partitions of `n` in lexicographically decreasing order.
pub fn strict_partitions(n: u32) -> Vec<BarPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_strict(n, n, &mut stack, &mut out);
    out
}

fn gen_strict(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<BarPartition>) {
    if remaining == 0 {
        out.push(BarPartition::from_sorted_unchecked(stack.clone()));
        return;
    }
    let top = remaining.min(max_part);
    for m in (1..=top).rev() {
        stack.push(m);
        gen_strict(remaining - m, m.saturating_sub(1), stack, out);
        stack.pop();
    }
}

/// Materialized bead membership over a window, for hot loops. Outside the
/// window the answer is still exact: everything below is a bead, everything
/// above is not, provided the window spans `[-(largest), largest]`.
pub(crate) struct BeadWindow {
    lo: i64,
    bits: Vec<bool>,
}

impl BeadWindow {
    pub(crate) fn new(lam: &BarPartition, radius: i64) -> Self {
        let r = radius.max(lam.largest() as i64);
        let lo = -r;
        let bits = (lo..=r).map(|x| lam.bead(x)).collect();
        Self { lo, bits }
    }

    #[inline]
    pub(crate) fn contains(&self, x: i64) -> bool {
        let idx = x - self.lo;
        if idx < 0 {
            true
        } else if idx >= self.bits.len() as i64 {
            false
        } else {
            self.bits[idx as usize]
        }
    }
}

//! Classical James machinery on ordinary partitions: beta-sets, hook
//! lengths, s-cores, s-weights, s-quotients, and the double of a bar
//! partition.
//!
//! The beta-set of `α` at offset `k` is the strictly decreasing sequence
//! `α_1 - 1 + k > α_2 - 2 + k > ...` (with `α_i = 0` past the last part).
//! Moving beads up their runners on the s-abacus removes rim s-hooks; the
//! fully packed configuration is the s-core.

use crate::error::{Error, Result};
use crate::partition::{BarPartition, OrdinaryPartition};

/// Hook length of length at least 2 (the classical `s`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookLength(i64);

impl HookLength {
    pub fn new(s: i64) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidHookLength(s));
        }
        Ok(Self(s))
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

/// The `count` largest elements of the beta-set `B^α_k`, strictly decreasing.
pub fn beta_set_window(alpha: &OrdinaryPartition, k: i64, count: usize) -> Vec<i64> {
    (1..=count)
        .map(|i| alpha.part(i) as i64 - i as i64 + k)
        .collect()
}

/// Hook lengths of every node of the Young diagram, row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Hook length at 1-based (row, column).
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn count_of_length(&self, s: u32) -> usize {
        self.rows.iter().flatten().filter(|&&h| h == s).count()
    }
}

pub fn hook_lengths(alpha: &OrdinaryPartition) -> HookGrid {
    let conj = alpha.conjugate();
    let rows = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row_len)| {
            (1..=row_len)
                .map(|j| {
                    let arm = row_len - j;
                    let leg = conj.part(j as usize) - (i as u32 + 1);
                    arm + leg + 1
                })
                .collect()
        })
        .collect();
    HookGrid { rows }
}

// Finite description of B^α_0: the (possibly empty) prefix of elements
// >= -len, below which every integer belongs to the set.
pub(crate) struct BetaSet {
    prefix: Vec<i64>,
    floor: i64,
}

impl BetaSet {
    pub(crate) fn of(alpha: &OrdinaryPartition) -> Self {
        let len = alpha.len() as i64;
        let prefix = (1..=alpha.len())
            .map(|i| alpha.part(i) as i64 - i as i64)
            .collect();
        Self { prefix, floor: -len }
    }

    pub(crate) fn contains(&self, x: i64) -> bool {
        x < self.floor || self.prefix.binary_search_by(|e| x.cmp(e)).is_ok()
    }

    fn max_element(&self) -> i64 {
        self.prefix.first().copied().unwrap_or(self.floor - 1)
    }
}

// Packs every runner of the s-abacus: for each residue class the top bead
// moves down to (max bead - s * holes below it), after which the class is a
// downward ray. Returns the ray tops indexed by residue.
fn packed_tops(beta: &BetaSet, s: i64) -> Vec<i64> {
    let hi = beta.max_element().max(beta.floor) + s;
    let lo = beta.floor - s;
    (0..s)
        .map(|j| {
            let mut top = None;
            let mut holes = 0i64;
            let mut x = first_at_most(hi, j, s);
            while top.is_none() && x >= lo {
                if beta.contains(x) {
                    top = Some(x);
                }
                x -= s;
            }
            let top = top.expect("every runner of a beta-set holds a bead");
            while x >= lo {
                if !beta.contains(x) {
                    holes += 1;
                }
                x -= s;
            }
            top - s * holes
        })
        .collect()
}

// Largest integer <= hi congruent to j mod s.
fn first_at_most(hi: i64, j: i64, s: i64) -> i64 {
    hi - (hi - j).rem_euclid(s)
}

// Reads a partition back from downward-ray tops per residue class (a
// beta-set at offset 0, one ray per runner).
pub(crate) fn partition_from_tops(tops: &[i64], s: i64) -> OrdinaryPartition {
    let mut elements: Vec<i64> = Vec::new();
    let min_top = tops.iter().min().copied().unwrap_or(0);
    let bound = tops.len() as i64 * (tops.iter().max().unwrap_or(&0) - min_top + s);
    let floor = min_top - bound - s;
    for &t in tops {
        let mut x = t;
        while x >= floor {
            elements.push(x);
            x -= s;
        }
    }
    elements.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::new();
    for (i, &e) in elements.iter().enumerate() {
        let part = e + i as i64 + 1;
        if part <= 0 {
            debug_assert_eq!(part, 0, "beta-set charge must be 0");
            break;
        }
        parts.push(part as u32);
    }
    OrdinaryPartition::from_sorted_unchecked(parts)
}

/// The s-core: the unique partition left after removing all rim s-hooks.
pub fn s_core(alpha: &OrdinaryPartition, s: HookLength) -> OrdinaryPartition {
    let beta = BetaSet::of(alpha);
    let tops = packed_tops(&beta, s.get());
    partition_from_tops(&tops, s.get())
}

/// Number of rim s-hooks removed on the way to the s-core.
pub fn s_weight(alpha: &OrdinaryPartition, s: HookLength) -> u64 {
    let core = s_core(alpha, s);
    let diff = alpha.sum() - core.sum();
    debug_assert_eq!(diff % s.get() as u64, 0);
    diff / s.get() as u64
}

/// The s-quotient: one partition per runner of the s-abacus, indexed by the
/// residue of the runner at beta-set offset 0.
pub fn s_quotient(alpha: &OrdinaryPartition, s: HookLength) -> Vec<OrdinaryPartition> {
    let s = s.get();
    let beta = BetaSet::of(alpha);
    let hi = beta.max_element().max(beta.floor) + s;
    let lo = beta.floor - s * (alpha.len() as i64 + 2);
    (0..s)
        .map(|j| {
            // Runner positions j + s*y, viewed as a 1-runner abacus on y.
            let mut ys: Vec<i64> = Vec::new();
            let mut holes: Vec<i64> = Vec::new();
            let mut x = first_at_most(hi, j, s);
            while x >= lo {
                if beta.contains(x) {
                    ys.push((x - j).div_euclid(s));
                } else {
                    holes.push((x - j).div_euclid(s));
                }
                x -= s;
            }
            let mut parts = Vec::new();
            for &y in &ys {
                let below = holes.iter().filter(|&&h| h < y).count() as u32;
                if below == 0 {
                    break;
                }
                parts.push(below);
            }
            OrdinaryPartition::from_sorted_unchecked(parts)
        })
        .collect()
}

/// The double `D(λ)` of a bar partition: the union of the Young diagrams of
/// `(λ_1+1, λ_2+2, ..., λ_r+r)` and `(λ_1, λ_2+1, ..., λ_r+r-1)'`.
pub fn double(lam: &BarPartition) -> OrdinaryPartition {
    if lam.is_empty() {
        return OrdinaryPartition::empty();
    }
    let upper: Vec<u32> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + i as u32 + 1)
        .collect();
    let lower = OrdinaryPartition::from_sorted_unchecked(
        lam.parts()
            .iter()
            .enumerate()
            .map(|(i, &x)| x + i as u32)
            .collect(),
    )
    .conjugate();
    let rows = upper.len().max(lower.len());
    let parts = (0..rows)
        .map(|i| {
            let a = upper.get(i).copied().unwrap_or(0);
            a.max(lower.part(i + 1))
        })
        .collect();
    OrdinaryPartition::from_sorted_unchecked(parts)
}

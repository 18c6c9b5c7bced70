//! The bar-specific calculus: p-bar removal, p-bar-cores, p-bar-weights,
//! weight pairs, p-sets, p-quotients, and reconstruction from core plus
//! quotient.
//!
//! Removing a p-bar either drops a part `x` to `x - p` (deleting it when
//! `x = p`), or deletes two parts summing to `p`. On the p-runner abacus
//! both cases move a bead up its runner by one step together with the
//! mirror move, so the p-bar-core is reached by packing every runner.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{BarPartition, OrdinaryPartition};

/// An odd bar length `p >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BarLength(i64);

impl BarLength {
    pub fn new(p: i64) -> Result<Self> {
        if p < 3 || p % 2 == 0 {
            return Err(Error::InvalidBarLength(p));
        }
        Ok(Self(p))
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for BarLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn residue(x: i64, m: i64) -> i64 {
    x.rem_euclid(m)
}

// Scan window radius: every hole of A(λ) lies in [-largest, largest], so
// largest + p + 1 covers one full runner step below the lowest hole.
fn window_radius(lam: &BarPartition, p: i64) -> i64 {
    lam.largest() as i64 + p + 1
}

// Beads of A(λ) on each residue class mod p, descending, down to -radius.
fn runner_beads(lam: &BarPartition, p: i64) -> Vec<Vec<i64>> {
    let r = window_radius(lam, p);
    let mut runners = vec![Vec::new(); p as usize];
    for x in (-r..=lam.largest() as i64).rev() {
        if lam.bead(x) {
            runners[residue(x, p) as usize].push(x);
        }
    }
    runners
}

// Top position of each fully packed runner: max bead minus p per hole
// below it. The packed class is the downward ray from the top.
fn packed_tops(lam: &BarPartition, p: i64) -> Vec<i64> {
    let r = window_radius(lam, p);
    (0..p)
        .map(|j| {
            let mut x = lam.largest() as i64;
            x -= residue(x - j, p);
            while !lam.bead(x) {
                x -= p;
                debug_assert!(x >= -r);
            }
            let top = x;
            let mut holes = 0;
            x -= p;
            while x >= -r {
                if !lam.bead(x) {
                    holes += 1;
                }
                x -= p;
            }
            top - p * holes
        })
        .collect()
}

/// One removable p-bar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BarMove {
    /// Remove part `part`, reinserting `part - p` when positive.
    Single { part: u32 },
    /// Remove the two parts `high` and `low` with `high + low = p`.
    Pair { high: u32, low: u32 },
}

fn move_is_legal(lam: &BarPartition, p: i64, mv: &BarMove) -> bool {
    match *mv {
        BarMove::Single { part } => {
            lam.contains_part(part) && part as i64 >= p && !lam.bead(part as i64 - p)
        }
        BarMove::Pair { high, low } => {
            high as i64 + low as i64 == p
                && low >= 1
                && high > low
                && lam.contains_part(high)
                && lam.contains_part(low)
        }
    }
}

/// Exactly the legal p-bar removals, largest affected part first. Empty
/// iff the partition is a p-bar-core.
pub fn removable_bars(lam: &BarPartition, p: BarLength) -> Vec<BarMove> {
    let p = p.get();
    let mut moves = Vec::new();
    for &x in lam.parts() {
        let xi = x as i64;
        if xi >= p && !lam.bead(xi - p) {
            moves.push(BarMove::Single { part: x });
        } else if xi < p && 2 * xi > p && lam.contains_part((p - xi) as u32) {
            moves.push(BarMove::Pair {
                high: x,
                low: (p - xi) as u32,
            });
        }
    }
    moves
}

/// Applies one p-bar removal; the move must be legal for this partition.
pub fn remove_bar(lam: &BarPartition, p: BarLength, mv: &BarMove) -> Result<BarPartition> {
    if !move_is_legal(lam, p.get(), mv) {
        return Err(Error::IllegalBarMove { p: p.get() });
    }
    let mut parts: Vec<u32> = match *mv {
        BarMove::Single { part } => {
            let mut v: Vec<u32> = lam.parts().iter().copied().filter(|&x| x != part).collect();
            let dropped = part as i64 - p.get();
            if dropped > 0 {
                v.push(dropped as u32);
            }
            v
        }
        BarMove::Pair { high, low } => lam
            .parts()
            .iter()
            .copied()
            .filter(|&x| x != high && x != low)
            .collect(),
    };
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BarPartition::from_sorted_unchecked(parts))
}

/// The p-bar-core, computed by packing every runner of the p-runner abacus.
pub fn bar_core(lam: &BarPartition, p: BarLength) -> BarPartition {
    let tops = packed_tops(lam, p.get());
    let mut parts: Vec<u32> = Vec::new();
    for &top in &tops {
        let mut x = top;
        while x > 0 {
            parts.push(x as u32);
            x -= p.get();
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    BarPartition::from_sorted_unchecked(parts)
}

/// Number of p-bars removed on the way to the p-bar-core.
pub fn bar_weight(lam: &BarPartition, p: BarLength) -> u64 {
    let core = bar_core(lam, p);
    let diff = lam.sum() - core.sum();
    debug_assert_eq!(diff % p.get() as u64, 0);
    diff / p.get() as u64
}

pub fn is_bar_core(lam: &BarPartition, p: BarLength) -> bool {
    removable_bars(lam, p).is_empty()
}

/// A pair `(x, a)` with `x` a bead and `x - a p` not a bead; there are
/// exactly twice the p-bar-weight of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPair {
    pub bead: i64,
    pub steps: u32,
}

pub fn weight_pairs(lam: &BarPartition, p: BarLength) -> Vec<WeightPair> {
    let p = p.get();
    let floor = -(lam.largest() as i64);
    let mut pairs = Vec::new();
    for x in (floor..=lam.largest() as i64).rev() {
        if !lam.bead(x) {
            continue;
        }
        let mut a = 1u32;
        while x - a as i64 * p >= floor {
            if !lam.bead(x - a as i64 * p) {
                pairs.push(WeightPair { bead: x, steps: a });
            }
            a += 1;
        }
    }
    pairs
}

/// The p-set: for each residue i the smallest integer congruent to i mod p
/// outside the bead set of the p-bar-core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PSet {
    p: i64,
    entries: Vec<i64>,
}

impl PSet {
    pub fn modulus(&self) -> i64 {
        self.p
    }

    /// Entries indexed by residue; `entries()[i] ≡ i (mod p)`.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, r: usize) -> i64 {
        self.entries[r]
    }
}

pub fn p_set(lam: &BarPartition, p: BarLength) -> PSet {
    let entries: Vec<i64> = packed_tops(lam, p.get())
        .iter()
        .map(|&t| t + p.get())
        .collect();
    debug_assert_eq!(entries[0], 0);
    debug_assert!((1..p.get() as usize).all(|k| entries[k] + entries[p.get() as usize - k] == p.get()));
    debug_assert_eq!(entries.iter().sum::<i64>(), p.get() * (p.get() - 1) / 2);
    PSet {
        p: p.get(),
        entries,
    }
}

/// The p-quotient: a bar partition on runner 0 and ordinary partitions on
/// runners 1..p-1, conjugate in mirrored pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarQuotient {
    zero: BarPartition,
    rest: Vec<OrdinaryPartition>,
}

impl BarQuotient {
    /// Validates arity (p-1 ordinary components) and the conjugacy pairing
    /// between components j and p-j.
    pub fn new(p: BarLength, zero: BarPartition, rest: Vec<OrdinaryPartition>) -> Result<Self> {
        let expected = (p.get() - 1) as usize;
        if rest.len() != expected {
            return Err(Error::QuotientArity {
                expected,
                got: rest.len(),
            });
        }
        let q = Self { zero, rest };
        for j in 1..=(expected / 2) {
            let hi = p.get() as usize - j;
            if *q.component_ordinary(hi) != q.component_ordinary(j).conjugate() {
                return Err(Error::QuotientConjugacy { lo: j, hi });
            }
        }
        Ok(q)
    }

    pub fn modulus(&self) -> i64 {
        self.rest.len() as i64 + 1
    }

    /// Runner-0 component (a bar partition).
    pub fn zero(&self) -> &BarPartition {
        &self.zero
    }

    /// Ordinary component at residue `j`, `1 <= j <= p-1`.
    pub fn component_ordinary(&self, j: usize) -> &OrdinaryPartition {
        &self.rest[j - 1]
    }

    pub fn ordinary_components(&self) -> &[OrdinaryPartition] {
        &self.rest
    }

    pub fn is_trivial(&self) -> bool {
        self.zero.is_empty() && self.rest.iter().all(|c| c.is_empty())
    }

    /// Sum rule: `|λ| = |core| + p * (|zero| + Σ_j |component_j| / ... )`;
    /// this helper returns `|zero| + (Σ_{j=1}^{p-1} |component_j|) / 2`,
    /// which equals the p-bar-weight.
    pub fn weight(&self) -> u64 {
        let rest: u64 = self.rest.iter().map(|c| c.sum()).sum();
        debug_assert_eq!(rest % 2, 0);
        self.zero.sum() + rest / 2
    }
}

impl Serialize for BarQuotient {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("BarQuotient", 2)?;
        let mut components: Vec<Vec<u32>> = vec![self.zero.parts().to_vec()];
        components.extend(self.rest.iter().map(|c| c.parts().to_vec()));
        st.serialize_field("components", &components)?;
        st.serialize_field("zero_is_bar", &true)?;
        st.end()
    }
}

pub fn bar_quotient(lam: &BarPartition, p: BarLength) -> BarQuotient {
    let pv = p.get();
    let zero = BarPartition::from_sorted_unchecked(
        lam.parts()
            .iter()
            .filter(|&&x| x as i64 % pv == 0)
            .map(|&x| x / pv as u32)
            .collect(),
    );
    let delta = p_set(lam, p);
    let runners = runner_beads(lam, pv);
    let rest = (1..pv as usize)
        .map(|j| {
            let dj = delta.entry(j);
            let mut parts = Vec::new();
            for (i, &b) in runners[j].iter().enumerate() {
                let c = (b - dj) / pv + i as i64 + 1;
                debug_assert!(c >= 0);
                if c == 0 {
                    break;
                }
                parts.push(c as u32);
            }
            OrdinaryPartition::from_sorted_unchecked(parts)
        })
        .collect();
    BarQuotient { zero, rest }
}

/// Inverse of `(bar_core, bar_quotient)`: rebuilds the unique bar partition
/// with the given p-bar-core and p-quotient.
pub fn reconstruct(core: &BarPartition, quotient: &BarQuotient, p: BarLength) -> Result<BarPartition> {
    if quotient.modulus() != p.get() {
        return Err(Error::QuotientArity {
            expected: (p.get() - 1) as usize,
            got: quotient.rest.len(),
        });
    }
    if !is_bar_core(core, p) {
        return Err(Error::NotBarCore { p: p.get() });
    }
    let pv = p.get();
    let delta = p_set(core, p);
    let mut parts: Vec<u32> = quotient
        .zero
        .parts()
        .iter()
        .map(|&y| y * pv as u32)
        .collect();
    for j in 1..pv as usize {
        let comp = quotient.component_ordinary(j);
        let dj = delta.entry(j);
        // Positions p(c_i - i) + Δ_j are strictly decreasing in i.
        let mut i = 1i64;
        loop {
            let c = comp.part(i as usize) as i64;
            let pos = pv * (c - i) + dj;
            if pos <= 0 {
                debug_assert_ne!(pos, 0);
                break;
            }
            parts.push(pos as u32);
            i += 1;
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BarPartition::from_sorted_unchecked(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(parts: &[i64]) -> BarPartition {
        BarPartition::new(parts).unwrap()
    }

    fn op(parts: &[i64]) -> OrdinaryPartition {
        OrdinaryPartition::new(parts).unwrap()
    }

    fn p(n: i64) -> BarLength {
        BarLength::new(n).unwrap()
    }

    #[test]
    fn bar_length_validation() {
        assert!(BarLength::new(4).is_err());
        assert!(BarLength::new(1).is_err());
        assert!(BarLength::new(-3).is_err());
        assert!(BarLength::new(15).is_ok());
    }

    #[test]
    fn removable_examples() {
        let moves = removable_bars(&bp(&[9, 8, 7, 5, 3]), p(5));
        assert_eq!(
            moves,
            vec![
                BarMove::Single { part: 9 },
                BarMove::Single { part: 7 },
                BarMove::Single { part: 5 },
            ]
        );
        assert!(removable_bars(&bp(&[4, 3]), p(5)).is_empty());
        assert_eq!(
            removable_bars(&bp(&[3, 2]), p(5)),
            vec![BarMove::Pair { high: 3, low: 2 }]
        );
    }

    #[test]
    fn remove_examples() {
        let lam = bp(&[9, 8, 7, 5, 3]);
        assert_eq!(
            remove_bar(&lam, p(5), &BarMove::Single { part: 9 }).unwrap(),
            bp(&[8, 7, 5, 4, 3])
        );
        assert_eq!(
            remove_bar(&bp(&[5]), p(5), &BarMove::Single { part: 5 }).unwrap(),
            BarPartition::empty()
        );
        assert_eq!(
            remove_bar(&bp(&[3, 2]), p(5), &BarMove::Pair { high: 3, low: 2 }).unwrap(),
            BarPartition::empty()
        );
        assert_eq!(
            remove_bar(&lam, p(5), &BarMove::Single { part: 8 }),
            Err(Error::IllegalBarMove { p: 5 })
        );
    }

    #[test]
    fn core_examples() {
        assert_eq!(bar_core(&bp(&[9, 8, 7, 5, 3]), p(5)), bp(&[4, 3]));
        assert_eq!(bar_core(&BarPartition::empty(), p(3)), BarPartition::empty());
        let ups = bp(&[17, 12, 7, 6, 2, 1]);
        assert_eq!(bar_core(&ups, p(5)), ups);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(bar_weight(&bp(&[9, 8, 7, 5, 3]), p(5)), 5);
        assert_eq!(bar_weight(&bp(&[4, 3]), p(5)), 0);
        assert_eq!(bar_weight(&bp(&[3]), p(3)), 1);
    }

    #[test]
    fn weight_pair_examples() {
        assert!(weight_pairs(&bp(&[4, 3]), p(5)).is_empty());
        assert_eq!(weight_pairs(&bp(&[9, 8, 7, 5, 3]), p(5)).len(), 10);
        let wp = weight_pairs(&bp(&[3]), p(3));
        assert_eq!(wp.len(), 2);
        assert_eq!(wp[0], WeightPair { bead: 3, steps: 1 });
        assert_eq!(wp[1], WeightPair { bead: 3, steps: 2 });
    }

    #[test]
    fn p_set_examples() {
        assert_eq!(p_set(&bp(&[9, 8, 7, 5, 3]), p(5)).entries(), &[0, -4, -3, 8, 9]);
        assert_eq!(p_set(&BarPartition::empty(), p(5)).entries(), &[0, 1, 2, 3, 4]);
        assert_eq!(
            p_set(&bp(&[17, 12, 7, 6, 2, 1]), p(5)).entries(),
            &[0, 11, 22, -17, -6]
        );
    }

    #[test]
    fn quotient_examples() {
        let q = bar_quotient(&bp(&[9, 8, 7, 5, 3]), p(5));
        assert_eq!(q.zero(), &bp(&[1]));
        assert_eq!(q.component_ordinary(1), &op(&[1]));
        assert_eq!(q.component_ordinary(2), &op(&[3]));
        assert_eq!(q.component_ordinary(3), &op(&[1, 1, 1]));
        assert_eq!(q.component_ordinary(4), &op(&[1]));
        assert!(bar_quotient(&bp(&[4, 3]), p(5)).is_trivial());

        let sigma = bp(&[26, 21, 17, 16, 12, 11, 7, 6, 2, 1]);
        let q3 = bar_quotient(&sigma, p(3));
        assert_eq!(q3.zero(), &bp(&[7, 4, 2]));
        assert_eq!(q3.component_ordinary(2), &op(&[8, 6, 5, 3, 2, 1, 1]));
    }

    #[test]
    fn quotient_weight_rule() {
        for parts in [vec![9i64, 8, 7, 5, 3], vec![13, 10], vec![6, 2], vec![]] {
            let lam = bp(&parts);
            for m in [3i64, 5, 7] {
                let pl = p(m);
                assert_eq!(bar_quotient(&lam, pl).weight(), bar_weight(&lam, pl));
            }
        }
    }

    #[test]
    fn reconstruct_examples() {
        let pl = p(5);
        let core = bp(&[4, 3]);
        let q = BarQuotient::new(
            pl,
            bp(&[1]),
            vec![op(&[1]), op(&[3]), op(&[1, 1, 1]), op(&[1])],
        )
        .unwrap();
        assert_eq!(reconstruct(&core, &q, pl).unwrap(), bp(&[9, 8, 7, 5, 3]));

        let trivial = BarQuotient::new(pl, BarPartition::empty(), vec![OrdinaryPartition::empty(); 4]).unwrap();
        assert_eq!(reconstruct(&core, &trivial, pl).unwrap(), core);

        let only_zero = BarQuotient::new(pl, bp(&[1]), vec![OrdinaryPartition::empty(); 4]).unwrap();
        let lam = reconstruct(&core, &only_zero, pl).unwrap();
        assert_eq!(lam, bp(&[5, 4, 3]));
        assert_eq!(bar_quotient(&lam, pl).zero(), &bp(&[1]));
    }

    #[test]
    fn reconstruct_rejects_bad_inputs() {
        let pl = p(5);
        let q = BarQuotient::new(pl, bp(&[1]), vec![OrdinaryPartition::empty(); 4]).unwrap();
        assert_eq!(
            reconstruct(&bp(&[9, 8, 7, 5, 3]), &q, pl),
            Err(Error::NotBarCore { p: 5 })
        );
        assert_eq!(
            BarQuotient::new(pl, bp(&[1]), vec![op(&[2]), op(&[1]), op(&[1]), op(&[2])])
                .err()
                .unwrap(),
            Error::QuotientConjugacy { lo: 1, hi: 4 }
        );
        assert!(BarQuotient::new(pl, bp(&[1]), vec![op(&[1]); 2]).is_err());
    }
}

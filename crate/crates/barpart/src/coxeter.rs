//! The level-q action of the affine Coxeter group of type C tilde on
//! integers and bar partitions, relation checking, and bounded orbit
//! exploration.
//!
//! For coprime odd `p, q >= 3` the generator `δ_0` of the rank-(p-1)/2
//! group shifts integers congruent to `±q` mod p by `∓2q`; for
//! `1 <= i <= (p-1)/2`, `δ_i` shifts the classes `(i+1)q, -iq` down by `q`
//! and `iq, -(i+1)q` up by `q`. The action extends to bar partitions
//! through their bead sets. The mirror-image group acts with the roles of
//! p and q swapped, and the two actions commute.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bar::{residue, BarLength};
use crate::error::{Error, Result};
use crate::partition::BarPartition;

/// Which of the two commuting groups a generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// Rank (p-1)/2 group acting at level q.
    P,
    /// Rank (q-1)/2 group acting at level p.
    Q,
}

/// A generator of one of the two groups, written `P<i>` or `Q<i>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub side: Side,
    pub index: usize,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::P => 'P',
            Side::Q => 'Q',
        };
        write!(f, "{side}{}", self.index)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        let side = match chars.next() {
            Some('P') | Some('p') => Side::P,
            Some('Q') | Some('q') => Side::Q,
            _ => return Err(Error::BadGenerator(s.to_string())),
        };
        let index = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::BadGenerator(s.to_string()))?;
        Ok(Generator { side, index })
    }
}

/// Validated coprime odd pair `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionParams {
    p: BarLength,
    q: BarLength,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl ActionParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let p = BarLength::new(p)?;
        let q = BarLength::new(q)?;
        if gcd(p.get(), q.get()) != 1 {
            return Err(Error::NotCoprime {
                p: p.get(),
                q: q.get(),
            });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p.get()
    }

    pub fn q(&self) -> i64 {
        self.q.get()
    }

    pub fn p_len(&self) -> BarLength {
        self.p
    }

    pub fn q_len(&self) -> BarLength {
        self.q
    }

    /// Parameters with the roles of p and q exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }

    /// Largest generator index on the given side.
    pub fn max_index(&self, side: Side) -> usize {
        let m = match side {
            Side::P => self.p(),
            Side::Q => self.q(),
        };
        ((m - 1) / 2) as usize
    }

    fn check_index(&self, g: Generator) -> Result<()> {
        let max = self.max_index(g.side);
        if g.index > max {
            return Err(Error::GeneratorIndex {
                index: g.index,
                max,
            });
        }
        Ok(())
    }

    // (modulus, level) of the runner arithmetic for this side.
    fn modulus_level(&self, side: Side) -> (i64, i64) {
        match side {
            Side::P => (self.p(), self.q()),
            Side::Q => (self.q(), self.p()),
        }
    }

    /// Action of one generator on an integer.
    pub fn apply_int(&self, g: Generator, x: i64) -> Result<i64> {
        self.check_index(g)?;
        let (m, level) = self.modulus_level(g.side);
        Ok(level_generator_int(m, level, g.index, x))
    }

    /// Action of one generator on a bar partition, via its bead set.
    pub fn apply(&self, g: Generator, lam: &BarPartition) -> Result<BarPartition> {
        self.check_index(g)?;
        let (m, level) = self.modulus_level(g.side);
        Ok(level_generator_partition(m, level, g.index, lam))
    }

    /// Left-to-right composition: the first letter acts first.
    pub fn apply_word(&self, word: &[Generator], lam: &BarPartition) -> Result<BarPartition> {
        let mut cur = lam.clone();
        for &g in word {
            cur = self.apply(g, &cur)?;
        }
        Ok(cur)
    }
}

/// Level-`level` action of generator `i` of the group attached to odd
/// `modulus`, on an integer. `level` may be any positive integer coprime to
/// the modulus; level 1 gives the action on cores.
pub fn level_generator_int(modulus: i64, level: i64, i: usize, x: i64) -> i64 {
    let m = modulus;
    let l = level;
    let r = residue(x, m);
    if i == 0 {
        if r == residue(l, m) {
            x - 2 * l
        } else if r == residue(-l, m) {
            x + 2 * l
        } else {
            x
        }
    } else {
        let i = i as i64;
        if r == residue((i + 1) * l, m) || r == residue(-i * l, m) {
            x - l
        } else if r == residue(i * l, m) || r == residue(-(i + 1) * l, m) {
            x + l
        } else {
            x
        }
    }
}

/// Level action on a bar partition: apply the integer action pointwise to
/// the bead set. Only beads in `[-2*level, -1]` and the positive parts can
/// land on a positive position.
pub fn level_generator_partition(
    modulus: i64,
    level: i64,
    i: usize,
    lam: &BarPartition,
) -> BarPartition {
    let mut parts: Vec<u32> = Vec::with_capacity(lam.len() + 2);
    for &x in lam.parts() {
        let y = level_generator_int(modulus, level, i, x as i64);
        if y > 0 {
            parts.push(y as u32);
        }
    }
    for x in -2 * level..=-1 {
        if lam.bead(x) {
            let y = level_generator_int(modulus, level, i, x);
            if y > 0 {
                parts.push(y as u32);
            }
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
    BarPartition::from_sorted_unchecked(parts)
}

/// Level-1 action of generator `i` of the group attached to `p`, used on
/// p-bar-cores.
pub fn level1_apply(p: BarLength, i: usize, lam: &BarPartition) -> Result<BarPartition> {
    let max = ((p.get() - 1) / 2) as usize;
    if i > max {
        return Err(Error::GeneratorIndex { index: i, max });
    }
    Ok(level_generator_partition(p.get(), 1, i, lam))
}

/// One violated relation instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub side: Side,
    pub relation: String,
    pub x: i64,
}

/// Outcome of the pointwise relation check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub relations_checked: usize,
    pub points_checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the defining relations of both groups pointwise on
/// `[-window, window]`: involutions, commutations of distant generators,
/// length-6 braid relations, and for rank > 1 the two length-8 relations.
pub fn check_relations(params: &ActionParams, window: i64) -> Result<RelationReport> {
    let need = params.p() * params.q();
    if window < need {
        return Err(Error::WindowTooSmall { window, need });
    }
    let mut report = RelationReport::default();
    for side in [Side::P, Side::Q] {
        let (m, l) = params.modulus_level(side);
        let k = params.max_index(side);
        let g = |i: usize, x: i64| level_generator_int(m, l, i, x);
        let mut relations: Vec<(String, Box<dyn Fn(i64) -> (i64, i64)>)> = Vec::new();
        for i in 0..=k {
            relations.push((
                format!("d{i}^2 = 1"),
                Box::new(move |x| (g(i, g(i, x)), x)),
            ));
        }
        for i in 0..=k {
            for j in i + 2..=k {
                relations.push((
                    format!("d{i} d{j} = d{j} d{i}"),
                    Box::new(move |x| (g(i, g(j, x)), g(j, g(i, x)))),
                ));
            }
        }
        // length-6 braid relations between middle neighbours, 1 <= i <= (m-5)/2
        for i in 1..=k {
            if (i as i64) <= (m - 5) / 2 {
                relations.push((
                    format!("d{i} d{} d{i} = d{} d{i} d{}", i + 1, i + 1, i + 1),
                    Box::new(move |x| (g(i, g(i + 1, g(i, x))), g(i + 1, g(i, g(i + 1, x))))),
                ));
            }
        }
        if m > 3 {
            relations.push((
                "(d0 d1)^2 = (d1 d0)^2".to_string(),
                Box::new(move |x| {
                    (
                        g(0, g(1, g(0, g(1, x)))),
                        g(1, g(0, g(1, g(0, x)))),
                    )
                }),
            ));
            relations.push((
                format!("(d{} d{k})^2 = (d{k} d{})^2", k - 1, k - 1),
                Box::new(move |x| {
                    (
                        g(k - 1, g(k, g(k - 1, g(k, x)))),
                        g(k, g(k - 1, g(k, g(k - 1, x)))),
                    )
                }),
            ));
        }
        report.relations_checked += relations.len();
        for (name, rel) in &relations {
            for x in -window..=window {
                report.points_checked += 1;
                let (lhs, rhs) = rel(x);
                if lhs != rhs {
                    report.violations.push(RelationViolation {
                        side,
                        relation: name.clone(),
                        x,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Which generators the orbit search applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitGroups {
    P,
    Q,
    Both,
}

/// An orbit member together with one witness word reaching it.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitEntry {
    pub partition: BarPartition,
    pub via: Vec<String>,
}

/// Breadth-first exploration of the orbit of `start`, keeping every
/// partition whose largest part is at most `max_size`.
///
/// Generators can move a bead past the bound and back, so exploration
/// internally allows largest parts up to `max_size + slack` (default twice
/// the largest level in play) while only retaining results within
/// `max_size`. The output is sorted and deterministic.
pub fn orbit_bfs(
    params: &ActionParams,
    start: &BarPartition,
    groups: OrbitGroups,
    max_size: i64,
    slack: Option<i64>,
) -> Result<Vec<OrbitEntry>> {
    if max_size < start.largest() as i64 {
        return Err(Error::OrbitBoundTooSmall {
            bound: max_size,
            largest: start.largest() as i64,
        });
    }
    let mut gens: Vec<Generator> = Vec::new();
    let mut max_level = 0i64;
    if matches!(groups, OrbitGroups::P | OrbitGroups::Both) {
        gens.extend((0..=params.max_index(Side::P)).map(|index| Generator { side: Side::P, index }));
        max_level = max_level.max(params.q());
    }
    if matches!(groups, OrbitGroups::Q | OrbitGroups::Both) {
        gens.extend((0..=params.max_index(Side::Q)).map(|index| Generator { side: Side::Q, index }));
        max_level = max_level.max(params.p());
    }
    let explore_bound = max_size + slack.unwrap_or(2 * max_level);

    let mut visited: BTreeMap<BarPartition, Vec<Generator>> = BTreeMap::new();
    visited.insert(start.clone(), Vec::new());
    let mut frontier = vec![start.clone()];
    while !frontier.is_empty() {
        frontier.sort();
        let mut next = Vec::new();
        for lam in &frontier {
            let via = visited[lam].clone();
            for &g in &gens {
                let child = params.apply(g, lam)?;
                if child.largest() as i64 > explore_bound || visited.contains_key(&child) {
                    continue;
                }
                let mut w = via.clone();
                w.push(g);
                visited.insert(child.clone(), w);
                next.push(child);
            }
        }
        frontier = next;
    }
    Ok(visited
        .into_iter()
        .filter(|(lam, _)| lam.largest() as i64 <= max_size)
        .map(|(partition, via)| OrbitEntry {
            partition,
            via: via.iter().map(|g| g.to_string()).collect(),
        })
        .collect())
}

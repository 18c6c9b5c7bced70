//! The weight-stable set for a coprime odd pair (p, q): membership tests,
//! the q-weighted p-quotient, orbit-equality criteria, and the box-sum of a
//! p-bar-core with a q-bar-core.
//!
//! A bar partition belongs to the set when its p-bar-weight equals the
//! p-bar-weight of its q-bar-core. Equivalently there is no bad triple
//! `(a, b, c)` with `a ≡ b (mod p)`, `a ≡ c (mod q)`, `a` and `b + c - a`
//! beads, `b` and `c` non-beads. The set is symmetric in p and q and is a
//! union of orbits of the two commuting group actions.

use serde::Serialize;

use crate::bar::{
    bar_core, bar_quotient, bar_weight, is_bar_core, p_set, reconstruct, residue, BarQuotient,
};
use crate::coxeter::ActionParams;
use crate::error::{Error, Result};
use crate::partition::{BarPartition, BeadWindow, OrdinaryPartition};

/// A quotient component tagged by whether it sits on runner 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum QuotientComponent {
    Bar(BarPartition),
    Ordinary(OrdinaryPartition),
}

/// Multiset of pairs (residue of the p-set entry mod q, quotient
/// component), stored in canonical sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QWeightedQuotient {
    pairs: Vec<(i64, QuotientComponent)>,
}

impl QWeightedQuotient {
    pub fn pairs(&self) -> &[(i64, QuotientComponent)] {
        &self.pairs
    }
}

pub fn q_weighted_p_quotient(lam: &BarPartition, params: &ActionParams) -> QWeightedQuotient {
    let delta = p_set(lam, params.p_len());
    let quot = bar_quotient(lam, params.p_len());
    let mut pairs: Vec<(i64, QuotientComponent)> = Vec::with_capacity(params.p() as usize);
    pairs.push((
        residue(delta.entry(0), params.q()),
        QuotientComponent::Bar(quot.zero().clone()),
    ));
    for j in 1..params.p() as usize {
        pairs.push((
            residue(delta.entry(j), params.q()),
            QuotientComponent::Ordinary(quot.component_ordinary(j).clone()),
        ));
    }
    pairs.sort();
    QWeightedQuotient { pairs }
}

/// Integers witnessing failure of weight stability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BadTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// Smallest search window guaranteed adequate in practice: largest part
/// plus `p * q`.
pub fn default_triple_window(lam: &BarPartition, params: &ActionParams) -> i64 {
    lam.largest() as i64 + params.p() * params.q()
}

/// Searches `[-window, window]` for a bad triple; `window` must be at
/// least the largest part plus `p * q`.
pub fn find_bad_triple(
    lam: &BarPartition,
    params: &ActionParams,
    window: i64,
) -> Result<Option<BadTriple>> {
    let need = default_triple_window(lam, params);
    if window < need {
        return Err(Error::WindowTooSmall { window, need });
    }
    let (p, q) = (params.p(), params.q());
    let beads = BeadWindow::new(lam, window);
    let w = window;
    for a in (-w..=w).rev() {
        if !beads.contains(a) {
            continue;
        }
        let mut b = a + p * ((w - a) / p);
        while b >= -w {
            if !beads.contains(b) {
                // |b + c - a| <= w restricts c
                let c_hi = (w + a - b).min(w);
                let c_lo = (-w + a - b).max(-w);
                let mut c = c_hi - residue(c_hi - a, q);
                while c >= c_lo {
                    if !beads.contains(c) && beads.contains(b + c - a) {
                        return Ok(Some(BadTriple { a, b, c }));
                    }
                    c -= q;
                }
            }
            b -= p;
        }
    }
    Ok(None)
}

/// Weight-stability test: the p-bar-weight of the q-bar-core equals the
/// p-bar-weight of the partition itself.
pub fn in_cpq(lam: &BarPartition, params: &ActionParams) -> bool {
    let core_q = bar_core(lam, params.q_len());
    bar_weight(&core_q, params.p_len()) == bar_weight(lam, params.p_len())
}

/// Secondary route for the same predicate: absence of bad triples in the
/// default window.
pub fn in_cpq_by_bad_triples(lam: &BarPartition, params: &ActionParams) -> bool {
    find_bad_triple(lam, params, default_triple_window(lam, params))
        .expect("default window is always large enough")
        .is_none()
}

/// Two bar partitions lie in the same level-q orbit iff their q-weighted
/// p-quotients agree as multisets.
pub fn same_level_q_orbit(a: &BarPartition, b: &BarPartition, params: &ActionParams) -> bool {
    q_weighted_p_quotient(a, params) == q_weighted_p_quotient(b, params)
}

/// Orbit criterion restricted to p-bar-cores: equality of the residue
/// multisets of the two p-sets mod q.
pub fn same_orbit_cores(a: &BarPartition, b: &BarPartition, params: &ActionParams) -> Result<bool> {
    for lam in [a, b] {
        if !is_bar_core(lam, params.p_len()) {
            return Err(Error::NotBarCore { p: params.p() });
        }
    }
    let residues = |lam: &BarPartition| {
        let mut rs: Vec<i64> = p_set(lam, params.p_len())
            .entries()
            .iter()
            .map(|&d| residue(d, params.q()))
            .collect();
        rs.sort_unstable();
        rs
    };
    Ok(residues(a) == residues(b))
}

/// The box-sum: the unique weight-stable bar partition with p-bar-core
/// `mu` and q-bar-core `sigma`. Requires `mu` a p-bar-core, `sigma` a
/// q-bar-core, and equal mutual cores.
///
/// Construction: match the p-set positions of `mu` to those of the common
/// core by residue mod q (position 0 is forced onto position 0), pull the
/// p-quotient of `sigma` back through the match, and rebuild over `mu`.
/// Positions with equal residues carry equal components, so the choice of
/// match does not affect the result.
pub fn boxplus(
    mu: &BarPartition,
    sigma: &BarPartition,
    params: &ActionParams,
) -> Result<BarPartition> {
    let (p, q) = (params.p_len(), params.q_len());
    if !is_bar_core(mu, p) {
        return Err(Error::MuNotBarCore);
    }
    if !is_bar_core(sigma, q) {
        return Err(Error::SigmaNotBarCore);
    }
    let nu = bar_core(mu, q);
    if nu != bar_core(sigma, p) {
        return Err(Error::MutualCoreMismatch);
    }
    let d_mu = p_set(mu, p);
    let d_nu = p_set(&nu, p);
    let sq = bar_quotient(sigma, p);
    let pv = params.p() as usize;
    let mut used = vec![false; pv];
    used[0] = true;
    let mut rest = Vec::with_capacity(pv - 1);
    for j in 1..pv {
        let r = residue(d_mu.entry(j), params.q());
        let k = (1..pv)
            .find(|&k| !used[k] && residue(d_nu.entry(k), params.q()) == r)
            .expect("p-sets of mu and its q-bar-core have equal residue multisets mod q");
        used[k] = true;
        rest.push(sq.component_ordinary(k).clone());
    }
    let quotient = BarQuotient::new(p, sq.zero().clone(), rest)?;
    reconstruct(mu, &quotient, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::OrdinaryPartition;

    fn bp(parts: &[i64]) -> BarPartition {
        BarPartition::new(parts).unwrap()
    }

    fn op(parts: &[i64]) -> OrdinaryPartition {
        OrdinaryPartition::new(parts).unwrap()
    }

    fn params(p: i64, q: i64) -> ActionParams {
        ActionParams::new(p, q).unwrap()
    }

    #[test]
    fn q_weighted_examples() {
        let pa = params(5, 3);
        let got = q_weighted_p_quotient(&bp(&[9, 8, 7, 5, 3]), &pa);
        let mut expect = vec![
            (0, QuotientComponent::Bar(bp(&[1]))),
            (2, QuotientComponent::Ordinary(op(&[1]))),
            (0, QuotientComponent::Ordinary(op(&[3]))),
            (2, QuotientComponent::Ordinary(op(&[1, 1, 1]))),
            (0, QuotientComponent::Ordinary(op(&[1]))),
        ];
        expect.sort();
        assert_eq!(got.pairs(), &expect[..]);

        let empty = q_weighted_p_quotient(&BarPartition::empty(), &pa);
        let mut expect = vec![
            (0, QuotientComponent::Bar(BarPartition::empty())),
            (1, QuotientComponent::Ordinary(OrdinaryPartition::empty())),
            (2, QuotientComponent::Ordinary(OrdinaryPartition::empty())),
            (0, QuotientComponent::Ordinary(OrdinaryPartition::empty())),
            (1, QuotientComponent::Ordinary(OrdinaryPartition::empty())),
        ];
        expect.sort();
        assert_eq!(empty.pairs(), &expect[..]);

        // p-set residues of the first box-sum example core
        let mu = bp(&[27, 22, 17, 12, 7, 4, 2]);
        let got = q_weighted_p_quotient(&mu, &pa);
        let rs: Vec<i64> = got.pairs().iter().map(|(r, _)| *r).collect();
        assert_eq!(rs, vec![0, 0, 0, 2, 2]);
        assert!(got
            .pairs()
            .iter()
            .all(|(_, c)| matches!(c, QuotientComponent::Bar(x) if x.is_empty())
                || matches!(c, QuotientComponent::Ordinary(x) if x.is_empty())));
    }

    #[test]
    fn bad_triple_examples() {
        let pa = params(3, 5);
        let lam = bp(&[4, 3, 1]);
        assert_eq!(
            find_bad_triple(&lam, &pa, default_triple_window(&lam, &pa)).unwrap(),
            None
        );

        let lam = bp(&[13, 10]);
        let t = find_bad_triple(&lam, &pa, default_triple_window(&lam, &pa))
            .unwrap()
            .expect("(13,10) has a bad triple");
        assert_eq!(residue(t.a - t.b, 3), 0);
        assert_eq!(residue(t.a - t.c, 5), 0);
        assert!(lam.bead(t.a));
        assert!(lam.bead(t.b + t.c - t.a));
        assert!(!lam.bead(t.b));
        assert!(!lam.bead(t.c));

        // any q-bar-core has none
        let core = bar_core(&bp(&[14, 9, 6, 2, 1]), pa.q_len());
        assert_eq!(
            find_bad_triple(&core, &pa, default_triple_window(&core, &pa)).unwrap(),
            None
        );

        assert!(find_bad_triple(&lam, &pa, 5).is_err());
    }

    #[test]
    fn in_cpq_examples() {
        let pa = params(3, 5);
        assert!(in_cpq(&bp(&[4, 3, 1]), &pa));
        assert!(!in_cpq(&bp(&[13, 10]), &pa));
        assert!(in_cpq_by_bad_triples(&bp(&[4, 3, 1]), &pa));
        assert!(!in_cpq_by_bad_triples(&bp(&[13, 10]), &pa));
        // any q-bar-core is a member
        let core = bar_core(&bp(&[17, 12, 9, 5]), pa.q_len());
        assert!(in_cpq(&core, &pa));
    }

    #[test]
    fn orbit_equality_examples() {
        let pa = params(5, 3);
        let lam = bp(&[9, 8, 7, 5, 3]);
        assert!(same_level_q_orbit(&lam, &bp(&[13, 6, 5, 2]), &pa));
        assert!(same_level_q_orbit(&lam, &lam, &pa));
        assert!(!same_level_q_orbit(&lam, &BarPartition::empty(), &pa));
    }

    #[test]
    fn core_orbit_examples() {
        let pa = params(5, 3);
        assert!(same_orbit_cores(&bp(&[1]), &bp(&[6, 1]), &pa).unwrap());
        assert!(same_orbit_cores(&bp(&[4, 3]), &bp(&[4, 3]), &pa).unwrap());
        // residue multisets differ: [0,2,0,2,0] vs [0,1,2,0,1]
        assert!(!same_orbit_cores(&bp(&[4, 3]), &BarPartition::empty(), &pa).unwrap());
        assert!(same_orbit_cores(&bp(&[9, 8, 7, 5, 3]), &bp(&[1]), &pa).is_err());
    }

    #[test]
    fn boxplus_paper_sums() {
        let pa53 = params(5, 3);
        assert_eq!(
            boxplus(&bp(&[27, 22, 17, 12, 7, 4, 2]), &bp(&[11, 8, 5, 2]), &pa53).unwrap(),
            bp(&[32, 27, 17, 14, 12, 7, 5, 2])
        );
        let pa35 = params(3, 5);
        assert_eq!(
            boxplus(&bp(&[4, 1]), &bp(&[3]), &pa35).unwrap(),
            bp(&[4, 3, 1])
        );
        let pa57 = params(5, 7);
        let sigma = bp(&[19, 12, 5, 4]);
        assert_eq!(
            boxplus(&bp(&[21, 16, 11, 7, 6, 2, 1]), &sigma, &pa57).unwrap(),
            bp(&[26, 21, 12, 11, 7, 6, 5, 1])
        );
        assert_eq!(
            boxplus(&bp(&[21, 16, 11, 6, 2, 1]), &sigma, &pa57).unwrap(),
            bp(&[26, 21, 12, 11, 6, 5, 1])
        );
        assert_eq!(
            boxplus(&bp(&[23, 18, 13, 9, 8, 4, 3]), &sigma, &pa57).unwrap(),
            bp(&[33, 19, 18, 13, 8, 5, 4, 3])
        );
        assert_eq!(
            boxplus(&bp(&[16, 11, 7, 6, 2, 1]), &sigma, &pa57).unwrap(),
            bp(&[26, 12, 11, 7, 6, 5, 1])
        );
    }

    #[test]
    fn boxplus_sizes_and_cores() {
        let pa = params(5, 3);
        let mu = bp(&[27, 22, 17, 12, 7, 4, 2]);
        let sigma = bp(&[11, 8, 5, 2]);
        let lam = boxplus(&mu, &sigma, &pa).unwrap();
        let nu = bar_core(&sigma, pa.p_len());
        assert_eq!(lam.sum(), mu.sum() + sigma.sum() - nu.sum());
        assert_eq!(bar_core(&lam, pa.p_len()), mu);
        assert_eq!(bar_core(&lam, pa.q_len()), sigma);
        assert!(in_cpq(&lam, &pa));
    }

    #[test]
    fn boxplus_rejects_bad_inputs() {
        let pa = params(3, 5);
        assert_eq!(
            boxplus(&bp(&[4, 3, 1]), &bp(&[3]), &pa),
            Err(Error::MuNotBarCore)
        );
        assert_eq!(
            boxplus(&bp(&[4, 1]), &bp(&[5]), &pa),
            Err(Error::SigmaNotBarCore)
        );
        // (7,4,1) has 5-bar-core (7,4,1) != (3)'s p-core partner
        assert_eq!(
            boxplus(&bp(&[7, 4, 1]), &bp(&[3]), &pa),
            Err(Error::MutualCoreMismatch)
        );
    }
}

//! The maximal simultaneous bar-core for a coprime odd pair, the structure
//! of cores lying over it, and the bijection between its orbit and
//! `2^{1..(p-1)/2} x (p-bar-cores) x (q-bar-cores)`.
//!
//! The extremal partition has parts `((p-1)/2 - k) q - (l+1) p` over
//! `k, l >= 0`. A q-bar-core over it is determined by the runner-0
//! component `β` of its p-quotient (the other components are the double of
//! `β` and its conjugate); a p-bar-core over it is determined by the
//! runner-0 component `α` of its q-quotient together with one free
//! bead choice per symmetric runner pair, giving `2^{(p-1)/2}` candidates.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bar::{bar_core, bar_quotient, is_bar_core, residue, BarQuotient};
use crate::coxeter::ActionParams;
use crate::cpq::{boxplus, in_cpq};
use crate::error::{Error, Result};
use crate::ordinary::{double, partition_from_tops, BetaSet};
use crate::partition::{BarPartition, OrdinaryPartition};

/// The largest partition that is both a p-bar-core and a q-bar-core;
/// swapping the parameters gives the mirror partition.
pub fn yin_yang(params: &ActionParams) -> BarPartition {
    let (p, q) = (params.p(), params.q());
    let mut parts: Vec<u32> = Vec::new();
    for k in 0..=(p - 1) / 2 {
        let mut l = 0;
        loop {
            let part = ((p - 1) / 2 - k) * q - (l + 1) * p;
            if part <= 0 {
                break;
            }
            parts.push(part as u32);
            l += 1;
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    BarPartition::from_sorted_unchecked(parts)
}

/// Membership in the orbit of the extremal partition under both group
/// actions: weight-stable with doubly-reduced core equal to it.
pub fn upsilon_orbit_contains(lam: &BarPartition, params: &ActionParams) -> bool {
    in_cpq(lam, params)
        && bar_core(&bar_core(lam, params.q_len()), params.p_len()) == yin_yang(params)
}

/// The unique q-bar-core with p-bar-core the extremal partition and
/// runner-0 p-quotient component `beta`: the remaining components are
/// `D(beta)` on the residues `i*q mod p` for `1 <= i <= (p-1)/2` and its
/// conjugate elsewhere.
pub fn sigma_from_beta(beta: &BarPartition, params: &ActionParams) -> Result<BarPartition> {
    let (p, q) = (params.p_len(), params.q_len());
    if !is_bar_core(beta, q) {
        return Err(Error::NotBarCore { p: q.get() });
    }
    let ups = yin_yang(params);
    let d = double(beta);
    let d_conj = d.conjugate();
    let pv = p.get();
    let mut upper_classes = vec![false; pv as usize];
    for i in 1..=(pv - 1) / 2 {
        upper_classes[residue(i * q.get(), pv) as usize] = true;
    }
    let rest: Vec<OrdinaryPartition> = (1..pv as usize)
        .map(|j| if upper_classes[j] { d.clone() } else { d_conj.clone() })
        .collect();
    let quotient = BarQuotient::new(p, beta.clone(), rest)?;
    crate::bar::reconstruct(&ups, &quotient, p)
}

/// Test integers for the free-bead pattern over `alpha`: `a_i * q + p`
/// where `a_i` is the i-th largest element of the bead set of `alpha`,
/// for `i = 1 ..= (p-1)/2`.
pub fn x_test_integers(alpha: &BarPartition, params: &ActionParams) -> Vec<i64> {
    let count = ((params.p() - 1) / 2) as usize;
    let mut beads: Vec<i64> = alpha.parts().iter().map(|&x| x as i64).collect();
    let mut y = -1i64;
    while beads.len() < count {
        if alpha.bead(y) {
            beads.push(y);
        }
        y -= 1;
    }
    beads.truncate(count);
    beads.iter().map(|&a| a * params.q() + params.p()).collect()
}

// Free-bead pattern of a p-bar-core over alpha: which test integers are
// beads.
fn x_pattern(mu: &BarPartition, alpha: &BarPartition, params: &ActionParams) -> BTreeSet<usize> {
    x_test_integers(alpha, params)
        .iter()
        .enumerate()
        .filter(|(_, &t)| mu.bead(t))
        .map(|(i, _)| i + 1)
        .collect()
}

// Self-conjugate p-cores with largest part at most `max_part`, enumerated
// through their beta-set ray tops: one free top per symmetric runner pair,
// the mirror top and the fixed-point runner being determined.
fn self_conjugate_cores(p: i64, max_part: i64) -> Vec<OrdinaryPartition> {
    let free = ((p - 1) / 2) as usize;
    let mut out = Vec::new();
    let mut tops = vec![0i64; p as usize];
    tops[((p - 1) / 2) as usize] = -(p + 1) / 2;
    fn rec(
        r: usize,
        free: usize,
        p: i64,
        max_part: i64,
        tops: &mut Vec<i64>,
        out: &mut Vec<OrdinaryPartition>,
    ) {
        if r == free {
            let gamma = partition_from_tops(tops, p);
            if gamma.largest() as i64 <= max_part {
                debug_assert_eq!(gamma.conjugate(), gamma);
                out.push(gamma);
            }
            return;
        }
        // smallest value ≡ r (mod p) that is >= -max_part - p
        let mut t = -max_part - p;
        t += residue(r as i64 - t, p);
        while t <= max_part {
            tops[r] = t;
            tops[p as usize - 1 - r] = -1 - p - t;
            rec(r + 1, free, p, max_part, tops, out);
            t += p;
        }
    }
    rec(0, free, p, max_part, &mut tops, &mut out);
    out
}

/// The `2^{(p-1)/2}` p-bar-cores with q-bar-core the extremal partition
/// and runner-0 q-quotient component `alpha`, sorted by size then parts.
///
/// Candidates are built by bounded enumeration of self-conjugate p-cores
/// `γ` with largest part at most `alpha_1 + p`, filtered by the beta-set
/// sandwich `B^γ_{(1-p)/2} ⊆ A(alpha) ⊆ B^γ_{(p+1)/2}` and by checking
/// that the rebuilt partition really is a p-bar-core; the final count is
/// asserted.
pub fn mu_candidates(alpha: &BarPartition, params: &ActionParams) -> Result<Vec<BarPartition>> {
    let (p, q) = (params.p_len(), params.q_len());
    if !is_bar_core(alpha, p) {
        return Err(Error::NotBarCore { p: p.get() });
    }
    let ups = yin_yang(params);
    let bound = alpha.largest() as i64 + p.get();
    let mut found = Vec::new();
    for gamma in self_conjugate_cores(p.get(), bound) {
        if !sandwich_holds(&gamma, alpha, p.get()) {
            continue;
        }
        let rest = vec![gamma.clone(); (q.get() - 1) as usize];
        let quotient = BarQuotient::new(q, alpha.clone(), rest)?;
        let mu = crate::bar::reconstruct(&ups, &quotient, q)?;
        if is_bar_core(&mu, p) {
            found.push(mu);
        }
    }
    found.sort_by_key(|m| (m.sum(), m.parts().to_vec()));
    found.dedup();
    let expected = 1usize << ((p.get() - 1) / 2);
    if found.len() != expected {
        return Err(Error::CandidateCount {
            expected,
            got: found.len(),
        });
    }
    Ok(found)
}

// B^γ_{(1-p)/2} ⊆ A(alpha) ⊆ B^γ_{(p+1)/2}, checked on a window wide
// enough that both sides are trivially true outside it.
fn sandwich_holds(gamma: &OrdinaryPartition, alpha: &BarPartition, p: i64) -> bool {
    let beta = BetaSet::of(gamma);
    let m = gamma.largest() as i64 + alpha.largest() as i64 + p + 2;
    let lo_off = (1 - p) / 2;
    let hi_off = (p + 1) / 2;
    for x in -m..=m {
        if beta.contains(x - lo_off) && !alpha.bead(x) {
            return false;
        }
        if alpha.bead(x) && !beta.contains(x - hi_off) {
            return false;
        }
    }
    true
}

/// The triple side of the orbit bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpsilonTriple {
    #[serde(rename = "X")]
    pub x: BTreeSet<usize>,
    pub alpha: BarPartition,
    pub beta: BarPartition,
}

/// Forward direction of the bijection: an orbit member maps to its
/// free-bead pattern, the runner-0 component of its q-quotient, and the
/// runner-0 component of its p-quotient.
///
/// The pattern is evaluated on the p-bar-core of the input (for p-bar-core
/// inputs that is the input itself), which is what makes `phi` injective
/// and inverse to `psi` across the whole orbit.
pub fn phi(lam: &BarPartition, params: &ActionParams) -> Result<UpsilonTriple> {
    if !upsilon_orbit_contains(lam, params) {
        return Err(Error::NotInUpsilonOrbit);
    }
    let alpha = bar_quotient(lam, params.q_len()).zero().clone();
    let beta = bar_quotient(lam, params.p_len()).zero().clone();
    let mu = bar_core(lam, params.p_len());
    let x = x_pattern(&mu, &alpha, params);
    Ok(UpsilonTriple { x, alpha, beta })
}

/// Inverse direction: select the candidate core over `alpha` carrying the
/// pattern `X` and box-sum it with the q-bar-core over `beta`.
pub fn psi(triple: &UpsilonTriple, params: &ActionParams) -> Result<BarPartition> {
    let max = ((params.p() - 1) / 2) as usize;
    for &i in &triple.x {
        if i == 0 || i > max {
            return Err(Error::XIndexOutOfRange { index: i, max });
        }
    }
    let candidates = mu_candidates(&triple.alpha, params)?;
    let mu = candidates
        .into_iter()
        .find(|m| x_pattern(m, &triple.alpha, params) == triple.x)
        .expect("candidate patterns enumerate every subset of 1..=(p-1)/2");
    let sigma = sigma_from_beta(&triple.beta, params)?;
    boxplus(&mu, &sigma, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::bar_weight;

    fn bp(parts: &[i64]) -> BarPartition {
        BarPartition::new(parts).unwrap()
    }

    fn params(p: i64, q: i64) -> ActionParams {
        ActionParams::new(p, q).unwrap()
    }

    fn set(is: &[usize]) -> BTreeSet<usize> {
        is.iter().copied().collect()
    }

    #[test]
    fn yin_yang_examples() {
        assert_eq!(yin_yang(&params(5, 11)), bp(&[17, 12, 7, 6, 2, 1]));
        assert_eq!(yin_yang(&params(11, 5)), bp(&[14, 9, 4, 3]));
        assert_eq!(yin_yang(&params(3, 5)), bp(&[2]));
        assert_eq!(yin_yang(&params(5, 3)), bp(&[1]));
    }

    #[test]
    fn yin_yang_is_doubly_core() {
        for (p, q) in [(3, 5), (5, 3), (3, 7), (5, 7), (3, 11), (5, 11), (7, 11), (9, 13), (11, 13)] {
            let pa = params(p, q);
            let ups = yin_yang(&pa);
            assert!(is_bar_core(&ups, pa.p_len()), "({p},{q})");
            assert!(is_bar_core(&ups, pa.q_len()), "({p},{q})");
        }
    }

    #[test]
    fn yin_yang_p_set_closed_form() {
        // p-set consists of 0, q, ..., q(p-1)/2 and p-q, ..., p-q(p-1)/2.
        for (p, q) in [(5i64, 11i64), (3, 5)] {
            let pa = params(p, q);
            let ups = yin_yang(&pa);
            let mut expect: Vec<i64> = (0..=(p - 1) / 2).map(|n| n * q).collect();
            expect.extend((1..=(p - 1) / 2).map(|n| p - n * q));
            expect.sort_unstable();
            let mut got = crate::bar::p_set(&ups, pa.p_len()).entries().to_vec();
            got.sort_unstable();
            assert_eq!(got, expect, "({p},{q})");
        }
    }

    #[test]
    fn sigma_examples() {
        let pa = params(3, 5);
        assert_eq!(
            sigma_from_beta(&bp(&[7, 4, 2]), &pa).unwrap(),
            bp(&[26, 21, 17, 16, 12, 11, 7, 6, 2, 1])
        );
        assert_eq!(sigma_from_beta(&BarPartition::empty(), &pa).unwrap(), yin_yang(&pa));

        let pa53 = params(5, 3);
        let sigma = sigma_from_beta(&bp(&[2]), &pa53).unwrap();
        assert_eq!(bar_quotient(&sigma, pa53.p_len()).zero(), &bp(&[2]));
        assert!(is_bar_core(&sigma, pa53.q_len()));
        assert_eq!(bar_core(&sigma, pa53.p_len()), yin_yang(&pa53));

        assert_eq!(
            sigma_from_beta(&bp(&[5]), &pa),
            Err(Error::NotBarCore { p: 5 })
        );
    }

    #[test]
    fn sigma_quotient_pattern() {
        // p-quotient of sigma is (beta, D(beta), D(beta)') over residues.
        let pa = params(3, 5);
        let beta = bp(&[7, 4, 2]);
        let sigma = sigma_from_beta(&beta, &pa).unwrap();
        let quot = bar_quotient(&sigma, pa.p_len());
        assert_eq!(quot.zero(), &beta);
        // residue 5 mod 3 = 2 carries D(beta)
        assert_eq!(quot.component_ordinary(2), &double(&beta));
        assert_eq!(quot.component_ordinary(1), &double(&beta).conjugate());
    }

    #[test]
    fn mu_candidate_examples() {
        let pa = params(3, 5);
        let cands = mu_candidates(&bp(&[5, 2]), &pa).unwrap();
        assert_eq!(
            cands,
            vec![
                bp(&[25, 22, 19, 16, 13, 10, 7, 4, 1]),
                bp(&[37, 34, 31, 28, 25, 22, 19, 16, 13, 10, 7, 4, 1]),
            ]
        );

        let cands = mu_candidates(&BarPartition::empty(), &pa).unwrap();
        assert_eq!(cands.len(), 2);
        assert!(cands.contains(&bp(&[2])));
        assert!(cands.contains(&bp(&[7, 4, 1])));
        for mu in &cands {
            assert!(is_bar_core(mu, pa.p_len()));
            assert_eq!(bar_core(mu, pa.q_len()), yin_yang(&pa));
        }

        let pa53 = params(5, 3);
        let cands = mu_candidates(&bp(&[2]), &pa53).unwrap();
        assert_eq!(cands.len(), 4);
        for target in [
            vec![6i64, 1],
            vec![7, 6, 2, 1],
            vec![16, 11, 6, 1],
            vec![16, 11, 7, 6, 2, 1],
        ] {
            assert!(cands.contains(&bp(&target)), "missing {target:?}");
        }

        let cands = mu_candidates(&BarPartition::empty(), &pa53).unwrap();
        assert_eq!(cands.len(), 4);
        for target in [vec![1i64], vec![4], vec![7, 2, 1], vec![7, 4, 2]] {
            assert!(cands.contains(&bp(&target)), "missing {target:?}");
        }
    }

    #[test]
    fn test_integer_examples() {
        let pa = params(3, 5);
        assert_eq!(x_test_integers(&bp(&[1]), &pa), vec![8]);
        assert_eq!(x_test_integers(&BarPartition::empty(), &pa), vec![-2]);
        let pa53 = params(5, 3);
        assert_eq!(x_test_integers(&bp(&[2]), &pa53), vec![11, 2]);
        assert_eq!(x_test_integers(&BarPartition::empty(), &pa53), vec![2, -1]);
    }

    #[test]
    fn phi_examples() {
        let pa = params(3, 5);
        assert_eq!(
            phi(&bp(&[11, 6, 5, 2, 1]), &pa).unwrap(),
            UpsilonTriple { x: set(&[]), alpha: bp(&[1]), beta: bp(&[2]) }
        );
        assert_eq!(
            phi(&bp(&[26, 17, 11, 8, 6, 5, 2]), &pa).unwrap(),
            UpsilonTriple { x: set(&[1]), alpha: bp(&[1]), beta: bp(&[2]) }
        );
        let pa53 = params(5, 3);
        assert_eq!(
            phi(&bp(&[16, 11, 7, 6, 2, 1]), &pa53).unwrap(),
            UpsilonTriple { x: set(&[1, 2]), alpha: bp(&[2]), beta: BarPartition::empty() }
        );
        assert_eq!(phi(&bp(&[13, 10]), &pa), Err(Error::NotInUpsilonOrbit));
    }

    #[test]
    fn psi_examples() {
        let pa = params(3, 5);
        let t = UpsilonTriple {
            x: set(&[]),
            alpha: BarPartition::empty(),
            beta: BarPartition::empty(),
        };
        assert_eq!(psi(&t, &pa).unwrap(), bp(&[2]));

        let t = UpsilonTriple { x: set(&[1]), alpha: bp(&[1]), beta: bp(&[2]) };
        assert_eq!(psi(&t, &pa).unwrap(), bp(&[26, 17, 11, 8, 6, 5, 2]));

        let pa53 = params(5, 3);
        let t = UpsilonTriple { x: set(&[1, 2]), alpha: bp(&[2]), beta: BarPartition::empty() };
        assert_eq!(psi(&t, &pa53).unwrap(), bp(&[16, 11, 7, 6, 2, 1]));

        let t = UpsilonTriple { x: set(&[3]), alpha: bp(&[1]), beta: bp(&[2]) };
        assert_eq!(psi(&t, &pa), Err(Error::XIndexOutOfRange { index: 3, max: 1 }));
    }

    #[test]
    fn roundtrip_regressions() {
        // A q-bar-core whose own free-bead pattern differs from that of its
        // p-bar-core; the bijection must use the latter.
        let pa53 = params(5, 3);
        let sigma = bp(&[11, 8, 5, 2]);
        let t = phi(&sigma, &pa53).unwrap();
        assert_eq!(t.x, set(&[]));
        assert_eq!(psi(&t, &pa53).unwrap(), sigma);

        let pa = params(3, 5);
        for lam in [
            bp(&[2]),
            bp(&[7, 4, 1]),
            bp(&[11, 6, 5, 2, 1]),
            bp(&[26, 17, 11, 8, 6, 5, 2]),
            bp(&[26, 21, 17, 16, 12, 11, 7, 6, 2, 1]),
        ] {
            let t = phi(&lam, &pa).unwrap();
            assert_eq!(psi(&t, &pa).unwrap(), lam, "roundtrip of {lam}");
            assert!(bar_weight(&psi(&t, &pa).unwrap(), pa.p_len()) == bar_weight(&lam, pa.p_len()));
        }
    }
}

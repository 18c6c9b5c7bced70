//! Combinatorics of bar partitions (strict partitions): the p-runner
//! abacus, p-bar-cores/weights/quotients, the classical s-core machinery on
//! ordinary partitions, a level-q affine Coxeter action, the set of
//! weight-stable partitions for a coprime odd pair, the box-sum of a
//! p-bar-core and a q-bar-core, and the orbit bijection for the maximal
//! simultaneous bar-core.
//!
//! Everything is exact integer combinatorics over immutable values; all
//! operations are pure and thread-safe.

pub mod bar;
pub mod coxeter;
pub mod cpq;
pub mod error;
pub mod ordinary;
pub mod partition;
pub mod render;
pub mod upsilon;
pub mod verify;

pub use bar::{
    bar_core, bar_quotient, bar_weight, is_bar_core, p_set, reconstruct, removable_bars,
    remove_bar, weight_pairs, BarLength, BarMove, BarQuotient, PSet, WeightPair,
};
pub use coxeter::{
    check_relations, level1_apply, orbit_bfs, ActionParams, Generator, OrbitEntry, OrbitGroups,
    RelationReport, Side,
};
pub use cpq::{
    boxplus, find_bad_triple, in_cpq, in_cpq_by_bad_triples, q_weighted_p_quotient,
    same_level_q_orbit, same_orbit_cores, BadTriple, QWeightedQuotient, QuotientComponent,
};
pub use error::{Error, Result};
pub use ordinary::{
    beta_set_window, double, hook_lengths, s_core, s_quotient, s_weight, HookGrid, HookLength,
};
pub use partition::{strict_partitions, BarPartition, BeadSet, OrdinaryPartition};
pub use render::{render_abacus, AbacusRendering};
pub use upsilon::{
    mu_candidates, phi, psi, sigma_from_beta, upsilon_orbit_contains, x_test_integers, yin_yang,
    UpsilonTriple,
};

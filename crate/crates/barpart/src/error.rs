use thiserror::Error;

/// Errors for partition construction and the bar-calculus operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part {0} is not a positive integer")]
    NonPositivePart(i64),
    #[error("repeated part {0} (parts of a bar partition must be distinct)")]
    RepeatedPart(u32),
    #[error("parts not strictly decreasing: {prev} followed by {next}")]
    NotStrictlyDecreasing { prev: u32, next: u32 },
    #[error("parts not weakly decreasing: {prev} followed by {next}")]
    NotWeaklyDecreasing { prev: u32, next: u32 },
    #[error("empty window: lo {lo} > hi {hi}")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("bar length must be odd and at least 3, got {0}")]
    InvalidBarLength(i64),
    #[error("hook length must be at least 2, got {0}")]
    InvalidHookLength(i64),
    #[error("p and q must be coprime, got p={p}, q={q}")]
    NotCoprime { p: i64, q: i64 },
    #[error("level must be an odd positive integer coprime to the modulus, got {0}")]
    InvalidLevel(i64),
    #[error("generator index {index} out of range (max {max})")]
    GeneratorIndex { index: usize, max: usize },
    #[error("cannot parse generator {0:?}: expected P<i> or Q<i>")]
    BadGenerator(String),
    #[error("move is not a removable {p}-bar of this partition")]
    IllegalBarMove { p: i64 },
    #[error("partition is not a {p}-bar-core")]
    NotBarCore { p: i64 },
    #[error("quotient must have {expected} components, got {got}")]
    QuotientArity { expected: usize, got: usize },
    #[error("quotient conjugacy violated: component {hi} is not the conjugate of component {lo}")]
    QuotientConjugacy { lo: usize, hi: usize },
    #[error("mu is not a p-bar-core")]
    MuNotBarCore,
    #[error("sigma is not a q-bar-core")]
    SigmaNotBarCore,
    #[error("q-bar-core of mu differs from p-bar-core of sigma")]
    MutualCoreMismatch,
    #[error("search window {window} too small, need at least {need}")]
    WindowTooSmall { window: i64, need: i64 },
    #[error("orbit size bound {bound} is below the largest part {largest}")]
    OrbitBoundTooSmall { bound: i64, largest: i64 },
    #[error("partition is not in the Upsilon orbit for these parameters")]
    NotInUpsilonOrbit,
    #[error("index {index} in X out of range 1..={max}")]
    XIndexOutOfRange { index: usize, max: usize },
    #[error("expected {expected} candidates with the prescribed 0-component, found {got}")]
    CandidateCount { expected: usize, got: usize },
    #[error("cannot parse partition {0:?}: expected comma-separated integers")]
    BadPartitionText(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

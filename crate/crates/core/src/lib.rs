//! Alternating-run polynomials over refined classes of signed permutations.
//!
//! The crate computes `Σ t^{altruns_B(π)}` over classes of the hyperoctahedral
//! group `B_n` (and its index-two subgroup `D_n`, its coset `B_n − D_n`,
//! refined by the sign of `π_1` and the parity of the Coxeter length),
//! either by brute force or by summing `t^a (1+t)^m` over the orbits of a
//! `Z_2^m` sign-flip action, and checks the divisibility and moment
//! identities those polynomials satisfy by exhaustive enumeration.

pub mod action;
pub mod class;
pub mod enumerate;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod verify;

pub use action::{
    bona_complement, canonicalize, generator_set, orbit, orbit_min_runs, sgn_flip, ActionError,
    GeneratorSet, OrbitSummary,
};
pub use class::{in_class, ClassSelector, FirstSign, Group, LengthParity, SelectorParseError};
pub use enumerate::{
    enumerate_class, run_polynomial_bruteforce, run_polynomial_orbit, Backend, EngineError,
    EnumerationJob, Family, RunOutcome, ShardSpec,
};
pub use perm::{PermError, SignedPermutation};
pub use poly::{moment_identity_holds, Coefficient, MomentSums, PolyError, Polynomial};
pub use verify::{VerificationReport, VerifyError, VerifyOptions};

/// Arbitrary-precision integers used for every class count.
pub use num_bigint::BigInt;

/// Run polynomials with exact arbitrary-precision coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Machine-word polynomial, adequate for small `n` and property tests.
pub type I64Polynomial = Polynomial<i64>;
pub type I128Polynomial = Polynomial<i128>;

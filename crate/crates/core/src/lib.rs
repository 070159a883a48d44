//! Exact, desk-scale verification of primorial inequalities and of the
//! prime-count lower bounds between `p_{n+1}` and `p_1 p_2 ... p_{n+1}`.
//!
//! * [`primes`] sieves, counts and indexes primes.
//! * [`arith`] does exact big-integer arithmetic and certified logarithms.
//! * [`bounds`] holds the analytic machinery: tuple counting, Stirling
//!   remainders, binomial upper bounds, the threshold root `x0(alpha)` and
//!   the contradiction chain of the counting argument.
//! * [`suite`] registers every inequality and scans it over ranges.

pub mod arith;
pub mod bounds;
mod error;
pub mod primes;
pub mod suite;

pub use arith::{
    binomial, compare_certified, factorial, log_certified, primorial, totient_primorial, BigNatural, CertifiedLog,
    Enclosure,
};
pub use bounds::{Alpha, AlphaProfile, RobbinsTerm, RootTarget};
pub use error::{Error, Result};
pub use primes::{sieve_upto, EngineConfig, PiCheckpoint, PrimeEngine, PrimeTable};
pub use suite::{registry, verify, verify_theorem_alpha, verify_theorem_linear, InequalitySpec, VerificationReport};

//! Analytic side of the counting argument.

mod alpha;
mod binomial_bounds;
mod chain;
mod robbins;
mod roots;
mod tuples;

pub use alpha::{Alpha, MAX_EXACT_DENOMINATOR};
pub use binomial_bounds::{lemma2_bound_alpha, lemma2_bound_central, BoundPair};
pub use chain::{eq13_holds, eq14_holds, eval_linear_chain, eval_proof_chain, ChainLink, ChainReport};
pub(crate) use robbins::CompensatedSum;
pub use robbins::{robbins_gamma, RobbinsTerm, ROBBINS_MAX_N};
pub use roots::{e2_sqrt3, eval_f, eval_g, solve_x0, x1_closed_form, AlphaProfile, RootTarget, DEFAULT_TOL};
pub use tuples::{count_tuples_bruteforce, count_tuples_closed, BRUTEFORCE_MAX_K, BRUTEFORCE_MAX_N};

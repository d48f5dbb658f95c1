//! Exact coefficient counts and Bessel-sum asymptotic approximations
//! for six restricted-partition generating functions.
//!
//! The exact side builds big-integer coefficient tables by power-series
//! dynamic programming. The asymptotic side evaluates the singular
//! expansion of each product at roots of unity, transfers the
//! exponential singularities to modified-Bessel/Gamma sums, and adds
//! the contributions modulus by modulus. Everything numerical runs on
//! an arbitrary-precision float wrapper with explicit decimal-digit
//! budgets, so results carry their own precision downstream.

pub mod asym;
pub mod dedekind;
pub mod families;
pub mod hp;
pub mod oracle;
pub mod qseries;
pub mod reference;

pub use asym::{estimate, EstimateConfig, PhiBreakdown};
pub use families::Family;
pub use hp::real::{Complex, Real};
pub use oracle::{count, count_table, CountTable};

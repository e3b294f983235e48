//! Ideal objective vector estimation for multi-objective evolutionary algorithms.
//!
//! The crate bundles everything needed to study how well an MOEA locates the
//! ideal point on biased problems:
//!
//! * [`biasgen`]: a parametric generator of biased bi- and tri-objective test
//!   problems, the sixteen `mop*` presets and their inverted variants.
//! * [`cmaes`]: a CMA-ES with population size adaptation, warm starting and
//!   solution injection.
//! * [`eie`]: the estimation component, one CMA-ES per extreme weighted sum
//!   subproblem running alongside a host algorithm.
//! * [`hosts`]: NSGA-II, MOEA/D and SMS-EMOA hosts, DE + polynomial mutation,
//!   and the population-based ideal point estimators.
//! * [`metrics`]: the estimation error, exact and Monte Carlo hypervolume, and
//!   the Wilcoxon rank-sum test.
//! * [`bench`]: trial and suite runners plus CSV/JSON output, also exposed
//!   through the `eie-bench` binary.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod bench;
pub mod biasgen;
pub mod cmaes;
pub mod eie;
pub mod error;
pub mod hosts;
pub mod metrics;
pub mod moo;

pub use error::{Error, Result};
pub use moo::{BoxBounds, ObjectiveVector, DecisionVector, Problem, Solution};

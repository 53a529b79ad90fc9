//! Receptive entropy of Z_+^k actions on symbolic spaces.
//!
//! Receptive entropies normalize the growth of H_mu(A^n_Gamma) (or of
//! separated/spanning counts) by the regular-system index n instead of the
//! Folner count |N_n|, and stay finite in many situations where the classical
//! amenable entropy vanishes. This crate computes them exactly where the
//! symbolic structure allows and by controlled finite-scale estimation
//! otherwise:
//!
//! - [`lattice`]: the acting monoid Z_+^k, regular systems N_i + N_j in
//!   N_{i+j}, Folner defect diagnostics;
//! - [`symbolic`]: full shifts with translation actions, cylinder partitions,
//!   finite truncations for brute-force oracles;
//! - [`measure`]: Bernoulli (exact rational) and Markov measure oracles;
//! - [`metric`]: H_mu of partition joins, receptive vs classical sequences,
//!   scaling/subaction/product law checks;
//! - [`topological`]: (n, eps)-separated and spanning counts, minimal
//!   subcovers, open-cover entropy, the count-inequality suite;
//! - [`dimensional`]: Bowen-style and Pesin-style critical exponents b and c
//!   from cover weights sum e^(-lambda n(E));
//! - [`local`]: dynamic-ball measures, pointwise local entropies, their
//!   integral and essential supremum;
//! - [`harness`]: experiment configs, the verification battery, CSV/JSON
//!   emission.
//!
//! Every limsup in the theory is represented honestly as a finite sequence
//! with a headline value and diagnostics; the library never claims a limit it
//! cannot certify. Entropies are reported in nats.

pub mod dimensional;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod local;
pub mod measure;
pub mod metric;
pub mod search;
pub mod symbolic;
pub mod topological;

pub use error::{Error, Result};
pub use lattice::{Coord, LatticeElement, PointSet, RegularSystem};
pub use measure::{BernoulliMeasure, CylinderWord, MarkovMeasure, MeasureOracle};
pub use symbolic::{CoordinatePartition, FiniteApproximation, SymbolicSystem};

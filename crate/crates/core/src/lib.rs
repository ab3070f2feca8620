//! TS-metrics, tilings and perfect codes on the binary Hamming cube.
//!
//! The library implements metrics on F₂ⁿ that are translation-invariant and
//! respect the support of vectors (TS-metrics), decides which tiles of a
//! tiling are balls of such a metric (and hence which tilings are perfect
//! codes), and provides the extension and concatenation constructions that
//! build new perfect codes from old ones.
//!
//! - [`hypercube`]: vectors, supports, geodesics, polyhedrominoes, rank,
//!   canonical forms under coordinate permutation.
//! - [`metrics`]: poset and combinatorial weights, full weight tables with
//!   axiom validation, balls, two-level ball witnesses, extension and
//!   max/s-sum combinations, decoding equivalence, the C1–C3 matrix
//!   conditions.
//! - [`tilings`]: tiling verification, completion by exact-cover search,
//!   perfect-code checks, the large-rank family Dₙ(x).
//! - [`classify`]: enumeration of small downward-closed tiles up to
//!   permutation and the classification of those that determine TS-perfect
//!   codes, with verified witness metrics.
//! - [`io`]: the JSON file formats shared with the `tscodes` CLI.

pub mod classify;
pub mod error;
pub mod hypercube;
pub mod io;
pub mod metrics;
pub mod tilings;

pub use error::Error;
pub use hypercube::{BitVector, VectorSet};
pub use metrics::{Covering, Poset, WeightTable};
pub use tilings::Tiling;

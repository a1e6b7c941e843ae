//! Rainbow independent sets in odd cycles.
//!
//! Given `s` independent `s`-sets of the cycle `C_{2s+1}` (repeats allowed),
//! [`solve`] picks one vertex from each so that the `s` picks are distinct and
//! pairwise non-adjacent, and returns the choice together with a trace of how
//! it was derived. [`verify_certificate`] re-checks any such choice from
//! scratch, and the [`oracle`] module provides brute-force search and
//! exhaustive scans to cross-examine the construction.
//!
//! ```
//! use rainbow_cycle::{solve, verify_certificate, Instance};
//!
//! let inst = Instance::from_labels(5, &[[2, 4], [3, 5]]).unwrap();
//! let cert = solve(&inst).unwrap();
//! let labels: Vec<usize> = cert.assignment.iter().map(|v| v.label()).collect();
//! assert_eq!(labels, [2, 5]);
//! assert!(verify_certificate(&inst, &cert).is_ok());
//! ```

pub mod cli;
pub mod cycle;
pub mod document;
pub mod error;
pub mod oracle;
pub mod solver;
pub mod transform;

pub use cycle::{adjacent, Arc, CycleContext, Vertex, VertexSet};
pub use error::{Error, Result};
pub use solver::{
    admissible_shifts, choose_k, classify_shift, construct_assignment, normalize, solve,
    verify_assignment, verify_certificate, Case, Instance, NormalizedArcs, RainbowCertificate,
    Rejection, ShiftChoice, Trace,
};
pub use transform::DoublingMap;

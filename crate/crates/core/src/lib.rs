//! Relative Hausdorff (RH) distance between graph degree distributions.
//!
//! Graphs are summarized by their complementary cumulative degree histogram
//! (ccdh): `N(k)` counts vertices of degree at least `k`. The RH distance
//! between two graphs is the smallest relative error `eps` at which every
//! point of either ccdh has a counterpart on the other within `eps` in both
//! the degree and the count coordinate. It tolerates proportionally large
//! degree error in the tail and count error in the head, while still
//! pinning every point of both curves.
//!
//! - [`ccdh`]: degree histograms, ccdhs, smooth evaluation, graphicality.
//! - [`rh`]: the linear-work distance, the discrete variant, and two
//!   independent reference implementations.
//! - [`families`]: structured families and closed-form distances.
//! - [`perturb`]: max/average distance over single-edge edits.
//! - [`graph`]: edge-list and ccdh file I/O.
//! - [`matrix`]: parallel pairwise corpus matrices.
//! - [`mod@bench`]: fast-vs-quadratic timing harness.
//!
//! ```
//! use rhdist::families::{family_ccdh, FamilySpec};
//! use rhdist::rh::smooth_rh;
//!
//! let k3 = family_ccdh(&FamilySpec::Complete { n: 3 }).unwrap();
//! let k5 = family_ccdh(&FamilySpec::Complete { n: 5 }).unwrap();
//! let d = smooth_rh(&k3, &k5);
//! assert!((d.distance - 2.0 / 3.0).abs() < 1e-9);
//! ```

pub mod bench;
pub mod ccdh;
pub mod error;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod perturb;
pub mod rh;

pub use ccdh::{Ccdh, DegreeHistogram};
pub use error::RhError;
pub use graph::Graph;
pub use rh::{RhBox, RhResult};

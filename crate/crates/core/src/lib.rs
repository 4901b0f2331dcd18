//! Exact intersection theory on the Grassmannian of lines `G(1,n)`.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! - [`schur`]: the cohomology ring of `G(1,n)` in the two-row Schubert basis.
//! - [`chern`]: splitting-principle Chern classes of the tautological rank-2
//!   bundle `E`, its symmetric powers and twists, as polynomials in
//!   `l = c1(E)` and `c2 = c2(E)`.
//! - [`flagpush`]: the class of the variety of (line, plane) flags inside a
//!   hypersurface, its pushforward to the Fano variety of lines, and the
//!   coefficient bookkeeping of the polynomials `M` and `M'`.
//! - [`cones`]: effectivity, nefness and bigness on `G(1,n)` with explicit
//!   certificates.
//! - [`coniveau`]: dimension counts and coniveau predicates for complete
//!   intersections.
//! - [`verify`]: named checks tying the above together, each returning a
//!   three-valued [`verify::Status`] with witnesses.
//!
//! All coefficients are arbitrary-precision rationals. Nothing here
//! allocates global state, so every value is `Send + Sync` and every
//! operation may be called from any thread.

#![no_std]

extern crate alloc;

pub mod chern;
pub mod cones;
pub mod coniveau;
mod error;
pub mod flagpush;
pub mod rational;
pub mod schur;
pub mod verify;

pub use chern::{HC2Poly, LC2Poly, RootBundle, RootForm};
pub use cones::{ConeCertificate, Verdict};
pub use coniveau::{MultiDegree, NumerologyReport};
pub use error::{Error, Result};
pub use flagpush::BivarPoly;
pub use rational::Rational;
pub use schur::{GrassmannContext, Partition2, SchurClass};
pub use verify::{Status, VerificationReport};

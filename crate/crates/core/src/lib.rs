//! Extended Hamming balls in F_q^3: exact cardinalities, intersecting
//! families, and short coverings.
//!
//! A radius-1 ball in F_q^3 has 3q-2 points. Replacing the center by the
//! line through a vector u gives the *extended ball*
//! E(u) = union of B(lambda u) over all scalars lambda. This crate computes,
//! exactly and with independent enumeration cross-checks:
//!
//! - ball and extended-ball cardinalities, and their restrictions to the
//!   domain D_q of vectors with three distinct nonzero coordinates
//!   ([`hamming`]);
//! - pairwise intersections, the rho parameter with
//!   |E~(u) ∩ E~(v)| = rho(u,v)(q-1), and theta of intersecting families
//!   ([`intersections`]);
//! - the group actions that make exhaustive arguments small: coordinate
//!   permutations, scalar groups, and the wreath product ([`symmetry`]);
//! - short coverings (sets H with the E(h) covering the whole space):
//!   verification, constructions, counting lower-bound certificates, and
//!   exhaustive computation of the minimum size c(q) for small q
//!   ([`covering`]);
//! - a claims registry that re-derives every headline value in one run
//!   ([`report`]).
//!
//! Everything is exact integer combinatorics over small fields (q <= 16);
//! there is no floating point anywhere.
//!
//! ```
//! use extball::gf::Field;
//! use extball::hamming::{restricted_extended_ball, Vec3};
//! use extball::intersections::{family_e, rho};
//!
//! let f = Field::new(5, 1)?;
//! let u = Vec3::from_codes(&f, [1, 4, 2])?;
//! let v = Vec3::from_codes(&f, [1, 3, 4])?;
//!
//! // |E~(u) ∩ E~(v)| = rho(u, v) * (q - 1)
//! assert_eq!(rho(&f, u, v)?.value(), 3);
//! let brute = restricted_extended_ball(&f, u)
//!     .intersection_len(&restricted_extended_ball(&f, v));
//! assert_eq!(brute, 12);
//!
//! // the minimum pairwise intersection over the core family
//! assert_eq!(family_e(&f)?.theta()?, 8);
//! # Ok::<(), extball::Error>(())
//! ```
//!
//! The `extball` binary exposes the same operations as subcommands; see the
//! `examples/` directory for guided tours of each area.

pub mod covering;
pub mod error;
pub mod gf;
pub mod hamming;
pub mod intersections;
pub mod report;
pub mod symmetry;

pub use error::{Error, Result};

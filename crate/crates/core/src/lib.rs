//! Exact-arithmetic toolkit for nodal real line arrangements and the
//! intersection lattice of the double plane branched along them.
//!
//! The pipeline runs in four stages, each usable on its own:
//!
//! 1. [`geometry`] holds rational lines and points and the incidence
//!    predicates everything else is built from.  No floating point
//!    anywhere; a chamber either contains a point or it does not.
//! 2. [`chamber`] builds the planar subdivision induced by an
//!    arrangement (as a half-edge structure over the one-point
//!    compactification of the plane) and exposes its bounded chambers,
//!    vertices, and edges, plus the pair classification that drives the
//!    intersection rules.
//! 3. [`gram`] assembles the integer Gram matrix of the intersection
//!    form on the second homology of the branched double plane, in the
//!    basis of one vanishing cycle per bounded chamber followed by one
//!    exceptional curve per arrangement vertex.  [`orientation`]
//!    supplies the per-chamber orientation data the off-diagonal
//!    entries depend on, together with the base-change oracle used to
//!    cross-check the direct rules.
//! 4. [`lattice`] computes invariants of the resulting symmetric
//!    integer bilinear form (kernel, signature, Smith normal form,
//!    discriminant group), and [`infinity`] evaluates the closed-form
//!    predictions those invariants are checked against.
//!
//! [`generator`] produces random arrangements with a prescribed number
//!    of parallel pairs for bulk testing.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature to use it in that mode.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod chamber;
pub mod generator;
pub mod geometry;
pub mod gram;
pub mod infinity;
pub mod lattice;
pub mod mat;
pub mod orientation;

pub use chamber::{Chamber, ChamberComplex, ChamberId, Edge, EdgeId, PairClass, Vertex, VertexId};
pub use geometry::{Arrangement, Line, LineId, Point, Rat};
pub use gram::{BasisClass, BasisIndex, GramMatrix};
pub use infinity::Prediction;
pub use lattice::{AbelianGroup, LatticeInvariants};
pub use mat::IntMat;
pub use orientation::OrientationAssignment;

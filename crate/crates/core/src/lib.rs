//! Exact-arithmetic library for triangle tilings by similar copies and the
//! self-similar traversal curves that can be built on top of them.
//!
//! All geometry is carried out over `Q(sqrt(d))` for a single per-scene
//! radicand `d`; there is no floating point anywhere in a verdict path.
//! Floating point appears only when serializing SVG coordinates.
//!
//! The main entry points:
//!
//! - [`exact`]: rationals, quadratic-field scalars, points, similarity maps.
//! - [`tiling`]: the [`tiling::Tiling`] model, validators, and the tiling
//!   graph with vertex classification.
//! - [`construct`]: generators for the tilings the library knows how to build.
//! - [`angles`]: exact enumeration of vertex angle signatures and side-length
//!   relations.
//! - [`enumerate`]: exhaustive backtracking enumeration of small reptilings.
//! - [`dual`]: dual graphs, Hamiltonian-path search, two-level tilings.
//! - [`curve`]: traversal-order rules, continuity/measure checkers, and the
//!   built-in curve catalog.
//! - [`render`]: deterministic SVG output.
//! - [`io`]: canonical JSON file formats.

pub mod angles;
pub mod construct;
pub mod curve;
pub mod dual;
pub mod enumerate;
pub mod exact;
pub mod geom;
pub mod io;
pub mod render;
pub mod tiling;

pub use exact::{AffineSimilarity, Point, QuadScalar, Rational};
pub use tiling::{Tiling, TilingGraph};

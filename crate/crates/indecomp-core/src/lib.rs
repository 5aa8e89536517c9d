//! Infinite families of indecomposable persistence modules over commutative
//! grids, with machine certification and topological realizations.
//!
//! The crate is split into layers that mirror the pipeline:
//!
//! - [`exactalg`]: exact arithmetic — prime fields, dense matrices, rationals.
//! - [`quiver`]: bound quivers, representations, Hom/End solving, and
//!   indecomposability / isomorphism certification.
//! - [`intervals`]: interval representations of `A_n(τ)`, the ⊵ relation,
//!   forward interval decomposition and K₂,₂ configuration search.
//! - [`families`]: constructors for the algebraic families — `M(d,λ)` on the
//!   commutative ladder, Kronecker regulars, the cube functor, and the 3×3
//!   grid variants.
//! - [`complexes`]: abstract simplicial complexes, homology over `F_p`, and
//!   the functor from diagrams of complexes to representations.
//! - [`vrtiles`]: the geometric layer — tile tables, row assembly, the vertex
//!   map, Vietoris–Rips complexes at scheduled radii, stability, and the
//!   simplicial sandal models.
//!
//! Everything is exact: matrices live over `F_p`, geometry over arbitrary
//! precision rationals. All stochastic operations take explicit seeds.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complexes;
pub mod exactalg;
pub mod families;
pub mod intervals;
pub mod quiver;
pub mod vrtiles;

pub use exactalg::{FieldMatrix, Rational};
pub use quiver::{BoundQuiver, MorphismBasis, Representation};

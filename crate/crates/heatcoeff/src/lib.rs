#![forbid(unsafe_code)]

//! Heat kernel coefficients of Kähler manifolds from stable digraphs.
//!
//! The crate has two halves that check each other:
//!
//! * a combinatorial half ([`digraph`], [`phi`], [`enumerate`], [`heat`])
//!   that enumerates stable multi-digraphs, computes the recursive
//!   invariant φ and assembles the exact rational coefficient z(G) of each
//!   graph in the n-th heat coefficient aₙ;
//! * an analytic half ([`jets`], [`tensor`], [`kahler`], [`real`]) that
//!   evaluates graphs and curvature invariants on random polynomial Kähler
//!   potentials in exact Gaussian-rational jet arithmetic, so every
//!   published coefficient can be verified without floating point.
//!
//! [`oracles`] bundles the combinatorial identity checks and the
//! verification suites driven by the CLI.

pub mod digraph;
pub mod enumerate;
pub mod heat;
pub mod io;
pub mod jets;
pub mod kahler;
pub mod oracles;
pub mod phi;
pub mod real;
pub mod tensor;

pub use digraph::{CanonicalForm, GraphError, MultiDigraph, PointedGraph};
pub use enumerate::{enumerate_pointed_stable_strong, enumerate_stable, GraphSum};
pub use heat::{heat_coefficient, z_coefficient, SigmaVector};
pub use jets::{GaussianRational, Jet, JetError};
pub use kahler::KahlerPotential;
pub use phi::{count_strong_reductions, phi, PhiCache};

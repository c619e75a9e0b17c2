//! Exact combinatorics of AD-A irregular-curve parameters.
//!
//! An AD-A parameter `(m, s/r, C0, Cinf)` records `m` wild Stokes circles of
//! slope `s/r` at infinity together with conjugacy classes at 0 and infinity.
//! The crate implements the elementary Fourier/Möbius/twist operations, an
//! independent formal-data route to the same operations, orbit enumeration,
//! the three families of dualities, and nonabelian Hodge diagrams.

pub mod classes;
pub mod diagrams;
pub mod dualities;
pub mod error;
pub mod ops;
pub mod orbits;
pub mod params;
pub mod pipeline;
pub mod young;

pub use classes::{ConjugacyClass, Eigenvalue, Leg, Marking};
pub use error::{Error, Result};
pub use ops::{apply_seq, format_sequence, parse_sequence, OpKind, Operation};
pub use params::{AdaParameter, Classification, PhysicsLabel, ReducedParameter, Slope};
pub use young::YoungDiagram;
pub use diagrams::{Diagram, VertexLabel};
pub use orbits::{OrbitGraph, TwistPolicy};
pub use pipeline::FormalData;

//! Graph braid groups at desk scale.
//!
//! Builds the discretized configuration space `UD^n(G)` of a graph as a cube
//! complex, computes its integer homology, constructs the Farley–Sabalka
//! discrete Morse matching, and decides which graph braid groups are classical
//! braid groups. The word-problem engines for right-angled Artin groups and
//! braid groups support an explicit embedding of any right-angled Artin group
//! into a pure braid group and checks on homomorphisms from braid groups.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod braid;
pub mod classify;
pub mod complex;
pub mod embed;
pub mod error;
pub mod graph;
pub mod hom;
pub mod homology;
pub mod matrix;
pub mod morse;
pub mod raag;
pub mod tree;

pub use complex::{Cell, CubicalComplex};
pub use error::{ComplexError, EmbedError, GraphError, HomError, TopologyError, WordError};
pub use graph::{Graph, HomeoTag, HomeoType};
pub use matrix::IntegerMatrix;
pub use tree::{morse_spanning_tree, MorseTree};

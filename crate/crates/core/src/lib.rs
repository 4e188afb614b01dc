//! Conduction graphs of molecular graphs.
//!
//! Under the source-and-sink-potential model of ballistic conduction, a device
//! `(G, l, r)` either conducts or insulates at the Fermi level. The conduction
//! graph `G^C` has an edge `lr` for every conducting distinct device and a
//! loop at `u` for every conducting ipso device `(G, u, u)`. This crate
//! computes conduction graphs with exact arithmetic, classifies graphs by
//! their conduction behaviour, generates the known infinite families of
//! graphs isomorphic to their own conduction graph, and runs exhaustive
//! censuses over small connected and chemical graphs.

pub mod census;
pub mod classify;
pub mod conduction;
pub mod error;
pub mod families;
pub mod graph;
pub mod isomorphism;
pub mod linalg;
pub mod transmission;

pub use error::{Error, Result};
pub use graph::{
    fixture, from_graph6, from_graph6_with_loops, to_graph6, to_graph6_with_loops, AdjacencyMatrix,
    Graph,
};

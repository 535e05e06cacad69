//! Spectral invariants of signed graphs.

pub mod graph;
pub mod inertia;
pub mod sgf;
pub mod structure;
pub mod families;
pub mod enumerate;
pub mod verify;
pub mod cli;

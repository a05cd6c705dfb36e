//! Epimorphism structure of torus-knot and 2-bridge knot groups.
//!
//! The library decides the epimorphism partial order exactly on torus knots,
//! constructs and verifies explicit epimorphism certificates between their
//! groups, and narrows the peripheral epimorphism order on 2-bridge knots by
//! exact invariant filters (determinant, Alexander polynomial divisibility,
//! and an advisory Riley-polynomial condition). On top of those pieces it
//! classifies minimality and assembles a partial-order atlas exportable as
//! JSON and DOT.

pub mod groupcore;
pub mod knots;
pub mod order;
pub mod polyring;
pub mod riley;
pub mod torus_epi;

pub use knots::{KnotError, KnotId, TorusKnot, TwoBridgeKnot};
pub use polyring::{IntPoly, PolyError};

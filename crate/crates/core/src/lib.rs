//! Dichromatic number, dicritical digraphs and directed subdivisions.
//!
//! The crate is organised around an immutable [`Digraph`]:
//!
//! - [`graph`]: representation, elementary invariants and the `.dg` format;
//! - [`colouring`]: dicolourings, the exact dichromatic-number solver and
//!   dicriticality tests;
//! - [`families`] and [`bounds`]: explicit digraph families, the subdivision
//!   operator and exact evaluation of the bound formulas;
//! - [`subdivision`]: subdivision witnesses and the finders;
//! - [`lab`]: canonical enumeration of small digraphs and the verification
//!   suites.
//!
//! With the default `parallel` feature the enumeration driver and the
//! verification suites run on rayon; without it the same code runs
//! sequentially.

pub mod bounds;
pub mod budget;
pub mod colouring;
pub mod families;
pub mod graph;
pub mod lab;
pub mod par;
pub mod subdivision;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{Digraph, DirectedPath, Length, Vertex, VertexSet};

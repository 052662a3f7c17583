//! Kauffman bracket, Jones and Conway polynomials of link diagrams, and the
//! 2-string tangle invariants built from them.

pub mod laurent;
pub(crate) mod planar;
pub mod diagram;
pub mod bracket;
pub mod conway;
pub mod tangle;
pub mod expr;
pub mod families;
pub mod corpus;
pub mod verify;
pub mod cli;

pub use diagram::{parse_pd, render_pd, CrossingSite, DiagramError, LinkDiagram, Sign};
pub use laurent::{LaurentError, LaurentPoly};

//! Combinatorial invariants of Legendrian knots presented by simple front
//! diagrams: the Chekanov-Eliashberg algebra, its bordered version, the
//! commutative rational SFT algebra, and the bordered SFT algebras of cut
//! diagrams, together with the gluing morphisms relating them and a
//! verification suite that mechanically checks every identity these
//! structures are supposed to satisfy.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod strings;
pub mod textform;

pub use error::{Error, Result};
pub mod bordered;
pub mod ce;
pub mod corpus;
pub mod dga;
pub mod disks;
pub mod lsft;
pub mod report;

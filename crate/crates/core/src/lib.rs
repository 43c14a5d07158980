//! Computational commutative algebra for testing strong Cohen–Macaulayness,
//! depth of powers and Rees-algebra equations on concrete ideals.

pub mod blowup;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod job;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod residual;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Rationals, Zp};
pub use poly::Polynomial;
pub use ring::{mk_ring, Grading, PolyRing, Ring};

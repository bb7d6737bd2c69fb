//! Exact computational engine for standard Artinian Gorenstein algebras
//! presented by complete intersections of quadrics.
//!
//! The crate builds graded quotient rings over the rationals or a prime
//! field, certifies weak and strong Lefschetz properties, constructs
//! nihilpotent and non-Lefschetz loci, and ships a small Gröbner engine
//! for the ideal-theoretic questions those loci raise.

pub mod scalar;
pub mod monomial;
pub mod poly;
pub mod matrix;
pub mod algebra;
pub mod groebner;

//! Exact-arithmetic computational algebra for graded quotient rings in prime
//! characteristic: degree strands of local cohomology via Koszul complexes on
//! variable powers, the Frobenius action on the degree-zero strand, p-semilinear
//! module calculus over finite fields, determinantal/Pfaffian/Stanley-Reisner
//! ideal families with their closed-form invariants, and verbatim certificate
//! checking for explicit arithmetic-rank identities.
//!
//! Everything is exact: arbitrary-precision integers and rationals, or finite
//! fields `GF(p^k)` given by explicit irreducible moduli. There are no Groebner
//! bases anywhere; ideal-theoretic questions are answered degree by degree with
//! deterministic sparse row reduction, so every basis and every matrix is
//! reproducible bit for bit.

pub mod certlab;
pub mod error;
pub mod exactarith;
pub mod ffmod;
pub mod field;
pub mod ideals;
pub mod koszul;
pub mod linstrand;
pub mod par;
pub mod poly;
pub mod simplicial;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

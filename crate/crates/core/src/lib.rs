//! Exact combinatorics for Eulerian polynomials of types A and B, perfect
//! matchings, Stirling permutations and Stirling permutations of the second
//! kind.
//!
//! Every polynomial is an exact sparse Laurent polynomial over big integers
//! (or rationals inside truncated power series), so every identity is checked
//! by exact equality. The crate is organised as:
//!
//! * [`algebra`]: polynomials, truncated power series and Sturm chains;
//! * [`objects`]: generation, validation, text encodings and statistics of
//!   the seven object classes;
//! * [`bijections`]: the insertion bijections from decorated and signed
//!   permutations to pairs of perfect matchings;
//! * [`grammar`]: formal derivatives of context-free grammars;
//! * [`families`]: recurrences, closed forms and generating functions;
//! * [`verify`]: a registry of named identity checks cross-wiring all of the
//!   above.

pub mod algebra;
pub mod bijections;
pub mod error;
pub mod families;
pub mod grammar;
pub mod objects;
pub mod verify;

pub use algebra::{ExactPoly, Monomial, Poly, RatPoly, SturmReport, TruncatedSeries, Var};
pub use bijections::{BijectionReport, MapId, MatchingTriple};
pub use error::{Error, Result};
pub use families::{Families, Mutation, Recurrence, TriangleTable};
pub use objects::{
    CombObject, CycleStirling, DecoratedEntry, DecoratedPermutation, InversionSequence,
    ObjectClass, PerfectMatching, Permutation, SignedPermutation, StirlingWord,
};
pub use verify::{Status, VerifyReport};

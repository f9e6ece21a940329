//! Workbench for punctured simplex codes and their hierarchical locality.
//!
//! The library builds the codes `S_q(m) - S_q(s)` obtained by deleting an
//! embedded simplex from a q-ary simplex code, exposes the matroid view of a
//! linear code (entropy/rank, closure, flats, hyperplanes), derives complete
//! locality profiles and nested repair hierarchies, evaluates classical and
//! alphabet-dependent locality bounds, and simulates hierarchical repair in a
//! small storage cluster.
//!
//! Modules follow the pipeline:
//!
//! * [`gf`] — arithmetic contexts for GF(q), q in {2, 3, 4, 5, 7, 8, 9};
//! * [`codes`] — generator-matrix codes, entropy, restriction, shortening,
//!   exhaustive weight enumeration, permutation equivalence;
//! * [`construct`] — simplex and punctured simplex generator matrices;
//! * [`matroid`] — column matroids, flat lattices, hyperplanes;
//! * [`locality`] — restriction types, hyperplane classification, local-set
//!   search, hierarchy chains, locality profiles;
//! * [`bounds`] — Griesmer, dimension bounds for (hierarchical) locality, and
//!   the greedy erasure-set construction behind the alphabet-dependent bound;
//! * [`repair`] — seeded cluster simulation with innermost-first escalation.
//!
//! Enumeration kernels run in parallel when the `parallel` feature (default)
//! is enabled and fall back to sequential loops otherwise; both paths produce
//! bit-identical results.

pub mod bounds;
pub mod codes;
pub mod construct;
pub mod coords;
pub mod gf;
mod linalg;
pub mod locality;
pub mod matroid;
pub mod repair;
pub mod rng;

pub use coords::CoordSet;
pub use gf::FiniteField;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The field order is not one of the supported small orders.
    #[error("unsupported field order {0}; supported orders: 2, 3, 4, 5, 7, 8, 9")]
    UnsupportedOrder(u32),
    /// Multiplicative inversion (or division) by zero.
    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u32 },
    /// A generator matrix whose rows do not have full rank.
    #[error("rank-deficient generator: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    /// A matrix entry outside [0, q).
    #[error("entry {value} out of range for GF({q})")]
    EntryOutOfRange { value: u32, q: u32 },
    /// A 1-based coordinate outside the code length.
    #[error("coordinate {index} out of range [1, {n}]")]
    IndexOutOfRange { index: usize, n: usize },
    /// An operation that requires a non-empty coordinate set.
    #[error("operation undefined on the empty coordinate set")]
    EmptySet,
    /// Shortening on a set that already has full entropy.
    #[error("cannot shorten on a set of full entropy {k}")]
    FullEntropyShorten { k: usize },
    /// Codeword enumeration would exceed the hard cap.
    #[error("enumerating {words} codewords exceeds the cap of {cap}")]
    EnumerationCapExceeded { words: u128, cap: u128 },
    /// Permutation-equivalence search is capped by code length.
    #[error("permutation search supports n <= {cap}, got n = {n}")]
    SearchCapExceeded { n: usize, cap: usize },
    /// Flat materialization is capped by ground-set size and rank.
    #[error(
        "flat materialization supports n <= {n_cap} and rank <= {rank_cap}, \
         got n = {n}, rank = {rank}"
    )]
    MaterializationCapExceeded {
        n: usize,
        rank: usize,
        n_cap: usize,
        rank_cap: usize,
    },
    /// Structurally invalid arguments (described in the message).
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    /// A hyperplane restriction matched no expected type.
    #[error("hyperplane {0} matches no expected restriction type")]
    UnclassifiedHyperplane(String),
    /// No closed set of the requested restriction type exists for a symbol.
    #[error("no closed set of type ({kappa}, {i}) through symbol {symbol}")]
    TypeNotRealizable { symbol: usize, kappa: u32, i: u32 },
    /// The padding phase of the erasure-set construction ran out of room.
    #[error("cannot pad the visited set to entropy {target}")]
    InfeasiblePadding { target: usize },
    /// Matrix text that does not parse.
    #[error("matrix parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Exact-arithmetic toolkit for symmetric association schemes.
//!
//! Everything here works over the integers and rationals (arbitrary
//! precision), so eigenmatrices, intersection numbers and classification
//! verdicts are exact, never floating point. The main entry points:
//!
//! * [`scheme`] — the core representation: a vertex-pair coloring
//!   ([`scheme::ColorMatrix`]) verified into a [`scheme::Scheme`] with its
//!   intersection tensor and exact spectral data (P, Q, multiplicities).
//! * [`constructions`] — named builders for the schemes and graphs used by
//!   the test corpus and CLI (Sylvester, bilinear forms, Brouwer–Pasechnik,
//!   cyclotomic, affine-plane, Kronecker products, wreath products, ...).
//! * [`fusion`] — fusing relation classes, amorphicity testing, common
//!   fission of a 2-class scheme, and commuting-decomposition checks.
//! * [`spreads`] — square-spread detection/search/removal and clique search.
//! * [`quotient`] — quotient schemes over a square-spread relation.
//! * [`srg`] — strongly-regular-graph parameters and Latin-square-type
//!   classification.
//! * [`io`] — text file formats for schemes, eigenmatrices and witnesses.

pub mod constructions;
pub mod error;
pub mod exactmat;
pub mod fusion;
pub mod gf;
pub mod graph;
pub mod io;
pub mod quotient;
pub mod scheme;
pub mod spreads;
pub mod srg;

pub use error::Error;
pub use exactmat::{IntPolynomial, RatMatrix};
pub use graph::Graph;
pub use scheme::{ColorMatrix, Scheme, Spectrum, Violation};
pub use spreads::Spread;
pub use srg::{SrgParams, SrgType};

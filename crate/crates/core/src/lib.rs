//! Linear-type criteria for hypersurfaces with isolated singularities.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: exact sparse polynomials, monomial orders, parsing;
//! * [`groebner`]: Buchberger's algorithm, normal forms, syzygies;
//! * [`ideal`]: quotients, saturation, elimination, dimensions, local components;
//! * [`hypersurface`]: Milnor/Tjurina numbers, locally Eulerian verdicts,
//!   gradient linear type of projective hypersurfaces, curve classification;
//! * [`blowup`]: symmetric, Rees and Aluffi algebra presentations;
//! * [`report`]: analysis reports and the batch drivers used by the CLI.

pub mod blowup;
pub mod error;
pub mod groebner;
pub mod hypersurface;
pub mod ideal;
pub mod limits;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational, Ring};

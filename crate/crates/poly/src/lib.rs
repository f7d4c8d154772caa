//! Polynomials in a fixed number of variables with rational coefficients,
//! the degree-reverse-lexicographic order, parsing/printing, and Buchberger's
//! algorithm for Gröbner bases, normal forms and quotient bases.

pub mod groebner;
pub mod mono;
pub mod parse;
pub mod poly;

pub use groebner::{Colength, Ideal};
pub use mono::Mono;
pub use parse::{parse_poly, parse_poly_list, ParseError};
pub use poly::Poly;

/// Variable names of k[x,y].
pub const XY: [&str; 2] = ["x", "y"];
/// Variable names of k[u,v,w].
pub const UVW: [&str; 3] = ["u", "v", "w"];

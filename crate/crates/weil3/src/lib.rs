//! Weil polynomials of degree 6 and characteristic polynomials of
//! dimension-3 abelian varieties over finite fields.
//!
//! A candidate is a coefficient triple `(a1, a2, a3)` over `F_q` (q = p^n)
//! naming the symmetric polynomial
//!
//! ```text
//! p(t) = t^6 + a1 t^5 + a2 t^4 + a3 t^3 + q a2 t^2 + q^2 a1 t + q^3.
//! ```
//!
//! The crate decides, with exact arithmetic only, whether `p(t)` is a Weil
//! polynomial, whether it is irreducible over the rationals, and whether it
//! is the characteristic polynomial of a dimension-3 abelian variety,
//! reporting the p-rank and Newton polygon type. Independent oracles
//! (numeric root finding, Sturm chains over exact surds) cross-validate
//! every decision path.

pub mod classify;
pub mod exactmath;
pub mod irreducibility;
pub mod oracle;
pub mod padic;
pub mod poly;
pub mod weilcheck;

mod error;

pub use classify::{Classification, SupersingularFamily};
pub use error::Error;
pub use exactmath::{RationalPolynomial, SurdValue};
pub use padic::{NewtonPolygon, PolygonType};
pub use poly::IntPolynomial;
pub use weilcheck::WeilCandidate;

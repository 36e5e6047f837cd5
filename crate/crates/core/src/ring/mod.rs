//! Exact Laurent polynomials over the rationals, truncated series, rational
//! functions with linear denominators, and determinants.

pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod ratfn;
pub mod series;
pub mod var;

pub use matrix::{det, det_bareiss, det_cofactor, divide_by_vandermonde, vandermonde, Matrix, Ring};
pub use monomial::Monomial;
pub use poly::{int, rat, Poly, Rational};
pub use ratfn::RatFn;
pub use series::Series;
pub use var::{Families, Family, VarId, VarKind};

//! Refined flagged Grothendieck polynomials with parameters `α`, `β`.
//!
//! Tableau generating functions, flagged Jacobi-Trudi determinants over plethystic
//! alphabets, bialternant formulas, and cross-checks between them.

pub mod alphabet;
pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod int;
pub mod jt;
pub mod poly;
pub mod shape;
pub mod tableau;

pub use error::{Error, Result};
pub use int::Int;
pub use poly::{Family, Monomial, ParamMap, ParamPoly, Target, Var};

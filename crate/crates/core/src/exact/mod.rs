//! Exact arithmetic kernel: rationals, polynomials over a ring, rational
//! functions, quadratic and pure cubic extensions, big complex floats and
//! root structure.

pub mod bigcomplex;
pub mod cubicext;
pub mod mpoly;

pub mod poly;
pub mod quadext;
pub mod ratfunc;
pub mod roots;
pub mod rational;
pub mod ring;


pub use bigcomplex::BigComplex;
pub use cubicext::CubicExtElement;
pub use mpoly::MPoly;

pub use poly::{Poly, Polynomial};
pub use quadext::QuadExtElement;
pub use ratfunc::{rational_function_equal, RationalFunction};
pub use roots::{complex_roots, rational_roots, squarefree_decompose, split_rational_roots, FieldNote, RootStructure};
pub use rational::{fmt_rational, parse_rational, rat, Rational};
pub use ring::{Field, Ring};


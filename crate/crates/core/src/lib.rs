//! Exact computations for 2-representations of finite groups on `Vect^m`:
//! categorical traces, 2-characters, twisted group algebras, equivariant
//! centers of algebras with group actions and low-degree Hochschild
//! cohomology.
//!
//! Linear algebra is generic over [`Field`]; the aliases below fix the
//! scalar to the exact cyclotomic field or to the rationals.

pub mod algebras;
pub mod cocycles;
pub mod field;
pub mod groups;
pub mod hochschild;
pub mod linalg;
pub mod samples;
pub mod twomatrix;
pub mod tworep;

pub use field::{CycScalar, Cyclotomic, Field, Fp, Rational};
pub use groups::FiniteGroup;

pub type CycMatrix = linalg::Matrix<CycScalar>;
pub type QMatrix = linalg::Matrix<Rational>;
pub type Algebra = algebras::StructAlgebra<CycScalar>;
pub type QAlgebra = algebras::StructAlgebra<Rational>;
pub type CycBimodule = algebras::Bimodule<CycScalar>;
pub type CycAction = algebras::GroupAction<CycScalar>;
pub type CycTwoRep = tworep::TwoRep<CycScalar>;
pub type CycTwoNat = twomatrix::TwoNat<CycScalar>;

//! Alexander invariants of finitely presented groups and link exteriors.
//!
//! The pipeline runs: a group presentation (typed directly or produced from
//! a planar-diagram code via [`linkio`]) is abelianized ([`abelian`]), Fox
//! free calculus assembles a presentation matrix of the first homology of
//! the universal torsion-free abelian cover rel basepoint ([`foxcalc`]),
//! and [`alexander`] extracts the classical and refined invariants: the
//! Alexander polynomial and norm, the rank `r0`, the degree `delta0(psi)`
//! of a cohomology class `psi`, and the module's diagonal form over the
//! one-variable Laurent ring with rational-function coefficients.
//! [`obstructions`] turns those numbers into Thurston-norm lower bounds,
//! fibering obstructions, and ropelength bounds.  [`skewcore`] is an
//! independent diagonalization engine for matrices over skew Laurent
//! polynomial rings with coefficients in an arbitrary division ring; on
//! commutative coefficients it cross-checks the production path.

pub mod abelian;
pub mod alexander;
pub mod foxcalc;
pub mod obstructions;
pub mod laurent;
pub mod ratfunc;
pub mod words;

pub use laurent::LaurentPoly;
pub use words::{GroupPresentation, Word};

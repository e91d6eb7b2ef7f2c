//! Exact-arithmetic computation of the G-groups G0(R) and G1(R) for local
//! Cohen-Macaulay singularities whose MCM category carries an n-cluster
//! tilting object.
//!
//! The pipeline reduces everything to integer linear algebra on the
//! n-Auslander-Reiten matrix `T`:
//!
//! * `G0(R)` is the cokernel of `T`, read off from a Smith normal form,
//! * the free part `H` of `G1(R)` is the kernel of `T`,
//! * the subgroup `Xi` acting on the residue torus `(k*)^{t+1}` is spanned
//!   by the columns of `T`, and the torus quotient collapses over an
//!   algebraically closed field,
//! * `G1(R) = H + Aut(L)_ab / Xi` is assembled as a structured abelian
//!   group with symbolic unit-group atoms.
//!
//! The [`endoalg`] module independently verifies the endomorphism-ring
//! identities that justify the torus bookkeeping, by direct matrix
//! arithmetic over truncated power series.

pub mod catalog;
pub mod cli;
pub mod endoalg;
pub mod groups;
pub mod kcalc;
pub mod znf;

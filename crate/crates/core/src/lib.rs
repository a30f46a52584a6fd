//! Exact and high-precision tools around the Racah-Wigner 6j symbol and the
//! Okamoto transformation of Painleve VI.
//!
//! The crate computes 6j symbols two independent ways (the Racah single sum
//! and a coupling-basis construction inside polynomial models of GL_k x GL_3
//! duality), checks the Regge symmetry and its rank-3 lift, and implements the
//! Okamoto transformation both on series solutions of Painleve VI and on trace
//! coordinates of rank-one Fuchsian residue triples, where it matches the
//! Regge symmetry applied to tetrahedron edge lengths.

pub mod exact;
pub mod fuchs;
pub mod howe;
pub mod pvi;
pub mod racah;
pub mod tableaux;
pub mod tetra;
pub mod verify;

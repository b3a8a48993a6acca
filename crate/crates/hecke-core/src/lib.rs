//! Exact computation of Hecke correspondences acting on special-cycle classes.
//!
//! The crate has two halves that check each other:
//!
//! * an exact `Z[1/l]` enumeration core (`ladic`, `groups`, `cosets`,
//!   `components`) that decomposes double cosets `K sigma K`, partitions them
//!   under a subgroup `U = H ∩ K`, computes mixed degrees
//!   `[H ∩ sigma K sigma^{-1} : U ∩ sigma K sigma^{-1}]` by two independent
//!   methods, and assembles the explicit descent expression for
//!   `[K sigma K]_* · y_K(g)` next to the naive single-coset sum;
//! * a finite, fully brute-forceable model (`finite`, `ric`, `schwartz`) of
//!   the same functor formalism, where every axiom and the descent identity
//!   itself can be verified exhaustively.
//!
//! All arithmetic is exact; truncation enters only through generator sets of
//! compact groups, and every reported integer is recomputed at the next
//! precision level before being accepted.

pub mod components;
pub mod cosets;
pub mod descent;
pub mod error;
pub mod finite;
pub mod groups;
pub mod ladic;
pub mod par;
pub mod report;
pub mod ric;
pub mod schwartz;

pub use error::{Error, Result};

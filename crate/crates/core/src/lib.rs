//! Self-inversive binary forms and exact discriminants of their real
//! counterparts.
//!
//! A complex binary form of degree `n + 1` is *self-inversive* when its
//! coefficient sequence equals its conjugate reversal up to a unimodular
//! factor; its roots lie on, or in pairs symmetric in, the unit circle.
//! Every such form corresponds to a real binary form under an explicit
//! linear substitution, and for monic forms the discriminant of the real
//! side factors as `2^{n(n+1)}` times the determinant of an
//! `(n+1) x (n+1)` matrix of root power sums. This crate implements the
//! whole correspondence exactly over the Gaussian rationals:
//!
//! * [`numeric`] — arbitrary-precision rational and Gaussian-rational
//!   scalars plus the shared floating-point complex type;
//! * [`forms`] — the typed coefficient spaces and their symmetry checks;
//! * [`transform`] — the substitution isomorphisms in both directions, the
//!   closed-form coefficient formulas, monic normalization, deflation, and
//!   the Möbius root correspondence;
//! * [`symfunc`] — power sums (including negative indices) via Newton's
//!   identities and the Toeplitz power-sum matrix;
//! * [`disc`] — fraction-free determinants, the power-sum and resultant
//!   discriminant routes, circle-root classification, and sampling of the
//!   all-roots-on-circle region;
//! * [`roots`] — simultaneous-iteration root finding and circle/pair
//!   classification in floating point.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); disable the
//! default `std` feature to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;

pub mod disc;
pub mod forms;
pub mod numeric;
pub mod roots;
pub mod symfunc;
pub mod transform;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

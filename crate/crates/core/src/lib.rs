//! Exact computer algebra for I-graded SO-complexes over `Λ = Q[x^±1]`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactalg`]: arbitrary-precision rationals and Laurent polynomials;
//! - [`grmod`]: bigraded free `Λ`-modules, homogeneous maps, and exact
//!   sparse linear algebra on finite-dimensional `Q`-slices;
//! - [`socx`]: SO-complexes, their axioms, the restricted Künneth product
//!   and the complexes of connected sums of the Poincaré sphere;
//! - [`gamma`]: the invariant `Γ(i)` with witnesses and a brute-force oracle;
//! - [`charvar`]: the character-variety census of `#_n Σ(2,3,5)` and the
//!   extension-component certificate;
//! - [`cli`]: the command implementations behind the `socx` binary.

pub mod charvar;
pub mod cli;
pub mod exactalg;
pub mod gamma;
pub mod grmod;
pub mod socx;

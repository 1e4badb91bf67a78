//! Arithmetic Chern-Simons invariants for explicit number-field families.
//!
//! The crate has two halves that meet in the 3-cocycles used as actions:
//!
//! * [`group`] and [`cohomology`] build finite groups as multiplication
//!   tables and compute with inhomogeneous cochains over `Z/nZ` (coboundary,
//!   cup product, Bockstein, pullback, an exact coboundary solver). This is
//!   where the twisting construction `c = ψ ∪ δψ` on a semidirect product is
//!   built and checked against the generator `Id ∪ δ(Id)` of
//!   `H³(Z/nZ, Z/nZ)`.
//! * [`number_theory`] and [`cs_engine`] evaluate `CS_c([ρ]) ∈ (1/2)Z/Z` for
//!   quadratic and biquadratic families by counting inert primes, and carry
//!   closed-form presets that are cross-checked against the generic count.

pub mod cohomology;
pub mod cs_engine;
pub mod group;
pub mod number_theory;

pub use cohomology::{CohClass, Cochain, CohomologyError};
pub use cs_engine::{CsError, CsValue, PresetId};
pub use group::{FiniteGroup, GroupError, GroupHom, SemidirectSpec};
pub use number_theory::{Factored, NumberTheoryError, SplitType};

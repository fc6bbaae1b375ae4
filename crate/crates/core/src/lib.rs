//! Exact calculus of clean conic Lagrangian cycles on abelian varieties.
//!
//! - [`symfun`]: partitions and symmetric-function base changes.
//! - [`lambda`]: λ-rings through Adams operations; group rings `ℤ[Γ]`.
//! - [`chow`]: numerical Chow classes with the Pontryagin product.
//! - [`cycles`]: clean cycle models, convolution, Adams and Schur operations.
//! - [`liere`]: root systems, Weyl orbits, characters and classifiers.
//! - [`schottky`]: theta-divisor applications built on the modules above.

pub mod chow;
pub mod cycles;
pub mod error;
pub mod lambda;
pub mod liere;
pub mod num;
pub mod schottky;
pub mod symfun;

pub use chow::ChowVector;
pub use cycles::{CleanCycleModel, CycleComponent};
pub use error::{Error, Result};
pub use lambda::{FgAbelianGroup, GroupElement, GroupRingElement, LambdaRing, TensorConstruction};
pub use symfun::{Basis, Partition, SymExpr};

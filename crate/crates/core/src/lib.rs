//! Multiplicities of points on Schubert varieties in Grassmannians.
//!
//! The multiplicity `M_j(i)` is computed exactly by three determinant
//! formulas ([`schubert`]) and by brute-force enumeration of the
//! combinatorial objects those determinants count: nonintersecting lattice
//! paths ([`paths`]) and column arrays of unusual shape ([`tableaux`]).
//! [`verify`] runs every cross-check over exhaustive and random corpora.
//!
//! ```
//! use schubert_mult::{multiplicity, validate, Guard, Selection};
//!
//! let datum = validate(4, 2, &[2, 4], &[1, 2]).unwrap();
//! let m = multiplicity(&datum, Selection::All, Guard::DEFAULT).unwrap();
//! assert_eq!(m, 2.into());
//! ```

pub mod cli;
pub mod document;
pub mod error;
pub mod exact;
pub mod guard;
pub mod multiplicity;
pub mod paths;
pub mod render;
pub mod schubert;
pub mod tableaux;
pub mod verify;

pub use error::{Error, ValidationError};
pub use exact::{binomial, determinant, determinant_cofactor, IntMatrix};
pub use guard::Guard;
pub use multiplicity::{evaluate, multiplicity, Method, Outcome, Selection};
pub use paths::{FamilySpec, LatticePoint, MonotonePath, PathFamily, StepSystem};
pub use schubert::{validate, SchubertDatum};
pub use tableaux::{UnusualArray, UnusualShape};

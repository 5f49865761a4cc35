//! Generalized Littlewood–Richardson polynomials for the Macdonald inner
//! product at `q = t^k`.
//!
//! The coefficient `c^{κλ}_{μν}(t)` of `s_μ s*_κ` in `s*_ν s_λ` is computed
//! two ways: as a weighted count of lattice k-tableaux ([`ktableaux`]) and as
//! the pairing `(s_{λ/μ}, s_{ν/κ})_{t^k,t}` in the power-sum basis
//! ([`symfunc`]). [`lr`] ties them together.
//!
//! ```
//! use lrq_core::lr::{coeff_tableau, CoeffKey};
//! use lrq_core::Partition;
//!
//! let p = |s: &str| s.parse::<Partition>().unwrap();
//! let key = CoeffKey::new(2, p("1"), p("3,2"), p("1"), p("3,2")).unwrap();
//! assert_eq!(coeff_tableau(&key).to_string(), "2 + 5*t + 7*t^2 + 5*t^3 + 2*t^4");
//! ```

#![no_std]

extern crate alloc;

pub mod error;
pub mod ktableaux;
pub mod laurent;
pub mod lr;
pub mod partitions;
pub mod symfunc;

pub use error::Error;
pub use ktableaux::{KTableau, MonomialEntry};
pub use laurent::{gaussian_binomial, quantum_binomial, LaurentPoly, RationalPoly};
pub use lr::{CoeffKey, CoeffRecord, Method};
pub use partitions::{Partition, SkewShape, SkewTableau, Word};
pub use symfunc::{Basis, SymFunc};

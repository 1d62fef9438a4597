//! Verification toolkit for the Rubik, Revenge and Professor's cube groups
//! and the polynomials realizing them as Galois groups over `Q`.
//!
//! The group half rebuilds the sticker groups from explicit generators and
//! checks exact orders and sign/orientation invariants. The number-theory half
//! computes exact discriminants and square classes and gathers Frobenius cycle
//! types modulo many primes.

pub mod arith;
pub mod cube;
pub mod error;
pub mod evidence;
pub mod group;
pub mod modp;
pub mod perm;
pub mod poly;
pub mod structure;
pub mod theorem;
pub mod verify;

pub use error::{Error, Result};
pub use group::GroupHandle;
pub use perm::{CycleType, Permutation};
pub use poly::PolyQ;

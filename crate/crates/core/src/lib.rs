//! Construction, verification and desk-scale simulation of the [[6k,2k,2]]
//! error-detecting code family for adiabatic quantum computation, together
//! with the Gottesman [[2k+2,2k,2]] code it improves on.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf2`]: bit-packed GF(2) vectors and elimination.
//! - [`pauli`]: Pauli operators in binary symplectic form.
//! - [`codes`]: code constructors, verification, syndromes, distance, coset reduction.
//! - [`hamiltonians`]: Pauli-sum Hamiltonians and the encoding pipeline.
//! - [`graphs`]: interaction graphs, degree, planarity, bipartitions, Hadamard transforms.
//! - [`sim`]: dense statevector dynamics for initialization and decoupling studies.
//! - [`cli`]: the command-line front end used by the `aqc-codes` binary.

pub mod cli;
pub mod codes;
pub mod error;
pub mod gf2;
pub mod graphs;
pub mod hamiltonians;
pub mod pauli;
pub mod sim;

pub use codes::{build_6k2k2, build_gottesman, QubitLabel, Role, StabilizerCode};
pub use error::{Error, Result};
pub use hamiltonians::PauliHamiltonian;
pub use pauli::PauliString;

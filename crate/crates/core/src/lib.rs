//! Exact enumeration and verification for parking functions with two car
//! sizes.
//!
//! The crate models labeled Dyck paths as two-line arrays, reduces the
//! two-car shuffle families to 1-2 tableaux, and computes their
//! `q^(coarea+dinv)` and `t^area q^dinv` generating polynomials four
//! independent ways: exhaustive enumeration, closed-form q-binomial
//! products, memoized recursions, and the `t = 1/q` substitution bridge.
//! The [`verify`] module cross-checks the routes against each other; the
//! `qpark` binary exposes everything on the command line.
//!
//! All arithmetic is exact over arbitrary-precision integers.

pub mod bijections;
pub mod closedforms;
pub mod enumerator;
pub mod parkfun;
pub mod qalg;
pub mod recursions;
pub mod routes;
pub mod verify;

pub use parkfun::{BinaryWord, CarSize, Dinv, ParkingFunction, PfError, ShuffleSpec, TwoCarTableau};
pub use qalg::{QLaurent, QPoly, QTPoly, QalgError};

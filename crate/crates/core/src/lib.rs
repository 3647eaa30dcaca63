//! Exact linear-programming machinery for spherical codes that avoid a set
//! of inner products.
//!
//! Everything in this crate is exact: scalars are arbitrary-precision
//! rationals, polynomial sign conditions are decided with Sturm sequences,
//! and code constructions use integer coordinates. The crate is `no_std`
//! and only needs `alloc`; IO, the command line and parallel enumeration
//! live in the companion `tavoid` crate.
//!
//! Module map:
//!
//! * [`exactnum`]: rationals, dense polynomials, root counting, sign
//!   verification on unions of intervals, rational interval arithmetic.
//! * [`gegenbauer`]: normalized Gegenbauer bases and exact expansions.
//! * [`atlas`]: binary Golay and Reed-Muller codes, Leech and Barnes-Wall
//!   minimal vectors, derived codes, strongly regular graph embeddings.
//! * [`designs`]: inner-product profiles, moments, design strength,
//!   avoidance, energies and the quadrature system.
//! * [`interpolate`]: Hermite interpolation in Newton form and the energy
//!   certificates built from it.
//! * [`certify`]: LP certificates for code size, design size and energy,
//!   and the registry of published certificates.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod atlas;
pub mod certify;
pub mod designs;
pub mod error;
pub mod exactnum;
pub mod gegenbauer;
pub mod interpolate;

pub use error::{Error, Result};
pub use exactnum::{int, parse_rational, rat, Factored, IntervalSet, Poly, RatInterval, Rational, Region};

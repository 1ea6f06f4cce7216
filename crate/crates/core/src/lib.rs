//! Exact counts of quiver representations over truncated power series rings
//! `F_q[t]/(t^alpha)`: Kac polynomials with multiplicities, moment-map fiber and
//! jet counts, plethystic identities, alpha -> infinity limits and the Hall algebra
//! of `(A_2, alpha)`, each checked against brute-force enumeration over small fields.

pub mod error;
pub mod exactalg;

pub use error::{Error, Result};
pub use exactalg::{QPolynomial, RationalFunction, RfSeries, TruncatedSeries, VolumeSequence};
pub mod quiver;

pub use quiver::{Quiver, RankVector};
pub mod finitering;
pub mod bruteforce;
pub mod config;
pub mod hall;
pub mod kacpoly;
pub mod verify;

pub use config::Caps;

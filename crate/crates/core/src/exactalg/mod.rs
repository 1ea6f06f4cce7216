//! Exact arithmetic: Laurent polynomials and rational functions in q, truncated
//! multivariate series with Adams operators, and the plethystic Exp/Log.

mod parse;
mod poly;
mod pseries;
mod ratfunc;
mod series;
mod volume;
pub(crate) mod zpoly;

pub use parse::{parse_rf, parse_rf_with};
pub use poly::QPolynomial;
pub use pseries::PowerSeries;
pub use ratfunc::RationalFunction;
pub use series::{mobius, RfSeries, SeriesCoeff, TruncatedSeries, VolumeSeries};
pub use volume::VolumeSequence;


use num_rational::BigRational;

use crate::error::Result;

/// Evaluates a rational function at a rational point.
pub fn rf_eval(f: &RationalFunction, q0: &BigRational) -> Result<BigRational> {
    f.eval(q0)
}

/// Adams operator q -> q^m.
pub fn adams(f: &RationalFunction, m: u32) -> RationalFunction {
    f.adams(m)
}

/// Plethystic exponential of a series in the augmentation ideal.
pub fn plethystic_exp<C: SeriesCoeff>(f: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    f.plethystic_exp()
}

/// Plethystic logarithm of a series with constant term 1.
pub fn plethystic_log<C: SeriesCoeff>(g: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    g.plethystic_log()
}

/// Shorthand for an integer as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

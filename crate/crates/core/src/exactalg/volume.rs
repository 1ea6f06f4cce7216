//! Finite truncations of the ring of volumes: sequences indexed by extension degree.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::SeriesCoeff;

/// Values `v[n]` at field-extension degrees n = 1..N; `None` marks an unknown entry.
/// Constants are kept symbolic so they combine with sequences of any length.
#[derive(Clone, Debug, PartialEq)]
pub enum VolumeSequence {
    Const(BigRational),
    Seq(Vec<Option<BigRational>>),
}

impl VolumeSequence {
    /// Sequence from known values at degrees 1..=len.
    pub fn from_values(v: Vec<BigRational>) -> Self {
        VolumeSequence::Seq(v.into_iter().map(Some).collect())
    }

    pub fn from_partial(v: Vec<Option<BigRational>>) -> Self {
        VolumeSequence::Seq(v)
    }

    /// Value at degree `n` (1-based), if known.
    pub fn at(&self, n: usize) -> Option<BigRational> {
        match self {
            VolumeSequence::Const(c) => Some(c.clone()),
            VolumeSequence::Seq(v) => v.get(n.checked_sub(1)?).cloned().flatten(),
        }
    }

    fn len(&self) -> Option<usize> {
        match self {
            VolumeSequence::Const(_) => None,
            VolumeSequence::Seq(v) => Some(v.len()),
        }
    }

    fn zip_with(&self, o: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        match (self, o) {
            (VolumeSequence::Const(a), VolumeSequence::Const(b)) => VolumeSequence::Const(f(a, b)),
            _ => {
                let n = self.len().unwrap_or(0).max(o.len().unwrap_or(0));
                VolumeSequence::Seq(
                    (1..=n)
                        .map(|i| match (self.at(i), o.at(i)) {
                            (Some(a), Some(b)) => Some(f(&a, &b)),
                            _ => None,
                        })
                        .collect(),
                )
            }
        }
    }
}

impl fmt::Display for VolumeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VolumeSequence::Const(c) => write!(f, "{c}"),
            VolumeSequence::Seq(v) => {
                let s: Vec<String> = v
                    .iter()
                    .map(|x| x.as_ref().map_or("?".to_string(), |c| c.to_string()))
                    .collect();
                write!(f, "[{}]", s.join(", "))
            }
        }
    }
}

impl SeriesCoeff for VolumeSequence {
    fn zero() -> Self {
        VolumeSequence::Const(BigRational::zero())
    }
    fn one() -> Self {
        VolumeSequence::Const(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            VolumeSequence::Const(c) => c.is_zero(),
            VolumeSequence::Seq(v) => v.iter().all(|x| x.as_ref().is_some_and(|c| c.is_zero())),
        }
    }
    fn plus(&self, o: &Self) -> Self {
        self.zip_with(o, |a, b| a + b)
    }
    fn minus(&self, o: &Self) -> Self {
        self.zip_with(o, |a, b| a - b)
    }
    fn times(&self, o: &Self) -> Self {
        self.zip_with(o, |a, b| a * b)
    }
    fn scaled(&self, c: &BigRational) -> Self {
        self.zip_with(&VolumeSequence::Const(c.clone()), |a, b| a * b)
    }
    /// (psi_m v)[n] = v[mn], unknown when mn exceeds the truncation.
    fn psi(&self, m: u32) -> Self {
        match self {
            VolumeSequence::Const(c) => VolumeSequence::Const(c.clone()),
            VolumeSequence::Seq(v) => VolumeSequence::Seq(
                (1..=v.len()).map(|n| self.at(n * m as usize)).collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn psi_moves_indices() {
        let v = VolumeSequence::from_values(vec![r(2), r(4), r(8), r(16)]);
        let p = v.psi(2);
        assert_eq!(p.at(1), Some(r(4)));
        assert_eq!(p.at(2), Some(r(16)));
        assert_eq!(p.at(3), None);
    }
}

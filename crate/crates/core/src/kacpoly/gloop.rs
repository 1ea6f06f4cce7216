//! Burnside-type recurrences in alpha for the g-loop quiver in ranks 2 and 3, and the
//! plethystic passage between M-series and Kac polynomials.

use crate::error::{Error, Result};
use crate::exactalg::{parse_rf_with, RationalFunction, RfSeries};

/// Two entries of the recurrence data admit a literal and a corrected reading.
///
/// Rank 2, initial value of type II_1: corrected q^{2g}(q-2)/(2(q-1)), since there are
/// (q-1)(q-2)/2 split semisimple classes, each with centraliser of size q^2 in gl_2 and
/// (q-1)^2 in GL_2, weighted by q^{g dim}; the literal q^2(q-2)/(2(q-1)) agrees only at g = 1.
///
/// Rank 3, row K_inf: corrected it is fed from J exactly like K_0; the literal row is
/// diagonal only, which keeps K_inf at 0 for every alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reading {
    #[default]
    Corrected,
    Literal,
}

const RANK2_INIT: [&str; 4] = ["q^(4g)/(q(q-1)(q+1))", "q^(2g)(q-2)/(2(q-1))", "q^(2g-1)", "q^(2g+1)/(2(q+1))"];
const RANK2_INIT_LITERAL_II1: &str = "q^2(q-2)/(2(q-1))";

const RANK2_MATRIX: [[&str; 4]; 4] = [
    ["q^(4g-3)", "0", "0", "0"],
    ["q^(2g-2)(q-1)(q+1)/2", "q^(2g)", "0", "0"],
    ["q^(2g-3)(q-1)(q+1)", "0", "q^(2g)", "0"],
    ["q^(2g-2)(q-1)^2/2", "0", "0", "q^(2g)"],
];

/// Type order: G, L, J, T1, T2, T3, M, N, K0, Kinf.
const RANK3_INIT: [&str; 10] = [
    "q^(9g-3)/((q^2-1)(q^3-1))",
    "q^(5g-1)(q-2)/((q-1)(q^2-1))",
    "q^(5g-3)/(q-1)",
    "q^(3g)(q-2)(q-3)/(6(q-1)^2)",
    "q^(3g+1)/(2(q+1))",
    "q^(3g+1)(q^2-1)/(3(q^3-1))",
    "q^(3g-1)(q-2)/(q-1)",
    "q^(3g-2)",
    "0",
    "0",
];

/// Sparse rows: (column, entry).
const RANK3_MATRIX: [&[(usize, &str)]; 10] = [
    &[(0, "q^(9g-8)")],
    &[(0, "q^(5g-6)(q^3-1)"), (1, "q^(5g-3)")],
    &[(0, "q^(5g-8)(q^2-1)(q^3-1)/(q-1)"), (2, "q^(5g-3)")],
    &[(0, "q^(3g-5)(q-2)(q^2-1)(q^3-1)/(6(q-1))"), (1, "q^(3g-2)(q^2-1)/2"), (3, "q^(3g)")],
    &[(0, "q^(3g-4)(q-1)(q^3-1)/2"), (1, "q^(3g-2)(q-1)^2/2"), (4, "q^(3g)")],
    &[(0, "q^(3g-5)(q-1)(q^2-1)^2/3"), (5, "q^(3g)")],
    &[(0, "q^(3g-6)(q^2-1)(q^3-1)"), (1, "q^(3g-3)(q^2-1)"), (2, "q^(3g-1)(q-1)"), (6, "q^(3g)")],
    &[(0, "q^(3g-7)(q^2-1)(q^3-1)"), (2, "q^(3g-3)(q-1)^2"), (7, "q^(3g)")],
    &[(2, "q^(3g-3)(q-1)"), (8, "q^(3g)")],
    &[(9, "q^(3g)")],
];
const RANK3_KINF_CORRECTED: &[(usize, &str)] = &[(2, "q^(3g-3)(q-1)"), (9, "q^(3g)")];

fn check(g: usize, alpha: usize) -> Result<()> {
    if g == 0 || alpha == 0 {
        return Err(Error::InvalidInput("g and alpha must be at least 1".into()));
    }
    Ok(())
}

fn parse_g(s: &str, g: usize) -> Result<RationalFunction> {
    parse_rf_with(s, &[("g", g as i64)])
}

fn iterate(init: Vec<RationalFunction>, rows: &[Vec<(usize, RationalFunction)>], alpha: usize) -> Vec<RationalFunction> {
    let mut s = init;
    for _ in 1..alpha {
        s = rows
            .iter()
            .map(|row| row.iter().map(|(j, m)| m * &s[j.to_owned()]).sum())
            .collect();
    }
    s
}

/// Per-type values S_{sigma,alpha} of the rank-2 recurrence.
pub fn gloop_rank2_states(g: usize, alpha: usize, reading: Reading) -> Result<Vec<RationalFunction>> {
    check(g, alpha)?;
    let mut init = RANK2_INIT.iter().map(|s| parse_g(s, g)).collect::<Result<Vec<_>>>()?;
    if reading == Reading::Literal {
        init[1] = parse_g(RANK2_INIT_LITERAL_II1, g)?;
    }
    let rows = RANK2_MATRIX
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, e)| **e != "0")
                .map(|(j, e)| Ok((j, parse_g(e, g)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(iterate(init, &rows, alpha))
}

/// M_2 for the g-loop quiver over F_q[t]/(t^alpha).
pub fn gloop_rank2_recurrence(g: usize, alpha: usize) -> Result<RationalFunction> {
    gloop_rank2_recurrence_with(g, alpha, Reading::default())
}

pub fn gloop_rank2_recurrence_with(g: usize, alpha: usize, reading: Reading) -> Result<RationalFunction> {
    Ok(gloop_rank2_states(g, alpha, reading)?.into_iter().sum())
}

/// M_3 for the g-loop quiver over F_q[t]/(t^alpha).
pub fn gloop_rank3_recurrence(g: usize, alpha: usize) -> Result<RationalFunction> {
    gloop_rank3_recurrence_with(g, alpha, Reading::default())
}

pub fn gloop_rank3_recurrence_with(g: usize, alpha: usize, reading: Reading) -> Result<RationalFunction> {
    check(g, alpha)?;
    let init = RANK3_INIT.iter().map(|s| parse_g(s, g)).collect::<Result<Vec<_>>>()?;
    let mut matrix = RANK3_MATRIX;
    if reading == Reading::Corrected {
        matrix[9] = RANK3_KINF_CORRECTED;
    }
    let rows = matrix
        .iter()
        .map(|row| row.iter().map(|(j, e)| Ok((*j, parse_g(e, g)?))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(iterate(init, &rows, alpha).into_iter().sum())
}

/// Kac polynomials from an M-series: Sum M_r t^r = Exp(Sum A_r t^r).
pub fn m_to_a(m: &RfSeries) -> Result<RfSeries> {
    m.plethystic_log()
}

/// Inverse of `m_to_a`.
pub fn a_to_m(a: &RfSeries) -> Result<RfSeries> {
    a.plethystic_exp()
}

/// A_{(Q,alpha),r} for the g-loop quiver, r <= 3, via the recurrences and the plethystic log.
pub fn gloop_kac_from_recurrence(g: usize, alpha: usize, rank: usize) -> Result<RationalFunction> {
    check(g, alpha)?;
    if !(1..=3).contains(&rank) {
        return Err(Error::InvalidInput(format!("rank {rank} not in 1..=3")));
    }
    let mut terms = vec![(vec![1u32], RationalFunction::q_pow((alpha * g) as i64))];
    if rank >= 2 {
        terms.push((vec![2], gloop_rank2_recurrence(g, alpha)?));
    }
    if rank >= 3 {
        terms.push((vec![3], gloop_rank3_recurrence(g, alpha)?));
    }
    let mut m = RfSeries::one(vec![rank as u32]);
    for (r, c) in terms {
        m.set(r, c);
    }
    Ok(m_to_a(&m)?.coeff(&[rank as u32]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_rf;

    #[test]
    fn rank2_jordan() {
        // q^alpha (1 + q + ... + q^{alpha-1})
        for alpha in 1..=4i64 {
            let expect = parse_rf_with("q^a(q^a-1)/(q-1)", &[("a", alpha)]).unwrap();
            assert_eq!(gloop_kac_from_recurrence(1, alpha as usize, 2).unwrap(), expect);
        }
    }

    #[test]
    fn readings_differ_beyond_g1() {
        let a = gloop_rank2_recurrence_with(1, 2, Reading::Literal).unwrap();
        assert_eq!(a, gloop_rank2_recurrence(1, 2).unwrap());
        let a = gloop_rank2_recurrence_with(2, 1, Reading::Literal).unwrap();
        assert_ne!(a, gloop_rank2_recurrence(2, 1).unwrap());
        // K_inf only enters from alpha = 2 on.
        let lit = |a| gloop_rank3_recurrence_with(1, a, Reading::Literal).unwrap();
        assert_eq!(lit(1), gloop_rank3_recurrence(1, 1).unwrap());
        assert_eq!(gloop_rank3_recurrence(1, 2).unwrap() - lit(2), RationalFunction::q_pow(2));
    }

    #[test]
    fn retyped_entries() {
        // Three entries re-entered in expanded form, compared at g = 2 and g = 3.
        let g = 2;
        let m = |row: usize, col: usize| {
            RANK3_MATRIX[row].iter().find(|(j, _)| *j == col).map(|(_, e)| parse_g(e, g).unwrap()).unwrap()
        };
        assert_eq!(m(2, 0), parse_rf("q^2(q+1)(q^3-1)").unwrap());
        assert_eq!(m(3, 0), parse_rf("q(q^2-q-2)(q^3-1)/6").unwrap());
        assert_eq!(m(7, 2), parse_rf("q^3(q^2-2q+1)").unwrap());
        assert_eq!(parse_g(RANK3_INIT[5], 3).unwrap(), parse_rf("q^10(q+1)/(3(q^2+q+1))").unwrap());
    }

    #[test]
    fn rank3_small() {
        assert_eq!(gloop_kac_from_recurrence(1, 1, 3).unwrap(), RationalFunction::q());
        assert_eq!(
            gloop_kac_from_recurrence(1, 3, 3).unwrap(),
            parse_rf("q^7 + q^6 + 3q^5 + 2q^4 + 2q^3").unwrap()
        );
    }

    #[test]
    fn m_a_roundtrip() {
        let mut a = RfSeries::zero(vec![3]);
        a.set(vec![1], parse_rf("q^2").unwrap());
        a.set(vec![2], parse_rf("q^3+q").unwrap());
        assert_eq!(m_to_a(&a_to_m(&a).unwrap()).unwrap(), a);
    }
}

//! Lee-sphere sizes, the Abelian-Cayley upper bound, the conjectured extremal
//! coefficients and the lower-bound leading terms.
//!
//! Everything here is exact: sphere sizes in checked 128-bit integers,
//! coefficients as reduced rationals. No floating point.

use crate::arith::{binomial, Rational};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("value overflows 128-bit intermediate arithmetic")]
    Overflow,
    #[error("degree {0} unsupported (need 2..=15)")]
    UnsupportedDegree(u32),
    #[error("degree {0} is odd; this bound is defined for even degree")]
    OddDegree(u32),
    #[error("dimension must be at least 1")]
    ZeroDimension,
}

/// |S_{f,k}|: number of points of Z^f with l1 norm at most k.
pub fn lee_sphere_size(f: u32, k: u64) -> Result<u64, BoundsError> {
    if f == 0 {
        return Err(BoundsError::ZeroDimension);
    }
    let mut total: i128 = 0;
    for i in 0..=f.min(k.min(u32::MAX as u64) as u32) {
        let term = 1i128
            .checked_shl(i)
            .and_then(|p| p.checked_mul(binomial(f as u64, i as u64)?))
            .and_then(|p| p.checked_mul(binomial(k, i as u64)?))
            .ok_or(BoundsError::Overflow)?;
        total = total.checked_add(term).ok_or(BoundsError::Overflow)?;
    }
    u64::try_from(total).map_err(|_| BoundsError::Overflow)
}

/// Abelian-Cayley upper bound M_AC(d, k) on the order of a degree-d,
/// diameter-k Abelian Cayley graph.
pub fn m_ac(d: u32, k: u64) -> Result<u64, BoundsError> {
    if d < 2 {
        return Err(BoundsError::UnsupportedDegree(d));
    }
    let f = d / 2;
    let s_k = lee_sphere_size(f, k)?;
    if d % 2 == 0 {
        Ok(s_k)
    } else {
        let s_prev = if k == 0 { 0 } else { lee_sphere_size(f, k - 1)? };
        s_k.checked_add(s_prev).ok_or(BoundsError::Overflow)
    }
}

/// R_f = 2^(f-1) f! / f^f: ratio of the leading coefficients of the circulant
/// lower bound and the Abelian-Cayley upper bound.
pub fn ratio_rf(f: u32) -> Result<Rational, BoundsError> {
    if f == 0 {
        return Err(BoundsError::ZeroDimension);
    }
    let mut num: i128 = 1i128.checked_shl(f - 1).ok_or(BoundsError::Overflow)?;
    for i in 1..=f as i128 {
        num = num.checked_mul(i).ok_or(BoundsError::Overflow)?;
    }
    let mut den: i128 = 1;
    for _ in 0..f {
        den = den.checked_mul(f as i128).ok_or(BoundsError::Overflow)?;
    }
    Ok(Rational::new(num, den))
}

/// The two leading coefficients of the conjectured extremal order polynomial
/// CC*(d, k): (1/2)(4/f)^f and (4/f)^(f-1) for even d, (4/f)^f and 0 for odd.
pub fn conjectured_terms(d: u32) -> Result<(Rational, Rational), BoundsError> {
    if !(2..=15).contains(&d) {
        return Err(BoundsError::UnsupportedDegree(d));
    }
    let f = d / 2;
    let base = Rational::new(4, f as i128);
    if d % 2 == 0 {
        Ok((
            base.pow(f).mul(Rational::new(1, 2)),
            base.pow(f - 1),
        ))
    } else {
        Ok((base.pow(f), Rational::ZERO))
    }
}

/// Which lower bound's leading terms are requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBound {
    /// Chen–Jia circulant bound.
    ChenJia,
    /// Dougherty–Faber Abelian-Cayley bound.
    DoughertyFaberAc,
}

/// Second term of a lower bound. Chen–Jia's coefficient b is only bounded
/// (b <= 13 - 4f), so it is reported as an inequality, never as a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondTerm {
    Exact(Rational),
    /// Coefficient is (b/2)(4/f)^(f-1) with b <= b_max.
    BoundedB { b_max: i64, half_factor: Rational },
}

/// Leading and second coefficients of CJ(d,k) or DF_AC(d,k) for even d.
pub fn lower_bound_leading(d: u32, which: LowerBound) -> Result<(Rational, SecondTerm), BoundsError> {
    if d % 2 != 0 {
        return Err(BoundsError::OddDegree(d));
    }
    let f = d / 2;
    if f < 3 {
        return Err(BoundsError::UnsupportedDegree(d));
    }
    let base = Rational::new(4, f as i128);
    let leading = base.pow(f).mul(Rational::new(1, 2));
    let second = match which {
        LowerBound::DoughertyFaberAc => SecondTerm::Exact(base.pow(f - 1)),
        LowerBound::ChenJia => SecondTerm::BoundedB {
            b_max: 13 - 4 * f as i64,
            half_factor: base.pow(f - 1).mul(Rational::new(1, 2)),
        },
    };
    Ok((leading, second))
}

/// Bound summary for one (degree, diameter) pair.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BoundReport {
    pub degree: u32,
    pub diameter: u64,
    pub m_ac: u64,
    pub lee_sphere: u64,
    pub conjectured_leading: String,
    pub conjectured_second: String,
    pub r_f: String,
}

pub fn bound_report(d: u32, k: u64) -> Result<BoundReport, BoundsError> {
    let f = d / 2;
    let (lead, second) = conjectured_terms(d)?;
    Ok(BoundReport {
        degree: d,
        diameter: k,
        m_ac: m_ac(d, k)?,
        lee_sphere: lee_sphere_size(f, k)?,
        conjectured_leading: lead.to_string(),
        conjectured_second: second.to_string(),
        r_f: ratio_rf(f)?.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_size_pins() {
        assert_eq!(lee_sphere_size(5, 0).unwrap(), 1);
        assert_eq!(lee_sphere_size(5, 2).unwrap(), 61);
        assert_eq!(lee_sphere_size(5, 5).unwrap(), 1683);
        for k in 0..50 {
            assert_eq!(lee_sphere_size(1, k).unwrap(), 2 * k + 1);
        }
    }

    #[test]
    fn sphere_size_matches_lattice_enumeration() {
        // independent oracle: count points of Z^f with |x|_1 <= k directly
        fn count(f: u32, k: i64) -> u64 {
            fn rec(dims: u32, budget: i64) -> u64 {
                if dims == 0 {
                    return 1;
                }
                let mut total = 0;
                for x in -budget..=budget {
                    total += rec(dims - 1, budget - x.abs());
                }
                total
            }
            rec(f, k)
        }
        for f in 1..=4 {
            for k in 0..=8 {
                assert_eq!(lee_sphere_size(f, k as u64).unwrap(), count(f, k), "f={f} k={k}");
            }
        }
    }

    #[test]
    fn sphere_size_recurrence() {
        for f in 2..=8u32 {
            for k in 1..=60u64 {
                let lhs = lee_sphere_size(f, k).unwrap();
                let rhs = lee_sphere_size(f, k - 1).unwrap()
                    + lee_sphere_size(f - 1, k).unwrap()
                    + lee_sphere_size(f - 1, k - 1).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn m_ac_pins() {
        assert_eq!(m_ac(10, 4).unwrap(), 681);
        assert_eq!(m_ac(11, 2).unwrap(), 72);
        for k in 1..30 {
            assert_eq!(m_ac(2, k).unwrap(), 2 * k + 1);
        }
    }

    #[test]
    fn ratio_pins_and_monotonicity() {
        assert_eq!(ratio_rf(1).unwrap(), Rational::from_int(1));
        assert_eq!(ratio_rf(2).unwrap(), Rational::from_int(1));
        assert_eq!(ratio_rf(5).unwrap(), Rational::new(1920, 3125));
        let mut prev = ratio_rf(2).unwrap();
        for f in 3..=7 {
            let cur = ratio_rf(f).unwrap();
            assert!(cur < prev, "R_{f} not strictly below R_{}", f - 1);
            prev = cur;
        }
    }

    #[test]
    fn conjectured_term_pins() {
        assert_eq!(
            conjectured_terms(10).unwrap(),
            (Rational::new(512, 3125), Rational::new(1280, 3125))
        );
        assert_eq!(
            conjectured_terms(11).unwrap(),
            (Rational::new(1024, 3125), Rational::ZERO)
        );
        assert_eq!(
            conjectured_terms(13).unwrap(),
            (Rational::new(64, 729), Rational::ZERO)
        );
        assert_eq!(
            conjectured_terms(12).unwrap(),
            (Rational::new(32, 729), Rational::new(96, 729))
        );
        assert_eq!(
            conjectured_terms(14).unwrap(),
            (Rational::new(8192, 823543), Rational::new(28672, 823543))
        );
        assert_eq!(
            conjectured_terms(15).unwrap(),
            (Rational::new(16384, 823543), Rational::ZERO)
        );
        assert!(conjectured_terms(16).is_err());
    }

    #[test]
    fn lower_bounds() {
        let (lead, second) = lower_bound_leading(10, LowerBound::DoughertyFaberAc).unwrap();
        assert_eq!(lead, Rational::new(512, 3125));
        assert_eq!(second, SecondTerm::Exact(Rational::new(1280, 3125)));
        // DF_AC shares both leading terms with the conjecture for even degree
        for d in [6u32, 8, 10, 12, 14] {
            let (l, s) = lower_bound_leading(d, LowerBound::DoughertyFaberAc).unwrap();
            let (cl, cs) = conjectured_terms(d).unwrap();
            assert_eq!(l, cl);
            assert_eq!(s, SecondTerm::Exact(cs));
        }
        let (lead, second) = lower_bound_leading(6, LowerBound::ChenJia).unwrap();
        assert_eq!(lead, Rational::new(32, 27));
        assert!(matches!(second, SecondTerm::BoundedB { b_max: 1, .. }));
        let (_, second) = lower_bound_leading(10, LowerBound::ChenJia).unwrap();
        assert_eq!(
            second,
            SecondTerm::BoundedB {
                b_max: -7,
                half_factor: Rational::new(128, 625)
            }
        );
        assert!(matches!(
            lower_bound_leading(11, LowerBound::ChenJia),
            Err(BoundsError::OddDegree(11))
        ));
    }

    #[test]
    fn conjectured_leading_is_rf_times_upper_bound_leading() {
        // leading coefficient of M_AC: 2^f/f! (even d), 2^(f+1)/f! (odd d)
        for f in 1..=7u32 {
            let mut fact: i128 = 1;
            for i in 1..=f as i128 {
                fact *= i;
            }
            let even_lead = Rational::new(1 << f, fact);
            let odd_lead = Rational::new(1 << (f + 1), fact);
            let rf = ratio_rf(f).unwrap();
            if 2 * f >= 2 {
                let (cl, _) = conjectured_terms(2 * f).unwrap();
                assert_eq!(cl, rf.mul(even_lead));
            }
            if 2 * f + 1 <= 15 {
                let (cl, _) = conjectured_terms(2 * f + 1).unwrap();
                assert_eq!(cl, rf.mul(odd_lead));
            }
        }
    }
}

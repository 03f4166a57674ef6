//! Parameter choices `T, L, N` for the three auxiliary constructions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{normalize_name, BoundArgs, MIN_BITS};
use crate::analytic::RealBall;
use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScheduleKind {
    /// Curves: `T = ⌈5 log D'/log log D'⌉`, `L = DT²`, `N = 5⁴ (log D')²/log log D'`.
    SectionIV1,
    /// Cyclotomic base: `T = ⌈3 log D/log log D⌉`, `L = dT²`, `N = 175 (log D)²/log log D`.
    SectionIV2,
    /// Points: `T = ⌈9 (log ω'/log log ω')²⌉`, `L = min{2ωT², ⌈(TD)^{1/2}(T+1)⌉}`,
    /// `N₁ = c₁ (log ω')²/log log ω'`, `N₂ = c₂ (log ω')⁸/(log log ω')⁶`.
    SectionV1,
}

impl ScheduleKind {
    pub fn name(&self) -> &'static str {
        match self {
            ScheduleKind::SectionIV1 => "section_IV1",
            ScheduleKind::SectionIV2 => "section_IV2",
            ScheduleKind::SectionV1 => "section_V1",
        }
    }
}

impl fmt::Display for ScheduleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScheduleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n = normalize_name(s);
        [ScheduleKind::SectionIV1, ScheduleKind::SectionIV2, ScheduleKind::SectionV1]
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == n || k.name()[8..].to_ascii_lowercase() == n)
            .ok_or_else(|| Error::Domain(format!("unknown schedule `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct ParamSchedule {
    pub kind: ScheduleKind,
    pub inputs: BoundArgs,
    pub t: u64,
    pub l: u64,
    /// `N`, or `N₁` and `N₂`.
    pub n: Vec<(String, RealBall)>,
    pub c1: BigRational,
    pub c2: BigRational,
    pub omega_prime: Option<u64>,
    pub d_prime: Option<u64>,
}

pub fn c1() -> BigRational {
    BigRational::from_integer(BigInt::from(37_000))
}

pub fn c2() -> BigRational {
    BigRational::from_integer(BigInt::from(2_050_000_000u64))
}

/// Smallest integer `>= x(bits)`, raising precision until the ceiling is certified.
pub(crate) fn certified_ceil(x: impl Fn(usize) -> RealBall) -> Result<u64> {
    let mut b = MIN_BITS;
    loop {
        if let Some(c) = x(b).ceil_certified() {
            return c.to_u64().ok_or_else(|| Error::Domain("parameter out of range".into()));
        }
        if b >= 4096 {
            return Err(Error::Undecided("ceiling of a parameter".into()));
        }
        b *= 2;
    }
}

fn ln(n: u64, b: usize) -> RealBall {
    RealBall::from_int(&n.into(), b).ln()
}

/// `⌈9 (log ω'/log log ω')²⌉`.
pub fn t_v1(omega_prime: u64) -> Result<u64> {
    certified_ceil(|b| {
        let l = ln(omega_prime, b);
        l.div(&l.ln()).powi(2).mul_i64(9)
    })
}

/// `⌈(TD)^{1/2}(T+1)⌉ = ⌈(TD(T+1)²)^{1/2}⌉`, computed exactly.
pub fn ceil_sqrt_td(t: u64, d: u64) -> u64 {
    let s = t as u128 * d as u128 * (t as u128 + 1) * (t as u128 + 1);
    let r = s.sqrt();
    (if r * r < s { r + 1 } else { r }) as u64
}

pub fn param_schedule(kind: ScheduleKind, args: &BoundArgs) -> Result<ParamSchedule> {
    let b = MIN_BITS;
    let need = |v: Option<u64>, n: &str| v.ok_or_else(|| Error::Domain(format!("missing argument `{n}`")));
    match kind {
        ScheduleKind::SectionV1 => {
            let omega = need(args.omega, "omega")?;
            let d = need(args.degree, "degree")?;
            if omega == 0 || d == 0 {
                return domain("omega and D must be positive");
            }
            let wp = omega.max(16);
            let t = t_v1(wp)?;
            let l = (2 * omega as u128 * t as u128 * t as u128).min(ceil_sqrt_td(t, d) as u128) as u64;
            let lw = ln(wp, b);
            let llw = lw.ln();
            let n1 = RealBall::from_rational(&c1(), b).mul(&lw.powi(2)).div(&llw);
            let n2 = RealBall::from_rational(&c2(), b).mul(&lw.powi(8)).div(&llw.powi(6));
            Ok(ParamSchedule {
                kind,
                inputs: args.clone(),
                t,
                l,
                n: vec![("N1".into(), n1), ("N2".into(), n2)],
                c1: c1(),
                c2: c2(),
                omega_prime: Some(wp),
                d_prime: None,
            })
        }
        ScheduleKind::SectionIV1 => {
            let d = need(args.degree, "degree")?;
            if d == 0 {
                return domain("D must be positive");
            }
            let dp = d.max(16);
            let t = certified_ceil(|b| {
                let l = ln(dp, b);
                l.div(&l.ln()).mul_i64(5)
            })?;
            let l = d * t * t;
            let ld = ln(dp, b);
            let n = ld.powi(2).div(&ld.ln()).mul_i64(625);
            Ok(ParamSchedule {
                kind,
                inputs: args.clone(),
                t,
                l,
                n: vec![("N".into(), n)],
                c1: c1(),
                c2: c2(),
                omega_prime: None,
                d_prime: Some(dp),
            })
        }
        ScheduleKind::SectionIV2 => {
            let d = need(args.d, "d")?;
            let big_d = need(args.degree, "degree")?;
            if d == 0 || big_d < 3 {
                return domain("need d >= 1 and D >= 3 so that log log D > 0");
            }
            let t = certified_ceil(|b| {
                let l = ln(big_d, b);
                l.div(&l.ln()).mul_i64(3)
            })?;
            let l = d * t * t;
            let ld = ln(big_d, b);
            let n = ld.powi(2).div(&ld.ln()).mul_i64(175);
            Ok(ParamSchedule {
                kind,
                inputs: args.clone(),
                t,
                l,
                n: vec![("N".into(), n)],
                c1: c1(),
                c2: c2(),
                omega_prime: None,
                d_prime: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(omega: Option<u64>, d: Option<u64>, degree: Option<u64>) -> BoundArgs {
        BoundArgs { omega, d, degree, deg_b: None }
    }

    #[test]
    fn schedule_examples() {
        let s = param_schedule(ScheduleKind::SectionV1, &args(Some(16), None, Some(4))).unwrap();
        assert_eq!((s.t, s.l), (67, 1114));
        assert_eq!(2 * 16 * 67 * 67, 143_648);
        let s = param_schedule(ScheduleKind::SectionIV1, &args(None, None, Some(16))).unwrap();
        assert_eq!((s.t, s.l), (14, 3136));
        let s = param_schedule(ScheduleKind::SectionIV2, &args(None, Some(1), Some(16))).unwrap();
        assert_eq!((s.t, s.l), (9, 81));
    }

    #[test]
    fn ceilings_against_f64() {
        for w in [16u64, 100, 10_000, 100_000_000, 1_000_000_000_000] {
            let l = (w as f64).ln();
            assert_eq!(t_v1(w).unwrap(), (9.0 * (l / l.ln()).powi(2)).ceil() as u64);
        }
        assert_eq!(ceil_sqrt_td(67, 4), 1114);
        assert_eq!(ceil_sqrt_td(2, 4), 9);
        assert_eq!(ceil_sqrt_td(1, 1), 2);
    }

    #[test]
    fn names() {
        assert_eq!("section-V1".parse::<ScheduleKind>().unwrap(), ScheduleKind::SectionV1);
        assert_eq!("IV2".parse::<ScheduleKind>().unwrap(), ScheduleKind::SectionIV2);
    }
}

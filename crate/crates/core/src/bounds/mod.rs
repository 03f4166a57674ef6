//! Explicit lower bounds for heights, the parameter schedules behind them,
//! grid audits of the auxiliary inequalities, and certified checks of the
//! bounds against computed heights.

pub mod audit;
pub mod schedule;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use crate::analytic::RealBall;
use crate::error::{domain, Error, Result};

pub use audit::{audit_inequalities, prime_pi_table, sieve_lemma_iii2, AuditSelection, AuditSuite, SieveAudit};
pub use schedule::{param_schedule, ParamSchedule, ScheduleKind};
pub use verify::{verify_bound, Target};

/// Working precision floor for every bound formula.
pub const MIN_BITS: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// `1.2e-16/ω · (log log ω')^11 / (log ω')^13`.
    Theorem2,
    /// `5^-6 (log log D'/log D')^3`.
    PropIV1,
    /// `1e-3/d · (log log D/log D)^3`.
    PropIV3,
    /// `2e-21 · D^{-1/2} (log 3D)^{-13}`, a bound for `(h(α1) h(α2))^{1/2}`.
    CorollaryI1,
    /// `5e-4/ω · (log(D deg B)/log log(D deg B))^{-3}`.
    LemmaV3,
    /// `(1/4D)(log 3D)^{-3}`.
    Voutier,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::Theorem2,
        BoundKind::PropIV1,
        BoundKind::PropIV3,
        BoundKind::CorollaryI1,
        BoundKind::LemmaV3,
        BoundKind::Voutier,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Theorem2 => "theorem2",
            BoundKind::PropIV1 => "prop_IV1",
            BoundKind::PropIV3 => "prop_IV3",
            BoundKind::CorollaryI1 => "corollary_I1",
            BoundKind::LemmaV3 => "lemma_V3",
            BoundKind::Voutier => "voutier",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn normalize_name(s: &str) -> String {
    s.to_ascii_lowercase().replace(['-', '.'], "_")
}

impl FromStr for BoundKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n = normalize_name(s);
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == n)
            .ok_or_else(|| Error::Domain(format!("unknown bound kind `{s}`")))
    }
}

/// Named integer arguments shared by the bound formulas and schedules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundArgs {
    pub omega: Option<u64>,
    /// Degree `D` over Q.
    pub degree: Option<u64>,
    /// Relative degree `d`.
    pub d: Option<u64>,
    /// Degree of the torsion curve `B`.
    pub deg_b: Option<u64>,
}

impl BoundArgs {
    pub fn omega(omega: u64) -> Self {
        BoundArgs { omega: Some(omega), ..Default::default() }
    }

    pub fn degree(degree: u64) -> Self {
        BoundArgs { degree: Some(degree), ..Default::default() }
    }

    fn need(v: Option<u64>, name: &str) -> Result<u64> {
        v.ok_or_else(|| Error::Domain(format!("missing argument `{name}`")))
    }

    pub(crate) fn to_pairs(&self) -> Vec<(String, String)> {
        [("omega", self.omega), ("degree", self.degree), ("d", self.d), ("deg_b", self.deg_b)]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v.to_string())))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecided => "undecided",
        })
    }
}

/// `Pass` when `lhs >= rhs` is certified, `Fail` when `lhs < rhs` is.
pub fn certify_ge(lhs: &RealBall, rhs: &RealBall) -> Verdict {
    if rhs.certainly_le(lhs) {
        Verdict::Pass
    } else if lhs.certainly_lt(rhs) {
        Verdict::Fail
    } else {
        Verdict::Undecided
    }
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub kind: String,
    pub inputs: Vec<(String, String)>,
    pub bound_value: RealBall,
    /// The quantity checked against the bound; the report states
    /// `compared_against >= bound_value` unless `details` says otherwise.
    pub compared_against: Option<RealBall>,
    pub verdict: Verdict,
    pub details: Vec<(String, String)>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn ln_i(n: u64, b: usize) -> RealBall {
    RealBall::from_int(&n.into(), b).ln()
}

fn dec(s: &str, b: usize) -> RealBall {
    RealBall::from_decimal(s, b)
}

pub fn theorem2(omega: u64, bits: usize) -> Result<RealBall> {
    if omega == 0 {
        return domain("omega must be at least 1");
    }
    let b = bits.max(MIN_BITS);
    let lw = ln_i(omega.max(16), b);
    let llw = lw.ln();
    Ok(dec("1.2e-16", b).mul(&llw.powi(11)).div(&lw.powi(13)).div(&RealBall::from_int(&omega.into(), b)))
}

pub fn prop_iv1(degree: u64, bits: usize) -> Result<RealBall> {
    if degree == 0 {
        return domain("degree must be at least 1");
    }
    let b = bits.max(MIN_BITS);
    let ld = ln_i(degree.max(16), b);
    Ok(ld.ln().div(&ld).powi(3).div_i64(15_625))
}

pub fn prop_iv3(d: u64, degree: u64, bits: usize) -> Result<RealBall> {
    if degree < 2 {
        return domain("D must be at least 2");
    }
    if d == 0 || degree % d != 0 {
        return domain("d must be a positive divisor of D");
    }
    let b = bits.max(MIN_BITS);
    let ld = ln_i(degree, b);
    Ok(dec("1e-3", b).mul(&ld.ln().div(&ld).powi(3)).div(&RealBall::from_int(&d.into(), b)))
}

pub fn corollary_i1(degree: u64, bits: usize) -> Result<RealBall> {
    if degree == 0 {
        return domain("degree must be at least 1");
    }
    let b = bits.max(MIN_BITS);
    let l3 = ln_i(3 * degree, b);
    Ok(dec("2e-21", b).div(&RealBall::from_int(&degree.into(), b).sqrt()).div(&l3.powi(13)))
}

pub fn lemma_v3(omega: u64, degree: u64, deg_b: u64, bits: usize) -> Result<RealBall> {
    if omega == 0 || degree == 0 || deg_b == 0 {
        return domain("omega, D and deg B must be positive");
    }
    let x = degree.checked_mul(deg_b).ok_or_else(|| Error::Domain("D deg B overflows".into()))?;
    if x < 3 {
        return domain("D deg B must be at least 3 for log log to be positive");
    }
    let b = bits.max(MIN_BITS);
    let lx = ln_i(x, b);
    let r = lx.div(&lx.ln());
    Ok(dec("5e-4", b).div(&r.powi(3)).div(&RealBall::from_int(&omega.into(), b)))
}

pub fn voutier(degree: u64, bits: usize) -> Result<RealBall> {
    if degree == 0 {
        return domain("degree must be at least 1");
    }
    let b = bits.max(MIN_BITS);
    Ok(RealBall::one(b).div(&ln_i(3 * degree, b).powi(3).mul_i64(4 * degree as i64)))
}

/// Certified enclosure of the chosen bound formula.
pub fn bound_value(kind: BoundKind, args: &BoundArgs, bits: usize) -> Result<RealBall> {
    let need = BoundArgs::need;
    match kind {
        BoundKind::Theorem2 => theorem2(need(args.omega, "omega")?, bits),
        BoundKind::PropIV1 => prop_iv1(need(args.degree, "degree")?, bits),
        BoundKind::PropIV3 => prop_iv3(need(args.d, "d")?, need(args.degree, "degree")?, bits),
        BoundKind::CorollaryI1 => corollary_i1(need(args.degree, "degree")?, bits),
        BoundKind::LemmaV3 => {
            lemma_v3(need(args.omega, "omega")?, need(args.degree, "degree")?, need(args.deg_b, "deg_b")?, bits)
        }
        BoundKind::Voutier => voutier(need(args.degree, "degree")?, bits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: f64) -> f64 {
        x.ln()
    }

    #[test]
    fn formula_values() {
        let t = theorem2(16, 128).unwrap();
        let l = f(16.0);
        let oracle = 1.2e-16 * l.ln().powi(11) / (16.0 * l.powi(13));
        assert!((t.mid_f64() / oracle - 1.0).abs() < 1e-12);
        assert!((t.mid_f64() / 1.62e-23 - 1.0).abs() < 1e-2);
        let v = voutier(1, 128).unwrap();
        assert!((v.mid_f64() - 0.25 / f(3.0).powi(3)).abs() < 1e-15);
        let p = prop_iv1(16, 128).unwrap();
        assert!((p.mid_f64() / 3.19e-6 - 1.0).abs() < 1e-2);
        assert_eq!(prop_iv1(3, 128).unwrap().mid_f64(), p.mid_f64());
        let c = corollary_i1(2, 128).unwrap();
        assert!((c.mid_f64() / (2e-21 / 2f64.sqrt() / f(6.0).powi(13)) - 1.0).abs() < 1e-12);
        let lv = lemma_v3(2, 4, 3, 128).unwrap();
        let x = f(12.0);
        assert!((lv.mid_f64() / (5e-4 / 2.0 / (x / x.ln()).powi(3)) - 1.0).abs() < 1e-12);
        let p3 = prop_iv3(2, 100, 128).unwrap();
        assert!((p3.mid_f64() / (1e-3 / 2.0 * (f(100.0).ln() / f(100.0)).powi(3)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn domains() {
        assert!(theorem2(0, 128).is_err());
        assert!(prop_iv3(1, 1, 128).is_err());
        assert!(prop_iv3(3, 100, 128).is_err());
        assert!(lemma_v3(1, 1, 2, 128).is_err());
        assert!(bound_value(BoundKind::Theorem2, &BoundArgs::degree(3), 128).is_err());
    }

    #[test]
    fn kind_names() {
        assert_eq!("prop-IV1".parse::<BoundKind>().unwrap(), BoundKind::PropIV1);
        assert_eq!("Corollary_I1".parse::<BoundKind>().unwrap(), BoundKind::CorollaryI1);
        assert!("nope".parse::<BoundKind>().is_err());
    }
}

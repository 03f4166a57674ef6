//! Certified real and complex enclosures.
//!
//! A [`RealBall`] stores an interval `[lo, hi]` of binary floating-point
//! numbers. Every operation rounds to nearest at the working precision and
//! then widens the endpoints outward by a few units in the last place, so
//! the true value always lies inside.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// `2^k` exactly.
pub fn pow2(k: i64, p: usize) -> BigFloat {
    let mut one = BigFloat::from_u64(1, p.max(64));
    one.set_exponent((k + 1) as i32);
    one
}

/// Slack of `2^shift` ulps around a value rounded to `p` bits.
fn slack(r: &BigFloat, p: usize, shift: i64) -> BigFloat {
    if r.is_zero() {
        return BigFloat::from_u64(0, p);
    }
    let e = r.exponent().unwrap_or(0) as i64;
    pow2(e - p as i64 + shift, 64)
}

fn down(r: BigFloat, p: usize, shift: i64) -> BigFloat {
    let s = slack(&r, p, shift);
    r.sub(&s, p, RM)
}

fn up(r: BigFloat, p: usize, shift: i64) -> BigFloat {
    let s = slack(&r, p, shift);
    r.add(&s, p, RM)
}

const ARITH: i64 = 2;
const TRANS: i64 = 4;

fn fmin(a: &BigFloat, b: &BigFloat) -> BigFloat {
    if a.cmp(b).unwrap_or(0) <= 0 {
        a.clone()
    } else {
        b.clone()
    }
}

fn fmax(a: &BigFloat, b: &BigFloat) -> BigFloat {
    if a.cmp(b).unwrap_or(0) >= 0 {
        a.clone()
    } else {
        b.clone()
    }
}

fn bigint_to_float(n: &BigInt, p: usize) -> (BigFloat, bool) {
    if let Some(v) = num_traits::ToPrimitive::to_i64(n) {
        return (BigFloat::from_i64(v, p.max(64)), true);
    }
    // Parsed with 64 guard bits; callers widen by several ulps at `p`.
    let s = n.to_string();
    let mut r = with_cc(|cc| BigFloat::parse(&s, Radix::Dec, p + 64, RM, cc));
    r.set_precision(p, RM).expect("precision");
    (r, false)
}

#[derive(Clone)]
pub struct RealBall {
    lo: BigFloat,
    hi: BigFloat,
    prec: usize,
}

impl RealBall {
    pub fn prec(&self) -> usize {
        self.prec
    }

    fn from_bounds(lo: BigFloat, hi: BigFloat, prec: usize) -> Self {
        RealBall { lo, hi, prec }
    }

    /// Point ball holding `x` exactly.
    pub fn exact(x: BigFloat, p: usize) -> Self {
        Self::from_bounds(x.clone(), x, p)
    }

    /// Ball `[lo, hi]`; the endpoints are taken as given.
    pub fn from_endpoints(lo: BigFloat, hi: BigFloat, p: usize) -> Self {
        debug_assert!(lo <= hi);
        Self::from_bounds(lo, hi, p)
    }

    /// Ball for an exactly representable or rounded float `r` (widened if `inexact`).
    fn point(r: BigFloat, p: usize, inexact: bool) -> Self {
        if inexact {
            Self::from_bounds(down(r.clone(), p, ARITH), up(r, p, ARITH), p)
        } else {
            Self::from_bounds(r.clone(), r, p)
        }
    }

    pub fn zero(p: usize) -> Self {
        Self::from_i64(0, p)
    }

    pub fn one(p: usize) -> Self {
        Self::from_i64(1, p)
    }

    pub fn from_i64(n: i64, p: usize) -> Self {
        Self::point(BigFloat::from_i64(n, p.max(64)), p, false)
    }

    pub fn from_int(n: &BigInt, p: usize) -> Self {
        let (r, exact) = bigint_to_float(n, p);
        Self::point(r, p, !exact)
    }

    pub fn from_rational(q: &BigRational, p: usize) -> Self {
        Self::from_int(q.numer(), p).div(&Self::from_int(q.denom(), p))
    }

    /// Exact enclosure of a binary64 value.
    pub fn from_f64(x: f64, p: usize) -> Self {
        Self::point(BigFloat::from_f64(x, p.max(64)), p, false)
    }

    /// Interval `[a, b]` from two binary64 values.
    pub fn from_f64_interval(a: f64, b: f64, p: usize) -> Self {
        Self::from_bounds(BigFloat::from_f64(a, p.max(64)), BigFloat::from_f64(b, p.max(64)), p)
    }

    /// Ball parsed from a decimal string such as `"1.2e-16"`, taken as an exact rational.
    pub fn from_decimal(s: &str, p: usize) -> Self {
        Self::from_rational(&decimal_to_rational(s), p)
    }

    pub fn pi(p: usize) -> Self {
        let r = with_cc(|cc| cc.pi(p, RM));
        Self::from_bounds(down(r.clone(), p, TRANS), up(r, p, TRANS), p)
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    pub fn midpoint(&self) -> BigFloat {
        self.lo.add(&self.hi, self.prec + 8, RM).div(&BigFloat::from_u64(2, 64), self.prec + 8, RM)
    }

    /// Upper bound for the distance from the midpoint to either endpoint.
    pub fn radius(&self) -> BigFloat {
        let m = self.midpoint();
        let p = self.prec + 8;
        let a = up(self.hi.sub(&m, p, RM), p, ARITH);
        let b = up(m.sub(&self.lo, p, RM), p, ARITH);
        fmax(&a, &b)
    }

    pub fn mid_f64(&self) -> f64 {
        float_to_f64(&self.midpoint())
    }

    pub fn rad_f64(&self) -> f64 {
        let r = float_to_f64(&self.radius());
        // Round the f64 upward slightly so it remains an upper bound.
        r * (1.0 + 1e-15) + f64::MIN_POSITIVE
    }

    pub fn lo_f64(&self) -> f64 {
        float_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        float_to_f64(&self.hi)
    }

    pub fn with_prec(&self, p: usize) -> Self {
        RealBall { prec: p, ..self.clone() }
    }

    pub fn is_exact(&self) -> bool {
        self.lo.cmp(&self.hi) == Some(0)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative() || self.lo.is_zero() || self.hi.is_zero()
    }

    /// Certainly `> 0`.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive() && !self.lo.is_zero()
    }

    /// Certainly `< 0`.
    pub fn is_negative(&self) -> bool {
        self.hi.is_negative() && !self.hi.is_zero()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative() || self.lo.is_zero()
    }

    pub fn contains(&self, o: &Self) -> bool {
        self.lo.cmp(&o.lo).unwrap_or(1) <= 0 && self.hi.cmp(&o.hi).unwrap_or(-1) >= 0
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.contains(&Self::from_f64(x, 64))
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.lo.cmp(&o.hi).unwrap_or(1) <= 0 && o.lo.cmp(&self.hi).unwrap_or(1) <= 0
    }

    /// Certified comparison; `None` when the intervals overlap.
    pub fn cmp_certified(&self, o: &Self) -> Option<Ordering> {
        if self.hi.cmp(&o.lo).unwrap_or(1) < 0 {
            Some(Ordering::Less)
        } else if self.lo.cmp(&o.hi).unwrap_or(-1) > 0 {
            Some(Ordering::Greater)
        } else if self.is_exact() && o.is_exact() && self.lo.cmp(&o.lo) == Some(0) {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certainly `self <= o`.
    pub fn certainly_le(&self, o: &Self) -> bool {
        self.hi.cmp(&o.lo).unwrap_or(1) <= 0
    }

    /// Certainly `self < o`.
    pub fn certainly_lt(&self, o: &Self) -> bool {
        self.hi.cmp(&o.lo).unwrap_or(1) < 0
    }

    pub fn neg(&self) -> Self {
        Self::from_bounds(self.hi.neg(), self.lo.neg(), self.prec)
    }

    fn p2(&self, o: &Self) -> usize {
        self.prec.max(o.prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.p2(o);
        let lo = self.lo.add(&o.lo, p, RM);
        let hi = self.hi.add(&o.hi, p, RM);
        Self::from_bounds(down(lo, p, ARITH), up(hi, p, ARITH), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p2(o);
        let c = [
            self.lo.mul(&o.lo, p, RM),
            self.lo.mul(&o.hi, p, RM),
            self.hi.mul(&o.lo, p, RM),
            self.hi.mul(&o.hi, p, RM),
        ];
        let lo = c[1..].iter().fold(c[0].clone(), |a, b| fmin(&a, b));
        let hi = c[1..].iter().fold(c[0].clone(), |a, b| fmax(&a, b));
        Self::from_bounds(down(lo, p, ARITH), up(hi, p, ARITH), p)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self.mul(&Self::from_i64(k, self.prec))
    }

    pub fn sqr(&self) -> Self {
        let a = self.abs();
        let p = self.prec;
        let lo = a.lo.mul(&a.lo, p, RM);
        let hi = a.hi.mul(&a.hi, p, RM);
        Self::from_bounds(down(lo, p, ARITH), up(hi, p, ARITH), p).clamp_nonneg()
    }

    /// `None` when the divisor contains zero.
    pub fn try_div(&self, o: &Self) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let p = self.p2(o);
        let c = [
            self.lo.div(&o.lo, p, RM),
            self.lo.div(&o.hi, p, RM),
            self.hi.div(&o.lo, p, RM),
            self.hi.div(&o.hi, p, RM),
        ];
        let lo = c[1..].iter().fold(c[0].clone(), |a, b| fmin(&a, b));
        let hi = c[1..].iter().fold(c[0].clone(), |a, b| fmax(&a, b));
        Some(Self::from_bounds(down(lo, p, ARITH), up(hi, p, ARITH), p))
    }

    /// Division; panics if the divisor contains zero.
    pub fn div(&self, o: &Self) -> Self {
        self.try_div(o).expect("division by a ball containing zero")
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self.div(&Self::from_i64(k, self.prec))
    }

    pub fn abs(&self) -> Self {
        if self.is_nonnegative() {
            self.clone()
        } else if !self.hi.is_positive() || self.hi.is_zero() {
            self.neg()
        } else {
            let m = fmax(&self.lo.neg(), &self.hi);
            Self::from_bounds(BigFloat::from_u64(0, 64), m, self.prec)
        }
    }

    fn clamp_nonneg(self) -> Self {
        if self.lo.is_negative() {
            Self::from_bounds(BigFloat::from_u64(0, 64), self.hi, self.prec)
        } else {
            self
        }
    }

    pub fn max(&self, o: &Self) -> Self {
        Self::from_bounds(fmax(&self.lo, &o.lo), fmax(&self.hi, &o.hi), self.p2(o))
    }

    pub fn min(&self, o: &Self) -> Self {
        Self::from_bounds(fmin(&self.lo, &o.lo), fmin(&self.hi, &o.hi), self.p2(o))
    }

    /// Smallest interval containing both.
    pub fn hull(&self, o: &Self) -> Self {
        Self::from_bounds(fmin(&self.lo, &o.lo), fmax(&self.hi, &o.hi), self.p2(o))
    }

    /// Adds `[-e, e]` for a nonnegative `e`.
    pub fn widen(&self, e: &BigFloat) -> Self {
        let p = self.prec;
        Self::from_bounds(
            down(self.lo.sub(e, p, RM), p, ARITH),
            up(self.hi.add(e, p, RM), p, ARITH),
            p,
        )
    }

    pub fn widen_f64(&self, e: f64) -> Self {
        self.widen(&BigFloat::from_f64(e.abs(), 64))
    }

    pub fn sqrt(&self) -> Self {
        let p = self.prec;
        let a = self.clone().clamp_nonneg();
        let lo = if a.lo.is_zero() {
            a.lo.clone()
        } else {
            fmax(&down(a.lo.sqrt(p, RM), p, TRANS), &BigFloat::from_u64(0, 64))
        };
        let hi = if a.hi.is_zero() { a.hi.clone() } else { up(a.hi.sqrt(p, RM), p, TRANS) };
        Self::from_bounds(lo, hi, p)
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let (lo, hi) = with_cc(|cc| (self.lo.exp(p, RM, cc), self.hi.exp(p, RM, cc)));
        Self::from_bounds(
            fmax(&down(lo, p, TRANS), &BigFloat::from_u64(0, 64)),
            up(hi, p, TRANS),
            p,
        )
    }

    /// Natural logarithm; `None` unless the ball is certainly positive.
    pub fn try_ln(&self) -> Option<Self> {
        if !self.is_positive() {
            return None;
        }
        let p = self.prec;
        let (lo, hi) = with_cc(|cc| (self.lo.ln(p, RM, cc), self.hi.ln(p, RM, cc)));
        Some(Self::from_bounds(down(lo, p, TRANS), up(hi, p, TRANS), p))
    }

    pub fn ln(&self) -> Self {
        self.try_ln().expect("logarithm of a ball that is not certainly positive")
    }

    /// `max(0, log x)` for a nonnegative ball; endpoints at or below 1 map to 0.
    pub fn log_plus(&self) -> Self {
        let p = self.prec;
        let one = BigFloat::from_u64(1, 64);
        let f = |x: &BigFloat, lower: bool| -> BigFloat {
            if x.cmp(&one).unwrap_or(-1) <= 0 {
                BigFloat::from_u64(0, 64)
            } else {
                let l = with_cc(|cc| x.ln(p, RM, cc));
                if lower {
                    fmax(&down(l, p, TRANS), &BigFloat::from_u64(0, 64))
                } else {
                    up(l, p, TRANS)
                }
            }
        };
        Self::from_bounds(f(&self.lo, true), f(&self.hi, false), p)
    }

    fn lipschitz(&self, f: impl Fn(&BigFloat, usize, &mut Consts) -> BigFloat) -> Self {
        let p = self.prec;
        let m = self.midpoint();
        let r = self.radius();
        let v = with_cc(|cc| f(&m, p, cc));
        let lo = down(v.sub(&r, p, RM), p, TRANS);
        let hi = up(v.add(&r, p, RM), p, TRANS);
        let one = BigFloat::from_i64(1, 64);
        Self::from_bounds(fmax(&lo, &one.neg()), fmin(&hi, &one), p)
    }

    pub fn sin(&self) -> Self {
        self.lipschitz(|x, p, cc| x.sin(p, RM, cc))
    }

    pub fn cos(&self) -> Self {
        self.lipschitz(|x, p, cc| x.cos(p, RM, cc))
    }

    pub fn powi(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one(self.prec);
        }
        let mut acc = self.clone();
        let mut base = self.clone();
        let mut e = n - 1;
        let even_square = n % 2 == 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        if even_square {
            acc.clamp_nonneg()
        } else {
            acc
        }
    }

    /// `self^e` for a positive ball `self`.
    pub fn pow(&self, e: &Self) -> Self {
        self.ln().mul(e).exp()
    }

    /// Integer floor when it is certified, i.e. both endpoints share it.
    pub fn floor_certified(&self) -> Option<BigInt> {
        let a = float_to_bigint_floor(&self.lo);
        let b = float_to_bigint_floor(&self.hi);
        (a == b).then_some(a)
    }

    pub fn ceil_certified(&self) -> Option<BigInt> {
        let a = float_to_bigint_floor(&self.lo.neg());
        let b = float_to_bigint_floor(&self.hi.neg());
        (a == b).then_some(-a)
    }

    /// Midpoint as a decimal string with `digits` significant digits.
    pub fn mid_string(&self, digits: usize) -> String {
        format_float(&self.midpoint(), digits)
    }

    pub fn rad_string(&self) -> String {
        format_float(&self.radius(), 3)
    }

    /// Number of decimal digits that the radius leaves meaningful.
    pub fn significant_digits(&self) -> usize {
        let m = self.mid_f64().abs();
        let r = self.rad_f64();
        if r == 0.0 || m == 0.0 {
            return 20;
        }
        let d = (m / r).log10().floor();
        if d.is_finite() {
            (d as i64).clamp(1, 40) as usize
        } else {
            20
        }
    }
}

impl fmt::Display for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.significant_digits().min(f.precision().unwrap_or(40));
        write!(f, "{} +/- {}", self.mid_string(d), self.rad_string())
    }
}

impl fmt::Debug for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} +/- {}]", self.mid_string(20), self.rad_string())
    }
}

/// Decimal literal (optionally signed, with fraction and exponent) as an exact rational.
pub fn decimal_to_rational(s: &str) -> BigRational {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().expect("decimal exponent")),
        None => (s, 0),
    };
    let neg = mant.starts_with('-');
    let mant = mant.trim_start_matches(['-', '+']);
    let (ip, fp) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    let digits = format!("{ip}{fp}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().expect("decimal digits") };
    let e = exp - fp.len() as i64;
    let ten = BigInt::from(10);
    let mut q = if e >= 0 {
        BigRational::from(n * num_traits::pow(ten, e as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-e) as usize))
    };
    if neg {
        q = -q;
    }
    q
}

pub fn float_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let s = with_cc(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
    parse_formatted(&s)
}

fn parse_formatted(s: &str) -> f64 {
    let t = s.replace(".e", ".0e");
    t.parse::<f64>().unwrap_or(f64::NAN)
}

fn float_to_bigint_floor(x: &BigFloat) -> BigInt {
    let f = x.floor();
    if f.is_zero() {
        return BigInt::zero();
    }
    let s = with_cc(|cc| f.format(Radix::Dec, RM, cc)).unwrap_or_default();
    let q = decimal_to_rational(&s.replace(".e", "e"));
    q.floor().to_integer()
}

/// Decimal rendering with `digits` significant digits in scientific notation
/// for very large or small magnitudes.
pub fn format_float(x: &BigFloat, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let digits = digits.max(1);
    let bits = ((digits as f64) * 3.33).ceil() as usize + 8;
    let mut y = x.clone();
    let _ = y.set_precision(bits.max(64), RM);
    let s = with_cc(|cc| y.format(Radix::Dec, RM, cc)).unwrap_or_default();
    // s looks like "-1.2345e+3"
    let (mant, exp) = match s.find('e') {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().unwrap_or(0)),
        None => (&s[..], 0),
    };
    let neg = mant.starts_with('-');
    let all: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let q = decimal_to_rational(&format!("{}{}e{}", if neg { "-" } else { "" }, insert_point(&all), exp));
    round_rational_sig(&q, digits)
}

fn insert_point(d: &str) -> String {
    if d.len() <= 1 {
        d.to_string()
    } else {
        format!("{}.{}", &d[..1], &d[1..])
    }
}

/// Rounds a rational to `digits` significant decimal digits.
pub fn round_rational_sig(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let neg = q.is_negative();
    let a = q.abs();
    let ten = BigRational::from(BigInt::from(10));
    // Find e with 10^e <= a < 10^(e+1).
    let mut e: i64 = 0;
    let mut scaled = a.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < BigRational::from(BigInt::from(1)) {
        scaled *= &ten;
        e -= 1;
    }
    let factor = num_traits::pow(BigRational::from(BigInt::from(10)), digits - 1);
    let n = (scaled * factor).round().to_integer();
    let mut ds = n.to_string();
    if ds.len() > digits {
        ds.truncate(digits);
        e += 1;
    }
    let sign = if neg { "-" } else { "" };
    if (-5..=15).contains(&e) {
        let e = e as isize;
        let s = if e >= 0 {
            let int_len = (e + 1) as usize;
            if ds.len() <= int_len {
                format!("{}{}", ds, "0".repeat(int_len - ds.len()))
            } else {
                format!("{}.{}", &ds[..int_len], &ds[int_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
        };
        format!("{sign}{s}")
    } else {
        let m = insert_point(ds.trim_end_matches('0'));
        format!("{sign}{m}e{e}")
    }
}

/// Complex enclosure as a rectangle of two real balls.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    pub re: RealBall,
    pub im: RealBall,
}

impl ComplexBall {
    pub fn new(re: RealBall, im: RealBall) -> Self {
        ComplexBall { re, im }
    }

    pub fn from_real(re: RealBall) -> Self {
        let p = re.prec;
        ComplexBall { re, im: RealBall::zero(p) }
    }

    pub fn zero(p: usize) -> Self {
        Self::from_real(RealBall::zero(p))
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        ComplexBall { re: RealBall::from_f64(re, p), im: RealBall::from_f64(im, p) }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexBall {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, k: &RealBall) -> Self {
        ComplexBall { re: self.re.mul(k), im: self.im.mul(k) }
    }

    pub fn norm_sqr(&self) -> RealBall {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> RealBall {
        self.norm_sqr().sqrt()
    }

    pub fn try_div(&self, o: &Self) -> Option<Self> {
        let d = o.norm_sqr();
        if d.contains_zero() {
            return None;
        }
        let num = self.mul(&ComplexBall { re: o.re.clone(), im: o.im.neg() });
        Some(ComplexBall { re: num.re.div(&d), im: num.im.div(&d) })
    }

    /// `e^{iθ}`.
    pub fn expi(theta: &RealBall) -> Self {
        ComplexBall { re: theta.cos(), im: theta.sin() }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }

    /// Upper bound on the distance from the center to any point of the box.
    pub fn rad_f64(&self) -> f64 {
        self.re.rad_f64().hypot(self.im.rad_f64()) * (1.0 + 1e-15)
    }

    pub fn prec(&self) -> usize {
        self.re.prec.max(self.im.prec)
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_two_encloses_true_value() {
        let l = RealBall::from_i64(2, 256).ln();
        assert!(l.contains_f64(std::f64::consts::LN_2) || l.rad_f64() < 1e-70);
        assert!((l.mid_f64() - std::f64::consts::LN_2).abs() < 1e-15);
        assert!(l.rad_f64() < 1e-70);
    }

    #[test]
    fn arithmetic_is_enclosing() {
        let third = RealBall::one(128).div_i64(3);
        let back = third.mul_i64(3);
        assert!(back.contains(&RealBall::one(128)));
        assert!(!back.is_exact());
        let s = RealBall::from_i64(2, 128).sqrt();
        assert!(s.sqr().contains(&RealBall::from_i64(2, 128)));
    }

    #[test]
    fn trig_and_pi() {
        let p = RealBall::pi(200);
        assert!(p.sin().contains_zero());
        assert!(p.cos().add(&RealBall::one(200)).contains_zero());
        assert!((p.mid_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn rationals_and_decimals() {
        let q = RealBall::from_decimal("1.2e-16", 128);
        assert!((q.mid_f64() - 1.2e-16).abs() < 1e-30);
        let big = RealBall::from_int(&"123456789012345678901234567890123".parse().unwrap(), 64);
        assert!(!big.is_exact());
        assert!((big.mid_f64() / 1.2345678901234568e32 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn comparisons() {
        let a = RealBall::from_f64_interval(1.0, 2.0, 64);
        let b = RealBall::from_f64_interval(1.5, 3.0, 64);
        assert_eq!(a.cmp_certified(&b), None);
        assert!(a.overlaps(&b));
        let c = RealBall::from_f64(5.0, 64);
        assert_eq!(a.cmp_certified(&c), Some(Ordering::Less));
        assert_eq!(c.floor_certified(), Some(BigInt::from(5)));
        assert_eq!(RealBall::from_f64(-2.5, 64).floor_certified(), Some(BigInt::from(-3)));
        assert_eq!(RealBall::from_f64(13.59, 64).ceil_certified(), Some(BigInt::from(14)));
    }

    #[test]
    fn formatting() {
        assert_eq!(round_rational_sig(&decimal_to_rational("0.34657359028"), 5), "0.34657");
        assert_eq!(round_rational_sig(&decimal_to_rational("1.6234e-23"), 3), "1.62e-23");
        assert_eq!(round_rational_sig(&decimal_to_rational("99.96"), 3), "100");
        let l = RealBall::from_i64(2, 128).ln().div_i64(2);
        assert_eq!(l.mid_string(8), "0.34657359");
    }

    #[test]
    fn log_plus_handles_unit_interval() {
        let a = RealBall::from_f64_interval(0.5, 2.0, 64).log_plus();
        assert!(a.contains_zero());
        assert!(a.hi_f64() > 0.69);
        let b = RealBall::from_f64_interval(0.1, 0.9, 64).log_plus();
        assert!(b.is_exact() && b.contains_zero());
    }
}

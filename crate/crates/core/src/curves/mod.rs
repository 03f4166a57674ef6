//! Plane curves in the torus: normalized height, torsion detection, images
//! under the power maps and the primes at which those images lose degree.

pub mod jensen;
pub mod power;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::modp::is_prime_u64;
use crate::algebra::{is_irreducible, IntPoly1, IntPoly2};
use crate::analytic::{kronecker_test, root_of_unity_order};
use crate::error::{domain, Result};

pub use jensen::{log_mahler_2d, normalized_height_curve};
pub use power::{power_image_degree, power_image_poly};

/// Range of integer specializations tried when certifying irreducibility.
const SPECIALIZATION_RANGE: i64 = 20;
/// Largest degree of a specialization that is factored exactly.
const FACTOR_DEGREE_LIMIT: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Irreducibility {
    /// Not proved irreducible; every specialization tried factors.
    Unverified,
    /// Too large to certify by factoring specializations; square-free with
    /// no content in either variable.
    Probabilistic,
    /// Proved irreducible over Q.
    Verified,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Irreducibility::Verified => "verified",
            Irreducibility::Probabilistic => "probabilistic",
            Irreducibility::Unverified => "unverified",
        })
    }
}

/// The curve `{P = 0}` in `G_m²`, with `P` primitive, free of monomial
/// factors and with positive grlex leading coefficient.
#[derive(Clone)]
pub struct Curve {
    p: IntPoly2,
    verdict: OnceLock<Irreducibility>,
}

impl Curve {
    pub fn new(p: &IntPoly2) -> Result<Self> {
        if p.is_zero() {
            return domain("the zero polynomial does not define a curve");
        }
        let p = p.strip_monomial().primitive_part();
        if p.is_monomial() {
            return domain("a monomial has no zeros in the torus");
        }
        Ok(Curve { p, verdict: OnceLock::new() })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&crate::parse::parse_int_poly2(s)?)
    }

    pub fn poly(&self) -> &IntPoly2 {
        &self.p
    }

    pub fn degree(&self) -> u32 {
        self.p.total_degree()
    }

    pub fn irreducibility(&self) -> Irreducibility {
        *self.verdict.get_or_init(|| irreducibility_of(&self.p))
    }

    pub fn swap(&self) -> Self {
        Curve::new(&self.p.swap_xy()).expect("swap keeps a curve a curve")
    }
}

impl PartialEq for Curve {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p
    }
}

impl Eq for Curve {}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve({})", self.p)
    }
}

/// Irreducible specialization in `x` of full `y`-degree, for `P` without
/// content over Z[x], proves `P` irreducible.
fn specialization_certifies(p: &IntPoly2) -> bool {
    if p.content_in_y_coeffs().deg() > 0 {
        return false;
    }
    let dy = p.deg_y() as usize;
    (0..=SPECIALIZATION_RANGE)
        .flat_map(|c| if c == 0 { vec![0] } else { vec![c, -c] })
        .map(BigInt::from)
        .map(|c| p.specialize_x(&c))
        .any(|f| f.deg() == dy && !f.coeffs().last().map_or(true, |a| a.is_zero()) && is_irreducible(&f))
}

fn irreducibility_of(p: &IntPoly2) -> Irreducibility {
    if p.deg_y() == 0 || p.deg_x() == 0 {
        let f = if p.deg_y() == 0 { p.specialize_y(&BigInt::from(1)) } else { p.specialize_x(&BigInt::from(1)) };
        return if is_irreducible(&f) { Irreducibility::Verified } else { Irreducibility::Unverified };
    }
    let content_free = p.content_in_y_coeffs().deg() == 0 && p.swap_xy().content_in_y_coeffs().deg() == 0;
    if p.deg_x().min(p.deg_y()) > FACTOR_DEGREE_LIMIT {
        return if content_free && square_free_in_y(p) {
            Irreducibility::Probabilistic
        } else {
            Irreducibility::Unverified
        };
    }
    // Every specialization of a reducible polynomial is reducible, so failing
    // all of them is evidence against irreducibility.
    if specialization_certifies(p) || specialization_certifies(&p.swap_xy()) {
        Irreducibility::Verified
    } else {
        Irreducibility::Unverified
    }
}

/// Square-free as a polynomial in `y` at some specialization of full degree.
fn square_free_in_y(p: &IntPoly2) -> bool {
    let dy = p.deg_y() as usize;
    (1..=SPECIALIZATION_RANGE)
        .map(|c| p.specialize_x(&BigInt::from(c)))
        .any(|f| f.deg() == dy && f.is_square_free())
}

/// `{x^a y^b = ζ}` with `ζ` of the given order; `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCurveData {
    pub a: i64,
    pub b: i64,
    pub zeta_order: u64,
}

/// Tests whether the curve is a union of torsion translates of one
/// one-dimensional subtorus: the support lies on a line and the induced
/// polynomial in `u = x^a y^b` has only roots of unity as roots.
pub fn is_torsion_curve(c: &Curve) -> (bool, Option<TorsionCurveData>) {
    let exps: Vec<(i64, i64)> = c.p.terms().keys().map(|&(i, j)| (i as i64, j as i64)).collect();
    let e0 = exps[0];
    let g = exps.iter().fold(0i64, |g, e| g.gcd(&(e.0 - e0.0)).gcd(&(e.1 - e0.1)));
    let (mut a, mut b) = (0i64, 0i64);
    for e in &exps {
        let d = (e.0 - e0.0, e.1 - e0.1);
        if d != (0, 0) {
            (a, b) = (d.0 / g, d.1 / g);
            break;
        }
    }
    if a < 0 || (a == 0 && b < 0) {
        (a, b) = (-a, -b);
    }
    // Collinear iff every difference is a multiple of (a, b).
    let mut ks = Vec::with_capacity(exps.len());
    for e in &exps {
        let d = (e.0 - e0.0, e.1 - e0.1);
        if d.0 * b != d.1 * a {
            return (false, None);
        }
        ks.push(if a != 0 { d.0 / a } else { d.1 / b });
    }
    let kmin = *ks.iter().min().unwrap();
    let kmax = *ks.iter().max().unwrap();
    let mut coeffs = vec![BigInt::zero(); (kmax - kmin) as usize + 1];
    for (e, k) in exps.iter().zip(&ks) {
        coeffs[(k - kmin) as usize] = c.p.coeff((e.0 as u32, e.1 as u32));
    }
    let mut q = IntPoly1::new(coeffs);
    if q.lead().is_negative() {
        q = q.scale(&BigInt::from(-1));
    }
    if !kronecker_test(&q) {
        return (false, None);
    }
    let zeta_order = root_of_unity_order(&q).unwrap_or(1);
    (true, Some(TorsionCurveData { a, b, zeta_order }))
}

/// `[l]V`: the reduced image under `(x, y) ↦ (x^l, y^l)`.
pub fn power_image(c: &Curve, l: u32) -> Result<Curve> {
    if l == 0 {
        return domain("l must be positive");
    }
    Curve::new(&power_image_poly(&c.p, l))
}

#[derive(Clone, Debug)]
pub struct EccReport {
    pub primes: Vec<u64>,
    /// `deg [p]V` for every prime `p` up to the bound.
    pub image_degrees: Vec<(u64, u32)>,
    /// `(dim V + 1)/log 2 · log deg V` with `dim V = 1`.
    pub cardinality_bound: f64,
    pub bound_holds: bool,
}

/// Primes `p <= bound` at which the reduced image `[p]V` has smaller degree
/// than `V`.
pub fn ecc_primes(c: &Curve, bound: u64) -> Result<EccReport> {
    if bound < 2 {
        return domain("bound must be at least 2");
    }
    let deg = c.degree();
    let mut primes = Vec::new();
    let mut image_degrees = Vec::new();
    for p in (2..=bound).filter(|&p| is_prime_u64(p)) {
        let d = power_image_degree(&c.p, p as u32);
        image_degrees.push((p, d));
        if d < deg {
            primes.push(p);
        }
    }
    let cardinality_bound = 2.0 / std::f64::consts::LN_2 * (deg as f64).ln();
    let bound_holds = primes.len() as f64 <= cardinality_bound + 1e-12;
    Ok(EccReport { primes, image_degrees, cardinality_bound, bound_holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Curve {
        Curve::parse(s).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(c("2*x^2*y - 4*x*y^2"), c("x - 2*y"));
        assert_eq!(c("-x*y + 1"), c("x*y - 1"));
        assert!(Curve::parse("3*x^2*y").is_err());
        assert!(Curve::parse("0").is_err());
        assert_eq!(c("x^2+y^3-1").degree(), 3);
    }

    #[test]
    fn irreducibility() {
        assert_eq!(c("x*y-1").irreducibility(), Irreducibility::Verified);
        assert_eq!(c("x^2-y^3").irreducibility(), Irreducibility::Verified);
        assert_eq!(c("x^2-2").irreducibility(), Irreducibility::Verified);
        assert_eq!(c("x^2-1").irreducibility(), Irreducibility::Unverified);
        assert_eq!(c("(x+y-1)*(x-y+2)").irreducibility(), Irreducibility::Unverified);
        assert_eq!(c("(x+1)*(y-3)").irreducibility(), Irreducibility::Unverified);
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(is_torsion_curve(&c("x*y-1")), (true, Some(TorsionCurveData { a: 1, b: 1, zeta_order: 1 })));
        assert_eq!(is_torsion_curve(&c("x^2-y^3")), (true, Some(TorsionCurveData { a: 2, b: -3, zeta_order: 1 })));
        assert_eq!(is_torsion_curve(&c("x+y-1")), (false, None));
        assert_eq!(is_torsion_curve(&c("x-2")), (false, None));
        assert_eq!(is_torsion_curve(&c("x^2*y^2+x*y+1")).1.unwrap().zeta_order, 3);
        assert_eq!(is_torsion_curve(&c("x+y")), (true, Some(TorsionCurveData { a: 1, b: -1, zeta_order: 2 })));
    }

    #[test]
    fn power_examples() {
        assert_eq!(power_image(&c("x*y-1"), 3).unwrap(), c("x*y-1"));
        assert_eq!(power_image(&c("x-2"), 2).unwrap(), c("x-4"));
        assert_eq!(power_image(&c("x+y-1"), 2).unwrap(), c("x^2-2*x*y+y^2-2*x-2*y+1"));
        assert!(power_image(&c("x-2"), 0).is_err());
    }

    #[test]
    fn ecc_examples() {
        let r = ecc_primes(&c("x+y-1"), 50).unwrap();
        assert!(r.primes.is_empty());
        assert!(r.image_degrees.iter().all(|&(p, d)| d as u64 == p));
        assert_eq!(ecc_primes(&c("x^2-2"), 10).unwrap().primes, vec![2]);
        let r = ecc_primes(&c("x*y-1"), 10).unwrap();
        assert!(r.primes.is_empty() && r.bound_holds);
        assert!(ecc_primes(&c("x-2"), 1).is_err());
    }
}

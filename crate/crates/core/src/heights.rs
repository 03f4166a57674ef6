//! Weil heights of algebraic numbers and of points of G_m².

use std::fmt;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::field::interpolate;
use crate::algebra::{is_irreducible, Field, FieldElement, IntPoly1, NumberField};
use crate::analytic::ball::pow2;
use crate::analytic::roots::root_disks_int;
use crate::analytic::{kronecker_test, log_mahler_1d, ComplexBall, Precision, RealBall};
use crate::error::{domain, Result};
use crate::parse::{parse_field, parse_field_element};

/// A point `(x, y)` of G_m² with both coordinates in one number field.
#[derive(Clone)]
pub struct Point2 {
    x: FieldElement,
    y: FieldElement,
    minpoly_x: IntPoly1,
    minpoly_y: IntPoly1,
}

impl Point2 {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<Self> {
        if x.field() != y.field() {
            return domain("point coordinates lie in different fields");
        }
        if x.is_zero() || y.is_zero() {
            return domain("point has a zero coordinate, so it is not in G_m^2");
        }
        let minpoly_x = x.minimal_polynomial();
        let minpoly_y = y.minimal_polynomial();
        Ok(Point2 { x, y, minpoly_x, minpoly_y })
    }

    /// Point with rational coordinates.
    pub fn rational(x: BigRational, y: BigRational) -> Result<Self> {
        let q = NumberField::rationals();
        Self::new(FieldElement::from_rational(&q, x), FieldElement::from_rational(&q, y))
    }

    pub fn from_ints(x: i64, y: i64) -> Result<Self> {
        Self::rational(BigRational::from(BigInt::from(x)), BigRational::from(BigInt::from(y)))
    }

    /// Reads the text form `field`, `x`, `y` (coordinates as polynomials in `t`).
    pub fn parse(field: &str, x: &str, y: &str) -> Result<Self> {
        let k = parse_field(field)?;
        Self::new(parse_field_element(x, &k)?, parse_field_element(y, &k)?)
    }

    pub fn field(&self) -> &Field {
        self.x.field()
    }

    /// Degree of the field holding the coordinates.
    pub fn degree(&self) -> usize {
        self.field().degree()
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn y(&self) -> &FieldElement {
        &self.y
    }

    pub fn minpoly_x(&self) -> &IntPoly1 {
        &self.minpoly_x
    }

    pub fn minpoly_y(&self) -> &IntPoly1 {
        &self.minpoly_y
    }

    pub fn swap(&self) -> Self {
        Point2 {
            x: self.y.clone(),
            y: self.x.clone(),
            minpoly_x: self.minpoly_y.clone(),
            minpoly_y: self.minpoly_x.clone(),
        }
    }

    /// The same point with coordinates mapped into a larger field by `embed`.
    pub fn map_field(&self, embed: impl Fn(&FieldElement) -> FieldElement) -> Result<Self> {
        Self::new(embed(&self.x), embed(&self.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) in {}", self.x, self.y, self.field())
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `h(α) = log M(f) / deg f` for the minimal polynomial `f` of `α ≠ 0`.
pub fn height_algebraic(minpoly: &IntPoly1, prec: Precision) -> Result<RealBall> {
    if minpoly.is_zero() || minpoly.deg() == 0 {
        return domain("minimal polynomial must have degree at least 1");
    }
    if !minpoly.content().is_one() {
        return domain(format!("{minpoly} is not primitive"));
    }
    if minpoly.coeff(0).is_zero() {
        return domain(format!("{minpoly} vanishes at 0"));
    }
    if !is_irreducible(minpoly) {
        return domain(format!("{minpoly} is reducible"));
    }
    let m = log_mahler_1d(minpoly, prec)?;
    Ok(m.div_i64(minpoly.deg() as i64).max(&RealBall::zero(prec.bits)))
}

/// Positive rational generating the fractional ideal of `Z` spanned by `c`.
pub(crate) fn rational_content(c: &[BigRational]) -> BigRational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for q in c.iter().filter(|q| !q.is_zero()) {
        num = num.gcd(q.numer());
        den = den.lcm(q.denom());
    }
    BigRational::new(num, den)
}

/// Non-archimedean part `Σ_p Σ_{v|p} (D_v/D) log max(1, |a_1|_v, ...)` of the
/// height of `(1 : a_1 : ... : a_k)`.
///
/// Gauss norms are multiplicative, so for each prime the local factors over
/// `p` combine into the Gauss norm of `N_{K/Q}(1 + a_1 u + ... + a_k u^k)`;
/// summing over primes leaves `-log` of its rational content.
pub fn finite_height_part(coords: &[FieldElement]) -> BigRational {
    content_of_norm_form(coords, true)
}

/// Content of `N(Σ c_i u^i)`; with `with_one` a leading constant 1 is prepended.
pub(crate) fn content_of_norm_form(coords: &[FieldElement], with_one: bool) -> BigRational {
    let field = coords[0].field().clone();
    let d = field.degree();
    let mut elems: Vec<FieldElement> = Vec::new();
    if with_one {
        elems.push(FieldElement::one(&field));
    }
    elems.extend(coords.iter().cloned());
    if d == 1 {
        return rational_content(&elems.iter().map(|e| e.coords()[0].clone()).collect::<Vec<_>>());
    }
    let k = elems.len() - 1;
    let npts = k * d + 1;
    let xs: Vec<BigInt> = (0..npts as i64).map(BigInt::from).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|u| {
            let uq = BigRational::from(u.clone());
            let mut acc = FieldElement::zero(&field);
            let mut pw = BigRational::one();
            for e in &elems {
                acc = acc.add(&e.scale(&pw));
                pw = &pw * &uq;
            }
            acc.norm()
        })
        .collect();
    rational_content(&interpolate(&xs, &ys))
}

/// Certified `log q` for a positive rational.
pub(crate) fn log_rational(q: &BigRational, p: usize) -> RealBall {
    RealBall::from_int(q.numer(), p).ln().sub(&RealBall::from_int(q.denom(), p).ln())
}

/// Conjugates `σ_j(θ)` of the field generator as complex balls.
pub(crate) fn generator_conjugates(field: &Field, prec: Precision) -> Result<Vec<ComplexBall>> {
    let wp = prec.bits + 64;
    let target: BigFloat = pow2(-(wp as i64), 64);
    let disks = root_disks_int(field.generator(), &target, Precision::new(wp, prec.max_bits.max(wp)))?;
    Ok(disks
        .iter()
        .map(|d| {
            let b = d.as_complex_ball();
            ComplexBall::new(b.re.with_prec(wp), b.im.with_prec(wp))
        })
        .collect())
}

/// Evaluates the power-basis representative of `e` at the complex ball `z`.
pub(crate) fn embed(e: &FieldElement, z: &ComplexBall) -> ComplexBall {
    let p = z.prec();
    let mut acc = ComplexBall::zero(p);
    for c in e.coords().iter().rev() {
        acc = acc.mul(z).add(&ComplexBall::from_real(RealBall::from_rational(c, p)));
    }
    acc
}

/// Archimedean part `(1/D) Σ_σ log max(1, |σ a_1|, ..., |σ a_k|)`.
pub(crate) fn archimedean_part(coords: &[FieldElement], prec: Precision) -> Result<RealBall> {
    let field = coords[0].field();
    let conj = generator_conjugates(field, prec)?;
    let wp = prec.bits + 64;
    let mut total = RealBall::zero(wp);
    for z in &conj {
        let mut m = RealBall::one(wp);
        for c in coords {
            m = m.max(&embed(c, z).abs());
        }
        total = total.add(&m.ln());
    }
    Ok(total.div_i64(field.degree() as i64))
}

/// Weil height of the projective point `(1 : a_1 : ... : a_k)`.
pub fn affine_height(coords: &[FieldElement], prec: Precision) -> Result<RealBall> {
    let arch = archimedean_part(coords, prec)?;
    let content = finite_height_part(coords);
    let d = coords[0].field().degree() as i64;
    let fin = log_rational(&content, arch.prec()).neg().div_i64(d);
    Ok(arch.add(&fin).max(&RealBall::zero(arch.prec())).with_prec(prec.bits))
}

/// Weil height of the projective point `(c_0 : ... : c_k)`; not all zero.
pub fn projective_height(coords: &[FieldElement], prec: Precision) -> Result<RealBall> {
    let nz: Vec<FieldElement> = coords.iter().filter(|c| !c.is_zero()).cloned().collect();
    if nz.is_empty() {
        return domain("projective point with all coordinates zero");
    }
    let field = nz[0].field().clone();
    let d = field.degree() as i64;
    let wp = prec.bits + 64;
    if nz.len() == 1 {
        return Ok(RealBall::zero(prec.bits));
    }
    let rats: Option<Vec<BigRational>> = nz.iter().map(|c| c.as_rational()).collect();
    let (arch, fin) = match rats {
        // Rational coordinates: one embedding suffices.
        Some(q) => {
            let m = q.iter().map(|c| c.abs()).max().unwrap();
            (log_rational(&m, wp), log_rational(&rational_content(&q), wp).neg())
        }
        None => {
            let conj = generator_conjugates(&field, prec)?;
            let mut total = RealBall::zero(wp);
            for z in &conj {
                let mut m = RealBall::zero(wp);
                for c in &nz {
                    m = m.max(&embed(c, z).abs());
                }
                total = total.add(&m.ln());
            }
            let content = content_of_norm_form(&nz, false);
            (total.div_i64(d), log_rational(&content, wp).neg().div_i64(d))
        }
    };
    Ok(arch.add(&fin).max(&RealBall::zero(wp)).with_prec(prec.bits))
}

/// `h(α)` for `α = (α_1, α_2)`, the height of `(1 : α_1 : α_2)`.
pub fn point_height(p: &Point2, prec: Precision) -> Result<RealBall> {
    affine_height(&[p.x.clone(), p.y.clone()], prec)
}

/// Both coordinates are roots of unity.
pub fn is_torsion_point(p: &Point2) -> bool {
    kronecker_test(&p.minpoly_x) && kronecker_test(&p.minpoly_y)
}

/// `(x^l, y^l)` in the same field.
pub fn power_point(p: &Point2, l: u64) -> Result<Point2> {
    if l == 0 {
        return domain("power must be at least 1");
    }
    Point2::new(p.x.pow(l), p.y.pow(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr() -> Precision {
        Precision::default()
    }

    fn ln(n: i64) -> RealBall {
        RealBall::from_i64(n, 256).ln()
    }

    #[test]
    fn algebraic_heights() {
        let h = height_algebraic(&IntPoly1::from_i64s(&[-3, 1]), pr()).unwrap();
        assert!(h.overlaps(&ln(3)));
        let h = height_algebraic(&IntPoly1::from_i64s(&[-1, 2]), pr()).unwrap();
        assert!(h.overlaps(&ln(2)));
        let h = height_algebraic(&IntPoly1::from_i64s(&[-2, 0, 1]), pr()).unwrap();
        assert!(h.overlaps(&ln(2).div_i64(2)));
        assert!(height_algebraic(&IntPoly1::from_i64s(&[-1, 0, 1]), pr()).is_err());
    }

    #[test]
    fn rational_points() {
        let h = point_height(&Point2::from_ints(2, 3).unwrap(), pr()).unwrap();
        assert!(h.overlaps(&ln(3)));
        let half = BigRational::new(1.into(), 2.into());
        let p = Point2::rational(half, BigRational::from(BigInt::from(3))).unwrap();
        let h = point_height(&p, pr()).unwrap();
        assert!(h.overlaps(&ln(6)), "{h}");
    }

    #[test]
    fn sqrt2_sqrt3() {
        let p = Point2::parse("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2").unwrap();
        assert_eq!(p.minpoly_x(), &IntPoly1::from_i64s(&[-2, 0, 1]));
        assert_eq!(p.minpoly_y(), &IntPoly1::from_i64s(&[-3, 0, 1]));
        let h = point_height(&p, pr()).unwrap();
        assert!(h.overlaps(&ln(3).div_i64(2)), "{h}");
        let q = power_point(&p, 2).unwrap();
        assert_eq!(q.x().as_rational(), Some(BigRational::from(BigInt::from(2))));
        assert_eq!(q.y().as_rational(), Some(BigRational::from(BigInt::from(3))));
    }

    #[test]
    fn non_integral_at_two() {
        // √5/2 picks up log 2 from the prime 2, which is inert.
        let p = Point2::parse("t^2-5", "t/2", "1").unwrap();
        let h = point_height(&p, pr()).unwrap();
        // Conjugates ±√5/2 give (1/2)(2 log(√5/2)) plus finite part log 2.
        let expect = ln(5).div_i64(2);
        assert!(h.overlaps(&expect), "{h}");
    }

    #[test]
    fn torsion() {
        let i = Point2::parse("t^2+1", "-1", "t").unwrap();
        assert!(is_torsion_point(&i));
        assert!(point_height(&i, pr()).unwrap().contains_zero());
        assert!(!is_torsion_point(&Point2::from_ints(2, 1).unwrap()));
        let z3 = Point2::parse("zeta_3", "t", "t^2").unwrap();
        assert!(is_torsion_point(&z3));
        assert!(Point2::from_ints(0, 1).is_err());
    }
}

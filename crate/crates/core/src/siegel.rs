//! Auxiliary polynomials of small height vanishing to high order at a point,
//! built from an integer kernel basis by lattice reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::lattice::shortest_max_norm;
use crate::algebra::FieldElement;
use crate::analytic::{Precision, RealBall};
use crate::error::{domain, Error, Result};
use crate::heights::{point_height, projective_height, Point2};
use crate::obstruction::{AuxPoly, BaseField, JetMatrix};

/// Node budget for the short-vector search after reduction.
const SEARCH_BUDGET: usize = 100_000;

#[derive(Clone, Debug)]
pub struct SiegelResult {
    pub f: AuxPoly,
    pub l: u32,
    pub t: u32,
    pub height_f: RealBall,
    pub bound: RealBall,
    pub met_bound: bool,
    /// `N = dim k[x]_{<=L}` and `r = N - dim E`.
    pub n: usize,
    pub r: usize,
}

/// Projective height of the coefficient vector of `F`.
pub fn polynomial_height(f: &AuxPoly, prec: Precision) -> Result<RealBall> {
    match f {
        AuxPoly::Int(p) => {
            if p.is_zero() {
                return domain("height of the zero polynomial");
            }
            let c = p.content();
            let m = p.max_abs_coeff();
            let q = BigRational::new(m, c);
            let p0 = prec.bits;
            Ok(RealBall::from_int(q.numer(), p0).ln().sub(&RealBall::from_int(q.denom(), p0).ln()))
        }
        AuxPoly::Cyclotomic { poly, .. } => {
            let coords: Vec<FieldElement> = poly.terms().values().cloned().collect();
            projective_height(&coords, prec)
        }
    }
}

/// `L = min{2ωT², ⌈(TD)^{1/2}(T+1)⌉}`.
pub fn degree_parameter(omega: u32, t: u32, d: usize) -> u32 {
    let a = 2 * omega as u64 * (t as u64) * (t as u64);
    // ⌈sqrt(TD)(T+1)⌉ = ⌈sqrt(TD (T+1)^2)⌉.
    let s = (t as u64) * (d as u64) * (t as u64 + 1) * (t as u64 + 1);
    let mut r = (s as f64).sqrt() as u64;
    while r * r < s {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= s {
        r -= 1;
    }
    a.min(r) as u32
}

/// `((T+1) log(L+1) + L h) / (T-1)`.
pub fn corollary_bound(t: u32, l: u32, h: &RealBall) -> RealBall {
    let p = h.prec();
    let lg = RealBall::from_i64(l as i64 + 1, p).ln();
    lg.mul_i64(t as i64 + 1).add(&h.mul_i64(l as i64)).div_i64(t as i64 - 1)
}

fn select(j: &JetMatrix) -> Result<(AuxPoly, usize, usize)> {
    let mut ker = j.integer_kernel();
    let n = j.monomials.len();
    let dim = ker.len() / j.base_degree;
    if ker.is_empty() {
        return Err(Error::Internal("kernel of the jet matrix is trivial".into()));
    }
    let (mut v, _) = shortest_max_norm(&mut ker, SEARCH_BUDGET);
    let g = v.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    if !g.is_one() && !g.is_zero() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
    Ok((j.poly_from_vector(&v), n, n - dim))
}

/// Auxiliary polynomial over `Q` with `L` from the degree parameter rule and
/// the height bound `((T+1) log(L+1) + L h(α)) / (T-1)`.
pub fn construct_auxiliary(p: &Point2, t: u32, omega: u32, prec: Precision) -> Result<SiegelResult> {
    if t < 2 {
        return domain("T must be at least 2");
    }
    if omega == 0 {
        return domain("omega must be at least 1");
    }
    let l = degree_parameter(omega, t, p.degree());
    let j = JetMatrix::build(std::slice::from_ref(p), l, t, &BaseField::Rationals)?;
    let (f, n, r) = select(&j)?;
    let height_f = polynomial_height(&f, prec)?;
    let h = point_height(p, prec)?;
    let bound = corollary_bound(t, l, &h);
    finish(f, l, t, height_f, bound, n, r)
}

fn finish(
    f: AuxPoly,
    l: u32,
    t: u32,
    height_f: RealBall,
    bound: RealBall,
    n: usize,
    r: usize,
) -> Result<SiegelResult> {
    if !height_f.certainly_le(&bound) {
        if bound.certainly_lt(&height_f) {
            return Err(Error::BoundUnmet {
                best_height: format!("{height_f} (F = {f})"),
                bound: bound.to_string(),
            });
        }
        return Err(Error::Undecided(format!("h(F) = {height_f} against bound {bound}")));
    }
    Ok(SiegelResult { f, l, t, height_f, bound, met_bound: true, n, r })
}

/// Several-point version: `F` over `k` of degree at most `L` vanishing to
/// order `T` at every point, with
/// `h(F) <= r/(N-r) ((T+1) log(L+1) + Lθ) + log c_k`, where `θ` bounds the
/// heights of the points and `c_k` is replaced by its upper estimate `φ(m)`.
#[doc(hidden)]
pub fn construct_auxiliary_points(
    points: &[Point2],
    l: u32,
    t: u32,
    theta: &RealBall,
    base: &BaseField,
    prec: Precision,
) -> Result<SiegelResult> {
    if points.is_empty() {
        return domain("no points given");
    }
    let j = JetMatrix::build(points, l, t, base)?;
    let (f, n, r) = select(&j)?;
    if r == n {
        return domain("only the zero polynomial vanishes at these points");
    }
    let height_f = polynomial_height(&f, prec)?;
    let p0 = prec.bits;
    let core = RealBall::from_i64(l as i64 + 1, p0)
        .ln()
        .mul_i64(t as i64 + 1)
        .add(&theta.with_prec(p0).mul_i64(l as i64));
    let log_ck = RealBall::from_i64(base.degree() as i64, p0).ln();
    let bound = core.mul_i64(r as i64).div_i64((n - r) as i64).add(&log_ck);
    finish(f, l, t, height_f, bound, n, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly2;
    use crate::extrapolation::vanishing_order;

    fn s23() -> Point2 {
        Point2::parse("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2").unwrap()
    }

    #[test]
    fn heights_of_polynomials() {
        let pr = Precision::default();
        let f = AuxPoly::Int(IntPoly2::from_i64_terms(&[((2, 0), 1), ((1, 0), -4), ((0, 0), 4)]));
        assert!(polynomial_height(&f, pr).unwrap().overlaps(&RealBall::from_i64(4, 256).ln()));
        let f = AuxPoly::Int(IntPoly2::from_i64_terms(&[((1, 0), 2), ((0, 0), 2)]));
        assert!(polynomial_height(&f, pr).unwrap().contains_zero());
        let k = crate::algebra::NumberField::cyclotomic(4).unwrap();
        let f = crate::parse::parse_field_poly2("x - t", &k).unwrap();
        let h = polynomial_height(&AuxPoly::Cyclotomic { m: 4, poly: f }, pr).unwrap();
        assert!(h.contains_zero(), "{h}");
    }

    #[test]
    fn degree_rule() {
        assert_eq!(degree_parameter(2, 2, 4), 9);
        assert_eq!(degree_parameter(1, 2, 1), 5);
        assert_eq!(degree_parameter(1, 3, 1), 7);
    }

    #[test]
    fn auxiliary_examples() {
        let pr = Precision::default();
        let r = construct_auxiliary(&s23(), 2, 2, pr).unwrap();
        assert_eq!(r.l, 9);
        assert!(r.met_bound);
        assert!(r.f.total_degree() <= 9);
        assert!(vanishing_order(&r.f, &s23(), &BaseField::Rationals, 3).unwrap() >= 2);
        assert!((r.bound.mid_f64() - 11.85).abs() < 0.01);

        let p = Point2::from_ints(2, 3).unwrap();
        let r = construct_auxiliary(&p, 2, 1, pr).unwrap();
        assert_eq!(r.l, 5);
        assert!(vanishing_order(&r.f, &p, &BaseField::Rationals, 3).unwrap() >= 2);
        assert!(construct_auxiliary(&s23(), 1, 2, pr).is_err());
    }
}

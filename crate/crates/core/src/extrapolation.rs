//! Vanishing orders, the Frobenius twist of cyclotomic coefficients, and the
//! extrapolation inequality relating the order of `F` at `α` to that of
//! `F^{φ_p}` at `α^p`.

use crate::algebra::modp::is_prime_u64;
use crate::algebra::FieldElement;
use crate::analytic::{Precision, RealBall};
use crate::error::{domain, Error, Result};
use crate::heights::{point_height, power_point, Point2};
use crate::obstruction::{AuxPoly, BaseField};
use crate::siegel::polynomial_height;

/// Least `|λ| <= t_max` with `D_λ F(α) ≠ 0`, or `t_max + 1` when every
/// divided derivative up to that order vanishes.
pub fn vanishing_order(f: &AuxPoly, p: &Point2, base: &BaseField, t_max: u32) -> Result<u32> {
    if f.is_zero() {
        return domain("vanishing order of the zero polynomial");
    }
    let g = f.in_field(p.field(), base)?;
    for n in 0..=t_max {
        for i in 0..=n {
            let d = g.divided_derivative((i, n - i));
            if !d.eval(p.x(), p.y()).is_zero() {
                return Ok(n);
            }
        }
    }
    Ok(t_max + 1)
}

/// Applies `ζ_m ↦ ζ_m^p` to the coefficients.
pub fn frobenius_apply(f: &AuxPoly, p: u64) -> Result<AuxPoly> {
    if !is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    match f {
        AuxPoly::Int(_) => Ok(f.clone()),
        AuxPoly::Cyclotomic { m, poly } => {
            if m % p == 0 {
                return Err(Error::RamifiedPrime { p, m: *m });
            }
            let k = poly.field().clone();
            let zp = FieldElement::theta(&k).pow(p % m);
            let mapped = poly.map_coeffs(&k, |c| {
                let mut acc = FieldElement::zero(&k);
                let mut pw = FieldElement::one(&k);
                for q in c.coords() {
                    acc = acc.add(&pw.scale(q));
                    pw = pw.mul(&zp);
                }
                acc
            });
            Ok(AuxPoly::Cyclotomic { m: *m, poly: mapped })
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtrapolationReport {
    pub prime: u64,
    pub t: u32,
    pub l: u32,
    pub t1_observed: u32,
    pub height_f: RealBall,
    pub height_alpha: RealBall,
    /// `T log p - h(F) - pL h(α) - 2 log(L+1)`.
    pub epsilon: RealBall,
    /// `T1 (log(L+1) + log p)`.
    pub lhs: RealBall,
    /// Certified `lhs > epsilon`.
    pub inequality_holds: bool,
    /// Certified `epsilon > 0`.
    pub epsilon_positive: bool,
}

fn report_at(
    f: &AuxPoly,
    fp_order: u32,
    p: &Point2,
    prime: u64,
    t: u32,
    l: u32,
    prec: Precision,
) -> Result<ExtrapolationReport> {
    let b = prec.bits;
    let hf = polynomial_height(f, prec)?;
    let ha = point_height(p, prec)?;
    let logp = RealBall::from_i64(prime as i64, b).ln();
    let logl = RealBall::from_i64(l as i64 + 1, b).ln();
    let epsilon = logp
        .mul_i64(t as i64)
        .sub(&hf)
        .sub(&ha.mul_i64(prime as i64 * l as i64))
        .sub(&logl.mul_i64(2));
    let lhs = logl.add(&logp).mul_i64(fp_order as i64);
    let inequality_holds = match epsilon.cmp_certified(&lhs) {
        Some(std::cmp::Ordering::Less) => true,
        Some(_) => false,
        None => return Err(Error::Undecided(format!("sign of {lhs} - {epsilon}"))),
    };
    let epsilon_positive = epsilon.is_positive();
    Ok(ExtrapolationReport {
        prime,
        t,
        l,
        t1_observed: fp_order,
        height_f: hf,
        height_alpha: ha,
        epsilon,
        lhs,
        inequality_holds,
        epsilon_positive,
    })
}

/// Computes `T1 = ord_{α^p} F^{φ_p}` exactly and certifies
/// `T1 (log(L+1) + log p) > T log p - h(F) - pL h(α) - 2 log(L+1)`.
/// Undecided comparisons are retried at doubled precision up to the cap.
pub fn extrapolation_report(
    f: &AuxPoly,
    p: &Point2,
    base: &BaseField,
    prime: u64,
    t: u32,
    l: u32,
    prec: Precision,
) -> Result<ExtrapolationReport> {
    if f.total_degree() > l {
        return domain(format!("F has degree {} > L = {l}", f.total_degree()));
    }
    if vanishing_order(f, p, base, t)? < t {
        return domain(format!("F does not vanish to order {t} at the point"));
    }
    if base.conductor() % prime == 0 && base.conductor() > 1 {
        return Err(Error::RamifiedPrime { p: prime, m: base.conductor() });
    }
    let fp = frobenius_apply(f, prime)?;
    let ap = power_point(p, prime)?;
    // The order at a point never exceeds the degree, so this is exact.
    let t1 = vanishing_order(&fp, &ap, base, fp.total_degree())?;
    let mut pr = prec;
    loop {
        match report_at(f, t1, p, prime, t, l, pr) {
            Err(Error::Undecided(msg)) => {
                if pr.bits >= prec.max_bits {
                    return Err(Error::Undecided(msg));
                }
                pr = Precision::new((pr.bits * 2).min(prec.max_bits), prec.max_bits);
            }
            r => return r,
        }
    }
}

/// `F(x, y)` evaluated at `(a, b)` in the point's field; convenience for reports.
pub fn evaluate(f: &AuxPoly, p: &Point2, base: &BaseField) -> Result<FieldElement> {
    Ok(f.in_field(p.field(), base)?.eval(p.x(), p.y()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::NumberField;
    use crate::parse::{parse_field_poly2, parse_int_poly2};
    use crate::siegel::construct_auxiliary;

    fn int(s: &str) -> AuxPoly {
        AuxPoly::Int(parse_int_poly2(s).unwrap())
    }

    #[test]
    fn orders() {
        let q = BaseField::Rationals;
        let p = Point2::from_ints(2, 3).unwrap();
        assert_eq!(vanishing_order(&int("(x-2)^3*(y-3)"), &p, &q, 10).unwrap(), 4);
        assert_eq!(vanishing_order(&int("1"), &p, &q, 10).unwrap(), 0);
        let s = Point2::parse("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2").unwrap();
        assert_eq!(vanishing_order(&int("x^2-2"), &s, &q, 10).unwrap(), 1);
        assert_eq!(vanishing_order(&int("(x-2)^3"), &p, &q, 1).unwrap(), 2);
    }

    #[test]
    fn frobenius() {
        let k4 = NumberField::cyclotomic(4).unwrap();
        let f = AuxPoly::Cyclotomic { m: 4, poly: parse_field_poly2("x - t", &k4).unwrap() };
        let g = frobenius_apply(&f, 3).unwrap();
        assert_eq!(g, AuxPoly::Cyclotomic { m: 4, poly: parse_field_poly2("x + t", &k4).unwrap() });
        assert!(matches!(frobenius_apply(&f, 2), Err(Error::RamifiedPrime { p: 2, m: 4 })));
        let k5 = NumberField::cyclotomic(5).unwrap();
        let f = AuxPoly::Cyclotomic { m: 5, poly: parse_field_poly2("t*x^2 + t^3*y - 1", &k5).unwrap() };
        assert_eq!(frobenius_apply(&f, 11).unwrap(), f);
        let i = int("x^2 + y");
        assert_eq!(frobenius_apply(&i, 7).unwrap(), i);
    }

    #[test]
    fn report_negative_epsilon() {
        let s = Point2::parse("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2").unwrap();
        let f = int("(x^2-2)^2");
        let r = extrapolation_report(&f, &s, &BaseField::Rationals, 3, 2, 9, Precision::default()).unwrap();
        assert!(r.epsilon.is_negative());
        assert_eq!(r.t1_observed, 0);
        assert!(r.inequality_holds);
    }

    #[test]
    fn report_from_siegel() {
        let p = Point2::from_ints(2, 3).unwrap();
        let pr = Precision::default();
        let s = construct_auxiliary(&p, 2, 1, pr).unwrap();
        let r = extrapolation_report(&s.f, &p, &BaseField::Rationals, 5, 2, s.l, pr).unwrap();
        assert!(r.inequality_holds);
    }
}

//! Logarithmic Mahler measure of one-variable polynomials.

use super::ball::{ComplexBall, RealBall};
use super::roots::{components, root_disks_balls, root_disks_int, Precision, RootDisk};
use crate::algebra::IntPoly1;
use crate::error::{domain, Error, Result};

/// Σ log⁺|z| over the roots enclosed by `disks`, grouped by component.
fn sum_log_plus(disks: &[RootDisk], p: usize) -> Result<RealBall> {
    let mut total = RealBall::zero(p);
    for comp in components(disks) {
        let mut hull: Option<RealBall> = None;
        for &i in &comp {
            if disks[i].radius.is_none() {
                return Err(Error::Undecided("root inclusion disk could not be certified".into()));
            }
            let m = disks[i].modulus(p);
            hull = Some(match hull {
                None => m,
                Some(h) => h.hull(&m),
            });
        }
        let lp = hull.unwrap().log_plus();
        total = total.add(&lp.mul_i64(comp.len() as i64));
    }
    Ok(total)
}

/// `log M(P)` for a nonzero integer polynomial.
pub fn log_mahler_1d(f: &IntPoly1, prec: Precision) -> Result<RealBall> {
    if f.is_zero() {
        return domain("Mahler measure of the zero polynomial");
    }
    let p = prec.bits;
    let lead = RealBall::from_int(&f.lead(), p).abs().ln();
    if f.deg() == 0 {
        return Ok(lead);
    }
    let target = super::ball::pow2(20 - p as i64, 64);
    let disks = root_disks_int(f, &target, prec)?;
    // Distinct roots are certified disjoint, but repeated roots appear as
    // copies; summing each disk individually is then sound.
    let mut total = lead;
    for d in &disks {
        total = total.add(&d.modulus(p).log_plus());
    }
    Ok(total.with_prec(p))
}

/// `log M(P)` for a polynomial whose coefficients are complex balls, listed
/// from the constant term up. Every polynomial in the family is covered.
pub fn log_mahler_balls(c: &[ComplexBall]) -> Result<RealBall> {
    let Some(last) = c.last() else {
        return domain("Mahler measure of the zero polynomial");
    };
    let p = last.prec();
    if last.contains_zero() {
        return Err(Error::IndeterminateDegree);
    }
    let lead = last.abs().ln();
    let disks = root_disks_balls(c, p)?;
    Ok(lead.add(&sum_log_plus(&disks, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly1 {
        IntPoly1::from_i64s(c)
    }

    #[test]
    fn golden_ratio() {
        let m = log_mahler_1d(&p(&[-1, -1, 1]), Precision::default()).unwrap();
        let five = RealBall::from_i64(5, 300).sqrt();
        let phi = five.add(&RealBall::one(300)).div_i64(2).ln();
        assert!(m.overlaps(&phi), "{m} vs {phi}");
        assert!(m.rad_f64() < 1e-60);
    }

    #[test]
    fn simple_cases() {
        let d = Precision::default();
        let l2 = RealBall::from_i64(2, 256).ln();
        assert!(log_mahler_1d(&p(&[-1, 2]), d).unwrap().overlaps(&l2));
        assert!(log_mahler_1d(&p(&[-1, 0, 0, 1]), d).unwrap().contains_zero());
        assert!(log_mahler_1d(&p(&[0, 0, 3]), d).unwrap().overlaps(&RealBall::from_i64(3, 256).ln()));
    }

    #[test]
    fn lehmer() {
        let f = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let m = log_mahler_1d(&f, Precision::default()).unwrap();
        assert!((m.mid_f64() - 0.162_357_612_007_738_6).abs() < 1e-14);
    }

    #[test]
    fn ball_coefficients() {
        let c: Vec<ComplexBall> = [-1.0, -1.0, 1.0]
            .iter()
            .map(|&x| ComplexBall::from_real(RealBall::from_f64(x, 128).widen_f64(1e-30)))
            .collect();
        let m = log_mahler_balls(&c).unwrap();
        assert!((m.mid_f64() - 0.481_211_825_059_603_4).abs() < 1e-15, "{m}");
        assert!(m.rad_f64() < 1e-20, "{m}");
        let bad = vec![ComplexBall::from_f64(1.0, 0.0, 64), ComplexBall::from_real(RealBall::from_f64_interval(-1e-3, 1e-3, 64))];
        assert!(matches!(log_mahler_balls(&bad), Err(Error::IndeterminateDegree)));
    }
}

//! Two-variable logarithmic Mahler measure via Jensen's formula:
//! `log M(P) = (1/2π) ∫ log M(P(e^{iθ}, y)) dθ`.

use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::Curve;
use crate::algebra::{IntPoly1, IntPoly2};
use crate::analytic::roots::aberth_f64;
use crate::analytic::{log_mahler_1d, log_mahler_balls, ComplexBall, Precision, RealBall};
use crate::error::{domain, Error, Result};

/// Grid offset as a fraction of a full turn, keeping nodes away from roots of unity.
const OFFSET: (i64, i64) = (4_142_135_623, 10_000_000_000);
const MIN_NODES: usize = 16;
/// Budget of integrand evaluations.
const MAX_NODES: usize = 1 << 15;
/// Width below which a kink is considered located.
const KINK_WIDTH: f64 = 1e-13;
const MAX_SPLITS: u32 = 24;

/// Terms grouped by the power of `y`: row `j` lists `(i, a)` for `a x^i y^j`.
type Rows = Vec<Vec<(u32, BigInt)>>;

/// `log M(P(e^{iθ}, ·))` as a ball, raising precision while the leading
/// coefficient cannot be separated from zero.
fn node_value(rows: &Rows, theta: impl Fn(usize) -> RealBall, prec: Precision) -> Result<RealBall> {
    let deg = rows.iter().flat_map(|r| r.iter().map(|(i, _)| *i)).max().unwrap_or(0) as usize;
    let mut bits = prec.bits;
    loop {
        let z = ComplexBall::expi(&theta(bits));
        let mut pw = vec![ComplexBall::from_real(RealBall::one(bits))];
        for _ in 0..deg {
            let next = pw.last().unwrap().mul(&z);
            pw.push(next);
        }
        let coeffs: Vec<ComplexBall> = rows
            .iter()
            .map(|r| {
                r.iter().fold(ComplexBall::zero(bits), |acc, (i, a)| {
                    acc.add(&pw[*i as usize].scale(&RealBall::from_int(a, bits)))
                })
            })
            .collect();
        match log_mahler_balls(&coeffs) {
            Err(Error::IndeterminateDegree) | Err(Error::Undecided(_)) | Err(Error::PrecisionExhausted(_))
                if bits < prec.max_bits =>
            {
                bits = (bits * 2).min(prec.max_bits);
            }
            Err(Error::IndeterminateDegree) => {
                return Err(Error::PrecisionExhausted("leading coefficient vanishes near a node".into()))
            }
            r => return r.map(|v| v.with_prec(prec.bits)),
        }
    }
}

fn grid_value(rows: &Rows, j: usize, n: usize, prec: Precision) -> Result<RealBall> {
    let frac = BigRational::new(BigInt::from(j as i64 * OFFSET.1 + n as i64 * OFFSET.0), BigInt::from(n as i64 * OFFSET.1));
    node_value(rows, |b| RealBall::pi(b).mul_i64(2).mul(&RealBall::from_rational(&frac, b)), prec)
}

fn rows_in_y(p: &IntPoly2) -> Rows {
    let mut rows = vec![Vec::new(); p.deg_y() as usize + 1];
    for ((i, j), a) in p.terms() {
        rows[*j as usize].push((*i, a.clone()));
    }
    rows
}

/// Number of roots of `P(e^{iθ}, ·)` outside the unit circle, in binary64.
fn roots_outside(rows: &Rows, theta: f64) -> usize {
    let z = Complex64::from_polar(1.0, theta);
    let c: Vec<Complex64> = rows
        .iter()
        .map(|r| r.iter().map(|(i, a)| z.powu(*i) * a.to_string().parse::<f64>().unwrap_or(f64::MAX)).sum())
        .collect();
    aberth_f64(&c).iter().filter(|r| r.norm() > 1.0).count()
}

/// Angles where a root crosses the unit circle, located by a scan and bisection.
fn kinks(rows: &Rows, deg: u32) -> Vec<f64> {
    let n = (32 * deg as usize).max(256);
    let off = OFFSET.0 as f64 / OFFSET.1 as f64;
    let at = |j: usize| TAU * (j as f64 + off) / n as f64;
    let counts: Vec<usize> = (0..n).map(|j| roots_outside(rows, at(j))).collect();
    let mut out = Vec::new();
    for j in 0..n {
        let (c0, c1) = (counts[j], counts[(j + 1) % n]);
        if c0 == c1 {
            continue;
        }
        let (mut a, mut b) = (at(j), at(j) + TAU / n as f64);
        while b - a > KINK_WIDTH {
            let m = 0.5 * (a + b);
            if roots_outside(rows, m) == c0 {
                a = m;
            } else {
                b = m;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

fn rules() -> &'static [Vec<(f64, f64)>; 2] {
    static R: OnceLock<[Vec<(f64, f64)>; 2]> = OnceLock::new();
    R.get_or_init(|| [gauss_legendre(12), gauss_legendre(24)])
}

struct Budget(usize);

impl Budget {
    fn spend(&mut self, n: usize, tol: f64) -> Result<()> {
        if self.0 < n {
            return Err(Error::PrecisionExhausted(format!(
                "quadrature did not reach tolerance {tol:e} within {MAX_NODES} nodes"
            )));
        }
        self.0 -= n;
        Ok(())
    }
}

fn gauss(rows: &Rows, a: f64, b: f64, rule: &[(f64, f64)], prec: Precision) -> Result<RealBall> {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    let mut sum = RealBall::zero(prec.bits);
    for &(x, w) in rule {
        let t = mid + half * x;
        let v = node_value(rows, |bits| RealBall::from_f64(t, bits), prec)?;
        sum = sum.add(&v.mul(&RealBall::from_f64(w * half, prec.bits)));
    }
    Ok(sum)
}

/// `∫_a^b` of the integrand on an arc free of kinks, bisected until two
/// Gauss rules agree to `tol`; the disagreement goes into the radius.
fn arc(rows: &Rows, a: f64, b: f64, tol: f64, depth: u32, budget: &mut Budget, prec: Precision) -> Result<RealBall> {
    let [lo, hi] = rules();
    budget.spend(lo.len() + hi.len(), tol)?;
    let g1 = gauss(rows, a, b, lo, prec)?;
    let g2 = gauss(rows, a, b, hi, prec)?;
    let diff = (g2.mid_f64() - g1.mid_f64()).abs();
    if diff + g2.rad_f64() <= tol {
        // Binary64 nodes and weights perturb the rule by a few ulps.
        return Ok(g2.widen_f64(diff + 1e-15 * (b - a) * (1.0 + g2.mid_f64().abs())));
    }
    if depth >= MAX_SPLITS {
        return Err(Error::PrecisionExhausted(format!("quadrature did not reach tolerance {tol:e} near angle {a}")));
    }
    let m = 0.5 * (a + b);
    let left = arc(rows, a, m, 0.5 * tol, depth + 1, budget, prec)?;
    Ok(left.add(&arc(rows, m, b, 0.5 * tol, depth + 1, budget, prec)?))
}

/// Periodic trapezoid rule on nested grids; converges geometrically when the
/// integrand is analytic on the circle.
fn trapezoid(rows: &Rows, tol: f64, prec: Precision) -> Result<RealBall> {
    let mut n = MIN_NODES;
    let mut sum = RealBall::zero(prec.bits);
    for j in 0..n {
        sum = sum.add(&grid_value(rows, j, n, prec)?);
    }
    let mut est = sum.div_i64(n as i64);
    loop {
        if 2 * n > MAX_NODES {
            return Err(Error::PrecisionExhausted(format!(
                "quadrature did not reach tolerance {tol:e} with {n} nodes"
            )));
        }
        // Odd nodes of the doubled grid.
        for j in 0..n {
            sum = sum.add(&grid_value(rows, 2 * j + 1, 2 * n, prec)?);
        }
        n *= 2;
        let next = sum.div_i64(n as i64);
        let diff = (next.mid_f64() - est.mid_f64()).abs();
        est = next;
        if diff + est.rad_f64() <= tol && n >= 2 * MIN_NODES {
            return Ok(est.widen_f64(diff));
        }
    }
}

/// Divides every coefficient in `y` by the polynomial `c` in `x`.
fn remove_y_content(p: &IntPoly2, c: &IntPoly1) -> IntPoly2 {
    let rows: Vec<IntPoly1> =
        p.coeffs_in_y().iter().map(|r| r.div_exact(c).expect("content divides every coefficient")).collect();
    IntPoly2::from_coeffs_in_y(&rows)
}

/// `log M(P)` to absolute tolerance `tol`, as a nonnegative ball.
///
/// Contents in either variable are split off and measured exactly. The rest
/// is integrated over the circle, on arcs between the angles where a root of
/// `P(e^{iθ}, ·)` crosses the unit circle (where the integrand has kinks).
pub fn log_mahler_2d(p: &IntPoly2, tol: f64, prec: Precision) -> Result<RealBall> {
    if p.is_zero() {
        return domain("Mahler measure of the zero polynomial");
    }
    if !(tol > 0.0) {
        return domain("tolerance must be positive");
    }
    let b = prec.bits;
    if p.deg_y() == 0 {
        return log_mahler_1d(&p.specialize_y(&BigInt::from(1)), prec);
    }
    if p.deg_x() == 0 {
        return log_mahler_1d(&p.specialize_x(&BigInt::from(1)), prec);
    }
    let cy = p.content_in_y_coeffs();
    let p1 = remove_y_content(p, &cy);
    let cx = p1.swap_xy().content_in_y_coeffs();
    let core = remove_y_content(&p1.swap_xy(), &cx).swap_xy();
    let exact = log_mahler_1d(&cy, prec)?.add(&log_mahler_1d(&cx, prec)?);
    if core.deg_x() == 0 || core.deg_y() == 0 {
        return Ok(exact.add(&log_mahler_2d(&core, tol, prec)?));
    }

    // Integrate over the variable whose leading coefficient is sparser, so the
    // specialized leading coefficient rarely comes near zero.
    let lead_terms_y = core.terms().keys().filter(|e| e.1 == core.deg_y()).count();
    let lead_terms_x = core.terms().keys().filter(|e| e.0 == core.deg_x()).count();
    let q = if lead_terms_x < lead_terms_y { core.swap_xy() } else { core };
    let rows = rows_in_y(&q);
    let ks = kinks(&rows, q.total_degree());
    let integral = if ks.is_empty() {
        trapezoid(&rows, tol, prec)?
    } else {
        // Share 2π·tol among the arcs in proportion to their length.
        let mut budget = Budget(MAX_NODES);
        let mut total = RealBall::zero(b);
        for (i, &a) in ks.iter().enumerate() {
            let e = if i + 1 < ks.len() { ks[i + 1] } else { ks[0] + TAU };
            total = total.add(&arc(&rows, a, e, 0.5 * tol * (e - a), 0, &mut budget, prec)?);
        }
        total.div(&RealBall::pi(b).mul_i64(2))
    };
    let w = exact.add(&integral);
    // Mahler measures of integer polynomials are at least 1.
    let zero = RealBall::zero(b);
    let lo = if w.lo_f64() < 0.0 { zero.lo().clone() } else { w.lo().clone() };
    let hi = if w.hi_f64() < 0.0 { zero.hi().clone() } else { w.hi().clone() };
    Ok(RealBall::from_endpoints(lo, hi, b))
}

/// Normalized height `ĥ(V) = log M(P)` of the curve `V = {P = 0}`.
pub fn normalized_height_curve(c: &Curve, tol: f64, prec: Precision) -> Result<RealBall> {
    log_mahler_2d(c.poly(), tol, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_int_poly2;

    fn h(s: &str, tol: f64) -> RealBall {
        log_mahler_2d(&parse_int_poly2(s).unwrap(), tol, Precision::new(128, 4096)).unwrap()
    }

    /// `(3√3/4π) L(χ_{-3}, 2)` summed directly.
    fn smyth_constant() -> f64 {
        let mut l = 0.0;
        for k in 0..2_000_000u64 {
            let a = (3 * k + 1) as f64;
            let b = (3 * k + 2) as f64;
            l += 1.0 / (a * a) - 1.0 / (b * b);
        }
        3.0 * 3f64.sqrt() / (4.0 * std::f64::consts::PI) * l
    }

    #[test]
    fn jensen_examples() {
        assert!(h("x*y-1", 1e-6).contains_zero());
        let v = h("x+y-5", 1e-6);
        assert!(v.contains_f64(5f64.ln()) || (v.mid_f64() - 5f64.ln()).abs() < 1e-6, "{v}");
        let v = h("x+y-1", 1e-4);
        assert!((v.mid_f64() - smyth_constant()).abs() < 1e-3, "{v}");
        assert!(v.hi_f64() - v.lo_f64() <= 2e-4 + 1e-12);
        let v = h("1+x+y", 1e-4);
        assert!((v.mid_f64() - 0.3230659472).abs() < 1e-3);
    }

    #[test]
    fn univariate_and_zero() {
        assert!((h("2*x-1", 1e-6).mid_f64() - 2f64.ln()).abs() < 1e-12);
        assert!((h("y^2-y-1", 1e-6).mid_f64() - 0.4812118250596034).abs() < 1e-12);
        assert!(log_mahler_2d(&IntPoly2::zero(), 1e-3, Precision::default()).is_err());
    }
}

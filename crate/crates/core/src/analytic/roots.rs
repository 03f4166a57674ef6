//! Complex root isolation with a posteriori certification.
//!
//! Approximations come from Aberth iteration, first in binary64 and then at
//! increasing working precision. Each approximation `z_i` is certified by the
//! inclusion disk of radius `n |p(z_i)| / (|a_n| Π_{j≠i} |z_i - z_j|)`; the
//! union of these disks contains every root, and a connected component made
//! of `k` disks contains exactly `k` roots counted with multiplicity.

use astro_float::BigFloat;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::ball::{ComplexBall, RealBall};
use crate::algebra::IntPoly1;
use crate::error::{domain, Error, Result};

/// Working-precision settings shared by the analytic routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    /// Requested precision of results, in bits.
    pub bits: usize,
    /// Cap for the refinement ladder, in bits.
    pub max_bits: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { bits: 256, max_bits: 16384 }
    }
}

impl Precision {
    pub fn new(bits: usize, max_bits: usize) -> Self {
        Precision { bits: bits.max(64), max_bits: max_bits.max(bits.max(64)) }
    }
}

/// A certified inclusion disk.
#[derive(Clone, Debug)]
pub struct RootDisk {
    pub center: ComplexBall,
    /// Upper bound for the radius; `None` when certification broke down.
    pub radius: Option<BigFloat>,
}

impl RootDisk {
    /// Enclosure of `|z|` for every `z` in the disk.
    pub fn modulus(&self, p: usize) -> RealBall {
        let c = self.center.abs();
        match &self.radius {
            Some(r) => {
                let w = c.widen(r);
                let zero = RealBall::zero(p);
                w.max(&zero)
            }
            None => RealBall::from_f64_interval(0.0, f64::MAX, p),
        }
    }

    pub fn as_complex_ball(&self) -> ComplexBall {
        match &self.radius {
            Some(r) => ComplexBall::new(self.center.re.widen(r), self.center.im.widen(r)),
            None => {
                let p = self.center.prec();
                let inf = RealBall::from_f64_interval(f64::MIN, f64::MAX, p);
                ComplexBall::new(inf.clone(), inf)
            }
        }
    }
}

fn horner(c: &[ComplexBall], z: &ComplexBall) -> ComplexBall {
    let mut acc = c[c.len() - 1].clone();
    for a in c[..c.len() - 1].iter().rev() {
        acc = acc.mul(z).add(a);
    }
    acc
}

fn derivative(c: &[ComplexBall]) -> Vec<ComplexBall> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a.scale(&RealBall::from_i64(i as i64, a.prec())))
        .collect()
}

fn recenter(z: &ComplexBall, p: usize) -> ComplexBall {
    ComplexBall::new(
        RealBall::exact(z.re.midpoint(), p),
        RealBall::exact(z.im.midpoint(), p),
    )
}

/// Binary64 Aberth iteration on the midpoint polynomial.
pub fn aberth_f64(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lead = c[n];
    let mut bound: f64 = 0.0;
    for (k, a) in c[..n].iter().enumerate() {
        let r = (a / lead).norm().powf(1.0 / (n - k) as f64);
        bound = bound.max(r);
    }
    let radius = (2.0 * bound).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let dc: Vec<Complex64> = (1..=n).map(|i| c[i] * i as f64).collect();
    let eval = |p: &[Complex64], x: Complex64| p.iter().rev().fold(Complex64::zero(), |acc, a| acc * x + a);
    for _ in 0..2000 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let pv = eval(c, z[i]);
            let dv = eval(&dc, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            } else {
                // Nudge coincident guesses apart.
                z[i] += Complex64::new(1e-8, 1e-8);
                moved = 1.0;
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn aberth_step(c: &[ComplexBall], dc: &[ComplexBall], z: &mut [ComplexBall], p: usize) -> f64 {
    let n = z.len();
    let one = ComplexBall::from_real(RealBall::one(p));
    let mut moved: f64 = 0.0;
    for i in 0..n {
        let pv = horner(c, &z[i]);
        let dv = horner(dc, &z[i]);
        let Some(ratio) = pv.try_div(&dv) else { continue };
        let mut s = ComplexBall::zero(p);
        let mut ok = true;
        for j in 0..n {
            if j != i {
                match one.try_div(&z[i].sub(&z[j])) {
                    Some(q) => s = s.add(&q),
                    None => ok = false,
                }
            }
        }
        if !ok {
            continue;
        }
        let Some(w) = ratio.try_div(&one.sub(&ratio.mul(&s))) else { continue };
        z[i] = recenter(&z[i].sub(&w), p);
        let (wr, wi) = w.mid_f64();
        let (zr, zi) = z[i].mid_f64();
        moved = moved.max(wr.hypot(wi) / zr.hypot(zi).max(1.0));
    }
    moved
}

fn smith_disks(c: &[ComplexBall], z: &[ComplexBall], p: usize) -> Vec<RootDisk> {
    let n = z.len();
    let lead = c[n].abs();
    z.iter()
        .enumerate()
        .map(|(i, zi)| {
            let num = horner(c, zi).abs();
            let mut den = lead.clone();
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    den = den.mul(&zi.sub(zj).abs());
                }
            }
            let radius = RealBall::from_i64(n as i64, p)
                .mul(&num)
                .try_div(&den)
                .map(|r| r.hi().clone());
            RootDisk { center: zi.clone(), radius }
        })
        .collect()
}

/// Groups disks into connected components; disks are merged unless
/// certified disjoint.
pub fn components(disks: &[RootDisk]) -> Vec<Vec<usize>> {
    let n = disks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let disjoint = match (&disks[i].radius, &disks[j].radius) {
                (Some(ri), Some(rj)) => {
                    let p = disks[i].center.prec();
                    let d = disks[i].center.sub(&disks[j].center).abs();
                    let rr = RealBall::exact(ri.clone(), p).add(&RealBall::exact(rj.clone(), p));
                    rr.certainly_lt(&d)
                }
                _ => false,
            };
            if !disjoint {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Inclusion disks for the roots of a polynomial with complex-ball
/// coefficients, computed at precision `p` without a refinement ladder.
/// The leading coefficient must exclude zero.
pub fn root_disks_balls(c: &[ComplexBall], p: usize) -> Result<Vec<RootDisk>> {
    let n = c.len() - 1;
    if c[n].contains_zero() {
        return Err(Error::IndeterminateDegree);
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mids: Vec<Complex64> = c.iter().map(|a| {
        let (r, i) = a.mid_f64();
        Complex64::new(r, i)
    }).collect();
    let mut z: Vec<ComplexBall> = aberth_f64(&mids)
        .into_iter()
        .map(|w| ComplexBall::from_f64(w.re, w.im, p))
        .collect();
    if p > 64 {
        let dc = derivative(c);
        for _ in 0..8 {
            if aberth_step(c, &dc, &mut z, p) < 2f64.powi(-(p as i32) + 8) {
                break;
            }
        }
    }
    Ok(smith_disks(c, &z, p))
}

fn int_coeff_balls(f: &IntPoly1, p: usize) -> Vec<ComplexBall> {
    f.coeffs().iter().map(|a| ComplexBall::from_real(RealBall::from_int(a, p))).collect()
}

/// Certified isolation for a square-free integer polynomial with nonzero
/// constant term; disks pairwise disjoint with radius at most `target`.
fn isolate_square_free(f: &IntPoly1, target: &BigFloat, prec: Precision) -> Result<Vec<RootDisk>> {
    let n = f.deg();
    if n == 0 {
        return Ok(vec![]);
    }
    let mids: Vec<Complex64> = f
        .coeffs()
        .iter()
        .map(|a| Complex64::new(a.to_f64().unwrap_or(f64::MAX), 0.0))
        .collect();
    let seeds = aberth_f64(&mids);
    let mut p = 64usize;
    let mut z: Vec<ComplexBall> = seeds.iter().map(|w| ComplexBall::from_f64(w.re, w.im, p)).collect();
    loop {
        let c = int_coeff_balls(f, p);
        let dc = derivative(&c);
        z = z.iter().map(|w| recenter(w, p)).collect();
        for _ in 0..60 {
            if aberth_step(&c, &dc, &mut z, p) < 2f64.powi(-(p.min(1000) as i32) + 8) {
                break;
            }
        }
        let disks = smith_disks(&c, &z, p);
        let comps = components(&disks);
        let small = disks.iter().all(|d| {
            d.radius.as_ref().map_or(false, |r| {
                let rb = RealBall::exact(r.clone(), 64);
                rb.certainly_le(&RealBall::exact(target.clone(), 64))
            })
        });
        if comps.len() == n && small {
            return Ok(disks);
        }
        if p >= prec.max_bits {
            return Err(Error::PrecisionExhausted(format!(
                "root isolation of {f} did not reach radius {:e} at {p} bits", super::ball::float_to_f64(target)
            )));
        }
        p = (p * 2).min(prec.max_bits);
    }
}

/// Disks (with multiplicity) for every root of `f`, ordered by real then imaginary midpoint.
pub fn root_disks_int(f: &IntPoly1, target: &BigFloat, prec: Precision) -> Result<Vec<RootDisk>> {
    if f.is_zero() {
        return domain("root isolation of the zero polynomial");
    }
    let mut out = Vec::new();
    for (s, mult) in f.primitive_part().square_free_decomposition() {
        let mut s = s;
        let mut zero_roots = 0;
        while s.coeff(0).is_zero() && !s.is_zero() {
            s = IntPoly1::new(s.coeffs()[1..].to_vec());
            zero_roots += 1;
        }
        let disks = isolate_square_free(&s, target, prec)?;
        for _ in 0..mult {
            for _ in 0..zero_roots {
                out.push(RootDisk {
                    center: ComplexBall::zero(64),
                    radius: Some(BigFloat::from_u64(0, 64)),
                });
            }
            out.extend(disks.iter().cloned());
        }
    }
    out.sort_by(|a, b| {
        let (ar, ai) = a.center.mid_f64();
        let (br, bi) = b.center.mid_f64();
        ar.partial_cmp(&br).unwrap().then(ai.partial_cmp(&bi).unwrap())
    });
    Ok(out)
}

/// Enclosures for all `deg(P)` roots of `P`, each of radius at most
/// `target_radius`, ordered by (real, imaginary) midpoint.
pub fn isolate_roots(p: &IntPoly1, target_radius: f64, prec: Precision) -> Result<Vec<ComplexBall>> {
    if !(target_radius > 0.0) {
        return domain("target radius must be positive");
    }
    // Box half-width r gives a complex radius r·√2.
    let t = BigFloat::from_f64(target_radius / std::f64::consts::SQRT_2, 64);
    let disks = root_disks_int(p, &t, prec)?;
    Ok(disks.iter().map(|d| d.as_complex_ball()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly1 {
        IntPoly1::from_i64s(c)
    }

    #[test]
    fn sqrt_two() {
        let r = isolate_roots(&p(&[-2, 0, 1]), 1e-30, Precision::default()).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].re.mid_f64() + 2f64.sqrt()).abs() < 1e-15);
        assert!((r[1].re.mid_f64() - 2f64.sqrt()).abs() < 1e-15);
        assert!(r[1].rad_f64() <= 1e-30);
        let two = RealBall::from_i64(2, 256).sqrt();
        assert!(r[1].re.overlaps(&two));
    }

    #[test]
    fn gaussian_units() {
        let r = isolate_roots(&p(&[1, 0, 1]), 1e-12, Precision::default()).unwrap();
        assert!((r[0].im.mid_f64() + 1.0).abs() < 1e-15);
        assert!((r[1].im.mid_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn multiplicities_repeat() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[0, 1]);
        let r = isolate_roots(&f, 1e-10, Precision::default()).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r[0].contains_zero());
    }

    #[test]
    fn lehmer_single_large_root() {
        let f = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let r = isolate_roots(&f, 1e-20, Precision::default()).unwrap();
        let big: Vec<_> = r.iter().filter(|z| z.abs().lo_f64() > 1.0 + 1e-6).collect();
        assert_eq!(big.len(), 1);
        assert!((big[0].re.mid_f64() - 1.176280818).abs() < 1e-8);
    }

    #[test]
    fn clustered_roots_need_more_bits() {
        // Mignotte-type polynomial x^8 - 2(50x - 1)^2 has two roots within 1e-13.
        let a = &p(&[-1, 50]).pow(2);
        let f = &IntPoly1::monomial(1.into(), 8) - &a.scale(&2.into());
        let r = isolate_roots(&f, 1e-40, Precision::default()).unwrap();
        assert_eq!(r.len(), 8);
    }
}

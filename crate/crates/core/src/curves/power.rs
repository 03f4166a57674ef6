//! Images of plane curves under `(x, y) ↦ (x^l, y^l)`.
//!
//! The eliminant `Π_{ξ,ζ} P(ζx, ξy)`, written in `X = x^l, Y = y^l`, is built
//! modulo word-size primes one variable at a time: for a specialized
//! univariate polynomial the product over `l`-th roots of unity is the
//! polynomial whose roots are the `l`-th powers of the original roots, which
//! Newton's identities give directly. Its square-free part is lifted by CRT.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::modp::{inv_mod, is_prime_u64, mul_mod, pow_mod, PolyMod};
use crate::algebra::poly2::{grlex_desc, Exp};
use crate::algebra::IntPoly2;

/// How one variable is raised to the `l`-th power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    /// The variable is absent.
    Absent,
    /// Only multiples of `l` occur as exponents: substitute.
    Substitute,
    /// General case: product over the `l`-th roots of unity.
    Full,
}

fn step_for(exps: impl Iterator<Item = u32>, l: u32) -> Step {
    let v: Vec<u32> = exps.collect();
    if v.iter().all(|&e| e == 0) {
        Step::Absent
    } else if v.iter().all(|&e| e % l == 0) {
        Step::Substitute
    } else {
        Step::Full
    }
}

fn sub_mod(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + q - b
    }
}

fn reduce(c: &BigInt, q: u64) -> u64 {
    c.mod_floor(&BigInt::from(q)).to_u64().unwrap()
}

/// `lc^l (-1)^{(l-1)n} Π (X - r^l)` for `f = lc Π (x - r)` of degree `n`,
/// which equals `Π_ζ f(ζx)` written in `X = x^l`.
fn root_power_poly(f: &PolyMod, l: u32) -> PolyMod {
    let q = f.p;
    let n = f.deg();
    let lc = f.lead();
    let g = f.monic();
    // e_i = (-1)^i g_{n-i}
    let e: Vec<u64> = (0..=n)
        .map(|i| {
            let c = g.c[n - i];
            if i % 2 == 1 {
                sub_mod(0, c, q)
            } else {
                c
            }
        })
        .collect();
    let top = n * l as usize;
    let mut pw = vec![0u64; top + 1];
    for k in 1..=top {
        let mut acc = 0u64;
        for i in 1..=k.min(n) {
            let term = if i == k { mul_mod(k as u64 % q, e[i], q) } else { mul_mod(e[i], pw[k - i], q) };
            acc = if i % 2 == 1 { (acc + term) % q } else { sub_mod(acc, term, q) };
        }
        pw[k] = acc;
    }
    let s: Vec<u64> = (0..=n).map(|k| pw[k * l as usize]).collect();
    let mut big_e = vec![0u64; n + 1];
    big_e[0] = 1;
    for k in 1..=n {
        let mut acc = 0u64;
        for i in 1..=k {
            let term = mul_mod(big_e[k - i], s[i], q);
            acc = if i % 2 == 1 { (acc + term) % q } else { sub_mod(acc, term, q) };
        }
        big_e[k] = mul_mod(acc, inv_mod(k as u64 % q, q), q);
    }
    let mut scale = pow_mod(lc, l as u64, q);
    if (l as usize - 1) * n % 2 == 1 {
        scale = sub_mod(0, scale, q);
    }
    let c: Vec<u64> = (0..=n)
        .map(|i| {
            let k = n - i;
            let v = if k % 2 == 1 { sub_mod(0, big_e[k], q) } else { big_e[k] };
            mul_mod(v, scale, q)
        })
        .collect();
    PolyMod::new(q, c)
}

/// Interpolates every row of values through the common nodes `xs`.
fn interpolate_rows(xs: &[u64], rows: &[Vec<u64>], q: u64) -> Vec<PolyMod> {
    let n = xs.len();
    // inv[j][i] = 1 / (xs[i] - xs[i-j]), shared by all rows.
    let inv: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| if i >= j && j > 0 { inv_mod(sub_mod(xs[i], xs[i - j], q), q) } else { 0 }).collect())
        .collect();
    // Newton basis Π_{k<i} (x - xs[k]) expanded once.
    let mut basis = vec![PolyMod::one(q)];
    for i in 1..n {
        let lin = PolyMod::new(q, vec![sub_mod(0, xs[i - 1], q), 1]);
        let next = basis[i - 1].mul(&lin);
        basis.push(next);
    }
    rows.iter()
        .map(|ys| {
            let mut d = ys.clone();
            for j in 1..n {
                for i in (j..n).rev() {
                    d[i] = mul_mod(sub_mod(d[i], d[i - 1], q), inv[j][i], q);
                }
            }
            let mut c = vec![0u64; n];
            for (di, b) in d.iter().zip(&basis) {
                if *di != 0 {
                    for (k, &bk) in b.c.iter().enumerate() {
                        c[k] = (c[k] + mul_mod(*di, bk, q)) % q;
                    }
                }
            }
            PolyMod::new(q, c)
        })
        .collect()
}

#[cfg(test)]
fn interpolate(xs: &[u64], ys: &[u64], q: u64) -> PolyMod {
    interpolate_rows(xs, &[ys.to_vec()], q).pop().unwrap()
}

/// Transposes an outer-indexed bivariate representation.
fn transpose(b: &[PolyMod], q: u64) -> Vec<PolyMod> {
    let inner = b.iter().map(|f| f.c.len()).max().unwrap_or(0);
    (0..inner)
        .map(|i| PolyMod::new(q, b.iter().map(|f| f.c.get(i).copied().unwrap_or(0)).collect()))
        .collect()
}

/// One elimination step: `b[k]` is the coefficient of `w^k` as a polynomial
/// in `v`; returns the same shape for the product over `w ↦ ζw`, in `W = w^l`.
fn power_step(b: &[PolyMod], l: u32, step: Step, q: u64) -> Vec<PolyMod> {
    match step {
        Step::Absent => b.to_vec(),
        Step::Substitute => b.iter().step_by(l as usize).cloned().collect(),
        Step::Full => {
            let dw = b.len() - 1;
            let dv = b.iter().map(|f| f.deg()).max().unwrap_or(0);
            let lcw = &b[dw];
            let need = l as usize * dv + 1;
            let mut xs = Vec::with_capacity(need);
            let mut vals = vec![Vec::with_capacity(need); dw + 1];
            let mut t = 0u64;
            while xs.len() < need {
                t += 1;
                if lcw.eval(t) == 0 {
                    continue;
                }
                let f = PolyMod::new(q, b.iter().map(|g| g.eval(t)).collect());
                let g = root_power_poly(&f, l);
                xs.push(t);
                for (k, row) in vals.iter_mut().enumerate() {
                    row.push(g.c.get(k).copied().unwrap_or(0));
                }
            }
            interpolate_rows(&xs, &vals, q)
        }
    }
}

fn poly_gcd_all(fs: &[PolyMod], q: u64) -> PolyMod {
    fs.iter().filter(|f| !f.is_zero()).fold(PolyMod::zero(q), |g, f| if g.is_zero() { f.monic() } else { g.gcd(f) })
}

fn sqfree_univariate(f: &PolyMod) -> PolyMod {
    if f.deg() == 0 {
        return PolyMod::one(f.p);
    }
    f.divrem(&f.gcd(&f.derivative())).0.monic()
}

/// Square-free part of `r` (entry `i` is the coefficient of `X^i`, a polynomial in `Y`).
fn sqfree_bivariate(r: &[PolyMod], q: u64) -> Vec<PolyMod> {
    let c = poly_gcd_all(r, q);
    let pp: Vec<PolyMod> = r.iter().map(|f| f.divrem(&c).0).collect();
    let mut nx = pp.len() - 1;
    while nx > 0 && pp[nx].is_zero() {
        nx -= 1;
    }
    let sc = sqfree_univariate(&c);
    if nx == 0 {
        return vec![sc];
    }
    let ell = &pp[nx];
    let dy = pp.iter().map(|f| f.deg()).max().unwrap_or(0);
    let need = ell.deg() + dy + 1;
    // Points where the specialized square-free part has maximal degree.
    let mut best = 0usize;
    let mut pts: Vec<(u64, PolyMod)> = Vec::new();
    let mut t = 0u64;
    while pts.len() < need {
        t += 1;
        let lv = ell.eval(t);
        if lv == 0 {
            continue;
        }
        let h = PolyMod::new(q, pp[..=nx].iter().map(|f| f.eval(t)).collect());
        let s = sqfree_univariate(&h).scale(lv);
        if s.deg() > best {
            best = s.deg();
            pts.clear();
        }
        if s.deg() == best {
            pts.push((t, s));
        }
    }
    let xs: Vec<u64> = pts.iter().map(|(t, _)| *t).collect();
    let rows: Vec<Vec<u64>> =
        (0..=best).map(|i| pts.iter().map(|(_, s)| s.c.get(i).copied().unwrap_or(0)).collect()).collect();
    let h = interpolate_rows(&xs, &rows, q);
    let hc = poly_gcd_all(&h, q);
    h.iter().map(|f| f.divrem(&hc).0.mul(&sc)).collect()
}

fn to_map(r: &[PolyMod]) -> BTreeMap<Exp, u64> {
    let mut m = BTreeMap::new();
    for (i, f) in r.iter().enumerate() {
        for (j, &a) in f.c.iter().enumerate() {
            if a != 0 {
                m.insert((i as u32, j as u32), a);
            }
        }
    }
    m
}

fn grlex_lead(m: &BTreeMap<Exp, u64>) -> Option<(Exp, u64)> {
    m.iter().min_by(|a, b| grlex_desc(a.0, b.0)).map(|(e, c)| (*e, *c))
}

/// Result modulo one prime: the square-free image scaled so that its grlex
/// leading coefficient matches that of the full eliminant.
struct Image {
    terms: BTreeMap<Exp, u64>,
    eliminant_lead: Exp,
}

fn image_mod(p: &IntPoly2, l: u32, sy: Step, sx: Step, q: u64) -> Option<Image> {
    // Rows indexed by the power of y, each a polynomial in x.
    let mut rows = vec![PolyMod::zero(q); p.deg_y() as usize + 1];
    for ((i, j), c) in p.terms() {
        let mut v = rows[*j as usize].c.clone();
        v.resize(v.len().max(*i as usize + 1), 0);
        v[*i as usize] = reduce(c, q);
        rows[*j as usize] = PolyMod::new(q, v);
    }
    if rows.last()?.is_zero() {
        return None;
    }
    let r1 = power_step(&rows, l, sy, q);
    let cols = transpose(&r1, q);
    if cols.last().map_or(true, |f| f.is_zero()) {
        return None;
    }
    // Now indexed by the power of x, each a polynomial in Y.
    let r2 = power_step(&cols, l, sx, q);
    let full = to_map(&r2);
    let (lead_e, lead_c) = grlex_lead(&full)?;
    let s = to_map(&sqfree_bivariate(&r2, q));
    let (_, s_c) = grlex_lead(&s)?;
    let k = mul_mod(lead_c, inv_mod(s_c, q), q);
    let terms = s.into_iter().map(|(e, c)| (e, mul_mod(c, k, q))).collect();
    Some(Image { terms, eliminant_lead: lead_e })
}

/// Primes just below `2^62`, in decreasing order.
struct Primes(u64);

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        loop {
            self.0 -= 2;
            if is_prime_u64(self.0) {
                return Some(self.0);
            }
        }
    }
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Total degree of [`power_image_poly`], read off the images modulo two
/// primes; a prime dividing a leading coefficient can only lower it.
pub fn power_image_degree(p: &IntPoly2, l: u32) -> u32 {
    assert!(l >= 1);
    if l == 1 {
        return p.total_degree();
    }
    let sy = step_for(p.terms().keys().map(|e| e.1), l);
    let sx = step_for(p.terms().keys().map(|e| e.0), l);
    Primes((1u64 << 62) + 1)
        .filter_map(|q| image_mod(p, l, sy, sx, q))
        .take(2)
        .map(|img| img.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// Reduced defining polynomial of the Zariski closure of the image of
/// `{P = 0}` under `(x, y) ↦ (x^l, y^l)`, primitive with positive grlex
/// leading coefficient and no monomial factor.
pub fn power_image_poly(p: &IntPoly2, l: u32) -> IntPoly2 {
    assert!(l >= 1);
    if l == 1 {
        return p.clone();
    }
    let sy = step_for(p.terms().keys().map(|e| e.1), l);
    let sx = step_for(p.terms().keys().map(|e| e.0), l);
    let fy: u32 = if sy == Step::Full { l } else { 1 };
    let fx: u32 = if sx == Step::Full { l } else { 1 };
    let dx = if sx == Step::Full { p.deg_x() * fy } else { p.deg_x() * fy / l };
    let dy = if sy == Step::Full { p.deg_y() * fx } else { p.deg_y() * fx / l };
    // Coefficients of the square-free part times the leading coefficient of
    // its cofactor are bounded by 2^{dX+dY} M(P)^{fx fy}, and M(P) <= ‖P‖₂.
    let norm2: BigInt = p.terms().values().map(|c| c * c).sum();
    let log2_norm = norm2.bits() as f64 / 2.0;
    let need_bits = 2.0 * (dx + dy) as f64 + (fx * fy) as f64 * log2_norm + 4.0;

    let mut modulus = BigInt::one();
    let mut acc: BTreeMap<Exp, BigInt> = BTreeMap::new();
    let mut key: Option<(u32, usize, Exp)> = None;
    for q in Primes((1u64 << 62) + 1) {
        let Some(img) = image_mod(p, l, sy, sx, q) else { continue };
        let deg = img.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0);
        let k = (deg, img.terms.len(), img.eliminant_lead);
        match key {
            Some(old) if k < old => continue,
            Some(old) if k == old => {
                let qb = BigInt::from(q);
                let minv = BigInt::from(inv_mod(reduce(&modulus, q), q));
                for (e, a) in acc.iter_mut() {
                    let r = BigInt::from(*img.terms.get(e).unwrap_or(&0));
                    let t = ((r - &*a) * &minv).mod_floor(&qb);
                    *a += t * &modulus;
                }
                modulus *= qb;
            }
            _ => {
                key = Some(k);
                acc = img.terms.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect();
                modulus = BigInt::from(q);
            }
        }
        if modulus.bits() as f64 > need_bits {
            break;
        }
    }
    let s = IntPoly2::from_terms(acc.iter().map(|(e, a)| (*e, symmetric(a, &modulus))));
    let s = s.primitive_part().strip_monomial();
    debug_assert!(s.leading_term().1.is_positive());
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_int_poly2;
    use num_traits::Zero;

    fn pp(s: &str) -> IntPoly2 {
        parse_int_poly2(s).unwrap()
    }

    #[test]
    fn root_powers_mod_q() {
        let q = 1_000_000_007;
        // (x-2)(x-3) -> (X-4)(X-9) for l = 2 with sign (-1)^{1*2} = 1.
        let f = PolyMod::new(q, vec![6, q - 5, 1]);
        assert_eq!(root_power_poly(&f, 2), PolyMod::new(q, vec![36, q - 13, 1]));
        // 2x - 1 -> 8X - 1 for l = 3, scaled by lc^3 = 8.
        let f = PolyMod::new(q, vec![q - 1, 2]);
        assert_eq!(root_power_poly(&f, 3), PolyMod::new(q, vec![q - 1, 8]));
        // Product over ζ of (ζx - 1) for l = 2 is -(X - 1) = 1 - X.
        let f = PolyMod::new(q, vec![q - 1, 1]);
        assert_eq!(root_power_poly(&f, 2), PolyMod::new(q, vec![1, q - 1]));
    }

    #[test]
    fn interpolation() {
        let q = 101;
        let f = PolyMod::new(q, vec![3, 0, 5, 7]);
        let xs = [1, 2, 3, 9];
        let ys: Vec<u64> = xs.iter().map(|&x| f.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys, q), f);
    }

    #[test]
    fn known_images() {
        assert_eq!(power_image_poly(&pp("x*y-1"), 3), pp("x*y-1"));
        assert_eq!(power_image_poly(&pp("x-2"), 2), pp("x-4"));
        assert_eq!(power_image_poly(&pp("x+y-1"), 2), pp("x^2-2*x*y+y^2-2*x-2*y+1"));
        assert_eq!(power_image_poly(&pp("x^2-2"), 2), pp("x-2"));
        assert_eq!(power_image_poly(&pp("x^2-y^3"), 5), pp("y^3-x^2"));
        assert_eq!(power_image_poly(&pp("x+y+1"), 3).total_degree(), 3);
        for (s, l) in [("x+y-1", 7), ("x^2-2", 2), ("x^3*y+y^2-x+4", 3)] {
            assert_eq!(power_image_degree(&pp(s), l), power_image_poly(&pp(s), l).total_degree());
        }
    }

    fn inflate(s: &IntPoly2, l: u32) -> IntPoly2 {
        IntPoly2::from_terms(s.terms().iter().map(|((i, j), c)| ((i * l, j * l), c.clone())))
    }

    fn divides(a: &IntPoly2, b: &IntPoly2) -> bool {
        // Exact test by substituting enough integer points is unreliable; use
        // the grlex division algorithm over Q.
        let mut r = b.clone();
        let (le, lc) = a.leading_term();
        let mut steps = 0;
        while !r.is_zero() && steps < 10_000 {
            let (re, rc) = r.leading_term();
            if re.0 < le.0 || re.1 < le.1 || !(&rc % &lc).is_zero() {
                return false;
            }
            let m = IntPoly2::from_terms([((re.0 - le.0, re.1 - le.1), &rc / &lc)]);
            r = r.sub(&a.mul(&m));
            steps += 1;
        }
        r.is_zero()
    }

    #[test]
    fn image_contains_curve() {
        for (s, l) in [("x+y-1", 3), ("x^2+x*y+y^3-2", 2), ("2*x*y^2-3*x+1", 3), ("x^3-y-1", 2)] {
            let p = pp(s);
            let img = power_image_poly(&p, l);
            assert!(img.total_degree() >= 1, "{s}");
            assert!(divides(&p, &inflate(&img, l)), "{s} l={l}: {img}");
        }
    }
}

//! Factorization of integer polynomials over Q: square-free decomposition,
//! factorization modulo a small prime, multifactor Hensel lifting and
//! subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{
    divrem_mod, factor_square_free_mod_p, is_prime_u64, symmetric_mod, to_int, zero_poly_mod,
    PolyMod,
};
use super::poly1::IntPoly1;
use crate::error::{domain, Result};

/// Content and irreducible factors with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly1, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly1 {
        self.factors
            .iter()
            .fold(IntPoly1::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Factors `p` over the rationals. The content carries the sign, so every
/// factor has positive leading coefficient.
pub fn factor_univariate(p: &IntPoly1) -> Result<Factorization> {
    if p.is_zero() {
        return domain("cannot factor the zero polynomial");
    }
    let mut content = p.content();
    if p.lead().is_negative() {
        content = -content;
    }
    let prim = p.div_scalar_exact(&content);
    let mut factors = Vec::new();
    if prim.deg() > 0 {
        for (s, mult) in prim.square_free_decomposition() {
            for f in factor_square_free(&s) {
                factors.push((f, mult));
            }
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| a.canonical_cmp(b).then(ma.cmp(mb)));
    Ok(Factorization { content, factors })
}

/// True when `p` is irreducible over Q (degree at least one, content ignored).
pub fn is_irreducible(p: &IntPoly1) -> bool {
    match factor_univariate(p) {
        Ok(f) => f.factors.len() == 1 && f.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Irreducible factors of a primitive square-free polynomial with positive lead.
pub fn factor_square_free(f: &IntPoly1) -> Vec<IntPoly1> {
    let mut out = Vec::new();
    let mut f = f.primitive_part();
    // Strip the factor x, which trips up the modular stage only cosmetically.
    if f.coeff(0).is_zero() {
        out.push(IntPoly1::x());
        f = IntPoly1::new(f.coeffs()[1..].to_vec());
    }
    if f.deg() == 1 {
        out.push(f);
    } else if f.deg() > 1 {
        out.extend(zassenhaus(&f));
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn choose_prime(f: &IntPoly1) -> (u64, Vec<PolyMod>) {
    let lc = f.lead();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<PolyMod>)> = None;
    let mut tried = 0;
    let mut q = 3u64;
    while tried < 6 {
        if is_prime_u64(q) && !(lc.clone() % q).is_zero() {
            let fp = PolyMod::from_int(f, q);
            if fp.deg() == f.deg() && fp.is_square_free() {
                tried += 1;
                let fs = factor_square_free_mod_p(&fp, &mut rng);
                let better = best.as_ref().map_or(true, |(_, b)| fs.len() < b.len());
                if better {
                    best = Some((q, fs));
                }
                if best.as_ref().unwrap().1.len() == 1 {
                    break;
                }
            }
        }
        q += 2;
    }
    best.expect("some prime keeps the polynomial square-free")
}

fn zassenhaus(f: &IntPoly1) -> Vec<IntPoly1> {
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let n = f.deg();
    // Coefficients of any factor are bounded by 2^n ||f||_2 <= 2^n ||f||_1.
    let bound: BigInt = BigInt::from(2) * f.lead().abs() * (BigInt::one() << n) * f.l1_norm();
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while m <= bound {
        m = &m * &m;
    }
    let lifted = hensel_lift(f, &modular, p, &m);
    recombine(f, lifted, &m)
}

/// Lifts `f = lc(f) * prod(factors) mod p` to a factorization mod `m`,
/// where `m` is `p` raised to a power of two. Returned factors are monic.
fn hensel_lift(f: &IntPoly1, factors: &[PolyMod], p: u64, m: &BigInt) -> Vec<IntPoly1> {
    let pb = BigInt::from(p);
    if factors.len() == 1 {
        let inv = super::modp::mod_inverse(&f.lead(), m).expect("lead is a unit");
        return vec![zero_poly_mod(m, &f.scale(&inv))];
    }
    let k = factors.len() / 2;
    let (left, right) = factors.split_at(k);
    let lc_p = PolyMod::from_int(&IntPoly1::constant(f.lead()), p);
    let g0 = left.iter().fold(lc_p, |a, b| a.mul(b));
    let h0 = right.iter().fold(PolyMod::one(p), |a, b| a.mul(b));
    let (_, s0, t0) = g0.xgcd(&h0);
    let mut g = to_int(&g0);
    let mut h = to_int(&h0);
    let mut s = to_int(&s0);
    let mut t = to_int(&t0);
    let mut modulus = pb;
    while &modulus < m {
        modulus = &modulus * &modulus;
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &modulus);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
    }
    let mut out = hensel_lift(&g, left, p, m);
    out.extend(hensel_lift(&h, right, p, m));
    out
}

/// One quadratic Hensel step; inputs are valid modulo `sqrt(m)`, outputs modulo `m`.
fn hensel_step(
    f: &IntPoly1,
    g: &IntPoly1,
    h: &IntPoly1,
    s: &IntPoly1,
    t: &IntPoly1,
    m: &BigInt,
) -> (IntPoly1, IntPoly1, IntPoly1, IntPoly1) {
    let red = |x: &IntPoly1| zero_poly_mod(m, x);
    let e = red(&(f - &(g * h)));
    let (q, r) = divrem_mod(&(s * &e), h, m);
    let g1 = red(&(&(g + &(t * &e)) + &(&q * g)));
    let h1 = red(&(h + &r));
    let b = red(&(&(&(s * &g1) + &(t * &h1)) - &IntPoly1::one()));
    let (c, d) = divrem_mod(&(s * &b), &h1, m);
    let s1 = red(&(s - &d));
    let t1 = red(&(&(t - &(t * &b)) - &(&c * &g1)));
    (g1, h1, s1, t1)
}

fn symmetric_poly(f: &IntPoly1, m: &BigInt) -> IntPoly1 {
    IntPoly1::new(f.coeffs().iter().map(|c| symmetric_mod(c, m)).collect())
}

fn product_mod(fs: &[&IntPoly1], lc: &BigInt, m: &BigInt) -> IntPoly1 {
    let mut acc = IntPoly1::constant(lc.mod_floor(m));
    for f in fs {
        acc = zero_poly_mod(m, &(&acc * *f));
    }
    symmetric_poly(&acc, m)
}

fn recombine(f: &IntPoly1, mut lifted: Vec<IntPoly1>, m: &BigInt) -> Vec<IntPoly1> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let n = lifted.len();
        let mut found = None;
        for subset in combinations(n, k) {
            let lc = f.lead();
            let inside: Vec<&IntPoly1> = subset.iter().map(|&i| &lifted[i]).collect();
            let g = product_mod(&inside, &lc, m).primitive_part();
            if let Some(h) = f.div_exact(&g) {
                found = Some((subset, g, h));
                break;
            }
        }
        match found {
            Some((subset, g, h)) => {
                out.push(g);
                f = h.primitive_part();
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, x)| x)
                    .collect();
            }
            None => k += 1,
        }
    }
    out.push(f.primitive_part());
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly1 {
        IntPoly1::from_i64s(c)
    }

    #[test]
    fn x4_minus_1() {
        let f = factor_univariate(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.content, BigInt::one());
        let fs: Vec<_> = f.factors.iter().map(|(g, _)| g.clone()).collect();
        assert_eq!(fs, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
    }

    #[test]
    fn content_extracted() {
        let f = factor_univariate(&p(&[-6, 0, 6])).unwrap();
        assert_eq!(f.content, BigInt::from(6));
        assert_eq!(f.factors.len(), 2);
    }

    #[test]
    fn lehmer_is_irreducible() {
        assert!(is_irreducible(&p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1])));
    }

    #[test]
    fn non_monic_product() {
        let a = p(&[3, 0, 2]);
        let b = p(&[-1, 5, 0, 7]);
        let c = p(&[1, 1]);
        let prod = &(&a * &b) * &(&c * &c);
        let f = factor_univariate(&(-&prod)).unwrap();
        assert_eq!(f.expand(), -&prod);
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 3).len(), 1);
        assert_eq!(combinations(4, 1).len(), 4);
    }
}

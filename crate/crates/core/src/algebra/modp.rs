//! Polynomials over a prime field `F_p` with `p < 2^32`, and factorization
//! modulo `p` (distinct-degree followed by Cantor–Zassenhaus).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::poly1::IntPoly1;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Polynomial over `F_p`, coefficients in `[0, p)`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMod {
    pub p: u64,
    pub c: Vec<u64>,
}

impl PolyMod {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyMod { p, c }
    }

    pub fn from_int(f: &IntPoly1, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|a| a.mod_floor(&pb).to_u64().unwrap())
            .collect();
        Self::new(p, c)
    }

    pub fn zero(p: u64) -> Self {
        PolyMod { p, c: vec![] }
    }

    pub fn one(p: u64) -> Self {
        PolyMod { p, c: vec![1 % p] }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % pp;
            }
        }
        Self::new(p, v.into_iter().map(|x| x as u64).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mul_mod(a, k, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.p))
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.lead(), p);
        let mut r = self.c.clone();
        let dd = d.deg();
        let mut q = vec![0u64; self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mul_mod(r[k + dd], inv, p);
            q[k] = coef;
            if coef != 0 {
                for (j, &dc) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mul_mod(coef, dc, p)) % p;
                }
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = inv_mod(r0.lead(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| mul_mod(a, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn pow_mod_poly(&self, e: &BigUint, m: &Self) -> Self {
        let mut r = Self::one(self.p);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            r = r.mul(&r).rem(m);
            if e.bit(i) {
                r = r.mul(&base).rem(m);
            }
        }
        r
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &a in self.c.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + a) % self.p;
        }
        acc
    }

    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }
}

/// Factors a monic square-free polynomial over `F_p` (odd `p`) into monic irreducibles.
pub fn factor_square_free_mod_p(f: &PolyMod, rng: &mut ChaCha8Rng) -> Vec<PolyMod> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = PolyMod::x(p);
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod_poly(&pb, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            out.extend(equal_degree_split(&g, d, rng));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push(rest.monic());
    }
    out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
    out
}

fn equal_degree_split(f: &PolyMod, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyMod> {
    if f.deg() == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let e: BigUint = (num_traits::pow(BigUint::from(p), d) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = PolyMod::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = a.pow_mod_poly(&e, f).sub(&PolyMod::one(p));
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let q = f.divrem(&g).0;
            let mut v = equal_degree_split(&g, d, rng);
            v.extend(equal_degree_split(&q, d, rng));
            return v;
        }
    }
}

/// Symmetric residue of `a` modulo `m`, in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn zero_poly_mod(m: &BigInt, f: &IntPoly1) -> IntPoly1 {
    IntPoly1::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Division with remainder modulo `m` by a polynomial whose leading coefficient is a unit.
pub fn divrem_mod(a: &IntPoly1, d: &IntPoly1, m: &BigInt) -> (IntPoly1, IntPoly1) {
    let lc_inv = mod_inverse(&d.lead(), m).expect("leading coefficient must be a unit");
    let a = zero_poly_mod(m, a);
    if a.is_zero() || a.deg() < d.deg() {
        return (IntPoly1::zero(), a);
    }
    let dd = d.deg();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); a.deg() - dd + 1];
    for k in (0..q.len()).rev() {
        let coef = (&r[k + dd] * &lc_inv).mod_floor(m);
        if !coef.is_zero() {
            for (j, dc) in d.coeffs().iter().enumerate() {
                r[k + j] = (&r[k + j] - &coef * dc).mod_floor(m);
            }
        }
        q[k] = coef;
    }
    (IntPoly1::new(q), IntPoly1::new(r))
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

pub fn to_int(f: &PolyMod) -> IntPoly1 {
    IntPoly1::new(f.c.iter().map(|&a| BigInt::from(a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primes() {
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
        assert!(is_prime_u64(4_611_686_018_427_387_847));
    }

    #[test]
    fn factor_x4_minus_1_mod_5() {
        let f = PolyMod::from_int(&IntPoly1::from_i64s(&[-1, 0, 0, 0, 1]), 5);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = factor_square_free_mod_p(&f, &mut rng);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(PolyMod::one(5), |a, b| a.mul(b));
        assert_eq!(prod, f);
    }

    #[test]
    fn xgcd_identity() {
        let p = 7;
        let a = PolyMod::new(p, vec![1, 2, 1]);
        let b = PolyMod::new(p, vec![3, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}

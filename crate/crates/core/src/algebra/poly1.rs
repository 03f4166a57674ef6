use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial with integer coefficients, `coeffs[i]` multiplies `x^i`.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly1 {
    coeffs: Vec<BigInt>,
}

impl IntPoly1 {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly1 { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        IntPoly1 { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`; panics if the division is inexact.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `f(x^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// Reversed coefficient list, `x^deg f(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// Graeffe transform: the polynomial `g` with `g(x^2) = (-1)^n f(x) f(-x)`;
    /// its roots are the squares of the roots of `f`.
    pub fn graeffe(&self) -> Self {
        let n = self.deg();
        let prod = self * &self.reflect();
        let mut v: Vec<BigInt> = prod.coeffs.iter().step_by(2).cloned().collect();
        if n % 2 == 1 {
            v.iter_mut().for_each(|c| *c = -c.clone());
        }
        Self::new(v)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) a mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.deg();
        let lc = d.lead();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let rl = r.lead();
            r = &r.scale(&lc) - &(d * &Self::monomial(rl, shift));
        }
        r
    }

    /// Exact division over the integers; `None` when `d` does not divide `self` in Z[x].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        let lc = d.lead();
        let mut q = vec![BigInt::zero(); self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let (qc, rem) = r[k + dd].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            if !qc.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &qc * dc;
                }
            }
            q[k] = qc;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor in Z[x], primitive part times gcd of contents,
    /// positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Square-free decomposition (Yun): primitive pairwise-coprime factors `s_i`
    /// with `self = content * prod s_i^i` up to sign. Only nonconstant factors are returned.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly1, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.primitive_part();
        let mut g = f.gcd(&f.derivative()).primitive_part();
        let mut w = f.div_exact(&g).expect("gcd divides").primitive_part();
        let mut i = 1;
        while w.deg() > 0 {
            let y = w.gcd(&g).primitive_part();
            let z = w.div_exact(&y).expect("gcd divides").primitive_part();
            if z.deg() > 0 {
                out.push((z, i));
            }
            g = g.div_exact(&y).expect("gcd divides").primitive_part();
            w = y;
            i += 1;
        }
        out
    }

    /// Square-free part, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        let mut p = Self::one();
        for (f, _) in self.square_free_decomposition() {
            p = &p * &f;
        }
        p
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free_decomposition().iter().all(|(_, m)| *m == 1)
    }

    /// Deterministic ordering used for factor lists: by degree, then by the
    /// coefficient vector read from the leading term down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Renders the polynomial in the shared grammar using variable `var`.
    pub fn to_string_var(&self, var: &str) -> String {
        let terms: Vec<(BigInt, Vec<(String, usize)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), vec![(var.to_string(), i)]))
            .collect();
        render_terms(&terms)
    }
}

pub(crate) fn render_terms(terms: &[(BigInt, Vec<(String, usize)>)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (c, mons)) in terms.iter().enumerate() {
        let mono: Vec<String> = mons
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            s.push_str(&mono.join("*"));
        }
    }
    s
}

impl fmt::Display for IntPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl fmt::Debug for IntPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly1({self})")
    }
}

impl Add for &IntPoly1 {
    type Output = IntPoly1;
    fn add(self, rhs: &IntPoly1) -> IntPoly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly1::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly1 {
    type Output = IntPoly1;
    fn sub(self, rhs: &IntPoly1) -> IntPoly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly1::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly1 {
    type Output = IntPoly1;
    fn mul(self, rhs: &IntPoly1) -> IntPoly1 {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly1::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly1::new(v)
    }
}

impl Neg for &IntPoly1 {
    type Output = IntPoly1;
    fn neg(self) -> IntPoly1 {
        IntPoly1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl IntPoly1 {
    pub fn pow(&self, k: usize) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly1 {
        IntPoly1::from_i64s(c)
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p(&[6, 0, -6]);
        assert_eq!(f.content(), BigInt::from(6));
        assert_eq!(f.primitive_part(), p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_of_products() {
        let a = &p(&[-1, 1]) * &p(&[1, 0, 1]);
        let b = &p(&[-1, 1]) * &p(&[2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 0, 1]);
        let d = f.square_free_decomposition();
        assert_eq!(d, vec![(p(&[2, 0, 1]), 1), (p(&[-1, 1]), 3)]);
        assert_eq!(f.square_free_part(), &p(&[-1, 1]) * &p(&[2, 0, 1]));
    }

    #[test]
    fn graeffe_squares_roots() {
        // roots 2, -3 -> 4, 9
        let f = &p(&[-2, 1]) * &p(&[3, 1]);
        assert_eq!(f.graeffe(), &p(&[-4, 1]) * &p(&[-9, 1]));
    }

    #[test]
    fn exact_division() {
        let f = &p(&[1, 2]) * &p(&[3, 0, 5]);
        assert_eq!(f.div_exact(&p(&[1, 2])), Some(p(&[3, 0, 5])));
        assert_eq!(f.div_exact(&p(&[1, 3])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 0, 2]).to_string(), "2*x^3 - 3*x + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }
}
